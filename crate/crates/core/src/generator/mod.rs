//! Seeded random construction sequences and the small-graph atlas.
//!
//! Randomness comes from ChaCha8 (`rand_chacha`), seeded with
//! `seed_from_u64`; instance `i` of a corpus uses stream `i` of that
//! generator, so corpora are reproducible across platforms.

mod atlas;

use rand::distributions::{Distribution, WeightedIndex};
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::multigraph::{EdgeId, Multigraph};
use crate::operations::{apply_step, base_graph, ConstructionSequence, ConstructionStep};
use crate::predicates::{is_claw_free, is_planar, BaseTag};

pub use atlas::{atlas, connected_graphs, AtlasEntry, AtlasReport, OrderCounts};

/// Proposals tried per step before giving up.
pub const MAX_PROPOSALS: usize = 1000;

/// Bases drawn when no base is configured.
pub const RANDOM_BASES: [BaseTag; 6] = [
    BaseTag::EvenCycle { length: 4 },
    BaseTag::EvenCycle { length: 6 },
    BaseTag::EvenCycle { length: 8 },
    BaseTag::Diamond,
    BaseTag::K4,
    BaseTag::C6bar,
];

#[derive(Debug, Clone, PartialEq)]
pub struct GenConfig {
    /// `None` draws one of [`RANDOM_BASES`].
    pub base: Option<BaseTag>,
    pub n_ops: usize,
    pub seed: u64,
    pub max_path_len: usize,
    pub require_claw_free_planar: bool,
    /// Weights of even subdivision, odd L-expansion and multiple edges.
    pub op_weights: [f64; 3],
    /// Proposals that would exceed this order are rejected.
    pub max_vertices: Option<usize>,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            base: None,
            n_ops: 4,
            seed: 0,
            max_path_len: 5,
            require_claw_free_planar: true,
            op_weights: [1.0, 1.0, 1.0],
            max_vertices: None,
        }
    }
}

impl GenConfig {
    pub fn validate(&self) -> Result<()> {
        if let Some(b) = self.base {
            if !b.is_construction_base() {
                return Err(Error::InvalidConfig(format!(
                    "{b} is not a construction base"
                )));
            }
        }
        if self.op_weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err(Error::InvalidConfig(
                "weights must be finite and nonnegative".into(),
            ));
        }
        if self.n_ops > 0 && self.op_weights.iter().all(|&w| w == 0.0) {
            return Err(Error::InvalidConfig(
                "all operation weights are zero".into(),
            ));
        }
        if self.max_path_len < 3 {
            return Err(Error::InvalidConfig(
                "max_path_len must be at least 3".into(),
            ));
        }
        Ok(())
    }
}

/// Generates one instance from stream 0 of the seeded generator.
pub fn generate(cfg: &GenConfig) -> Result<(Multigraph, ConstructionSequence)> {
    generate_instance(cfg, 0)
}

/// Instance `index` of the corpus defined by `cfg`.
pub fn generate_instance(
    cfg: &GenConfig,
    index: u64,
) -> Result<(Multigraph, ConstructionSequence)> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(index);
    generate_with(cfg, &mut rng)
}

pub fn generate_with<R: Rng>(
    cfg: &GenConfig,
    rng: &mut R,
) -> Result<(Multigraph, ConstructionSequence)> {
    cfg.validate()?;
    let base = match cfg.base {
        Some(b) => b,
        None => *RANDOM_BASES.choose(rng).unwrap(),
    };
    let mut g = base_graph(base)?;
    let mut seq = ConstructionSequence::new(base);
    if cfg.n_ops == 0 {
        return Ok((g, seq));
    }
    let kinds =
        WeightedIndex::new(cfg.op_weights).map_err(|e| Error::InvalidConfig(e.to_string()))?;
    for _ in 0..cfg.n_ops {
        let mut done = false;
        for _ in 0..MAX_PROPOSALS {
            let Some(step) = propose(&g, kinds.sample(rng), cfg.max_path_len, rng) else {
                continue;
            };
            let Ok(next) = apply_step(&g, &step) else {
                continue;
            };
            if cfg.max_vertices.is_some_and(|m| next.vertex_count() > m) {
                continue;
            }
            if cfg.require_claw_free_planar && !(is_claw_free(&next) && is_planar(&next)) {
                continue;
            }
            g = next;
            seq.steps.push(step);
            done = true;
            break;
        }
        if !done {
            return Err(Error::Stuck(MAX_PROPOSALS));
        }
    }
    Ok((g, seq))
}

fn propose<R: Rng>(
    g: &Multigraph,
    kind: usize,
    max_len: usize,
    rng: &mut R,
) -> Option<ConstructionStep> {
    match kind {
        0 => {
            let edge = rng.gen_range(0..g.edge_count());
            let path_len = *odd_lengths(max_len).choose(rng)?;
            Some(ConstructionStep::EvenSubdivision { edge, path_len })
        }
        1 => {
            let vertex = rng.gen_range(0..g.vertex_count());
            let incident: Vec<EdgeId> = g.incident(vertex).iter().map(|&(_, e)| e).collect();
            if incident.len() < 2 {
                return None;
            }
            let (mut side_a, mut side_b) = (Vec::new(), Vec::new());
            for e in incident {
                if rng.gen_bool(0.5) {
                    side_a.push(e);
                } else {
                    side_b.push(e);
                }
            }
            if side_a.is_empty() || side_b.is_empty() {
                return None;
            }
            let path_len = *even_lengths(max_len).choose(rng)?;
            Some(ConstructionStep::OddLExpansion {
                vertex,
                side_a,
                side_b,
                path_len,
            })
        }
        _ => {
            let edge = rng.gen_range(0..g.edge_count());
            let e = g.edges()[edge];
            Some(ConstructionStep::MultiEdgeReplace {
                edge,
                multiplicity: g.multiplicity(e.u, e.v) + 1,
            })
        }
    }
}

fn odd_lengths(max: usize) -> Vec<usize> {
    (3..=max).step_by(2).collect()
}

fn even_lengths(max: usize) -> Vec<usize> {
    (2..=max).step_by(2).collect()
}
