//! The three construction operations (even subdivision, odd expansion,
//! multiple-edge replacement), their inverses, and certificate replay.
//!
//! Every operation only appends: existing vertex indices and edge ids keep
//! their meaning, which is what lets a certificate refer to elements of
//! the graph built so far.
//!
//! * `EvenSubdivision { edge, path_len }`: the edge `(u, v)` (stored
//!   orientation) becomes `(u, n)`; the path continues through the new
//!   vertices `n, n+1, …, n+path_len-2` and the appended edges end at `v`.
//! * odd expansion at `vertex`: `vertex` plays `v'` and keeps the `side_a`
//!   edges; `v'' = n` receives the `side_b` edges; the interior of the even
//!   path is `n+1, …, n+path_len-1`, ordered from `v'` to `v''`. Path
//!   edges are appended from `v'` to `v''`, then the bridge edges.
//! * `MultiEdgeReplace { edge, multiplicity }`: appends copies until the
//!   class of `edge` has exactly `multiplicity` edges.

use serde::{Deserialize, Serialize};

use crate::cycles::{even_cycle_through, DEFAULT_CYCLE_CAP};
use crate::error::{Error, Result};
use crate::matching::is_admissible_edge;
use crate::multigraph::{Edge, EdgeId, Multigraph, Vertex};
use crate::predicates::BaseTag;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConstructionStep {
    EvenSubdivision {
        edge: EdgeId,
        path_len: usize,
    },
    /// `side_a` / `side_b` list the edge ids at `vertex` going to `v'` and
    /// `v''` respectively.
    OddLExpansion {
        vertex: Vertex,
        side_a: Vec<EdgeId>,
        side_b: Vec<EdgeId>,
        path_len: usize,
    },
    OddAExpansion {
        vertex: Vertex,
        side_a: Vec<EdgeId>,
        side_b: Vec<EdgeId>,
        path_len: usize,
        bridge_mult: usize,
    },
    MultiEdgeReplace {
        edge: EdgeId,
        multiplicity: usize,
    },
}

impl ConstructionStep {
    pub fn kind(&self) -> &'static str {
        match self {
            ConstructionStep::EvenSubdivision { .. } => "EvenSubdivision",
            ConstructionStep::OddLExpansion { .. } => "OddLExpansion",
            ConstructionStep::OddAExpansion { .. } => "OddAExpansion",
            ConstructionStep::MultiEdgeReplace { .. } => "MultiEdgeReplace",
        }
    }
}

/// A base graph plus the steps that rebuild a graph from it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionSequence {
    pub base: BaseTag,
    pub steps: Vec<ConstructionStep>,
}

impl ConstructionSequence {
    pub fn new(base: BaseTag) -> Self {
        ConstructionSequence {
            base,
            steps: Vec::new(),
        }
    }

    pub fn replay(&self) -> Result<Multigraph> {
        replay(self)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Whether preconditions that are not needed for well-formedness
/// (parities, admissibility) are enforced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Validated,
    Raw,
}

pub fn apply_even_subdivision(g: &Multigraph, e: EdgeId, path_len: usize) -> Result<Multigraph> {
    subdivide(g, e, path_len, Mode::Validated)
}

fn subdivide(g: &Multigraph, e: EdgeId, path_len: usize, mode: Mode) -> Result<Multigraph> {
    let edge = *g.edge(e)?;
    if mode == Mode::Validated && (path_len < 3 || path_len.is_multiple_of(2)) {
        return Err(Error::BadParity {
            len: path_len,
            expected: "odd and at least 3",
        });
    }
    if path_len < 2 {
        return Err(Error::BadParity {
            len: path_len,
            expected: "at least 2",
        });
    }
    let n = g.vertex_count();
    let mut edges = g.edges().to_vec();
    edges[e] = Edge::new(edge.u, n);
    for i in 0..path_len - 2 {
        edges.push(Edge::new(n + i, n + i + 1));
    }
    edges.push(Edge::new(n + path_len - 2, edge.v));
    Multigraph::from_edges(n + path_len - 1, edges)
}

/// Applies an `OddLExpansion` or `OddAExpansion` step.
pub fn apply_odd_expansion(g: &Multigraph, step: &ConstructionStep) -> Result<Multigraph> {
    apply_step_with(g, step, Mode::Validated)
}

fn expand(
    g: &Multigraph,
    vertex: Vertex,
    side_a: &[EdgeId],
    side_b: &[EdgeId],
    path_len: usize,
    bridge_mult: usize,
    mode: Mode,
) -> Result<Multigraph> {
    if vertex >= g.vertex_count() {
        return Err(Error::NoSuchVertex(vertex));
    }
    if side_a.is_empty() || side_b.is_empty() {
        return Err(Error::EmptySide);
    }
    if mode == Mode::Validated && (path_len < 2 || path_len % 2 == 1) {
        return Err(Error::BadParity {
            len: path_len,
            expected: "even and at least 2",
        });
    }
    if path_len < 1 {
        return Err(Error::BadParity {
            len: path_len,
            expected: "at least 1",
        });
    }
    let mut incident: Vec<EdgeId> = g.incident(vertex).iter().map(|&(_, e)| e).collect();
    incident.sort_unstable();
    let mut given: Vec<EdgeId> = side_a.iter().chain(side_b).copied().collect();
    given.sort_unstable();
    if given != incident {
        return Err(Error::BadSides(vertex));
    }
    let n = g.vertex_count();
    let v2 = n;
    let mut edges = g.edges().to_vec();
    for &e in side_b {
        let old = edges[e];
        edges[e] = Edge::new(old.other(vertex), v2);
    }
    // v' = vertex, interior n+1 .. n+path_len-1, v'' = n
    let mut prev = vertex;
    for i in 1..path_len {
        edges.push(Edge::new(prev, n + i));
        prev = n + i;
    }
    edges.push(Edge::new(prev, v2));
    for _ in 0..bridge_mult {
        edges.push(Edge::new(vertex, v2));
    }
    let h = Multigraph::from_edges(n + path_len, edges)?;
    if mode == Mode::Validated {
        // Such a cycle strands the odd interior of the new path.
        let interior: Vec<Vertex> = (n + 1..n + path_len).collect();
        if let Some(c) = even_cycle_through(&h, vertex, v2, &interior, DEFAULT_CYCLE_CAP)? {
            return Err(Error::SplitCycle(c.vertices));
        }
    }
    Ok(h)
}

pub fn apply_multiedge_replace(
    g: &Multigraph,
    e: EdgeId,
    multiplicity: usize,
) -> Result<Multigraph> {
    multiedge(g, e, multiplicity, Mode::Validated)
}

fn multiedge(g: &Multigraph, e: EdgeId, multiplicity: usize, mode: Mode) -> Result<Multigraph> {
    let edge = *g.edge(e)?;
    let current = g.multiplicity(edge.u, edge.v);
    if multiplicity < 2 || multiplicity < current {
        return Err(Error::BadMultiplicity {
            requested: multiplicity,
            current,
        });
    }
    if mode == Mode::Validated && !is_admissible_edge(g, e)? {
        return Err(Error::NotAdmissible(e));
    }
    let mut edges = g.edges().to_vec();
    for _ in current..multiplicity {
        edges.push(Edge::new(edge.u, edge.v));
    }
    Multigraph::from_edges(g.vertex_count(), edges)
}

pub fn apply_step(g: &Multigraph, step: &ConstructionStep) -> Result<Multigraph> {
    apply_step_with(g, step, Mode::Validated)
}

/// Applies a step; `Mode::Raw` skips the parity, admissibility and
/// split-cycle checks.
pub fn apply_step_with(g: &Multigraph, step: &ConstructionStep, mode: Mode) -> Result<Multigraph> {
    match step {
        ConstructionStep::EvenSubdivision { edge, path_len } => {
            subdivide(g, *edge, *path_len, mode)
        }
        ConstructionStep::OddLExpansion {
            vertex,
            side_a,
            side_b,
            path_len,
        } => expand(g, *vertex, side_a, side_b, *path_len, 0, mode),
        ConstructionStep::OddAExpansion {
            vertex,
            side_a,
            side_b,
            path_len,
            bridge_mult,
        } => {
            if mode == Mode::Validated && *bridge_mult == 0 {
                return Err(Error::BadMultiplicity {
                    requested: 0,
                    current: 0,
                });
            }
            expand(g, *vertex, side_a, side_b, *path_len, *bridge_mult, mode)
        }
        ConstructionStep::MultiEdgeReplace { edge, multiplicity } => {
            multiedge(g, *edge, *multiplicity, mode)
        }
    }
}

pub fn base_graph(tag: BaseTag) -> Result<Multigraph> {
    if !tag.is_construction_base() {
        return Err(Error::BadBase(tag.to_string()));
    }
    Ok(tag
        .graph()
        .expect("construction bases have a representative"))
}

/// Rebuilds the graph described by `seq`, validating every step.
pub fn replay(seq: &ConstructionSequence) -> Result<Multigraph> {
    replay_with(seq, Mode::Validated)
}

pub fn replay_with(seq: &ConstructionSequence, mode: Mode) -> Result<Multigraph> {
    let mut g = base_graph(seq.base)?;
    for (index, step) in seq.steps.iter().enumerate() {
        g = apply_step_with(&g, step, mode).map_err(|source| Error::Step {
            index,
            source: Box::new(source),
        })?;
    }
    Ok(g)
}

/// Inverse of an even subdivision: `path` is a vertex sequence whose
/// interior vertices have degree two; the interior is deleted and the ends
/// are joined by one edge (appended last). Remaining vertices keep their
/// relative order.
pub fn suppress_path(g: &Multigraph, path: &[Vertex]) -> Result<Multigraph> {
    let k = path.len();
    if k < 3 {
        return Err(Error::BadParity {
            len: k.saturating_sub(1),
            expected: "at least 2",
        });
    }
    for w in path.windows(2) {
        if !g.has_edge(w[0], w[1]) {
            return Err(Error::PreconditionFailed(format!(
                "{} and {} are not adjacent",
                w[0], w[1]
            )));
        }
    }
    let (a, b) = (path[0], path[k - 1]);
    for &x in &path[1..k - 1] {
        if g.degree(x) != 2 || x == a || x == b {
            return Err(Error::PreconditionFailed(format!(
                "vertex {x} is not an interior 2-vertex"
            )));
        }
    }
    let d = g.delete_vertices(&path[1..k - 1])?;
    let mut edges = d.graph.edges().to_vec();
    edges.push(Edge::new(
        d.vertex_map[a].unwrap(),
        d.vertex_map[b].unwrap(),
    ));
    Multigraph::from_edges(d.graph.vertex_count(), edges)
}

/// Inverse of a multiple-edge replacement: keeps only the lowest-id edge of
/// the class of `e`.
pub fn collapse_class(g: &Multigraph, e: EdgeId) -> Result<Multigraph> {
    let class = g.class_of(e)?;
    let edges = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(id, _)| !class.edge_ids[1..].contains(id))
        .map(|(_, e)| *e)
        .collect();
    Multigraph::from_edges(g.vertex_count(), edges)
}
