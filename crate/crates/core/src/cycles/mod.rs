//! Even cycles, the brute-force cycle-nice oracle, and ear decompositions.

mod ears;

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matching::has_perfect_matching_masked;
use crate::multigraph::{EdgeId, Multigraph, Vertex};

pub use ears::{ear_decomposition, Ear, EarDecomposition, DEFAULT_EAR_BUDGET};

/// Default limit on the number of even cycles the oracle will examine.
pub const DEFAULT_CYCLE_CAP: usize = 1_000_000;

/// A cycle given as a closed vertex sequence; `edge_ids[i]` joins
/// `vertices[i]` and `vertices[(i + 1) % len]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CycleSpec {
    pub vertices: Vec<Vertex>,
    pub edge_ids: Vec<EdgeId>,
}

impl CycleSpec {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_even(&self) -> bool {
        self.len().is_multiple_of(2)
    }

    /// Builds a cycle from a vertex sequence using the lowest-id edge for
    /// each step; a two-vertex sequence takes the two lowest parallel edges.
    pub fn from_vertices(g: &Multigraph, vertices: &[Vertex]) -> Result<Self> {
        let k = vertices.len();
        if k < 2 {
            return Err(Error::NotACycle("fewer than two vertices".into()));
        }
        if let Some(&v) = vertices.iter().find(|&&v| v >= g.vertex_count()) {
            return Err(Error::NoSuchVertex(v));
        }
        let edge_ids = if k == 2 {
            let ids = g.edges_between(vertices[0], vertices[1]);
            if ids.len() < 2 {
                return Err(Error::NotACycle(format!(
                    "{}-{} is not a multiple edge",
                    vertices[0], vertices[1]
                )));
            }
            vec![ids[0], ids[1]]
        } else {
            (0..k)
                .map(|i| {
                    let (a, b) = (vertices[i], vertices[(i + 1) % k]);
                    g.representative(a, b)
                        .ok_or_else(|| Error::NotACycle(format!("{a} and {b} are not adjacent")))
                })
                .collect::<Result<_>>()?
        };
        let c = CycleSpec {
            vertices: vertices.to_vec(),
            edge_ids,
        };
        c.validate(g)?;
        Ok(c)
    }

    /// Checks that this is a genuine cycle of `g`.
    pub fn validate(&self, g: &Multigraph) -> Result<()> {
        let k = self.vertices.len();
        if k < 2 || self.edge_ids.len() != k {
            return Err(Error::NotACycle(
                "length mismatch or shorter than two".into(),
            ));
        }
        let mut seen = vec![false; g.vertex_count()];
        for &v in &self.vertices {
            if v >= g.vertex_count() {
                return Err(Error::NoSuchVertex(v));
            }
            if seen[v] {
                return Err(Error::NotACycle(format!("vertex {v} repeated")));
            }
            seen[v] = true;
        }
        for i in 0..k {
            let e = g.edge(self.edge_ids[i])?;
            let (a, b) = (self.vertices[i], self.vertices[(i + 1) % k]);
            if e.key() != (a.min(b), a.max(b)) {
                return Err(Error::NotACycle(format!(
                    "edge {} does not join {a} and {b}",
                    self.edge_ids[i]
                )));
            }
        }
        let mut ids = self.edge_ids.clone();
        ids.sort_unstable();
        ids.dedup();
        if ids.len() != k {
            return Err(Error::NotACycle("edge repeated".into()));
        }
        Ok(())
    }

    /// Rotates to start at the smallest vertex and, for length >= 3, orients
    /// so that the second vertex is smaller than the last.
    pub fn normalized(&self) -> CycleSpec {
        let k = self.vertices.len();
        if k == 0 {
            return self.clone();
        }
        let start = (0..k).min_by_key(|&i| self.vertices[i]).unwrap();
        let forward = k < 3 || self.vertices[(start + 1) % k] < self.vertices[(start + k - 1) % k];
        let mut vertices = Vec::with_capacity(k);
        let mut edge_ids = Vec::with_capacity(k);
        for step in 0..k {
            if forward {
                vertices.push(self.vertices[(start + step) % k]);
                edge_ids.push(self.edge_ids[(start + step) % k]);
            } else {
                vertices.push(self.vertices[(start + k - step) % k]);
                // edge from position p-1 to p, walking backwards
                edge_ids.push(self.edge_ids[(start + 2 * k - step - 1) % k]);
            }
        }
        if k == 2 && edge_ids[0] > edge_ids[1] {
            edge_ids.swap(0, 1);
        }
        CycleSpec { vertices, edge_ids }
    }

    /// Witness order: length first, then the vertex sequence.
    pub fn witness_cmp(&self, other: &CycleSpec) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.vertices.cmp(&other.vertices))
    }
}

/// Outcome of the brute-force oracle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum OracleVerdict {
    CycleNice,
    Witness(CycleSpec),
    NotMatchable,
}

impl OracleVerdict {
    pub fn class(&self) -> &'static str {
        match self {
            OracleVerdict::CycleNice => "CycleNice",
            OracleVerdict::Witness(_) => "Witness",
            OracleVerdict::NotMatchable => "NotMatchable",
        }
    }
}

/// All even cycles of `g`, normalized and sorted in witness order.
///
/// Cycles of length >= 3 come from a simple-cycle search on the simple
/// support (one representative per support cycle, lowest edge ids); each
/// parallel class of multiplicity >= 2 adds one 2-cycle.
pub fn enumerate_even_cycles(g: &Multigraph, cap: usize) -> Result<Vec<CycleSpec>> {
    let mut out = Vec::new();
    for class in g.parallel_classes() {
        if class.multiplicity() >= 2 {
            out.push(CycleSpec {
                vertices: vec![class.endpoints.0, class.endpoints.1],
                edge_ids: vec![class.edge_ids[0], class.edge_ids[1]],
            });
            if out.len() > cap {
                return Err(Error::CapExceeded(cap));
            }
        }
    }
    let n = g.vertex_count();
    let adj: Vec<Vec<Vertex>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut on_path = vec![false; n];
    for s in 0..n {
        let mut path = vec![s];
        on_path[s] = true;
        extend_paths(g, &adj, s, &mut path, &mut on_path, &mut out, cap)?;
        on_path[s] = false;
    }
    out.sort_by(|a, b| a.witness_cmp(b));
    Ok(out)
}

// Depth-first search for cycles whose smallest vertex is `s`; each cycle is
// reported once, in the direction where the second vertex is smaller than
// the last.
fn extend_paths(
    g: &Multigraph,
    adj: &[Vec<Vertex>],
    s: Vertex,
    path: &mut Vec<Vertex>,
    on_path: &mut [bool],
    out: &mut Vec<CycleSpec>,
    cap: usize,
) -> Result<()> {
    let x = *path.last().unwrap();
    for &y in &adj[x] {
        if y == s {
            if path.len() >= 3 && path.len().is_multiple_of(2) && path[1] < x {
                let k = path.len();
                let edge_ids = (0..k)
                    .map(|i| g.representative(path[i], path[(i + 1) % k]).unwrap())
                    .collect();
                out.push(CycleSpec {
                    vertices: path.clone(),
                    edge_ids,
                });
                if out.len() > cap {
                    return Err(Error::CapExceeded(cap));
                }
            }
        } else if y > s && !on_path[y] {
            path.push(y);
            on_path[y] = true;
            extend_paths(g, adj, s, path, on_path, out, cap)?;
            on_path[y] = false;
            path.pop();
        }
    }
    Ok(())
}

/// An even cycle of `g - blocked` through both `a` and `b`, if one exists.
///
/// `cap` bounds the number of search steps.
pub fn even_cycle_through(
    g: &Multigraph,
    a: Vertex,
    b: Vertex,
    blocked: &[Vertex],
    cap: usize,
) -> Result<Option<CycleSpec>> {
    let n = g.vertex_count();
    for v in [a, b] {
        if v >= n {
            return Err(Error::NoSuchVertex(v));
        }
    }
    if a == b || blocked.contains(&a) || blocked.contains(&b) {
        return Ok(None);
    }
    if g.multiplicity(a, b) >= 2 {
        return CycleSpec::from_vertices(g, &[a, b]).map(Some);
    }
    let adj: Vec<Vec<Vertex>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut on_path = vec![false; n];
    for &v in blocked {
        if v < n {
            on_path[v] = true;
        }
    }
    on_path[a] = true;
    let mut path = vec![a];
    let mut steps = 0;
    let found = through_search(&adj, a, b, &mut path, &mut on_path, &mut steps, cap)?;
    found.map(|p| CycleSpec::from_vertices(g, &p)).transpose()
}

fn through_search(
    adj: &[Vec<Vertex>],
    a: Vertex,
    b: Vertex,
    path: &mut Vec<Vertex>,
    on_path: &mut [bool],
    steps: &mut usize,
    cap: usize,
) -> Result<Option<Vec<Vertex>>> {
    *steps += 1;
    if *steps > cap {
        return Err(Error::CapExceeded(cap));
    }
    let x = *path.last().unwrap();
    let seen_b = on_path[b];
    for &y in &adj[x] {
        if y == a {
            if seen_b && path.len() >= 3 && path.len().is_multiple_of(2) {
                return Ok(Some(path.clone()));
            }
        } else if !on_path[y] {
            path.push(y);
            on_path[y] = true;
            let r = through_search(adj, a, b, path, on_path, steps, cap)?;
            on_path[y] = false;
            path.pop();
            if r.is_some() {
                return Ok(r);
            }
        }
    }
    Ok(None)
}

/// Does `g - V(c)` have a perfect matching?
pub fn is_nice_cycle(g: &Multigraph, c: &CycleSpec) -> Result<bool> {
    c.validate(g)?;
    Ok(nice_vertex_set(g, &c.vertices))
}

pub(crate) fn nice_vertex_set(g: &Multigraph, vertices: &[Vertex]) -> bool {
    let mut removed = vec![false; g.vertex_count()];
    for &v in vertices {
        removed[v] = true;
    }
    has_perfect_matching_masked(g, &removed)
}

/// Decides cycle-niceness by checking every even cycle. The witness is the
/// first failing cycle in witness order.
pub fn cycle_nice_oracle(g: &Multigraph, cap: usize) -> Result<OracleVerdict> {
    if !crate::matching::has_perfect_matching(g) {
        return Ok(OracleVerdict::NotMatchable);
    }
    let cycles = enumerate_even_cycles(g, cap)?;
    for c in cycles {
        if !nice_vertex_set(g, &c.vertices) {
            return Ok(OracleVerdict::Witness(c));
        }
    }
    Ok(OracleVerdict::CycleNice)
}
