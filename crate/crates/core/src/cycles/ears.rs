//! Ear decompositions of matching covered graphs starting from a nice
//! even cycle.
//!
//! Single edges between vertices already covered are always valid ears, so
//! they are added greedily; the search state is therefore just the covered
//! vertex set. Proper ears (odd paths of length >= 3 with new interiors) are
//! tried in order of (length, vertex sequence) with memoized dead ends.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::{nice_vertex_set, CycleSpec};
use crate::error::{Error, Result};
use crate::matching::is_matching_covered;
use crate::multigraph::{EdgeId, Multigraph, Vertex};

/// Default node budget of the ear search.
pub const DEFAULT_EAR_BUDGET: usize = 100_000;

/// An odd path, given by its vertex sequence and the edges between
/// consecutive vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ear {
    pub vertices: Vec<Vertex>,
    pub edge_ids: Vec<EdgeId>,
}

impl Ear {
    pub fn len(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_ids.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EarDecomposition {
    pub initial: CycleSpec,
    pub ears: Vec<Ear>,
}

impl EarDecomposition {
    /// Checks the structural invariants against `g`: odd ears, ends in the
    /// prefix, new interiors, and an exact edge cover.
    pub fn validate(&self, g: &Multigraph) -> Result<()> {
        self.initial.validate(g)?;
        let mut covered = vec![false; g.vertex_count()];
        let mut used = vec![false; g.edge_count()];
        for (&v, &e) in self.initial.vertices.iter().zip(&self.initial.edge_ids) {
            covered[v] = true;
            used[e] = true;
        }
        for (i, ear) in self.ears.iter().enumerate() {
            let bad = |msg: &str| Error::Internal(format!("ear {i}: {msg}"));
            let k = ear.edge_ids.len();
            if k % 2 == 0 || ear.vertices.len() != k + 1 {
                return Err(bad("not an odd path"));
            }
            let (a, b) = (ear.vertices[0], ear.vertices[k]);
            if a == b || !covered[a] || !covered[b] {
                return Err(bad("ends not in the prefix"));
            }
            for &x in &ear.vertices[1..k] {
                if covered[x] {
                    return Err(bad("interior vertex not new"));
                }
                covered[x] = true;
            }
            for j in 0..k {
                let e = g.edge(ear.edge_ids[j])?;
                let (x, y) = (ear.vertices[j], ear.vertices[j + 1]);
                if e.key() != (x.min(y), x.max(y)) || used[ear.edge_ids[j]] {
                    return Err(bad("edge mismatch or reuse"));
                }
                used[ear.edge_ids[j]] = true;
            }
        }
        if covered.iter().all(|&c| c) && used.iter().all(|&u| u) {
            Ok(())
        } else {
            Err(Error::Internal("ears do not cover the graph".into()))
        }
    }
}

struct Search<'a> {
    g: &'a Multigraph,
    budget: usize,
    nodes: usize,
    covered: Vec<bool>,
    used: Vec<bool>,
    ears: Vec<Ear>,
    dead: HashSet<Vec<bool>>,
}

impl Search<'_> {
    /// Adds every unused edge inside the covered set as a single-edge ear;
    /// returns how many were added so they can be undone.
    fn add_chords(&mut self) -> usize {
        let mut added = 0;
        for (id, e) in self.g.edges().iter().enumerate() {
            if !self.used[id] && self.covered[e.u] && self.covered[e.v] {
                self.used[id] = true;
                let (a, b) = (e.u.min(e.v), e.u.max(e.v));
                self.ears.push(Ear {
                    vertices: vec![a, b],
                    edge_ids: vec![id],
                });
                added += 1;
            }
        }
        added
    }

    fn undo_chords(&mut self, count: usize) {
        for _ in 0..count {
            let ear = self.ears.pop().unwrap();
            self.used[ear.edge_ids[0]] = false;
        }
    }

    fn run(&mut self) -> Result<bool> {
        let remaining = self.covered.iter().filter(|&&c| !c).count();
        if remaining == 0 {
            return Ok(true);
        }
        if remaining % 2 == 1 || self.dead.contains(&self.covered) {
            return Ok(false);
        }
        let mut len = 3;
        while len <= remaining + 1 {
            for path in self.paths_of_length(len) {
                self.nodes += 1;
                if self.nodes > self.budget {
                    return Err(Error::BudgetExceeded(self.budget));
                }
                let edge_ids: Vec<EdgeId> = path
                    .windows(2)
                    .map(|w| self.g.representative(w[0], w[1]).unwrap())
                    .collect();
                for &x in &path[1..len] {
                    self.covered[x] = true;
                }
                for &e in &edge_ids {
                    self.used[e] = true;
                }
                self.ears.push(Ear {
                    vertices: path.clone(),
                    edge_ids: edge_ids.clone(),
                });
                let chords = self.add_chords();
                if self.run()? {
                    return Ok(true);
                }
                self.undo_chords(chords);
                self.ears.pop();
                for &e in &edge_ids {
                    self.used[e] = false;
                }
                for &x in &path[1..len] {
                    self.covered[x] = false;
                }
            }
            len += 2;
        }
        self.dead.insert(self.covered.clone());
        Ok(false)
    }

    /// Paths with `len` edges, both ends covered, interior uncovered,
    /// reported with first end < last end, in lexicographic order.
    fn paths_of_length(&self, len: usize) -> Vec<Vec<Vertex>> {
        let mut out = Vec::new();
        let mut path = Vec::with_capacity(len + 1);
        let mut on_path = vec![false; self.g.vertex_count()];
        for s in self.g.vertices().filter(|&s| self.covered[s]) {
            path.push(s);
            self.extend(len, &mut path, &mut on_path, &mut out);
            path.pop();
        }
        out
    }

    fn extend(
        &self,
        len: usize,
        path: &mut Vec<Vertex>,
        on_path: &mut [bool],
        out: &mut Vec<Vec<Vertex>>,
    ) {
        let x = *path.last().unwrap();
        let steps = path.len() - 1;
        for y in self.g.neighbors(x) {
            if steps + 1 == len {
                if self.covered[y] && y > path[0] {
                    let mut p = path.clone();
                    p.push(y);
                    out.push(p);
                }
            } else if !self.covered[y] && !on_path[y] {
                on_path[y] = true;
                path.push(y);
                self.extend(len, path, on_path, out);
                path.pop();
                on_path[y] = false;
            }
        }
    }
}

/// Builds an ear decomposition of `g` starting from `initial`.
///
/// Requires `g` to be matching covered and `initial` to be a nice even
/// cycle. The search is complete, so `BudgetExceeded` means "gave up", not
/// "does not exist".
pub fn ear_decomposition(
    g: &Multigraph,
    initial: &CycleSpec,
    budget: usize,
) -> Result<EarDecomposition> {
    initial
        .validate(g)
        .map_err(|e| Error::PreconditionFailed(format!("initial cycle: {e}")))?;
    if !is_matching_covered(g) {
        return Err(Error::PreconditionFailed(
            "graph is not matching covered".into(),
        ));
    }
    if !initial.is_even() || !nice_vertex_set(g, &initial.vertices) {
        return Err(Error::PreconditionFailed(
            "initial cycle is not a nice even cycle".into(),
        ));
    }
    let mut search = Search {
        g,
        budget,
        nodes: 0,
        covered: vec![false; g.vertex_count()],
        used: vec![false; g.edge_count()],
        ears: Vec::new(),
        dead: HashSet::new(),
    };
    for (&v, &e) in initial.vertices.iter().zip(&initial.edge_ids) {
        search.covered[v] = true;
        search.used[e] = true;
    }
    search.add_chords();
    if search.run()? {
        Ok(EarDecomposition {
            initial: initial.clone(),
            ears: search.ears,
        })
    } else {
        Err(Error::Internal(
            "no ear decomposition found for a matching covered graph".into(),
        ))
    }
}
