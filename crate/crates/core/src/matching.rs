//! Maximum matching in general multigraphs (Edmonds' blossom algorithm) and
//! the perfect-matching predicates built on it.
//!
//! Matching runs on the simple support: at most one edge of a parallel
//! class can ever be used, and the lowest edge id is reported.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multigraph::{EdgeId, Multigraph, Vertex};

const NONE: usize = usize::MAX;

/// A set of pairwise vertex-disjoint edges of a host graph.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Matching {
    pub edge_ids: BTreeSet<EdgeId>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_ids.is_empty()
    }

    /// Checks the matching invariants against `g`.
    pub fn is_valid_in(&self, g: &Multigraph) -> bool {
        let mut used = vec![false; g.vertex_count()];
        for &e in &self.edge_ids {
            let Ok(edge) = g.edge(e) else { return false };
            if used[edge.u] || used[edge.v] {
                return false;
            }
            used[edge.u] = true;
            used[edge.v] = true;
        }
        true
    }
}

struct Blossom<'a> {
    adj: Vec<Vec<Vertex>>,
    removed: &'a [bool],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &Multigraph, removed: &'a [bool]) -> Self {
        let n = g.vertex_count();
        let adj = (0..n)
            .map(|v| {
                if removed[v] {
                    Vec::new()
                } else {
                    g.neighbors(v).filter(|&w| !removed[w]).collect()
                }
            })
            .collect();
        Blossom {
            adj,
            removed,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.mate.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.blossom[self.base[v]] = true;
            self.blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.mate.len();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for idx in 0..self.adj[v].len() {
                let to = self.adj[v][idx];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn run(mut self) -> Vec<usize> {
        let n = self.mate.len();
        for v in 0..n {
            if self.removed[v] || self.mate[v] != NONE {
                continue;
            }
            if let Some(&w) = self.adj[v].iter().find(|&&w| self.mate[w] == NONE) {
                self.mate[v] = w;
                self.mate[w] = v;
            }
        }
        for root in 0..n {
            if self.removed[root] || self.mate[root] != NONE {
                continue;
            }
            if let Some(mut v) = self.find_path(root) {
                while v != NONE {
                    let pv = self.parent[v];
                    let ppv = self.mate[pv];
                    self.mate[v] = pv;
                    self.mate[pv] = v;
                    v = ppv;
                }
            }
        }
        self.mate
    }
}

/// Mate array of a maximum matching of `g` minus the `removed` vertices.
pub(crate) fn mates_masked(g: &Multigraph, removed: &[bool]) -> Vec<Option<Vertex>> {
    Blossom::new(g, removed)
        .run()
        .into_iter()
        .map(|m| if m == NONE { None } else { Some(m) })
        .collect()
}

pub(crate) fn has_perfect_matching_masked(g: &Multigraph, removed: &[bool]) -> bool {
    let remaining = removed.iter().filter(|&&r| !r).count();
    if remaining % 2 == 1 {
        return false;
    }
    mates_masked(g, removed)
        .iter()
        .zip(removed)
        .all(|(m, &r)| r || m.is_some())
}

fn to_matching(g: &Multigraph, mates: &[Option<Vertex>]) -> Matching {
    let mut edge_ids = BTreeSet::new();
    for (v, m) in mates.iter().enumerate() {
        if let Some(w) = *m {
            if v < w {
                edge_ids.insert(g.representative(v, w).expect("matched pair is adjacent"));
            }
        }
    }
    Matching { edge_ids }
}

/// A maximum-cardinality matching; vertices are scanned in index order so
/// the result is reproducible.
pub fn maximum_matching(g: &Multigraph) -> Matching {
    let removed = vec![false; g.vertex_count()];
    to_matching(g, &mates_masked(g, &removed))
}

pub fn has_perfect_matching(g: &Multigraph) -> bool {
    has_perfect_matching_masked(g, &vec![false; g.vertex_count()])
}

/// Does `g - h` have a perfect matching?
pub fn is_nice_subgraph(g: &Multigraph, h: &[Vertex]) -> Result<bool> {
    let mut removed = vec![false; g.vertex_count()];
    for &v in h {
        if v >= g.vertex_count() {
            return Err(Error::BadVertexSet(format!("vertex {v} out of range")));
        }
        removed[v] = true;
    }
    Ok(has_perfect_matching_masked(g, &removed))
}

/// Is `e` contained in some perfect matching of `g`?
pub fn is_admissible_edge(g: &Multigraph, e: EdgeId) -> Result<bool> {
    let edge = g.edge(e)?;
    let mut removed = vec![false; g.vertex_count()];
    removed[edge.u] = true;
    removed[edge.v] = true;
    Ok(has_perfect_matching_masked(g, &removed))
}

/// Connected, has a perfect matching, and every edge is admissible.
pub fn is_matching_covered(g: &Multigraph) -> bool {
    if !g.is_connected() || !has_perfect_matching(g) {
        return false;
    }
    g.parallel_classes()
        .iter()
        .all(|c| is_admissible_edge(g, c.representative()).unwrap_or(false))
}
