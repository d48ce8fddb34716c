//! Loopless multigraph kernel.
//!
//! A [`Multigraph`] is an immutable incidence structure on vertices `0..n`
//! with dense edge ids `0..m`. Parallel edges are allowed, loops are not.
//! Every derived graph (vertex deletion, contraction, marked components)
//! comes back as a [`Derived`] value carrying the label maps needed to
//! translate results back to the host graph.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type EdgeId = usize;

/// An edge record. `marker` flags the virtual edge added when forming a
/// marked 2-cut component; it is ignored by equality.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub marker: bool,
}

impl Edge {
    pub fn new(u: Vertex, v: Vertex) -> Self {
        Edge {
            u,
            v,
            marker: false,
        }
    }

    pub fn marker(u: Vertex, v: Vertex) -> Self {
        Edge { u, v, marker: true }
    }

    /// The endpoint opposite to `x`.
    pub fn other(&self, x: Vertex) -> Vertex {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }

    pub fn key(&self) -> (Vertex, Vertex) {
        (self.u.min(self.v), self.u.max(self.v))
    }

    pub fn touches(&self, x: Vertex) -> bool {
        self.u == x || self.v == x
    }
}

/// All edges joining one unordered pair of vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParallelClass {
    pub endpoints: (Vertex, Vertex),
    pub edge_ids: Vec<EdgeId>,
}

impl ParallelClass {
    pub fn multiplicity(&self) -> usize {
        self.edge_ids.len()
    }

    /// Lowest edge id of the class.
    pub fn representative(&self) -> EdgeId {
        self.edge_ids[0]
    }
}

/// A 2-vertex cut, stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwoCut {
    pub u: Vertex,
    pub v: Vertex,
}

impl TwoCut {
    pub fn new(a: Vertex, b: Vertex) -> Self {
        TwoCut {
            u: a.min(b),
            v: a.max(b),
        }
    }
}

#[derive(Clone)]
pub struct Multigraph {
    n: usize,
    edges: Vec<Edge>,
    // (neighbour, edge id), sorted
    adj: Vec<Vec<(Vertex, EdgeId)>>,
}

/// A graph derived from a host graph together with its label maps.
#[derive(Debug, Clone)]
pub struct Derived {
    pub graph: Multigraph,
    /// host vertex -> derived vertex (None if deleted)
    pub vertex_map: Vec<Option<Vertex>>,
    /// derived edge -> host edge (None for marker edges)
    pub edge_origin: Vec<Option<EdgeId>>,
}

impl Derived {
    /// Derived vertex -> host vertices merged into it.
    pub fn vertex_origin(&self) -> Vec<Vec<Vertex>> {
        let mut origin = vec![Vec::new(); self.graph.vertex_count()];
        for (old, new) in self.vertex_map.iter().enumerate() {
            if let Some(new) = new {
                origin[*new].push(old);
            }
        }
        origin
    }
}

impl Multigraph {
    /// Builds a graph from endpoint pairs; edge ids follow iteration order.
    pub fn new<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Self::from_edges(n, pairs.into_iter().map(|(u, v)| Edge::new(u, v)).collect())
    }

    pub fn from_edges(n: usize, edges: Vec<Edge>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (id, e) in edges.iter().enumerate() {
            if e.u >= n {
                return Err(Error::NoSuchVertex(e.u));
            }
            if e.v >= n {
                return Err(Error::NoSuchVertex(e.v));
            }
            if e.u == e.v {
                return Err(Error::Loop(e.u));
            }
            adj[e.u].push((e.v, id));
            adj[e.v].push((e.u, id));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Multigraph { n, edges, adj })
    }

    pub fn empty(n: usize) -> Self {
        Multigraph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> Result<&Edge> {
        self.edges.get(e).ok_or(Error::NoSuchEdge(e))
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    /// Incident `(neighbour, edge)` pairs, sorted by neighbour then edge id.
    pub fn incident(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[v]
    }

    /// Distinct neighbours in increasing order.
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        let list = &self.adj[v];
        list.iter()
            .enumerate()
            .filter(move |(i, (w, _))| *i == 0 || list[i - 1].0 != *w)
            .map(|(_, (w, _))| *w)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// Number of distinct neighbours.
    pub fn simple_degree(&self, v: Vertex) -> usize {
        self.neighbors(v).count()
    }

    pub fn edges_between(&self, u: Vertex, v: Vertex) -> Vec<EdgeId> {
        let list = &self.adj[u];
        let start = list.partition_point(|(w, _)| *w < v);
        list[start..]
            .iter()
            .take_while(|(w, _)| *w == v)
            .map(|(_, e)| *e)
            .collect()
    }

    /// Lowest edge id joining `u` and `v`.
    pub fn representative(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        let list = &self.adj[u];
        let i = list.partition_point(|(w, _)| *w < v);
        list.get(i).filter(|(w, _)| *w == v).map(|(_, e)| *e)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.representative(u, v).is_some()
    }

    pub fn multiplicity(&self, u: Vertex, v: Vertex) -> usize {
        self.edges_between(u, v).len()
    }

    pub fn is_simple(&self) -> bool {
        (0..self.n).all(|v| self.adj[v].windows(2).all(|w| w[0].0 != w[1].0))
    }

    /// Parallel classes ordered by their lowest edge id.
    pub fn parallel_classes(&self) -> Vec<ParallelClass> {
        let mut seen = vec![false; self.edges.len()];
        let mut classes = Vec::new();
        for (id, e) in self.edges.iter().enumerate() {
            if seen[id] {
                continue;
            }
            let ids = self.edges_between(e.u, e.v);
            for &i in &ids {
                seen[i] = true;
            }
            classes.push(ParallelClass {
                endpoints: e.key(),
                edge_ids: ids,
            });
        }
        classes
    }

    pub fn class_of(&self, e: EdgeId) -> Result<ParallelClass> {
        let edge = self.edge(e)?;
        Ok(ParallelClass {
            endpoints: edge.key(),
            edge_ids: self.edges_between(edge.u, edge.v),
        })
    }

    /// Simple support together with the host edge behind each support edge
    /// (always the lowest id of its class).
    pub fn simple_support(&self) -> (Multigraph, Vec<EdgeId>) {
        let classes = self.parallel_classes();
        let origin: Vec<EdgeId> = classes.iter().map(|c| c.representative()).collect();
        let edges = origin
            .iter()
            .map(|&e| Edge::new(self.edges[e].u, self.edges[e].v))
            .collect();
        let g = Multigraph::from_edges(self.n, edges).expect("support of a valid graph");
        (g, origin)
    }

    /// One edge per parallel class; the vertex set is unchanged.
    pub fn underlying_simple(&self) -> Multigraph {
        self.simple_support().0
    }

    /// Adjacency as bit rows (requires `n <= 64`).
    pub fn adjacency_bits(&self) -> Vec<u64> {
        assert!(self.n <= 64, "adjacency_bits supports at most 64 vertices");
        let mut rows = vec![0u64; self.n];
        for e in &self.edges {
            rows[e.u] |= 1 << e.v;
            rows[e.v] |= 1 << e.u;
        }
        rows
    }

    fn membership(&self, set: &[Vertex]) -> Result<Vec<bool>> {
        let mut inside = vec![false; self.n];
        for &v in set {
            if v >= self.n {
                return Err(Error::NoSuchVertex(v));
            }
            inside[v] = true;
        }
        Ok(inside)
    }

    /// Connected components of `g - deleted`, ordered by minimum vertex;
    /// each component is sorted.
    pub fn components(&self, deleted: &[Vertex]) -> Vec<Vec<Vertex>> {
        let mut removed = vec![false; self.n];
        for &v in deleted {
            if v < self.n {
                removed[v] = true;
            }
        }
        self.components_masked(&removed)
    }

    pub(crate) fn components_masked(&self, removed: &[bool]) -> Vec<Vec<Vertex>> {
        let mut seen = removed.to_vec();
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(x) = queue.pop_front() {
                comp.push(x);
                for &(y, _) in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    fn count_components_masked(&self, removed: &[bool]) -> usize {
        let mut seen = removed.to_vec();
        let mut stack = Vec::new();
        let mut count = 0;
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            stack.push(s);
            while let Some(x) = stack.pop() {
                for &(y, _) in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.count_components_masked(&vec![false; self.n]) == 1
    }

    /// Vertex `k`-connectivity of the simple support. A graph on at most
    /// `k` vertices is never `k`-connected for `k >= 2` (`K_n` is
    /// `(n-1)`-connected); for `k == 1` this is plain connectivity.
    pub fn is_k_connected(&self, k: usize) -> bool {
        if !self.is_connected() {
            return false;
        }
        if k <= 1 {
            return true;
        }
        if self.n <= k {
            return false;
        }
        let mut removed = vec![false; self.n];
        !self.has_separator(k - 1, 0, &mut removed)
    }

    // Is there a separating set of size 1..=budget among vertices >= from?
    fn has_separator(&self, budget: usize, from: Vertex, removed: &mut [bool]) -> bool {
        for v in from..self.n {
            removed[v] = true;
            if self.count_components_masked(removed) > 1 {
                removed[v] = false;
                return true;
            }
            if budget > 1 && self.has_separator(budget - 1, v + 1, removed) {
                removed[v] = false;
                return true;
            }
            removed[v] = false;
        }
        false
    }

    /// Does deleting `u` and `v` disconnect the graph?
    pub fn is_two_cut(&self, u: Vertex, v: Vertex) -> bool {
        if u == v || u >= self.n || v >= self.n || self.n < 4 {
            return false;
        }
        let mut removed = vec![false; self.n];
        removed[u] = true;
        removed[v] = true;
        self.count_components_masked(&removed) > 1
    }

    /// All 2-vertex cuts in lexicographic order, by testing every pair.
    pub fn two_cuts(&self) -> Result<Vec<TwoCut>> {
        if !self.is_k_connected(2) {
            return Err(Error::Not2Connected);
        }
        let mut cuts = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.is_two_cut(u, v) {
                    cuts.push(TwoCut { u, v });
                }
            }
        }
        Ok(cuts)
    }

    /// Subgraph induced by `keep`; vertices renumbered in increasing order.
    pub fn induced(&self, keep: &[Vertex]) -> Result<Derived> {
        let inside = self.membership(keep)?;
        let mut vertex_map = vec![None; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if inside[v] {
                vertex_map[v] = Some(next);
                next += 1;
            }
        }
        let mut edges = Vec::new();
        let mut edge_origin = Vec::new();
        for (id, e) in self.edges.iter().enumerate() {
            if let (Some(a), Some(b)) = (vertex_map[e.u], vertex_map[e.v]) {
                edges.push(Edge {
                    u: a,
                    v: b,
                    marker: e.marker,
                });
                edge_origin.push(Some(id));
            }
        }
        Ok(Derived {
            graph: Multigraph::from_edges(next, edges)?,
            vertex_map,
            edge_origin,
        })
    }

    pub fn delete_vertices(&self, deleted: &[Vertex]) -> Result<Derived> {
        let removed = self.membership(deleted)?;
        let keep: Vec<Vertex> = (0..self.n).filter(|&v| !removed[v]).collect();
        self.induced(&keep)
    }

    /// Merges the vertices of `s` into one vertex; edges inside `s` are
    /// dropped and edges of the cut between `s` and its complement are kept
    /// with multiplicity. The merged vertex takes the position of the
    /// smallest member of `s`; the other vertices keep their relative order.
    pub fn contract(&self, s: &[Vertex]) -> Result<Derived> {
        let inside = self.membership(s)?;
        let size = inside.iter().filter(|&&b| b).count();
        if size == 0 {
            return Err(Error::EmptySet);
        }
        if size == self.n {
            return Err(Error::FullSet);
        }
        let mut vertex_map = vec![None; self.n];
        let mut merged = None;
        let mut next = 0;
        for v in 0..self.n {
            if inside[v] {
                if merged.is_none() {
                    merged = Some(next);
                    next += 1;
                }
                vertex_map[v] = merged;
            } else {
                vertex_map[v] = Some(next);
                next += 1;
            }
        }
        let mut edges = Vec::new();
        let mut edge_origin = Vec::new();
        for (id, e) in self.edges.iter().enumerate() {
            if inside[e.u] && inside[e.v] {
                continue;
            }
            edges.push(Edge {
                u: vertex_map[e.u].unwrap(),
                v: vertex_map[e.v].unwrap(),
                marker: e.marker,
            });
            edge_origin.push(Some(id));
        }
        Ok(Derived {
            graph: Multigraph::from_edges(next, edges)?,
            vertex_map,
            edge_origin,
        })
    }

    /// For each component `X` of `g - {u, v}` (in [`components`] order), the
    /// subgraph induced by `X ∪ {u, v}` plus one marker edge `uv`, appended
    /// as the last edge.
    ///
    /// [`components`]: Multigraph::components
    pub fn marked_k_components(&self, cut: TwoCut) -> Result<Vec<Derived>> {
        if !self.is_two_cut(cut.u, cut.v) {
            return Err(Error::NotACut(cut.u, cut.v));
        }
        let mut out = Vec::new();
        for comp in self.components(&[cut.u, cut.v]) {
            let mut keep = comp;
            keep.push(cut.u);
            keep.push(cut.v);
            let part = self.induced(&keep)?;
            let a = part.vertex_map[cut.u].unwrap();
            let b = part.vertex_map[cut.v].unwrap();
            let mut edges = part.graph.edges.clone();
            edges.push(Edge::marker(a, b));
            let mut edge_origin = part.edge_origin;
            edge_origin.push(None);
            out.push(Derived {
                graph: Multigraph::from_edges(part.graph.n, edges)?,
                vertex_map: part.vertex_map,
                edge_origin,
            });
        }
        Ok(out)
    }

    /// Edge records as `(min, max)` pairs in id order.
    pub fn edge_keys(&self) -> Vec<(Vertex, Vertex)> {
        self.edges.iter().map(Edge::key).collect()
    }
}

impl PartialEq for Multigraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edge_keys() == other.edge_keys()
    }
}

impl Eq for Multigraph {}

impl fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multigraph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}-{}", e.u, e.v)?;
            if e.marker {
                write!(f, "*")?;
            }
        }
        write!(f, "])")
    }
}

/// Named graphs used throughout the crate and its tests.
pub mod named {
    use super::Multigraph;

    pub fn cycle(n: usize) -> Multigraph {
        assert!(n >= 2);
        Multigraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn path(n: usize) -> Multigraph {
        Multigraph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn complete(n: usize) -> Multigraph {
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                pairs.push((u, v));
            }
        }
        Multigraph::new(n, pairs).unwrap()
    }

    /// K4 minus the edge 0-3: 2-vertices 0 and 3, chord 1-2.
    pub fn diamond() -> Multigraph {
        Multigraph::new(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    /// Triangular prism (complement of C6): triangles 0,1,2 and 3,4,5 with
    /// rungs 0-3, 1-4, 2-5.
    pub fn c6bar() -> Multigraph {
        Multigraph::new(
            6,
            [
                (0, 1),
                (0, 2),
                (1, 2),
                (3, 4),
                (3, 5),
                (4, 5),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap()
    }

    /// Wheel with hub 0 and rim 1-2-3-4-5.
    pub fn w5() -> Multigraph {
        Multigraph::new(
            6,
            [
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 1),
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (0, 5),
            ],
        )
        .unwrap()
    }

    pub fn claw() -> Multigraph {
        Multigraph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    pub fn petersen() -> Multigraph {
        let mut pairs = Vec::new();
        for i in 0..5 {
            pairs.push((i, (i + 1) % 5));
            pairs.push((i, i + 5));
            pairs.push((5 + i, 5 + (i + 2) % 5));
        }
        Multigraph::new(10, pairs).unwrap()
    }

    /// Two vertices joined by `m` parallel edges.
    pub fn k2_multi(m: usize) -> Multigraph {
        Multigraph::new(2, std::iter::repeat_n((0, 1), m)).unwrap()
    }

    /// Quasi-diamond on six vertices: triangle 0,1,2 plus the path
    /// 1-4-5-3-2 (the diamond with edge 1-3 subdivided once).
    pub fn quasi_diamond6() -> Multigraph {
        Multigraph::new(6, [(0, 1), (0, 2), (1, 2), (1, 4), (2, 3), (4, 5), (5, 3)]).unwrap()
    }

    /// C6 on 0..5 with chords 0-2 and 3-5.
    pub fn c6_two_chords() -> Multigraph {
        let mut pairs: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        pairs.push((0, 2));
        pairs.push((3, 5));
        Multigraph::new(6, pairs).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    fn class_mults(g: &Multigraph) -> Vec<((Vertex, Vertex), usize)> {
        let mut v: Vec<_> = g
            .parallel_classes()
            .into_iter()
            .map(|c| (c.endpoints, c.multiplicity()))
            .collect();
        v.sort();
        v
    }

    #[test]
    fn rejects_loops_and_bad_vertices() {
        assert_eq!(Multigraph::new(2, [(1, 1)]).unwrap_err(), Error::Loop(1));
        assert_eq!(
            Multigraph::new(2, [(0, 2)]).unwrap_err(),
            Error::NoSuchVertex(2)
        );
    }

    #[test]
    fn underlying_simple_collapses_classes() {
        let g = k2_multi(3);
        let s = g.underlying_simple();
        assert_eq!(s.edge_count(), 1);
        assert!(s.is_simple());
        assert_eq!(complete(4).underlying_simple(), complete(4));

        let mut pairs = c6bar().edge_keys();
        pairs.push((2, 5));
        let doubled = Multigraph::new(6, pairs).unwrap();
        assert!(!doubled.is_simple());
        assert_eq!(doubled.underlying_simple(), c6bar());
    }

    #[test]
    fn contract_examples() {
        let c4 = cycle(4);
        let t = c4.contract(&[0, 1]).unwrap();
        assert_eq!(t.graph.vertex_count(), 3);
        assert_eq!(
            class_mults(&t.graph),
            vec![((0, 1), 1), ((0, 2), 1), ((1, 2), 1)]
        );

        let d = c4.contract(&[0, 2]).unwrap();
        assert_eq!(d.graph.vertex_count(), 3);
        // merged vertex is 0; v1 -> 1, v3 -> 2
        assert_eq!(class_mults(&d.graph), vec![((0, 1), 2), ((0, 2), 2)]);

        let k = c6bar().contract(&[3, 4, 5]).unwrap();
        assert_eq!(k.graph.underlying_simple().edge_count(), 6);
        assert!(k.graph.is_simple());
        assert_eq!(k.graph.vertex_count(), 4);

        assert_eq!(c4.contract(&[]).unwrap_err(), Error::EmptySet);
        assert_eq!(c4.contract(&[0, 1, 2, 3]).unwrap_err(), Error::FullSet);
    }

    #[test]
    fn components_examples() {
        let c6 = cycle(6);
        assert_eq!(c6.components(&[0, 3]), vec![vec![1, 2], vec![4, 5]]);
        assert_eq!(complete(4).components(&[]), vec![vec![0, 1, 2, 3]]);
        let q = quasi_diamond6();
        assert_eq!(q.components(&[1, 2]), vec![vec![0], vec![3, 4, 5]]);
    }

    #[test]
    fn connectivity_examples() {
        assert!(complete(4).is_k_connected(3));
        assert!(!cycle(6).is_k_connected(3));
        assert!(cycle(6).is_k_connected(2));
        let q = quasi_diamond6();
        assert!(q.is_k_connected(2));
        assert!(!q.is_k_connected(3));
        assert!(complete(2).is_k_connected(1));
        assert!(!complete(2).is_k_connected(2));
        assert!(!k2_multi(2).is_k_connected(2));
        assert!(complete(3).is_k_connected(2));
    }

    #[test]
    fn two_cut_examples() {
        assert!(complete(4).two_cuts().unwrap().is_empty());
        let cuts = cycle(6).two_cuts().unwrap();
        assert_eq!(cuts.len(), 9);
        assert!(cuts
            .iter()
            .all(|c| (c.v - c.u) % 6 != 1 && (c.v - c.u) % 6 != 5));
        assert!(quasi_diamond6()
            .two_cuts()
            .unwrap()
            .contains(&TwoCut::new(1, 2)));
        assert_eq!(path(4).two_cuts().unwrap_err(), Error::Not2Connected);
    }

    #[test]
    fn marked_components_examples() {
        let parts = cycle(6).marked_k_components(TwoCut::new(0, 3)).unwrap();
        assert_eq!(parts.len(), 2);
        for p in &parts {
            assert_eq!(p.graph.vertex_count(), 4);
            assert_eq!(p.graph.underlying_simple(), p.graph.clone());
            assert!(p.graph.neighbors(0).count() == 2);
            assert!(p.graph.edges().last().unwrap().marker);
            assert_eq!(p.edge_origin.last(), Some(&None));
        }
        assert!(complete(4).marked_k_components(TwoCut::new(0, 1)).is_err());

        let q = quasi_diamond6();
        let parts = q.marked_k_components(TwoCut::new(1, 2)).unwrap();
        // left: triangle on {0,1,2} with the 1-2 class doubled
        assert_eq!(parts[0].graph.vertex_count(), 3);
        assert_eq!(
            class_mults(&parts[0].graph),
            vec![((0, 1), 1), ((0, 2), 1), ((1, 2), 2)]
        );
        // right: {1,2,3,4,5}: the path 1-4-5-3-2 closed by a doubled 1-2 class
        let right = &parts[1].graph;
        assert_eq!(right.vertex_count(), 5);
        let s = right.underlying_simple();
        assert!(s.vertices().all(|v| s.degree(v) == 2));
        let (a, b) = (
            parts[1].vertex_map[1].unwrap(),
            parts[1].vertex_map[2].unwrap(),
        );
        assert_eq!(right.multiplicity(a, b), 2);
    }

    #[test]
    fn equality_ignores_marker_and_orientation() {
        let a = Multigraph::from_edges(2, vec![Edge::new(0, 1)]).unwrap();
        let b = Multigraph::from_edges(2, vec![Edge::marker(1, 0)]).unwrap();
        assert_eq!(a, b);
    }
}
