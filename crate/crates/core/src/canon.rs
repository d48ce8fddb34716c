//! Canonical labelling of multigraphs by colour refinement plus
//! individualization, used for isomorphism tests and atlas deduplication.
//!
//! The search explores every leaf of the individualization tree (no
//! automorphism pruning), which is fine for the small and highly
//! asymmetric graphs this crate deals with.

use crate::multigraph::{Multigraph, Vertex};

/// A labelling-independent description of a multigraph: two graphs are
/// isomorphic iff their forms are equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub n: usize,
    /// Upper-triangle multiplicities in canonical vertex order.
    pub code: Vec<u32>,
}

struct Canon {
    n: usize,
    mult: Vec<Vec<u32>>,
    // neighbour lists with multiplicities
    nbrs: Vec<Vec<(Vertex, u32)>>,
    best: Option<(Vec<u32>, Vec<Vertex>)>,
}

impl Canon {
    fn new(g: &Multigraph) -> Self {
        let n = g.vertex_count();
        let mut mult = vec![vec![0u32; n]; n];
        for e in g.edges() {
            mult[e.u][e.v] += 1;
            mult[e.v][e.u] += 1;
        }
        let nbrs = (0..n)
            .map(|v| {
                (0..n)
                    .filter(|&w| mult[v][w] > 0)
                    .map(|w| (w, mult[v][w]))
                    .collect()
            })
            .collect();
        Canon {
            n,
            mult,
            nbrs,
            best: None,
        }
    }

    /// Refines `colors` to the coarsest equitable partition; colours are
    /// dense ranks, so the result does not depend on vertex labels.
    fn refine(&self, colors: &mut [usize]) {
        let mut classes = count_classes(colors);
        loop {
            let sigs: Vec<(usize, Vec<(usize, u32)>)> = (0..self.n)
                .map(|v| {
                    let mut s: Vec<(usize, u32)> =
                        self.nbrs[v].iter().map(|&(w, m)| (colors[w], m)).collect();
                    s.sort_unstable();
                    (colors[v], s)
                })
                .collect();
            let mut sorted: Vec<&(usize, Vec<(usize, u32)>)> = sigs.iter().collect();
            sorted.sort();
            sorted.dedup();
            for v in 0..self.n {
                colors[v] = sorted.binary_search(&&sigs[v]).unwrap();
            }
            let now = sorted.len();
            if now == classes {
                return;
            }
            classes = now;
        }
    }

    fn search(&mut self, mut colors: Vec<usize>) {
        self.refine(&mut colors);
        let classes = count_classes(&colors);
        if classes == self.n {
            self.leaf(&colors);
            return;
        }
        // first smallest non-singleton cell
        let mut sizes = vec![0usize; classes];
        for &c in &colors {
            sizes[c] += 1;
        }
        let target = (0..classes)
            .filter(|&c| sizes[c] > 1)
            .min_by_key(|&c| (sizes[c], c))
            .unwrap();
        for v in 0..self.n {
            if colors[v] != target {
                continue;
            }
            let child: Vec<usize> = (0..self.n)
                .map(|x| 2 * colors[x] + usize::from(colors[x] == target && x != v))
                .collect();
            self.search(child);
        }
    }

    fn leaf(&mut self, colors: &[usize]) {
        let mut inv = vec![0; self.n];
        for v in 0..self.n {
            inv[colors[v]] = v;
        }
        let mut code = Vec::with_capacity(self.n * self.n.saturating_sub(1) / 2);
        for i in 0..self.n {
            for j in i + 1..self.n {
                code.push(self.mult[inv[i]][inv[j]]);
            }
        }
        let better = match &self.best {
            None => true,
            Some((b, _)) => code < *b,
        };
        if better {
            self.best = Some((code, colors.to_vec()));
        }
    }
}

fn count_classes(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Canonical form and the labelling achieving it (`label[v]` is the
/// canonical position of `v`).
pub fn canonical_labelling(g: &Multigraph) -> (CanonicalForm, Vec<Vertex>) {
    let mut c = Canon::new(g);
    if c.n == 0 {
        return (
            CanonicalForm {
                n: 0,
                code: Vec::new(),
            },
            Vec::new(),
        );
    }
    c.search(vec![0; c.n]);
    let (code, label) = c.best.take().unwrap();
    (
        CanonicalForm {
            n: g.vertex_count(),
            code,
        },
        label,
    )
}

pub fn canonical_form(g: &Multigraph) -> CanonicalForm {
    canonical_labelling(g).0
}

/// `g` relabelled into canonical order (edges sorted by endpoints).
pub fn canonical_graph(g: &Multigraph) -> Multigraph {
    let (_, label) = canonical_labelling(g);
    let mut pairs: Vec<(Vertex, Vertex)> = g
        .edges()
        .iter()
        .map(|e| {
            let (a, b) = (label[e.u], label[e.v]);
            (a.min(b), a.max(b))
        })
        .collect();
    pairs.sort_unstable();
    Multigraph::new(g.vertex_count(), pairs).expect("relabelling keeps the graph loopless")
}

/// An isomorphism `a -> b` respecting edge multiplicities, if one exists.
pub fn find_isomorphism(a: &Multigraph, b: &Multigraph) -> Option<Vec<Vertex>> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return None;
    }
    let (fa, la) = canonical_labelling(a);
    let (fb, lb) = canonical_labelling(b);
    if fa != fb {
        return None;
    }
    let mut inv_b = vec![0; lb.len()];
    for (v, &p) in lb.iter().enumerate() {
        inv_b[p] = v;
    }
    Some(la.iter().map(|&p| inv_b[p]).collect())
}

pub fn is_isomorphic(a: &Multigraph, b: &Multigraph) -> bool {
    find_isomorphism(a, b).is_some()
}
