//! Brute-force reference implementations used to cross-check the library.
//! Everything here works on adjacency bitmasks of the simple support and
//! is exponential on purpose; keep inputs small.

#![allow(dead_code)]

use cyclenice::{EdgeId, Multigraph, Vertex};
use rand::Rng;

pub fn adjacency(g: &Multigraph) -> Vec<u32> {
    let mut adj = vec![0u32; g.vertex_count()];
    for e in g.edges() {
        adj[e.u] |= 1 << e.v;
        adj[e.v] |= 1 << e.u;
    }
    adj
}

/// Size of a maximum matching, by exhaustive branching on the lowest
/// vertex of `alive`.
pub fn max_matching_size(adj: &[u32], alive: u32) -> usize {
    if alive == 0 {
        return 0;
    }
    let v = alive.trailing_zeros() as usize;
    let rest = alive & !(1 << v);
    let mut best = max_matching_size(adj, rest);
    let mut nbrs = adj[v] & rest;
    while nbrs != 0 {
        let w = nbrs.trailing_zeros() as usize;
        nbrs &= nbrs - 1;
        best = best.max(1 + max_matching_size(adj, rest & !(1 << w)));
    }
    best
}

pub fn all_vertices(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Does the subgraph induced by `alive` have a perfect matching?
pub fn has_pm(adj: &[u32], alive: u32) -> bool {
    if alive == 0 {
        return true;
    }
    let v = alive.trailing_zeros() as usize;
    let rest = alive & !(1 << v);
    let mut nbrs = adj[v] & rest;
    while nbrs != 0 {
        let w = nbrs.trailing_zeros() as usize;
        nbrs &= nbrs - 1;
        if has_pm(adj, rest & !(1 << w)) {
            return true;
        }
    }
    false
}

/// Every perfect matching of `g`, as sorted edge-id lists (parallel edges
/// give distinct matchings).
pub fn perfect_matchings(g: &Multigraph) -> Vec<Vec<EdgeId>> {
    fn go(g: &Multigraph, alive: u32, cur: &mut Vec<EdgeId>, out: &mut Vec<Vec<EdgeId>>) {
        if alive == 0 {
            let mut m = cur.clone();
            m.sort_unstable();
            out.push(m);
            return;
        }
        let v = alive.trailing_zeros() as usize;
        for &(w, e) in g.incident(v) {
            if alive >> w & 1 == 1 && w != v {
                cur.push(e);
                go(g, alive & !(1 << v) & !(1 << w), cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(g, all_vertices(g.vertex_count()), &mut Vec::new(), &mut out);
    out
}

/// Induced claw search over all centre/leaf triples of the support.
pub fn claw_free(g: &Multigraph) -> bool {
    let adj = adjacency(g);
    let n = g.vertex_count();
    for c in 0..n {
        for a in 0..n {
            for b in a + 1..n {
                for d in b + 1..n {
                    let leaves = [a, b, d];
                    if leaves.contains(&c) || leaves.iter().any(|&x| adj[c] >> x & 1 == 0) {
                        continue;
                    }
                    let independent =
                        adj[a] >> b & 1 == 0 && adj[a] >> d & 1 == 0 && adj[b] >> d & 1 == 0;
                    if independent {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Does the support restricted to `set` (|set| >= 3) have a Hamiltonian
/// cycle? Held–Karp over subsets of `set`.
pub fn hamiltonian(adj: &[u32], set: u32) -> bool {
    let verts: Vec<usize> = (0..32).filter(|&i| set >> i & 1 == 1).collect();
    let k = verts.len();
    if k < 3 {
        return false;
    }
    // reach[mask][j]: a path from verts[0] through exactly `mask` ending at verts[j]
    let mut reach = vec![vec![false; k]; 1 << k];
    reach[1][0] = true;
    for mask in 1usize..1 << k {
        if mask & 1 == 0 {
            continue;
        }
        for j in 0..k {
            if !reach[mask][j] {
                continue;
            }
            for t in 1..k {
                if mask >> t & 1 == 0 && adj[verts[j]] >> verts[t] & 1 == 1 {
                    reach[mask | 1 << t][t] = true;
                }
            }
        }
    }
    let full = (1 << k) - 1;
    (1..k).any(|j| reach[full][j] && adj[verts[j]] >> verts[0] & 1 == 1)
}

/// `None` if `g` has no perfect matching, otherwise whether every even
/// cycle's vertex set leaves a graph with a perfect matching. Cycles are
/// found as vertex subsets carrying a Hamiltonian cycle (or a doubled edge
/// for length two).
pub fn cycle_nice(g: &Multigraph) -> Option<bool> {
    let n = g.vertex_count();
    let adj = adjacency(g);
    let all = all_vertices(n);
    if !has_pm(&adj, all) {
        return None;
    }
    for set in 1..=all {
        let size = set.count_ones();
        if size % 2 == 1 {
            continue;
        }
        let is_cycle = if size == 2 {
            let a = set.trailing_zeros() as usize;
            let b = (31 - set.leading_zeros()) as usize;
            g.multiplicity(a, b) >= 2
        } else {
            hamiltonian(&adj, set)
        };
        if is_cycle && !has_pm(&adj, all & !set) {
            return Some(false);
        }
    }
    Some(true)
}

pub fn relabel(g: &Multigraph, perm: &[Vertex]) -> Multigraph {
    Multigraph::new(
        g.vertex_count(),
        g.edges().iter().map(|e| (perm[e.u], perm[e.v])),
    )
    .unwrap()
}

pub fn random_permutation<R: Rng>(n: usize, rng: &mut R) -> Vec<Vertex> {
    use rand::seq::SliceRandom;
    let mut p: Vec<Vertex> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// G(n, p) on the support, then every edge independently doubled with
/// probability `q`.
pub fn random_multigraph<R: Rng>(n: usize, p: f64, q: f64, rng: &mut R) -> Multigraph {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                pairs.push((u, v));
                if rng.gen_bool(q) {
                    pairs.push((u, v));
                }
            }
        }
    }
    Multigraph::new(n, pairs).unwrap()
}

/// Number of isomorphism classes of connected simple graphs on `n` vertices,
/// by minimizing the adjacency code over all permutations.
pub fn connected_class_count(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let perms = permutations(n);
    let mut seen = std::collections::HashSet::new();
    for mask in 0u64..1 << pairs.len() {
        let mut adj = vec![0u32; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        if !connected(&adj, n) {
            continue;
        }
        let code = perms
            .iter()
            .map(|p| {
                let mut c = 0u64;
                for (i, &(u, v)) in pairs.iter().enumerate() {
                    if adj[p[u]] >> p[v] & 1 == 1 {
                        c |= 1 << i;
                    }
                }
                c
            })
            .min()
            .unwrap();
        seen.insert(code);
    }
    seen.len()
}

fn connected(adj: &[u32], n: usize) -> bool {
    if n == 0 {
        return true;
    }
    let mut seen = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & !seen;
        seen |= new;
        frontier |= new;
    }
    seen == all_vertices(n)
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Is `g` connected after deleting the vertices in `deleted`?
pub fn connected_without(g: &Multigraph, deleted: &[Vertex]) -> bool {
    let n = g.vertex_count();
    let adj = adjacency(g);
    let mut alive = all_vertices(n);
    for &d in deleted {
        alive &= !(1 << d);
    }
    if alive == 0 {
        return true;
    }
    let start = alive.trailing_zeros() as usize;
    let mut seen = 1u32 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & alive & !seen;
        seen |= new;
        frontier |= new;
    }
    seen == alive
}

/// k-connectivity by deleting every set of fewer than k vertices.
pub fn k_connected(g: &Multigraph, k: usize) -> bool {
    let n = g.vertex_count();
    if n <= k {
        return false;
    }
    for mask in 0u32..1 << n {
        if (mask.count_ones() as usize) < k {
            let del: Vec<Vertex> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            if !connected_without(g, &del) {
                return false;
            }
        }
    }
    true
}
