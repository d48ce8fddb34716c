//! Structural predicates: claw-freeness, planarity and identification of
//! the small base graphs.

mod planarity;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::multigraph::{named, Multigraph, Vertex};

pub use planarity::is_planar;

/// The base graphs a construction can start from, plus the graphs the
/// recognizer needs to name (W5, K2) and a catch-all.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BaseTag {
    EvenCycle { length: usize },
    Diamond,
    K4,
    C6bar,
    W5,
    K2,
    Other,
}

impl BaseTag {
    /// Canonical labelled representative of the tag, if it has one.
    pub fn graph(&self) -> Option<Multigraph> {
        match *self {
            BaseTag::EvenCycle { length } if length >= 2 && length % 2 == 0 => {
                Some(named::cycle(length))
            }
            BaseTag::EvenCycle { .. } | BaseTag::Other => None,
            BaseTag::Diamond => Some(named::diamond()),
            BaseTag::K4 => Some(named::complete(4)),
            BaseTag::C6bar => Some(named::c6bar()),
            BaseTag::W5 => Some(named::w5()),
            BaseTag::K2 => Some(named::complete(2)),
        }
    }

    /// Members of the starting family of a construction sequence.
    pub fn is_construction_base(&self) -> bool {
        match *self {
            BaseTag::EvenCycle { length } => length >= 2 && length % 2 == 0,
            BaseTag::Diamond | BaseTag::K4 | BaseTag::C6bar => true,
            _ => false,
        }
    }
}

impl fmt::Display for BaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseTag::EvenCycle { length } => write!(f, "C{length}"),
            BaseTag::Diamond => write!(f, "diamond"),
            BaseTag::K4 => write!(f, "K4"),
            BaseTag::C6bar => write!(f, "C6bar"),
            BaseTag::W5 => write!(f, "W5"),
            BaseTag::K2 => write!(f, "K2"),
            BaseTag::Other => write!(f, "other"),
        }
    }
}

impl std::str::FromStr for BaseTag {
    type Err = String;

    /// Accepts `diamond`, `k4`, `c6bar`, `w5`, `k2` and `c<even length>`
    /// (case-insensitive).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        match lower.as_str() {
            "diamond" => Ok(BaseTag::Diamond),
            "k4" => Ok(BaseTag::K4),
            "c6bar" => Ok(BaseTag::C6bar),
            "w5" => Ok(BaseTag::W5),
            "k2" => Ok(BaseTag::K2),
            _ => {
                let digits = lower
                    .strip_prefix("c")
                    .or_else(|| lower.strip_prefix("evencycle"))
                    .ok_or_else(|| format!("unknown base graph `{s}`"))?;
                let length: usize = digits
                    .trim_start_matches(['(', ':'])
                    .trim_end_matches(')')
                    .parse()
                    .map_err(|_| format!("unknown base graph `{s}`"))?;
                if length < 2 || length % 2 == 1 {
                    return Err(format!("cycle length {length} is not even"));
                }
                Ok(BaseTag::EvenCycle { length })
            }
        }
    }
}

/// No vertex has three pairwise nonadjacent neighbours in the simple
/// support.
pub fn is_claw_free(g: &Multigraph) -> bool {
    find_claw(g).is_none()
}

/// A claw `(centre, [leaves])` in the simple support, if any.
pub fn find_claw(g: &Multigraph) -> Option<(Vertex, [Vertex; 3])> {
    for v in g.vertices() {
        let nb: Vec<Vertex> = g.neighbors(v).collect();
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                if g.has_edge(nb[i], nb[j]) {
                    continue;
                }
                for k in j + 1..nb.len() {
                    if !g.has_edge(nb[i], nb[k]) && !g.has_edge(nb[j], nb[k]) {
                        return Some((v, [nb[i], nb[j], nb[k]]));
                    }
                }
            }
        }
    }
    None
}

/// If the simple support is a cycle, its vertices in traversal order
/// starting at 0 towards the smaller neighbour.
pub fn support_cycle_order(g: &Multigraph) -> Option<Vec<Vertex>> {
    let n = g.vertex_count();
    if n < 3 || !g.is_connected() || g.vertices().any(|v| g.simple_degree(v) != 2) {
        return None;
    }
    let mut order = vec![0];
    let mut prev = 0;
    let mut cur = g.neighbors(0).next().unwrap();
    while cur != 0 {
        order.push(cur);
        let next = g.neighbors(cur).find(|&w| w != prev).unwrap();
        prev = cur;
        cur = next;
    }
    (order.len() == n).then_some(order)
}

/// Classifies the simple support of `g` against the fixed family.
pub fn identify_base(g: &Multigraph) -> BaseTag {
    match_base(g).map(|(tag, _)| tag).unwrap_or(BaseTag::Other)
}

/// Classifies the simple support and returns an isomorphism from the
/// canonical representative of the tag (see [`BaseTag::graph`]) onto the
/// support: `map[base vertex] = vertex of g`.
pub fn match_base(g: &Multigraph) -> Option<(BaseTag, Vec<Vertex>)> {
    let n = g.vertex_count();
    if n == 2 && g.edge_count() > 0 {
        return Some((BaseTag::K2, vec![0, 1]));
    }
    if let Some(order) = support_cycle_order(g) {
        return n
            .is_multiple_of(2)
            .then_some((BaseTag::EvenCycle { length: n }, order));
    }
    let candidates: &[BaseTag] = match n {
        4 => &[BaseTag::Diamond, BaseTag::K4],
        6 => &[BaseTag::C6bar, BaseTag::W5],
        _ => return None,
    };
    let support = g.underlying_simple();
    for tag in candidates {
        let base = tag.graph().unwrap();
        if base.edge_count() != support.edge_count() {
            continue;
        }
        if let Some(map) = find_embedding(&base, &support) {
            return Some((*tag, map));
        }
    }
    None
}

/// Brute-force isomorphism between two simple graphs on the same small
/// vertex count with equal edge counts.
fn find_embedding(base: &Multigraph, target: &Multigraph) -> Option<Vec<Vertex>> {
    fn extend(
        base: &Multigraph,
        target: &Multigraph,
        map: &mut Vec<Vertex>,
        used: &mut Vec<bool>,
    ) -> bool {
        let i = map.len();
        if i == base.vertex_count() {
            return true;
        }
        for cand in 0..target.vertex_count() {
            if used[cand] || base.simple_degree(i) != target.simple_degree(cand) {
                continue;
            }
            let consistent = (0..i).all(|j| base.has_edge(i, j) == target.has_edge(cand, map[j]));
            if !consistent {
                continue;
            }
            map.push(cand);
            used[cand] = true;
            if extend(base, target, map, used) {
                return true;
            }
            used[cand] = false;
            map.pop();
        }
        false
    }
    if base.vertex_count() != target.vertex_count() {
        return None;
    }
    let mut map = Vec::new();
    let mut used = vec![false; target.vertex_count()];
    extend(base, target, &mut map, &mut used).then_some(map)
}
