//! Structural recognition of cycle-nice 2-connected claw-free planar
//! multigraphs.
//!
//! The recursion splits along the lexicographically least 2-vertex cut
//! `{u, v}`. `G - {u, v}` has exactly two components; the simple support of
//! each side (with `uv` edges removed) is either a `u`–`v` path or not:
//!
//! * neither side is a path: two `uv`-paths whose parity matches the side
//!   sizes form an even cycle leaving an odd part on both sides;
//! * an odd path side: recurse on the marked component of the other side,
//!   then subdivide the marker edge back into the path;
//! * an even path side and `uv ∈ E`: the support must be a quasi-diamond
//!   (a diamond with one edge at a 2-vertex evenly subdivided); otherwise
//!   `uv` plus an odd `uv`-path through the other side is a bad cycle;
//! * an even path side and `uv ∉ E`: contract the path side together with
//!   `u` and `v`, recurse, then undo the contraction by an odd L-expansion.
//!
//! 3-connected pieces must be K4 or the prism with admissible multiple
//! edges. Every recursion level returns either a partial certificate
//! together with label maps into that level's graph, or a bad cycle of that
//! level's graph which is lifted back up.

use serde::{Deserialize, Serialize};

use crate::cycles::{
    cycle_nice_oracle, even_cycle_through, nice_vertex_set, CycleSpec, OracleVerdict,
    DEFAULT_CYCLE_CAP,
};
use crate::error::{Error, Result};
use crate::matching::{has_perfect_matching, is_admissible_edge};
use crate::multigraph::{EdgeId, Multigraph, Vertex};
use crate::operations::{apply_step, replay, ConstructionSequence, ConstructionStep};
use crate::predicates::{is_claw_free, is_planar, match_base, support_cycle_order, BaseTag};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ScopeReason {
    NotClawFree,
    NotPlanar,
    Not2Connected,
    HasLoops,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum RejectReason {
    Witness(CycleSpec),
    NotMatchable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    /// `vertex_map[i]` is the input vertex playing vertex `i` of the
    /// replayed certificate.
    Accept {
        certificate: ConstructionSequence,
        vertex_map: Vec<Vertex>,
    },
    AcceptOracle {
        note: String,
    },
    Reject(RejectReason),
    OutOfScope(ScopeReason),
}

impl Verdict {
    pub fn is_accept(&self) -> bool {
        matches!(self, Verdict::Accept { .. } | Verdict::AcceptOracle { .. })
    }

    pub fn is_reject(&self) -> bool {
        matches!(self, Verdict::Reject(_))
    }

    pub fn class(&self) -> &'static str {
        match self {
            Verdict::Accept { .. } => "Accept",
            Verdict::AcceptOracle { .. } => "AcceptOracle",
            Verdict::Reject(RejectReason::Witness(_)) => "Reject",
            Verdict::Reject(RejectReason::NotMatchable) => "NotMatchable",
            Verdict::OutOfScope(_) => "OutOfScope",
        }
    }
}

/// Counters collected over one recognition run.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecognizeStats {
    pub levels: usize,
    /// 2-vertex cuts inspected (all cuts of every 2-connected level).
    pub cuts_examined: usize,
    pub two_component_cuts: usize,
    /// Cuts leaving other than two components (never expected in scope).
    pub component_violations: usize,
    pub neither_path_rejections: usize,
    pub neither_path_verified: usize,
    pub oracle_fallbacks: usize,
}

#[derive(Debug, Clone, Copy)]
pub struct Options {
    /// Cycle cap for any oracle call.
    pub cap: usize,
    /// Node budget for the `uv`-path searches used to build bad cycles.
    pub path_budget: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            cap: DEFAULT_CYCLE_CAP,
            path_budget: 1_000_000,
        }
    }
}

pub fn recognize(g: &Multigraph) -> Result<Verdict> {
    recognize_with(g, &Options::default()).map(|(v, _)| v)
}

pub fn recognize_with_stats(g: &Multigraph) -> Result<(Verdict, RecognizeStats)> {
    recognize_with(g, &Options::default())
}

/// Scope check on the raw hypotheses, in the order loops, connectivity,
/// claw-freeness, planarity.
pub fn scope(g: &Multigraph) -> Option<ScopeReason> {
    let two_cycle = g.vertex_count() == 2 && g.multiplicity(0, 1) >= 2;
    if !two_cycle && !g.is_k_connected(2) {
        return Some(ScopeReason::Not2Connected);
    }
    if !is_claw_free(g) {
        return Some(ScopeReason::NotClawFree);
    }
    if !is_planar(g) {
        return Some(ScopeReason::NotPlanar);
    }
    None
}

/// As [`recognize`] for an edge list that may contain loops.
pub fn recognize_pairs(n: usize, pairs: &[(Vertex, Vertex)]) -> Result<Verdict> {
    if pairs.iter().any(|&(u, v)| u == v) {
        return Ok(Verdict::OutOfScope(ScopeReason::HasLoops));
    }
    recognize(&Multigraph::new(n, pairs.iter().copied())?)
}

pub fn recognize_with(g: &Multigraph, opts: &Options) -> Result<(Verdict, RecognizeStats)> {
    let mut r = Recognizer {
        opts: *opts,
        stats: RecognizeStats::default(),
    };
    let verdict = r.top(g)?;
    Ok((verdict, r.stats))
}

struct Recognizer {
    opts: Options,
    stats: RecognizeStats,
}

/// Partial certificate for one level: `graph` is the replay of `seq`,
/// `vmap`/`emap` send its vertices/edges to the level's graph.
struct Built {
    seq: ConstructionSequence,
    graph: Multigraph,
    vmap: Vec<Vertex>,
    emap: Vec<EdgeId>,
}

enum Outcome {
    Built(Built),
    Witness(CycleSpec),
    Inconclusive(String),
}

/// A side of a 2-cut whose support is a `u`–`v` path.
struct SidePath {
    vertices: Vec<Vertex>,
    edges: Vec<EdgeId>,
}

impl SidePath {
    fn len(&self) -> usize {
        self.edges.len()
    }

    /// The path read starting from `end`.
    fn starting_at(&self, end: Vertex) -> (Vec<Vertex>, Vec<EdgeId>) {
        if self.vertices[0] == end {
            (self.vertices.clone(), self.edges.clone())
        } else {
            let mut v = self.vertices.clone();
            let mut e = self.edges.clone();
            v.reverse();
            e.reverse();
            (v, e)
        }
    }
}

struct Side {
    members: Vec<Vertex>,
    path: Option<SidePath>,
}

fn internal(msg: impl Into<String>) -> Error {
    Error::Internal(msg.into())
}

impl Built {
    fn push(&mut self, step: ConstructionStep) -> Result<()> {
        self.graph = apply_step(&self.graph, &step)
            .map_err(|e| internal(format!("emitted step {step:?} failed: {e}")))?;
        self.seq.steps.push(step);
        Ok(())
    }

    /// Starts from a base graph with `map[base vertex] = level vertex`.
    fn base(h: &Multigraph, tag: BaseTag, map: Vec<Vertex>) -> Result<Built> {
        let graph = tag
            .graph()
            .ok_or_else(|| internal("base without representative"))?;
        let mut taken = vec![false; h.edge_count()];
        let mut emap = Vec::with_capacity(graph.edge_count());
        for e in graph.edges() {
            let id = h
                .edges_between(map[e.u], map[e.v])
                .into_iter()
                .find(|&id| !taken[id])
                .ok_or_else(|| internal(format!("base edge {}-{} has no image", e.u, e.v)))?;
            taken[id] = true;
            emap.push(id);
        }
        Ok(Built {
            seq: ConstructionSequence::new(tag),
            graph,
            vmap: map,
            emap,
        })
    }

    /// Adds the multiple-edge steps bringing every class up to its
    /// multiplicity in `h`, then checks that the maps are complete.
    fn finish(&mut self, h: &Multigraph) -> Result<()> {
        let mut used = vec![false; h.edge_count()];
        for &e in &self.emap {
            used[e] = true;
        }
        for class in h.parallel_classes() {
            let missing: Vec<EdgeId> = class
                .edge_ids
                .iter()
                .copied()
                .filter(|&e| !used[e])
                .collect();
            if missing.is_empty() {
                continue;
            }
            let r = self
                .emap
                .iter()
                .position(|e| class.edge_ids.contains(e))
                .ok_or_else(|| internal("parallel class absent from the partial replay"))?;
            self.push(ConstructionStep::MultiEdgeReplace {
                edge: r,
                multiplicity: class.multiplicity(),
            })?;
            self.emap.extend(missing);
        }
        if self.emap.len() != h.edge_count() || self.vmap.len() != h.vertex_count() {
            return Err(internal("partial replay does not cover the level graph"));
        }
        Ok(())
    }
}

impl Recognizer {
    fn top(&mut self, g: &Multigraph) -> Result<Verdict> {
        if let Some(reason) = scope(g) {
            return Ok(Verdict::OutOfScope(reason));
        }
        if !has_perfect_matching(g) {
            return Ok(Verdict::Reject(RejectReason::NotMatchable));
        }
        if g.vertex_count() == 6 && match_base(g).map(|(t, _)| t) == Some(BaseTag::W5) {
            return match cycle_nice_oracle(g, self.opts.cap)? {
                OracleVerdict::CycleNice => Ok(Verdict::AcceptOracle {
                    note: "simple support is W5; decided by exhaustive cycle check".into(),
                }),
                OracleVerdict::Witness(c) => Ok(Verdict::Reject(RejectReason::Witness(c))),
                OracleVerdict::NotMatchable => Ok(Verdict::Reject(RejectReason::NotMatchable)),
            };
        }
        match self.solve(g)? {
            Outcome::Built(b) => {
                check_built(g, &b)?;
                Ok(Verdict::Accept {
                    certificate: b.seq,
                    vertex_map: b.vmap,
                })
            }
            Outcome::Witness(c) => {
                if c.validate(g).is_ok() && c.is_even() && !nice_vertex_set(g, &c.vertices) {
                    Ok(Verdict::Reject(RejectReason::Witness(c.normalized())))
                } else {
                    self.stats.oracle_fallbacks += 1;
                    self.oracle_reject(g, "lifted cycle failed verification")
                }
            }
            Outcome::Inconclusive(why) => {
                self.stats.oracle_fallbacks += 1;
                self.oracle_reject(g, &why)
            }
        }
    }

    fn oracle_reject(&mut self, g: &Multigraph, why: &str) -> Result<Verdict> {
        match cycle_nice_oracle(g, self.opts.cap)? {
            OracleVerdict::Witness(c) => Ok(Verdict::Reject(RejectReason::Witness(c))),
            OracleVerdict::NotMatchable => Ok(Verdict::Reject(RejectReason::NotMatchable)),
            OracleVerdict::CycleNice => Err(internal(format!(
                "structural recursion failed ({why}) on a cycle-nice graph"
            ))),
        }
    }

    /// Bad cycle of `h` found by the oracle, for dead ends of the recursion.
    fn local_oracle(&mut self, h: &Multigraph, why: &str) -> Result<Outcome> {
        self.stats.oracle_fallbacks += 1;
        Ok(match cycle_nice_oracle(h, self.opts.cap)? {
            OracleVerdict::Witness(c) => Outcome::Witness(c),
            _ => Outcome::Inconclusive(why.to_string()),
        })
    }

    fn solve(&mut self, h: &Multigraph) -> Result<Outcome> {
        self.stats.levels += 1;
        let n = h.vertex_count();
        if n == 2 {
            if h.multiplicity(0, 1) < 2 {
                return Ok(Outcome::Inconclusive("single edge".into()));
            }
            let mut b = Built::base(h, BaseTag::EvenCycle { length: 2 }, vec![0, 1])?;
            b.finish(h)?;
            return Ok(Outcome::Built(b));
        }
        if !has_perfect_matching(h) {
            return Ok(Outcome::Inconclusive(
                "level graph has no perfect matching".into(),
            ));
        }
        for class in h.parallel_classes() {
            if class.multiplicity() >= 2 && !is_admissible_edge(h, class.representative())? {
                let (a, b) = class.endpoints;
                return Ok(Outcome::Witness(CycleSpec {
                    vertices: vec![a, b],
                    edge_ids: vec![class.edge_ids[0], class.edge_ids[1]],
                }));
            }
        }
        if let Some(order) = support_cycle_order(h) {
            if n % 2 == 1 {
                return Ok(Outcome::Inconclusive("odd cycle".into()));
            }
            let mut b = Built::base(h, BaseTag::EvenCycle { length: n }, order)?;
            b.finish(h)?;
            return Ok(Outcome::Built(b));
        }
        let cuts = match h.two_cuts() {
            Ok(c) => c,
            Err(_) => return Ok(Outcome::Inconclusive("level graph not 2-connected".into())),
        };
        if cuts.is_empty() {
            return match match_base(h) {
                Some((tag @ (BaseTag::K4 | BaseTag::C6bar), map)) => {
                    let mut b = Built::base(h, tag, map)?;
                    b.finish(h)?;
                    Ok(Outcome::Built(b))
                }
                _ => self.local_oracle(h, "3-connected graph outside the base family"),
            };
        }
        let mut first = None;
        let mut violations = 0;
        for cut in &cuts {
            self.stats.cuts_examined += 1;
            let comps = h.components(&[cut.u, cut.v]);
            if comps.len() == 2 {
                self.stats.two_component_cuts += 1;
                if first.is_none() {
                    first = Some((*cut, comps));
                }
            } else {
                self.stats.component_violations += 1;
                violations += 1;
            }
        }
        let Some((cut, comps)) = first else {
            return self.local_oracle(h, "no 2-cut with two components");
        };
        if violations > 0 {
            return self.local_oracle(h, "2-cut with more than two components");
        }
        let (u, v) = (cut.u, cut.v);
        let sides: Vec<Side> = comps.into_iter().map(|c| side_of(h, u, v, c)).collect();
        let uv_edge = h.has_edge(u, v);

        let path_side = match (&sides[0].path, &sides[1].path) {
            (None, None) => return self.neither_path(h, u, v, &sides),
            (Some(_), None) => 0,
            (None, Some(_)) => 1,
            (Some(a), Some(b)) => usize::from(b.len() > a.len()),
        };
        let other = 1 - path_side;
        let ell = sides[path_side].path.as_ref().unwrap().len();
        if ell % 2 == 1 {
            return self.via_marked_component(h, cut, &sides, path_side);
        }
        if uv_edge {
            if let (Some(p0), Some(p1)) = (&sides[0].path, &sides[1].path) {
                if p0.len() == 2 || p1.len() == 2 {
                    return self.quasi_diamond(h, u, v, &sides);
                }
                return self.local_oracle(h, "two long even sides joined by an edge");
            }
            // the uv edge closes an even cycle with an odd path of the
            // non-path side; the path side then keeps an odd interior
            let members = &sides[other].members;
            return Ok(match self.uv_path(h, u, v, members, 1) {
                Some(p) => Outcome::Witness(CycleSpec::from_vertices(h, &p)?),
                None => self.local_oracle(h, "no odd uv-path found")?,
            });
        }
        self.via_contraction(h, u, v, &sides, path_side)
    }

    fn neither_path(
        &mut self,
        h: &Multigraph,
        u: Vertex,
        v: Vertex,
        sides: &[Side],
    ) -> Result<Outcome> {
        self.stats.neither_path_rejections += 1;
        let parity = sides[0].members.len() % 2;
        let p1 = self.uv_path(h, u, v, &sides[0].members, parity);
        let p2 = self.uv_path(h, u, v, &sides[1].members, parity);
        if let (Some(p1), Some(mut p2)) = (p1, p2) {
            // u .. v along p1, then back to u along p2
            p2.reverse();
            let mut vs = p1;
            vs.extend(&p2[1..p2.len() - 1]);
            let c = CycleSpec::from_vertices(h, &vs)?;
            if c.is_even() && !nice_vertex_set(h, &c.vertices) {
                self.stats.neither_path_verified += 1;
                return Ok(Outcome::Witness(c));
            }
        }
        self.local_oracle(h, "parity paths not found")
    }

    /// A `u`–`v` path of length >= 2 with the given parity whose interior
    /// lies in `members`.
    fn uv_path(
        &self,
        h: &Multigraph,
        u: Vertex,
        v: Vertex,
        members: &[Vertex],
        parity: usize,
    ) -> Option<Vec<Vertex>> {
        let mut allowed = vec![false; h.vertex_count()];
        for &x in members {
            allowed[x] = true;
        }
        let mut path = vec![u];
        let mut budget = self.opts.path_budget;
        if dfs_path(h, v, &mut allowed, parity, &mut path, &mut budget) {
            Some(path)
        } else {
            None
        }
    }

    fn via_marked_component(
        &mut self,
        h: &Multigraph,
        cut: crate::multigraph::TwoCut,
        sides: &[Side],
        path_side: usize,
    ) -> Result<Outcome> {
        let path = sides[path_side].path.as_ref().unwrap();
        let marked = h.marked_k_components(cut)?;
        let part = &marked[1 - path_side];
        let origin: Vec<Vertex> = part.vertex_origin().into_iter().map(|o| o[0]).collect();
        let marker = part.graph.edge_count() - 1;
        match self.solve(&part.graph)? {
            Outcome::Witness(c1) => {
                let k = c1.len();
                let mut vs = Vec::new();
                let mut es = Vec::new();
                for i in 0..k {
                    let a = origin[c1.vertices[i]];
                    vs.push(a);
                    match part.edge_origin[c1.edge_ids[i]] {
                        Some(e) => es.push(e),
                        None => {
                            let (pv, pe) = path.starting_at(a);
                            vs.extend(&pv[1..pv.len() - 1]);
                            es.extend(pe);
                        }
                    }
                }
                Ok(Outcome::Witness(CycleSpec {
                    vertices: vs,
                    edge_ids: es,
                }))
            }
            Outcome::Built(b1) => {
                let r = b1
                    .emap
                    .iter()
                    .position(|&e| e == marker)
                    .ok_or_else(|| internal("marker edge missing from replay"))?;
                let mut b = Built {
                    vmap: b1.vmap.iter().map(|&x| origin[x]).collect(),
                    emap: b1
                        .emap
                        .iter()
                        .map(|&e| part.edge_origin[e].unwrap_or(usize::MAX))
                        .collect(),
                    seq: b1.seq,
                    graph: b1.graph,
                };
                let start = b.vmap[b.graph.edge(r)?.u];
                let (pv, pe) = path.starting_at(start);
                b.push(ConstructionStep::EvenSubdivision {
                    edge: r,
                    path_len: path.len(),
                })?;
                b.vmap.extend(&pv[1..pv.len() - 1]);
                b.emap[r] = pe[0];
                b.emap.extend(&pe[1..]);
                b.finish(h)?;
                Ok(Outcome::Built(b))
            }
            inconclusive => Ok(inconclusive),
        }
    }

    fn quasi_diamond(
        &mut self,
        h: &Multigraph,
        u: Vertex,
        v: Vertex,
        sides: &[Side],
    ) -> Result<Outcome> {
        let short = if sides[0].path.as_ref().unwrap().len() == 2 {
            0
        } else {
            1
        };
        let apex = sides[short].members[0];
        let (pv, pe) = sides[1 - short].path.as_ref().unwrap().starting_at(u);
        let len = pe.len();
        // diamond: 0 apex, 1 = u, 2 = v, 3 = last interior vertex before v;
        // its edge 3 (1-3) is subdivided into the rest of the long side
        let map = vec![apex, u, v, pv[len - 1]];
        let graph = BaseTag::Diamond.graph().unwrap();
        let rep = |a, b| {
            h.representative(a, b)
                .ok_or_else(|| internal("quasi-diamond edge missing"))
        };
        let mut b = Built {
            seq: ConstructionSequence::new(BaseTag::Diamond),
            emap: vec![rep(apex, u)?, rep(apex, v)?, rep(u, v)?, pe[0], pe[len - 1]],
            vmap: map,
            graph,
        };
        if len > 2 {
            b.push(ConstructionStep::EvenSubdivision {
                edge: 3,
                path_len: len - 1,
            })?;
            b.vmap.extend(&pv[1..len - 1]);
            b.emap.extend(&pe[1..len - 1]);
        }
        b.finish(h)?;
        Ok(Outcome::Built(b))
    }

    fn via_contraction(
        &mut self,
        h: &Multigraph,
        u: Vertex,
        v: Vertex,
        sides: &[Side],
        path_side: usize,
    ) -> Result<Outcome> {
        let path = sides[path_side].path.as_ref().unwrap();
        // An even cycle through u and v on the other side strands the odd
        // interior of the path.
        match even_cycle_through(h, u, v, &sides[path_side].members, self.opts.path_budget) {
            Ok(Some(c)) => return Ok(Outcome::Witness(c)),
            Ok(None) => {}
            Err(Error::CapExceeded(_)) => {
                return Ok(Outcome::Inconclusive(
                    "even uv-cycle search exhausted".into(),
                ))
            }
            Err(e) => return Err(e),
        }
        let mut set = sides[path_side].members.clone();
        set.push(u);
        set.push(v);
        let part = h.contract(&set)?;
        let x1 = part.vertex_map[u].unwrap();
        let origin: Vec<Vertex> = part
            .vertex_origin()
            .into_iter()
            .enumerate()
            .map(|(i, o)| if i == x1 { u } else { o[0] })
            .collect();
        let eorigin = |e: EdgeId| part.edge_origin[e].expect("contraction keeps all edges");
        // which of u, v an edge at x1 really ends in
        let end_at = |e: EdgeId| {
            let edge = h.edges()[e];
            if edge.touches(u) {
                u
            } else {
                v
            }
        };
        match self.solve(&part.graph)? {
            Outcome::Witness(c1) => {
                let k = c1.len();
                let Some(pos) = c1.vertices.iter().position(|&x| x == x1) else {
                    return Ok(Outcome::Witness(CycleSpec {
                        vertices: c1.vertices.iter().map(|&x| origin[x]).collect(),
                        edge_ids: c1.edge_ids.iter().map(|&e| eorigin(e)).collect(),
                    }));
                };
                // rotate so that x1 comes first
                let vs: Vec<Vertex> = (0..k).map(|i| c1.vertices[(pos + i) % k]).collect();
                let es: Vec<EdgeId> = (0..k)
                    .map(|i| eorigin(c1.edge_ids[(pos + i) % k]))
                    .collect();
                let s1 = end_at(es[0]);
                let s2 = end_at(es[k - 1]);
                let mut vertices = vec![s1];
                vertices.extend(vs[1..].iter().map(|&x| origin[x]));
                let mut edge_ids = es;
                if s1 != s2 {
                    let (pv, pe) = path.starting_at(s2);
                    vertices.push(s2);
                    vertices.extend(&pv[1..pv.len() - 1]);
                    edge_ids.extend(pe);
                }
                Ok(Outcome::Witness(CycleSpec { vertices, edge_ids }))
            }
            Outcome::Built(b1) => {
                let r = b1
                    .vmap
                    .iter()
                    .position(|&x| x == x1)
                    .ok_or_else(|| internal("contracted vertex missing from replay"))?;
                let mut b = Built {
                    vmap: b1.vmap.iter().map(|&x| origin[x]).collect(),
                    emap: b1.emap.iter().map(|&e| eorigin(e)).collect(),
                    seq: b1.seq,
                    graph: b1.graph,
                };
                let mut side_a = Vec::new();
                let mut side_b = Vec::new();
                let mut at_r: Vec<EdgeId> = b.graph.incident(r).iter().map(|&(_, e)| e).collect();
                at_r.sort_unstable();
                for e in at_r {
                    if end_at(b.emap[e]) == u {
                        side_a.push(e);
                    } else {
                        side_b.push(e);
                    }
                }
                let (pv, pe) = path.starting_at(u);
                b.push(ConstructionStep::OddLExpansion {
                    vertex: r,
                    side_a,
                    side_b,
                    path_len: path.len(),
                })?;
                b.vmap.push(v);
                b.vmap.extend(&pv[1..pv.len() - 1]);
                b.emap.extend(pe);
                b.finish(h)?;
                Ok(Outcome::Built(b))
            }
            inconclusive => Ok(inconclusive),
        }
    }
}

/// Builds the side record for one component of `h - {u, v}`.
fn side_of(h: &Multigraph, u: Vertex, v: Vertex, members: Vec<Vertex>) -> Side {
    let mut inside = vec![false; h.vertex_count()];
    for &x in &members {
        inside[x] = true;
    }
    // support degrees inside the side, ignoring uv edges
    let nbrs = |x: Vertex| -> Vec<Vertex> {
        h.neighbors(x)
            .filter(|&y| inside[y] || (inside[x] && (y == u || y == v)))
            .collect()
    };
    let is_path =
        members.iter().all(|&x| nbrs(x).len() == 2) && nbrs(u).len() == 1 && nbrs(v).len() == 1;
    let path = is_path.then(|| {
        let mut vertices = vec![u];
        let mut prev = u;
        let mut cur = nbrs(u)[0];
        while cur != v {
            vertices.push(cur);
            let next = nbrs(cur).into_iter().find(|&y| y != prev).unwrap();
            prev = cur;
            cur = next;
        }
        vertices.push(v);
        vertices
    });
    let path = path
        .filter(|p| p.len() == members.len() + 2)
        .map(|vertices| {
            let edges = vertices
                .windows(2)
                .map(|w| h.representative(w[0], w[1]).unwrap())
                .collect();
            SidePath { vertices, edges }
        });
    Side { members, path }
}

fn dfs_path(
    h: &Multigraph,
    target: Vertex,
    allowed: &mut [bool],
    parity: usize,
    path: &mut Vec<Vertex>,
    budget: &mut usize,
) -> bool {
    if *budget == 0 {
        return false;
    }
    *budget -= 1;
    let x = *path.last().unwrap();
    for y in h.neighbors(x) {
        if y == target {
            let len = path.len();
            if len >= 2 && len % 2 == parity {
                path.push(y);
                return true;
            }
        } else if allowed[y] {
            allowed[y] = false;
            path.push(y);
            if dfs_path(h, target, allowed, parity, path, budget) {
                return true;
            }
            path.pop();
            allowed[y] = true;
        }
    }
    false
}

/// Full consistency check of a top-level certificate: validated replay
/// reproduces the partial graph, and the maps form an isomorphism.
fn check_built(g: &Multigraph, b: &Built) -> Result<()> {
    let replayed =
        replay(&b.seq).map_err(|e| internal(format!("certificate does not replay: {e}")))?;
    if replayed != b.graph {
        return Err(internal("replay differs from the tracked graph"));
    }
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    for &x in &b.vmap {
        if x >= n || seen[x] {
            return Err(internal("vertex map is not a bijection"));
        }
        seen[x] = true;
    }
    let mut seen = vec![false; g.edge_count()];
    for (i, &e) in b.emap.iter().enumerate() {
        if e >= g.edge_count() || seen[e] {
            return Err(internal("edge map is not a bijection"));
        }
        seen[e] = true;
        let re = replayed.edges()[i];
        let (a, c) = (b.vmap[re.u], b.vmap[re.v]);
        if g.edges()[e].key() != (a.min(c), a.max(c)) {
            return Err(internal("edge map disagrees with vertex map"));
        }
    }
    if b.vmap.len() != n || b.emap.len() != g.edge_count() {
        return Err(internal("maps are incomplete"));
    }
    Ok(())
}
