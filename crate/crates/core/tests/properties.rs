mod common;

use cyclenice::canon::{canonical_form, is_isomorphic};
use cyclenice::cycles::{
    cycle_nice_oracle, ear_decomposition, enumerate_even_cycles, is_nice_cycle, CycleSpec,
    OracleVerdict,
};
use cyclenice::generator::{connected_graphs, generate, GenConfig};
use cyclenice::io::{from_graph6, parse_edge_list, to_graph6, write_edge_list};
use cyclenice::matching::{
    has_perfect_matching, is_admissible_edge, is_matching_covered, is_nice_subgraph,
    maximum_matching,
};
use cyclenice::multigraph::named;
use cyclenice::operations::{
    apply_step, apply_step_with, replay, suppress_path, ConstructionStep, Mode,
};
use cyclenice::predicates::{identify_base, is_claw_free, is_planar};
use cyclenice::recognizer::{recognize, RejectReason, Verdict};
use cyclenice::{Error, Multigraph};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const CAP: usize = 1_000_000;

fn arb_graph(max_n: usize, max_m: usize) -> impl Strategy<Value = Multigraph> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 0..=max_m).prop_map(move |pairs| {
            Multigraph::new(n, pairs.into_iter().filter(|(u, v)| u != v)).unwrap()
        })
    })
}

/// A 2-connected graph: a Hamiltonian cycle plus random chords and copies.
fn arb_two_connected(max_n: usize, max_extra: usize) -> impl Strategy<Value = Multigraph> {
    (3..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 0..=max_extra).prop_map(move |extra| {
            let mut pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            pairs.extend(extra.into_iter().filter(|(u, v)| u != v));
            Multigraph::new(n, pairs).unwrap()
        })
    })
}

fn arb_generated(
    max_vertices: usize,
    claw_free_planar: bool,
) -> impl Strategy<
    Value = (
        Multigraph,
        Vec<ConstructionStep>,
        cyclenice::predicates::BaseTag,
    ),
> {
    (any::<u64>(), 0usize..5).prop_filter_map("generator stuck", move |(seed, ops)| {
        let cfg = GenConfig {
            n_ops: ops,
            seed,
            require_claw_free_planar: claw_free_planar,
            max_vertices: Some(max_vertices),
            ..GenConfig::default()
        };
        generate(&cfg).ok().map(|(g, seq)| (g, seq.steps, seq.base))
    })
}

fn sides_from_mask(g: &Multigraph, v: usize, mask: u64) -> Option<(Vec<usize>, Vec<usize>)> {
    let inc: Vec<usize> = g.incident(v).iter().map(|&(_, e)| e).collect();
    let in_a = |i: usize| mask >> (i % 64) & 1 == 1;
    let a: Vec<usize> = (0..inc.len())
        .filter(|&i| in_a(i))
        .map(|i| inc[i])
        .collect();
    let b: Vec<usize> = (0..inc.len())
        .filter(|&i| !in_a(i))
        .map(|i| inc[i])
        .collect();
    (!a.is_empty() && !b.is_empty()).then_some((a, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn maximum_matching_is_optimal(g in arb_graph(10, 20)) {
        let adj = common::adjacency(&g);
        let best = common::max_matching_size(&adj, common::all_vertices(g.vertex_count()));
        let m = maximum_matching(&g);
        prop_assert!(m.is_valid_in(&g));
        prop_assert_eq!(m.len(), best);
        prop_assert_eq!(has_perfect_matching(&g), 2 * best == g.vertex_count());
    }

    #[test]
    fn admissibility_matches_enumeration(g in arb_graph(8, 14)) {
        let pms = common::perfect_matchings(&g);
        for e in 0..g.edge_count() {
            let expected = pms.iter().any(|m| m.contains(&e));
            prop_assert_eq!(is_admissible_edge(&g, e).unwrap(), expected, "edge {}", e);
        }
        let covered = g.is_connected()
            && !pms.is_empty()
            && (0..g.edge_count()).all(|e| pms.iter().any(|m| m.contains(&e)));
        prop_assert_eq!(is_matching_covered(&g), covered);
    }

    #[test]
    fn nice_subgraph_matches_brute_force(g in arb_graph(9, 16), mask in any::<u32>()) {
        let n = g.vertex_count();
        let del: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let alive = common::all_vertices(n) & !(mask & common::all_vertices(n));
        prop_assert_eq!(
            is_nice_subgraph(&g, &del).unwrap(),
            common::has_pm(&common::adjacency(&g), alive)
        );
    }

    #[test]
    fn claw_freeness_matches_brute_force(g in arb_graph(9, 18)) {
        prop_assert_eq!(is_claw_free(&g), common::claw_free(&g));
    }

    #[test]
    fn oracle_matches_brute_force(g in arb_graph(8, 14)) {
        let expected = common::cycle_nice(&g);
        let got = cycle_nice_oracle(&g, CAP).unwrap();
        match (&got, expected) {
            (OracleVerdict::NotMatchable, None) | (OracleVerdict::CycleNice, Some(true)) => {}
            (OracleVerdict::Witness(c), Some(false)) => {
                prop_assert!(c.is_even());
                prop_assert!(!is_nice_cycle(&g, c).unwrap());
            }
            _ => prop_assert!(false, "oracle {:?}, brute force {:?}", got, expected),
        }
    }

    #[test]
    fn even_cycles_are_valid_and_distinct(g in arb_graph(7, 12)) {
        let cycles = enumerate_even_cycles(&g, CAP).unwrap();
        let mut seen = std::collections::HashSet::new();
        for c in &cycles {
            c.validate(&g).unwrap();
            prop_assert!(c.is_even());
            prop_assert_eq!(&c.normalized(), c);
            prop_assert!(seen.insert(c.clone()));
        }
    }

    #[test]
    fn connectivity_matches_brute_force(g in arb_graph(8, 16)) {
        for k in 2..=3 {
            if g.vertex_count() > k {
                prop_assert_eq!(g.is_k_connected(k), common::k_connected(&g, k), "k = {}", k);
            }
        }
    }

    #[test]
    fn two_cuts_vanish_exactly_when_three_connected(g in arb_two_connected(8, 10)) {
        prop_assume!(g.vertex_count() >= 4);
        let cuts = g.two_cuts().unwrap();
        prop_assert_eq!(cuts.is_empty(), common::k_connected(&g, 3));
        for cut in cuts {
            prop_assert!(!common::connected_without(&g, &[cut.u, cut.v]));
        }
    }

    #[test]
    fn marked_components_are_two_connected(g in arb_two_connected(9, 8)) {
        for cut in g.two_cuts().unwrap() {
            for part in g.marked_k_components(cut).unwrap() {
                prop_assert!(part.graph.is_k_connected(2) || part.graph.vertex_count() == 3 && part.graph.edge_count() >= 3);
                prop_assert!(common::connected_without(&part.graph, &[]));
            }
        }
    }

    #[test]
    fn relabelling_preserves_invariants(g in arb_graph(8, 14), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let perm = common::random_permutation(g.vertex_count(), &mut rng);
        let h = common::relabel(&g, &perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert!(is_isomorphic(&g, &h));
        prop_assert_eq!(identify_base(&g), identify_base(&h));
        prop_assert_eq!(is_claw_free(&g), is_claw_free(&h));
        prop_assert_eq!(is_planar(&g), is_planar(&h));
    }

    #[test]
    fn planar_graphs_obey_the_edge_bound(g in arb_graph(10, 30)) {
        let n = g.vertex_count();
        let m = g.underlying_simple().edge_count();
        if is_planar(&g) && n >= 3 {
            prop_assert!(m <= 3 * n - 6);
        }
    }

    #[test]
    fn planarity_is_closed_under_edge_deletion(g in arb_graph(9, 24), pick in any::<usize>()) {
        prop_assume!(g.edge_count() > 0);
        let e = pick % g.edge_count();
        let pairs: Vec<(usize, usize)> = g.edges().iter().enumerate()
            .filter(|&(i, _)| i != e).map(|(_, x)| (x.u, x.v)).collect();
        let h = Multigraph::new(g.vertex_count(), pairs).unwrap();
        if is_planar(&g) {
            prop_assert!(is_planar(&h));
        }
        // subdividing an edge never changes planarity
        let s = apply_step_with(&g, &ConstructionStep::EvenSubdivision { edge: e, path_len: 3 }, Mode::Raw).unwrap();
        prop_assert_eq!(is_planar(&s), is_planar(&g));
    }

    #[test]
    fn subdivision_preserves_the_verdict(g in arb_graph(7, 12), pick in any::<usize>(), half in 1usize..3) {
        prop_assume!(g.edge_count() > 0);
        let e = pick % g.edge_count();
        let path_len = 2 * half + 1;
        let before = cycle_nice_oracle(&g, CAP).unwrap();
        let s = apply_step(&g, &ConstructionStep::EvenSubdivision { edge: e, path_len }).unwrap();
        let after = cycle_nice_oracle(&s, CAP).unwrap();
        prop_assert_eq!(before.class(), after.class());
        // suppressing the new path restores the graph with `e` moved last
        let edge = g.edges()[e];
        let n = g.vertex_count();
        let mut path = vec![edge.u];
        path.extend(n..n + path_len - 1);
        path.push(edge.v);
        let back = suppress_path(&s, &path).unwrap();
        let mut keys = g.edge_keys();
        let moved = keys.remove(e);
        keys.push(moved);
        prop_assert_eq!(back.edge_keys(), keys);
    }

    #[test]
    fn expansion_claws_come_from_the_input(g in arb_two_connected(7, 6), v in any::<usize>(), mask in any::<u64>(), half in 1usize..3, bridge in 0usize..2) {
        let v = v % g.vertex_count();
        let Some((side_a, side_b)) = sides_from_mask(&g, v, mask) else { return Ok(()) };
        let step = if bridge == 0 {
            ConstructionStep::OddLExpansion { vertex: v, side_a, side_b, path_len: 2 * half }
        } else {
            ConstructionStep::OddAExpansion { vertex: v, side_a, side_b, path_len: 2 * half, bridge_mult: bridge }
        };
        let h = apply_step_with(&g, &step, Mode::Raw).unwrap();
        if is_claw_free(&h) {
            prop_assert!(is_claw_free(&g));
        }
    }

    #[test]
    fn subdivision_claws_come_from_the_input(g in arb_two_connected(8, 8), pick in any::<usize>()) {
        let e = pick % g.edge_count();
        let h = apply_step(&g, &ConstructionStep::EvenSubdivision { edge: e, path_len: 3 }).unwrap();
        if is_claw_free(&h) {
            prop_assert!(is_claw_free(&g));
        }
    }

    /// A validated odd L-expansion of a cycle-nice graph is cycle-nice, and a
    /// rejected one is not.
    #[test]
    fn validated_expansion_decides_niceness((g, _, _) in arb_generated(10, false), v in any::<usize>(), mask in any::<u64>(), half in 1usize..3) {
        prop_assume!(cycle_nice_oracle(&g, CAP).unwrap() == OracleVerdict::CycleNice);
        let v = v % g.vertex_count();
        let Some((side_a, side_b)) = sides_from_mask(&g, v, mask) else { return Ok(()) };
        let step = ConstructionStep::OddLExpansion { vertex: v, side_a, side_b, path_len: 2 * half };
        let raw = apply_step_with(&g, &step, Mode::Raw).unwrap();
        let raw_nice = cycle_nice_oracle(&raw, CAP).unwrap() == OracleVerdict::CycleNice;
        match apply_step(&g, &step) {
            Ok(h) => {
                prop_assert_eq!(&h, &raw);
                prop_assert!(raw_nice);
            }
            Err(Error::SplitCycle(_)) => prop_assert!(!raw_nice),
            Err(e) => prop_assert!(false, "unexpected {}", e),
        }
    }

    #[test]
    fn replay_follows_step_arithmetic((g, steps, base) in arb_generated(24, false)) {
        let mut h = cyclenice::operations::base_graph(base).unwrap();
        for step in &steps {
            let (dn, dm) = match step {
                ConstructionStep::EvenSubdivision { path_len, .. } => (path_len - 1, path_len - 1),
                ConstructionStep::OddLExpansion { path_len, .. } => (*path_len, *path_len),
                ConstructionStep::OddAExpansion { path_len, bridge_mult, .. } => (*path_len, path_len + bridge_mult),
                ConstructionStep::MultiEdgeReplace { edge, multiplicity } => {
                    let e = h.edges()[*edge];
                    (0, multiplicity - h.multiplicity(e.u, e.v))
                }
            };
            let next = apply_step(&h, step).unwrap();
            prop_assert_eq!(next.vertex_count(), h.vertex_count() + dn);
            prop_assert_eq!(next.edge_count(), h.edge_count() + dm);
            h = next;
        }
        prop_assert_eq!(h, g);
    }

    #[test]
    fn generated_graphs_are_nice_and_in_scope((g, steps, base) in arb_generated(14, true)) {
        prop_assert!(g.is_k_connected(2) || g.vertex_count() == 2);
        prop_assert!(is_claw_free(&g));
        prop_assert!(is_planar(&g));
        let seq = cyclenice::operations::ConstructionSequence { base, steps };
        prop_assert_eq!(replay(&seq).unwrap(), g.clone());
        prop_assert_eq!(cycle_nice_oracle(&g, CAP).unwrap(), OracleVerdict::CycleNice);
        let json = seq.to_json();
        prop_assert_eq!(cyclenice::operations::ConstructionSequence::from_json(&json).unwrap(), seq);
    }

    #[test]
    fn recognizer_is_sound_and_complete(g in arb_two_connected(8, 6)) {
        let v = recognize(&g).unwrap();
        if matches!(v, Verdict::OutOfScope(_)) {
            return Ok(());
        }
        let expected = common::cycle_nice(&g);
        prop_assert_eq!(v.is_accept(), expected == Some(true), "{:?}", v);
        match v {
            Verdict::Accept { certificate, vertex_map } => {
                let h = replay(&certificate).unwrap();
                prop_assert!(is_isomorphic(&h, &g));
                let image = common::relabel(&h, &vertex_map);
                prop_assert!(is_isomorphic(&image, &g));
                let mut a = image.edge_keys();
                let mut b = g.edge_keys();
                a.sort();
                b.sort();
                prop_assert_eq!(a, b);
            }
            Verdict::Reject(RejectReason::Witness(c)) => {
                prop_assert!(c.is_even());
                prop_assert!(!is_nice_cycle(&g, &c).unwrap());
            }
            Verdict::Reject(RejectReason::NotMatchable) => prop_assert_eq!(expected, None),
            _ => {}
        }
    }

    #[test]
    fn formats_round_trip(g in arb_graph(12, 24)) {
        let text = write_edge_list(&g);
        prop_assert_eq!(parse_edge_list(&text).unwrap().to_multigraph().unwrap(), g.clone());
        let s = g.underlying_simple();
        let back = from_graph6(&to_graph6(&s).unwrap()).unwrap();
        let mut a = back.edge_keys();
        let mut b = s.edge_keys();
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn ear_decompositions_are_valid((g, _, _) in arb_generated(12, true)) {
        prop_assume!(is_matching_covered(&g));
        let start = enumerate_even_cycles(&g, CAP).unwrap().into_iter()
            .find(|c| c.len() >= 4 && is_nice_cycle(&g, c).unwrap());
        let Some(start) = start else { return Ok(()) };
        match ear_decomposition(&g, &start, 100_000) {
            Ok(d) => d.validate(&g).unwrap(),
            Err(Error::BudgetExceeded(_)) => {}
            Err(e) => prop_assert!(false, "unexpected {}", e),
        }
    }
}

#[test]
fn connected_graph_counts_match_brute_force() {
    for n in 1..=6 {
        assert_eq!(
            connected_graphs(n).len(),
            common::connected_class_count(n),
            "n = {n}"
        );
    }
}

#[test]
fn connected_graph_counts_match_known_values() {
    // connected simple graphs, and the planar ones among them
    let connected = [1, 1, 2, 6, 21, 112, 853];
    let planar = [1, 1, 2, 6, 20, 99, 646];
    for n in 1..=7 {
        let gs = connected_graphs(n);
        assert_eq!(gs.len(), connected[n - 1], "n = {n}");
        assert_eq!(
            gs.iter().filter(|g| is_planar(g)).count(),
            planar[n - 1],
            "n = {n}"
        );
    }
}

#[test]
#[ignore = "enumerates all 11117 connected graphs on 8 vertices"]
fn connected_graph_counts_on_eight_vertices() {
    let gs = connected_graphs(8);
    assert_eq!(gs.len(), 11117);
    assert_eq!(gs.iter().filter(|g| is_planar(g)).count(), 5974);
}

#[test]
fn kuratowski_graphs_are_not_planar() {
    assert!(!is_planar(&named::complete(5)));
    let k33 = Multigraph::new(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap();
    assert!(!is_planar(&k33));
    assert!(!is_planar(&named::petersen()));
    assert!(is_planar(&named::w5()));
}

#[test]
fn witness_cycles_come_from_the_graph() {
    let g = named::c6_two_chords();
    let c = CycleSpec::from_vertices(&g, &[0, 2, 3, 5]).unwrap();
    assert!(!is_nice_cycle(&g, &c).unwrap());
}
