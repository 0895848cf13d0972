#![allow(clippy::needless_range_loop)]

mod common;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::*;
use resdim::extremal::{enumerate_connected, extremal_difference, GraphSource};
use resdim::families::{
    family_strict, family_weak, is_doubly_resolving, mixed_pair_family, w_sets,
};
use resdim::hitting::{
    greedy_hitting, min_hitting_cardinality, min_hitting_exact, min_hitting_exact_with,
    HittingInstance, SolverOptions,
};
use resdim::{all_pairs_distances, Graph, InvariantTag, Prepared, SetFamily, VertexSet};

fn all_small_graphs(max_n: usize) -> impl Iterator<Item = Graph> {
    (2..=max_n).flat_map(|n| enumerate_connected(n).unwrap())
}

#[test]
fn solver_matches_subset_enumeration() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0001);
    for _ in 0..300 {
        let (n, lists) = random_instance(&mut rng);
        let inst = HittingInstance::new(SetFamily::from_lists(n, &lists).unwrap()).unwrap();
        let masks: Vec<u64> = lists.iter().map(|l| to_mask(l)).collect();
        let expected = brute_hitting(n, &masks).unwrap();
        for reductions in [true, false] {
            let sol = min_hitting_exact_with(&inst, SolverOptions { reductions }).unwrap();
            assert_eq!(
                sol.set.bits(),
                expected,
                "instance {lists:?}, reductions {reductions}"
            );
            assert_eq!(
                min_hitting_cardinality(&inst, SolverOptions { reductions }).unwrap(),
                expected.count_ones() as usize
            );
        }
        let greedy = greedy_hitting(&inst).unwrap();
        assert!(masks.iter().all(|&s| s & greedy.bits() != 0));
        assert!(expected.count_ones() as usize <= greedy.len());
    }
}

#[test]
fn invariants_match_definitions_exhaustively() {
    for g in all_small_graphs(5) {
        let p = Prepared::new(&g).unwrap();
        let got = |t| p.result(t).unwrap().value;
        assert_eq!(got(InvariantTag::Beta), brute_beta(&g), "{g:?}");
        assert_eq!(got(InvariantTag::BetaE), brute_beta_e(&g), "{g:?}");
        assert_eq!(got(InvariantTag::BetaM), brute_beta_m(&g), "{g:?}");
        assert_eq!(got(InvariantTag::Psi), brute_psi(&g), "{g:?}");
        assert_eq!(got(InvariantTag::MhsStrict), brute_mhs(&g, false), "{g:?}");
        assert_eq!(got(InvariantTag::MhsWeak), brute_mhs(&g, true), "{g:?}");
    }
}

#[test]
fn invariants_match_definitions_on_random_graphs() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0002);
    for _ in 0..60 {
        let n = rng.gen_range(6..=8);
        let g = {
            let p = rng.gen_range(0.0..0.6);
            random_connected(&mut rng, n, p)
        };
        let p = Prepared::new(&g).unwrap();
        let got = |t| p.result(t).unwrap().value;
        assert_eq!(got(InvariantTag::Beta), brute_beta(&g), "{g:?}");
        assert_eq!(got(InvariantTag::BetaE), brute_beta_e(&g), "{g:?}");
        assert_eq!(got(InvariantTag::BetaM), brute_beta_m(&g), "{g:?}");
        assert_eq!(got(InvariantTag::Psi), brute_psi(&g), "{g:?}");
        assert_eq!(got(InvariantTag::MhsWeak), brute_mhs(&g, true), "{g:?}");
    }
}

#[test]
fn distance_matrix_invariants() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0003);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=10);
        let g = {
            let p = rng.gen_range(0.0..0.5);
            random_connected(&mut rng, n, p)
        };
        let d = all_pairs_distances(&g).unwrap();
        let fw = floyd_warshall(&g);
        for u in 0..n {
            assert_eq!(d.get(u, u), 0);
            for v in 0..n {
                assert_eq!(d.get(u, v), fw[u][v]);
                assert_eq!(d.get(u, v), d.get(v, u));
                assert_eq!(d.get(u, v) == 1, g.has_edge(u, v));
                for w in 0..n {
                    assert!(d.get(u, w) <= d.get(u, v) + d.get(v, w));
                }
            }
        }
    }
}

#[test]
fn enumeration_counts_match_union_find_filter() {
    for n in 2..=5 {
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let expected = (0..1u64 << pairs.len())
            .filter(|&m| {
                let chosen: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| m >> k & 1 == 1)
                    .map(|(_, &p)| p)
                    .collect();
                connected_by_union_find(n, &chosen)
            })
            .count();
        assert_eq!(enumerate_connected(n).unwrap().count(), expected, "n={n}");
    }
}

#[test]
fn w_set_identities_and_family_shapes() {
    let mut graphs: Vec<Graph> = all_small_graphs(6).collect();
    let mut rng = StdRng::seed_from_u64(0x5eed_0004);
    graphs.extend((0..200).map(|_| {
        let n = rng.gen_range(2..=12);
        {
            let p = rng.gen_range(0.0..0.5);
            random_connected(&mut rng, n, p)
        }
    }));
    for g in &graphs {
        let n = g.order();
        let d = all_pairs_distances(g).unwrap();
        let all = VertexSet::full(n);
        for e in g.edges() {
            let w = w_sets(&d, e.u, e.v).unwrap();
            assert!(!w.w_uv.intersects(&w.w_vu));
            assert!(w.w_uv.contains(e.u) && w.w_vu.contains(e.v));
            assert!(w.w_vu.is_subset(&w.wbar_uv) && w.w_uv.is_subset(&w.wbar_vu));
            assert_eq!(w.wbar_uv.union(&w.wbar_vu), all);
            assert_eq!(w.equidistant, w.wbar_uv.difference(&w.w_vu));
            assert_eq!(w.equidistant, w.wbar_vu.difference(&w.w_uv));
        }
        let strict = family_strict(g, &d).unwrap();
        let weak = family_weak(g, &d).unwrap();
        assert_eq!(strict.len(), 2 * g.size());
        assert_eq!(weak.len(), 2 * g.size());
        assert!(strict
            .sets()
            .iter()
            .chain(weak.sets())
            .all(|s| !s.is_empty()));
        if n <= 6 {
            assert!(mixed_pair_family(g, &d)
                .unwrap()
                .sets()
                .iter()
                .all(|s| !s.is_empty()));
            assert!(is_doubly_resolving(&d, &all));
        }
    }
}

#[test]
fn witnesses_are_deterministic() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0005);
    for _ in 0..50 {
        let g = random_connected(&mut rng, 9, 0.3);
        for tag in InvariantTag::ALL {
            let a = Prepared::new(&g).unwrap().result(tag).unwrap();
            let b = Prepared::new(&g).unwrap().result(tag).unwrap();
            assert_eq!(a, b);
        }
        let fam = family_weak(&g, &all_pairs_distances(&g).unwrap()).unwrap();
        let inst = HittingInstance::new(fam).unwrap();
        assert_eq!(
            min_hitting_exact(&inst).unwrap(),
            min_hitting_exact(&inst).unwrap()
        );
    }
}

#[test]
fn extremal_witnesses_reverify() {
    let src = GraphSource::builtin(5).unwrap();
    for (a, b) in [
        (InvariantTag::MhsStrict, InvariantTag::MhsWeak),
        (InvariantTag::BetaM, InvariantTag::MhsStrict),
        (InvariantTag::Psi, InvariantTag::BetaE),
        (InvariantTag::Beta, InvariantTag::BetaE),
    ] {
        let rep = extremal_difference(a, b, &src).unwrap();
        assert!(rep.reverify().unwrap(), "{rep:?}");
        assert_eq!(rep.graphs_scanned, 728);
    }
}
