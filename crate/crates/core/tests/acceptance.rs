//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

mod common;

use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::{brute_hitting, random_connected, random_instance, to_mask};
use resdim::closed_forms::Family;
use resdim::extremal::{enumerate_connected, verify_source, GraphSource};
use resdim::families::{edge_pair_family, w_sets};
use resdim::graph::{complete, complete_bipartite, cycle, path, star, t_prime_tree};
use resdim::hitting::{min_hitting_exact_with, verify_hitting, HittingInstance, SolverOptions};
use resdim::invariants::{ceil_log2, hits_every_weak_pair};
use resdim::{parse_graph6, write_graph6, Graph, InvariantTag, Prepared, SetFamily, VertexSet};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:.2?}, limit {limit:?}"))
}

fn value(g: &Graph, tag: InvariantTag) -> usize {
    Prepared::new(g).unwrap().result(tag).unwrap().value
}

/// Graphs seen by criteria 1–7, collected for the graph6 check.
#[derive(Default)]
struct Seen(Vec<Graph>);

fn criterion_1(seen: &mut Seen) -> Outcome {
    let start = Instant::now();
    let mut rows = Vec::new();
    for n in 2..=10 {
        rows.push((path(n).unwrap(), 2, 2));
    }
    for n in 3..=10 {
        rows.push((star(n).unwrap(), n - 1, n - 1));
        rows.push((complete(n).unwrap(), n, 2));
    }
    for m in 2..=8 {
        rows.push((complete_bipartite(2, m).unwrap(), 2, 2));
    }
    for (g, strict, weak) in &rows {
        let got = (
            value(g, InvariantTag::MhsStrict),
            value(g, InvariantTag::MhsWeak),
        );
        ensure(got == (*strict, *weak), || {
            format!(
                "{} gave mhs_strict/mhs_weak {got:?}, expected ({strict}, {weak})",
                write_graph6(g)
            )
        })?;
    }
    within(Duration::from_secs(5), start)?;
    let count = rows.len();
    seen.0.extend(rows.into_iter().map(|r| r.0));
    Ok(format!("{count} family members match"))
}

fn criterion_2(seen: &mut Seen) -> Outcome {
    let start = Instant::now();
    let mut cases: Vec<(Graph, usize)> = Vec::new();
    for n in 2..=9 {
        cases.push((complete(n).unwrap(), (n - 1).max(2)));
    }
    for n in 3..=10 {
        cases.push((cycle(n).unwrap(), if n % 2 == 1 { 2 } else { 3 }));
    }
    for n in 3..=9 {
        let g = star(n).unwrap();
        let leaves = g.leaf_count();
        cases.push((g, leaves));
    }
    for n in 4..=12 {
        let g = t_prime_tree(n).unwrap();
        ensure(g.leaf_count() == n / 2 + 1, || {
            format!("T'_{n} has {} leaves", g.leaf_count())
        })?;
        let leaves = g.leaf_count();
        cases.push((g, leaves));
    }
    for (g, expected) in &cases {
        let got = value(g, InvariantTag::Psi);
        ensure(got == *expected, || {
            format!("psi({}) = {got}, expected {expected}", write_graph6(g))
        })?;
    }
    within(Duration::from_secs(60), start)?;
    let count = cases.len();
    seen.0.extend(cases.into_iter().map(|c| c.0));
    Ok(format!("{count} graphs match"))
}

fn criterion_3() -> Outcome {
    use InvariantTag::*;
    let start = Instant::now();
    let mut summary = Vec::new();
    for n in 3..=7usize {
        let report = verify_source(&GraphSource::builtin(n).unwrap()).map_err(|e| e.to_string())?;
        let diff = |a, b| {
            report
                .extremal
                .iter()
                .find(|r| r.xi1 == a && r.xi2 == b)
                .map(|r| r.max_diff)
                .unwrap()
        };
        let n_i = n as i64;
        let exact = [
            ((MhsWeak, Psi), 0),
            ((Psi, MhsWeak), n_i - 3),
            ((MhsWeak, MhsStrict), 0),
            ((MhsStrict, MhsWeak), n_i - 2),
            ((MhsStrict, BetaM), 0),
            ((BetaM, MhsStrict), n_i - 3),
        ];
        for ((a, b), expected) in exact {
            let got = diff(a, b);
            ensure(got == expected, || {
                format!("({a} - {b})({n}) = {got}, expected {expected}")
            })?;
        }
        let pb = diff(Psi, BetaE);
        if n == 3 {
            ensure(pb == 1, || format!("(psi - beta_E)(3) = {pb}"))?;
            let bp = diff(BetaE, Psi);
            ensure(bp == 0, || format!("(beta_E - psi)(3) = {bp}"))?;
        } else {
            let (lo, hi) = (n_i / 2 - 1, n_i - 3);
            ensure((lo..=hi).contains(&pb), || {
                format!("(psi - beta_E)({n}) = {pb} outside [{lo}, {hi}]")
            })?;
        }
        summary.push(format!("(psi-beta_E)({n})={pb}"));
    }
    within(Duration::from_secs(600), start)?;
    Ok(format!(
        "n=3..7 all exact values hold; {} ({:.1?})",
        summary.join(" "),
        start.elapsed()
    ))
}

fn criterion_4() -> Outcome {
    let mut checked = 0;
    for n in 2..=6 {
        for g in enumerate_connected(n).unwrap() {
            let p = Prepared::new(&g).unwrap();
            let strict = p.value(InvariantTag::MhsStrict).unwrap() == n;
            let mixed = p.value(InvariantTag::BetaM).unwrap() == n;
            let maxnb = g.is_maximal_neighbour_graph();
            ensure(strict == mixed && mixed == maxnb, || {
                format!(
                    "{}: mhs_strict=n {strict}, beta_M=n {mixed}, maximal neighbour {maxnb}",
                    write_graph6(&g)
                )
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} graphs, predicates pairwise equivalent"))
}

fn structural_checks(g: &Graph) -> Result<(), String> {
    let n = g.order();
    let p = Prepared::new(g).map_err(|e| e.to_string())?;
    let d = p.distances();
    let all = VertexSet::full(n);
    let name = write_graph6(g);
    for e in g.edges() {
        let w = w_sets(d, e.u, e.v).unwrap();
        ensure(
            !w.w_uv.intersects(&w.w_vu)
                && w.wbar_uv.union(&w.wbar_vu) == all
                && w.equidistant == w.wbar_uv.difference(&w.w_vu)
                && w.equidistant == w.wbar_vu.difference(&w.w_uv),
            || format!("W-set identity fails on {name} edge {e}"),
        )?;
    }
    let weak = p.value(InvariantTag::MhsWeak).unwrap();
    let strict = p.value(InvariantTag::MhsStrict).unwrap();
    ensure(2 <= weak && weak <= strict && strict <= n, || {
        format!("chain fails on {name}: mhs_weak {weak}, mhs_strict {strict}")
    })?;
    ensure(n < 3 || weak < n, || {
        format!("mhs_weak {weak} = n on {name}")
    })?;
    ensure(strict >= 2, || format!("mhs_strict {strict} < 2 on {name}"))?;
    let be = p.value(InvariantTag::BetaE).unwrap();
    ensure(be >= ceil_log2(g.max_degree()), || {
        format!("beta_E {be} below log bound on {name}")
    })?;
    let psi = p.result(InvariantTag::Psi).unwrap();
    ensure(hits_every_weak_pair(g, d, &psi.witness), || {
        format!(
            "psi witness {} misses a complement W-set on {name}",
            psi.witness
        )
    })?;
    ensure(psi.value >= weak, || {
        format!("psi {} < mhs_weak {weak} on {name}", psi.value)
    })?;
    Ok(())
}

fn criterion_5(seen: &mut Seen) -> Outcome {
    let mut count = 0;
    for n in 2..=6 {
        for g in enumerate_connected(n).unwrap() {
            structural_checks(&g)?;
            count += 1;
        }
    }
    let mut rng = StdRng::seed_from_u64(0xacce_0005);
    for _ in 0..1000 {
        let n = rng.gen_range(2..=12);
        let density = rng.gen_range(0.0..0.6);
        let g = random_connected(&mut rng, n, density);
        structural_checks(&g)?;
        seen.0.push(g);
        count += 1;
    }
    Ok(format!("{count} graphs, zero failures"))
}

fn criterion_6() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0xacce_0006);
    for i in 0..1000 {
        let (n, lists) = random_instance(&mut rng);
        let inst = HittingInstance::new(SetFamily::from_lists(n, &lists).unwrap()).unwrap();
        let masks: Vec<u64> = lists.iter().map(|l| to_mask(l)).collect();
        let oracle = brute_hitting(n, &masks).unwrap();
        for reductions in [true, false] {
            let sol = min_hitting_exact_with(&inst, SolverOptions { reductions }).unwrap();
            ensure(sol.cardinality == oracle.count_ones() as usize, || {
                format!(
                    "instance {i} (reductions {reductions}): {} vs oracle {}",
                    sol.cardinality,
                    oracle.count_ones()
                )
            })?;
            ensure(verify_hitting(&inst, &sol.set), || {
                format!("instance {i}: invalid witness")
            })?;
        }
    }
    Ok("1000 instances, reductions on and off, zero mismatches".into())
}

fn criterion_7(seen: &mut Seen) -> Outcome {
    let drawn: [(usize, &[(usize, usize)]); 2] = [
        (8, &[(1, 2), (2, 3), (3, 4), (4, 5), (2, 6), (3, 7), (4, 8)]),
        (
            9,
            &[
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (2, 7),
                (3, 8),
                (4, 9),
            ],
        ),
    ];
    for (n, edges) in drawn {
        let g = t_prime_tree(n).unwrap();
        let edges0: Vec<_> = edges.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
        ensure(g == Graph::from_edge_list(n, &edges0).unwrap(), || {
            format!("T'_{n} differs from the drawing")
        })?;
        let m = n / 2;
        let psi = value(&g, InvariantTag::Psi);
        ensure(psi == m + 1, || format!("psi(T'_{n}) = {psi}"))?;
        let be = value(&g, InvariantTag::BetaE);
        ensure(be == 2, || format!("beta_E(T'_{n}) = {be}"))?;
        let p = Prepared::new(&g).unwrap();
        let base = VertexSet::from_indices(n, [0, n - m]).unwrap();
        let inst = HittingInstance::new(edge_pair_family(&g, p.distances()).unwrap()).unwrap();
        ensure(verify_hitting(&inst, &base), || {
            format!("{base} does not resolve the edges of T'_{n}")
        })?;
        seen.0.push(g);
    }
    Ok("T'_8 and T'_9 match the drawings; psi = m+1, beta_E = 2 with base {v_1, v_(n-m+1)}".into())
}

fn criterion_8(seen: &Seen) -> Outcome {
    let mut count = 0;
    let mut check = |g: &Graph| -> Result<(), String> {
        let s = write_graph6(g);
        let back = parse_graph6(&s).map_err(|e| format!("{s}: {e}"))?;
        ensure(&back == g && write_graph6(&back) == s, || {
            format!("round trip changed {s}")
        })?;
        count += 1;
        Ok(())
    };
    for g in &seen.0 {
        check(g)?;
    }
    for n in 2..=7 {
        for g in enumerate_connected(n).unwrap() {
            check(&g)?;
        }
    }
    for fam in [
        Family::Path,
        Family::Complete,
        Family::Star,
        Family::Cycle,
        Family::TPrime,
    ] {
        for p in fam.min_param().max(4)..=62 {
            check(&fam.generate(p).unwrap())?;
        }
    }
    Ok(format!("{count} graphs re-encode byte-identically"))
}

fn main() {
    let mut seen = Seen::default();
    let mut failed = 0;
    let mut report = |id: usize, title: &str, outcome: Outcome, elapsed: Duration| match &outcome {
        Ok(detail) => println!("PASS  criterion {id}: {title} -- {detail} [{elapsed:.2?}]"),
        Err(why) => {
            failed += 1;
            println!("FAIL  criterion {id}: {title} -- {why} [{elapsed:.2?}]");
        }
    };
    macro_rules! run {
        ($id:expr, $title:expr, $body:expr) => {{
            let t = Instant::now();
            let outcome = $body;
            report($id, $title, outcome, t.elapsed());
        }};
    }
    run!(
        1,
        "mhs closed forms on paths, stars, complete graphs, K_2,m",
        criterion_1(&mut seen)
    );
    run!(
        2,
        "psi closed forms on complete graphs, cycles, stars, T'_n",
        criterion_2(&mut seen)
    );
    run!(
        3,
        "exhaustive extremal differences for n = 3..7",
        criterion_3()
    );
    run!(
        4,
        "mhs_strict = n <=> beta_M = n <=> maximal neighbour graph, n = 2..6",
        criterion_4()
    );
    run!(
        5,
        "structural identities and bounds, n <= 6 plus random n <= 12",
        criterion_5(&mut seen)
    );
    run!(
        6,
        "hitting-set solver against subset enumeration",
        criterion_6()
    );
    run!(7, "T'_n construction for n = 8, 9", criterion_7(&mut seen));
    run!(
        8,
        "graph6 round trip on every graph above",
        criterion_8(&seen)
    );
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 8 acceptance criteria passed");
}
