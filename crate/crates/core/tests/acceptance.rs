//! Acceptance suite: each test pins one guarantee of the library at its
//! stated tolerance and prints a machine-greppable PASS line.

mod common;

use common::*;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rx3_core::decomposition::block_bound;
use rx3_core::domination::{
    augment_to_2dominating, is_k_dominating, min_k_dominating_exact, qmax_domination_bound,
    reed_bound,
};
use rx3_core::families::{complete_bipartite, figure1_terminals, generate, FamilySpec};
use rx3_core::graph::Graph;
use rx3_core::rainbow::{
    base_coloring, block_composite_coloring, bounds_report, exists_rainbow_tree,
    extend_via_2dominating, is_k_rainbow, k2t_lower_bound, kst_coloring, lower_bound_steiner,
    rx3_exact, ReportLimits, Rx3Budget, Rx3Result,
};
use rx3_core::steiner::min_steiner_tree_size;
use rx3_core::structure::{is_p5c5_free, is_perfect_connected_dominant};
use rx3_core::vertex_set::VertexSet;

fn exact_value(g: &Graph, budget: &Rx3Budget) -> Option<u32> {
    match rx3_exact(g, budget).unwrap() {
        Rx3Result::Proved {
            value, coloring, ..
        } => {
            assert!(
                is_k_rainbow(g, &coloring, 3).unwrap().is_pass(),
                "witness must verify"
            );
            Some(value)
        }
        Rx3Result::Unknown { .. } => None,
    }
}

/// Exact values on the reference graphs where the index is known in closed
/// form: the order-(n-2) equality family plus K_{3,3}. Tolerance 0.
#[test]
fn exact_solver_reference_values() {
    let budget = Rx3Budget::default();
    let cases: Vec<(&str, Graph, u32)> = vec![
        ("C5", generate(&FamilySpec::Cycle { n: 5 }).unwrap(), 3),
        ("C6", generate(&FamilySpec::Cycle { n: 6 }).unwrap(), 4),
        ("K4", generate(&FamilySpec::Complete { n: 4 }).unwrap(), 2),
        ("K5-e", generate(&FamilySpec::K5MinusE).unwrap(), 3),
        ("3-sun", generate(&FamilySpec::ThreeSun).unwrap(), 4),
        ("K33", complete_bipartite(3, 3), 3),
    ];
    for (name, g, expected) in &cases {
        let value = exact_value(g, &budget).unwrap_or_else(|| panic!("{name} exceeded budget"));
        assert_eq!(value, *expected, "{name}");
        // sandwich: steiner lower <= exact <= block bound
        let lower = lower_bound_steiner(g, 14).unwrap().value as u32;
        let upper = block_bound(g).unwrap() as u32;
        assert!(lower <= value && value <= upper, "{name} sandwich");
        // witness obeys the coloring properties
        if let Rx3Result::Proved { coloring, .. } = rx3_exact(g, &budget).unwrap() {
            check_coloring_properties(g, &coloring);
        }
    }
    println!(
        "ACCEPTANCE exact_solver_reference_values: PASS ({} graphs)",
        cases.len()
    );
}

/// The four-extra-color extension over an exact minimum connected
/// 2-dominating set verifies on 100 seeded random graphs with minimum
/// degree 3 and 8 <= n <= 12, using at most (|D| - 1) + 4 colors.
#[test]
fn extension_coloring_on_random_graphs() {
    let mut checked = 0;
    for seed in 0..100u64 {
        let n = 8 + (seed % 5) as usize;
        let g = generate(&FamilySpec::RandomMinDegree { n, delta: 3, seed }).unwrap();
        let cert = min_k_dominating_exact(&g, 2, true, 16).unwrap();
        let (interior, _) = g.induced_subgraph(&cert.set);
        let base = base_coloring(&interior, &Rx3Budget::default()).unwrap();
        let coloring = extend_via_2dominating(&g, &cert, &base)
            .unwrap_or_else(|e| panic!("seed {seed}: extension failed: {e}"));
        assert!(
            coloring.k() as usize <= (cert.size - 1) + 4,
            "seed {seed}: {} colors for |D| = {}",
            coloring.k(),
            cert.size
        );
        if seed % 20 == 0 {
            check_coloring_properties(&g, &coloring);
        }
        checked += 1;
    }
    assert_eq!(checked, 100);
    println!("ACCEPTANCE extension_coloring_on_random_graphs: PASS (100/100)");
}

/// Augmenting an exact minimum connected dominating set yields a connected
/// 2-dominating superset within the half-gap size bound, on 100 seeded
/// random graphs with minimum degree 2 and n <= 14.
#[test]
fn augmentation_on_random_graphs() {
    let mut checked = 0;
    for seed in 0..100u64 {
        let n = 4 + (seed % 11) as usize;
        let g = generate(&FamilySpec::RandomMinDegree { n, delta: 2, seed }).unwrap();
        let d = min_k_dominating_exact(&g, 1, true, 16).unwrap();
        let cert = augment_to_2dominating(&g, &d.set).unwrap();
        assert!(
            is_k_dominating(&g, &cert.set, 2, true),
            "seed {seed}: not connected 2-dominating"
        );
        assert!(
            d.set.is_subset_of(&cert.set),
            "seed {seed}: input not contained"
        );
        assert!(
            cert.size <= d.size + (n - d.size) / 2,
            "seed {seed}: |D'| = {} exceeds bound from |D| = {}",
            cert.size,
            d.size
        );
        checked += 1;
    }
    assert_eq!(checked, 100);
    println!("ACCEPTANCE augmentation_on_random_graphs: PASS (100/100)");
}

/// On the chained block family the Steiner lower bound meets the composite
/// block coloring at n - r - 3 colors, pinning the index without search.
#[test]
fn block_bound_tightness_on_chained_family() {
    for (r, b) in [(1usize, 1usize), (1, 3), (2, 1)] {
        let g = generate(&FamilySpec::Figure1 { r, b }).unwrap();
        let expected = g.n() - r - 3;
        let lower = lower_bound_steiner(&g, 14).unwrap();
        assert!(lower.exhaustive, "({r},{b}) must be scanned exhaustively");
        assert_eq!(lower.value, expected, "({r},{b}) lower bound");
        let coloring = block_composite_coloring(&g, &Rx3Budget::default()).unwrap();
        assert_eq!(
            coloring.k() as usize,
            expected,
            "({r},{b}) composite colors"
        );
        assert_eq!(block_bound(&g).unwrap(), expected, "({r},{b}) block bound");
        // the distinguished triple realizes the lower bound
        let s: VertexSet = figure1_terminals(r, b).into_iter().collect();
        assert_eq!(min_steiner_tree_size(&g, &s).unwrap(), expected);
        let report = bounds_report(&g, &ReportLimits::default()).unwrap();
        assert_eq!(
            report.exact.status, "pinned",
            "({r},{b}) should pin without search"
        );
        assert_eq!(report.exact.value, Some(expected as u32));
        check_coloring_properties(&g, &coloring);
    }
    println!("ACCEPTANCE block_bound_tightness_on_chained_family: PASS (3 instances)");
}

/// The complete bipartite construction stays within min(6, s + t - 3)
/// colors and verifies; the K_{2,t} code-count lower bound is consistent
/// with the exact solver on K_{2,4}.
#[test]
fn complete_bipartite_bounds() {
    for (s, t) in [(3usize, 3usize), (3, 5), (4, 6), (5, 5), (5, 9)] {
        let (g, coloring) = kst_coloring(s, t).unwrap();
        let cap = 6.min(s + t - 3);
        assert!(
            coloring.k() as usize <= cap,
            "({s},{t}): {} colors exceed {cap}",
            coloring.k()
        );
        assert!(
            is_k_rainbow(&g, &coloring, 3).unwrap().is_pass(),
            "({s},{t}) verification"
        );
        if s + t <= 10 {
            check_coloring_properties(&g, &coloring);
        }
    }
    let k24 = complete_bipartite(2, 4);
    let exact = exact_value(&k24, &Rx3Budget::default()).expect("K24 fits the budget");
    let code_bound = k2t_lower_bound(4).unwrap() as u32;
    assert!(
        exact >= code_bound,
        "exact {exact} below code-count bound {code_bound}"
    );
    println!("ACCEPTANCE complete_bipartite_bounds: PASS (5 shapes + K24 >= {code_bound})");
}

/// Domination bounds on 100 seeded random graphs with minimum degree 3:
/// gamma <= floor(3n/8), connected 2-domination <= n - q_max(delta - 1),
/// and the derived index bound sits above the Steiner lower bound (and the
/// exact value when the search completes).
#[test]
fn domination_bounds_on_random_graphs() {
    let budget = Rx3Budget {
        max_edges: 14,
        max_candidates: 500_000,
    };
    let mut checked = 0;
    let mut exact_done = 0;
    for seed in 0..100u64 {
        let n = 4 + (seed % 11) as usize;
        let g = generate(&FamilySpec::RandomMinDegree { n, delta: 3, seed }).unwrap();
        let gamma = min_k_dominating_exact(&g, 1, false, 16).unwrap().size;
        let reed = reed_bound(&g).unwrap();
        assert!(gamma <= reed, "seed {seed}: gamma {gamma} > {reed}");
        let gamma2c = min_k_dominating_exact(&g, 2, true, 16).unwrap().size;
        let qbound = qmax_domination_bound(&g, 2).unwrap();
        assert!(
            gamma2c <= qbound,
            "seed {seed}: gamma2c {gamma2c} > {qbound}"
        );
        let index_bound = qbound + 3;
        let lower = lower_bound_steiner(&g, 14).unwrap().value;
        assert!(
            lower <= index_bound,
            "seed {seed}: lower {lower} > derived {index_bound}"
        );
        if let Some(value) = exact_value(&g, &budget) {
            assert!(
                lower as u32 <= value && value as usize <= index_bound,
                "seed {seed}: sandwich {lower} <= {value} <= {index_bound}"
            );
            exact_done += 1;
        }
        checked += 1;
    }
    assert_eq!(checked, 100);
    println!(
        "ACCEPTANCE domination_bounds_on_random_graphs: PASS (100/100, exact completed on {exact_done})"
    );
}

/// (P5,C5)-freeness coincides with the perfect connected-dominant property
/// on the fixed witnesses and 200 seeded random connected graphs, n <= 7.
#[test]
fn p5c5_equivalence() {
    let witnesses: Vec<(&str, Graph)> = vec![
        ("P5", path(5)),
        ("C5", generate(&FamilySpec::Cycle { n: 5 }).unwrap()),
        ("C6", generate(&FamilySpec::Cycle { n: 6 }).unwrap()),
        ("K4", generate(&FamilySpec::Complete { n: 4 }).unwrap()),
        ("K33", complete_bipartite(3, 3)),
        ("3-sun", generate(&FamilySpec::ThreeSun).unwrap()),
    ];
    for (name, g) in &witnesses {
        assert_eq!(
            is_p5c5_free(g),
            is_perfect_connected_dominant(g, 10).unwrap(),
            "witness {name}"
        );
    }
    let mut agreements = 0;
    for seed in 0..200u64 {
        let n = 4 + (seed % 4) as usize;
        let p = 0.3 + 0.1 * (seed % 5) as f64;
        let g = random_connected_gnp(n, p, seed);
        assert_eq!(
            is_p5c5_free(&g),
            is_perfect_connected_dominant(&g, 10).unwrap(),
            "seed {seed}"
        );
        agreements += 1;
    }
    assert_eq!(agreements, 200);
    println!("ACCEPTANCE p5c5_equivalence: PASS (6 witnesses + 200 random)");
}

/// The rainbow-tree decision and the Steiner solver agree with brute-force
/// subset enumeration on a seeded suite of 50 graphs with m <= 10, 20
/// random colorings each.
#[test]
fn oracle_equivalence() {
    let mut graphs = 0;
    let mut seed = 0u64;
    while graphs < 50 {
        let n = 4 + (seed % 3) as usize; // 4..=6
        let g = random_connected_gnp(n, 0.45, 1_000 + seed);
        seed += 1;
        if g.m() > 10 {
            continue;
        }
        // steiner agreement on every triple
        for a in 0..g.n() {
            for b in a + 1..g.n() {
                for c in b + 1..g.n() {
                    let s: VertexSet = [a, b, c].into_iter().collect();
                    let dp = min_steiner_tree_size(&g, &s).unwrap();
                    let brute = steiner_brute_force(&g, &[a, b, c]).unwrap();
                    assert_eq!(dp, brute, "steiner disagrees on {:?} {:?}", g, (a, b, c));
                }
            }
        }
        // rainbow-tree agreement on every triple of 20 random colorings
        let mut rng = ChaCha8Rng::seed_from_u64(9_000 + seed);
        for _ in 0..20 {
            let k = 2 + (rng.gen_range(0..3)) as u32;
            let coloring = random_coloring(&g, k, &mut rng);
            for a in 0..g.n() {
                for b in a + 1..g.n() {
                    for c in b + 1..g.n() {
                        let s: VertexSet = [a, b, c].into_iter().collect();
                        let fast = exists_rainbow_tree(&g, &coloring, &s).unwrap();
                        let brute = rainbow_tree_brute_force(&g, &coloring, &[a, b, c]);
                        assert_eq!(fast, brute, "verdicts disagree on {:?}", (a, b, c));
                    }
                }
            }
        }
        graphs += 1;
    }
    println!("ACCEPTANCE oracle_equivalence: PASS (50 graphs x 20 colorings)");
}

/// Property sweep over the instances the other criteria touch: relabeling
/// invariance, fresh-color monotonicity, subtree closure, and the
/// lower-exact-upper sandwich.
#[test]
fn coloring_property_suite() {
    let budget = Rx3Budget::default();
    let mut instances: Vec<Graph> = vec![
        generate(&FamilySpec::Cycle { n: 5 }).unwrap(),
        generate(&FamilySpec::Cycle { n: 6 }).unwrap(),
        generate(&FamilySpec::Complete { n: 4 }).unwrap(),
        generate(&FamilySpec::K5MinusE).unwrap(),
        generate(&FamilySpec::ThreeSun).unwrap(),
        complete_bipartite(3, 3),
        generate(&FamilySpec::Figure1 { r: 1, b: 1 }).unwrap(),
    ];
    for seed in 0..6u64 {
        instances.push(
            generate(&FamilySpec::RandomMinDegree {
                n: 8,
                delta: 3,
                seed,
            })
            .unwrap(),
        );
    }
    let mut sandwiches = 0;
    for g in &instances {
        if let Some(value) = exact_value(g, &budget) {
            let lower = lower_bound_steiner(g, 14).unwrap().value as u32;
            let report = bounds_report(g, &ReportLimits::default()).unwrap();
            assert!(lower <= value);
            for entry in report.bounds.iter().filter(|e| e.applicable) {
                assert!(
                    value as i64 <= entry.value.unwrap(),
                    "{} vs {:?}",
                    value,
                    entry
                );
            }
            sandwiches += 1;
        }
        if let Ok(c) = block_composite_coloring(g, &budget) {
            check_coloring_properties(g, &c);
        }
    }
    assert!(
        sandwiches >= 7,
        "exact search should complete on the reference instances"
    );
    println!(
        "ACCEPTANCE coloring_property_suite: PASS ({} instances)",
        instances.len()
    );
}
