//! Structural and numerical invariants of the library, checked
//! exhaustively at small orders and by property-based sampling above
//! that.

use extremal_spectra::connectivity::{
    all_minimum_cuts, cut_profile, vertex_connectivity, vertex_connectivity_exhaustive,
    vertex_connectivity_flow,
};
use extremal_spectra::constructions::{
    build_b, build_bb, build_cal_b, validate_membership, BParams, BbParams, BbVariant,
};
use extremal_spectra::enumeration::{
    canonical_form, count_class, dedup_isomorphs, enumerate_class, graph_from_mask, pair_count,
    par_map_class, ClassFilter, DiameterRule,
};
use extremal_spectra::graph::{complete_bipartite, complete_graph, Graph};
use extremal_spectra::graph6;
use extremal_spectra::quotient::f_poly;
use extremal_spectra::spectra::{
    complement_rayleigh_gap, graph_spectrum, least_eigenvalue, rayleigh_quotient, spectral_radius,
};
use extremal_spectra::verifier::{verify_theorem_3_4, verify_theorem_4_3};
use proptest::prelude::*;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

// Family membership: every valid parameter tuple builds a graph that
// really lives in its advertised class.

#[test]
fn b_family_members_have_diameter_three_and_exact_connectivity() {
    for s in 1..=10 {
        for t in s..=10 {
            for k in 1..=10 {
                let p = match BParams::new(s, t, k) {
                    Ok(p) if s + t + k <= 12 => p,
                    _ => continue,
                };
                let g = build_b(&p);
                assert!(validate_membership(&g, s + t + k, k), "B({s},{t},{k})");
                assert_eq!(g.diameter().unwrap(), 3, "B({s},{t},{k})");
            }
        }
    }
}

#[test]
fn cal_b_members_have_diameter_two_and_star_free_complement() {
    for s in 1..=10 {
        for t in s..=10 {
            for k in 1..=10 {
                if s + t + k > 12 {
                    continue;
                }
                let g = match build_cal_b(s, t, k) {
                    Ok(g) => g,
                    Err(_) => continue,
                };
                let n = s + t + k;
                assert!(validate_membership(&g, n, k), "calB({s},{t},{k})");
                if g.is_complete() {
                    continue;
                }
                assert_eq!(g.diameter().unwrap(), 2, "calB({s},{t},{k})");
                // The complement must be exactly K_{s,t} plus kappa
                // isolated vertices in the fixed layout.
                let c = g.complement();
                assert_eq!(c.edge_count(), s * t);
                for u in 0..s {
                    for v in s..s + t {
                        assert!(c.has_edge(u, v));
                    }
                }
                for u in s + t..n {
                    assert_eq!(c.degree(u), 0);
                }
            }
        }
    }
}

#[test]
fn bb_members_of_both_variants_are_in_class() {
    for n2 in 1..=11 {
        for n1 in n2..=11 {
            for k in 1..=n2 {
                if n1 + n2 > 12 {
                    continue;
                }
                for variant in [BbVariant::Join, BbVariant::Matching] {
                    let p = match BbParams::new(n1, n2, k, variant) {
                        Ok(p) => p,
                        Err(_) => continue,
                    };
                    let g = build_bb(&p);
                    assert!(
                        validate_membership(&g, n1 + n2, k),
                        "BB({n1},{n2};{k}) {variant:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn bb_join_complement_is_bipartite_with_expected_edge_counts() {
    for n2 in 1..=11 {
        for n1 in n2..=11 {
            for k in 1..=n2 {
                if n1 + n2 > 12 {
                    continue;
                }
                if let Ok(p) = BbParams::new(n1, n2, k, BbVariant::Join) {
                    let c = build_bb(&p).complement();
                    assert_eq!(c.edge_count(), n1 * n2 - k * k);
                    assert_eq!(c.is_connected(), n2 > k, "BB({n1},{n2};{k})");
                    let (a, b) = c.bipartition().expect("complement is bipartite");
                    if n2 > k {
                        let sizes = {
                            let mut s = [a.count_ones() as usize, b.count_ones() as usize];
                            s.sort_unstable();
                            s
                        };
                        let mut want = [n1, n2];
                        want.sort_unstable();
                        assert_eq!(sizes, want);
                    }
                }
                if let Ok(p) = BbParams::new(n1, n2, k, BbVariant::Matching) {
                    let c = build_bb(&p).complement();
                    assert_eq!(c.edge_count(), n1 * n2 - k);
                    assert!(c.bipartition().is_some());
                }
            }
        }
    }
}

// Spectra: completeness against closed forms, symmetry laws, and exact
// values on reference graphs.

#[test]
fn family_spectra_are_complete_at_order_twelve() {
    for s in 1..=12 {
        for t in s..=12 {
            for k in 1..=12 {
                let p = match BParams::new(s, t, k) {
                    Ok(p) if s + t + k <= 12 => p,
                    _ => continue,
                };
                let sp = graph_spectrum(&build_b(&p).complement(), false);
                let roots = f_poly(s, t, k).all_roots().unwrap();
                for r in &roots {
                    assert!(
                        sp.values.iter().any(|v| (v - r).abs() < 1e-8),
                        "root {r} missing from B({s},{t},{k}) complement spectrum"
                    );
                }
                let zeros = sp.values.iter().filter(|v| v.abs() < 1e-8).count();
                assert_eq!(zeros, s + t + k - 4, "zero multiplicity for B({s},{t},{k})");
            }
        }
    }
}

#[test]
fn bipartite_spectra_are_symmetric() {
    let mut graphs = Vec::new();
    for a in 1..=7 {
        for b in a..=7 {
            graphs.push(complete_bipartite(a, b).unwrap());
        }
    }
    for n2 in 2..=6 {
        for n1 in n2..=6 {
            for k in 1..n2 {
                if let Ok(p) = BbParams::new(n1, n2, k, BbVariant::Join) {
                    graphs.push(build_bb(&p).complement());
                }
            }
        }
    }
    for g in &graphs {
        let sp = graph_spectrum(g, false);
        let n = sp.values.len();
        for i in 0..n {
            assert!(
                (sp.values[i] + sp.values[n - 1 - i]).abs() < 1e-8,
                "asymmetric spectrum"
            );
        }
    }
}

#[test]
fn regular_graph_complement_radius_is_codegree() {
    // For an r-regular graph the all-ones vector stays an eigenvector
    // of the complement, with eigenvalue n - 1 - r.
    let cases: Vec<(Graph, usize)> = vec![
        (extremal_spectra::graph::cycle_graph(5).unwrap(), 2),
        (extremal_spectra::graph::cycle_graph(8).unwrap(), 2),
        (complete_graph(6).unwrap(), 5),
        (extremal_spectra::graph::cycle_graph(6).unwrap().complement(), 3),
        (complete_bipartite(4, 4).unwrap(), 4),
    ];
    for (g, r) in cases {
        let n = g.n();
        let radius = spectral_radius(&g.complement());
        assert!(
            (radius - (n - 1 - r) as f64).abs() < 1e-8,
            "complement of {r}-regular graph on {n} vertices"
        );
    }
}

#[test]
fn complete_graph_spectra_are_exact() {
    for n in 2..=14 {
        let sp = graph_spectrum(&complete_graph(n).unwrap(), false);
        assert!((sp.values[0] - (n as f64 - 1.0)).abs() <= 1e-9);
        for v in &sp.values[1..] {
            assert!((v + 1.0).abs() <= 1e-9);
        }
        assert!(sp.residual <= 1e-9);
    }
}

#[test]
fn complement_gap_identity_is_algebraic() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let n = rng.random_range(3..=9);
        let g = random_graph(n, 0.5, &mut rng);
        let h = random_graph(n, 0.5, &mut rng);
        let x: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..1.0)).collect();
        let gap = complement_rayleigh_gap(&g, &h, &x).unwrap();
        let direct = rayleigh_quotient(&g.complement(), &x).unwrap()
            - rayleigh_quotient(&h.complement(), &x).unwrap();
        assert!((gap - direct).abs() < 1e-9);
    }
}

fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    // The Rayleigh quotient of any nonzero vector sits between the
    // extreme eigenvalues.
    #[test]
    fn rayleigh_sandwich(
        n in 2usize..=10,
        mask in 0u64..(1 << 45),
        raw in proptest::collection::vec(-1.0f64..1.0, 10),
    ) {
        let mask = mask & ((1u64 << pair_count(n)) - 1);
        let g = graph_from_mask(n, mask);
        let x = &raw[..n];
        let norm2: f64 = x.iter().map(|v| v * v).sum();
        prop_assume!(norm2 > 1e-6);
        let q = rayleigh_quotient(&g, x).unwrap() / norm2;
        let sp = graph_spectrum(&g, false);
        prop_assert!(q <= sp.lambda_1() + 1e-9);
        prop_assert!(q >= sp.lambda_n() - 1e-9);
    }
}

// Connectivity and cut profiles.

#[test]
fn connectivity_algorithms_agree() {
    for mask in 0u64..1 << 15 {
        let g = graph_from_mask(6, mask);
        if !g.is_connected() {
            continue;
        }
        assert_eq!(
            vertex_connectivity_exhaustive(&g),
            vertex_connectivity_flow(&g),
            "mask {mask}"
        );
    }
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..200 {
        let n = rng.random_range(7..=12);
        let g = random_graph(n, 0.4, &mut rng);
        if !g.is_connected() {
            continue;
        }
        assert_eq!(vertex_connectivity_exhaustive(&g), vertex_connectivity_flow(&g));
    }
}

#[test]
fn cut_profiles_partition_every_small_graph() {
    // Spec-level contract: profile sides and cut sizes add back up to n
    // for every minimum cut of every connected incomplete graph with
    // n <= 7, and the insulated vertex is reported soundly.
    for n in 3..=7 {
        for mask in 0u64..1 << pair_count(n) {
            let g = graph_from_mask(n, mask);
            if !g.is_connected() || g.is_complete() {
                continue;
            }
            let kappa = vertex_connectivity(&g);
            let cuts = all_minimum_cuts(&g);
            assert!(!cuts.is_empty());
            for cut in cuts {
                assert_eq!(cut.count_ones() as usize, kappa, "mask {mask}");
                let profile = cut_profile(&g, cut).unwrap();
                assert_eq!(profile.kappa(), kappa);
                assert_eq!(profile.s + profile.t + kappa, n, "mask {mask}");
                assert!(profile.s <= profile.t);
                if let Some(v) = profile.v {
                    assert!(profile.t_side() & (1 << v) != 0, "mask {mask}");
                    assert_eq!(g.neighbors(v) & profile.cut, 0, "mask {mask}");
                } else {
                    // No vertex on the large side avoids the cut.
                    let t_side = profile.t_side();
                    for v in 0..n {
                        if t_side & (1 << v) != 0 {
                            assert_ne!(g.neighbors(v) & profile.cut, 0, "mask {mask}");
                        }
                    }
                }
            }
        }
    }
}

// Enumeration: counts, filters, determinism, and isomorphism handling.

#[test]
fn connected_counts_match_references() {
    // Labeled connected graph counts for n = 2..=6.
    let reference = [(2usize, 1u64), (3, 4), (4, 38), (5, 728), (6, 26704)];
    for (n, want) in reference {
        let mut total = 0;
        for kappa in 1..n {
            total += count_class(&ClassFilter::new(n, kappa)).unwrap();
        }
        assert_eq!(total, want, "n = {n}");
    }
}

#[test]
fn diameter_classes_partition_each_connectivity_class() {
    for n in 3..=6 {
        for kappa in 1..n {
            let any = count_class(&ClassFilter::new(n, kappa)).unwrap();
            let d2 = count_class(
                &ClassFilter::new(n, kappa).with_diameter(DiameterRule::ExactlyTwo),
            )
            .unwrap();
            let d3 = count_class(
                &ClassFilter::new(n, kappa).with_diameter(DiameterRule::AtLeastThree),
            )
            .unwrap();
            // Only the complete graph has diameter below 2, and it sits
            // in the kappa = n-1 class alone.
            let complete = if kappa == n - 1 { 1 } else { 0 };
            assert_eq!(any, d2 + d3 + complete, "n = {n}, kappa = {kappa}");
        }
    }
}

#[test]
fn filter_members_satisfy_the_filter() {
    for kappa in 1..=3 {
        for rule in [DiameterRule::Any, DiameterRule::ExactlyTwo, DiameterRule::AtLeastThree] {
            let filter = ClassFilter::new(6, kappa).with_diameter(rule);
            for g in enumerate_class(filter).unwrap().take(500) {
                assert!(g.is_connected());
                assert_eq!(vertex_connectivity(&g), kappa);
                match rule {
                    DiameterRule::Any => {}
                    DiameterRule::ExactlyTwo => assert_eq!(g.diameter().unwrap(), 2),
                    DiameterRule::AtLeastThree => assert!(g.diameter().unwrap() >= 3),
                }
            }
        }
    }
}

#[test]
fn six_vertex_graphs_fall_into_112_classes() {
    let mut graphs = Vec::new();
    for kappa in 1..6 {
        graphs.extend(par_map_class(&ClassFilter::new(6, kappa), |g| g.clone()).unwrap());
    }
    assert_eq!(graphs.len(), 26704);
    let classes = dedup_isomorphs(&graphs).unwrap();
    assert_eq!(classes.len(), 112);

    // Same answer when every input is relabeled first: canonical forms
    // must not depend on the labeling the enumerator happened to use.
    let perm = [3, 0, 5, 1, 4, 2];
    let relabeled: Vec<Graph> = graphs.iter().map(|g| g.relabeled(&perm)).collect();
    let classes_again = dedup_isomorphs(&relabeled).unwrap();
    assert_eq!(classes_again.len(), 112);

    let forms: std::collections::HashSet<Vec<u8>> = classes
        .iter()
        .map(|g| canonical_form(g).unwrap())
        .collect();
    let forms_again: std::collections::HashSet<Vec<u8>> = classes_again
        .iter()
        .map(|g| canonical_form(g).unwrap())
        .collect();
    assert_eq!(forms, forms_again);
}

#[test]
fn parallel_scans_are_deterministic_across_pool_sizes() {
    let mut reports = Vec::new();
    for threads in [1usize, 2, 8] {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap();
        let json = pool.install(|| {
            let report = verify_theorem_4_3(5, 1).unwrap();
            serde_json::to_string(&report).unwrap()
        });
        reports.push(json);
    }
    assert_eq!(reports[0], reports[1]);
    assert_eq!(reports[1], reports[2]);
}

#[test]
fn sharded_scan_order_matches_sequential_order() {
    for (n, kappa) in [(5usize, 1usize), (6, 2)] {
        let filter = ClassFilter::new(n, kappa);
        let sequential: Vec<Graph> = enumerate_class(filter.clone()).unwrap().collect();
        let parallel = par_map_class(&filter, |g| g.clone()).unwrap();
        assert_eq!(sequential, parallel);
    }
}

// Verifier reports: witnesses must re-measure to the reported minimum,
// and predictions must live in the class they are predictions for.

#[test]
fn report_witnesses_remeasure_to_the_reported_minimum() {
    let report = verify_theorem_3_4(5, 1).unwrap();
    let min = report.min_value.unwrap();
    assert!(!report.witnesses.is_empty());
    for g6 in &report.witnesses {
        let g = graph6::decode(g6).unwrap();
        assert!((spectral_radius(&g.complement()) - min).abs() <= 1e-9);
        assert_eq!(vertex_connectivity(&g), 1);
        assert!(g.diameter().unwrap() >= 3);
    }
    let predicted = graph6::decode(report.predicted_witness.as_ref().unwrap()).unwrap();
    assert!(validate_membership(&predicted, 5, 1));

    let report = verify_theorem_4_3(6, 2).unwrap();
    let min = report.min_value.unwrap();
    for g6 in &report.witnesses {
        let g = graph6::decode(g6).unwrap();
        assert!((least_eigenvalue(&g.complement()) - min).abs() <= 1e-9);
        assert_eq!(vertex_connectivity(&g), 2);
    }
}

// Graph6 round-trips beyond the exhaustive small cases in unit tests.

#[test]
fn graph6_round_trips_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(1234);
    for _ in 0..300 {
        let n = rng.random_range(1..=32);
        let g = random_graph(n, 0.3, &mut rng);
        let encoded = graph6::encode(&g);
        assert_eq!(graph6::decode(&encoded).unwrap(), g);
    }
}
