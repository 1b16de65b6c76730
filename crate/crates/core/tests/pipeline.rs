//! Workflow tests that drive the public API the way a caller would:
//! parse or generate a graph, profile it, build trees, approximate
//! distances, and persist the estimate.

use std::io::Cursor;

use hyperecc::dist::{
    approximate_all_distances, sample_rows, sampled_admissible_delta, smallest_admissible_delta,
    DistanceEstimate,
};
use hyperecc::ecc::{estimate_eccentricities, Strategy};
use hyperecc::gen;
use hyperecc::hyperbolicity::four_point_delta;
use hyperecc::oracle::{all_eccentricities, distance_matrix};
use hyperecc::verify::{verify_graph, VerifyOptions};
use hyperecc::{Budget, Graph};

#[test]
fn moderate_random_graph_passes_full_verification() {
    // 120 vertices sits exactly at the default quadruple budget.
    let g = gen::random_connected(120, 0.08, 7, 500).unwrap();
    let report = verify_graph(&g, &VerifyOptions::default()).unwrap();
    assert!(
        report.ok(),
        "first violation: {:?}",
        report
            .violations
            .first()
            .map(|v| (v.rule, v.detail.clone()))
    );
    assert!(report.diam <= 2 * report.rad);
}

#[test]
fn labeled_edge_list_workflow() {
    let text = "\
# collaboration snippet
ana bob
bob cara
cara dan\t4
dan ana
dan eve
";
    let g = Graph::parse_edge_list(text.as_bytes()).unwrap();
    assert_eq!(g.vertex_count(), 5);
    assert_eq!(g.edge_count(), 5);
    assert_eq!(g.label(4), Some("eve"));

    let budget = Budget::default();
    let profile = all_eccentricities(&g, &budget).unwrap();
    let m = distance_matrix(&g, &budget).unwrap();
    let tau = four_point_delta(&m, &budget).unwrap().thinness();
    let est = estimate_eccentricities(&g, Strategy::Refined, 0).unwrap();
    for v in 0..g.vertex_count() {
        assert!(est.estimate[v] >= profile.ecc[v]);
        assert!(est.estimate[v] <= profile.ecc[v] + 3 * tau + 1);
    }
}

#[test]
fn estimate_survives_binary_round_trip() {
    let g = gen::random_connected(60, 0.1, 11, 500).unwrap();
    let budget = Budget::default();
    let m = distance_matrix(&g, &budget).unwrap();
    let tau = four_point_delta(&m, &budget).unwrap().thinness();
    let est = approximate_all_distances(&g, tau, 0, &budget).unwrap();

    let mut buf = Vec::new();
    est.write_binary(&mut buf).unwrap();
    let back = DistanceEstimate::read_binary(&mut Cursor::new(buf)).unwrap();
    assert_eq!(back.root, est.root);
    assert_eq!(back.vertex_count(), est.vertex_count());
    for x in 0..g.vertex_count() as u32 {
        for y in 0..g.vertex_count() as u32 {
            assert_eq!(back.get(x, y), est.get(x, y));
        }
    }
}

#[test]
fn sampled_admissible_delta_never_exceeds_full_search() {
    for seed in [3u64, 5, 8] {
        let g = gen::random_connected(80, 0.07, seed, 500).unwrap();
        let budget = Budget::default();
        let m = distance_matrix(&g, &budget).unwrap();
        let full = smallest_admissible_delta(&g, 0, &m, &budget).unwrap();
        let rows = sample_rows(g.vertex_count(), 12, seed);
        let sampled = sampled_admissible_delta(&g, 0, &rows, &budget).unwrap();
        assert!(
            sampled.delta <= full.delta,
            "sampled {} vs full {}",
            sampled.delta,
            full.delta
        );
    }
}
