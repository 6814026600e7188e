mod common;

use std::collections::BTreeSet;

use geopack::corpus::{connected_graphs, graphs};
use geopack::{enumerate_maximal_geodesics, gpack_exact, gt_exact, Graph, SolveLimits};

fn library_catalog(g: &Graph) -> BTreeSet<Vec<usize>> {
    let catalog = enumerate_maximal_geodesics(g, 1_000_000).unwrap();
    assert!(catalog.is_complete());
    catalog.geodesics().iter().map(|p| p.vertices().to_vec()).collect()
}

#[test]
fn catalog_matches_simple_path_filter_on_all_graphs_up_to_five_vertices() {
    for n in 1..=5 {
        for g in graphs(n) {
            assert_eq!(
                library_catalog(&g),
                common::maximal_geodesics(&g),
                "{:?}",
                g.edges().collect::<Vec<_>>()
            );
        }
    }
}

#[test]
fn catalog_matches_on_connected_six_vertex_graphs() {
    for g in connected_graphs(6) {
        assert_eq!(library_catalog(&g), common::maximal_geodesics(&g));
    }
}

#[test]
fn solvers_match_brute_force_up_to_six_vertices() {
    let limits = SolveLimits::default();
    for n in 1..=6 {
        for g in connected_graphs(n) {
            let edges: Vec<_> = g.edges().collect();
            let packing = gpack_exact(&g, &limits).unwrap();
            let transversal = gt_exact(&g, &limits).unwrap();
            assert_eq!(packing.value(), common::gpack(&g), "gpack {edges:?}");
            assert_eq!(transversal.value(), common::gt(&g), "gt {edges:?}");
        }
    }
}

#[test]
fn solvers_handle_disconnected_graphs_like_brute_force() {
    let limits = SolveLimits::default();
    for n in 1..=5 {
        for g in graphs(n).into_iter().filter(|g| !g.is_connected()) {
            assert_eq!(gpack_exact(&g, &limits).unwrap().value(), common::gpack(&g));
            assert_eq!(gt_exact(&g, &limits).unwrap().value(), common::gt(&g));
        }
    }
}

#[test]
fn solvers_match_brute_force_on_random_graphs_up_to_ten_vertices() {
    use geopack::corpus::{random_graph, seeded_rng};
    use rand::Rng;

    let limits = SolveLimits::default();
    let mut rng = seeded_rng(10);
    for _ in 0..200 {
        let n = rng.gen_range(1..=10);
        let p = rng.gen_range(0.2..0.8);
        let g = random_graph(n, p, &mut rng);
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(library_catalog(&g), common::maximal_geodesics(&g), "{edges:?}");
        assert_eq!(
            gpack_exact(&g, &limits).unwrap().value(),
            common::gpack(&g),
            "gpack {edges:?}"
        );
        assert_eq!(gt_exact(&g, &limits).unwrap().value(), common::gt(&g), "gt {edges:?}");
    }
}
