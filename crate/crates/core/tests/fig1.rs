mod common;

use geopack::{gpack_exact, gt_exact, smooth, SolveLimits};

#[test]
fn smoothing_lowers_gpack_off_trees() {
    let g = common::fig1();
    assert_eq!(g.n(), 13);
    assert_eq!(g.edge_count(), 13);
    let limits = SolveLimits::default();
    assert_eq!(gpack_exact(&g, &limits).unwrap().value(), 4);
    assert_eq!(common::gpack(&g), 4);
    let s = smooth(&g).graph;
    assert_eq!(s.n(), 9);
    assert_eq!(gpack_exact(&s, &limits).unwrap().value(), 3);
    assert_eq!(common::gpack(&s), 3);
    assert!(gpack_exact(&g, &limits).unwrap().value() <= gt_exact(&g, &limits).unwrap().value());
}
