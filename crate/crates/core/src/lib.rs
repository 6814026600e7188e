//! Exact geodesic packing (`gpack`) and geodesic transversal (`gt`) numbers
//! of small graphs, a linear-time packing algorithm for trees, and the
//! closed forms known for complete, complete bipartite, rook and diagonal
//! grid graphs.

pub mod closed_forms;
pub mod corpus;
pub mod error;
pub mod family;
pub mod geodesic;
pub mod graph;
pub mod ops;
pub mod solver;
pub mod tree;
pub mod verify;

pub use closed_forms::{
    diagonal_grid_packing, formula_result, formula_value, rook_complement_set, uniform_product_bound, FormulaResult,
    Witness,
};
pub use error::{Error, Result};
pub use family::FamilySpec;
pub use geodesic::{
    all_pairs_distances, enumerate_maximal_geodesics, is_geodesic, is_maximal_geodesic, is_uniform_geodesic,
    shortest_maximal_geodesic_length, DistanceTable, Geodesic, GeodesicCatalog,
};
pub use graph::{parse_edge_list, parse_edge_list_with, Graph, Reindexed};
pub use ops::{cartesian_product, derived_graph, smooth, strong_product};
pub use solver::{
    duality_check, gpack_exact, gpack_upper_bound, gt_exact, induced_p3_packing_exact, verify_np_reduction,
    ConflictGraph, Duality, Packing, PackingSolution, SolveLimits, SolveReport, Transversal, TransversalSolution,
};
pub use tree::{find_end_support_vertex, gpack_tree, tree_path, verify_tree_equality, LeafPairSet};
pub use verify::{run_suite, CheckItem, Outcome, Suite, SuiteReport, VerifyOptions};
