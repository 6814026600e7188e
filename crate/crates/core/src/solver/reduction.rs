//! The derived-graph reduction from induced `P3` packing to geodesic packing.

use fixedbitset::FixedBitSet;

use super::budget::Budget;
use super::{complete_catalog, gpack_with_catalog, max_disjoint, SearchStats, SolveLimits};
use crate::error::Result;
use crate::graph::Graph;
use crate::ops::derived_graph;

/// Every induced path `a b c` (so `ac` is not an edge), listed with `a < c`
/// and ordered by middle vertex, then `a`, then `c`.
pub fn induced_p3s(g: &Graph) -> Vec<[usize; 3]> {
    let mut paths = Vec::new();
    for b in 0..g.n() {
        let nbrs = g.neighbors(b);
        for (i, &a) in nbrs.iter().enumerate() {
            for &c in &nbrs[i + 1..] {
                if !g.has_edge(a, c) {
                    paths.push([a, b, c]);
                }
            }
        }
    }
    paths
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedP3Packing {
    pub paths: Vec<[usize; 3]>,
    pub stats: SearchStats,
}

impl InducedP3Packing {
    pub fn value(&self) -> usize {
        self.paths.len()
    }
}

/// Maximum number of vertex-disjoint induced three-vertex paths.
pub fn induced_p3_packing_exact(g: &Graph, limits: &SolveLimits) -> Result<InducedP3Packing> {
    let candidates = induced_p3s(g);
    let sets: Vec<FixedBitSet> = candidates
        .iter()
        .map(|p| {
            let mut set = FixedBitSet::with_capacity(g.n());
            set.extend(p.iter().copied());
            set
        })
        .collect();
    let mut budget = Budget::new(*limits);
    let chosen = max_disjoint(&sets, g.n(), g.n() / 3, &mut budget)?;
    Ok(InducedP3Packing {
        paths: chosen.into_iter().map(|i| candidates[i]).collect(),
        stats: budget.stats(),
    })
}

/// Both sides of `gpack(G') = 1 + pack_ind^3(G)` for the derived graph `G'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReductionCheck {
    pub derived_gpack: usize,
    pub induced_p3_packing: usize,
    /// Every maximal geodesic of `G'` has length exactly two.
    pub all_length_two: bool,
}

impl ReductionCheck {
    pub fn compute(g: &Graph, limits: &SolveLimits) -> Result<Self> {
        let derived = derived_graph(g)?;
        let catalog = complete_catalog(&derived, limits)?;
        let all_length_two = catalog.geodesics().iter().all(|p| p.length() == 2);
        let derived_gpack = gpack_with_catalog(&derived, &catalog, limits)?.value();
        let induced_p3_packing = induced_p3_packing_exact(g, limits)?.value();
        Ok(ReductionCheck {
            derived_gpack,
            induced_p3_packing,
            all_length_two,
        })
    }

    pub fn holds(&self) -> bool {
        self.all_length_two && self.derived_gpack == self.induced_p3_packing + 1
    }
}

pub fn verify_np_reduction(g: &Graph, limits: &SolveLimits) -> Result<bool> {
    Ok(ReductionCheck::compute(g, limits)?.holds())
}
