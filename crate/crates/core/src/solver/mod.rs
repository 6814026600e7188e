//! Exact `gpack` and `gt`.
//!
//! `gpack` is a maximum independent set of the conflict graph of the
//! maximal-geodesic catalog, `gt` a minimum hitting set of the catalog.
//! Both return the lexicographically least optimal witness: once the
//! optimum `k` is known, witness members are fixed in increasing order
//! whenever the remainder can still be completed to size `k`.

mod budget;
mod conflict;
mod disjoint;
mod hitting;
mod reduction;
mod report;

use fixedbitset::FixedBitSet;
use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geodesic::{
    all_pairs_distances, enumerate_maximal_geodesics_with, shortest_maximal_geodesic_length, Geodesic, GeodesicCatalog,
};
use crate::graph::Graph;

pub use budget::{SearchStats, SolveLimits};
pub use conflict::ConflictGraph;
pub use reduction::{induced_p3_packing_exact, induced_p3s, verify_np_reduction, InducedP3Packing, ReductionCheck};
pub use report::{Bounds, Invariant, SolveReport};

use budget::{Aborted, Budget};
use conflict::vertex_sets;
use disjoint::{greedy_disjoint, DisjointSearch};
use hitting::HittingSearch;

/// Pairwise vertex-disjoint maximal geodesics.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Packing {
    geodesics: Vec<Geodesic>,
}

impl Packing {
    pub fn new(mut geodesics: Vec<Geodesic>) -> Self {
        geodesics.sort_unstable();
        Packing { geodesics }
    }

    pub fn geodesics(&self) -> &[Geodesic] {
        &self.geodesics
    }

    pub fn size(&self) -> usize {
        self.geodesics.len()
    }

    /// Members are catalog entries and pairwise disjoint.
    pub fn is_valid_for(&self, catalog: &GeodesicCatalog) -> bool {
        let members = self
            .geodesics
            .iter()
            .all(|p| catalog.geodesics().binary_search(p).is_ok());
        let disjoint = self
            .geodesics
            .iter()
            .enumerate()
            .all(|(i, p)| self.geodesics[i + 1..].iter().all(|q| p.is_disjoint(q)));
        members && disjoint
    }
}

/// A vertex set meeting every maximal geodesic.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Transversal {
    vertices: Vec<usize>,
}

impl Transversal {
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Transversal { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_valid_for(&self, catalog: &GeodesicCatalog) -> bool {
        catalog
            .geodesics()
            .iter()
            .all(|p| p.vertices().iter().any(|v| self.vertices.binary_search(v).is_ok()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackingSolution {
    pub packing: Packing,
    pub stats: SearchStats,
}

impl PackingSolution {
    pub fn value(&self) -> usize {
        self.packing.size()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransversalSolution {
    pub transversal: Transversal,
    pub stats: SearchStats,
}

impl TransversalSolution {
    pub fn value(&self) -> usize {
        self.transversal.size()
    }
}

pub(crate) fn complete_catalog(g: &Graph, limits: &SolveLimits) -> Result<GeodesicCatalog> {
    let catalog = enumerate_maximal_geodesics_with(g, &all_pairs_distances(g), limits.max_geodesics)?;
    catalog.require_complete()?;
    Ok(catalog)
}

/// `⌊n / (d + 1)⌋` with `d` the length of a shortest maximal geodesic.
pub fn gpack_upper_bound(g: &Graph, catalog: &GeodesicCatalog) -> Result<usize> {
    let d = shortest_maximal_geodesic_length(catalog)?;
    Ok(g.n() / (d + 1))
}

pub fn gpack_exact(g: &Graph, limits: &SolveLimits) -> Result<PackingSolution> {
    let catalog = complete_catalog(g, limits)?;
    gpack_with_catalog(g, &catalog, limits)
}

pub fn gpack_with_catalog(g: &Graph, catalog: &GeodesicCatalog, limits: &SolveLimits) -> Result<PackingSolution> {
    let mut budget = Budget::new(*limits);
    if catalog.require_complete()?.is_empty() {
        return Ok(PackingSolution {
            packing: Packing::default(),
            stats: budget.stats(),
        });
    }
    let sets = vertex_sets(catalog, g.n());
    let upper = gpack_upper_bound(g, catalog)?;
    let chosen = max_disjoint(&sets, g.n(), upper, &mut budget)?;
    let packing = Packing::new(chosen.into_iter().map(|i| catalog.geodesics()[i].clone()).collect());
    Ok(PackingSolution {
        packing,
        stats: budget.stats(),
    })
}

/// Lexicographically least maximum family of pairwise disjoint sets.
/// `upper` is any valid upper bound on the optimum.
pub(crate) fn max_disjoint(
    sets: &[FixedBitSet],
    universe: usize,
    upper: usize,
    budget: &mut Budget,
) -> Result<Vec<usize>> {
    let conflicts = ConflictGraph::from_sets(sets);
    let mut search = DisjointSearch::new(sets, &conflicts, universe, budget);
    let all = search.all();
    let upper = upper.min(search.clique_cover_bound(&all));

    let mut best = greedy_disjoint(sets, universe);
    if best.len() < upper {
        match search.maximum(all.clone(), best.len(), upper) {
            Ok(Some(found)) => best = found,
            Ok(None) => {}
            Err(Aborted) => {
                let lower = best.len().max(search.best_so_far().len());
                return Err(Error::BudgetExceeded { lower, upper });
            }
        }
    }
    let k = best.len();

    let mut chosen = Vec::with_capacity(k);
    let mut candidates = all;
    for i in 0..sets.len() {
        if chosen.len() == k {
            break;
        }
        if !candidates.contains(i) {
            continue;
        }
        let mut rest = candidates.clone();
        rest.intersect_with(search.compatible(i));
        rest.remove_range(..i + 1);
        let need = k - chosen.len() - 1;
        let feasible = need == 0
            || search
                .maximum(rest.clone(), need - 1, need)
                .map_err(|_| Error::BudgetExceeded { lower: k, upper: k })?
                .is_some();
        if feasible {
            chosen.push(i);
            candidates = rest;
        }
    }
    debug_assert_eq!(chosen.len(), k);
    Ok(chosen)
}

pub fn gt_exact(g: &Graph, limits: &SolveLimits) -> Result<TransversalSolution> {
    let catalog = complete_catalog(g, limits)?;
    gt_with_catalog(g, &catalog, limits)
}

pub fn gt_with_catalog(g: &Graph, catalog: &GeodesicCatalog, limits: &SolveLimits) -> Result<TransversalSolution> {
    let mut budget = Budget::new(*limits);
    let sets = vertex_sets(catalog.require_complete()?, g.n());
    let chosen = min_hitting(&sets, g.n(), &mut budget)?;
    Ok(TransversalSolution {
        transversal: Transversal::new(chosen),
        stats: budget.stats(),
    })
}

/// Lexicographically least minimum hitting set.
fn min_hitting(sets: &[FixedBitSet], n: usize, budget: &mut Budget) -> Result<Vec<usize>> {
    if sets.is_empty() {
        return Ok(Vec::new());
    }
    let mut search = HittingSearch::new(sets, n, budget);
    let all = search.all_sets();
    let none = FixedBitSet::with_capacity(n);
    let (lower, _) = search.disjoint_bound(&all, &none).expect("every set is nonempty");

    let mut best = search.greedy();
    if best.len() > lower {
        match search.minimum(all.clone(), none, best.len(), lower) {
            Ok(Some(found)) => best = found,
            Ok(None) => {}
            Err(Aborted) => {
                let upper = search.best_so_far().map_or(best.len(), <[usize]>::len).min(best.len());
                return Err(Error::BudgetExceeded { lower, upper });
            }
        }
    }
    let k = best.len();

    let mut chosen = Vec::with_capacity(k);
    let mut unhit = all;
    for v in 0..n {
        if unhit.is_clear() {
            break;
        }
        let rest = search.without_hits(&unhit, v);
        let feasible = if rest.is_clear() {
            true
        } else {
            let need = k - chosen.len() - 1;
            let mut forbidden = FixedBitSet::with_capacity(n);
            forbidden.insert_range(..v + 1);
            need > 0
                && search
                    .minimum(rest.clone(), forbidden, need + 1, need)
                    .map_err(|_| Error::BudgetExceeded { lower: k, upper: k })?
                    .is_some()
        };
        if feasible {
            chosen.push(v);
            unhit = rest;
        }
    }
    debug_assert_eq!(chosen.len(), k);
    Ok(chosen)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Duality {
    pub gpack: usize,
    pub gt: usize,
    /// `gt / gpack`; absent only for the empty graph.
    pub ratio: Option<Ratio<usize>>,
}

/// Computes both invariants and checks `gpack <= gt`.
pub fn duality_check(g: &Graph, limits: &SolveLimits) -> Result<Duality> {
    let catalog = complete_catalog(g, limits)?;
    let gpack = gpack_with_catalog(g, &catalog, limits)?.value();
    let gt = gt_with_catalog(g, &catalog, limits)?.value();
    if gpack > gt {
        return Err(Error::ContractViolation(format!("gpack {gpack} exceeds gt {gt}")));
    }
    let ratio = (gpack > 0).then(|| Ratio::new(gt, gpack));
    Ok(Duality { gpack, gt, ratio })
}
