//! Named batches of checks comparing closed forms and structural results
//! with the exact solvers.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::Serialize;

use crate::closed_forms::{diagonal_grid_packing, formula_value};
use crate::corpus::{random_bipartite_subcubic, random_tree, seeded_rng};
use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::geodesic::enumerate_maximal_geodesics;
use crate::graph::Graph;
use crate::solver::{gpack_exact, gpack_upper_bound, gt_exact, Invariant, ReductionCheck, SolveLimits};
use crate::tree::verify_tree_equality;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Formulas,
    Trees,
    Reduction,
    Grids,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "formulas" => Suite::Formulas,
            "trees" => Suite::Trees,
            "reduction" => Suite::Reduction,
            "grids" => Suite::Grids,
            "all" => Suite::All,
            other => return Err(Error::Spec(format!("unknown suite `{other}`"))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Formulas => "formulas",
            Suite::Trees => "trees",
            Suite::Reduction => "reduction",
            Suite::Grids => "grids",
            Suite::All => "all",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckItem {
    pub name: String,
    pub outcome: Outcome,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub items: Vec<CheckItem>,
}

impl SuiteReport {
    pub fn count(&self, outcome: Outcome) -> usize {
        self.items.iter().filter(|i| i.outcome == outcome).count()
    }

    pub fn all_passed(&self) -> bool {
        self.count(Outcome::Pass) == self.items.len()
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// Order of the random graphs in the tree and reduction suites.
    pub n: Option<usize>,
    pub count: usize,
    pub seed: u64,
    pub limits: SolveLimits,
    /// Run independent items on all available cores.
    pub parallel: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            n: None,
            count: 20,
            seed: 0,
            limits: SolveLimits::default(),
            parallel: false,
        }
    }
}

type Check = Box<dyn Fn() -> Result<(bool, String)> + Send + Sync>;

fn item(
    name: impl Into<String>,
    check: impl Fn() -> Result<(bool, String)> + Send + Sync + 'static,
) -> (String, Check) {
    (name.into(), Box::new(check))
}

fn evaluate(name: String, check: &Check) -> CheckItem {
    let (outcome, detail) = match check() {
        Ok((true, detail)) => (Outcome::Pass, detail),
        Ok((false, detail)) => (Outcome::Fail, detail),
        Err(e @ (Error::BudgetExceeded { .. } | Error::EnumerationOverflow { .. })) => {
            (Outcome::Inconclusive, e.to_string())
        }
        Err(e) => (Outcome::Fail, e.to_string()),
    };
    CheckItem { name, outcome, detail }
}

fn execute(checks: Vec<(String, Check)>, parallel: bool) -> Vec<CheckItem> {
    if !parallel {
        return checks.into_iter().map(|(name, check)| evaluate(name, &check)).collect();
    }
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    let chunk = checks.len().div_ceil(workers).max(1);
    std::thread::scope(|scope| {
        let handles: Vec<_> = checks
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || {
                    part.iter()
                        .map(|(name, check)| evaluate(name.clone(), check))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("check panicked"))
            .collect()
    })
}

fn formula_checks(limits: SolveLimits) -> Vec<(String, Check)> {
    let mut cases: Vec<(FamilySpec, Invariant)> = Vec::new();
    let both = [Invariant::Gpack, Invariant::Gt];
    for n in 1..=8 {
        cases.extend(both.map(|i| (FamilySpec::Path(n), i)));
    }
    for n in 1..=5 {
        cases.extend(both.map(|i| (FamilySpec::Star(n), i)));
    }
    for n in 2..=7 {
        cases.extend(both.map(|i| (FamilySpec::Complete(n), i)));
    }
    for n in 2..=4 {
        cases.extend(both.map(|i| (FamilySpec::CompleteBipartite(n, n), i)));
    }
    for n in 1..=4 {
        cases.push((FamilySpec::Rook(n), Invariant::Gt));
    }
    for dims in [
        vec![2, 2],
        vec![2, 3],
        vec![2, 4],
        vec![2, 5],
        vec![2, 6],
        vec![2, 7],
        vec![3, 3],
        vec![3, 4],
        vec![2, 2, 2],
        vec![2, 2, 3],
    ] {
        cases.push((FamilySpec::DiagonalGrid(dims), Invariant::Gpack));
    }
    cases
        .into_iter()
        .map(|(family, invariant)| {
            item(format!("{} {family}", invariant.name()), move || {
                let expected = formula_value(&family, invariant)?;
                let g = family.generate()?;
                let got = match invariant {
                    Invariant::Gpack => gpack_exact(&g, &limits)?.value(),
                    Invariant::Gt => gt_exact(&g, &limits)?.value(),
                };
                Ok((got == expected, format!("formula {expected}, solver {got}")))
            })
        })
        .collect()
}

fn tree_checks(opts: &VerifyOptions) -> Vec<(String, Check)> {
    let mut rng = seeded_rng(opts.seed);
    let limits = opts.limits;
    (0..opts.count)
        .map(|i| {
            let n = opts.n.unwrap_or_else(|| rng.gen_range(1..=18));
            let t = random_tree(n, &mut rng);
            item(format!("tree #{i} (n = {n})"), move || {
                let equal = verify_tree_equality(&t, &limits)?;
                Ok((equal, String::new()))
            })
        })
        .collect()
}

fn reduction_check(g: &Graph, limits: &SolveLimits) -> Result<(bool, String)> {
    let r = ReductionCheck::compute(g, limits)?;
    Ok((
        r.holds(),
        format!(
            "gpack(G') = {}, induced P3 packing = {}, all maximal geodesics of length 2: {}",
            r.derived_gpack, r.induced_p3_packing, r.all_length_two
        ),
    ))
}

fn reduction_checks(opts: &VerifyOptions) -> Vec<(String, Check)> {
    let mut rng = seeded_rng(opts.seed);
    let limits = opts.limits;
    (0..opts.count)
        .map(|i| {
            let n = opts.n.unwrap_or_else(|| rng.gen_range(2..=10)).max(2);
            let g = random_bipartite_subcubic(n, &mut rng);
            item(format!("bipartite subcubic #{i} (n = {n})"), move || {
                reduction_check(&g, &limits)
            })
        })
        .collect()
}

/// Packing number, construction, maximal geodesic orders and the distance
/// bound on one diagonal grid.
pub fn grid_check(dims: &[usize], limits: &SolveLimits) -> Result<(bool, String)> {
    let expected = formula_value(&FamilySpec::DiagonalGrid(dims.to_vec()), Invariant::Gpack)?;
    let g = FamilySpec::DiagonalGrid(dims.to_vec()).generate()?;
    let catalog = enumerate_maximal_geodesics(&g, limits.max_geodesics)?;
    catalog.require_complete()?;
    let exact = gpack_exact(&g, limits)?.value();
    let packing = diagonal_grid_packing(dims)?;
    let construction = packing.size() == expected && packing.is_valid_for(&catalog);
    let orders = catalog.geodesics().iter().all(|p| dims.contains(&p.order()));
    let upper = gpack_upper_bound(&g, &catalog)?;
    Ok((
        exact == expected && construction && orders && upper == expected,
        format!("formula {expected}, solver {exact}, construction ok: {construction}, orders ok: {orders}, upper bound {upper}"),
    ))
}

fn grid_checks(limits: SolveLimits) -> Vec<(String, Check)> {
    [
        vec![2, 2],
        vec![2, 3],
        vec![3, 3],
        vec![2, 4],
        vec![3, 4],
        vec![2, 2, 3],
    ]
    .into_iter()
    .map(|dims| {
        let name = format!(
            "diagonal_grid:{}",
            dims.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
        );
        item(name, move || grid_check(&dims, &limits))
    })
    .collect()
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> SuiteReport {
    let checks = match suite {
        Suite::Formulas => formula_checks(opts.limits),
        Suite::Trees => tree_checks(opts),
        Suite::Reduction => reduction_checks(opts),
        Suite::Grids => grid_checks(opts.limits),
        Suite::All => {
            let mut all = formula_checks(opts.limits);
            all.extend(tree_checks(opts));
            all.extend(reduction_checks(opts));
            all.extend(grid_checks(opts.limits));
            all
        }
    };
    SuiteReport {
        suite,
        items: execute(checks, opts.parallel),
    }
}
