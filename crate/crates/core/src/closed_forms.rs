//! Known closed-form values of `gpack` and `gt`, with explicit witnesses
//! where a construction is available.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::geodesic::{
    all_pairs_distances, enumerate_maximal_geodesics, is_maximal_geodesic, is_uniform_geodesic, Geodesic, DEFAULT_CAP,
};
use crate::graph::Graph;
use crate::solver::{Invariant, Packing, Transversal};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Packing(Packing),
    Transversal(Transversal),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaResult {
    pub family: FamilySpec,
    pub invariant: Invariant,
    pub value: usize,
    pub witness: Option<Witness>,
}

fn unsupported(family: &FamilySpec, invariant: Invariant) -> Error {
    Error::Unsupported(format!("no closed form for {} of {family}", invariant.name()))
}

fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

/// Closed-form value of `invariant` on `family`.
pub fn formula_value(family: &FamilySpec, invariant: Invariant) -> Result<usize> {
    family.validate()?;
    match (family, invariant) {
        (&FamilySpec::Path(n), _) => {
            if n == 0 {
                return Err(domain("path needs at least one vertex"));
            }
            Ok(1)
        }
        (&FamilySpec::Star(n), _) => {
            if n == 0 {
                return Err(domain("star needs at least one leaf"));
            }
            Ok(1)
        }
        (&FamilySpec::Complete(n), inv) => {
            if n < 2 {
                return Err(domain("complete graph formula needs n >= 2"));
            }
            Ok(match inv {
                Invariant::Gpack => n / 2,
                Invariant::Gt => n - 1,
            })
        }
        (&FamilySpec::CompleteBipartite(m, n), inv) => {
            if m != n {
                return Err(domain(format!(
                    "complete bipartite formula needs equal parts, got {m} and {n}"
                )));
            }
            if n < 2 {
                return Err(domain("complete bipartite formula needs n >= 2"));
            }
            Ok(match inv {
                Invariant::Gpack => 2 * n / 3,
                Invariant::Gt => n,
            })
        }
        (&FamilySpec::Rook(n), Invariant::Gt) => {
            if n == 0 {
                return Err(domain("rook graph needs n >= 1"));
            }
            Ok(n * n + 2 - 2 * n)
        }
        (FamilySpec::DiagonalGrid(dims), Invariant::Gpack) => {
            let sorted = grid_hypothesis(dims)?;
            Ok(sorted[1..].iter().product())
        }
        (family, invariant) => Err(unsupported(family, invariant)),
    }
}

/// Closed-form value together with a witness of that size, when one is
/// constructible.
pub fn formula_result(family: &FamilySpec, invariant: Invariant) -> Result<FormulaResult> {
    let value = formula_value(family, invariant)?;
    let witness = match (family, invariant) {
        (&FamilySpec::Path(n), Invariant::Gpack) => Some(Witness::Packing(Packing::new(vec![Geodesic::canonical(
            (0..n).collect(),
        )]))),
        (&FamilySpec::Path(_), Invariant::Gt) | (&FamilySpec::Star(_), Invariant::Gt) => {
            Some(Witness::Transversal(Transversal::new(vec![0])))
        }
        (&FamilySpec::Star(_), Invariant::Gpack) => {
            Some(Witness::Packing(Packing::new(vec![Geodesic::canonical(vec![1, 0, 2])])))
        }
        (&FamilySpec::Complete(n), Invariant::Gpack) => Some(Witness::Packing(Packing::new(
            (0..n / 2)
                .map(|i| Geodesic::canonical(vec![2 * i, 2 * i + 1]))
                .collect(),
        ))),
        (&FamilySpec::Complete(n), Invariant::Gt) => Some(Witness::Transversal(Transversal::new((0..n - 1).collect()))),
        (&FamilySpec::Rook(n), Invariant::Gt) => {
            let skip = if n == 1 { Vec::new() } else { rook_complement_set(n)? };
            let kept = (0..n * n).filter(|v| skip.binary_search(v).is_err()).collect();
            Some(Witness::Transversal(Transversal::new(kept)))
        }
        (FamilySpec::DiagonalGrid(dims), Invariant::Gpack) => Some(Witness::Packing(diagonal_grid_packing(dims)?)),
        _ => None,
    };
    Ok(FormulaResult {
        family: family.clone(),
        invariant,
        value,
        witness,
    })
}

/// Sorted dimensions after checking `r >= 2` and `2 <= min`.
fn grid_hypothesis(dims: &[usize]) -> Result<Vec<usize>> {
    if dims.len() < 2 {
        return Err(domain("diagonal grid formula needs at least two dimensions"));
    }
    let mut sorted = dims.to_vec();
    sorted.sort_unstable();
    if sorted[0] < 2 {
        return Err(domain("diagonal grid formula needs every dimension >= 2"));
    }
    Ok(sorted)
}

/// One straight path along the shortest axis for every setting of the other
/// coordinates, in the grid generated from `dims` as given.
pub fn diagonal_grid_packing(dims: &[usize]) -> Result<Packing> {
    grid_hypothesis(dims)?;
    let axis = (0..dims.len()).min_by_key(|&i| (dims[i], i)).expect("non-empty");
    let grid = FamilySpec::DiagonalGrid(dims.to_vec()).generate()?;
    let dist = all_pairs_distances(&grid);

    // Vertex ids are mixed radix with the first dimension most significant.
    let mut stride = vec![1; dims.len()];
    for i in (0..dims.len() - 1).rev() {
        stride[i] = stride[i + 1] * dims[i + 1];
    }
    let mut paths = Vec::new();
    for base in 0..grid.n() {
        if !(base / stride[axis]).is_multiple_of(dims[axis]) {
            continue;
        }
        let path: Vec<usize> = (0..dims[axis]).map(|k| base + k * stride[axis]).collect();
        if !is_maximal_geodesic(&grid, &dist, &path)? {
            return Err(Error::ContractViolation(format!(
                "grid path {path:?} is not a maximal geodesic"
            )));
        }
        paths.push(Geodesic::canonical(path));
    }
    Ok(Packing::new(paths))
}

/// Row 0 without its last cell, plus the last column without its first
/// cell: `2n - 2` vertices of `K_n □ K_n` (vertex `(r, c)` is `r * n + c`)
/// containing no maximal geodesic. Returned sorted.
pub fn rook_complement_set(n: usize) -> Result<Vec<usize>> {
    if n < 2 {
        return Err(domain("rook complement construction needs n >= 2"));
    }
    let mut set: Vec<usize> = (0..n - 1).chain((1..n).map(|r| r * n + n - 1)).collect();
    set.sort_unstable();
    if let Some(path) = rook_maximal_geodesic_within(n, &set) {
        return Err(Error::ContractViolation(format!(
            "rook set contains maximal geodesic {path:?}"
        )));
    }
    Ok(set)
}

/// In `K_n □ K_n` with `n >= 2` the maximal geodesics are exactly the paths
/// `a, m, b` where `a` and `b` differ in both coordinates.
fn rook_maximal_geodesic_within(n: usize, set: &[usize]) -> Option<[usize; 3]> {
    let inside = |v: usize| set.binary_search(&v).is_ok();
    for &a in set {
        for &b in set {
            let (ra, ca, rb, cb) = (a / n, a % n, b / n, b % n);
            if a < b && ra != rb && ca != cb {
                for m in [ra * n + cb, rb * n + ca] {
                    if inside(m) {
                        return Some([a, m, b]);
                    }
                }
            }
        }
    }
    None
}

/// `floor(prod n(G_i) / (sum diam(G_i) + 1))`, an upper bound on `gpack` of
/// the Cartesian product of uniform geodesic factors.
pub fn uniform_product_bound(graphs: &[Graph]) -> Result<usize> {
    if graphs.is_empty() {
        return Err(domain("product bound needs at least one factor"));
    }
    let mut order = 1usize;
    let mut diameters = 0usize;
    for (i, g) in graphs.iter().enumerate() {
        let catalog = enumerate_maximal_geodesics(g, DEFAULT_CAP)?;
        catalog.require_complete()?;
        if !is_uniform_geodesic(g, &catalog)? {
            return Err(domain(format!("factor {i} is not uniform geodesic")));
        }
        order = order
            .checked_mul(g.n())
            .ok_or_else(|| domain("product order overflows"))?;
        diameters += all_pairs_distances(g)
            .diameter()
            .expect("uniform factors are connected");
    }
    Ok(order / (diameters + 1))
}
