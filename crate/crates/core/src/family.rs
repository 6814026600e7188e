//! Named graph families and the `name:params` spec grammar.
//!
//! ```text
//! path:5   cycle:6   complete:4   complete_bipartite:3,3   star:4
//! rook:3   diagonal_grid:2,3,4    cartesian(path:2,cycle:4)
//! strong(path:3,path:4)
//! ```

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ops::{cartesian_product, strong_product};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// `K_{1,n}` with the center at id 0.
    Star(usize),
    Cartesian(Box<FamilySpec>, Box<FamilySpec>),
    Strong(Box<FamilySpec>, Box<FamilySpec>),
    /// `K_n □ K_n`; vertex `(row, col)` has id `row * n + col`.
    Rook(usize),
    /// Strong product of paths `P_{d1} ⊠ … ⊠ P_{dr}` with 0-based coordinates.
    DiagonalGrid(Vec<usize>),
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Spec(msg));
        match self {
            FamilySpec::Path(n) | FamilySpec::Complete(n) | FamilySpec::Star(n) | FamilySpec::Rook(n) if *n < 1 => {
                bad(format!("{self} needs n >= 1"))
            }
            FamilySpec::Cycle(n) if *n < 3 => bad(format!("{self} needs n >= 3")),
            FamilySpec::CompleteBipartite(m, n) if *m < 1 || *n < 1 => bad(format!("{self} needs m, n >= 1")),
            FamilySpec::DiagonalGrid(dims) if dims.is_empty() || dims.contains(&0) => {
                bad(format!("{self} needs at least one dimension, all >= 1"))
            }
            FamilySpec::Cartesian(a, b) | FamilySpec::Strong(a, b) => {
                a.validate()?;
                b.validate()
            }
            _ => Ok(()),
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        self.validate()?;
        let graph = match *self {
            FamilySpec::Path(n) => Graph::from_edges_lossy(n, (1..n).map(|v| (v - 1, v))).singleton_labels(),
            FamilySpec::Cycle(n) => Graph::from_edges_lossy(n, (0..n).map(|v| (v, (v + 1) % n))).singleton_labels(),
            FamilySpec::Complete(n) => {
                Graph::from_edges_lossy(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).singleton_labels()
            }
            FamilySpec::CompleteBipartite(m, n) => {
                Graph::from_edges_lossy(m + n, (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v)))).singleton_labels()
            }
            FamilySpec::Star(n) => Graph::from_edges_lossy(n + 1, (1..=n).map(|v| (0, v))).singleton_labels(),
            FamilySpec::Cartesian(ref a, ref b) => cartesian_product(&a.generate()?, &b.generate()?)?,
            FamilySpec::Strong(ref a, ref b) => strong_product(&a.generate()?, &b.generate()?)?,
            FamilySpec::Rook(n) => {
                let k = FamilySpec::Complete(n).generate()?;
                cartesian_product(&k, &k)?
            }
            FamilySpec::DiagonalGrid(ref dims) => {
                let mut grid = FamilySpec::Path(dims[0]).generate()?;
                for &d in &dims[1..] {
                    grid = strong_product(&grid, &FamilySpec::Path(d).generate()?)?;
                }
                grid
            }
        };
        Ok(graph)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::CompleteBipartite(m, n) => write!(f, "complete_bipartite:{m},{n}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::Cartesian(a, b) => write!(f, "cartesian({a},{b})"),
            FamilySpec::Strong(a, b) => write!(f, "strong({a},{b})"),
            FamilySpec::Rook(n) => write!(f, "rook:{n}"),
            FamilySpec::DiagonalGrid(d) => write!(f, "diagonal_grid:{}", join(d)),
        }
    }
}

/// Splits `a,b` at the single top-level comma.
fn split_operands(inner: &str) -> Result<(&str, &str)> {
    let mut depth = 0i32;
    let mut split = None;
    for (i, c) in inner.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                if split.is_some() {
                    return Err(Error::Spec(format!("products take two operands: {inner:?}")));
                }
                split = Some(i);
            }
            _ => {}
        }
        if depth < 0 {
            return Err(Error::Spec(format!("unbalanced parentheses in {inner:?}")));
        }
    }
    if depth != 0 {
        return Err(Error::Spec(format!("unbalanced parentheses in {inner:?}")));
    }
    let i = split.ok_or_else(|| Error::Spec(format!("products take two operands: {inner:?}")))?;
    Ok((&inner[..i], &inner[i + 1..]))
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(open) = s.find('(') {
            let name = &s[..open];
            let inner = s[open + 1..]
                .strip_suffix(')')
                .ok_or_else(|| Error::Spec(format!("missing closing parenthesis in {s:?}")))?;
            let (a, b) = split_operands(inner)?;
            let (a, b) = (Box::new(a.parse()?), Box::new(b.parse()?));
            let spec = match name.trim() {
                "cartesian" => FamilySpec::Cartesian(a, b),
                "strong" => FamilySpec::Strong(a, b),
                other => return Err(Error::Spec(format!("unknown product {other:?}"))),
            };
            spec.validate()?;
            return Ok(spec);
        }

        let (name, params) = s
            .split_once(':')
            .ok_or_else(|| Error::Spec(format!("expected name:params, got {s:?}")))?;
        let params: Vec<usize> = params
            .split(',')
            .map(|p| {
                p.trim()
                    .parse()
                    .map_err(|_| Error::Spec(format!("bad parameter {p:?} in {s:?}")))
            })
            .collect::<Result<_>>()?;
        let one = || match params[..] {
            [n] => Ok(n),
            _ => Err(Error::Spec(format!("{name} takes one parameter"))),
        };
        let spec = match name.trim() {
            "path" => FamilySpec::Path(one()?),
            "cycle" => FamilySpec::Cycle(one()?),
            "complete" => FamilySpec::Complete(one()?),
            "star" => FamilySpec::Star(one()?),
            "rook" => FamilySpec::Rook(one()?),
            "complete_bipartite" => match params[..] {
                [m, n] => FamilySpec::CompleteBipartite(m, n),
                [n] => FamilySpec::CompleteBipartite(n, n),
                _ => return Err(Error::Spec("complete_bipartite takes m,n".into())),
            },
            "diagonal_grid" => FamilySpec::DiagonalGrid(params),
            other => return Err(Error::Spec(format!("unknown family {other:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}
