use serde::Serialize;
use serde_json::Value;

use super::{PackingSolution, SearchStats, TransversalSolution};
use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Invariant {
    Gpack,
    Gt,
}

impl Invariant {
    pub fn name(self) -> &'static str {
        match self {
            Invariant::Gpack => "gpack",
            Invariant::Gt => "gt",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub lower: usize,
    pub upper: usize,
}

/// One solver run in the stable JSON result schema.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolveReport {
    pub invariant: Invariant,
    pub value: usize,
    pub exact: bool,
    pub witness: Value,
    pub bounds: Bounds,
    pub stats: SearchStats,
}

impl SolveReport {
    pub fn from_packing(solution: &PackingSolution) -> Self {
        let value = solution.value();
        SolveReport {
            invariant: Invariant::Gpack,
            value,
            exact: true,
            witness: serde_json::to_value(&solution.packing).expect("plain data"),
            bounds: Bounds {
                lower: value,
                upper: value,
            },
            stats: solution.stats,
        }
    }

    pub fn from_transversal(solution: &TransversalSolution) -> Self {
        let value = solution.value();
        SolveReport {
            invariant: Invariant::Gt,
            value,
            exact: true,
            witness: serde_json::to_value(&solution.transversal).expect("plain data"),
            bounds: Bounds {
                lower: value,
                upper: value,
            },
            stats: solution.stats,
        }
    }

    /// An inexact report for a search that ran out of budget. The value is
    /// the side of the bracket a witness would certify: the lower bound for
    /// `gpack`, the upper bound for `gt`.
    pub fn from_budget(invariant: Invariant, error: &Error) -> Option<Self> {
        let Error::BudgetExceeded { lower, upper } = *error else {
            return None;
        };
        let value = match invariant {
            Invariant::Gpack => lower,
            Invariant::Gt => upper,
        };
        Some(SolveReport {
            invariant,
            value,
            exact: false,
            witness: Value::Array(Vec::new()),
            bounds: Bounds { lower, upper },
            stats: SearchStats::default(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }
}
