use std::time::{Duration, Instant};

use serde::Serialize;

/// Resource limits shared by every exact search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveLimits {
    pub max_geodesics: usize,
    pub time_budget: Duration,
    pub node_budget: u64,
}

impl Default for SolveLimits {
    fn default() -> Self {
        SolveLimits {
            max_geodesics: crate::geodesic::DEFAULT_CAP,
            time_budget: Duration::from_secs(60),
            node_budget: 10_000_000,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    /// Wall time. Left out of serialized output so it stays reproducible.
    #[serde(skip_serializing)]
    pub millis: u64,
}

/// Marker for a search that ran out of nodes or time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Aborted;

pub(crate) struct Budget {
    limits: SolveLimits,
    start: Instant,
    nodes: u64,
}

impl Budget {
    pub(crate) fn new(limits: SolveLimits) -> Self {
        Budget {
            limits,
            start: Instant::now(),
            nodes: 0,
        }
    }

    /// Counts one search node.
    pub(crate) fn tick(&mut self) -> Result<(), Aborted> {
        self.nodes += 1;
        if self.nodes > self.limits.node_budget {
            return Err(Aborted);
        }
        if self.nodes.is_multiple_of(1024) && self.start.elapsed() > self.limits.time_budget {
            return Err(Aborted);
        }
        Ok(())
    }

    pub(crate) fn stats(&self) -> SearchStats {
        SearchStats {
            nodes: self.nodes,
            millis: self.start.elapsed().as_millis() as u64,
        }
    }
}
