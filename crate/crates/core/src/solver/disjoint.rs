//! Maximum family of pairwise vertex-disjoint sets, as a maximum independent
//! set of the conflict graph.
//!
//! Branch and bound in the style of MCQ: candidates are greedily partitioned
//! into conflict cliques (at most one member of each can be taken), and a
//! branch is cut once the current family plus the number of cliques cannot
//! beat the incumbent. A second bound divides the vertices still coverable
//! by the smallest set size.

use fixedbitset::FixedBitSet;

use super::budget::{Aborted, Budget};
use super::conflict::ConflictGraph;

pub(crate) struct DisjointSearch<'a> {
    sets: &'a [FixedBitSet],
    compatible: Vec<FixedBitSet>,
    min_size: usize,
    universe: usize,
    budget: &'a mut Budget,
    best: Vec<usize>,
    floor: usize,
    stop_at: usize,
}

impl<'a> DisjointSearch<'a> {
    pub(crate) fn new(
        sets: &'a [FixedBitSet],
        conflicts: &ConflictGraph,
        universe: usize,
        budget: &'a mut Budget,
    ) -> Self {
        let m = sets.len();
        let compatible = (0..m)
            .map(|i| {
                let mut row = FixedBitSet::with_capacity(m);
                row.insert_range(..);
                row.difference_with(conflicts.row(i));
                row.set(i, false);
                row
            })
            .collect();
        let min_size = sets.iter().map(|s| s.count_ones(..)).min().unwrap_or(1).max(1);
        DisjointSearch {
            sets,
            compatible,
            min_size,
            universe,
            budget,
            best: Vec::new(),
            floor: 0,
            stop_at: usize::MAX,
        }
    }

    pub(crate) fn all(&self) -> FixedBitSet {
        let mut all = FixedBitSet::with_capacity(self.sets.len());
        all.insert_range(..);
        all
    }

    pub(crate) fn compatible(&self, i: usize) -> &FixedBitSet {
        &self.compatible[i]
    }

    /// Number of conflict cliques in a greedy partition of `candidates`.
    pub(crate) fn clique_cover_bound(&self, candidates: &FixedBitSet) -> usize {
        let (_, colors) = self.color(candidates);
        colors.last().copied().unwrap_or(0)
    }

    /// Pairwise-compatible members of `candidates`, more than `floor` of
    /// them, as large as possible. Stops early once `stop_at` is reached.
    pub(crate) fn maximum(
        &mut self,
        candidates: FixedBitSet,
        floor: usize,
        stop_at: usize,
    ) -> Result<Option<Vec<usize>>, Aborted> {
        self.best.clear();
        self.floor = floor;
        self.stop_at = stop_at;
        let mut current = Vec::new();
        self.expand(&mut current, candidates)?;
        Ok((!self.best.is_empty() && self.best.len() > floor).then(|| std::mem::take(&mut self.best)))
    }

    /// Best family found by the last call, useful after an abort.
    pub(crate) fn best_so_far(&self) -> &[usize] {
        &self.best
    }

    fn incumbent(&self) -> usize {
        self.best.len().max(self.floor)
    }

    fn color(&self, candidates: &FixedBitSet) -> (Vec<usize>, Vec<usize>) {
        let mut order = Vec::with_capacity(candidates.count_ones(..));
        let mut colors = Vec::with_capacity(order.capacity());
        let mut uncolored = candidates.clone();
        let mut color = 0;
        while !uncolored.is_clear() {
            color += 1;
            let mut class = uncolored.clone();
            while let Some(v) = class.minimum() {
                class.set(v, false);
                class.difference_with(&self.compatible[v]);
                uncolored.set(v, false);
                order.push(v);
                colors.push(color);
            }
        }
        (order, colors)
    }

    fn coverable_bound(&self, candidates: &FixedBitSet) -> usize {
        let mut covered = FixedBitSet::with_capacity(self.universe);
        for i in candidates.ones() {
            covered.union_with(&self.sets[i]);
        }
        covered.count_ones(..) / self.min_size
    }

    fn expand(&mut self, current: &mut Vec<usize>, mut candidates: FixedBitSet) -> Result<(), Aborted> {
        self.budget.tick()?;
        if candidates.is_clear() {
            if current.len() > self.incumbent() {
                self.best = current.clone();
            }
            return Ok(());
        }
        if current.len() + self.coverable_bound(&candidates) <= self.incumbent() {
            return Ok(());
        }
        let (order, colors) = self.color(&candidates);
        for i in (0..order.len()).rev() {
            if current.len() + colors[i] <= self.incumbent() || self.incumbent() >= self.stop_at {
                return Ok(());
            }
            let v = order[i];
            let mut next = candidates.clone();
            next.intersect_with(&self.compatible[v]);
            current.push(v);
            self.expand(current, next)?;
            current.pop();
            candidates.set(v, false);
        }
        Ok(())
    }
}

/// Disjoint sets picked in order of size then index. A valid lower bound.
pub(crate) fn greedy_disjoint(sets: &[FixedBitSet], universe: usize) -> Vec<usize> {
    let mut order: Vec<usize> = (0..sets.len()).collect();
    order.sort_by_key(|&i| (sets[i].count_ones(..), i));
    let mut used = FixedBitSet::with_capacity(universe);
    let mut chosen = Vec::new();
    for i in order {
        if used.is_disjoint(&sets[i]) {
            used.union_with(&sets[i]);
            chosen.push(i);
        }
    }
    chosen.sort_unstable();
    chosen
}
