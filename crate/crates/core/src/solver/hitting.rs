//! Minimum hitting set of a family of vertex sets.
//!
//! Branches on the vertices of an unhit set with the fewest usable vertices;
//! vertices already tried at a node are forbidden in later siblings, so every
//! hitting set is generated at most once. The lower bound is a greedily
//! built collection of unhit sets that are pairwise disjoint on usable
//! vertices, each of which needs its own vertex.

use fixedbitset::FixedBitSet;

use super::budget::{Aborted, Budget};

pub(crate) struct HittingSearch<'a> {
    sets: &'a [FixedBitSet],
    /// `hits[v]`: indices of the sets containing vertex `v`.
    hits: Vec<FixedBitSet>,
    n: usize,
    budget: &'a mut Budget,
    best: Option<Vec<usize>>,
    ceiling: usize,
    stop_at: usize,
}

impl<'a> HittingSearch<'a> {
    pub(crate) fn new(sets: &'a [FixedBitSet], n: usize, budget: &'a mut Budget) -> Self {
        let mut hits = vec![FixedBitSet::with_capacity(sets.len()); n];
        for (i, set) in sets.iter().enumerate() {
            for v in set.ones() {
                hits[v].insert(i);
            }
        }
        HittingSearch {
            sets,
            hits,
            n,
            budget,
            best: None,
            ceiling: usize::MAX,
            stop_at: 0,
        }
    }

    pub(crate) fn all_sets(&self) -> FixedBitSet {
        let mut all = FixedBitSet::with_capacity(self.sets.len());
        all.insert_range(..);
        all
    }

    pub(crate) fn without_hits(&self, unhit: &FixedBitSet, v: usize) -> FixedBitSet {
        let mut rest = unhit.clone();
        rest.difference_with(&self.hits[v]);
        rest
    }

    /// Repeatedly takes the vertex hitting the most unhit sets.
    pub(crate) fn greedy(&self) -> Vec<usize> {
        let mut unhit = self.all_sets();
        let mut chosen = Vec::new();
        while !unhit.is_clear() {
            let v = (0..self.n)
                .max_by_key(|&v| (self.hits[v].intersection_count(&unhit), std::cmp::Reverse(v)))
                .expect("an unhit set has a vertex");
            unhit.difference_with(&self.hits[v]);
            chosen.push(v);
        }
        chosen.sort_unstable();
        chosen
    }

    /// Size of a family of unhit sets pairwise disjoint outside `forbidden`,
    /// or `None` when some unhit set has no usable vertex.
    pub(crate) fn disjoint_bound(&self, unhit: &FixedBitSet, forbidden: &FixedBitSet) -> Option<(usize, usize)> {
        let mut usable: Vec<(usize, usize, FixedBitSet)> = unhit
            .ones()
            .map(|i| {
                let mut set = self.sets[i].clone();
                set.difference_with(forbidden);
                (set.count_ones(..), i, set)
            })
            .collect();
        usable.sort_unstable_by_key(|&(size, i, _)| (size, i));
        let &(smallest, pivot, _) = usable.first()?;
        if smallest == 0 {
            return None;
        }
        let mut used = FixedBitSet::with_capacity(self.n);
        let mut count = 0;
        for (_, _, set) in &usable {
            if used.is_disjoint(set) {
                used.union_with(set);
                count += 1;
            }
        }
        Some((count, pivot))
    }

    /// A hitting set of `unhit` avoiding `forbidden` with fewer than
    /// `ceiling` vertices, as small as possible. Stops as soon as one of
    /// size `stop_at` or less is found.
    pub(crate) fn minimum(
        &mut self,
        unhit: FixedBitSet,
        forbidden: FixedBitSet,
        ceiling: usize,
        stop_at: usize,
    ) -> Result<Option<Vec<usize>>, Aborted> {
        self.best = None;
        self.ceiling = ceiling;
        self.stop_at = stop_at;
        let mut chosen = Vec::new();
        self.expand(&mut chosen, unhit, forbidden)?;
        Ok(self.best.take())
    }

    fn incumbent(&self) -> usize {
        self.best.as_ref().map_or(self.ceiling, Vec::len)
    }

    fn done(&self) -> bool {
        self.best.as_ref().is_some_and(|b| b.len() <= self.stop_at)
    }

    fn expand(&mut self, chosen: &mut Vec<usize>, unhit: FixedBitSet, forbidden: FixedBitSet) -> Result<(), Aborted> {
        self.budget.tick()?;
        if unhit.is_clear() {
            if chosen.len() < self.incumbent() {
                let mut found = chosen.clone();
                found.sort_unstable();
                self.best = Some(found);
            }
            return Ok(());
        }
        let Some((bound, pivot)) = self.disjoint_bound(&unhit, &forbidden) else {
            return Ok(());
        };
        if chosen.len() + bound >= self.incumbent() {
            return Ok(());
        }
        let mut branch: Vec<usize> = self.sets[pivot].ones().filter(|&v| !forbidden.contains(v)).collect();
        branch.sort_by_key(|&v| (std::cmp::Reverse(self.hits[v].intersection_count(&unhit)), v));

        let mut forbidden = forbidden;
        for v in branch {
            let rest = self.without_hits(&unhit, v);
            chosen.push(v);
            self.expand(chosen, rest, forbidden.clone())?;
            chosen.pop();
            if self.done() {
                return Ok(());
            }
            forbidden.insert(v);
        }
        Ok(())
    }

    /// Best hitting set found by the last call, useful after an abort.
    pub(crate) fn best_so_far(&self) -> Option<&[usize]> {
        self.best.as_deref()
    }
}
