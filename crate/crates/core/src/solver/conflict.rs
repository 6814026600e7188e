use fixedbitset::FixedBitSet;

use crate::error::Result;
use crate::geodesic::GeodesicCatalog;

/// Catalog indices joined when their geodesics share a vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConflictGraph {
    rows: Vec<FixedBitSet>,
}

impl ConflictGraph {
    pub fn from_catalog(catalog: &GeodesicCatalog, n: usize) -> Result<Self> {
        let sets = vertex_sets(catalog.require_complete()?, n);
        Ok(ConflictGraph::from_sets(&sets))
    }

    pub(crate) fn from_sets(sets: &[FixedBitSet]) -> Self {
        let m = sets.len();
        let mut rows = vec![FixedBitSet::with_capacity(m); m];
        for i in 0..m {
            for j in i + 1..m {
                if !sets[i].is_disjoint(&sets[j]) {
                    rows[i].insert(j);
                    rows[j].insert(i);
                }
            }
        }
        ConflictGraph { rows }
    }

    pub fn node_count(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    pub fn conflicts(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[i].ones()
    }

    pub(crate) fn row(&self, i: usize) -> &FixedBitSet {
        &self.rows[i]
    }
}

pub(crate) fn vertex_sets(catalog: &GeodesicCatalog, n: usize) -> Vec<FixedBitSet> {
    catalog
        .geodesics()
        .iter()
        .map(|p| {
            let mut set = FixedBitSet::with_capacity(n);
            for &v in p.vertices() {
                set.insert(v);
            }
            set
        })
        .collect()
}
