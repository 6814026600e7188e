//! Hop distances, geodesic predicates and enumeration of maximal geodesics.
//!
//! Maximality is decided at the endpoints: a geodesic `u … v` of length `d`
//! lies inside a longer geodesic iff some neighbour `w` of `u` has
//! `dist(w, v) = d + 1` (or symmetrically at `v`). Since that test only
//! looks at the endpoints, either every `u,v`-geodesic is maximal or none
//! is, and enumeration only has to walk the shortest-path DAG of the pairs
//! that pass.

use std::collections::VecDeque;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_CAP: usize = 100_000;

const UNREACHABLE: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceTable {
    /// `None` when `u` and `v` lie in different components.
    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        match self.dist[u * self.n + v] {
            UNREACHABLE => None,
            d => Some(d as usize),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn raw(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn is_connected(&self) -> bool {
        !self.dist.contains(&UNREACHABLE)
    }

    /// Largest finite distance, or `None` for a disconnected graph.
    pub fn diameter(&self) -> Option<usize> {
        if !self.is_connected() {
            return None;
        }
        Some(self.dist.iter().copied().max().unwrap_or(0) as usize)
    }
}

/// Breadth-first search from every vertex.
pub fn all_pairs_distances(g: &Graph) -> DistanceTable {
    let n = g.n();
    let mut dist = vec![UNREACHABLE; n * n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        row[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let next = row[u] + 1;
            for &w in g.neighbors(u) {
                if row[w] == UNREACHABLE {
                    row[w] = next;
                    queue.push_back(w);
                }
            }
        }
    }
    DistanceTable { n, dist }
}

/// A shortest path stored in canonical orientation (first id < last id).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Geodesic(Vec<usize>);

impl Geodesic {
    /// Checks the shortest-path property against `dist` and canonicalises.
    pub fn new(g: &Graph, dist: &DistanceTable, vertices: Vec<usize>) -> Result<Self> {
        if !is_geodesic_with(g, dist, &vertices) {
            return Err(Error::ContractViolation(format!("{vertices:?} is not a geodesic")));
        }
        Ok(Geodesic::canonical(vertices))
    }

    pub(crate) fn canonical(mut vertices: Vec<usize>) -> Self {
        if vertices.first() > vertices.last() {
            vertices.reverse();
        }
        Geodesic(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// Edge count.
    pub fn length(&self) -> usize {
        self.0.len() - 1
    }

    /// Vertex count, `n(P)`.
    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn last(&self) -> usize {
        self.0[self.0.len() - 1]
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn is_disjoint(&self, other: &Geodesic) -> bool {
        !self.0.iter().any(|v| other.0.contains(v))
    }
}

impl Serialize for Geodesic {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

pub fn is_geodesic(g: &Graph, path: &[usize]) -> bool {
    is_geodesic_with(g, &all_pairs_distances(g), path)
}

/// Distinct, consecutively adjacent vertices whose count matches the
/// distance between the endpoints.
pub fn is_geodesic_with(g: &Graph, dist: &DistanceTable, path: &[usize]) -> bool {
    let (Some(&first), Some(&last)) = (path.first(), path.last()) else {
        return false;
    };
    if path.iter().any(|&v| v >= g.n()) {
        return false;
    }
    if !path.windows(2).all(|w| g.has_edge(w[0], w[1])) {
        return false;
    }
    let mut seen = path.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len() == path.len() && dist.get(first, last) == Some(path.len() - 1)
}

/// No one-vertex extension at either end is a geodesic.
fn pair_is_maximal(g: &Graph, dist: &DistanceTable, u: usize, v: usize) -> bool {
    let Some(d) = dist.get(u, v) else {
        return false;
    };
    let longer = d as u32 + 1;
    !g.neighbors(u).iter().any(|&w| dist.raw(w, v) == longer)
        && !g.neighbors(v).iter().any(|&w| dist.raw(w, u) == longer)
}

pub fn is_maximal_geodesic(g: &Graph, dist: &DistanceTable, path: &[usize]) -> Result<bool> {
    if !is_geodesic_with(g, dist, path) {
        return Err(Error::ContractViolation(format!("{path:?} is not a geodesic")));
    }
    Ok(pair_is_maximal(g, dist, path[0], path[path.len() - 1]))
}

/// Every maximal geodesic of a graph, or a prefix of them when the cap hit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeodesicCatalog {
    geodesics: Vec<Geodesic>,
    complete: bool,
    cap: usize,
}

impl GeodesicCatalog {
    /// Sorted lexicographically.
    pub fn geodesics(&self) -> &[Geodesic] {
        &self.geodesics
    }

    pub fn len(&self) -> usize {
        self.geodesics.len()
    }

    pub fn is_empty(&self) -> bool {
        self.geodesics.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Fails with `EnumerationOverflow` unless enumeration finished.
    pub fn require_complete(&self) -> Result<&Self> {
        if self.complete {
            Ok(self)
        } else {
            Err(Error::EnumerationOverflow { cap: self.cap })
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("catalog serialisation is infallible")
    }
}

impl Serialize for GeodesicCatalog {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("GeodesicCatalog", 3)?;
        s.serialize_field("complete", &self.complete)?;
        s.serialize_field("count", &self.geodesics.len())?;
        s.serialize_field("geodesics", &self.geodesics)?;
        s.end()
    }
}

pub fn enumerate_maximal_geodesics(g: &Graph, cap: usize) -> Result<GeodesicCatalog> {
    enumerate_maximal_geodesics_with(g, &all_pairs_distances(g), cap)
}

pub fn enumerate_maximal_geodesics_with(g: &Graph, dist: &DistanceTable, cap: usize) -> Result<GeodesicCatalog> {
    if cap == 0 {
        return Err(Error::ContractViolation("enumeration cap must be positive".into()));
    }
    let mut geodesics = Vec::new();
    let mut complete = true;
    'pairs: for u in 0..g.n() {
        if g.degree(u) == 0 {
            if geodesics.len() == cap {
                complete = false;
                break;
            }
            geodesics.push(Geodesic(vec![u]));
            continue;
        }
        for v in u + 1..g.n() {
            if !pair_is_maximal(g, dist, u, v) {
                continue;
            }
            if !walk_geodesics(g, dist, u, v, cap, &mut geodesics) {
                complete = false;
                break 'pairs;
            }
        }
    }
    geodesics.sort_unstable();
    Ok(GeodesicCatalog {
        geodesics,
        complete,
        cap,
    })
}

/// Depth-first over the `u → v` shortest-path DAG, lowest id first.
/// Returns false once the output would exceed `cap`.
fn walk_geodesics(g: &Graph, dist: &DistanceTable, u: usize, v: usize, cap: usize, out: &mut Vec<Geodesic>) -> bool {
    fn step(
        g: &Graph,
        dist: &DistanceTable,
        v: usize,
        path: &mut Vec<usize>,
        cap: usize,
        out: &mut Vec<Geodesic>,
    ) -> bool {
        let cur = *path.last().expect("path starts non-empty");
        if cur == v {
            if out.len() == cap {
                return false;
            }
            out.push(Geodesic(path.clone()));
            return true;
        }
        let remaining = dist.raw(cur, v);
        for &w in g.neighbors(cur) {
            if dist.raw(w, v) + 1 == remaining {
                path.push(w);
                let ok = step(g, dist, v, path, cap, out);
                path.pop();
                if !ok {
                    return false;
                }
            }
        }
        true
    }
    let mut path = vec![u];
    step(g, dist, v, &mut path, cap, out)
}

pub fn shortest_maximal_geodesic_length(catalog: &GeodesicCatalog) -> Result<usize> {
    catalog
        .require_complete()?
        .geodesics
        .iter()
        .map(Geodesic::length)
        .min()
        .ok_or_else(|| Error::ContractViolation("empty catalog".into()))
}

/// Every maximal geodesic has length `diam(G)`.
pub fn is_uniform_geodesic(g: &Graph, catalog: &GeodesicCatalog) -> Result<bool> {
    if g.is_empty() {
        return Err(Error::Domain("the empty graph has no diameter".into()));
    }
    let diam = all_pairs_distances(g)
        .diameter()
        .ok_or_else(|| Error::Domain("uniform geodesic graphs must be connected".into()))?;
    Ok(catalog.require_complete()?.geodesics.iter().all(|p| p.length() == diam))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec;

    fn gen(spec: &str) -> Graph {
        spec.parse::<FamilySpec>().unwrap().generate().unwrap()
    }

    fn catalog(g: &Graph) -> GeodesicCatalog {
        enumerate_maximal_geodesics(g, DEFAULT_CAP).unwrap()
    }

    #[test]
    fn distances_on_path_and_rook() {
        let p4 = all_pairs_distances(&gen("path:4"));
        assert_eq!(p4.get(0, 3), Some(3));
        let rook = all_pairs_distances(&gen("rook:3"));
        assert_eq!(rook.diameter(), Some(2));
        for u in 0..9 {
            for v in 0..9 {
                let d = rook.get(u, v).unwrap();
                assert_eq!(d == 0, u == v);
                assert!(d <= 2);
            }
        }
    }

    #[test]
    fn disconnected_distance_is_none() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let d = all_pairs_distances(&g);
        assert_eq!(d.get(0, 2), None);
        assert_eq!(d.get(1, 0), Some(1));
        assert_eq!(d.diameter(), None);
    }

    #[test]
    fn geodesic_predicate_on_c4() {
        let c4 = gen("cycle:4");
        assert!(is_geodesic(&c4, &[0, 1, 2]));
        assert!(!is_geodesic(&c4, &[0, 1, 2, 3]));
        assert!(!is_geodesic(&c4, &[0, 2]));
        assert!(!is_geodesic(&c4, &[0, 1, 0]));
        assert!(!is_geodesic(&c4, &[]));
        assert!(!is_geodesic(&c4, &[0, 9]));
    }

    #[test]
    fn rook_l_shape_is_geodesic() {
        let rook = gen("rook:3");
        let id = |r: i64, c: i64| rook.vertex_with_label(&[r - 1, c - 1]).unwrap();
        assert!(is_geodesic(&rook, &[id(1, 2), id(1, 1), id(2, 1)]));
    }

    #[test]
    fn maximality() {
        let p5 = gen("path:5");
        let d = all_pairs_distances(&p5);
        assert!(is_maximal_geodesic(&p5, &d, &[0, 1, 2, 3, 4]).unwrap());
        assert!(!is_maximal_geodesic(&p5, &d, &[1, 2, 3]).unwrap());
        assert!(!is_maximal_geodesic(&p5, &d, &[2]).unwrap());
        assert!(is_maximal_geodesic(&p5, &d, &[0, 2]).is_err());

        let k3 = gen("complete:3");
        assert!(is_maximal_geodesic(&k3, &all_pairs_distances(&k3), &[0, 1]).unwrap());

        let k33 = gen("complete_bipartite:3,3");
        assert!(is_maximal_geodesic(&k33, &all_pairs_distances(&k33), &[0, 3, 1]).unwrap());
    }

    #[test]
    fn catalog_examples() {
        let p5 = catalog(&gen("path:5"));
        assert_eq!(p5.len(), 1);
        assert_eq!(p5.geodesics()[0].vertices(), &[0, 1, 2, 3, 4]);

        let k4 = catalog(&gen("complete:4"));
        assert_eq!(k4.len(), 6);
        assert!(k4.geodesics().iter().all(|p| p.length() == 1));

        let grid = catalog(&gen("diagonal_grid:2,3"));
        assert!(grid.geodesics().iter().all(|p| p.order() == 2 || p.order() == 3));
    }

    #[test]
    fn isolated_vertices_are_trivial_geodesics() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let c = catalog(&g);
        let got: Vec<&[usize]> = c.geodesics().iter().map(Geodesic::vertices).collect();
        assert_eq!(got, vec![&[0, 1][..], &[2][..]]);
    }

    #[test]
    fn cap_truncates() {
        let c = enumerate_maximal_geodesics(&gen("complete:5"), 4).unwrap();
        assert!(!c.is_complete());
        assert_eq!(c.len(), 4);
        assert_eq!(
            shortest_maximal_geodesic_length(&c),
            Err(Error::EnumerationOverflow { cap: 4 })
        );
        assert!(enumerate_maximal_geodesics(&gen("complete:5"), 10)
            .unwrap()
            .is_complete());
    }

    #[test]
    fn shortest_lengths() {
        assert_eq!(
            shortest_maximal_geodesic_length(&catalog(&gen("complete:5"))).unwrap(),
            1
        );
        assert_eq!(
            shortest_maximal_geodesic_length(&catalog(&gen("complete_bipartite:3,3"))).unwrap(),
            2
        );
        assert_eq!(
            shortest_maximal_geodesic_length(&catalog(&gen("diagonal_grid:3,4"))).unwrap(),
            2
        );
    }

    #[test]
    fn uniform_geodesic_examples() {
        for spec in [
            "complete:5",
            "cycle:5",
            "cycle:6",
            "path:4",
            "rook:2",
            "rook:3",
            "rook:4",
        ] {
            let g = gen(spec);
            assert!(is_uniform_geodesic(&g, &catalog(&g)).unwrap(), "{spec}");
        }
        // K_{1,3} with a pendant on one leaf
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (1, 4)]).unwrap();
        let c = catalog(&g);
        let lengths: Vec<usize> = c.geodesics().iter().map(Geodesic::length).collect();
        assert!(lengths.contains(&2) && lengths.contains(&3));
        assert!(!is_uniform_geodesic(&g, &c).unwrap());

        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            is_uniform_geodesic(&split, &catalog(&split)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn catalog_json() {
        let c = catalog(&gen("path:3"));
        assert_eq!(c.to_json(), r#"{"complete":true,"count":1,"geodesics":[[0,1,2]]}"#);
    }
}
