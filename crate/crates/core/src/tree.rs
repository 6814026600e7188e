//! Geodesic packing of trees in linear time.
//!
//! In a tree every maximal geodesic joins two leaves, so a packing is a set
//! of leaf pairs. The solver smooths the tree once, then repeatedly takes an
//! end support vertex `p` of the smoothed tree, records two of its leaves,
//! deletes `p` with all its leaves and re-smooths the one vertex whose degree
//! dropped. Smoothing keeps leaf ids, so every recorded pair is a pair of
//! leaves of the input tree.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::{gpack_exact, gt_exact, SolveLimits};

/// Leaf pairs whose tree paths form a maximum geodesic packing.
///
/// A tree on one vertex is reported as the degenerate pair `(0, 0)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LeafPairSet {
    pairs: Vec<(usize, usize)>,
}

impl LeafPairSet {
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn value(&self) -> usize {
        self.pairs.len()
    }

    /// `{"gpack": k, "pairs": [[u, v], ...]}` sorted by first element.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Out {
            gpack: usize,
            pairs: Vec<[usize; 2]>,
        }
        let mut pairs: Vec<[usize; 2]> = self.pairs.iter().map(|&(u, v)| [u, v]).collect();
        pairs.sort_unstable();
        serde_json::to_string(&Out {
            gpack: self.value(),
            pairs,
        })
        .expect("plain data")
    }
}

fn require_tree(t: &Graph) -> Result<()> {
    if t.is_tree() {
        Ok(())
    } else {
        Err(Error::Domain("input is not a tree".into()))
    }
}

fn is_end_support(t: &Graph, v: usize) -> bool {
    let leaves = t.neighbors(v).iter().filter(|&&w| t.degree(w) == 1).count();
    leaves >= 1 && t.degree(v) - leaves <= 1
}

/// Lowest-id support vertex with at most one non-leaf neighbour.
pub fn find_end_support_vertex(t: &Graph) -> Result<usize> {
    if !t.is_tree() || t.n() < 2 {
        return Err(Error::ContractViolation(
            "expected a tree on at least two vertices".into(),
        ));
    }
    if let Some(v) = (0..t.n()).find(|&v| t.degree(v) == 2) {
        return Err(Error::ContractViolation(format!("vertex {v} has degree 2")));
    }
    Ok((0..t.n())
        .find(|&v| is_end_support(t, v))
        .expect("every tree on two or more vertices has an end support vertex"))
}

/// Mutable smoothed tree over the original vertex ids.
struct Scratch {
    adj: Vec<Vec<usize>>,
    alive: Vec<bool>,
    degree: Vec<usize>,
    leaf_neighbors: Vec<usize>,
    count: usize,
}

impl Scratch {
    /// Contracts every chain of degree-2 vertices in `t` into one edge.
    fn smoothed(t: &Graph) -> Self {
        let n = t.n();
        let alive: Vec<bool> = (0..n).map(|v| t.degree(v) != 2).collect();
        let mut adj = vec![Vec::new(); n];
        for v in (0..n).filter(|&v| alive[v]) {
            for &first in t.neighbors(v) {
                let (mut prev, mut cur) = (v, first);
                while t.degree(cur) == 2 {
                    let next = t
                        .neighbors(cur)
                        .iter()
                        .copied()
                        .find(|&w| w != prev)
                        .expect("degree two");
                    prev = cur;
                    cur = next;
                }
                adj[v].push(cur);
            }
        }
        let degree: Vec<usize> = adj.iter().map(Vec::len).collect();
        let leaf_neighbors = adj
            .iter()
            .map(|list| list.iter().filter(|&&w| degree[w] == 1).count())
            .collect();
        let count = alive.iter().filter(|&&a| a).count();
        Scratch {
            adj,
            alive,
            degree,
            leaf_neighbors,
            count,
        }
    }

    fn is_end_support(&self, v: usize) -> bool {
        self.alive[v]
            && self.degree[v] >= 2
            && self.leaf_neighbors[v] >= 1
            && self.degree[v] - self.leaf_neighbors[v] <= 1
    }

    fn live_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied().filter(|&w| self.alive[w])
    }

    fn kill(&mut self, v: usize) {
        self.alive[v] = false;
        self.count -= 1;
    }
}

/// `gpack(T)` with a witness, in time linear in `n(T)`.
pub fn gpack_tree(t: &Graph) -> Result<LeafPairSet> {
    require_tree(t)?;
    match t.n() {
        0 => return Ok(LeafPairSet::default()),
        1 => return Ok(LeafPairSet { pairs: vec![(0, 0)] }),
        _ => {}
    }

    let mut s = Scratch::smoothed(t);
    let mut work: Vec<usize> = (0..t.n()).rev().filter(|&v| s.is_end_support(v)).collect();
    let mut pairs = Vec::new();

    while s.count >= 3 {
        let p = loop {
            let v = work
                .pop()
                .expect("a tree on three or more vertices has an end support vertex");
            if s.is_end_support(v) {
                break v;
            }
        };
        let mut leaves = Vec::new();
        let mut inner = None;
        for w in s.live_neighbors(p) {
            if s.degree[w] == 1 {
                leaves.push(w);
            } else {
                inner = Some(w);
            }
        }
        leaves.sort_unstable();
        pairs.push((leaves[0], leaves[1]));
        s.kill(p);
        for &leaf in &leaves {
            s.kill(leaf);
        }

        let Some(w) = inner else { continue };
        s.degree[w] -= 1;
        match s.degree[w] {
            2 => {
                let ends: Vec<usize> = s.live_neighbors(w).collect();
                let (x, y) = (ends[0], ends[1]);
                s.kill(w);
                s.adj[x].push(y);
                s.adj[y].push(x);
                for (a, b) in [(x, y), (y, x)] {
                    if s.degree[a] == 1 {
                        s.leaf_neighbors[b] += 1;
                        work.push(b);
                    }
                }
            }
            1 => {
                let q = s.live_neighbors(w).next().expect("one neighbour");
                s.leaf_neighbors[q] += 1;
                work.push(q);
            }
            _ => work.push(w),
        }
    }

    if s.count == 2 {
        let mut rest = (0..t.n()).filter(|&v| s.alive[v]);
        let (u, v) = (rest.next().expect("two left"), rest.next().expect("two left"));
        pairs.push((u, v));
    }
    Ok(LeafPairSet { pairs })
}

/// The unique `u,v`-path of a tree.
pub fn tree_path(t: &Graph, u: usize, v: usize) -> Vec<usize> {
    let mut parent = vec![usize::MAX; t.n()];
    parent[u] = u;
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        if x == v {
            break;
        }
        for &w in t.neighbors(x) {
            if parent[w] == usize::MAX {
                parent[w] = x;
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![v];
    let mut cur = v;
    while cur != u {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    path
}

/// Checks `gpack_tree(T) = gt(T)`, cross-checked against the general solver.
pub fn verify_tree_equality(t: &Graph, limits: &SolveLimits) -> Result<bool> {
    let fast = gpack_tree(t)?.value();
    let gt = gt_exact(t, limits)?.value();
    let gpack = gpack_exact(t, limits)?.value();
    Ok(fast == gt && fast == gpack)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec;

    fn gen(spec: &str) -> Graph {
        spec.parse::<FamilySpec>().unwrap().generate().unwrap()
    }

    fn double_star() -> Graph {
        // centers 0 and 1, leaves 2, 3 on 0 and 4, 5 on 1
        Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap()
    }

    fn spider(legs: usize, length: usize) -> Graph {
        let mut edges = Vec::new();
        let mut next = 1;
        for _ in 0..legs {
            let mut prev = 0;
            for _ in 0..length {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        Graph::from_edges(next, &edges).unwrap()
    }

    #[test]
    fn end_support_examples() {
        assert_eq!(find_end_support_vertex(&gen("star:3")).unwrap(), 0);
        assert_eq!(find_end_support_vertex(&double_star()).unwrap(), 0);
        assert_eq!(find_end_support_vertex(&gen("path:2")).unwrap(), 0);
        assert!(matches!(
            find_end_support_vertex(&gen("path:3")),
            Err(Error::ContractViolation(_))
        ));
        assert!(matches!(
            find_end_support_vertex(&gen("cycle:4")),
            Err(Error::ContractViolation(_))
        ));
    }

    #[test]
    fn paths_and_stars() {
        for n in 2..8 {
            let r = gpack_tree(&gen(&format!("path:{n}"))).unwrap();
            assert_eq!(r.pairs(), &[(0, n - 1)]);
        }
        for n in 1..6 {
            assert_eq!(gpack_tree(&gen(&format!("star:{n}"))).unwrap().value(), 1);
        }
    }

    #[test]
    fn double_star_packs_two() {
        let r = gpack_tree(&double_star()).unwrap();
        assert_eq!(r.pairs(), &[(2, 3), (4, 5)]);
    }

    #[test]
    fn spider_with_four_long_legs_packs_one() {
        // Every leaf-to-leaf path runs through the center.
        assert_eq!(gpack_tree(&spider(4, 2)).unwrap().value(), 1);
        assert_eq!(gpack_exact(&spider(4, 2), &SolveLimits::default()).unwrap().value(), 1);
    }

    #[test]
    fn trivial_trees() {
        assert_eq!(gpack_tree(&Graph::empty(0)).unwrap().value(), 0);
        assert_eq!(gpack_tree(&Graph::empty(1)).unwrap().pairs(), &[(0, 0)]);
    }

    #[test]
    fn non_trees_are_rejected() {
        assert!(matches!(gpack_tree(&gen("cycle:5")), Err(Error::Domain(_))));
        assert!(matches!(gpack_tree(&Graph::empty(2)), Err(Error::Domain(_))));
    }

    #[test]
    fn chain_left_behind_by_deletion_is_smoothed() {
        // 0 is a support vertex for leaves 1, 2; its inner neighbour 3 drops
        // to degree 2 and must be smoothed so 4 and 5 become end vertices.
        let t = Graph::from_edges(9, &[(0, 1), (0, 2), (0, 3), (3, 4), (3, 5), (4, 6), (4, 7), (5, 8)]).unwrap();
        let r = gpack_tree(&t).unwrap();
        assert_eq!(r.value(), gpack_exact(&t, &SolveLimits::default()).unwrap().value());
        assert!(verify_tree_equality(&t, &SolveLimits::default()).unwrap());
    }

    #[test]
    fn tree_paths() {
        let t = double_star();
        assert_eq!(tree_path(&t, 2, 5), vec![2, 0, 1, 5]);
        assert_eq!(tree_path(&t, 3, 3), vec![3]);
    }

    #[test]
    fn json_shape() {
        let r = gpack_tree(&double_star()).unwrap();
        assert_eq!(r.to_json(), r#"{"gpack":2,"pairs":[[2,3],[4,5]]}"#);
    }
}
