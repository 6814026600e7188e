//! Naive reference implementations, independent of the library's solvers.
//! They only read adjacency from `Graph`.

#![allow(dead_code)]

use std::collections::BTreeSet;

use geopack::Graph;

const INF: usize = usize::MAX / 4;

pub fn floyd_warshall(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut d = vec![vec![INF; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = 0;
        for &v in g.neighbors(u) {
            row[v] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

fn oriented(mut p: Vec<usize>) -> Vec<usize> {
    if p.first() > p.last() {
        p.reverse();
    }
    p
}

/// Every simple path that is a shortest path, in both orientations.
fn all_geodesic_paths(g: &Graph, d: &[Vec<usize>]) -> Vec<Vec<usize>> {
    fn extend(g: &Graph, d: &[Vec<usize>], path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let (a, b) = (path[0], *path.last().unwrap());
        if d[a][b] != path.len() - 1 {
            return;
        }
        out.push(path.clone());
        for &w in g.neighbors(b) {
            if !path.contains(&w) {
                path.push(w);
                extend(g, d, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for v in 0..g.n() {
        extend(g, d, &mut vec![v], &mut out);
    }
    out
}

fn is_contiguous_subpath(p: &[usize], q: &[usize]) -> bool {
    q.windows(p.len()).any(|w| w == p) || q.windows(p.len()).any(|w| w.iter().rev().eq(p.iter()))
}

/// Geodesics that are not a proper contiguous subpath of another geodesic,
/// each oriented so that its first vertex is the smaller end.
pub fn maximal_geodesics(g: &Graph) -> BTreeSet<Vec<usize>> {
    let d = floyd_warshall(g);
    let geodesics = all_geodesic_paths(g, &d);
    geodesics
        .iter()
        .filter(|p| {
            !geodesics
                .iter()
                .any(|q| q.len() > p.len() && is_contiguous_subpath(p, q))
        })
        .map(|p| oriented(p.clone()))
        .collect()
}

/// Largest number of pairwise disjoint members of `sets`.
pub fn max_disjoint(sets: &[Vec<usize>]) -> usize {
    fn go(sets: &[Vec<usize>], used: &mut Vec<bool>) -> usize {
        let Some((first, rest)) = sets.split_first() else {
            return 0;
        };
        let skip = go(rest, used);
        if first.iter().any(|&v| used[v]) {
            return skip;
        }
        for &v in first {
            used[v] = true;
        }
        let take = 1 + go(rest, used);
        for &v in first {
            used[v] = false;
        }
        skip.max(take)
    }
    let n = sets.iter().flatten().max().map_or(0, |&m| m + 1);
    go(sets, &mut vec![false; n])
}

pub fn gpack(g: &Graph) -> usize {
    let sets: Vec<Vec<usize>> = maximal_geodesics(g).into_iter().collect();
    max_disjoint(&sets)
}

/// Smallest vertex set meeting every member of `sets`, by subset size.
pub fn min_hitting(n: usize, sets: &[Vec<usize>]) -> usize {
    for size in 0..=n {
        let mut chosen = vec![false; n];
        if hits_with(size, 0, n, sets, &mut chosen) {
            return size;
        }
    }
    unreachable!("the whole vertex set hits every non-empty set")
}

fn hits_with(left: usize, from: usize, n: usize, sets: &[Vec<usize>], chosen: &mut Vec<bool>) -> bool {
    if left == 0 {
        return sets.iter().all(|s| s.iter().any(|&v| chosen[v]));
    }
    for v in from..n {
        chosen[v] = true;
        let ok = hits_with(left - 1, v + 1, n, sets, chosen);
        chosen[v] = false;
        if ok {
            return true;
        }
    }
    false
}

pub fn gt(g: &Graph) -> usize {
    let sets: Vec<Vec<usize>> = maximal_geodesics(g).into_iter().collect();
    min_hitting(g.n(), &sets)
}

/// Induced three-vertex paths, as vertex sets.
pub fn induced_p3_sets(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in a + 1..n {
                if b != a && b != c && g.has_edge(a, b) && g.has_edge(b, c) && !g.has_edge(a, c) {
                    out.push(vec![a, b, c]);
                }
            }
        }
    }
    out
}

/// Some edge `uv` with `N[u] = N[v]`.
pub fn has_adjacent_closed_twins(g: &Graph) -> bool {
    g.edges().any(|(u, v)| {
        let mut nu: Vec<usize> = g.neighbors(u).iter().copied().chain([u]).collect();
        let mut nv: Vec<usize> = g.neighbors(v).iter().copied().chain([v]).collect();
        nu.sort_unstable();
        nv.sort_unstable();
        nu == nv
    })
}

pub fn is_bipartite(g: &Graph) -> bool {
    let mut side = vec![None; g.n()];
    for s in 0..g.n() {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                match side[w] {
                    None => {
                        side[w] = Some(!side[u].unwrap());
                        stack.push(w);
                    }
                    Some(x) if x == side[u].unwrap() => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

pub fn fig1() -> Graph {
    geopack::parse_edge_list(include_str!("../../data/fig1.edges")).unwrap()
}
