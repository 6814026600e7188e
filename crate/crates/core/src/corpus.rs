//! Test corpora: every graph or tree of a given order up to isomorphism, and
//! seeded random graphs.
//!
//! Exhaustive lists are built by vertex augmentation (every graph on `n`
//! vertices is a graph on `n - 1` vertices plus one vertex) and deduplicated
//! by a canonical form, so they are practical up to about seven vertices for
//! graphs and a dozen for trees.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Stable vertex colouring by iterated neighbour-colour refinement.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = colors.iter().collect::<BTreeSet<_>>().len();
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                around.sort_unstable();
                (colors[v], around)
            })
            .collect();
        let ranks: BTreeMap<&(usize, Vec<usize>), usize> = signatures
            .iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect();
        colors = signatures.iter().map(|s| ranks[s]).collect();
        let refined = ranks.len();
        if refined == classes {
            return colors;
        }
        classes = refined;
    }
}

fn permutations(items: &mut [usize], k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, visit);
        items.swap(k, i);
    }
}

fn code_of(g: &Graph, order: &[usize]) -> u64 {
    let mut code = 0u64;
    let mut bit = 0;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            if g.has_edge(order[i], order[j]) {
                code |= 1 << bit;
            }
            bit += 1;
        }
    }
    code
}

/// Canonical upper-triangle adjacency code and the vertex order realising
/// it. Two graphs of the same order are isomorphic iff their codes agree.
/// Limited to 11 vertices so the code fits in 64 bits.
pub fn canonical_code(g: &Graph) -> (u64, Vec<usize>) {
    assert!(g.n() <= 11, "canonical codes support at most 11 vertices");
    let colors = refine(g);
    let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (v, &c) in colors.iter().enumerate() {
        cells.entry(c).or_default().push(v);
    }
    let mut cells: Vec<Vec<usize>> = cells.into_values().collect();

    let mut best: Option<(u64, Vec<usize>)> = None;
    fn walk(g: &Graph, cells: &mut [Vec<usize>], prefix: &mut Vec<usize>, best: &mut Option<(u64, Vec<usize>)>) {
        let Some((first, rest)) = cells.split_first_mut() else {
            let code = code_of(g, prefix);
            if best.as_ref().is_none_or(|(b, _)| code < *b) {
                *best = Some((code, prefix.clone()));
            }
            return;
        };
        let mut cell = first.clone();
        permutations(&mut cell, 0, &mut |perm| {
            let len = prefix.len();
            prefix.extend_from_slice(perm);
            walk(g, rest, prefix, best);
            prefix.truncate(len);
        });
    }
    walk(g, &mut cells, &mut Vec::with_capacity(g.n()), &mut best);
    best.expect("at least one ordering")
}

fn relabel(g: &Graph, order: &[usize]) -> Graph {
    let mut position = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (position[u], position[v])).collect();
    Graph::from_edges(g.n(), &edges).expect("relabelled simple graph")
}

/// Every graph on `n` vertices up to isomorphism, each in canonical
/// labelling, ordered by canonical code.
pub fn graphs(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(0)];
    for k in 1..=n {
        let mut next: BTreeMap<u64, Graph> = BTreeMap::new();
        for g in &level {
            let old = g.edges().collect::<Vec<_>>();
            for mask in 0u32..1 << (k - 1) {
                let mut edges = old.clone();
                edges.extend((0..k - 1).filter(|&v| mask >> v & 1 == 1).map(|v| (v, k - 1)));
                let h = Graph::from_edges(k, &edges).expect("simple graph");
                let (code, order) = canonical_code(&h);
                next.entry(code).or_insert_with(|| relabel(&h, &order));
            }
        }
        level = next.into_values().collect();
    }
    level
}

pub fn connected_graphs(n: usize) -> Vec<Graph> {
    graphs(n).into_iter().filter(Graph::is_connected).collect()
}

/// Centre-rooted parenthesis encoding; equal iff the trees are isomorphic.
pub fn tree_code(t: &Graph) -> String {
    fn encode(t: &Graph, v: usize, parent: usize) -> String {
        let mut kids: Vec<String> = t
            .neighbors(v)
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| encode(t, w, v))
            .collect();
        kids.sort_unstable();
        format!("({})", kids.concat())
    }
    centers(t)
        .into_iter()
        .map(|c| encode(t, c, usize::MAX))
        .min()
        .unwrap_or_default()
}

fn centers(t: &Graph) -> Vec<usize> {
    let n = t.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in t.neighbors(v) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// Every tree on `n` vertices up to isomorphism, ordered by [`tree_code`].
pub fn trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    let mut level = vec![Graph::empty(1)];
    for k in 2..=n {
        let mut next: BTreeMap<String, Graph> = BTreeMap::new();
        for t in &level {
            for v in 0..k - 1 {
                let mut edges: Vec<(usize, usize)> = t.edges().collect();
                edges.push((v, k - 1));
                let grown = Graph::from_edges(k, &edges).expect("tree");
                next.entry(tree_code(&grown)).or_insert(grown);
            }
        }
        level = next.into_values().collect();
    }
    level
}

/// Tree on `seq.len() + 2` vertices with Prüfer sequence `seq`.
pub fn prufer_decode(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = leaves.pop_first().expect("a leaf remains");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.insert(v);
        }
    }
    let last: Vec<usize> = leaves.into_iter().collect();
    edges.push((last[0], last[1]));
    Graph::from_edges(n, &edges).expect("decoded tree")
}

/// Uniform labelled tree on `n` vertices.
pub fn random_tree(n: usize, rng: &mut impl Rng) -> Graph {
    if n < 2 {
        return Graph::empty(n);
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    prufer_decode(&seq)
}

/// `G(n, p)`.
pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, &edges).expect("simple graph")
}

/// A random tree with each remaining pair added with probability `p`.
pub fn random_connected_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let tree = random_tree(n, rng);
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| tree.has_edge(u, v) || rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, &edges).expect("simple graph")
}

/// Connected bipartite graph on `n >= 2` vertices with maximum degree 3.
pub fn random_bipartite_subcubic(n: usize, rng: &mut impl Rng) -> Graph {
    assert!(n >= 2, "a connected bipartite graph with an edge needs two vertices");
    loop {
        let mut side: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
        side[0] = false;
        side[1] = true;
        let mut order: Vec<usize> = (2..n).collect();
        order.shuffle(rng);

        let mut degree = vec![0; n];
        let mut edges = vec![(0, 1)];
        degree[0] = 1;
        degree[1] = 1;
        let mut placed = vec![0, 1];
        let mut stuck = false;
        for v in order {
            let hosts: Vec<usize> = placed
                .iter()
                .copied()
                .filter(|&u| side[u] != side[v] && degree[u] < 3)
                .collect();
            let Some(&u) = hosts.choose(rng) else {
                stuck = true;
                break;
            };
            edges.push((u.min(v), u.max(v)));
            degree[u] += 1;
            degree[v] += 1;
            placed.push(v);
        }
        if stuck {
            continue;
        }
        for u in 0..n {
            for v in u + 1..n {
                if side[u] != side[v] && degree[u] < 3 && degree[v] < 3 && !edges.contains(&(u, v)) && rng.gen_bool(0.3)
                {
                    edges.push((u, v));
                    degree[u] += 1;
                    degree[v] += 1;
                }
            }
        }
        return Graph::from_edges(n, &edges).expect("simple graph");
    }
}
