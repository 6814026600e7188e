//! Graph products, the derived graph used by the hardness reduction, and
//! smoothing of degree-2 vertices.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, Label, Reindexed};

fn coordinates(g: &Graph, v: usize) -> Label {
    g.label(v).cloned().unwrap_or_else(|| vec![v as i64])
}

fn product_labels(g: &Graph, h: &Graph) -> Vec<Label> {
    let mut labels = Vec::with_capacity(g.n() * h.n());
    for a in 0..g.n() {
        for b in 0..h.n() {
            let mut label = coordinates(g, a);
            label.extend(coordinates(h, b));
            labels.push(label);
        }
    }
    labels
}

fn check_operands(g: &Graph, h: &Graph) -> Result<()> {
    if g.is_empty() || h.is_empty() {
        return Err(Error::Spec("graph products need nonempty operands".into()));
    }
    Ok(())
}

/// `G □ H`. Vertex `(a, b)` gets id `a * n(H) + b`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    check_operands(g, h)?;
    let m = h.n();
    let mut edges = Vec::with_capacity(g.n() * h.edge_count() + m * g.edge_count());
    for a in 0..g.n() {
        for (b, b2) in h.edges() {
            edges.push((a * m + b, a * m + b2));
        }
    }
    for (a, a2) in g.edges() {
        for b in 0..m {
            edges.push((a * m + b, a2 * m + b));
        }
    }
    Graph::from_edges(g.n() * m, &edges)?.with_labels(product_labels(g, h))
}

/// `G ⊠ H`: the Cartesian product plus both diagonals for every edge pair.
pub fn strong_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let cart = cartesian_product(g, h)?;
    let m = h.n();
    let mut edges: Vec<(usize, usize)> = cart.edges().collect();
    for (a, a2) in g.edges() {
        for (b, b2) in h.edges() {
            edges.push((a * m + b, a2 * m + b2));
            edges.push((a * m + b2, a2 * m + b));
        }
    }
    Graph::from_edges(cart.n(), &edges)?.with_labels(product_labels(g, h))
}

/// Appends `x`, `y`, `z` (ids `n`, `n+1`, `n+2`) with `z` joined to
/// everything and `x`, `y` pendant on `z`.
pub fn derived_graph(g: &Graph) -> Result<Graph> {
    if g.is_empty() {
        return Err(Error::ContractViolation("derived graph of the empty graph".into()));
    }
    let n = g.n();
    let (x, y, z) = (n, n + 1, n + 2);
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.push((x, z));
    edges.push((z, y));
    edges.extend((0..n).map(|v| (v, z)));
    Graph::from_edges(n + 3, &edges)
}

/// Smooths degree-2 vertices until none can be smoothed without creating a
/// parallel edge, always taking the lowest eligible id first.
///
/// Survivors keep their relative order; `origin` maps back to input ids.
pub fn smooth(g: &Graph) -> Reindexed {
    let n = g.n();
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut alive = vec![true; n];

    let eligible = |adj: &[BTreeSet<usize>], alive: &[bool], u: usize| -> Option<(usize, usize)> {
        if !alive[u] || adj[u].len() != 2 {
            return None;
        }
        let mut it = adj[u].iter();
        let (x, y) = (*it.next()?, *it.next()?);
        (!adj[x].contains(&y)).then_some((x, y))
    };

    let mut start = 0;
    loop {
        let found = (start..n).find_map(|u| eligible(&adj, &alive, u).map(|p| (u, p)));
        let Some((u, (x, y))) = found else { break };
        alive[u] = false;
        adj[u].clear();
        adj[x].remove(&u);
        adj[y].remove(&u);
        adj[x].insert(y);
        adj[y].insert(x);
        // Only x and y can have become eligible; the new edge xy only blocks others.
        start = u.min(x).min(y);
    }

    let origin: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    let mut new_id = vec![usize::MAX; n];
    for (i, &v) in origin.iter().enumerate() {
        new_id[v] = i;
    }
    let edges = origin
        .iter()
        .flat_map(|&v| adj[v].iter().filter(move |&&w| w > v).map(move |&w| (v, w)))
        .map(|(v, w)| (new_id[v], new_id[w]));
    let mut graph = Graph::from_edges_lossy(origin.len(), edges.collect::<Vec<_>>());
    if let Some(labels) = g.labels() {
        graph = graph
            .with_labels(origin.iter().map(|&v| labels[v].clone()).collect())
            .expect("subset of distinct labels");
    }
    Reindexed { graph, origin }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec;

    fn gen(spec: &str) -> Graph {
        spec.parse::<FamilySpec>().unwrap().generate().unwrap()
    }

    #[test]
    fn k2_products() {
        let k2 = gen("complete:2");
        let c4 = cartesian_product(&k2, &k2).unwrap();
        assert_eq!(c4.edge_count(), 4);
        assert!((0..4).all(|v| c4.degree(v) == 2));
        let k4 = strong_product(&k2, &k2).unwrap();
        assert_eq!(k4.edge_count(), 6);
    }

    #[test]
    fn grid_edge_counts() {
        let (p2, p3) = (gen("path:2"), gen("path:3"));
        assert_eq!(cartesian_product(&p2, &p3).unwrap().edge_count(), 7);
        assert_eq!(strong_product(&p2, &p3).unwrap().edge_count(), 11);
        let k3 = gen("complete:3");
        let rook = cartesian_product(&k3, &k3).unwrap();
        assert_eq!((rook.n(), rook.edge_count()), (9, 18));
    }

    #[test]
    fn triple_strong_product_of_k2_is_k8() {
        let p2 = gen("path:2");
        let g = strong_product(&strong_product(&p2, &p2).unwrap(), &p2).unwrap();
        assert_eq!((g.n(), g.edge_count()), (8, 28));
        assert_eq!(g.label(7), Some(&vec![1, 1, 1]));
    }

    #[test]
    fn product_of_empty_is_spec_error() {
        assert!(matches!(
            cartesian_product(&Graph::empty(0), &gen("path:2")),
            Err(Error::Spec(_))
        ));
    }

    #[test]
    fn derived_graph_shapes() {
        let star = derived_graph(&Graph::empty(1)).unwrap();
        assert_eq!(star.degree_sequence(), vec![1, 1, 1, 3]);
        assert_eq!(star.degree(3), 3);

        let p3 = derived_graph(&gen("path:3")).unwrap();
        assert_eq!(p3.n(), 6);
        assert_eq!(p3.degree(5), 5);

        let k2 = derived_graph(&gen("complete:2")).unwrap();
        assert_eq!((k2.n(), k2.edge_count()), (5, 5));
    }

    #[test]
    fn path_smooths_to_an_edge() {
        let r = smooth(&gen("path:5"));
        assert_eq!(r.origin, vec![0, 4]);
        assert_eq!(r.graph.edge_count(), 1);
    }

    #[test]
    fn spider_smooths_to_star() {
        // center 0, legs 0-1-2, 0-3-4, 0-5-6
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        let r = smooth(&g);
        assert_eq!(r.origin, vec![0, 2, 4, 6]);
        assert_eq!(r.graph.degree_sequence(), vec![1, 1, 1, 3]);
    }

    #[test]
    fn cycle_stops_at_triangle() {
        let r = smooth(&gen("cycle:6"));
        assert_eq!(r.graph.n(), 3);
        assert_eq!(r.graph.edge_count(), 3);
        assert_eq!(r.origin, vec![3, 4, 5]);
    }

    #[test]
    fn triangle_vertices_are_not_smoothed() {
        let k3 = gen("complete:3");
        assert_eq!(smooth(&k3).graph, k3);
    }
}
