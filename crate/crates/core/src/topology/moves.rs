//! Triangle-to-star and star-to-triangle exchanges.

use crate::graph::{Graph, VertexSet, MAX_ORDER};
use crate::{Error, Result};

/// Removes the edges of `triangle` and joins a new vertex (numbered `n`) to
/// its three corners.
pub fn delta_y(g: &Graph, triangle: VertexSet) -> Result<Graph> {
    let corners = triangle.to_vec();
    if corners.len() != 3 {
        return Err(Error::InvalidArgument("a triangle has three vertices"));
    }
    for &v in &corners {
        g.check_vertex(v)?;
    }
    let (a, b, c) = (corners[0], corners[1], corners[2]);
    if !(g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c)) {
        return Err(Error::InvalidArgument("the three vertices do not form a triangle"));
    }
    let n = g.order();
    if n >= MAX_ORDER {
        return Err(Error::OrderTooLarge { order: n + 1, max: MAX_ORDER });
    }
    let mut edges: alloc::vec::Vec<(usize, usize)> = g
        .edges()
        .filter(|&(u, v)| !(triangle.contains(u) && triangle.contains(v)))
        .collect();
    edges.extend(corners.iter().map(|&v| (v, n)));
    Graph::from_edges(n + 1, &edges)
}

/// Deletes the degree-3 vertex `v` and makes its three neighbours pairwise
/// adjacent, adding only the edges that are missing.
pub fn y_delta(g: &Graph, v: usize) -> Result<Graph> {
    g.check_vertex(v)?;
    if g.degree(v) != 3 {
        return Err(Error::InvalidArgument("the vertex must have degree 3"));
    }
    let nb = g.neighbors(v).to_vec();
    let mut h = *g;
    for (i, &a) in nb.iter().enumerate() {
        for &b in &nb[i + 1..] {
            if !h.has_edge(a, b) {
                h = h.with_edge(a, b)?;
            }
        }
    }
    h.delete_vertex(v)
}

/// Whether `v` has degree 3 and pairwise non-adjacent neighbours, so that
/// [`y_delta`] is the exact inverse of [`delta_y`].
pub fn is_clean_star(g: &Graph, v: usize) -> bool {
    v < g.order() && g.degree(v) == 3 && {
        let nb = g.neighbors(v);
        nb.iter().all(|a| g.neighbors(a).intersection(nb).is_empty())
    }
}

/// All vertex triples forming triangles, in lexicographic order.
pub fn triangles(g: &Graph) -> alloc::vec::Vec<VertexSet> {
    let mut out = alloc::vec::Vec::new();
    for (a, b) in g.edges() {
        for c in g.neighbors(a).intersection(g.neighbors(b)).iter().filter(|&c| c > b) {
            out.push(VertexSet::from_vertices([a, b, c]));
        }
    }
    out.sort_by_key(|x| x.to_vec());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, star};
    use crate::iso::are_isomorphic;

    #[test]
    fn moves_are_inverse() {
        let k6 = complete(6);
        let t = VertexSet::from_vertices([0, 1, 2]);
        let y = delta_y(&k6, t).unwrap();
        assert_eq!((y.order(), y.edge_count()), (7, 15));
        assert!(is_clean_star(&y, 6));
        let back = y_delta(&y, 6).unwrap();
        assert!(are_isomorphic(&back, &k6));
    }

    #[test]
    fn delta_y_on_k4() {
        let g = delta_y(&complete(4), VertexSet::from_vertices([1, 2, 3])).unwrap();
        assert_eq!((g.order(), g.edge_count()), (5, 6));
        // vertex 0 keeps its three spokes, vertex 4 is the new centre
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.degree(4), 3);
        assert!(!g.has_edge(0, 4));
    }

    #[test]
    fn preconditions() {
        let s = star(3);
        assert!(delta_y(&s, VertexSet::from_vertices([0, 1, 2])).is_err());
        assert!(delta_y(&s, VertexSet::from_vertices([0, 1])).is_err());
        assert!(y_delta(&s, 1).is_err());
        let tri = y_delta(&s, 0).unwrap();
        assert!(are_isomorphic(&tri, &complete(3)));
        // adjacency among the neighbours is allowed; only missing edges are added
        let k4 = complete(4);
        assert!(!is_clean_star(&k4, 0));
        assert!(are_isomorphic(&y_delta(&k4, 0).unwrap(), &complete(3)));
    }

    #[test]
    fn triangle_listing() {
        assert_eq!(triangles(&complete(4)).len(), 4);
        assert_eq!(triangles(&complete(6)).len(), 20);
        assert!(triangles(&crate::constructions::petersen()).is_empty());
    }
}
