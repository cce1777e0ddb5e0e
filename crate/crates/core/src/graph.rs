//! The immutable small-graph value type.
//!
//! A [`Graph`] holds `n <= 32` adjacency rows; bit `u` of row `v` is set iff
//! `{u, v}` is an edge. Rows at index `>= n` are always zero so the derived
//! equality, ordering and hashing compare graphs by value. Every "mutator"
//! returns a new graph.

use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

pub const MAX_ORDER: usize = 32;

#[inline]
pub(crate) const fn bit(v: usize) -> u32 {
    1u32 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub(crate) const fn low_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Removes bit `v` and shifts every higher bit down by one.
#[inline]
pub(crate) const fn squeeze(row: u32, v: usize) -> u32 {
    let below = row & low_mask(v);
    let above = if v >= 31 { 0 } else { (row >> (v + 1)) << v };
    below | above
}

/// A set of vertex indices, one bit per vertex.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u32) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u32 {
        self.0
    }

    /// The set `{0, 1, ..., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        VertexSet(low_mask(n))
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(bit(v))
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        let mut bits = 0;
        for v in vertices {
            assert!(v < MAX_ORDER, "vertex {v} out of range");
            bits |= bit(v);
        }
        VertexSet(bits)
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < MAX_ORDER && self.0 & bit(v) != 0
    }

    #[inline]
    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | bit(v))
    }

    #[inline]
    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !bit(v))
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in ascending order.
    pub fn iter(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Compares two sets of equal size by their ascending member lists.
    pub fn lex_cmp(self, other: Self) -> core::cmp::Ordering {
        use core::cmp::Ordering;
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let lowest = diff & diff.wrapping_neg();
        if self.0 & lowest != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Vertices;
    fn into_iter(self) -> Vertices {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct Vertices(u32);

impl Iterator for Vertices {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

/// Sorted degree sequence plus the usual extremes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeStats {
    /// Ascending.
    pub sequence: Vec<usize>,
    pub max: usize,
    pub min: usize,
    pub edges: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: u8,
    adj: [u32; MAX_ORDER],
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge { order: n, max: MAX_ORDER });
        }
        Ok(Graph { n: n as u8, adj: [0; MAX_ORDER] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adj[u] |= bit(v);
            g.adj[v] |= bit(u);
        }
        Ok(g)
    }

    /// Builds a graph from raw rows, validating symmetry and loops.
    pub fn from_rows(rows: &[u32]) -> Result<Self> {
        let n = rows.len();
        let mut g = Graph::empty(n)?;
        let mask = low_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::InvalidAdjacency("bit beyond the vertex count"));
            }
            if row & bit(v) != 0 {
                return Err(Error::InvalidAdjacency("self-loop"));
            }
            g.adj[v] = row;
        }
        for v in 0..n {
            for u in VertexSet(rows[v]) {
                if rows[u] & bit(v) == 0 {
                    return Err(Error::InvalidAdjacency("rows are not symmetric"));
                }
            }
        }
        Ok(g)
    }

    /// Builds a graph whose edges are given by a bitmask over vertex pairs in
    /// column order: `(0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...`.
    pub fn from_pair_mask(n: usize, mask: u64) -> Result<Self> {
        if n > 11 {
            return Err(Error::OrderTooLarge { order: n, max: 11 });
        }
        let mut g = Graph::empty(n)?;
        let mut idx = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> idx & 1 == 1 {
                    g.adj[i] |= bit(j);
                    g.adj[j] |= bit(i);
                }
                idx += 1;
            }
        }
        Ok(g)
    }

    /// Inverse of [`Graph::from_pair_mask`].
    pub fn pair_mask(&self) -> u64 {
        let n = self.order();
        assert!(n <= 11, "pair masks only cover graphs of order at most 11");
        let mut mask = 0u64;
        let mut idx = 0;
        for j in 1..n {
            for i in 0..j {
                if self.has_edge(i, j) {
                    mask |= 1 << idx;
                }
                idx += 1;
            }
        }
        mask
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn rows(&self) -> &[u32] {
        &self.adj[..self.order()]
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    #[inline]
    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, order: self.order() })
        }
    }

    /// Open neighbourhood `N(v)`. Panics if `v` is out of range.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        assert!(v < self.order(), "vertex {v} out of range");
        VertexSet(self.adj[v])
    }

    /// Closed neighbourhood `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.neighbors(v).with(v)
    }

    /// Every vertex adjacent to some member of `set`, excluding `set` itself.
    pub fn set_neighbors(&self, set: VertexSet) -> VertexSet {
        let mut out = 0;
        for v in set {
            out |= self.adj[v];
        }
        VertexSet(out & !set.0)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| {
            VertexSet(self.adj[u] & !low_mask(u + 1)).iter().map(move |v| (u, v))
        })
    }

    pub fn max_degree(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).min().unwrap_or(0)
    }

    /// `min(δ(G), δ(complement))`.
    pub fn delta_star(&self) -> usize {
        let n = self.order();
        if n == 0 {
            return 0;
        }
        self.min_degree().min(n - 1 - self.max_degree())
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let mut sequence: Vec<usize> = (0..self.order()).map(|v| self.degree(v)).collect();
        sequence.sort_unstable();
        DegreeStats {
            max: sequence.last().copied().unwrap_or(0),
            min: sequence.first().copied().unwrap_or(0),
            edges: sequence.iter().sum::<usize>() / 2,
            sequence,
        }
    }

    pub fn is_regular(&self) -> bool {
        self.max_degree() == self.min_degree()
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let mask = low_mask(n);
        let mut out = *self;
        for v in 0..n {
            out.adj[v] = !self.adj[v] & mask & !bit(v);
        }
        out
    }

    /// `N(u) ∩ N(v)`; errors when `u == v`.
    pub fn common_neighbors(&self, u: usize, v: usize) -> Result<VertexSet> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SameVertex(u));
        }
        Ok(VertexSet(self.adj[u] & self.adj[v] & !bit(u) & !bit(v)))
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let mut out = *self;
        out.adj[u] |= bit(v);
        out.adj[v] |= bit(u);
        Ok(out)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut out = *self;
        out.adj[u] &= !bit(v);
        out.adj[v] &= !bit(u);
        Ok(out)
    }

    /// Removes `v`; vertices above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let n = self.order();
        let mut out = Graph { n: (n - 1) as u8, adj: [0; MAX_ORDER] };
        let mut w = 0;
        for u in 0..n {
            if u != v {
                out.adj[w] = squeeze(self.adj[u], v);
                w += 1;
            }
        }
        Ok(out)
    }

    /// Contracts the edge `{u, v}`: the merged vertex sits at `min(u, v)` with
    /// neighbourhood `(N(u) ∪ N(v)) \ {u, v}`, and `max(u, v)` is deleted.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let (keep, gone) = if u < v { (u, v) } else { (v, u) };
        let merged = (self.adj[keep] | self.adj[gone]) & !bit(keep) & !bit(gone);
        let mut g = *self;
        g.adj[keep] = merged;
        for w in 0..self.order() {
            if w != keep && w != gone {
                if merged & bit(w) != 0 {
                    g.adj[w] |= bit(keep);
                }
                g.adj[w] &= !bit(gone);
            }
        }
        g.adj[gone] = 0;
        g.delete_vertex(gone)
    }

    /// Whether the vertices of `set` induce a connected subgraph. The empty
    /// set counts as connected.
    pub fn is_set_connected(&self, set: VertexSet) -> bool {
        let Some(start) = set.first() else {
            return true;
        };
        self.reach(start, set) == set
    }

    /// Vertices reachable from `start` using only vertices of `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in VertexSet(frontier) {
                next |= self.adj[v];
            }
            next &= within.0 & !seen;
            seen |= next;
            frontier = next;
        }
        VertexSet(seen)
    }

    pub fn is_connected(&self) -> bool {
        self.is_set_connected(self.vertices())
    }

    /// Connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let comp = self.reach(v, left);
            out.push(comp);
            left = left.difference(comp);
        }
        out
    }

    /// Subgraph induced by `set`, relabelled in ascending vertex order.
    pub fn induced(&self, set: VertexSet) -> Result<Graph> {
        if !set.is_subset(self.vertices()) {
            let stray = set.difference(self.vertices()).first().unwrap_or(0);
            return Err(Error::VertexOutOfRange { vertex: stray, order: self.order() });
        }
        let members = set.to_vec();
        let mut out = Graph::empty(members.len())?;
        for (i, &v) in members.iter().enumerate() {
            for (j, &u) in members.iter().enumerate() {
                if self.has_edge(v, u) {
                    out.adj[i] |= bit(j);
                }
            }
        }
        Ok(out)
    }

    /// Vertices of `self` keep their indices; `other` is appended after them.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.order();
        let total = n + other.order();
        let mut out = Graph::empty(total)?;
        out.adj[..n].copy_from_slice(self.rows());
        for (v, &row) in other.rows().iter().enumerate() {
            out.adj[n + v] = row << n;
        }
        Ok(out)
    }

    /// Disjoint union plus every edge between the two vertex sets.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let n = self.order();
        let mut out = self.disjoint_union(other)?;
        let left = low_mask(n);
        let right = low_mask(out.order()) & !left;
        for v in 0..out.order() {
            out.adj[v] |= if v < n { right } else { left };
        }
        Ok(out)
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        if perm.len() != n {
            return Err(Error::InvalidArgument("permutation length differs from the order"));
        }
        let mut seen = 0u32;
        for &p in perm {
            if p >= n || seen & bit(p) != 0 {
                return Err(Error::InvalidArgument("not a permutation"));
            }
            seen |= bit(p);
        }
        let mut out = Graph::empty(n)?;
        for (u, v) in self.edges() {
            out.adj[perm[u]] |= bit(perm[v]);
            out.adj[perm[v]] |= bit(perm[u]);
        }
        Ok(out)
    }

    /// Path or cycle test used by the product-bound validator.
    pub fn is_path_or_cycle(&self) -> bool {
        let n = self.order();
        if n == 0 || !self.is_connected() || self.max_degree() > 2 {
            return false;
        }
        let m = self.edge_count();
        m + 1 == n || (m == n && n >= 3)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, cycle, path, paley};
    use crate::iso::are_isomorphic;

    #[test]
    fn complement_of_complete_is_empty() {
        let k5 = complete(5);
        assert_eq!(k5.complement(), Graph::empty(5).unwrap());
        assert_eq!(k5.complement().complement(), k5);
    }

    #[test]
    fn p4_is_self_complementary_by_brute_force() {
        let p4 = path(4);
        let c = p4.complement();
        let mut perm = [0, 1, 2, 3];
        let mut found = false;
        permutations(&mut perm, 0, &mut |p| {
            if p4.relabel(p).unwrap() == c {
                found = true;
            }
        });
        assert!(found);
    }

    fn permutations(a: &mut [usize; 4], k: usize, f: &mut impl FnMut(&[usize])) {
        if k == a.len() {
            f(a);
            return;
        }
        for i in k..a.len() {
            a.swap(k, i);
            permutations(a, k + 1, f);
            a.swap(k, i);
        }
    }

    #[test]
    fn degree_stats_examples() {
        let s = complete(7).degree_stats();
        assert_eq!((s.max, s.min, s.edges), (6, 6, 21));
        let s = paley(13).unwrap().degree_stats();
        assert_eq!((s.max, s.min, s.edges), (6, 6, 39));
        let s = path(3).degree_stats();
        assert_eq!(s.sequence, [1, 1, 2]);
        assert_eq!(s.edges, 2);
    }

    #[test]
    fn common_neighbors_examples() {
        let qr = paley(13).unwrap();
        // 1 is a residue mod 13, 2 is not.
        assert_eq!(qr.common_neighbors(0, 1).unwrap().len(), 2);
        assert_eq!(qr.common_neighbors(0, 2).unwrap().len(), 3);
        assert_eq!(complete(6).common_neighbors(2, 4).unwrap().len(), 4);
        assert_eq!(qr.common_neighbors(3, 3), Err(Error::SameVertex(3)));
    }

    #[test]
    fn contraction_examples() {
        let k3 = complete(4).contract_edge(1, 3).unwrap();
        assert_eq!(k3, complete(3));
        assert!(are_isomorphic(&cycle(5).contract_edge(0, 1).unwrap(), &cycle(4)));
        let qr = paley(13).unwrap();
        let m = qr.contract_edge(0, 1).unwrap();
        assert_eq!(m.order(), 12);
        // |N(0) ∪ N(1)| = 6 + 6 - 2 common, minus the two merged ends
        assert_eq!(m.degree(0), 8);
        assert_eq!(m.max_degree(), 8);
        assert_eq!(cycle(5).contract_edge(0, 2), Err(Error::NotAnEdge(0, 2)));
    }

    #[test]
    fn contraction_relabels_deterministically() {
        // path 0-1-2-3-4: contracting {1,2} keeps 1, the old 3 and 4 become 2 and 3
        let g = path(5).contract_edge(2, 1).unwrap();
        assert_eq!(g, path(4));
    }

    #[test]
    fn join_and_connectivity() {
        assert_eq!(complete(6).join(&complete(1)).unwrap(), complete(7));
        let two_triangles = complete(3).disjoint_union(&complete(3)).unwrap();
        assert!(!two_triangles.is_connected());
        assert_eq!(two_triangles.components().len(), 2);
        assert!(complete(3).join(&Graph::empty(30).unwrap()).is_err());
    }

    #[test]
    fn induced_neighbourhood_of_paley13_is_two_regular() {
        let qr = paley(13).unwrap();
        for v in 0..13 {
            let nb = qr.induced(qr.neighbors(v)).unwrap();
            assert_eq!(nb.order(), 6);
            assert!(nb.is_regular());
            assert_eq!(nb.max_degree(), 2);
        }
    }

    #[test]
    fn delete_vertex_shifts_indices() {
        let g = path(4).delete_vertex(0).unwrap();
        assert_eq!(g, path(3));
        assert!(path(4).delete_vertex(4).is_err());
    }

    #[test]
    fn from_rows_validates() {
        assert!(Graph::from_rows(&[0b10, 0b00]).is_err());
        assert!(Graph::from_rows(&[0b1]).is_err());
        assert!(Graph::from_rows(&[0b100, 0b000]).is_err());
        assert_eq!(Graph::from_rows(&[0b10, 0b01]).unwrap(), complete(2));
        assert!(Graph::empty(33).is_err());
    }

    #[test]
    fn pair_mask_round_trip() {
        let g = cycle(6);
        assert_eq!(Graph::from_pair_mask(6, g.pair_mask()).unwrap(), g);
    }

    #[test]
    fn lex_order_on_sets() {
        use core::cmp::Ordering;
        let a = VertexSet::from_vertices([0, 3, 4]);
        let b = VertexSet::from_vertices([1, 2, 3]);
        assert_eq!(a.lex_cmp(b), Ordering::Less);
        assert_eq!(b.lex_cmp(a), Ordering::Greater);
    }

    #[test]
    fn paths_and_cycles_are_recognised() {
        assert!(path(7).is_path_or_cycle());
        assert!(cycle(7).is_path_or_cycle());
        assert!(!complete(4).is_path_or_cycle());
        assert!(!path(3).disjoint_union(&path(2)).unwrap().is_path_or_cycle());
    }
}
