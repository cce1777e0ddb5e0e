//! Exact canonical forms by individualisation and refinement.
//!
//! The search tree starts from an ordered vertex partition, refines it to an
//! equitable partition (cells are split by neighbour counts into other cells,
//! sub-cells ordered by count), and branches by individualising each vertex of
//! the first non-singleton cell. Every leaf is a vertex ordering; the canonical
//! form is the lexicographically smallest adjacency bit-string among the leaves.
//! Automorphisms found along the way (two leaves with identical strings) prune
//! sibling branches lying in the same orbit of the prefix stabiliser.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{bit, Graph, VertexSet};
use crate::{Error, Result};

/// Largest order accepted by [`canonical_form`].
pub const MAX_CANONICAL_ORDER: usize = 16;

/// Isomorphism-class fingerprint: the vertex count followed by the upper
/// triangle of the canonically relabelled adjacency matrix, column by column,
/// packed most-significant bit first. Equal forms iff isomorphic graphs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Lowercase hex, used as a dedup key in reports.
    pub fn to_hex(&self) -> alloc::string::String {
        use fmt::Write;
        let mut s = alloc::string::String::with_capacity(self.0.len() * 2);
        for b in &self.0 {
            let _ = write!(s, "{b:02x}");
        }
        s
    }

    /// The graph with the canonical labelling this form encodes.
    pub fn to_graph(&self) -> Graph {
        let n = self.0[0] as usize;
        let mut edges = Vec::new();
        let mut idx = 0;
        for j in 1..n {
            for i in 0..j {
                if self.0[1 + idx / 8] >> (7 - idx % 8) & 1 == 1 {
                    edges.push((i, j));
                }
                idx += 1;
            }
        }
        Graph::from_edges(n, &edges).expect("canonical form encodes a valid graph")
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// Canonical form of `g`. Errors above [`MAX_CANONICAL_ORDER`].
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    check_order(g)?;
    Ok(canonize(g, &[g.vertices()]).0)
}

/// Canonical form together with the canonical ordering: `order[p]` is the
/// original vertex placed at canonical position `p`.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    check_order(g)?;
    Ok(canonize(g, &[g.vertices()]))
}

/// Canonical form of a vertex-coloured graph. `cells` is an ordered partition
/// of the vertex set; isomorphisms must map each cell onto the cell at the same
/// position.
pub fn canonical_form_colored(g: &Graph, cells: &[VertexSet]) -> Result<CanonicalForm> {
    check_order(g)?;
    let mut union = VertexSet::EMPTY;
    for &c in cells {
        if c.is_empty() || !c.intersection(union).is_empty() {
            return Err(Error::InvalidArgument("cells must be non-empty and disjoint"));
        }
        union = union.union(c);
    }
    if union != g.vertices() {
        return Err(Error::InvalidArgument("cells must cover the vertex set"));
    }
    Ok(canonize(g, cells).0)
}

/// Whether an edge-preserving bijection exists. Works for every order.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    if g.degree_stats().sequence != h.degree_stats().sequence {
        return false;
    }
    canonize(g, &[g.vertices()]).0 == canonize(h, &[h.vertices()]).0
}

/// Canonical form without the order cap, for internal dedup of larger graphs.
pub(crate) fn canonical_form_unchecked(g: &Graph) -> CanonicalForm {
    canonize(g, &[g.vertices()]).0
}

fn check_order(g: &Graph) -> Result<()> {
    if g.order() > MAX_CANONICAL_ORDER {
        Err(Error::OrderTooLarge { order: g.order(), max: MAX_CANONICAL_ORDER })
    } else {
        Ok(())
    }
}

fn canonize(g: &Graph, cells: &[VertexSet]) -> (CanonicalForm, Vec<usize>) {
    let n = g.order();
    if n == 0 {
        return (CanonicalForm(vec![0]), Vec::new());
    }
    let mut search = Search { g, best: None, first: None, generators: Vec::new() };
    let start: Vec<u32> = cells.iter().map(|c| c.bits()).collect();
    let mut prefix = Vec::with_capacity(n);
    search.descend(start, &mut prefix);
    let (code, order) = search.best.expect("search visits at least one leaf");
    let mut bytes = Vec::with_capacity(code.len() + 1);
    bytes.push(n as u8);
    bytes.extend_from_slice(&code);
    (CanonicalForm(bytes), order.into_iter().map(usize::from).collect())
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u8>, Vec<u8>)>,
    first: Option<(Vec<u8>, Vec<u8>)>,
    /// Automorphisms as image tables.
    generators: Vec<Vec<u8>>,
}

impl Search<'_> {
    fn descend(&mut self, mut cells: Vec<u32>, prefix: &mut Vec<u8>) {
        refine(self.g, &mut cells);
        let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
            self.leaf(&cells);
            return;
        };
        let cell = cells[target];
        let mut explored: Vec<u8> = Vec::new();
        for v in VertexSet::from_bits(cell) {
            if !explored.is_empty() && self.same_orbit(prefix, &explored, v) {
                continue;
            }
            explored.push(v as u8);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(bit(v));
            child.push(cell & !bit(v));
            child.extend_from_slice(&cells[target + 1..]);
            prefix.push(v as u8);
            self.descend(child, prefix);
            prefix.pop();
        }
    }

    fn leaf(&mut self, cells: &[u32]) {
        let order: Vec<u8> = cells.iter().map(|c| c.trailing_zeros() as u8).collect();
        let code = encode(self.g, &order);
        match &self.first {
            None => {
                self.first = Some((code.clone(), order.clone()));
                self.best = Some((code, order));
            }
            Some((first_code, first_order)) => {
                if *first_code == code {
                    let gen = automorphism(first_order, &order);
                    self.generators.push(gen);
                    return;
                }
                let (best_code, best_order) = self.best.as_ref().unwrap();
                match code.cmp(best_code) {
                    core::cmp::Ordering::Less => self.best = Some((code, order)),
                    core::cmp::Ordering::Equal => {
                        let gen = automorphism(best_order, &order);
                        self.generators.push(gen);
                    }
                    core::cmp::Ordering::Greater => {}
                }
            }
        }
    }

    /// Whether `v` lies in the orbit of an explored sibling under the group
    /// generated by the known automorphisms fixing the prefix pointwise.
    fn same_orbit(&self, prefix: &[u8], explored: &[u8], v: usize) -> bool {
        let n = self.g.order();
        let mut parent: Vec<u8> = (0..n as u8).collect();
        let mut any = false;
        for gen in &self.generators {
            if prefix.iter().any(|&p| gen[p as usize] != p) {
                continue;
            }
            any = true;
            for (a, &b) in gen.iter().enumerate() {
                union(&mut parent, a as u8, b);
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v as u8);
        explored.iter().any(|&w| find(&mut parent, w) == root)
    }
}

fn find(parent: &mut [u8], mut x: u8) -> u8 {
    while parent[x as usize] != x {
        let up = parent[parent[x as usize] as usize];
        parent[x as usize] = up;
        x = up;
    }
    x
}

fn union(parent: &mut [u8], a: u8, b: u8) {
    let ra = find(parent, a);
    let rb = find(parent, b);
    if ra != rb {
        parent[ra.max(rb) as usize] = ra.min(rb);
    }
}

/// Maps `from[p]` to `to[p]` for every position.
fn automorphism(from: &[u8], to: &[u8]) -> Vec<u8> {
    let mut gen = vec![0u8; from.len()];
    for (p, &v) in from.iter().enumerate() {
        gen[v as usize] = to[p];
    }
    gen
}

fn encode(g: &Graph, order: &[u8]) -> Vec<u8> {
    let n = order.len();
    let bits = n * (n - 1) / 2;
    let mut out = vec![0u8; bits.div_ceil(8)];
    let mut idx = 0;
    for j in 1..n {
        let row = g.rows()[order[j] as usize];
        for &vi in &order[..j] {
            if row & bit(vi as usize) != 0 {
                out[idx / 8] |= 0x80 >> (idx % 8);
            }
            idx += 1;
        }
    }
    out
}

/// Refines an ordered partition to the coarsest equitable refinement.
/// Splitting depends only on cell positions and neighbour counts, never on
/// vertex labels, so the result commutes with relabelling.
fn refine(g: &Graph, cells: &mut Vec<u32>) {
    let rows = g.rows();
    let mut buckets: Vec<(u32, u32)> = Vec::with_capacity(32);
    loop {
        let mut changed = false;
        let mut w = 0;
        while w < cells.len() {
            let splitter = cells[w];
            let mut i = 0;
            while i < cells.len() {
                let cell = cells[i];
                if cell.count_ones() == 1 {
                    i += 1;
                    continue;
                }
                buckets.clear();
                for v in VertexSet::from_bits(cell) {
                    let count = (rows[v] & splitter).count_ones();
                    match buckets.iter_mut().find(|(c, _)| *c == count) {
                        Some((_, members)) => *members |= bit(v),
                        None => buckets.push((count, bit(v))),
                    }
                }
                if buckets.len() == 1 {
                    i += 1;
                    continue;
                }
                buckets.sort_unstable_by_key(|&(c, _)| c);
                changed = true;
                let parts = buckets.len();
                cells.splice(i..=i, buckets.iter().map(|&(_, m)| m));
                i += parts;
            }
            w += 1;
        }
        if !changed {
            break;
        }
    }
}
