//! Exact minor containment.
//!
//! Every minor of `H` is a subgraph of some contraction of `H`, so the search
//! walks contraction sequences and runs a subgraph test at each node. Failed
//! nodes are remembered by canonical form. Before branching, vertices that
//! cannot matter are removed: isolated vertices when the target has none,
//! leaves when the target has minimum degree 2, and degree-2 vertices are
//! suppressed when the target has minimum degree 3.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::graph::{Graph, VertexSet};
use crate::iso::{canonical_form_unchecked, CanonicalForm};
use crate::{Error, Result};

/// Largest host accepted by [`has_minor`].
pub const MAX_MINOR_HOST: usize = 20;
/// Largest target accepted by [`has_minor`].
pub const MAX_MINOR_TARGET: usize = 10;

/// One disjoint connected host vertex set per target vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorWitness {
    pub branch_sets: Vec<VertexSet>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinorOutcome {
    Found(MinorWitness),
    Absent,
    /// The node budget ran out before the search finished.
    Unknown,
}

impl MinorOutcome {
    pub fn witness(&self) -> Option<&MinorWitness> {
        match self {
            MinorOutcome::Found(w) => Some(w),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, MinorOutcome::Found(_))
    }
}

/// Checks a witness directly against the definition: one non-empty branch set
/// per target vertex, pairwise disjoint, each inducing a connected subgraph of
/// `host`, and a host edge between the sets of every target edge.
pub fn verify_minor_witness(host: &Graph, target: &Graph, witness: &MinorWitness) -> bool {
    let sets = &witness.branch_sets;
    if sets.len() != target.order() {
        return false;
    }
    let mut used = VertexSet::EMPTY;
    for &s in sets {
        if s.is_empty() || !s.is_subset(host.vertices()) || !s.intersection(used).is_empty() {
            return false;
        }
        if !host.is_set_connected(s) {
            return false;
        }
        used = used.union(s);
    }
    target
        .edges()
        .all(|(i, j)| !host.set_neighbors(sets[i]).intersection(sets[j]).is_empty())
}

/// Decides whether `target` is a minor of `host`. With a `budget`, at most
/// that many search nodes are expanded; running out gives
/// [`MinorOutcome::Unknown`], never a wrong answer.
pub fn has_minor(host: &Graph, target: &Graph, budget: Option<u64>) -> Result<MinorOutcome> {
    if host.order() > MAX_MINOR_HOST {
        return Err(Error::OrderTooLarge { order: host.order(), max: MAX_MINOR_HOST });
    }
    if target.order() > MAX_MINOR_TARGET {
        return Err(Error::OrderTooLarge { order: target.order(), max: MAX_MINOR_TARGET });
    }
    let mut search = Search {
        target: Pattern::new(target),
        min_degree: if target.order() == 0 { 0 } else { target.min_degree() },
        failed: BTreeSet::new(),
        budget: budget.unwrap_or(u64::MAX),
    };
    let bags = host.vertices().iter().map(VertexSet::singleton).collect();
    Ok(match search.run(*host, bags) {
        Step::Found(branch_sets) => MinorOutcome::Found(MinorWitness { branch_sets }),
        Step::Absent => MinorOutcome::Absent,
        Step::OutOfBudget => MinorOutcome::Unknown,
    })
}

enum Step {
    Found(Vec<VertexSet>),
    Absent,
    OutOfBudget,
}

struct Search {
    target: Pattern,
    min_degree: usize,
    failed: BTreeSet<CanonicalForm>,
    budget: u64,
}

impl Search {
    /// `bags[v]` is the set of original host vertices merged into vertex `v`.
    fn run(&mut self, g: Graph, bags: Vec<VertexSet>) -> Step {
        let (g, bags) = self.reduce(g, bags);
        if g.order() < self.target.order || g.edge_count() < self.target.edges {
            return Step::Absent;
        }
        if self.budget == 0 {
            return Step::OutOfBudget;
        }
        self.budget -= 1;
        let form = canonical_form_unchecked(&g);
        if self.failed.contains(&form) {
            return Step::Absent;
        }
        if let Some(map) = self.target.embed(&g) {
            return Step::Found(map.iter().map(|&v| bags[v]).collect());
        }
        if g.order() > self.target.order {
            let mut edges: Vec<(usize, usize)> = g.edges().collect();
            edges.sort_by_key(|&(u, v)| {
                let (a, b) = (g.degree(u), g.degree(v));
                (a.min(b), a + b)
            });
            for (u, v) in edges {
                let lost = 1 + (g.rows()[u] & g.rows()[v]).count_ones() as usize;
                if g.edge_count() - lost < self.target.edges {
                    continue;
                }
                let (h, merged) = contract(&g, &bags, u, v);
                match self.run(h, merged) {
                    Step::Absent => {}
                    other => return other,
                }
            }
        }
        self.failed.insert(form);
        Step::Absent
    }

    fn reduce(&self, mut g: Graph, mut bags: Vec<VertexSet>) -> (Graph, Vec<VertexSet>) {
        loop {
            let low = (0..g.order()).find(|&v| {
                let d = g.degree(v);
                (d == 0 && self.min_degree >= 1)
                    || (d == 1 && self.min_degree >= 2)
                    || (d == 2 && self.min_degree >= 3)
            });
            let Some(v) = low else {
                return (g, bags);
            };
            match g.neighbors(v).first() {
                Some(a) if g.degree(v) == 2 => {
                    let (h, merged) = contract(&g, &bags, v, a);
                    g = h;
                    bags = merged;
                }
                _ => {
                    g = g.delete_vertex(v).expect("vertex in range");
                    bags.remove(v);
                }
            }
        }
    }
}

fn contract(g: &Graph, bags: &[VertexSet], u: usize, v: usize) -> (Graph, Vec<VertexSet>) {
    let h = g.contract_edge(u, v).expect("contracting an existing edge");
    let (keep, gone) = (u.min(v), u.max(v));
    let mut merged = bags.to_vec();
    merged[keep] = bags[u].union(bags[v]);
    merged.remove(gone);
    (h, merged)
}

/// Target graph prepared for subgraph embedding: vertices in an order where
/// each one (after the first of its component) has an earlier neighbour.
struct Pattern {
    order: usize,
    edges: usize,
    sequence: Vec<usize>,
    degrees: Vec<usize>,
    /// For each position, the earlier positions adjacent to it.
    back: Vec<Vec<usize>>,
}

impl Pattern {
    fn new(t: &Graph) -> Self {
        let n = t.order();
        let mut sequence = Vec::with_capacity(n);
        let mut placed = VertexSet::EMPTY;
        while sequence.len() < n {
            let next = t
                .vertices()
                .difference(placed)
                .iter()
                .max_by_key(|&v| (t.neighbors(v).intersection(placed).len(), t.degree(v), n - v))
                .expect("unplaced vertex");
            sequence.push(next);
            placed = placed.with(next);
        }
        let back = sequence
            .iter()
            .enumerate()
            .map(|(p, &v)| (0..p).filter(|&q| t.has_edge(sequence[q], v)).collect())
            .collect();
        let degrees = sequence.iter().map(|&v| t.degree(v)).collect();
        Pattern { order: n, edges: t.edge_count(), sequence, degrees, back }
    }

    /// An injective edge-preserving map from target vertices into `host`.
    fn embed(&self, host: &Graph) -> Option<Vec<usize>> {
        let mut images = Vec::with_capacity(self.order);
        if !self.extend(host, &mut images, 0) {
            return None;
        }
        let mut map = alloc::vec![0; self.order];
        for (p, &t) in self.sequence.iter().enumerate() {
            map[t] = images[p];
        }
        Some(map)
    }

    fn extend(&self, host: &Graph, images: &mut Vec<usize>, used: u32) -> bool {
        let p = images.len();
        if p == self.order {
            return true;
        }
        let mut cand = host.vertices().bits() & !used;
        for &q in &self.back[p] {
            cand &= host.rows()[images[q]];
        }
        while cand != 0 {
            let h = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if host.degree(h) < self.degrees[p] {
                continue;
            }
            images.push(h);
            if self.extend(host, images, used | 1 << h) {
                return true;
            }
            images.pop();
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, complete_bipartite, cycle, grid, octahedron, path, petersen, wheel};
    use crate::rng::Rng;
    use crate::search::random_gnp;

    fn found(host: &Graph, target: &Graph) -> bool {
        match has_minor(host, target, None).unwrap() {
            MinorOutcome::Found(w) => {
                assert!(verify_minor_witness(host, target, &w), "{host:?} {target:?} {w:?}");
                true
            }
            MinorOutcome::Absent => false,
            MinorOutcome::Unknown => unreachable!("no budget"),
        }
    }

    /// Brute force over all assignments of host vertices to target vertices or
    /// to nothing: the independent oracle for small hosts.
    fn oracle(host: &Graph, target: &Graph) -> bool {
        let (n, t) = (host.order(), target.order());
        let mut assign = alloc::vec![0usize; n];
        loop {
            let mut sets = alloc::vec![VertexSet::EMPTY; t];
            for (v, &a) in assign.iter().enumerate() {
                if a > 0 {
                    sets[a - 1] = sets[a - 1].with(v);
                }
            }
            if verify_minor_witness(host, target, &MinorWitness { branch_sets: sets }) {
                return true;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return false;
                }
                assign[i] += 1;
                if assign[i] <= t {
                    break;
                }
                assign[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn complete_in_larger_complete() {
        assert!(found(&complete(7), &complete(6)));
        assert!(!found(&complete(5), &complete(6)));
    }

    #[test]
    fn petersen_has_no_k6_but_has_k5() {
        assert!(!found(&petersen(), &complete(6)));
        assert!(found(&petersen(), &complete(5)));
    }

    #[test]
    fn planar_graphs_avoid_k5_and_k33() {
        for g in [octahedron(), grid(3, 4), wheel(7), cycle(9)] {
            assert!(!found(&g, &complete(5)));
            assert!(!found(&g, &complete_bipartite(3, 3)));
        }
        assert!(found(&octahedron(), &complete(4)));
    }

    #[test]
    fn cycles_and_paths() {
        assert!(found(&cycle(8), &cycle(5)));
        assert!(!found(&path(8), &cycle(3)));
        assert!(found(&path(8), &path(4)));
        let two = Graph::empty(2).unwrap();
        assert!(found(&path(2), &two));
        assert!(!found(&complete(1), &two));
    }

    #[test]
    fn budget_gives_unknown() {
        let r = has_minor(&petersen(), &complete(5), Some(0)).unwrap();
        assert_eq!(r, MinorOutcome::Unknown);
    }

    #[test]
    fn size_caps() {
        let big = Graph::empty(21).unwrap();
        assert!(has_minor(&big, &complete(3), None).is_err());
        assert!(has_minor(&complete(12), &complete(11), None).is_err());
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        let targets = [complete(3), complete(4), cycle(4), path(3), complete_bipartite(2, 3)];
        let mut rng = Rng::new(13);
        for i in 0..150 {
            let n = 4 + i % 4;
            let host = random_gnp(n, 0.3 + 0.5 * rng.next_f64(), rng.next_u64()).unwrap();
            for t in &targets {
                assert_eq!(found(&host, t), oracle(&host, t), "{host:?} {t:?}");
            }
        }
    }

    #[test]
    fn checker_rejects_bad_witnesses() {
        let host = cycle(6);
        let tri = complete(3);
        let good = MinorWitness {
            branch_sets: alloc::vec![
                VertexSet::from_vertices([0, 1]),
                VertexSet::from_vertices([2, 3]),
                VertexSet::from_vertices([4, 5]),
            ],
        };
        assert!(verify_minor_witness(&host, &tri, &good));
        let split = MinorWitness {
            branch_sets: alloc::vec![
                VertexSet::from_vertices([0, 2]),
                VertexSet::from_vertices([1, 3]),
                VertexSet::from_vertices([4, 5]),
            ],
        };
        assert!(!verify_minor_witness(&host, &tri, &split));
        let overlap = MinorWitness {
            branch_sets: alloc::vec![
                VertexSet::from_vertices([0, 1]),
                VertexSet::from_vertices([1, 2, 3]),
                VertexSet::from_vertices([4, 5]),
            ],
        };
        assert!(!verify_minor_witness(&host, &tri, &overlap));
        let missing = MinorWitness {
            branch_sets: alloc::vec![VertexSet::singleton(0), VertexSet::singleton(1), VertexSet::singleton(3)],
        };
        assert!(!verify_minor_witness(&host, &tri, &missing));
    }
}
