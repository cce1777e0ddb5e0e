//! Exact domination and connected-domination numbers.
//!
//! Candidate sets are tried in ascending cardinality. For connected domination
//! only connected sets are generated: each is grown from its smallest vertex by
//! exclusive-neighbourhood extension, which yields every connected set exactly
//! once. Ties are broken towards the lexicographically smallest set.

use core::cmp::Ordering;
use core::fmt;

use crate::graph::{bit, low_mask, Graph, VertexSet};
use crate::{Error, Result};

/// A domination number, with `Infinite` above every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DominationNumber {
    Finite(usize),
    /// No connected dominating set exists (disconnected graph).
    Infinite,
}

impl DominationNumber {
    pub fn finite(self) -> Option<usize> {
        match self {
            DominationNumber::Finite(v) => Some(v),
            DominationNumber::Infinite => None,
        }
    }
}

impl Ord for DominationNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        use DominationNumber::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Infinite) => Ordering::Less,
            (Infinite, Finite(_)) => Ordering::Greater,
            (Infinite, Infinite) => Ordering::Equal,
        }
    }
}

impl PartialOrd for DominationNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DominationNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DominationNumber::Finite(v) => write!(f, "{v}"),
            DominationNumber::Infinite => f.write_str("infinite"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DominationResult {
    pub value: DominationNumber,
    /// A set attaining `value`; absent when `value` is infinite.
    pub witness: Option<VertexSet>,
}

impl DominationResult {
    fn found(set: VertexSet) -> Self {
        DominationResult { value: DominationNumber::Finite(set.len()), witness: Some(set) }
    }

    const INFINITE: DominationResult =
        DominationResult { value: DominationNumber::Infinite, witness: None };
}

/// Whether every vertex outside `set` has a neighbour in `set`.
pub fn is_dominating(g: &Graph, set: VertexSet) -> bool {
    let mut covered = set.bits();
    for v in set {
        covered |= g.rows()[v];
    }
    covered == g.vertices().bits()
}

/// Whether `set` is dominating and induces a connected subgraph.
pub fn is_connected_dominating(g: &Graph, set: VertexSet) -> bool {
    !set.is_empty() && is_dominating(g, set) && g.is_set_connected(set)
}

/// Domination number with the lexicographically smallest minimum dominating set.
pub fn gamma(g: &Graph) -> DominationResult {
    let n = g.order();
    for k in 0..=n {
        if let Some(set) = Combinations::new(n, k).find(|&s| is_dominating(g, s)) {
            return DominationResult::found(set);
        }
    }
    unreachable!("the full vertex set dominates")
}

/// Connected domination number. Disconnected graphs (order >= 2) have an
/// infinite value; the single-vertex graph has value 1.
pub fn gamma_c(g: &Graph) -> DominationResult {
    gamma_c_at_most(g, g.order()).unwrap_or(DominationResult::INFINITE)
}

/// Connected domination number if it is at most `limit`, otherwise `None`.
/// Disconnected graphs always give `None`.
pub fn gamma_c_at_most(g: &Graph, limit: usize) -> Option<DominationResult> {
    let n = g.order();
    if n == 0 {
        return Some(DominationResult { value: DominationNumber::Finite(0), witness: Some(VertexSet::EMPTY) });
    }
    if !g.is_connected() {
        return None;
    }
    (1..=limit.min(n)).find_map(|k| connected_dominating_of_size(g, k).map(DominationResult::found))
}

/// Lexicographically smallest connected dominating set of exactly `k` vertices.
pub fn connected_dominating_of_size(g: &Graph, k: usize) -> Option<VertexSet> {
    let n = g.order();
    if k == 0 || k > n {
        return None;
    }
    let all = g.vertices().bits();
    let max_deg = g.max_degree();
    for seed in 0..n {
        let mut grow = Grow { rows: g.rows(), all, k, gain: max_deg.saturating_sub(1), best: None };
        let above = all & !low_mask(seed + 1);
        grow.extend(bit(seed), g.rows()[seed] & above, bit(seed) | g.rows()[seed], above);
        if grow.best.is_some() {
            // every set found later has a larger smallest member
            return grow.best;
        }
    }
    None
}

struct Grow<'a> {
    rows: &'a [u32],
    all: u32,
    k: usize,
    /// Upper bound on newly dominated vertices per added vertex.
    gain: usize,
    best: Option<VertexSet>,
}

impl Grow<'_> {
    fn extend(&mut self, sub: u32, mut ext: u32, covered: u32, above: u32) {
        let size = sub.count_ones() as usize;
        if size == self.k {
            if covered == self.all {
                let cand = VertexSet::from_bits(sub);
                if self.best.is_none_or(|b| cand.lex_cmp(b) == Ordering::Less) {
                    self.best = Some(cand);
                }
            }
            return;
        }
        let missing = (self.all & !covered).count_ones() as usize;
        if missing > (self.k - size) * self.gain {
            return;
        }
        while ext != 0 {
            let w = ext.trailing_zeros() as usize;
            ext &= ext - 1;
            let exclusive = self.rows[w] & !covered & above;
            self.extend(sub | bit(w), ext | exclusive, covered | self.rows[w], above);
        }
    }
}

/// The lowest vertex outside a connected triple `s` with no neighbour in `s`.
/// Returns `None` when `G[s]` is disconnected or `s` dominates.
pub fn three_set_witness(g: &Graph, s: VertexSet) -> Result<Option<usize>> {
    if s.len() != 3 {
        return Err(Error::InvalidArgument("the set must have exactly three vertices"));
    }
    if let Some(v) = s.difference(g.vertices()).first() {
        return Err(Error::VertexOutOfRange { vertex: v, order: g.order() });
    }
    if !g.is_set_connected(s) {
        return Ok(None);
    }
    let touched = s.union(g.set_neighbors(s));
    Ok(g.vertices().difference(touched).first())
}

/// `k`-subsets of `{0..n}` in lexicographic order of their sorted members.
pub struct Combinations {
    n: usize,
    idx: alloc::vec::Vec<usize>,
    done: bool,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Combinations { n, idx: (0..k).collect(), done: k > n }
    }
}

impl Iterator for Combinations {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        let out = VertexSet::from_vertices(self.idx.iter().copied());
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, cycle, paley, path, star};
    use crate::rng::Rng;
    use crate::search::random_gnp;
    use DominationNumber::*;

    /// Cardinality-ascending scan of every subset: the independent oracle.
    fn naive(g: &Graph, connected: bool) -> DominationNumber {
        let n = g.order();
        let mut best: Option<u32> = None;
        for mask in 1u32..(1 << n) {
            let s = VertexSet::from_bits(mask);
            let ok = if connected { is_connected_dominating(g, s) } else { is_dominating(g, s) };
            if ok && best.is_none_or(|b| mask.count_ones() < b.count_ones()) {
                best = Some(mask);
            }
        }
        best.map_or(Infinite, |b| Finite(b.count_ones() as usize))
    }

    #[test]
    fn gamma_examples() {
        let s = gamma(&star(5));
        assert_eq!(s.value, Finite(1));
        assert_eq!(s.witness, Some(VertexSet::singleton(0)));
        assert_eq!(gamma(&cycle(6)).value, naive(&cycle(6), false));
        assert_eq!(gamma(&cycle(6)).value, Finite(2));
        let qr = paley(13).unwrap();
        assert_eq!(gamma(&qr).value, naive(&qr, false));
        assert_eq!(gamma(&qr).value, Finite(3));
    }

    #[test]
    fn gamma_c_examples() {
        for n in 7..=12 {
            let p = path(n);
            assert_eq!(gamma_c(&p).value, Finite(n - 2));
            assert_eq!(gamma_c(&p.complement()).value, Finite(2));
        }
        let qr = paley(13).unwrap();
        assert_eq!(gamma_c(&qr).value, Finite(4));
        assert_eq!(naive(&qr, true), Finite(4));
        let two = complete(3).disjoint_union(&complete(3)).unwrap();
        assert_eq!(gamma_c(&two), DominationResult::INFINITE);
        assert_eq!(gamma_c(&complete(1)).value, Finite(1));
    }

    #[test]
    fn witness_is_lexicographically_smallest() {
        // C6: connected dominating sets of size 4 are the 4-paths; smallest is {0,1,2,3}
        let r = gamma_c(&cycle(6));
        assert_eq!(r.witness, Some(VertexSet::from_vertices([0, 1, 2, 3])));
        let r = gamma_c(&cycle(6).complement());
        assert_eq!(r.witness, Some(VertexSet::from_vertices([0, 3])));
    }

    #[test]
    fn solver_matches_subset_oracle() {
        let mut rng = Rng::new(3);
        for i in 0..2000 {
            let n = 1 + i % 7;
            let p = rng.next_f64();
            let g = random_gnp(n, p, rng.next_u64()).unwrap();
            assert_eq!(gamma(&g).value, naive(&g, false), "{g:?}");
            let c = gamma_c(&g);
            assert_eq!(c.value, naive(&g, true), "{g:?}");
            if let Some(w) = c.witness {
                assert!(is_connected_dominating(&g, w));
            }
        }
    }

    #[test]
    fn gamma_below_gamma_c_and_edge_monotone() {
        let mut rng = Rng::new(5);
        for _ in 0..500 {
            let n = 3 + rng.below(8) as usize;
            let g = random_gnp(n, 0.4, rng.next_u64()).unwrap();
            let gc = gamma_c(&g).value;
            assert!(gamma(&g).value <= gc);
            let u = rng.below(n as u64) as usize;
            let v = (u + 1 + rng.below(n as u64 - 1) as usize) % n;
            let h = g.with_edge(u, v).unwrap();
            assert!(gamma(&h).value <= gamma(&g).value);
            assert!(gamma_c(&h).value <= gc);
        }
    }

    #[test]
    fn three_set_examples() {
        let k5 = complete(5);
        let s = VertexSet::from_vertices([0, 2, 4]);
        assert_eq!(three_set_witness(&k5, s).unwrap(), None);
        let c7 = cycle(7);
        let s = VertexSet::from_vertices([0, 1, 2]);
        assert_eq!(three_set_witness(&c7, s).unwrap(), Some(4));
        assert!(three_set_witness(&c7, VertexSet::from_vertices([0, 1])).is_err());
        let qr = paley(13).unwrap();
        for s in Combinations::new(13, 3).filter(|&s| qr.is_set_connected(s)) {
            assert!(three_set_witness(&qr, s).unwrap().is_some());
        }
    }

    #[test]
    fn combinations_are_lexicographic() {
        let all: alloc::vec::Vec<_> = Combinations::new(4, 2).map(|s| s.to_vec()).collect();
        assert_eq!(all, [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]);
        assert_eq!(Combinations::new(3, 0).count(), 1);
        assert_eq!(Combinations::new(2, 3).count(), 0);
    }
}
