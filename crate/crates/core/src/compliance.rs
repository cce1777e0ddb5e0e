//! k-compliance, necessary-condition filters, f(n) and Nordhaus-Gaddum checks.
//!
//! A graph `G` of order `n` is k-compliant when `G` or its complement has a
//! minor of maximum degree at least `n - k`. Two independent routes decide it:
//! [`is_k_compliant`] compares `min(γc(G), γc(complement))` with `k`, while
//! [`compliance_by_minor`] contracts every connected set of at most `k`
//! vertices and reads off the maximum degree. They must always agree.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use crate::domination::{gamma_c, gamma_c_at_most, Combinations};
use crate::graph::{Graph, VertexSet};
use crate::topology::{has_minor, MinorOutcome};
use crate::{constructions, Error, Result};

/// Which of `G` and its complement a witness lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Graph,
    Complement,
}

impl Side {
    pub fn of(self, g: &Graph) -> Graph {
        match self {
            Side::Graph => *g,
            Side::Complement => g.complement(),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Graph => "graph",
            Side::Complement => "complement",
        })
    }
}

/// A connected vertex set together with a spanning tree of it. Contracting the
/// tree edges in the chosen side yields a minor of maximum degree `>= n - k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplianceWitness {
    pub side: Side,
    pub set: VertexSet,
    /// Spanning tree of `set`, in original vertex labels.
    pub tree: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplianceReport {
    pub k: usize,
    pub compliant: bool,
    /// Least k for which the graph is compliant. The minor route leaves this
    /// `None` when it only established that the value exceeds `k`.
    pub min_k: Option<usize>,
    pub witness: Option<ComplianceWitness>,
}

impl ComplianceReport {
    /// Re-checks the report against `g` from first principles: the witness
    /// tree spans a connected set of at most `k` vertices, and contracting it
    /// produces a vertex of degree at least `n - k`.
    pub fn verify(&self, g: &Graph) -> bool {
        let n = g.order();
        match (&self.witness, self.compliant) {
            (None, false) => self.min_k.is_none_or(|m| m > self.k),
            (Some(w), true) => {
                if w.set.len() > self.k || w.set.is_empty() || w.tree.len() + 1 != w.set.len() {
                    return false;
                }
                let host = w.side.of(g);
                let ends_ok = w.tree.iter().all(|&(a, b)| {
                    w.set.contains(a) && w.set.contains(b) && host.has_edge(a, b)
                });
                if !ends_ok || !host.is_set_connected(w.set) {
                    return false;
                }
                match contract_tree(&host, &w.tree) {
                    Ok(minor) => minor.max_degree() + self.k >= n,
                    Err(_) => false,
                }
            }
            _ => false,
        }
    }
}

/// Contracts `edges` (given in the labels of `g`) one after another.
pub fn contract_tree(g: &Graph, edges: &[(usize, usize)]) -> Result<Graph> {
    let mut label: Vec<usize> = (0..g.order()).collect();
    let mut h = *g;
    for &(a, b) in edges {
        let (x, y) = (label[a], label[b]);
        if x == y {
            return Err(Error::InvalidArgument("tree edges contain a cycle"));
        }
        h = h.contract_edge(x, y)?;
        let (keep, gone) = (x.min(y), x.max(y));
        for l in label.iter_mut() {
            if *l == gone {
                *l = keep;
            } else if *l > gone {
                *l -= 1;
            }
        }
    }
    Ok(h)
}

/// Breadth-first spanning tree of a connected set, rooted at its smallest member.
pub fn spanning_tree(g: &Graph, set: VertexSet) -> Vec<(usize, usize)> {
    let mut tree = Vec::new();
    let Some(root) = set.first() else {
        return tree;
    };
    let mut seen = VertexSet::singleton(root);
    let mut queue = alloc::collections::VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for u in g.neighbors(v).intersection(set).difference(seen) {
            seen = seen.with(u);
            tree.push((v, u));
            queue.push_back(u);
        }
    }
    tree
}

/// `min(γc(G), γc(complement))`. Finite for every graph, since a graph and its
/// complement are never both disconnected.
pub fn min_k(g: &Graph) -> usize {
    min_k_with_witness(g).0
}

fn min_k_with_witness(g: &Graph) -> (usize, Option<(Side, VertexSet)>) {
    let n = g.order();
    if n == 0 {
        return (0, None);
    }
    let direct = gamma_c(g);
    let limit = direct.value.finite().map_or(n, |v| v - 1);
    let comp = g.complement();
    if let Some(r) = gamma_c_at_most(&comp, limit) {
        let set = r.witness.expect("finite values carry a witness");
        return (set.len(), Some((Side::Complement, set)));
    }
    let set = direct.witness.expect("one side is connected");
    (set.len(), Some((Side::Graph, set)))
}

/// k-compliance via connected domination. Ties prefer `G` over its complement.
pub fn is_k_compliant(g: &Graph, k: usize) -> Result<ComplianceReport> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive"));
    }
    let (value, found) = min_k_with_witness(g);
    let compliant = value <= k;
    let witness = match found {
        Some((side, set)) if compliant => {
            let tree = spanning_tree(&side.of(g), set);
            Some(ComplianceWitness { side, set, tree })
        }
        _ => None,
    };
    Ok(ComplianceReport { k, compliant, min_k: Some(value), witness })
}

/// Largest `k` accepted by [`compliance_by_minor`].
pub const MAX_MINOR_ORACLE_K: usize = 4;

/// k-compliance by explicit contraction: every connected set of at most `k`
/// vertices in `G` and in its complement is contracted along a spanning tree
/// and the maximum degree of the result compared with `n - k`. Independent of
/// the domination solver.
pub fn compliance_by_minor(g: &Graph, k: usize) -> Result<ComplianceReport> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive"));
    }
    if k > MAX_MINOR_ORACLE_K {
        return Err(Error::KTooLarge { k, max: MAX_MINOR_ORACLE_K });
    }
    let n = g.order();
    let sides = [(Side::Graph, *g), (Side::Complement, g.complement())];
    let mut best: Option<(usize, ComplianceWitness)> = None;
    for size in 1..=k.min(n) {
        for (side, host) in &sides {
            for set in Combinations::new(n, size) {
                if !host.is_set_connected(set) {
                    continue;
                }
                let tree = spanning_tree(host, set);
                let minor = contract_tree(host, &tree)?;
                let deficit = n - minor.max_degree();
                if best.as_ref().is_none_or(|(b, _)| deficit < *b) {
                    best = Some((deficit, ComplianceWitness { side: *side, set, tree }));
                }
            }
        }
        // Larger sets cannot beat a deficit of at most `size`: the merged
        // vertex has degree at most n - |S|, and any other vertex was already
        // measured as a singleton.
        if best.as_ref().is_some_and(|(b, _)| *b <= size) {
            break;
        }
    }
    Ok(match best {
        Some((deficit, witness)) if deficit <= k => {
            ComplianceReport { k, compliant: true, min_k: Some(deficit), witness: Some(witness) }
        }
        _ => ComplianceReport { k, compliant: false, min_k: None, witness: None },
    })
}

// ---------------------------------------------------------------------------
// Necessary-condition filters for 3-non-compliance
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FilterKind {
    /// Common-neighbour counts, any order.
    Basic,
    /// Order-14 refinements.
    Order14,
    /// Order-15 refinements.
    Order15,
}

impl fmt::Display for FilterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FilterKind::Basic => "basic",
            FilterKind::Order14 => "order14",
            FilterKind::Order15 => "order15",
        })
    }
}

/// The individual necessary conditions a filter checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    /// Non-adjacent pairs share at least 3 neighbours.
    NonAdjacentCommonNeighbors,
    /// Adjacent pairs share at least 2 neighbours.
    AdjacentCommonNeighbors,
    /// Every degree lies in `[6, n - 7]` (both sides have minimum degree 6).
    DegreeWindow,
    /// Edge count inside the window left open by the counting arguments.
    EdgeWindow,
    /// A degree-6 vertex's neighbours have large total degree.
    Degree6NeighborDegreeSum,
    /// Non-adjacent degree-7 pairs share at least 4 neighbours (order 14).
    Degree7NonAdjacentCommonNeighbors,
    /// Adjacent degree-7 pairs share at least 3 neighbours (order 14).
    Degree7AdjacentCommonNeighbors,
    /// With 45 edges at order 14, a degree-7 vertex's neighbours have total
    /// degree at least 44.
    Degree7NeighborDegreeSum,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::NonAdjacentCommonNeighbors => "non-adjacent-common-neighbors",
            Condition::AdjacentCommonNeighbors => "adjacent-common-neighbors",
            Condition::DegreeWindow => "degree-window",
            Condition::EdgeWindow => "edge-window",
            Condition::Degree6NeighborDegreeSum => "degree6-neighbor-degree-sum",
            Condition::Degree7NonAdjacentCommonNeighbors => "degree7-non-adjacent-common-neighbors",
            Condition::Degree7AdjacentCommonNeighbors => "degree7-adjacent-common-neighbors",
            Condition::Degree7NeighborDegreeSum => "degree7-neighbor-degree-sum",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subject {
    Pair(usize, usize),
    Vertex(usize),
    Graph,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    AtLeast(usize),
    Within(usize, usize),
}

impl Bound {
    pub fn admits(self, x: usize) -> bool {
        match self {
            Bound::AtLeast(lo) => x >= lo,
            Bound::Within(lo, hi) => (lo..=hi).contains(&x),
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::AtLeast(lo) => write!(f, ">= {lo}"),
            Bound::Within(lo, hi) => write!(f, "in [{lo}, {hi}]"),
        }
    }
}

/// Why a filter rejected a graph; re-checkable with [`FilterEvidence::recheck`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FilterEvidence {
    pub condition: Condition,
    pub side: Side,
    pub subject: Subject,
    pub measured: usize,
    pub bound: Bound,
}

impl FilterEvidence {
    /// Recomputes the measured quantity on `g` and confirms that the
    /// condition's hypotheses hold and its bound is violated.
    pub fn recheck(&self, g: &Graph) -> bool {
        let h = self.side.of(g);
        let n = h.order();
        let measured = match (self.condition, self.subject) {
            (Condition::EdgeWindow, Subject::Graph) => h.edge_count(),
            (Condition::DegreeWindow, Subject::Vertex(v)) if v < n => h.degree(v),
            (c, Subject::Vertex(v)) if v < n => {
                let want = if c == Condition::Degree6NeighborDegreeSum { 6 } else { 7 };
                if h.degree(v) != want
                    || (c == Condition::Degree7NeighborDegreeSum && h.edge_count() != 45)
                {
                    return false;
                }
                neighbor_degree_sum(&h, v)
            }
            (c, Subject::Pair(u, v)) if u < n && v < n && u != v => {
                let adjacent = h.has_edge(u, v);
                let hypotheses = match c {
                    Condition::NonAdjacentCommonNeighbors => !adjacent,
                    Condition::AdjacentCommonNeighbors => adjacent,
                    Condition::Degree7NonAdjacentCommonNeighbors => {
                        !adjacent && h.degree(u) == 7 && h.degree(v) == 7
                    }
                    Condition::Degree7AdjacentCommonNeighbors => {
                        adjacent && h.degree(u) == 7 && h.degree(v) == 7
                    }
                    _ => false,
                };
                if !hypotheses {
                    return false;
                }
                h.common_neighbors(u, v).map_or(usize::MAX, |s| s.len())
            }
            _ => return false,
        };
        measured == self.measured && !self.bound.admits(measured)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FilterVerdict {
    pub kind: FilterKind,
    pub pass: bool,
    pub evidence: Option<FilterEvidence>,
}

impl FilterVerdict {
    fn from_check(kind: FilterKind, check: core::result::Result<(), FilterEvidence>) -> Self {
        match check {
            Ok(()) => FilterVerdict { kind, pass: true, evidence: None },
            Err(e) => FilterVerdict { kind, pass: false, evidence: Some(e) },
        }
    }
}

fn neighbor_degree_sum(h: &Graph, v: usize) -> usize {
    h.neighbors(v).iter().map(|u| h.degree(u)).sum()
}

type Check = core::result::Result<(), FilterEvidence>;

fn fail(condition: Condition, side: Side, subject: Subject, measured: usize, bound: Bound) -> Check {
    Err(FilterEvidence { condition, side, subject, measured, bound })
}

fn check_common_neighbors(h: &Graph, side: Side) -> Check {
    let n = h.order();
    for u in 0..n {
        for v in u + 1..n {
            let c = (h.rows()[u] & h.rows()[v]).count_ones() as usize;
            let (cond, need) = if h.has_edge(u, v) {
                (Condition::AdjacentCommonNeighbors, 2)
            } else {
                (Condition::NonAdjacentCommonNeighbors, 3)
            };
            if c < need {
                return fail(cond, side, Subject::Pair(u, v), c, Bound::AtLeast(need));
            }
        }
    }
    Ok(())
}

fn check_edges(h: &Graph, side: Side, lo: usize, hi: usize) -> Check {
    let m = h.edge_count();
    if (lo..=hi).contains(&m) {
        Ok(())
    } else {
        fail(Condition::EdgeWindow, side, Subject::Graph, m, Bound::Within(lo, hi))
    }
}

fn check_degrees(h: &Graph, side: Side) -> Check {
    let n = h.order();
    let (lo, hi) = (6, n.saturating_sub(7));
    for v in 0..n {
        let d = h.degree(v);
        if !(lo..=hi).contains(&d) {
            return fail(Condition::DegreeWindow, side, Subject::Vertex(v), d, Bound::Within(lo, hi));
        }
    }
    Ok(())
}

fn check_neighbor_sums(h: &Graph, side: Side, degree: usize, need: usize, cond: Condition) -> Check {
    for v in 0..h.order() {
        if h.degree(v) == degree {
            let s = neighbor_degree_sum(h, v);
            if s < need {
                return fail(cond, side, Subject::Vertex(v), s, Bound::AtLeast(need));
            }
        }
    }
    Ok(())
}

fn check_degree7_pairs(h: &Graph, side: Side) -> Check {
    let sevens: Vec<usize> = (0..h.order()).filter(|&v| h.degree(v) == 7).collect();
    for (i, &u) in sevens.iter().enumerate() {
        for &v in &sevens[i + 1..] {
            let c = (h.rows()[u] & h.rows()[v]).count_ones() as usize;
            let (cond, need) = if h.has_edge(u, v) {
                (Condition::Degree7AdjacentCommonNeighbors, 3)
            } else {
                (Condition::Degree7NonAdjacentCommonNeighbors, 4)
            };
            if c < need {
                return fail(cond, side, Subject::Pair(u, v), c, Bound::AtLeast(need));
            }
        }
    }
    Ok(())
}

/// Common-neighbour necessary conditions for 3-non-compliance: non-adjacent
/// pairs share at least 3 neighbours, adjacent pairs at least 2.
pub fn filter_basic(g: &Graph) -> FilterVerdict {
    FilterVerdict::from_check(FilterKind::Basic, check_common_neighbors(g, Side::Graph))
}

/// Necessary conditions for 3-non-compliance at order 14, applied to the
/// graph and to its complement (which is 3-non-compliant as well).
pub fn filter_order14(g: &Graph) -> Result<FilterVerdict> {
    if g.order() != 14 {
        return Err(Error::InvalidArgument("filter_order14 needs a graph of order 14"));
    }
    let check = |side: Side| -> Check {
        let h = side.of(g);
        check_edges(&h, side, 45, 49)?;
        check_degrees(&h, side)?;
        check_common_neighbors(&h, side)?;
        check_neighbor_sums(&h, side, 6, 39, Condition::Degree6NeighborDegreeSum)?;
        check_degree7_pairs(&h, side)?;
        if h.edge_count() == 45 {
            check_neighbor_sums(&h, side, 7, 44, Condition::Degree7NeighborDegreeSum)?;
        }
        Ok(())
    };
    let result = check(Side::Graph).and_then(|()| check(Side::Complement));
    Ok(FilterVerdict::from_check(FilterKind::Order14, result))
}

/// Necessary conditions for 3-non-compliance at order 15, on both sides.
pub fn filter_order15(g: &Graph) -> Result<FilterVerdict> {
    if g.order() != 15 {
        return Err(Error::InvalidArgument("filter_order15 needs a graph of order 15"));
    }
    let check = |side: Side| -> Check {
        let h = side.of(g);
        check_edges(&h, side, 49, 60)?;
        check_degrees(&h, side)?;
        check_common_neighbors(&h, side)?;
        check_neighbor_sums(&h, side, 6, 42, Condition::Degree6NeighborDegreeSum)
    };
    let result = check(Side::Graph).and_then(|()| check(Side::Complement));
    Ok(FilterVerdict::from_check(FilterKind::Order15, result))
}

/// Runs one filter; order-specific filters reject graphs of the wrong order.
pub fn apply_filter(kind: FilterKind, g: &Graph) -> Result<FilterVerdict> {
    match kind {
        FilterKind::Basic => Ok(filter_basic(g)),
        FilterKind::Order14 => filter_order14(g),
        FilterKind::Order15 => filter_order15(g),
    }
}

// ---------------------------------------------------------------------------
// Order 15 trichotomy
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OneOfThree {
    Compliant3,
    K7InGraph,
    K7InComplement,
}

/// Returns the first of "3-compliant", "has a K7 minor", "complement has a K7
/// minor" that holds, checked in that order. `budget` caps each minor search.
pub fn verify_one_of_three(g: &Graph, budget: Option<u64>) -> Result<OneOfThree> {
    if g.order() != 15 {
        return Err(Error::InvalidArgument("the trichotomy applies to order 15"));
    }
    if is_k_compliant(g, 3)?.compliant {
        return Ok(OneOfThree::Compliant3);
    }
    let k7 = constructions::complete(7);
    let direct = has_minor(g, &k7, budget)?;
    if matches!(direct, MinorOutcome::Found(_)) {
        return Ok(OneOfThree::K7InGraph);
    }
    let comp = has_minor(&g.complement(), &k7, budget)?;
    match (direct, comp) {
        (_, MinorOutcome::Found(_)) => Ok(OneOfThree::K7InComplement),
        (MinorOutcome::Absent, MinorOutcome::Absent) => {
            Err(Error::TheoremFalsified("order-15 graph with no compliant side and no K7 minor"))
        }
        _ => Err(Error::BudgetExhausted),
    }
}

// ---------------------------------------------------------------------------
// f(n)
// ---------------------------------------------------------------------------

/// Largest order accepted by [`compute_f`].
pub const MAX_F_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FValue {
    pub n: usize,
    pub f: usize,
    /// `n - f`: the least k for which every graph of order n is k-compliant.
    pub max_min_k: usize,
    /// The first pair mask (ascending) attaining `max_min_k`.
    pub extremal: Graph,
}

/// Number of vertex pairs, i.e. bits in a pair mask.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Scans pair masks in `range`, skipping any mask larger than its complement
/// mask. Returns the maximum `min_k` seen and the smallest mask attaining it.
pub fn scan_pair_masks(n: usize, range: Range<u64>) -> Result<Option<(usize, u64)>> {
    if n == 0 || n > MAX_F_ORDER {
        return Err(Error::InvalidArgument("f(n) is supported for 1 <= n <= 8"));
    }
    let full = (1u64 << pair_count(n)) - 1;
    let mut best: Option<(usize, u64)> = None;
    for mask in range {
        if mask > full ^ mask {
            continue;
        }
        let g = graph_from_mask(n, mask);
        let value = min_k(&g);
        if best.is_none_or(|(b, _)| value > b) {
            best = Some((value, mask));
        }
    }
    Ok(best)
}

/// Combines partial scans: larger `min_k` wins, ties go to the smaller mask.
pub fn merge_scans(a: Option<(usize, u64)>, b: Option<(usize, u64)>) -> Option<(usize, u64)> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(x), Some(y)) => Some(if y.0 > x.0 || (y.0 == x.0 && y.1 < x.1) { y } else { x }),
    }
}

/// Graph from a pair mask, for orders up to 8 (28 pairs).
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::with_capacity(pair_count(n));
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> idx & 1 == 1 {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Graph::from_edges(n, &edges).expect("order within bounds")
}

/// Builds the f(n) value from a completed scan.
pub fn f_from_scan(n: usize, scan: Option<(usize, u64)>) -> FValue {
    let (max_min_k, mask) = scan.expect("every order has at least one graph");
    FValue { n, f: n - max_min_k, max_min_k, extremal: graph_from_mask(n, mask) }
}

/// `f(n) = n - max over all graphs of order n of min_k`, by exhaustive
/// enumeration of labelled graphs with complement-pair deduplication.
/// Order 8 (2^28 masks) is long-running.
pub fn compute_f(n: usize) -> Result<FValue> {
    let scan = scan_pair_masks(n, 0..1u64 << pair_count(n))?;
    Ok(f_from_scan(n, scan))
}

fn ceil_sqrt(x: usize) -> usize {
    let mut r = 0;
    while r * r < x {
        r += 1;
    }
    r
}

/// Lower bound `n - ceil(sqrt(2n - 4)) + 1 <= f(n)`, valid for `n >= 7`.
pub fn bound_fn_sqrt(n: usize) -> Result<usize> {
    if n < 7 {
        return Err(Error::InvalidArgument("the square-root bound needs n >= 7"));
    }
    Ok(n + 1 - ceil_sqrt(2 * n - 4))
}

/// Lower bound `n - floor((n + 1) / 4) <= f(n)`, valid for `n >= 15`.
pub fn bound_fn_linear(n: usize) -> Result<usize> {
    if n < 15 {
        return Err(Error::InvalidArgument("the linear bound needs n >= 15"));
    }
    Ok(n - (n + 1) / 4)
}

// ---------------------------------------------------------------------------
// Nordhaus-Gaddum validators
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NordhausValues {
    pub gamma_c: usize,
    pub gamma_c_complement: usize,
    /// Left-hand side: the sum or the product of the two values.
    pub lhs: usize,
    /// Right-hand side: `δ* + 2` or `2n - 4`.
    pub bound: usize,
    pub equality: bool,
    /// `G` or its complement is a path or a cycle (product form only).
    pub path_or_cycle: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NordhausVerdict {
    NotApplicable(&'static str),
    Holds(NordhausValues),
    /// A proved inequality failed. Must never be produced.
    Violated(NordhausValues),
}

impl NordhausVerdict {
    pub fn is_violated(&self) -> bool {
        matches!(self, NordhausVerdict::Violated(_))
    }
}

fn both_gamma_c(g: &Graph) -> Option<(usize, usize)> {
    let a = gamma_c(g).value.finite()?;
    let b = gamma_c(&g.complement()).value.finite()?;
    Some((a, b))
}

/// Sum form: when `G` and its complement are connected with both connected
/// domination numbers at least 4, `γc(G) + γc(complement) <= δ*(G) + 2`.
pub fn check_nordhaus_sum(g: &Graph) -> NordhausVerdict {
    let Some((a, b)) = both_gamma_c(g) else {
        return NordhausVerdict::NotApplicable("graph or complement is disconnected");
    };
    if a < 4 || b < 4 {
        return NordhausVerdict::NotApplicable("a connected domination number is below 4");
    }
    let values = NordhausValues {
        gamma_c: a,
        gamma_c_complement: b,
        lhs: a + b,
        bound: g.delta_star() + 2,
        equality: a + b == g.delta_star() + 2,
        path_or_cycle: false,
    };
    if values.lhs <= values.bound {
        NordhausVerdict::Holds(values)
    } else {
        NordhausVerdict::Violated(values)
    }
}

/// Product form for `n >= 7`, both sides connected: `γc(G) γc(complement) <=
/// 2n - 4`, with equality exactly when `G` or its complement is a path or cycle.
pub fn check_nordhaus_product(g: &Graph) -> NordhausVerdict {
    let n = g.order();
    if n < 7 {
        return NordhausVerdict::NotApplicable("order below 7");
    }
    let Some((a, b)) = both_gamma_c(g) else {
        return NordhausVerdict::NotApplicable("graph or complement is disconnected");
    };
    let bound = 2 * n - 4;
    let path_or_cycle = g.is_path_or_cycle() || g.complement().is_path_or_cycle();
    let values = NordhausValues {
        gamma_c: a,
        gamma_c_complement: b,
        lhs: a * b,
        bound,
        equality: a * b == bound,
        path_or_cycle,
    };
    if values.lhs <= bound && values.equality == path_or_cycle {
        NordhausVerdict::Holds(values)
    } else {
        NordhausVerdict::Violated(values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, cycle, paley, path, twin_add};
    use crate::rng::Rng;
    use crate::search::random_gnp;

    #[test]
    fn complete_graph_is_one_compliant() {
        let r = is_k_compliant(&complete(6), 1).unwrap();
        assert!(r.compliant);
        assert_eq!(r.min_k, Some(1));
        assert!(r.verify(&complete(6)));
    }

    #[test]
    fn disconnected_graph_is_two_compliant() {
        let g = complete(3).disjoint_union(&complete(3)).unwrap();
        let r = is_k_compliant(&g, 2).unwrap();
        assert!(r.compliant);
        assert_eq!(r.witness.as_ref().unwrap().side, Side::Complement);
        assert!(r.verify(&g));
    }

    #[test]
    fn paley13_is_exactly_four_compliant() {
        let qr = paley(13).unwrap();
        let r3 = is_k_compliant(&qr, 3).unwrap();
        assert!(!r3.compliant);
        assert_eq!(r3.min_k, Some(4));
        assert!(r3.verify(&qr));
        let r4 = is_k_compliant(&qr, 4).unwrap();
        assert!(r4.compliant);
        assert!(r4.verify(&qr));
        let m3 = compliance_by_minor(&qr, 3).unwrap();
        assert!(!m3.compliant);
        assert!(compliance_by_minor(&qr, 4).unwrap().compliant);
    }

    #[test]
    fn minor_route_on_cycle7() {
        let c7 = cycle(7);
        let r = compliance_by_minor(&c7, 5).unwrap_err();
        assert_eq!(r, Error::KTooLarge { k: 5, max: 4 });
        // the complement of C7 has γc = 2, so the minor route finds it at k = 2
        let r = compliance_by_minor(&c7, 2).unwrap();
        assert!(r.compliant);
        assert_eq!(r.min_k, Some(2));
        assert!(r.verify(&c7));
        // on the cycle side alone, a 5-path contracts to a vertex of degree 2 = 7 - 5
        let path5 = VertexSet::from_vertices(0..5);
        let minor = contract_tree(&c7, &spanning_tree(&c7, path5)).unwrap();
        assert_eq!(minor.max_degree(), 2);
    }

    #[test]
    fn dominating_vertex_needs_no_contraction() {
        let g = crate::constructions::star(5);
        let r = compliance_by_minor(&g, 1).unwrap();
        assert!(r.compliant);
        assert!(r.witness.as_ref().unwrap().tree.is_empty());
    }

    #[test]
    fn both_routes_agree_on_random_graphs() {
        let mut rng = Rng::new(23);
        for i in 0..1500 {
            let n = 2 + i % 9;
            let g = random_gnp(n, rng.next_f64(), rng.next_u64()).unwrap();
            for k in 1..=4 {
                let a = is_k_compliant(&g, k).unwrap();
                let b = compliance_by_minor(&g, k).unwrap();
                assert_eq!(a.compliant, b.compliant, "{g:?} k={k}");
                if a.compliant {
                    assert_eq!(a.min_k, b.min_k);
                    assert!(a.verify(&g) && b.verify(&g));
                }
            }
        }
    }

    #[test]
    fn compliance_is_monotone_in_k() {
        let mut rng = Rng::new(29);
        for _ in 0..200 {
            let g = random_gnp(9, 0.5, rng.next_u64()).unwrap();
            let m = min_k(&g);
            for k in 1..=9 {
                assert_eq!(is_k_compliant(&g, k).unwrap().compliant, k >= m);
            }
        }
    }

    #[test]
    fn basic_filter_examples() {
        assert!(filter_basic(&paley(13).unwrap()).pass);
        let v = filter_basic(&path(5));
        assert!(!v.pass);
        let e = v.evidence.unwrap();
        assert_eq!(e.subject, Subject::Pair(0, 1));
        assert_eq!(e.measured, 0);
        assert!(e.recheck(&path(5)));
        let v = filter_basic(&cycle(6));
        assert!(!v.pass && v.evidence.unwrap().recheck(&cycle(6)));
    }

    #[test]
    fn order14_filter_examples() {
        let qr = paley(13).unwrap();
        assert!(filter_order14(&twin_add(&qr, 0, false).unwrap()).unwrap().pass);
        assert!(filter_order14(&twin_add(&qr, 0, true).unwrap()).unwrap().pass);
        let k14 = complete(14);
        let v = filter_order14(&k14).unwrap();
        assert!(!v.pass && v.evidence.unwrap().recheck(&k14));
        assert!(filter_order14(&qr).is_err());
        // a 43-edge graph fails on the edge window
        let mut rng = Rng::new(1);
        let g = crate::search::random_with_edges(14, 43, &mut rng).unwrap();
        let e = filter_order14(&g).unwrap().evidence.unwrap();
        assert_eq!(e.condition, Condition::EdgeWindow);
        assert_eq!(e.measured, 43);
    }

    #[test]
    fn order15_filter_examples() {
        let qr = paley(13).unwrap();
        let g = twin_add(&twin_add(&qr, 0, false).unwrap(), 1, false).unwrap();
        let v = filter_order15(&g).unwrap();
        assert!(v.pass || v.evidence.unwrap().recheck(&g));
        let mut rng = Rng::new(2);
        let h = crate::search::random_with_edges(15, 46, &mut rng).unwrap();
        let e = filter_order15(&h).unwrap().evidence.unwrap();
        assert_eq!((e.condition, e.measured), (Condition::EdgeWindow, 46));
        let cc = cycle(15).complement();
        let v = filter_order15(&cc).unwrap();
        assert!(!v.pass && v.evidence.unwrap().recheck(&cc));
    }

    #[test]
    fn filters_are_sound_on_random_graphs() {
        let mut rng = Rng::new(31);
        for i in 0..300 {
            let n = [9, 11, 14, 15][i % 4];
            let g = random_gnp(n, 0.35 + 0.3 * rng.next_f64(), rng.next_u64()).unwrap();
            let mut verdicts = alloc::vec![filter_basic(&g)];
            if n == 14 {
                verdicts.push(filter_order14(&g).unwrap());
            }
            if n == 15 {
                verdicts.push(filter_order15(&g).unwrap());
            }
            for v in verdicts {
                if !v.pass {
                    assert!(v.evidence.unwrap().recheck(&g));
                    assert!(is_k_compliant(&g, 3).unwrap().compliant);
                }
            }
        }
    }

    #[test]
    fn trichotomy_examples() {
        assert_eq!(verify_one_of_three(&cycle(15), None).unwrap(), OneOfThree::Compliant3);
        assert_eq!(verify_one_of_three(&complete(15), None).unwrap(), OneOfThree::Compliant3);
        let g = complete(7).disjoint_union(&Graph::empty(8).unwrap()).unwrap();
        assert_eq!(verify_one_of_three(&g, None).unwrap(), OneOfThree::Compliant3);
        assert!(verify_one_of_three(&complete(14), None).is_err());
    }

    #[test]
    fn trichotomy_on_twin_extensions_of_paley13() {
        let qr = paley(13).unwrap();
        let g = twin_add(&twin_add(&qr, 0, false).unwrap(), 0, false).unwrap();
        assert!(!is_k_compliant(&g, 3).unwrap().compliant);
        let r = verify_one_of_three(&g, None).unwrap();
        assert_ne!(r, OneOfThree::Compliant3);
    }

    #[test]
    fn small_f_values() {
        let vals: Vec<usize> = (1..=5).map(|n| compute_f(n).unwrap().f).collect();
        // n - max min_k, computed exhaustively
        assert_eq!(vals, [0, 1, 2, 2, 2]);
        assert!(compute_f(0).is_err());
        assert!(compute_f(9).is_err());
    }

    #[test]
    fn f_extremal_graphs_attain_the_maximum() {
        for n in 1..=6 {
            let fv = compute_f(n).unwrap();
            assert_eq!(min_k(&fv.extremal), fv.max_min_k);
        }
    }

    #[test]
    fn scans_merge_like_a_single_scan() {
        let n = 5;
        let total = 1u64 << pair_count(n);
        let whole = scan_pair_masks(n, 0..total).unwrap();
        let split = (0..8)
            .map(|i| scan_pair_masks(n, i * total / 8..(i + 1) * total / 8).unwrap())
            .fold(None, merge_scans);
        assert_eq!(whole, split);
    }

    #[test]
    fn sqrt_and_linear_bounds() {
        assert_eq!(bound_fn_sqrt(7).unwrap(), 4);
        assert_eq!(bound_fn_sqrt(31).unwrap(), 24);
        assert_eq!(bound_fn_linear(31).unwrap(), 23);
        assert_eq!(bound_fn_sqrt(15).unwrap(), 10);
        assert_eq!(bound_fn_linear(15).unwrap(), 11);
        assert!(bound_fn_sqrt(6).is_err());
        assert!(bound_fn_linear(14).is_err());
        // the square-root bound first beats the linear one at 31
        let first = (15..200).find(|&n| bound_fn_sqrt(n).unwrap() > bound_fn_linear(n).unwrap());
        assert_eq!(first, Some(31));
    }

    #[test]
    fn nordhaus_examples() {
        let qr = paley(13).unwrap();
        match check_nordhaus_sum(&qr) {
            NordhausVerdict::Holds(v) => {
                assert_eq!((v.gamma_c, v.gamma_c_complement, v.bound), (4, 4, 8));
                assert!(v.equality);
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(check_nordhaus_sum(&path(9)), NordhausVerdict::NotApplicable(_)));
        match check_nordhaus_product(&cycle(10)) {
            NordhausVerdict::Holds(v) => assert!(v.equality && v.lhs == 16 && v.path_or_cycle),
            other => panic!("{other:?}"),
        }
        match check_nordhaus_product(&path(8)) {
            NordhausVerdict::Holds(v) => assert!(v.equality && v.lhs == 12),
            other => panic!("{other:?}"),
        }
        match check_nordhaus_product(&qr) {
            NordhausVerdict::Holds(v) => assert!(!v.equality && v.lhs == 16 && v.bound == 22),
            other => panic!("{other:?}"),
        }
    }
}
