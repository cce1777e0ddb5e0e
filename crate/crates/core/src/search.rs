//! Seeded graph generators and the pruned search for k-non-compliant graphs.
//!
//! Sample mode draws graphs from per-index random streams, so any subset of
//! indices can be evaluated in any order (or in parallel) with identical
//! results. Exhaustive mode generates one graph per isomorphism class by
//! canonical augmentation: a child is kept only when its added vertex lies in
//! the orbit of the vertex its canonical labelling places last.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::compliance::{apply_filter, is_k_compliant, ComplianceReport, FilterKind, FilterVerdict};
use crate::graph::{Graph, VertexSet, MAX_ORDER};
use crate::iso::{canonical_form, canonical_form_colored, canonical_labeling, CanonicalForm};
use crate::rng::Rng;
use crate::{Error, Result};

/// Erdős–Rényi graph: each pair independently with probability `p`.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidArgument("edge probability must lie in [0, 1]"));
    }
    let mut rng = Rng::new(seed);
    let mut g = Graph::empty(n)?;
    for v in 1..n {
        for u in 0..v {
            if rng.chance(p) {
                g = g.with_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// Uniform graph with exactly `m` edges.
pub fn random_with_edges(n: usize, m: usize, rng: &mut Rng) -> Result<Graph> {
    let mut pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    if m > pairs.len() {
        return Err(Error::InvalidArgument("more edges than vertex pairs"));
    }
    for i in 0..m {
        let j = i + rng.below((pairs.len() - i) as u64) as usize;
        pairs.swap(i, j);
    }
    Graph::from_edges(n, &pairs[..m])
}

/// Random `d`-regular graph by stub pairing: stubs are matched one random
/// pair at a time, skipping pairs that would form a loop or a repeated edge,
/// and the whole pairing restarts when no admissible pair remains.
pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph> {
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge { order: n, max: MAX_ORDER });
    }
    if n > 0 && d >= n {
        return Err(Error::InvalidArgument("degree must be below the order"));
    }
    if n * d % 2 == 1 {
        return Err(Error::InvalidArgument("order times degree must be even"));
    }
    let mut rng = Rng::new(seed);
    'attempt: loop {
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| core::iter::repeat_n(v, d)).collect();
        let mut rows = [0u32; MAX_ORDER];
        while !stubs.is_empty() {
            let admissible = |a: usize, b: usize, rows: &[u32; MAX_ORDER]| a != b && rows[a] >> b & 1 == 0;
            let len = stubs.len() as u64;
            let mut picked = None;
            for _ in 0..32 {
                let i = rng.below(len) as usize;
                let j = rng.below(len) as usize;
                if i != j && admissible(stubs[i], stubs[j], &rows) {
                    picked = Some((i, j));
                    break;
                }
            }
            let (i, j) = match picked {
                Some(p) => p,
                None => {
                    let open: Vec<(usize, usize)> = (0..stubs.len())
                        .flat_map(|i| (i + 1..stubs.len()).map(move |j| (i, j)))
                        .filter(|&(i, j)| admissible(stubs[i], stubs[j], &rows))
                        .collect();
                    if open.is_empty() {
                        continue 'attempt;
                    }
                    open[rng.below(open.len() as u64) as usize]
                }
            };
            let (a, b) = (stubs[i], stubs[j]);
            rows[a] |= 1 << b;
            rows[b] |= 1 << a;
            let (hi, lo) = (i.max(j), i.min(j));
            stubs.swap_remove(hi);
            stubs.swap_remove(lo);
        }
        return Graph::from_rows(&rows[..n]);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeConstraint {
    Any,
    Regular(usize),
    Window { min: usize, max: usize },
}

impl DegreeConstraint {
    fn admits(self, g: &Graph) -> bool {
        match self {
            DegreeConstraint::Any => true,
            DegreeConstraint::Regular(d) => g.order() == 0 || (g.is_regular() && g.max_degree() == d),
            DegreeConstraint::Window { min, max } => {
                g.order() == 0 || (g.min_degree() >= min && g.max_degree() <= max)
            }
        }
    }

    fn max_degree(self) -> Option<usize> {
        match self {
            DegreeConstraint::Any => None,
            DegreeConstraint::Regular(d) => Some(d),
            DegreeConstraint::Window { max, .. } => Some(max),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    Sample { count: u64, seed: u64 },
    Exhaustive,
}

/// Largest order accepted by [`search_non_compliant`].
pub const MAX_SEARCH_ORDER: usize = 16;
/// Exhaustive runs at or above this order need `long_running`.
pub const LONG_RUNNING_ORDER: usize = 13;
/// Rejection-sampling attempts per sample before it is counted as unsampled.
pub const MAX_DRAW_ATTEMPTS: usize = 1000;

#[derive(Debug, Clone, PartialEq)]
pub struct SearchSpec {
    pub order: usize,
    pub degree: DegreeConstraint,
    /// Inclusive edge-count window.
    pub edges: Option<(usize, usize)>,
    pub filters: Vec<FilterKind>,
    pub mode: SearchMode,
    pub k: usize,
    pub long_running: bool,
    /// Graphs examined before the generated stream (positive controls).
    pub candidates: Vec<Graph>,
}

impl SearchSpec {
    pub fn sample(order: usize, degree: DegreeConstraint, count: u64, seed: u64, k: usize) -> Self {
        SearchSpec {
            order,
            degree,
            edges: None,
            filters: Vec::new(),
            mode: SearchMode::Sample { count, seed },
            k,
            long_running: false,
            candidates: Vec::new(),
        }
    }

    /// Rejects inconsistent or unsupported specifications.
    pub fn validate(&self) -> Result<()> {
        let n = self.order;
        if n > MAX_SEARCH_ORDER {
            return Err(Error::OrderTooLarge { order: n, max: MAX_SEARCH_ORDER });
        }
        if self.k == 0 {
            return Err(Error::InvalidArgument("k must be positive"));
        }
        let pairs = n * n.saturating_sub(1) / 2;
        let (mut lo, mut hi) = self.edges.unwrap_or((0, pairs));
        if lo > hi || hi > pairs {
            return Err(Error::InvalidArgument("empty or impossible edge window"));
        }
        match self.degree {
            DegreeConstraint::Any => {}
            DegreeConstraint::Regular(d) => {
                if n > 0 && d >= n {
                    return Err(Error::InvalidArgument("degree must be below the order"));
                }
                if n * d % 2 == 1 {
                    return Err(Error::InvalidArgument("order times degree must be even"));
                }
                lo = lo.max(n * d / 2);
                hi = hi.min(n * d / 2);
            }
            DegreeConstraint::Window { min, max } => {
                if min > max || (n > 0 && max >= n) {
                    return Err(Error::InvalidArgument("empty or impossible degree window"));
                }
                lo = lo.max((n * min).div_ceil(2));
                hi = hi.min(n * max / 2);
            }
        }
        if lo > hi {
            return Err(Error::InvalidArgument("degree and edge constraints are incompatible"));
        }
        for f in &self.filters {
            let need = match f {
                FilterKind::Basic => None,
                FilterKind::Order14 => Some(14),
                FilterKind::Order15 => Some(15),
            };
            if need.is_some_and(|m| m != n) {
                return Err(Error::InvalidArgument("filter does not apply at this order"));
            }
        }
        if self.candidates.iter().any(|g| g.order() != n) {
            return Err(Error::InvalidArgument("candidate graphs must have the search order"));
        }
        if self.mode == SearchMode::Exhaustive && n >= LONG_RUNNING_ORDER && !self.long_running {
            return Err(Error::InvalidArgument("exhaustive search at order 13 or more needs the long-running flag"));
        }
        Ok(())
    }

    fn admits(&self, g: &Graph) -> bool {
        self.degree.admits(g)
            && self.edges.is_none_or(|(lo, hi)| (lo..=hi).contains(&g.edge_count()))
    }
}

/// What became of one examined graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Examined {
    /// Outside the degree or edge constraints (exhaustive mode only).
    Excluded,
    /// A necessary condition for non-compliance failed.
    Filtered(FilterVerdict),
    Compliant,
    NonCompliant(ComplianceReport),
}

/// Applies the spec's filters in order, then the full compliance test.
pub fn examine(spec: &SearchSpec, g: &Graph) -> Result<Examined> {
    if !spec.admits(g) {
        return Ok(Examined::Excluded);
    }
    for &kind in &spec.filters {
        let v = apply_filter(kind, g)?;
        if !v.pass {
            return Ok(Examined::Filtered(v));
        }
    }
    let report = is_k_compliant(g, spec.k)?;
    Ok(if report.compliant { Examined::Compliant } else { Examined::NonCompliant(report) })
}

/// Sample `index` of a sample-mode spec, or `None` when rejection sampling
/// gave up after [`MAX_DRAW_ATTEMPTS`] draws.
pub fn sample_graph(spec: &SearchSpec, seed: u64, index: u64) -> Result<Option<Graph>> {
    let mut rng = Rng::for_item(seed, index);
    let n = spec.order;
    if let DegreeConstraint::Regular(d) = spec.degree {
        let g = random_regular(n, d, rng.next_u64())?;
        return Ok(spec.admits(&g).then_some(g));
    }
    for _ in 0..MAX_DRAW_ATTEMPTS {
        let g = match spec.edges {
            Some((lo, hi)) => {
                let m = lo + rng.below((hi - lo + 1) as u64) as usize;
                random_with_edges(n, m, &mut rng)?
            }
            None => random_gnp(n, 0.5, rng.next_u64())?,
        };
        if spec.admits(&g) {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

/// A non-compliant graph with its canonical form and re-checkable report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finding {
    pub graph: Graph,
    pub form: CanonicalForm,
    pub report: ComplianceReport,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchOutcome {
    /// Sorted by canonical form, one per isomorphism class.
    pub findings: Vec<Finding>,
    pub examined: u64,
    pub excluded: u64,
    pub filtered: u64,
    pub compliant: u64,
    pub unsampled: u64,
}

impl SearchOutcome {
    /// Folds one result in. When two graphs share a canonical form the one
    /// recorded first is kept, so callers must record in a fixed order.
    pub fn record(&mut self, g: &Graph, result: Examined, seen: &mut BTreeMap<CanonicalForm, Finding>) -> Result<()> {
        self.examined += 1;
        match result {
            Examined::Excluded => self.excluded += 1,
            Examined::Filtered(_) => self.filtered += 1,
            Examined::Compliant => self.compliant += 1,
            Examined::NonCompliant(report) => {
                let form = canonical_form(g)?;
                seen.entry(form.clone()).or_insert(Finding { graph: *g, form, report });
            }
        }
        Ok(())
    }
}

/// Runs the search sequentially. Candidates are examined first, then the
/// generated stream.
pub fn search_non_compliant(spec: &SearchSpec) -> Result<SearchOutcome> {
    spec.validate()?;
    let mut out = SearchOutcome::default();
    let mut seen = BTreeMap::new();
    for g in &spec.candidates {
        out.record(g, examine(spec, g)?, &mut seen)?;
    }
    match spec.mode {
        SearchMode::Sample { count, seed } => {
            for i in 0..count {
                match sample_graph(spec, seed, i)? {
                    Some(g) => out.record(&g, examine(spec, &g)?, &mut seen)?,
                    None => out.unsampled += 1,
                }
            }
        }
        SearchMode::Exhaustive => {
            let bound = Bound::of(spec);
            let mut err = None;
            generate(spec.order, bound, &mut |g| {
                if err.is_some() {
                    return;
                }
                if let Err(e) = examine(spec, g).and_then(|r| out.record(g, r, &mut seen)) {
                    err = Some(e);
                }
            })?;
            if let Some(e) = err {
                return Err(e);
            }
        }
    }
    out.findings = seen.into_values().collect();
    Ok(out)
}

/// Hereditary limits used to prune augmentation: every intermediate graph is
/// an induced subgraph of its descendants, so degree and edge caps carry down.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Bound {
    pub max_degree: Option<usize>,
    pub max_edges: Option<usize>,
}

impl Bound {
    pub fn of(spec: &SearchSpec) -> Self {
        Bound { max_degree: spec.degree.max_degree(), max_edges: spec.edges.map(|(_, hi)| hi) }
    }

    fn admits(self, g: &Graph) -> bool {
        self.max_degree.is_none_or(|d| g.order() == 0 || g.max_degree() <= d)
            && self.max_edges.is_none_or(|m| g.edge_count() <= m)
    }
}

/// Children of `g` with one more vertex, one per isomorphism class, each
/// having `g` as its canonical parent.
pub fn augment(g: &Graph, bound: Bound) -> Result<Vec<Graph>> {
    let n = g.order();
    if n + 1 > MAX_SEARCH_ORDER {
        return Err(Error::OrderTooLarge { order: n + 1, max: MAX_SEARCH_ORDER });
    }
    let mut siblings: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    for mask in 0u32..1 << n {
        let nb = VertexSet::from_bits(mask);
        if bound.max_degree.is_some_and(|d| nb.len() > d) {
            continue;
        }
        let mut rows = g.rows().to_vec();
        rows.push(mask);
        for v in nb {
            rows[v] |= 1 << n;
        }
        let child = Graph::from_rows(&rows)?;
        if !bound.admits(&child) || !is_canonical_child(&child)? {
            continue;
        }
        let form = canonical_form(&child)?;
        siblings.entry(form).or_insert(child);
    }
    Ok(siblings.into_values().collect())
}

fn is_canonical_child(child: &Graph) -> Result<bool> {
    let last = child.order() - 1;
    let (_, order) = canonical_labeling(child)?;
    let chosen = order[last];
    if chosen == last {
        return Ok(true);
    }
    let all = child.vertices();
    let a = canonical_form_colored(child, &[VertexSet::singleton(last), all.without(last)])?;
    let b = canonical_form_colored(child, &[VertexSet::singleton(chosen), all.without(chosen)])?;
    Ok(a == b)
}

/// Calls `visit` once per isomorphism class of graphs of order `n` within
/// `bound`.
pub fn generate(n: usize, bound: Bound, visit: &mut dyn FnMut(&Graph)) -> Result<()> {
    if n > MAX_SEARCH_ORDER {
        return Err(Error::OrderTooLarge { order: n, max: MAX_SEARCH_ORDER });
    }
    descend(&Graph::empty(0)?, n, bound, visit)
}

fn descend(g: &Graph, n: usize, bound: Bound, visit: &mut dyn FnMut(&Graph)) -> Result<()> {
    if g.order() == n {
        visit(g);
        return Ok(());
    }
    for child in augment(g, bound)? {
        descend(&child, n, bound, visit)?;
    }
    Ok(())
}

/// Every graph of order `n` (up to isomorphism) with at most the given
/// hereditary bound, collected at level `depth` so the subtrees can be
/// distributed. Levels beyond `n` are clamped.
pub fn frontier(n: usize, depth: usize, bound: Bound) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    generate(depth.min(n), bound, &mut |g| out.push(*g))?;
    Ok(out)
}

/// Completes a frontier graph to order `n`.
pub fn generate_from(root: &Graph, n: usize, bound: Bound, visit: &mut dyn FnMut(&Graph)) -> Result<()> {
    descend(root, n, bound, visit)
}
