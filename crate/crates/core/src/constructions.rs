//! Named graphs, Paley graphs, strongly regular checks and twin additions.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::graph::{bit, Graph, VertexSet};
use crate::iso::{canonical_form, CanonicalForm};
use crate::{Error, Result};

/// Largest prime accepted by [`paley`].
pub const MAX_PALEY_PRIME: usize = 29;

pub fn complete(n: usize) -> Graph {
    Graph::empty(n).expect("order within bounds").complement()
}

/// Path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).expect("order within bounds")
}

/// Cycle `0 - 1 - ... - (n-1) - 0`, for `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least three vertices");
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((n - 1, 0));
    Graph::from_edges(n, &edges).expect("order within bounds")
}

/// Star `K_{1,leaves}` with centre 0.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    Graph::from_edges(leaves + 1, &edges).expect("order within bounds")
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    complete_multipartite(&[a, b])
}

/// Complete multipartite graph; parts are laid out consecutively.
pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let n: usize = parts.iter().sum();
    let mut g = complete(n);
    let mut start = 0;
    for &size in parts {
        for u in start..start + size {
            for v in u + 1..start + size {
                g = g.without_edge(u, v).expect("in range");
            }
        }
        start += size;
    }
    g
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i - (i+5)`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::from_edges(10, &edges).expect("order within bounds")
}

/// Triangular prism: triangles `0 1 2` and `3 4 5` joined by `i - (i+3)`.
pub fn prism() -> Graph {
    Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
        .expect("order within bounds")
}

/// Wheel: hub 0 joined to a rim cycle on `1..=rim`.
pub fn wheel(rim: usize) -> Graph {
    let c = cycle(rim);
    Graph::from_edges(1, &[]).unwrap().join(&c).expect("order within bounds")
}

/// `rows x cols` grid graph.
pub fn grid(rows: usize, cols: usize) -> Graph {
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            let v = r * cols + c;
            if c + 1 < cols {
                edges.push((v, v + 1));
            }
            if r + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    Graph::from_edges(rows * cols, &edges).expect("order within bounds")
}

/// The octahedron `K_{2,2,2}`.
pub fn octahedron() -> Graph {
    complete_multipartite(&[2, 2, 2])
}

/// The icosahedron (planar, 5-regular, 12 vertices).
pub fn icosahedron() -> Graph {
    // apex 0, upper ring 1..=5, lower ring 6..=10, apex 11
    let mut edges = Vec::new();
    for i in 0..5 {
        let up = 1 + i;
        let up_next = 1 + (i + 1) % 5;
        let low = 6 + i;
        let low_next = 6 + (i + 1) % 5;
        edges.extend([(0, up), (up, up_next), (up, low), (up, low_next), (low, low_next), (low, 11)]);
    }
    Graph::from_edges(12, &edges).expect("order within bounds")
}

fn is_prime(q: usize) -> bool {
    q >= 2 && (2..q).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

/// Nonzero squares modulo `q`, by direct squaring.
pub fn quadratic_residues(q: usize) -> VertexSet {
    (1..q).map(|x| x * x % q).collect()
}

/// Paley graph on the integers mod a prime `q ≡ 1 (mod 4)`, `q <= 29`.
pub fn paley(q: usize) -> Result<Graph> {
    if !is_prime(q) {
        return Err(Error::InvalidArgument("Paley order must be prime"));
    }
    if q % 4 != 1 {
        return Err(Error::InvalidArgument("Paley order must be 1 mod 4"));
    }
    if q > MAX_PALEY_PRIME {
        return Err(Error::OrderTooLarge { order: q, max: MAX_PALEY_PRIME });
    }
    let residues = quadratic_residues(q);
    let mut rows = [0u32; 32];
    for (i, row) in rows.iter_mut().enumerate().take(q) {
        for j in 0..q {
            if i != j && residues.contains((i + q - j) % q) {
                *row |= bit(j);
            }
        }
    }
    Graph::from_rows(&rows[..q])
}

/// Parameters `(n, k, λ, μ)` of a strongly regular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SrgParams {
    pub n: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl SrgParams {
    /// The counting identity `k(k - λ - 1) = (n - k - 1) μ`.
    pub fn is_feasible(&self) -> bool {
        self.k * (self.k.saturating_sub(self.lambda + 1)) == (self.n - self.k - 1) * self.mu
            && self.k > self.lambda
    }
}

/// Returns the parameters if `g` is strongly regular. Complete and edgeless
/// graphs are rejected (one of λ, μ is undefined there).
pub fn srg_check(g: &Graph) -> Option<SrgParams> {
    let n = g.order();
    if n < 2 || !g.is_regular() {
        return None;
    }
    let k = g.degree(0);
    if k == 0 || k == n - 1 {
        return None;
    }
    let (mut lambda, mut mu) = (None, None);
    for u in 0..n {
        for v in u + 1..n {
            let c = g.common_neighbors(u, v).ok()?.len();
            let slot = if g.has_edge(u, v) { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(c),
                Some(prev) if prev != c => return None,
                Some(_) => {}
            }
        }
    }
    Some(SrgParams { n, k, lambda: lambda?, mu: mu? })
}

/// Adds a twin of `u`: the new vertex `n` gets `N(u)` (open) or `N[u]` (closed).
pub fn twin_add(g: &Graph, u: usize, closed: bool) -> Result<Graph> {
    g.check_vertex(u)?;
    let n = g.order();
    if n >= crate::MAX_ORDER {
        return Err(Error::OrderTooLarge { order: n + 1, max: crate::MAX_ORDER });
    }
    let mut rows: Vec<u32> = g.rows().to_vec();
    let mut twin = g.rows()[u];
    if closed {
        twin |= bit(u);
    }
    for v in VertexSet::from_bits(twin) {
        rows[v] |= bit(n);
    }
    rows.push(twin);
    Graph::from_rows(&rows)
}

/// Every graph of order `n` (at most 7) with exactly `edges` edges and minimum
/// degree at least `min_degree`, one per isomorphism class, sorted by form.
pub fn graph_family(n: usize, edges: usize, min_degree: usize) -> Result<Vec<Graph>> {
    family_where(n, |g| g.edge_count() == edges && g.min_degree() >= min_degree)
}

/// Every `d`-regular graph of order `n` (at most 7) up to isomorphism.
pub fn regular_family(n: usize, d: usize) -> Result<Vec<Graph>> {
    family_where(n, |g| g.is_regular() && g.min_degree() == d)
}

fn family_where(n: usize, keep: impl Fn(&Graph) -> bool) -> Result<Vec<Graph>> {
    if n > 7 {
        return Err(Error::OrderTooLarge { order: n, max: 7 });
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let mut classes: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    for mask in 0..1u64 << pairs {
        let g = Graph::from_pair_mask(n, mask)?;
        if keep(&g) {
            let form = canonical_form(&g)?;
            classes.entry(form).or_insert(g);
        }
    }
    Ok(classes.into_values().collect())
}

/// Parses names such as `K6`, `P5`, `C7`, `S4` (star), `W5` (wheel), `K3,3`,
/// `K3,3,1`, `E4` (edgeless), `petersen`, `prism`, `octahedron`,
/// `icosahedron`, `QR13` / `paley13`, `grid3x4`.
pub fn named(name: &str) -> Result<Graph> {
    let lower = name.trim().to_ascii_lowercase();
    let num = |s: &str| s.parse::<usize>().map_err(|_| Error::InvalidArgument("unknown graph name"));
    let bounded = |n: usize| {
        if n > crate::MAX_ORDER {
            Err(Error::OrderTooLarge { order: n, max: crate::MAX_ORDER })
        } else {
            Ok(n)
        }
    };
    match lower.as_str() {
        "petersen" => return Ok(petersen()),
        "prism" => return Ok(prism()),
        "octahedron" => return Ok(octahedron()),
        "icosahedron" => return Ok(icosahedron()),
        _ => {}
    }
    if let Some(rest) = lower.strip_prefix("paley").or_else(|| lower.strip_prefix("qr")) {
        return paley(num(rest)?);
    }
    if let Some(rest) = lower.strip_prefix("grid") {
        let (r, c) = rest.split_once('x').ok_or(Error::InvalidArgument("unknown graph name"))?;
        let (r, c) = (num(r)?, num(c)?);
        bounded(r * c)?;
        return Ok(grid(r, c));
    }
    let (head, rest) = lower.split_at(1.min(lower.len()));
    match head {
        "k" if rest.contains(',') => {
            let parts = rest.split(',').map(num).collect::<Result<Vec<_>>>()?;
            bounded(parts.iter().sum())?;
            Ok(complete_multipartite(&parts))
        }
        "k" => Ok(complete(bounded(num(rest)?)?)),
        "p" => Ok(path(bounded(num(rest)?)?)),
        "e" => Graph::empty(num(rest)?),
        "c" => {
            let n = bounded(num(rest)?)?;
            if n < 3 {
                return Err(Error::InvalidArgument("a cycle needs at least three vertices"));
            }
            Ok(cycle(n))
        }
        "s" => Ok(star(bounded(num(rest)? + 1)? - 1)),
        "w" => {
            let n = bounded(num(rest)? + 1)?;
            if n < 4 {
                return Err(Error::InvalidArgument("a wheel needs at least three rim vertices"));
            }
            Ok(wheel(n - 1))
        }
        _ => Err(Error::InvalidArgument("unknown graph name")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compliance::is_k_compliant;
    use crate::iso::are_isomorphic;
    use crate::rng::Rng;
    use crate::search::random_gnp;

    #[test]
    fn paley13_residues_and_shape() {
        assert_eq!(quadratic_residues(13).to_vec(), [1, 3, 4, 9, 10, 12]);
        let g = paley(13).unwrap();
        assert!(g.is_regular());
        assert_eq!(g.degree(0), 6);
        assert_eq!(g.edge_count(), 39);
    }

    #[test]
    fn paley5_is_the_pentagon() {
        assert_eq!(quadratic_residues(5).to_vec(), [1, 4]);
        assert!(are_isomorphic(&paley(5).unwrap(), &cycle(5)));
    }

    #[test]
    fn paley_graphs_are_self_complementary() {
        for q in [5, 13, 17, 29] {
            let g = paley(q).unwrap();
            assert_eq!(g.degree(0), (q - 1) / 2);
            assert!(are_isomorphic(&g, &g.complement()), "QR{q}");
        }
    }

    #[test]
    fn paley_rejects_bad_orders() {
        assert!(paley(15).is_err());
        assert!(paley(7).is_err());
        assert!(paley(37).is_err());
    }

    #[test]
    fn srg_examples() {
        let p = srg_check(&paley(13).unwrap()).unwrap();
        assert_eq!(p, SrgParams { n: 13, k: 6, lambda: 2, mu: 3 });
        assert!(p.is_feasible());
        assert_eq!(srg_check(&cycle(5)), Some(SrgParams { n: 5, k: 2, lambda: 0, mu: 1 }));
        assert_eq!(srg_check(&path(4)), None);
        assert_eq!(srg_check(&petersen()), Some(SrgParams { n: 10, k: 3, lambda: 0, mu: 1 }));
    }

    #[test]
    fn twin_examples() {
        let qr = paley(13).unwrap();
        let open = twin_add(&qr, 0, false).unwrap();
        assert_eq!(open.order(), 14);
        assert_eq!(open.degree(13), 6);
        assert!(!open.has_edge(0, 13));
        let closed = twin_add(&qr, 5, true).unwrap();
        assert_eq!(closed.degree(13), 7);
        assert!(are_isomorphic(&closed, &open.complement()));
        let two = twin_add(&complete(1), 0, false).unwrap();
        assert_eq!(two, Graph::empty(2).unwrap());
    }

    #[test]
    fn twin_addition_preserves_compliance() {
        let mut rng = Rng::new(19);
        for _ in 0..300 {
            let n = 4 + rng.below(6) as usize;
            let g = random_gnp(n, 0.5, rng.next_u64()).unwrap();
            let u = rng.below(n as u64) as usize;
            let closed = rng.chance(0.5);
            let h = twin_add(&g, u, closed).unwrap();
            for k in [2, 3] {
                assert_eq!(
                    is_k_compliant(&g, k).unwrap().compliant,
                    is_k_compliant(&h, k).unwrap().compliant,
                    "{g:?} twin of {u}"
                );
            }
        }
    }

    #[test]
    fn figure_family_counts() {
        assert_eq!(graph_family(6, 9, 2).unwrap().len(), 15);
        assert_eq!(graph_family(6, 8, 2).unwrap().len(), 11);
        assert_eq!(graph_family(6, 7, 2).unwrap().len(), 5);
        let two_regular = regular_family(6, 2).unwrap();
        assert_eq!(two_regular.len(), 2);
        let two = complete(3).disjoint_union(&complete(3)).unwrap();
        assert!(two_regular.iter().any(|g| are_isomorphic(g, &cycle(6))));
        assert!(two_regular.iter().any(|g| are_isomorphic(g, &two)));
    }

    #[test]
    fn named_graphs() {
        assert_eq!(named("K6").unwrap(), complete(6));
        assert_eq!(named("p5").unwrap(), path(5));
        assert_eq!(named("K3,3").unwrap(), complete_bipartite(3, 3));
        assert_eq!(named("K3,3,1").unwrap().edge_count(), 15);
        assert_eq!(named("QR13").unwrap(), paley(13).unwrap());
        assert_eq!(named("W5").unwrap().order(), 6);
        assert_eq!(named("grid3x3").unwrap().edge_count(), 12);
        assert_eq!(icosahedron().edge_count(), 30);
        assert!(icosahedron().is_regular());
        assert!(named("nope").is_err());
        assert!(named("K40").is_err());
    }
}
