//! The reproduction battery run by `gammac verify` and the `acceptance` test.
//!
//! Each criterion returns a one-line detail on success or the first mismatch
//! on failure, and is timed against its own limit.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use gammac_core::compliance::{
    check_nordhaus_product, check_nordhaus_sum, compliance_by_minor, is_k_compliant, verify_one_of_three,
    NordhausVerdict,
};
use gammac_core::constructions::{
    complete, complete_bipartite, complete_multipartite, cycle, graph_family, grid, icosahedron, octahedron, paley,
    path, petersen, prism, regular_family, srg_check, twin_add, wheel, SrgParams,
};
use gammac_core::domination::{gamma_c, DominationNumber};
use gammac_core::iso::{are_isomorphic, canonical_form};
use gammac_core::rng::Rng;
use gammac_core::search::{random_gnp, random_with_edges};
use gammac_core::topology::{has_minor, verify_minor_witness, IkVerdict, MinorOutcome, PetersenFamily};
use gammac_core::{Error, Graph};

use crate::parallel::compute_f_parallel;

/// Stated f(1..5).
pub const F_SMALL: [usize; 5] = [1, 2, 2, 2, 3];
/// Regression values for f(6), f(7) from the exhaustive scan.
pub const F_FROZEN: [(usize, usize); 2] = [(6, 3), (7, 4)];

pub struct Criterion {
    pub id: u32,
    pub name: &'static str,
    pub limit: Duration,
    pub run: fn() -> Result<String, String>,
}

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: u32,
    pub name: &'static str,
    pub limit: Duration,
    pub elapsed: Duration,
    pub outcome: Result<String, String>,
}

impl CriterionResult {
    pub fn passed(&self) -> bool {
        self.outcome.is_ok() && self.elapsed <= self.limit
    }

    pub fn line(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let detail = match &self.outcome {
            Ok(d) if self.elapsed <= self.limit => d.clone(),
            Ok(d) => format!("over time limit; {d}"),
            Err(e) => e.clone(),
        };
        format!(
            "[{status}] {:>2} {} ({:.2}s / {}s): {detail}",
            self.id,
            self.name,
            self.elapsed.as_secs_f64(),
            self.limit.as_secs()
        )
    }
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

pub fn criteria() -> Vec<Criterion> {
    vec![
        Criterion { id: 1, name: "paley identities", limit: secs(1), run: paley_identities },
        Criterion { id: 2, name: "paley13 compliance", limit: secs(5), run: paley13_compliance },
        Criterion { id: 3, name: "two-edge contraction census", limit: secs(30), run: contraction_census },
        Criterion { id: 4, name: "order-14 spot check", limit: secs(30), run: order14_spot_check },
        Criterion { id: 5, name: "f(n) table", limit: secs(60), run: f_table },
        Criterion { id: 6, name: "oracle equivalence on order 6", limit: secs(120), run: oracle_equivalence },
        Criterion { id: 7, name: "nordhaus-gaddum suite", limit: secs(120), run: nordhaus_suite },
        Criterion { id: 8, name: "petersen family and linking", limit: secs(60), run: petersen_and_il },
        Criterion { id: 9, name: "knotting sufficient conditions", limit: secs(30), run: ik_conditions },
        Criterion { id: 10, name: "dense graphs have K6/K7 minors", limit: secs(120), run: mader },
        Criterion { id: 11, name: "order-15 trichotomy sampling", limit: secs(120), run: trichotomy_sampling },
        Criterion { id: 12, name: "figure families", limit: secs(30), run: figure_families },
    ]
}

/// Extra checks for `verify --long`.
pub fn long_criteria() -> Vec<Criterion> {
    vec![Criterion { id: 13, name: "f(8) and monotonicity", limit: secs(3600), run: f_eight }]
}

pub fn run(list: &[Criterion], mut on_result: impl FnMut(&CriterionResult)) -> Vec<CriterionResult> {
    list.iter()
        .map(|c| {
            let start = Instant::now();
            let outcome = (c.run)();
            let r = CriterionResult { id: c.id, name: c.name, limit: c.limit, elapsed: start.elapsed(), outcome };
            on_result(&r);
            r
        })
        .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

fn paley_identities() -> Result<String, String> {
    let g = paley(13).map_err(err)?;
    ensure(g.is_regular() && g.max_degree() == 6, || "paley(13) is not 6-regular".into())?;
    ensure(g.edge_count() == 39, || format!("paley(13) has {} edges", g.edge_count()))?;
    ensure(are_isomorphic(&g, &g.complement()), || "paley(13) is not self-complementary".into())?;
    let want = SrgParams { n: 13, k: 6, lambda: 2, mu: 3 };
    let got = srg_check(&g);
    ensure(got == Some(want), || format!("srg_check gave {got:?}"))?;
    Ok("6-regular, 39 edges, self-complementary, srg (13,6,2,3)".into())
}

fn paley13_compliance() -> Result<String, String> {
    let g = paley(13).map_err(err)?;
    let a = gamma_c(&g).value;
    let b = gamma_c(&g.complement()).value;
    ensure(a == DominationNumber::Finite(4) && b == DominationNumber::Finite(4), || {
        format!("gamma_c = {a}, complement {b}")
    })?;
    let r = is_k_compliant(&g, 3).map_err(err)?;
    ensure(!r.compliant && r.verify(&g), || "is_k_compliant(3) reported compliant".into())?;
    let m = compliance_by_minor(&g, 3).map_err(err)?;
    ensure(!m.compliant, || "contraction oracle found a compliant minor".into())?;
    Ok("gamma_c = 4 on both sides; 3-non-compliant by both routes".into())
}

fn contraction_census() -> Result<String, String> {
    let g = paley(13).map_err(err)?;
    let mut forms = BTreeSet::new();
    let mut max_degree = 0;
    for (a, b) in g.edges() {
        let h = g.contract_edge(a, b).map_err(err)?;
        for (c, d) in h.edges() {
            let m = h.contract_edge(c, d).map_err(err)?;
            max_degree = max_degree.max(m.max_degree());
            forms.insert(canonical_form(&m).map_err(err)?);
        }
    }
    ensure(forms.len() == 13, || format!("{} isomorphism classes, expected 13", forms.len()))?;
    ensure(max_degree <= 9, || format!("a minor has maximum degree {max_degree}"))?;
    Ok(format!("13 classes, maximum degree {max_degree}"))
}

fn order14_spot_check() -> Result<String, String> {
    let qr = paley(13).map_err(err)?;
    let open = twin_add(&qr, 0, false).map_err(err)?;
    let closed = twin_add(&qr, 0, true).map_err(err)?;
    for (name, g) in [("open", &open), ("closed", &closed)] {
        let r = is_k_compliant(g, 3).map_err(err)?;
        ensure(!r.compliant, || format!("{name} twin extension is 3-compliant"))?;
        ensure(!compliance_by_minor(g, 3).map_err(err)?.compliant, || format!("{name}: oracle disagrees"))?;
    }
    ensure(!are_isomorphic(&open, &closed), || "twin extensions are isomorphic".into())?;
    ensure(are_isomorphic(&open.complement(), &closed), || "twin extensions are not complementary".into())?;
    for v in 0..13 {
        let h = qr.delete_vertex(v).map_err(err)?;
        ensure(is_k_compliant(&h, 3).map_err(err)?.compliant, || format!("QR13 - {v} is 3-non-compliant"))?;
        ensure(!is_k_compliant(&h, 2).map_err(err)?.compliant, || format!("QR13 - {v} is 2-compliant"))?;
    }
    Ok("both twins 3-non-compliant, complementary, non-isomorphic; QR13 - v is exactly 3-compliant".into())
}

fn f_table() -> Result<String, String> {
    let mut values = Vec::new();
    for n in 1..=7 {
        values.push(compute_f_parallel(n).map_err(err)?.f);
    }
    let deficits: Vec<usize> = values.iter().enumerate().map(|(i, f)| i + 1 - f).collect();
    ensure(deficits.windows(2).all(|w| w[0] <= w[1]), || format!("n - f(n) = {deficits:?} decreases"))?;
    for (n, f) in F_FROZEN {
        ensure(values[n - 1] == f, || format!("f({n}) = {}, frozen value {f}", values[n - 1]))?;
    }
    ensure(values[..5] == F_SMALL, || format!("f(1..5) = {:?}, expected {F_SMALL:?}", &values[..5]))?;
    Ok(format!("f(1..7) = {values:?}"))
}

fn f_eight() -> Result<String, String> {
    let mut values = Vec::new();
    for n in 1..=8 {
        values.push(compute_f_parallel(n).map_err(err)?.f);
    }
    let deficits: Vec<usize> = values.iter().enumerate().map(|(i, f)| i + 1 - f).collect();
    ensure(deficits.windows(2).all(|w| w[0] <= w[1]), || format!("n - f(n) = {deficits:?} decreases"))?;
    Ok(format!("f(1..8) = {values:?}"))
}

fn oracle_equivalence() -> Result<String, String> {
    let disagreements: Vec<String> = (0u64..1 << 15)
        .into_par_iter()
        .flat_map_iter(|mask| {
            let g = Graph::from_pair_mask(6, mask).expect("order 6");
            (1..=3).filter_map(move |k| {
                let a = is_k_compliant(&g, k).ok()?;
                let b = compliance_by_minor(&g, k).ok()?;
                (a.compliant != b.compliant || !a.verify(&g) || !b.verify(&g)).then(|| format!("mask {mask} k={k}"))
            })
        })
        .collect();
    ensure(disagreements.is_empty(), || format!("{} disagreements, first {}", disagreements.len(), disagreements[0]))?;
    Ok("32768 graphs x k in {1,2,3}: zero disagreements".into())
}

fn nordhaus_suite() -> Result<String, String> {
    let results: Vec<(bool, bool, bool, String)> = (0u64..10_000)
        .into_par_iter()
        .map(|i| {
            let mut rng = Rng::for_item(0x4e47, i);
            let n = 7 + (i % 7) as usize;
            let p = 0.1 + 0.8 * rng.next_f64();
            let g = random_gnp(n, p, rng.next_u64()).expect("valid parameters");
            let s = check_nordhaus_sum(&g);
            let q = check_nordhaus_product(&g);
            let equality = matches!(q, NordhausVerdict::Holds(v) if v.equality);
            (s.is_violated(), q.is_violated(), equality, format!("{i}"))
        })
        .collect();
    let bad: Vec<&String> = results.iter().filter(|r| r.0 || r.1).map(|r| &r.3).collect();
    ensure(bad.is_empty(), || format!("{} violations, first at sample {}", bad.len(), bad[0]))?;
    let random_equalities = results.iter().filter(|r| r.2).count();
    let mut exact = 0;
    for n in 7..=12 {
        for g in [path(n), cycle(n)] {
            let a = gamma_c(&g).value;
            let b = gamma_c(&g.complement()).value;
            ensure(a == DominationNumber::Finite(n - 2) && b == DominationNumber::Finite(2), || {
                format!("order {n}: gamma_c = {a}, complement {b}")
            })?;
            match check_nordhaus_product(&g) {
                NordhausVerdict::Holds(v) if v.equality && v.path_or_cycle => exact += 1,
                other => return Err(format!("order {n} path/cycle product verdict {other:?}")),
            }
        }
    }
    Ok(format!(
        "10000 random graphs, no violations ({random_equalities} product equalities, all on paths/cycles); {exact} paths/cycles exact"
    ))
}

fn petersen_and_il() -> Result<String, String> {
    let fam = PetersenFamily::generate();
    let members = fam.members();
    ensure(members.len() == 7, || format!("closure has {} classes", members.len()))?;
    let positive = [
        ("K6", complete(6)),
        ("petersen", petersen()),
        ("K3,3,1", complete_multipartite(&[3, 3, 1])),
    ];
    for (name, g) in &positive {
        match fam.is_il(g).map_err(err)? {
            Some(cert) if cert.verify(g, &fam) => {}
            Some(_) => return Err(format!("{name}: certificate fails the checker")),
            None => return Err(format!("{name} reported not intrinsically linked")),
        }
    }
    let negative = [
        ("K5", complete(5)),
        ("K4,4", complete_bipartite(4, 4)),
        ("octahedron", octahedron()),
        ("icosahedron", icosahedron()),
        ("prism", prism()),
        ("wheel W8", wheel(8)),
        ("grid 3x4", grid(3, 4)),
        ("C9", cycle(9)),
        ("P7", path(7)),
    ];
    let mut wrong = Vec::new();
    for (name, g) in &negative {
        if let Some(cert) = fam.is_il(g).map_err(err)? {
            let checked = if cert.verify(g, &fam) { "checked" } else { "UNCHECKED" };
            wrong.push(format!("{name} has a family minor on {} vertices ({checked})", cert.member.order()));
        }
    }
    ensure(wrong.is_empty(), || wrong.join("; "))?;
    Ok("7 classes; K6, Petersen, K3,3,1 linked; K5, K4,4 and planar fixtures not".into())
}

fn ik_conditions() -> Result<String, String> {
    let fam = PetersenFamily::generate();
    ensure(matches!(fam.is_ik_sufficient(&complete(7)).map_err(err)?, IkVerdict::ByK7(_)), || {
        "K7 not certified by its K7 minor".into()
    })?;
    let cone6 = complete(6).join(&complete(1)).map_err(err)?;
    ensure(matches!(fam.is_ik_sufficient(&cone6).map_err(err)?, IkVerdict::ByK7(_)), || {
        "K6 * K1 not certified by a K7 minor".into()
    })?;
    let cone = petersen().join(&complete(1)).map_err(err)?;
    match fam.is_ik_sufficient(&cone).map_err(err)? {
        IkVerdict::ByConeOverIl { certificate, .. } if certificate.verify(&cone, &fam) => {}
        other => return Err(format!("Petersen * K1 gave {other:?}")),
    }
    Ok("K7 and K6*K1 by K7 minor; Petersen*K1 by cone over a linked graph".into())
}

fn dense_sample(i: u64, per_vertex: usize, offset: usize) -> Graph {
    let mut rng = Rng::for_item(0x4d41_4445, i);
    let n = 8 + (i % 3) as usize;
    let pairs = n * (n - 1) / 2;
    let lo = per_vertex * n - offset;
    let m = lo + rng.below((pairs - lo + 1) as u64) as usize;
    random_with_edges(n, m, &mut rng).expect("valid edge count")
}

fn mader() -> Result<String, String> {
    let check = |target: Graph, per_vertex: usize, offset: usize, salt: u64| -> Vec<String> {
        (0u64..200)
            .into_par_iter()
            .filter_map(|i| {
                let g = dense_sample(i ^ salt, per_vertex, offset);
                match has_minor(&g, &target, None) {
                    Ok(MinorOutcome::Found(w)) if verify_minor_witness(&g, &target, &w) => None,
                    other => Some(format!("sample {i}: {other:?}")),
                }
            })
            .collect()
    };
    let k6 = check(complete(6), 4, 9, 0);
    ensure(k6.is_empty(), || format!("K6 failures: {}", k6.join("; ")))?;
    let k7 = check(complete(7), 5, 14, 1 << 32);
    ensure(k7.is_empty(), || format!("K7 failures: {}", k7.join("; ")))?;
    Ok("200 graphs with >= 4n-9 edges have K6 minors; 200 with >= 5n-14 have K7 minors".into())
}

/// Exit status the command line would report for a trichotomy result.
pub fn trichotomy_exit_code(r: &Result<gammac_core::compliance::OneOfThree, Error>) -> i32 {
    match r {
        Ok(_) => 0,
        Err(Error::TheoremFalsified(_)) => 3,
        Err(_) => 2,
    }
}

fn trichotomy_sampling() -> Result<String, String> {
    let results: Vec<(u64, Result<gammac_core::compliance::OneOfThree, Error>)> = (0u64..500)
        .into_par_iter()
        .map(|i| {
            let mut rng = Rng::for_item(0x5452_4943, i);
            let p = 0.2 + 0.6 * rng.next_f64();
            let g = random_gnp(15, p, rng.next_u64()).expect("valid parameters");
            (i, verify_one_of_three(&g, None))
        })
        .collect();
    let bad: Vec<String> = results
        .iter()
        .filter(|(_, r)| trichotomy_exit_code(r) != 0)
        .map(|(i, r)| format!("sample {i}: {r:?}"))
        .collect();
    ensure(bad.is_empty(), || bad.join("; "))?;
    let k7 = results.iter().filter(|(_, r)| !matches!(r, Ok(gammac_core::compliance::OneOfThree::Compliant3))).count();
    Ok(format!("500 graphs, no falsification ({k7} settled by a K7 minor)"))
}

fn figure_families() -> Result<String, String> {
    let counts = [
        graph_family(6, 9, 2).map_err(err)?.len(),
        graph_family(6, 8, 2).map_err(err)?.len(),
        graph_family(6, 7, 2).map_err(err)?.len(),
        regular_family(6, 2).map_err(err)?.len(),
    ];
    ensure(counts == [15, 11, 5, 2], || format!("counts {counts:?}, expected [15, 11, 5, 2]"))?;
    Ok("15 / 11 / 5 / 2".into())
}
