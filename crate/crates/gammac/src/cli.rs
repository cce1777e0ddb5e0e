//! Command-line surface.
//!
//! Exit codes: 0 success, 1 property absent (with `--expect`) or a failed
//! `verify` criterion, 2 usage or parse error, 3 internal invariant violation.

use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use gammac_core::compliance::{
    compliance_by_minor, is_k_compliant, verify_one_of_three, ComplianceReport, OneOfThree,
};
use gammac_core::constructions::{named, paley, srg_check, twin_add};
use gammac_core::domination::gamma_c;
use gammac_core::topology::{has_minor, verify_minor_witness, IkVerdict, MinorOutcome, PetersenFamily};
use gammac_core::{Error, Graph};

use crate::battery;
use crate::checkpoint::Checkpoint;
use crate::format::{emit_graph6, parse, parse_graph6};
use crate::parallel::{compute_f_parallel, search_parallel, with_threads};
use crate::report::{
    compliance_json, compliance_witness_json, il_certificate_json, minor_witness_json, set_json, Report, Timing,
};
use crate::specfile::SpecFile;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ABSENT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "gammac", version, about = "Connected domination, k-compliance and small-graph minors")]
pub struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Include elapsed time in the report.
    #[arg(long, global = true)]
    pub timing: bool,
    /// Cap the number of worker threads.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Exit with status 1 unless the primary verdict equals this value.
    #[arg(long, global = true)]
    pub expect: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

/// A graph: graph6 text, `@path` to an edge-list or graph6 file, or a name
/// such as `K6`, `petersen`, `QR13`.
#[derive(Debug, Args)]
pub struct GraphArg {
    pub graph: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Connected domination numbers of a graph and its complement.
    Gammac(GraphArg),
    /// Decide k-compliance.
    Comply {
        #[arg(short)]
        k: usize,
        #[command(flatten)]
        graph: GraphArg,
        /// Also run the contraction oracle (k <= 4) and require agreement.
        #[arg(long)]
        cross_check: bool,
    },
    /// Print the Paley graph on Q vertices.
    Paley { q: usize },
    /// Add a twin of vertex V.
    Twin {
        #[arg(long, conflicts_with = "closed", required_unless_present = "closed")]
        open: bool,
        #[arg(long)]
        closed: bool,
        v: usize,
        #[command(flatten)]
        graph: GraphArg,
    },
    /// Test whether TARGET is a minor of the graph.
    Minor {
        target: String,
        #[command(flatten)]
        graph: GraphArg,
        /// Node budget; exhausting it reports "unknown".
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Intrinsic linking via Petersen-family minors.
    Il(GraphArg),
    /// Sufficient conditions for intrinsic knotting.
    Ik(GraphArg),
    /// Print the seven Petersen-family graphs.
    PetersenFamily,
    /// f(N) by exhaustive enumeration (N >= 8 needs --long).
    Fn {
        n: usize,
        #[arg(long)]
        long: bool,
    },
    /// Run a JSON search specification.
    Search {
        spec: PathBuf,
        /// Write surviving graphs to a checkpoint file.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
    /// Order-15 trichotomy: 3-compliant, K7 minor, or complement K7 minor.
    Trichotomy(GraphArg),
    /// Complete a linklessly embeddable graph to a maximal one.
    Saturate(GraphArg),
    /// Run the reproduction battery.
    Verify {
        #[arg(long)]
        long: bool,
    },
}

/// Failure of a command, mapped to an exit code.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Invariant(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::TheoremFalsified(_) => Failure::Invariant(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome = Result<Report, Failure>;

pub fn read_graph(arg: &str) -> Result<Graph, Failure> {
    if let Some(path) = arg.strip_prefix('@') {
        let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
        return parse(&text).map_err(|e| Failure::Usage(format!("{path}: {e}")));
    }
    match parse_graph6(arg) {
        Ok(g) => Ok(g),
        Err(e) => named(arg).map_err(|_| Failure::Usage(format!("{arg}: {e}"))),
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// the report. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut (dyn std::io::Write + Send), errs: &mut dyn std::io::Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(errs, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let start = Instant::now();
    let threads = cli.threads;
    let result = with_threads(threads, || dispatch(&cli, out));
    match result {
        Ok(mut report) => {
            if cli.timing {
                report.timing = Some(Timing { elapsed_ms: start.elapsed().as_secs_f64() * 1e3 });
            }
            let text = if cli.json { report.to_json() + "\n" } else { report.to_text() };
            let _ = out.write_all(text.as_bytes());
            if matches!(cli.command, Command::Verify { .. }) && report.primary.as_deref() != Some("pass") {
                return EXIT_ABSENT;
            }
            match (&cli.expect, &report.primary) {
                (Some(want), Some(got)) if want != got => EXIT_ABSENT,
                (Some(_), None) => {
                    let _ = writeln!(errs, "--expect is not supported by this command");
                    EXIT_USAGE
                }
                _ => EXIT_OK,
            }
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(errs, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Invariant(msg)) => {
            let _ = writeln!(errs, "invariant violation: {msg}");
            EXIT_INVARIANT
        }
    }
}

fn dispatch(cli: &Cli, out: &mut (dyn std::io::Write + Send)) -> Outcome {
    match &cli.command {
        Command::Gammac(a) => cmd_gammac(&read_graph(&a.graph)?),
        Command::Comply { k, graph, cross_check } => cmd_comply(&read_graph(&graph.graph)?, *k, *cross_check),
        Command::Paley { q } => cmd_paley(*q),
        Command::Twin { closed, v, graph, .. } => cmd_twin(&read_graph(&graph.graph)?, *v, *closed),
        Command::Minor { target, graph, budget } => {
            cmd_minor(&read_graph(&graph.graph)?, &read_graph(target)?, *budget)
        }
        Command::Il(a) => cmd_il(&read_graph(&a.graph)?),
        Command::Ik(a) => cmd_ik(&read_graph(&a.graph)?),
        Command::PetersenFamily => cmd_family(),
        Command::Fn { n, long } => cmd_fn(*n, *long),
        Command::Search { spec, checkpoint } => cmd_search(spec, checkpoint.as_ref()),
        Command::Trichotomy(a) => cmd_trichotomy(&read_graph(&a.graph)?),
        Command::Saturate(a) => cmd_saturate(&read_graph(&a.graph)?),
        Command::Verify { long } => cmd_verify(*long, out),
    }
}

fn cmd_gammac(g: &Graph) -> Outcome {
    let mut r = Report::new("gammac");
    r.input_graph(g);
    let direct = gamma_c(g);
    let comp = gamma_c(&g.complement());
    r.verdict("gamma_c", direct.value.finite());
    r.verdict("gamma_c_complement", comp.value.finite());
    r.line(format!("gamma_c(G) = {}", direct.value));
    r.line(format!("gamma_c(complement) = {}", comp.value));
    for (side, res) in [("graph", direct), ("complement", comp)] {
        if let Some(w) = res.witness {
            r.witnesses.push(json!({ "kind": "connected-dominating-set", "side": side, "set": set_json(w) }));
        }
    }
    r.primary = Some(direct.value.to_string());
    Ok(r)
}

fn check_report(g: &Graph, rep: &ComplianceReport) -> Result<(), Failure> {
    if rep.verify(g) {
        Ok(())
    } else {
        Err(Failure::Invariant("compliance witness failed its re-check".into()))
    }
}

fn cmd_comply(g: &Graph, k: usize, cross_check: bool) -> Outcome {
    let rep = is_k_compliant(g, k)?;
    check_report(g, &rep)?;
    let mut r = Report::new("comply");
    r.input_graph(g);
    r.inputs.push(json!({ "k": k }));
    let verdict = if rep.compliant { "compliant" } else { "non-compliant" };
    let min_k = rep.min_k.map_or("unknown".to_string(), |m| m.to_string());
    r.line(format!("{verdict}, min_k={min_k}"));
    r.verdict("compliance", compliance_json(&rep));
    if let Some(w) = &rep.witness {
        r.witnesses.push(compliance_witness_json(w));
    }
    if cross_check {
        let oracle = compliance_by_minor(g, k)?;
        check_report(g, &oracle)?;
        if oracle.compliant != rep.compliant {
            return Err(Failure::Invariant("the two compliance routes disagree".into()));
        }
        r.verdict("contraction_oracle", compliance_json(&oracle));
        r.line("contraction oracle agrees");
    }
    r.primary = Some(verdict.into());
    Ok(r)
}

fn cmd_paley(q: usize) -> Outcome {
    let g = paley(q)?;
    let mut r = Report::new("paley");
    r.inputs.push(json!({ "q": q }));
    r.line(emit_graph6(&g));
    if let Some(p) = srg_check(&g) {
        r.line(format!("strongly regular ({}, {}, {}, {})", p.n, p.k, p.lambda, p.mu));
        r.verdict("srg", json!([p.n, p.k, p.lambda, p.mu]));
    }
    r.verdict("graph6", emit_graph6(&g));
    Ok(r)
}

fn cmd_twin(g: &Graph, v: usize, closed: bool) -> Outcome {
    let h = twin_add(g, v, closed)?;
    let mut r = Report::new("twin");
    r.input_graph(g);
    r.inputs.push(json!({ "vertex": v, "closed": closed }));
    r.line(emit_graph6(&h));
    r.verdict("graph6", emit_graph6(&h));
    Ok(r)
}

fn cmd_minor(g: &Graph, target: &Graph, budget: Option<u64>) -> Outcome {
    let outcome = has_minor(g, target, budget)?;
    let mut r = Report::new("minor");
    r.input_graph(g);
    r.inputs.push(json!({ "target": emit_graph6(target) }));
    let verdict = match &outcome {
        MinorOutcome::Found(w) => {
            if !verify_minor_witness(g, target, w) {
                return Err(Failure::Invariant("minor witness failed the checker".into()));
            }
            r.witnesses.push(minor_witness_json(target, w));
            "found"
        }
        MinorOutcome::Absent => "absent",
        MinorOutcome::Unknown => "unknown",
    };
    r.line(format!("minor {verdict}"));
    r.verdict("minor", verdict);
    r.primary = Some(verdict.into());
    Ok(r)
}

fn cmd_il(g: &Graph) -> Outcome {
    let fam = PetersenFamily::generate();
    let cert = fam.is_il(g)?;
    let mut r = Report::new("il");
    r.input_graph(g);
    let verdict = match &cert {
        Some(c) => {
            if !c.verify(g, &fam) {
                return Err(Failure::Invariant("linking certificate failed the checker".into()));
            }
            r.witnesses.push(il_certificate_json(c));
            "il"
        }
        None => "nil",
    };
    r.line(if cert.is_some() { "intrinsically linked" } else { "not intrinsically linked" });
    r.verdict("il", cert.is_some());
    r.primary = Some(verdict.into());
    Ok(r)
}

fn cmd_ik(g: &Graph) -> Outcome {
    let fam = PetersenFamily::generate();
    let v = fam.is_ik_sufficient(g)?;
    let mut r = Report::new("ik");
    r.input_graph(g);
    let verdict = match &v {
        IkVerdict::ByK7(w) => {
            r.witnesses.push(minor_witness_json(&gammac_core::constructions::complete(7), w));
            "ik-by-k7"
        }
        IkVerdict::ByConeOverIl { apex, certificate } => {
            if !certificate.verify(g, &fam) {
                return Err(Failure::Invariant("linking certificate failed the checker".into()));
            }
            let mut w = il_certificate_json(certificate);
            w["apex"] = json!(apex);
            r.witnesses.push(w);
            "ik-by-cone-over-il"
        }
        IkVerdict::Unknown => "unknown",
    };
    r.line(verdict);
    r.verdict("ik", verdict);
    r.primary = Some(verdict.into());
    Ok(r)
}

fn cmd_family() -> Outcome {
    let fam = PetersenFamily::generate();
    let mut r = Report::new("petersen-family");
    for g in fam.members() {
        r.line(emit_graph6(g));
    }
    r.verdict("members", fam.members().iter().map(emit_graph6).collect::<Vec<_>>());
    Ok(r)
}

fn cmd_fn(n: usize, long: bool) -> Outcome {
    if n >= 8 && !long {
        return Err(Failure::Usage("f(8) scans 2^28 graphs; pass --long".into()));
    }
    let fv = compute_f_parallel(n)?;
    let mut r = Report::new("fn");
    r.inputs.push(json!({ "n": n }));
    r.line(format!("f({n})={}", fv.f));
    r.verdict("f", fv.f);
    r.verdict("max_min_k", fv.max_min_k);
    r.witnesses.push(json!({ "kind": "extremal-graph", "graph6": emit_graph6(&fv.extremal) }));
    r.primary = Some(fv.f.to_string());
    Ok(r)
}

fn cmd_search(path: &PathBuf, checkpoint: Option<&PathBuf>) -> Outcome {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let file = SpecFile::from_json(&text).map_err(|e| Failure::Usage(e.to_string()))?;
    let spec = file.to_spec().map_err(|e| Failure::Usage(e.to_string()))?;
    let out = search_parallel(&spec)?;
    let mut r = Report::new("search");
    r.inputs.push(serde_json::to_value(&file).expect("spec serialises"));
    r.inputs.push(json!({ "spec_hash": file.hash() }));
    for f in &out.findings {
        check_report(&f.graph, &f.report)?;
        r.line(format!("{} non-compliant, min_k={}", emit_graph6(&f.graph), f.report.min_k.unwrap_or(0)));
        r.witnesses.push(json!({
            "kind": "non-compliant",
            "graph6": emit_graph6(&f.graph),
            "canonical_form": f.form.to_hex(),
            "compliance": compliance_json(&f.report),
        }));
    }
    r.line(format!(
        "examined {}, excluded {}, filtered {}, compliant {}, unsampled {}, non-compliant classes {}",
        out.examined,
        out.excluded,
        out.filtered,
        out.compliant,
        out.unsampled,
        out.findings.len()
    ));
    r.verdict(
        "counts",
        json!({
            "examined": out.examined,
            "excluded": out.excluded,
            "filtered": out.filtered,
            "compliant": out.compliant,
            "unsampled": out.unsampled,
            "non_compliant_classes": out.findings.len(),
        }),
    );
    if let Some(p) = checkpoint {
        let cp = Checkpoint {
            spec_hash: file.hash(),
            seed: file.seed(),
            graphs: out.findings.iter().map(|f| f.graph).collect(),
        };
        cp.write(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
    }
    r.primary = Some(if out.findings.is_empty() { "none" } else { "found" }.into());
    Ok(r)
}

fn cmd_trichotomy(g: &Graph) -> Outcome {
    let v = verify_one_of_three(g, None)?;
    let mut r = Report::new("trichotomy");
    r.input_graph(g);
    let verdict = match v {
        OneOfThree::Compliant3 => "3-compliant",
        OneOfThree::K7InGraph => "k7-in-graph",
        OneOfThree::K7InComplement => "k7-in-complement",
    };
    r.line(verdict);
    r.verdict("trichotomy", verdict);
    r.primary = Some(verdict.into());
    Ok(r)
}

fn cmd_saturate(g: &Graph) -> Outcome {
    let fam = PetersenFamily::generate();
    let h = fam.saturate_nil(g)?;
    if !fam.is_max_nil(&h)? {
        return Err(Failure::Invariant("saturation result is not maximal".into()));
    }
    let mut r = Report::new("saturate");
    r.input_graph(g);
    r.line(emit_graph6(&h));
    r.verdict("graph6", emit_graph6(&h));
    r.verdict("edges", h.edge_count());
    Ok(r)
}

fn cmd_verify(long: bool, out: &mut (dyn std::io::Write + Send)) -> Outcome {
    let mut list = battery::criteria();
    if long {
        list.extend(battery::long_criteria());
    }
    let results = battery::run(&list, |res| {
        let _ = writeln!(out, "{}", res.line());
    });
    let mut r = Report::new("verify");
    for res in &results {
        r.verdict(
            &format!("criterion {}", res.id),
            json!({
                "name": res.name,
                "pass": res.passed(),
                "elapsed_s": res.elapsed.as_secs_f64(),
                "limit_s": res.limit.as_secs(),
                "detail": match &res.outcome { Ok(d) | Err(d) => d },
            }),
        );
    }
    let failed = results.iter().filter(|r| !r.passed()).count();
    r.line(format!("{} of {} criteria passed", results.len() - failed, results.len()));
    r.primary = Some(if failed == 0 { "pass" } else { "fail" }.into());
    Ok(r)
}
