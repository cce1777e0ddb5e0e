//! Structured command reports and the JSON form of witnesses.

use serde::Serialize;
use serde_json::{json, Value};

use gammac_core::compliance::{
    ComplianceReport, ComplianceWitness, FilterEvidence, FilterVerdict, NordhausVerdict, Subject,
};
use gammac_core::topology::{IlCertificate, MinorWitness};
use gammac_core::{Graph, VertexSet};

use crate::format::emit_graph6;

/// `{command, inputs, verdicts[], witnesses[], timing}`.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<Value>,
    pub verdicts: Vec<Verdict>,
    pub witnesses: Vec<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
    /// Human-readable lines for text mode.
    #[serde(skip)]
    pub lines: Vec<String>,
    /// Value compared against `--expect`.
    #[serde(skip)]
    pub primary: Option<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Verdict {
    pub name: String,
    pub value: Value,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Timing {
    pub elapsed_ms: f64,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            inputs: Vec::new(),
            verdicts: Vec::new(),
            witnesses: Vec::new(),
            timing: None,
            lines: Vec::new(),
            primary: None,
        }
    }

    pub fn input_graph(&mut self, g: &Graph) {
        self.inputs.push(json!({ "graph6": emit_graph6(g), "order": g.order(), "edges": g.edge_count() }));
    }

    pub fn verdict(&mut self, name: &str, value: impl Into<Value>) {
        self.verdicts.push(Verdict { name: name.to_string(), value: value.into() });
    }

    pub fn line(&mut self, text: impl Into<String>) {
        self.lines.push(text.into());
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialise")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for l in &self.lines {
            out.push_str(l);
            out.push('\n');
        }
        for w in &self.witnesses {
            out.push_str("witness: ");
            out.push_str(&w.to_string());
            out.push('\n');
        }
        if let Some(t) = &self.timing {
            out.push_str(&format!("elapsed: {:.3} ms\n", t.elapsed_ms));
        }
        out
    }
}

pub fn set_json(s: VertexSet) -> Value {
    json!(s.to_vec())
}

pub fn compliance_witness_json(w: &ComplianceWitness) -> Value {
    json!({
        "kind": "contraction",
        "side": w.side.to_string(),
        "set": set_json(w.set),
        "tree": w.tree,
    })
}

pub fn compliance_json(r: &ComplianceReport) -> Value {
    json!({
        "k": r.k,
        "compliant": r.compliant,
        "min_k": r.min_k,
    })
}

pub fn minor_witness_json(target: &Graph, w: &MinorWitness) -> Value {
    json!({
        "kind": "minor",
        "target": emit_graph6(target),
        "branch_sets": w.branch_sets.iter().map(|s| s.to_vec()).collect::<Vec<_>>(),
    })
}

pub fn il_certificate_json(c: &IlCertificate) -> Value {
    minor_witness_json(&c.member, &c.witness)
}

pub fn evidence_json(e: &FilterEvidence) -> Value {
    let subject = match e.subject {
        Subject::Pair(u, v) => json!({ "pair": [u, v] }),
        Subject::Vertex(v) => json!({ "vertex": v }),
        Subject::Graph => json!("graph"),
    };
    json!({
        "kind": "filter",
        "condition": e.condition.to_string(),
        "side": e.side.to_string(),
        "subject": subject,
        "measured": e.measured,
        "bound": e.bound.to_string(),
    })
}

pub fn filter_json(v: &FilterVerdict) -> Value {
    json!({ "filter": v.kind.to_string(), "pass": v.pass })
}

pub fn nordhaus_json(v: &NordhausVerdict) -> Value {
    match v {
        NordhausVerdict::NotApplicable(why) => json!({ "applicable": false, "reason": why }),
        NordhausVerdict::Holds(x) | NordhausVerdict::Violated(x) => json!({
            "applicable": true,
            "holds": !v.is_violated(),
            "lhs": x.lhs,
            "bound": x.bound,
            "equality": x.equality,
            "path_or_cycle": x.path_or_cycle,
        }),
    }
}
