//! Line-oriented checkpoint files: a header naming the spec hash and seed,
//! then one graph6 string per surviving graph.
//!
//! ```text
//! # gammac checkpoint
//! # spec 3f2a...
//! # seed 1
//! L~~~...
//! ```

use std::fs;
use std::io;
use std::path::Path;

use gammac_core::Graph;

use crate::format::{emit_graph6, parse_graph6};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Checkpoint {
    pub spec_hash: String,
    /// `None` for exhaustive runs.
    pub seed: Option<u64>,
    pub graphs: Vec<Graph>,
}

const MAGIC: &str = "# gammac checkpoint";

impl Checkpoint {
    pub fn to_text(&self) -> String {
        let mut out = format!("{MAGIC}\n# spec {}\n", self.spec_hash);
        match self.seed {
            Some(s) => out.push_str(&format!("# seed {s}\n")),
            None => out.push_str("# seed none\n"),
        }
        for g in &self.graphs {
            out.push_str(&emit_graph6(g));
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> io::Result<Self> {
        let bad = |line: usize, what: &str| io::Error::new(io::ErrorKind::InvalidData, format!("line {line}: {what}"));
        let mut lines = text.lines();
        if lines.next() != Some(MAGIC) {
            return Err(bad(1, "missing checkpoint header"));
        }
        let spec_hash = lines
            .next()
            .and_then(|l| l.strip_prefix("# spec "))
            .ok_or_else(|| bad(2, "missing spec hash"))?
            .to_string();
        let seed = match lines.next().and_then(|l| l.strip_prefix("# seed ")) {
            Some("none") => None,
            Some(s) => Some(s.parse().map_err(|_| bad(3, "bad seed"))?),
            None => return Err(bad(3, "missing seed")),
        };
        let graphs = lines
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| parse_graph6(l).map_err(|e| bad(i + 4, &e.kind.to_string())))
            .collect::<io::Result<_>>()?;
        Ok(Checkpoint { spec_hash, seed, graphs })
    }

    pub fn write(&self, path: &Path) -> io::Result<()> {
        fs::write(path, self.to_text())
    }

    pub fn read(path: &Path) -> io::Result<Self> {
        Self::from_text(&fs::read_to_string(path)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use gammac_core::constructions::{complete, paley};

    #[test]
    fn round_trip() {
        let c = Checkpoint { spec_hash: "ab".repeat(32), seed: Some(7), graphs: vec![paley(13).unwrap(), complete(3)] };
        assert_eq!(Checkpoint::from_text(&c.to_text()).unwrap(), c);
        let e = Checkpoint { seed: None, graphs: vec![], ..c };
        assert_eq!(Checkpoint::from_text(&e.to_text()).unwrap(), e);
    }

    #[test]
    fn rejects_damaged_files() {
        assert!(Checkpoint::from_text("hello\n").is_err());
        assert!(Checkpoint::from_text("# gammac checkpoint\n# spec x\n# seed q\n").is_err());
        let err = Checkpoint::from_text("# gammac checkpoint\n# spec x\n# seed 1\nB!\n").unwrap_err();
        assert!(err.to_string().starts_with("line 4"));
    }
}
