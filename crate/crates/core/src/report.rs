//! Structured verification reports shared by every `verify_*` operation.

use std::fmt;

use serde::{Deserialize, Serialize};

/// One exact comparison inside a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub label: String,
    pub left: String,
    pub right: String,
    pub pass: bool,
}

impl Witness {
    pub fn compare<T: PartialEq + fmt::Display>(label: impl Into<String>, left: T, right: T) -> Self {
        Witness {
            label: label.into(),
            pass: left == right,
            left: left.to_string(),
            right: right.to_string(),
        }
    }

    pub fn check(label: impl Into<String>, pass: bool, left: impl Into<String>, right: impl Into<String>) -> Self {
        Witness {
            label: label.into(),
            left: left.into(),
            right: right.into(),
            pass,
        }
    }
}

/// `{claim, left, right, pass, witnesses}`; `pass` is the conjunction of
/// every witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub claim: String,
    pub left: String,
    pub right: String,
    pub pass: bool,
    pub witnesses: Vec<Witness>,
}

impl Report {
    pub fn new(claim: impl Into<String>, left: impl Into<String>, right: impl Into<String>, witnesses: Vec<Witness>) -> Self {
        let pass = witnesses.iter().all(|w| w.pass);
        Report {
            claim: claim.into(),
            left: left.into(),
            right: right.into(),
            pass,
            witnesses,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Witness> {
        self.witnesses.iter().filter(|w| !w.pass)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", if self.pass { "PASS" } else { "FAIL" }, self.claim)?;
        writeln!(f, "  left:  {}", self.left)?;
        writeln!(f, "  right: {}", self.right)?;
        let width = self.witnesses.iter().map(|w| w.label.len()).max().unwrap_or(0);
        for w in &self.witnesses {
            writeln!(
                f,
                "  [{}] {:<width$}  {} = {}",
                if w.pass { "ok" } else { "!!" },
                w.label,
                w.left,
                w.right,
            )?;
        }
        Ok(())
    }
}
