use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{CycleWitness, Edge, EdgeSet};

/// Object attached to a failed claim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Counterexample {
    Vertex(usize),
    VertexPair(usize, usize),
    Edge(Edge),
    Edges(EdgeSet),
    Cycle(CycleWitness),
    Note(String),
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Counterexample::Vertex(v) => write!(f, "v{v}"),
            Counterexample::VertexPair(a, b) => write!(f, "(v{a}, v{b})"),
            Counterexample::Edge(e) => write!(f, "{e}"),
            Counterexample::Edges(s) => write!(f, "{s}"),
            Counterexample::Cycle(c) => write!(f, "cycle {c}"),
            Counterexample::Note(s) => f.write_str(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

/// A list of named pass/fail claims. The report passes iff every claim does.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claims: Vec<Claim>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.claims.push(Claim {
            name: name.into(),
            passed: true,
            counterexample: None,
        });
    }

    pub fn fail(&mut self, name: impl Into<String>, cx: Counterexample) {
        self.claims.push(Claim {
            name: name.into(),
            passed: false,
            counterexample: Some(cx),
        });
    }

    /// Records `name` as passing when `result` is `Ok`.
    pub fn check(&mut self, name: impl Into<String>, result: Result<(), Counterexample>) {
        match result {
            Ok(()) => self.pass(name),
            Err(cx) => self.fail(name, cx),
        }
    }

    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| !c.passed)
    }

    pub fn claim(&self, name: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.name == name)
    }

    /// Appends another report's claims, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: VerificationReport) {
        for mut c in other.claims {
            c.name = format!("{prefix}{}", c.name);
            self.claims.push(c);
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.claims {
            let status = if c.passed { "PASS" } else { "FAIL" };
            write!(f, "{status} {}", c.name)?;
            if let Some(cx) = &c.counterexample {
                write!(f, ": {cx}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
