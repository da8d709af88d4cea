use std::fmt;

use serde::Serialize;

/// One violated identity, named by the diagram or law it belongs to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomFailure {
    pub axiom: String,
    pub detail: String,
}

/// Itemised result of an axiom suite; empty means every check passed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub failures: Vec<AxiomFailure>,
}

impl AxiomReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn push(&mut self, axiom: impl Into<String>, detail: impl Into<String>) {
        self.failures.push(AxiomFailure { axiom: axiom.into(), detail: detail.into() });
    }

    /// Records a failure when `ok` is false.
    pub fn require(&mut self, ok: bool, axiom: &str, detail: impl FnOnce() -> String) {
        if !ok {
            self.push(axiom, detail());
        }
    }

    pub fn extend_prefixed(&mut self, prefix: &str, other: AxiomReport) {
        for f in other.failures {
            self.failures.push(AxiomFailure { axiom: format!("{prefix}{}", f.axiom), detail: f.detail });
        }
    }

    pub fn fails(&self, axiom: &str) -> bool {
        self.failures.iter().any(|f| f.axiom == axiom)
    }

    pub fn axioms(&self) -> Vec<&str> {
        let mut names: Vec<&str> = self.failures.iter().map(|f| f.axiom.as_str()).collect();
        names.dedup();
        names
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "all axioms hold");
        }
        for (i, x) in self.failures.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}: {}", x.axiom, x.detail)?;
        }
        Ok(())
    }
}
