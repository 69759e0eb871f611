//! Per-law pass/fail reports produced by every exhaustive checker.

use std::fmt;

/// Variable bindings that falsify a law, in binding order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Witness {
    pub bindings: Vec<(String, String)>,
}

impl Witness {
    pub fn new(bindings: Vec<(String, String)>) -> Self {
        Witness { bindings }
    }

    /// Value bound to `var`, if any.
    pub fn get(&self, var: &str) -> Option<&str> {
        self.bindings
            .iter()
            .find(|(v, _)| v == var)
            .map(|(_, value)| value.as_str())
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bindings.is_empty() {
            return write!(f, "(no variables)");
        }
        for (i, (var, value)) in self.bindings.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{var}={value}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// First falsifying assignment in iteration order.
    Fail(Witness),
}

/// Result of checking one labelled law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomResult {
    pub label: String,
    pub outcome: Outcome,
    /// Assignments examined before stopping.
    pub checked: u64,
    /// Assignments skipped because a hypothesis did not hold.
    pub vacuous: u64,
}

impl AxiomResult {
    pub fn pass(label: impl Into<String>, checked: u64) -> Self {
        AxiomResult {
            label: label.into(),
            outcome: Outcome::Pass,
            checked,
            vacuous: 0,
        }
    }

    pub fn fail(label: impl Into<String>, witness: Witness) -> Self {
        AxiomResult {
            label: label.into(),
            outcome: Outcome::Fail(witness),
            checked: 1,
            vacuous: 0,
        }
    }

    pub fn passed(&self) -> bool {
        matches!(self.outcome, Outcome::Pass)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.outcome {
            Outcome::Pass => None,
            Outcome::Fail(w) => Some(w),
        }
    }
}

/// Ordered collection of law results.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AxiomReport {
    pub results: Vec<AxiomResult>,
}

impl AxiomReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, result: AxiomResult) {
        self.results.push(result);
    }

    /// Appends every result of `other`, prefixing labels with `prefix` when non-empty.
    pub fn extend_prefixed(&mut self, prefix: &str, other: AxiomReport) {
        for mut r in other.results {
            if !prefix.is_empty() {
                r.label = format!("{prefix}{}", r.label);
            }
            self.results.push(r);
        }
    }

    pub fn passed(&self) -> bool {
        self.results.iter().all(AxiomResult::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomResult> {
        self.results.iter().filter(|r| !r.passed())
    }

    pub fn get(&self, label: &str) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.label == label)
    }

    pub fn labels(&self) -> Vec<&str> {
        self.results.iter().map(|r| r.label.as_str()).collect()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            match &r.outcome {
                Outcome::Pass => {
                    write!(f, "PASS {} ({} checked", r.label, r.checked)?;
                    if r.vacuous > 0 {
                        write!(f, ", {} vacuous", r.vacuous)?;
                    }
                    writeln!(f, ")")?;
                }
                Outcome::Fail(w) => writeln!(f, "FAIL {} witness: {w}", r.label)?,
            }
        }
        Ok(())
    }
}

/// One quantified variable of a law: its name and the carrier it ranges over.
#[derive(Clone, Copy)]
pub(crate) struct Domain<'a> {
    pub var: &'a str,
    pub names: &'a [String],
}

pub(crate) fn dom<'a>(var: &'a str, names: &'a [String]) -> Domain<'a> {
    Domain { var, names }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Verdict {
    Holds,
    Fails,
    /// The hypothesis of a quasi-identity is false for this assignment.
    Vacuous,
}

impl From<bool> for Verdict {
    fn from(ok: bool) -> Self {
        if ok {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }
}

/// Sweeps every assignment of `vars` in lexicographic index order (first
/// variable most significant) and stops at the first failure.
pub(crate) fn law<F>(label: &str, vars: &[Domain<'_>], mut eval: F) -> AxiomResult
where
    F: FnMut(&[usize]) -> Verdict,
{
    let mut idx = vec![0usize; vars.len()];
    let mut checked = 0u64;
    let mut vacuous = 0u64;
    if vars.iter().any(|d| d.names.is_empty()) {
        return AxiomResult::pass(label, 0);
    }
    loop {
        checked += 1;
        match eval(&idx) {
            Verdict::Holds => {}
            Verdict::Vacuous => vacuous += 1,
            Verdict::Fails => {
                let bindings = vars
                    .iter()
                    .zip(&idx)
                    .map(|(d, &i)| (d.var.to_string(), d.names[i].clone()))
                    .collect();
                return AxiomResult {
                    label: label.to_string(),
                    outcome: Outcome::Fail(Witness::new(bindings)),
                    checked,
                    vacuous,
                };
            }
        }
        // odometer, last variable fastest
        let mut pos = vars.len();
        loop {
            if pos == 0 {
                return AxiomResult {
                    label: label.to_string(),
                    outcome: Outcome::Pass,
                    checked,
                    vacuous,
                };
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < vars[pos].names.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}
