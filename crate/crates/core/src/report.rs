//! Itemized pass/fail records produced by every verifier.

use std::fmt;

use crate::linalg::{Matrix, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }

    pub fn parse(s: &str) -> Option<Status> {
        match s {
            "pass" => Some(Status::Pass),
            "fail" => Some(Status::Fail),
            "skipped" => Some(Status::Skipped),
            _ => None,
        }
    }
}

/// Evidence attached to a check: where it went wrong and, when the failure
/// is a mismatch of exact values, the difference `lhs - rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub message: String,
    pub diff: Option<Matrix>,
}

impl Witness {
    pub fn text(message: impl Into<String>) -> Witness {
        Witness {
            message: message.into(),
            diff: None,
        }
    }

    pub fn with_diff(message: impl Into<String>, diff: Matrix) -> Witness {
        Witness {
            message: message.into(),
            diff: Some(diff),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub status: Status,
    /// Always present when `status` is `Fail`.
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Report {
        Report {
            subject: subject.into(),
            checks: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            status: Status::Pass,
            witness: None,
        });
    }

    pub fn fail(&mut self, name: impl Into<String>, witness: Witness) {
        self.checks.push(Check {
            name: name.into(),
            status: Status::Fail,
            witness: Some(witness),
        });
    }

    pub fn skip(&mut self, name: impl Into<String>, reason: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            status: Status::Skipped,
            witness: Some(Witness::text(reason)),
        });
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    /// Records `name` as passing iff `ok`; `witness` is built only on failure.
    pub fn record(&mut self, name: impl Into<String>, ok: bool, witness: impl FnOnce() -> Witness) -> bool {
        if ok {
            self.pass(name);
        } else {
            self.fail(name, witness());
        }
        ok
    }

    /// Exact matrix equality check with the difference as witness.
    pub fn matrices_equal(&mut self, name: impl Into<String>, lhs: &Matrix, rhs: &Matrix) -> bool {
        let name = name.into();
        if (lhs.rows(), lhs.cols()) != (rhs.rows(), rhs.cols()) {
            self.fail(
                name,
                Witness::text(format!(
                    "shape {}x{} vs {}x{}",
                    lhs.rows(),
                    lhs.cols(),
                    rhs.rows(),
                    rhs.cols()
                )),
            );
            return false;
        }
        let ok = lhs == rhs;
        self.record(name, ok, || Witness::with_diff("lhs - rhs", lhs - rhs))
    }

    /// Exact equality of every labelled vector pair; the witness names the
    /// first mismatch.
    pub fn vectors_equal<I>(&mut self, name: impl Into<String>, pairs: I) -> bool
    where
        I: IntoIterator<Item = (String, Vector, Vector)>,
    {
        for (label, lhs, rhs) in pairs {
            if lhs != rhs {
                let diff = if lhs.len() == rhs.len() {
                    let d: Vector = lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
                    Some(Matrix::from_rows(vec![d], lhs.len()))
                } else {
                    None
                };
                self.fail(name, Witness { message: label, diff });
                return false;
            }
        }
        self.pass(name);
        true
    }

    /// Appends the checks of `other`, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = if prefix.is_empty() {
                c.name
            } else {
                format!("{prefix}/{}", c.name)
            };
            self.checks.push(c);
        }
        self.notes.extend(other.notes);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail).collect()
    }

    pub fn failed_names(&self) -> Vec<&str> {
        self.failures().iter().map(|c| c.name.as_str()).collect()
    }

    pub fn status_of(&self, name: &str) -> Option<Status> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.status)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let failed = self.failures().len();
        writeln!(f, "{}: {} checks, {} failed", self.subject, self.checks.len(), failed)?;
        for c in &self.checks {
            writeln!(f, "  [{}] {}", c.status.as_str(), c.name)?;
            if let Some(w) = &c.witness {
                writeln!(f, "      {}", w.message)?;
                if let Some(d) = &w.diff {
                    for line in d.to_string().lines() {
                        writeln!(f, "      {line}")?;
                    }
                }
            }
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}
