//! Structured outcomes for law checks.
//!
//! Every `check*` operation returns a [`CheckReport`] instead of panicking:
//! `Fail` always carries a human-readable witness of the violated instance,
//! while `Error` means the check could not even be carried out (missing table
//! entry, bound exceeded, malformed input).

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => write!(f, "PASS"),
            Status::Fail => write!(f, "FAIL"),
            Status::Error => write!(f, "ERROR"),
        }
    }
}

/// Outcome of a single law check, with a witness when something went wrong.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: String,
    pub status: Status,
    /// Concrete violating instance (for `Fail`) or diagnostic (for `Error`).
    pub witness: Option<String>,
    /// How many individual instances were examined.
    pub checked: usize,
}

impl CheckReport {
    pub fn pass(name: impl Into<String>, checked: usize) -> Self {
        CheckReport { name: name.into(), status: Status::Pass, witness: None, checked }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>, checked: usize) -> Self {
        CheckReport {
            name: name.into(),
            status: Status::Fail,
            witness: Some(witness.into()),
            checked,
        }
    }

    pub fn error(name: impl Into<String>, witness: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            status: Status::Error,
            witness: Some(witness.into()),
            checked: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Merge sub-reports: first non-pass wins, instance counts add up.
    pub fn combine(name: impl Into<String>, parts: impl IntoIterator<Item = CheckReport>) -> Self {
        let name = name.into();
        let mut checked = 0;
        for part in parts {
            checked += part.checked;
            if part.status != Status::Pass {
                return CheckReport {
                    name,
                    status: part.status,
                    witness: part
                        .witness
                        .map(|w| format!("{}: {}", part.name, w)),
                    checked,
                };
            }
        }
        CheckReport::pass(name, checked)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} (checked {})", self.name, self.status, self.checked)?;
        if let Some(w) = &self.witness {
            write!(f, ": {}", w)?;
        }
        Ok(())
    }
}
