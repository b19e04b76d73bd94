use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::Id;

/// One failed axiom instance.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Violation {
    pub axiom: String,
    pub ids: Vec<Id>,
    pub expected: String,
    pub found: String,
}

impl Violation {
    pub fn new(
        axiom: impl Into<String>,
        ids: impl IntoIterator<Item = Id>,
        expected: impl Into<String>,
        found: impl Into<String>,
    ) -> Violation {
        Violation {
            axiom: axiom.into(),
            ids: ids.into_iter().collect(),
            expected: expected.into(),
            found: found.into(),
        }
    }
}

/// Prints `axiom<TAB>ids<TAB>expected<TAB>found`, ids comma-separated.
impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\t", self.axiom)?;
        for (i, id) in self.ids.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{id}")?;
        }
        write!(f, "\t{}\t{}", self.expected, self.found)
    }
}

/// Outcome of an axiom or property scan. Violations are kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn from_violations(mut violations: Vec<Violation>) -> ValidationReport {
        violations.sort();
        violations.dedup();
        ValidationReport { violations }
    }

    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    /// True if some violation carries exactly this axiom name.
    pub fn names(&self, axiom: &str) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    pub fn merge(self, other: ValidationReport) -> ValidationReport {
        let mut all = self.violations;
        all.extend(other.violations);
        ValidationReport::from_violations(all)
    }
}
