//! Structured results of verification checks.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

/// At most this many witnesses are kept per report.
pub const MAX_WITNESSES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Status {
    Pass,
    Fail,
    /// A documented negative control behaved as the counterexample predicts.
    ExpectedFail,
    /// Preconditions do not hold, so the check does not apply.
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ExpectedFail => "expected_fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(untagged))]
pub enum Param {
    Int(i64),
    Text(String),
}

impl From<i64> for Param {
    fn from(v: i64) -> Self {
        Param::Int(v)
    }
}

impl From<u32> for Param {
    fn from(v: u32) -> Self {
        Param::Int(v as i64)
    }
}

impl From<u64> for Param {
    fn from(v: u64) -> Self {
        Param::Int(v as i64)
    }
}

impl From<usize> for Param {
    fn from(v: usize) -> Self {
        Param::Int(v as i64)
    }
}

impl From<&str> for Param {
    fn from(v: &str) -> Self {
        Param::Text(v.to_string())
    }
}

impl From<String> for Param {
    fn from(v: String) -> Self {
        Param::Text(v)
    }
}

impl core::fmt::Display for Param {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Param::Int(v) => write!(f, "{v}"),
            Param::Text(s) => f.write_str(s),
        }
    }
}

/// Outcome of one check. A failing report always carries at least one
/// witness (an exponent vector).
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CheckReport {
    pub name: String,
    pub params: BTreeMap<String, Param>,
    pub status: Status,
    pub witnesses: Vec<Vec<u32>>,
    pub tested: u64,
    pub ms: u64,
    /// Human-readable explanations of failures; not part of the JSON schema.
    #[cfg_attr(feature = "serde", serde(skip))]
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(name: &str) -> Self {
        CheckReport {
            name: name.to_string(),
            params: BTreeMap::new(),
            status: Status::Pass,
            witnesses: Vec::new(),
            tested: 0,
            ms: 0,
            notes: Vec::new(),
        }
    }

    pub fn skipped(name: &str, reason: &str) -> Self {
        let mut r = CheckReport::new(name);
        r.status = Status::Skipped;
        r.notes.push(reason.to_string());
        r
    }

    pub fn param(mut self, key: &str, value: impl Into<Param>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn set_param(&mut self, key: &str, value: impl Into<Param>) {
        self.params.insert(key.to_string(), value.into());
    }

    /// Marks the report failed and records witnesses, keeping at most
    /// [`MAX_WITNESSES`] of them.
    pub fn fail(&mut self, witnesses: impl IntoIterator<Item = Vec<u32>>, note: String) {
        let mut added = false;
        for w in witnesses {
            added = true;
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(w);
            }
        }
        assert!(added, "a failure needs a witness");
        if self.status != Status::ExpectedFail {
            self.status = Status::Fail;
        }
        if self.notes.len() < MAX_WITNESSES {
            self.notes.push(note);
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// True unless the status is [`Status::Fail`].
    pub fn is_ok(&self) -> bool {
        self.status != Status::Fail
    }

    /// Folds the status, counts and witnesses of `other` into `self`.
    pub fn absorb(&mut self, other: CheckReport) {
        self.tested += other.tested;
        if other.status == Status::Fail {
            let notes = other.notes;
            self.fail(other.witnesses, notes.join("; "));
        }
    }
}

/// Millisecond clock used to time suite checks; the `no_std` core cannot
/// read time on its own.
pub trait Clock {
    fn now_ms(&self) -> u64;
}

/// A clock that always reads zero, for deterministic output.
#[derive(Debug, Clone, Copy, Default)]
pub struct NoClock;

impl Clock for NoClock {
    fn now_ms(&self) -> u64 {
        0
    }
}
