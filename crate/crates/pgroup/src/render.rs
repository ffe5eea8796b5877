//! Text and JSON rendering of check reports.

use std::fmt::Write;

use pgroup_core::report::{CheckReport, Status};
use pgroup_core::Group;
use serde::Serialize;

/// The stable JSON document written by `verify --format json`.
#[derive(Debug, Serialize)]
pub struct Document<'a> {
    pub group: &'a str,
    pub p: u32,
    pub order_log_p: u32,
    pub checks: &'a [CheckReport],
}

pub fn json(group_name: &str, group: &Group, checks: &[CheckReport]) -> String {
    let doc = Document {
        group: group_name,
        p: group.prime(),
        order_log_p: group.order_log(),
        checks,
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("reports always serialize");
    out.push('\n');
    out
}

fn witness(group: &Group, exps: &[u32]) -> String {
    match group.element(exps) {
        Ok(x) => group.format(&x),
        Err(_) => format!("{exps:?}"),
    }
}

pub fn text(group: &Group, checks: &[CheckReport], timing: bool) -> String {
    let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    let mut out = String::new();
    for c in checks {
        let _ = write!(out, "{:<13} {:<width$}", c.status.as_str(), c.name);
        for (k, v) in &c.params {
            let _ = write!(out, " {k}={v}");
        }
        let _ = write!(out, " tested={}", c.tested);
        if timing {
            let _ = write!(out, " ms={}", c.ms);
        }
        out.push('\n');
        for note in &c.notes {
            let _ = writeln!(out, "    {note}");
        }
        for w in &c.witnesses {
            let _ = writeln!(out, "    witness {}", witness(group, w));
        }
    }
    let count = |s: Status| checks.iter().filter(|c| c.status == s).count();
    let _ = writeln!(
        out,
        "{} checks: {} pass, {} fail, {} expected_fail, {} skipped",
        checks.len(),
        count(Status::Pass),
        count(Status::Fail),
        count(Status::ExpectedFail),
        count(Status::Skipped)
    );
    out
}
