//! Consistency of a power-commutator presentation via the finite set of
//! overlap identities. A presentation passes exactly when its normal forms
//! are unique, that is when the group has order `p^{Σ m_i}`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::collector::{Element, Group};
use crate::error::{Error, Result};
use crate::report::CheckReport;

/// One failed overlap: its label and the two collected sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverlapFailure {
    pub overlap: String,
    pub left: Element,
    pub right: Element,
}

/// Evaluates every overlap and returns at most `limit` failures, in the
/// order the overlaps are listed below.
///
/// * `g_k (g_j g_i) = (g_k g_j) g_i` for `k > j > i`
/// * `g_j^{p^{m_j}} g_i = g_j^{p^{m_j}-1} (g_j g_i)` for `j > i`
/// * `g_j g_i^{p^{m_i}} = (g_j g_i) g_i^{p^{m_i}-1}` for `j > i`
/// * `g_i g_i^{p^{m_i}} = g_i^{p^{m_i}} g_i`
pub fn overlap_failures(ambient: &Group, limit: usize) -> Result<(Vec<OverlapFailure>, u64)> {
    // Plain collection, so the witnesses do not depend on derived tables.
    let plain = Group::plain(ambient.presentation().clone(), ambient.limits());
    let group = &plain;
    let n = group.len();
    let names = group.presentation().names();
    let mut failures = Vec::new();
    let mut tested = 0u64;
    let gens = group.generators();
    let powers: Vec<Element> = (0..n)
        .map(|i| group.normal_form(group.presentation().power_relation(i)))
        .collect::<Result<_>>()?;
    let almost: Vec<Element> = (0..n)
        .map(|i| {
            let mut e = alloc::vec![0u32; n];
            e[i] = (group.relative_order(i) - 1) as u32;
            group.element(&e)
        })
        .collect::<Result<_>>()?;

    let mut record = |label: String, left: Element, right: Element| {
        tested += 1;
        if left != right && failures.len() < limit {
            failures.push(OverlapFailure {
                overlap: label,
                left,
                right,
            });
        }
    };

    for k in 0..n {
        for j in 0..k {
            for i in 0..j {
                let left = group.multiply(&gens[k], &group.multiply(&gens[j], &gens[i])?)?;
                let right = group.multiply(&group.multiply(&gens[k], &gens[j])?, &gens[i])?;
                record(
                    format!("(a) {}({} {}) = ({} {}){}", names[k], names[j], names[i], names[k], names[j], names[i]),
                    left,
                    right,
                );
            }
        }
    }
    for j in 0..n {
        for i in 0..j {
            let r = group.relative_order(j);
            let left = group.multiply(&powers[j], &gens[i])?;
            let right = group.multiply(&almost[j], &group.multiply(&gens[j], &gens[i])?)?;
            record(
                format!("(b) {}^{r} {} = {}^{} ({} {})", names[j], names[i], names[j], r - 1, names[j], names[i]),
                left,
                right,
            );
        }
    }
    for j in 0..n {
        for i in 0..j {
            let r = group.relative_order(i);
            let left = group.multiply(&gens[j], &powers[i])?;
            let right = group.multiply(&group.multiply(&gens[j], &gens[i])?, &almost[i])?;
            record(
                format!("(c) {} {}^{r} = ({} {}) {}^{}", names[j], names[i], names[j], names[i], names[i], r - 1),
                left,
                right,
            );
        }
    }
    for i in 0..n {
        let r = group.relative_order(i);
        let left = group.multiply(&gens[i], &powers[i])?;
        let right = group.multiply(&powers[i], &gens[i])?;
        record(
            format!("(d) {} {}^{r} = {}^{r} {}", names[i], names[i], names[i], names[i]),
            left,
            right,
        );
    }
    let failures = failures
        .into_iter()
        .map(|f| {
            Ok(OverlapFailure {
                overlap: f.overlap,
                left: ambient.element(f.left.exponents())?,
                right: ambient.element(f.right.exponents())?,
            })
        })
        .collect::<Result<_>>()?;
    Ok((failures, tested))
}

/// Failed overlaps listed by [`check_consistency`].
pub const REPORTED_FAILURES: usize = 10;

/// Runs all overlap checks and reports the first [`REPORTED_FAILURES`]
/// failures with both collected sides as witnesses.
pub fn check_consistency(group: &Group) -> Result<CheckReport> {
    let (failures, tested) = overlap_failures(group, REPORTED_FAILURES)?;
    let mut report = CheckReport::new("consistency")
        .param("p", group.prime())
        .param("generators", group.len());
    report.tested = tested;
    for f in failures {
        let note = format!(
            "overlap {}: {} vs {}",
            f.overlap,
            group.format(&f.left),
            group.format(&f.right)
        );
        report.fail(
            [f.left.into_exponents(), f.right.into_exponents()],
            note,
        );
    }
    Ok(report)
}

/// `Ok(())` for a consistent presentation, otherwise the first failing
/// overlap as an [`Error::Inconsistent`].
pub fn ensure_consistent(group: &Group) -> Result<()> {
    let (mut failures, _) = overlap_failures(group, 1)?;
    match failures.pop() {
        None => Ok(()),
        Some(f) => Err(Error::Inconsistent {
            overlap: f.overlap,
            left: f.left.into_exponents(),
            right: f.right.into_exponents(),
        }),
    }
}
