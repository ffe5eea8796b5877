//! Powerfulness, powerful nilpotency and related invariants of subgroups.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::subgroup::{Chain, Subgroup};

/// `H' ≤ H^p` for odd `p`, `H' ≤ H^4` for `p = 2`.
pub fn is_powerful(h: &Subgroup<'_>) -> Result<bool> {
    let j = if h.group().prime() == 2 { 2 } else { 1 };
    h.derived()?.leq(&h.agemo(j)?)
}

/// `H' ≤ H^{p^2}`.
pub fn is_strongly_powerful(h: &Subgroup<'_>) -> Result<bool> {
    h.derived()?.leq(&h.agemo(2)?)
}

/// The greedy series `1 = Z_0 < Z_1 < …` with `Z_k` the preimage of the
/// center of `H / Z_{k-1}^p`. Stops on reaching `H` or when it stalls, and
/// returns it as a chain (stored descending, with `Z_0` last).
pub fn upper_powerfully_central_series<'g>(h: &Subgroup<'g>) -> Result<Chain<'g>> {
    let mut series = alloc::vec![Subgroup::trivial(h.group())];
    loop {
        let last = series.last().expect("series is never empty");
        if last.order_log() == h.order_log() {
            break;
        }
        let next = h.central_preimage(&last.agemo(1)?)?;
        if next.order_log() == last.order_log() {
            break;
        }
        series.push(next);
    }
    Chain::ascending(series)
}

/// Powerful nilpotency class: `Some(0)` for the trivial group, `None` when
/// `H` is not powerfully nilpotent.
pub fn pn_class(h: &Subgroup<'_>) -> Result<Option<u32>> {
    if h.is_trivial() {
        return Ok(Some(0));
    }
    if h.group().prime() == 2 && !is_powerful(h)? {
        return Ok(None);
    }
    let series = upper_powerfully_central_series(h)?;
    if series.terms()[0].order_log() == h.order_log() {
        Ok(Some(series.length() as u32))
    } else {
        Ok(None)
    }
}

/// Checks that `chain` runs from `H` down to `1` with `[S_l, H] ≤ S_{l+1}^p`
/// at every step. Chains built with [`Chain::ascending`] are already stored
/// in this order.
pub fn verify_chain(h: &Subgroup<'_>, chain: &Chain<'_>) -> Result<CheckReport> {
    let terms: Vec<&Subgroup<'_>> = chain.terms().iter().collect();
    let mut report = CheckReport::new("powerfully_central_chain")
        .param("length", chain.length())
        .param("order_log_p", h.order_log());
    let (Some(top), Some(bottom)) = (terms.first(), terms.last()) else {
        return Err(Error::Precondition("empty chain".into()));
    };
    for term in &terms {
        if !term.leq(h)? {
            return Err(Error::Precondition("chain term is not a subgroup of H".into()));
        }
    }
    if let Some(x) = h.witness_outside(top)? {
        report.fail([x.into_exponents()], "top term is not H".into());
    }
    if let Some(x) = bottom.igs().next() {
        report.fail([x.exponents().to_vec()], "bottom term is not trivial".into());
    }
    let group = h.group();
    for (l, pair) in terms.windows(2).enumerate() {
        report.tested += 1;
        let target = pair[1].agemo(1)?;
        let mut witness = None;
        'pairs: for x in pair[0].igs() {
            for y in h.igs() {
                let c = group.commutator(x, y)?;
                if !target.contains(&c)? {
                    witness = Some(c);
                    break 'pairs;
                }
            }
        }
        if witness.is_none() {
            witness = pair[0].commutator_with(h)?.witness_outside(&target)?;
        }
        if let Some(c) = witness {
            let note = format!("step {l}: [S_{l}, H] contains {} outside S_{}^p", group.format(&c), l + 1);
            report.fail([c.into_exponents()], note);
        }
    }
    Ok(report)
}

/// Minimal number of generators, `log_p |H : H^p H'|`.
pub fn rank(h: &Subgroup<'_>) -> Result<u32> {
    let frattini = h.agemo(1)?.join(&h.derived()?)?;
    Ok(h.order_log() - frattini.order_log())
}

/// Numerical invariants of a subgroup, all as base-`p` logarithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupProfile {
    pub order_log: u32,
    pub exponent_log: u32,
    pub rank: u32,
    pub pn_class: Option<u32>,
}

impl GroupProfile {
    /// `n - c`, when the class is defined.
    pub fn powerful_coclass(&self) -> Option<u32> {
        self.pn_class.map(|c| self.order_log - c)
    }
}

pub fn profile(h: &Subgroup<'_>) -> Result<GroupProfile> {
    Ok(GroupProfile {
        order_log: h.order_log(),
        exponent_log: h.exponent_log()?,
        rank: rank(h)?,
        pn_class: pn_class(h)?,
    })
}
