//! Executable checks of the commutator-order bounds and the Omega/Agemo
//! results for powerful p-groups, each producing a [`CheckReport`].
//!
//! Pair scans run exhaustively when the quantification domain is small and
//! fall back to seeded sampling otherwise. Subgroups of the form
//! `Ω_i(G^{p^k})` are shared between checks through a [`Lattice`].

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::collector::{Element, Group};
use crate::consistency::check_consistency;
use crate::error::{Error, Result};
use crate::properties::{is_powerful, pn_class, verify_chain};
use crate::report::{CheckReport, Clock, Status};
use crate::subgroup::{Chain, Subgroup};

/// How pair quantifiers are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Sample { samples: u64, seed: u64 },
    /// Exhaustive up to `threshold` pairs, sampled above.
    Auto { threshold: u64, samples: u64, seed: u64 },
}

impl Default for Mode {
    fn default() -> Self {
        Mode::Auto {
            threshold: 1_000_000,
            samples: 10_000,
            seed: 0,
        }
    }
}

impl Mode {
    /// `None` for exhaustive, otherwise `(samples, seed)`.
    fn resolve(self, domain: u64) -> Option<(u64, u64)> {
        match self {
            Mode::Exhaustive => None,
            Mode::Sample { samples, seed } => Some((samples, seed)),
            Mode::Auto {
                threshold,
                samples,
                seed,
            } => (domain > threshold).then_some((samples, seed)),
        }
    }

    fn annotate(self, report: &mut CheckReport, domain: u64) {
        match self.resolve(domain) {
            None => report.set_param("mode", "exhaustive"),
            Some((samples, seed)) => {
                report.set_param("mode", "sample");
                report.set_param("samples", samples);
                report.set_param("seed", seed);
            }
        }
    }
}

/// Which group of checks [`run_suite`] runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    /// Commutator order bounds and exponents of Omega subgroups.
    Orders,
    /// Elements of order `p` in `G^p` are central there.
    LemmaP,
    /// `Ω_i(G^{p^k})^{p^j} ≤ Ω_{i-j}(G^{p^{k+j}})`.
    Prop,
    /// `[Ω_i(G^{p^2})^{p^j}, Ω_i(G^p)] ≤ Ω_i(G^{p^2})^{p^{j+2}}`.
    Shorten,
    /// Powerfully central chains for `Ω_i(G^p)`.
    Chain,
    /// Powerful nilpotency class of `Ω_i(G^{p^j})`.
    Main,
}

impl Suite {
    pub const NAMES: &'static [&'static str] =
        &["all", "orders", "lemma-p", "prop", "shorten", "chain", "main"];

    pub fn from_name(name: &str) -> Option<Suite> {
        Some(match name {
            "all" => Suite::All,
            "orders" => Suite::Orders,
            "lemma-p" => Suite::LemmaP,
            "prop" => Suite::Prop,
            "shorten" => Suite::Shorten,
            "chain" => Suite::Chain,
            "main" => Suite::Main,
            _ => return None,
        })
    }

    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub i_max: u32,
    pub j_max: u32,
    pub k_max: u32,
    pub mode: Mode,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suite: Suite::All,
            i_max: 4,
            j_max: 4,
            k_max: 3,
            mode: Mode::default(),
        }
    }
}

/// Memoized `G^{p^k}` and `Ω_i(G^{p^k})` of one ambient group.
pub struct Lattice<'g> {
    whole: Subgroup<'g>,
    agemo: BTreeMap<u32, Subgroup<'g>>,
    omega: BTreeMap<(u32, i64), Subgroup<'g>>,
}

impl<'g> Lattice<'g> {
    pub fn new(group: &'g Group) -> Result<Self> {
        Ok(Lattice {
            whole: Subgroup::whole(group)?,
            agemo: BTreeMap::new(),
            omega: BTreeMap::new(),
        })
    }

    pub fn group(&self) -> &'g Group {
        self.whole.group()
    }

    pub fn whole(&self) -> &Subgroup<'g> {
        &self.whole
    }

    /// `G^{p^k}`.
    pub fn agemo(&mut self, k: u32) -> Result<Subgroup<'g>> {
        if let Some(h) = self.agemo.get(&k) {
            return Ok(h.clone());
        }
        let h = if k == 0 {
            self.whole.clone()
        } else {
            let prev = self.agemo(k - 1)?;
            if prev.is_trivial() {
                prev
            } else {
                self.whole.agemo(k)?
            }
        };
        self.agemo.insert(k, h.clone());
        Ok(h)
    }

    /// `Ω_i(G^{p^k})`.
    pub fn omega_agemo(&mut self, k: u32, i: i64) -> Result<Subgroup<'g>> {
        if let Some(h) = self.omega.get(&(k, i)) {
            return Ok(h.clone());
        }
        let h = self.agemo(k)?.omega(i)?;
        self.omega.insert((k, i), h.clone());
        Ok(h)
    }
}

fn require_powerful(lattice: &Lattice<'_>) -> Result<()> {
    if is_powerful(lattice.whole())? {
        Ok(())
    } else {
        Err(Error::Precondition("the group is not powerful".into()))
    }
}

fn require_odd(group: &Group) -> Result<()> {
    if group.prime() == 2 {
        Err(Error::Precondition("the check needs an odd prime".into()))
    } else {
        Ok(())
    }
}

/// Dense per-element tables over the whole group, indexed by
/// [`Group::index_of`].
struct Tables {
    order_log: Vec<u32>,
    // largest j ≤ 3 such that the element is a p^j-th power
    root_depth: Vec<u32>,
}

const MAX_POWER_SHIFT: u32 = 3;

fn tables(lattice: &Lattice<'_>) -> Result<Tables> {
    let group = lattice.group();
    let n = group.order() as usize;
    let p = group.prime() as u64;
    let mut order_log = alloc::vec![0u32; n];
    let mut root_depth = alloc::vec![0u32; n];
    for x in lattice.whole().elements()? {
        let x = x?;
        order_log[group.index_of(&x) as usize] = group.order_log_of(&x)?;
        let mut y = x;
        for j in 1..=MAX_POWER_SHIFT {
            y = group.power(&y, p)?;
            let slot = &mut root_depth[group.index_of(&y) as usize];
            *slot = (*slot).max(j);
        }
    }
    Ok(Tables {
        order_log,
        root_depth,
    })
}

fn vectors(xs: &[&Element]) -> Vec<Vec<u32>> {
    xs.iter().map(|x| x.exponents().to_vec()).collect()
}

/// Commutator order bounds and Omega exponents in a powerful group:
///
/// * `o(y) ≤ p^i ⇒ o([x,y]) ≤ p^i`;
/// * `o(x) ≤ p^{i+1}, o(y) ≤ p^i ⇒ o([x^{p^j}, y^{p^k}]) ≤ p^{i-j-k}` for
///   `0 ≤ j, k ≤ 3`, where a negative bound means the commutator is `1`;
/// * `exp Ω_i(G) ≤ p^i` for odd `p`, and `exp Ω_i(G^2) ≤ 2^i` for `p = 2`.
///
/// The exhaustive scan ranges over pairs `(u, v) = (x^{p^j}, y^{p^k})`: for
/// fixed `u, v` the strongest instance of the second bound takes `j` and `k`
/// as large as possible and `i` as small as possible, which gives
/// `max(log o(u) - 1 - k, log o(v) - j)`. Sampling tests the statement
/// literally on random `x, y, j, k`.
pub fn check_commutator_orders(group: &Group, mode: Mode) -> Result<CheckReport> {
    let mut lattice = Lattice::new(group)?;
    commutator_orders(&mut lattice, mode)
}

fn commutator_orders(lattice: &mut Lattice<'_>, mode: Mode) -> Result<CheckReport> {
    require_powerful(lattice)?;
    let group = lattice.group();
    let p = group.prime() as u64;
    let order = group.order();
    let domain = order.saturating_mul(order);
    let mut report = CheckReport::new("commutator_orders");
    mode.annotate(&mut report, domain);

    match mode.resolve(domain) {
        None => {
            report.set_param("reduction", "power_pairs");
            let t = tables(lattice)?;
            let lo = |x: &Element| t.order_log[group.index_of(x) as usize] as i64;
            let all: Vec<Element> = lattice.whole().elements()?.collect::<Result<_>>()?;
            for u in &all {
                for v in &all {
                    report.tested += 1;
                    let c = group.commutator(u, v)?;
                    let lc = lo(&c);
                    if lc > lo(v) {
                        report.fail(vectors(&[u, v, &c]), format!(
                            "o([x,y]) = p^{lc} exceeds o(y) = p^{} for x = {}, y = {}",
                            lo(v), group.format(u), group.format(v)
                        ));
                    }
                    if u.is_identity() || v.is_identity() {
                        continue;
                    }
                    let j = t.root_depth[group.index_of(u) as usize] as i64;
                    let k = t.root_depth[group.index_of(v) as usize] as i64;
                    let bound = (lo(u) - 1 - k).max(lo(v) - j);
                    if lc > bound.max(0) || (bound < 0 && !c.is_identity()) {
                        report.fail(vectors(&[u, v, &c]), format!(
                            "o([{}, {}]) = p^{lc} exceeds the bound p^{bound}",
                            group.format(u), group.format(v)
                        ));
                    }
                }
            }
        }
        Some((samples, seed)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..samples {
                report.tested += 1;
                let x = group.element_at(rng.gen_range(0..order));
                let y = group.element_at(rng.gen_range(0..order));
                let j: u32 = rng.gen_range(0..=MAX_POWER_SHIFT);
                let k: u32 = rng.gen_range(0..=MAX_POWER_SHIFT);
                let (lx, ly) = (group.order_log_of(&x)? as i64, group.order_log_of(&y)? as i64);
                let c = group.commutator(&x, &y)?;
                if group.order_log_of(&c)? as i64 > ly {
                    report.fail(vectors(&[&x, &y, &c]), format!(
                        "o([x,y]) exceeds o(y) for x = {}, y = {}",
                        group.format(&x), group.format(&y)
                    ));
                }
                let i = (lx - 1).max(ly).max(0);
                let u = group.power(&x, p.pow(j))?;
                let v = group.power(&y, p.pow(k))?;
                let c = group.commutator(&u, &v)?;
                let bound = i - j as i64 - k as i64;
                let lc = group.order_log_of(&c)? as i64;
                if lc > bound.max(0) || (bound < 0 && !c.is_identity()) {
                    report.fail(vectors(&[&x, &y, &c]), format!(
                        "o([x^p^{j}, y^p^{k}]) = p^{lc} exceeds p^{bound} for x = {}, y = {}",
                        group.format(&x), group.format(&y)
                    ));
                }
            }
        }
    }

    let e = lattice.whole().exponent_log()?;
    let shift = if p == 2 { 1 } else { 0 };
    for i in 0..=e {
        report.tested += 1;
        let h = lattice.omega_agemo(shift, i as i64)?;
        if h.exponent_log()? > i {
            let q = p.pow(i);
            let mut witness = None;
            for x in h.elements()? {
                let x = x?;
                if !group.power(&x, q)?.is_identity() {
                    witness = Some(x);
                    break;
                }
            }
            let x = witness.expect("an element of larger order exists");
            let note = format!("Omega_{i} has an element {} of order above p^{i}", group.format(&x));
            report.fail([x.into_exponents()], note);
        }
    }
    Ok(report)
}

/// In a powerful group, elements of `G^p` of order `p` commute with those
/// of order at most `p^2`; in particular `Ω_1(G^p)` is abelian.
pub fn check_order_p_lemma(group: &Group, mode: Mode) -> Result<CheckReport> {
    let mut lattice = Lattice::new(group)?;
    order_p_lemma(&mut lattice, mode)
}

fn order_p_lemma(lattice: &mut Lattice<'_>, mode: Mode) -> Result<CheckReport> {
    require_powerful(lattice)?;
    let group = lattice.group();
    let gp = lattice.agemo(1)?;
    let mut order_p = Vec::new();
    let mut order_p2 = Vec::new();
    for x in gp.elements()? {
        let x = x?;
        match group.order_log_of(&x)? {
            1 => {
                order_p.push(x.clone());
                order_p2.push(x);
            }
            0 | 2 => order_p2.push(x),
            _ => {}
        }
    }
    let domain = order_p.len() as u64 * order_p2.len() as u64;
    let mut report = CheckReport::new("order_p_lemma");
    mode.annotate(&mut report, domain);
    let test = |report: &mut CheckReport, a: &Element, b: &Element| -> Result<()> {
        report.tested += 1;
        let c = group.commutator(a, b)?;
        if !c.is_identity() {
            let note = format!("[{}, {}] = {}", group.format(a), group.format(b), group.format(&c));
            report.fail(vectors(&[a, b, &c]), note);
        }
        Ok(())
    };
    match mode.resolve(domain) {
        None => {
            for a in &order_p {
                for b in &order_p2 {
                    test(&mut report, a, b)?;
                }
            }
        }
        Some((samples, seed)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            if !order_p.is_empty() {
                for _ in 0..samples {
                    let a = &order_p[rng.gen_range(0..order_p.len())];
                    let b = &order_p2[rng.gen_range(0..order_p2.len())];
                    test(&mut report, a, b)?;
                }
            }
        }
    }
    report.tested += 1;
    let omega = lattice.omega_agemo(1, 1)?;
    if let Some(c) = omega.derived()?.igs().next() {
        let note = format!("Omega_1(G^p) is not abelian: {} is a commutator", group.format(c));
        report.fail([c.exponents().to_vec()], note);
    }
    Ok(report)
}

/// `Ω_i(G^{p^k})^{p^j} ≤ Ω_{i-j}(G^{p^{k+j}})` and
/// `exp Ω_i(G^{p^k})^{p^j} ≤ p^{max(i-j, 0)}` for `0 ≤ i ≤ i_max`,
/// `0 ≤ j ≤ j_max`, `1 ≤ k ≤ k_max`.
pub fn check_power_inclusion(group: &Group, i_max: u32, j_max: u32, k_max: u32) -> Result<CheckReport> {
    let mut lattice = Lattice::new(group)?;
    power_inclusion(&mut lattice, i_max, j_max, k_max)
}

fn power_inclusion(lattice: &mut Lattice<'_>, i_max: u32, j_max: u32, k_max: u32) -> Result<CheckReport> {
    require_powerful(lattice)?;
    let group = lattice.group();
    let mut report = CheckReport::new("power_inclusion")
        .param("i_max", i_max)
        .param("j_max", j_max)
        .param("k_max", k_max);
    for k in 1..=k_max {
        for i in 0..=i_max {
            for j in 0..=j_max {
                report.tested += 1;
                let left = lattice.omega_agemo(k, i as i64)?.agemo(j)?;
                let right = lattice.omega_agemo(k + j, i as i64 - j as i64)?;
                if let Some(x) = left.witness_outside(&right)? {
                    let note = format!(
                        "(i, j, k) = ({i}, {j}, {k}): {} is not in Omega_(i-j)(G^p^(k+j))",
                        group.format(&x)
                    );
                    report.fail([x.into_exponents()], note);
                }
                let bound = i.saturating_sub(j);
                if left.exponent_log()? > bound {
                    let q = (group.prime() as u64).pow(bound);
                    for x in left.elements()? {
                        let x = x?;
                        if !group.power(&x, q)?.is_identity() {
                            let note = format!(
                                "(i, j, k) = ({i}, {j}, {k}): {} has order above p^{bound}",
                                group.format(&x)
                            );
                            report.fail([x.into_exponents()], note);
                            break;
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

/// `[Ω_i(G^{p^2})^{p^j}, Ω_i(G^p)] ≤ Ω_i(G^{p^2})^{p^{j+2}}` for
/// `1 ≤ i ≤ i_max`, `0 ≤ j ≤ j_max`; odd `p` only.
pub fn check_shortening_lemma(group: &Group, i_max: u32, j_max: u32) -> Result<CheckReport> {
    let mut lattice = Lattice::new(group)?;
    shortening_lemma(&mut lattice, i_max, j_max)
}

fn shortening_lemma(lattice: &mut Lattice<'_>, i_max: u32, j_max: u32) -> Result<CheckReport> {
    require_odd(lattice.group())?;
    require_powerful(lattice)?;
    let group = lattice.group();
    let mut report = CheckReport::new("shortening_lemma")
        .param("i_max", i_max)
        .param("j_max", j_max);
    for i in 1..=i_max {
        let top = lattice.omega_agemo(1, i as i64)?;
        let mid = lattice.omega_agemo(2, i as i64)?;
        for j in 0..=j_max {
            report.tested += 1;
            let left = mid.agemo(j)?.commutator_with(&top)?;
            let right = mid.agemo(j + 2)?;
            if let Some(x) = left.witness_outside(&right)? {
                let note = format!("(i, j) = ({i}, {j}): commutator {} escapes", group.format(&x));
                report.fail([x.into_exponents()], note);
            }
        }
    }
    Ok(report)
}

/// The chain `Ω_i(G^p) ≥ Ω_i(G^{p^2}) ≥ Ω_i(G^{p^2})^p ≥ … ≥
/// Ω_i(G^{p^2})^{p^{i-2}} ≥ 1` of length `i`, or `Ω_1(G^p) ≥ 1` for `i = 1`.
pub fn build_omega_chain<'g>(group: &'g Group, i: u32) -> Result<Chain<'g>> {
    let mut lattice = Lattice::new(group)?;
    omega_chain(&mut lattice, i)
}

fn omega_chain<'g>(lattice: &mut Lattice<'g>, i: u32) -> Result<Chain<'g>> {
    require_odd(lattice.group())?;
    require_powerful(lattice)?;
    if i == 0 {
        return Err(Error::Precondition("the chain needs i ≥ 1".into()));
    }
    let mut terms = alloc::vec![lattice.omega_agemo(1, i as i64)?];
    if i >= 2 {
        let mid = lattice.omega_agemo(2, i as i64)?;
        for l in 1..=i - 2 {
            terms.push(mid.agemo(l)?);
        }
        terms.insert(1, mid);
    }
    terms.push(Subgroup::trivial(lattice.group()));
    Chain::descending(terms)
}

/// Builds the chain for `Ω_i(G^p)` and verifies it is powerfully central
/// of length at most `i`.
pub fn check_omega_chain(group: &Group, i: u32) -> Result<CheckReport> {
    let mut lattice = Lattice::new(group)?;
    omega_chain_report(&mut lattice, i)
}

fn omega_chain_report(lattice: &mut Lattice<'_>, i: u32) -> Result<CheckReport> {
    let chain = omega_chain(lattice, i)?;
    let h = lattice.omega_agemo(1, i as i64)?;
    let mut report = verify_chain(&h, &chain)?;
    report.name = "omega_chain".into();
    report.set_param("i", i);
    if chain.length() > i as usize {
        let x = h.igs().next().expect("a chain longer than 1 has a nontrivial top");
        report.fail([x.exponents().to_vec()], format!("length {} exceeds {i}", chain.length()));
    }
    Ok(report)
}

/// For odd `p`: `Ω_i(G^{p^j})` is powerful and powerfully nilpotent of class
/// at most `i`, for `1 ≤ i ≤ i_max`, `1 ≤ j ≤ j_max`.
pub fn verify_main_odd(group: &Group, i_max: u32, j_max: u32) -> Result<CheckReport> {
    let mut lattice = Lattice::new(group)?;
    main_odd(&mut lattice, i_max, j_max)
}

fn main_odd(lattice: &mut Lattice<'_>, i_max: u32, j_max: u32) -> Result<CheckReport> {
    require_odd(lattice.group())?;
    require_powerful(lattice)?;
    let mut report = CheckReport::new("class_bound_odd")
        .param("i_max", i_max)
        .param("j_max", j_max);
    let mut attained = Vec::new();
    for j in 1..=j_max {
        for i in 1..=i_max {
            report.tested += 1;
            let h = lattice.omega_agemo(j, i as i64)?;
            let class = pn_class(&h)?;
            let ok = class.is_some_and(|c| c <= i) && is_powerful(&h)?;
            if class == Some(i) && i >= 2 {
                attained.push(format!("i={i} j={j}"));
            }
            if !ok {
                fail_class(&mut report, &h, i, j, class);
            }
        }
    }
    report.set_param("class_attained", attained.join(","));
    Ok(report)
}

fn fail_class(report: &mut CheckReport, h: &Subgroup<'_>, i: u32, j: u32, class: Option<u32>) {
    let note = match class {
        Some(c) => format!("Omega_{i}(G^p^{j}) has class {c}"),
        None => format!("Omega_{i}(G^p^{j}) is not powerfully nilpotent"),
    };
    report.fail(h.igs().map(|x| x.exponents().to_vec()), note);
}

/// For `p = 2`: `Ω_i(G^{2^j})` has class at most `max(i - 1, 1)` for
/// `1 ≤ i ≤ i_max`, `2 ≤ j ≤ j_max`. Also returns one negative control per
/// `i` at `j = 1`, marked [`Status::ExpectedFail`] when `Ω_i(G^2)` is not
/// powerful.
pub fn verify_main_even(group: &Group, i_max: u32, j_max: u32) -> Result<Vec<CheckReport>> {
    let mut lattice = Lattice::new(group)?;
    main_even(&mut lattice, i_max, j_max)
}

fn main_even(lattice: &mut Lattice<'_>, i_max: u32, j_max: u32) -> Result<Vec<CheckReport>> {
    if lattice.group().prime() != 2 {
        return Err(Error::Precondition("the check needs p = 2".into()));
    }
    require_powerful(lattice)?;
    let mut report = CheckReport::new("class_bound_even")
        .param("i_max", i_max)
        .param("j_max", j_max);
    for j in 2..=j_max {
        for i in 1..=i_max {
            report.tested += 1;
            let h = lattice.omega_agemo(j, i as i64)?;
            let class = pn_class(&h)?;
            if !class.is_some_and(|c| c <= (i - 1).max(1)) {
                fail_class(&mut report, &h, i, j, class);
            }
        }
    }
    let mut reports = alloc::vec![report];
    for i in 1..=i_max {
        let h = lattice.omega_agemo(1, i as i64)?;
        let mut control = CheckReport::new("class_bound_even_control")
            .param("i", i)
            .param("j", 1u32);
        control.tested = 1;
        if let Some(c) = h.derived()?.witness_outside(&h.agemo(2)?)? {
            control.status = Status::ExpectedFail;
            let note = format!("Omega_{i}(G^2) is not powerful: {} is not in its 4th powers", lattice.group().format(&c));
            control.fail([c.into_exponents()], note);
        }
        reports.push(control);
    }
    Ok(reports)
}

#[derive(Debug, Clone, Copy)]
enum Job {
    Orders,
    LemmaP,
    Prop,
    Shorten,
    Chain(u32),
    MainOdd,
    MainEven,
}

impl Job {
    fn suite(self) -> Suite {
        match self {
            Job::Orders => Suite::Orders,
            Job::LemmaP => Suite::LemmaP,
            Job::Prop => Suite::Prop,
            Job::Shorten => Suite::Shorten,
            Job::Chain(_) => Suite::Chain,
            Job::MainOdd | Job::MainEven => Suite::Main,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Job::Orders => "commutator_orders",
            Job::LemmaP => "order_p_lemma",
            Job::Prop => "power_inclusion",
            Job::Shorten => "shortening_lemma",
            Job::Chain(_) => "omega_chain",
            Job::MainOdd => "class_bound_odd",
            Job::MainEven => "class_bound_even",
        }
    }

    fn needs_odd(self) -> bool {
        matches!(self, Job::Shorten | Job::Chain(_) | Job::MainOdd)
    }

    fn run(self, l: &mut Lattice<'_>, c: &SuiteConfig) -> Result<Vec<CheckReport>> {
        Ok(match self {
            Job::Orders => alloc::vec![commutator_orders(l, c.mode)?],
            Job::LemmaP => alloc::vec![order_p_lemma(l, c.mode)?],
            Job::Prop => alloc::vec![power_inclusion(l, c.i_max, c.j_max, c.k_max)?],
            Job::Shorten => alloc::vec![shortening_lemma(l, c.i_max, c.j_max)?],
            Job::Chain(i) => alloc::vec![omega_chain_report(l, i)?],
            Job::MainOdd => alloc::vec![main_odd(l, c.i_max, c.j_max)?],
            Job::MainEven => main_even(l, c.i_max, c.j_max)?,
        })
    }
}

fn timed<T>(clock: &dyn Clock, f: impl FnOnce() -> Result<T>) -> Result<(T, u64)> {
    let start = clock.now_ms();
    let value = f()?;
    Ok((value, clock.now_ms().saturating_sub(start)))
}

/// Runs the configured checks in a fixed order: consistency, the powerful
/// precondition, then the selected results. If the group is inconsistent or
/// not powerful the remaining checks are reported as skipped.
pub fn run_suite(group: &Group, config: &SuiteConfig, clock: &dyn Clock) -> Result<Vec<CheckReport>> {
    let mut reports = Vec::new();
    let (mut consistency, ms) = timed(clock, || check_consistency(group))?;
    consistency.ms = ms;
    let consistent = consistency.passed();
    reports.push(consistency);
    if !consistent {
        reports.push(CheckReport::skipped("powerful", "presentation is inconsistent"));
        return Ok(reports);
    }

    let mut lattice = Lattice::new(group)?;
    let (powerful, ms) = timed(clock, || is_powerful(lattice.whole()))?;
    let mut pre = CheckReport::new("powerful");
    pre.tested = 1;
    pre.ms = ms;
    if !powerful {
        pre.status = Status::Skipped;
        pre.notes.push("the group is not powerful; the checks below do not apply".into());
    }
    reports.push(pre);

    let odd = group.prime() != 2;
    let mut jobs = alloc::vec![Job::Orders, Job::LemmaP, Job::Prop, Job::Shorten];
    jobs.extend((1..=config.i_max).map(Job::Chain));
    jobs.push(if odd { Job::MainOdd } else { Job::MainEven });
    for job in jobs {
        if !config.suite.includes(job.suite()) {
            continue;
        }
        if !powerful {
            reports.push(CheckReport::skipped(job.name(), "the group is not powerful"));
            continue;
        }
        if job.needs_odd() && !odd {
            reports.push(CheckReport::skipped(job.name(), "the check needs an odd prime"));
            continue;
        }
        let (batch, ms) = timed(clock, || job.run(&mut lattice, config))?;
        let share = ms / batch.len().max(1) as u64;
        for mut r in batch {
            r.ms = share;
            reports.push(r);
        }
    }
    Ok(reports)
}
