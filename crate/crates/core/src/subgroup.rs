//! Subgroups of a consistent ambient group, held as induced generating
//! sequences (IGS).
//!
//! An IGS has at most one element per depth. The element at depth `d` has
//! leading exponent `p^s`, and it contributes a factor `p^{m_d - s}` to the
//! order. Membership is decided by sifting: the leading exponent of a
//! candidate is stripped depth by depth, and the candidate is a member iff
//! nothing is left.
//!
//! `agemo` and `omega` enumerate the subgroup rather than working from
//! generators. `H^{p^j}` is not generated by the `p^j`-th powers of
//! generators in general, and those are exactly the subgroups where the
//! interesting behavior lives.

use alloc::format;
use alloc::vec::Vec;

use crate::arith;
use crate::collector::{Element, Group};
use crate::error::{Error, Result};

/// Largest relative order for which a rep keeps a table of its powers.
const POWER_TABLE_LIMIT: u64 = 4096;

#[derive(Debug, Clone)]
struct Rep {
    elem: Element,
    depth: usize,
    // leading exponent is p^shift
    shift: u32,
    // p^{m_depth - shift}
    rel_order: u64,
    powers: Option<Vec<Element>>,
}

impl Rep {
    fn new(group: &Group, elem: Element, depth: usize, shift: u32) -> Result<Rep> {
        let p = group.prime() as u64;
        let rel_order = p.pow(group.presentation().exponent(depth) - shift);
        let powers = if rel_order <= POWER_TABLE_LIMIT {
            let mut table = Vec::with_capacity(rel_order as usize);
            let mut acc = group.identity();
            for _ in 0..rel_order {
                let next = group.multiply(&acc, &elem)?;
                table.push(acc);
                acc = next;
            }
            Some(table)
        } else {
            None
        };
        Ok(Rep {
            elem,
            depth,
            shift,
            rel_order,
            powers,
        })
    }

    fn pow(&self, group: &Group, k: u64) -> Result<Element> {
        match &self.powers {
            Some(table) => Ok(table[(k % self.rel_order) as usize].clone()),
            None => group.power(&self.elem, k),
        }
    }
}

/// Sift-and-spin construction state.
struct Builder<'g> {
    group: &'g Group,
    reps: Vec<Option<Rep>>,
}

impl<'g> Builder<'g> {
    fn new(group: &'g Group) -> Self {
        Builder {
            group,
            reps: alloc::vec![None; group.len()],
        }
    }

    fn from_subgroup(h: &Subgroup<'g>) -> Self {
        let mut b = Builder::new(h.group);
        for rep in &h.reps {
            b.reps[rep.depth] = Some(rep.clone());
        }
        b
    }

    fn sift(&self, x: Element) -> Result<Element> {
        sift(self.group, self.reps.iter().flatten(), x)
    }

    /// Adds `x`; returns whether the sequence changed.
    fn insert(&mut self, x: Element) -> Result<bool> {
        let group = self.group;
        let p = group.prime() as u64;
        let mut x = x;
        let mut changed = false;
        loop {
            x = self.sift(x)?;
            let Some(d) = x.depth() else {
                return Ok(changed);
            };
            let lead = x.exponents()[d] as u64;
            let shift = arith::valuation(lead, p);
            let modulus = p.pow(group.presentation().exponent(d) - shift);
            let unit = (lead / p.pow(shift)) % modulus;
            let t = arith::mod_inverse(unit, modulus);
            if t != 1 {
                x = group.power(&x, t)?;
            }
            debug_assert_eq!(x.exponents()[d] as u64, p.pow(shift));
            let rep = Rep::new(group, x, d, shift)?;
            changed = true;
            match self.reps[d].replace(rep) {
                None => return Ok(true),
                Some(old) => x = old.elem,
            }
        }
    }

    /// Spins until every relative-order power and every commutator among the
    /// reps (and with each of `conjugators`) sifts to the identity.
    fn close(&mut self, conjugators: &[Element]) -> Result<()> {
        let group = self.group;
        loop {
            let mut changed = false;
            let snapshot: Vec<Rep> = self.reps.iter().flatten().cloned().collect();
            for rep in &snapshot {
                let y = group.power(&rep.elem, rep.rel_order)?;
                changed |= self.insert(y)?;
            }
            for (b, later) in snapshot.iter().enumerate() {
                for earlier in &snapshot[..b] {
                    let c = group.commutator(&later.elem, &earlier.elem)?;
                    changed |= self.insert(c)?;
                }
            }
            for rep in &snapshot {
                for a in conjugators {
                    let c = group.commutator(&rep.elem, a)?;
                    changed |= self.insert(c)?;
                }
            }
            if !changed {
                return Ok(());
            }
        }
    }

    /// Reduces every rep against the deeper ones so its exponent at a deeper
    /// rep's depth lies below that rep's leading exponent.
    fn finish(self) -> Result<Subgroup<'g>> {
        let group = self.group;
        let p = group.prime() as u64;
        let mut reps: Vec<Rep> = self.reps.into_iter().flatten().collect();
        for a in 0..reps.len() {
            let mut elem = reps[a].elem.clone();
            let mut touched = false;
            for rep in &reps[a + 1..] {
                let unit = p.pow(rep.shift);
                let k = elem.exponents()[rep.depth] as u64 / unit;
                if k > 0 {
                    let t = rep.rel_order - k % rep.rel_order;
                    elem = group.multiply(&elem, &rep.pow(group, t)?)?;
                    touched = true;
                }
            }
            if touched {
                reps[a] = Rep::new(group, elem, reps[a].depth, reps[a].shift)?;
            }
        }
        Ok(Subgroup::from_reps(group, reps))
    }
}

fn sift<'a>(group: &Group, reps: impl Iterator<Item = &'a Rep> + Clone, mut x: Element) -> Result<Element> {
    let p = group.prime() as u64;
    let mut reps = reps.peekable();
    loop {
        let Some(d) = x.depth() else {
            return Ok(x);
        };
        while reps.peek().is_some_and(|r| r.depth < d) {
            reps.next();
        }
        let Some(rep) = reps.peek() else {
            return Ok(x);
        };
        if rep.depth != d {
            return Ok(x);
        }
        let lead = x.exponents()[d] as u64;
        let unit = p.pow(rep.shift);
        if !lead.is_multiple_of(unit) {
            return Ok(x);
        }
        let k = lead / unit;
        x = group.multiply(&x, &rep.pow(group, rep.rel_order - k)?)?;
    }
}

/// A subgroup of a fixed ambient [`Group`].
#[derive(Debug, Clone)]
pub struct Subgroup<'g> {
    group: &'g Group,
    reps: Vec<Rep>,
    order_log: u32,
}

impl<'g> Subgroup<'g> {
    fn from_reps(group: &'g Group, reps: Vec<Rep>) -> Self {
        let m: u32 = reps
            .iter()
            .map(|r| group.presentation().exponent(r.depth) - r.shift)
            .sum();
        Subgroup {
            group,
            reps,
            order_log: m,
        }
    }

    pub fn trivial(group: &'g Group) -> Self {
        Subgroup::from_reps(group, Vec::new())
    }

    /// The whole ambient group, with the presentation's generators as IGS.
    pub fn whole(group: &'g Group) -> Result<Self> {
        let reps = (0..group.len())
            .map(|i| Rep::new(group, group.generator(i), i, 0))
            .collect::<Result<_>>()?;
        Ok(Subgroup::from_reps(group, reps))
    }

    pub fn group(&self) -> &'g Group {
        self.group
    }

    /// The induced generating sequence, by increasing depth.
    pub fn igs(&self) -> impl ExactSizeIterator<Item = &Element> + Clone {
        self.reps.iter().map(|r| &r.elem)
    }

    pub fn generators(&self) -> Vec<Element> {
        self.igs().cloned().collect()
    }

    /// `k` with `|H| = p^k`.
    pub fn order_log(&self) -> u32 {
        self.order_log
    }

    pub fn order(&self) -> u64 {
        (self.group.prime() as u64).pow(self.order_log)
    }

    pub fn is_trivial(&self) -> bool {
        self.reps.is_empty()
    }

    fn same_ambient(&self, other: &Subgroup<'_>) -> Result<()> {
        if self.group.same_group(other.group) {
            Ok(())
        } else {
            Err(Error::MixedAmbients)
        }
    }

    fn check_budget(&self) -> Result<()> {
        let budget = self.group.limits().max_elements;
        let order = self.order();
        if order > budget {
            Err(Error::ElementLimit { order, budget })
        } else {
            Ok(())
        }
    }

    /// Residue of `x` after sifting; the identity iff `x` is a member.
    pub fn sift(&self, x: &Element) -> Result<Element> {
        self.group.owns(x)?;
        sift(self.group, self.reps.iter(), x.clone())
    }

    pub fn contains(&self, x: &Element) -> Result<bool> {
        Ok(self.sift(x)?.is_identity())
    }

    /// `self ≤ other`.
    pub fn leq(&self, other: &Subgroup<'_>) -> Result<bool> {
        self.same_ambient(other)?;
        if self.order_log > other.order_log {
            return Ok(false);
        }
        for y in self.igs() {
            if !other.contains(y)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Subgroup<'_>) -> Result<bool> {
        self.same_ambient(other)?;
        Ok(self.order_log == other.order_log && self.leq(other)?)
    }

    /// An IGS element of `self` outside `other`, if any.
    pub fn witness_outside(&self, other: &Subgroup<'_>) -> Result<Option<Element>> {
        self.same_ambient(other)?;
        for y in self.igs() {
            if !other.contains(y)? {
                return Ok(Some(y.clone()));
            }
        }
        Ok(None)
    }

    /// Every element exactly once, as `y_1^{k_1} ⋯ y_t^{k_t}`.
    pub fn elements(&self) -> Result<Elements<'_, 'g>> {
        self.check_budget()?;
        Ok(Elements::new(self))
    }

    /// The element `y_1^{k_1} ⋯ y_t^{k_t}` for `k_i = coords[i] mod` the
    /// relative order of `y_i`.
    pub fn element_from_coords(&self, coords: &[u64]) -> Result<Element> {
        let mut x = self.group.identity();
        for (rep, &k) in self.reps.iter().zip(coords) {
            x = self.group.multiply(&x, &rep.pow(self.group, k % rep.rel_order)?)?;
        }
        Ok(x)
    }

    /// Relative orders of the IGS elements.
    pub fn relative_orders(&self) -> Vec<u64> {
        self.reps.iter().map(|r| r.rel_order).collect()
    }

    /// `k` with `exp H = p^k`.
    pub fn exponent_log(&self) -> Result<u32> {
        let mut best = 0;
        for x in self.elements()? {
            best = best.max(self.group.order_log_of(&x?)?);
        }
        Ok(best)
    }

    pub fn exponent(&self) -> Result<u64> {
        Ok((self.group.prime() as u64).pow(self.exponent_log()?))
    }

    /// Whether `self` is normalized by every generator of `ambient`.
    pub fn is_normal_in(&self, ambient: &Subgroup<'_>) -> Result<bool> {
        self.same_ambient(ambient)?;
        for y in self.igs() {
            for a in ambient.igs() {
                if !self.contains(&self.group.conjugate(y, a)?)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `|self : sub|` for `sub ≤ self`.
    pub fn index(&self, sub: &Subgroup<'_>) -> Result<u64> {
        if !sub.leq(self)? {
            return Err(Error::Precondition(
                "index requires a subgroup of the larger group".into(),
            ));
        }
        Ok((self.group.prime() as u64).pow(self.order_log - sub.order_log))
    }

    /// `H^{p^j}`, generated by all `p^j`-th powers of elements of `H`.
    pub fn agemo(&self, j: u32) -> Result<Subgroup<'g>> {
        if j == 0 {
            return Ok(self.clone());
        }
        let group = self.group;
        let Some(q) = (group.prime() as u64).checked_pow(j) else {
            return Ok(Subgroup::trivial(group));
        };
        self.check_budget()?;
        let mut b = Builder::new(group);
        for y in self.igs() {
            b.insert(group.power(y, q)?)?;
        }
        for x in self.elements()? {
            let y = group.power(&x?, q)?;
            if !y.is_identity() {
                b.insert(y)?;
            }
        }
        b.close(&[])?;
        b.finish()
    }

    /// `Ω_i(H)`, generated by the elements of order dividing `p^i`; trivial
    /// for negative `i`.
    pub fn omega(&self, i: i64) -> Result<Subgroup<'g>> {
        let group = self.group;
        if i < 0 {
            return Ok(Subgroup::trivial(group));
        }
        if i as u64 >= self.order_log as u64 {
            return Ok(self.clone());
        }
        let q = (group.prime() as u64).pow(i as u32);
        self.check_budget()?;
        let mut b = Builder::new(group);
        for x in self.elements()? {
            let x = x?;
            if !x.is_identity() && group.power(&x, q)?.is_identity() {
                b.insert(x)?;
            }
        }
        b.close(&[])?;
        b.finish()
    }

    /// `[H, K]`.
    pub fn commutator_with(&self, other: &Subgroup<'_>) -> Result<Subgroup<'g>> {
        commutator_subgroup(self, other)
    }

    /// `H' = [H, H]`.
    pub fn derived(&self) -> Result<Subgroup<'g>> {
        commutator_subgroup(self, self)
    }

    /// `{x ∈ H : [x, h] ∈ N for all h ∈ H}`, the preimage of `Z(H/N)`.
    pub fn central_preimage(&self, n: &Subgroup<'_>) -> Result<Subgroup<'g>> {
        if !n.leq(self)? || !n.is_normal_in(self)? {
            return Err(Error::Precondition(
                "central preimage needs a normal subgroup".into(),
            ));
        }
        let group = self.group;
        let gens = self.reduced_generators()?;
        let mut b = Builder::new(group);
        for y in n.igs() {
            b.insert(y.clone())?;
        }
        'elements: for x in self.elements()? {
            let x = x?;
            if b.sift(x.clone())?.is_identity() {
                continue;
            }
            for h in &gens {
                if !n.contains(&group.commutator(&x, h)?)? {
                    continue 'elements;
                }
            }
            b.insert(x)?;
        }
        b.close(&[])?;
        b.finish()
    }

    /// IGS elements that are not already generated by the earlier ones.
    pub fn reduced_generators(&self) -> Result<Vec<Element>> {
        let mut chosen: Vec<Element> = Vec::new();
        let mut span = Subgroup::trivial(self.group);
        for y in self.igs() {
            if span.order_log == self.order_log {
                break;
            }
            if !span.contains(y)? {
                chosen.push(y.clone());
                span = close(self.group, &chosen)?;
            }
        }
        Ok(chosen)
    }

    /// Joins `self` with extra generators.
    pub fn join_with(&self, extra: &[Element]) -> Result<Subgroup<'g>> {
        let mut b = Builder::from_subgroup(self);
        for x in extra {
            self.group.owns(x)?;
            b.insert(x.clone())?;
        }
        b.close(&[])?;
        b.finish()
    }

    /// Product subgroup `⟨H, K⟩`.
    pub fn join(&self, other: &Subgroup<'_>) -> Result<Subgroup<'g>> {
        self.same_ambient(other)?;
        self.join_with(&other.generators())
    }

    /// IGS written as words, for display.
    pub fn describe(&self) -> alloc::string::String {
        if self.is_trivial() {
            return "<1>".into();
        }
        let words: Vec<_> = self.igs().map(|y| self.group.format(y)).collect();
        format!("<{}>", words.join(", "))
    }
}

/// Smallest subgroup containing `gens`.
pub fn close<'g>(group: &'g Group, gens: &[Element]) -> Result<Subgroup<'g>> {
    let mut b = Builder::new(group);
    for x in gens {
        group.owns(x)?;
        b.insert(x.clone())?;
    }
    b.close(&[])?;
    b.finish()
}

/// Smallest subgroup containing `gens` and normalized by `ambient_gens`.
pub fn normal_closure<'g>(
    group: &'g Group,
    gens: &[Element],
    ambient_gens: &[Element],
) -> Result<Subgroup<'g>> {
    let mut b = Builder::new(group);
    for x in gens.iter().chain(ambient_gens) {
        group.owns(x)?;
    }
    for x in gens {
        b.insert(x.clone())?;
    }
    b.close(ambient_gens)?;
    b.finish()
}

/// `[H, K]`: the normal closure in `⟨H, K⟩` of the commutators of their
/// generators.
pub fn commutator_subgroup<'g>(h: &Subgroup<'g>, k: &Subgroup<'_>) -> Result<Subgroup<'g>> {
    h.same_ambient(k)?;
    let group = h.group;
    let mut comms = Vec::new();
    for x in h.igs() {
        for y in k.igs() {
            let c = group.commutator(x, y)?;
            if !c.is_identity() {
                comms.push(c);
            }
        }
    }
    let ambient: Vec<Element> = h.igs().chain(k.igs()).cloned().collect();
    normal_closure(group, &comms, &ambient)
}

/// Odometer over the IGS transversal, one multiplication per step.
pub struct Elements<'a, 'g> {
    sub: &'a Subgroup<'g>,
    counters: Vec<u64>,
    prefix: Vec<Element>,
    done: bool,
}

impl<'a, 'g> Elements<'a, 'g> {
    fn new(sub: &'a Subgroup<'g>) -> Self {
        let t = sub.reps.len();
        Elements {
            sub,
            counters: alloc::vec![0; t],
            prefix: alloc::vec![sub.group.identity(); t + 1],
            done: false,
        }
    }
}

impl Iterator for Elements<'_, '_> {
    type Item = Result<Element>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let t = self.counters.len();
        let current = self.prefix[t].clone();
        // advance
        let reps = &self.sub.reps;
        let mut i = t;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.counters[i] + 1 < reps[i].rel_order {
                self.counters[i] += 1;
                match self.sub.group.multiply(&self.prefix[i + 1], &reps[i].elem) {
                    Ok(x) => self.prefix[i + 1] = x,
                    Err(e) => {
                        self.done = true;
                        return Some(Err(e));
                    }
                }
                for l in i + 1..t {
                    self.counters[l] = 0;
                    self.prefix[l + 1] = self.prefix[i + 1].clone();
                }
                break;
            }
        }
        Some(Ok(current))
    }
}

/// A descending chain `S_0 ≥ S_1 ≥ … ≥ S_t` of subgroups of one ambient group.
#[derive(Debug, Clone)]
pub struct Chain<'g> {
    terms: Vec<Subgroup<'g>>,
}

impl<'g> Chain<'g> {
    /// Checks that each term contains the next.
    pub fn descending(terms: Vec<Subgroup<'g>>) -> Result<Self> {
        for (l, pair) in terms.windows(2).enumerate() {
            if !pair[1].leq(&pair[0])? {
                return Err(Error::Precondition(format!(
                    "chain is not nested at term {}",
                    l + 1
                )));
            }
        }
        Ok(Chain { terms })
    }

    /// Accepts `H_0 ≤ H_1 ≤ … ≤ H_t` and stores it descending.
    pub fn ascending(mut terms: Vec<Subgroup<'g>>) -> Result<Self> {
        terms.reverse();
        Self::descending(terms)
    }

    pub fn terms(&self) -> &[Subgroup<'g>] {
        &self.terms
    }

    /// Number of steps, one less than the number of terms.
    pub fn length(&self) -> usize {
        self.terms.len().saturating_sub(1)
    }
}
