//! Element arithmetic by collection from the left.
//!
//! A [`Group`] wraps a presentation together with the lookup tables the
//! collector needs. Elements are exponent vectors `(x_1, …, x_n)` with
//! `0 ≤ x_i < p^{m_i}`, standing for the collected word
//! `g_1^{x_1} ⋯ g_n^{x_n}`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::sync::atomic::{AtomicU32, Ordering};

use crate::error::{Error, Result};
use crate::presentation::PcPresentation;
use crate::word::Word;

static NEXT_GROUP_ID: AtomicU32 = AtomicU32::new(1);

/// Resource budgets. Exceeding either one is an error, never a silent
/// approximation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Collection steps allowed per collection call.
    pub max_steps: u64,
    /// Elements a subgroup may have before enumeration refuses to run.
    pub max_elements: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_steps: 10_000_000,
            max_elements: 1 << 20,
        }
    }
}

/// A group element in collected normal form, tagged with the group it
/// belongs to.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    group: u32,
    exps: Vec<u32>,
}

impl Element {
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn into_exponents(self) -> Vec<u32> {
        self.exps
    }

    pub fn is_identity(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Index of the first nonzero exponent, or `None` for the identity.
    pub fn depth(&self) -> Option<usize> {
        self.exps.iter().position(|&e| e != 0)
    }

    /// Exponent at the depth of the element (0 for the identity).
    pub fn leading_exponent(&self) -> u32 {
        self.depth().map_or(0, |d| self.exps[d])
    }
}

type Piece = (u32, u64);

#[derive(Debug, Clone)]
pub struct Group {
    id: u32,
    pres: PcPresentation,
    limits: Limits,
    rel_order: Vec<u64>,
    power: Vec<Vec<Piece>>,
    // conj[l][g] for g < l: collected word of g_l^{g_g} = g_l C_{lg}, or None
    // when the two generators commute.
    conj: Vec<Vec<Option<Vec<Piece>>>>,
    // powconj[l][g][(k-1)(r_l-1) + (e-1)]: collected (g_l^e)^{g_g^k}, when
    // the table for the pair is small enough to keep
    powconj: Vec<Vec<Option<Vec<Vec<Piece>>>>>,
    radix: Vec<u64>,
}

/// Largest `r_l · r_g` for which the conjugates of `g_l^e` by `g_g^k` are
/// tabulated.
const POWCONJ_LIMIT: u64 = 1 << 16;

impl Group {
    pub fn new(pres: PcPresentation) -> Self {
        Self::with_limits(pres, Limits::default())
    }

    pub fn with_limits(pres: PcPresentation, limits: Limits) -> Self {
        let mut group = Self::plain(pres, limits);
        group.powconj = group.power_conjugates();
        group
    }

    /// Tables for moving `g^k` across a tail in one step. Built with plain
    /// one-at-a-time collection, so they agree with it exactly.
    fn power_conjugates(&self) -> Vec<Vec<Option<Vec<Vec<Piece>>>>> {
        let n = self.len();
        (0..n)
            .map(|l| {
                (0..l)
                    .map(|g| {
                        self.conj[l][g].as_ref()?;
                        let (rl, rg) = (self.rel_order[l], self.rel_order[g]);
                        if rl * rg > POWCONJ_LIMIT {
                            return None;
                        }
                        let gl = self.generator(l);
                        let gg = self.generator(g);
                        let gg_inv = self.inverse(&gg).ok()?;
                        let mut table = Vec::with_capacity(((rg - 1) * (rl - 1)) as usize);
                        let mut by = gg.clone();
                        let mut by_inv = gg_inv.clone();
                        for _ in 1..rg {
                            let mut x = gl.clone();
                            for _ in 1..rl {
                                let c = self.multiply(&self.multiply(&by_inv, &x).ok()?, &by).ok()?;
                                table.push(
                                    c.exps
                                        .iter()
                                        .enumerate()
                                        .filter(|&(_, &e)| e != 0)
                                        .map(|(i, &e)| (i as u32, e as u64))
                                        .collect(),
                                );
                                x = self.multiply(&x, &gl).ok()?;
                            }
                            by = self.multiply(&by, &gg).ok()?;
                            by_inv = self.multiply(&by_inv, &gg_inv).ok()?;
                        }
                        Some(table)
                    })
                    .collect()
            })
            .collect()
    }

    /// A group that collects one generator at a time, without the
    /// power-conjugate tables.
    pub(crate) fn plain(pres: PcPresentation, limits: Limits) -> Self {
        let n = pres.len();
        let rel_order: Vec<u64> = (0..n).map(|i| pres.relative_order(i)).collect();
        let pieces = |w: &Word| -> Vec<Piece> {
            w.letters()
                .iter()
                .map(|&(g, e)| (g as u32, e as u64))
                .collect()
        };
        let power = (0..n).map(|i| pieces(pres.power_relation(i))).collect();
        let conj = (0..n)
            .map(|l| {
                (0..l)
                    .map(|g| {
                        let c = pres.commutator_relation(l, g);
                        (!c.is_identity()).then(|| {
                            let mut w = vec![(l as u32, 1)];
                            w.extend(pieces(c));
                            w
                        })
                    })
                    .collect()
            })
            .collect();
        let mut radix = vec![1u64; n];
        for i in (0..n.saturating_sub(1)).rev() {
            radix[i] = radix[i + 1] * rel_order[i + 1];
        }
        Group {
            id: NEXT_GROUP_ID.fetch_add(1, Ordering::Relaxed),
            pres,
            limits,
            rel_order,
            power,
            conj,
            powconj: vec![vec![]; n],
            radix,
        }
    }

    pub fn presentation(&self) -> &PcPresentation {
        &self.pres
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn prime(&self) -> u32 {
        self.pres.prime()
    }

    /// Number of generators of the presentation.
    pub fn len(&self) -> usize {
        self.pres.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pres.is_empty()
    }

    pub fn relative_order(&self, i: usize) -> u64 {
        self.rel_order[i]
    }

    /// Candidate order `p^{Σ m_i}`.
    pub fn order(&self) -> u64 {
        self.pres.candidate_order()
    }

    pub fn order_log(&self) -> u32 {
        self.pres.order_log()
    }

    pub fn identity(&self) -> Element {
        Element {
            group: self.id,
            exps: vec![0; self.len()],
        }
    }

    pub fn generator(&self, i: usize) -> Element {
        let mut x = self.identity();
        x.exps[i] = 1;
        x
    }

    pub fn generators(&self) -> Vec<Element> {
        (0..self.len()).map(|i| self.generator(i)).collect()
    }

    /// Builds an element from an exponent vector already in normal form.
    pub fn element(&self, exps: &[u32]) -> Result<Element> {
        if exps.len() != self.len()
            || exps.iter().zip(&self.rel_order).any(|(&e, &r)| e as u64 >= r)
        {
            return Err(Error::MixedPresentations);
        }
        Ok(Element {
            group: self.id,
            exps: exps.to_vec(),
        })
    }

    pub(crate) fn owns(&self, x: &Element) -> Result<()> {
        if x.group == self.id {
            Ok(())
        } else {
            Err(Error::MixedPresentations)
        }
    }

    pub(crate) fn same_group(&self, other: &Group) -> bool {
        self.id == other.id
    }

    /// Position of `x` in the mixed-radix enumeration of normal forms.
    pub fn index_of(&self, x: &Element) -> u64 {
        x.exps.iter().zip(&self.radix).map(|(&e, &w)| e as u64 * w).sum()
    }

    pub fn element_at(&self, mut index: u64) -> Element {
        let mut x = self.identity();
        for i in 0..self.len() {
            x.exps[i] = (index / self.radix[i]) as u32;
            index %= self.radix[i];
        }
        x
    }

    /// The collected word of `x`.
    pub fn word_of(&self, x: &Element) -> Word {
        let mut w = Word::identity();
        for (g, &e) in x.exps.iter().enumerate() {
            w.push(g, e as i64);
        }
        w
    }

    /// `x` written as `a^1*b^2*…`, or `1` for the identity.
    pub fn format(&self, x: &Element) -> String {
        self.word_of(x).display(self.pres.names())
    }

    /// Collects an arbitrary word. Negative exponents are resolved through
    /// the collected inverse of the generator, so the collector itself only
    /// ever sees positive exponents.
    pub fn normal_form(&self, w: &Word) -> Result<Element> {
        let mut x = self.identity();
        for &(g, e) in w.letters() {
            if g >= self.len() {
                return Err(Error::Precondition(alloc::format!(
                    "word uses generator index {g}, but the presentation has {}",
                    self.len()
                )));
            }
            if e == 0 {
                continue;
            }
            let base = if e > 0 {
                self.generator(g)
            } else {
                self.inverse(&self.generator(g))?
            };
            let factor = self.power(&base, e.unsigned_abs())?;
            x = self.multiply(&x, &factor)?;
        }
        Ok(x)
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element> {
        self.owns(x)?;
        self.owns(y)?;
        let mut exps = x.exps.clone();
        let mut stack: Vec<Piece> = Vec::with_capacity(4 * self.len());
        for (g, &e) in y.exps.iter().enumerate().rev() {
            if e != 0 {
                stack.push((g as u32, e as u64));
            }
        }
        self.collect(&mut exps, &mut stack)?;
        Ok(Element {
            group: self.id,
            exps,
        })
    }

    /// Inverse, obtained by solving `x · z = 1` one generator at a time; the
    /// exponents chosen along the way are already the normal form of `z`.
    pub fn inverse(&self, x: &Element) -> Result<Element> {
        self.owns(x)?;
        let mut w = x.exps.clone();
        let mut z = vec![0u32; self.len()];
        let mut stack = Vec::new();
        for i in 0..self.len() {
            if w[i] != 0 {
                let t = self.rel_order[i] - w[i] as u64;
                z[i] = t as u32;
                stack.push((i as u32, t));
                self.collect(&mut w, &mut stack)?;
            }
        }
        Ok(Element {
            group: self.id,
            exps: z,
        })
    }

    /// `x^k` by square-and-multiply.
    pub fn power(&self, x: &Element, mut k: u64) -> Result<Element> {
        self.owns(x)?;
        let mut result = self.identity();
        let mut base = x.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = self.multiply(&result, &base)?;
            }
            k >>= 1;
            if k > 0 {
                base = self.multiply(&base, &base)?;
            }
        }
        Ok(result)
    }

    /// `x^k` for any integer `k`.
    pub fn power_signed(&self, x: &Element, k: i64) -> Result<Element> {
        if k >= 0 {
            self.power(x, k as u64)
        } else {
            let inv = self.inverse(x)?;
            self.power(&inv, k.unsigned_abs())
        }
    }

    /// `[x, y] = x^-1 y^-1 x y`, computed as `(yx)^-1 (xy)`.
    pub fn commutator(&self, x: &Element, y: &Element) -> Result<Element> {
        let xy = self.multiply(x, y)?;
        let yx = self.multiply(y, x)?;
        let yx_inv = self.inverse(&yx)?;
        self.multiply(&yx_inv, &xy)
    }

    /// `y^-1 x y`.
    pub fn conjugate(&self, x: &Element, y: &Element) -> Result<Element> {
        let xy = self.multiply(x, y)?;
        let y_inv = self.inverse(y)?;
        self.multiply(&y_inv, &xy)
    }

    /// `k` with `o(x) = p^k`, by repeated `p`-th powering.
    pub fn order_log_of(&self, x: &Element) -> Result<u32> {
        self.owns(x)?;
        let p = self.prime() as u64;
        let mut y = x.clone();
        let mut k = 0;
        while !y.is_identity() {
            y = self.power(&y, p)?;
            k += 1;
        }
        Ok(k)
    }

    /// Element order, always a power of `p`.
    pub fn order_of(&self, x: &Element) -> Result<u64> {
        Ok((self.prime() as u64).pow(self.order_log_of(x)?))
    }

    /// Multiplies the collected word `exps` on the right by the pieces on
    /// `stack` (the top of the stack is multiplied first).
    fn collect(&self, exps: &mut [u32], stack: &mut Vec<Piece>) -> Result<()> {
        let n = exps.len();
        let mut steps = 0u64;
        while let Some((g, count)) = stack.pop() {
            steps += 1;
            if steps > self.limits.max_steps {
                return Err(Error::StepLimit(self.limits.max_steps));
            }
            if count == 0 {
                continue;
            }
            let g = g as usize;
            let blocked = (g + 1..n).any(|l| exps[l] != 0 && self.conj[l][g].is_some());
            if !blocked {
                // The tail commutes with g, hence with g^{p^m} = R_g, so any
                // overflow can be multiplied in at the right end.
                let r = self.rel_order[g];
                let total = exps[g] as u64 + count;
                exps[g] = (total % r) as u32;
                for _ in 0..total / r {
                    push_word(stack, &self.power[g]);
                }
                continue;
            }
            let r = self.rel_order[g];
            if count >= r {
                for _ in 0..count / r {
                    push_word(stack, &self.power[g]);
                }
                stack.push((g as u32, count % r));
                continue;
            }
            let tabulated = (g + 1..n).all(|l| {
                exps[l] == 0 || self.conj[l][g].is_none() || self.powconj[l].get(g).is_some_and(Option::is_some)
            });
            // w g^k = u g^{e+k} v^{g^k} with v the tail after position g.
            let k = if tabulated { count } else { 1 };
            if count > k {
                stack.push((g as u32, count - k));
            }
            for l in (g + 1..n).rev() {
                let e = exps[l];
                if e == 0 {
                    continue;
                }
                exps[l] = 0;
                match (&self.conj[l][g], tabulated) {
                    (None, _) => stack.push((l as u32, e as u64)),
                    (Some(_), true) => {
                        let table = self.powconj[l][g].as_ref().expect("checked above");
                        let rl = self.rel_order[l];
                        push_word(stack, &table[((k - 1) * (rl - 1) + (e as u64 - 1)) as usize]);
                    }
                    (Some(word), false) => {
                        for _ in 0..e {
                            push_word(stack, word);
                        }
                    }
                }
            }
            let total = exps[g] as u64 + k;
            exps[g] = (total % r) as u32;
            if total >= r {
                push_word(stack, &self.power[g]);
            }
        }
        Ok(())
    }
}

fn push_word(stack: &mut Vec<Piece>, word: &[Piece]) {
    stack.extend(word.iter().rev().copied());
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::parse;

    fn example1() -> Group {
        Group::new(parse("p = 3\ngens a b c\norders a:3 b:3 c:9\nrel [b,a] = c^3\n").unwrap())
    }

    fn example2() -> Group {
        Group::new(parse("p = 2\ngens a b c\norders a:8 b:8 c:32\nrel [a,b] = c^4\n").unwrap())
    }

    fn word(g: &Group, text: &str) -> Element {
        let w = Word::parse(text, g.presentation().names(), true).unwrap();
        g.normal_form(&w).unwrap()
    }

    #[test]
    fn collects_b_times_a() {
        let g = example1();
        assert_eq!(word(&g, "b*a").exponents(), &[1, 1, 3]);
        assert!(word(&g, "1").is_identity());
    }

    #[test]
    fn power_relation_wraps() {
        let g = example2();
        assert_eq!(word(&g, "a^9").exponents(), &[1, 0, 0]);
        assert_eq!(word(&g, "c^-1").exponents(), &[0, 0, 31]);
    }

    #[test]
    fn example_two_commutators() {
        let g = example2();
        let (a, b) = (g.generator(0), g.generator(1));
        assert_eq!(g.commutator(&a, &b).unwrap().exponents(), &[0, 0, 4]);
        let a2 = g.power(&a, 2).unwrap();
        let b2 = g.power(&b, 2).unwrap();
        assert_eq!(g.commutator(&a2, &b2).unwrap().exponents(), &[0, 0, 16]);
        let lhs = g.multiply(&a2, &b2).unwrap();
        let rhs = g.inverse(&g.multiply(&b2, &a2).unwrap()).unwrap();
        assert_eq!(g.multiply(&lhs, &rhs).unwrap().exponents(), &[0, 0, 16]);
    }

    #[test]
    fn orders() {
        let g = example2();
        assert_eq!(g.order_of(&g.identity()).unwrap(), 1);
        assert_eq!(g.order_of(&word(&g, "c^4")).unwrap(), 8);
        let g1 = example1();
        assert_eq!(g1.order_of(&g1.generator(0)).unwrap(), 3);
        let c3 = g1.power(&g1.generator(2), 3).unwrap();
        assert_eq!(c3.exponents(), &[0, 0, 3]);
        assert!(g1.power(&c3, 3).unwrap().is_identity());
    }

    #[test]
    fn inverse_and_self_commutator() {
        let g = example2();
        for idx in (0..g.order()).step_by(37) {
            let x = g.element_at(idx);
            assert!(g.multiply(&x, &g.inverse(&x).unwrap()).unwrap().is_identity());
            assert!(g.commutator(&x, &x).unwrap().is_identity());
            assert_eq!(g.index_of(&x), idx);
        }
    }

    #[test]
    fn tabulated_collection_agrees_with_plain() {
        for g in [example1(), example2()] {
            let plain = Group::plain(g.presentation().clone(), g.limits());
            for i in (0..g.order()).step_by(7) {
                for j in (0..g.order()).step_by(13) {
                    let (x, y) = (g.element_at(i), g.element_at(j));
                    let (px, py) = (plain.element_at(i), plain.element_at(j));
                    assert_eq!(
                        g.multiply(&x, &y).unwrap().exponents(),
                        plain.multiply(&px, &py).unwrap().exponents()
                    );
                }
            }
        }
    }

    #[test]
    fn rejects_foreign_elements() {
        let g = example1();
        let h = example1();
        assert_eq!(
            g.multiply(&g.generator(0), &h.generator(0)),
            Err(Error::MixedPresentations)
        );
        assert!(g.element(&[0, 0, 9]).is_err());
    }

    #[test]
    fn step_budget_is_enforced() {
        let pres = parse("p = 2\ngens a b c\norders a:8 b:8 c:32\nrel [a,b] = c^4\n").unwrap();
        let g = Group::with_limits(pres, Limits { max_steps: 3, max_elements: 16 });
        let x = g.element(&[0, 7, 0]).unwrap();
        let y = g.element(&[7, 0, 0]).unwrap();
        assert_eq!(g.multiply(&x, &y), Err(Error::StepLimit(3)));
    }
}
