//! Weighted power-commutator presentations: data model, text format and
//! structural validation.
//!
//! Generators `g_1, …, g_n` have relative orders `p^{m_i}`. Power relations
//! read `g_i^{p^{m_i}} = R_i` with `R_i` a word in `g_{i+1}, …, g_n`, and
//! commutator relations read `[g_j, g_i] = C_{ji}` for `j > i` with `C_{ji}` a
//! word in `g_{j+1}, …, g_n`. Omitted relations are trivial. Throughout,
//! `[x, y] = x^-1 y^-1 x y`, so `g_j g_i = g_i g_j C_{ji}`.
//!
//! The text format is line oriented, with `#` starting a comment:
//!
//! ```text
//! p = 3
//! gens a b c
//! orders a:3 b:3 c:9
//! rel [b,a] = c^3
//! ```

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith;
use crate::collector::{Group, Limits};
use crate::error::{Error, Result};
use crate::word::{split_identifier, Word};

/// A structurally valid power-commutator presentation. Relation words are
/// stored collected: strictly increasing generator indices and exponents in
/// `[1, p^{m_k})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PcPresentation {
    prime: u32,
    names: Vec<String>,
    exponents: Vec<u32>,
    power: Vec<Word>,
    // comm[j][i] holds C_{ji} for i < j.
    comm: Vec<Vec<Word>>,
}

impl PcPresentation {
    pub fn parse(text: &str) -> Result<Self> {
        parse(text)
    }

    pub fn prime(&self) -> u32 {
        self.prime
    }

    /// Number of generators.
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// `m_i`, where `p^{m_i}` is the relative order of generator `i`.
    pub fn exponent(&self, i: usize) -> u32 {
        self.exponents[i]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn relative_order(&self, i: usize) -> u64 {
        (self.prime as u64).pow(self.exponents[i])
    }

    pub fn power_relation(&self, i: usize) -> &Word {
        &self.power[i]
    }

    /// `C_{ji}` with `[g_j, g_i] = C_{ji}`; requires `j > i`.
    pub fn commutator_relation(&self, j: usize, i: usize) -> &Word {
        assert!(j > i, "commutator relations are indexed by (higher, lower)");
        &self.comm[j][i]
    }

    /// `Σ m_i`, the logarithm of the candidate order.
    pub fn order_log(&self) -> u32 {
        self.exponents.iter().sum()
    }

    /// `p^{Σ m_i}`; the true group order when the presentation is consistent.
    pub fn candidate_order(&self) -> u64 {
        (self.prime as u64).pow(self.order_log())
    }

    /// Renders the presentation in the text format accepted by [`parse`].
    pub fn render(&self) -> String {
        let mut out = format!("p = {}\ngens", self.prime);
        for name in &self.names {
            out.push(' ');
            out.push_str(name);
        }
        out.push_str("\norders");
        for (i, name) in self.names.iter().enumerate() {
            out.push_str(&format!(" {}:{}", name, self.relative_order(i)));
        }
        out.push('\n');
        for (i, word) in self.power.iter().enumerate() {
            if !word.is_identity() {
                out.push_str(&format!(
                    "rel {}^{} = {}\n",
                    self.names[i],
                    self.relative_order(i),
                    word.display(&self.names)
                ));
            }
        }
        for (j, row) in self.comm.iter().enumerate() {
            for (i, word) in row.iter().enumerate() {
                if !word.is_identity() {
                    out.push_str(&format!(
                        "rel [{},{}] = {}\n",
                        self.names[j],
                        self.names[i],
                        word.display(&self.names)
                    ));
                }
            }
        }
        out
    }
}

impl fmt::Display for PcPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Incremental construction of a [`PcPresentation`].
///
/// Relation words may be given in any form that respects the index
/// restriction; [`build`](Self::build) collects them. A commutator given as
/// `[g_i, g_j]` with `i < j` is stored as the inverse of its collected value.
#[derive(Debug, Clone)]
pub struct PresentationBuilder {
    prime: u64,
    names: Vec<String>,
    exponents: Vec<u32>,
    power: Vec<Option<Word>>,
    comm: BTreeMap<(usize, usize), (Word, bool)>,
}

impl PresentationBuilder {
    pub fn new(prime: u64) -> Self {
        PresentationBuilder {
            prime,
            names: Vec::new(),
            exponents: Vec::new(),
            power: Vec::new(),
            comm: BTreeMap::new(),
        }
    }

    /// Adds a generator of relative order `p^exponent`, returning its index.
    pub fn generator(&mut self, name: &str, exponent: u32) -> Result<usize> {
        if self.names.iter().any(|n| n == name) {
            return Err(Error::InvalidPresentation(format!(
                "generator `{name}` declared twice"
            )));
        }
        if exponent == 0 {
            return Err(Error::InvalidPresentation(format!(
                "generator `{name}` must have order at least p"
            )));
        }
        self.names.push(name.to_string());
        self.exponents.push(exponent);
        self.power.push(None);
        Ok(self.names.len() - 1)
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Sets `g^{p^{m_g}} = rhs`.
    pub fn power(&mut self, g: usize, rhs: Word) -> Result<()> {
        self.check_index(g)?;
        let label = format!("{}^p^{}", self.names[g], self.exponents[g]);
        self.check_restriction(&label, g, &rhs)?;
        if self.power[g].is_some() {
            return Err(Error::DuplicateRelation(self.names[g].clone()));
        }
        self.power[g] = Some(rhs);
        Ok(())
    }

    /// Sets `[g_x, g_y] = rhs`, in either order of `x` and `y`.
    pub fn commutator(&mut self, x: usize, y: usize, rhs: Word) -> Result<()> {
        self.check_index(x)?;
        self.check_index(y)?;
        let label = format!("[{},{}]", self.names[x], self.names[y]);
        if x == y {
            return Err(Error::InvalidPresentation(format!(
                "{label} relates a generator to itself"
            )));
        }
        let (high, low, flipped) = if x > y { (x, y, false) } else { (y, x, true) };
        self.check_restriction(&label, high, &rhs)?;
        if self.comm.contains_key(&(high, low)) {
            return Err(Error::DuplicateRelation(label));
        }
        self.comm.insert((high, low), (rhs, flipped));
        Ok(())
    }

    fn check_index(&self, g: usize) -> Result<()> {
        if g < self.names.len() {
            Ok(())
        } else {
            Err(Error::InvalidPresentation(format!("no generator with index {g}")))
        }
    }

    fn check_restriction(&self, label: &str, bound: usize, rhs: &Word) -> Result<()> {
        for &(g, e) in rhs.letters() {
            if e == 0 {
                continue;
            }
            self.check_index(g)?;
            if g <= bound {
                return Err(Error::IndexRestriction {
                    relation: label.to_string(),
                    bound: self.names[bound].clone(),
                    found: self.names[g].clone(),
                });
            }
        }
        Ok(())
    }

    /// Validates the presentation and collects every relation word.
    pub fn build(self) -> Result<PcPresentation> {
        let p = self.prime;
        if !arith::is_prime(p) || p > u32::MAX as u64 {
            return Err(Error::NotPrime(p));
        }
        for (name, &m) in self.names.iter().zip(&self.exponents) {
            if arith::checked_pow(p, m).is_none_or(|r| r > u32::MAX as u64) {
                return Err(Error::InvalidPresentation(format!(
                    "relative order of `{name}` is too large"
                )));
            }
        }
        let total: u32 = self.exponents.iter().sum();
        if arith::checked_pow(p, total).is_none() {
            return Err(Error::InvalidPresentation(
                "candidate order does not fit in 64 bits".into(),
            ));
        }

        let n = self.names.len();
        let mut pres = PcPresentation {
            prime: p as u32,
            names: self.names,
            exponents: self.exponents,
            power: vec![Word::identity(); n],
            comm: (0..n).map(|j| vec![Word::identity(); j]).collect(),
        };
        // Relations for index t only involve generators above t, whose own
        // relations are already collected when t is processed in descending
        // order.
        for t in (0..n).rev() {
            let group = Group::plain(pres.clone(), Limits::default());
            if let Some(raw) = &self.power[t] {
                let x = group.normal_form(raw)?;
                pres.power[t] = group.word_of(&x);
            }
            for i in 0..t {
                if let Some((raw, flipped)) = self.comm.get(&(t, i)) {
                    let mut x = group.normal_form(raw)?;
                    if *flipped {
                        x = group.inverse(&x)?;
                    }
                    pres.comm[t][i] = group.word_of(&x);
                }
            }
        }
        Ok(pres)
    }
}

/// Parses the presentation text format.
pub fn parse(text: &str) -> Result<PcPresentation> {
    let mut prime: Option<(u64, usize)> = None;
    let mut names: Option<Vec<String>> = None;
    let mut orders: Option<(Vec<u32>, usize)> = None;
    // (line, lhs column, lhs, rhs column, rhs)
    let mut rels: Vec<(usize, usize, String, usize, String)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let indent = content.len() - content.trim_start().len();
        let body = content.trim();
        if body.is_empty() {
            continue;
        }
        let col = |offset: usize| column(raw, offset);
        let syntax = |offset: usize, msg: String| Error::Syntax(msg).at(line, col(offset));

        let (keyword, rest) = split_identifier(body)
            .ok_or_else(|| syntax(indent, "expected a directive".into()))?;
        let rest_offset = indent + keyword.len();
        match keyword {
            "p" => {
                let rest = rest.trim_start();
                let value = rest
                    .strip_prefix('=')
                    .ok_or_else(|| syntax(rest_offset, "expected `=` after `p`".into()))?
                    .trim();
                let value: u64 = value
                    .parse()
                    .map_err(|_| syntax(rest_offset, format!("invalid prime `{value}`")))?;
                if prime.is_some() {
                    return Err(syntax(indent, "`p` declared twice".into()));
                }
                if !arith::is_prime(value) {
                    return Err(Error::NotPrime(value).at(line, col(indent)));
                }
                prime = Some((value, line));
            }
            "gens" => {
                if names.is_some() {
                    return Err(syntax(indent, "`gens` declared twice".into()));
                }
                let mut list = Vec::new();
                for token in rest.split_whitespace() {
                    let offset = token.as_ptr() as usize - raw.as_ptr() as usize;
                    match split_identifier(token) {
                        Some((name, "")) => {
                            if list.iter().any(|n: &String| n == name) {
                                return Err(Error::InvalidPresentation(format!(
                                    "generator `{name}` declared twice"
                                ))
                                .at(line, col(offset)));
                            }
                            list.push(name.to_string());
                        }
                        _ => return Err(syntax(offset, format!("invalid generator name `{token}`"))),
                    }
                }
                names = Some(list);
            }
            "orders" => {
                let (p, _) = prime.ok_or_else(|| syntax(indent, "`p` must precede `orders`".into()))?;
                let gens = names
                    .as_ref()
                    .ok_or_else(|| syntax(indent, "`gens` must precede `orders`".into()))?;
                if orders.is_some() {
                    return Err(syntax(indent, "`orders` declared twice".into()));
                }
                let mut exps: Vec<Option<u32>> = vec![None; gens.len()];
                for token in rest.split_whitespace() {
                    let offset = token.as_ptr() as usize - raw.as_ptr() as usize;
                    let (name, value) = token
                        .split_once(':')
                        .ok_or_else(|| syntax(offset, format!("expected `name:order`, found `{token}`")))?;
                    let g = gens
                        .iter()
                        .position(|n| n == name)
                        .ok_or_else(|| Error::UnknownGenerator(name.to_string()).at(line, col(offset)))?;
                    let value: u64 = value
                        .parse()
                        .map_err(|_| syntax(offset, format!("invalid order `{value}`")))?;
                    let m = arith::log_exact(value, p).filter(|&m| m >= 1).ok_or_else(|| {
                        Error::InvalidPresentation(format!(
                            "order {value} of `{name}` is not a positive power of {p}"
                        ))
                        .at(line, col(offset))
                    })?;
                    if exps[g].replace(m).is_some() {
                        return Err(syntax(offset, format!("order of `{name}` given twice")));
                    }
                }
                let mut list = Vec::with_capacity(exps.len());
                for (g, m) in exps.into_iter().enumerate() {
                    list.push(m.ok_or_else(|| {
                        Error::InvalidPresentation(format!("no order given for `{}`", gens[g]))
                            .at(line, col(indent))
                    })?);
                }
                orders = Some((list, line));
            }
            "rel" => {
                let (lhs, rhs) = rest
                    .split_once('=')
                    .ok_or_else(|| syntax(rest_offset, "expected `=` in relation".into()))?;
                let lhs_offset = rest_offset + (lhs.len() - lhs.trim_start().len());
                let rhs_offset = rest_offset + lhs.len() + 1;
                rels.push((
                    line,
                    lhs_offset,
                    lhs.trim().to_string(),
                    rhs_offset,
                    rhs.to_string(),
                ));
            }
            other => return Err(syntax(indent, format!("unknown directive `{other}`"))),
        }
    }

    let (p, _) = prime.ok_or_else(|| Error::Syntax("missing `p = ...` line".into()).at(0, 0))?;
    let gens = names.ok_or_else(|| Error::Syntax("missing `gens` line".into()).at(0, 0))?;
    let (exps, _) = match orders {
        Some(o) => o,
        None if gens.is_empty() => (Vec::new(), 0),
        None => return Err(Error::Syntax("missing `orders` line".into()).at(0, 0)),
    };

    let mut builder = PresentationBuilder::new(p);
    for (name, &m) in gens.iter().zip(&exps) {
        builder.generator(name, m)?;
    }
    for (line, lhs_offset, lhs, rhs_offset, rhs) in rels {
        let raw = text.lines().nth(line - 1).unwrap_or("");
        let rhs_word = Word::parse(&rhs, &gens, false).map_err(|e| relocate(e, line, column(raw, rhs_offset)))?;
        let at = |e: Error| e.at(line, column(raw, lhs_offset));
        if let Some(inner) = lhs.strip_prefix('[') {
            let inner = inner
                .strip_suffix(']')
                .ok_or_else(|| at(Error::Syntax("expected `]`".into())))?;
            let (x, y) = inner
                .split_once(',')
                .ok_or_else(|| at(Error::Syntax("expected `[x,y]`".into())))?;
            let x = builder.index(x.trim()).map_err(at)?;
            let y = builder.index(y.trim()).map_err(at)?;
            builder.commutator(x, y, rhs_word).map_err(at)?;
        } else {
            let (name, tail) = split_identifier(&lhs)
                .ok_or_else(|| at(Error::Syntax(format!("invalid left-hand side `{lhs}`"))))?;
            let g = builder.index(name).map_err(at)?;
            let value: u64 = tail
                .trim_start()
                .strip_prefix('^')
                .and_then(|v| v.trim().parse().ok())
                .ok_or_else(|| at(Error::Syntax(format!("expected `{name}^<order>`"))))?;
            let expected = p.pow(exps[g]);
            if value != expected {
                return Err(at(Error::InvalidPresentation(format!(
                    "power relation {name}^{value} does not match the declared order {expected}"
                ))));
            }
            builder.power(g, rhs_word).map_err(at)?;
        }
    }
    builder.build()
}

/// One-based character column of byte `offset` within `line`.
fn column(line: &str, offset: usize) -> usize {
    line[..offset.min(line.len())].chars().count() + 1
}

fn relocate(err: Error, line: usize, base: usize) -> Error {
    match err {
        Error::Located { column, inner, .. } => Error::Located {
            line,
            column: base + column - 1,
            inner,
        },
        other => other.at(line, base),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE1_P3: &str = "\
p = 3
gens a b c
orders a:3 b:3 c:9        # absolute orders
rel a^3 = 1
rel [b,a] = c^3
rel [c,b] = 1
";

    #[test]
    fn parses_example_one() {
        let pres = parse(EXAMPLE1_P3).unwrap();
        assert_eq!(pres.prime(), 3);
        assert_eq!(pres.len(), 3);
        assert_eq!(pres.exponents(), &[1, 1, 2]);
        assert_eq!(pres.commutator_relation(1, 0).letters(), &[(2, 3)]);
        assert!(pres.commutator_relation(2, 0).is_identity());
        assert!(pres.power_relation(0).is_identity());
        assert_eq!(pres.candidate_order(), 81);
    }

    #[test]
    fn cyclic_group_of_order_p() {
        let pres = parse("p = 5\ngens x\norders x:5\n").unwrap();
        assert_eq!(pres.len(), 1);
        assert_eq!(pres.candidate_order(), 5);
    }

    #[test]
    fn rejects_index_restriction_violation() {
        let text = EXAMPLE1_P3.replace("rel [b,a] = c^3", "rel [b,a] = b^2");
        let err = parse(&text).unwrap_err();
        assert!(matches!(err.kind(), Error::IndexRestriction { .. }), "{err:?}");
        assert!(matches!(err, Error::Located { line: 5, .. }));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(parse("p = 4\ngens a\norders a:4\n").unwrap_err().kind(), &Error::NotPrime(4));
        let dup = format!("{EXAMPLE1_P3}rel [a,b] = c^6\n");
        assert!(matches!(parse(&dup).unwrap_err().kind(), Error::DuplicateRelation(_)));
        let unknown = format!("{EXAMPLE1_P3}rel [c,a] = d\n");
        assert_eq!(
            parse(&unknown).unwrap_err().kind(),
            &Error::UnknownGenerator("d".into())
        );
        let syntax = parse("p = 3\ngens a b\norders a:3 b:3\nrel [b,a] c\n").unwrap_err();
        assert!(matches!(syntax, Error::Located { line: 4, .. }));
        assert!(parse("p = 3\ngens a\norders a:6\n").is_err());
        assert!(parse("p = 3\ngens a b\norders a:3\n").is_err());
        assert!(parse("p = 3\ngens a b\norders a:3 b:3\nrel a^9 = b\n").is_err());
    }

    #[test]
    fn lower_first_commutators_are_inverted() {
        // [a,b] = c^4 with c of order 32 means [b,a] = c^28.
        let pres = parse("p = 2\ngens a b c\norders a:8 b:8 c:32\nrel [a,b] = c^4\n").unwrap();
        assert_eq!(pres.commutator_relation(1, 0).letters(), &[(2, 28)]);
    }

    #[test]
    fn render_round_trips() {
        let pres = parse(EXAMPLE1_P3).unwrap();
        assert_eq!(parse(&pres.render()).unwrap(), pres);
    }
}
