//! Built-in presentations, each checked for consistency on construction.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::collector::Group;
use crate::consistency::ensure_consistent;
use crate::error::{Error, Result};
use crate::presentation::{PcPresentation, PresentationBuilder};
use crate::word::Word;

const LETTERS: &[&str] = &["a", "b", "c", "d", "e", "f", "g", "h"];

fn checked(pres: PcPresentation) -> Result<PcPresentation> {
    ensure_consistent(&Group::new(pres.clone()))?;
    Ok(pres)
}

fn odd_prime(p: u64) -> Result<()> {
    if p == 2 || !crate::arith::is_prime(p) {
        Err(Error::Precondition(format!("{p} is not an odd prime")))
    } else {
        Ok(())
    }
}

fn pow_word(g: usize, p: u64, k: u32) -> Result<Word> {
    let e = crate::arith::checked_pow(p, k)
        .and_then(|e| i64::try_from(e).ok())
        .ok_or_else(|| Error::InvalidPresentation(format!("{p}^{k} is too large")))?;
    Ok(Word::letter(g, e))
}

/// `⟨a, b, c | a^p = b^p = c^{p^2} = 1, [b,a] = c^p, c central⟩`, order `p^4`.
pub fn example1(p: u64) -> Result<PcPresentation> {
    odd_prime(p)?;
    let mut b = PresentationBuilder::new(p);
    let ga = b.generator("a", 1)?;
    let gb = b.generator("b", 1)?;
    let gc = b.generator("c", 2)?;
    b.commutator(gb, ga, pow_word(gc, p, 1)?)?;
    checked(b.build()?)
}

/// Orders `p^α, p^β, p^γ` for `a, b, c`, with `[a,b] = c^{p^δ}` and `c`
/// central. Consistent iff `γ ≤ δ + min(α, β)`.
pub fn family(p: u64, alpha: u32, beta: u32, gamma: u32, delta: u32) -> Result<PcPresentation> {
    let mut b = PresentationBuilder::new(p);
    let ga = b.generator("a", alpha)?;
    let gb = b.generator("b", beta)?;
    let gc = b.generator("c", gamma)?;
    b.commutator(ga, gb, pow_word(gc, p, delta)?)?;
    checked(b.build()?)
}

/// `family(2, 3, 3, 5, 2)`: order `2^11`, with a non-powerful `Ω_2(G^2)`.
pub fn example2() -> Result<PcPresentation> {
    family(2, 3, 3, 5, 2)
}

/// The same relations over an odd prime, order `p^11`.
pub fn example2_odd(p: u64) -> Result<PcPresentation> {
    odd_prime(p)?;
    family(p, 3, 3, 5, 2)
}

/// Direct product of cyclic groups of orders `p^{parts[k]}`.
pub fn abelian(p: u64, parts: &[u32]) -> Result<PcPresentation> {
    if parts.len() > LETTERS.len() {
        return Err(Error::Precondition(format!(
            "at most {} cyclic factors",
            LETTERS.len()
        )));
    }
    let mut b = PresentationBuilder::new(p);
    for (name, &m) in LETTERS.iter().zip(parts) {
        b.generator(name, m)?;
    }
    b.build()
}

/// Parameters of one corpus entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Spec {
    Example1 { p: u64 },
    Example2,
    Example2Odd { p: u64 },
    Abelian { p: u64, parts: Vec<u32> },
    Family { p: u64, alpha: u32, beta: u32, gamma: u32, delta: u32 },
}

impl Spec {
    pub fn build(&self) -> Result<PcPresentation> {
        match *self {
            Spec::Example1 { p } => example1(p),
            Spec::Example2 => example2(),
            Spec::Example2Odd { p } => example2_odd(p),
            Spec::Abelian { p, ref parts } => abelian(p, parts),
            Spec::Family {
                p,
                alpha,
                beta,
                gamma,
                delta,
            } => family(p, alpha, beta, gamma, delta),
        }
    }

    pub fn prime(&self) -> u64 {
        match *self {
            Spec::Example2 => 2,
            Spec::Example1 { p }
            | Spec::Example2Odd { p }
            | Spec::Abelian { p, .. }
            | Spec::Family { p, .. } => p,
        }
    }

    /// Stable identifier, such as `example1_p3` or `family_3_2_2_3_1`.
    pub fn name(&self) -> String {
        match self {
            Spec::Example1 { p } => format!("example1_p{p}"),
            Spec::Example2 => "example2".into(),
            Spec::Example2Odd { p } => format!("example2_odd_p{p}"),
            Spec::Abelian { p, parts } => {
                let parts: Vec<String> = parts.iter().map(|m| format!("{m}")).collect();
                format!("abelian_p{p}_{}", parts.join("_"))
            }
            Spec::Family {
                p,
                alpha,
                beta,
                gamma,
                delta,
            } => format!("family_{p}_{alpha}_{beta}_{gamma}_{delta}"),
        }
    }
}

/// The groups swept by the verification suite. Every entry is consistent,
/// powerful and small enough to enumerate under the default budget.
pub fn registry() -> Vec<Spec> {
    use Spec::*;
    alloc::vec![
        Example1 { p: 3 },
        Example1 { p: 5 },
        Example2,
        Example2Odd { p: 3 },
        Abelian { p: 2, parts: alloc::vec![1, 2] },
        Abelian { p: 2, parts: alloc::vec![3, 3, 5] },
        Abelian { p: 3, parts: alloc::vec![1] },
        Abelian { p: 3, parts: alloc::vec![2, 3] },
        Abelian { p: 5, parts: alloc::vec![2, 2] },
        Family { p: 2, alpha: 2, beta: 3, gamma: 4, delta: 2 },
        Family { p: 2, alpha: 2, beta: 2, gamma: 4, delta: 2 },
        Family { p: 3, alpha: 2, beta: 2, gamma: 3, delta: 1 },
        Family { p: 3, alpha: 2, beta: 3, gamma: 4, delta: 2 },
        Family { p: 5, alpha: 1, beta: 1, gamma: 2, delta: 1 },
        Family { p: 5, alpha: 2, beta: 2, gamma: 3, delta: 1 },
    ]
}

/// Looks up a registry entry by [`Spec::name`].
pub fn lookup(name: &str) -> Option<Spec> {
    registry().into_iter().find(|s| s.name() == name)
}
