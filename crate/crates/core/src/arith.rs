//! Small integer helpers.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `p^k`, or `None` on overflow.
pub fn checked_pow(p: u64, k: u32) -> Option<u64> {
    p.checked_pow(k)
}

/// Largest `v` with `p^v | x`; `x` must be nonzero.
pub fn valuation(mut x: u64, p: u64) -> u32 {
    debug_assert!(x != 0);
    let mut v = 0;
    while x.is_multiple_of(p) {
        x /= p;
        v += 1;
    }
    v
}

/// If `n = p^k` with `k ≥ 0`, returns `k`.
pub fn log_exact(n: u64, p: u64) -> Option<u32> {
    if n == 0 {
        return None;
    }
    let v = valuation(n, p);
    (p.checked_pow(v) == Some(n)).then_some(v)
}

/// Inverse of `a` modulo `m`, for `gcd(a, m) = 1` and `m ≥ 1`.
pub fn mod_inverse(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1, "{a} is not invertible modulo {m}");
    old_s.rem_euclid(m as i128) as u64
}
