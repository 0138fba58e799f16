//! Integer helpers shared by the ring and linear-algebra modules.
//!
//! Moduli are < 2^31, so residues fit in u64 with products < 2^62; the
//! extended gcd runs in i128 to keep Bézout coefficients exact.

/// Greatest common divisor; `gcd(0, b) = b`.
pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Least common multiple of divisors of a common modulus (no overflow for
/// inputs < 2^31).
pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Extended gcd: returns `(g, s, t)` with `s*a + t*b = g = gcd(a, b)`.
pub(crate) fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, s, t) = egcd(b, a.rem_euclid(b));
        (g, t, s - (a.div_euclid(b)) * t)
    }
}

/// Inverse of `a` modulo `m`; caller must ensure `gcd(a, m) = 1`.
pub(crate) fn modinv(a: u64, m: u64) -> u64 {
    debug_assert_eq!(gcd(a % m, m), 1, "modinv of a non-unit");
    let (_, s, _) = egcd(a as i128, m as i128);
    s.rem_euclid(m as i128) as u64
}

/// `a * b mod m` for residues below 2^31.
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    debug_assert!(a < (1 << 31) && b < (1 << 31));
    a * b % m
}

/// A unit `u` modulo `m` with `u * a ≡ gcd(a, m) (mod m)`, for `a ≠ 0 mod m`.
///
/// Canonicalizing a pivot `a` to the divisor `d = gcd(a, m)` needs a *unit*
/// multiplier, not just any solution of `u*a ≡ d`: write `a = d·a'`,
/// `m = d·m'`; then `u ≡ inv(a') (mod m')` works, but `u` must additionally
/// be a unit mod `m`. Scanning `u, u + m', u + 2m', …` finds one: the
/// arithmetic progression hits every residue class mod each prime power of
/// `m` not dividing `m'`, and gcd(u, m') = 1 already.
pub(crate) fn unit_to_canonical(a: u64, m: u64) -> u64 {
    debug_assert!(m >= 2 && !a.is_multiple_of(m));
    let a = a % m;
    let d = gcd(a, m);
    let m1 = m / d; // ≥ 2 since a ≢ 0 forces d < m
    let mut u = modinv(a / d % m1, m1);
    while gcd(u, m) != 1 {
        u += m1;
        debug_assert!(u < m, "unit scan must terminate within one period");
    }
    debug_assert_eq!(mul_mod(u, a, m), d % m);
    u
}
