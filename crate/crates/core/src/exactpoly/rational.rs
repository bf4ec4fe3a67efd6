use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{invalid, Result};

/// Exact element of the ground field.
pub type Rational = BigRational;

/// Builds `n/d`. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `r^e` for any integer exponent; `r` must be nonzero when `e < 0`.
pub fn pow(r: &Rational, e: i64) -> Rational {
    let mut base = if e < 0 { r.recip() } else { r.clone() };
    let mut e = e.unsigned_abs();
    let mut acc = Rational::one();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

/// Height `max(|numerator|, denominator)`; `height(r^k) = height(r)^k`.
pub fn height(r: &Rational) -> BigInt {
    let n = r.numer().abs();
    let d = r.denom().clone();
    if n > d {
        n
    } else {
        d
    }
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Rational `r` with `r^n = c`, if any. For even `n` and positive `c` the
/// positive root is returned.
pub fn rational_nth_root(c: &Rational, n: u32) -> Result<Option<Rational>> {
    if c.is_zero() {
        return invalid("nth root of zero");
    }
    if n == 0 {
        return invalid("root index must be positive");
    }
    if c.is_negative() && n.is_multiple_of(2) {
        return Ok(None);
    }
    let root_of = |v: &BigInt| -> Option<BigInt> {
        let r = v.nth_root(n);
        (num_traits::pow(r.clone(), n as usize) == *v).then_some(r)
    };
    let Some(num) = root_of(&c.numer().abs()) else {
        return Ok(None);
    };
    let Some(den) = root_of(c.denom()) else {
        return Ok(None);
    };
    let r = Rational::new(num, den);
    Ok(Some(if c.is_negative() { -r } else { r }))
}

/// Integer `k` with `base^k = target`, if one exists.
///
/// For `|base| != 1` the powers have strictly increasing height, so the scan
/// stops as soon as `height(base^k)` exceeds `height(target)`.
pub fn rational_log(target: &Rational, base: &Rational) -> Option<i64> {
    if base.is_zero() || target.is_zero() {
        return None;
    }
    if target.is_one() {
        return Some(0);
    }
    if base.abs().is_one() {
        return (base == target).then_some(1);
    }
    let limit = height(target);
    let inv_target = target.recip();
    let mut power = base.clone();
    let mut k = 1i64;
    while height(&power) <= limit {
        if &power == target {
            return Some(k);
        }
        if power == inv_target {
            return Some(-k);
        }
        power *= base;
        k += 1;
    }
    None
}

/// Smallest `m` with `|base|^m >= bound`, or `None` when it exceeds `limit`.
/// Requires `|base| > 1`.
pub fn power_exceeding(base: &Rational, bound: &Rational, limit: u64) -> Option<u64> {
    let b = base.abs();
    debug_assert!(b > Rational::one());
    let mut power = Rational::one();
    let mut m = 0u64;
    while &power < bound {
        if m == limit {
            return None;
        }
        power *= &b;
        m += 1;
    }
    Some(m)
}


/// `(g, s, t)` with `s a + t b = g = gcd(a, b) >= 0`.
pub fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i64, 0i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

#[cfg(test)]
mod gcd_tests {
    use super::extended_gcd;

    #[test]
    fn bezout() {
        for (a, b) in [(12, 18), (7, 3), (0, 5), (-4, 6), (5, 0), (-9, -6)] {
            let (g, s, t) = extended_gcd(a, b);
            assert_eq!(s * a + t * b, g);
            assert_eq!(g, num_integer::gcd(a, b));
        }
    }
}
