use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{int, pow, Rational};
use crate::error::{invalid, Result};

/// Univariate polynomial in `h` over the rationals, stored sparsely.
///
/// No zero coefficient is ever stored, so the zero polynomial is the empty
/// map and `degree()` reports it as `None`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<u32, Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::monomial(c, 0)
    }

    /// The indeterminate `h`.
    pub fn h() -> Self {
        Poly::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, exp: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Poly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (u32, Rational)>>(terms: I) -> Self {
        let mut p = Poly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Convenience constructor from integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::from_terms(coeffs.iter().enumerate().map(|(i, &c)| (i as u32, int(c))))
    }

    /// `lc * prod (h - r)`.
    pub fn from_roots(lc: Rational, roots: &[Rational]) -> Self {
        roots.iter().fold(Poly::constant(lc), |acc, r| {
            &acc * &Poly::from_terms([(1, Rational::one()), (0, -r.clone())])
        })
    }

    pub(crate) fn add_term(&mut self, exp: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<u32> {
        self.terms.keys().next().copied()
    }

    pub fn coeff(&self, exp: u32) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Rational {
        self.terms
            .values()
            .next_back()
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &Rational)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn support(&self) -> Vec<u32> {
        self.terms.keys().copied().collect()
    }

    pub fn is_constant(&self) -> bool {
        self.degree().is_none_or(|d| d == 0)
    }

    /// A single nonzero term `c h^n`.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Multiplies by `h^k`.
    pub fn shift_up(&self, k: u32) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(e, v)| (e + k, v.clone())).collect(),
        }
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(&self.leading_coeff().recip())
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        let Some(deg) = self.degree() else {
            return Rational::zero();
        };
        (0..=deg)
            .rev()
            .fold(Rational::zero(), |acc, e| acc * at + self.coeff(e))
    }

    pub fn derivative(&self) -> Poly {
        Poly::from_terms(
            self.terms
                .iter()
                .filter(|(e, _)| **e > 0)
                .map(|(e, c)| (e - 1, c * int(*e as i64))),
        )
    }

    /// `p(alpha * h)`; defined for every `alpha`.
    pub fn scale_var(&self, alpha: &Rational) -> Poly {
        if alpha.is_zero() {
            return Poly::constant(self.coeff(0));
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, c * pow(alpha, *e as i64)))
                .collect(),
        }
    }

    /// `p(alpha * h + beta)`, degree preserving for `alpha != 0`.
    pub fn compose_affine(&self, alpha: &Rational, beta: &Rational) -> Result<Poly> {
        if alpha.is_zero() {
            return invalid("compose_affine needs a nonzero scale");
        }
        if beta.is_zero() {
            return Ok(self.scale_var(alpha));
        }
        let Some(deg) = self.degree() else {
            return Ok(Poly::zero());
        };
        let lin = Poly::from_terms([(1, alpha.clone()), (0, beta.clone())]);
        let mut acc = Poly::zero();
        for e in (0..=deg).rev() {
            acc = &acc * &lin;
            acc.add_term(0, self.coeff(e));
        }
        Ok(acc)
    }

    /// Returns `(c, q)` with `q = p(h + c)` and the `h^{n-1}` coefficient of `q` zero.
    pub fn depress(&self) -> Result<(Rational, Poly)> {
        let n = match self.degree() {
            Some(n) if n >= 1 => n,
            _ => return invalid("depress needs a polynomial of degree at least 1"),
        };
        let c = -self.coeff(n - 1) / (self.leading_coeff() * int(n as i64));
        let q = self.compose_affine(&Rational::one(), &c)?;
        Ok((c, q))
    }

    /// `1 + max |a_i / a_n|`, an upper bound on the modulus of every complex root.
    pub fn cauchy_root_bound(&self) -> Result<Rational> {
        let n = match self.degree() {
            Some(n) if n >= 1 => n,
            _ => return invalid("root bound needs a non-constant polynomial"),
        };
        let lc = self.leading_coeff();
        let max = self
            .terms
            .iter()
            .filter(|(e, _)| **e < n)
            .map(|(_, c)| (c / &lc).abs())
            .max()
            .unwrap_or_else(Rational::zero);
        Ok(Rational::one() + max)
    }

    /// Upper bound on the modulus of every complex root: the smaller of the
    /// Cauchy bound and `2 max |a_{n-k}/a_n|^{1/k}` (last term halved), with
    /// each `k`-th root rounded up to an integer.
    pub fn root_modulus_bound(&self) -> Result<Rational> {
        let cauchy = self.cauchy_root_bound()?;
        let n = self.degree().expect("non-constant");
        let lc = self.leading_coeff();
        let mut max = BigInt::zero();
        for (e, c) in self.terms.iter().filter(|(e, _)| **e < n) {
            let k = n - e;
            let mut r = (c / &lc).abs();
            if k == n {
                r /= int(2);
            }
            let ceil = r.ceil().to_integer();
            let mut t = ceil.nth_root(k);
            if t.pow(k) < ceil {
                t += 1;
            }
            max = max.max(t);
        }
        Ok(cauchy.min(Rational::from_integer(max * 2)))
    }

    /// `h^deg * p(1/h)`.
    pub fn reverse(&self) -> Poly {
        let Some(deg) = self.degree() else {
            return Poly::zero();
        };
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (deg - e, c.clone()))
                .collect(),
        }
    }

    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let Some(dd) = divisor.degree() else {
            return invalid("division by the zero polynomial");
        };
        let lc = divisor.leading_coeff();
        let mut quot = Poly::zero();
        let mut rem = self.clone();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = rem.leading_coeff() / &lc;
            let shift = rd - dd;
            for (e, v) in divisor.terms() {
                rem.add_term(e + shift, -(v * &c));
            }
            quot.add_term(shift, c);
        }
        Ok((quot, rem))
    }

    /// `self / divisor` when the division is exact.
    pub fn exact_div(&self, divisor: &Poly) -> Option<Poly> {
        match self.div_rem(divisor) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.exact_div(self).is_some()
    }
}

/// Monic greatest common divisor.
pub fn poly_gcd(p: &Poly, q: &Poly) -> Result<Poly> {
    if p.is_zero() && q.is_zero() {
        return invalid("gcd of two zero polynomials");
    }
    let mut a = p.clone();
    let mut b = q.clone();
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b)?;
        a = b;
        b = r.monic();
    }
    Ok(a.monic())
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().rev().map(|(e, c)| (*e as i64, c)))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Shared term printer: `-3/2*h^2 + h - 1`, `h^-1` for negative exponents.
pub(crate) fn write_terms<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: Iterator<Item = (i64, &'a Rational)>,
{
    let mut first = true;
    for (e, c) in terms {
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        if e == 0 {
            write!(f, "{mag}")?;
            continue;
        }
        if !mag.is_one() {
            write!(f, "{mag}*")?;
        }
        match e {
            1 => write!(f, "h")?,
            _ => write!(f, "h^{e}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c.clone());
        }
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rational::one())
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rational::rat;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn compose_affine_examples() {
        let h2 = p(&[0, 0, 1]);
        assert_eq!(h2.compose_affine(&int(2), &int(1)).unwrap(), p(&[1, 4, 4]));
        let q = p(&[3, -1, 0, 7]);
        assert_eq!(q.compose_affine(&int(1), &int(0)).unwrap(), q);
        assert_eq!(
            p(&[-1, 1]).compose_affine(&int(-1), &int(0)).unwrap(),
            p(&[-1, -1])
        );
        assert!(q.compose_affine(&int(0), &int(1)).is_err());
    }

    #[test]
    fn depress_examples() {
        assert_eq!(p(&[0, -2, 1]).depress().unwrap(), (int(1), p(&[-1, 0, 1])));
        assert_eq!(
            p(&[0, 0, 0, 1]).depress().unwrap(),
            (int(0), p(&[0, 0, 0, 1]))
        );
        assert_eq!(p(&[1, 4, 2]).depress().unwrap(), (int(-1), p(&[-1, 0, 2])));
        assert!(p(&[5]).depress().is_err());
        assert!(Poly::zero().depress().is_err());
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(
            poly_gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap(),
            p(&[-1, 1])
        );
        assert_eq!(poly_gcd(&p(&[0, 1]), &p(&[1, 1])).unwrap(), Poly::one());
        assert_eq!(
            poly_gcd(&p(&[0, -1, 0, 1]), &p(&[-1, 0, 1])).unwrap(),
            p(&[-1, 0, 1])
        );
        assert_eq!(poly_gcd(&p(&[0, 2]), &Poly::zero()).unwrap(), p(&[0, 1]));
        assert!(poly_gcd(&Poly::zero(), &Poly::zero()).is_err());
    }

    #[test]
    fn fujiwara_is_tighter() {
        let roots: Vec<Rational> = [4, -3, 4, 2, 1].iter().map(|r| int(*r)).collect();
        let p = Poly::from_roots(int(3), &roots);
        let b = p.root_modulus_bound().unwrap();
        assert!(b >= int(4));
        assert!(b < p.cauchy_root_bound().unwrap());
        assert_eq!(
            Poly::from_ints(&[0, 0, 1]).root_modulus_bound().unwrap(),
            int(0)
        );
    }

    #[test]
    fn cauchy_examples() {
        assert_eq!(p(&[2, -3, 1]).cauchy_root_bound().unwrap(), int(4));
        assert_eq!(p(&[-5, 1]).cauchy_root_bound().unwrap(), int(6));
        assert_eq!(p(&[0, 0, 0, 1]).cauchy_root_bound().unwrap(), int(1));
        assert!(p(&[3]).cauchy_root_bound().is_err());
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -2, 0, 1]).to_string(), "h^3 - 2*h + 1");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(Poly::monomial(rat(-1, 2), 1).to_string(), "-1/2*h");
    }

    #[test]
    fn zero_sentinel() {
        let z = Poly::zero();
        assert_eq!(z.degree(), None);
        assert!(z.is_constant());
        assert_eq!(&z * &p(&[1, 1]), z);
        assert_eq!(z.scale_var(&int(3)), z);
    }

    fn small_rat() -> impl Strategy<Value = Rational> {
        (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
    }

    fn nonzero_rat() -> impl Strategy<Value = Rational> {
        small_rat().prop_filter("nonzero", |r| !r.is_zero())
    }

    fn small_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec(small_rat(), 1..6)
            .prop_map(|cs| Poly::from_terms(cs.into_iter().enumerate().map(|(i, c)| (i as u32, c))))
    }

    proptest! {
        #[test]
        fn affine_round_trip(q in small_poly(), a in nonzero_rat(), b in small_rat()) {
            let there = q.compose_affine(&a, &b).unwrap();
            prop_assert_eq!(there.degree(), q.degree());
            let back = there.compose_affine(&a.recip(), &(-&b / &a)).unwrap();
            prop_assert_eq!(back, q);
        }

        #[test]
        fn depress_round_trip(q in small_poly()) {
            prop_assume!(q.degree().unwrap_or(0) >= 1);
            let (c, d) = q.depress().unwrap();
            let n = d.degree().unwrap();
            prop_assert!(d.coeff(n - 1).is_zero());
            prop_assert_eq!(d.compose_affine(&Rational::one(), &-c).unwrap(), q);
        }

        #[test]
        fn gcd_divides(a in small_poly(), b in small_poly(), c in small_poly()) {
            let x = &a * &c;
            let y = &b * &c;
            prop_assume!(!x.is_zero() || !y.is_zero());
            let g = poly_gcd(&x, &y).unwrap();
            prop_assert!(g.divides(&x));
            prop_assert!(g.divides(&y));
            prop_assert!(g.leading_coeff().is_one());
            if !c.is_zero() {
                prop_assert!(g.degree() >= c.degree());
            }
        }

        #[test]
        fn cauchy_bounds_rational_roots(roots in prop::collection::vec(small_rat(), 1..6), lc in nonzero_rat()) {
            let q = Poly::from_roots(lc, &roots);
            let bound = q.cauchy_root_bound().unwrap();
            let tight = q.root_modulus_bound().unwrap();
            prop_assert!(tight <= bound);
            for r in &roots {
                prop_assert!(r.abs() <= tight);
                prop_assert!(q.eval(r).is_zero());
            }
        }

        #[test]
        fn nth_root_is_exact(base in nonzero_rat(), n in 1u32..5) {
            let c = pow(&base, n as i64);
            let r = crate::exactpoly::rational_nth_root(&c, n).unwrap().unwrap();
            prop_assert_eq!(pow(&r, n as i64), c);
        }
    }
}
