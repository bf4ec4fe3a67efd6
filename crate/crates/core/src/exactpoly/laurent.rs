use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::{write_terms, Poly};
use super::rational::{pow, Rational};

/// Laurent polynomial `h^m * u(h)` with `u(0) != 0`.
///
/// The pair `(valuation, unit)` is unique for nonzero values; zero is stored
/// as valuation 0 with a zero unit part.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    valuation: i64,
    unit: Poly,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::from_poly(Poly::one())
    }

    /// `h^shift * p`, normalized.
    pub fn new(shift: i64, p: Poly) -> Self {
        let Some(v) = p.valuation() else {
            return LaurentPoly::zero();
        };
        let unit = Poly::from_terms(p.terms().map(|(e, c)| (e - v, c.clone())));
        LaurentPoly {
            valuation: shift + v as i64,
            unit,
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        LaurentPoly::new(0, p)
    }

    pub fn monomial(c: Rational, exp: i64) -> Self {
        LaurentPoly::new(exp, Poly::constant(c))
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        let terms: Vec<_> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let Some(min) = terms.iter().map(|(e, _)| *e).min() else {
            return LaurentPoly::zero();
        };
        let p = Poly::from_terms(terms.into_iter().map(|(e, c)| ((e - min) as u32, c)));
        LaurentPoly::new(min, p)
    }

    pub fn is_zero(&self) -> bool {
        self.unit.is_zero()
    }

    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    /// The factor `u` in `h^m * u(h)`.
    pub fn unit_part(&self) -> &Poly {
        &self.unit
    }

    /// Largest exponent; `None` for zero.
    pub fn top_exponent(&self) -> Option<i64> {
        self.unit.degree().map(|d| self.valuation + d as i64)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.unit
            .terms()
            .map(move |(e, c)| (self.valuation + e as i64, c))
    }

    pub fn support(&self) -> Vec<i64> {
        self.terms().map(|(e, _)| e).collect()
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        let e = exp - self.valuation;
        if e < 0 {
            Rational::zero()
        } else {
            self.unit.coeff(e as u32)
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.unit.is_monomial()
    }

    /// `Some(p)` when no negative powers occur.
    pub fn to_poly(&self) -> Option<Poly> {
        if self.is_zero() {
            return Some(Poly::zero());
        }
        (self.valuation >= 0).then(|| self.unit.shift_up(self.valuation as u32))
    }

    pub fn scale(&self, c: &Rational) -> LaurentPoly {
        LaurentPoly::new(self.valuation, self.unit.scale(c))
    }

    /// `p(alpha * h)` for nonzero `alpha`.
    pub fn scale_var(&self, alpha: &Rational) -> LaurentPoly {
        debug_assert!(!alpha.is_zero());
        LaurentPoly::new(
            self.valuation,
            self.unit
                .scale_var(alpha)
                .scale(&pow(alpha, self.valuation)),
        )
    }

    /// `p(1/h)`.
    pub fn invert_var(&self) -> LaurentPoly {
        let Some(d) = self.unit.degree() else {
            return LaurentPoly::zero();
        };
        LaurentPoly::new(-self.valuation - d as i64, self.unit.reverse())
    }

    /// `h^k * p`.
    pub fn shift(&self, k: i64) -> LaurentPoly {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            valuation: self.valuation + k,
            unit: self.unit.clone(),
        }
    }

    /// Evaluates at a nonzero rational point.
    pub fn eval(&self, at: &Rational) -> Rational {
        self.unit.eval(at) * pow(at, self.valuation)
    }

    /// `self / divisor` when the quotient is again a Laurent polynomial.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() {
            return None;
        }
        let q = self.unit.exact_div(&divisor.unit)?;
        Some(LaurentPoly::new(self.valuation - divisor.valuation, q))
    }

    /// Sum as Laurent polynomials: both operands are aligned on the smaller valuation.
    fn combine(&self, rhs: &LaurentPoly, negate: bool) -> LaurentPoly {
        if self.is_zero() {
            return if negate { -rhs } else { rhs.clone() };
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let base = self.valuation.min(rhs.valuation);
        let a = self.unit.shift_up((self.valuation - base) as u32);
        let b = rhs.unit.shift_up((rhs.valuation - base) as u32);
        LaurentPoly::new(base, if negate { &a - &b } else { &a + &b })
    }
}

impl From<Poly> for LaurentPoly {
    fn from(p: Poly) -> Self {
        LaurentPoly::from_poly(p)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<_> = self.terms().collect();
        write_terms(f, terms.into_iter().rev())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.combine(rhs, false)
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.combine(rhs, true)
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::new(self.valuation + rhs.valuation, &self.unit * &rhs.unit)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&-Rational::one())
    }
}
