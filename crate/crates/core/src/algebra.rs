//! Presentations `k[h](sigma, a)` and `k[h, h^-1](sigma, a)` with
//! `sigma(h) = q h - h0`, graded elements in normal form, and the
//! normalizing-element classifier for the quantum case.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{invalid, unsupported, Result};
use crate::exactpoly::{int, pow, LaurentPoly, Poly, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseRing {
    /// `k[h]`
    Polynomial,
    /// `k[h, h^-1]`
    Laurent,
}

/// The triple `(R, sigma, a)` with `sigma(h) = q h - h0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GwaPresentation {
    base: BaseRing,
    q: Rational,
    h0: Rational,
    a: LaurentPoly,
}

impl GwaPresentation {
    /// Presentation over `k[h]`.
    pub fn new(q: Rational, h0: Rational, a: Poly) -> Result<Self> {
        if q.is_zero() {
            return invalid("q must be nonzero");
        }
        if a.is_zero() {
            return invalid("the defining polynomial must be nonzero");
        }
        Ok(GwaPresentation {
            base: BaseRing::Polynomial,
            q,
            h0,
            a: a.into(),
        })
    }

    /// Quantum presentation `k[h](sigma_q, a)`.
    pub fn quantum(q: Rational, a: Poly) -> Result<Self> {
        GwaPresentation::new(q, Rational::zero(), a)
    }

    /// Presentation over `k[h, h^-1]`; `sigma(h) = q h` there.
    pub fn laurent(q: Rational, a: LaurentPoly) -> Result<Self> {
        if q.is_zero() {
            return invalid("q must be nonzero");
        }
        if a.is_zero() {
            return invalid("the defining polynomial must be nonzero");
        }
        Ok(GwaPresentation {
            base: BaseRing::Laurent,
            q,
            h0: Rational::zero(),
            a,
        })
    }

    pub fn base(&self) -> BaseRing {
        self.base
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn h0(&self) -> &Rational {
        &self.h0
    }

    pub fn a(&self) -> &LaurentPoly {
        &self.a
    }

    /// The defining polynomial as an element of `k[h]`; `None` over the Laurent ring.
    pub fn a_poly(&self) -> Option<Poly> {
        match self.base {
            BaseRing::Polynomial => self.a.to_poly(),
            BaseRing::Laurent => None,
        }
    }

    /// `q` is a nonzero rational other than `1` and `-1`, i.e. not a root of unity.
    pub fn has_generic_q(&self) -> bool {
        is_generic_q(&self.q)
    }

    pub(crate) fn require_generic_q(&self) -> Result<()> {
        if self.has_generic_q() {
            Ok(())
        } else {
            unsupported(format!("q = {} is a root of unity", self.q))
        }
    }

    /// `(scale, shift)` with `sigma^n(h) = scale * h + shift`.
    pub fn sigma_power_affine(&self, n: i64) -> (Rational, Rational) {
        let scale = pow(&self.q, n);
        let shift = if self.h0.is_zero() {
            Rational::zero()
        } else if self.q.is_one() {
            -(&self.h0 * int(n))
        } else {
            -(&self.h0 * (&scale - Rational::one()) / (&self.q - Rational::one()))
        };
        (scale, shift)
    }

    /// `sigma^n(p)` for `p` in `k[h]`; `n` may be negative.
    pub fn sigma_power_apply(&self, p: &Poly, n: i64) -> Poly {
        let (scale, shift) = self.sigma_power_affine(n);
        p.compose_affine(&scale, &shift)
            .expect("powers of q are nonzero")
    }

    /// `sigma^n` on a base-ring coefficient.
    pub fn sigma_pow(&self, p: &LaurentPoly, n: i64) -> LaurentPoly {
        if n == 0 || p.is_zero() {
            return p.clone();
        }
        if self.h0.is_zero() {
            return p.scale_var(&pow(&self.q, n));
        }
        let poly = p
            .to_poly()
            .expect("coefficients over k[h] have no negative powers");
        self.sigma_power_apply(&poly, n).into()
    }

    /// Normal form of `v_m * v_n` as `c(h) * v_{m+n}`, where `v_d` is `x^d`
    /// for `d > 0`, `y^-d` for `d < 0` and `1` for `d = 0`.
    ///
    /// Mixed words are collapsed one letter pair at a time with
    /// `xy = sigma(a)` and `yx = a`.
    pub fn collapse(&self, m: i64, n: i64) -> (LaurentPoly, i64) {
        let mut coef = LaurentPoly::one();
        let (mut m, mut n) = (m, n);
        // x^m y^k = x^{m-1} sigma(a) y^{k-1} = sigma^m(a) x^{m-1} y^{k-1}
        while m > 0 && n < 0 {
            coef = &coef * &self.sigma_pow(&self.a, m);
            m -= 1;
            n += 1;
        }
        // y^k x^n = y^{k-1} a x^{n-1} = sigma^{-(k-1)}(a) y^{k-1} x^{n-1}
        while m < 0 && n > 0 {
            coef = &coef * &self.sigma_pow(&self.a, m + 1);
            m += 1;
            n -= 1;
        }
        (coef, m + n)
    }

    /// Product of `p v_m` and `r v_n`.
    fn mul_terms(&self, m: i64, p: &LaurentPoly, n: i64, r: &LaurentPoly) -> (i64, LaurentPoly) {
        let (c, d) = self.collapse(m, n);
        let coef = &(p * &self.sigma_pow(r, m)) * &c;
        (d, coef)
    }

    /// The product `u * v` in normal form.
    pub fn multiply(&self, u: &GwaElement, v: &GwaElement) -> GwaElement {
        let mut out = GwaElement::zero();
        for (m, p) in u.components() {
            for (n, r) in v.components() {
                let (d, c) = self.mul_terms(m, p, n, r);
                out.add_component(d, &c);
            }
        }
        out
    }

    pub fn power(&self, u: &GwaElement, e: u32) -> GwaElement {
        (0..e).fold(GwaElement::one(), |acc, _| self.multiply(&acc, u))
    }

    /// Whether a base-ring coefficient is legal in this presentation.
    pub fn admits(&self, p: &LaurentPoly) -> bool {
        self.base == BaseRing::Laurent || p.valuation() >= 0 || p.is_zero()
    }

    /// `p(image_of_h)` computed inside this algebra by Horner's rule.
    ///
    /// Negative powers of `h` require the image to be an invertible
    /// degree-0 monomial `c h^e`.
    pub fn eval_at(&self, p: &LaurentPoly, image_of_h: &GwaElement) -> Result<GwaElement> {
        if p.is_zero() {
            return Ok(GwaElement::zero());
        }
        let unit = p.unit_part();
        let deg = unit.degree().unwrap_or(0);
        let mut acc = GwaElement::zero();
        for e in (0..=deg).rev() {
            acc = &self.multiply(&acc, image_of_h) + &GwaElement::scalar(unit.coeff(e));
        }
        let v = p.valuation();
        let factor = if v >= 0 {
            self.power(image_of_h, v as u32)
        } else {
            let inverse = match image_of_h.single_component() {
                Some((0, c)) if c.is_monomial() && self.base == BaseRing::Laurent => {
                    let (e, k) = c.terms().next().expect("monomial");
                    GwaElement::coeff(LaurentPoly::monomial(k.recip(), -e))
                }
                _ => return unsupported("negative power of a non-invertible image of h"),
            };
            self.power(&inverse, (-v) as u32)
        };
        Ok(self.multiply(&acc, &factor))
    }

    /// Decides whether `u` normalizes the algebra (`uA = Au`).
    ///
    /// Conjugation by `h` forces single-degree support; for `u = p(h) v_d`
    /// each generator equation `u g = w u` (and `g u = u s`) is then solved
    /// by exact division.
    pub fn normality_witness(&self, u: &GwaElement) -> Result<NormalityVerdict> {
        if self.base != BaseRing::Polynomial {
            return unsupported("normalizing elements are classified over k[h] only");
        }
        self.require_generic_q()?;
        if u.is_zero() {
            return invalid("the zero element is not normalizing");
        }
        let support = u.support();
        if support.len() > 1 {
            return Ok(NormalityVerdict::refuted(Refutation::MixedDegrees(support)));
        }
        let (d, p) = u.single_component().expect("nonzero single-degree element");
        let mut left = Vec::with_capacity(3);
        let mut right = Vec::with_capacity(3);
        for g in Generator::ALL {
            let (e, r) = g.component();
            let gen = GwaElement::term(e, r.clone());
            // u g = w u with w = s v_e
            let target = self.multiply(u, &gen);
            let (c, _) = self.collapse(e, d);
            let w = self
                .solve_coefficient(&target, &(&self.sigma_pow(p, e) * &c))
                .map(|s| GwaElement::term(e, s))
                .filter(|w| self.multiply(w, u) == target);
            let Some(w) = w else {
                return Ok(NormalityVerdict::refuted(Refutation::NoConjugator {
                    generator: g,
                    side: Side::Left,
                }));
            };
            left.push(w);
            // g u = u s with s = s' v_e
            let target = self.multiply(&gen, u);
            let (c, _) = self.collapse(d, e);
            let s = self
                .solve_coefficient(&target, &(p * &c))
                .map(|t| GwaElement::term(e, self.sigma_pow(&t, -d)))
                .filter(|s| self.admits(&s.component(e).cloned().unwrap_or_default()))
                .filter(|s| self.multiply(u, s) == target);
            let Some(s) = s else {
                return Ok(NormalityVerdict::refuted(Refutation::NoConjugator {
                    generator: g,
                    side: Side::Right,
                }));
            };
            right.push(s);
        }
        let conj = |mut v: Vec<GwaElement>| Conjugators {
            y: v.pop().expect("three generators"),
            x: v.pop().expect("three generators"),
            h: v.pop().expect("three generators"),
        };
        Ok(NormalityVerdict {
            normal: true,
            conjugators: Some(conj(left)),
            reverse_conjugators: Some(conj(right)),
            refutation: None,
        })
    }

    /// Coefficient `s` with `s * known = target` (single-component target), over `k[h]`.
    fn solve_coefficient(&self, target: &GwaElement, known: &LaurentPoly) -> Option<LaurentPoly> {
        let (_, t) = target.single_component()?;
        let s = t.exact_div(known)?;
        self.admits(&s).then_some(s)
    }
}

pub(crate) fn is_generic_q(q: &Rational) -> bool {
    !q.is_zero() && *q != Rational::one() && *q != -Rational::one()
}

/// Element `sum_d p_d(h) v_d` of a GWA, kept in normal form.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GwaElement {
    components: BTreeMap<i64, LaurentPoly>,
}

impl GwaElement {
    pub fn zero() -> Self {
        GwaElement::default()
    }

    pub fn one() -> Self {
        GwaElement::scalar(Rational::one())
    }

    pub fn scalar(c: Rational) -> Self {
        GwaElement::coeff(LaurentPoly::monomial(c, 0))
    }

    /// A degree-0 element `p(h)`.
    pub fn coeff(p: LaurentPoly) -> Self {
        GwaElement::term(0, p)
    }

    /// `p(h) v_d`.
    pub fn term(d: i64, p: LaurentPoly) -> Self {
        let mut e = GwaElement::zero();
        e.add_component(d, &p);
        e
    }

    pub fn h() -> Self {
        GwaElement::coeff(Poly::h().into())
    }

    pub fn x() -> Self {
        GwaElement::term(1, LaurentPoly::one())
    }

    pub fn y() -> Self {
        GwaElement::term(-1, LaurentPoly::one())
    }

    pub fn generator(g: Generator) -> Self {
        let (d, p) = g.component();
        GwaElement::term(d, p)
    }

    fn add_component(&mut self, d: i64, p: &LaurentPoly) {
        if p.is_zero() {
            return;
        }
        let sum = match self.components.get(&d) {
            Some(old) => old + p,
            None => p.clone(),
        };
        if sum.is_zero() {
            self.components.remove(&d);
        } else {
            self.components.insert(d, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> impl Iterator<Item = (i64, &LaurentPoly)> + '_ {
        self.components.iter().map(|(d, p)| (*d, p))
    }

    pub fn component(&self, d: i64) -> Option<&LaurentPoly> {
        self.components.get(&d)
    }

    /// Degrees carrying a nonzero component, ascending.
    pub fn support(&self) -> Vec<i64> {
        self.components.keys().copied().collect()
    }

    pub fn single_component(&self) -> Option<(i64, &LaurentPoly)> {
        match self.components.len() {
            1 => self.components.iter().next().map(|(d, p)| (*d, p)),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> GwaElement {
        let mut out = GwaElement::zero();
        for (d, p) in self.components() {
            out.add_component(d, &p.scale(c));
        }
        out
    }
}

impl Add<&GwaElement> for &GwaElement {
    type Output = GwaElement;
    fn add(self, rhs: &GwaElement) -> GwaElement {
        let mut out = self.clone();
        for (d, p) in rhs.components() {
            out.add_component(d, p);
        }
        out
    }
}

impl Sub<&GwaElement> for &GwaElement {
    type Output = GwaElement;
    fn sub(self, rhs: &GwaElement) -> GwaElement {
        self + &(-rhs)
    }
}

impl Neg for &GwaElement {
    type Output = GwaElement;
    fn neg(self) -> GwaElement {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for GwaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (d, p)) in self.components.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let gen = match d {
                0 => None,
                1 => Some("x".to_string()),
                -1 => Some("y".to_string()),
                d if *d > 1 => Some(format!("x^{d}")),
                d => Some(format!("y^{}", -d)),
            };
            match gen {
                None if p.terms().count() > 1 => write!(f, "({p})")?,
                None => write!(f, "{p}")?,
                Some(g) if *p == LaurentPoly::one() => write!(f, "{g}")?,
                Some(g) if p.terms().count() == 1 => write!(f, "{p}*{g}")?,
                Some(g) => write!(f, "({p})*{g}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GwaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GwaElement({self})")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    H,
    X,
    Y,
}

impl Generator {
    pub const ALL: [Generator; 3] = [Generator::H, Generator::X, Generator::Y];

    fn component(self) -> (i64, LaurentPoly) {
        match self {
            Generator::H => (0, Poly::h().into()),
            Generator::X => (1, LaurentPoly::one()),
            Generator::Y => (-1, LaurentPoly::one()),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Generator::H => "h",
            Generator::X => "x",
            Generator::Y => "y",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `u g = w u`
    Left,
    /// `g u = u s`
    Right,
}

/// `w_g` with `u g = w_g u`, one per generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conjugators {
    pub h: GwaElement,
    pub x: GwaElement,
    pub y: GwaElement,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Refutation {
    /// Conjugation by `h` cannot preserve more than one graded component.
    MixedDegrees(Vec<i64>),
    /// No element solves the generator equation on the given side.
    NoConjugator { generator: Generator, side: Side },
}

impl fmt::Display for Refutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Refutation::MixedDegrees(ds) => write!(f, "support spans several degrees {ds:?}"),
            Refutation::NoConjugator { generator, side } => match side {
                Side::Left => write!(f, "no w with u*{generator} = w*u"),
                Side::Right => write!(f, "no s with {generator}*u = u*s"),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalityVerdict {
    pub normal: bool,
    /// `w_g` with `u g = w_g u`.
    pub conjugators: Option<Conjugators>,
    /// `s_g` with `g u = u s_g`.
    pub reverse_conjugators: Option<Conjugators>,
    pub refutation: Option<Refutation>,
}

impl NormalityVerdict {
    fn refuted(r: Refutation) -> Self {
        NormalityVerdict {
            normal: false,
            conjugators: None,
            reverse_conjugators: None,
            refutation: Some(r),
        }
    }
}
