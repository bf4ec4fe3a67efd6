//! Isomorphism deciders for classical, quantum and Laurent GWAs, with
//! explicit generator maps that are checked against the defining relations.

use std::fmt;

use itertools::Itertools;
use num_traits::One;

use crate::algebra::{is_generic_q, BaseRing, GwaElement, GwaPresentation};
use crate::error::{unsupported, Result};
use crate::exactpoly::{extended_gcd, int, pow, rational_nth_root, LaurentPoly, Poly, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn rational(self) -> Rational {
        int(self.value())
    }
}

/// Which field the existential quantifiers of the criteria range over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FieldMode {
    OverRationals,
    /// The algebraic closure; scalars may be reported as radicals.
    #[default]
    OverClosure,
}

/// An exact rational, or "any `g`-th root of `beta`".
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Exact(Rational),
    Root { g: u32, beta: Rational },
}

impl Scalar {
    pub fn exact(&self) -> Option<&Rational> {
        match self {
            Scalar::Exact(r) => Some(r),
            Scalar::Root { .. } => None,
        }
    }

    fn recip(&self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(r.recip()),
            Scalar::Root { g, beta } => Scalar::Root {
                g: *g,
                beta: beta.recip(),
            },
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) => write!(f, "{r}"),
            Scalar::Root { g, beta } => write!(f, "any root of X^{g} = {beta}"),
        }
    }
}

/// Parameters of an isomorphism `A(a1) -> A(a2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoWitness {
    /// `a2(h) = rho * a1(epsilon h + alpha)`.
    ClassicalShift {
        rho: Rational,
        epsilon: Sign,
        alpha: Rational,
    },
    /// `a2(h) = rho * a1(alpha h)`. When `alpha` is a radical, `rho` is the
    /// matching root for the same choice of `alpha`.
    QuantumScale { rho: Scalar, alpha: Scalar },
    /// `a2(h) = rho * h^m * a1(alpha h^epsilon)`.
    LaurentScale {
        rho: Scalar,
        alpha: Scalar,
        m: i64,
        epsilon: Sign,
    },
    /// Two monomials of the same degree.
    MonomialDegree { n: u32 },
}

impl IsoWitness {
    pub fn is_rational(&self) -> bool {
        match self {
            IsoWitness::ClassicalShift { .. } | IsoWitness::MonomialDegree { .. } => true,
            IsoWitness::QuantumScale { rho, alpha }
            | IsoWitness::LaurentScale { rho, alpha, .. } => {
                rho.exact().is_some() && alpha.exact().is_some()
            }
        }
    }
}

impl fmt::Display for IsoWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsoWitness::ClassicalShift {
                rho,
                epsilon,
                alpha,
            } => write!(
                f,
                "a2(h) = {rho} * a1({}h + {alpha})",
                if *epsilon == Sign::Plus { "" } else { "-" }
            ),
            IsoWitness::QuantumScale { rho, alpha } => {
                write!(f, "a2(h) = rho * a1(alpha h), rho = {rho}, alpha = {alpha}")
            }
            IsoWitness::LaurentScale {
                rho,
                alpha,
                m,
                epsilon,
            } => write!(
                f,
                "a2(h) = rho * h^{m} * a1(alpha h^{}), rho = {rho}, alpha = {alpha}",
                epsilon.value()
            ),
            IsoWitness::MonomialDegree { n } => write!(f, "both monomials of degree {n}"),
        }
    }
}

/// Images of the generators under a candidate algebra map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMap {
    pub image_of_h: GwaElement,
    pub image_of_x: GwaElement,
    pub image_of_y: GwaElement,
}

impl GeneratorMap {
    pub fn identity() -> Self {
        GeneratorMap {
            image_of_h: GwaElement::h(),
            image_of_x: GwaElement::x(),
            image_of_y: GwaElement::y(),
        }
    }
}

fn require_non_constant(a: &Poly, name: &str) -> Result<()> {
    if a.is_constant() {
        return unsupported(format!("{name} is constant"));
    }
    Ok(())
}

/// Classical case: is there `rho != 0`, `alpha`, `epsilon = +-1` with
/// `a2(h) = rho a1(epsilon h + alpha)`?
///
/// For each sign the shift is forced by the subleading coefficient, so one
/// exact comparison per sign decides the question.
pub fn iso_classical(a1: &Poly, a2: &Poly) -> Result<Option<IsoWitness>> {
    require_non_constant(a1, "a1")?;
    require_non_constant(a2, "a2")?;
    let n = a1.degree().expect("non-constant");
    if a2.degree() != Some(n) {
        return Ok(None);
    }
    for eps in Sign::BOTH {
        let b = a1.scale_var(&eps.rational());
        let rho = a2.leading_coeff() / b.leading_coeff();
        let alpha = (a2.coeff(n - 1) / &rho - b.coeff(n - 1)) / (b.leading_coeff() * int(n as i64));
        let shifted = b.compose_affine(&Rational::one(), &alpha)?.scale(&rho);
        if &shifted == a2 {
            return Ok(Some(IsoWitness::ClassicalShift {
                rho,
                epsilon: eps,
                alpha: alpha * eps.rational(),
            }));
        }
    }
    Ok(None)
}

/// Solves `b_i = rho * alpha^i * a_i` over all exponents, given equal supports.
///
/// The ratios `c_d = alpha^d` over the support gaps `d` pin down
/// `beta = alpha^g`, `g = gcd(gaps)`, through a Bezout combination; the
/// system is consistent iff `beta^{d/g} = c_d` for every gap.
pub fn scaling_match(
    a: &LaurentPoly,
    b: &LaurentPoly,
    mode: FieldMode,
) -> Result<Option<(Scalar, Scalar)>> {
    if a.is_zero() || b.is_zero() || a.support() != b.support() {
        return Ok(None);
    }
    let ratios: Vec<(i64, Rational)> = a.terms().map(|(e, c)| (e, b.coeff(e) / c)).collect();
    let (i0, r0) = ratios[0].clone();
    let gaps: Vec<(i64, Rational)> = ratios[1..].iter().map(|(e, r)| (e - i0, r / &r0)).collect();
    if gaps.is_empty() {
        return Ok(Some((Scalar::Exact(r0), Scalar::Exact(Rational::one()))));
    }
    let mut g = gaps[0].0;
    let mut bezout = vec![1i64];
    for (d, _) in &gaps[1..] {
        let (g2, s, t) = extended_gcd(g, *d);
        bezout.iter_mut().for_each(|u| *u *= s);
        bezout.push(t);
        g = g2;
    }
    let beta = gaps
        .iter()
        .zip(&bezout)
        .fold(Rational::one(), |acc, ((_, c), u)| acc * pow(c, *u));
    if gaps.iter().any(|(d, c)| pow(&beta, d / g) != *c) {
        return Ok(None);
    }
    let g = g as u32;
    let alpha = match rational_nth_root(&beta, g)? {
        Some(r) => Scalar::Exact(r),
        None if mode == FieldMode::OverRationals => return Ok(None),
        None => Scalar::Root {
            g,
            beta: beta.clone(),
        },
    };
    let rho = match &alpha {
        Scalar::Exact(al) => Scalar::Exact(&r0 / pow(al, i0)),
        Scalar::Root { .. } if i0 % g as i64 == 0 => Scalar::Exact(&r0 / pow(&beta, i0 / g as i64)),
        Scalar::Root { .. } => Scalar::Root {
            g,
            beta: pow(&r0, g as i64) / pow(&beta, i0),
        },
    };
    Ok(Some((rho, alpha)))
}

fn require_generic(q: &Rational) -> Result<()> {
    if !is_generic_q(q) {
        return unsupported(format!("q = {q} is zero or a root of unity"));
    }
    Ok(())
}

/// Quantum case over `k[h]`: is there `rho, alpha != 0` with `a2(h) = rho a1(alpha h)`?
pub fn iso_quantum(
    q: &Rational,
    a1: &Poly,
    a2: &Poly,
    mode: FieldMode,
) -> Result<Option<IsoWitness>> {
    require_generic(q)?;
    require_non_constant(a1, "a1")?;
    require_non_constant(a2, "a2")?;
    match (a1.is_monomial(), a2.is_monomial()) {
        (true, true) => {
            let n = a1.degree().expect("non-constant");
            return Ok((a2.degree() == Some(n)).then_some(IsoWitness::MonomialDegree { n }));
        }
        (true, false) | (false, true) => return Ok(None),
        (false, false) => {}
    }
    let found = scaling_match(&a1.clone().into(), &a2.clone().into(), mode)?;
    Ok(found.map(|(rho, alpha)| IsoWitness::QuantumScale { rho, alpha }))
}

/// Laurent case for one fixed sign `epsilon`.
pub fn laurent_match(
    a1: &LaurentPoly,
    a2: &LaurentPoly,
    epsilon: Sign,
    mode: FieldMode,
) -> Result<Option<IsoWitness>> {
    let a1e = match epsilon {
        Sign::Plus => a1.clone(),
        Sign::Minus => a1.invert_var(),
    };
    let m = a2.valuation() - a1e.valuation();
    let Some((rho, alpha)) = scaling_match(&a1e, &a2.shift(-m), mode)? else {
        return Ok(None);
    };
    // with epsilon = -1 the matched scale is alpha^-1
    let alpha = match epsilon {
        Sign::Plus => alpha,
        Sign::Minus => alpha.recip(),
    };
    Ok(Some(IsoWitness::LaurentScale {
        rho,
        alpha,
        m,
        epsilon,
    }))
}

/// Laurent case: `a2(h) = rho h^m a1(alpha h^epsilon)`.
pub fn iso_laurent(
    a1: &LaurentPoly,
    a2: &LaurentPoly,
    q: &Rational,
    mode: FieldMode,
) -> Result<Option<IsoWitness>> {
    require_generic(q)?;
    if a1.is_zero() || a2.is_zero() {
        return crate::error::invalid("Laurent defining polynomials must be nonzero");
    }
    for eps in Sign::BOTH {
        if let Some(w) = laurent_match(a1, a2, eps, mode)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Largest multiset handled by [`root_condition_oracle`].
pub const ORACLE_CAP: usize = 8;

/// Root-level classical criterion, by enumerating permutations and signs.
///
/// Evaluates both the pairwise squared-gap condition and the signed-gap
/// condition and asserts that they agree.
pub fn root_condition_oracle(roots1: &[Rational], roots2: &[Rational]) -> Result<bool> {
    if roots1.len() > ORACLE_CAP || roots2.len() > ORACLE_CAP {
        return unsupported(format!("oracle enumerates at most {ORACLE_CAP} roots"));
    }
    if roots1.len() != roots2.len() {
        return Ok(false);
    }
    let n = roots1.len();
    if n == 0 {
        return Ok(true);
    }
    let mut squared = false;
    let mut signed = false;
    for tau in (0..n).permutations(n) {
        let image = |i: usize| &roots2[tau[i]];
        if !squared {
            squared = (0..n).cartesian_product(0..n).all(|(i, j)| {
                let d1 = &roots1[i] - &roots1[j];
                let d2 = image(i) - image(j);
                &d1 * &d1 == &d2 * &d2
            });
        }
        if !signed {
            signed = Sign::BOTH.iter().any(|eps| {
                (0..n).all(|i| &roots1[i] - &roots1[0] == (image(i) - image(0)) * eps.rational())
            });
        }
        if squared && signed {
            break;
        }
    }
    assert_eq!(
        squared, signed,
        "squared-gap and signed-gap root conditions disagree"
    );
    Ok(signed)
}

/// `A' = k[h](sigma^-1, a(sigma(h)))` together with the map `A -> A'`
/// swapping `x` and `y`.
pub fn invert_sigma_transform(a: &GwaPresentation) -> Result<(GwaPresentation, GeneratorMap)> {
    let q = a.q().recip();
    let sa = a.sigma_pow(a.a(), 1);
    let target = match a.base() {
        BaseRing::Polynomial => GwaPresentation::new(
            q,
            -(a.h0() / a.q()),
            sa.to_poly().expect("sigma preserves k[h]"),
        )?,
        BaseRing::Laurent => GwaPresentation::laurent(q, sa)?,
    };
    let map = GeneratorMap {
        image_of_h: GwaElement::h(),
        image_of_x: GwaElement::y(),
        image_of_y: GwaElement::x(),
    };
    Ok((target, map))
}

/// Checks that the generator images satisfy the four defining relations of
/// `source`, computed in `target`.
pub fn verify_morphism(
    map: &GeneratorMap,
    source: &GwaPresentation,
    target: &GwaPresentation,
) -> Result<bool> {
    let (ph, px, py) = (&map.image_of_h, &map.image_of_x, &map.image_of_y);
    let mul = |u: &GwaElement, v: &GwaElement| target.multiply(u, v);
    let (s1, t1) = source.sigma_power_affine(1);
    let (s_1, t_1) = source.sigma_power_affine(-1);
    let sigma_h = LaurentPoly::from_poly(Poly::from_terms([(1, s1), (0, t1)]));
    let sigma_inv_h = LaurentPoly::from_poly(Poly::from_terms([(1, s_1), (0, t_1)]));
    let img = |p: &LaurentPoly| target.eval_at(p, ph);

    let xh = mul(px, ph) == mul(&img(&sigma_h)?, px);
    let yh = mul(py, ph) == mul(&img(&sigma_inv_h)?, py);
    let xy = mul(px, py) == img(&source.sigma_pow(source.a(), 1))?;
    let yx = mul(py, px) == img(source.a())?;
    Ok(xh && yh && xy && yx)
}

/// Builds the generator map a witness prescribes and verifies it.
pub fn build_and_verify_morphism(
    w: &IsoWitness,
    source: &GwaPresentation,
    target: &GwaPresentation,
) -> Result<(GeneratorMap, bool)> {
    let coeff = |p: LaurentPoly| GwaElement::coeff(p);
    let scalar = |s: &Scalar| -> Result<Rational> {
        match s {
            Scalar::Exact(r) => Ok(r.clone()),
            Scalar::Root { .. } => {
                unsupported("witness has algebraic scalars; no map over the rationals")
            }
        }
    };
    let quantum_map = |rho: &Rational, alpha: &Rational| GeneratorMap {
        image_of_h: GwaElement::h().scale(alpha),
        image_of_x: GwaElement::x().scale(&rho.recip()),
        image_of_y: GwaElement::y(),
    };
    let map = match w {
        IsoWitness::ClassicalShift {
            rho,
            epsilon,
            alpha,
        } => {
            let (h_img, x_img, y_img) = match epsilon {
                Sign::Plus => (
                    Poly::from_terms([(1, Rational::one()), (0, alpha.clone())]),
                    GwaElement::x().scale(&rho.recip()),
                    GwaElement::y(),
                ),
                Sign::Minus => (
                    Poly::from_terms([(1, -Rational::one()), (0, alpha + target.h0())]),
                    GwaElement::y().scale(&rho.recip()),
                    GwaElement::x(),
                ),
            };
            GeneratorMap {
                image_of_h: coeff(h_img.into()),
                image_of_x: x_img,
                image_of_y: y_img,
            }
        }
        IsoWitness::QuantumScale { rho, alpha } => quantum_map(&scalar(rho)?, &scalar(alpha)?),
        IsoWitness::MonomialDegree { .. } => {
            let lc = |p: &GwaPresentation| p.a().unit_part().leading_coeff();
            quantum_map(&(lc(target) / lc(source)), &Rational::one())
        }
        IsoWitness::LaurentScale {
            rho,
            alpha,
            m,
            epsilon,
        } => {
            let (rho, alpha) = (scalar(rho)?, scalar(alpha)?);
            let h_neg_m = coeff(LaurentPoly::monomial(rho.recip(), -m));
            match epsilon {
                Sign::Plus => GeneratorMap {
                    image_of_h: GwaElement::h().scale(&alpha),
                    image_of_x: target.multiply(&GwaElement::x(), &h_neg_m),
                    image_of_y: GwaElement::y(),
                },
                Sign::Minus => GeneratorMap {
                    image_of_h: coeff(LaurentPoly::monomial(alpha / target.q(), -1)),
                    image_of_x: target.multiply(&h_neg_m, &GwaElement::y()),
                    image_of_y: GwaElement::x(),
                },
            }
        }
    };
    let ok = verify_morphism(&map, source, target)?;
    Ok((map, ok))
}
