//! Simplicity criteria and Morita-equivalence conditions.
//!
//! Morita equivalent noetherian domains have isomorphic fraction fields, so
//! the fraction-field invariants give necessary conditions; degree 2 in the
//! classical case is decided exactly by the root-gap criterion, and for
//! higher degree only a sufficient condition on roots is available.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::{is_generic_q, BaseRing, GwaPresentation};
use crate::canonical::{
    canonicalize_presentation, presentation_fraction_field, same_cyclic_group, CanonicalVariant,
    FractionField,
};
use crate::error::{inapplicable, invalid, unsupported, Result};
use crate::exactpoly::{
    int, is_integer, poly_gcd, power_exceeding, rational_log, LaurentPoly, Poly, Rational,
};

/// Longest integer-shift scan run by [`is_simple_classical`].
pub const MAX_SHIFT_SCAN: u64 = 1 << 12;

/// Longest q-power scan run by [`is_simple_quantum`].
pub const MAX_Q_POWER_SCAN: u64 = 1 << 10;

/// Why an algebra is or is not simple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SimplicityCertificate {
    Simple,
    /// `gcd(a, a')`, carrying the repeated roots.
    RepeatedRoot(Poly),
    /// Roots `alpha`, `beta` with `alpha - beta = m`; `common` is `gcd(a(h), a(h+m))`.
    IntegerGap {
        m: i64,
        common: Poly,
    },
    /// Roots `alpha`, `beta` with `alpha = q^m beta`; `common` is `gcd(a(h), a(q^m h))`.
    QPowerRatio {
        m: i64,
        common: Poly,
    },
    QRootOfUnity,
    /// `h` is normal and not a unit in a quantum GWA over `k[h]`.
    NormalH,
    Commutative,
}

impl fmt::Display for SimplicityCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimplicityCertificate::Simple => write!(f, "simple"),
            SimplicityCertificate::RepeatedRoot(g) => write!(f, "repeated root: gcd(a, a') = {g}"),
            SimplicityCertificate::IntegerGap { m, common } => {
                write!(f, "roots differ by {m}: gcd(a(h), a(h+{m})) = {common}")
            }
            SimplicityCertificate::QPowerRatio { m, common } => {
                write!(f, "roots differ by q^{m}: gcd(a(h), a(q^{m} h)) = {common}")
            }
            SimplicityCertificate::QRootOfUnity => write!(f, "q is a root of unity"),
            SimplicityCertificate::NormalH => write!(f, "h generates a proper two-sided ideal"),
            SimplicityCertificate::Commutative => write!(f, "the algebra is commutative"),
        }
    }
}

fn repeated_root(a: &Poly) -> Result<Option<Poly>> {
    let g = poly_gcd(a, &a.derivative())?;
    Ok((!g.is_constant()).then_some(g))
}

/// `A(a)` with `sigma(h) = h - 1` is simple iff `a` has simple roots and no
/// two roots differ by an integer.
pub fn is_simple_classical(a: &Poly) -> Result<(bool, SimplicityCertificate)> {
    if a.is_constant() {
        return unsupported("simplicity needs a non-constant a");
    }
    if let Some(g) = repeated_root(a)? {
        return Ok((false, SimplicityCertificate::RepeatedRoot(g)));
    }
    // |alpha - beta| <= |alpha| + |beta| < 2B
    let bound = (a.root_modulus_bound()? * int(2)).floor().to_integer();
    let bound = match bound.to_u64() {
        Some(b) if b <= MAX_SHIFT_SCAN => b as i64,
        _ => return unsupported(format!("root bound {bound} exceeds the shift scan limit")),
    };
    for m in 1..=bound {
        let common = poly_gcd(a, &a.compose_affine(&Rational::one(), &int(m))?)?;
        if !common.is_constant() {
            return Ok((false, SimplicityCertificate::IntegerGap { m, common }));
        }
    }
    Ok((true, SimplicityCertificate::Simple))
}

/// `k[h, h^-1](sigma_q, a)` is simple iff `q` is not a root of unity, the
/// nonzero roots of `a` are simple and no two have ratio a power of `q`.
pub fn is_simple_quantum(a: &LaurentPoly, q: &Rational) -> Result<(bool, SimplicityCertificate)> {
    if a.is_zero() {
        return invalid("a must be nonzero");
    }
    if !is_generic_q(q) {
        return Ok((false, SimplicityCertificate::QRootOfUnity));
    }
    let t = a.unit_part();
    if t.is_constant() {
        return Ok((true, SimplicityCertificate::Simple));
    }
    if let Some(g) = repeated_root(t)? {
        return Ok((false, SimplicityCertificate::RepeatedRoot(g)));
    }
    // root moduli lie in [1/B(reverse t), B(t)]
    let spread = t.root_modulus_bound()? * t.reverse().root_modulus_bound()?;
    let big_q = if q.abs() > Rational::one() {
        q.clone()
    } else {
        q.recip()
    };
    let Some(m_max) = power_exceeding(&big_q, &spread, MAX_Q_POWER_SCAN) else {
        return unsupported("q-power scan exceeds the limit");
    };
    let m_max = m_max as i64;
    for m in 1..=m_max {
        let common = poly_gcd(t, &t.scale_var(&crate::exactpoly::pow(q, m)))?;
        if !common.is_constant() {
            return Ok((false, SimplicityCertificate::QPowerRatio { m, common }));
        }
    }
    Ok((true, SimplicityCertificate::Simple))
}

/// Simplicity of any presentation, routed through its canonical form.
pub fn is_simple(p: &GwaPresentation) -> Result<(bool, SimplicityCertificate)> {
    if p.base() == BaseRing::Laurent {
        return is_simple_quantum(p.a(), p.q());
    }
    match canonicalize_presentation(p)?.variant {
        CanonicalVariant::Commutative => Ok((false, SimplicityCertificate::Commutative)),
        CanonicalVariant::Classical { a } => is_simple_classical(&a),
        CanonicalVariant::Quantum { .. } => {
            if p.a().to_poly().is_some_and(|a| a.is_constant()) {
                return unsupported("simplicity needs a non-constant a");
            }
            Ok((false, SimplicityCertificate::NormalH))
        }
    }
}

/// `c * sqrt(d)` plus a rational part, `d` square-free, `d > 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticRootGap {
    pub rational_part: Rational,
    pub radical_part: Option<(Rational, BigInt)>,
}

impl fmt::Display for QuadraticRootGap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.radical_part {
            None => write!(f, "{}", self.rational_part),
            Some((c, d)) if self.rational_part.is_zero() => write!(f, "{c}*sqrt({d})"),
            Some((c, d)) => write!(f, "{} + {c}*sqrt({d})", self.rational_part),
        }
    }
}

/// Largest integer whose square-free part is computed by trial division.
const SQUAREFREE_LIMIT: u64 = 1 << 62;

/// `n = s^2 * d` with `d` square-free, for `0 < n <= SQUAREFREE_LIMIT`.
fn squarefree_split(n: &BigInt) -> Result<(BigInt, BigInt)> {
    let Some(mut rest) = n.to_u64().filter(|v| *v >= 1 && *v <= SQUAREFREE_LIMIT) else {
        return unsupported(format!("radicand {n} is too large to reduce"));
    };
    let (mut s, mut d) = (1u64, 1u64);
    let mut p = 2u64;
    while p * p * p <= rest {
        while rest % (p * p) == 0 {
            rest /= p * p;
            s *= p;
        }
        if rest % p == 0 {
            rest /= p;
            d *= p;
        }
        p += 1;
    }
    // every prime factor left exceeds the cube root, so at most two remain
    let r = rest.sqrt();
    if r * r == rest {
        s *= r;
    } else {
        d *= rest;
    }
    Ok((BigInt::from(s), BigInt::from(d)))
}

/// `disc / lc^2`, the squared distance between the two roots.
fn squared_gap(a: &Poly) -> Result<Rational> {
    if a.degree() != Some(2) {
        return inapplicable(format!("{a} does not have degree 2"));
    }
    let (c2, c1, c0) = (a.coeff(2), a.coeff(1), a.coeff(0));
    let g = (&c1 * &c1 - int(4) * &c2 * &c0) / (&c2 * &c2);
    if g.is_zero() {
        return inapplicable(format!("{a} has a repeated root"));
    }
    Ok(g)
}

fn rational_sqrt(r: &Rational) -> Option<Rational> {
    crate::exactpoly::rational_nth_root(r, 2).ok().flatten()
}

impl QuadraticRootGap {
    /// The positive difference of the roots of a degree-2 polynomial.
    pub fn of(a: &Poly) -> Result<Self> {
        let g = squared_gap(a)?;
        if let Some(r) = rational_sqrt(&g) {
            return Ok(QuadraticRootGap {
                rational_part: r,
                radical_part: None,
            });
        }
        let sign = if g.is_negative() { -1 } else { 1 };
        // sqrt(n/d) = sqrt(|n| d) / d
        let (n, d) = (g.numer().abs(), g.denom().clone());
        let (s, free) = squarefree_split(&(&n * &d))?;
        let coeff = Rational::new(s, d);
        Ok(QuadraticRootGap {
            rational_part: Rational::zero(),
            radical_part: Some((coeff, free * sign)),
        })
    }
}

/// `alpha1 - alpha2 = epsilon (alpha1' - alpha2') + m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgesWitness {
    pub epsilon: i64,
    pub m: BigInt,
}

/// Morita equivalence of classical `A(a1)`, `A(a2)` with `deg = 2` and
/// distinct roots, decided from discriminants.
pub fn hodges_morita_deg2(a1: &Poly, a2: &Poly) -> Result<Option<HodgesWitness>> {
    let (g1, g2) = (squared_gap(a1)?, squared_gap(a2)?);
    match (rational_sqrt(&g1), rational_sqrt(&g2)) {
        (Some(r1), Some(r2)) => {
            for epsilon in [1, -1] {
                let m = &r1 - &r2 * int(epsilon);
                if is_integer(&m) {
                    return Ok(Some(HodgesWitness {
                        epsilon,
                        m: m.to_integer(),
                    }));
                }
            }
            Ok(None)
        }
        // sqrt(g1) - eps sqrt(g2) is rational only when g1 = g2
        (None, None) if g1 == g2 => Ok(Some(HodgesWitness {
            epsilon: 1,
            m: BigInt::zero(),
        })),
        _ => Ok(None),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MoritaWitness {
    Hodges(HodgesWitness),
    Roots(RootWitness),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MoritaVerdict {
    NotEquivalent(&'static str),
    NecessaryConditionsPass,
    SufficientConditionMet(MoritaWitness),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoritaReport {
    pub verdict: MoritaVerdict,
    pub checks: Vec<Check>,
}

struct Side {
    field: FractionField,
    q: Rational,
    laurent: bool,
    /// `a` over `k[h]`, or the unit part for Laurent presentations
    poly: Poly,
    classical: Option<Poly>,
}

fn side(p: &GwaPresentation) -> Result<Side> {
    if p.a().is_zero() || (p.a().is_monomial() && p.a().valuation() == 0) {
        return unsupported("Morita conditions need a non-constant a");
    }
    let field = presentation_fraction_field(p)?.field;
    let (poly, classical) = match p.base() {
        BaseRing::Laurent => (p.a().unit_part().clone(), None),
        BaseRing::Polynomial => match canonicalize_presentation(p)?.variant {
            CanonicalVariant::Classical { a } => (a.clone(), Some(a)),
            CanonicalVariant::Quantum { a, .. } => (a, None),
            CanonicalVariant::Commutative => (p.a_poly().expect("k[h]"), None),
        },
    };
    Ok(Side {
        field,
        q: p.q().clone(),
        laurent: p.base() == BaseRing::Laurent,
        poly,
        classical,
    })
}

fn gcd_degree(a: &Poly) -> Result<u32> {
    Ok(poly_gcd(a, &a.derivative())?.degree().unwrap_or(0))
}

/// Runs the necessary conditions in order and stops at the first failure.
/// Classical degree-2 pairs are then decided by the root-gap criterion.
pub fn morita_necessary(p1: &GwaPresentation, p2: &GwaPresentation) -> Result<MoritaReport> {
    let (s1, s2) = (side(p1)?, side(p2)?);
    let mut checks = Vec::new();
    let mut record = |name: &'static str, passed: bool, detail: String| {
        checks.push(Check {
            name,
            passed,
            detail,
        });
        passed
    };
    let family = |f: &FractionField| match f {
        FractionField::CommutativeRational => "k(h,x)",
        FractionField::Weyl1 => "D1(k)",
        FractionField::QuantumSkew(_) => "k_q(u,v)",
    };
    let verdict = 'run: {
        let (f1, f2) = (family(&s1.field), family(&s2.field));
        if !record("fraction-field", f1 == f2, format!("{f1} vs {f2}")) {
            break 'run MoritaVerdict::NotEquivalent("fraction-field");
        }
        if let (FractionField::QuantumSkew(q1), FractionField::QuantumSkew(q2)) =
            (&s1.field, &s2.field)
        {
            let same = same_cyclic_group(q1, q2);
            if !record("q-group", same, format!("<{q1}> vs <{q2}>")) {
                break 'run MoritaVerdict::NotEquivalent("q-group");
            }
        }
        let (d1, d2) = (s1.poly.degree(), s2.poly.degree());
        if !record(
            "degree",
            d1 == d2,
            format!("{} vs {}", d1.unwrap_or(0), d2.unwrap_or(0)),
        ) {
            break 'run MoritaVerdict::NotEquivalent("degree");
        }
        let (g1, g2) = (gcd_degree(&s1.poly)?, gcd_degree(&s2.poly)?);
        if !record("gcd-degree", g1 == g2, format!("{g1} vs {g2}")) {
            break 'run MoritaVerdict::NotEquivalent("gcd-degree");
        }
        if s1.laurent && s2.laurent {
            let simple1 = is_simple_quantum(p1.a(), &s1.q)?.0;
            let simple2 = is_simple_quantum(p2.a(), &s2.q)?.0;
            if simple1 && simple2 {
                let ok = s1.q == s2.q || s1.q == s2.q.recip();
                if !record("q-power", ok, format!("{} vs {}", s1.q, s2.q)) {
                    break 'run MoritaVerdict::NotEquivalent("q-power");
                }
            }
        }
        if let (Some(a1), Some(a2)) = (&s1.classical, &s2.classical) {
            if a1.degree() == Some(2) && gcd_degree(a1)? == 0 && gcd_degree(a2)? == 0 {
                let w = hodges_morita_deg2(a1, a2)?;
                let detail = format!(
                    "gaps {} and {}",
                    QuadraticRootGap::of(a1).map_or("?".into(), |g| g.to_string()),
                    QuadraticRootGap::of(a2).map_or("?".into(), |g| g.to_string())
                );
                if !record("root-gap", w.is_some(), detail) {
                    break 'run MoritaVerdict::NotEquivalent("root-gap");
                }
                break 'run MoritaVerdict::SufficientConditionMet(MoritaWitness::Hodges(
                    w.expect("checked"),
                ));
            }
        }
        MoritaVerdict::NecessaryConditionsPass
    };
    Ok(MoritaReport { verdict, checks })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootMode<'a> {
    Classical,
    Quantum(&'a Rational),
}

/// `alpha_i = alpha'_{tau(i)} + m_i` (classical) or
/// `alpha_i = q^{m_i} alpha'_{tau(i)}` (quantum).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootWitness {
    pub tau: Vec<usize>,
    pub m: Vec<i64>,
}

/// Search for the root correspondence of the degree-`n` sufficient
/// condition, `3 <= n <= 8`.
pub fn morita_sufficient(
    roots1: &[Rational],
    roots2: &[Rational],
    mode: RootMode<'_>,
) -> Result<Option<RootWitness>> {
    let n = roots1.len();
    if roots2.len() != n {
        return invalid("root lists have different lengths");
    }
    if !(3..=8).contains(&n) {
        return unsupported(format!("n = {n} outside 3..=8"));
    }
    for roots in [roots1, roots2] {
        let a = Poly::from_roots(Rational::one(), roots);
        let simple = match mode {
            RootMode::Classical => is_simple_classical(&a)?,
            RootMode::Quantum(q) => {
                if roots.iter().any(Zero::is_zero) {
                    return inapplicable("zero is not a root of a Laurent polynomial");
                }
                is_simple_quantum(&a.into(), q)?
            }
        };
        if !simple.0 {
            return inapplicable(format!(
                "roots {} fail the simplicity criterion: {}",
                roots.iter().join(", "),
                simple.1
            ));
        }
    }
    let offset = |i: usize, j: usize| -> Option<i64> {
        match mode {
            RootMode::Classical => {
                let d = &roots1[i] - &roots2[j];
                is_integer(&d).then(|| d.to_integer().to_i64()).flatten()
            }
            RootMode::Quantum(q) => rational_log(&(&roots1[i] / &roots2[j]), q),
        }
    };
    for tau in (0..n).permutations(n) {
        let m: Option<Vec<i64>> = (0..n).map(|i| offset(i, tau[i])).collect();
        if let Some(m) = m {
            return Ok(Some(RootWitness { tau, m }));
        }
    }
    Ok(None)
}
