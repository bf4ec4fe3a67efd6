//! Automorphism groups of quantum GWAs `k[h](sigma, a)` with `sigma(h) = q h`,
//! and scalar-diagonal automorphisms with values in a cyclotomic monomial ring.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::algebra::GwaPresentation;
use crate::error::{invalid, unsupported, Error, Result};
use crate::exactpoly::{pow, Poly, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AutStructure {
    /// `Z/p x k*`
    ZmodPTimesKstar(u32),
    /// `k* x k*`
    KstarTimesKstar,
}

impl fmt::Display for AutStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AutStructure::ZmodPTimesKstar(1) => write!(f, "k*"),
            AutStructure::ZmodPTimesKstar(p) => write!(f, "Z/{p} x k*"),
            AutStructure::KstarTimesKstar => write!(f, "k* x k*"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AutDescriptor {
    pub monomial: bool,
    /// gcd of the support gaps; 1 for monomials.
    pub p: u32,
    /// valuation of `a`
    pub i0: u32,
    pub degree: u32,
    pub structure: AutStructure,
}

/// Describes `Aut k[h](sigma, a)` from the support of `a`.
pub fn aut_descriptor(a: &Poly) -> Result<AutDescriptor> {
    if a.is_constant() {
        return unsupported("automorphism groups need a non-constant a");
    }
    let support = a.support();
    let i0 = support[0];
    let degree = *support.last().expect("nonzero");
    let monomial = support.len() == 1;
    let p = support[1..].iter().fold(0u32, |g, i| g.gcd(&(i - i0)));
    Ok(AutDescriptor {
        monomial,
        p: p.max(1),
        i0,
        degree,
        structure: if monomial {
            AutStructure::KstarTimesKstar
        } else {
            AutStructure::ZmodPTimesKstar(p)
        },
    })
}

/// `coefficient * zeta^zeta_exponent` for a fixed primitive `modulus`-th root
/// of unity `zeta`.
///
/// For even moduli `zeta^(p/2) = -1` is folded into the coefficient, so the
/// stored exponent is always below `p/2` and equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycloScalar {
    coefficient: Rational,
    zeta_exponent: u32,
    modulus: u32,
}

impl CycloScalar {
    pub fn new(coefficient: Rational, zeta_exponent: i64, modulus: u32) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        let mut e = zeta_exponent.rem_euclid(modulus as i64) as u32;
        let mut c = coefficient;
        if modulus.is_multiple_of(2) && e >= modulus / 2 {
            e -= modulus / 2;
            c = -c;
        }
        if c.is_zero() {
            e = 0;
        }
        CycloScalar {
            coefficient: c,
            zeta_exponent: e,
            modulus,
        }
    }

    pub fn rational(c: Rational, modulus: u32) -> Self {
        Self::new(c, 0, modulus)
    }

    pub fn zeta(modulus: u32) -> Self {
        Self::new(Rational::one(), 1, modulus)
    }

    pub fn coefficient(&self) -> &Rational {
        &self.coefficient
    }

    pub fn zeta_exponent(&self) -> u32 {
        self.zeta_exponent
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.coefficient.is_zero()
    }

    /// The value as a rational, when the zeta power is trivial.
    pub fn to_rational(&self) -> Option<&Rational> {
        (self.zeta_exponent == 0).then_some(&self.coefficient)
    }

    pub fn pow(&self, n: i64) -> CycloScalar {
        CycloScalar::new(
            pow(&self.coefficient, n),
            self.zeta_exponent as i64 * n,
            self.modulus,
        )
    }

    pub fn recip(&self) -> CycloScalar {
        self.pow(-1)
    }

    fn same_ring(&self, other: &CycloScalar) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::Structural(format!(
                "roots of unity of orders {} and {} mixed",
                self.modulus, other.modulus
            )));
        }
        Ok(())
    }

    pub fn checked_mul(&self, other: &CycloScalar) -> Result<CycloScalar> {
        self.same_ring(other)?;
        Ok(CycloScalar::new(
            &self.coefficient * &other.coefficient,
            (self.zeta_exponent + other.zeta_exponent) as i64,
            self.modulus,
        ))
    }

    /// Sum of two scalars on the same zeta power; anything else would leave
    /// the monomial representation.
    pub fn checked_add(&self, other: &CycloScalar) -> Result<CycloScalar> {
        self.same_ring(other)?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.zeta_exponent != other.zeta_exponent {
            return Err(Error::Structural(format!(
                "cannot add zeta^{} and zeta^{} terms",
                self.zeta_exponent, other.zeta_exponent
            )));
        }
        Ok(CycloScalar::new(
            &self.coefficient + &other.coefficient,
            self.zeta_exponent as i64,
            self.modulus,
        ))
    }
}

impl Mul for &CycloScalar {
    type Output = CycloScalar;

    fn mul(self, rhs: &CycloScalar) -> CycloScalar {
        self.checked_mul(rhs).expect("scalars from different rings")
    }
}

impl fmt::Display for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.zeta_exponent {
            0 => write!(f, "{}", self.coefficient),
            1 => write!(f, "{}*zeta{}", self.coefficient, self.modulus),
            e => write!(f, "{}*zeta{}^{e}", self.coefficient, self.modulus),
        }
    }
}

/// `h -> s_h h, x -> s_x x, y -> s_y y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycloMap {
    pub s_h: CycloScalar,
    pub s_x: CycloScalar,
    pub s_y: CycloScalar,
}

impl CycloMap {
    pub fn identity(modulus: u32) -> Self {
        let one = CycloScalar::rational(Rational::one(), modulus);
        CycloMap {
            s_h: one.clone(),
            s_x: one.clone(),
            s_y: one,
        }
    }

    pub fn compose(&self, other: &CycloMap) -> Result<CycloMap> {
        Ok(CycloMap {
            s_h: self.s_h.checked_mul(&other.s_h)?,
            s_x: self.s_x.checked_mul(&other.s_x)?,
            s_y: self.s_y.checked_mul(&other.s_y)?,
        })
    }

    pub fn inverse(&self) -> Result<CycloMap> {
        if self.s_h.is_zero() || self.s_x.is_zero() || self.s_y.is_zero() {
            return invalid("a scalar map with a zero entry is not invertible");
        }
        Ok(CycloMap {
            s_h: self.s_h.recip(),
            s_x: self.s_x.recip(),
            s_y: self.s_y.recip(),
        })
    }
}

impl fmt::Display for CycloMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "h -> ({})*h, x -> ({})*x, y -> ({})*y",
            self.s_h, self.s_x, self.s_y
        )
    }
}

/// Torsion automorphism of a non-monomial `a`:
/// `x -> alpha x, h -> zeta^e h, y -> zeta^(e i0) alpha^-1 y`, `zeta` of order `p`.
pub fn make_automorphism(d: &AutDescriptor, alpha: &Rational, e: i64) -> Result<CycloMap> {
    if d.monomial {
        return invalid("monomial a: use make_monomial_automorphism");
    }
    if alpha.is_zero() {
        return invalid("alpha must be nonzero");
    }
    if e < 0 || e >= d.p as i64 {
        return invalid(format!("e = {e} outside 0..{}", d.p));
    }
    let p = d.p;
    Ok(CycloMap {
        s_h: CycloScalar::new(Rational::one(), e, p),
        s_x: CycloScalar::rational(alpha.clone(), p),
        s_y: CycloScalar::new(alpha.recip(), e * d.i0 as i64, p),
    })
}

/// Automorphism of `a = c h^n`: `x -> alpha x, h -> gamma h, y -> gamma^n alpha^-1 y`.
pub fn make_monomial_automorphism(
    d: &AutDescriptor,
    alpha: &Rational,
    gamma: &Rational,
) -> Result<CycloMap> {
    if !d.monomial {
        return invalid("non-monomial a: use make_automorphism");
    }
    if alpha.is_zero() || gamma.is_zero() {
        return invalid("alpha and gamma must be nonzero");
    }
    let s_y = pow(gamma, d.degree as i64) / alpha;
    Ok(CycloMap {
        s_h: CycloScalar::rational(gamma.clone(), 1),
        s_x: CycloScalar::rational(alpha.clone(), 1),
        s_y: CycloScalar::rational(s_y, 1),
    })
}

/// Outcome of checking a scalar map against the defining relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AutCheck {
    Verified,
    Violated(&'static str),
    Malformed(String),
}

impl AutCheck {
    pub fn is_automorphism(&self) -> bool {
        matches!(self, AutCheck::Verified)
    }
}

type CycloPoly = BTreeMap<i64, CycloScalar>;

fn normalize(p: CycloPoly) -> CycloPoly {
    p.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// `s * (scale h + shift)`.
fn affine(s: &CycloScalar, scale: &Rational, shift: &Rational) -> CycloPoly {
    let m = s.modulus();
    normalize(CycloPoly::from([
        (1, s * &CycloScalar::rational(scale.clone(), m)),
        (0, s * &CycloScalar::rational(shift.clone(), m)),
    ]))
}

/// Checks the four defining relations of `pres` after substituting the map,
/// comparing coefficients of each power of `h` separately.
pub fn verify_automorphism(map: &CycloMap, pres: &GwaPresentation) -> Result<AutCheck> {
    if !pres.has_generic_q() {
        return unsupported(format!("q = {} is zero or a root of unity", pres.q()));
    }
    let m = map.s_h.modulus();
    if map.s_x.modulus() != m || map.s_y.modulus() != m {
        return Ok(AutCheck::Malformed(
            "scalars use different roots of unity".into(),
        ));
    }
    if map.s_h.is_zero() || map.s_x.is_zero() || map.s_y.is_zero() {
        return Ok(AutCheck::Violated("invertibility"));
    }
    let r = |c: &Rational| CycloScalar::rational(c.clone(), m);
    let (s, t) = pres.sigma_power_affine(1);
    let (si, ti) = pres.sigma_power_affine(-1);
    let sxh = &map.s_x * &map.s_h;
    let syh = &map.s_y * &map.s_h;
    let sxy = &map.s_x * &map.s_y;

    // x h = sigma(h) x and y h = sigma^-1(h) y
    let lhs = affine(&sxh, &s, &t);
    let rhs = normalize(CycloPoly::from([
        (1, &(&r(&s) * &map.s_h) * &map.s_x),
        (0, &r(&t) * &map.s_x),
    ]));
    if lhs != rhs {
        return Ok(AutCheck::Violated("x h = sigma(h) x"));
    }
    let lhs = affine(&syh, &si, &ti);
    let rhs = normalize(CycloPoly::from([
        (1, &(&r(&si) * &map.s_h) * &map.s_y),
        (0, &r(&ti) * &map.s_y),
    ]));
    if lhs != rhs {
        return Ok(AutCheck::Violated("y h = sigma^-1(h) y"));
    }

    // x y = sigma(a) and y x = a: scalar times c(h) against c(s_h h)
    let relation = |c: &crate::exactpoly::LaurentPoly| -> bool {
        c.terms()
            .all(|(i, ci)| &sxy * &r(ci) == &r(ci) * &map.s_h.pow(i))
    };
    if !relation(&pres.sigma_pow(pres.a(), 1)) {
        return Ok(AutCheck::Violated("x y = sigma(a)"));
    }
    if !relation(pres.a()) {
        return Ok(AutCheck::Violated("y x = a"));
    }
    Ok(AutCheck::Verified)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GwaElement;
    use crate::exactpoly::{int, rat, LaurentPoly};

    fn pres(c: &[i64]) -> GwaPresentation {
        GwaPresentation::quantum(int(2), Poly::from_ints(c)).unwrap()
    }

    #[test]
    fn descriptors() {
        let d = aut_descriptor(&Poly::from_ints(&[0, 1, 0, 1])).unwrap();
        assert_eq!(
            (d.p, d.i0, d.structure.to_string()),
            (2, 1, "Z/2 x k*".into())
        );
        let d = aut_descriptor(&Poly::from_ints(&[1, 1, 1])).unwrap();
        assert_eq!((d.p, d.i0), (1, 0));
        let d = aut_descriptor(&Poly::from_ints(&[0, 0, 1, 0, 1])).unwrap();
        assert_eq!((d.p, d.i0), (2, 2));
        let d = aut_descriptor(&Poly::from_ints(&[0, 0, 0, 5])).unwrap();
        assert!(d.monomial);
        assert_eq!(d.structure, AutStructure::KstarTimesKstar);
        assert!(aut_descriptor(&Poly::from_ints(&[3])).is_err());
    }

    #[test]
    fn cyclo_arithmetic() {
        let z = CycloScalar::zeta(4);
        assert_eq!(z.pow(2), CycloScalar::rational(int(-1), 4));
        assert_eq!(z.pow(4), CycloScalar::rational(int(1), 4));
        assert_eq!(CycloScalar::zeta(2), CycloScalar::rational(int(-1), 2));
        assert_eq!(z.recip(), CycloScalar::new(int(-1), 1, 4));
        let a = CycloScalar::new(int(2), 1, 6);
        assert!(a.checked_add(&CycloScalar::rational(int(1), 6)).is_err());
        assert_eq!(
            a.checked_add(&CycloScalar::new(int(3), 1, 6)).unwrap(),
            CycloScalar::new(int(5), 1, 6)
        );
        assert!(a.checked_mul(&CycloScalar::zeta(3)).is_err());
    }

    #[test]
    fn reflection_of_h3_plus_h() {
        let a = pres(&[0, 1, 0, 1]);
        let d = aut_descriptor(&a.a_poly().unwrap()).unwrap();
        let map = make_automorphism(&d, &int(2), 1).unwrap();
        assert_eq!(map.s_h.to_rational(), Some(&int(-1)));
        assert_eq!(map.s_y.to_rational(), Some(&rat(-1, 2)));
        assert!(verify_automorphism(&map, &a).unwrap().is_automorphism());

        // the same relation y x = a computed in the algebra itself
        let img = |s: &CycloScalar, g: GwaElement| g.scale(s.to_rational().unwrap());
        let (px, py) = (
            img(&map.s_x, GwaElement::x()),
            img(&map.s_y, GwaElement::y()),
        );
        let a_of_minus_h = LaurentPoly::from_poly(a.a_poly().unwrap().scale_var(&int(-1)));
        assert_eq!(a.multiply(&py, &px), GwaElement::coeff(a_of_minus_h));
    }

    #[test]
    fn identity_and_monomial() {
        for c in [[1, 1, 1, 0], [0, 1, 0, 1], [2, 0, 0, 1]] {
            let a = pres(&c);
            let d = aut_descriptor(&a.a_poly().unwrap()).unwrap();
            let id = make_automorphism(&d, &int(1), 0).unwrap();
            assert_eq!(id, CycloMap::identity(d.p));
            assert!(verify_automorphism(&id, &a).unwrap().is_automorphism());
        }
        let a = pres(&[0, 0, 1]);
        let d = aut_descriptor(&a.a_poly().unwrap()).unwrap();
        let map = make_monomial_automorphism(&d, &int(3), &int(5)).unwrap();
        assert_eq!(map.s_y.to_rational(), Some(&rat(25, 3)));
        assert!(verify_automorphism(&map, &a).unwrap().is_automorphism());
    }

    #[test]
    fn rejections() {
        let a = pres(&[0, 1, 0, 1]);
        let d = aut_descriptor(&a.a_poly().unwrap()).unwrap();
        assert!(make_automorphism(&d, &int(1), 2).is_err());
        assert!(make_automorphism(&d, &int(0), 0).is_err());
        // zeta of order 3 does not divide the gap 2
        let bad = CycloMap {
            s_h: CycloScalar::zeta(3),
            s_x: CycloScalar::rational(int(1), 3),
            s_y: CycloScalar::zeta(3),
        };
        assert!(!verify_automorphism(&bad, &a).unwrap().is_automorphism());
        let mut wrong_y = make_automorphism(&d, &int(2), 1).unwrap();
        wrong_y.s_y = CycloScalar::rational(rat(1, 2), 2);
        assert_eq!(
            verify_automorphism(&wrong_y, &a).unwrap(),
            AutCheck::Violated("x y = sigma(a)")
        );
        let mixed = CycloMap {
            s_h: CycloScalar::zeta(3),
            ..CycloMap::identity(2)
        };
        assert!(matches!(
            verify_automorphism(&mixed, &a).unwrap(),
            AutCheck::Malformed(_)
        ));
        let classical = GwaPresentation::new(int(1), int(1), Poly::from_ints(&[0, 1])).unwrap();
        assert!(verify_automorphism(&CycloMap::identity(1), &classical).is_err());
    }

    #[test]
    fn rational_gammas() {
        for (c, allowed) in [(vec![0, 1, 0, 1], vec![1, -1]), (vec![1, 1, 1], vec![1])] {
            let a = pres(&c);
            let d = aut_descriptor(&a.a_poly().unwrap()).unwrap();
            for g in [-3, -2, -1, 1, 2, 3] {
                let map = CycloMap {
                    s_h: CycloScalar::rational(int(g), 1),
                    s_x: CycloScalar::rational(int(7), 1),
                    s_y: CycloScalar::rational(pow(&int(g), d.i0 as i64) / int(7), 1),
                };
                let ok = verify_automorphism(&map, &a).unwrap().is_automorphism();
                assert_eq!(ok, allowed.contains(&g), "a = {c:?}, gamma = {g}");
            }
        }
    }
}
