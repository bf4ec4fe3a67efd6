//! Quantum Smith algebras `R(f)`: `xh = sigma(h) x`, `hy = y sigma(h)`,
//! `xy - yx = f(h)`, with `f = a(sigma(h)) - a(h)`, and the reductions of the
//! Witten and Le Bruyn deformations to this form.

use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::is_generic_q;
use crate::canonical::{canonicalize, CanonicalVariant};
use crate::error::{inapplicable, invalid, unsupported, Result};
use crate::exactpoly::{int, pow, Poly, Rational};
use crate::iso::{scaling_match, FieldMode, Scalar};

/// `R(f)` with the representative `a`, `a(0) = 0`, of the datum it determines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithPresentation {
    q: Rational,
    f: Poly,
    a: Poly,
}

impl SmithPresentation {
    pub fn new(q: Rational, f: Poly) -> Result<Self> {
        if f.is_zero() {
            return invalid("f must be nonzero");
        }
        let a = solve_a_from_f(&f, &q)?;
        Ok(SmithPresentation { q, f, a })
    }

    /// The presentation whose datum is `a` up to its constant term.
    pub fn from_a(q: Rational, a: &Poly) -> Result<Self> {
        if !is_generic_q(&q) {
            return unsupported(format!("q = {q} is zero or a root of unity"));
        }
        let a = a - &Poly::constant(a.coeff(0));
        if a.is_zero() {
            return invalid("a must be non-constant");
        }
        let f = &a.scale_var(&q) - &a;
        Ok(SmithPresentation { q, f, a })
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn a(&self) -> &Poly {
        &self.a
    }
}

impl fmt::Display for SmithPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "R(f) with q = {}, f = {}, a = {}",
            self.q, self.f, self.a
        )
    }
}

/// The unique `a` with `a(0) = 0` and `a(q h) - a(h) = f(h)`.
pub fn solve_a_from_f(f: &Poly, q: &Rational) -> Result<Poly> {
    if !is_generic_q(q) {
        return unsupported(format!("q = {q} is zero or a root of unity"));
    }
    if !f.coeff(0).is_zero() {
        return invalid("f(0)=0 required");
    }
    Ok(Poly::from_terms(f.terms().map(|(i, c)| {
        (i, c / (pow(q, i as i64) - Rational::one()))
    })))
}

/// `a1(h) = rho * a2(beta h) + alpha`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithWitness {
    pub rho: Scalar,
    pub beta: Scalar,
    pub alpha: Rational,
}

impl fmt::Display for SmithWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "a1(h) = rho * a2(beta h) + alpha, rho = {}, beta = {}, alpha = {}",
            self.rho, self.beta, self.alpha
        )
    }
}

/// Decides `R(f1) = R(f2)`. Constants are absorbed by `alpha`, so only the
/// coefficients of positive degree are matched.
pub fn smith_iso(
    s1: &SmithPresentation,
    s2: &SmithPresentation,
    mode: FieldMode,
) -> Result<Option<SmithWitness>> {
    if s1.q != s2.q {
        return invalid(format!("q differs: {} vs {}", s1.q, s2.q));
    }
    let found = scaling_match(&s2.a.clone().into(), &s1.a.clone().into(), mode)?;
    Ok(found.map(|(rho, beta)| {
        let alpha = match rho.exact() {
            Some(r) => s1.a.coeff(0) - r * s2.a.coeff(0),
            None => Rational::zero(),
        };
        SmithWitness { rho, beta, alpha }
    }))
}

/// The seven deformation parameters of the Witten algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WittenParams {
    pub eps: [Rational; 7],
}

impl WittenParams {
    pub fn new(eps: [Rational; 7]) -> Self {
        WittenParams { eps }
    }

    /// Fills `eps3, eps4, eps5, eps7` from the constraints.
    pub fn from_free(eps1: Rational, eps2: Rational, eps6: Rational) -> Result<Self> {
        let d = &eps1 * &eps1 - Rational::one();
        if d.is_zero() {
            return invalid("eps1 must not be 1 or -1");
        }
        let eps7 = int(2) * &eps6 * &eps1 * &eps2 / d;
        Ok(WittenParams {
            eps: [
                eps1.clone(),
                eps2.clone(),
                eps1,
                eps2,
                Rational::one(),
                eps6,
                eps7,
            ],
        })
    }

    /// Checks the conditions making `M(eps)` a quantum Smith algebra.
    pub fn validate(&self) -> Result<()> {
        let [e1, e2, e3, e4, e5, e6, e7] = &self.eps;
        if e1 != e3 {
            return invalid("violated: eps1 = eps3");
        }
        if !is_generic_q(e1) {
            return invalid("violated: eps1 not in {0, 1, -1}");
        }
        if e2 != e4 {
            return invalid("violated: eps2 = eps4");
        }
        if !e5.is_one() {
            return invalid("violated: eps5 = 1");
        }
        let expected = int(2) * e6 * e1 * e2 / (e1 * e1 - Rational::one());
        if *e7 != expected {
            return invalid("violated: eps7 = 2 eps6 eps1 eps2 / (eps1^2 - 1)");
        }
        Ok(())
    }
}

/// A deformation rewritten as a Smith algebra, with the closed-form
/// representative it is expected to match.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithReduction {
    /// `a` in the original variable `z`.
    pub a_original: Poly,
    /// Presentation after moving the fixed point of `sigma` to 0.
    pub smith: SmithPresentation,
    pub closed_form: Poly,
    pub witness: Option<SmithWitness>,
}

impl SmithReduction {
    pub fn agrees(&self) -> bool {
        self.witness.is_some()
    }
}

/// Witten's `M(eps)` as `R(f)`. Here `sigma(z) = eps2 + eps1 z` and
/// `a(z) = eps6/(eps1^2-1) z^2 - eps6 eps2^2/(eps1 (eps1^2-1)) z`; the
/// result is compared with `z^2 - (eps2^2/eps1) z`.
pub fn witten_to_smith(w: &WittenParams) -> Result<SmithReduction> {
    w.validate()?;
    let [e1, e2, _, _, _, e6, _] = &w.eps;
    if e6.is_zero() {
        return inapplicable("eps6 = 0 gives a constant a");
    }
    let d = e1 * e1 - Rational::one();
    let a = Poly::from_terms([(2, e6 / &d), (1, -(e6 * e2 * e2) / (e1 * &d))]);
    let closed_form = Poly::from_terms([(2, Rational::one()), (1, -(e2 * e2) / e1)]);
    reduce(e1, &-e2, a, closed_form)
}

/// Le Bruyn's conformal `sl2` deformation with `sigma(z) = alpha z` and
/// `a(z) = beta/(alpha^2-1) z^2 + beta/(alpha (1-alpha^2)) z`, compared
/// with `z^2 - z/alpha`.
pub fn lebruyn_to_smith(alpha: &Rational, beta: &Rational) -> Result<SmithReduction> {
    if !is_generic_q(alpha) {
        return unsupported(format!("alpha = {alpha} must avoid 0, 1, -1"));
    }
    if beta.is_zero() {
        return inapplicable("beta = 0: f is zero, the algebra is degenerate");
    }
    let d = alpha * alpha - Rational::one();
    let a = Poly::from_terms([(2, beta / &d), (1, -beta / (alpha * &d))]);
    let closed_form = Poly::from_terms([(2, Rational::one()), (1, -alpha.recip())]);
    reduce(alpha, &Rational::zero(), a, closed_form)
}

fn reduce(q: &Rational, h0: &Rational, a: Poly, closed_form: Poly) -> Result<SmithReduction> {
    let class = canonicalize(q, h0, &a)?;
    let CanonicalVariant::Quantum { a: shifted, .. } = &class.variant else {
        unreachable!("q is generic");
    };
    let smith = SmithPresentation::from_a(q.clone(), shifted)?;
    let reference = SmithPresentation::from_a(q.clone(), &closed_form)?;
    let witness = smith_iso(&smith, &reference, FieldMode::OverClosure)?;
    Ok(SmithReduction {
        a_original: a,
        smith,
        closed_form,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn solve_examples() {
        assert_eq!(solve_a_from_f(&p(&[0, 1]), &int(2)).unwrap(), p(&[0, 1]));
        assert_eq!(
            solve_a_from_f(&p(&[0, 1, 1]), &int(2)).unwrap(),
            Poly::from_terms([(1, int(1)), (2, rat(1, 3))])
        );
        assert_eq!(
            solve_a_from_f(&p(&[0, 0, 0, 3]), &int(2)).unwrap(),
            Poly::monomial(rat(3, 7), 3)
        );
        assert!(matches!(
            solve_a_from_f(&p(&[1, 1]), &int(2)),
            Err(crate::Error::InvalidArgument(_))
        ));
        assert!(matches!(
            solve_a_from_f(&p(&[0, 1]), &int(-1)),
            Err(crate::Error::Unsupported(_))
        ));
    }

    #[test]
    fn iso_examples() {
        let s = |c: &[i64]| SmithPresentation::new(int(2), p(c)).unwrap();
        let w = smith_iso(&s(&[0, 1]), &s(&[0, 2]), FieldMode::OverClosure).unwrap();
        assert_eq!(
            w,
            Some(SmithWitness {
                rho: Scalar::Exact(rat(1, 2)),
                beta: Scalar::Exact(int(1)),
                alpha: int(0)
            })
        );
        assert_eq!(
            smith_iso(&s(&[0, 0, 1]), &s(&[0, 1]), FieldMode::OverClosure).unwrap(),
            None
        );

        // a2(h) = a1(3h) + 5
        let a1 = p(&[0, 1, 2, 0, 1]);
        let a2 = &a1.scale_var(&int(3)) + &Poly::constant(int(5));
        let f2 = &a2.scale_var(&int(2)) - &a2;
        let s1 = SmithPresentation::from_a(int(2), &a1).unwrap();
        let s2 = SmithPresentation::new(int(2), f2).unwrap();
        let w = smith_iso(&s2, &s1, FieldMode::OverRationals)
            .unwrap()
            .unwrap();
        assert_eq!(w.beta, Scalar::Exact(int(3)));
        let (rho, beta) = (w.rho.exact().unwrap(), w.beta.exact().unwrap());
        assert_eq!(
            &s1.a().scale_var(beta).scale(rho) + &Poly::constant(w.alpha.clone()),
            *s2.a()
        );
        let other = SmithPresentation::new(int(3), p(&[0, 1])).unwrap();
        assert!(smith_iso(&s1, &other, FieldMode::OverClosure).is_err());
    }

    #[test]
    fn witten_examples() {
        let w = WittenParams::new([2, 1, 2, 1, 1, 3, 4].map(int));
        let r = witten_to_smith(&w).unwrap();
        assert_eq!(
            r.a_original,
            Poly::from_terms([(2, int(1)), (1, rat(-1, 2))])
        );
        assert!(r.agrees());

        let w = WittenParams::from_free(int(2), int(0), int(1)).unwrap();
        let r = witten_to_smith(&w).unwrap();
        assert_eq!(r.a_original, Poly::monomial(rat(1, 3), 2));
        assert!(r.agrees());

        let bad = WittenParams::new([2, 1, 2, 1, 2, 3, 4].map(int));
        assert_eq!(
            witten_to_smith(&bad),
            Err(crate::Error::InvalidArgument("violated: eps5 = 1".into()))
        );
        let bad = WittenParams::new([2, 1, 2, 1, 1, 3, 5].map(int));
        assert!(witten_to_smith(&bad).is_err());
    }

    #[test]
    fn witten_exceptional_curve() {
        // eps2 = 2 eps1 / (1 - eps1) puts the fixed point of sigma at half the
        // linear root, so the shifted a is a monomial while z^2 - (eps2^2/eps1) z is not.
        let e1 = int(3);
        let e2 = int(2) * &e1 / (Rational::one() - &e1);
        let r = witten_to_smith(&WittenParams::from_free(e1, e2, int(1)).unwrap()).unwrap();
        assert!(r.smith.a().is_monomial());
        assert!(!r.agrees());
    }

    #[test]
    fn lebruyn_examples() {
        let r = lebruyn_to_smith(&int(2), &int(3)).unwrap();
        assert!(r.agrees());
        let r = lebruyn_to_smith(&int(3), &int(1)).unwrap();
        assert_eq!(
            r.a_original,
            Poly::from_terms([(2, rat(1, 8)), (1, rat(-1, 24))])
        );
        assert!(r.agrees());
        assert!(matches!(
            lebruyn_to_smith(&int(2), &int(0)),
            Err(crate::Error::Inapplicable(_))
        ));
        assert!(lebruyn_to_smith(&int(1), &int(3)).is_err());
    }
}
