//! Canonical forms of degree-one GWAs and the fraction-field invariants that
//! separate the classical and quantum families.

use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{BaseRing, GwaPresentation};
use crate::error::{invalid, unsupported, Result};
use crate::exactpoly::{rational_log, Poly, Rational};

/// Old variable in terms of the new one: `h = scale * h' + shift`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChangeOfVariable {
    pub scale: Rational,
    pub shift: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CanonicalVariant {
    /// `sigma = id`.
    Commutative,
    /// `sigma(h') = h' - 1`.
    Classical { a: Poly },
    /// `sigma(h') = q h'`.
    Quantum { q: Rational, a: Poly },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalClass {
    pub variant: CanonicalVariant,
    pub change_of_variable: ChangeOfVariable,
}

impl CanonicalClass {
    /// Canonical defining polynomial `a'`; the input itself in the commutative case.
    pub fn canonical_a<'a>(&'a self, original: &'a Poly) -> &'a Poly {
        match &self.variant {
            CanonicalVariant::Commutative => original,
            CanonicalVariant::Classical { a } | CanonicalVariant::Quantum { a, .. } => a,
        }
    }

    /// The canonical presentation `k[h'](sigma_cl, a')` or `k[h'](sigma_q, a')`.
    pub fn presentation(&self, original: &Poly) -> Result<GwaPresentation> {
        match &self.variant {
            CanonicalVariant::Commutative => {
                GwaPresentation::new(Rational::one(), Rational::zero(), original.clone())
            }
            CanonicalVariant::Classical { a } => {
                GwaPresentation::new(Rational::one(), Rational::one(), a.clone())
            }
            CanonicalVariant::Quantum { q, a } => GwaPresentation::quantum(q.clone(), a.clone()),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self.variant {
            CanonicalVariant::Commutative => "commutative",
            CanonicalVariant::Classical { .. } => "classical",
            CanonicalVariant::Quantum { .. } => "quantum",
        }
    }
}

/// Reduces `sigma(h) = q h - h0` to one of the three canonical shapes.
pub fn canonicalize(q: &Rational, h0: &Rational, a: &Poly) -> Result<CanonicalClass> {
    if q.is_zero() {
        return invalid("q must be nonzero");
    }
    if a.is_zero() {
        return invalid("the defining polynomial must be nonzero");
    }
    let (variant, scale, shift) = if q.is_one() && h0.is_zero() {
        (
            CanonicalVariant::Commutative,
            Rational::one(),
            Rational::zero(),
        )
    } else if q.is_one() {
        let a2 = a.scale_var(h0);
        (
            CanonicalVariant::Classical { a: a2 },
            h0.clone(),
            Rational::zero(),
        )
    } else {
        let shift = -(h0 / (Rational::one() - q));
        let a2 = a.compose_affine(&Rational::one(), &shift)?;
        (
            CanonicalVariant::Quantum {
                q: q.clone(),
                a: a2,
            },
            Rational::one(),
            shift,
        )
    };
    Ok(CanonicalClass {
        variant,
        change_of_variable: ChangeOfVariable { scale, shift },
    })
}

pub fn canonicalize_presentation(p: &GwaPresentation) -> Result<CanonicalClass> {
    match p.a_poly() {
        Some(a) => canonicalize(p.q(), p.h0(), &a),
        None => unsupported("canonical forms are defined for k[h] presentations"),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FractionField {
    /// `k(h, x)`
    CommutativeRational,
    /// The first Weyl division algebra.
    Weyl1,
    /// The quantum skew-field `k_q(u, v)`.
    QuantumSkew(Rational),
}

/// `E(A)`: trace on `k` of the derived Lie algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EInvariant {
    ZeroOnly,
    AllOfK,
    NotApplicable,
}

/// `G(A)`: trace on `k*` of the derived group of units.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GInvariant {
    Trivial,
    CyclicGeneratedBy(Rational),
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionFieldClass {
    pub field: FractionField,
    pub e: EInvariant,
    pub g: GInvariant,
}

impl fmt::Display for FractionField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FractionField::CommutativeRational => write!(f, "k(h,x)"),
            FractionField::Weyl1 => write!(f, "D1(k)"),
            FractionField::QuantumSkew(q) => write!(f, "k_{q}(u,v)"),
        }
    }
}

impl fmt::Display for EInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EInvariant::ZeroOnly => "{0}",
            EInvariant::AllOfK => "k",
            EInvariant::NotApplicable => "n/a",
        })
    }
}

impl fmt::Display for GInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GInvariant::Trivial => write!(f, "{{1}}"),
            GInvariant::CyclicGeneratedBy(q) => write!(f, "<{q}>"),
            GInvariant::NotApplicable => write!(f, "n/a"),
        }
    }
}

/// Reads the fraction field and its `E`, `G` invariants off the canonical class.
pub fn fraction_field_class(c: &CanonicalClass) -> FractionFieldClass {
    match &c.variant {
        CanonicalVariant::Commutative => FractionFieldClass {
            field: FractionField::CommutativeRational,
            e: EInvariant::NotApplicable,
            g: GInvariant::NotApplicable,
        },
        CanonicalVariant::Classical { .. } => weyl_class(),
        CanonicalVariant::Quantum { q, .. } => quantum_class(q.clone()),
    }
}

pub(crate) fn weyl_class() -> FractionFieldClass {
    FractionFieldClass {
        field: FractionField::Weyl1,
        e: EInvariant::AllOfK,
        g: GInvariant::Trivial,
    }
}

pub(crate) fn quantum_class(q: Rational) -> FractionFieldClass {
    FractionFieldClass {
        field: FractionField::QuantumSkew(q.clone()),
        e: EInvariant::ZeroOnly,
        g: GInvariant::CyclicGeneratedBy(q),
    }
}

/// Fraction-field class of any presentation, Laurent ones included.
pub fn presentation_fraction_field(p: &GwaPresentation) -> Result<FractionFieldClass> {
    match p.base() {
        BaseRing::Polynomial => Ok(fraction_field_class(&canonicalize_presentation(p)?)),
        BaseRing::Laurent if p.q().is_one() => Ok(FractionFieldClass {
            field: FractionField::CommutativeRational,
            e: EInvariant::NotApplicable,
            g: GInvariant::NotApplicable,
        }),
        BaseRing::Laurent => Ok(quantum_class(p.q().clone())),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Equivalence {
    Incompatible(String),
    /// The necessary conditions for isomorphic fraction fields hold.
    CompatibleNecessary,
}

/// `<q1> = <q2>` as subgroups of the rationals' unit group.
pub fn same_cyclic_group(q1: &Rational, q2: &Rational) -> bool {
    rational_log(q2, q1).is_some() && rational_log(q1, q2).is_some()
}

/// Necessary condition for `Frac(A1) ~= Frac(A2)`, from the `E` and `G` invariants.
pub fn rational_equivalence_check(c1: &FractionFieldClass, c2: &FractionFieldClass) -> Equivalence {
    use FractionField::*;
    match (&c1.field, &c2.field) {
        (CommutativeRational, CommutativeRational) | (Weyl1, Weyl1) => {
            Equivalence::CompatibleNecessary
        }
        (QuantumSkew(q1), QuantumSkew(q2)) => {
            if same_cyclic_group(q1, q2) {
                Equivalence::CompatibleNecessary
            } else {
                Equivalence::Incompatible(format!("G differs: <{q1}> != <{q2}>"))
            }
        }
        (CommutativeRational, _) | (_, CommutativeRational) => {
            Equivalence::Incompatible("commutative vs noncommutative fraction field".into())
        }
        _ => Equivalence::Incompatible(format!("E differs: E = {} vs E = {}", c1.e, c2.e)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{int, rat};
    use proptest::prelude::*;

    fn a() -> Poly {
        Poly::from_ints(&[1, -2, 0, 1])
    }

    #[test]
    fn three_alternatives() {
        let c = canonicalize(&int(1), &int(0), &a()).unwrap();
        assert_eq!(c.variant, CanonicalVariant::Commutative);
        let c = canonicalize(&int(1), &int(2), &a()).unwrap();
        assert_eq!(
            c.variant,
            CanonicalVariant::Classical {
                a: a().scale_var(&int(2))
            }
        );
        let c = canonicalize(&int(3), &int(1), &a()).unwrap();
        assert_eq!(c.change_of_variable.shift, rat(1, 2));
        assert_eq!(
            c.variant,
            CanonicalVariant::Quantum {
                q: int(3),
                a: a().compose_affine(&int(1), &rat(1, 2)).unwrap()
            }
        );
        assert!(canonicalize(&int(0), &int(1), &a()).is_err());
    }

    #[test]
    fn canonical_presentation_matches_sigma() {
        // sigma(h) = 3h - 1 becomes multiplication by 3 after h = h' + 1/2
        let c = canonicalize(&int(3), &int(1), &a()).unwrap();
        let p = c.presentation(&a()).unwrap();
        assert_eq!(p.h0(), &int(0));
        let orig = GwaPresentation::new(int(3), int(1), a()).unwrap();
        let shift = &c.change_of_variable.shift;
        // h' = h - shift must satisfy sigma(h') = 3 h'
        let hp = Poly::from_terms([(1, int(1)), (0, -shift.clone())]);
        assert_eq!(orig.sigma_power_apply(&hp, 1), hp.scale(p.q()));
    }

    #[test]
    fn invariants() {
        let cl = canonicalize(&int(1), &int(5), &a()).unwrap();
        let f = fraction_field_class(&cl);
        assert_eq!(
            (f.e, f.g.clone()),
            (EInvariant::AllOfK, GInvariant::Trivial)
        );
        let qf = fraction_field_class(&canonicalize(&int(2), &int(0), &a()).unwrap());
        assert_eq!(qf.field, FractionField::QuantumSkew(int(2)));
        assert_eq!(qf.e, EInvariant::ZeroOnly);
        let cf = fraction_field_class(&canonicalize(&int(1), &int(0), &a()).unwrap());
        assert_eq!(cf.field, FractionField::CommutativeRational);
    }

    #[test]
    fn equivalence_examples() {
        assert!(matches!(
            rational_equivalence_check(&weyl_class(), &quantum_class(int(2))),
            Equivalence::Incompatible(_)
        ));
        assert_eq!(
            rational_equivalence_check(&quantum_class(int(2)), &quantum_class(rat(1, 2))),
            Equivalence::CompatibleNecessary
        );
        assert!(matches!(
            rational_equivalence_check(&quantum_class(int(2)), &quantum_class(int(3))),
            Equivalence::Incompatible(_)
        ));
        // 4 lies in <2> but 2 does not lie in <4>
        assert!(matches!(
            rational_equivalence_check(&quantum_class(int(2)), &quantum_class(int(4))),
            Equivalence::Incompatible(_)
        ));
    }

    fn params() -> impl Strategy<Value = (Rational, Rational)> {
        (-3i64..=3, 1i64..=3, -3i64..=3, 1i64..=3)
            .prop_filter("q nonzero", |(qn, _, _, _)| *qn != 0)
            .prop_map(|(qn, qd, hn, hd)| (rat(qn, qd), rat(hn, hd)))
    }

    proptest! {
        #[test]
        fn inverse_change_recovers_a((q, h0) in params(), cs in prop::collection::vec(-4i64..=4, 2..5)) {
            let a = Poly::from_ints(&cs);
            prop_assume!(!a.is_zero());
            let c = canonicalize(&q, &h0, &a).unwrap();
            let cv = &c.change_of_variable;
            let back = c
                .canonical_a(&a)
                .compose_affine(&cv.scale.recip(), &(-&cv.shift / &cv.scale))
                .unwrap();
            prop_assert_eq!(back, a);
            let fired = [q.is_one() && h0.is_zero(), q.is_one() && !h0.is_zero(), !q.is_one()];
            prop_assert_eq!(fired.iter().filter(|b| **b).count(), 1);
        }

        #[test]
        fn check_is_symmetric_and_reflexive(q1 in params(), q2 in params()) {
            let c1 = quantum_class(q1.0);
            let c2 = quantum_class(q2.0);
            prop_assert_eq!(rational_equivalence_check(&c1, &c1.clone()), Equivalence::CompatibleNecessary);
            let fwd = matches!(rational_equivalence_check(&c1, &c2), Equivalence::CompatibleNecessary);
            let bwd = matches!(rational_equivalence_check(&c2, &c1), Equivalence::CompatibleNecessary);
            prop_assert_eq!(fwd, bwd);
        }
    }
}
