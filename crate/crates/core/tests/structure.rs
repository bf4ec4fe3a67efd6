mod common;

use common::{generic_q, nonconstant_poly, nonzero_rational, poly};
use gwa::autgroup::{
    aut_descriptor, make_automorphism, make_monomial_automorphism, verify_automorphism, CycloMap,
};
use gwa::exactpoly::{int, rat};
use gwa::iso::iso_quantum;
use gwa::morita::{
    hodges_morita_deg2, is_simple_classical, is_simple_quantum, morita_necessary,
    morita_sufficient, MoritaVerdict, RootMode,
};
use gwa::smith::{smith_iso, solve_a_from_f, witten_to_smith, SmithPresentation, WittenParams};
use gwa::{FieldMode, GwaPresentation, LaurentPoly, Poly, Rational};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn distinct_roots(v: Vec<(i64, i64)>) -> Vec<Rational> {
    let mut r: Vec<Rational> = v.into_iter().map(|(n, d)| rat(n, d)).collect();
    r.sort();
    r.dedup();
    r
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn automorphism_laws(
        q in generic_q(),
        a in nonconstant_poly(5),
        a1 in nonzero_rational(),
        a2 in nonzero_rational(),
        e1 in 0i64..6,
        e2 in 0i64..6,
    ) {
        let pres = GwaPresentation::quantum(q, a.clone()).unwrap();
        let d = aut_descriptor(&a).unwrap();
        if d.monomial {
            let f = make_monomial_automorphism(&d, &a1, &a2).unwrap();
            prop_assert!(verify_automorphism(&f, &pres).unwrap().is_automorphism());
            return Ok(());
        }
        let p = d.p as i64;
        let (e1, e2) = (e1 % p, e2 % p);
        let f = make_automorphism(&d, &a1, e1).unwrap();
        let g = make_automorphism(&d, &a2, e2).unwrap();
        prop_assert!(verify_automorphism(&f, &pres).unwrap().is_automorphism());
        let fg = f.compose(&g).unwrap();
        prop_assert_eq!(&fg, &make_automorphism(&d, &(&a1 * &a2), (e1 + e2) % p).unwrap());
        prop_assert!(verify_automorphism(&fg, &pres).unwrap().is_automorphism());
        let inv = make_automorphism(&d, &a1.recip(), (p - e1) % p).unwrap();
        prop_assert_eq!(f.compose(&inv).unwrap(), CycloMap::identity(d.p));
        prop_assert_eq!(f.inverse().unwrap(), inv);
    }

    #[test]
    fn smith_round_trip(
        f in poly(6),
        q in prop::sample::select(vec![int(2), int(3), rat(1, 2)]),
    ) {
        let f = &f - &Poly::constant(f.coeff(0));
        prop_assume!(!f.is_zero());
        let a = solve_a_from_f(&f, &q).unwrap();
        prop_assert!(a.coeff(0).is_zero());
        prop_assert_eq!(&a.scale_var(&q) - &a, f);
    }

    #[test]
    fn smith_iso_agrees_with_quantum_iso(
        q in generic_q(),
        f1 in nonconstant_poly(4),
        rho in nonzero_rational(),
        beta in nonzero_rational(),
        perturb in any::<bool>(),
    ) {
        let s1 = SmithPresentation::new(q.clone(), &f1 - &Poly::constant(f1.coeff(0))).unwrap();
        let mut a2 = s1.a().scale_var(&beta).scale(&rho);
        if perturb {
            a2 = &a2 + &Poly::monomial(int(1), 1);
        }
        prop_assume!(!a2.is_constant());
        let s2 = SmithPresentation::from_a(q.clone(), &a2).unwrap();
        let by_smith = smith_iso(&s1, &s2, FieldMode::OverRationals).unwrap();
        let by_iso = iso_quantum(&q, s2.a(), s1.a(), FieldMode::OverRationals).unwrap();
        prop_assert_eq!(by_smith.is_some(), by_iso.is_some());
        if !perturb {
            prop_assert!(by_smith.is_some());
        }
    }

    #[test]
    fn witten_closed_form(
        e1 in nonzero_rational(),
        e2 in nonzero_rational(),
        e6 in nonzero_rational(),
    ) {
        prop_assume!(e1.abs() != Rational::one());
        // the closed form fails on this curve, see witten_exceptional_curve
        prop_assume!(e2 != int(2) * &e1 / (Rational::one() - &e1));
        let w = WittenParams::from_free(e1, e2, e6).unwrap();
        prop_assert!(witten_to_smith(&w).unwrap().agrees());
    }

    #[test]
    fn classical_simplicity_matches_roots(r in prop::collection::vec((-6i64..=6, 1i64..=3), 1..=4), lc in nonzero_rational()) {
        let roots: Vec<Rational> = r.iter().map(|(n, d)| rat(*n, *d)).collect();
        let a = Poly::from_roots(lc, &roots);
        let brute = (0..roots.len()).all(|i| (0..i).all(|j| {
            let d = &roots[i] - &roots[j];
            !d.is_integer()
        }));
        prop_assert_eq!(is_simple_classical(&a).unwrap().0, brute);
    }

    #[test]
    fn quantum_simplicity_matches_roots(
        r in prop::collection::vec((-8i64..=8, 1i64..=3), 1..=4),
        q in generic_q(),
        lc in nonzero_rational(),
        shift in -2i64..=2,
    ) {
        let roots: Vec<Rational> = r.iter().map(|(n, d)| rat(*n, *d)).filter(|r| !r.is_zero()).collect();
        let a = LaurentPoly::new(shift, Poly::from_roots(lc, &roots));
        let brute = (0..roots.len()).all(|i| (0..i).all(|j| {
            gwa::exactpoly::rational_log(&(&roots[i] / &roots[j]), &q).is_none()
        }));
        prop_assert_eq!(is_simple_quantum(&a, &q).unwrap().0, brute);
    }

    #[test]
    fn hodges_symmetry_and_invariance(
        r in prop::collection::vec((-6i64..=6, 1i64..=3), 4),
        shift in -3i64..=3,
        flip in any::<bool>(),
    ) {
        let r = distinct_roots(r);
        prop_assume!(r.len() >= 4);
        let a1 = Poly::from_roots(int(1), &r[..2]);
        let a2 = Poly::from_roots(int(2), &r[2..4]);
        let h12 = hodges_morita_deg2(&a1, &a2).unwrap().is_some();
        prop_assert_eq!(h12, hodges_morita_deg2(&a2, &a1).unwrap().is_some());
        let eps = if flip { -Rational::one() } else { Rational::one() };
        let moved = a1.compose_affine(&eps, &int(shift)).unwrap();
        prop_assert_eq!(h12, hodges_morita_deg2(&moved, &a2).unwrap().is_some());
    }

    #[test]
    fn sufficient_implies_necessary(
        whole in prop::collection::vec(-3i64..=3, 3..=5),
        shifts in prop::collection::vec(-3i64..=3, 5),
    ) {
        // distinct fractional parts i/7 keep both root sets simple
        let r1: Vec<Rational> = whole.iter().enumerate().map(|(i, n)| rat(i as i64 + 1 + 7 * n, 7)).collect();
        let r2: Vec<Rational> = r1.iter().zip(&shifts).map(|(a, m)| a + int(*m)).rev().collect();
        let w = morita_sufficient(&r1, &r2, RootMode::Classical).unwrap();
        prop_assert!(w.is_some());
        let w = w.unwrap();
        for i in 0..r1.len() {
            prop_assert_eq!(&r1[i], &(&r2[w.tau[i]] + int(w.m[i])));
        }
        let pres = |r: &[Rational]| GwaPresentation::new(int(1), int(1), Poly::from_roots(int(1), r)).unwrap();
        let report = morita_necessary(&pres(&r1), &pres(&r2)).unwrap();
        prop_assert!(!matches!(report.verdict, MoritaVerdict::NotEquivalent(_)));
    }
}

#[test]
fn identity_witness_for_equal_roots() {
    let r = [rat(0, 1), rat(1, 3), rat(3, 4)];
    let w = morita_sufficient(&r, &r, RootMode::Classical)
        .unwrap()
        .unwrap();
    assert_eq!(w.tau, vec![0, 1, 2]);
    assert!(w.m.iter().all(|m| *m == 0));
}

#[test]
fn cross_family_pairs_are_not_equivalent() {
    let classical = [
        GwaPresentation::new(int(1), int(1), Poly::from_ints(&[0, 1])).unwrap(),
        GwaPresentation::new(int(1), rat(1, 2), Poly::from_ints(&[1, 0, 3])).unwrap(),
    ];
    let quantum = [
        GwaPresentation::quantum(int(2), Poly::from_ints(&[0, 1])).unwrap(),
        GwaPresentation::new(int(3), int(1), Poly::from_ints(&[1, 0, 3])).unwrap(),
        GwaPresentation::laurent(int(2), Poly::from_ints(&[1, 1]).into()).unwrap(),
    ];
    for c in &classical {
        for q in &quantum {
            for (p1, p2) in [(c, q), (q, c)] {
                let r = morita_necessary(p1, p2).unwrap();
                assert_eq!(r.verdict, MoritaVerdict::NotEquivalent("fraction-field"));
                assert!(r.checks.iter().any(|c| !c.passed));
            }
        }
    }
}
