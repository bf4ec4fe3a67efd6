mod common;

use common::{generic_q, nonconstant_poly, nonzero_rational};
use gwa::algebra::Refutation;
use gwa::exactpoly::int;
use gwa::{GwaElement, GwaPresentation, LaurentPoly, Poly, Rational};
use proptest::prelude::*;

fn hn(c: Rational, n: i64) -> LaurentPoly {
    LaurentPoly::monomial(c, n)
}

/// Candidates paired with whether they are normal when `a` is a monomial.
fn pool(alpha: &Rational) -> Vec<(GwaElement, bool, bool)> {
    let t = |d: i64, p: LaurentPoly| GwaElement::term(d, p);
    // (element, normal for non-monomial a, normal for monomial a)
    vec![
        (t(0, hn(alpha.clone(), 0)), true, true),
        (t(0, hn(alpha.clone(), 3)), true, true),
        (t(0, Poly::from_ints(&[1, 0, 1]).into()), false, false),
        (t(0, Poly::from_ints(&[0, 1, 1]).into()), false, false),
        (t(1, hn(int(1), 0)), false, true),
        (t(2, hn(alpha.clone(), 1)), false, true),
        (t(-1, hn(int(1), 2)), false, true),
        (t(-3, hn(alpha.clone(), 0)), false, true),
        (t(1, Poly::from_ints(&[1, 1]).into()), false, false),
        (&t(1, hn(int(1), 0)) + &t(-1, hn(int(1), 0)), false, false),
        (&t(0, hn(int(1), 1)) + &t(2, hn(int(1), 0)), false, false),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn non_monomial_a(q in generic_q(), a in nonconstant_poly(4), alpha in nonzero_rational()) {
        prop_assume!(!a.is_monomial());
        let pres = GwaPresentation::quantum(q, a).unwrap();
        for (u, expected, _) in pool(&alpha) {
            let v = pres.normality_witness(&u).unwrap();
            prop_assert_eq!(v.normal, expected, "u = {}", u);
            if u.support().len() > 1 {
                prop_assert!(matches!(v.refutation, Some(Refutation::MixedDegrees(_))));
            }
        }
    }

    #[test]
    fn monomial_a(q in generic_q(), c in nonzero_rational(), k in 1u32..=4, alpha in nonzero_rational()) {
        let pres = GwaPresentation::quantum(q, Poly::monomial(c, k)).unwrap();
        for (u, _, expected) in pool(&alpha) {
            let v = pres.normality_witness(&u).unwrap();
            prop_assert_eq!(v.normal, expected, "u = {}", u);
            if let Some(conj) = &v.conjugators {
                // u g = conj(g) u for each generator
                for (g, w) in [(GwaElement::h(), &conj.h), (GwaElement::x(), &conj.x), (GwaElement::y(), &conj.y)] {
                    prop_assert_eq!(pres.multiply(&u, &g), pres.multiply(w, &u));
                }
            }
        }
    }
}
