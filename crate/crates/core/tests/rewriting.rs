mod common;

use common::{element, nonconstant_poly, presentation};
use gwa::exactpoly::int;
use gwa::{GwaElement, GwaPresentation, LaurentPoly};
use proptest::prelude::*;

fn x_pow(n: u32) -> GwaElement {
    GwaElement::term(n as i64, LaurentPoly::one())
}

fn y_pow(n: u32) -> GwaElement {
    GwaElement::term(-(n as i64), LaurentPoly::one())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn associativity(a in presentation(), u in element(), v in element(), w in element()) {
        let uv_w = a.multiply(&a.multiply(&u, &v), &w);
        let u_vw = a.multiply(&u, &a.multiply(&v, &w));
        prop_assert_eq!(uv_w, u_vw);
    }

    #[test]
    fn distributivity(a in presentation(), u in element(), v in element(), w in element()) {
        prop_assert_eq!(a.multiply(&u, &(&v + &w)), &a.multiply(&u, &v) + &a.multiply(&u, &w));
        prop_assert_eq!(a.multiply(&(&u + &v), &w), &a.multiply(&u, &w) + &a.multiply(&v, &w));
    }

    #[test]
    fn grading_is_additive(a in presentation(), u in element(), v in element()) {
        for (d1, p1) in u.components() {
            for (d2, p2) in v.components() {
                let prod = a.multiply(
                    &GwaElement::term(d1, p1.clone()),
                    &GwaElement::term(d2, p2.clone()),
                );
                prop_assert!(prod.support().iter().all(|d| *d == d1 + d2));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    /// `x^n y^n = sigma^n(a) ... sigma(a)` and `y^n x^n = a sigma^-1(a) ... sigma^-(n-1)(a)`.
    #[test]
    fn closed_forms(a in nonconstant_poly(3), quantum in any::<bool>()) {
        let pres = if quantum {
            GwaPresentation::quantum(int(3), a).unwrap()
        } else {
            GwaPresentation::new(int(1), int(2), a).unwrap()
        };
        for n in 1..=5u32 {
            let xy = (1..=n as i64).fold(LaurentPoly::one(), |acc, i| &acc * &pres.sigma_pow(pres.a(), i));
            let yx = (0..n as i64).fold(LaurentPoly::one(), |acc, i| &acc * &pres.sigma_pow(pres.a(), -i));
            prop_assert_eq!(pres.multiply(&x_pow(n), &y_pow(n)), GwaElement::coeff(xy));
            prop_assert_eq!(pres.multiply(&y_pow(n), &x_pow(n)), GwaElement::coeff(yx));
            prop_assert_eq!(pres.power(&GwaElement::x(), n), x_pow(n));
        }
    }
}

#[test]
fn laurent_associativity() {
    let pres =
        GwaPresentation::laurent(int(2), LaurentPoly::from_terms([(-1, int(1)), (2, int(3))]))
            .unwrap();
    let elems = [
        GwaElement::h(),
        GwaElement::coeff(LaurentPoly::monomial(int(1), -2)),
        GwaElement::x(),
        GwaElement::y(),
        &GwaElement::x() + &GwaElement::coeff(LaurentPoly::monomial(int(5), -1)),
    ];
    for u in &elems {
        for v in &elems {
            for w in &elems {
                assert_eq!(
                    pres.multiply(&pres.multiply(u, v), w),
                    pres.multiply(u, &pres.multiply(v, w))
                );
            }
        }
    }
}
