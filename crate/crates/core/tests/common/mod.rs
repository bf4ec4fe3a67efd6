#![allow(dead_code)]

use gwa::exactpoly::{int, rat};
use gwa::{GwaElement, GwaPresentation, LaurentPoly, Poly, Rational};
use proptest::prelude::*;

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("nonzero", |r| *r != int(0))
}

pub fn poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(small_rational(), 1..=max_deg + 1)
        .prop_map(|c| Poly::from_terms(c.into_iter().enumerate().map(|(i, c)| (i as u32, c))))
}

pub fn nonconstant_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    poly(max_deg).prop_filter("non-constant", |p| !p.is_constant())
}

pub fn roots(max_len: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(
        (-6i64..=6, 1i64..=3).prop_map(|(n, d)| rat(n, d)),
        1..=max_len,
    )
}

pub fn generic_q() -> impl Strategy<Value = Rational> {
    prop::sample::select(vec![int(2), int(3), int(-2), rat(1, 2), rat(2, 3)])
}

/// Quantum (shifted or not) or classical presentation over `k[h]`.
pub fn presentation() -> impl Strategy<Value = GwaPresentation> {
    let q = prop::sample::select(vec![int(1), int(2), int(-3), rat(1, 2)]);
    (q, nonzero_rational(), small_rational(), nonconstant_poly(3)).prop_map(|(q, h0, s, a)| {
        let h0 = if q == int(1) { h0 } else { s };
        GwaPresentation::new(q, h0, a).unwrap()
    })
}

pub fn element() -> impl Strategy<Value = GwaElement> {
    prop::collection::vec((-2i64..=2, poly(2)), 1..=3).prop_map(|terms| {
        terms.into_iter().fold(GwaElement::zero(), |acc, (d, p)| {
            &acc + &GwaElement::term(d, LaurentPoly::from_poly(p))
        })
    })
}
