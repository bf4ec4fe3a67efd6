//! Deterministic fixtures shared by the benchmarks.

use gwa::exactpoly::{int, rat};
use gwa::{GwaElement, GwaPresentation, LaurentPoly, Poly};

/// `k[h](sigma, a)` with `sigma(h) = 3h` and a dense quartic `a`.
pub fn quantum_presentation() -> GwaPresentation {
    GwaPresentation::quantum(int(3), Poly::from_ints(&[2, -1, 0, 5, 1])).unwrap()
}

/// The first Weyl algebra shape `sigma(h) = h - 1` with a cubic `a`.
pub fn classical_presentation() -> GwaPresentation {
    GwaPresentation::new(int(1), int(1), Poly::from_ints(&[0, -1, 0, 1])).unwrap()
}

/// A mixed-degree element `sum_d p_d(h) v_d` for `d` in `-span..=span`.
pub fn mixed_element(span: i64) -> GwaElement {
    (-span..=span).fold(GwaElement::zero(), |acc, d| {
        let p = Poly::from_terms([(0, int(d + 2)), (1, rat(1, d.abs() + 1)), (2, int(1))]);
        &acc + &GwaElement::term(d, LaurentPoly::from_poly(p))
    })
}

/// Pair `(a, rho a(alpha h))` of the given degree.
pub fn scaled_pair(degree: u32) -> (Poly, Poly) {
    let a = Poly::from_terms((0..=degree).map(|i| (i, rat(i as i64 + 1, 2 * i as i64 + 1))));
    let b = a.scale_var(&rat(-2, 3)).scale(&int(5));
    (a, b)
}
