//! Computation in degree-one generalized Weyl algebras `k[h](sigma, a)` over
//! the rationals, with decision procedures for canonical forms,
//! isomorphism, automorphisms, Smith algebras, simplicity and Morita
//! equivalence conditions.

pub mod algebra;
pub mod autgroup;
pub mod canonical;
pub mod error;
pub mod exactpoly;
pub mod iso;
pub mod morita;
pub mod smith;

pub use algebra::{BaseRing, Generator, GwaElement, GwaPresentation, NormalityVerdict};
pub use canonical::{canonicalize, CanonicalClass, CanonicalVariant};
pub use error::{Error, Result};
pub use exactpoly::{LaurentPoly, Poly, Rational};
pub use iso::{FieldMode, GeneratorMap, IsoWitness, Scalar, Sign};
