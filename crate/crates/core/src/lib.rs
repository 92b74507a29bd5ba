//! Exact arithmetic, certified numerics and lattice machinery for deciding
//! and enumerating decompositions of algebraic integers.
//!
//! An algebraic integer `z` decomposes as `z = x + y` (with `x`, `y`
//! algebraic integers and `⟨x,y⟩ ≥ 0`) in the inner-product lattice of all
//! algebraic integers.  This crate decides such decompositions exactly,
//! generates them when the square-norm `q(z)` exceeds 4 and enumerates all
//! of them when `q(z) < 2√e`, and ships a finite-rank Gram-lattice engine
//! for Voronoi-relevant vectors and universal orthogonal splittings.

pub mod error;
pub mod rat;
pub mod poly;
pub mod sturm;
pub mod zfactor;
pub mod interval;
pub mod roots;
pub mod la;
pub mod field;
pub mod relpoly;
pub mod order;
pub mod realalg;

pub use error::Error;

/// Arbitrary-precision integer used throughout.
pub type Int = num_bigint::BigInt;
/// Arbitrary-precision rational, always kept reduced by `num-rational`.
pub type Rat = num_rational::BigRational;

/// Dense polynomial with integer coefficients, ascending degree.
pub type ZPoly = poly::Poly<Int>;
/// Dense polynomial with rational coefficients, ascending degree.
pub type QPoly = poly::Poly<Rat>;
/// Polynomial over a number field (coefficients in the power basis).
pub type KPoly = poly::Poly<field::FieldElement>;

pub(crate) fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub(crate) fn int(n: i64) -> Int {
    Int::from(n)
}
