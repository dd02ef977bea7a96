//! Exact arithmetic: rationals, univariate polynomials and rational functions over Q,
//! and the quadratic extension K(sqrt D) of their fraction field.

mod poly;
mod quad;
mod ratfunc;
pub mod rational;
mod scalar;

pub use poly::Poly;
pub use quad::QuadExtElem;
pub use ratfunc::RatFunc;
pub use scalar::RingScalar;
