//! Exact computation of Ward-Horadam sequences `H_{n+2} = s H_{n+1} + t H_n`,
//! their generalized binomial and multinomial arrays, and the Pascal-type
//! recurrences those arrays satisfy, together with brute-force combinatorial
//! oracles that recount the same numbers from first principles.
//!
//! All arithmetic is exact. Scalars live in Q, Q[x] or Q(x) (see [`ring`]),
//! and characteristic roots live in the quadratic extension over the
//! discriminant `s^2 + 4t`.

pub mod binomials;
pub mod error;
pub mod horadam;
pub mod oracles;
pub mod recurrences;
pub mod report;
pub mod ring;

pub use error::{Error, Result};
pub use ring::{Poly, QuadExtElem, RatFunc, RingScalar};

/// Version string embedded in reports.
pub const ENGINE_VERSION: &str = concat!("horadam-core ", env!("CARGO_PKG_VERSION"));
