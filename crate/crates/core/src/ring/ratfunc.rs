//! Rational functions `num / den` in one indeterminate over Q.

use std::fmt;

use super::poly::Poly;
use crate::error::{Error, Result};

/// A reduced fraction of polynomials.
///
/// `den` is monic and coprime to `num`; zero is `0 / 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero("rational function with zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(Self::from_poly(Poly::zero()));
        }
        let g = Poly::gcd(&num, &den);
        let num = num.div_exact(&g)?;
        let den = den.div_exact(&g)?;
        let lead_inv = den.lead().expect("nonzero").recip();
        Ok(Self {
            num: num.scale(&lead_inv),
            den: den.scale(&lead_inv),
        })
    }

    pub fn from_poly(p: Poly) -> Self {
        Self { num: p, den: Poly::one() }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::new(&self.num + &other.num, self.den.clone()).expect("monic den");
        }
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        Self::new(num, &self.den * &other.den).expect("nonzero den")
    }

    pub fn neg(&self) -> Self {
        Self { num: -&self.num, den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        // Cross-cancel first so the products stay small.
        let g1 = Poly::gcd(&self.num, &other.den);
        let g2 = Poly::gcd(&other.num, &self.den);
        let (a, d2) = cancel(&self.num, &other.den, &g1);
        let (b, d1) = cancel(&other.num, &self.den, &g2);
        Self::new(&a * &b, &d1 * &d2).expect("nonzero den")
    }

    pub fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero("inverse of zero rational function".into()));
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Exact square root, when both reduced parts are squares up to a rational factor.
    pub fn sqrt_exact(&self) -> Option<Self> {
        let lead = self.num.lead()?.clone();
        let c = super::rational::sqrt_rational(&lead)?;
        let n = self.num.monic().sqrt_exact()?;
        let d = self.den.sqrt_exact()?;
        Self::new(n.scale(&c), d).ok()
    }
}

fn cancel(a: &Poly, b: &Poly, g: &Poly) -> (Poly, Poly) {
    if g.is_zero() || g.is_one() {
        return (a.clone(), b.clone());
    }
    (
        a.div_exact(g).expect("gcd divides"),
        b.div_exact(g).expect("gcd divides"),
    )
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
