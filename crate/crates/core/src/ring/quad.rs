//! Elements `alpha + beta * sqrt(D)` of the quadratic extension K(sqrt D).

use std::fmt;

use serde::{Deserialize, Serialize};

use super::scalar::RingScalar;
use crate::error::{Error, Result};

/// An element of K(sqrt D) with K the fraction field of [`RingScalar`].
///
/// `D` is carried verbatim. When it happens to be a perfect square in K the
/// extension has zero divisors; inversion detects the zero norm and errors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadExtElem {
    pub alpha: RingScalar,
    pub beta: RingScalar,
    pub disc: RingScalar,
}

impl QuadExtElem {
    pub fn new(alpha: RingScalar, beta: RingScalar, disc: RingScalar) -> Self {
        Self { alpha, beta, disc }
    }

    /// Embeds a base-field scalar (beta = 0).
    pub fn embed(x: RingScalar, disc: &RingScalar) -> Self {
        Self::new(x, RingScalar::zero(), disc.clone())
    }

    pub fn zero(disc: &RingScalar) -> Self {
        Self::embed(RingScalar::zero(), disc)
    }

    pub fn one(disc: &RingScalar) -> Self {
        Self::embed(RingScalar::one(), disc)
    }

    /// `sqrt(D)` itself.
    pub fn sqrt_disc(disc: &RingScalar) -> Self {
        Self::new(RingScalar::zero(), RingScalar::one(), disc.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.is_zero() && self.beta.is_zero()
    }

    /// True iff the element lies in the base field.
    pub fn is_rational(&self) -> bool {
        self.beta.is_zero()
    }

    fn check_disc(&self, other: &Self) -> Result<()> {
        if self.disc != other.disc {
            return Err(Error::DiscMismatch {
                left: self.disc.to_string(),
                right: other.disc.to_string(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_disc(other)?;
        Ok(Self::new(&self.alpha + &other.alpha, &self.beta + &other.beta, self.disc.clone()))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_disc(other)?;
        Ok(Self::new(&self.alpha - &other.alpha, &self.beta - &other.beta, self.disc.clone()))
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.alpha, -&self.beta, self.disc.clone())
    }

    /// `(a + b sqrt D)(c + d sqrt D) = (ac + D bd) + (ad + bc) sqrt D`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_disc(other)?;
        let alpha = &(&self.alpha * &other.alpha) + &(&self.disc * &(&self.beta * &other.beta));
        let beta = &(&self.alpha * &other.beta) + &(&self.beta * &other.alpha);
        Ok(Self::new(alpha, beta, self.disc.clone()))
    }

    /// Multiplies by a base-field scalar.
    pub fn scale(&self, c: &RingScalar) -> Self {
        Self::new(&self.alpha * c, &self.beta * c, self.disc.clone())
    }

    pub fn conj(&self) -> Self {
        Self::new(self.alpha.clone(), -&self.beta, self.disc.clone())
    }

    /// `alpha^2 - D beta^2`.
    pub fn norm(&self) -> RingScalar {
        &self.alpha.pow(2) - &(&self.disc * &self.beta.pow(2))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero("inverse of zero extension element".into()));
        }
        let norm = self.norm();
        if norm.is_zero() {
            return Err(Error::DivisionByZero(format!(
                "zero norm for {self}: D = {} is a perfect square in the base field",
                self.disc
            )));
        }
        let inv_norm = norm.inv()?;
        Ok(self.conj().scale(&inv_norm))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.disc);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same disc");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same disc");
            }
        }
        acc
    }

    /// Returns alpha; errors if beta has not cancelled.
    pub fn project(&self) -> Result<RingScalar> {
        if !self.beta.is_zero() {
            return Err(Error::IrrationalResidue(self.beta.to_string()));
        }
        Ok(self.alpha.clone())
    }
}

impl fmt::Display for QuadExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.beta.is_zero() {
            write!(f, "{}", self.alpha)
        } else {
            write!(f, "({}) + ({})*sqrt({})", self.alpha, self.beta, self.disc)
        }
    }
}
