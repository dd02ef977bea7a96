use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use super::poly::Poly;
use super::ratfunc::RatFunc;
use super::rational::{format_rational, parse_rational, sqrt_rational};
use crate::error::{Error, Result};

/// An exact scalar: a rational, a polynomial in `x`, or a rational function in `x`.
///
/// Values are always stored in the narrowest variant that represents them, so a
/// rational function with denominator 1 is a `Polynomial` and a constant polynomial
/// is a `Rational`. Structural equality is therefore mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingScalar {
    Rational(BigRational),
    Polynomial(Poly),
    RationalFunction(RatFunc),
}

impl RingScalar {
    pub fn zero() -> Self {
        Self::Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::Rational(BigRational::one())
    }

    pub fn int(n: i64) -> Self {
        Self::Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Self::Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::Polynomial(Poly::x())
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self::Rational(r)
    }

    pub fn from_poly(p: Poly) -> Self {
        Self::Polynomial(p).normalize()
    }

    pub fn from_ratfunc(r: RatFunc) -> Self {
        Self::RationalFunction(r).normalize()
    }

    /// Builds `num / den` and reduces it.
    pub fn ratio(num: Poly, den: Poly) -> Result<Self> {
        Ok(Self::from_ratfunc(RatFunc::new(num, den)?))
    }

    /// Collapses to the narrowest variant. Idempotent.
    pub fn normalize(self) -> Self {
        match self {
            Self::RationalFunction(r) if r.den().is_one() => {
                Self::Polynomial(r.num().clone()).normalize()
            }
            Self::Polynomial(p) => match p.as_constant() {
                Some(c) => Self::Rational(c),
                None => Self::Polynomial(p),
            },
            other => other,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Self::Rational(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Self::Rational(r) if r.is_one())
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Self::Rational(r) => Some(r),
            _ => None,
        }
    }

    /// The integer value, if this is a rational with denominator 1.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|r| r.denom().is_one())
            .map(|r| r.numer().clone())
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Self::Rational(_))
    }

    fn rank(&self) -> u8 {
        match self {
            Self::Rational(_) => 0,
            Self::Polynomial(_) => 1,
            Self::RationalFunction(_) => 2,
        }
    }

    fn to_poly(&self) -> Poly {
        match self {
            Self::Rational(r) => Poly::constant(r.clone()),
            Self::Polynomial(p) => p.clone(),
            Self::RationalFunction(_) => unreachable!("rational function cannot narrow to a polynomial"),
        }
    }

    fn to_ratfunc(&self) -> RatFunc {
        match self {
            Self::RationalFunction(r) => r.clone(),
            other => RatFunc::from_poly(other.to_poly()),
        }
    }

    fn binary(
        &self,
        rhs: &Self,
        on_rat: impl Fn(&BigRational, &BigRational) -> BigRational,
        on_poly: impl Fn(&Poly, &Poly) -> Poly,
        on_rf: impl Fn(&RatFunc, &RatFunc) -> RatFunc,
    ) -> Self {
        match (self, rhs) {
            (Self::Rational(a), Self::Rational(b)) => Self::Rational(on_rat(a, b)),
            _ if self.rank().max(rhs.rank()) == 1 => {
                Self::Polynomial(on_poly(&self.to_poly(), &rhs.to_poly())).normalize()
            }
            _ => Self::RationalFunction(on_rf(&self.to_ratfunc(), &rhs.to_ratfunc())).normalize(),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        match self {
            Self::Rational(r) if r.is_zero() => Err(Error::DivisionByZero("inverse of 0".into())),
            Self::Rational(r) => Ok(Self::Rational(r.recip())),
            other => Ok(Self::RationalFunction(other.to_ratfunc().inv()?).normalize()),
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact square root in the same fraction field, if one exists.
    pub fn sqrt_exact(&self) -> Option<Self> {
        match self {
            Self::Rational(r) => sqrt_rational(r).map(Self::Rational),
            Self::Polynomial(p) => {
                let lead = p.lead()?.clone();
                let c = sqrt_rational(&lead)?;
                p.monic().sqrt_exact().map(|root| Self::from_poly(root.scale(&c)))
            }
            Self::RationalFunction(r) => r.sqrt_exact().map(Self::from_ratfunc),
        }
    }

    /// Evaluates the polynomial `p` at this scalar (Horner).
    pub fn eval_poly(p: &Poly, at: &Self) -> Self {
        p.coeffs()
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * at) + &Self::Rational(c.clone()))
    }

    /// Substitutes `at` for `x` in this scalar.
    pub fn substitute(&self, at: &Self) -> Result<Self> {
        match self {
            Self::Rational(_) => Ok(self.clone()),
            Self::Polynomial(p) => Ok(Self::eval_poly(p, at)),
            Self::RationalFunction(r) => {
                Self::eval_poly(r.num(), at).checked_div(&Self::eval_poly(r.den(), at))
            }
        }
    }

    /// Sign of the leading coefficient, used only for presentation.
    pub fn is_negative(&self) -> bool {
        match self {
            Self::Rational(r) => r.is_negative(),
            Self::Polynomial(p) => p.is_negative_lead(),
            Self::RationalFunction(r) => r.num().is_negative_lead(),
        }
    }

    /// Canonical JSON value (the wire format).
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("scalars always serialize")
    }

    /// Canonical JSON text.
    pub fn to_wire(&self) -> String {
        match self {
            Self::Rational(r) => format_rational(r),
            other => serde_json::to_string(other).expect("scalars always serialize"),
        }
    }

    /// Parses the wire text produced by [`RingScalar::to_wire`], or any JSON value form.
    pub fn from_wire(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.starts_with('[') || trimmed.starts_with('{') || trimmed.starts_with('"') {
            serde_json::from_str(trimmed).map_err(|e| Error::Parse(e.to_string()))
        } else {
            Ok(Self::Rational(parse_rational(trimmed)?))
        }
    }
}

impl From<i64> for RingScalar {
    fn from(n: i64) -> Self {
        Self::int(n)
    }
}

impl From<BigRational> for RingScalar {
    fn from(r: BigRational) -> Self {
        Self::Rational(r)
    }
}

impl From<Poly> for RingScalar {
    fn from(p: Poly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RingScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Rational(r) => write!(f, "{}", format_rational(r)),
            Self::Polynomial(p) => write!(f, "{p}"),
            Self::RationalFunction(r) => write!(f, "{r}"),
        }
    }
}

impl Add for &RingScalar {
    type Output = RingScalar;
    fn add(self, rhs: &RingScalar) -> RingScalar {
        self.binary(rhs, |a, b| a + b, |a, b| a + b, RatFunc::add)
    }
}

impl Sub for &RingScalar {
    type Output = RingScalar;
    fn sub(self, rhs: &RingScalar) -> RingScalar {
        self.binary(rhs, |a, b| a - b, |a, b| a - b, RatFunc::sub)
    }
}

impl Mul for &RingScalar {
    type Output = RingScalar;
    fn mul(self, rhs: &RingScalar) -> RingScalar {
        self.binary(rhs, |a, b| a * b, |a, b| a * b, RatFunc::mul)
    }
}

impl Neg for &RingScalar {
    type Output = RingScalar;
    fn neg(self) -> RingScalar {
        match self {
            RingScalar::Rational(r) => RingScalar::Rational(-r),
            RingScalar::Polynomial(p) => RingScalar::Polynomial(-p),
            RingScalar::RationalFunction(r) => RingScalar::RationalFunction(r.neg()),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RingScalar {
            type Output = RingScalar;
            fn $m(self, rhs: RingScalar) -> RingScalar { (&self).$m(&rhs) }
        }
        impl $tr<&RingScalar> for RingScalar {
            type Output = RingScalar;
            fn $m(self, rhs: &RingScalar) -> RingScalar { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for RingScalar {
    type Output = RingScalar;
    fn neg(self) -> RingScalar {
        -&self
    }
}

fn coeff_strings(p: &Poly) -> Vec<String> {
    p.coeffs().iter().map(format_rational).collect()
}

impl Serialize for RingScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Self::Rational(r) => serializer.serialize_str(&format_rational(r)),
            Self::Polynomial(p) => coeff_strings(p).serialize(serializer),
            Self::RationalFunction(r) => {
                let mut map = serializer.serialize_map(Some(2))?;
                map.serialize_entry("num", &coeff_strings(r.num()))?;
                map.serialize_entry("den", &coeff_strings(r.den()))?;
                map.end()
            }
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum WireScalar {
    Text(String),
    Int(i64),
    Coeffs(Vec<String>),
    Fraction { num: Vec<String>, den: Vec<String> },
}

fn parse_coeffs(items: &[String]) -> Result<Poly> {
    items
        .iter()
        .map(|s| parse_rational(s))
        .collect::<Result<Vec<_>>>()
        .map(Poly::new)
}

impl<'de> Deserialize<'de> for RingScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parsed = match WireScalar::deserialize(deserializer)? {
            WireScalar::Text(s) => parse_rational(&s).map(RingScalar::Rational),
            WireScalar::Int(n) => Ok(RingScalar::int(n)),
            WireScalar::Coeffs(c) => parse_coeffs(&c).map(RingScalar::from_poly),
            WireScalar::Fraction { num, den } => {
                parse_coeffs(&num).and_then(|n| parse_coeffs(&den).and_then(|d| RingScalar::ratio(n, d)))
            }
        };
        parsed.map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x_plus(c: i64) -> RingScalar {
        RingScalar::from_poly(Poly::from_i64s(&[c, 1]))
    }

    #[test]
    fn narrowest_variant_is_kept() {
        let p = x_plus(1);
        assert_eq!(&p - &p, RingScalar::zero());
        assert!(matches!(&p - &x_plus(0), RingScalar::Rational(_)));
        let q = p.inv().unwrap();
        assert!(matches!(q, RingScalar::RationalFunction(_)));
        assert_eq!(&q * &p, RingScalar::one());
    }

    #[test]
    fn mixed_variants_promote() {
        let r = &RingScalar::frac(1, 2) + &RingScalar::x();
        assert!(matches!(r, RingScalar::Polynomial(_)));
        let f = &RingScalar::int(2) * &x_plus(1).inv().unwrap();
        assert!(matches!(f, RingScalar::RationalFunction(_)));
    }

    #[test]
    fn wire_format() {
        assert_eq!(RingScalar::frac(28, 3).to_wire(), "28/3");
        assert_eq!(RingScalar::int(15).to_wire(), "15");
        assert_eq!(x_plus(4).to_wire(), r#"["4","1"]"#);
        let rf = x_plus(0).checked_div(&x_plus(2)).unwrap();
        assert_eq!(rf.to_wire(), r#"{"num":["0","1"],"den":["2","1"]}"#);
        for v in [RingScalar::frac(-1, 5), x_plus(4), rf] {
            assert_eq!(RingScalar::from_wire(&v.to_wire()).unwrap(), v);
        }
        // non-canonical inputs are reduced
        assert_eq!(RingScalar::from_wire(r#"["3","0"]"#).unwrap(), RingScalar::int(3));
        assert_eq!(RingScalar::from_wire("4/6").unwrap(), RingScalar::frac(2, 3));
        assert!(RingScalar::from_wire(r#"{"num":["1"],"den":[]}"#).is_err());
    }

    #[test]
    fn square_roots_across_variants() {
        assert_eq!(RingScalar::int(1).sqrt_exact(), Some(RingScalar::int(1)));
        assert_eq!(RingScalar::int(5).sqrt_exact(), None);
        let sq = x_plus(3).pow(2).checked_div(&RingScalar::int(4)).unwrap();
        assert_eq!(sq.sqrt_exact(), Some(x_plus(3).checked_div(&RingScalar::int(2)).unwrap()));
        let rf = x_plus(1).pow(2).checked_div(&x_plus(2).pow(2)).unwrap();
        assert!(rf.sqrt_exact().is_some());
    }

    #[test]
    fn division_by_zero_errors() {
        assert!(RingScalar::one().checked_div(&RingScalar::zero()).is_err());
    }
}
