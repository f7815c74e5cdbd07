//! Exact rational numbers used for every index value and prediction.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An arbitrary-precision rational, always kept normalized.
///
/// Integers are the special case of denominator 1. `BigRational` already
/// normalizes sign and gcd on construction, so equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ExactNumber(BigRational);

impl ExactNumber {
    pub fn zero() -> Self {
        ExactNumber(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactNumber(BigRational::one())
    }

    pub fn from_integer<T: Into<BigInt>>(value: T) -> Self {
        ExactNumber(BigRational::from_integer(value.into()))
    }

    pub fn from_biguint(value: BigUint) -> Self {
        Self::from_integer(BigInt::from_biguint(Sign::Plus, value))
    }

    /// Builds `numer / denom`; fails on a zero denominator.
    pub fn ratio<N: Into<BigInt>, D: Into<BigInt>>(numer: N, denom: D) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(ExactNumber(BigRational::new(numer.into(), denom)))
    }

    pub fn from_rational(value: BigRational) -> Self {
        ExactNumber(value)
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn checked_div(&self, rhs: &ExactNumber) -> Result<ExactNumber> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(ExactNumber(&self.0 / &rhs.0))
    }

    /// Integer power by repeated squaring. Negative exponents invert the base.
    pub fn pow(&self, exp: i64) -> Result<ExactNumber> {
        let base = if exp < 0 {
            if self.is_zero() {
                return Err(Error::DivisionByZero);
            }
            self.0.recip()
        } else {
            self.0.clone()
        };
        let mut e = exp.unsigned_abs();
        let mut acc = BigRational::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc *= &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(ExactNumber(acc))
    }

    /// Always `p/q`, even for integers (`6/1`).
    pub fn to_ratio_string(&self) -> String {
        format!("{}/{}", self.0.numer(), self.0.denom())
    }

    /// Lossy conversion, for display only.
    pub fn to_f64(&self) -> f64 {
        if let Some(v) = self.0.to_f64() {
            if v.is_finite() {
                return v;
            }
        }
        let sign = if self.0.is_negative() { -1.0 } else { 1.0 };
        match self.abs_ln() {
            Some(l) => sign * l.exp(),
            None => 0.0,
        }
    }

    /// Natural logarithm, accurate to well under 1e-9 relative error.
    ///
    /// Works for values far outside the `f64` range by splitting off powers of two.
    pub fn ln(&self) -> Result<f64> {
        if !self.is_positive() {
            return Err(Error::NonPositiveLog(self.to_string()));
        }
        Ok(self.abs_ln().expect("positive value has a logarithm"))
    }

    fn abs_ln(&self) -> Option<f64> {
        if self.is_zero() {
            return None;
        }
        Some(ln_biguint(self.0.numer().magnitude()) - ln_biguint(self.0.denom().magnitude()))
    }
}

fn ln_biguint(x: &BigUint) -> f64 {
    const KEEP: u64 = 64;
    let bits = x.bits();
    if bits <= KEEP {
        return x.to_f64().expect("fits in f64").ln();
    }
    let shift = bits - KEEP;
    let top = (x >> shift).to_f64().expect("64-bit mantissa fits in f64");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

impl fmt::Display for ExactNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for ExactNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ExactNumber {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::ParseNumber(s.to_string());
        match s.split_once('/') {
            Some((p, q)) => {
                let p: BigInt = p.trim().parse().map_err(|_| bad())?;
                let q: BigInt = q.trim().parse().map_err(|_| bad())?;
                ExactNumber::ratio(p, q)
            }
            None => {
                let p: BigInt = s.parse().map_err(|_| bad())?;
                Ok(ExactNumber::from_integer(p))
            }
        }
    }
}

impl Serialize for ExactNumber {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExactNumber {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for ExactNumber {
            type Output = ExactNumber;
            fn $method(self, rhs: ExactNumber) -> ExactNumber {
                ExactNumber(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a ExactNumber> for &'a ExactNumber {
            type Output = ExactNumber;
            fn $method(self, rhs: &'a ExactNumber) -> ExactNumber {
                ExactNumber((&self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<&'a ExactNumber> for ExactNumber {
            type Output = ExactNumber;
            fn $method(self, rhs: &'a ExactNumber) -> ExactNumber {
                ExactNumber(self.0.$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for ExactNumber {
    type Output = ExactNumber;
    fn neg(self) -> ExactNumber {
        ExactNumber(-self.0)
    }
}

impl From<u64> for ExactNumber {
    fn from(v: u64) -> Self {
        ExactNumber::from_integer(v)
    }
}

impl From<i64> for ExactNumber {
    fn from(v: i64) -> Self {
        ExactNumber::from_integer(v)
    }
}

impl From<u32> for ExactNumber {
    fn from(v: u32) -> Self {
        ExactNumber::from_integer(v)
    }
}

impl PartialEq<u64> for ExactNumber {
    fn eq(&self, other: &u64) -> bool {
        self.is_integer() && self.0.numer() == &BigInt::from(*other)
    }
}

impl PartialOrd<u64> for ExactNumber {
    fn partial_cmp(&self, other: &u64) -> Option<Ordering> {
        self.0
            .partial_cmp(&BigRational::from_integer(BigInt::from(*other)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratios_are_normalized() {
        let a = ExactNumber::ratio(10, 4).unwrap();
        assert_eq!(a.to_string(), "5/2");
        assert_eq!(ExactNumber::ratio(6, 3).unwrap(), 2u64);
        assert_eq!(ExactNumber::ratio(3, -6).unwrap().to_string(), "-1/2");
        assert_eq!(ExactNumber::from(6u64).to_ratio_string(), "6/1");
    }

    #[test]
    fn zero_denominator_is_an_error() {
        assert!(matches!(
            ExactNumber::ratio(1, 0),
            Err(Error::DivisionByZero)
        ));
        assert!(ExactNumber::zero().pow(-1).is_err());
    }

    #[test]
    fn pow_by_squaring() {
        let two = ExactNumber::from(2u64);
        assert_eq!(two.pow(30).unwrap(), 1u64 << 30);
        assert_eq!(two.pow(0).unwrap(), 1u64);
        assert_eq!(two.pow(-3).unwrap().to_string(), "1/8");
        let big = two.pow(200).unwrap();
        assert_eq!(big.numer().bits(), 201);
    }

    #[test]
    fn logarithms() {
        assert_eq!(ExactNumber::one().ln().unwrap(), 0.0);
        let l64 = ExactNumber::from(64u64).ln().unwrap();
        assert!((l64 - 4.1588830834).abs() < 1e-9);
        let l30 = ExactNumber::from(1u64 << 30).ln().unwrap();
        assert!((l30 - 20.7944154168).abs() < 1e-9);
        // far beyond f64 range
        let huge = ExactNumber::from(3u64).pow(2000).unwrap();
        let expect = 2000.0 * 3f64.ln();
        assert!(((huge.ln().unwrap() - expect) / expect).abs() < 1e-12);
        let third = ExactNumber::ratio(1, 3).unwrap();
        assert!((third.ln().unwrap() + 3f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn log_of_nonpositive_fails() {
        assert!(ExactNumber::zero().ln().is_err());
        assert!(ExactNumber::from(-4i64).ln().is_err());
    }

    #[test]
    fn parse_and_serde() {
        let x: ExactNumber = "46".parse().unwrap();
        assert_eq!(x, 46u64);
        let y: ExactNumber = "20/6".parse().unwrap();
        assert_eq!(y.to_string(), "10/3");
        assert!("abc".parse::<ExactNumber>().is_err());
        let json = serde_json::to_string(&y).unwrap();
        assert_eq!(json, "\"10/3\"");
        let back: ExactNumber = serde_json::from_str(&json).unwrap();
        assert_eq!(back, y);
    }
}
