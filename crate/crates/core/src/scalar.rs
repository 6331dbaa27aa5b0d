//! Scalar abstraction shared by every geometric type in the crate.
//!
//! All of the piecewise-linear machinery is written against [`Scalar`] so it can
//! run over exact rationals (the default, [`crate::Rational`]), fixed-width
//! rationals, or `f64` for quick previews. Only the exact instantiations give
//! decidable equality of canonical forms.

use std::cmp::Ordering;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive};

use crate::error::{Error, Result};

/// An ordered field element usable as a coordinate.
pub trait Scalar: Clone + Debug + PartialOrd + Num + Signed + Send + Sync + 'static {
    /// `true` when arithmetic is exact (rational instantiations).
    const EXACT: bool;

    fn from_ratio(numer: i64, denom: i64) -> Self;

    fn floor(&self) -> Self;

    fn to_f64(&self) -> f64;

    /// Lossless text form: `p` or `p/q` for rationals.
    fn to_exact_string(&self) -> String;

    fn parse_exact(text: &str) -> Result<Self>;

    /// Fixed-point decimal rendering with round-half-even at `precision` places.
    fn to_decimal(&self, precision: usize) -> String;

    fn from_int(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }

    fn is_integer(&self) -> bool {
        self.floor() == *self
    }

    fn to_i64(&self) -> Option<i64> {
        if !self.is_integer() {
            return None;
        }
        let v = self.to_f64();
        if v.abs() < 9.0e15 {
            Some(v.round() as i64)
        } else {
            None
        }
    }

    fn half() -> Self {
        Self::from_ratio(1, 2)
    }
}

/// Total comparison for scalars that are never NaN in this crate.
pub fn cmp<S: Scalar>(a: &S, b: &S) -> Ordering {
    a.partial_cmp(b).expect("scalar comparison on NaN")
}

/// `(1 - lambda) * a + lambda * b`
pub fn lerp<S: Scalar>(a: &S, b: &S, lambda: &S) -> S {
    a.clone() + lambda.clone() * (b.clone() - a.clone())
}

fn parse_ratio<T>(text: &str) -> Option<Ratio<T>>
where
    T: Clone + Integer + std::str::FromStr,
{
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let n: T = n.trim().parse().ok()?;
            let d: T = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Ratio::new(n, d))
            }
        }
        None => parse_decimal::<T>(text),
    }
}

fn parse_decimal<T>(text: &str) -> Option<Ratio<T>>
where
    T: Clone + Integer + std::str::FromStr,
{
    match text.split_once('.') {
        None => text.parse::<T>().ok().map(Ratio::from_integer),
        Some((int_part, frac_part)) => {
            if frac_part.is_empty() || !frac_part.chars().all(|c| c.is_ascii_digit()) {
                return None;
            }
            let negative = int_part.starts_with('-');
            let digits = format!("{}{}", int_part.trim_start_matches(['-', '+']), frac_part);
            let numer: T = digits.parse().ok()?;
            let ten: T = "10".parse().ok()?;
            let mut denom = T::one();
            for _ in 0..frac_part.len() {
                denom = denom * ten.clone();
            }
            let r = Ratio::new(numer, denom);
            Some(if negative { Ratio::from_integer(T::zero()) - r } else { r })
        }
    }
}

/// Round-half-even decimal expansion of an exact big rational.
pub fn rational_to_decimal(value: &BigRational, precision: usize) -> String {
    let scale = BigInt::from(10u32).pow(precision as u32);
    let scaled = value * BigRational::from_integer(scale.clone());
    let floor = scaled.floor();
    let frac = &scaled - &floor;
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let mut units = floor.to_integer();
    if frac > half || (frac == half && units.is_odd()) {
        units += BigInt::one();
    }
    let negative = units.is_negative();
    let digits = units.abs().to_string();
    let digits = if digits.len() <= precision {
        format!("{}{}", "0".repeat(precision + 1 - digits.len()), digits)
    } else {
        digits
    };
    let (int_part, frac_part) = digits.split_at(digits.len() - precision);
    let sign = if negative { "-" } else { "" };
    if precision == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part}")
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_ratio(numer: i64, denom: i64) -> Self {
        BigRational::new(BigInt::from(numer), BigInt::from(denom))
    }

    fn floor(&self) -> Self {
        Ratio::floor(self)
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn to_exact_string(&self) -> String {
        self.to_string()
    }

    fn parse_exact(text: &str) -> Result<Self> {
        parse_ratio::<BigInt>(text).ok_or_else(|| Error::Parse(format!("not a rational: {text:?}")))
    }

    fn to_decimal(&self, precision: usize) -> String {
        rational_to_decimal(self, precision)
    }

    fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.to_integer().to_i64()
        } else {
            None
        }
    }
}

impl Scalar for Ratio<i64> {
    const EXACT: bool = true;

    fn from_ratio(numer: i64, denom: i64) -> Self {
        Ratio::new(numer, denom)
    }

    fn floor(&self) -> Self {
        Ratio::floor(self)
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn to_exact_string(&self) -> String {
        self.to_string()
    }

    fn parse_exact(text: &str) -> Result<Self> {
        parse_ratio::<i64>(text).ok_or_else(|| Error::Parse(format!("not a rational: {text:?}")))
    }

    fn to_decimal(&self, precision: usize) -> String {
        let big = BigRational::new(BigInt::from(*self.numer()), BigInt::from(*self.denom()));
        rational_to_decimal(&big, precision)
    }

    fn to_i64(&self) -> Option<i64> {
        self.is_integer().then(|| self.to_integer())
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_ratio(numer: i64, denom: i64) -> Self {
        numer as f64 / denom as f64
    }

    fn floor(&self) -> Self {
        f64::floor(*self)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn to_exact_string(&self) -> String {
        format!("{self:?}")
    }

    fn parse_exact(text: &str) -> Result<Self> {
        let text = text.trim();
        let parsed = match text.split_once('/') {
            Some((n, d)) => n
                .trim()
                .parse::<f64>()
                .ok()
                .zip(d.trim().parse::<f64>().ok())
                .map(|(n, d)| n / d),
            None => text.parse::<f64>().ok(),
        };
        parsed
            .filter(|v| v.is_finite())
            .ok_or_else(|| Error::Parse(format!("not a number: {text:?}")))
    }

    fn to_decimal(&self, precision: usize) -> String {
        match BigRational::from_f64(*self) {
            Some(exact) => rational_to_decimal(&exact, precision),
            None => format!("{self}"),
        }
    }
}
