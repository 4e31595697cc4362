//! Numeric substrate: scalars that are either exact big rationals or floats.
//!
//! Every probability and support point in the crate is a [`Scalar`]. Exact
//! scalars compare with no tolerance; approx scalars are compared by the
//! caller with an absolute tolerance carried in [`Tol`]. Any arithmetic that
//! mixes the two modes yields an approx result.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Signed, ToPrimitive, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// Comparison context for approx-mode scalars.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tol {
    /// Absolute tolerance for equality of float cdf levels (default `1e-12`).
    pub eps: f64,
}

impl Default for Tol {
    fn default() -> Self {
        Tol { eps: 1e-12 }
    }
}

impl Tol {
    pub fn new(eps: f64) -> Self {
        Tol { eps }
    }
}

/// An exact rational or a binary floating-point value.
///
/// Comparisons between mixed modes are performed in floats. The crate keeps
/// every scalar finite; constructors reject non-finite floats.
#[derive(Clone, Debug)]
pub enum Scalar {
    Exact(BigRational),
    Approx(f64),
}

impl Scalar {
    pub fn int(n: i64) -> Self {
        Scalar::Exact(BigRational::from_integer(BigInt::from(n)))
    }

    /// Exact rational `num/den`. Panics on a zero denominator; use
    /// [`Scalar::parse_exact`] for untrusted input.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator in Scalar::ratio");
        Scalar::Exact(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn approx(x: f64) -> Self {
        Scalar::Approx(x)
    }

    pub fn from_big(r: BigRational) -> Self {
        Scalar::Exact(r)
    }

    pub fn zero() -> Self {
        Scalar::int(0)
    }

    pub fn one() -> Self {
        Scalar::int(1)
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.is_zero(),
            Scalar::Approx(x) => *x == 0.0,
        }
    }

    pub fn is_positive(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.is_positive(),
            Scalar::Approx(x) => *x > 0.0,
        }
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.is_integer(),
            Scalar::Approx(x) => x.fract() == 0.0,
        }
    }

    /// Nearest float. Exact values with huge numerators/denominators are
    /// converted via bit-length reduction so the division never degenerates
    /// to `inf/inf`.
    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(r) => big_ratio_to_f64(r),
            Scalar::Approx(x) => *x,
        }
    }

    /// This value converted to approx mode (identity on approx scalars).
    pub fn to_approx(&self) -> Scalar {
        Scalar::Approx(self.to_f64())
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(r.abs()),
            Scalar::Approx(x) => Scalar::Approx(x.abs()),
        }
    }

    /// Float square root (used only for standard deviations; exact variance
    /// is reported separately where exactness matters).
    pub fn approx_sqrt(&self) -> Scalar {
        Scalar::Approx(self.to_f64().sqrt())
    }

    /// `self ≤ other + slack`, the tolerance-aware inequality used by every
    /// order condition: borderline comparisons within `slack` count as
    /// satisfied.
    pub fn le_within(&self, other: &Scalar, slack: &Scalar) -> bool {
        // Plain comparison first: it is far cheaper than rational addition
        // when slack and the operands have unrelated denominators.
        if self <= other || slack.is_zero() {
            self <= other
        } else {
            *self <= other + slack
        }
    }

    /// `|self − other| ≤ slack`.
    pub fn eq_within(&self, other: &Scalar, slack: &Scalar) -> bool {
        if self == other {
            return true;
        }
        (self - other).abs() <= *slack
    }

    /// Parse an exact scalar from an integer (`"12"`), a ratio (`"-3/4"`) or
    /// a plain decimal (`"0.25"`, interpreted as 25/100). Scientific
    /// notation is rejected: it almost always denotes a float threshold, not
    /// exact data.
    pub fn parse_exact(s: &str) -> Result<Scalar> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::ParseError("empty numeric literal".into()));
        }
        if let Some((num, den)) = s.split_once('/') {
            let n: BigInt = num.trim().parse().map_err(|_| bad_number(s))?;
            let d: BigInt = den.trim().parse().map_err(|_| bad_number(s))?;
            if d.is_zero() {
                return Err(Error::ParseError(format!("zero denominator in '{s}'")));
            }
            return Ok(Scalar::Exact(BigRational::new(n, d)));
        }
        if s.contains(['e', 'E']) {
            return Err(Error::ParseError(format!(
                "scientific notation '{s}' is not accepted for exact values; write an integer, a decimal or 'num/den'"
            )));
        }
        if let Some((int_part, frac_part)) = s.split_once('.') {
            let sign = if int_part.trim_start().starts_with('-') {
                -1
            } else {
                1
            };
            let digits: String = format!("{}{}", int_part.trim(), frac_part.trim())
                .chars()
                .filter(|c| *c != '-' && *c != '+')
                .collect();
            if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
                return Err(bad_number(s));
            }
            let mantissa: BigInt = digits.parse().map_err(|_| bad_number(s))?;
            let scale = BigInt::from(10u32).pow(frac_part.trim().len() as u32);
            return Ok(Scalar::Exact(BigRational::new(
                BigInt::from(sign) * mantissa,
                scale,
            )));
        }
        let n: BigInt = s.parse().map_err(|_| bad_number(s))?;
        Ok(Scalar::Exact(BigRational::from_integer(n)))
    }
}

fn bad_number(s: &str) -> Error {
    Error::ParseError(format!("cannot parse '{s}' as a number"))
}

/// Nearest-float conversion that stays well-conditioned for rationals whose
/// numerator/denominator exceed the float range: both are shifted down to at
/// most 64 bits, divided, and rescaled by the exponent difference.
fn big_ratio_to_f64(r: &BigRational) -> f64 {
    let num = r.numer();
    let den = r.denom();
    if num.is_zero() {
        return 0.0;
    }
    let nb = num.bits() as i64;
    let db = den.bits() as i64;
    let shift_n = (nb - 64).max(0) as usize;
    let shift_d = (db - 64).max(0) as usize;
    let n_red = (num >> shift_n).to_f64().unwrap_or(0.0);
    let d_red = (den >> shift_d).to_f64().unwrap_or(1.0);
    (n_red / d_red) * 2f64.powi((shift_n as i64 - shift_d as i64) as i32)
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Scalar {}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a.cmp(b),
            _ => self
                .to_f64()
                .partial_cmp(&other.to_f64())
                .expect("non-finite scalar in comparison"),
        }
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a.$method(b)),
                    _ => Scalar::Approx(self.to_f64().$method(rhs.to_f64())),
                }
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

scalar_binop!(Add, add);
scalar_binop!(Sub, sub);
scalar_binop!(Mul, mul);
scalar_binop!(Div, div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(-r),
            Scalar::Approx(x) => Scalar::Approx(-x),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) => write!(f, "{r}"),
            Scalar::Approx(x) => write!(f, "{x}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Scalar::Exact(r) if r.is_integer() => match r.numer().to_i64() {
                Some(i) => serializer.serialize_i64(i),
                None => serializer.serialize_str(&r.to_string()),
            },
            Scalar::Exact(r) => serializer.serialize_str(&r.to_string()),
            Scalar::Approx(x) => serializer.serialize_f64(*x),
        }
    }
}

struct ScalarVisitor;

impl Visitor<'_> for ScalarVisitor {
    type Value = Scalar;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an integer, a float, or a 'num/den' rational string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Scalar, E> {
        Ok(Scalar::int(v))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Scalar, E> {
        Ok(Scalar::Exact(BigRational::from_integer(BigInt::from(v))))
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<Scalar, E> {
        if !v.is_finite() {
            return Err(E::custom("non-finite float"));
        }
        Ok(Scalar::Approx(v))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Scalar, E> {
        Scalar::parse_exact(v).map_err(|e| E::custom(e.to_string()))
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Scalar, D::Error> {
        deserializer.deserialize_any(ScalarVisitor)
    }
}
