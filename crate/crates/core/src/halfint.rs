//! Exact half-integers, rational exponents and signs.
//!
//! Nothing here touches floating point. Half-integers serialize as the
//! strings `"k"` or `"k/2"`; exponents as `"p/q"` in lowest terms.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Rational64;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A value in `(1/2)Z`, stored as twice its value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };
    pub const HALF: HalfInt = HalfInt { twice: 1 };

    pub const fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub const fn from_int(n: i64) -> Self {
        HalfInt { twice: 2 * n }
    }

    pub const fn twice(self) -> i64 {
        self.twice
    }

    pub const fn is_integral(self) -> bool {
        self.twice % 2 == 0
    }

    /// Largest integer not exceeding the value.
    pub const fn floor(self) -> i64 {
        self.twice.div_euclid(2)
    }

    /// The integer value, if integral.
    pub const fn to_int(self) -> Option<i64> {
        if self.is_integral() {
            Some(self.twice / 2)
        } else {
            None
        }
    }

    /// `self - floor(self)`: either 0 or 1/2.
    pub const fn frac(self) -> HalfInt {
        HalfInt {
            twice: self.twice.rem_euclid(2),
        }
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice + rhs.twice)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice - rhs.twice)
    }
}

impl Add<i64> for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: i64) -> HalfInt {
        HalfInt::from_twice(self.twice + 2 * rhs)
    }
}

impl Sub<i64> for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: i64) -> HalfInt {
        HalfInt::from_twice(self.twice - 2 * rhs)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt::from_twice(-self.twice)
    }
}

impl From<i64> for HalfInt {
    fn from(n: i64) -> Self {
        HalfInt::from_int(n)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integral() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl fmt::Debug for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Failure to parse a half-integer or exponent literal.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse {input:?} as {expected}")]
pub struct ParseNumberError {
    input: String,
    expected: &'static str,
}

impl FromStr for HalfInt {
    type Err = ParseNumberError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseNumberError {
            input: s.to_string(),
            expected: "a half-integer \"k\" or \"k/2\"",
        };
        let t = s.trim();
        match t.split_once('/') {
            None => t
                .parse::<i64>()
                .ok()
                .and_then(|n| n.checked_mul(2))
                .map(HalfInt::from_twice)
                .ok_or_else(err),
            Some((num, "2")) => num.trim().parse::<i64>().map(HalfInt::from_twice).map_err(|_| err()),
            Some(_) => Err(err()),
        }
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

struct NumberVisitor<T>(std::marker::PhantomData<T>, &'static str);

impl<'de, T> Visitor<'de> for NumberVisitor<T>
where
    T: FromStr<Err = ParseNumberError> + From<i64>,
{
    type Value = T;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str(self.1)
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<T, E> {
        v.parse().map_err(E::custom)
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<T, E> {
        Ok(T::from(v))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<T, E> {
        i64::try_from(v)
            .map(T::from)
            .map_err(|_| E::custom("integer out of range"))
    }
}

impl<'de> Deserialize<'de> for HalfInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        deserializer.deserialize_any(NumberVisitor(
            std::marker::PhantomData,
            "a half-integer string \"k\" or \"k/2\", or an integer",
        ))
    }
}

/// An exact rational exponent `x` attached to a summand.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exponent(Rational64);

impl Exponent {
    pub const ZERO: Exponent = Exponent(Rational64::new_raw(0, 1));

    /// `num/den`, reduced. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        Exponent(Rational64::new(num, den))
    }

    pub fn is_zero(self) -> bool {
        *self.0.numer() == 0
    }

    /// `0 < x < 1/2`.
    pub fn is_complementary(self) -> bool {
        self.0 > Rational64::new(0, 1) && self.0 < Rational64::new(1, 2)
    }

    /// `|x| < 1/2`.
    pub fn is_bounded(self) -> bool {
        self.0 > Rational64::new(-1, 2) && self.0 < Rational64::new(1, 2)
    }

    pub fn numer(self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(self) -> i64 {
        *self.0.denom()
    }
}

impl From<i64> for Exponent {
    fn from(n: i64) -> Self {
        Exponent(Rational64::from_integer(n))
    }
}

impl Neg for Exponent {
    type Output = Exponent;
    fn neg(self) -> Exponent {
        Exponent(-self.0)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Exponent {
    type Err = ParseNumberError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseNumberError {
            input: s.to_string(),
            expected: "a rational \"p/q\" or integer",
        };
        let t = s.trim();
        match t.split_once('/') {
            None => t.parse::<i64>().map(Exponent::from).map_err(|_| err()),
            Some((num, den)) => {
                let num: i64 = num.trim().parse().map_err(|_| err())?;
                let den: i64 = den.trim().parse().map_err(|_| err())?;
                if den == 0 {
                    return Err(err());
                }
                Ok(Exponent::new(num, den))
            }
        }
    }
}

impl Serialize for Exponent {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Exponent {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        deserializer.deserialize_any(NumberVisitor(
            std::marker::PhantomData,
            "a rational string \"p/q\", or an integer",
        ))
    }
}

/// A sign in `{+1, -1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^n`.
    pub const fn parity(n: i64) -> Sign {
        if n.rem_euclid(2) == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub const fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    /// `self^n`; only the parity of `n` matters.
    pub const fn pow(self, n: i64) -> Sign {
        match self {
            Sign::Plus => Sign::Plus,
            Sign::Minus => Sign::parity(n),
        }
    }
}

impl Ord for Sign {
    /// `Minus < Plus`, matching the integer values.
    fn cmp(&self, other: &Self) -> Ordering {
        self.value().cmp(&other.value())
    }
}

impl PartialOrd for Sign {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl fmt::Debug for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_i64(self.value())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = i64::deserialize(deserializer)?;
        Sign::from_value(v).ok_or_else(|| de::Error::custom(format!("sign must be 1 or -1, got {v}")))
    }
}
