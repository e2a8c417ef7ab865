//! Exact rational arithmetic on the unit circle `R/Z`.
//!
//! Positions and lengths in this crate are [`Rational`]s backed by
//! arbitrary-precision integers. Adjacency in a circle
//! representation is decided by a strict inequality between angles, so no
//! floating point value is ever produced here.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// An exact rational number in canonical form (`den > 0`, `gcd(num, den) = 1`).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den`.
    ///
    /// # Panics
    /// Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn integer(v: i64) -> Self {
        Rational(BigRational::from_integer(v.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Largest integer `<= self`.
    pub fn floor(&self) -> Rational {
        Rational(self.0.floor())
    }

    /// Fractional part, always in `[0, 1)`.
    pub fn fract_positive(&self) -> Rational {
        Rational(&self.0 - self.0.floor())
    }

    /// Integer value if `self` is an integer that fits in `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        if self.0.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    /// Lossy conversion for display purposes only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    pub fn min(self, other: Rational) -> Rational {
        if self <= other {
            self
        } else {
            other
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `"p/q"` or a bare integer `"p"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid rational `{s}`"));
        match s.split_once('/') {
            Some((p, q)) => {
                let p: BigInt = p.trim().parse().map_err(|_| bad())?;
                let q: BigInt = q.trim().parse().map_err(|_| bad())?;
                Rational::from_big(p, q).map_err(|_| bad())
            }
            None => {
                let p: BigInt = s.parse().map_err(|_| bad())?;
                Ok(Rational(BigRational::from_integer(p)))
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::integer(v)
    }
}

impl From<usize> for Rational {
    fn from(v: usize) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(&self.0, &rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(self.0, rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(self.0, &rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(&self.0, rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

/// A point of `R/Z`, stored as its representative in `[0, 1)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Rational", try_from = "Rational")]
pub struct CirclePoint(Rational);

impl CirclePoint {
    /// Reduces `value` modulo 1.
    pub fn new(value: Rational) -> Self {
        CirclePoint(value.fract_positive())
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        CirclePoint::new(Rational::new(num, den))
    }

    pub fn zero() -> Self {
        CirclePoint(Rational::zero())
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    /// `self + delta` modulo 1.
    pub fn shift(&self, delta: &Rational) -> CirclePoint {
        CirclePoint::new(&self.0 + delta)
    }

    /// Clockwise distance from `self` to `to`, i.e. `(to - self) mod 1`.
    pub fn forward_to(&self, to: &CirclePoint) -> Rational {
        (&to.0 - &self.0).fract_positive()
    }

    /// Reflection `x -> -x`.
    pub fn mirrored(&self) -> CirclePoint {
        CirclePoint::new(-&self.0)
    }
}

impl From<CirclePoint> for Rational {
    fn from(p: CirclePoint) -> Rational {
        p.0
    }
}

impl TryFrom<Rational> for CirclePoint {
    type Error = Error;
    fn try_from(r: Rational) -> Result<Self, Error> {
        if r.is_negative() || r >= Rational::one() {
            return Err(Error::Parse(format!("circle point {r} outside [0,1)")));
        }
        Ok(CirclePoint(r))
    }
}

impl fmt::Display for CirclePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for CirclePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "@{}", self.0)
    }
}

/// How an interval endpoint is counted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EndMode {
    Closed,
    Open,
    /// A vertex sitting exactly on this endpoint counts 1/2.
    Half,
}

impl EndMode {
    /// Weight of a point on this endpoint, doubled so it stays integral.
    pub fn weight2(self) -> u64 {
        match self {
            EndMode::Closed => 2,
            EndMode::Half => 1,
            EndMode::Open => 0,
        }
    }
}

/// A clockwise arc from `start` to `end` on `R/Z`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CircularInterval {
    pub start: CirclePoint,
    pub end: CirclePoint,
    pub start_mode: EndMode,
    pub end_mode: EndMode,
    /// When set the arc wraps once around the circle from `start` back to
    /// `start`; `end` must equal `start`.
    pub full_circle: bool,
}

impl CircularInterval {
    pub fn new(start: CirclePoint, end: CirclePoint, start_mode: EndMode, end_mode: EndMode) -> Self {
        CircularInterval { start, end, start_mode, end_mode, full_circle: false }
    }

    /// `[start, end]`
    pub fn closed(start: CirclePoint, end: CirclePoint) -> Self {
        Self::new(start, end, EndMode::Closed, EndMode::Closed)
    }

    /// `(start, end)`
    pub fn open(start: CirclePoint, end: CirclePoint) -> Self {
        Self::new(start, end, EndMode::Open, EndMode::Open)
    }

    /// `<start, end>`: both endpoints half-weighted.
    pub fn half(start: CirclePoint, end: CirclePoint) -> Self {
        Self::new(start, end, EndMode::Half, EndMode::Half)
    }

    /// Arc of length `len` starting at `start`. A length of exactly 1 gives
    /// the full circle, other lengths are reduced modulo 1.
    pub fn from_length(start: CirclePoint, len: &Rational, start_mode: EndMode, end_mode: EndMode) -> Self {
        if *len == Rational::one() {
            return Self::full(start, start_mode, end_mode);
        }
        let end = start.shift(len);
        Self::new(start, end, start_mode, end_mode)
    }

    /// The whole circle read as the arc `x .. x+1`; the point `x` is seen
    /// once as the start and once as the end.
    pub fn full(at: CirclePoint, start_mode: EndMode, end_mode: EndMode) -> Self {
        CircularInterval { end: at.clone(), start: at, start_mode, end_mode, full_circle: true }
    }

    pub fn length(&self) -> Rational {
        interval_length(self)
    }
}

impl fmt::Debug for CircularInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = match self.start_mode {
            EndMode::Closed => "[",
            EndMode::Open => "(",
            EndMode::Half => "<",
        };
        let r = match self.end_mode {
            EndMode::Closed => "]",
            EndMode::Open => ")",
            EndMode::Half => ">",
        };
        if self.full_circle {
            write!(f, "{l}{}, {}+1{r}", self.start, self.end)
        } else {
            write!(f, "{l}{}, {}{r}", self.start, self.end)
        }
    }
}

/// Position of a point relative to a [`CircularInterval`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Containment {
    Outside,
    Interior,
    BoundaryStart,
    BoundaryEnd,
    /// The point is both endpoints at once: the base point of a full-circle
    /// arc, or the single point of a degenerate arc `[p, p]`.
    BothEnds,
}

/// Smaller angle between `x` and `y` as a fraction of a full turn, in `[0, 1/2]`.
pub fn angle_fraction(x: &CirclePoint, y: &CirclePoint) -> Rational {
    let fwd = x.forward_to(y);
    let back = Rational::one() - &fwd;
    if fwd.is_zero() {
        fwd
    } else {
        fwd.min(back)
    }
}

/// Classifies `p` against `interval`. Open endpoints are reported as
/// [`Containment::Outside`].
pub fn interval_contains(interval: &CircularInterval, p: &CirclePoint) -> Containment {
    let sm = interval.start_mode != EndMode::Open;
    let em = interval.end_mode != EndMode::Open;
    if interval.full_circle {
        if *p != interval.start {
            return Containment::Interior;
        }
        return match (sm, em) {
            (true, true) => Containment::BothEnds,
            (true, false) => Containment::BoundaryStart,
            (false, true) => Containment::BoundaryEnd,
            (false, false) => Containment::Outside,
        };
    }
    let len = interval.start.forward_to(&interval.end);
    if len.is_zero() {
        return if *p == interval.start && sm && em { Containment::BothEnds } else { Containment::Outside };
    }
    if *p == interval.start {
        return if sm { Containment::BoundaryStart } else { Containment::Outside };
    }
    if *p == interval.end {
        return if em { Containment::BoundaryEnd } else { Containment::Outside };
    }
    if interval.start.forward_to(p) < len {
        Containment::Interior
    } else {
        Containment::Outside
    }
}

/// Doubled weight with which `p` is counted by `interval`.
pub fn member_weight2(interval: &CircularInterval, p: &CirclePoint) -> u64 {
    match interval_contains(interval, p) {
        Containment::Outside => 0,
        Containment::Interior => 2,
        Containment::BoundaryStart => interval.start_mode.weight2(),
        Containment::BoundaryEnd => interval.end_mode.weight2(),
        Containment::BothEnds if interval.full_circle => interval.start_mode.weight2() + interval.end_mode.weight2(),
        Containment::BothEnds => interval.start_mode.weight2().min(interval.end_mode.weight2()),
    }
}

/// `(end - start) mod 1`, or 1 for a full-circle arc.
pub fn interval_length(interval: &CircularInterval) -> Rational {
    if interval.full_circle {
        Rational::one()
    } else {
        interval.start.forward_to(&interval.end)
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        *self == Rational::integer(*other)
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.cmp(&Rational::integer(*other)))
    }
}
