//! Exact scalars: arbitrary precision rationals and the extended half line `[0, ∞]`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Arbitrary precision rational, always stored in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Shorthand for `p / q` with small integer parts.
///
/// Panics if `q == 0`.
pub fn q(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// The integer `n` as a rational.
pub fn qi(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Largest integer `<= x`.
pub fn floor(x: &Rational) -> BigInt {
    x.floor().to_integer()
}

/// Smallest integer `>= x`.
pub fn ceil(x: &Rational) -> BigInt {
    x.ceil().to_integer()
}

/// Representative of `x mod 1` in `[0, 1)`.
pub fn frac(x: &Rational) -> Rational {
    x - x.floor()
}

/// Distance from `x` to the progression `offset + step·ℤ` (`step > 0`).
pub fn dist_to_progression(x: &Rational, offset: &Rational, step: &Rational) -> Rational {
    let f = frac(&((x - offset) / step));
    let g = Rational::one() - &f;
    f.min(g) * step
}

/// Least common multiple of two positive rationals in lowest terms:
/// `lcm(a/b, c/d) = lcm(a, c) / gcd(b, d)`.
pub fn rational_lcm(x: &Rational, y: &Rational) -> Rational {
    let num = x.numer().lcm(y.numer());
    let den = x.denom().gcd(y.denom());
    Rational::new(num, den)
}

/// Lossy conversion used only for rendering and floating point diagnostics.
pub fn to_f64(x: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or_else(|| {
        if x.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Writes `x` as `p/q`, or `p` when the denominator is one.
pub fn fmt_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p/q` or `p` with an optional sign. No decimal or exponent syntax.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let bad = || Error::InvalidParameter(format!("not a rational: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let valid_int = |t: &str, signed: bool| {
        let digits = if signed {
            t.strip_prefix(['+', '-']).unwrap_or(t)
        } else {
            t
        };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid_int(num, true) || !valid_int(den, false) {
        return Err(bad());
    }
    let n = BigInt::from_str(num.trim_start_matches('+')).map_err(|_| bad())?;
    let d = BigInt::from_str(den).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::InvalidParameter(format!(
            "zero denominator in {s:?}"
        )));
    }
    Ok(Rational::new(n, d))
}

/// A value in `[0, ∞]`. `Finite` holds a nonnegative rational.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtRational {
    Finite(Rational),
    Infinity,
}

impl ExtRational {
    pub fn zero() -> Self {
        ExtRational::Finite(Rational::zero())
    }

    /// Checked constructor: rejects negative values.
    pub fn finite(x: Rational) -> Result<Self, Error> {
        if x.is_negative() {
            return Err(Error::InvalidParameter(format!(
                "alpha must be nonnegative, got {}",
                fmt_rational(&x)
            )));
        }
        Ok(ExtRational::Finite(x))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExtRational::Finite(x) if x.is_zero())
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtRational::Infinity)
    }

    pub fn as_finite(&self) -> Option<&Rational> {
        match self {
            ExtRational::Finite(x) => Some(x),
            ExtRational::Infinity => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ExtRational::Finite(x) => to_f64(x),
            ExtRational::Infinity => f64::INFINITY,
        }
    }
}

impl PartialOrd for ExtRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtRational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtRational::Finite(a), ExtRational::Finite(b)) => a.cmp(b),
            (ExtRational::Finite(_), ExtRational::Infinity) => Ordering::Less,
            (ExtRational::Infinity, ExtRational::Finite(_)) => Ordering::Greater,
            (ExtRational::Infinity, ExtRational::Infinity) => Ordering::Equal,
        }
    }
}

impl From<Rational> for ExtRational {
    fn from(x: Rational) -> Self {
        ExtRational::Finite(x)
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRational::Finite(x) => f.write_str(&fmt_rational(x)),
            ExtRational::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for ExtRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim() == "inf" {
            Ok(ExtRational::Infinity)
        } else {
            ExtRational::finite(parse_rational(s)?)
        }
    }
}
