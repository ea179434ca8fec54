//! Exact rational scalars.
//!
//! All arithmetic routes through 128-bit intermediates and panics if a
//! reduced result leaves the `i64` range, so results are always exact —
//! there is no silent wraparound and no floating point anywhere.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

/// A rational number stored in lowest terms with a positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: i64,
    den: i64,
}

pub const ZERO: Scalar = Scalar { num: 0, den: 1 };
pub const ONE: Scalar = Scalar { num: 1, den: 1 };

fn gcd128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn narrow(value: i128, what: &str) -> i64 {
    i64::try_from(value).unwrap_or_else(|_| panic!("exact scalar overflow in {what}: {value}"))
}

impl Scalar {
    pub const ZERO: Scalar = ZERO;
    pub const ONE: Scalar = ONE;

    /// Builds `num/den` reduced to lowest terms. Panics on a zero
    /// denominator.
    pub fn new(num: i64, den: i64) -> Scalar {
        assert!(den != 0, "scalar denominator must be nonzero");
        Scalar::reduced(num as i128, den as i128, "construction")
    }

    fn reduced(mut num: i128, mut den: i128, what: &str) -> Scalar {
        if num == 0 {
            return ZERO;
        }
        if den < 0 {
            num = -num;
            den = -den;
        }
        let g = gcd128(num, den);
        Scalar {
            num: narrow(num / g, what),
            den: narrow(den / g, what),
        }
    }

    pub fn from_int(n: i64) -> Scalar {
        Scalar { num: n, den: 1 }
    }

    pub fn numerator(&self) -> i64 {
        self.num
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_one(&self) -> bool {
        self.num == 1 && self.den == 1
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    /// Multiplicative inverse; panics on zero.
    pub fn recip(&self) -> Scalar {
        assert!(self.num != 0, "attempted to invert the zero scalar");
        Scalar::reduced(self.den as i128, self.num as i128, "reciprocal")
    }

    pub fn abs(&self) -> Scalar {
        Scalar { num: self.num.abs(), den: self.den }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Scalar {
        Scalar::from_int(n)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        let num = self.num as i128 * rhs.den as i128 + rhs.num as i128 * self.den as i128;
        Scalar::reduced(num, self.den as i128 * rhs.den as i128, "addition")
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        let num = self.num as i128 * rhs.den as i128 - rhs.num as i128 * self.den as i128;
        Scalar::reduced(num, self.den as i128 * rhs.den as i128, "subtraction")
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        Scalar::reduced(
            self.num as i128 * rhs.num as i128,
            self.den as i128 * rhs.den as i128,
            "multiplication",
        )
    }
}

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        assert!(rhs.num != 0, "scalar division by zero");
        Scalar::reduced(
            self.num as i128 * rhs.den as i128,
            self.den as i128 * rhs.num as i128,
            "division",
        )
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { num: -self.num, den: self.den }
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = *self + rhs;
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self = *self - rhs;
    }
}

impl MulAssign for Scalar {
    fn mul_assign(&mut self, rhs: Scalar) {
        *self = *self * rhs;
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Scalar) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Scalar) -> std::cmp::Ordering {
        let lhs = self.num as i128 * other.den as i128;
        let rhs = other.num as i128 * self.den as i128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, thiserror::Error)]
#[error("invalid scalar literal {0:?}")]
pub struct ParseScalarError(String);

impl FromStr for Scalar {
    type Err = ParseScalarError;

    /// Accepts `"n"` or `"n/d"`.
    fn from_str(s: &str) -> Result<Scalar, ParseScalarError> {
        let bad = || ParseScalarError(s.to_string());
        match s.split_once('/') {
            None => Ok(Scalar::from_int(s.trim().parse().map_err(|_| bad())?)),
            Some((n, d)) => {
                let num: i64 = n.trim().parse().map_err(|_| bad())?;
                let den: i64 = d.trim().parse().map_err(|_| bad())?;
                if den == 0 {
                    return Err(bad());
                }
                Ok(Scalar::new(num, den))
            }
        }
    }
}
