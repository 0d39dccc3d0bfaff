//! Exact scalars: rationals and Gaussian rationals.
//!
//! All theorem-level decisions in this crate run over these types; floating
//! point appears only in the action simulator, which converts on demand.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Complex, One, ToPrimitive, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Builds a rational from an integer numerator/denominator pair.
///
/// Panics if `den` is zero; document parsing checks denominators before
/// reaching this point.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// A complex number with exact rational real and imaginary parts.
///
/// Equality is exact. Field operations never lose precision; division by
/// zero panics like integer division does.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn from_int(v: i64) -> Self {
        Self {
            re: Rational::from(BigInt::from(v)),
            im: Rational::zero(),
        }
    }

    pub fn from_rational(re: Rational) -> Self {
        Self {
            re,
            im: Rational::zero(),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// |z|^2 as an exact rational.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Self {
        let n = self.norm_sqr();
        assert!(!n.is_zero(), "division by zero Gaussian rational");
        Self {
            re: &self.re / &n,
            im: -(&self.im / &n),
        }
    }

    /// Lossy conversion for the floating-point simulator.
    pub fn to_complex64(&self) -> Complex<f64> {
        Complex::new(rational_to_f64(&self.re), rational_to_f64(&self.im))
    }
}

pub(crate) fn rational_to_f64(r: &Rational) -> f64 {
    // to_f64 on BigRational handles magnitudes beyond i64 by long division.
    r.to_f64().unwrap_or(f64::NAN)
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else {
            write!(f, "{}{}{}i", self.re, if self.im.is_negative() { "" } else { "+" }, self.im)
        }
    }
}

use num::Signed;

impl From<i64> for GaussianRational {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        GaussianRational::is_zero(self)
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::from_int(1)
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl<'a> Add<&'a GaussianRational> for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &'a GaussianRational) -> GaussianRational {
        GaussianRational {
            re: self.re + &rhs.re,
            im: self.im + &rhs.im,
        }
    }
}

impl AddAssign for GaussianRational {
    fn add_assign(&mut self, rhs: Self) {
        self.re += rhs.re;
        self.im += rhs.im;
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl<'a> Sub<&'a GaussianRational> for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &'a GaussianRational) -> GaussianRational {
        GaussianRational {
            re: self.re - &rhs.re,
            im: self.im - &rhs.im,
        }
    }
}

impl SubAssign for GaussianRational {
    fn sub_assign(&mut self, rhs: Self) {
        self.re -= rhs.re;
        self.im -= rhs.im;
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        (&self).mul(&rhs)
    }
}

impl<'a, 'b> Mul<&'b GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &'b GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl<'a> Mul<&'a GaussianRational> for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &'a GaussianRational) -> GaussianRational {
        (&self).mul(rhs)
    }
}

impl MulAssign for GaussianRational {
    fn mul_assign(&mut self, rhs: Self) {
        *self = (&*self).mul(&rhs);
    }
}

impl Div for GaussianRational {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.recip()
    }
}

impl<'a> Div<&'a GaussianRational> for GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &'a GaussianRational) -> GaussianRational {
        self * rhs.recip()
    }
}

// ---------------------------------------------------------------------------
// Serialization. Exact numbers travel as `[num, den]` integer pairs, a
// Gaussian rational as `[[re_num, re_den], [im_num, im_den]]`. Integers that
// do not fit an i64 are written as decimal strings.
// ---------------------------------------------------------------------------

/// Wire form of an arbitrary-precision integer.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
pub(crate) enum IntRepr {
    Small(i64),
    Big(String),
}

impl IntRepr {
    pub(crate) fn from_bigint(v: &BigInt) -> Self {
        match v.to_i64() {
            Some(s) => IntRepr::Small(s),
            None => IntRepr::Big(v.to_string()),
        }
    }

    pub(crate) fn to_bigint(&self) -> Result<BigInt, String> {
        match self {
            IntRepr::Small(s) => Ok(BigInt::from(*s)),
            IntRepr::Big(s) => s
                .parse::<BigInt>()
                .map_err(|_| format!("invalid integer literal {s:?}")),
        }
    }
}

pub(crate) type RationalRepr = (IntRepr, IntRepr);

pub(crate) fn rational_to_repr(r: &Rational) -> RationalRepr {
    (IntRepr::from_bigint(r.numer()), IntRepr::from_bigint(r.denom()))
}

pub(crate) fn rational_from_repr(repr: &RationalRepr) -> Result<Rational, String> {
    let num = repr.0.to_bigint()?;
    let den = repr.1.to_bigint()?;
    if den.is_zero() {
        return Err("zero denominator".to_string());
    }
    Ok(Rational::new(num, den))
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        (rational_to_repr(&self.re), rational_to_repr(&self.im)).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let (re, im) = <(RationalRepr, RationalRepr)>::deserialize(deserializer)?;
        Ok(GaussianRational {
            re: rational_from_repr(&re).map_err(D::Error::custom)?,
            im: rational_from_repr(&im).map_err(D::Error::custom)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: (i64, i64), im: (i64, i64)) -> GaussianRational {
        GaussianRational::new(rat(re.0, re.1), rat(im.0, im.1))
    }

    #[test]
    fn field_arithmetic_is_exact() {
        let a = g((1, 2), (3, 4));
        let b = g((-2, 3), (5, 7));
        let prod = &a * &b;
        // (1/2 + 3/4 i)(-2/3 + 5/7 i) = (-1/3 - 15/28) + (5/14 - 1/2) i
        assert_eq!(prod, g((-73, 84), (-1, 7)));
        assert_eq!(prod.clone() / b, a);
    }

    #[test]
    fn recip_times_self_is_one() {
        let a = g((3, 5), (-7, 2));
        assert_eq!(&a * &a.recip(), GaussianRational::one());
    }

    #[test]
    fn lowest_terms_is_maintained() {
        let a = GaussianRational::new(rat(2, 4), rat(-6, 8));
        assert_eq!(a.re, rat(1, 2));
        assert_eq!(a.im, rat(-3, 4));
    }

    #[test]
    fn serde_round_trips() {
        let a = g((22, 7), (-1, 3));
        let text = serde_json::to_string(&a).unwrap();
        assert_eq!(text, "[[22,7],[-1,3]]");
        let back: GaussianRational = serde_json::from_str(&text).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn serde_handles_big_integers() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let a = GaussianRational::new(Rational::from(big), Rational::zero());
        let text = serde_json::to_string(&a).unwrap();
        let back: GaussianRational = serde_json::from_str(&text).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn serde_rejects_zero_denominator() {
        let r: Result<GaussianRational, _> = serde_json::from_str("[[1,0],[0,1]]");
        assert!(r.is_err());
    }
}
