//! Exact arithmetic over the Gaussian rationals ℚ(i).
//!
//! Every coefficient in the library — structure constants, matrix entries,
//! harmonic-representative coordinates — lives in ℚ(i) = { a + bi : a, b ∈ ℚ }.
//! Components are arbitrary-precision rationals kept in lowest terms with a
//! positive denominator, so equality is plain component-wise comparison and
//! no operation ever rounds.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// `num_rational::BigRational` already maintains the canonical form we need:
/// denominator > 0 and gcd(|numerator|, denominator) = 1, with zero as 0/1.
pub type Rational = num_rational::BigRational;

/// Errors arising from scalar arithmetic and parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    /// Multiplicative inversion of zero.
    #[error("division by zero in Q(i)")]
    DivisionByZero,
    /// A rational literal had a zero denominator.
    #[error("zero denominator in rational literal `{0}`")]
    ZeroDenominator(String),
    /// A rational or Gaussian-rational literal did not match the grammar.
    #[error("malformed scalar literal `{0}`")]
    Malformed(String),
}

/// Parse a rational literal: `a/b` or `a`, optionally signed.
///
/// Rejects zero denominators with a dedicated error instead of panicking.
pub fn parse_rational(text: &str) -> Result<Rational, ScalarError> {
    let trimmed = text.trim();
    let (num_text, den_text) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (trimmed, None),
    };
    let numerator =
        BigInt::from_str(num_text).map_err(|_| ScalarError::Malformed(text.to_owned()))?;
    let denominator = match den_text {
        Some(d) => BigInt::from_str(d).map_err(|_| ScalarError::Malformed(text.to_owned()))?,
        None => BigInt::one(),
    };
    if denominator.is_zero() {
        return Err(ScalarError::ZeroDenominator(text.to_owned()));
    }
    Ok(Rational::new(numerator, denominator))
}

/// An element of ℚ(i), stored as exact real and imaginary rational parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    /// The element a + 0i for an integer a.
    pub fn from_integer(a: i64) -> Self {
        GaussianRational::new(Rational::from_integer(BigInt::from(a)), Rational::zero())
    }

    /// The imaginary unit i.
    pub fn i() -> Self {
        GaussianRational::new(Rational::zero(), Rational::one())
    }

    /// Complex conjugate: re unchanged, im negated.
    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -self.im.clone())
    }

    /// |a|² = re² + im² as an exact rational; zero iff the element is zero.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Exact multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<Self, ScalarError> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(GaussianRational::new(&self.re / &n, -&self.im / &n))
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        GaussianRational::new(Rational::zero(), Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        GaussianRational::new(Rational::one(), Rational::zero())
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: Self) -> Self {
        GaussianRational::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: Self) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: Self) -> Self {
        GaussianRational::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: Self) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: Self) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> Self {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

/// Textual form `(re, im)`, e.g. `(-1, 0)`, `(0, 1)`, `(1/2, -3/4)`.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.re, self.im)
    }
}

impl FromStr for GaussianRational {
    type Err = ScalarError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let trimmed = text.trim();
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|rest| rest.strip_suffix(')'))
            .ok_or_else(|| ScalarError::Malformed(text.to_owned()))?;
        let (re_text, im_text) = inner
            .split_once(',')
            .ok_or_else(|| ScalarError::Malformed(text.to_owned()))?;
        Ok(GaussianRational::new(
            parse_rational(re_text)?,
            parse_rational(im_text)?,
        ))
    }
}
