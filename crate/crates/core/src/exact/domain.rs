//! Coefficient domains: the ring contract shared by every exact type, and the
//! two scalar domains (`Rational` for λ-free or specialized-λ work,
//! `LambdaPoly` when λ stays symbolic).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};


use super::combin::int;
use super::lambda_poly::LambdaPoly;
use super::Rational;
use crate::error::{Error, Result};

/// A commutative ring containing ℚ.
pub trait Ring:
    Clone
    + Eq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplication by a rational constant.
    fn scale(&self, factor: &Rational) -> Self;
    /// Multiplicative inverse, when one exists in this ring.
    fn try_inverse(&self) -> Option<Self>;

    fn from_int(value: i64) -> Self {
        Self::one().scale(&int(value))
    }

    fn pow(&self, exp: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc * self;
        }
        acc
    }
}

/// How λ is treated in a computation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LambdaMode {
    /// λ is an indeterminate; coefficients live in ℚ[λ].
    Symbolic,
    /// λ is a fixed nonzero rational.
    Specialized(Rational),
    /// The family or basis does not involve λ.
    NotApplicable,
}

impl LambdaMode {
    pub fn specialized(value: Rational) -> Result<Self> {
        if Ring::is_zero(&value) {
            return Err(Error::LambdaMode(
                "lambda = 0 is the non-degenerate case; use the ordered Bell basis instead".into(),
            ));
        }
        Ok(LambdaMode::Specialized(value))
    }

    pub fn is_applicable(&self) -> bool {
        !matches!(self, LambdaMode::NotApplicable)
    }
}

impl fmt::Display for LambdaMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LambdaMode::Symbolic => f.write_str("sym"),
            LambdaMode::Specialized(v) => write!(f, "{v}"),
            LambdaMode::NotApplicable => f.write_str("n/a"),
        }
    }
}

/// A scalar domain: the coefficient ring of `XPoly`.
pub trait Coeff: Ring {
    fn from_rational(value: Rational) -> Self;

    /// The value of λ in this domain for the given mode. `Ok(None)` means the
    /// mode carries no λ.
    fn lambda_for(mode: &LambdaMode) -> Result<Option<Self>>;

    /// Exact quotient by `lambda^k`.
    fn div_lambda_pow(&self, lambda: &Self, k: usize) -> Result<Self>;

    fn to_scalar(&self) -> Scalar;

    fn from_scalar(value: &Scalar) -> Result<Self>;

    /// The mode a value of this domain was computed in, given the λ used.
    fn describe_mode(lambda: Option<&Self>) -> LambdaMode;
}

impl Ring for Rational {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }

    fn one() -> Self {
        num_traits::One::one()
    }

    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }

    fn scale(&self, factor: &Rational) -> Self {
        self * factor
    }

    fn try_inverse(&self) -> Option<Self> {
        if num_traits::Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Coeff for Rational {
    fn from_rational(value: Rational) -> Self {
        value
    }

    fn lambda_for(mode: &LambdaMode) -> Result<Option<Self>> {
        match mode {
            LambdaMode::Symbolic => Err(Error::LambdaMode(
                "symbolic lambda requested in the rational domain".into(),
            )),
            LambdaMode::Specialized(v) if num_traits::Zero::is_zero(v) => Err(Error::LambdaMode(
                "lambda = 0 is the non-degenerate case; use the ordered Bell basis instead".into(),
            )),
            LambdaMode::Specialized(v) => Ok(Some(v.clone())),
            LambdaMode::NotApplicable => Ok(None),
        }
    }

    fn div_lambda_pow(&self, lambda: &Self, k: usize) -> Result<Self> {
        if k == 0 {
            return Ok(self.clone());
        }
        if num_traits::Zero::is_zero(lambda) {
            return Err(Error::Divisibility { value: self.to_string(), power: k });
        }
        Ok(self / Ring::pow(lambda, k))
    }

    fn to_scalar(&self) -> Scalar {
        Scalar::Rational(self.clone())
    }

    fn from_scalar(value: &Scalar) -> Result<Self> {
        match value {
            Scalar::Rational(r) => Ok(r.clone()),
            Scalar::Lambda(p) => p.constant_value().ok_or_else(|| {
                Error::LambdaMode(format!("coefficient {p} depends on lambda"))
            }),
        }
    }

    fn describe_mode(lambda: Option<&Self>) -> LambdaMode {
        match lambda {
            Some(v) => LambdaMode::Specialized(v.clone()),
            None => LambdaMode::NotApplicable,
        }
    }
}

/// A coefficient tagged with its domain, used at serialization boundaries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Rational(Rational),
    Lambda(LambdaPoly),
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Lambda(p) => write!(f, "{p}"),
        }
    }
}

/// Implements the owned/borrowed operator matrix on top of by-reference
/// `add_ref`, `sub_ref`, `mul_ref` and `neg_ref` inherent methods.
macro_rules! forward_ring_ops {
    (impl [$($gen:tt)*] $ty:ty) => {
        impl<$($gen)*> ::std::ops::Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty { self.add_ref(&rhs) }
        }
        impl<'a, $($gen)*> ::std::ops::Add<&'a $ty> for $ty {
            type Output = $ty;
            fn add(self, rhs: &'a $ty) -> $ty { self.add_ref(rhs) }
        }
        impl<'a, 'b, $($gen)*> ::std::ops::Add<&'b $ty> for &'a $ty {
            type Output = $ty;
            fn add(self, rhs: &'b $ty) -> $ty { self.add_ref(rhs) }
        }
        impl<$($gen)*> ::std::ops::Sub for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty { self.sub_ref(&rhs) }
        }
        impl<'a, $($gen)*> ::std::ops::Sub<&'a $ty> for $ty {
            type Output = $ty;
            fn sub(self, rhs: &'a $ty) -> $ty { self.sub_ref(rhs) }
        }
        impl<'a, 'b, $($gen)*> ::std::ops::Sub<&'b $ty> for &'a $ty {
            type Output = $ty;
            fn sub(self, rhs: &'b $ty) -> $ty { self.sub_ref(rhs) }
        }
        impl<$($gen)*> ::std::ops::Mul for $ty {
            type Output = $ty;
            fn mul(self, rhs: $ty) -> $ty { self.mul_ref(&rhs) }
        }
        impl<'a, $($gen)*> ::std::ops::Mul<&'a $ty> for $ty {
            type Output = $ty;
            fn mul(self, rhs: &'a $ty) -> $ty { self.mul_ref(rhs) }
        }
        impl<'a, 'b, $($gen)*> ::std::ops::Mul<&'b $ty> for &'a $ty {
            type Output = $ty;
            fn mul(self, rhs: &'b $ty) -> $ty { self.mul_ref(rhs) }
        }
        impl<$($gen)*> ::std::ops::Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty { self.neg_ref() }
        }
        impl<'a, $($gen)*> ::std::ops::Neg for &'a $ty {
            type Output = $ty;
            fn neg(self) -> $ty { self.neg_ref() }
        }
    };
}

pub(crate) use forward_ring_ops;
