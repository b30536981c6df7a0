//! Truncated exponential generating functions `Σ c_n t^n / n!`.
//!
//! Coefficients are stored n!-scaled, so products are binomial convolutions.
//! Every operation keeps the truncation order of its inputs and is exact on
//! the retained terms.

use num_bigint::BigInt;


use super::combin::{binomial, factorial, inv_factorial};
use super::domain::Ring;
use super::limits::check_degree;
use super::Rational;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EgfSeries<T> {
    coeffs: Vec<T>,
}

fn binomial_row(n: usize) -> Vec<Rational> {
    (0..=n).map(|k| Rational::from_integer(binomial(n, k))).collect()
}

impl<T: Ring> EgfSeries<T> {
    /// Builds a series from `c_0..=c_N`; the order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<T>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::usage("a series needs at least the constant coefficient"));
        }
        check_degree(coeffs.len() - 1)?;
        Ok(EgfSeries { coeffs })
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> T) -> Result<Self> {
        check_degree(order)?;
        Ok(EgfSeries { coeffs: (0..=order).map(f).collect() })
    }

    /// The unit series `1`.
    pub fn one(order: usize) -> Result<Self> {
        Self::from_fn(order, |n| if n == 0 { T::one() } else { T::zero() })
    }

    /// The series `t` (coefficient of t/1! is 1).
    pub fn t(order: usize) -> Result<Self> {
        Self::from_fn(order, |n| if n == 1 { T::one() } else { T::zero() })
    }

    /// `e^{a t}`, whose n!-scaled coefficients are `a^n`.
    pub fn exp_scaled(order: usize, a: &T) -> Result<Self> {
        let mut power = T::one();
        Self::from_fn(order, |_| {
            let c = power.clone();
            power = power.clone() * a;
            c
        })
    }

    pub fn exp(order: usize) -> Result<Self> {
        Self::from_fn(order, |_| T::one())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// The n!-scaled coefficient of t^n. Asking beyond the truncation order
    /// is an error, never a silent zero.
    pub fn coeff(&self, n: usize) -> Result<&T> {
        self.coeffs
            .get(n)
            .ok_or(Error::BeyondOrder { index: n, order: self.order() })
    }

    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::BeyondOrder { index: order, order: self.order() });
        }
        Ok(EgfSeries { coeffs: self.coeffs[..=order].to_vec() })
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> EgfSeries<U> {
        EgfSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    fn check_same_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: other.order() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_order(other)?;
        Ok(EgfSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_order(other)?;
        Ok(EgfSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() - b).collect(),
        })
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        self.map(|c| c.scale(factor))
    }

    /// Binomial convolution `c_n = Σ C(n,k) a_k b_{n-k}`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_order(other)?;
        let coeffs = (0..=self.order())
            .map(|n| {
                let row = binomial_row(n);
                (0..=n).fold(T::zero(), |acc, k| {
                    let (a, b) = (&self.coeffs[k], &other.coeffs[n - k]);
                    if a.is_zero() || b.is_zero() {
                        acc
                    } else {
                        acc + (a.clone() * b).scale(&row[k])
                    }
                })
            })
            .collect();
        Ok(EgfSeries { coeffs })
    }

    /// Multiplicative inverse; requires an invertible constant term.
    pub fn inv(&self) -> Result<Self> {
        let c0_inv = self.coeffs[0]
            .try_inverse()
            .ok_or_else(|| Error::SingularSeries(self.coeffs[0].to_string()))?;
        let mut out: Vec<T> = Vec::with_capacity(self.coeffs.len());
        out.push(c0_inv.clone());
        for n in 1..=self.order() {
            let row = binomial_row(n);
            let acc = (1..=n).fold(T::zero(), |acc, k| {
                acc + (self.coeffs[k].clone() * &out[n - k]).scale(&row[k])
            });
            out.push(-(acc * &c0_inv));
        }
        Ok(EgfSeries { coeffs: out })
    }

    /// Integer power; negative exponents go through `inv`.
    pub fn pow(&self, exp: i64) -> Result<Self> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one(self.order())?;
        let mut square = base;
        let mut e = exp.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&square)?;
            }
            e >>= 1;
            if e > 0 {
                square = square.mul(&square)?;
            }
        }
        Ok(acc)
    }

    /// `self(f(t))` for a delta series `f`.
    pub fn compose(&self, f: &Self) -> Result<Self> {
        self.check_same_order(f)?;
        if !f.coeffs[0].is_zero() {
            return Err(Error::NotDelta(f.coeffs[0].to_string()));
        }
        let order = self.order();
        let mut out = Self::from_fn(order, |_| T::zero())?;
        let mut power = Self::one(order)?;
        for k in 0..=order {
            if !self.coeffs[k].is_zero() {
                let term = power.scale(&inv_factorial(k)).map(|c| c.clone() * &self.coeffs[k]);
                out = out.add(&term)?;
            }
            if k < order {
                power = power.mul(f)?;
            }
        }
        Ok(out)
    }

    /// Compositional inverse by Lagrange inversion:
    /// `[t^n] f̄ = (1/n) [t^{n-1}] (t / f(t))^n` on ordinary coefficients.
    pub fn revert(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NotDelta(self.coeffs[0].to_string()));
        }
        let order = self.order();
        let mut out = vec![T::zero(); order + 1];
        if order == 0 {
            return Ok(EgfSeries { coeffs: out });
        }
        // Ordinary coefficients of f(t)/t, padded to length `order`.
        let quotient: Vec<T> = (1..=order)
            .map(|n| self.coeffs[n].scale(&inv_factorial(n)))
            .collect();
        if quotient[0].try_inverse().is_none() {
            return Err(Error::NonInvertibleDelta(self.coeffs[1].to_string()));
        }
        let phi = ordinary_inverse(&quotient)?;
        let mut power = phi.clone();
        for n in 1..=order {
            // [t^{n-1}] phi^n, then back to the n!-scaled convention.
            let scale = Rational::from_integer(factorial(n)) / Rational::from_integer(BigInt::from(n));
            out[n] = power[n - 1].scale(&scale);
            if n < order {
                power = ordinary_mul(&power, &phi);
            }
        }
        Ok(EgfSeries { coeffs: out })
    }
}

fn ordinary_mul<T: Ring>(a: &[T], b: &[T]) -> Vec<T> {
    (0..a.len())
        .map(|n| (0..=n).fold(T::zero(), |acc, k| acc + a[k].clone() * &b[n - k]))
        .collect()
}

fn ordinary_inverse<T: Ring>(a: &[T]) -> Result<Vec<T>> {
    let c0_inv = a[0]
        .try_inverse()
        .ok_or_else(|| Error::SingularSeries(a[0].to_string()))?;
    let mut out: Vec<T> = vec![c0_inv.clone()];
    for n in 1..a.len() {
        let acc = (1..=n).fold(T::zero(), |acc, k| acc + a[k].clone() * &out[n - k]);
        out.push(-(acc * &c0_inv));
    }
    Ok(out)
}

/// The n!-scaled coefficients of `(e^t - 1)/t`, i.e. `1/(n+1)`.
pub fn exp_minus_one_over_t<T: Ring>(order: usize) -> Result<EgfSeries<T>> {
    EgfSeries::from_fn(order, |n| T::one().scale(&Rational::new(BigInt::from(1), BigInt::from(n + 1))))
}
