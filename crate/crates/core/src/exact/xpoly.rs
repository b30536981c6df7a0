//! Dense univariate polynomials in x over a scalar domain.

use std::fmt;

use super::domain::{forward_ring_ops, Coeff, Ring};
use super::Rational;
use crate::error::Result;

/// `coeffs[j]` is the coefficient of x^j. Never has trailing zeros; the zero
/// polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct XPoly<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> XPoly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    pub fn x() -> Self {
        XPoly::monomial(C::one(), 1)
    }

    pub fn constant(value: C) -> Self {
        XPoly::new(vec![value])
    }

    /// `value * x^power`.
    pub fn monomial(value: C, power: usize) -> Self {
        let mut coeffs = vec![C::zero(); power + 1];
        coeffs[power] = value;
        XPoly::new(coeffs)
    }

    pub fn from_rationals(coeffs: &[Rational]) -> Self {
        XPoly::new(coeffs.iter().cloned().map(C::from_rational).collect())
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn coeff(&self, j: usize) -> C {
        self.coeffs.get(j).cloned().unwrap_or_else(C::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, at: &C) -> C {
        self.coeffs.iter().rev().fold(C::zero(), |acc, c| acc * at + c)
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> XPoly<D> {
        XPoly::new(self.coeffs.iter().map(f).collect())
    }

    /// Multiplication by a scalar of the coefficient domain.
    pub fn mul_scalar(&self, factor: &C) -> Self {
        XPoly::new(self.coeffs.iter().map(|c| c.clone() * factor).collect())
    }

    /// First derivative.
    pub fn derivative(&self) -> Self {
        XPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c.scale(&Rational::from_integer(j.into())))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(C::zero());
        for (j, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.scale(&Rational::new(1.into(), (j + 1).into())));
        }
        XPoly::new(coeffs)
    }

    /// Exact division of every coefficient by λ^k.
    pub fn div_lambda_pow(&self, lambda: &C, k: usize) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.div_lambda_pow(lambda, k))
            .collect::<Result<Vec<_>>>()?;
        Ok(XPoly::new(coeffs))
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::new((0..n).map(|j| self.coeff(j) + &rhs.coeff(j)).collect())
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::new((0..n).map(|j| self.coeff(j) - &rhs.coeff(j)).collect())
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return XPoly { coeffs: Vec::new() };
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let term = a.clone() * b;
                out[i + j] = std::mem::replace(&mut out[i + j], C::zero()) + &term;
            }
        }
        XPoly::new(out)
    }

    fn neg_ref(&self) -> Self {
        XPoly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl<C: Coeff> Default for XPoly<C> {
    fn default() -> Self {
        XPoly { coeffs: Vec::new() }
    }
}

forward_ring_ops!(impl [C: Coeff] XPoly<C>);

impl<C: Coeff> Ring for XPoly<C> {
    fn zero() -> Self {
        XPoly::default()
    }

    fn one() -> Self {
        XPoly::constant(C::one())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn scale(&self, factor: &Rational) -> Self {
        XPoly::new(self.coeffs.iter().map(|c| c.scale(factor)).collect())
    }

    fn try_inverse(&self) -> Option<Self> {
        match self.coeffs.len() {
            1 => self.coeffs[0].try_inverse().map(XPoly::constant),
            _ => None,
        }
    }
}

impl<C: Coeff> fmt::Display for XPoly<C> {
    /// Lowest degree first, e.g. `13 + 13x + 9/2*x^2` or `(3 - λ) + 2x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut text = c.to_string();
            let negative = text.starts_with('-') && !text[1..].contains([' ', '+']);
            if negative {
                text.remove(0);
            }
            if !first {
                f.write_str(if negative { " - " } else { " + " })?;
            } else if negative {
                f.write_str("-")?;
            }
            first = false;
            if text.contains(' ') {
                text = format!("({text})");
            }
            match j {
                0 => f.write_str(&text)?,
                _ => {
                    if text != "1" {
                        f.write_str(&text)?;
                        if text.contains('/') && !text.starts_with('(') {
                            f.write_str("*")?;
                        }
                    }
                    f.write_str("x")?;
                    if j > 1 {
                        write!(f, "^{j}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
