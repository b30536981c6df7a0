//! Polynomials in the indeterminate λ with rational coefficients.

use std::fmt;

use num_traits::Signed;

use super::domain::{forward_ring_ops, Coeff, LambdaMode, Ring, Scalar};
use super::Rational;
use crate::error::{Error, Result};

/// `coeffs[i]` is the coefficient of λ^i. Never has trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LambdaPoly {
    coeffs: Vec<Rational>,
}

impl LambdaPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        LambdaPoly { coeffs }
    }

    /// The indeterminate λ itself.
    pub fn lambda() -> Self {
        LambdaPoly { coeffs: vec![Rational::zero(), Rational::one()] }
    }

    pub fn constant(value: Rational) -> Self {
        LambdaPoly::new(vec![value])
    }

    /// `value · λ^power`.
    pub fn monomial_term(value: Rational, power: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = value;
        LambdaPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// The value when λ does not occur, `None` otherwise.
    pub fn constant_value(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Specializes λ to a rational value (λ = 0 included).
    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * at + c)
    }

    /// Exact division by λ^k: shifts coefficients down when the low `k`
    /// coefficients vanish.
    pub fn div_lambda(&self, k: usize) -> Result<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return Err(Error::Divisibility { value: self.to_string(), power: k });
        }
        Ok(LambdaPoly { coeffs: self.coeffs.iter().skip(k).cloned().collect() })
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        LambdaPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        LambdaPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return LambdaPoly::default();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        LambdaPoly::new(out)
    }

    fn neg_ref(&self) -> Self {
        LambdaPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

forward_ring_ops!(impl [] LambdaPoly);

impl Ring for LambdaPoly {
    fn zero() -> Self {
        LambdaPoly::default()
    }

    fn one() -> Self {
        LambdaPoly::constant(Rational::one())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return LambdaPoly::default();
        }
        LambdaPoly { coeffs: self.coeffs.iter().map(|c| c * factor).collect() }
    }

    fn try_inverse(&self) -> Option<Self> {
        match self.constant_value() {
            Some(c) if !c.is_zero() => Some(LambdaPoly::constant(c.recip())),
            _ => None,
        }
    }
}

impl Coeff for LambdaPoly {
    fn from_rational(value: Rational) -> Self {
        LambdaPoly::constant(value)
    }

    fn lambda_for(mode: &LambdaMode) -> Result<Option<Self>> {
        match mode {
            LambdaMode::Symbolic => Ok(Some(LambdaPoly::lambda())),
            LambdaMode::Specialized(_) => Err(Error::LambdaMode(
                "specialized lambda requested in the symbolic domain".into(),
            )),
            LambdaMode::NotApplicable => Ok(None),
        }
    }

    fn div_lambda_pow(&self, lambda: &Self, k: usize) -> Result<Self> {
        debug_assert_eq!(lambda, &LambdaPoly::lambda());
        self.div_lambda(k)
    }

    fn to_scalar(&self) -> Scalar {
        Scalar::Lambda(self.clone())
    }

    fn from_scalar(value: &Scalar) -> Result<Self> {
        Ok(match value {
            Scalar::Rational(r) => LambdaPoly::constant(r.clone()),
            Scalar::Lambda(p) => p.clone(),
        })
    }

    fn describe_mode(lambda: Option<&Self>) -> LambdaMode {
        match lambda {
            Some(_) => LambdaMode::Symbolic,
            None => LambdaMode::NotApplicable,
        }
    }
}

impl fmt::Display for LambdaPoly {
    /// Lowest degree first: `3 - λ`, `1/2 + 2*λ^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match i {
                0 => write!(f, "{magnitude}")?,
                _ => {
                    if magnitude != Rational::one() {
                        write!(f, "{magnitude}*")?;
                    }
                    f.write_str("λ")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::combin::{int, rat};

    #[test]
    fn canonical_form_drops_trailing_zeros() {
        let p = LambdaPoly::new(vec![int(1), int(0), int(0)]);
        assert_eq!(p.coeffs().len(), 1);
        assert!(LambdaPoly::new(vec![int(0)]).is_zero());
    }

    #[test]
    fn division_by_lambda_power() {
        let lam = LambdaPoly::lambda();
        let p = LambdaPoly::new(vec![int(0), int(0), int(6), int(6)]);
        assert_eq!(p.div_lambda(2).unwrap(), LambdaPoly::new(vec![int(6), int(6)]));
        assert!(p.div_lambda(3).is_err());
        assert_eq!(LambdaPoly::zero().div_lambda(5).unwrap(), LambdaPoly::zero());
        assert_eq!((p.clone() * &lam).div_lambda(1).unwrap(), p);
    }

    #[test]
    fn rendering() {
        let p = LambdaPoly::new(vec![int(3), int(-1)]);
        assert_eq!(p.to_string(), "3 - λ");
        let q = LambdaPoly::new(vec![rat(1, 2), int(0), int(2)]);
        assert_eq!(q.to_string(), "1/2 + 2*λ^2");
        assert_eq!(LambdaPoly::new(vec![int(0), int(-1)]).to_string(), "-λ");
    }

    #[test]
    fn specialization() {
        let p = LambdaPoly::new(vec![int(3), int(-1)]);
        assert_eq!(p.eval(&int(0)), int(3));
        assert_eq!(p.eval(&rat(1, 3)), rat(8, 3));
    }
}
