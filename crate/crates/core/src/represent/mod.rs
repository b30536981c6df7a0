//! Expansion of polynomials in target bases and reconstruction from
//! coefficient vectors.
//!
//! The λ-free bases (ordered Bell of order r, Bernoulli, monomials) use their
//! own formulas and are not obtained as a λ → 0 limit at runtime; the
//! degenerate bases take λ either symbolic (`LambdaPoly` coefficients) or
//! specialized to a nonzero rational.

pub mod connection;
pub mod formulas;
pub mod json;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact::{Coeff, LambdaMode, LambdaPoly, Rational, Ring, XPoly};
use crate::families::{family_row, lambda_value, FamilyId, FamilyKind};

pub use connection::connection_constants;
pub use formulas::{binomial_sum_order_one, BinomialReading};

/// Which closed form of the expansion coefficients to evaluate. All variants
/// agree on every input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum FormulaVariant {
    /// `(1/k!) ⟨f(t)^k g(t)^r | p⟩` through the series action.
    Functional,
    /// `(1/(k! λ^k)) (I - Δ)^r Δ_λ^k p |_{x=0}`.
    IteratedDifference,
    /// `(I - Δ)^{r-1}` applied after the first `2p(x) - p(x+1)` step.
    FactoredDifference,
    /// Finite double sum of point evaluations `p(j + lλ)`.
    BinomialSum,
    /// Sum over derivatives weighted by Stirling numbers of the second kind.
    #[default]
    StirlingDerivative,
}

impl FormulaVariant {
    pub const ALL: [FormulaVariant; 5] = [
        FormulaVariant::Functional,
        FormulaVariant::IteratedDifference,
        FormulaVariant::FactoredDifference,
        FormulaVariant::BinomialSum,
        FormulaVariant::StirlingDerivative,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FormulaVariant::Functional => "functional",
            FormulaVariant::IteratedDifference => "iterated-difference",
            FormulaVariant::FactoredDifference => "factored-difference",
            FormulaVariant::BinomialSum => "binomial-sum",
            FormulaVariant::StirlingDerivative => "stirling-derivative",
        }
    }
}

impl fmt::Display for FormulaVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormulaVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FormulaVariant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::usage(format!("unknown formula variant {s:?}")))
    }
}

/// A target basis together with the coefficients `a_0..=a_n` of a polynomial
/// of degree n in that basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation<C> {
    pub basis: FamilyId,
    pub coeffs: Vec<C>,
}

impl<C: Coeff> Representation<C> {
    /// Coefficient vectors evaluated at λ = value, as used for degeneration
    /// checks.
    pub fn map<D: Coeff>(&self, basis: FamilyId, f: impl Fn(&C) -> D) -> Representation<D> {
        Representation { basis, coeffs: self.coeffs.iter().map(f).collect() }
    }
}

/// `p = Σ a_k B_k(x)` with `a_0 = ∫_0^1 p` and
/// `a_k = (p^{(k-1)}(1) - p^{(k-1)}(0)) / k!`.
pub fn represent_bernoulli<C: Coeff>(p: &XPoly<C>) -> Representation<C> {
    Representation { basis: FamilyId::bernoulli(), coeffs: formulas::bernoulli(p) }
}

/// `p = Σ a_k b_k(x)` with `a_k = (2p^{(k)}(0) - p^{(k)}(1)) / k!`.
pub fn represent_ordered_bell<C: Coeff>(p: &XPoly<C>) -> Representation<C> {
    Representation { basis: FamilyId::ordered_bell(1), coeffs: formulas::ordered_bell_order_one(p) }
}

/// `p = Σ a_k b_{k,λ}(x)`. A λ-free mode is rejected: that case is
/// [`represent_ordered_bell`].
pub fn represent_degenerate_ordered_bell<C: Coeff>(
    p: &XPoly<C>,
    mode: &LambdaMode,
    variant: FormulaVariant,
) -> Result<Representation<C>> {
    if !mode.is_applicable() {
        return Err(Error::LambdaMode(
            "degenerate expansion needs a nonzero or symbolic lambda; use represent_ordered_bell for lambda = 0"
                .into(),
        ));
    }
    represent_higher_order(p, 1, mode, variant)
}

/// `p = Σ a_k b^{(r)}_{k,λ}(x)`, or `Σ a_k b^{(r)}_k(x)` when `mode` is
/// [`LambdaMode::NotApplicable`].
pub fn represent_higher_order<C: Coeff>(
    p: &XPoly<C>,
    r: usize,
    mode: &LambdaMode,
    variant: FormulaVariant,
) -> Result<Representation<C>> {
    match C::lambda_for(mode)? {
        None => Ok(Representation { basis: FamilyId::ordered_bell(r), coeffs: formulas::ordered_bell(p, r, variant)? }),
        Some(lambda) => Ok(Representation {
            basis: FamilyId::degenerate_ordered_bell(r, mode.clone())?,
            coeffs: formulas::degenerate(p, r, &lambda, variant)?,
        }),
    }
}

/// Expands `p` in any supported target basis.
pub fn represent<C: Coeff>(p: &XPoly<C>, target: &FamilyId, variant: FormulaVariant) -> Result<Representation<C>> {
    let mut rep = match target.kind {
        FamilyKind::Bernoulli => represent_bernoulli(p),
        FamilyKind::Monomial => represent_higher_order(p, 0, &LambdaMode::NotApplicable, variant)?,
        FamilyKind::OrderedBell => represent_higher_order(p, target.order, &LambdaMode::NotApplicable, variant)?,
        FamilyKind::DegenerateOrderedBell => represent_higher_order(p, target.order, &target.lambda, variant)?,
        FamilyKind::FallingFactorialLambda => {
            lambda_value::<C>(&target.lambda)?;
            represent_higher_order(p, 0, &target.lambda, variant)?
        }
        FamilyKind::Euler | FamilyKind::Genocchi => {
            return Err(Error::usage(format!("{} is not offered as a target basis", target.kind)))
        }
    };
    rep.basis = target.clone();
    Ok(rep)
}

/// A representation over whichever coefficient domain the target needs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyRepresentation {
    Rational(Representation<Rational>),
    Symbolic(Representation<LambdaPoly>),
}

impl AnyRepresentation {
    pub fn to_json(&self) -> json::RepresentationJson {
        match self {
            AnyRepresentation::Rational(rep) => json::representation_to_json(rep),
            AnyRepresentation::Symbolic(rep) => json::representation_to_json(rep),
        }
    }

    pub fn basis(&self) -> &FamilyId {
        match self {
            AnyRepresentation::Rational(rep) => &rep.basis,
            AnyRepresentation::Symbolic(rep) => &rep.basis,
        }
    }

    /// Coefficients rendered as text, λ-polynomials in `c0 + c1*λ` form.
    pub fn coeff_strings(&self) -> Vec<String> {
        match self {
            AnyRepresentation::Rational(rep) => rep.coeffs.iter().map(ToString::to_string).collect(),
            AnyRepresentation::Symbolic(rep) => rep.coeffs.iter().map(ToString::to_string).collect(),
        }
    }
}

/// Moves an input polynomial into the coefficient domain of `target` and
/// expands it there. A λ-dependent input cannot be expanded in a λ-free or
/// specialized basis.
pub fn represent_any(p: &json::AnyPoly, target: &FamilyId, variant: FormulaVariant) -> Result<AnyRepresentation> {
    if let json::AnyPoly::Rational { lambda: LambdaMode::Specialized(v), .. } = p {
        if target.lambda != LambdaMode::Specialized(v.clone()) && target.lambda.is_applicable() {
            return Err(Error::usage(format!("input is specialized at lambda = {v} but the target basis uses lambda = {}", target.lambda)));
        }
    }
    match (&target.lambda, p) {
        (LambdaMode::Symbolic, json::AnyPoly::Symbolic(q)) => Ok(AnyRepresentation::Symbolic(represent(q, target, variant)?)),
        (LambdaMode::Symbolic, json::AnyPoly::Rational { poly, .. }) => {
            let lifted = poly.map(|c| LambdaPoly::constant(c.clone()));
            Ok(AnyRepresentation::Symbolic(represent(&lifted, target, variant)?))
        }
        (_, json::AnyPoly::Symbolic(q)) => {
            let lowered = q
                .coeffs()
                .iter()
                .map(|c| {
                    c.constant_value().ok_or_else(|| {
                        Error::usage(format!("input depends on a symbolic lambda; the {} basis needs a lambda-free input", target))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(AnyRepresentation::Rational(represent(&XPoly::new(lowered), target, variant)?))
        }
        (_, json::AnyPoly::Rational { poly, .. }) => Ok(AnyRepresentation::Rational(represent(poly, target, variant)?)),
    }
}

/// `Σ a_k basis_k(x)`.
pub fn reconstruct<C: Coeff>(rep: &Representation<C>) -> Result<XPoly<C>> {
    if rep.coeffs.is_empty() {
        return Ok(XPoly::zero());
    }
    let row = family_row::<C>(&rep.basis, rep.coeffs.len() - 1)?;
    Ok(rep
        .coeffs
        .iter()
        .zip(&row)
        .filter(|(a, _)| !a.is_zero())
        .fold(XPoly::zero(), |acc, (a, basis)| acc + basis.mul_scalar(a)))
}

#[cfg(test)]
mod tests;
