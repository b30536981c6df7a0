//! JSON documents for polynomials and representations.
//!
//! Polynomial: `{"var":"x","lambda":"sym"|"p/q"|null,"coeffs":[Scalar,...]}`
//! where a Scalar is `"p/q"` or `{"lambda_coeffs":["p/q",...]}`.
//! Representation: the same plus `"basis":{"kind":...,"order":r}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{parse_rational, Coeff, LambdaMode, LambdaPoly, Rational, Scalar, XPoly};
use crate::families::{FamilyId, FamilyKind};

use super::Representation;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarJson {
    Rational(String),
    Lambda { lambda_coeffs: Vec<String> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    #[serde(default = "default_var")]
    pub var: String,
    #[serde(default)]
    pub lambda: Option<String>,
    pub coeffs: Vec<ScalarJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisJson {
    pub kind: FamilyKind,
    #[serde(default = "default_order")]
    pub order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationJson {
    #[serde(default = "default_var")]
    pub var: String,
    #[serde(default)]
    pub lambda: Option<String>,
    pub basis: BasisJson,
    pub coeffs: Vec<ScalarJson>,
}

fn default_var() -> String {
    "x".to_string()
}

fn default_order() -> usize {
    1
}

/// A polynomial read from JSON, in whichever domain its λ field selects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyPoly {
    /// λ-free (`lambda: null`) or specialized (`lambda: "p/q"`).
    Rational { lambda: LambdaMode, poly: XPoly<Rational> },
    /// `lambda: "sym"`.
    Symbolic(XPoly<LambdaPoly>),
}

impl AnyPoly {
    pub fn lambda_mode(&self) -> LambdaMode {
        match self {
            AnyPoly::Rational { lambda, .. } => lambda.clone(),
            AnyPoly::Symbolic(_) => LambdaMode::Symbolic,
        }
    }
}

/// λ-free values, including constant λ-polynomials, render as `"p/q"`.
pub fn scalar_to_json(value: &Scalar) -> ScalarJson {
    match value {
        Scalar::Rational(r) => ScalarJson::Rational(r.to_string()),
        Scalar::Lambda(p) if p.degree().unwrap_or(0) == 0 => ScalarJson::Rational(p.coeff(0).to_string()),
        Scalar::Lambda(p) => ScalarJson::Lambda {
            lambda_coeffs: p.coeffs().iter().map(ToString::to_string).collect(),
        },
    }
}

pub fn scalar_from_json(value: &ScalarJson) -> Result<Scalar> {
    Ok(match value {
        ScalarJson::Rational(text) => Scalar::Rational(parse_rational(text)?),
        ScalarJson::Lambda { lambda_coeffs } => Scalar::Lambda(LambdaPoly::new(
            lambda_coeffs.iter().map(|t| parse_rational(t)).collect::<Result<_>>()?,
        )),
    })
}

impl fmt::Display for AnyPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyPoly::Rational { poly, .. } => poly.fmt(f),
            AnyPoly::Symbolic(poly) => poly.fmt(f),
        }
    }
}

pub fn lambda_to_json(mode: &LambdaMode) -> Option<String> {
    match mode {
        LambdaMode::Symbolic => Some("sym".into()),
        LambdaMode::Specialized(v) => Some(v.to_string()),
        LambdaMode::NotApplicable => None,
    }
}

pub fn lambda_from_json(field: Option<&str>) -> Result<LambdaMode> {
    match field {
        None => Ok(LambdaMode::NotApplicable),
        Some("sym") => Ok(LambdaMode::Symbolic),
        Some(text) => LambdaMode::specialized(parse_rational(text)?),
    }
}

fn coeffs_to_json<C: Coeff>(coeffs: &[C]) -> Vec<ScalarJson> {
    coeffs.iter().map(|c| scalar_to_json(&c.to_scalar())).collect()
}

fn coeffs_from_json<C: Coeff>(coeffs: &[ScalarJson]) -> Result<Vec<C>> {
    coeffs.iter().map(|c| C::from_scalar(&scalar_from_json(c)?)).collect()
}

pub fn poly_to_json<C: Coeff>(poly: &XPoly<C>, lambda: &LambdaMode) -> PolyJson {
    PolyJson { var: default_var(), lambda: lambda_to_json(lambda), coeffs: coeffs_to_json(poly.coeffs()) }
}

pub fn poly_to_json_any(poly: &AnyPoly) -> PolyJson {
    match poly {
        AnyPoly::Rational { lambda, poly } => poly_to_json(poly, lambda),
        AnyPoly::Symbolic(poly) => poly_to_json(poly, &LambdaMode::Symbolic),
    }
}

pub fn poly_from_json(doc: &PolyJson) -> Result<AnyPoly> {
    if doc.var != "x" {
        return Err(Error::Parse(format!("unsupported variable {:?}", doc.var)));
    }
    let mode = lambda_from_json(doc.lambda.as_deref())?;
    Ok(match mode {
        LambdaMode::Symbolic => AnyPoly::Symbolic(XPoly::new(coeffs_from_json(&doc.coeffs)?)),
        lambda => {
            // A specialized λ may still be given symbolic coefficients; they
            // are evaluated at that λ.
            let coeffs = doc
                .coeffs
                .iter()
                .map(|c| match (scalar_from_json(c)?, &lambda) {
                    (Scalar::Lambda(p), LambdaMode::Specialized(v)) => Ok(p.eval(v)),
                    (other, _) => Rational::from_scalar(&other),
                })
                .collect::<Result<Vec<_>>>()?;
            AnyPoly::Rational { lambda, poly: XPoly::new(coeffs) }
        }
    })
}

pub fn parse_poly(text: &str) -> Result<AnyPoly> {
    let doc: PolyJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    poly_from_json(&doc)
}

pub fn representation_to_json<C: Coeff>(rep: &Representation<C>) -> RepresentationJson {
    RepresentationJson {
        var: default_var(),
        lambda: lambda_to_json(&rep.basis.lambda),
        basis: BasisJson { kind: rep.basis.kind, order: rep.basis.order },
        coeffs: coeffs_to_json(&rep.coeffs),
    }
}

pub fn representation_from_json<C: Coeff>(doc: &RepresentationJson) -> Result<Representation<C>> {
    let lambda = lambda_from_json(doc.lambda.as_deref())?;
    let basis = FamilyId::new(doc.basis.kind, doc.basis.order, lambda)?;
    Ok(Representation { basis, coeffs: coeffs_from_json(&doc.coeffs)? })
}
