//! Exact scalar, polynomial and truncated-EGF arithmetic over ℚ and ℚ[λ].

pub mod combin;
pub mod domain;
pub mod lambda_poly;
pub mod limits;
pub mod series;
pub mod xpoly;

/// Arbitrary-precision fraction, always in lowest terms with positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub use domain::{Coeff, LambdaMode, Ring, Scalar};
pub use lambda_poly::LambdaPoly;
pub use series::EgfSeries;
pub use xpoly::XPoly;

/// Parses `"p/q"` or `"p"`; the result is canonical.
pub fn parse_rational(text: &str) -> crate::error::Result<Rational> {
    let text = text.trim();
    let parsed: Rational = text
        .parse()
        .map_err(|_| crate::error::Error::Parse(format!("not a rational: {text:?}")))?;
    Ok(parsed)
}
