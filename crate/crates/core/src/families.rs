//! Polynomial families and number sequences, generated from their defining
//! exponential generating functions.
//!
//! Every λ-free family has the Appell form `A(t) e^{xt}`; the degenerate ones
//! have the form `A(t) e_λ^x(t)`. Both are produced by one routine: build the
//! prefactor series `A(t)`, then take a binomial convolution with the series
//! of the exponential factor.
//!
//! "Euler numbers" here are `E_n = E_n(0)`, which are rationals (1, -1/2, 0,
//! 1/4, ...), not the integer secant numbers.

use std::fmt;
use std::str::FromStr;
use std::sync::RwLock;


use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::combin::{inv_factorial, int};
use crate::exact::limits::check_degree;
use crate::exact::series::exp_minus_one_over_t;
use crate::exact::{Coeff, EgfSeries, LambdaMode, Rational, Ring, XPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    Bernoulli,
    Euler,
    Genocchi,
    OrderedBell,
    DegenerateOrderedBell,
    #[serde(rename = "falling-factorial", alias = "falling-factorial-lambda")]
    FallingFactorialLambda,
    Monomial,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 7] = [
        FamilyKind::Bernoulli,
        FamilyKind::Euler,
        FamilyKind::Genocchi,
        FamilyKind::OrderedBell,
        FamilyKind::DegenerateOrderedBell,
        FamilyKind::FallingFactorialLambda,
        FamilyKind::Monomial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Bernoulli => "bernoulli",
            FamilyKind::Euler => "euler",
            FamilyKind::Genocchi => "genocchi",
            FamilyKind::OrderedBell => "ordered-bell",
            FamilyKind::DegenerateOrderedBell => "degenerate-ordered-bell",
            FamilyKind::FallingFactorialLambda => "falling-factorial",
            FamilyKind::Monomial => "monomial",
        }
    }

    pub fn uses_lambda(self) -> bool {
        matches!(self, FamilyKind::DegenerateOrderedBell | FamilyKind::FallingFactorialLambda)
    }

    pub fn has_order(self) -> bool {
        matches!(self, FamilyKind::OrderedBell | FamilyKind::DegenerateOrderedBell)
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s || (s == "falling-factorial-lambda" && *k == FamilyKind::FallingFactorialLambda))
            .ok_or_else(|| Error::usage(format!("unknown family kind {s:?}")))
    }
}

/// A fully specified family: kind, order `r` and λ treatment.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilyId {
    pub kind: FamilyKind,
    pub order: usize,
    pub lambda: LambdaMode,
}

impl FamilyId {
    /// Validates the combination. Orders other than 1 are only meaningful for
    /// the ordered Bell kinds; λ must be present exactly for the degenerate
    /// kinds.
    pub fn new(kind: FamilyKind, order: usize, lambda: LambdaMode) -> Result<Self> {
        if kind.uses_lambda() != lambda.is_applicable() {
            return Err(Error::LambdaMode(format!(
                "family {kind} {} a lambda",
                if kind.uses_lambda() { "requires" } else { "does not take" }
            )));
        }
        let order = if kind.has_order() { order } else { 1 };
        Ok(FamilyId { kind, order, lambda })
    }

    pub fn bernoulli() -> Self {
        FamilyId { kind: FamilyKind::Bernoulli, order: 1, lambda: LambdaMode::NotApplicable }
    }

    pub fn euler() -> Self {
        FamilyId { kind: FamilyKind::Euler, order: 1, lambda: LambdaMode::NotApplicable }
    }

    pub fn genocchi() -> Self {
        FamilyId { kind: FamilyKind::Genocchi, order: 1, lambda: LambdaMode::NotApplicable }
    }

    pub fn monomial() -> Self {
        FamilyId { kind: FamilyKind::Monomial, order: 1, lambda: LambdaMode::NotApplicable }
    }

    pub fn ordered_bell(order: usize) -> Self {
        FamilyId { kind: FamilyKind::OrderedBell, order, lambda: LambdaMode::NotApplicable }
    }

    pub fn degenerate_ordered_bell(order: usize, lambda: LambdaMode) -> Result<Self> {
        FamilyId::new(FamilyKind::DegenerateOrderedBell, order, lambda)
    }

    pub fn falling_factorial(lambda: LambdaMode) -> Result<Self> {
        FamilyId::new(FamilyKind::FallingFactorialLambda, 1, lambda)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        if self.kind.has_order() {
            write!(f, "(r={})", self.order)?;
        }
        if self.lambda.is_applicable() {
            write!(f, "[λ={}]", self.lambda)?;
        }
        Ok(())
    }
}

/// The value of λ a mode carries in domain `C`, failing for λ-free modes.
pub fn lambda_value<C: Coeff>(mode: &LambdaMode) -> Result<C> {
    C::lambda_for(mode)?.ok_or_else(|| Error::LambdaMode("this operation needs a lambda".into()))
}

/// Prefactor `A(t)` of a λ-free Appell family, to the given order.
pub fn appell_prefactor(kind: FamilyKind, r: usize, order: usize) -> Result<EgfSeries<Rational>> {
    match kind {
        FamilyKind::Bernoulli => exp_minus_one_over_t(order)?.inv(),
        FamilyKind::Euler => {
            let half_sum = EgfSeries::from_fn(order, |n| if n == 0 { int(1) } else { Rational::new(1.into(), 2.into()) })?;
            half_sum.inv()
        }
        FamilyKind::Genocchi => {
            let euler = appell_prefactor(FamilyKind::Euler, 1, order)?;
            euler.mul(&EgfSeries::t(order)?)
        }
        FamilyKind::OrderedBell => ordered_bell_denominator::<Rational>(order, &int(0), false)?.pow(-(r as i64)),
        FamilyKind::Monomial => EgfSeries::one(order),
        FamilyKind::DegenerateOrderedBell | FamilyKind::FallingFactorialLambda => Err(Error::LambdaMode(
            format!("{kind} is not a lambda-free family"),
        )),
    }
}

/// `2 - e^t`, or `2 - e_λ(t)` when `degenerate` is set.
fn ordered_bell_denominator<C: Coeff>(order: usize, lambda: &C, degenerate: bool) -> Result<EgfSeries<C>> {
    EgfSeries::from_fn(order, |n| {
        if n == 0 {
            C::one()
        } else if degenerate {
            -falling_value(&C::one(), n, lambda)
        } else {
            -C::one()
        }
    })
}

/// `(a)_{n,λ} = a (a - λ) ... (a - (n-1)λ)`.
fn falling_value<C: Coeff>(a: &C, n: usize, lambda: &C) -> C {
    (0..n).fold(C::one(), |acc, i| acc * &(a.clone() - lambda.clone() * &C::from_int(i as i64)))
}

/// Multiplies a scalar prefactor series by the series whose n-th coefficient
/// is `factor[n]` (the exponential factor), giving the polynomial row.
fn convolve_rows<C: Coeff>(prefactor: &EgfSeries<C>, factor: Vec<XPoly<C>>) -> Result<Vec<XPoly<C>>> {
    let lifted = prefactor.map(|c| XPoly::constant(c.clone()));
    let factor = EgfSeries::new(factor)?;
    Ok(lifted.mul(&factor)?.coeffs().to_vec())
}

/// Row `p_0..=p_order` of a λ-free family.
pub fn appell_row(kind: FamilyKind, r: usize, order: usize) -> Result<Vec<XPoly<Rational>>> {
    check_degree(order)?;
    let prefactor = appell_prefactor(kind, r, order)?;
    let monomials = (0..=order).map(|n| XPoly::monomial(int(1), n)).collect();
    convolve_rows(&prefactor, monomials)
}

fn single<C: Coeff>(row: Result<Vec<XPoly<C>>>, n: usize) -> Result<XPoly<C>> {
    Ok(row?.swap_remove(n))
}

pub fn bernoulli_poly(n: usize) -> Result<XPoly<Rational>> {
    single(appell_row(FamilyKind::Bernoulli, 1, n), n)
}

pub fn euler_poly(n: usize) -> Result<XPoly<Rational>> {
    single(appell_row(FamilyKind::Euler, 1, n), n)
}

/// `G_0(x) = 0` and `deg G_n = n - 1` for `n ≥ 1`.
pub fn genocchi_poly(n: usize) -> Result<XPoly<Rational>> {
    single(appell_row(FamilyKind::Genocchi, 1, n), n)
}

/// Ordered Bell polynomial of order `r`; `r = 0` gives `x^n`.
pub fn ordered_bell_poly(n: usize, r: usize) -> Result<XPoly<Rational>> {
    single(appell_row(FamilyKind::OrderedBell, r, n), n)
}

/// `(x)_{n,λ} = x (x - λ) ... (x - (n-1)λ)`.
pub fn falling_factorial_lambda<C: Coeff>(n: usize, lambda: &C) -> Result<XPoly<C>> {
    check_degree(n)?;
    let x = XPoly::<C>::x();
    Ok((0..n).fold(XPoly::one(), |acc, i| {
        acc * &(x.clone() - XPoly::constant(lambda.clone() * &C::from_int(i as i64)))
    }))
}

/// Row of degenerate ordered Bell polynomials of order `r`,
/// from `(2 - e_λ(t))^{-r} e_λ^x(t)`.
pub fn degenerate_ordered_bell_row<C: Coeff>(order: usize, r: usize, lambda: &C) -> Result<Vec<XPoly<C>>> {
    check_degree(order)?;
    let prefactor = ordered_bell_denominator(order, lambda, true)?.pow(-(r as i64))?;
    let falling = (0..=order)
        .map(|n| falling_factorial_lambda(n, lambda))
        .collect::<Result<Vec<_>>>()?;
    convolve_rows(&prefactor, falling)
}

pub fn degenerate_ordered_bell_poly<C: Coeff>(n: usize, r: usize, lambda: &C) -> Result<XPoly<C>> {
    single(degenerate_ordered_bell_row(n, r, lambda), n)
}

/// Row `0..=order` of any family in domain `C`.
pub fn family_row<C: Coeff>(id: &FamilyId, order: usize) -> Result<Vec<XPoly<C>>> {
    match id.kind {
        FamilyKind::DegenerateOrderedBell => {
            degenerate_ordered_bell_row(order, id.order, &lambda_value::<C>(&id.lambda)?)
        }
        FamilyKind::FallingFactorialLambda => {
            let lambda = lambda_value::<C>(&id.lambda)?;
            (0..=order).map(|n| falling_factorial_lambda(n, &lambda)).collect()
        }
        kind => Ok(appell_row(kind, id.order, order)?
            .into_iter()
            .map(|p| p.map(|c| C::from_rational(c.clone())))
            .collect()),
    }
}

pub fn family_poly<C: Coeff>(id: &FamilyId, n: usize) -> Result<XPoly<C>> {
    single(family_row(id, n), n)
}

/// Values at x = 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumberTable<C> {
    pub family: FamilyId,
    pub values: Vec<C>,
}

pub fn number_table<C: Coeff>(id: &FamilyId, count: usize) -> Result<NumberTable<C>> {
    if count == 0 {
        return Ok(NumberTable { family: id.clone(), values: Vec::new() });
    }
    let row = family_row::<C>(id, count - 1)?;
    Ok(NumberTable { family: id.clone(), values: row.iter().map(|p| p.coeff(0)).collect() })
}

static STIRLING2: RwLock<Vec<Vec<Rational>>> = RwLock::new(Vec::new());

/// Builds `S₂(n,k)` for `n, k ≤ size` from `(e^t - 1)^k / k!`.
fn stirling2_table(size: usize) -> Result<Vec<Vec<Rational>>> {
    let base = EgfSeries::<Rational>::from_fn(size, |n| if n == 0 { int(0) } else { int(1) })?;
    let mut table = vec![vec![Rational::zero(); size + 1]; size + 1];
    let mut power = EgfSeries::<Rational>::one(size)?;
    for k in 0..=size {
        let column = power.scale(&inv_factorial(k));
        for (n, row) in table.iter_mut().enumerate() {
            row[k] = column.coeff(n)?.clone();
        }
        if k < size {
            power = power.mul(&base)?;
        }
    }
    Ok(table)
}

/// Stirling numbers of the second kind, from their exponential generating
/// function. Cached; cache hits return identical values.
pub fn stirling2(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    if let Some(v) = STIRLING2.read().expect("stirling cache").get(n).map(|row| row[k].clone()) {
        return v;
    }
    let size = n.max(16);
    let table = stirling2_table(size).expect("stirling table within guard");
    let value = table[n][k].clone();
    let mut cache = STIRLING2.write().expect("stirling cache");
    if cache.len() < table.len() {
        *cache = table;
    }
    value
}

/// `H_n = 1 + 1/2 + ... + 1/n`.
pub fn harmonic(n: usize) -> Result<Rational> {
    if n == 0 {
        return Err(Error::usage("harmonic numbers start at n = 1"));
    }
    Ok((1..=n).map(|k| Rational::new(1.into(), k.into())).sum())
}
