//! Coefficient formulas for expansions in (degenerate, higher-order) ordered
//! Bell bases.
//!
//! Throughout, `g(t) = 2 - e^t` and `f(t) = (e^{λt} - 1)/λ`; the degenerate
//! ordered Bell polynomials of order r form the Sheffer sequence for
//! `(g^r, f)`, so `a_k = (1/k!) ⟨f^k g^r | p⟩`. Each variant below evaluates
//! an equivalent closed form of that pairing.

use crate::error::Result;
use crate::exact::combin::{binomial, int, inv_factorial, rat, rpow};
use crate::exact::{Coeff, EgfSeries, Rational, Ring, XPoly};
use crate::families::stirling2;
use crate::operators::{apply_series, derivative, identity_minus_delta_iterated, shift};

use super::FormulaVariant;

fn degree<C: Coeff>(p: &XPoly<C>) -> usize {
    p.degree().unwrap_or(0)
}

fn binom(n: usize, k: usize) -> Rational {
    Rational::from_integer(binomial(n, k))
}

fn sign(exp: usize) -> Rational {
    int(if exp % 2 == 0 { 1 } else { -1 })
}

/// `2^r (-1/2)^j C(r,j)`: the weights of `(I - Δ)^r` as a sum of shifts.
fn shift_weight(r: usize, j: usize) -> Rational {
    rpow(&int(2), r as i64) * rpow(&rat(-1, 2), j as i64) * binom(r, j)
}

/// `2 - e^t` to the given order.
fn g_series<C: Coeff>(order: usize) -> Result<EgfSeries<C>> {
    EgfSeries::from_fn(order, |n| if n == 0 { C::one() } else { -C::one() })
}

/// `(e^{λt} - 1)/λ`, whose n!-scaled coefficients are `λ^{n-1}`.
pub(crate) fn f_series<C: Coeff>(order: usize, lambda: &C) -> Result<EgfSeries<C>> {
    EgfSeries::from_fn(order, |n| if n == 0 { C::zero() } else { lambda.pow(n - 1) })
}

/// `Δ^j q` evaluated at 0 and 1 is needed repeatedly; this returns
/// `[q, Δq, Δ²q, ...]` up to `count` entries.
fn difference_tower<C: Coeff>(q: &XPoly<C>, step: &C, count: usize) -> Vec<XPoly<C>> {
    let mut tower = Vec::with_capacity(count);
    let mut current = q.clone();
    for _ in 0..count {
        let next = shift(&current, step) - &current;
        tower.push(current);
        current = next;
    }
    tower
}

/// `2q(x) - q(x+1)`.
fn ordered_bell_lowering<C: Coeff>(q: &XPoly<C>) -> XPoly<C> {
    q.scale(&int(2)) - shift(q, &C::one())
}

/// Degenerate ordered Bell basis of order `r` (`r = 1` is the plain
/// degenerate ordered Bell basis).
pub(crate) fn degenerate<C: Coeff>(p: &XPoly<C>, r: usize, lambda: &C, variant: FormulaVariant) -> Result<Vec<C>> {
    if r == 1 {
        return degenerate_order_one(p, lambda, variant);
    }
    let n = degree(p);
    let ks = 0..=n;
    match variant {
        FormulaVariant::Functional => {
            let f = f_series(n, lambda)?;
            let base = g_series::<C>(n)?.pow(r as i64)?;
            let mut series = base;
            ks.map(|k| {
                let a = apply_series(&series, p)?.coeff(0).scale(&inv_factorial(k));
                series = series.mul(&f)?;
                Ok(a)
            })
            .collect()
        }
        FormulaVariant::IteratedDifference => {
            let tower = difference_tower(p, lambda, n + 1);
            ks.map(|k| {
                let q = identity_minus_delta_iterated(&tower[k], r);
                q.coeff(0).div_lambda_pow(lambda, k).map(|a| a.scale(&inv_factorial(k)))
            })
            .collect()
        }
        FormulaVariant::FactoredDifference => {
            // (I - Δ)^{r-1} Δ_λ^k (2p(x) - p(x+1)); for r = 0 the two factors
            // cancel and only Δ_λ^k p remains.
            let (start, outer) = if r == 0 { (p.clone(), 0) } else { (ordered_bell_lowering(p), r - 1) };
            let tower = difference_tower(&start, lambda, n + 1);
            ks.map(|k| {
                let q = identity_minus_delta_iterated(&tower[k], outer);
                q.coeff(0).div_lambda_pow(lambda, k).map(|a| a.scale(&inv_factorial(k)))
            })
            .collect()
        }
        FormulaVariant::BinomialSum => ks
            .map(|k| {
                let mut acc = C::zero();
                for l in 0..=k {
                    for j in 0..=r {
                        let point = C::from_int(j as i64) + lambda.clone() * &C::from_int(l as i64);
                        let weight = sign(k + j - l) * binom(k, l) * binom(r, j) * rpow(&rat(1, 2), j as i64);
                        acc = acc + p.eval(&point).scale(&weight);
                    }
                }
                let scaled = acc.scale(&(rpow(&int(2), r as i64) * inv_factorial(k)));
                scaled.div_lambda_pow(lambda, k)
            })
            .collect(),
        FormulaVariant::StirlingDerivative => {
            let shifted: Vec<C> = (0..=n)
                .map(|l| {
                    let dl = derivative(p, l);
                    (0..=r).fold(C::zero(), |acc, j| acc + dl.eval(&C::from_int(j as i64)).scale(&shift_weight(r, j)))
                })
                .collect();
            Ok(ks
                .map(|k| {
                    (k..=n).fold(C::zero(), |acc, l| {
                        let weight = stirling2(l, k) * inv_factorial(l);
                        acc + (lambda.pow(l - k) * &shifted[l]).scale(&weight)
                    })
                })
                .collect())
        }
    }
}

/// Order one, with `h = 2p(x) - p(x+1)`.
fn degenerate_order_one<C: Coeff>(p: &XPoly<C>, lambda: &C, variant: FormulaVariant) -> Result<Vec<C>> {
    let n = degree(p);
    let h = ordered_bell_lowering(p);
    let ks = 0..=n;
    match variant {
        FormulaVariant::Functional => {
            let f = f_series(n, lambda)?;
            let mut series = EgfSeries::one(n)?;
            ks.map(|k| {
                let a = apply_series(&series, &h)?.coeff(0).scale(&inv_factorial(k));
                series = series.mul(&f)?;
                Ok(a)
            })
            .collect()
        }
        FormulaVariant::FactoredDifference => {
            // (1 / (k! λ^k)) ⟨(e^{λt} - 1)^k | h⟩
            let e_minus_one = EgfSeries::exp_scaled(n, lambda)?.sub(&EgfSeries::one(n)?)?;
            let mut series = EgfSeries::one(n)?;
            ks.map(|k| {
                let pairing = apply_series(&series, &h)?.coeff(0);
                series = series.mul(&e_minus_one)?;
                pairing.div_lambda_pow(lambda, k).map(|a| a.scale(&inv_factorial(k)))
            })
            .collect()
        }
        FormulaVariant::IteratedDifference => {
            // (2 Δ_λ^k p(0) - Δ_λ^k p(1)) / (k! λ^k)
            let tower = difference_tower(p, lambda, n + 1);
            ks.map(|k| {
                let value = tower[k].coeff(0).scale(&int(2)) - tower[k].eval(&C::one());
                value.div_lambda_pow(lambda, k).map(|a| a.scale(&inv_factorial(k)))
            })
            .collect()
        }
        FormulaVariant::BinomialSum => ks.map(|k| binomial_sum_order_one(p, lambda, k, BinomialReading::Inner)).collect(),
        FormulaVariant::StirlingDerivative => {
            let lowered: Vec<C> = (0..=n)
                .map(|l| {
                    let dl = derivative(p, l);
                    dl.coeff(0).scale(&int(2)) - dl.eval(&C::one())
                })
                .collect();
            Ok(ks
                .map(|k| {
                    (k..=n).fold(C::zero(), |acc, l| {
                        let weight = stirling2(l, k) * inv_factorial(l);
                        acc + (lambda.pow(l - k) * &lowered[l]).scale(&weight)
                    })
                })
                .collect())
        }
    }
}

/// Which index the second evaluation point of the order-one binomial sum
/// uses: `p(1 + jλ)` (summation index) or `p(1 + kλ)` (outer index).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinomialReading {
    Inner,
    Outer,
}

/// `(1/(k! λ^k)) Σ_j C(k,j) (-1)^{k-j} (2p(jλ) - p(1 + mλ))` with `m = j`
/// or `m = k` according to `reading`.
pub fn binomial_sum_order_one<C: Coeff>(p: &XPoly<C>, lambda: &C, k: usize, reading: BinomialReading) -> Result<C> {
    let mut acc = C::zero();
    for j in 0..=k {
        let m = match reading {
            BinomialReading::Inner => j,
            BinomialReading::Outer => k,
        };
        let first = p.eval(&(lambda.clone() * &C::from_int(j as i64))).scale(&int(2));
        let second = p.eval(&(C::one() + lambda.clone() * &C::from_int(m as i64)));
        acc = acc + (first - second).scale(&(sign(k - j) * binom(k, j)));
    }
    acc.scale(&inv_factorial(k)).div_lambda_pow(lambda, k)
}

/// λ-free ordered Bell basis of order r (f(t) = t).
pub(crate) fn ordered_bell<C: Coeff>(p: &XPoly<C>, r: usize, variant: FormulaVariant) -> Result<Vec<C>> {
    let n = degree(p);
    let derivatives: Vec<XPoly<C>> = (0..=n).map(|k| derivative(p, k)).collect();
    let ks = 0..=n;
    match variant {
        FormulaVariant::Functional => {
            let t = EgfSeries::<C>::t(n)?;
            let mut series = g_series::<C>(n)?.pow(r as i64)?;
            ks.map(|k| {
                let a = apply_series(&series, p)?.coeff(0).scale(&inv_factorial(k));
                series = series.mul(&t)?;
                Ok(a)
            })
            .collect()
        }
        FormulaVariant::IteratedDifference => Ok(ks
            .map(|k| identity_minus_delta_iterated(&derivatives[k], r).coeff(0).scale(&inv_factorial(k)))
            .collect()),
        FormulaVariant::FactoredDifference => Ok(ks
            .map(|k| {
                let dk = &derivatives[k];
                let value = if r == 0 {
                    dk.coeff(0)
                } else {
                    // Σ_{j<r} C(r-1,j) (-1)^j (2Δ^j q(0) - Δ^j q(1))
                    let tower = difference_tower(dk, &C::one(), r);
                    (0..r).fold(C::zero(), |acc, j| {
                        let term = tower[j].coeff(0).scale(&int(2)) - tower[j].eval(&C::one());
                        acc + term.scale(&(binom(r - 1, j) * sign(j)))
                    })
                };
                value.scale(&inv_factorial(k))
            })
            .collect()),
        FormulaVariant::BinomialSum => Ok(ks
            .map(|k| {
                (0..=r)
                    .fold(C::zero(), |acc, j| {
                        acc + derivatives[k].eval(&C::from_int(j as i64)).scale(&shift_weight(r, j))
                    })
                    .scale(&inv_factorial(k))
            })
            .collect()),
        FormulaVariant::StirlingDerivative => Ok(ks
            .map(|k| {
                // Σ_j C(r,j) (-1)^j Δ^j p^{(k)}(0)
                let tower = difference_tower(&derivatives[k], &C::one(), r + 1);
                (0..=r)
                    .fold(C::zero(), |acc, j| acc + tower[j].coeff(0).scale(&(binom(r, j) * sign(j))))
                    .scale(&inv_factorial(k))
            })
            .collect()),
    }
}

/// `a_k = (1/k!) (2p^{(k)}(0) - p^{(k)}(1))`.
pub(crate) fn ordered_bell_order_one<C: Coeff>(p: &XPoly<C>) -> Vec<C> {
    (0..=degree(p))
        .map(|k| {
            let dk = derivative(p, k);
            (dk.coeff(0).scale(&int(2)) - dk.eval(&C::one())).scale(&inv_factorial(k))
        })
        .collect()
}

/// `a_0 = ∫_0^1 p`, `a_k = (p^{(k-1)}(1) - p^{(k-1)}(0)) / k!`.
pub(crate) fn bernoulli<C: Coeff>(p: &XPoly<C>) -> Vec<C> {
    let n = degree(p);
    let anti = p.antiderivative();
    let mut out = vec![anti.eval(&C::one()) - anti.coeff(0)];
    let mut current = p.clone();
    for k in 1..=n {
        out.push((current.eval(&C::one()) - current.coeff(0)).scale(&inv_factorial(k)));
        current = current.derivative();
    }
    out
}
