//! Umbral operators and functionals acting on polynomials: shifts, forward
//! differences, `(I - Δ)^r`, the differential-operator action of a series,
//! and the linear functional `⟨f(t) | p(x)⟩`.
//!
//! Where two equivalent forms exist (iterated vs. closed binomial sum) both
//! are implemented; the public entry points use the closed form and
//! cross-check against the iterated one in debug builds.

use crate::error::{Error, Result};
use crate::exact::combin::{binomial, int, inv_factorial, rat, rpow};
use crate::exact::{Coeff, EgfSeries, Rational, Ring, XPoly};

/// `p(x + a)`, by Horner's scheme in `x + a`.
pub fn shift<C: Coeff>(p: &XPoly<C>, a: &C) -> XPoly<C> {
    let step = XPoly::new(vec![a.clone(), C::one()]);
    p.coeffs()
        .iter()
        .rev()
        .fold(XPoly::zero(), |acc, c| acc * &step + XPoly::constant(c.clone()))
}

/// `Δ_a^n p` by n-fold application of `q ↦ q(x+a) - q(x)`.
pub fn forward_diff_iterated<C: Coeff>(p: &XPoly<C>, a: &C, n: usize) -> XPoly<C> {
    (0..n).fold(p.clone(), |q, _| shift(&q, a) - &q)
}

/// `Δ_a^n p = Σ_i C(n,i) (-1)^{n-i} p(x + i a)`.
pub fn forward_diff_binomial<C: Coeff>(p: &XPoly<C>, a: &C, n: usize) -> XPoly<C> {
    (0..=n).fold(XPoly::zero(), |acc, i| {
        let sign = if (n - i) % 2 == 0 { 1 } else { -1 };
        let weight = Rational::from_integer(binomial(n, i)) * int(sign);
        acc + shift(p, &(a.clone() * &C::from_int(i as i64))).scale(&weight)
    })
}

pub fn forward_diff<C: Coeff>(p: &XPoly<C>, a: &C, n: usize) -> XPoly<C> {
    let closed = forward_diff_binomial(p, a, n);
    debug_assert_eq!(closed, forward_diff_iterated(p, a, n));
    closed
}

/// `(1/λ^k) Δ_λ^k p`, i.e. `f(t)^k p` for `f(t) = (e^{λt} - 1)/λ`.
pub fn scaled_lambda_diff<C: Coeff>(p: &XPoly<C>, k: usize, lambda: &C) -> Result<XPoly<C>> {
    if k > 0 && lambda.is_zero() {
        return Err(Error::LambdaMode("lambda must be nonzero for lambda-differences".into()));
    }
    forward_diff(p, lambda, k).div_lambda_pow(lambda, k)
}

/// `(I - Δ)^r p` by r-fold application of `q ↦ 2q(x) - q(x+1)`.
pub fn identity_minus_delta_iterated<C: Coeff>(p: &XPoly<C>, r: usize) -> XPoly<C> {
    (0..r).fold(p.clone(), |q, _| q.scale(&int(2)) - shift(&q, &C::one()))
}

/// `(I - Δ)^r p = 2^r Σ_j C(r,j) (-1/2)^j p(x + j)`.
pub fn identity_minus_delta_closed<C: Coeff>(p: &XPoly<C>, r: usize) -> XPoly<C> {
    let half = rat(-1, 2);
    let sum = (0..=r).fold(XPoly::zero(), |acc, j| {
        let weight = Rational::from_integer(binomial(r, j)) * rpow(&half, j as i64);
        acc + shift(p, &C::from_int(j as i64)).scale(&weight)
    });
    sum.scale(&rpow(&int(2), r as i64))
}

pub fn identity_minus_delta_pow<C: Coeff>(p: &XPoly<C>, r: usize) -> XPoly<C> {
    let closed = identity_minus_delta_closed(p, r);
    debug_assert_eq!(closed, identity_minus_delta_iterated(p, r));
    closed
}

fn check_order<C: Coeff>(f: &EgfSeries<C>, p: &XPoly<C>) -> Result<()> {
    let degree = p.degree().unwrap_or(0);
    if f.order() < degree {
        return Err(Error::usage(format!(
            "series of order {} cannot act on a polynomial of degree {degree}",
            f.order()
        )));
    }
    Ok(())
}

/// The action of `f(t) = Σ a_k t^k / k!` as a differential operator:
/// `f(t) p = Σ_k (a_k / k!) p^{(k)}`.
pub fn apply_series<C: Coeff>(f: &EgfSeries<C>, p: &XPoly<C>) -> Result<XPoly<C>> {
    check_order(f, p)?;
    let mut out = XPoly::zero();
    let mut current = p.clone();
    for k in 0..=p.degree().unwrap_or(0) {
        let a = f.coeff(k)?;
        if !a.is_zero() {
            out = out + current.mul_scalar(a).scale(&inv_factorial(k));
        }
        current = current.derivative();
    }
    Ok(out)
}

/// `⟨f(t) | p(x)⟩ = f(t) p(x) |_{x=0}`.
pub fn functional<C: Coeff>(f: &EgfSeries<C>, p: &XPoly<C>) -> Result<C> {
    Ok(apply_series(f, p)?.coeff(0))
}

/// The `l`-th derivative.
pub fn derivative<C: Coeff>(p: &XPoly<C>, l: usize) -> XPoly<C> {
    (0..l).fold(p.clone(), |q, _| q.derivative())
}

/// `∫_a^b p(u) du`.
pub fn definite_integral<C: Coeff>(p: &XPoly<C>, a: &C, b: &C) -> C {
    let anti = p.antiderivative();
    anti.eval(b) - anti.eval(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::LambdaPoly;
    use crate::families::bernoulli_poly;

    type Q = Rational;

    fn q(values: &[i64]) -> XPoly<Q> {
        XPoly::new(values.iter().map(|&v| int(v)).collect())
    }

    fn lam() -> LambdaPoly {
        LambdaPoly::lambda()
    }

    /// (x + c)^3 expanded by hand in the symbolic domain.
    fn cube_shift(c: LambdaPoly) -> XPoly<LambdaPoly> {
        XPoly::new(vec![c.pow(3), c.pow(2).scale(&int(3)), c.scale(&int(3)), LambdaPoly::one()])
    }

    #[test]
    fn shift_examples() {
        assert_eq!(shift(&q(&[0, 0, 1]), &int(1)), q(&[1, 2, 1]));
        let p = q(&[4, -3, 0, 2]);
        assert_eq!(shift(&p, &int(0)), p);
        let b3 = bernoulli_poly(3).unwrap();
        assert_eq!(shift(&b3, &int(1)) - &b3, q(&[0, 0, 3]));
    }

    #[test]
    fn forward_difference_examples() {
        assert_eq!(forward_diff(&q(&[0, 0, 1]), &int(1), 1), q(&[1, 2]));
        let p = q(&[1, 5, 7]);
        assert_eq!(forward_diff(&p, &int(3), 0), p);

        // (x+2λ)^3 - 2(x+λ)^3 + x^3
        let cube = cube_shift(LambdaPoly::zero());
        let expected = cube_shift(lam().scale(&int(2))) - cube_shift(lam()).scale(&int(2)) + &cube;
        let got = forward_diff(&cube, &lam(), 2);
        assert_eq!(got, expected);
        let lam2 = lam().pow(2);
        assert_eq!(got, XPoly::new(vec![lam().scale(&int(6)), LambdaPoly::one().scale(&int(6))]).mul_scalar(&lam2));
        assert_eq!(
            got.div_lambda_pow(&lam(), 2).unwrap(),
            XPoly::new(vec![lam().scale(&int(6)), LambdaPoly::from_int(6)])
        );
    }

    #[test]
    fn lambda_division_examples() {
        let p = XPoly::new(vec![lam().pow(2), lam().scale(&int(2))]);
        assert_eq!(p.div_lambda_pow(&lam(), 1).unwrap(), XPoly::new(vec![lam(), LambdaPoly::from_int(2)]));
        assert_eq!(XPoly::<LambdaPoly>::zero().div_lambda_pow(&lam(), 4).unwrap(), XPoly::zero());
        let not_divisible = XPoly::new(vec![LambdaPoly::one(), lam()]);
        assert!(matches!(not_divisible.div_lambda_pow(&lam(), 1), Err(Error::Divisibility { .. })));
    }

    #[test]
    fn scaled_lambda_diff_examples() {
        let square = XPoly::<LambdaPoly>::monomial(LambdaPoly::one(), 2);
        assert_eq!(scaled_lambda_diff(&square, 0, &lam()).unwrap(), square);
        assert_eq!(
            scaled_lambda_diff(&square, 1, &lam()).unwrap(),
            XPoly::new(vec![lam(), LambdaPoly::from_int(2)])
        );
        let p = XPoly::<LambdaPoly>::from_rationals(&[int(3), int(-1), rat(1, 2), int(4), int(1)]);
        for k in 0..=4 {
            let at_zero = scaled_lambda_diff(&p, k, &lam()).unwrap().map(|c| c.eval(&int(0)));
            assert_eq!(at_zero, derivative(&p, k).map(|c| c.eval(&int(0))));
        }
    }

    #[test]
    fn specialized_lambda_must_be_nonzero() {
        let p = q(&[0, 1, 1]);
        assert!(scaled_lambda_diff(&p, 1, &int(0)).is_err());
        assert_eq!(scaled_lambda_diff(&p, 1, &rat(1, 3)).unwrap(), XPoly::new(vec![rat(4, 3), int(2)]));
    }

    #[test]
    fn identity_minus_delta_examples() {
        let p = q(&[2, 0, -1, 3]);
        assert_eq!(identity_minus_delta_pow(&p, 0), p);
        for n in 0..=10 {
            let b = crate::families::ordered_bell_poly(n, 1).unwrap();
            assert_eq!(identity_minus_delta_pow(&b, 1), XPoly::monomial(int(1), n));
        }
        for n in 0..=8 {
            let b = crate::families::ordered_bell_poly(n, 2).unwrap();
            assert_eq!(identity_minus_delta_pow(&b, 2), XPoly::monomial(int(1), n));
        }
    }

    #[test]
    fn series_action_examples() {
        let order = 6;
        // t^k on x^n
        for k in 0..=order {
            let tk = EgfSeries::<Q>::from_fn(order, |n| {
                if n == k { Rational::from_integer(crate::exact::combin::factorial(k)) } else { int(0) }
            })
            .unwrap();
            for n in 0..=order {
                let expected = if k <= n {
                    XPoly::monomial(Rational::from_integer(crate::exact::combin::falling(n, k)), n - k)
                } else {
                    XPoly::zero()
                };
                assert_eq!(apply_series(&tk, &XPoly::monomial(int(1), n)).unwrap(), expected);
                let pairing = functional(&tk, &XPoly::monomial(int(1), n)).unwrap();
                let delta = if n == k { Rational::from_integer(crate::exact::combin::factorial(n)) } else { int(0) };
                assert_eq!(pairing, delta);
            }
        }
        let p = q(&[1, -2, 0, 5, 1]);
        let y = rat(3, 2);
        let eyt = EgfSeries::exp_scaled(order, &y).unwrap();
        assert_eq!(apply_series(&eyt, &p).unwrap(), shift(&p, &y));
        assert_eq!(functional(&eyt, &p).unwrap(), p.eval(&y));

        // (e^t - 1)/t gives ∫_x^{x+1} p
        let avg = crate::exact::series::exp_minus_one_over_t::<Q>(order).unwrap();
        let anti = p.antiderivative();
        assert_eq!(apply_series(&avg, &p).unwrap(), shift(&anti, &int(1)) - &anti);

        // (e^{yt} - 1)/t gives ∫_0^y p
        let ey_minus_one_over_t = EgfSeries::<Q>::from_fn(order, |n| {
            rpow(&y, n as i64 + 1) * Rational::new(1.into(), (n + 1).into())
        })
        .unwrap();
        assert_eq!(functional(&ey_minus_one_over_t, &p).unwrap(), definite_integral(&p, &int(0), &y));
    }

    #[test]
    fn insufficient_order_is_usage_error() {
        let f = EgfSeries::<Q>::exp(2).unwrap();
        assert!(matches!(apply_series(&f, &q(&[0, 0, 0, 1])), Err(Error::Usage(_))));
    }

    #[test]
    fn calculus_examples() {
        assert_eq!(derivative(&q(&[0, 0, 0, 1]), 2), q(&[0, 6]));
        let p = q(&[1, 2, 3]);
        assert_eq!(derivative(&p, 0), p);
        let b2 = bernoulli_poly(2).unwrap();
        assert_eq!(definite_integral(&b2, &int(0), &int(1)), int(0));
    }
}
