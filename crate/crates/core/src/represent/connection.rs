//! Connection constants between Sheffer sequences, computed from series
//! reversion and functional evaluation alone. This path never touches the
//! coefficient formulas in `formulas.rs` and serves as their oracle.
//!
//! For `s_n ~ (g, f)` and `r_n ~ (h, l)`:
//! `s_n = Σ_k C_{n,k} r_k` with
//! `C_{n,k} = (1/k!) ⟨ h(f̄(t)) / g(f̄(t)) · l(f̄(t))^k | x^n ⟩`.

use crate::error::{Error, Result};
use crate::exact::combin::{int, inv_factorial, rat};
use crate::exact::series::exp_minus_one_over_t;
use crate::exact::{Coeff, EgfSeries};
use crate::families::{lambda_value, FamilyId, FamilyKind};

use super::formulas::f_series;

/// The Sheffer pair `(g, f)` of a family, to the given order.
pub fn sheffer_pair<C: Coeff>(id: &FamilyId, order: usize) -> Result<(EgfSeries<C>, EgfSeries<C>)> {
    let ordinary_delta = || EgfSeries::<C>::t(order);
    let ordered_bell_g = |r: usize| -> Result<EgfSeries<C>> {
        EgfSeries::from_fn(order, |n| if n == 0 { C::one() } else { -C::one() })?.pow(r as i64)
    };
    match id.kind {
        FamilyKind::Monomial => Ok((EgfSeries::one(order)?, ordinary_delta()?)),
        FamilyKind::Bernoulli => Ok((exp_minus_one_over_t(order)?, ordinary_delta()?)),
        FamilyKind::Euler => {
            let g = EgfSeries::from_fn(order, |n| {
                C::from_rational(if n == 0 { int(1) } else { rat(1, 2) })
            })?;
            Ok((g, ordinary_delta()?))
        }
        FamilyKind::OrderedBell => Ok((ordered_bell_g(id.order)?, ordinary_delta()?)),
        FamilyKind::FallingFactorialLambda => {
            let lambda = lambda_value::<C>(&id.lambda)?;
            Ok((EgfSeries::one(order)?, f_series(order, &lambda)?))
        }
        FamilyKind::DegenerateOrderedBell => {
            let lambda = lambda_value::<C>(&id.lambda)?;
            Ok((ordered_bell_g(id.order)?, f_series(order, &lambda)?))
        }
        FamilyKind::Genocchi => Err(Error::usage(
            "Genocchi polynomials are not a Sheffer sequence (deg G_n = n - 1)",
        )),
    }
}

/// Lower-triangular `(n+1) × (n+1)` matrix with `source_m = Σ_k C[m][k] target_k`.
pub fn connection_constants<C: Coeff>(source: &FamilyId, target: &FamilyId, n: usize) -> Result<Vec<Vec<C>>> {
    let (g, f) = sheffer_pair::<C>(source, n)?;
    let (h, l) = sheffer_pair::<C>(target, n)?;
    let f_bar = f.revert()?;
    let ratio = h.compose(&f_bar)?.mul(&g.compose(&f_bar)?.inv()?)?;
    let l_of_f_bar = l.compose(&f_bar)?;

    let mut matrix = vec![vec![C::zero(); n + 1]; n + 1];
    let mut series = ratio;
    for k in 0..=n {
        let column = series.scale(&inv_factorial(k));
        for (m, row) in matrix.iter_mut().enumerate().skip(k) {
            row[k] = column.coeff(m)?.clone();
        }
        if k < n {
            series = series.mul(&l_of_f_bar)?;
        }
    }
    Ok(matrix)
}
