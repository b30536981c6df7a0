//! Polynomials and numbers the identities are stated for.

use crate::error::{Error, Result};
use crate::exact::combin::{binomial, int};
use crate::exact::{Rational, Ring, XPoly};
use crate::families::{appell_row, FamilyKind};

/// All compositions of `total` into exactly `parts` parts, each at least
/// `min_part`, in lexicographic order.
pub fn compositions(total: usize, parts: usize, min_part: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(parts);
    fn walk(rest: usize, parts: usize, min_part: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if rest == 0 {
                out.push(current.clone());
            }
            return;
        }
        // Leave room for the remaining parts.
        let reserve = (parts - 1) * min_part;
        if rest < reserve + min_part {
            return;
        }
        for first in min_part..=rest - reserve {
            current.push(first);
            walk(rest - first, parts - 1, min_part, current, out);
            current.pop();
        }
    }
    walk(total, parts, min_part, &mut current, &mut out);
    out
}

/// Which polynomial an identity is stated for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Construction {
    /// `Σ_{k=1}^{n-1} P_k(x) P_{n-k}(x) / (k(n-k))`.
    WeightedPairs { family: FamilyKind, n: usize },
    /// `Σ_{i_1+...+i_s=n} Π P_{i_j}(x)` over parts `≥ min_part`.
    CompositionSum { family: FamilyKind, n: usize, s: usize, min_part: usize },
    /// `P_m(x) P_n(x)`.
    Product { family: FamilyKind, m: usize, n: usize },
}

/// λ-free family rows used by the identity checks, built once per check.
#[derive(Debug, Clone)]
pub struct Rows {
    rows: Vec<(FamilyKind, Vec<XPoly<Rational>>)>,
}

impl Rows {
    /// Rows `0..=order` of each requested family (ordered Bell is order 1).
    pub fn new(kinds: &[FamilyKind], order: usize) -> Result<Self> {
        let rows = kinds
            .iter()
            .map(|&kind| Ok((kind, appell_row(kind, 1, order)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Rows { rows })
    }

    pub fn poly(&self, kind: FamilyKind, n: usize) -> &XPoly<Rational> {
        let (_, row) = self
            .rows
            .iter()
            .find(|(k, _)| *k == kind)
            .unwrap_or_else(|| panic!("row for {kind} was not built"));
        &row[n]
    }

    /// The number `P_n = P_n(0)`.
    pub fn number(&self, kind: FamilyKind, n: usize) -> Rational {
        self.poly(kind, n).coeff(0)
    }

    /// `P_n(at)`.
    pub fn value(&self, kind: FamilyKind, n: usize, at: &Rational) -> Rational {
        self.poly(kind, n).eval(at)
    }
}

fn family_of(construction: &Construction) -> (FamilyKind, usize) {
    match *construction {
        Construction::WeightedPairs { family, n } => (family, n),
        Construction::CompositionSum { family, n, .. } => (family, n),
        Construction::Product { family, m, n } => (family, m.max(n)),
    }
}

/// Builds the polynomial exactly. An empty composition domain gives zero.
pub fn build_polynomial(construction: &Construction) -> Result<XPoly<Rational>> {
    let (family, order) = family_of(construction);
    if !matches!(family, FamilyKind::Bernoulli | FamilyKind::Euler | FamilyKind::Genocchi | FamilyKind::OrderedBell)
    {
        return Err(Error::usage(format!("identities are not built from {family}")));
    }
    let rows = Rows::new(&[family], order)?;
    Ok(build_with(&rows, construction))
}

pub(crate) fn build_with(rows: &Rows, construction: &Construction) -> XPoly<Rational> {
    match *construction {
        Construction::WeightedPairs { family, n } => (1..n).fold(XPoly::zero(), |acc, k| {
            let weight = Rational::new(1.into(), ((k * (n - k)) as i64).into());
            acc + (rows.poly(family, k).clone() * rows.poly(family, n - k)).scale(&weight)
        }),
        Construction::CompositionSum { family, n, s, min_part } => compositions(n, s, min_part)
            .iter()
            .fold(XPoly::zero(), |acc, parts| {
                acc + parts.iter().fold(XPoly::one(), |prod, &i| prod * rows.poly(family, i))
            }),
        Construction::Product { family, m, n } => rows.poly(family, m).clone() * rows.poly(family, n),
    }
}

/// `Σ_{i_1+...+i_a=l} Π b_{i_j}` over weak compositions, with ordered Bell
/// numbers `b_i`.
fn ordered_bell_composition_sum(bell: &[Rational], l: usize, parts: usize) -> Rational {
    compositions(l, parts, 0)
        .iter()
        .map(|c| c.iter().fold(int(1), |acc, &i| acc * &bell[i]))
        .fold(int(0), |acc, v| acc + v)
}

/// `Ω_l = Σ_{a=1}^{s} C(s,a) 2^a (-1)^{s-a} Σ_{i_1+...+i_a=l} Π b_{i_j}
///        - Σ_{i_1+...+i_s=l} Π b_{i_j}`.
pub fn omega(l: usize, s: usize) -> Result<Rational> {
    let rows = Rows::new(&[FamilyKind::OrderedBell], l)?;
    Ok(omega_with(&rows, l, s))
}

pub(crate) fn omega_with(rows: &Rows, l: usize, s: usize) -> Rational {
    let bell: Vec<Rational> = (0..=l).map(|i| rows.number(FamilyKind::OrderedBell, i)).collect();
    let mut total = int(0);
    for a in 1..=s {
        let sign = if (s - a) % 2 == 0 { int(1) } else { int(-1) };
        let weight = Rational::from_integer(binomial(s, a)) * int(1i64 << a) * sign;
        total += weight * ordered_bell_composition_sum(&bell, l, a);
    }
    total - ordered_bell_composition_sum(&bell, l, s)
}
