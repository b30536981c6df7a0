use super::*;
use crate::exact::combin::{int, rat};
use crate::exact::{LambdaPoly, Rational};
use crate::families::{
    bernoulli_poly, degenerate_ordered_bell_poly, euler_poly, family_poly, ordered_bell_poly, stirling2,
};
use crate::operators::{functional, shift};
use crate::represent::formulas::f_series;
use crate::exact::EgfSeries;

fn q(coeffs: &[i64]) -> XPoly<Rational> {
    XPoly::new(coeffs.iter().map(|&c| int(c)).collect())
}

fn sym() -> LambdaMode {
    LambdaMode::Symbolic
}

fn lam(num: i64, den: i64) -> LambdaMode {
    LambdaMode::specialized(rat(num, den)).unwrap()
}

fn sample_polys() -> Vec<XPoly<Rational>> {
    vec![
        q(&[1]),
        q(&[0, 1]),
        q(&[0, 0, 1]),
        q(&[3, -1, 0, 2]),
        XPoly::new(vec![rat(1, 2), rat(-2, 3), int(0), rat(5, 7), int(1)]),
        q(&[-4, 0, 2, 1, 0, -3]),
    ]
}

fn lift(p: &XPoly<Rational>) -> XPoly<LambdaPoly> {
    p.map(|c| LambdaPoly::constant(c.clone()))
}

#[test]
fn known_small_expansions() {
    assert_eq!(represent_bernoulli(&q(&[0, 0, 1])).coeffs, vec![rat(1, 3), int(1), int(1)]);
    assert_eq!(represent_ordered_bell(&q(&[0, 0, 1])).coeffs, vec![int(-1), int(-2), int(1)]);
    // 2 = b_0 + b_1 - b_0 - ... is checked through reconstruction below; the
    // constant polynomial 1 is b_0 exactly.
    assert_eq!(represent_ordered_bell(&q(&[1])).coeffs, vec![int(1)]);
}

#[test]
fn every_variant_reconstructs_the_input() {
    for p in sample_polys() {
        for r in 0..=3 {
            for variant in FormulaVariant::ALL {
                let plain = represent_higher_order(&p, r, &LambdaMode::NotApplicable, variant).unwrap();
                assert_eq!(reconstruct(&plain).unwrap(), p, "r={r} {variant} lambda-free");
                let special = represent_higher_order(&p, r, &lam(-2, 3), variant).unwrap();
                assert_eq!(reconstruct(&special).unwrap(), p, "r={r} {variant} lambda=-2/3");
                let lifted = lift(&p);
                let symbolic = represent_higher_order(&lifted, r, &sym(), variant).unwrap();
                assert_eq!(reconstruct(&symbolic).unwrap(), lifted, "r={r} {variant} symbolic");
            }
        }
    }
}

#[test]
fn variants_agree_coefficientwise() {
    for p in sample_polys() {
        let lifted = lift(&p);
        for r in 0..=3 {
            let reference = represent_higher_order(&lifted, r, &sym(), FormulaVariant::Functional).unwrap();
            for variant in FormulaVariant::ALL {
                let other = represent_higher_order(&lifted, r, &sym(), variant).unwrap();
                assert_eq!(other.coeffs, reference.coeffs, "r={r} {variant}");
            }
        }
    }
}

#[test]
fn matches_connection_constants_from_the_monomial_basis() {
    let n = 5;
    for r in 0..=3 {
        let target = FamilyId::degenerate_ordered_bell(r, sym()).unwrap();
        let table = connection_constants::<LambdaPoly>(&FamilyId::monomial(), &target, n).unwrap();
        for m in 0..=n {
            let xm = XPoly::monomial(LambdaPoly::one(), m);
            let rep = represent(&xm, &target, FormulaVariant::StirlingDerivative).unwrap();
            for (k, a) in rep.coeffs.iter().enumerate() {
                assert_eq!(a, &table[m][k], "r={r} m={m} k={k}");
            }
        }
        let plain = FamilyId::ordered_bell(r);
        let table = connection_constants::<Rational>(&FamilyId::monomial(), &plain, n).unwrap();
        for m in 0..=n {
            let rep = represent(&XPoly::monomial(int(1), m), &plain, FormulaVariant::BinomialSum).unwrap();
            assert_eq!(rep.coeffs, table[m][..=m].to_vec(), "r={r} m={m}");
        }
    }
}

#[test]
fn bernoulli_target_matches_connection_constants() {
    let n = 6;
    let table = connection_constants::<Rational>(&FamilyId::monomial(), &FamilyId::bernoulli(), n).unwrap();
    for m in 0..=n {
        let rep = represent_bernoulli(&XPoly::monomial(int(1), m));
        assert_eq!(rep.coeffs, table[m][..=m].to_vec(), "m={m}");
    }
}

#[test]
fn basis_elements_expand_to_unit_vectors() {
    for r in 0..=3 {
        for n in 0..=5 {
            let b = degenerate_ordered_bell_poly::<LambdaPoly>(n, r, &LambdaPoly::lambda()).unwrap();
            let rep = represent_higher_order(&b, r, &sym(), FormulaVariant::default()).unwrap();
            let mut unit = vec![LambdaPoly::zero(); n + 1];
            unit[n] = LambdaPoly::one();
            assert_eq!(rep.coeffs, unit);

            let b = ordered_bell_poly(n, r).unwrap();
            let rep = represent_higher_order(&b, r, &LambdaMode::NotApplicable, FormulaVariant::default()).unwrap();
            let mut unit = vec![int(0); n + 1];
            unit[n] = int(1);
            assert_eq!(rep.coeffs, unit);
        }
    }
}

#[test]
fn duality_of_the_pairing() {
    // ⟨g^r f^k | b^{(r)}_{n,λ}⟩ = n! δ_{nk}.
    let lambda = LambdaPoly::lambda();
    let n_max = 5;
    for r in 0..=2 {
        let g: EgfSeries<LambdaPoly> =
            EgfSeries::from_fn(n_max, |n| if n == 0 { LambdaPoly::one() } else { -LambdaPoly::one() }).unwrap();
        let gr = g.pow(r as i64).unwrap();
        let f = f_series(n_max, &lambda).unwrap();
        for n in 0..=n_max {
            let b = degenerate_ordered_bell_poly(n, r, &lambda).unwrap();
            for k in 0..=n_max {
                let pairing = functional(&gr.mul(&f.pow(k as i64).unwrap()).unwrap(), &b).unwrap();
                let expected = if n == k {
                    LambdaPoly::constant(Rational::from_integer(crate::exact::combin::factorial(n)))
                } else {
                    LambdaPoly::zero()
                };
                assert_eq!(pairing, expected, "r={r} n={n} k={k}");
            }
        }
    }
}

#[test]
fn degenerate_falling_factorial_basis_uses_stirling_numbers() {
    // b_n(x) in the degenerate ordered Bell basis has a_k = S2(n,k) λ^{n-k}.
    for n in 0..=6 {
        let b = lift(&ordered_bell_poly(n, 1).unwrap());
        let rep = represent_degenerate_ordered_bell(&b, &sym(), FormulaVariant::Functional).unwrap();
        for (k, a) in rep.coeffs.iter().enumerate() {
            let expected = LambdaPoly::monomial_term(stirling2(n, k), n - k);
            assert_eq!(a, &expected, "n={n} k={k}");
        }
    }
}

#[test]
fn euler_polynomial_expansion_closed_form() {
    // a_k = Σ_{l=k}^n C(n,l) λ^{l-k} S2(l,k) (3E_{n-l} - 2δ_{n,l}) with E_m = E_m(0).
    let lambda = rat(3, 5);
    for n in 0..=6 {
        let p = euler_poly(n).unwrap();
        let rep = represent_degenerate_ordered_bell(&p, &lam(3, 5), FormulaVariant::BinomialSum).unwrap();
        for k in 0..=n {
            let mut expected = int(0);
            for l in k..=n {
                let e = euler_poly(n - l).unwrap().coeff(0);
                let delta = if l == n { int(2) } else { int(0) };
                expected += Rational::from_integer(crate::exact::combin::binomial(n, l))
                    * crate::exact::combin::rpow(&lambda, (l - k) as i64)
                    * stirling2(l, k)
                    * (int(3) * e - delta);
            }
            assert_eq!(rep.coeffs[k], expected, "n={n} k={k}");
        }
    }
}

#[test]
fn specializing_the_symbolic_expansion_agrees() {
    for p in sample_polys() {
        let symbolic = represent_higher_order(&lift(&p), 2, &sym(), FormulaVariant::default()).unwrap();
        for value in [rat(1, 2), rat(-3, 1), rat(7, 4)] {
            let special =
                represent_higher_order(&p, 2, &LambdaMode::Specialized(value.clone()), FormulaVariant::default())
                    .unwrap();
            let evaluated: Vec<Rational> = symbolic.coeffs.iter().map(|c| c.eval(&value)).collect();
            assert_eq!(special.coeffs, evaluated);
        }
    }
}

#[test]
fn lambda_zero_limit_is_the_plain_ordered_bell_expansion() {
    for p in sample_polys() {
        for r in 0..=3 {
            let symbolic = represent_higher_order(&lift(&p), r, &sym(), FormulaVariant::default()).unwrap();
            let plain = represent_higher_order(&p, r, &LambdaMode::NotApplicable, FormulaVariant::default()).unwrap();
            let limit: Vec<Rational> = symbolic.coeffs.iter().map(|c| c.eval(&int(0))).collect();
            assert_eq!(limit, plain.coeffs, "r={r}");
        }
    }
}

#[test]
fn order_recursion_and_lowering() {
    let lambda = LambdaPoly::lambda();
    for r in 1..=3 {
        for n in 0..=5 {
            let b = degenerate_ordered_bell_poly(n, r, &lambda).unwrap();
            let lowered = b.scale(&int(2)) - shift(&b, &LambdaPoly::one());
            assert_eq!(lowered, degenerate_ordered_bell_poly(n, r - 1, &lambda).unwrap(), "r={r} n={n}");
            if n > 0 {
                // Δ_λ b_n = n λ b_{n-1}
                let diff = shift(&b, &lambda) - &b;
                let below = degenerate_ordered_bell_poly(n - 1, r, &lambda).unwrap();
                assert_eq!(diff, below.mul_scalar(&(lambda.clone() * LambdaPoly::from_int(n as i64))));
            }
        }
    }
}

#[test]
fn binomial_sum_reading_of_the_second_point() {
    // The summation-index reading reproduces the expansion; the outer-index
    // reading does not.
    let lambda = rat(2, 5);
    let mode = lam(2, 5);
    let mut outer_differs = false;
    for p in sample_polys() {
        let rep = represent_degenerate_ordered_bell(&p, &mode, FormulaVariant::Functional).unwrap();
        for (k, a) in rep.coeffs.iter().enumerate() {
            let inner = binomial_sum_order_one(&p, &lambda, k, BinomialReading::Inner).unwrap();
            assert_eq!(&inner, a);
            let outer = binomial_sum_order_one(&p, &lambda, k, BinomialReading::Outer).unwrap();
            outer_differs |= &outer != a;
        }
    }
    assert!(outer_differs);
}

#[test]
fn falling_factorial_and_monomial_targets() {
    let p = q(&[3, -1, 0, 2]);
    let target = FamilyId::falling_factorial(lam(1, 2)).unwrap();
    let rep = represent(&p, &target, FormulaVariant::default()).unwrap();
    assert_eq!(rep.basis, target);
    assert_eq!(reconstruct(&rep).unwrap(), p);
    let rep = represent(&p, &FamilyId::monomial(), FormulaVariant::default()).unwrap();
    assert_eq!(rep.coeffs, p.coeffs().to_vec());
    assert!(represent(&p, &FamilyId::euler(), FormulaVariant::default()).unwrap_err().is_usage());
}

#[test]
fn bernoulli_reconstructs_and_matches_family() {
    for n in 0..=8 {
        let b = bernoulli_poly(n).unwrap();
        let rep = represent_bernoulli(&b);
        assert_eq!(rep.coeffs.last(), Some(&int(1)));
        assert!(rep.coeffs[..n].iter().all(|c| c == &int(0)));
        assert_eq!(family_poly::<Rational>(&FamilyId::bernoulli(), n).unwrap(), b);
    }
    for p in sample_polys() {
        assert_eq!(reconstruct(&represent_bernoulli(&p)).unwrap(), p);
    }
}

#[test]
fn lambda_mode_errors() {
    let p = q(&[0, 1]);
    let err = represent_degenerate_ordered_bell(&p, &LambdaMode::NotApplicable, FormulaVariant::default());
    assert!(matches!(err, Err(Error::LambdaMode(_))));
    assert!(represent_degenerate_ordered_bell(&p, &sym(), FormulaVariant::default()).is_err());
    assert!(represent_degenerate_ordered_bell(&lift(&p), &lam(1, 2), FormulaVariant::default()).is_err());
}

#[test]
fn domain_dispatch_for_documents() {
    use super::json::parse_poly;
    let symbolic = parse_poly(r#"{"lambda":"sym","coeffs":[{"lambda_coeffs":["0","1"]},"1"]}"#).unwrap();
    let err = represent_any(&symbolic, &FamilyId::bernoulli(), FormulaVariant::default()).unwrap_err();
    assert!(err.is_usage());
    let target = FamilyId::degenerate_ordered_bell(1, sym()).unwrap();
    let rep = represent_any(&symbolic, &target, FormulaVariant::default()).unwrap();
    assert!(matches!(rep, AnyRepresentation::Symbolic(_)));

    let plain = parse_poly(r#"{"lambda":null,"coeffs":["0","0","1"]}"#).unwrap();
    let rep = represent_any(&plain, &target, FormulaVariant::default()).unwrap();
    assert_eq!(rep.coeff_strings(), vec!["-1", "-2 + λ", "1"]);
    let rep = represent_any(&plain, &FamilyId::bernoulli(), FormulaVariant::default()).unwrap();
    assert_eq!(rep.coeff_strings(), vec!["1/3", "1", "1"]);

    let special = parse_poly(r#"{"lambda":"1/2","coeffs":["1"]}"#).unwrap();
    let other = FamilyId::degenerate_ordered_bell(1, lam(1, 3)).unwrap();
    assert!(represent_any(&special, &other, FormulaVariant::default()).unwrap_err().is_usage());
}
