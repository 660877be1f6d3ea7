mod common;

use std::collections::HashSet;

use adomian::adomian::{adomian, generating_series_check, monomial_count, EvaluationContext};
use adomian::diophantine::{count, enumerate, enumerate_full};
use adomian::oracle::{DerivativeOracle, Exp, Polynomial, Sine};
use adomian::reduced::{closed_form, factorial, instantiate, reduced_polynomial};
use adomian::series::TruncatedSeries;
use adomian::Rational;
use common::{partitions_exact, partitions_total};
use num::{BigInt, One};
use proptest::prelude::*;

fn mk() -> impl Strategy<Value = (usize, usize)> {
    (1usize..=20).prop_flat_map(|m| (Just(m), 1..=m))
}

fn rat() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn solutions_satisfy_both_equations((m, k) in mk()) {
        let sols = enumerate(m, k).unwrap();
        let mut seen = HashSet::new();
        for s in &sols {
            let power: usize = s.entries().iter().map(|&(_, n)| n).sum();
            let weight: usize = s.entries().iter().map(|&(i, n)| i * n).sum();
            prop_assert_eq!(power, k);
            prop_assert_eq!(weight, m);
            prop_assert!(s.max_index() <= m - k + 1);
            prop_assert!(s.entries().windows(2).all(|w| w[0].0 < w[1].0));
            prop_assert!(s.entries().iter().all(|&(i, n)| i >= 1 && n >= 1));
            prop_assert!(seen.insert(s.clone()));
        }
        prop_assert!(sols.windows(2).all(|w| w[0].canonical_cmp(&w[1]).is_lt()));
        prop_assert_eq!(sols.len() as u128, partitions_exact(m, k));
        prop_assert_eq!(count(m, k).unwrap(), partitions_exact(m, k));
    }

    #[test]
    fn guaranteed_term_present((m, k) in mk()) {
        let sols = enumerate(m, k).unwrap();
        let expected: Vec<(usize, usize)> = if k == m {
            vec![(1, m)]
        } else if k == 1 {
            vec![(m, 1)]
        } else {
            vec![(1, k - 1), (m - k + 1, 1)]
        };
        prop_assert!(sols.iter().any(|s| s.entries() == &expected[..]));
    }

    #[test]
    fn coefficients_invert_factorial_products((m, k) in mk()) {
        for t in reduced_polynomial(m, k).unwrap().terms() {
            let prod = t.exponents().entries().iter().fold(BigInt::one(), |acc, &(_, n)| acc * factorial(n));
            prop_assert!((t.coefficient() * Rational::from_integer(prod)).is_one());
        }
    }

    #[test]
    fn reduced_uses_whole_vector((m, k) in mk()) {
        let z = reduced_polynomial(m, k).unwrap();
        let used: HashSet<usize> = z.terms().iter().flat_map(|t| t.exponents().entries().iter().map(|&(i, _)| i)).collect();
        if k > 1 {
            prop_assert!((1..=m - k + 1).all(|i| used.contains(&i)), "Z_{{{},{}}} misses an index", m, k);
        } else {
            prop_assert_eq!(used, HashSet::from([m]));
        }
    }

    #[test]
    fn property_one_ignores_later_components(m in 1usize..=9, extra in prop::collection::vec(rat(), 4), seed in prop::collection::vec(rat(), 9)) {
        let a = adomian(m);
        let derivs: Vec<Rational> = (1..=m as i64).map(|k| Rational::new(k.into(), 3.into())).collect();
        let mut u: Vec<Rational> = seed[..m].to_vec();
        let base = a.evaluate(&EvaluationContext::new(u.clone(), derivs.clone())).unwrap();
        u.extend(extra);
        let changed = a.evaluate(&EvaluationContext::new(u, derivs)).unwrap();
        prop_assert_eq!(base, changed);
    }

    #[test]
    fn grading_homogeneity(m in 1usize..=10, lambda in rat(), u in prop::collection::vec(rat(), 10), d in prop::collection::vec(rat(), 10)) {
        let a = adomian(m);
        let scaled: Vec<Rational> = u.iter().enumerate().map(|(i, x)| x * num::pow(lambda.clone(), i + 1)).collect();
        let lhs = a.evaluate(&EvaluationContext::new(scaled, d.clone())).unwrap();
        let rhs = a.evaluate(&EvaluationContext::new(u, d)).unwrap() * num::pow(lambda, m);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn power_grading_per_part(m in 1usize..=10, mu in rat(), u in prop::collection::vec(rat(), 10)) {
        let a = adomian(m);
        let scaled: Vec<Rational> = u.iter().map(|x| x * &mu).collect();
        for (k, z) in a.parts() {
            let lhs = z.evaluate(&scaled).unwrap();
            let rhs = z.evaluate(&u).unwrap() * num::pow(mu.clone(), k);
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn square_composition_is_exact(u0 in -3i32..=3, u in prop::collection::vec(rat(), 10)) {
        for (lhs, rhs) in generating_series_check(&Polynomial::square(), u0 as f64 * 0.5, &u, 10).unwrap() {
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn float_composition_agrees(u0 in -2.0f64..2.0, u in prop::collection::vec(-1.0f64..1.0, 12), which in 0usize..3) {
        let oracle: &dyn DerivativeOracle<f64> = match which {
            0 => &Exp,
            1 => &Sine,
            _ => &Polynomial::square(),
        };
        let derivs = oracle.derivatives(u0, 12).unwrap();
        let pairs = generating_series_check(oracle, u0, &u, 12).unwrap();
        for (m, (lhs, rhs)) in pairs.into_iter().enumerate() {
            let scale = magnitude(m, &u, &derivs);
            prop_assert!((lhs - rhs).abs() <= 1e-12 * scale, "m = {}: {} vs {}", m, lhs, rhs);
        }
    }

    #[test]
    fn series_ring_laws(x in prop::collection::vec(rat(), 6), y in prop::collection::vec(rat(), 6), z in prop::collection::vec(rat(), 6)) {
        let (x, y, z) = (TruncatedSeries::from_coeffs(x, 5), TruncatedSeries::from_coeffs(y, 5), TruncatedSeries::from_coeffs(z, 5));
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.mul(&TruncatedSeries::one(5)), x.clone());
        prop_assert_eq!(x.add(&TruncatedSeries::zero(5)), x.clone());
        prop_assert!(x.mul(&TruncatedSeries::zero(5)).is_zero());
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
    }
}

/// `A_m` evaluated on absolute values: a bound on every partial sum.
fn magnitude(m: usize, u: &[f64], derivs: &[f64]) -> f64 {
    if m == 0 {
        return derivs[0].abs().max(f64::MIN_POSITIVE);
    }
    let abs_u: Vec<f64> = u.iter().map(|x| x.abs()).collect();
    let abs_d: Vec<f64> = derivs[1..].iter().map(|x| x.abs()).collect();
    adomian(m)
        .evaluate(&EvaluationContext::new(abs_u, abs_d))
        .unwrap()
        .max(f64::MIN_POSITIVE)
}

#[test]
fn full_system_matches_reduced_up_to_twenty() {
    for m in 1..=20 {
        for k in 1..=m {
            assert_eq!(
                enumerate_full(m, k).unwrap(),
                enumerate(m, k).unwrap(),
                "(m, k) = ({m}, {k})"
            );
        }
    }
}

#[test]
fn extreme_k_values() {
    for m in 1..=20 {
        let ones = enumerate(m, 1).unwrap();
        assert_eq!(ones.len(), 1);
        assert_eq!(ones[0].entries(), &[(m, 1)]);
        let all = enumerate(m, m).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].entries(), &[(1, m)]);
        let z = reduced_polynomial(m, 1).unwrap();
        assert_eq!(z.to_string(), format!("u{m}"));
    }
}

#[test]
fn closed_forms_match_enumeration() {
    for j in 0..=5 {
        let t = closed_form(j).unwrap();
        for m in j + 1..=25 {
            assert_eq!(
                instantiate(&t, m).unwrap(),
                reduced_polynomial(m, m - j).unwrap(),
                "j = {j}, m = {m}"
            );
        }
    }
    for m in 12..=25 {
        assert_eq!(count(m, m - 6).unwrap(), 11);
    }
}

#[test]
fn monomial_totals_are_partition_numbers() {
    for m in 1..=20 {
        assert_eq!(monomial_count(m).unwrap(), partitions_total(m));
        assert_eq!(adomian(m).monomial_count() as u128, partitions_total(m));
    }
    assert_eq!(partitions_total(10), 42);
}

#[test]
fn json_round_trip_is_byte_stable() {
    use adomian::adomian::{AdomianPolynomial, Format};
    for m in 0..=12 {
        let s = adomian(m).render(Format::Json);
        assert_eq!(AdomianPolynomial::from_json(&s).unwrap().render(Format::Json), s);
    }
}
