use proptest::prelude::*;

use qtrace::arith::{factorial, ratio, Rational};
use qtrace::bell::{bell_via_genfun, bell_via_trace, faa_di_bruno, DerivativeList};
use qtrace::partitions::{enumerate_partitions, trace, PhiB};
use qtrace::zoo;
use qtrace::{CoefficientRing, Error, QSeries, Series};

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| ratio(n, d))
}

fn series(order: usize) -> impl Strategy<Value = QSeries> {
    prop::collection::vec(rational(), order + 1).prop_map(Series::from_coeffs)
}

fn series_triple() -> impl Strategy<Value = (QSeries, QSeries, QSeries)> {
    (0usize..10).prop_flat_map(|n| (series(n), series(n), series(n)))
}

fn with_constant(mut s: QSeries, c: Rational) -> QSeries {
    s.set_coeff(0, c);
    s
}

fn config() -> ProptestConfig {
    ProptestConfig::with_cases(256)
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn ring_axioms((f, g, h) in series_triple()) {
        let n = f.order();
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&f + &QSeries::zero(n), f.clone());
        prop_assert_eq!(&f * &QSeries::one(n), f.clone());
        prop_assert_eq!(&f + &-&f, QSeries::zero(n));
        prop_assert_eq!(&f - &g, &f + &g.negated());
    }

    #[test]
    fn division_inverts_multiplication((f, g, _) in series_triple(), c in 1i64..9) {
        let g = with_constant(g, ratio(c, 1));
        prop_assert_eq!((&f * &g).try_div(&g).unwrap(), f.clone());
        prop_assert_eq!(&g * &g.try_inverse().unwrap(), QSeries::one(g.order()));
    }

    #[test]
    fn exp_log_round_trips((f, g, _) in series_triple()) {
        let f = with_constant(f, ratio(0, 1));
        let g = with_constant(g, ratio(1, 1));
        prop_assert_eq!(f.exp().unwrap().log().unwrap(), f.clone());
        prop_assert_eq!(g.log().unwrap().exp().unwrap(), g.clone());
    }

    #[test]
    fn exp_is_a_homomorphism((f, g, _) in series_triple()) {
        let f = with_constant(f, ratio(0, 1));
        let g = with_constant(g, ratio(0, 1));
        prop_assert_eq!((&f + &g).exp().unwrap(), &f.exp().unwrap() * &g.exp().unwrap());
    }

    #[test]
    fn theta_leibniz((f, g, _) in series_triple()) {
        prop_assert_eq!((&f * &g).theta(), &(&f.theta() * &g) + &(&f * &g.theta()));
    }

    #[test]
    fn dilation_is_multiplicative((f, g, _) in series_triple(), m in 1usize..4) {
        prop_assert_eq!((&f * &g).dilate(m), &f.dilate(m) * &g.dilate(m));
    }

    #[test]
    fn series_json_round_trips((f, _, _) in series_triple()) {
        let json = serde_json::to_string(&f).unwrap();
        let back: QSeries = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn bell_homogeneity(x in prop::collection::vec(rational(), 1..9), lambda in rational()) {
        let k = x.len();
        let scaled: Vec<Rational> = x
            .iter()
            .enumerate()
            .map(|(j, v)| v * CoefficientRing::pow(&lambda, j + 1))
            .collect();
        prop_assert_eq!(
            bell_via_trace(k, &scaled).unwrap(),
            bell_via_trace(k, &x).unwrap() * CoefficientRing::pow(&lambda, k)
        );
    }

    #[test]
    fn bell_trace_matches_genfun(x in prop::collection::vec(rational(), 1..9)) {
        let k = x.len();
        prop_assert_eq!(bell_via_trace(k, &x).unwrap(), bell_via_genfun(k, &x).unwrap());
    }

    #[test]
    fn bell_over_series_coefficients(order in 0usize..5, k in 1usize..5, seed in series(8)) {
        // Bell polynomials evaluated on series elements, via both routes.
        let x: Vec<QSeries> = (0..k)
            .map(|j| Series::from_fn(order, |i| seed.coeff((i + 2 * j) % 9).clone()))
            .collect();
        prop_assert_eq!(bell_via_trace(k, &x).unwrap(), bell_via_genfun(k, &x).unwrap());
    }

    #[test]
    fn faa_di_bruno_matches_composition(
        f in prop::collection::vec(rational(), 6),
        g in prop::collection::vec(rational(), 6),
        k in 1usize..7,
    ) {
        // g(x0 + u) - g(x0) = sum g_j u^j / j!, f(y0 + v) = sum f_l v^l / l!.
        let inner = Series::from_fn(k, |j| {
            if j == 0 { ratio(0, 1) } else { &g[j - 1] / Rational::from_integer(factorial(j as u64)) }
        });
        let mut composed = QSeries::zero(k);
        for l in 1..=k {
            let c = &f[l - 1] / Rational::from_integer(factorial(l as u64));
            composed = &composed + &inner.pow(l).scaled(&c);
        }
        let expected = composed.coeff(k) * Rational::from_integer(factorial(k as u64));
        let got = faa_di_bruno(
            k,
            &DerivativeList::new(f.clone()).unwrap(),
            &DerivativeList::new(g[..k].to_vec()).unwrap(),
        )
        .unwrap();
        prop_assert_eq!(got, expected);
    }
}

#[test]
fn mismatched_orders_are_rejected() {
    let a = QSeries::one(3);
    let b = QSeries::one(4);
    assert_eq!(
        a.try_add(&b),
        Err(Error::OrderMismatch { left: 3, right: 4 })
    );
    assert!(a.try_mul(&b).is_err());
}

#[test]
fn partition_counts_match_euler_product() {
    let inverse = zoo::euler_product_power(30, 1).try_inverse().unwrap();
    for k in 1..=30 {
        let count = enumerate_partitions(k).count();
        assert_eq!(
            Rational::from_integer(count.into()),
            *inverse.coeff(k),
            "p({k})"
        );
    }
}

#[test]
fn partitions_arrive_in_reverse_lex_order() {
    for k in 1..=15 {
        let all: Vec<Vec<usize>> = enumerate_partitions(k).map(|p| p.parts()).collect();
        for p in &all {
            assert_eq!(p.iter().sum::<usize>(), k);
            assert!(p.windows(2).all(|w| w[0] >= w[1]));
        }
        assert!(all.windows(2).all(|w| w[0] > w[1]), "k={k}");
    }
}

#[test]
fn set_partitions_count_bell_numbers() {
    // Restricted growth strings a_1 = 0, a_i <= 1 + max(a_1..a_{i-1}).
    fn count(len: usize, pos: usize, max: usize) -> u64 {
        if pos == len {
            return 1;
        }
        (0..=max + 1).map(|v| count(len, pos + 1, max.max(v))).sum()
    }
    for k in 1..=10 {
        let ones = vec![ratio(1, 1); k];
        let expected = Rational::from_integer(count(k, 1, 0).into());
        assert_eq!(bell_via_trace(k, &ones).unwrap(), expected, "k={k}");
        assert_eq!(trace(k, &PhiB, &ones).unwrap(), expected);
    }
}

#[test]
fn f_series_is_iterated_theta() {
    let mut expected = zoo::f_series(1, 40).unwrap();
    for j in 1..=8 {
        assert_eq!(zoo::f_series(j, 40).unwrap(), expected, "j={j}");
        expected = expected.theta();
    }
}

#[test]
fn pentagonal_product_at_200() {
    assert_eq!(zoo::euler_product_power(200, 1), zoo::pentagonal_theta(200));
}

#[test]
fn h_series_matches_inner_sum() {
    for j in 1..=6 {
        assert_eq!(
            zoo::h_series(j, 40).unwrap(),
            zoo::h_inner_oracle(j, 40).unwrap(),
            "j={j}"
        );
    }
}

#[test]
fn nested_series_ring_laws() {
    let inner =
        |a: i64, b: i64| Series::from_coeffs(vec![ratio(a, 1), ratio(b, 1), ratio(a - b, 2)]);
    let f: Series<QSeries> = Series::from_coeffs(vec![inner(0, 0), inner(2, -1), inner(1, 1)]);
    let g: Series<QSeries> = Series::from_coeffs(vec![inner(1, 0), inner(-3, 2), inner(0, 5)]);
    assert_eq!(&f * &g, &g * &f);
    assert_eq!((&f * &g).theta(), &(&f.theta() * &g) + &(&f * &g.theta()));
    assert_eq!(f.exp().unwrap().log().unwrap(), f);
    assert!(!g.is_one_element());
}
