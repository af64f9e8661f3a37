use std::time::Duration;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qtrace::arith::{rat, ratio};
use qtrace::verify::{
    grid, recognize_quasimodular, v_even_bell_side, v_even_trace_side, verify_all, GridConfig, Job,
    Level, Recognition, Status, VerificationReport,
};
use qtrace::zoo::{self, Params};

fn without_timing(mut reports: Vec<VerificationReport>) -> Vec<VerificationReport> {
    for r in &mut reports {
        r.elapsed = Duration::ZERO;
    }
    reports
}

#[test]
fn formula_sides_agree_without_the_oracle() {
    for k in 1..=6 {
        assert_eq!(
            v_even_bell_side(k, 30).unwrap(),
            v_even_trace_side(k, 30).unwrap(),
            "k={k}"
        );
    }
}

#[test]
fn poisoned_fixture_yields_exactly_one_mismatch() {
    let mut params = Params::new();
    params.insert("k".into(), rat(1));
    let mut expected = zoo::eisenstein(1, 10).unwrap();
    let clean = Job::Fixture {
        name: "E2k".into(),
        params: params.clone(),
        expected: expected.clone(),
    };
    expected.set_coeff(4, expected.coeff(4) + ratio(1, 3));
    let poisoned = Job::Fixture {
        name: "E2k".into(),
        params,
        expected,
    };
    let mut jobs = vec![clean, poisoned];
    jobs.extend((1..=3).map(|k| Job::MacMahon { k, order: 12 }));
    let reports = verify_all(&jobs);
    let bad: Vec<_> = reports
        .iter()
        .filter(|r| r.status != Status::Verified)
        .collect();
    assert_eq!(bad.len(), 1);
    assert_eq!(bad[0].status, Status::Mismatch);
    assert_eq!(bad[0].first_mismatch.as_ref().unwrap().n, 4);
}

#[test]
fn batch_order_does_not_depend_on_submission_order() {
    let config = GridConfig {
        order: Some(12),
        k_max: Some(2),
        n_max: Some(6),
        t_max: 2,
        r_max: 2,
        a_values: vec![rat(-1), ratio(1, 2)],
        ..GridConfig::default()
    };
    let mut jobs = grid(&config);
    let first = without_timing(verify_all(&jobs));
    jobs.shuffle(&mut ChaCha8Rng::seed_from_u64(7));
    let second = without_timing(verify_all(&jobs));
    assert_eq!(first, second);
    assert!(first.iter().all(|r| r.is_verified()));
    assert!(first.windows(2).all(|w| w[0].sort_key_cmp(&w[1]).is_le()));
}

#[test]
fn recognition_is_stable_as_order_grows() {
    let weight = 4;
    let mut seen = None;
    for order in [8, 12, 20, 30, 40] {
        let a2 = zoo::macmahon_oracle(2, order).unwrap();
        let cert = match recognize_quasimodular(&a2, weight, Level::One).unwrap() {
            Recognition::Found(c) => c,
            Recognition::NotFound => panic!("A_2 not found at order {order}"),
        };
        assert_eq!(cert.residual_order, order);
        match &seen {
            None => seen = Some(cert.coefficients),
            Some(c) => assert_eq!(c, &cert.coefficients, "order {order}"),
        }
    }
}

#[test]
fn level_three_certificate_for_twisted_series() {
    let h = zoo::h_ktr_series(1, 1, 1, &rat(1), 30).unwrap();
    let cert = recognize_quasimodular(&h, 2, Level::Three)
        .unwrap()
        .certificate()
        .cloned()
        .expect("found");
    assert!(cert.basis.iter().any(|b| b == "Lchi0(q)"));
    let again = zoo::h_ktr_series(1, 1, 1, &rat(1), 50).unwrap();
    let cert50 = recognize_quasimodular(&again, 2, Level::Three).unwrap();
    assert_eq!(
        cert50.certificate().unwrap().coefficients,
        cert.coefficients
    );
}

#[test]
fn eisenstein_products_are_found_at_level_one() {
    let e2 = zoo::eisenstein(1, 30).unwrap();
    let e4 = zoo::eisenstein(2, 30).unwrap();
    let target = &(&e2 * &e4).scaled(&ratio(2, 7)) - &e2.theta();
    let cert = recognize_quasimodular(&target, 6, Level::One).unwrap();
    assert!(cert.certificate().is_some());
    let lacunary = zoo::pentagonal_theta(30);
    assert_eq!(
        recognize_quasimodular(&lacunary, 6, Level::One).unwrap(),
        Recognition::NotFound
    );
}
