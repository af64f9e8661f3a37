//! One check per identity: both (or all three) sides are built through
//! separate code paths and compared coefficient by coefficient.
//!
//! Oracle sides come from [`crate::zoo`] (lacunary sums, nested sums,
//! partition enumeration, cyclotomic polynomial arithmetic). Formula sides
//! come from [`crate::bell`] and [`crate::partitions::trace`] applied to the
//! coefficient-defined series. Every report certifies agreement only through
//! its stated truncation order.

mod recognize;
mod report;

use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::arith::{factorial, rat, Rational};
use crate::bell::{bell_via_trace, lambda_poly};
use crate::error::{Error, Result};
use crate::partitions::{trace, PhiPhi, PhiV};
use crate::series::{QSeries, Series};
use crate::zoo::{self, Params};

pub use recognize::{
    basis, basis_size, recognize_quasimodular, Generator, Level, QuasimodularCertificate,
    Recognition,
};
pub use report::{compare_sides, first_difference, Mismatch, Status, VerificationReport};

/// Theorem identifiers, as used by the CLI and in report JSON.
pub const THEOREM_IDS: [&str; 8] = [
    "v-even",
    "v-general",
    "u",
    "macmahon",
    "a-ktr",
    "srp",
    "lehmer",
    "ramanujan",
];

fn params(pairs: &[(&str, Rational)]) -> Params {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn idx(v: usize) -> Rational {
    rat(v as i64)
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg.to_string()))
    }
}

fn report(
    theorem: &str,
    params: Params,
    order: usize,
    start: Instant,
    sides: &[&QSeries],
) -> VerificationReport {
    let first_mismatch = compare_sides(sides);
    VerificationReport {
        theorem_id: theorem.to_string(),
        params,
        order,
        status: if first_mismatch.is_none() {
            Status::Verified
        } else {
            Status::Mismatch
        },
        first_mismatch,
        elapsed: start.elapsed(),
    }
}

fn power_scale(base: i64, k: usize) -> Rational {
    Rational::from_integer(BigInt::from(base).pow(k as u32))
}

/// `V_{2k}` as the theta quotient.
pub fn v_even_oracle(k: usize, order: usize) -> Result<QSeries> {
    zoo::v_numerator(2 * k, order).try_div(&zoo::pentagonal_theta(order))
}

/// `24^k B_k(F_1, ..., F_k)`.
pub fn v_even_bell_side(k: usize, order: usize) -> Result<QSeries> {
    v_even_bell_side_with(k, order, &|j, n| zoo::f_series(j, n))
}

fn v_even_bell_side_with(
    k: usize,
    order: usize,
    f: &dyn Fn(usize, usize) -> Result<QSeries>,
) -> Result<QSeries> {
    let fs = (1..=k).map(|j| f(j, order)).collect::<Result<Vec<_>>>()?;
    Ok(bell_via_trace(k, &fs)?.scaled(&power_scale(24, k)))
}

/// `Tr_k(phi_V; E_2, ..., E_{2k})`.
pub fn v_even_trace_side(k: usize, order: usize) -> Result<QSeries> {
    let es = (1..=k)
        .map(|j| zoo::eisenstein(j, order))
        .collect::<Result<Vec<_>>>()?;
    trace(k, &PhiV, &es)
}

fn run_v_even(
    k: usize,
    order: usize,
    f: &dyn Fn(usize, usize) -> Result<QSeries>,
) -> Result<VerificationReport> {
    require(k >= 1, "k must be >= 1")?;
    let start = Instant::now();
    let oracle = v_even_oracle(k, order)?;
    let bell = v_even_bell_side_with(k, order, f)?;
    let traced = v_even_trace_side(k, order)?;
    Ok(report(
        "v-even",
        params(&[("k", idx(k))]),
        order,
        start,
        &[&oracle, &bell, &traced],
    ))
}

/// Theta quotient vs `24^k B_k(F_j)` vs `Tr_k(phi_V; E_{2j})`.
pub fn verify_v_even(k: usize, order: usize) -> Result<VerificationReport> {
    run_v_even(k, order, &|j, n| zoo::f_series(j, n))
}

/// `V_k` as the theta quotient.
pub fn v_general_oracle(k: usize, order: usize) -> Result<QSeries> {
    zoo::v_numerator(k, order).try_div(&zoo::pentagonal_theta(order))
}

/// `6^k B_k(G_1, ..., G_k)`.
pub fn v_general_bell_side(k: usize, order: usize) -> Result<QSeries> {
    let gs = (1..=k)
        .map(|j| zoo::capital_g_series(j, order))
        .collect::<Result<Vec<_>>>()?;
    Ok(bell_via_trace(k, &gs)?.scaled(&power_scale(6, k)))
}

pub fn verify_v_general(k: usize, order: usize) -> Result<VerificationReport> {
    require(k >= 1, "k must be >= 1")?;
    let start = Instant::now();
    let oracle = v_general_oracle(k, order)?;
    let bell = v_general_bell_side(k, order)?;
    Ok(report(
        "v-general",
        params(&[("k", idx(k))]),
        order,
        start,
        &[&oracle, &bell],
    ))
}

/// `U_{2k}` as the triangular theta quotient.
pub fn u_oracle(k: usize, order: usize) -> Result<QSeries> {
    zoo::u_numerator(k, order).try_div(&zoo::u_denominator(order))
}

/// `8^k B_k(3F_1, ..., 3F_k)`.
pub fn u_bell_side(k: usize, order: usize) -> Result<QSeries> {
    let fs = (1..=k)
        .map(|j| zoo::f_series(j, order).map(|f| f.scaled(&rat(3))))
        .collect::<Result<Vec<_>>>()?;
    Ok(bell_via_trace(k, &fs)?.scaled(&power_scale(8, k)))
}

pub fn verify_u(k: usize, order: usize) -> Result<VerificationReport> {
    require(k >= 1, "k must be >= 1")?;
    let start = Instant::now();
    let oracle = u_oracle(k, order)?;
    let bell = u_bell_side(k, order)?;
    Ok(report(
        "u",
        params(&[("k", idx(k))]),
        order,
        start,
        &[&oracle, &bell],
    ))
}

/// `(1/k!) B_k(H_1, ..., H_k)`.
pub fn macmahon_bell_side(k: usize, order: usize) -> Result<QSeries> {
    let hs = (1..=k)
        .map(|j| zoo::h_series(j, order))
        .collect::<Result<Vec<_>>>()?;
    Ok(bell_via_trace(k, &hs)?.scaled(&Rational::new(1.into(), factorial(k as u64))))
}

/// `Lambda_k(L_2, L_4, ..., L_{2k})`.
pub fn macmahon_lambda_side(k: usize, order: usize) -> Result<QSeries> {
    let ls = (1..=k)
        .map(|j| zoo::l_series(2 * j, order))
        .collect::<Result<Vec<_>>>()?;
    lambda_poly(k, &ls)
}

pub fn verify_macmahon(k: usize, order: usize) -> Result<VerificationReport> {
    require(k >= 1, "k must be >= 1")?;
    let start = Instant::now();
    let oracle = zoo::macmahon_oracle(k, order)?;
    let bell = macmahon_bell_side(k, order)?;
    let lambda = macmahon_lambda_side(k, order)?;
    Ok(report(
        "macmahon",
        params(&[("k", idx(k))]),
        order,
        start,
        &[&oracle, &bell, &lambda],
    ))
}

/// `(1/k!) B_k(H_{1,t,r}(a), ..., H_{k,t,r}(a))`.
pub fn a_ktr_bell_side(
    k: usize,
    t: usize,
    r: usize,
    a: &Rational,
    order: usize,
) -> Result<QSeries> {
    let hs = (1..=k)
        .map(|j| zoo::h_ktr_series(j, t, r, a, order))
        .collect::<Result<Vec<_>>>()?;
    Ok(bell_via_trace(k, &hs)?.scaled(&Rational::new(1.into(), factorial(k as u64))))
}

pub fn verify_a_ktr(
    k: usize,
    t: usize,
    r: usize,
    a: &Rational,
    order: usize,
) -> Result<VerificationReport> {
    require(k >= 1 && t >= 1 && r >= 1, "k, t, r must be >= 1")?;
    let start = Instant::now();
    let oracle = zoo::a_ktr_oracle(k, t, r, a, order)?;
    let bell = a_ktr_bell_side(k, t, r, a, order)?;
    Ok(report(
        "a-ktr",
        params(&[
            ("k", idx(k)),
            ("t", idx(t)),
            ("r", idx(r)),
            ("a", a.clone()),
        ]),
        order,
        start,
        &[&oracle, &bell],
    ))
}

/// `prod (1 + q^m)^{-1} sum s_k(n) q^n`.
pub fn srp_oracle(k: usize, order: usize) -> Result<QSeries> {
    zoo::srp_moment_oracle(k, order)?.try_div(&zoo::distinct_parts_product(order))
}

/// `B_k(g_1, ..., g_k)`.
pub fn srp_bell_side(k: usize, order: usize) -> Result<QSeries> {
    let gs = (1..=k)
        .map(|j| zoo::g_series(j, order))
        .collect::<Result<Vec<_>>>()?;
    bell_via_trace(k, &gs)
}

pub fn verify_srp(k: usize, order: usize) -> Result<VerificationReport> {
    require(k >= 1, "k must be >= 1")?;
    let start = Instant::now();
    let oracle = srp_oracle(k, order)?;
    let bell = srp_bell_side(k, order)?;
    Ok(report(
        "srp",
        params(&[("k", idx(k))]),
        order,
        start,
        &[&oracle, &bell],
    ))
}

/// `Tr_k(phi_Phi; varsigma_1(n), ..., varsigma_k(n))`.
pub fn lehmer_trace_side(n: usize, k: usize) -> Result<Rational> {
    let vs = (1..=k)
        .map(|j| zoo::varsigma(j, n))
        .collect::<Result<Vec<_>>>()?;
    trace(k, &PhiPhi, &vs)
}

/// `B_k(-0! varsigma_1(n), ..., -(k-1)! varsigma_k(n))`.
pub fn lehmer_bell_side(n: usize, k: usize) -> Result<Rational> {
    let xs = (1..=k)
        .map(|j| zoo::varsigma(j, n).map(|v| -v * Rational::from_integer(factorial(j as u64 - 1))))
        .collect::<Result<Vec<_>>>()?;
    bell_via_trace(k, &xs)
}

/// Scalar three-way check. The report's `order` is `k`, and a mismatch is
/// reported at index `k`.
pub fn verify_lehmer(n: usize, k: usize) -> Result<VerificationReport> {
    require(n >= 2, "n must be >= 2")?;
    require(k >= 1, "k must be >= 1")?;
    let start = Instant::now();
    let scalar = |v: Rational| Series::monomial(k, k, v);
    let oracle = scalar(zoo::phi_derivative_ratio_oracle(n, k)?);
    let traced = scalar(lehmer_trace_side(n, k)?);
    let bell = scalar(lehmer_bell_side(n, k)?);
    Ok(report(
        "lehmer",
        params(&[("n", idx(n)), ("k", idx(k))]),
        k,
        start,
        &[&oracle, &traced, &bell],
    ))
}

/// The three derivative identities `theta E_2 = (E_2^2 - E_4)/12`,
/// `theta E_4 = (E_2 E_4 - E_6)/3`, `theta E_6 = (E_2 E_6 - E_4^2)/2`.
pub fn ramanujan_sides(order: usize) -> Result<[(QSeries, QSeries); 3]> {
    let e2 = zoo::eisenstein(1, order)?;
    let e4 = zoo::eisenstein(2, order)?;
    let e6 = zoo::eisenstein(3, order)?;
    let third = |num: QSeries, d: i64| num.scaled(&Rational::new(1.into(), d.into()));
    Ok([
        (e2.theta(), third(&(&e2 * &e2) - &e4, 12)),
        (e4.theta(), third(&(&e2 * &e4) - &e6, 3)),
        (e6.theta(), third(&(&e2 * &e6) - &(&e4 * &e4), 2)),
    ])
}

pub fn verify_ramanujan(order: usize) -> Result<VerificationReport> {
    require(order >= 2, "order must be >= 2")?;
    let start = Instant::now();
    let sides = ramanujan_sides(order)?;
    let first_mismatch = sides
        .iter()
        .filter_map(|(l, r)| first_difference(l, r))
        .min_by_key(|m| m.n);
    Ok(VerificationReport {
        theorem_id: "ramanujan".into(),
        params: Params::new(),
        order,
        status: if first_mismatch.is_none() {
            Status::Verified
        } else {
            Status::Mismatch
        },
        first_mismatch,
        elapsed: start.elapsed(),
    })
}

/// One unit of batch work.
#[derive(Debug, Clone, PartialEq)]
pub enum Job {
    VEven {
        k: usize,
        order: usize,
    },
    VGeneral {
        k: usize,
        order: usize,
    },
    U {
        k: usize,
        order: usize,
    },
    MacMahon {
        k: usize,
        order: usize,
    },
    AKtr {
        k: usize,
        t: usize,
        r: usize,
        a: Rational,
        order: usize,
    },
    Srp {
        k: usize,
        order: usize,
    },
    Lehmer {
        n: usize,
        k: usize,
    },
    Ramanujan {
        order: usize,
    },
    /// A registry series compared against frozen expected coefficients.
    Fixture {
        name: String,
        params: Params,
        expected: QSeries,
    },
}

impl Job {
    pub fn theorem_id(&self) -> &'static str {
        match self {
            Job::VEven { .. } => "v-even",
            Job::VGeneral { .. } => "v-general",
            Job::U { .. } => "u",
            Job::MacMahon { .. } => "macmahon",
            Job::AKtr { .. } => "a-ktr",
            Job::Srp { .. } => "srp",
            Job::Lehmer { .. } => "lehmer",
            Job::Ramanujan { .. } => "ramanujan",
            Job::Fixture { .. } => "series-fixture",
        }
    }

    fn params(&self) -> Params {
        match self {
            Job::VEven { k, .. }
            | Job::VGeneral { k, .. }
            | Job::U { k, .. }
            | Job::MacMahon { k, .. }
            | Job::Srp { k, .. } => params(&[("k", idx(*k))]),
            Job::AKtr { k, t, r, a, .. } => params(&[
                ("k", idx(*k)),
                ("t", idx(*t)),
                ("r", idx(*r)),
                ("a", a.clone()),
            ]),
            Job::Lehmer { n, k } => params(&[("n", idx(*n)), ("k", idx(*k))]),
            Job::Ramanujan { .. } => Params::new(),
            Job::Fixture { params, .. } => params.clone(),
        }
    }

    fn order(&self) -> usize {
        match self {
            Job::VEven { order, .. }
            | Job::VGeneral { order, .. }
            | Job::U { order, .. }
            | Job::MacMahon { order, .. }
            | Job::AKtr { order, .. }
            | Job::Srp { order, .. }
            | Job::Ramanujan { order } => *order,
            Job::Lehmer { k, .. } => *k,
            Job::Fixture { expected, .. } => expected.order(),
        }
    }

    /// Runs the check. Precondition failures become `error` reports.
    pub fn run(&self) -> VerificationReport {
        let start = Instant::now();
        let result = match self {
            Job::VEven { k, order } => verify_v_even(*k, *order),
            Job::VGeneral { k, order } => verify_v_general(*k, *order),
            Job::U { k, order } => verify_u(*k, *order),
            Job::MacMahon { k, order } => verify_macmahon(*k, *order),
            Job::AKtr { k, t, r, a, order } => verify_a_ktr(*k, *t, *r, a, *order),
            Job::Srp { k, order } => verify_srp(*k, *order),
            Job::Lehmer { n, k } => verify_lehmer(*n, *k),
            Job::Ramanujan { order } => verify_ramanujan(*order),
            Job::Fixture {
                name,
                params,
                expected,
            } => zoo::named_series(name, params, expected.order()).map(|built| {
                let mut p = params.clone();
                p.insert(format!("series:{name}"), rat(0));
                report(
                    "series-fixture",
                    p,
                    expected.order(),
                    start,
                    &[&built.series, expected],
                )
            }),
        };
        result.unwrap_or_else(|_| VerificationReport {
            theorem_id: self.theorem_id().to_string(),
            params: self.params(),
            order: self.order(),
            status: Status::Error,
            first_mismatch: None,
            elapsed: start.elapsed(),
        })
    }
}

/// Runs every job (concurrently) and returns the reports sorted by theorem
/// id and parameters, independent of completion order.
pub fn verify_all(jobs: &[Job]) -> Vec<VerificationReport> {
    let mut reports: Vec<VerificationReport> = jobs.par_iter().map(Job::run).collect();
    reports.sort_by(|a, b| a.sort_key_cmp(b));
    reports
}

/// Grid bounds for [`grid`]. `None` orders fall back to the per-theorem
/// defaults.
#[derive(Debug, Clone, PartialEq)]
pub struct GridConfig {
    pub only: Option<Vec<String>>,
    pub order: Option<usize>,
    pub k_max: Option<usize>,
    pub n_max: Option<usize>,
    pub t_max: usize,
    pub r_max: usize,
    pub a_values: Vec<Rational>,
}

impl Default for GridConfig {
    fn default() -> Self {
        GridConfig {
            only: None,
            order: None,
            k_max: None,
            n_max: None,
            t_max: 3,
            r_max: 3,
            a_values: (-2..=2).map(rat).collect(),
        }
    }
}

/// The default acceptance grid, optionally narrowed.
pub fn grid(config: &GridConfig) -> Vec<Job> {
    let wanted = |id: &str| {
        config
            .only
            .as_ref()
            .is_none_or(|o| o.iter().any(|x| x == id))
    };
    let order = |default: usize| config.order.unwrap_or(default);
    let kmax = |default: usize| config.k_max.unwrap_or(default);
    let mut jobs = Vec::new();
    if wanted("v-even") {
        jobs.extend((1..=kmax(6)).map(|k| Job::VEven {
            k,
            order: order(60),
        }));
    }
    if wanted("v-general") {
        jobs.extend((1..=kmax(8)).map(|k| Job::VGeneral {
            k,
            order: order(60),
        }));
    }
    if wanted("u") {
        jobs.extend((1..=kmax(5)).map(|k| Job::U {
            k,
            order: order(60),
        }));
    }
    if wanted("macmahon") {
        jobs.extend((1..=kmax(5)).map(|k| Job::MacMahon {
            k,
            order: order(50),
        }));
    }
    if wanted("a-ktr") {
        for k in 1..=kmax(3) {
            for t in 1..=config.t_max {
                for r in 1..=config.r_max {
                    for a in &config.a_values {
                        jobs.push(Job::AKtr {
                            k,
                            t,
                            r,
                            a: a.clone(),
                            order: order(40),
                        });
                    }
                }
            }
        }
    }
    if wanted("srp") {
        jobs.extend((1..=kmax(4)).map(|k| Job::Srp {
            k,
            order: order(35),
        }));
    }
    if wanted("lehmer") {
        for n in 2..=config.n_max.unwrap_or(30) {
            for k in 1..=kmax(5) {
                jobs.push(Job::Lehmer { n, k });
            }
        }
    }
    if wanted("ramanujan") {
        jobs.push(Job::Ramanujan { order: order(200) });
    }
    jobs
}
