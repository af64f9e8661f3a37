//! Complete Bell polynomials, Faà di Bruno's formula, and the arcsin-twisted
//! variant `Lambda_k`.
//!
//! Bell polynomials are evaluated two independent ways: as a partition trace
//! with the Bell weight, and by coefficient extraction from
//! `prod_j exp(x_j t^j / j!)`. Both are public and are used side by side in
//! the verification code.

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::{binomial, factorial, rat, Rational};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, trace, PhiB};
use crate::ring::CoefficientRing;
use crate::series::{QSeries, Series};

/// Values `d_1..d_k`, where `d_j` stands for a `j`-th derivative at a point.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivativeList<R> {
    values: Vec<R>,
}

impl<R: CoefficientRing> DerivativeList<R> {
    pub fn new(values: Vec<R>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidParameter("derivative list is empty".into()));
        }
        Ok(DerivativeList { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The `j`-th derivative, `j >= 1`.
    pub fn get(&self, j: usize) -> &R {
        &self.values[j - 1]
    }

    pub fn values(&self) -> &[R] {
        &self.values
    }
}

fn check_len<R>(k: usize, x: &[R]) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidParameter("Bell index must be >= 1".into()));
    }
    if x.len() != k {
        return Err(Error::LengthMismatch {
            expected: k,
            got: x.len(),
        });
    }
    Ok(())
}

/// `B_k(x_1..x_k)` as the partition trace with weight `phi_B`.
pub fn bell_via_trace<R: CoefficientRing>(k: usize, x: &[R]) -> Result<R> {
    check_len(k, x)?;
    trace(k, &PhiB, x)
}

/// `B_k(x_1..x_k) = k! [t^k] prod_{j<=k} exp(x_j t^j / j!)`.
pub fn bell_via_genfun<R: CoefficientRing>(k: usize, x: &[R]) -> Result<R> {
    check_len(k, x)?;
    let zero = x[0].zero_like();
    let mut exponent = Series::zero_like_elem(k, &zero);
    for (i, xj) in x.iter().enumerate() {
        let j = i + 1;
        let c = Rational::new(BigInt::one(), factorial(j as u64));
        exponent.set_coeff(j, xj.scaled(&c));
    }
    let gf = exponent.exp()?;
    Ok(gf
        .coeff(k)
        .scaled(&Rational::from_integer(factorial(k as u64))))
}

/// `d^k/dx^k f(g(x))` at `x0`, given `f^{(l)}(g(x0))` for `l = 1..` and
/// `g^{(j)}(x0)` for `j = 1..=k`.
pub fn faa_di_bruno<R: CoefficientRing>(
    k: usize,
    f_derivs: &DerivativeList<R>,
    g_derivs: &DerivativeList<R>,
) -> Result<R> {
    check_len(k, g_derivs.values())?;
    if f_derivs.len() < k {
        return Err(Error::LengthMismatch {
            expected: k,
            got: f_derivs.len(),
        });
    }
    let kf = factorial(k as u64);
    let mut acc = g_derivs.get(1).zero_like();
    for lambda in enumerate_partitions(k) {
        let mut denom = BigInt::one();
        let mut mono = f_derivs.get(lambda.length()).clone();
        for (j, m) in lambda.frequencies() {
            denom *= factorial(m as u64) * factorial(j as u64).pow(m);
            mono = mono.times(&g_derivs.get(j).pow(m as usize));
        }
        acc = acc.plus(&mono.scaled(&Rational::new(kf.clone(), denom)));
    }
    Ok(acc)
}

/// Taylor coefficients of `2 arcsin(t/2)` through `t^order`, from
/// `arcsin(u) = sum C(2n,n) u^{2n+1} / (4^n (2n+1))`.
pub fn two_arcsin_half(order: usize) -> QSeries {
    Series::from_fn(order, |e| {
        if e % 2 == 0 {
            return rat(0);
        }
        let n = (e - 1) / 2;
        // 2 * C(2n,n) / (4^n (2n+1) 2^{2n+1}) = C(2n,n) / (16^n (2n+1))
        Rational::new(
            binomial(2 * n as u64, n as u64),
            BigInt::from(16).pow(n as u32) * BigInt::from(2 * n + 1),
        )
    })
}

/// `Lambda_k(x_1..x_k) = [t^{2k}] prod_{j<=k} exp(2(-1)^{j-1}/(2j)! (2 arcsin(t/2))^{2j} x_j)`.
///
/// `x` must be nonempty (its first entry fixes the ring); only `x[..k]` is
/// read, so `k = 0` yields one.
pub fn lambda_poly<R: CoefficientRing>(k: usize, x: &[R]) -> Result<R> {
    let template = x
        .first()
        .ok_or_else(|| Error::InvalidParameter("lambda_poly needs a ring element".into()))?;
    if x.len() < k {
        return Err(Error::LengthMismatch {
            expected: k,
            got: x.len(),
        });
    }
    let order = 2 * k;
    let a = two_arcsin_half(order);
    let a2 = &a * &a;
    let mut power = QSeries::one(order);
    let mut exponent = Series::zero_like_elem(order, &template.zero_like());
    for (i, xj) in x.iter().take(k).enumerate() {
        let j = i + 1;
        power = &power * &a2;
        let sign = if j % 2 == 1 { 2 } else { -2 };
        let c = Rational::new(BigInt::from(sign), factorial(2 * j as u64));
        for e in 0..=order {
            let pe = power.coeff(e);
            if num_traits::Zero::is_zero(pe) {
                continue;
            }
            let term = xj.scaled(&(pe * &c));
            exponent.set_coeff(e, exponent.coeff(e).plus(&term));
        }
    }
    let gf = exponent.exp()?;
    Ok(gf.coeff(order).clone())
}
