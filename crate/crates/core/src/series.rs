//! Truncated formal power series over a [`CoefficientRing`].
//!
//! A [`Series`] of order `N` stores exactly the coefficients of `x^0..=x^N`.
//! Binary operations require equal orders and reject mismatches instead of
//! silently aligning; use [`Series::truncate`] to lower an order explicitly.
//! The operator impls (`&a * &b` and friends) panic on a mismatch and are
//! meant for code that has already fixed a single order.
//!
//! `Series<R>` is itself a [`CoefficientRing`], so `Series<Series<Rational>>`
//! gives bivariate truncated series.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{rat, rational_from_pair, rational_pair, Rational};
use crate::error::{Error, Result};
use crate::ring::CoefficientRing;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Series<R> {
    coeffs: Vec<R>,
}

pub type QSeries = Series<Rational>;

impl<R: CoefficientRing> Series<R> {
    /// Builds a series from `coeffs[0..=N]`. Panics on an empty vector.
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series carries at least one coefficient"
        );
        Series { coeffs }
    }

    /// `sum_{n <= order} f(n) x^n`.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> R) -> Self {
        Series {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn zero_like_elem(order: usize, template: &R) -> Self {
        Self::constant(order, template.zero_like())
    }

    pub fn one_like_elem(order: usize, template: &R) -> Self {
        Self::constant(order, template.one_like())
    }

    pub fn constant(order: usize, c: R) -> Self {
        let zero = c.zero_like();
        let mut coeffs = vec![zero; order + 1];
        coeffs[0] = c;
        Series { coeffs }
    }

    /// `c x^e`, or zero when `e` exceeds the order.
    pub fn monomial(order: usize, e: usize, c: R) -> Self {
        let mut coeffs = vec![c.zero_like(); order + 1];
        if e <= order {
            coeffs[e] = c;
        }
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn set_coeff(&mut self, n: usize, c: R) {
        self.coeffs[n] = c;
    }

    pub fn constant_term(&self) -> &R {
        &self.coeffs[0]
    }

    /// Index of the first nonzero coefficient, if any.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero_element())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    /// Drops every coefficient above `order`.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(
            order <= self.order(),
            "cannot raise the order by truncation"
        );
        Series {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.plus(b))
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.minus(b))
                .collect(),
        })
    }

    /// Cauchy product truncated at the common order. Zero coefficients on
    /// either side are skipped, which matters for the sparse factors of
    /// q-products.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; n + 1];
        let rhs: Vec<(usize, &R)> = other
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero_element())
            .collect();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero_element() {
                continue;
            }
            for &(j, b) in &rhs {
                if i + j > n {
                    break;
                }
                out[i + j] = out[i + j].plus(&a.times(b));
            }
        }
        Ok(Series { coeffs: out })
    }

    /// `c` with `c * divisor = self` through the common order.
    pub fn try_div(&self, divisor: &Self) -> Result<Self> {
        self.check_order(divisor)?;
        let inv = divisor.coeffs[0]
            .try_inverse()
            .ok_or(Error::NonUnitDivision)?;
        let n = self.order();
        let mut out: Vec<R> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeffs[k].clone();
            for j in 1..=k {
                let b = &divisor.coeffs[j];
                if !b.is_zero_element() {
                    acc = acc.minus(&b.times(&out[k - j]));
                }
            }
            out.push(acc.times(&inv));
        }
        Ok(Series { coeffs: out })
    }

    pub fn try_inverse(&self) -> Result<Self> {
        Self::one_like_elem(self.order(), &self.coeffs[0]).try_div(self)
    }

    pub fn negated(&self) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|c| c.negated()).collect(),
        }
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|a| a.scaled(c)).collect(),
        }
    }

    /// Multiplies every coefficient by the ring element `c`.
    pub fn times_elem(&self, c: &R) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|a| a.times(c)).collect(),
        }
    }

    /// The operator `theta = x d/dx`: coefficient `n` is multiplied by `n`.
    pub fn theta(&self) -> Self {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c.scaled(&rat(n as i64)))
                .collect(),
        }
    }

    /// Substitutes `x -> x^m`, keeping the order.
    pub fn dilate(&self, m: usize) -> Self {
        assert!(m >= 1);
        let n = self.order();
        let mut coeffs = vec![self.coeffs[0].zero_like(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if i * m > n {
                break;
            }
            coeffs[i * m] = c.clone();
        }
        Series { coeffs }
    }

    /// `exp(self)` via `f' = a' f`, i.e. `n f_n = sum_{j=1}^n j a_j f_{n-j}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero_element() {
            return Err(Error::ExpConstantTerm);
        }
        let n = self.order();
        let mut out: Vec<R> = Vec::with_capacity(n + 1);
        out.push(self.coeffs[0].one_like());
        for k in 1..=n {
            let mut acc = self.coeffs[0].zero_like();
            for j in 1..=k {
                let a = &self.coeffs[j];
                if !a.is_zero_element() {
                    acc = acc.plus(&a.times(&out[k - j]).scaled(&rat(j as i64)));
                }
            }
            out.push(acc.scaled(&Rational::new(1.into(), (k as i64).into())));
        }
        Ok(Series { coeffs: out })
    }

    /// `log(self)` for constant term 1, via `a' = g' a`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one_element() {
            return Err(Error::LogConstantTerm);
        }
        let n = self.order();
        let mut out: Vec<R> = Vec::with_capacity(n + 1);
        out.push(self.coeffs[0].zero_like());
        for k in 1..=n {
            // k g_k = k a_k - sum_{j=1}^{k-1} j g_j a_{k-j}
            let mut acc = self.coeffs[k].scaled(&rat(k as i64));
            for (j, g) in out.iter().enumerate().take(k).skip(1) {
                let a = &self.coeffs[k - j];
                if !a.is_zero_element() {
                    acc = acc.minus(&g.times(a).scaled(&rat(j as i64)));
                }
            }
            out.push(acc.scaled(&Rational::new(1.into(), (k as i64).into())));
        }
        Ok(Series { coeffs: out })
    }

    pub fn pow(&self, exp: usize) -> Self {
        CoefficientRing::pow(self, exp)
    }
}

impl QSeries {
    pub fn zero(order: usize) -> Self {
        Series::constant(order, Rational::zero())
    }

    pub fn one(order: usize) -> Self {
        Series::constant(order, rat(1))
    }

    /// `1 + c x^e`.
    pub fn binomial_factor(order: usize, e: usize, c: Rational) -> Self {
        let mut s = Self::one(order);
        if e <= order {
            let v = &s.coeffs[e] + c;
            s.coeffs[e] = v;
        }
        s
    }
}

/// Exact truncated product of `factors`, each given as `(m, F_m)` with
/// `F_m - 1` supported in degrees `>= m`. Consumption stops at the first
/// `m` above the order, so an infinite stream is fine as long as `m` is
/// nondecreasing.
pub fn product_of_factors<R, I>(order: usize, one: &R, factors: I) -> Result<Series<R>>
where
    R: CoefficientRing,
    I: IntoIterator<Item = (usize, Series<R>)>,
{
    let mut acc = Series::one_like_elem(order, one);
    for (m, factor) in factors {
        if m > order {
            break;
        }
        if factor.order() != order {
            return Err(Error::OrderMismatch {
                left: order,
                right: factor.order(),
            });
        }
        let lead_ok = factor.coeffs[0].is_one_element();
        let gap_ok = factor.coeffs[1..m.max(1)]
            .iter()
            .all(|c| c.is_zero_element());
        if m == 0 || !lead_ok || !gap_ok {
            return Err(Error::FactorDegree { m });
        }
        acc = acc.try_mul(&factor)?;
    }
    Ok(acc)
}

impl<R: CoefficientRing> CoefficientRing for Series<R> {
    fn zero_like(&self) -> Self {
        Series::zero_like_elem(self.order(), &self.coeffs[0])
    }

    fn one_like(&self) -> Self {
        Series::one_like_elem(self.order(), &self.coeffs[0])
    }

    fn is_zero_element(&self) -> bool {
        self.is_zero()
    }

    fn plus(&self, other: &Self) -> Self {
        self.try_add(other).expect("series order mismatch")
    }

    fn minus(&self, other: &Self) -> Self {
        self.try_sub(other).expect("series order mismatch")
    }

    fn times(&self, other: &Self) -> Self {
        self.try_mul(other).expect("series order mismatch")
    }

    fn negated(&self) -> Self {
        Series::negated(self)
    }

    fn scaled(&self, c: &Rational) -> Self {
        Series::scaled(self, c)
    }

    fn try_inverse(&self) -> Option<Self> {
        Series::try_inverse(self).ok()
    }
}

impl<R: CoefficientRing> Add for &Series<R> {
    type Output = Series<R>;
    fn add(self, rhs: Self) -> Series<R> {
        self.plus(rhs)
    }
}

impl<R: CoefficientRing> Sub for &Series<R> {
    type Output = Series<R>;
    fn sub(self, rhs: Self) -> Series<R> {
        self.minus(rhs)
    }
}

impl<R: CoefficientRing> Mul for &Series<R> {
    type Output = Series<R>;
    fn mul(self, rhs: Self) -> Series<R> {
        self.times(rhs)
    }
}

impl<R: CoefficientRing> Neg for &Series<R> {
    type Output = Series<R>;
    fn neg(self) -> Series<R> {
        Series::negated(self)
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesWire {
    order: usize,
    coeffs: Vec<[String; 2]>,
}

impl Serialize for QSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesWire {
            order: self.order(),
            coeffs: self.coeffs.iter().map(rational_pair).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = SeriesWire::deserialize(deserializer)?;
        if wire.coeffs.len() != wire.order + 1 {
            return Err(D::Error::custom(format!(
                "order {} needs {} coefficients, found {}",
                wire.order,
                wire.order + 1,
                wire.coeffs.len()
            )));
        }
        let coeffs = wire
            .coeffs
            .iter()
            .map(|[n, d]| {
                rational_from_pair(n, d)
                    .ok_or_else(|| D::Error::custom(format!("bad rational {n}/{d}")))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Series { coeffs })
    }
}
