//! Brute-force constructions used as the independent side of each identity
//! check. Nothing in here touches Bell polynomials or partition traces; the
//! series come straight from nested sums, truncated products and partition
//! enumeration.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{factorial, rat, Rational};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_distinct_partitions, srp};
use crate::series::{product_of_factors, QSeries, Series};

fn require_positive(name: &str, v: usize) -> Result<()> {
    if v == 0 {
        Err(Error::InvalidParameter(format!("{name} must be >= 1")))
    } else {
        Ok(())
    }
}

/// `(-1)^{j-1} (j-1)! sum_{m>=1} q^{jm} / (1 - q^m)^{2j}`, expanded by
/// series division term by term.
pub fn h_inner_oracle(j: usize, order: usize) -> Result<QSeries> {
    require_positive("j", j)?;
    let mut sum = QSeries::zero(order);
    let mut m = 1;
    while j * m <= order {
        let denom = QSeries::binomial_factor(order, m, rat(-1)).pow(2 * j);
        let numer = QSeries::monomial(order, j * m, rat(1));
        sum = &sum + &numer.try_div(&denom)?;
        m += 1;
    }
    let sign = if j % 2 == 1 {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    Ok(sum.scaled(&Rational::from_integer(sign * factorial(j as u64 - 1))))
}

/// Sums `prod_i factor(m_i)` over `0 < m_1 < ... < m_k` with
/// `weight * sum m_i <= order`; `factor(m)` must have valuation
/// `weight * m`.
struct NestedSum<'a> {
    order: usize,
    weight: usize,
    factor: &'a dyn Fn(usize) -> Result<QSeries>,
    cache: HashMap<usize, QSeries>,
}

impl NestedSum<'_> {
    fn factor(&mut self, m: usize) -> Result<QSeries> {
        if let Some(f) = self.cache.get(&m) {
            return Ok(f.clone());
        }
        let f = (self.factor)(m)?;
        self.cache.insert(m, f.clone());
        Ok(f)
    }

    fn run(&mut self, depth: usize) -> Result<QSeries> {
        let mut out = QSeries::zero(self.order);
        let acc = QSeries::one(self.order);
        self.descend(depth, 1, 0, &acc, &mut out)?;
        Ok(out)
    }

    fn descend(
        &mut self,
        left: usize,
        min_m: usize,
        used: usize,
        acc: &QSeries,
        out: &mut QSeries,
    ) -> Result<()> {
        if left == 0 {
            *out = &*out + acc;
            return Ok(());
        }
        let mut m = min_m;
        // the cheapest completion uses m, m+1, ..., m+left-1
        while used + self.weight * (left * m + left * (left - 1) / 2) <= self.order {
            let f = self.factor(m)?;
            let next = acc.try_mul(&f)?;
            self.descend(left - 1, m + 1, used + self.weight * m, &next, out)?;
            m += 1;
        }
        Ok(())
    }
}

/// MacMahon's `A_k(q)`: the nested sum of `prod q^{m_i} / (1 - q^{m_i})^2`.
pub fn macmahon_oracle(k: usize, order: usize) -> Result<QSeries> {
    require_positive("k", k)?;
    let factor = |m: usize| -> Result<QSeries> {
        let denom = QSeries::binomial_factor(order, m, rat(-1)).pow(2);
        QSeries::monomial(order, m, rat(1)).try_div(&denom)
    };
    NestedSum {
        order,
        weight: 1,
        factor: &factor,
        cache: HashMap::new(),
    }
    .run(k)
}

/// `A_{k,t,r}(a; q)`: the nested sum of
/// `prod q^{r m_i} / (1 + a q^{m_i} + q^{2 m_i})^t`.
pub fn a_ktr_oracle(k: usize, t: usize, r: usize, a: &Rational, order: usize) -> Result<QSeries> {
    require_positive("k", k)?;
    require_positive("t", t)?;
    require_positive("r", r)?;
    let factor = |m: usize| -> Result<QSeries> {
        let mut base = QSeries::binomial_factor(order, m, a.clone());
        if 2 * m <= order {
            base.set_coeff(2 * m, base.coeff(2 * m) + rat(1));
        }
        QSeries::monomial(order, r * m, rat(1)).try_div(&base.pow(t))
    };
    NestedSum {
        order,
        weight: r,
        factor: &factor,
        cache: HashMap::new(),
    }
    .run(k)
}

/// `sum_n s_k(n) q^n` with `s_k(n) = sum_{lambda in D_n} srp(lambda)^k`,
/// by enumerating distinct partitions.
pub fn srp_moment_oracle(k: usize, order: usize) -> Result<QSeries> {
    require_positive("k", k)?;
    Ok(Series::from_fn(order, |n| {
        if n == 0 {
            return Rational::zero();
        }
        enumerate_distinct_partitions(n)
            .map(|lambda| num_traits::pow(srp(&lambda), k))
            .sum()
    }))
}

/// `prod_{m>=1} (1 + q^m)`.
pub fn distinct_parts_product(order: usize) -> QSeries {
    product_of_factors(
        order,
        &rat(1),
        (1..).map(|m| (m, QSeries::binomial_factor(order, m, rat(1)))),
    )
    .expect("factors are well formed")
}

/// `prod_{m>=1} (1 - q^m)^e`.
pub fn euler_product_power(order: usize, e: usize) -> QSeries {
    product_of_factors(
        order,
        &rat(1),
        (1..).map(|m| (m, QSeries::binomial_factor(order, m, rat(-1)).pow(e))),
    )
    .expect("factors are well formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;
    use crate::zoo::named::{h_series, l_series, pentagonal_theta, u_denominator};

    fn q(coeffs: &[i64]) -> QSeries {
        Series::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn h_sides_agree() {
        for j in 1..=5 {
            assert_eq!(
                h_series(j, 40).unwrap(),
                h_inner_oracle(j, 40).unwrap(),
                "j={j}"
            );
        }
    }

    #[test]
    fn macmahon_low_terms() {
        assert_eq!(macmahon_oracle(1, 3).unwrap(), q(&[0, 1, 3, 4]));
        assert_eq!(macmahon_oracle(1, 30).unwrap(), l_series(2, 30).unwrap());
        for k in 1..=4 {
            let a = macmahon_oracle(k, 20).unwrap();
            assert_eq!(a.valuation(), Some(k * (k + 1) / 2));
        }
        assert_eq!(macmahon_oracle(2, 3).unwrap().coeff(3), &rat(1));
    }

    #[test]
    fn a_ktr_degenerations() {
        assert_eq!(
            a_ktr_oracle(1, 1, 1, &rat(-2), 3).unwrap(),
            q(&[0, 1, 3, 4])
        );
        for k in 1..=3 {
            assert_eq!(
                a_ktr_oracle(k, 1, 1, &rat(-2), 25).unwrap(),
                macmahon_oracle(k, 25).unwrap()
            );
        }
        for (k, r) in [(1, 2), (2, 3), (3, 1)] {
            let s = a_ktr_oracle(k, 2, r, &rat(1), 30).unwrap();
            assert_eq!(s.valuation(), Some(r * k * (k + 1) / 2));
        }
    }

    #[test]
    fn srp_moments() {
        let s1 = srp_moment_oracle(1, 3).unwrap();
        assert_eq!(s1.coeff(1), &rat(1));
        assert_eq!(s1.coeff(3), &ratio(11, 6));
        let s2 = srp_moment_oracle(2, 3).unwrap();
        assert_eq!(s2.coeff(3), &ratio(85, 36));
    }

    #[test]
    fn products() {
        assert_eq!(distinct_parts_product(5), q(&[1, 1, 1, 2, 2, 3]));
        assert_eq!(euler_product_power(60, 1), pentagonal_theta(60));
        assert_eq!(euler_product_power(60, 3), u_denominator(60));
    }
}
