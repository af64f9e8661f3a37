//! q-expansions defined directly by their coefficients or by short lacunary
//! sums: Eisenstein series, divisor-sum series, the `F_j`, `G_j`, `H_j`,
//! `g_k` families, and the theta numerators and denominators.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{
    bernoulli, central_factorial, chi_minus3, divisors, factorial, rat, sigma, Rational,
};
use crate::error::{Error, Result};
use crate::series::{QSeries, Series};

fn int(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

fn require_positive(name: &str, v: usize) -> Result<()> {
    if v == 0 {
        Err(Error::InvalidParameter(format!("{name} must be >= 1")))
    } else {
        Ok(())
    }
}

/// `E_{2k} = 1 - (4k / B_{2k}) sum sigma_{2k-1}(n) q^n`.
pub fn eisenstein(k: usize, order: usize) -> Result<QSeries> {
    require_positive("k", k)?;
    let scale = -(rat(4 * k as i64) / bernoulli(2 * k));
    Ok(Series::from_fn(order, |n| {
        if n == 0 {
            rat(1)
        } else {
            &scale * int(sigma(2 * k as u32 - 1, n as u64))
        }
    }))
}

/// `L_l = sum sigma_{l-1}(n) q^n`.
pub fn l_series(l: usize, order: usize) -> Result<QSeries> {
    require_positive("l", l)?;
    Ok(Series::from_fn(order, |n| {
        if n == 0 {
            rat(0)
        } else {
            int(sigma(l as u32 - 1, n as u64))
        }
    }))
}

/// `F_1 = E_2 / 24`, `F_j = -sum n^{j-1} sigma_1(n) q^n` for `j >= 2`.
pub fn f_series(j: usize, order: usize) -> Result<QSeries> {
    require_positive("j", j)?;
    if j == 1 {
        return Ok(eisenstein(1, order)?.scaled(&Rational::new(1.into(), 24.into())));
    }
    Ok(Series::from_fn(order, |n| {
        if n == 0 {
            rat(0)
        } else {
            -int(BigInt::from(n).pow(j as u32 - 1) * sigma(1, n as u64))
        }
    }))
}

/// The `G_j` family built from the character `(-3/.)`.
pub fn capital_g_series(j: usize, order: usize) -> Result<QSeries> {
    require_positive("j", j)?;
    Ok(Series::from_fn(order, |n| {
        if n == 0 {
            return if j == 1 {
                Rational::new(1.into(), 6.into())
            } else {
                rat(0)
            };
        }
        let n64 = n as u64;
        let ds = divisors(n64);
        let c: BigInt = if j == 1 {
            ds.iter()
                .map(|&d| BigInt::from(chi_minus3(d).value()))
                .sum()
        } else if j.is_multiple_of(2) {
            -ds.iter()
                .filter(|&&d| !(n64 / d).is_multiple_of(3))
                .map(|&d| BigInt::from(d).pow(j as u32 - 1))
                .sum::<BigInt>()
        } else {
            ds.iter()
                .map(|&d| {
                    BigInt::from(chi_minus3(n64 / d).value()) * BigInt::from(d).pow(j as u32 - 1)
                })
                .sum()
        };
        int(c)
    }))
}

/// `H_j = ((-1)^{j-1} (j-1)! / (2j-1)!) sum_{l=1}^{2j} t(j,l) L_l`.
pub fn h_series(j: usize, order: usize) -> Result<QSeries> {
    require_positive("j", j)?;
    let sign = if j % 2 == 1 { 1 } else { -1 };
    let prefactor = Rational::new(
        BigInt::from(sign) * factorial(j as u64 - 1),
        factorial(2 * j as u64 - 1),
    );
    let table: Vec<(u32, BigInt)> = (1..=2 * j as i64)
        .map(|l| (l as u32, central_factorial(j, l)))
        .filter(|(_, t)| !t.is_zero())
        .collect();
    Ok(Series::from_fn(order, |n| {
        if n == 0 {
            return rat(0);
        }
        let s: BigInt = table.iter().map(|(l, t)| t * sigma(l - 1, n as u64)).sum();
        &prefactor * int(s)
    }))
}

/// `H_{j,t,r}(a; q) = (-1)^{j-1} (j-1)! sum_{m>=1} q^{rjm} / (1 + a q^m + q^{2m})^{tj}`.
pub fn h_ktr_series(j: usize, t: usize, r: usize, a: &Rational, order: usize) -> Result<QSeries> {
    require_positive("j", j)?;
    require_positive("t", t)?;
    require_positive("r", r)?;
    let mut sum = QSeries::zero(order);
    let step = r * j;
    let mut m = 1;
    while step * m <= order {
        let mut base = QSeries::binomial_factor(order, m, a.clone());
        if 2 * m <= order {
            base.set_coeff(2 * m, base.coeff(2 * m) + rat(1));
        }
        let denom = base.pow(t * j);
        let numer = QSeries::monomial(order, step * m, rat(1));
        sum = &sum + &numer.try_div(&denom)?;
        m += 1;
    }
    let sign = if j % 2 == 1 { 1 } else { -1 };
    Ok(sum.scaled(&int(BigInt::from(sign) * factorial(j as u64 - 1))))
}

/// `g_k = sum_n n^{-k} (sum_{d | n} (-1)^{d-1} d^{2k-1}) q^n`.
pub fn g_series(k: usize, order: usize) -> Result<QSeries> {
    require_positive("k", k)?;
    Ok(Series::from_fn(order, |n| {
        if n == 0 {
            return rat(0);
        }
        let s: BigInt = divisors(n as u64)
            .into_iter()
            .map(|d| {
                let p = BigInt::from(d).pow(2 * k as u32 - 1);
                if d % 2 == 1 {
                    p
                } else {
                    -p
                }
            })
            .sum();
        Rational::new(s, BigInt::from(n).pow(k as u32))
    }))
}

/// Generalized pentagonal exponents `n(3n+1)/2 <= order` with their `n`.
fn pentagonal_terms(order: usize) -> Vec<(i64, usize)> {
    let mut out = Vec::new();
    let mut n: i64 = 0;
    loop {
        let mut any = false;
        for cand in if n == 0 { vec![0] } else { vec![n, -n] } {
            let e = cand * (3 * cand + 1) / 2;
            if e as usize <= order {
                out.push((cand, e as usize));
                any = true;
            }
        }
        if !any {
            break;
        }
        n += 1;
    }
    out
}

fn sign_of(n: i64) -> i64 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `sum_{n in Z} (-1)^n q^{n(3n+1)/2}`.
pub fn pentagonal_theta(order: usize) -> QSeries {
    v_numerator(0, order)
}

/// `sum_{n in Z} (-1)^n (6n+1)^k q^{n(3n+1)/2}`.
pub fn v_numerator(k: usize, order: usize) -> QSeries {
    let mut s = QSeries::zero(order);
    for (n, e) in pentagonal_terms(order) {
        let c = BigInt::from(sign_of(n)) * BigInt::from(6 * n + 1).pow(k as u32);
        s.set_coeff(e, s.coeff(e) + int(c));
    }
    s
}

fn triangular_sum(order: usize, power: u32) -> QSeries {
    let mut s = QSeries::zero(order);
    let mut n: i64 = 0;
    while (n * (n + 1) / 2) as usize <= order {
        let e = (n * (n + 1) / 2) as usize;
        let c = BigInt::from(sign_of(n)) * BigInt::from(2 * n + 1).pow(power);
        s.set_coeff(e, s.coeff(e) + int(c));
        n += 1;
    }
    s
}

/// `sum_{n>=0} (-1)^n (2n+1)^{2k+1} q^{n(n+1)/2}`.
pub fn u_numerator(k: usize, order: usize) -> QSeries {
    triangular_sum(order, 2 * k as u32 + 1)
}

/// `sum_{n>=0} (-1)^n (2n+1) q^{n(n+1)/2}`.
pub fn u_denominator(order: usize) -> QSeries {
    triangular_sum(order, 1)
}

/// `sum_n (sum_{d | n} (-3/d) d^l) q^n`; a level-3 generator.
pub fn chi_twisted_divisor_series(l: u32, order: usize) -> QSeries {
    Series::from_fn(order, |n| {
        if n == 0 {
            return rat(0);
        }
        let s: BigInt = divisors(n as u64)
            .into_iter()
            .map(|d| BigInt::from(chi_minus3(d).value()) * BigInt::from(d).pow(l))
            .sum();
        int(s)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    fn q(coeffs: &[i64]) -> QSeries {
        Series::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn eisenstein_low_terms() {
        assert_eq!(eisenstein(1, 2).unwrap(), q(&[1, -24, -72]));
        assert_eq!(eisenstein(2, 1).unwrap().coeff(1), &rat(240));
        assert_eq!(eisenstein(3, 1).unwrap().coeff(1), &rat(-504));
        for k in 1..6 {
            assert_eq!(eisenstein(k, 3).unwrap().coeff(0), &rat(1));
        }
        assert!(eisenstein(0, 3).is_err());
    }

    #[test]
    fn divisor_series() {
        assert_eq!(l_series(2, 3).unwrap(), q(&[0, 1, 3, 4]));
        let l1 = l_series(1, 12).unwrap();
        assert_eq!(l1.coeff(12), &rat(6));
        let e2 = eisenstein(1, 50).unwrap();
        let rebuilt = (&QSeries::one(50) - &e2).scaled(&ratio(1, 24));
        assert_eq!(l_series(2, 50).unwrap(), rebuilt);
    }

    #[test]
    fn f_family() {
        assert_eq!(f_series(1, 0).unwrap().coeff(0), &ratio(1, 24));
        assert_eq!(f_series(2, 2).unwrap(), q(&[0, -1, -6]));
        let f1 = f_series(1, 30).unwrap();
        let mut th = f1.clone();
        for j in 2..=8 {
            th = th.theta();
            assert_eq!(f_series(j, 30).unwrap(), th, "j={j}");
        }
    }

    #[test]
    fn g_family() {
        let g1 = capital_g_series(1, 1).unwrap();
        assert_eq!(g1.coeffs(), &[ratio(1, 6), rat(1)]);
        assert_eq!(capital_g_series(2, 1).unwrap().coeff(1), &rat(-1));
        let n = 50;
        let g1 = capital_g_series(1, n).unwrap();
        let g2 = capital_g_series(2, n).unwrap();
        let lhs = (&(&g1 * &g1) + &g2).scaled(&rat(36));
        assert_eq!(lhs, eisenstein(1, n).unwrap());
    }

    #[test]
    fn h_family() {
        assert_eq!(h_series(1, 30).unwrap(), l_series(2, 30).unwrap());
        assert_eq!(h_series(2, 2).unwrap().coeff(2), &rat(-1));
        let a = rat(-2);
        assert_eq!(
            h_ktr_series(1, 1, 1, &a, 30).unwrap(),
            l_series(2, 30).unwrap()
        );
        for (t, r, a) in [(1, 1, 0), (2, 3, 1), (3, 2, -1)] {
            let s = h_ktr_series(2, t, r, &rat(a), 10).unwrap();
            assert_eq!(s.coeff(0), &rat(0));
        }
    }

    #[test]
    fn h_ktr_a_zero_against_direct_expansion() {
        // q^m / (1 + q^{2m}) = sum_{i>=0} (-1)^i q^{m(2i+1)}
        let n = 24;
        let s = h_ktr_series(1, 1, 1, &rat(0), n).unwrap();
        let direct = Series::from_fn(n, |e| {
            if e == 0 {
                return rat(0);
            }
            let c: i64 = divisors(e as u64)
                .into_iter()
                .filter(|&d| (e as u64 / d) % 2 == 1)
                .map(|d| {
                    if ((e as u64 / d) / 2).is_multiple_of(2) {
                        1
                    } else {
                        -1
                    }
                })
                .sum();
            rat(c)
        });
        assert_eq!(s, direct);
    }

    #[test]
    fn g_k_values() {
        assert_eq!(
            g_series(1, 2).unwrap().coeffs(),
            &[rat(0), rat(1), ratio(-1, 2)]
        );
        assert_eq!(g_series(1, 3).unwrap().coeff(3), &ratio(4, 3));
        let g3 = g_series(3, 20).unwrap();
        for n in 1..=20usize {
            let scaled = g3.coeff(n) * Rational::from_integer(BigInt::from(n).pow(3));
            assert!(scaled.is_integer());
        }
    }

    #[test]
    fn lacunary_sums() {
        assert_eq!(pentagonal_theta(7), q(&[1, -1, -1, 0, 0, 1, 0, 1]));
        assert_eq!(v_numerator(1, 2), q(&[1, 5, -7]));
        assert_eq!(u_denominator(6), q(&[1, -3, 0, 5, 0, 0, -7]));
        assert_eq!(u_numerator(1, 3), q(&[1, -27, 0, 125]));
    }

    #[test]
    fn twisted_series() {
        let s = chi_twisted_divisor_series(0, 6);
        assert_eq!(s, q(&[0, 1, 0, 1, 1, 0, 0]));
    }
}
