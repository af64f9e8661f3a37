//! Cyclotomic polynomials and the quantities in Lehmer's derivative formula.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{
    bernoulli_table, divisors, factorial, jordan_totient, mobius, rat, stirling_first, Rational,
};
use crate::error::{Error, Result};
use crate::series::{QSeries, Series};

/// Dense integer polynomial, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        Self::new(vec![BigInt::one()])
    }

    /// `x^d - 1`.
    pub fn x_pow_minus_one(d: usize) -> Self {
        let mut c = vec![BigInt::zero(); d + 1];
        c[0] = -BigInt::one();
        c[d] = BigInt::one();
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Exact quotient by a monic-or-unit-led divisor; `None` if the division
    /// leaves a remainder or is not exact over the integers.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.degree()?;
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() < divisor.coeffs.len() {
            return if self.is_zero() {
                Some(self.clone())
            } else {
                None
            };
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            if !(top % lead).is_zero() {
                return None;
            }
            let q = top / lead;
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * c;
            }
            quot[i] = q;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(Self::new(quot))
        } else {
            None
        }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Coefficients of `P(1 + u)` in `u`, by Horner's rule on `x = 1 + u`.
    pub fn taylor_shift_one(&self) -> Vec<BigInt> {
        let mut acc: Vec<BigInt> = Vec::new();
        for c in self.coeffs.iter().rev() {
            // acc <- acc * (1 + u) + c
            let mut next = vec![BigInt::zero(); acc.len() + 1];
            for (i, a) in acc.iter().enumerate() {
                next[i] += a;
                next[i + 1] += a;
            }
            next[0] += c;
            acc = next;
        }
        while acc.len() > 1 && acc.last().is_some_and(|c| c.is_zero()) {
            acc.pop();
        }
        acc
    }
}

/// `Phi_n(x) = prod_{d | n} (x^d - 1)^{mu(n/d)}`.
pub fn cyclotomic(n: usize) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "cyclotomic index must be >= 1".into(),
        ));
    }
    let mut numer = IntPolynomial::one();
    let mut denom = IntPolynomial::one();
    for d in divisors(n as u64) {
        match mobius(n as u64 / d) {
            1 => numer = numer.mul(&IntPolynomial::x_pow_minus_one(d as usize)),
            -1 => denom = denom.mul(&IntPolynomial::x_pow_minus_one(d as usize)),
            _ => {}
        }
    }
    Ok(numer
        .div_exact(&denom)
        .expect("the Mobius product of x^d - 1 is a polynomial"))
}

fn require_lehmer(n: usize, k: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParameter("n must be >= 2".into()));
    }
    if k == 0 {
        return Err(Error::InvalidParameter("k must be >= 1".into()));
    }
    Ok(())
}

/// `Phi_n^{(k)}(1) / Phi_n(1)` read from the Taylor coefficients of
/// `Phi_n(1 + u)`.
pub fn phi_derivative_ratio_oracle(n: usize, k: usize) -> Result<Rational> {
    require_lehmer(n, k)?;
    let shifted = cyclotomic(n)?.taylor_shift_one();
    let ck = shifted.get(k).cloned().unwrap_or_default();
    Ok(Rational::new(ck * factorial(k as u64), shifted[0].clone()))
}

/// `d^k/dx^k log Phi_n(x)` at `x = 1`, via the series logarithm of
/// `Phi_n(1 + u) / Phi_n(1)`.
pub fn log_phi_derivative(n: usize, k: usize) -> Result<Rational> {
    require_lehmer(n, k)?;
    let shifted = cyclotomic(n)?.taylor_shift_one();
    let c0 = Rational::from_integer(shifted[0].clone());
    let s: QSeries = Series::from_fn(k, |i| {
        Rational::from_integer(shifted.get(i).cloned().unwrap_or_default()) / &c0
    });
    let l = s.log()?;
    Ok(l.coeff(k) * Rational::from_integer(factorial(k as u64)))
}

/// `varsigma_k(n) = -(1/(k-1)!) sum_{m=1}^k (B_m / m) s(k,m) J_m(n)`,
/// with `B_1 = +1/2` and signed Stirling numbers.
pub fn varsigma(k: usize, n: usize) -> Result<Rational> {
    require_lehmer(n, k)?;
    let bern = bernoulli_table(k);
    let mut acc = Rational::zero();
    for (m, b) in bern.iter().enumerate().skip(1) {
        let s = stirling_first(k, m as i64);
        if s.is_zero() || b.is_zero() {
            continue;
        }
        acc += b / rat(m as i64) * Rational::from_integer(s * jordan_totient(m as u32, n as u64));
    }
    Ok(-acc / Rational::from_integer(factorial(k as u64 - 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1).unwrap(), IntPolynomial::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic(2).unwrap(), IntPolynomial::from_i64(&[1, 1]));
        assert_eq!(cyclotomic(3).unwrap(), IntPolynomial::from_i64(&[1, 1, 1]));
        assert_eq!(cyclotomic(6).unwrap(), IntPolynomial::from_i64(&[1, -1, 1]));
        assert_eq!(cyclotomic(6).unwrap().eval(&BigInt::one()), BigInt::one());
        assert_eq!(
            cyclotomic(12).unwrap(),
            IntPolynomial::from_i64(&[1, 0, -1, 0, 1])
        );
    }

    #[test]
    fn product_over_divisors_is_x_n_minus_one() {
        for n in 1..=40 {
            let prod = divisors(n as u64)
                .into_iter()
                .fold(IntPolynomial::one(), |acc, d| {
                    acc.mul(&cyclotomic(d as usize).unwrap())
                });
            assert_eq!(prod, IntPolynomial::x_pow_minus_one(n));
        }
    }

    #[test]
    fn taylor_shift() {
        // x^2 + x + 1 at x = 1 + u is 3 + 3u + u^2
        let p = IntPolynomial::from_i64(&[1, 1, 1]);
        let s: Vec<i64> = p
            .taylor_shift_one()
            .iter()
            .map(|c| c.try_into().unwrap())
            .collect();
        assert_eq!(s, vec![3, 3, 1]);
    }

    #[test]
    fn derivative_ratios() {
        assert_eq!(phi_derivative_ratio_oracle(3, 1).unwrap(), rat(1));
        assert_eq!(phi_derivative_ratio_oracle(2, 1).unwrap(), ratio(1, 2));
        assert_eq!(phi_derivative_ratio_oracle(2, 2).unwrap(), rat(0));
        assert!(phi_derivative_ratio_oracle(1, 1).is_err());
        assert!(varsigma(1, 1).is_err());
    }

    #[test]
    fn log_derivative_matches_varsigma() {
        for n in 2..=30 {
            for k in 1..=5 {
                let lhs = log_phi_derivative(n, k).unwrap();
                let rhs =
                    -Rational::from_integer(factorial(k as u64 - 1)) * varsigma(k, n).unwrap();
                assert_eq!(lhs, rhs, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn exact_division_rejects_remainder() {
        let p = IntPolynomial::from_i64(&[1, 0, 1]);
        assert!(p.div_exact(&IntPolynomial::from_i64(&[1, 1])).is_none());
    }
}
