//! Exact scalars and the classical number-theoretic tables.
//!
//! Everything here is a pure function of its arguments. Integers that can
//! grow (Stirling numbers, Jordan totients, divisor sums) are returned as
//! [`BigInt`]; small-valued arithmetic functions use machine integers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact arbitrary-precision rational, always in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num/den`; panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Value of the character (−3/·) on a positive integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CharacterValue(i8);

impl CharacterValue {
    pub fn value(self) -> i8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl From<CharacterValue> for i64 {
    fn from(c: CharacterValue) -> i64 {
        c.0 as i64
    }
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Bernoulli numbers `B_0..=B_m` with the convention `B_1 = +1/2`.
pub fn bernoulli_table(m: usize) -> Vec<Rational> {
    let mut table: Vec<Rational> = Vec::with_capacity(m + 1);
    for n in 0..=m {
        if n == 0 {
            table.push(Rational::one());
            continue;
        }
        // sum_{j=0}^{n} C(n+1, j) B_j = 0, run with B_1 = -1/2
        let mut acc = Rational::zero();
        for (j, b) in table.iter().enumerate() {
            let b = if j == 1 { -b } else { b.clone() };
            acc += Rational::from_integer(binomial(n as u64 + 1, j as u64)) * b;
        }
        let b_n = -acc / rat(n as i64 + 1);
        table.push(if n == 1 { -b_n } else { b_n });
    }
    table
}

/// `B_m` with `B_1 = +1/2`.
pub fn bernoulli(m: usize) -> Rational {
    bernoulli_table(m).pop().expect("table is nonempty")
}

/// Coefficients `c_0..=c_deg` of `prod (x - r)` over the given roots.
fn expand_roots(roots: impl IntoIterator<Item = i64>) -> Vec<BigInt> {
    let mut poly = vec![BigInt::one()];
    for r in roots {
        let mut next = vec![BigInt::zero(); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * BigInt::from(r);
        }
        poly = next;
    }
    poly
}

/// Signed Stirling number of the first kind `s(k, m)`, read off the falling
/// factorial `x(x-1)...(x-k+1)`. Zero outside `1 <= m <= k`.
pub fn stirling_first(k: usize, m: i64) -> BigInt {
    if k == 0 || m < 1 || m > k as i64 {
        return BigInt::zero();
    }
    let poly = expand_roots(0..k as i64);
    poly[m as usize].clone()
}

/// Central factorial number `t(j, l)`: the coefficient of `x^{l-1}` in
/// `prod_{|i| < j} (x - i)`. Zero outside `1 <= l <= 2j`.
pub fn central_factorial(j: usize, l: i64) -> BigInt {
    if j == 0 || l < 1 || l > 2 * j as i64 {
        return BigInt::zero();
    }
    let span = j as i64 - 1;
    let poly = expand_roots(-span..=span);
    poly[(l - 1) as usize].clone()
}

/// Prime factorization by trial division, as `(prime, exponent)` pairs in
/// increasing prime order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Jordan totient `J_m(n) = n^m prod_{p | n} (1 - p^{-m})`.
pub fn jordan_totient(m: u32, n: u64) -> BigInt {
    factorize(n).into_iter().fold(BigInt::one(), |acc, (p, e)| {
        let p = BigInt::from(p);
        acc * (p.pow(m * e) - p.pow(m * (e - 1)))
    })
}

/// The character `(-3/d)` for positive `d`.
pub fn chi_minus3(d: u64) -> CharacterValue {
    CharacterValue(match d % 3 {
        0 => 0,
        1 => 1,
        _ => -1,
    })
}

/// Divisor power sum `sigma_l(n)`.
pub fn sigma(l: u32, n: u64) -> BigInt {
    divisors(n)
        .into_iter()
        .map(|d| BigInt::from(d).pow(l))
        .sum()
}

pub fn mobius(n: u64) -> i8 {
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Renders a rational as a `[num, den]` pair of decimal strings.
pub fn rational_pair(r: &Rational) -> [String; 2] {
    [r.numer().to_string(), r.denom().to_string()]
}

/// Parses decimal numerator and denominator strings.
pub fn rational_from_pair(num: &str, den: &str) -> Option<Rational> {
    let n: BigInt = num.trim().parse().ok()?;
    let d: BigInt = den.trim().parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

/// Parses `"p"`, `"-p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        Some((n, d)) => rational_from_pair(n, d),
        None => rational_from_pair(s, "1"),
    }
}

/// `p/q`, or just `p` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
