//! Partitions in frequency notation, their enumeration, and partition traces.

use std::fmt;

use num_traits::{One as _, Zero};

use crate::arith::{bernoulli_table, factorial, rat, Rational};
use crate::error::{Error, Result};
use crate::ring::CoefficientRing;

/// A partition of `k` stored by multiplicities: `multiplicities[j - 1]` is
/// the number of parts equal to `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    multiplicities: Vec<u32>,
}

impl Partition {
    /// From parts in any order. Panics on a zero part.
    pub fn from_parts(parts: &[usize]) -> Self {
        let k: usize = parts.iter().sum();
        let mut multiplicities = vec![0u32; k];
        for &p in parts {
            assert!(p >= 1, "parts are positive");
            multiplicities[p - 1] += 1;
        }
        Partition { multiplicities }
    }

    /// From `m_1, m_2, ...`; trailing entries may be zero.
    pub fn from_multiplicities(mults: &[u32]) -> Self {
        let k: usize = mults
            .iter()
            .enumerate()
            .map(|(i, &m)| (i + 1) * m as usize)
            .sum();
        let mut multiplicities = vec![0u32; k];
        for (i, &m) in mults.iter().enumerate().take(k) {
            multiplicities[i] = m;
        }
        Partition { multiplicities }
    }

    /// The integer being partitioned.
    pub fn size(&self) -> usize {
        self.multiplicities.len()
    }

    /// Number of parts, `l(lambda)`.
    pub fn length(&self) -> usize {
        self.multiplicities.iter().map(|&m| m as usize).sum()
    }

    /// Multiplicity of the part `j` (zero when `j` is out of range).
    pub fn multiplicity(&self, j: usize) -> u32 {
        if j == 0 {
            0
        } else {
            self.multiplicities.get(j - 1).copied().unwrap_or(0)
        }
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    /// `(j, m_j)` for every part size actually present.
    pub fn frequencies(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.multiplicities
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(i, &m)| (i + 1, m))
    }

    /// Parts in nonincreasing order.
    pub fn parts(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.length());
        for (j, m) in self.frequencies().collect::<Vec<_>>().into_iter().rev() {
            out.extend(std::iter::repeat_n(j, m as usize));
        }
        out
    }

    pub fn is_distinct(&self) -> bool {
        self.multiplicities.iter().all(|&m| m <= 1)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts().iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All partitions of `k`, in reverse-lexicographic order of parts:
/// `(k), (k-1,1), ..., (1,...,1)`.
#[derive(Debug, Clone)]
pub struct Partitions {
    parts: Vec<usize>,
    done: bool,
}

pub fn enumerate_partitions(k: usize) -> Partitions {
    Partitions {
        parts: vec![k],
        done: k == 0,
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let current = Partition::from_parts(&self.parts);
        let mut rem = 0;
        while self.parts.last() == Some(&1) {
            self.parts.pop();
            rem += 1;
        }
        match self.parts.pop() {
            None => self.done = true,
            Some(top) => {
                let x = top - 1;
                rem += 1;
                self.parts.push(x);
                while rem > x {
                    self.parts.push(x);
                    rem -= x;
                }
                if rem > 0 {
                    self.parts.push(rem);
                }
            }
        }
        Some(current)
    }
}

/// Partitions of `n` into distinct parts, reverse-lexicographic.
#[derive(Debug, Clone)]
pub struct DistinctPartitions {
    parts: Vec<usize>,
    done: bool,
}

pub fn enumerate_distinct_partitions(n: usize) -> DistinctPartitions {
    DistinctPartitions {
        parts: vec![n],
        done: n == 0,
    }
}

impl Iterator for DistinctPartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let current = Partition::from_parts(&self.parts);
        // Lower the rightmost part that can drop by one while the rest is
        // refilled greedily with smaller distinct parts.
        let mut suffix = 0;
        let mut advanced = false;
        for i in (0..self.parts.len()).rev() {
            let p = self.parts[i] - 1;
            let rem = suffix + 1;
            suffix += self.parts[i];
            if p == 0 {
                continue;
            }
            let cap = p - 1;
            if rem <= cap * (cap + 1) / 2 {
                self.parts.truncate(i);
                self.parts.push(p);
                let (mut rem, mut cap) = (rem, cap);
                while rem > 0 {
                    let a = cap.min(rem);
                    self.parts.push(a);
                    rem -= a;
                    cap = a - 1;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            self.done = true;
        }
        Some(current)
    }
}

/// Sum of reciprocals of the parts.
pub fn srp(lambda: &Partition) -> Rational {
    lambda
        .frequencies()
        .map(|(j, m)| Rational::new((m as i64).into(), (j as i64).into()))
        .sum()
}

/// A named weight `phi` on partitions.
pub trait WeightFunction: Send + Sync {
    fn name(&self) -> &str;
    fn weight(&self, lambda: &Partition) -> Rational;
}

/// `phi(lambda) = 1`.
#[derive(Debug, Clone, Copy, Default)]
pub struct One;

/// Bell weight `k! prod 1/(m_j! (j!)^{m_j})`.
#[derive(Debug, Clone, Copy, Default)]
pub struct PhiB;

/// `4^k (2k)! prod (1/m_j!) ((4^j - 1) B_{2j} / ((2j)(2j)!))^{m_j}`.
#[derive(Debug, Clone, Copy, Default)]
pub struct PhiV;

/// `k! prod (-1)^{m_j} / (m_j! j^{m_j})`.
#[derive(Debug, Clone, Copy, Default)]
pub struct PhiPhi;

fn rational_of(n: num_bigint::BigInt) -> Rational {
    Rational::from_integer(n)
}

impl WeightFunction for One {
    fn name(&self) -> &str {
        "one"
    }
    fn weight(&self, _: &Partition) -> Rational {
        Rational::one()
    }
}

impl WeightFunction for PhiB {
    fn name(&self) -> &str {
        "phi_B"
    }
    fn weight(&self, lambda: &Partition) -> Rational {
        let mut denom = num_bigint::BigInt::one();
        for (j, m) in lambda.frequencies() {
            denom *= factorial(m as u64) * factorial(j as u64).pow(m);
        }
        Rational::new(factorial(lambda.size() as u64), denom)
    }
}

impl WeightFunction for PhiV {
    fn name(&self) -> &str {
        "phi_V"
    }
    fn weight(&self, lambda: &Partition) -> Rational {
        let k = lambda.size();
        let bern = bernoulli_table(2 * k);
        let mut w =
            rational_of(num_bigint::BigInt::from(4).pow(k as u32) * factorial(2 * k as u64));
        for (j, m) in lambda.frequencies() {
            let base = rational_of(num_bigint::BigInt::from(4).pow(j as u32) - 1) * &bern[2 * j]
                / rational_of(num_bigint::BigInt::from(2 * j) * factorial(2 * j as u64));
            w = w * num_traits::pow(base, m as usize) / rational_of(factorial(m as u64));
        }
        w
    }
}

impl WeightFunction for PhiPhi {
    fn name(&self) -> &str {
        "phi_Phi"
    }
    fn weight(&self, lambda: &Partition) -> Rational {
        let mut w = rational_of(factorial(lambda.size() as u64));
        for (j, m) in lambda.frequencies() {
            let sign = if m % 2 == 0 { 1 } else { -1 };
            w = w * rat(sign)
                / rational_of(factorial(m as u64) * num_bigint::BigInt::from(j).pow(m));
        }
        w
    }
}

pub const WEIGHT_NAMES: [&str; 4] = ["one", "phi_B", "phi_V", "phi_Phi"];

pub fn weight_by_name(name: &str) -> Option<Box<dyn WeightFunction>> {
    match name {
        "one" => Some(Box::new(One)),
        "phi_B" => Some(Box::new(PhiB)),
        "phi_V" => Some(Box::new(PhiV)),
        "phi_Phi" => Some(Box::new(PhiPhi)),
        _ => None,
    }
}

/// `Tr_k(phi; x_1..x_k) = sum_{lambda |- k} phi(lambda) prod x_j^{m_j}`.
pub fn trace<R: CoefficientRing>(k: usize, phi: &dyn WeightFunction, x: &[R]) -> Result<R> {
    if k == 0 {
        return Err(Error::InvalidParameter("trace needs k >= 1".into()));
    }
    if x.len() != k {
        return Err(Error::LengthMismatch {
            expected: k,
            got: x.len(),
        });
    }
    // powers[j-1][m] = x_j^m for m <= k / j
    let powers: Vec<Vec<R>> = x
        .iter()
        .enumerate()
        .map(|(i, xj)| {
            let top = k / (i + 1);
            let mut row = Vec::with_capacity(top + 1);
            row.push(xj.one_like());
            for m in 1..=top {
                let next = row[m - 1].times(xj);
                row.push(next);
            }
            row
        })
        .collect();
    let mut acc = x[0].zero_like();
    for lambda in enumerate_partitions(k) {
        let w = phi.weight(&lambda);
        if w.is_zero() {
            continue;
        }
        let mut mono: Option<R> = None;
        for (j, m) in lambda.frequencies() {
            let p = &powers[j - 1][m as usize];
            mono = Some(match mono {
                None => p.clone(),
                Some(acc) => acc.times(p),
            });
        }
        let mono = mono.expect("a partition of k >= 1 has a part");
        acc = acc.plus(&mono.scaled(&w));
    }
    Ok(acc)
}
