use std::cmp::Ordering;
use std::time::Duration;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::arith::{format_rational, rational_pair, Rational};
use crate::ring::CoefficientRing;
use crate::series::QSeries;
use crate::zoo::Params;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Mismatch,
    Error,
}

/// Lowest index where two sides disagree, with both exact values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub n: usize,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl Serialize for Mismatch {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(3))?;
        map.serialize_entry("n", &self.n)?;
        map.serialize_entry("lhs", &rational_pair(&self.lhs))?;
        map.serialize_entry("rhs", &rational_pair(&self.rhs))?;
        map.end()
    }
}

/// Outcome of one identity check through a finite truncation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub theorem_id: String,
    pub params: Params,
    pub order: usize,
    pub status: Status,
    pub first_mismatch: Option<Mismatch>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }

    /// Ordering used to aggregate batches: theorem id, then parameters.
    pub fn sort_key_cmp(&self, other: &Self) -> Ordering {
        self.theorem_id
            .cmp(&other.theorem_id)
            .then_with(|| self.params.cmp(&other.params))
            .then_with(|| self.order.cmp(&other.order))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

struct ParamsWire<'a>(&'a Params);

impl Serialize for ParamsWire<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0 {
            match integer_value(v) {
                Some(i) => map.serialize_entry(k, &i)?,
                None => map.serialize_entry(k, &format_rational(v))?,
            }
        }
        map.end()
    }
}

fn integer_value(v: &Rational) -> Option<i64> {
    use num_traits::ToPrimitive;
    if v.is_integer() {
        v.to_integer().to_i64()
    } else {
        None
    }
}

impl Serialize for VerificationReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(6))?;
        map.serialize_entry("theorem", &self.theorem_id)?;
        map.serialize_entry("params", &ParamsWire(&self.params))?;
        map.serialize_entry("order", &self.order)?;
        map.serialize_entry("status", &self.status)?;
        map.serialize_entry("first_mismatch", &self.first_mismatch)?;
        map.serialize_entry("elapsed_ms", &(self.elapsed.as_millis() as u64))?;
        map.end()
    }
}

/// First index where `lhs` and `rhs` differ.
pub fn first_difference(lhs: &QSeries, rhs: &QSeries) -> Option<Mismatch> {
    let n = lhs.order().min(rhs.order());
    (0..=n).find_map(|i| {
        let (a, b) = (lhs.coeff(i), rhs.coeff(i));
        (a != b).then(|| Mismatch {
            n: i,
            lhs: a.clone(),
            rhs: b.clone(),
        })
    })
}

/// Compares every later side against the first one and keeps the smallest
/// disagreeing index. Sides of different orders count as a mismatch at the
/// first missing index.
pub fn compare_sides(sides: &[&QSeries]) -> Option<Mismatch> {
    let (first, rest) = sides.split_first()?;
    let mut best: Option<Mismatch> = None;
    for side in rest {
        let candidate = first_difference(first, side).or_else(|| {
            (first.order() != side.order()).then(|| {
                let n = first.order().min(side.order()) + 1;
                let zero = first.coeff(0).zero_like();
                Mismatch {
                    n,
                    lhs: first
                        .coeffs()
                        .get(n)
                        .cloned()
                        .unwrap_or_else(|| zero.clone()),
                    rhs: side.coeffs().get(n).cloned().unwrap_or(zero),
                }
            })
        });
        if let Some(c) = candidate {
            if best.as_ref().is_none_or(|b| c.n < b.n) {
                best = Some(c);
            }
        }
    }
    best
}
