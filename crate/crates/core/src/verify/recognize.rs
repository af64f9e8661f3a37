//! Truncation-order recognition of quasi-modular forms.
//!
//! A series is matched against an explicit basis by solving the exact linear
//! system on its coefficients `0..=N`. The solve is only attempted when
//! `N >= 2 * basis size`, so at least as many equations as unknowns remain
//! unused by any square subsystem. A certificate says nothing beyond order
//! `N`.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::arith::{format_rational, rational_pair, Rational};
use crate::error::{Error, Result};
use crate::series::QSeries;
use crate::zoo::{chi_twisted_divisor_series, eisenstein, l_series};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Level {
    One,
    Three,
}

impl Level {
    pub fn number(self) -> u32 {
        match self {
            Level::One => 1,
            Level::Three => 3,
        }
    }

    pub fn from_number(n: u32) -> Option<Level> {
        match n {
            1 => Some(Level::One),
            3 => Some(Level::Three),
            _ => None,
        }
    }
}

/// A named basis element realized to some order.
#[derive(Debug, Clone, PartialEq)]
pub struct Generator {
    pub name: String,
    pub series: QSeries,
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuasimodularCertificate {
    pub level: Level,
    pub weight_bound: u32,
    pub basis: Vec<String>,
    pub coefficients: Vec<Rational>,
    pub residual_order: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Recognition {
    Found(QuasimodularCertificate),
    NotFound,
}

impl Recognition {
    pub fn certificate(&self) -> Option<&QuasimodularCertificate> {
        match self {
            Recognition::Found(c) => Some(c),
            Recognition::NotFound => None,
        }
    }
}

impl Serialize for QuasimodularCertificate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs: Vec<[String; 2]> = self.coefficients.iter().map(rational_pair).collect();
        let mut map = s.serialize_map(Some(5))?;
        map.serialize_entry("level", &self.level.number())?;
        map.serialize_entry("weight_bound", &self.weight_bound)?;
        map.serialize_entry("basis", &self.basis)?;
        map.serialize_entry("coefficients", &coeffs)?;
        map.serialize_entry("residual_order", &self.residual_order)?;
        map.end()
    }
}

impl fmt::Display for QuasimodularCertificate {
    /// Nonzero terms only, e.g. `1/24*1 - 1/24*E2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, name) in self.coefficients.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            if first {
                write!(f, "{}*{}", format_rational(c), name)?;
            } else if c.is_negative() {
                write!(f, " - {}*{}", format_rational(&-c), name)?;
            } else {
                write!(f, " + {}*{}", format_rational(c), name)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn monomial_name(a: u32, b: u32, c: u32) -> String {
    let mut parts = Vec::new();
    for (base, e) in [("E2", a), ("E4", b), ("E6", c)] {
        match e {
            0 => {}
            1 => parts.push(base.to_string()),
            _ => parts.push(format!("{base}^{e}")),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// Number of basis elements for a level and weight bound.
pub fn basis_size(level: Level, weight_bound: u32) -> usize {
    match level {
        Level::One => level_one_exponents(weight_bound).len(),
        Level::Three => 1 + 3 * (weight_bound as usize / 2) + 1,
    }
}

fn level_one_exponents(weight_bound: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for w in (0..=weight_bound).step_by(2) {
        for c in (0..=w / 6).rev() {
            for b in (0..=(w - 6 * c) / 4).rev() {
                let rest = w - 6 * c - 4 * b;
                if rest % 2 == 0 {
                    out.push((rest / 2, b, c));
                }
            }
        }
    }
    out
}

/// Level 1: every `E2^a E4^b E6^c` of weight at most the bound (including 1).
/// Level 3: `1`, `L_l(q)`, `L_l(q^3)` for even `2 <= l <= bound`, and the
/// twisted sums `sum_{d | n} (-3/d) d^l` for even `0 <= l <= bound`.
pub fn basis(level: Level, weight_bound: u32, order: usize) -> Result<Vec<Generator>> {
    let mut out = Vec::new();
    match level {
        Level::One => {
            let e2 = eisenstein(1, order)?;
            let e4 = eisenstein(2, order)?;
            let e6 = eisenstein(3, order)?;
            for (a, b, c) in level_one_exponents(weight_bound) {
                let s = &(&e2.pow(a as usize) * &e4.pow(b as usize)) * &e6.pow(c as usize);
                out.push(Generator {
                    name: monomial_name(a, b, c),
                    series: s,
                });
            }
        }
        Level::Three => {
            out.push(Generator {
                name: "1".into(),
                series: QSeries::one(order),
            });
            for l in (2..=weight_bound as usize).step_by(2) {
                let s = l_series(l, order)?;
                out.push(Generator {
                    name: format!("L{l}(q)"),
                    series: s.dilate(1),
                });
                out.push(Generator {
                    name: format!("L{l}(q^3)"),
                    series: s.dilate(3),
                });
            }
            for l in (0..=weight_bound).step_by(2) {
                out.push(Generator {
                    name: format!("Lchi{l}(q)"),
                    series: chi_twisted_divisor_series(l, order),
                });
            }
        }
    }
    Ok(out)
}

/// Solves `sum_j c_j basis_j = target` coefficientwise, free variables set
/// to zero. `None` when the system is inconsistent.
fn solve(basis: &[Generator], target: &QSeries) -> Option<Vec<Rational>> {
    let cols = basis.len();
    let mut rows: Vec<Vec<Rational>> = (0..=target.order())
        .map(|i| {
            let mut row: Vec<Rational> = basis.iter().map(|g| g.series.coeff(i).clone()).collect();
            row.push(target.coeff(i).clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                    *x -= &factor * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    if rows[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut sol = vec![Rational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        sol[c] = rows[i][cols].clone();
    }
    Some(sol)
}

/// Looks for `s` in the span of the level/weight basis through its order.
pub fn recognize_quasimodular(s: &QSeries, weight_bound: u32, level: Level) -> Result<Recognition> {
    if weight_bound < 2 || !weight_bound.is_multiple_of(2) {
        return Err(Error::InvalidParameter(
            "weight bound must be an even integer >= 2".into(),
        ));
    }
    let needed = 2 * basis_size(level, weight_bound);
    if s.order() < needed {
        return Err(Error::InsufficientOrder {
            needed,
            got: s.order(),
        });
    }
    let gens = basis(level, weight_bound, s.order())?;
    let Some(coefficients) = solve(&gens, s) else {
        return Ok(Recognition::NotFound);
    };
    let mut rebuilt = QSeries::zero(s.order());
    for (c, g) in coefficients.iter().zip(&gens) {
        if !c.is_zero() {
            rebuilt = &rebuilt + &g.series.scaled(c);
        }
    }
    if rebuilt != *s {
        return Ok(Recognition::NotFound);
    }
    Ok(Recognition::Found(QuasimodularCertificate {
        level,
        weight_bound,
        basis: gens.into_iter().map(|g| g.name).collect(),
        coefficients,
        residual_order: s.order(),
    }))
}
