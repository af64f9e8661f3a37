//! Constructors for every named series, the brute-force oracles, and the
//! cyclotomic toolkit.
//!
//! This module depends only on `arith`, `series` and `partitions`. In
//! particular it never evaluates a Bell polynomial or a partition trace, so
//! its oracles stay independent of the formulas they are checked against.

pub mod cyclotomic;
pub mod named;
pub mod oracles;

use std::collections::BTreeMap;

use num_traits::ToPrimitive;

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::series::QSeries;

pub use cyclotomic::{
    cyclotomic, log_phi_derivative, phi_derivative_ratio_oracle, varsigma, IntPolynomial,
};
pub use named::{
    capital_g_series, chi_twisted_divisor_series, eisenstein, f_series, g_series, h_ktr_series,
    h_series, l_series, pentagonal_theta, u_denominator, u_numerator, v_numerator,
};
pub use oracles::{
    a_ktr_oracle, distinct_parts_product, euler_product_power, h_inner_oracle, macmahon_oracle,
    srp_moment_oracle,
};

/// Registry names accepted by [`named_series`], with their parameter keys.
pub const SERIES_NAMES: [(&str, &[&str]); 14] = [
    ("E2k", &["k"]),
    ("Ll", &["l"]),
    ("Fj", &["j"]),
    ("Gj", &["j"]),
    ("Hj", &["j"]),
    ("Hjtr", &["j", "t", "r", "a"]),
    ("gk", &["k"]),
    ("penta", &[]),
    ("Vnum", &["k"]),
    ("Unum", &["k"]),
    ("Uden", &[]),
    ("Ak-oracle", &["k"]),
    ("Aktr-oracle", &["k", "t", "r", "a"]),
    ("sk-oracle", &["k"]),
];

pub type Params = BTreeMap<String, Rational>;

/// A realized registry entry.
#[derive(Debug, Clone, PartialEq)]
pub struct NamedSeries {
    pub name: String,
    pub params: Params,
    pub series: QSeries,
}

pub fn is_series_name(name: &str) -> bool {
    SERIES_NAMES.iter().any(|(n, _)| *n == name)
}

fn param<'a>(params: &'a Params, key: &str) -> Result<&'a Rational> {
    params
        .get(key)
        .ok_or_else(|| Error::InvalidParameter(format!("missing parameter `{key}`")))
}

fn nonnegative_param(params: &Params, key: &str) -> Result<usize> {
    let v = param(params, key)?;
    if !v.is_integer() {
        return Err(Error::InvalidParameter(format!(
            "`{key}` must be an integer"
        )));
    }
    v.to_integer()
        .to_usize()
        .ok_or_else(|| Error::InvalidParameter(format!("`{key}` must be nonnegative")))
}

fn index_param(params: &Params, key: &str) -> Result<usize> {
    match nonnegative_param(params, key)? {
        0 => Err(Error::InvalidParameter(format!("`{key}` must be >= 1"))),
        n => Ok(n),
    }
}

/// Builds a registry series. Missing or extra parameters are rejected.
pub fn named_series(name: &str, params: &Params, order: usize) -> Result<NamedSeries> {
    let keys = SERIES_NAMES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, k)| *k)
        .ok_or_else(|| Error::UnknownSeries(name.to_string()))?;
    if let Some(extra) = params.keys().find(|k| !keys.contains(&k.as_str())) {
        return Err(Error::InvalidParameter(format!(
            "`{name}` takes no parameter `{extra}`"
        )));
    }
    let idx = |key: &str| index_param(params, key);
    let series = match name {
        "E2k" => eisenstein(idx("k")?, order)?,
        "Ll" => l_series(idx("l")?, order)?,
        "Fj" => f_series(idx("j")?, order)?,
        "Gj" => capital_g_series(idx("j")?, order)?,
        "Hj" => h_series(idx("j")?, order)?,
        "Hjtr" => h_ktr_series(idx("j")?, idx("t")?, idx("r")?, param(params, "a")?, order)?,
        "gk" => g_series(idx("k")?, order)?,
        "penta" => pentagonal_theta(order),
        "Vnum" => v_numerator(nonnegative_param(params, "k")?, order),
        "Unum" => u_numerator(nonnegative_param(params, "k")?, order),
        "Uden" => u_denominator(order),
        "Ak-oracle" => macmahon_oracle(idx("k")?, order)?,
        "Aktr-oracle" => a_ktr_oracle(idx("k")?, idx("t")?, idx("r")?, param(params, "a")?, order)?,
        "sk-oracle" => srp_moment_oracle(idx("k")?, order)?,
        _ => unreachable!("name checked against the registry"),
    };
    Ok(NamedSeries {
        name: name.to_string(),
        params: params.clone(),
        series,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn params(pairs: &[(&str, i64)]) -> Params {
        pairs
            .iter()
            .map(|(k, v)| (k.to_string(), rat(*v)))
            .collect()
    }

    #[test]
    fn registry_builds_every_name() {
        let full = params(&[("k", 2), ("l", 2), ("j", 2), ("t", 1), ("r", 1), ("a", -2)]);
        for (name, keys) in SERIES_NAMES {
            let p: Params = full
                .iter()
                .filter(|(k, _)| keys.contains(&k.as_str()))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect();
            let a = named_series(name, &p, 12).unwrap();
            let b = named_series(name, &p, 12).unwrap();
            assert_eq!(a, b, "{name} is deterministic");
            assert_eq!(a.series.order(), 12);
        }
    }

    #[test]
    fn registry_rejects_bad_input() {
        assert_eq!(
            named_series("E4", &Params::new(), 3).unwrap_err(),
            Error::UnknownSeries("E4".into())
        );
        assert!(named_series("E2k", &Params::new(), 3).is_err());
        assert!(named_series("E2k", &params(&[("k", 0)]), 3).is_err());
        assert!(named_series("penta", &params(&[("k", 1)]), 3).is_err());
        let mut half = Params::new();
        half.insert("k".into(), crate::arith::ratio(1, 2));
        assert!(named_series("E2k", &half, 3).is_err());
    }

    #[test]
    fn vnum_accepts_zero_index() {
        let v0 = named_series("Vnum", &params(&[("k", 0)]), 10).unwrap();
        assert_eq!(v0.series, pentagonal_theta(10));
        assert!(named_series("Vnum", &params(&[("k", -1)]), 3).is_err());
    }
}
