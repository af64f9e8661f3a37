//! The coefficient-ring contract shared by scalars and series.
//!
//! Every ring used here is an algebra over the rationals, so rational scalar
//! action is part of the contract. Zero and one are produced "like" an
//! existing element, which carries the truncation order for series rings.

use std::fmt::Debug;

use num_traits::{One, Zero};

use crate::arith::Rational;

pub trait CoefficientRing: Clone + PartialEq + Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_element(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Action of a rational scalar.
    fn scaled(&self, c: &Rational) -> Self;
    /// Multiplicative inverse, when `self` is a unit.
    fn try_inverse(&self) -> Option<Self>;

    fn is_one_element(&self) -> bool {
        *self == self.one_like()
    }

    fn pow(&self, exp: usize) -> Self {
        let mut acc = self.one_like();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        acc
    }
}

impl CoefficientRing for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }

    fn one_like(&self) -> Self {
        Rational::one()
    }

    fn is_zero_element(&self) -> bool {
        Zero::is_zero(self)
    }

    fn plus(&self, other: &Self) -> Self {
        self + other
    }

    fn minus(&self, other: &Self) -> Self {
        self - other
    }

    fn times(&self, other: &Self) -> Self {
        self * other
    }

    fn negated(&self) -> Self {
        -self
    }

    fn scaled(&self, c: &Rational) -> Self {
        self * c
    }

    fn try_inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}
