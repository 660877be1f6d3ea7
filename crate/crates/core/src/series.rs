//! Degree-bounded power series in one variable.

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, ToPrimitive, Zero};

use crate::Rational;

/// A coefficient field: exact rationals or `f64`.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_rational(r: &Rational) -> Self;

    fn to_f64(&self) -> f64;

    /// Exact division by a small positive integer.
    fn div_int(&self, d: u64) -> Self;
}

impl Scalar for f64 {
    fn from_rational(r: &Rational) -> Self {
        ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn div_int(&self, d: u64) -> Self {
        self / d as f64
    }
}

impl Scalar for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn div_int(&self, d: u64) -> Self {
        self / Rational::from_integer(d.into())
    }
}

/// `c_0 + c_1 t + … + c_N t^N`, with all arithmetic truncated at degree `N`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> TruncatedSeries<T> {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![T::zero(); order + 1],
        }
    }

    pub fn constant(value: T, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = value;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(T::one(), order)
    }

    /// `c · t^degree`; zero if `degree > order`.
    pub fn monomial(c: T, degree: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if degree <= order {
            s.coeffs[degree] = c;
        }
        s
    }

    /// Takes coefficients `c_0..`; pads with zeros or truncates to `order`.
    pub fn from_coeffs(mut coeffs: Vec<T>, order: usize) -> Self {
        coeffs.resize(order + 1, T::zero());
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> T {
        self.coeffs.get(degree).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Lowest degree with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|i| self.coeffs[i].clone() + other.coeffs[i].clone())
            .collect();
        Self { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-T::one()))
    }

    pub fn scale(&self, c: &T) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    /// Cauchy product, truncated at the smaller of the two orders.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![T::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self { coeffs }
    }

    pub fn pow(&self, exp: usize) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Term-by-term derivative in `t`; the top coefficient becomes zero.
    pub fn derivative(&self) -> Self {
        let order = self.order();
        let mut coeffs = vec![T::zero(); order + 1];
        for n in 1..=order {
            coeffs[n - 1] =
                self.coeffs[n].clone() * T::from_rational(&Rational::from_integer((n as i64).into()));
        }
        Self { coeffs }
    }

    /// `∫_0^t ∫_0^q s(p) dp dq`: `c_n t^n` becomes `c_n t^{n+2} / ((n+1)(n+2))`.
    pub fn integrate_twice(&self) -> Self {
        let order = self.order();
        let mut coeffs = vec![T::zero(); order + 1];
        for n in 0..=order.saturating_sub(2) {
            coeffs[n + 2] = self.coeffs[n].div_int(((n + 1) * (n + 2)) as u64);
        }
        Self { coeffs }
    }

    /// Horner evaluation at `t`.
    pub fn evaluate(&self, t: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * t + c.to_f64())
    }

    pub fn to_f64(&self) -> TruncatedSeries<f64> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(Scalar::to_f64).collect(),
        }
    }
}

/// Horner evaluation of `s` at `t`.
pub fn evaluate_series<T: Scalar>(s: &TruncatedSeries<T>, t: f64) -> f64 {
    s.evaluate(t)
}
