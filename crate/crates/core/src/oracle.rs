//! Derivative oracles: rules returning `F^(k)(x)` for the nonlinearity `F`.

use std::f64::consts::FRAC_PI_2;

use num::BigInt;

use crate::series::Scalar;
use crate::{Error, Rational, Result};

/// Supplies `F^(k)(x)`; `k = 0` is `F(x)` itself.
pub trait DerivativeOracle<T> {
    fn derivative(&self, k: usize, x: f64) -> Result<T>;

    /// `F(x), F'(x), …, F^(max_order)(x)`.
    fn derivatives(&self, x: f64, max_order: usize) -> Result<Vec<T>> {
        (0..=max_order).map(|k| self.derivative(k, x)).collect()
    }
}

impl<T, F> DerivativeOracle<T> for F
where
    F: Fn(usize, f64) -> Result<T>,
{
    fn derivative(&self, k: usize, x: f64) -> Result<T> {
        self(k, x)
    }
}

/// `F = sin`, evaluated in floating point.
#[derive(Debug, Clone, Copy, Default)]
pub struct Sine;

impl DerivativeOracle<f64> for Sine {
    fn derivative(&self, k: usize, x: f64) -> Result<f64> {
        Ok(match k % 4 {
            0 => x.sin(),
            1 => x.cos(),
            2 => -x.sin(),
            _ => -x.cos(),
        })
    }
}

/// `F = sin` at multiples of π/2, where every derivative is 0 or ±1.
///
/// `x` must lie within `1e-12` (relative) of `q·π/2` for an integer `q`.
#[derive(Debug, Clone, Copy, Default)]
pub struct ExactSine;

impl ExactSine {
    /// The integer `q` with `x ≈ q·π/2`, if any.
    pub fn quarter_turns(x: f64) -> Option<i64> {
        let q = (x / FRAC_PI_2).round();
        let tol = 1e-12 * x.abs().max(1.0);
        ((x - q * FRAC_PI_2).abs() <= tol && q.abs() < 1e15).then_some(q as i64)
    }
}

impl DerivativeOracle<Rational> for ExactSine {
    fn derivative(&self, k: usize, x: f64) -> Result<Rational> {
        let q = Self::quarter_turns(x)
            .ok_or_else(|| Error::Oracle(format!("sin derivatives at {x} are not rational")))?;
        // sin^(k)(qπ/2) = sin((q + k)π/2)
        let phase = (q + (k % 4) as i64).rem_euclid(4);
        let v = [0, 1, 0, -1][phase as usize];
        Ok(Rational::from_integer(BigInt::from(v)))
    }
}

impl DerivativeOracle<f64> for ExactSine {
    fn derivative(&self, k: usize, x: f64) -> Result<f64> {
        DerivativeOracle::<Rational>::derivative(self, k, x).map(|r| Scalar::to_f64(&r))
    }
}

/// `F = exp`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Exp;

impl DerivativeOracle<f64> for Exp {
    fn derivative(&self, _k: usize, x: f64) -> Result<f64> {
        Ok(x.exp())
    }
}

/// `F(u) = Σ c_i u^i` with rational coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    /// Coefficients in increasing degree.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        Self { coeffs }
    }

    pub fn square() -> Self {
        let r = |n: i64| Rational::from_integer(BigInt::from(n));
        Self::new(vec![r(0), r(0), r(1)])
    }

    pub fn identity() -> Self {
        let r = |n: i64| Rational::from_integer(BigInt::from(n));
        Self::new(vec![r(0), r(1)])
    }

    fn derivative_at<T: Scalar>(&self, k: usize, x: &T) -> T {
        // Σ_{i>=k} c_i · i!/(i-k)! · x^{i-k}, by Horner
        let mut acc = T::zero();
        for i in (k..self.coeffs.len()).rev() {
            let falling: BigInt = ((i - k + 1)..=i).map(BigInt::from).product();
            let c = &self.coeffs[i] * Rational::from_integer(falling);
            acc = acc * x.clone() + T::from_rational(&c);
        }
        acc
    }
}

impl DerivativeOracle<Rational> for Polynomial {
    fn derivative(&self, k: usize, x: f64) -> Result<Rational> {
        let x = Rational::from_float(x).ok_or_else(|| Error::Oracle(format!("non-finite point {x}")))?;
        Ok(self.derivative_at(k, &x))
    }
}

impl DerivativeOracle<f64> for Polynomial {
    fn derivative(&self, k: usize, x: f64) -> Result<f64> {
        Ok(self.derivative_at(k, &x))
    }
}
