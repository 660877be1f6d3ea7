//! Decomposition solver for the undamped pendulum `u'' + b sin u = 0`,
//! `u(0) = a`, `u'(0) = 0`.
//!
//! With `u_0 = a` and `u_{m+1} = -L⁻¹[b A_m]`, where `L⁻¹` integrates twice
//! from 0, every component is a truncated power series in `t`. Only constant
//! `u_0` is supported, so `A_m` needs the scalars `F^(k)(a)` and the series
//! `u_1, …, u_m`.

use serde::Serialize;

use crate::adomian::{adomian, EvaluationContext};
use crate::oracle::{DerivativeOracle, ExactSine, Sine};
use crate::series::{Scalar, TruncatedSeries};
use crate::{Error, Rational, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PendulumProblem {
    /// Initial angle in radians.
    pub a: f64,
    /// Geometric constant, `b > 0`.
    pub b: f64,
    /// Number of corrections `M`; the solution is `u_0 + … + u_M`.
    pub components: usize,
    /// Truncation degree `N` in `t`.
    pub order: usize,
}

impl PendulumProblem {
    /// Uses the smallest admissible truncation, `N = 2M`.
    pub fn new(a: f64, b: f64, components: usize) -> Self {
        Self {
            a,
            b,
            components,
            order: 2 * components,
        }
    }

    pub fn with_order(mut self, order: usize) -> Self {
        self.order = order;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !self.a.is_finite() {
            return Err(Error::InvalidProblem(format!("a must be finite, got {}", self.a)));
        }
        if !(self.b.is_finite() && self.b > 0.0) {
            return Err(Error::InvalidProblem(format!(
                "b must be positive, got {}",
                self.b
            )));
        }
        if self.components == 0 {
            return Err(Error::InvalidProblem("components M must be at least 1".into()));
        }
        if self.order < 2 * self.components {
            return Err(Error::InvalidProblem(format!(
                "order N = {} must be at least 2M = {}",
                self.order,
                2 * self.components
            )));
        }
        Ok(())
    }
}

/// The solved components `u_1, …, u_M`; `u_0 = a` is kept apart so the
/// deviation `u - a` stays exact when `a` is irrational.
#[derive(Debug, Clone, PartialEq)]
pub struct PendulumSolution<T> {
    pub problem: PendulumProblem,
    components: Vec<TruncatedSeries<T>>,
}

impl<T: Scalar> PendulumSolution<T> {
    /// `u_m` for `1 <= m <= M`.
    pub fn component(&self, m: usize) -> Option<&TruncatedSeries<T>> {
        m.checked_sub(1).and_then(|i| self.components.get(i))
    }

    /// `u(t) - a = u_1 + … + u_M`.
    pub fn deviation(&self) -> TruncatedSeries<T> {
        self.components
            .iter()
            .fold(TruncatedSeries::zero(self.problem.order), |acc, c| acc.add(c))
    }

    /// `u(t)` with `c_0 = a`, in floating point.
    pub fn series_f64(&self) -> TruncatedSeries<f64> {
        let dev = self.deviation().to_f64();
        dev.add(&TruncatedSeries::constant(self.problem.a, self.problem.order))
    }

    pub fn evaluate(&self, t: f64) -> f64 {
        self.problem.a + self.deviation().evaluate(t)
    }
}

/// Runs the recursion `u_{m+1} = -L⁻¹[b A_m]` for `m = 0..M-1`.
pub fn pendulum_solve<T, O>(p: &PendulumProblem, oracle: &O) -> Result<PendulumSolution<T>>
where
    T: Scalar,
    O: DerivativeOracle<T> + ?Sized,
{
    p.validate()?;
    let order = p.order;
    let b = Rational::from_float(p.b).ok_or_else(|| Error::InvalidProblem("b is not finite".into()))?;
    let minus_b = -T::from_rational(&b);
    let derivs = oracle.derivatives(p.a, p.components)?;
    let constants: Vec<TruncatedSeries<T>> = derivs
        .iter()
        .map(|d| TruncatedSeries::constant(d.clone(), order))
        .collect();

    let mut components: Vec<TruncatedSeries<T>> = Vec::with_capacity(p.components);
    for m in 0..p.components {
        let a_m = if m == 0 {
            constants[0].clone()
        } else {
            let ctx = EvaluationContext::new(components.clone(), constants[1..=m].to_vec());
            adomian(m).evaluate(&ctx)?
        };
        components.push(a_m.scale(&minus_b).integrate_twice());
    }
    Ok(PendulumSolution {
        problem: *p,
        components,
    })
}

/// Coefficient domain of a solve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Domain {
    Rational,
    Float,
}

/// A solve in either coefficient domain.
#[derive(Debug, Clone, PartialEq)]
pub enum PendulumOutput {
    Rational(PendulumSolution<Rational>),
    Float(PendulumSolution<f64>),
}

impl PendulumOutput {
    pub fn domain(&self) -> Domain {
        match self {
            PendulumOutput::Rational(_) => Domain::Rational,
            PendulumOutput::Float(_) => Domain::Float,
        }
    }

    pub fn problem(&self) -> &PendulumProblem {
        match self {
            PendulumOutput::Rational(s) => &s.problem,
            PendulumOutput::Float(s) => &s.problem,
        }
    }

    pub fn evaluate(&self, t: f64) -> f64 {
        match self {
            PendulumOutput::Rational(s) => s.evaluate(t),
            PendulumOutput::Float(s) => s.evaluate(t),
        }
    }

    /// Coefficients of `u(t) - a`, degrees `0..=N`.
    pub fn deviation_coefficients(&self) -> Vec<serde_json::Value> {
        match self {
            PendulumOutput::Rational(s) => s
                .deviation()
                .coeffs()
                .iter()
                .map(|c| serde_json::Value::String(c.to_string()))
                .collect(),
            PendulumOutput::Float(s) => s
                .deviation()
                .coeffs()
                .iter()
                .map(|&c| serde_json::Value::from(c))
                .collect(),
        }
    }

    pub fn record(&self) -> PendulumRecord {
        let p = self.problem();
        PendulumRecord {
            a: p.a,
            b: p.b,
            components: p.components,
            order: p.order,
            domain: self.domain(),
            coefficients: self.deviation_coefficients(),
        }
    }
}

/// Solves with exact rationals when every `sin^(k)(a)` is rational
/// (`a` a multiple of π/2) or when `Domain::Rational` is forced; otherwise in
/// floating point.
pub fn pendulum_solve_in(p: &PendulumProblem, domain: Option<Domain>) -> Result<PendulumOutput> {
    let exact_ok = ExactSine::quarter_turns(p.a).is_some();
    match domain {
        Some(Domain::Rational) | None if exact_ok => {
            pendulum_solve::<Rational, _>(p, &ExactSine).map(PendulumOutput::Rational)
        }
        Some(Domain::Rational) => Err(Error::InvalidProblem(format!(
            "rational domain needs a to be a multiple of pi/2, got {}",
            p.a
        ))),
        _ => pendulum_solve::<f64, _>(p, &Sine).map(PendulumOutput::Float),
    }
}

/// Result record, `{"a","b","M","N","domain","coefficients"}`.
///
/// `coefficients[n]` is the `t^n` coefficient of `u(t) - a`: `"p/q"` strings
/// in the rational domain, numbers in the float domain.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PendulumRecord {
    pub a: f64,
    pub b: f64,
    #[serde(rename = "M")]
    pub components: usize,
    #[serde(rename = "N")]
    pub order: usize,
    pub domain: Domain,
    pub coefficients: Vec<serde_json::Value>,
}

fn rk4_step(b: f64, h: f64, u: f64, v: f64) -> (f64, f64) {
    let field = |u: f64, v: f64| (v, -b * u.sin());
    let (k1u, k1v) = field(u, v);
    let (k2u, k2v) = field(u + 0.5 * h * k1u, v + 0.5 * h * k1v);
    let (k3u, k3v) = field(u + 0.5 * h * k2u, v + 0.5 * h * k2v);
    let (k4u, k4v) = field(u + h * k3u, v + h * k3v);
    (
        u + h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u),
        v + h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v),
    )
}

/// Classical fourth-order Runge–Kutta trajectory of `(u, u')` for
/// `u'' = -b sin u`, `u(0) = a`, `u'(0) = 0`. Returns `steps + 1` states
/// `(t, u, u')`. Global error is `O(h⁴)`.
pub fn reference_trajectory(p: &PendulumProblem, t_end: f64, steps: usize) -> Vec<(f64, f64, f64)> {
    let steps = steps.max(1);
    let h = t_end / steps as f64;
    let (mut u, mut v) = (p.a, 0.0);
    let mut out = Vec::with_capacity(steps + 1);
    out.push((0.0, u, v));
    for i in 1..=steps {
        (u, v) = rk4_step(p.b, h, u, v);
        out.push((i as f64 * h, u, v));
    }
    out
}

/// `u(t_end)` by the same integrator as [`reference_trajectory`].
pub fn reference_integrate(p: &PendulumProblem, t_end: f64, steps: usize) -> f64 {
    let steps = steps.max(1);
    let h = t_end / steps as f64;
    let (mut u, mut v) = (p.a, 0.0);
    for _ in 0..steps {
        (u, v) = rk4_step(p.b, h, u, v);
    }
    u
}

/// First integral `u'²/2 - b cos u` of the true flow.
pub fn energy(p: &PendulumProblem, u: f64, v: f64) -> f64 {
    0.5 * v * v - p.b * u.cos()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn half_pi_exact_table() {
        let p = PendulumProblem::new(FRAC_PI_2, 1.0, 10);
        let sol = pendulum_solve::<Rational, _>(&p, &ExactSine).unwrap();
        let dev = sol.deviation();
        let mut expected = vec![q(0, 1); 21];
        expected[2] = q(-1, 2);
        expected[6] = q(1, 240);
        expected[10] = q(-1, 19200);
        expected[14] = q(11, 13_977_600);
        expected[18] = q(-211, 16_293_888_000);
        assert_eq!(dev.coeffs(), &expected[..]);
        assert_eq!(sol.evaluate(0.0), FRAC_PI_2);
    }

    #[test]
    fn components_are_single_even_monomials() {
        let p = PendulumProblem::new(1.0, 1.0, 6);
        let sol = pendulum_solve::<f64, _>(&p, &Sine).unwrap();
        for m in 1..=6 {
            let c = sol.component(m).unwrap();
            for (n, v) in c.coeffs().iter().enumerate() {
                if n != 2 * m {
                    assert_eq!(*v, 0.0, "u_{m} has t^{n}");
                }
            }
        }
    }

    #[test]
    fn low_order_coefficients() {
        let p = PendulumProblem::new(1.0, 1.0, 2).with_order(6);
        let dev = pendulum_solve::<f64, _>(&p, &Sine).unwrap().deviation();
        let (s, c) = (1f64.sin(), 1f64.cos());
        assert!((dev.coeff(2) + s / 2.0).abs() < 1e-15);
        assert!((dev.coeff(4) - c * s / 24.0).abs() < 1e-15);

        let p = PendulumProblem::new(1.0, 1.0, 3).with_order(6);
        let dev = pendulum_solve::<f64, _>(&p, &Sine).unwrap().deviation();
        assert!((dev.coeff(6) - (s / 360.0 - 3f64.sin() / 720.0)).abs() < 1e-15);
    }

    #[test]
    fn zero_angle_stays_at_rest() {
        let p = PendulumProblem::new(0.0, 2.0, 7);
        let sol = pendulum_solve::<Rational, _>(&p, &ExactSine).unwrap();
        assert!(sol.deviation().is_zero());
        assert_eq!(reference_integrate(&p, 0.8, 100), 0.0);
    }

    #[test]
    fn validation() {
        let bad = [
            PendulumProblem::new(1.0, 0.0, 3),
            PendulumProblem::new(1.0, -1.0, 3),
            PendulumProblem::new(1.0, 1.0, 0),
            PendulumProblem::new(1.0, 1.0, 3).with_order(5),
            PendulumProblem::new(f64::NAN, 1.0, 3),
        ];
        for p in bad {
            assert!(
                matches!(pendulum_solve::<f64, _>(&p, &Sine), Err(Error::InvalidProblem(_))),
                "{p:?}"
            );
        }
    }

    #[test]
    fn domain_selection() {
        let p = PendulumProblem::new(FRAC_PI_2, 1.0, 3);
        assert_eq!(pendulum_solve_in(&p, None).unwrap().domain(), Domain::Rational);
        assert_eq!(
            pendulum_solve_in(&p, Some(Domain::Float)).unwrap().domain(),
            Domain::Float
        );
        let p = PendulumProblem::new(1.0, 1.0, 3);
        assert_eq!(pendulum_solve_in(&p, None).unwrap().domain(), Domain::Float);
        assert!(pendulum_solve_in(&p, Some(Domain::Rational)).is_err());
    }

    #[test]
    fn oracle_failure_propagates() {
        let failing = |_k: usize, _x: f64| -> Result<f64> { Err(Error::Oracle("nope".into())) };
        let p = PendulumProblem::new(1.0, 1.0, 2);
        assert_eq!(
            pendulum_solve::<f64, _>(&p, &failing),
            Err(Error::Oracle("nope".into()))
        );
    }

    #[test]
    fn trajectory_matches_endpoint() {
        let p = PendulumProblem::new(1.0, 1.0, 1);
        let traj = reference_trajectory(&p, 0.7, 500);
        assert_eq!(traj.len(), 501);
        assert_eq!(traj.last().unwrap().1, reference_integrate(&p, 0.7, 500));
    }
}
