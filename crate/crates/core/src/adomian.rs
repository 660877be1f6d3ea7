//! Adomian polynomials `A_m = Σ_{k=1}^{m} Z_{m,k} F^(k)(u_0)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::diophantine;
use crate::oracle::DerivativeOracle;
use crate::reduced::{self, factorial, Algebra, ReducedPolynomial};
use crate::series::{Scalar, TruncatedSeries};
use crate::{Error, Rational, Result};

/// `A_m`, stored as its reduced polynomials `Z_{m,1}, …, Z_{m,m}`.
///
/// `A_0 = F(u_0)` has no parts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "AdomianJson", into = "AdomianJson")]
pub struct AdomianPolynomial {
    m: usize,
    parts: Vec<ReducedPolynomial>,
}

/// Builds `A_m`.
pub fn adomian(m: usize) -> AdomianPolynomial {
    let parts = (1..=m)
        .map(|k| reduced::reduced_polynomial(m, k).expect("1 <= k <= m"))
        .collect();
    AdomianPolynomial { m, parts }
}

/// Total monomials in `A_m`: the partition number `p(m)`, and 1 for `A_0`.
pub fn monomial_count(m: usize) -> Result<u128> {
    if m == 0 {
        return Ok(1);
    }
    (1..=m).try_fold(0u128, |acc, k| {
        acc.checked_add(diophantine::count(m, k)?)
            .ok_or(Error::CountOverflow { m, k })
    })
}

impl AdomianPolynomial {
    pub fn m(&self) -> usize {
        self.m
    }

    /// `(k, Z_{m,k})` for `k = 1..=m`.
    pub fn parts(&self) -> impl Iterator<Item = (usize, &ReducedPolynomial)> {
        self.parts.iter().enumerate().map(|(i, z)| (i + 1, z))
    }

    pub fn part(&self, k: usize) -> Option<&ReducedPolynomial> {
        k.checked_sub(1).and_then(|i| self.parts.get(i))
    }

    pub fn monomial_count(&self) -> usize {
        if self.m == 0 {
            1
        } else {
            self.parts.iter().map(|z| z.terms().len()).sum()
        }
    }

    /// Substitutes the context into `A_m`.
    pub fn evaluate<A: Algebra>(&self, ctx: &EvaluationContext<A>) -> Result<A> {
        if self.m == 0 {
            return ctx.base_value.clone().ok_or(Error::MissingBaseValue);
        }
        for (what, have) in [
            ("u values", ctx.u_values.len()),
            ("derivative values", ctx.derivative_values.len()),
        ] {
            if have < self.m {
                return Err(Error::ContextTooShort {
                    what,
                    needed: self.m,
                    have,
                });
            }
        }
        let mut total: Option<A> = None;
        for (k, z) in self.parts() {
            let term = z.evaluate(&ctx.u_values)?.mul(&ctx.derivative_values[k - 1]);
            total = Some(match total {
                Some(acc) => acc.add(&term),
                None => term,
            });
        }
        Ok(total.expect("m >= 1 parts"))
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_string(),
            Format::Json => serde_json::to_string(self).expect("adomian polynomial serializes"),
        }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Malformed(e.to_string()))
    }
}

impl fmt::Display for AdomianPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m == 0 {
            return f.write_str("F(u0)");
        }
        for (k, z) in self.parts() {
            if k > 1 {
                f.write_str(" + ")?;
            }
            if z.terms().len() == 1 {
                write!(f, "{z}*F^({k})(u0)")?;
            } else {
                write!(f, "({z})*F^({k})(u0)")?;
            }
        }
        Ok(())
    }
}

/// Output format for rendered polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            other => Err(Error::Malformed(format!(
                "unknown format {other:?}; expected text or json"
            ))),
        }
    }
}

/// Renders `A_m` as plain text or JSON.
pub fn render(a: &AdomianPolynomial, format: Format) -> String {
    a.render(format)
}

/// Values of `u_1, u_2, …` and of `F^(1)(u_0), F^(2)(u_0), …`.
///
/// `u_values[i - 1]` is `u_i` and `derivative_values[k - 1]` is `F^(k)(u_0)`.
/// `base_value` is `F(u_0)`, needed only for `A_0`.
#[derive(Debug, Clone, PartialEq)]
pub struct EvaluationContext<A> {
    pub base_value: Option<A>,
    pub u_values: Vec<A>,
    pub derivative_values: Vec<A>,
}

impl<A> EvaluationContext<A> {
    pub fn new(u_values: Vec<A>, derivative_values: Vec<A>) -> Self {
        Self {
            base_value: None,
            u_values,
            derivative_values,
        }
    }

    /// Splits `F(u_0), F'(u_0), …` into the base value and the derivatives.
    pub fn from_oracle_values(u_values: Vec<A>, mut derivatives: Vec<A>) -> Self {
        let base_value = (!derivatives.is_empty()).then(|| derivatives.remove(0));
        Self {
            base_value,
            u_values,
            derivative_values: derivatives,
        }
    }
}

/// Pairs `(A_m evaluated, [ε^m] F(u_0 + Σ_i ε^i u_i))` for `m = 0..=max_m`.
///
/// The second entry comes from truncated Taylor composition in `ε` and does
/// not touch the reduced-polynomial path.
pub fn generating_series_check<T, O>(oracle: &O, u0: f64, u_values: &[T], max_m: usize) -> Result<Vec<(T, T)>>
where
    T: Scalar,
    O: DerivativeOracle<T> + ?Sized,
{
    if u_values.len() < max_m {
        return Err(Error::ContextTooShort {
            what: "u values",
            needed: max_m,
            have: u_values.len(),
        });
    }
    let derivs = oracle.derivatives(u0, max_m)?;
    let composed = taylor_compose(&derivs, &u_values[..max_m], max_m);
    let ctx = EvaluationContext::from_oracle_values(u_values[..max_m].to_vec(), derivs);
    (0..=max_m)
        .map(|m| Ok((adomian(m).evaluate(&ctx)?, composed.coeff(m))))
        .collect()
}

/// `Σ_k F^(k)(u_0)/k! · g^k` with `g = Σ_{i>=1} u_i ε^i`, truncated at `ε^order`.
fn taylor_compose<T: Scalar>(derivs: &[T], u: &[T], order: usize) -> TruncatedSeries<T> {
    let mut g = vec![T::zero()];
    g.extend(u.iter().cloned());
    let g = TruncatedSeries::from_coeffs(g, order);
    let mut power = TruncatedSeries::one(order);
    let mut total = TruncatedSeries::zero(order);
    for (k, d) in derivs.iter().enumerate().take(order + 1) {
        let inv_fact = T::from_rational(&Rational::new(1.into(), factorial(k)));
        total = total.add(&power.scale(&(d.clone() * inv_fact)));
        power = power.mul(&g);
    }
    total
}

#[derive(Serialize, Deserialize)]
struct PartJson {
    k: usize,
    z: ReducedPolynomial,
}

#[derive(Serialize, Deserialize)]
struct AdomianJson {
    m: usize,
    parts: Vec<PartJson>,
}

impl From<AdomianPolynomial> for AdomianJson {
    fn from(a: AdomianPolynomial) -> Self {
        let parts = a
            .parts
            .into_iter()
            .enumerate()
            .map(|(i, z)| PartJson { k: i + 1, z })
            .collect();
        AdomianJson { m: a.m, parts }
    }
}

impl TryFrom<AdomianJson> for AdomianPolynomial {
    type Error = Error;

    fn try_from(j: AdomianJson) -> Result<Self> {
        if j.parts.len() != j.m {
            return Err(Error::Malformed(format!(
                "A_{} needs {} parts, got {}",
                j.m,
                j.m,
                j.parts.len()
            )));
        }
        let mut parts = Vec::with_capacity(j.m);
        for (i, p) in j.parts.into_iter().enumerate() {
            if p.k != i + 1 || p.z.k() != p.k || p.z.m() != j.m {
                return Err(Error::Malformed(format!(
                    "part {} of A_{} is mislabeled",
                    i + 1,
                    j.m
                )));
            }
            parts.push(p.z);
        }
        Ok(AdomianPolynomial { m: j.m, parts })
    }
}
