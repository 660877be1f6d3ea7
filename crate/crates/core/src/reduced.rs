//! Reduced polynomials `Z_{m,k}`.
//!
//! `Z_{m,k} = Σ u_1^{n_1} ⋯ u_{m-k+1}^{n_{m-k+1}} / (n_1! ⋯ n_{m-k+1}!)`, summed
//! over the solutions produced by [`crate::diophantine::enumerate`].

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num::{BigInt, One, Zero};
use serde::{Deserialize, Serialize};

use crate::diophantine::{self, MultiplicityVector};
use crate::series::{Scalar, TruncatedSeries};
use crate::{Error, Rational, Result};

/// `n!` as a big integer. Values are cached process-wide.
pub fn factorial(n: usize) -> BigInt {
    static CACHE: OnceLock<Mutex<Vec<BigInt>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(vec![BigInt::one()]));
    let mut table = cache.lock().unwrap_or_else(|e| e.into_inner());
    while table.len() <= n {
        let next = table.last().cloned().unwrap_or_else(BigInt::one) * BigInt::from(table.len());
        table.push(next);
    }
    table[n].clone()
}

/// Values that `u_i` can be substituted with when evaluating a polynomial.
pub trait Algebra: Clone {
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, c: &Rational) -> Self;
}

impl<T: Scalar> Algebra for T {
    fn add(&self, other: &Self) -> Self {
        self.clone() + other.clone()
    }

    fn mul(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }

    fn scale(&self, c: &Rational) -> Self {
        self.clone() * T::from_rational(c)
    }
}

impl<T: Scalar> Algebra for TruncatedSeries<T> {
    fn add(&self, other: &Self) -> Self {
        TruncatedSeries::add(self, other)
    }

    fn mul(&self, other: &Self) -> Self {
        TruncatedSeries::mul(self, other)
    }

    fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries::scale(self, &T::from_rational(c))
    }
}

/// One summand of `Z_{m,k}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    coefficient: Rational,
    exponents: MultiplicityVector,
}

impl Monomial {
    /// The monomial attached to a solution: coefficient `1 / Π n_i!`.
    pub fn from_solution(exponents: MultiplicityVector) -> Self {
        let denom = exponents
            .entries()
            .iter()
            .fold(BigInt::one(), |acc, &(_, n)| acc * factorial(n));
        Self {
            coefficient: Rational::new(BigInt::one(), denom),
            exponents,
        }
    }

    pub fn coefficient(&self) -> &Rational {
        &self.coefficient
    }

    pub fn exponents(&self) -> &MultiplicityVector {
        &self.exponents
    }

    /// Substitutes `u[i - 1]` for `u_i`.
    pub fn evaluate<A: Algebra>(&self, u: &[A]) -> Result<A> {
        let needed = self.exponents.max_index();
        if u.len() < needed {
            return Err(Error::ContextTooShort {
                what: "u values",
                needed,
                have: u.len(),
            });
        }
        let mut factors = self
            .exponents
            .entries()
            .iter()
            .flat_map(|&(i, n)| std::iter::repeat_n(&u[i - 1], n));
        // k >= 1, so there is always a first factor
        let first = factors
            .next()
            .ok_or_else(|| Error::Malformed("empty monomial".into()))?;
        let product = factors.fold(first.clone(), |acc, f| acc.mul(f));
        Ok(product.scale(&self.coefficient))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        if !self.coefficient.is_one() {
            write!(f, "{}", self.coefficient)?;
            first = false;
        }
        for &(i, n) in self.exponents.entries() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if n == 1 {
                write!(f, "u{i}")?;
            } else {
                write!(f, "u{i}^{n}")?;
            }
        }
        Ok(())
    }
}

/// `Z_{m,k}` as a canonically ordered list of monomials.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ReducedJson", into = "ReducedJson")]
pub struct ReducedPolynomial {
    m: usize,
    k: usize,
    terms: Vec<Monomial>,
}

impl ReducedPolynomial {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    /// Substitutes `u[i - 1]` for every `u_i`.
    pub fn evaluate<A: Algebra>(&self, u: &[A]) -> Result<A> {
        let mut terms = self.terms.iter();
        let first = terms
            .next()
            .ok_or_else(|| Error::Malformed("empty reduced polynomial".into()))?
            .evaluate(u)?;
        terms.try_fold(first, |acc, t| Ok(acc.add(&t.evaluate(u)?)))
    }

    /// Serialized form, `{"m":..,"k":..,"terms":[{"coeff":"p/q","exps":{"i":n}}]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reduced polynomial serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Malformed(e.to_string()))
    }
}

impl fmt::Display for ReducedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Builds `Z_{m,k}` for `1 <= k <= m`.
pub fn reduced_polynomial(m: usize, k: usize) -> Result<ReducedPolynomial> {
    let solutions = diophantine::enumerate(m, k)?;
    if k > m {
        return Err(Error::PowerExceedsSubscript { m, k });
    }
    let terms = solutions.into_iter().map(Monomial::from_solution).collect();
    Ok(ReducedPolynomial { m, k, terms })
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    exps: BTreeMap<usize, usize>,
}

#[derive(Serialize, Deserialize)]
struct ReducedJson {
    m: usize,
    k: usize,
    terms: Vec<TermJson>,
}

impl From<ReducedPolynomial> for ReducedJson {
    fn from(z: ReducedPolynomial) -> Self {
        let terms = z
            .terms
            .iter()
            .map(|t| TermJson {
                coeff: t.coefficient.to_string(),
                exps: t.exponents.entries().iter().copied().collect(),
            })
            .collect();
        ReducedJson {
            m: z.m,
            k: z.k,
            terms,
        }
    }
}

impl TryFrom<ReducedJson> for ReducedPolynomial {
    type Error = Error;

    /// Accepts only the exact canonical `Z_{m,k}`; a reduced polynomial is
    /// fully determined by `(m, k)`.
    fn try_from(j: ReducedJson) -> Result<Self> {
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in j.terms {
            let coefficient: Rational = t
                .coeff
                .parse()
                .map_err(|_| Error::Malformed(format!("bad coefficient {:?}", t.coeff)))?;
            let exponents = MultiplicityVector::new(j.m, j.k, t.exps)?;
            terms.push(Monomial {
                coefficient,
                exponents,
            });
        }
        let parsed = ReducedPolynomial {
            m: j.m,
            k: j.k,
            terms,
        };
        if parsed != reduced_polynomial(j.m, j.k)? {
            return Err(Error::Malformed(format!(
                "terms do not form Z_{{{},{}}}",
                j.m, j.k
            )));
        }
        Ok(parsed)
    }
}

/// One term of a closed-form family: `u_1^{m - u1_offset} Π u_i^{e_i}` over
/// `(m - u1_offset)! Π f!`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemplateTerm {
    pub u1_offset: usize,
    /// `(index, exponent)` on `u_2 …`.
    pub fixed: &'static [(usize, usize)],
    /// Factorial arguments in the denominator besides `(m - u1_offset)!`.
    pub fixed_factorials: &'static [usize],
}

/// General-`m` formula for `Z_{m, m-j}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormTemplate {
    pub j: usize,
    pub terms: &'static [TemplateTerm],
}

const fn term(
    u1_offset: usize,
    fixed: &'static [(usize, usize)],
    fixed_factorials: &'static [usize],
) -> TemplateTerm {
    TemplateTerm {
        u1_offset,
        fixed,
        fixed_factorials,
    }
}

static TEMPLATES: [&[TemplateTerm]; 6] = [
    &[term(0, &[], &[])],
    &[term(2, &[(2, 1)], &[])],
    &[term(3, &[(3, 1)], &[]), term(4, &[(2, 2)], &[2])],
    &[
        term(4, &[(4, 1)], &[]),
        term(5, &[(2, 1), (3, 1)], &[]),
        term(6, &[(2, 3)], &[3]),
    ],
    &[
        term(5, &[(5, 1)], &[]),
        term(6, &[(2, 1), (4, 1)], &[]),
        term(6, &[(3, 2)], &[2]),
        term(7, &[(2, 2), (3, 1)], &[2]),
        term(8, &[(2, 4)], &[4]),
    ],
    &[
        term(6, &[(6, 1)], &[]),
        term(7, &[(3, 1), (4, 1)], &[]),
        term(7, &[(2, 1), (5, 1)], &[]),
        term(8, &[(2, 1), (3, 2)], &[2]),
        term(8, &[(2, 2), (4, 1)], &[2]),
        term(9, &[(2, 3), (3, 1)], &[3]),
        term(10, &[(2, 5)], &[5]),
    ],
];

/// The closed-form family for `Z_{m, m-j}`, `0 <= j <= 5`.
pub fn closed_form(j: usize) -> Result<ClosedFormTemplate> {
    TEMPLATES
        .get(j)
        .map(|terms| ClosedFormTemplate { j, terms })
        .ok_or(Error::NoTemplate(j))
}

/// Evaluates a template at `m`, dropping terms with a negative `u_1` power.
pub fn instantiate(template: &ClosedFormTemplate, m: usize) -> Result<ReducedPolynomial> {
    let j = template.j;
    if m <= j {
        return Err(Error::TemplateTooSmall { j, m });
    }
    let k = m - j;
    let mut terms = Vec::new();
    for t in template.terms {
        let Some(u1_power) = m.checked_sub(t.u1_offset) else {
            continue;
        };
        let pairs = std::iter::once((1, u1_power)).chain(t.fixed.iter().copied());
        let exponents = MultiplicityVector::new(m, k, pairs)?;
        let denom = t
            .fixed_factorials
            .iter()
            .fold(factorial(u1_power), |acc, &f| acc * factorial(f));
        let coefficient = Rational::new(BigInt::one(), denom);
        if coefficient.is_zero() {
            return Err(Error::Malformed("zero template coefficient".into()));
        }
        terms.push(Monomial {
            coefficient,
            exponents,
        });
    }
    terms.sort_by(|a, b| a.exponents.canonical_cmp(&b.exponents));
    Ok(ReducedPolynomial { m, k, terms })
}
