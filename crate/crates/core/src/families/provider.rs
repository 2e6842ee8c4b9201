//! Index-dependent scalar sequences (`a_n`, `v_n`, ...).

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{int, ExactRational};

/// A rational function of the index, `num(n) / den(n)`, evaluated exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    pub num: Polynomial,
    pub den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidParams(
                "rational function with zero denominator".into(),
            ));
        }
        Ok(RationalFunction { num, den })
    }

    pub fn polynomial(num: Polynomial) -> Self {
        RationalFunction {
            num,
            den: Polynomial::one(),
        }
    }

    pub fn constant(c: ExactRational) -> Self {
        Self::polynomial(Polynomial::constant(c))
    }

    /// `a + b n`.
    pub fn linear(a: ExactRational, b: ExactRational) -> Self {
        Self::polynomial(Polynomial::from_coeffs(vec![a, b]))
    }

    pub fn eval(&self, n: &ExactRational) -> Result<ExactRational> {
        let d = self.den.eval(n);
        if d.is_zero() {
            return Err(Error::DivisionByZero(format!(
                "rational function pole at n = {n}"
            )));
        }
        Ok(self.num.eval(n) / d)
    }

    pub fn eval_at(&self, n: u64) -> Result<ExactRational> {
        self.eval(&ExactRational::from_integer(n.into()))
    }

    /// `n -> self(n + delta)`.
    pub fn shifted(&self, delta: i64) -> Self {
        let inner = Polynomial::from_coeffs(vec![int(delta), int(1)]);
        RationalFunction {
            num: self.num.compose(&inner),
            den: self.den.compose(&inner),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        RationalFunction {
            num: &self.num * &other.num,
            den: &self.den * &other.den,
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Self::new(&self.num * &other.den, &self.den * &other.num)
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }
}

/// Source of one scalar per index `n`. Deterministic: the same `n` always
/// yields the same value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoefficientProvider {
    Constant(ExactRational),
    /// `values[n - start]` for `start <= n < start + values.len()`.
    Table {
        start: u64,
        values: Vec<ExactRational>,
    },
    Rational(RationalFunction),
}

impl CoefficientProvider {
    pub fn constant(c: ExactRational) -> Self {
        CoefficientProvider::Constant(c)
    }

    pub fn table(start: u64, values: Vec<ExactRational>) -> Self {
        CoefficientProvider::Table { start, values }
    }

    pub fn eval(&self, n: u64) -> Result<ExactRational> {
        match self {
            CoefficientProvider::Constant(c) => Ok(c.clone()),
            CoefficientProvider::Table { start, values } => n
                .checked_sub(*start)
                .and_then(|i| values.get(i as usize))
                .cloned()
                .ok_or_else(|| {
                    Error::InvalidParams(format!(
                        "coefficient table covers n in [{start}, {}), asked for n = {n}",
                        start + values.len() as u64
                    ))
                }),
            CoefficientProvider::Rational(f) => f.eval_at(n),
        }
    }

    pub fn negated(&self) -> Self {
        match self {
            CoefficientProvider::Constant(c) => CoefficientProvider::Constant(-c),
            CoefficientProvider::Table { start, values } => CoefficientProvider::Table {
                start: *start,
                values: values.iter().map(|v| -v).collect(),
            },
            CoefficientProvider::Rational(f) => CoefficientProvider::Rational(f.neg()),
        }
    }
}

impl From<RationalFunction> for CoefficientProvider {
    fn from(f: RationalFunction) -> Self {
        CoefficientProvider::Rational(f)
    }
}

/// Evaluates `sum_s providers[s](n) x^s`.
pub fn eval_poly(providers: &[CoefficientProvider], n: u64) -> Result<Polynomial> {
    let coeffs = providers
        .iter()
        .map(|p| p.eval(n))
        .collect::<Result<Vec<_>>>()?;
    Ok(Polynomial::from_coeffs(coeffs))
}
