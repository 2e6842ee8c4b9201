//! `r_n = f_n(x) r_{n-1} - v_n x^l r_{n-2}` with `deg r_0 = i`, `deg r_1 = j`,
//! `deg f_n = k`.

use num_traits::Zero;

use super::{eval_poly, memo_term, CoefficientProvider, RecurrenceFamily};
use crate::error::{Error, Result};
use crate::poly::{Degree, Polynomial};
use crate::rational::ExactRational;

/// The shape `A = (i, j, k, l)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UlasShape {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
}

/// Admissible shapes: `Strict` needs `i <= j, l <= k`; `Relaxed` only
/// `i <= j, i + l <= j + k, l <= 2k` and relies on runtime degree checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    Strict,
    Relaxed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UlasParams {
    pub shape: UlasShape,
    pub r0: Polynomial,
    pub r1: Polynomial,
    /// `f[s]` yields `a_{n,s}`, the `x^s` coefficient of `f_n`.
    pub f: Vec<CoefficientProvider>,
    pub v: CoefficientProvider,
    pub regime: Regime,
}

impl UlasParams {
    pub fn validate(&self) -> Result<()> {
        let UlasShape { i, j, k, l } = self.shape;
        let shape_ok = match self.regime {
            Regime::Strict => i <= j && l <= k,
            Regime::Relaxed => i <= j && i + l <= j + k && l <= 2 * k,
        };
        if !shape_ok {
            return Err(Error::InvalidParams(format!(
                "shape (i, j, k, l) = ({i}, {j}, {k}, {l}) not admissible under {:?}",
                self.regime
            )));
        }
        if self.r0.deg() != Some(i) {
            return Err(Error::InvalidParams(format!(
                "deg r_0 = {}, expected {i}",
                self.r0.degree()
            )));
        }
        if self.r1.deg() != Some(j) {
            return Err(Error::InvalidParams(format!(
                "deg r_1 = {}, expected {j}",
                self.r1.degree()
            )));
        }
        if self.f.len() != k + 1 {
            return Err(Error::InvalidParams(format!(
                "f_n needs {} coefficient providers, got {}",
                k + 1,
                self.f.len()
            )));
        }
        if i + l == j + k && self.t_numerator()?.is_zero() {
            return Err(Error::InvalidParams("a_{2,k} q_j - v_2 p_i = 0".into()));
        }
        Ok(())
    }

    pub fn a(&self, n: u64, s: usize) -> Result<ExactRational> {
        self.f[s].eval(n)
    }

    pub fn v_at(&self, n: u64) -> Result<ExactRational> {
        self.v.eval(n)
    }

    pub fn f_poly(&self, n: u64) -> Result<Polynomial> {
        eval_poly(&self.f, n)
    }

    /// `d_n`: `i` for `n = 0`, `(n - 1) k + j` otherwise.
    pub fn predicted_degree(&self, n: usize) -> usize {
        let UlasShape { i, j, k, .. } = self.shape;
        if n == 0 {
            i
        } else {
            (n - 1) * k + j
        }
    }

    /// `a_{2,k} q_j - v_2 p_i`.
    pub(crate) fn t_numerator(&self) -> Result<ExactRational> {
        let p_i = self.r0.coeff(self.shape.i);
        let q_j = self.r1.coeff(self.shape.j);
        Ok(self.a(2, self.shape.k)? * q_j - self.v_at(2)? * p_i)
    }
}

#[derive(Debug, Clone)]
pub struct UlasFamily {
    params: UlasParams,
    cache: Vec<Polynomial>,
}

impl UlasFamily {
    pub fn new(params: UlasParams) -> Result<Self> {
        params.validate()?;
        Ok(UlasFamily {
            params,
            cache: Vec::new(),
        })
    }

    pub fn params(&self) -> &UlasParams {
        &self.params
    }
}

impl RecurrenceFamily for UlasFamily {
    fn term(&mut self, n: usize) -> Result<Polynomial> {
        let params = &self.params;
        memo_term(&mut self.cache, n, |prev, idx| match idx {
            0 => Ok(params.r0.clone()),
            1 => Ok(params.r1.clone()),
            _ => {
                let u = idx as u64;
                if params.a(u, params.shape.k)?.is_zero() {
                    return Err(Error::InvalidParams(format!("a_{{{u},k}} = 0")));
                }
                let next = &(&params.f_poly(u)? * &prev[idx - 1])
                    - &prev[idx - 2].shift(params.shape.l).scale(&params.v_at(u)?);
                let expected = params.predicted_degree(idx);
                if next.degree() != Degree::Finite(expected) {
                    return Err(Error::DegreeDropped {
                        n: idx,
                        expected,
                        actual: next.degree(),
                    });
                }
                Ok(next)
            }
        })
    }

    fn label(&self) -> String {
        let UlasShape { i, j, k, l } = self.params.shape;
        format!("ulas({i},{j},{k},{l})")
    }
}

pub fn gen_ulas(params: &UlasParams, n: usize) -> Result<Polynomial> {
    UlasFamily::new(params.clone())?.term(n)
}
