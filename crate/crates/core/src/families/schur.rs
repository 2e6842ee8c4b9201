//! Three-term recurrence `r_n = (a_n x + b_n) r_{n-1} - c_n r_{n-2}` with
//! `r_0 = 1`, `r_1 = a_1 x + b_1`.

use num_traits::Zero;

use super::{memo_term, CoefficientProvider, RecurrenceFamily};
use crate::error::{Error, Result};
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurParams {
    pub a: CoefficientProvider,
    pub b: CoefficientProvider,
    pub c: CoefficientProvider,
}

impl SchurParams {
    /// Checks `a_u c_u != 0` for `u <= n` (`c` from `u = 2`).
    pub fn validate_up_to(&self, n: usize) -> Result<()> {
        for u in 1..=n as u64 {
            if self.a.eval(u)?.is_zero() {
                return Err(Error::InvalidParams(format!("a_{u} = 0")));
            }
            if u >= 2 && self.c.eval(u)?.is_zero() {
                return Err(Error::InvalidParams(format!("c_{u} = 0")));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct SchurFamily {
    params: SchurParams,
    cache: Vec<Polynomial>,
}

impl SchurFamily {
    pub fn new(params: SchurParams) -> Self {
        SchurFamily {
            params,
            cache: Vec::new(),
        }
    }

    pub fn params(&self) -> &SchurParams {
        &self.params
    }
}

impl RecurrenceFamily for SchurFamily {
    fn term(&mut self, n: usize) -> Result<Polynomial> {
        let params = &self.params;
        memo_term(&mut self.cache, n, |prev, idx| {
            params.validate_up_to(idx)?;
            if idx == 0 {
                return Ok(Polynomial::one());
            }
            let u = idx as u64;
            let lin = Polynomial::from_coeffs(vec![params.b.eval(u)?, params.a.eval(u)?]);
            if idx == 1 {
                return Ok(lin);
            }
            let c = params.c.eval(u)?;
            Ok(&(&lin * &prev[idx - 1]) - &prev[idx - 2].scale(&c))
        })
    }

    fn label(&self) -> String {
        "schur".to_string()
    }
}

pub fn gen_schur(params: &SchurParams, n: usize) -> Result<Polynomial> {
    SchurFamily::new(params.clone()).term(n)
}
