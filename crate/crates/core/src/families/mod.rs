//! Recurrence-defined polynomial families and their quasi-combinations.

pub mod provider;
pub mod schur;
pub mod turaj;
pub mod ulas;

pub use provider::{eval_poly, CoefficientProvider, RationalFunction};
pub use schur::{gen_schur, SchurFamily, SchurParams};
pub use turaj::{gen_turaj, predicted_lead_const_turaj, MiddleTerm, TurajFamily, TurajParams};
pub use ulas::{gen_ulas, Regime, UlasFamily, UlasParams, UlasShape};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::ExactRational;

/// A sequence `r_0, r_1, ...` generated on demand.
///
/// Implementations memoize generated terms, so `term` takes `&mut self`;
/// clone the family to evaluate from several threads.
pub trait RecurrenceFamily {
    fn term(&mut self, n: usize) -> Result<Polynomial>;

    /// Short identifier used in reports.
    fn label(&self) -> String;
}

/// `r_n + c r_{n-1}`.
pub fn gen_quasi<F: RecurrenceFamily + ?Sized>(
    family: &mut F,
    n: usize,
    c: &ExactRational,
) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::InvalidParams(
            "quasi-combination needs n >= 1".into(),
        ));
    }
    let current = family.term(n)?;
    let previous = family.term(n - 1)?;
    Ok(&current + &previous.scale(c))
}

/// Grows `cache` up to index `n` with `step(cache, idx)` and returns `r_n`.
pub(crate) fn memo_term(
    cache: &mut Vec<Polynomial>,
    n: usize,
    mut step: impl FnMut(&[Polynomial], usize) -> Result<Polynomial>,
) -> Result<Polynomial> {
    while cache.len() <= n {
        let idx = cache.len();
        let next = step(cache, idx)?;
        cache.push(next);
    }
    Ok(cache[n].clone())
}
