//! Closed-form resultants and discriminants, evaluated exactly.

pub mod parity;
pub mod quasi;
pub mod schur;
pub mod turaj;
pub(crate) mod ulas;

pub use parity::{sign_exponent_audit, AuditFamily, ParityReport};
pub use quasi::{b_polynomial, quasi_discriminant, BPolynomial, DiffRelation, PolyIndexFn};
pub use schur::schur_resultant;
pub use turaj::{turaj_gamma, turaj_resultant};
pub use ulas::{ulas_resultant, ulas_sign_exponent, UlasLine};

use crate::error::Result;
use crate::families::{RecurrenceFamily, SchurFamily, TurajFamily, UlasFamily};
use crate::rational::ExactRational;

/// A family whose consecutive resultant `Res(r_n, r_{n-1})` has a closed form.
pub trait ClosedResultant: RecurrenceFamily {
    fn closed_resultant(&mut self, n: usize) -> Result<ExactRational>;

    /// Smallest `n` accepted by `closed_resultant`.
    fn first_closed_index(&self) -> usize;
}

impl ClosedResultant for SchurFamily {
    fn closed_resultant(&mut self, n: usize) -> Result<ExactRational> {
        schur_resultant(self.params(), n)
    }

    fn first_closed_index(&self) -> usize {
        1
    }
}

/// Uses the first line for `n >= 2` and the oracle value `R_1` at `n = 1`.
impl ClosedResultant for UlasFamily {
    fn closed_resultant(&mut self, n: usize) -> Result<ExactRational> {
        if n == 1 {
            ulas::initial_resultant(self)
        } else {
            ulas::ulas_resultant_of(self, n, UlasLine::First)
        }
    }

    fn first_closed_index(&self) -> usize {
        1
    }
}

impl ClosedResultant for TurajFamily {
    fn closed_resultant(&mut self, n: usize) -> Result<ExactRational> {
        turaj::turaj_resultant_of(self, n)
    }

    fn first_closed_index(&self) -> usize {
        self.params().d + 1
    }
}
