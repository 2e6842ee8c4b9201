//! A closed set of families with uniform access to generation, closed-form
//! resultants and discriminants.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::families::{RecurrenceFamily, SchurFamily, TurajFamily, UlasFamily};
use crate::formulas::{quasi_discriminant, ulas, ClosedResultant, DiffRelation, UlasLine};
use crate::hypergeom::{
    mahlburg_ono_disc, CentralBinomialFamily, MahlburgOnoFamily, ShiftedHypergeometricFamily,
};
use crate::poly::Polynomial;
use crate::rational::ExactRational;

#[derive(Debug, Clone)]
pub enum Family {
    Schur(SchurFamily),
    Ulas(UlasFamily),
    Turaj(TurajFamily),
    /// Central binomial sums; terms come from the recurrence.
    CentralBinomial(CentralBinomialFamily, UlasFamily),
    ShiftedHypergeometric(ShiftedHypergeometricFamily, UlasFamily),
    MahlburgOno(MahlburgOnoFamily, UlasFamily),
}

impl Family {
    pub fn central_binomial(fam: CentralBinomialFamily) -> Result<Self> {
        let ulas = fam.ulas_family()?;
        Ok(Family::CentralBinomial(fam, ulas))
    }

    pub fn shifted(fam: ShiftedHypergeometricFamily) -> Result<Self> {
        let ulas = fam.ulas_family()?;
        Ok(Family::ShiftedHypergeometric(fam, ulas))
    }

    pub fn mahlburg_ono(fam: MahlburgOnoFamily) -> Result<Self> {
        let ulas = fam.ulas_family()?;
        Ok(Family::MahlburgOno(fam, ulas))
    }

    fn inner(&mut self) -> &mut dyn ClosedResultant {
        match self {
            Family::Schur(f) => f,
            Family::Ulas(f) => f,
            Family::Turaj(f) => f,
            Family::CentralBinomial(_, f)
            | Family::ShiftedHypergeometric(_, f)
            | Family::MahlburgOno(_, f) => f,
        }
    }

    /// The differential relation used by the quasi-discriminant, if known.
    pub fn relation(&self) -> Option<DiffRelation> {
        match self {
            Family::CentralBinomial(f, _) => Some(f.diff_relation()),
            Family::ShiftedHypergeometric(f, _) => Some(f.diff_relation()),
            Family::MahlburgOno(f, _) => Some(f.diff_relation()),
            _ => None,
        }
    }

    /// `disc(r_n + c r_{n-1})` through the generic differential-relation route.
    pub fn quasi_disc(&mut self, n: usize, c: &ExactRational) -> Result<ExactRational> {
        let relation = self.relation().ok_or_else(|| {
            Error::InvalidParams(format!(
                "no differential relation known for {}",
                self.label()
            ))
        })?;
        quasi_discriminant(self, &relation, n, c)
    }

    /// `disc(r_n + c r_{n-1})` by the most specific closed expression
    /// available for the family.
    pub fn formula_disc(&mut self, n: usize, c: &ExactRational) -> Result<ExactRational> {
        match self {
            Family::CentralBinomial(f, _) if n >= 2 => f.closed_disc(n, c),
            Family::ShiftedHypergeometric(f, _) if n >= 2 => f.closed_disc(n, c),
            Family::MahlburgOno(f, _) if c.is_zero() => mahlburg_ono_disc(f, n),
            _ => self.quasi_disc(n, c),
        }
    }

    pub fn quasi(&mut self, n: usize, c: &ExactRational) -> Result<Polynomial> {
        crate::families::gen_quasi(self, n, c)
    }
}

impl RecurrenceFamily for Family {
    fn term(&mut self, n: usize) -> Result<Polynomial> {
        self.inner().term(n)
    }

    fn label(&self) -> String {
        match self {
            Family::Schur(f) => f.label(),
            Family::Ulas(f) => f.label(),
            Family::Turaj(f) => f.label(),
            Family::CentralBinomial(..) => "example-5.3".into(),
            Family::ShiftedHypergeometric(f, _) => {
                format!(
                    "example-5.4(alpha={},beta={},gamma={})",
                    f.alpha, f.beta, f.gamma
                )
            }
            Family::MahlburgOno(f, _) => format!("mahlburg-ono(r={})", f.r),
        }
    }
}

impl ClosedResultant for Family {
    fn closed_resultant(&mut self, n: usize) -> Result<ExactRational> {
        match self {
            Family::CentralBinomial(f, _) => f.closed_resultant(n),
            Family::ShiftedHypergeometric(f, _) => f.closed_resultant(n),
            Family::MahlburgOno(_, u) if n >= 2 => ulas::ulas_resultant_of(u, n, UlasLine::Second),
            _ => self.inner().closed_resultant(n),
        }
    }

    fn first_closed_index(&self) -> usize {
        match self {
            Family::Schur(f) => f.first_closed_index(),
            Family::Ulas(f) => f.first_closed_index(),
            Family::Turaj(f) => f.first_closed_index(),
            _ => 1,
        }
    }
}
