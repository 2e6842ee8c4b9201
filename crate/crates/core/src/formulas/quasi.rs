//! Discriminant of the quasi-combination `r_{n;c} = r_n + c r_{n-1}` from a
//! differential relation, with every product over roots turned into a
//! resultant quotient.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::ClosedResultant;
use crate::error::{Error, Result};
use crate::families::gen_quasi;
use crate::poly::{Degree, Polynomial};
use crate::rational::{pow_big, sign_of, ExactRational};
use crate::resultant::resultant;

/// A polynomial-valued sequence `n -> P_n(x)`.
pub type PolyIndexFn = Arc<dyn Fn(usize) -> Result<Polynomial> + Send + Sync>;

/// `F r_n' = G_{1,n} r_n + G_{2,n} r_{n-1} = H_{1,n} r_n + H_{2,n} r_{n+1}`.
#[derive(Clone)]
pub struct DiffRelation {
    pub f: Polynomial,
    pub g1: PolyIndexFn,
    pub g2: PolyIndexFn,
    pub h1: PolyIndexFn,
    pub h2: PolyIndexFn,
    /// Generic x-degree of `Q_{n,c}`.
    pub e: usize,
}

impl fmt::Debug for DiffRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DiffRelation")
            .field("f", &self.f)
            .field("e", &self.e)
            .finish_non_exhaustive()
    }
}

impl DiffRelation {
    /// Checks `F r_n' = G_{1,n} r_n + G_{2,n} r_{n-1}` exactly.
    pub fn check_lowering<Fam: ClosedResultant + ?Sized>(
        &self,
        family: &mut Fam,
        n: usize,
    ) -> Result<()> {
        let r = family.term(n)?;
        let lhs = &self.f * &r.derivative();
        let rhs = &(&(self.g1)(n)? * &r) + &(&(self.g2)(n)? * &family.term(n - 1)?);
        if lhs != rhs {
            return Err(Error::ConditionViolated(format!(
                "F r'_n = G_1 r_n + G_2 r_(n-1) fails at n = {n}"
            )));
        }
        Ok(())
    }

    /// Checks `F r_n' = H_{1,n} r_n + H_{2,n} r_{n+1}` exactly.
    pub fn check_raising<Fam: ClosedResultant + ?Sized>(
        &self,
        family: &mut Fam,
        n: usize,
    ) -> Result<()> {
        let r = family.term(n)?;
        let lhs = &self.f * &r.derivative();
        let rhs = &(&(self.h1)(n)? * &r) + &(&(self.h2)(n)? * &family.term(n + 1)?);
        if lhs != rhs {
            return Err(Error::ConditionViolated(format!(
                "F r'_n = H_1 r_n + H_2 r_(n+1) fails at n = {n}"
            )));
        }
        Ok(())
    }
}

/// `Q_{n,c}(x) = -H_{2,n-1} c^2 + (H_{1,n-1} - G_{1,n}) c + G_{2,n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BPolynomial {
    pub q: Polynomial,
    /// Measured x-degree.
    pub e: usize,
    /// Leading coefficient `B_{0,n}(c)`.
    pub b0: ExactRational,
}

pub fn b_polynomial(relation: &DiffRelation, n: usize, c: &ExactRational) -> Result<BPolynomial> {
    if n == 0 {
        return Err(Error::InvalidParams("Q_{n,c} needs n >= 1".into()));
    }
    let c2 = c * c;
    let q = &(&(relation.h2)(n - 1)?.scale(&-c2)
        + &(&(relation.h1)(n - 1)? - &(relation.g1)(n)?).scale(c))
        + &(relation.g2)(n)?;
    match q.deg() {
        Some(e) if e == relation.e => {
            let b0 = q.leading().cloned().unwrap_or_else(ExactRational::zero);
            Ok(BPolynomial { q, e, b0 })
        }
        _ => Err(Error::DegenerateB {
            n,
            expected: relation.e,
            actual: q.degree(),
        }),
    }
}

/// `disc(r_n + c r_{n-1})` from the closed resultant `R_n`:
///
/// `(-1)^{d(d+2e-1)/2} L^{d - d_{n-1} - 2 - e} R_n Res(Q, r_{n;c}) L^{deg F} / Res(r_{n;c}, F)`
///
/// with `d = deg r_n`, `L = lc(r_n)`. Both differential identities are
/// checked first.
pub fn quasi_discriminant<Fam: ClosedResultant + ?Sized>(
    family: &mut Fam,
    relation: &DiffRelation,
    n: usize,
    c: &ExactRational,
) -> Result<ExactRational> {
    if n < family.first_closed_index() {
        return Err(Error::InvalidParams(format!(
            "quasi-discriminant needs n >= {}",
            family.first_closed_index()
        )));
    }
    relation.check_lowering(family, n)?;
    relation.check_raising(family, n - 1)?;

    let rn = family.term(n)?;
    let rn1 = family.term(n - 1)?;
    let (d, d_prev) = match (rn.deg(), rn1.deg()) {
        (Some(d), Some(d_prev)) if d > d_prev => (d, d_prev),
        _ => {
            return Err(Error::ConditionViolated(format!(
                "need deg r_n > deg r_(n-1), got {} and {}",
                rn.degree(),
                rn1.degree()
            )))
        }
    };
    let lead = rn.leading().cloned().unwrap_or_else(ExactRational::zero);
    let b = b_polynomial(relation, n, c)?;
    let quasi = gen_quasi(family, n, c)?;
    debug_assert_eq!(quasi.degree(), Degree::Finite(d));

    let at_f = resultant(&quasi, &relation.f)?;
    if at_f.is_zero() {
        return Err(Error::HypothesisViolated(format!(
            "r_(n;c) shares a root with F at n = {n}, c = {c}"
        )));
    }
    let at_q = resultant(&b.q, &quasi)?;
    let r_n = family.closed_resultant(n)?;

    let big = |x: usize| BigInt::from(x);
    let sign = sign_of(&(big(d) * (big(d) + big(2 * b.e) - 1) / 2));
    let l_exp = big(d) - big(d_prev) - 2 - big(b.e) + big(relation.f.deg().unwrap_or(0));
    Ok(sign * pow_big(&lead, &l_exp)? * r_n * at_q / at_f)
}
