//! Contiguous relations of `2F1`, checked as exact polynomial identities.
//!
//! Writing `F(a, b; c)` for `2F1[a, b; c; x]`:
//!
//! * derivative shift: `F(a, b; c)' = (ab / c) F(a + 1, b + 1; c + 1)`
//! * three-term recurrence:
//!   `F(a, b; c) = (c + (1 - a + b) x)/c F(a, b + 1; c + 1)
//!   - (1 + b)(1 - a + c) x / ((c + 1) c) F(a, b + 2; c + 2)`
//! * lowering: `x(1 - x) F' = (c - 1) F(a, b - 1; c - 1) + (a x + 1 - c) F(a, b; c)`
//! * raising: `x(1 - x) F' = b x F(a, b; c) - b (c - a)/c x F(a, b + 1; c + 1)`
//! * mixed: `x(x - 1) F' = -a/(b - 1 - a) ((b - c) F(a + 1, b - 1; c)
//!   + ((b - 1 - a) x - (b - c)) F(a, b; c))`
//!
//! The first four terminate through `a`, the mixed relation through `b`.

use num_traits::{One, Zero};

use super::series::hyp2f1;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{nonpositive_integer, ExactRational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ContiguousRelation {
    ThreeTerm,
    Lowering,
    Raising,
    Mixed,
}

impl ContiguousRelation {
    pub const ALL: [ContiguousRelation; 4] = [
        ContiguousRelation::ThreeTerm,
        ContiguousRelation::Lowering,
        ContiguousRelation::Raising,
        ContiguousRelation::Mixed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ContiguousRelation::ThreeTerm => "three-term",
            ContiguousRelation::Lowering => "lowering",
            ContiguousRelation::Raising => "raising",
            ContiguousRelation::Mixed => "mixed",
        }
    }
}

/// Both sides of an identity, expanded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub lhs: Polynomial,
    pub rhs: Polynomial,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn q(n: i64) -> ExactRational {
    ExactRational::from_integer(n.into())
}

fn require_terminating(p: &ExactRational, name: &str) -> Result<()> {
    if nonpositive_integer(p).is_none() {
        return Err(Error::InvalidParams(format!(
            "{name} = {p} must be a nonpositive integer for every term to terminate"
        )));
    }
    Ok(())
}

/// `F' = (ab/c) F(a + 1, b + 1; c + 1)`; `a` must be a nonpositive integer.
pub fn check_derivative_shift(
    a: &ExactRational,
    b: &ExactRational,
    c: &ExactRational,
) -> Result<IdentityCheck> {
    require_terminating(a, "a")?;
    let lhs = hyp2f1(a.clone(), b.clone(), c.clone())?.derivative();
    let factor = a * b / c;
    // At a = 0 the shifted series need not terminate, but its factor is zero.
    let rhs = if factor.is_zero() {
        Polynomial::zero()
    } else {
        hyp2f1(a + q(1), b + q(1), c + q(1))?.scale(&factor)
    };
    Ok(IdentityCheck { lhs, rhs })
}

pub fn check_relation(
    which: ContiguousRelation,
    a: &ExactRational,
    b: &ExactRational,
    c: &ExactRational,
) -> Result<IdentityCheck> {
    let x = Polynomial::x();
    let one = ExactRational::one();
    let f = |a: &ExactRational, b: &ExactRational, c: &ExactRational| {
        hyp2f1(a.clone(), b.clone(), c.clone())
    };
    let base = f(a, b, c);
    match which {
        ContiguousRelation::ThreeTerm => {
            require_terminating(a, "a")?;
            let lin = Polynomial::from_coeffs(vec![c.clone(), &one - a + b]).scale(&c.recip());
            let second = (&one + b) * (&one + c - a) / ((c + &one) * c);
            let rhs = &(&lin * &f(a, &(b + q(1)), &(c + q(1)))?)
                - &(&x * &f(a, &(b + q(2)), &(c + q(2)))?).scale(&second);
            Ok(IdentityCheck { lhs: base?, rhs })
        }
        ContiguousRelation::Lowering => {
            require_terminating(a, "a")?;
            let base = base?;
            let lhs = &Polynomial::from_coeffs(vec![q(0), q(1), q(-1)]) * &base.derivative();
            let lin = Polynomial::from_coeffs(vec![&one - c, a.clone()]);
            let rhs = &f(a, &(b - q(1)), &(c - q(1)))?.scale(&(c - &one)) + &(&lin * &base);
            Ok(IdentityCheck { lhs, rhs })
        }
        ContiguousRelation::Raising => {
            require_terminating(a, "a")?;
            let base = base?;
            let lhs = &Polynomial::from_coeffs(vec![q(0), q(1), q(-1)]) * &base.derivative();
            let rhs = &(&x * &base).scale(b)
                - &(&x * &f(a, &(b + q(1)), &(c + q(1)))?).scale(&(b * (c - a) / c));
            Ok(IdentityCheck { lhs, rhs })
        }
        ContiguousRelation::Mixed => {
            require_terminating(b, "b")?;
            let gap = b - &one - a;
            if gap.is_zero() {
                return Err(Error::DivisionByZero("b - 1 - a = 0".into()));
            }
            let base = base?;
            let lhs = &Polynomial::from_coeffs(vec![q(0), q(-1), q(1)]) * &base.derivative();
            let lin = Polynomial::from_coeffs(vec![c - b, gap.clone()]);
            let inner = &f(&(a + q(1)), &(b - q(1)), c)?.scale(&(b - c)) + &(&lin * &base);
            let rhs = inner.scale(&(-a / gap));
            Ok(IdentityCheck { lhs, rhs })
        }
    }
}
