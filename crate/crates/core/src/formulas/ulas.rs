use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::families::{RecurrenceFamily, UlasFamily, UlasParams, UlasShape};
use crate::rational::{pow_u, sign_of, ExactRational};
use crate::resultant::resultant;

/// Which of the two equivalent closed expressions to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UlasLine {
    /// Uses the leading and constant coefficients of the generated terms.
    First,
    /// Explicit in `r_0`, `r_1`, `a_{n,s}` and `v_n`.
    Second,
}

/// `sum_{u=2}^n ((u-2)k + j)((u-1)k + j + 1 + l)`.
pub fn ulas_sign_exponent(shape: UlasShape, n: usize) -> BigInt {
    let UlasShape { j, k, l, .. } = shape;
    (2..=n)
        .map(|u| BigInt::from((u - 2) * k + j) * BigInt::from((u - 1) * k + j + 1 + l))
        .sum()
}

/// `R_1 = Res(r_1, r_0)` by the Sylvester oracle.
pub(crate) fn initial_resultant(family: &mut UlasFamily) -> Result<ExactRational> {
    let r0 = family.term(0)?;
    let r1 = family.term(1)?;
    resultant(&r1, &r0)
}

/// `Res(r_n, r_{n-1})` for `n >= 2`.
pub fn ulas_resultant(params: &UlasParams, n: usize, line: UlasLine) -> Result<ExactRational> {
    ulas_resultant_of(&mut UlasFamily::new(params.clone())?, n, line)
}

pub(crate) fn ulas_resultant_of(
    family: &mut UlasFamily,
    n: usize,
    line: UlasLine,
) -> Result<ExactRational> {
    if n < 2 {
        return Err(Error::InvalidParams(
            "closed Ulas resultant needs n >= 2".into(),
        ));
    }
    let r1 = initial_resultant(family)?;
    let body = match line {
        UlasLine::First => first_line(family, n)?,
        UlasLine::Second => second_line(family.params(), n)?,
    };
    Ok(sign_of(&ulas_sign_exponent(family.params().shape, n)) * body * r1)
}

fn first_line(family: &mut UlasFamily, n: usize) -> Result<ExactRational> {
    let params = family.params().clone();
    let l = params.shape.l;
    let mut acc = ExactRational::one();
    for u in 2..=n {
        let prev = family.term(u - 1)?;
        let lead = prev.leading().cloned().unwrap_or_else(ExactRational::zero);
        // d_u - l - d_{u-2} >= 0 on admissible shapes.
        let gamma = (params.predicted_degree(u) - params.predicted_degree(u - 2))
            .checked_sub(l)
            .ok_or_else(|| Error::InvalidParams(format!("negative exponent at u = {u}")))?;
        acc *= pow_u(&lead, gamma as u64)?
            * pow_u(
                &params.v_at(u as u64)?,
                params.predicted_degree(u - 1) as u64,
            )?
            * pow_u(&prev.constant_term(), l as u64)?;
    }
    Ok(acc)
}

fn second_line(params: &UlasParams, n: usize) -> Result<ExactRational> {
    let UlasShape { i, j, k, l } = params.shape;
    let p_i = params.r0.coeff(i);
    let q_j = params.r1.coeff(j);
    let a2k = params.a(2, k)?;
    let t = if i + l < j + k {
        q_j.clone()
    } else {
        if a2k.is_zero() {
            return Err(Error::ConditionViolated(
                "a_{2,k} = 0 in the i + l = j + k case".into(),
            ));
        }
        (&a2k * &q_j - params.v_at(2)? * &p_i) / &a2k
    };
    let e = |x: usize| x as u64;
    let mut acc = pow_u(&t, e((2 * k - l) * (n - 2)))?
        * pow_u(&params.r1.coeff(0), e(l * (n - 1)))?
        * pow_u(&q_j, e(k + j - l - i))?;
    for u in 0..=(n - 2) {
        acc *= pow_u(&params.v_at((u + 2) as u64)?, e(u * k + j))?;
    }
    for s in 1..n {
        let idx = (s + 1) as u64;
        acc *= pow_u(&params.a(idx, 0)?, e(l * (n - s - 1)))?
            * pow_u(&params.a(idx, k)?, e((2 * k - l) * (n - s - 1)))?;
    }
    Ok(acc)
}
