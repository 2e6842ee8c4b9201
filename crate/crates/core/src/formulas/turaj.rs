use num_bigint::BigInt;
use num_traits::{One, Pow};

use crate::error::{Error, Result};
use crate::families::{predicted_lead_const_turaj, RecurrenceFamily, TurajFamily, TurajParams};
use crate::rational::{pow_big, sign_of, ExactRational};
use crate::resultant::resultant;

/// `Res(r_n, r_{n-1})` for `n >= d + 1`, with `R_d` from the oracle.
pub fn turaj_resultant(params: &TurajParams, n: usize) -> Result<ExactRational> {
    turaj_resultant_of(&mut TurajFamily::new(params.clone())?, n)
}

/// The exponent of `L_{s-1}` in the factor for index `s`:
/// `k - l + m (i_d - i_{d-1})` at `s = d + 1`, and
/// `m^{s-d-1} (k + i_d (m - 1)) + k - l` beyond.
pub fn turaj_gamma(params: &TurajParams, s: usize) -> BigInt {
    let d = params.d;
    let m = BigInt::from(params.m);
    let k = BigInt::from(params.k);
    let l = BigInt::from(params.l);
    let i_d = BigInt::from(params.initial[d].deg().unwrap_or(0));
    let i_d1 = BigInt::from(params.initial[d - 1].deg().unwrap_or(0));
    if s == d + 1 {
        &k - &l + &m * (i_d - i_d1)
    } else {
        let pw: BigInt = Pow::pow(&m, (s - d - 1) as u32);
        pw * (&k + i_d * (&m - 1)) + k - l
    }
}

pub(crate) fn turaj_resultant_of(family: &mut TurajFamily, n: usize) -> Result<ExactRational> {
    let params = family.params().clone();
    let d = params.d;
    if n <= d {
        return Err(Error::InvalidParams(format!(
            "closed Turaj resultant needs n >= d + 1 = {}",
            d + 1
        )));
    }
    let r_d = resultant(&family.term(d)?, &family.term(d - 1)?)?;
    let m = BigInt::from(params.m);
    let l = BigInt::from(params.l);
    let deg = |u: usize| params.predicted_degree(u).map(BigInt::from);

    let mut sign = BigInt::from(0);
    let mut acc = ExactRational::one();
    for s in (d + 1)..=n {
        let outer: BigInt = Pow::pow(&m, (n - s) as u32);
        let (lead, constant) = predicted_lead_const_turaj(&params, s - 1)?;
        let d_prev = deg(s - 1)?;
        sign += (deg(s)? + &l) * &d_prev * &outer;
        let v = params.v.eval(s as u64)?;
        let factor = pow_big(&lead, &turaj_gamma(&params, s))?
            * pow_big(&v, &d_prev)?
            * pow_big(&constant, &l)?;
        acc *= pow_big(&factor, &outer)?;
    }
    let outer_d: BigInt = Pow::pow(&m, (n - d) as u32);
    Ok(sign_of(&sign) * acc * pow_big(&r_d, &outer_d)?)
}
