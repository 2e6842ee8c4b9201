use num_traits::One;

use crate::error::{Error, Result};
use crate::families::SchurParams;
use crate::rational::{pow_u, ExactRational};

/// `(-1)^{n(n-1)/2} prod_{i=1}^{n-1} a_i^{2(n-i)} c_{i+1}^i`.
pub fn schur_resultant(params: &SchurParams, n: usize) -> Result<ExactRational> {
    if n == 0 {
        return Err(Error::InvalidParams("Schur resultant needs n >= 1".into()));
    }
    params.validate_up_to(n)?;
    let mut acc = ExactRational::one();
    for i in 1..n {
        let a = params.a.eval(i as u64)?;
        let c = params.c.eval(i as u64 + 1)?;
        acc *= pow_u(&a, 2 * (n - i) as u64)? * pow_u(&c, i as u64)?;
    }
    if (n * (n - 1) / 2) % 2 == 1 {
        acc = -acc;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::CoefficientProvider;
    use crate::rational::int;

    fn constant(a: i64, b: i64, c: i64) -> SchurParams {
        SchurParams {
            a: CoefficientProvider::constant(int(a)),
            b: CoefficientProvider::constant(int(b)),
            c: CoefficientProvider::constant(int(c)),
        }
    }

    #[test]
    fn closed_values() {
        assert_eq!(schur_resultant(&constant(1, 0, 1), 2).unwrap(), int(-1));
        assert_eq!(schur_resultant(&constant(1, 0, 1), 1).unwrap(), int(1));
        assert_eq!(schur_resultant(&constant(2, 0, 3), 3).unwrap(), int(-1728));
    }
}
