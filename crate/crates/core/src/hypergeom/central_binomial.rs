//! `V_n(x) = sum_i C(2i, i) C(2n - 2i, n - i) x^i`, which satisfies
//! `V_n = 2(2n - 1)/n (x + 1) V_{n-1} - 16(n - 1)/n x V_{n-2}`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::families::{RationalFunction, Regime, UlasFamily, UlasParams, UlasShape};
use crate::formulas::DiffRelation;
use crate::poly::Polynomial;
use crate::rational::{from_bigint, int, pow_i, pow_u, rat, ExactRational};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CentralBinomialFamily;

fn central(n: usize) -> BigInt {
    binomial(BigInt::from(2 * n), BigInt::from(n))
}

impl CentralBinomialFamily {
    pub fn direct(&self, n: usize) -> Polynomial {
        Polynomial::from_coeffs(
            (0..=n)
                .map(|i| from_bigint(central(i) * central(n - i)))
                .collect(),
        )
    }

    pub fn ulas_params(&self) -> UlasParams {
        // 2(2n - 1)/n and 16(n - 1)/n.
        let a = RationalFunction {
            num: Polynomial::from_ints(&[-2, 4]),
            den: Polynomial::from_ints(&[0, 1]),
        };
        let v = RationalFunction {
            num: Polynomial::from_ints(&[-16, 16]),
            den: Polynomial::from_ints(&[0, 1]),
        };
        UlasParams {
            shape: UlasShape {
                i: 0,
                j: 1,
                k: 1,
                l: 1,
            },
            r0: Polynomial::one(),
            r1: Polynomial::from_ints(&[2, 2]),
            f: vec![a.clone().into(), a.into()],
            v: v.into(),
            regime: Regime::Strict,
        }
    }

    pub fn ulas_family(&self) -> Result<UlasFamily> {
        UlasFamily::new(self.ulas_params())
    }

    /// `F = 2x(1 - x)`, `G_1 = -2nx`, `G_2 = 8nx`, `H_1 = x + 2n + 1`,
    /// `H_2 = -(n + 1)/2`.
    pub fn diff_relation(&self) -> DiffRelation {
        let n_q = |n: usize| int(n as i64);
        DiffRelation {
            f: Polynomial::from_ints(&[0, 2, -2]),
            g1: Arc::new(move |n| Ok(Polynomial::monomial(n_q(n) * int(-2), 1))),
            g2: Arc::new(move |n| Ok(Polynomial::monomial(n_q(n) * int(8), 1))),
            h1: Arc::new(move |n| Ok(Polynomial::from_coeffs(vec![int(2 * n as i64 + 1), int(1)]))),
            h2: Arc::new(move |n| Ok(Polynomial::constant(rat(-(n as i64) - 1, 2)))),
            e: 1,
        }
    }

    /// `prod_{s=1}^{n-1} (s/(2s+1))^s ((2s+1)/(s+1))^{2n-s-2}`.
    fn product(n: usize) -> Result<ExactRational> {
        let mut acc = ExactRational::one();
        for s in 1..n as i64 {
            acc *= pow_u(&rat(s, 2 * s + 1), s as u64)?
                * pow_u(&rat(2 * s + 1, s + 1), (2 * n as i64 - s - 2) as u64)?;
        }
        Ok(acc)
    }

    /// `Res(V_n, V_{n-1}) = 2^{3n(n-1)} prod_{s=1}^{n-1} ...`.
    pub fn closed_resultant(&self, n: usize) -> Result<ExactRational> {
        if n == 0 {
            return Err(Error::InvalidParams("resultant needs n >= 1".into()));
        }
        Ok(pow_u(&int(2), (3 * n * (n - 1)) as u64)? * Self::product(n)?)
    }

    /// `disc(V_n + c V_{n-1})` by the specialised display
    /// `(-1)^{n(n-1)/2} 2^{3n^2-6n+2} B_0^n V_{n;c}(xi) / (V_{n;c}(0) (4 + c)) prod`,
    /// with `B_0 = (2n+1)c + 8n`, `B_1 = (n/2)c^2 + (2n-1)c`, `xi = -B_1/B_0`.
    pub fn closed_disc(&self, n: usize, c: &ExactRational) -> Result<ExactRational> {
        if n < 2 {
            return Err(Error::InvalidParams(
                "closed discriminant needs n >= 2".into(),
            ));
        }
        let nn = int(n as i64);
        let b0 = (int(2) * &nn + int(1)) * c + int(8) * &nn;
        if b0.is_zero() {
            return Err(Error::DegenerateB {
                n,
                expected: 1,
                actual: crate::poly::Degree::Finite(0),
            });
        }
        let b1 = &nn / int(2) * c * c + (int(2) * &nn - int(1)) * c;
        let xi = -b1 / &b0;
        let at_zero = from_bigint(central(n)) + c * from_bigint(central(n - 1));
        if at_zero.is_zero() {
            return Err(Error::HypothesisViolated(format!(
                "V_(n;c)(0) = 0 denominator at n = {n}, c = {c}"
            )));
        }
        let four_c = int(4) + c;
        if four_c.is_zero() {
            return Err(Error::HypothesisViolated(format!(
                "V_(n;c)(1) = 0 denominator at n = {n}, c = {c}"
            )));
        }
        let denom = at_zero * four_c;
        let quasi = &self.direct(n) + &self.direct(n - 1).scale(c);
        let exp2 = 3 * (n as i64) * (n as i64) - 6 * n as i64 + 2;
        let mut value = pow_i(&int(2), exp2)? * pow_u(&b0, n as u64)? * quasi.eval(&xi) / denom
            * Self::product(n)?;
        if (n * (n - 1) / 2) % 2 == 1 {
            value = -value;
        }
        Ok(value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_quasi, RecurrenceFamily};
    use crate::resultant::{discriminant, resultant};

    #[test]
    fn terms_and_resultants() {
        let fam = CentralBinomialFamily;
        assert_eq!(fam.direct(2), Polynomial::from_ints(&[6, 4, 6]));
        let mut ulas = fam.ulas_family().unwrap();
        for n in 0..=8 {
            assert_eq!(ulas.term(n).unwrap(), fam.direct(n));
        }
        assert_eq!(fam.closed_resultant(2).unwrap(), int(32));
        for n in 1..=6 {
            let oracle = resultant(&fam.direct(n), &fam.direct(n - 1)).unwrap();
            assert_eq!(fam.closed_resultant(n).unwrap(), oracle);
        }
        assert_eq!(
            gen_quasi(&mut ulas, 2, &int(1)).unwrap(),
            Polynomial::from_ints(&[8, 6, 6])
        );
    }

    #[test]
    fn closed_disc_examples() {
        let fam = CentralBinomialFamily;
        assert_eq!(fam.closed_disc(2, &int(0)).unwrap(), int(-128));
        for c in [int(1), int(-1), rat(1, 2)] {
            let quasi = &fam.direct(3) + &fam.direct(2).scale(&c);
            assert_eq!(
                fam.closed_disc(3, &c).unwrap(),
                discriminant(&quasi).unwrap()
            );
        }
        assert!(matches!(
            fam.closed_disc(2, &int(-3)),
            Err(Error::HypothesisViolated(_))
        ));
        assert!(matches!(
            fam.closed_disc(2, &int(-4)),
            Err(Error::HypothesisViolated(_))
        ));
    }
}
