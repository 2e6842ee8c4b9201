//! `V_n(x) = 2F1[alpha, beta - n; gamma - n; x]` with `alpha, gamma` not
//! integers and `beta` a negative integer, so `deg V_n = n - beta`.

use std::sync::Arc;

use num_traits::{One, Zero};

use super::series::{hyp2f1, pochhammer};
use crate::error::{Error, Result};
use crate::families::{
    CoefficientProvider, RationalFunction, Regime, UlasFamily, UlasParams, UlasShape,
};
use crate::formulas::DiffRelation;
use crate::poly::{Degree, Polynomial};
use crate::rational::{int, is_integer, pow_i, pow_u, ExactRational};
use crate::resultant::resultant;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftedHypergeometricFamily {
    pub alpha: ExactRational,
    pub beta: i64,
    pub gamma: ExactRational,
}

impl ShiftedHypergeometricFamily {
    pub fn new(alpha: ExactRational, beta: i64, gamma: ExactRational) -> Result<Self> {
        if is_integer(&alpha) || is_integer(&gamma) {
            return Err(Error::InvalidParams(
                "alpha and gamma must not be integers".into(),
            ));
        }
        if beta >= 0 {
            return Err(Error::InvalidParams(format!(
                "beta must be a negative integer, got {beta}"
            )));
        }
        Ok(ShiftedHypergeometricFamily { alpha, beta, gamma })
    }

    fn n_shifted(&self, n: usize) -> (ExactRational, ExactRational) {
        let nn = int(n as i64);
        (int(self.beta) - &nn, &self.gamma - nn)
    }

    pub fn direct(&self, n: usize) -> Result<Polynomial> {
        let (b, c) = self.n_shifted(n);
        hyp2f1(self.alpha.clone(), b, c)
    }

    pub fn degree(&self, n: usize) -> usize {
        (n as i64 - self.beta) as usize
    }

    /// Ulas form with shape `(-beta, 1 - beta, 1, 1)`:
    /// `f_n = 1 + (1 - alpha + beta - n)/(gamma - n) x`,
    /// `v_n = (1 + beta - n)(1 - alpha + gamma - n)/((gamma + 1 - n)(gamma - n))`.
    pub fn ulas_params(&self) -> Result<UlasParams> {
        let one = ExactRational::one();
        let lin = |a: ExactRational| Polynomial::from_coeffs(vec![a, int(-1)]);
        let b = int(self.beta);
        let a1 = RationalFunction::new(lin(&one - &self.alpha + &b), lin(self.gamma.clone()))?;
        let v = RationalFunction::new(
            &lin(&one + &b) * &lin(&one - &self.alpha + &self.gamma),
            &lin(&self.gamma + &one) * &lin(self.gamma.clone()),
        )?;
        let i = (-self.beta) as usize;
        Ok(UlasParams {
            shape: UlasShape {
                i,
                j: i + 1,
                k: 1,
                l: 1,
            },
            r0: self.direct(0)?,
            r1: self.direct(1)?,
            f: vec![CoefficientProvider::constant(one), a1.into()],
            v: v.into(),
            regime: Regime::Strict,
        })
    }

    pub fn ulas_family(&self) -> Result<UlasFamily> {
        UlasFamily::new(self.ulas_params()?)
    }

    /// `F = x(1 - x)`, `G_1 = (beta - n) x`,
    /// `G_2 = -(beta - n)(gamma - alpha - n)/(gamma - n) x`,
    /// `H_1 = alpha x + n - gamma + 1`, `H_2 = gamma - n - 1`.
    pub fn diff_relation(&self) -> DiffRelation {
        let (s1, s2, s3, s4) = (self.clone(), self.clone(), self.clone(), self.clone());
        DiffRelation {
            f: Polynomial::from_ints(&[0, 1, -1]),
            g1: Arc::new(move |n| Ok(Polynomial::monomial(s1.n_shifted(n).0, 1))),
            g2: Arc::new(move |n| {
                let (b, c) = s2.n_shifted(n);
                let top = -(&b * (&c - &s2.alpha)) / c;
                Ok(Polynomial::monomial(top, 1))
            }),
            h1: Arc::new(move |n| {
                let (_, c) = s3.n_shifted(n);
                Ok(Polynomial::from_coeffs(vec![int(1) - c, s3.alpha.clone()]))
            }),
            h2: Arc::new(move |n| Ok(Polynomial::constant(s4.n_shifted(n).1 - int(1)))),
            e: 1,
        }
    }

    /// `(-1)^{1-beta} (alpha)_{1-beta} / (gamma - 1)_{1-beta}`.
    fn base(&self) -> ExactRational {
        let k = (1 - self.beta) as usize;
        let value = pochhammer(&self.alpha, k) / pochhammer(&(&self.gamma - int(1)), k);
        if k % 2 == 1 {
            -value
        } else {
            value
        }
    }

    /// `prod_{s=1}^{n-1} ((s-beta)(s+alpha-gamma)/(s-gamma))^{s-beta}
    /// (s+alpha-beta)^{n-s-1} / (s-gamma+1)^{n-1-beta}`.
    fn product(&self, n: usize) -> Result<ExactRational> {
        let b = self.beta;
        let mut acc = ExactRational::one();
        for s in 1..n as i64 {
            let sq = int(s);
            let first = (int(s - b) * (&sq + &self.alpha - &self.gamma)) / (&sq - &self.gamma);
            acc *= pow_u(&first, (s - b) as u64)?
                * pow_u(&(&sq + &self.alpha - int(b)), (n as i64 - s - 1) as u64)?
                / pow_i(&(&sq - &self.gamma + int(1)), n as i64 - 1 - b)?;
        }
        Ok(acc)
    }

    /// `Res(V_1, V_0)` by the oracle.
    pub fn initial_resultant(&self) -> Result<ExactRational> {
        resultant(&self.direct(1)?, &self.direct(0)?)
    }

    /// `Res(V_n, V_{n-1}) = base^{n-1} prod R_1`.
    pub fn closed_resultant(&self, n: usize) -> Result<ExactRational> {
        if n == 0 {
            return Err(Error::InvalidParams("resultant needs n >= 1".into()));
        }
        Ok(pow_u(&self.base(), n as u64 - 1)? * self.product(n)? * self.initial_resultant()?)
    }

    /// `disc(V_n + c V_{n-1})` as
    /// `(-1)^{d(d-1)/2} B_0^d base^{n-1} V_{n;c}(xi) prod R_1 / ((1 + c) V_{n;c}(1))`
    /// with `d = n - beta`,
    /// `B_0 = (n + alpha - beta) c - (beta - n)(gamma - alpha - n)/(gamma - n)`,
    /// `B_1 = (n - gamma)(c^2 + c)`, `xi = -B_1/B_0`.
    pub fn closed_disc(&self, n: usize, c: &ExactRational) -> Result<ExactRational> {
        if n < 2 {
            return Err(Error::InvalidParams(
                "closed discriminant needs n >= 2".into(),
            ));
        }
        let nn = int(n as i64);
        let b = int(self.beta);
        let b0 = (&nn + &self.alpha - &b) * c
            - (&b - &nn) * (&self.gamma - &self.alpha - &nn) / (&self.gamma - &nn);
        if b0.is_zero() {
            return Err(Error::DegenerateB {
                n,
                expected: 1,
                actual: Degree::Finite(0),
            });
        }
        let b1 = (&nn - &self.gamma) * (c * c + c);
        let xi = -b1 / &b0;
        let v_n = self.direct(n)?;
        let v_prev = self.direct(n - 1)?;
        let one = ExactRational::one();
        if (&one + c).is_zero() {
            return Err(Error::HypothesisViolated(format!(
                "V_(n;c)(0) = 1 + c = 0 denominator at n = {n}"
            )));
        }
        let at_one = v_n.eval(&one) + c * v_prev.eval(&one);
        if at_one.is_zero() {
            return Err(Error::HypothesisViolated(format!(
                "V_(n;c)(1) = 0 denominator at n = {n}, c = {c}"
            )));
        }
        let denom = (&one + c) * at_one;
        let quasi = &v_n + &v_prev.scale(c);
        let d = self.degree(n);
        let mut value = pow_u(&b0, d as u64)?
            * pow_u(&self.base(), n as u64 - 1)?
            * quasi.eval(&xi)
            * self.product(n)?
            * self.initial_resultant()?
            / denom;
        if (d * (d - 1) / 2) % 2 == 1 {
            value = -value;
        }
        Ok(value)
    }
}
