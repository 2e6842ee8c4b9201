//! `V_r(n; x) = x^n 2F1[-n, n + beta_r; gamma_r; 2/x]` for `r in {0, 4, 6, 10}`,
//! with `beta_r = (r + 1)/6`, `gamma_r = 3/2` for `r in {0, 6}` and `4/3`
//! otherwise. These satisfy
//! `V(n + 1) = (f(n) x + g(n)) V(n) + h(n) x^2 V(n - 1)`.

use std::sync::Arc;

use num_traits::{One, Zero};

use super::series::{hyp2f1_poly, HypergeomSpec};
use crate::error::{Error, Result};
use crate::families::{
    CoefficientProvider, RationalFunction, Regime, UlasFamily, UlasParams, UlasShape,
};
use crate::formulas::DiffRelation;
use crate::poly::Polynomial;
use crate::rational::{int, pow_u, rat, ExactRational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MahlburgOnoFamily {
    pub r: u32,
    pub beta: ExactRational,
    pub gamma: ExactRational,
}

/// Polynomial in `n` from low-to-high rational coefficients.
fn pn(coeffs: Vec<ExactRational>) -> Polynomial {
    Polynomial::from_coeffs(coeffs)
}

impl MahlburgOnoFamily {
    pub fn new(r: u32) -> Result<Self> {
        let gamma = match r {
            0 | 6 => rat(3, 2),
            4 | 10 => rat(4, 3),
            _ => {
                return Err(Error::InvalidParams(format!(
                    "r must be 0, 4, 6 or 10, got {r}"
                )))
            }
        };
        Ok(MahlburgOnoFamily {
            r,
            beta: rat(r as i64 + 1, 6),
            gamma,
        })
    }

    fn ri(&self) -> i64 {
        self.r as i64
    }

    /// `(3n + 3 gamma)(6n + r + 1)(12n + r - 5)`.
    fn common_den(&self) -> Polynomial {
        let r = self.ri();
        &(&pn(vec![&self.gamma * int(3), int(3)]) * &pn(vec![int(r + 1), int(6)]))
            * &pn(vec![int(r - 5), int(12)])
    }

    pub fn f(&self) -> RationalFunction {
        let r = self.ri();
        let quad = pn(vec![&self.gamma * int(3 * r - 15), int(6 * r + 6), int(36)]);
        RationalFunction {
            num: &pn(vec![int(r + 1), int(12)]) * &quad,
            den: self.common_den(),
        }
    }

    pub fn g(&self) -> RationalFunction {
        let r = self.ri();
        let num = &(&pn(vec![int(r - 5), int(12)]) * &pn(vec![int(r + 1), int(12)]))
            * &pn(vec![int(r + 7), int(12)]);
        RationalFunction {
            num: -num,
            den: self.common_den(),
        }
    }

    /// `-18 n (n + beta - gamma)(12n + r + 7) / den`.
    pub fn h(&self) -> RationalFunction {
        let r = self.ri();
        let num = &(&pn(vec![int(0), int(-18)]) * &pn(vec![&self.beta - &self.gamma, int(1)]))
            * &pn(vec![int(r + 7), int(12)]);
        RationalFunction {
            num,
            den: self.common_den(),
        }
    }

    /// `n / h(n)` with the factor `n` cancelled, so it is defined at `n = 0`.
    pub fn n_over_h(&self) -> RationalFunction {
        let r = self.ri();
        RationalFunction {
            num: -self.common_den(),
            den: (&pn(vec![&self.beta - &self.gamma, int(1)]) * &pn(vec![int(r + 7), int(12)]))
                .scale(&int(18)),
        }
    }

    /// The direct expansion, monic of degree `n`.
    pub fn v_r_polynomial(&self, n: usize) -> Polynomial {
        let nn = int(n as i64);
        let spec = HypergeomSpec::new(-&nn, &nn + &self.beta, self.gamma.clone())
            .expect("gamma_r is not an integer and -n terminates");
        let series = hyp2f1_poly(&spec);
        let mut coeffs = vec![ExactRational::zero(); n + 1];
        let mut two_k = ExactRational::one();
        for k in 0..=n {
            coeffs[n - k] = series.coeff(k) * &two_k;
            two_k *= int(2);
        }
        Polynomial::from_coeffs(coeffs)
    }

    /// `c_r(j, 0) = g(j - 1) ... g(0)`.
    pub fn telescoped_constant(&self, j: usize) -> Result<ExactRational> {
        let g = self.g();
        (0..j as u64).try_fold(ExactRational::one(), |acc, s| Ok(acc * g.eval_at(s)?))
    }

    /// Ulas form: shape `(0, 1, 1, 2)`, `f_n = f(n-1) x + g(n-1)`, `v_n = -h(n-1)`.
    pub fn ulas_params(&self) -> UlasParams {
        UlasParams {
            shape: UlasShape {
                i: 0,
                j: 1,
                k: 1,
                l: 2,
            },
            r0: Polynomial::one(),
            r1: self.v_r_polynomial(1),
            f: vec![self.g().shifted(-1).into(), self.f().shifted(-1).into()],
            v: CoefficientProvider::from(self.h().shifted(-1).neg()),
            regime: Regime::Relaxed,
        }
    }

    pub fn ulas_family(&self) -> Result<UlasFamily> {
        UlasFamily::new(self.ulas_params())
    }

    /// `n / (2n + beta - 1)`.
    fn lowering_scale(&self, n: usize) -> ExactRational {
        let nn = int(n as i64);
        &nn / (int(2) * &nn + &self.beta - int(1))
    }

    /// `n + beta - gamma`.
    fn shifted_gap(&self, n: usize) -> ExactRational {
        int(n as i64) + &self.beta - &self.gamma
    }

    /// `K = (n / h(n)) / (2n + beta - 1)`.
    fn raising_scale(&self, n: usize) -> Result<ExactRational> {
        let nn = int(n as i64);
        Ok(self.n_over_h().eval_at(n as u64)? / (int(2) * nn + &self.beta - int(1)))
    }

    pub fn g1_at(&self, n: usize) -> Polynomial {
        let top = self.lowering_scale(n) * (int(n as i64) + &self.gamma - int(1));
        Polynomial::monomial(top, 1)
    }

    pub fn g2_at(&self, n: usize) -> Polynomial {
        Polynomial::monomial(self.lowering_scale(n) * self.shifted_gap(n), 2)
    }

    /// `K ((n + gamma - 1) h x - m (f x + g))` with `m = n + beta - gamma`,
    /// expanded as `n(n + gamma - 1)/(2n + beta - 1) x - K m (f x + g)`.
    pub fn h1_at(&self, n: usize) -> Result<Polynomial> {
        let u = n as u64;
        let km = self.raising_scale(n)? * self.shifted_gap(n);
        let linear = Polynomial::from_coeffs(vec![self.g().eval_at(u)?, self.f().eval_at(u)?]);
        Ok(&self.g1_at(n) - &linear.scale(&km))
    }

    pub fn h2_at(&self, n: usize) -> Result<Polynomial> {
        Ok(Polynomial::constant(
            self.raising_scale(n)? * self.shifted_gap(n),
        ))
    }

    /// `F = x(x - 2)`, `e = 2`.
    pub fn diff_relation(&self) -> DiffRelation {
        let (a, b, c, d) = (self.clone(), self.clone(), self.clone(), self.clone());
        DiffRelation {
            f: Polynomial::from_ints(&[0, -2, 1]),
            g1: Arc::new(move |n| Ok(a.g1_at(n))),
            g2: Arc::new(move |n| Ok(b.g2_at(n))),
            h1: Arc::new(move |n| c.h1_at(n)),
            h2: Arc::new(move |n| d.h2_at(n)),
            e: 2,
        }
    }
}

/// Closed discriminant of `V_r(n; x)`:
/// `(-1)^{n(n-1)/2} (n(n - gamma + beta)/(2n + beta - 1))^n c(n)/V(n; 2)
/// prod_{j=1}^{n-1} h(j)^j c(j)^2`, with `c(j)` the constant term of `V_r(j; x)`.
pub fn mahlburg_ono_disc(family: &MahlburgOnoFamily, n: usize) -> Result<ExactRational> {
    if n == 0 {
        return Err(Error::InvalidParams("discriminant needs n >= 1".into()));
    }
    let v_n = family.v_r_polynomial(n);
    let at_two = v_n.eval(&int(2));
    if at_two.is_zero() {
        return Err(Error::HypothesisViolated(format!(
            "V_r(n; 2) = 0 at r = {}, n = {n}",
            family.r
        )));
    }
    let h = family.h();
    let mut acc = pow_u(
        &(family.lowering_scale(n) * family.shifted_gap(n)),
        n as u64,
    )? * v_n.constant_term()
        / at_two;
    for j in 1..n {
        let c_j = family.v_r_polynomial(j).constant_term();
        acc *= pow_u(&h.eval_at(j as u64)?, j as u64)? * &c_j * &c_j;
    }
    if (n * (n - 1) / 2) % 2 == 1 {
        acc = -acc;
    }
    Ok(acc)
}
