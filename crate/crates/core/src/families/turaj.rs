//! Order-`(d+1)` recurrence with `m`-th powers:
//! `r_n = g_n r_{n-1}^m + sum_alpha t_{alpha,n} r^alpha r_{n-1} + v_n x^l r_{n-2}^m`
//! for `n >= d + 1`, where `r^alpha = prod_s r_{n-1-s}^{alpha_s}`.

use num_traits::{One, Zero};

use super::{eval_poly, memo_term, CoefficientProvider, RecurrenceFamily, UlasParams};
use crate::error::{Error, Result};
use crate::poly::{Degree, Polynomial};
use crate::rational::{pow_u, ExactRational};

/// One middle-term entry `t_{alpha,n}(x) r^alpha r_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MiddleTerm {
    /// `alpha[s]` is the power of `r_{n-1-s}`; `|alpha| < m`.
    pub alpha: Vec<u32>,
    /// Coefficients of `t_{alpha,n}`, low to high. `t(0) = 0`, `deg t < k`.
    pub coeffs: Vec<CoefficientProvider>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TurajParams {
    pub d: usize,
    pub m: u32,
    pub k: usize,
    pub l: usize,
    /// `r_0, ..., r_d` with nondecreasing degrees.
    pub initial: Vec<Polynomial>,
    /// `g[s]` yields `a_{s,n}`.
    pub g: Vec<CoefficientProvider>,
    pub v: CoefficientProvider,
    pub middle: Vec<MiddleTerm>,
}

impl TurajParams {
    pub fn validate(&self) -> Result<()> {
        let invalid = |msg: String| Err(Error::InvalidParams(msg));
        if self.d == 0 {
            return invalid("d must be at least 1".into());
        }
        if self.m == 0 {
            return invalid("m must be at least 1".into());
        }
        if self.k == 0 || self.l > self.k {
            return invalid(format!(
                "need 1 <= k and l <= k, got k = {}, l = {}",
                self.k, self.l
            ));
        }
        if self.initial.len() != self.d + 1 {
            return invalid(format!(
                "expected {} initial polynomials, got {}",
                self.d + 1,
                self.initial.len()
            ));
        }
        let mut last = 0usize;
        for (s, r) in self.initial.iter().enumerate() {
            let deg = r
                .deg()
                .ok_or_else(|| Error::InvalidParams(format!("r_{s} is zero")))?;
            if deg < last {
                return invalid("initial degrees must be nondecreasing".into());
            }
            last = deg;
        }
        if self.g.len() != self.k + 1 {
            return invalid(format!(
                "g_n needs {} coefficient providers, got {}",
                self.k + 1,
                self.g.len()
            ));
        }
        for t in &self.middle {
            if t.alpha.len() > self.d + 1 {
                return invalid(format!("multi-index {:?} longer than d + 1", t.alpha));
            }
            if t.alpha.iter().map(|&a| a as u64).sum::<u64>() >= self.m as u64 {
                return invalid(format!("multi-index {:?} needs |alpha| < m", t.alpha));
            }
            if t.coeffs.len() > self.k {
                return invalid("middle term t needs deg t < k".into());
            }
        }
        if self.special_case() {
            let check = self.special_lead()?;
            if check.is_zero() {
                return invalid("a_{k,d+1} p_d^m + v_{d+1} p_{d-1}^m = 0".into());
            }
        }
        Ok(())
    }

    fn i_d(&self) -> usize {
        self.initial[self.d].deg().unwrap_or(0)
    }

    fn i_d1(&self) -> usize {
        self.initial[self.d - 1].deg().unwrap_or(0)
    }

    /// `i_d = i_{d-1}` and `k = l`: the two outer terms compete for the top degree.
    pub fn special_case(&self) -> bool {
        self.i_d() == self.i_d1() && self.k == self.l
    }

    /// `a_{k,d+1} p_{i_d,d}^m + v_{d+1} p_{i_{d-1},d-1}^m`.
    fn special_lead(&self) -> Result<ExactRational> {
        let n = (self.d + 1) as u64;
        let pd = lead(&self.initial[self.d]);
        let pd1 = lead(&self.initial[self.d - 1]);
        Ok(self.g[self.k].eval(n)? * pow_u(&pd, self.m as u64)?
            + self.v.eval(n)? * pow_u(&pd1, self.m as u64)?)
    }

    /// `deg r_n`: `k sum_{s<n-d} m^s + i_d m^{n-d}` beyond the initial block.
    pub fn predicted_degree(&self, n: usize) -> Result<usize> {
        if n <= self.d {
            return Ok(self.initial[n].deg().unwrap_or(0));
        }
        let overflow = || Error::ExponentOverflow(format!("degree of r_{n}"));
        let m = self.m as usize;
        let mut geometric = 0usize;
        let mut power = 1usize;
        for _ in 0..(n - self.d) {
            geometric = geometric.checked_add(power).ok_or_else(overflow)?;
            power = power.checked_mul(m).ok_or_else(overflow)?;
        }
        self.k
            .checked_mul(geometric)
            .and_then(|a| self.i_d().checked_mul(power).and_then(|b| a.checked_add(b)))
            .ok_or_else(overflow)
    }

    /// The `m = d = 1` Turaj form of an Ulas family (`v` changes sign).
    pub fn from_ulas(ulas: &UlasParams) -> Result<Self> {
        let params = TurajParams {
            d: 1,
            m: 1,
            k: ulas.shape.k,
            l: ulas.shape.l,
            initial: vec![ulas.r0.clone(), ulas.r1.clone()],
            g: ulas.f.clone(),
            v: ulas.v.negated(),
            middle: Vec::new(),
        };
        params.validate()?;
        Ok(params)
    }
}

fn lead(p: &Polynomial) -> ExactRational {
    p.leading().cloned().unwrap_or_else(ExactRational::zero)
}

/// Predicted `(L_n, C_n)`, the leading coefficient and (for `l > 0`) the
/// constant term of `r_n`, for `n >= d`. `C_n = 1` when `l = 0`.
pub fn predicted_lead_const_turaj(
    params: &TurajParams,
    n: usize,
) -> Result<(ExactRational, ExactRational)> {
    let d = params.d;
    if n < d {
        return Err(Error::InvalidParams(format!(
            "prediction needs n >= d = {d}"
        )));
    }
    let m = params.m as u64;
    let steps = (n - d) as u32;
    let mpow = |e: u32| -> Result<u64> {
        m.checked_pow(e)
            .ok_or_else(|| Error::ExponentOverflow(format!("{m}^{e}")))
    };
    // prod_{s=from}^{n-d} a_{idx,d+s}^{m^{n-d-s}}
    let tail = |idx: usize, from: u32| -> Result<ExactRational> {
        let mut acc = ExactRational::one();
        for s in from..=steps {
            let a = params.g[idx].eval((d as u64) + s as u64)?;
            acc *= pow_u(&a, mpow(steps - s)?)?;
        }
        Ok(acc)
    };
    let pd = lead(&params.initial[d]);
    let lead_n = if steps == 0 {
        pd
    } else if params.special_case() {
        pow_u(&params.special_lead()?, mpow(steps - 1)?)? * tail(params.k, 2)?
    } else {
        pow_u(&pd, mpow(steps)?)? * tail(params.k, 1)?
    };
    let const_n = if params.l == 0 {
        ExactRational::one()
    } else {
        pow_u(&params.initial[d].constant_term(), mpow(steps)?)? * tail(0, 1)?
    };
    Ok((lead_n, const_n))
}

#[derive(Debug, Clone)]
pub struct TurajFamily {
    params: TurajParams,
    cache: Vec<Polynomial>,
}

impl TurajFamily {
    pub fn new(params: TurajParams) -> Result<Self> {
        params.validate()?;
        Ok(TurajFamily {
            params,
            cache: Vec::new(),
        })
    }

    pub fn params(&self) -> &TurajParams {
        &self.params
    }
}

impl RecurrenceFamily for TurajFamily {
    fn term(&mut self, n: usize) -> Result<Polynomial> {
        let params = &self.params;
        memo_term(&mut self.cache, n, |prev, idx| {
            if idx <= params.d {
                return Ok(params.initial[idx].clone());
            }
            let u = idx as u64;
            if params.g[params.k].eval(u)?.is_zero() {
                return Err(Error::InvalidParams(format!("a_{{k,{u}}} = 0")));
            }
            let prev1 = &prev[idx - 1];
            let mut next = &eval_poly(&params.g, u)? * &prev1.pow(params.m);
            next = &next
                + &prev[idx - 2]
                    .pow(params.m)
                    .shift(params.l)
                    .scale(&params.v.eval(u)?);
            for t in &params.middle {
                let coeff = eval_poly(&t.coeffs, u)?;
                if !coeff.constant_term().is_zero() {
                    return Err(Error::InvalidParams(format!(
                        "middle term {:?} has t(0) != 0 at n = {u}",
                        t.alpha
                    )));
                }
                let mut term = &coeff * prev1;
                for (s, &a) in t.alpha.iter().enumerate() {
                    if a > 0 {
                        term = &term * &prev[idx - 1 - s].pow(a);
                    }
                }
                next = &next + &term;
            }
            let expected = params.predicted_degree(idx)?;
            if next.degree() != Degree::Finite(expected) {
                return Err(Error::DegreeDropped {
                    n: idx,
                    expected,
                    actual: next.degree(),
                });
            }
            Ok(next)
        })
    }

    fn label(&self) -> String {
        let p = &self.params;
        format!("turaj(d={},m={},k={},l={})", p.d, p.m, p.k, p.l)
    }
}

pub fn gen_turaj(params: &TurajParams, n: usize) -> Result<Polynomial> {
    TurajFamily::new(params.clone())?.term(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_ulas, Regime, UlasShape};
    use crate::rational::{int, rat};

    fn cube_family() -> TurajParams {
        // g_n = x, v_n = 1, l = 0, r_0 = 1, r_1 = x, m = 2.
        TurajParams {
            d: 1,
            m: 2,
            k: 1,
            l: 0,
            initial: vec![Polynomial::one(), Polynomial::x()],
            g: vec![
                CoefficientProvider::constant(int(0)),
                CoefficientProvider::constant(int(1)),
            ],
            v: CoefficientProvider::constant(int(1)),
            middle: Vec::new(),
        }
    }

    #[test]
    fn hand_computed_terms() {
        let p = cube_family();
        assert_eq!(
            gen_turaj(&p, 2).unwrap(),
            Polynomial::from_ints(&[1, 0, 0, 1])
        );
        assert_eq!(
            gen_turaj(&p, 3).unwrap(),
            Polynomial::from_ints(&[0, 1, 1, 0, 2, 0, 0, 1])
        );
        assert_eq!(p.predicted_degree(3).unwrap(), 7);
        let (lead_2, const_2) = predicted_lead_const_turaj(&p, 2).unwrap();
        assert_eq!(lead_2, int(1));
        assert_eq!(const_2, int(1));
        assert_eq!(predicted_lead_const_turaj(&p, 1).unwrap().0, int(1));
    }

    #[test]
    fn collapses_to_ulas() {
        let ulas = UlasParams {
            shape: UlasShape {
                i: 1,
                j: 2,
                k: 1,
                l: 1,
            },
            r0: Polynomial::from_ints(&[1, 2]),
            r1: Polynomial::from_ints(&[-1, 0, 3]),
            f: vec![
                CoefficientProvider::constant(rat(1, 2)),
                CoefficientProvider::constant(int(-2)),
            ],
            v: CoefficientProvider::constant(int(5)),
            regime: Regime::Strict,
        };
        let turaj = TurajParams::from_ulas(&ulas).unwrap();
        for n in 0..7 {
            assert_eq!(gen_turaj(&turaj, n).unwrap(), gen_ulas(&ulas, n).unwrap());
        }
    }

    #[test]
    fn middle_term_validation() {
        let mut p = cube_family();
        p.middle.push(MiddleTerm {
            alpha: vec![2],
            coeffs: vec![],
        });
        assert!(matches!(p.validate(), Err(Error::InvalidParams(_))));
        p.middle[0] = MiddleTerm {
            alpha: vec![1],
            coeffs: vec![CoefficientProvider::constant(int(1))],
        };
        assert!(p.validate().is_ok());
        assert!(matches!(gen_turaj(&p, 2), Err(Error::InvalidParams(_))));
    }

    #[test]
    fn special_case_lead() {
        // i_d = i_{d-1} = 1, k = l = 1.
        let p = TurajParams {
            d: 1,
            m: 2,
            k: 1,
            l: 1,
            initial: vec![
                Polynomial::from_ints(&[1, 1]),
                Polynomial::from_ints(&[2, 3]),
            ],
            g: vec![
                CoefficientProvider::constant(int(1)),
                CoefficientProvider::constant(int(2)),
            ],
            v: CoefficientProvider::constant(int(-1)),
            middle: Vec::new(),
        };
        let mut fam = TurajFamily::new(p.clone()).unwrap();
        for n in 1..5 {
            let r = fam.term(n).unwrap();
            let (lead_n, const_n) = predicted_lead_const_turaj(&p, n).unwrap();
            assert_eq!(r.leading().unwrap(), &lead_n);
            assert_eq!(r.constant_term(), const_n);
        }
    }
}
