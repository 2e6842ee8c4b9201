use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{format_rational, nonpositive_integer, ExactRational};

/// Rising factorial `x (x + 1) ... (x + k - 1)`; `1` for `k = 0`.
pub fn pochhammer(x: &ExactRational, k: usize) -> ExactRational {
    let mut acc = ExactRational::one();
    let mut t = x.clone();
    for _ in 0..k {
        acc *= &t;
        t += ExactRational::one();
    }
    acc
}

/// Parameters of a terminating `2F1[a, b; c; x]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypergeomSpec {
    pub a: ExactRational,
    pub b: ExactRational,
    pub c: ExactRational,
    /// Index of the last nonzero term: the smaller of `-a`, `-b` over the
    /// upper parameters that are nonpositive integers.
    pub length: usize,
}

impl HypergeomSpec {
    pub fn new(a: ExactRational, b: ExactRational, c: ExactRational) -> Result<Self> {
        let length = [&a, &b]
            .into_iter()
            .filter_map(nonpositive_integer)
            .min()
            .ok_or(Error::NonTerminating)?;
        // (c)_k for k <= length only ever divides; it may vanish only if c is
        // a nonpositive integer above -length.
        if let Some(m) = nonpositive_integer(&c) {
            if m < length {
                return Err(Error::LowerPole {
                    lower: format_rational(&c),
                    k: m + 1,
                });
            }
        }
        Ok(HypergeomSpec { a, b, c, length })
    }
}

/// `sum_{k=0}^{N} (a)_k (b)_k / ((c)_k k!) x^k`.
pub fn hyp2f1_poly(spec: &HypergeomSpec) -> Polynomial {
    let mut coeffs = Vec::with_capacity(spec.length + 1);
    let mut term = ExactRational::one();
    for k in 0..=spec.length {
        coeffs.push(term.clone());
        let kk = ExactRational::from_integer(k.into());
        let num = (&spec.a + &kk) * (&spec.b + &kk);
        if num.is_zero() {
            break;
        }
        term = term * num / ((&spec.c + &kk) * (kk + ExactRational::one()));
    }
    Polynomial::from_coeffs(coeffs)
}

/// Convenience: build and expand in one step.
pub fn hyp2f1(a: ExactRational, b: ExactRational, c: ExactRational) -> Result<Polynomial> {
    Ok(hyp2f1_poly(&HypergeomSpec::new(a, b, c)?))
}
