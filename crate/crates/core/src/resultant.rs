//! Sylvester-matrix resultants, discriminants and root-product identities.
//!
//! Convention: `Res(f, g) = lc(f)^deg(g) * prod_{f(a)=0} g(a)`, which is the
//! determinant of the Sylvester matrix with the shifted rows of `f` placed
//! first. It gives `Res(f, g) = (-1)^(deg f * deg g) Res(g, f)`,
//! `Res(f, b) = b^deg(f)` for a constant `b`, and
//! `Res(f, x) = (-1)^deg(f) f(0)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{from_bigint, pow_u, ExactRational};

/// The `(deg f + deg g)`-square Sylvester matrix of two polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SylvesterMatrix {
    rows: Vec<Vec<ExactRational>>,
}

impl SylvesterMatrix {
    /// Builds the matrix for nonzero `f`, `g`. Rows hold coefficients from
    /// the highest power down, each block row shifted one column right.
    pub fn new(f: &Polynomial, g: &Polynomial) -> Result<Self> {
        let (m, n) = match (f.deg(), g.deg()) {
            (Some(m), Some(n)) => (m, n),
            _ => {
                return Err(Error::InvalidParams(
                    "Sylvester matrix of a zero polynomial".into(),
                ))
            }
        };
        let dim = m + n;
        let mut rows = Vec::with_capacity(dim);
        for (shifts, p) in [(n, f), (m, g)] {
            for s in 0..shifts {
                let mut row = vec![ExactRational::zero(); dim];
                for (j, c) in p.coeffs().iter().rev().enumerate() {
                    row[s + j] = c.clone();
                }
                rows.push(row);
            }
        }
        Ok(SylvesterMatrix { rows })
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<ExactRational>] {
        &self.rows
    }

    pub fn determinant(&self) -> ExactRational {
        determinant_fraction_free(&self.rows)
    }
}

/// Exact determinant by Bareiss elimination.
///
/// Each row is first scaled by the lcm of its denominators so elimination runs
/// over integers; every intermediate division is exact. The row scales are
/// divided back out at the end. Panics if the matrix is not square.
pub fn determinant_fraction_free(m: &[Vec<ExactRational>]) -> ExactRational {
    let n = m.len();
    if n == 0 {
        return ExactRational::one();
    }
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| {
            assert_eq!(row.len(), n, "determinant of a non-square matrix");
            let l = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            let ints = row.iter().map(|q| q.numer() * (&l / q.denom())).collect();
            scale *= l;
            ints
        })
        .collect();

    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return ExactRational::zero(),
            }
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in bottom.iter_mut() {
            let factor = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                let t = &row[j] * pivot - &factor * &pivot_row[j];
                row[j] = if prev.is_one() { t } else { t / &prev };
            }
        }
        prev = a[k][k].clone();
    }
    let det = std::mem::take(&mut a[n - 1][n - 1]);
    let det = if negate { -det } else { det };
    ExactRational::new(det, scale)
}

/// `Res(f, g)` with the constant-argument limits `Res(f, b) = b^deg f`,
/// `Res(a, g) = a^deg g` and `Res(a, b) = 1` for nonzero constants.
///
/// A zero polynomial against a nonconstant one gives 0; both zero is an error.
pub fn resultant(f: &Polynomial, g: &Polynomial) -> Result<ExactRational> {
    match (f.deg(), g.deg()) {
        (None, None) => Err(Error::BothZero),
        (None, Some(0)) | (Some(0), None) => Ok(ExactRational::one()),
        (None, Some(_)) | (Some(_), None) => Ok(ExactRational::zero()),
        (Some(m), Some(0)) => pow_u(&g.coeff(0), m as u64),
        (Some(0), Some(n)) => pow_u(&f.coeff(0), n as u64),
        (Some(_), Some(_)) => Ok(SylvesterMatrix::new(f, g)?.determinant()),
    }
}

/// `disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f)` with `n = deg f >= 1`.
pub fn discriminant(f: &Polynomial) -> Result<ExactRational> {
    let n = match f.deg() {
        Some(n) if n >= 1 => n,
        _ => return Err(Error::DegreeTooLow { degree: f.degree() }),
    };
    let res = resultant(f, &f.derivative())?;
    let lc = f.leading().expect("nonzero");
    let value = res / lc;
    Ok(if (n * (n - 1) / 2) % 2 == 1 {
        -value
    } else {
        value
    })
}

/// `prod_{f(y)=0} g(y)` over the roots of `f` with multiplicity, computed as
/// `Res(f, g) / lc(f)^deg(g)` without locating any root.
pub fn product_over_roots(f: &Polynomial, g: &Polynomial) -> Result<ExactRational> {
    let lc = match f.deg() {
        Some(d) if d >= 1 => f.leading().expect("nonzero").clone(),
        _ => {
            return Err(Error::DegreeTooLow { degree: f.degree() });
        }
    };
    if g.is_zero() {
        return Ok(ExactRational::zero());
    }
    let dg = g.deg().expect("nonzero") as u64;
    Ok(resultant(f, g)? / pow_u(&lc, dg)?)
}

/// Monic greatest common divisor by the Euclidean algorithm.
pub fn gcd(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (mut a, mut b) = (f.clone(), g.clone());
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b);
        a = b;
        b = r;
    }
    a.monic()
}

/// Integer-valued determinant helper for tests and callers holding `BigInt`s.
pub fn determinant_of_integers(m: &[Vec<i64>]) -> ExactRational {
    let rows: Vec<Vec<ExactRational>> = m
        .iter()
        .map(|r| r.iter().map(|&v| from_bigint(v.into())).collect())
        .collect();
    determinant_fraction_free(&rows)
}
