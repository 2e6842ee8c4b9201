//! Test-side oracles, independent of the library's polynomial type and its
//! Sylvester-matrix resultant. Polynomials are plain coefficient vectors, low
//! to high, with no trailing zeros.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn trim(mut p: Vec<Q>) -> Vec<Q> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub fn deg(p: &[Q]) -> usize {
    p.len().saturating_sub(1)
}

pub fn add(a: &[Q], b: &[Q]) -> Vec<Q> {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| {
                a.get(i).cloned().unwrap_or_else(Q::zero)
                    + b.get(i).cloned().unwrap_or_else(Q::zero)
            })
            .collect(),
    )
}

pub fn scale(c: &Q, p: &[Q]) -> Vec<Q> {
    trim(p.iter().map(|x| c * x).collect())
}

pub fn mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub fn shift(p: &[Q], k: usize) -> Vec<Q> {
    if p.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Q::zero(); k];
    out.extend_from_slice(p);
    out
}

pub fn pow(p: &[Q], e: u32) -> Vec<Q> {
    (0..e).fold(vec![Q::one()], |acc, _| mul(&acc, p))
}

pub fn deriv(p: &[Q]) -> Vec<Q> {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * q(i as i64))
            .collect(),
    )
}

pub fn eval(p: &[Q], x: &Q) -> Q {
    p.iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
}

fn qpow(x: &Q, e: usize) -> Q {
    (0..e).fold(Q::one(), |acc, _| acc * x)
}

/// Remainder of `f` modulo nonzero `g`.
pub fn rem(f: &[Q], g: &[Q]) -> Vec<Q> {
    let mut r = f.to_vec();
    let lg = g.last().expect("nonzero divisor").clone();
    while !r.is_empty() && r.len() >= g.len() {
        let shift = r.len() - g.len();
        let factor = r.last().unwrap().clone() / &lg;
        for (i, c) in g.iter().enumerate() {
            r[shift + i] -= &factor * c;
        }
        r = trim(r);
    }
    r
}

/// `Res(f, g) = lc(f)^{deg g} prod_{f(a)=0} g(a)` by Euclidean remainders:
/// `Res(f, g) = (-1)^{mn} lc(g)^{m - deg r} Res(g, r)` with `r = f mod g`.
pub fn res(f: &[Q], g: &[Q]) -> Q {
    assert!(
        !f.is_empty() && !g.is_empty(),
        "oracle needs nonzero inputs"
    );
    let (m, n) = (deg(f), deg(g));
    if n == 0 {
        return qpow(&g[0], m);
    }
    if m == 0 {
        return qpow(&f[0], n);
    }
    let r = rem(f, g);
    if r.is_empty() {
        return Q::zero();
    }
    let sign = if (m * n) % 2 == 1 {
        -Q::one()
    } else {
        Q::one()
    };
    sign * qpow(g.last().unwrap(), m - deg(&r)) * res(g, &r)
}

/// `(-1)^{n(n-1)/2} Res(f, f') / lc(f)`.
pub fn disc(f: &[Q]) -> Q {
    let n = deg(f);
    let value = res(f, &deriv(f)) / f.last().unwrap();
    if (n * (n - 1) / 2) % 2 == 1 {
        -value
    } else {
        value
    }
}

fn poch(x: &Q, k: usize) -> Q {
    (0..k).fold(Q::one(), |acc, t| acc * (x + q(t as i64)))
}

fn fact(k: usize) -> Q {
    (1..=k).fold(Q::one(), |acc, t| acc * q(t as i64))
}

/// Terminating `2F1[a, b; c; x]`, summed until a numerator factor vanishes.
pub fn hyp2f1(a: &Q, b: &Q, c: &Q) -> Vec<Q> {
    let stop = [a, b]
        .into_iter()
        .filter(|p| p.is_integer() && !p.is_positive())
        .map(|p| (-p.to_integer()).try_into().unwrap())
        .min()
        .expect("terminating parameters");
    let stop: usize = stop;
    trim(
        (0..=stop)
            .map(|k| poch(a, k) * poch(b, k) / (poch(c, k) * fact(k)))
            .collect(),
    )
}

fn binom(n: usize, k: usize) -> Q {
    fact(n) / (fact(k) * fact(n - k))
}

/// `sum_i C(2i, i) C(2n - 2i, n - i) x^i`.
pub fn central_binomial(n: usize) -> Vec<Q> {
    (0..=n)
        .map(|i| binom(2 * i, i) * binom(2 * (n - i), n - i))
        .collect()
}

/// `2F1[alpha, beta - n; gamma - n; x]`.
pub fn shifted(alpha: &Q, beta: i64, gamma: &Q, n: usize) -> Vec<Q> {
    hyp2f1(alpha, &q(beta - n as i64), &(gamma - q(n as i64)))
}

/// `x^n 2F1[-n, n + beta_r; gamma_r; 2/x]`.
pub fn mahlburg_ono(r: u32, n: usize) -> Vec<Q> {
    let beta = qr(r as i64 + 1, 6);
    let gamma = if r == 0 || r == 6 { qr(3, 2) } else { qr(4, 3) };
    let mut out = vec![Q::zero(); n + 1];
    for k in 0..=n {
        out[n - k] = poch(&q(-(n as i64)), k) * poch(&(q(n as i64) + &beta), k)
            / (poch(&gamma, k) * fact(k))
            * qpow(&q(2), k);
    }
    trim(out)
}

pub fn from_lib(p: &quasidisc_core::Polynomial) -> Vec<Q> {
    trim(p.coeffs().to_vec())
}

fn provider_poly(ps: &[quasidisc_core::families::CoefficientProvider], n: u64) -> Vec<Q> {
    trim(
        ps.iter()
            .map(|p| p.eval(n).expect("provider in range"))
            .collect(),
    )
}

/// `r_0..=r_n` of a Ulas family, regenerated on coefficient vectors.
pub fn ulas_terms(p: &quasidisc_core::families::UlasParams, n: usize) -> Vec<Vec<Q>> {
    let mut out = vec![from_lib(&p.r0), from_lib(&p.r1)];
    for u in 2..=n {
        let f = provider_poly(&p.f, u as u64);
        let v = p.v.eval(u as u64).expect("provider in range");
        let next = add(
            &mul(&f, &out[u - 1]),
            &scale(&-v, &shift(&out[u - 2], p.shape.l)),
        );
        out.push(next);
    }
    out.truncate(n + 1);
    out
}

/// `r_0..=r_n` of a Turaj family, regenerated on coefficient vectors.
pub fn turaj_terms(p: &quasidisc_core::families::TurajParams, n: usize) -> Vec<Vec<Q>> {
    let mut out: Vec<Vec<Q>> = p.initial.iter().map(from_lib).collect();
    for u in p.d + 1..=n {
        let g = provider_poly(&p.g, u as u64);
        let v = p.v.eval(u as u64).expect("provider in range");
        let mut next = add(
            &mul(&g, &pow(&out[u - 1], p.m)),
            &scale(&v, &shift(&pow(&out[u - 2], p.m), p.l)),
        );
        for t in &p.middle {
            let mut term = mul(&provider_poly(&t.coeffs, u as u64), &out[u - 1]);
            for (s, &a) in t.alpha.iter().enumerate() {
                term = mul(&term, &pow(&out[u - 1 - s], a));
            }
            next = add(&next, &term);
        }
        out.push(next);
    }
    out.truncate(n + 1);
    out
}
