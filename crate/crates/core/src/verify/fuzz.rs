//! Seeded random families. Coefficients are integers in `[-5, 5]`; draws that
//! violate a family's hypotheses are rejected and redrawn.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::families::RecurrenceFamily;
use crate::families::{
    CoefficientProvider, MiddleTerm, Regime, TurajFamily, TurajParams, UlasFamily, UlasParams,
    UlasShape,
};
use crate::poly::Polynomial;
use crate::rational::{int, rat, ExactRational};

/// Largest index the fuzzed Ulas families are generated to.
pub const ULAS_N_MAX: usize = 5;
/// Turaj families are generated to `d + TURAJ_STEPS`.
pub const TURAJ_STEPS: usize = 3;
/// Cap on any generated Turaj degree.
pub const TURAJ_DEGREE_CAP: usize = 80;

fn coeff(rng: &mut ChaCha8Rng) -> ExactRational {
    int(rng.gen_range(-5..=5))
}

fn exact_degree(rng: &mut ChaCha8Rng, degree: usize) -> Polynomial {
    loop {
        let p = Polynomial::from_coeffs((0..=degree).map(|_| coeff(rng)).collect());
        if p.deg() == Some(degree) {
            return p;
        }
    }
}

fn table(rng: &mut ChaCha8Rng, start: u64, len: usize) -> CoefficientProvider {
    CoefficientProvider::table(start, (0..len).map(|_| coeff(rng)).collect())
}

/// `count` valid Ulas families, alternating strict shapes and relaxed shapes
/// with `l > k`. Every
/// family generates without degree drops up to `ULAS_N_MAX`.
pub fn random_ulas_families(seed: u64, count: usize) -> Vec<UlasParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let regime = if out.len() % 2 == 0 {
            Regime::Strict
        } else {
            Regime::Relaxed
        };
        let i = rng.gen_range(0..=3);
        let j = rng.gen_range(i..=4);
        let k = rng.gen_range(1..=2);
        let l = match regime {
            Regime::Strict => rng.gen_range(0..=k),
            // Only shapes outside the strict regime.
            Regime::Relaxed => rng.gen_range(k + 1..=2 * k),
        };
        if i + l > j + k {
            continue;
        }
        let len = ULAS_N_MAX - 1;
        let params = UlasParams {
            shape: UlasShape { i, j, k, l },
            r0: exact_degree(&mut rng, i),
            r1: exact_degree(&mut rng, j),
            f: (0..=k).map(|_| table(&mut rng, 2, len)).collect(),
            v: table(&mut rng, 2, len),
            regime,
        };
        let Ok(mut family) = UlasFamily::new(params.clone()) else {
            continue;
        };
        if (0..=ULAS_N_MAX).all(|n| family.term(n).is_ok()) {
            out.push(params);
        }
    }
    out
}

/// `count` valid Turaj families with `d in {1, 2}`, `m in {1, 2, 3}`, degrees
/// up to `TURAJ_DEGREE_CAP`. Odd-indexed families carry one middle term.
pub fn random_turaj_families(seed: u64, count: usize) -> Vec<TurajParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let d = rng.gen_range(1..=2);
        let m = rng.gen_range(1..=3u32);
        let k = rng.gen_range(1..=2);
        let l = rng.gen_range(0..=k);
        let mut degs: Vec<usize> = (0..=d).map(|_| rng.gen_range(0..=2)).collect();
        degs.sort_unstable();
        let start = (d + 1) as u64;
        let mut params = TurajParams {
            d,
            m,
            k,
            l,
            initial: degs.iter().map(|&t| exact_degree(&mut rng, t)).collect(),
            g: (0..=k)
                .map(|_| table(&mut rng, start, TURAJ_STEPS))
                .collect(),
            v: table(&mut rng, start, TURAJ_STEPS),
            middle: Vec::new(),
        };
        match params.predicted_degree(d + TURAJ_STEPS) {
            Ok(top) if top <= TURAJ_DEGREE_CAP => {}
            _ => continue,
        }
        if out.len() % 2 == 1 {
            let mut alpha = vec![0u32; d + 1];
            alpha[rng.gen_range(0..=d)] = rng.gen_range(0..m);
            let mut coeffs = vec![CoefficientProvider::constant(int(0))];
            coeffs.extend((1..k).map(|_| {
                CoefficientProvider::table(
                    start,
                    (0..TURAJ_STEPS)
                        .map(|_| int(rng.gen_range(-3..=3)))
                        .collect(),
                )
            }));
            params.middle.push(MiddleTerm { alpha, coeffs });
        }
        let Ok(mut family) = TurajFamily::new(params.clone()) else {
            continue;
        };
        if (0..=d + TURAJ_STEPS).all(|n| family.term(n).is_ok()) {
            out.push(params);
        }
    }
    out
}

/// Draws `(a, b, c)` for contiguous-relation checks. `terminating_b` selects
/// which upper parameter is a nonpositive integer; the other upper parameter
/// and `c` are non-integral rationals with denominators up to 5.
pub fn random_hypergeom_parameters(
    seed: u64,
    count: usize,
    terminating_b: bool,
) -> Vec<(ExactRational, ExactRational, ExactRational)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let free = |rng: &mut ChaCha8Rng| loop {
        let q = rat(rng.gen_range(-9..=9), rng.gen_range(2..=5));
        if !q.is_integer() {
            return q;
        }
    };
    (0..count)
        .map(|_| {
            let fixed = int(-rng.gen_range(0..=8));
            let other = free(&mut rng);
            let c = free(&mut rng);
            if terminating_b {
                (other, fixed, c)
            } else {
                (fixed, other, c)
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(random_ulas_families(7, 6), random_ulas_families(7, 6));
        assert_eq!(random_turaj_families(7, 4), random_turaj_families(7, 4));
        assert_ne!(random_ulas_families(7, 6), random_ulas_families(8, 6));
    }

    #[test]
    fn both_regimes_and_middle_terms_appear() {
        let ulas = random_ulas_families(1, 10);
        assert!(ulas.iter().any(|p| p.regime == Regime::Strict));
        assert!(ulas
            .iter()
            .filter(|p| p.regime == Regime::Relaxed)
            .all(|p| p.shape.l > p.shape.k));
        let turaj = random_turaj_families(1, 6);
        assert!(turaj.iter().any(|p| !p.middle.is_empty()));
        assert!(turaj.iter().any(|p| p.middle.is_empty()));
    }
}
