//! Property tests across modules, checked against the test-side oracle.

mod common;

use common::{add, from_lib, q, qr, res, scale, Q};
use proptest::prelude::*;
use quasidisc_core::families::{
    gen_turaj, gen_ulas, predicted_lead_const_turaj, CoefficientProvider, RecurrenceFamily, Regime,
    TurajParams, UlasFamily, UlasParams, UlasShape,
};
use quasidisc_core::formulas::{turaj_resultant, ulas_resultant, UlasLine};
use quasidisc_core::hypergeom::{CentralBinomialFamily, MahlburgOnoFamily};
use quasidisc_core::registry::Family;
use quasidisc_core::resultant::resultant;
use quasidisc_core::verify::fuzz::{random_turaj_families, TURAJ_STEPS};
use quasidisc_core::verify::{run_suite, Suite};
use quasidisc_core::{Error, Polynomial};

const N_MAX: usize = 6;

fn nonzero(c: i64) -> i64 {
    if c == 0 {
        1
    } else {
        c
    }
}

/// Exact-degree polynomial from the first `deg + 1` draws.
fn poly_of_degree(draws: &[i64], deg: usize) -> Polynomial {
    let mut cs = draws[..=deg].to_vec();
    cs[deg] = nonzero(cs[deg]);
    Polynomial::from_ints(&cs)
}

fn table(draws: &[i64]) -> CoefficientProvider {
    CoefficientProvider::table(2, draws.iter().map(|&c| q(c)).collect())
}

/// Strict Ulas families that generate without degree drops up to `N_MAX`.
fn ulas_family() -> impl Strategy<Value = UlasParams> {
    let coeffs = |len| prop::collection::vec(-5i64..=5, len);
    let rows = N_MAX - 1;
    (
        0usize..=2,
        0usize..=2,
        1usize..=2,
        0usize..=2,
        coeffs(5),
        coeffs(5),
        coeffs(3 * rows),
        coeffs(rows),
    )
        .prop_filter_map("valid strict family", move |(i, dj, k, l, r0, r1, f, v)| {
            if l > k {
                return None;
            }
            let j = i + dj;
            let params = UlasParams {
                shape: UlasShape { i, j, k, l },
                r0: poly_of_degree(&r0, i),
                r1: poly_of_degree(&r1, j),
                f: (0..=k)
                    .map(|s| table(&f[s * rows..(s + 1) * rows]))
                    .collect(),
                v: table(&v),
                regime: Regime::Strict,
            };
            let mut fam = UlasFamily::new(params.clone()).ok()?;
            fam.term(N_MAX).ok()?;
            Some(params)
        })
}

fn small_rational() -> impl Strategy<Value = Q> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| qr(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sylvester_resultant_matches_euclidean_oracle(
        f in prop::collection::vec(-5i64..=5, 2..7),
        g in prop::collection::vec(-5i64..=5, 2..7),
    ) {
        let (f, g) = (Polynomial::from_ints(&f), Polynomial::from_ints(&g));
        prop_assume!(!f.is_zero() && !g.is_zero());
        prop_assert_eq!(resultant(&f, &g).unwrap(), res(&from_lib(&f), &from_lib(&g)));
    }

    #[test]
    fn ulas_lines_agree_with_oracle(params in ulas_family()) {
        let terms = common::ulas_terms(&params, N_MAX);
        for n in 2..=N_MAX {
            let oracle = res(&terms[n], &terms[n - 1]);
            prop_assert_eq!(&ulas_resultant(&params, n, UlasLine::First).unwrap(), &oracle, "first line, n = {}", n);
            prop_assert_eq!(&ulas_resultant(&params, n, UlasLine::Second).unwrap(), &oracle, "second line, n = {}", n);
        }
    }

    #[test]
    fn turaj_with_unit_d_and_m_is_ulas(params in ulas_family()) {
        let turaj = TurajParams::from_ulas(&params).unwrap();
        for n in 0..=N_MAX {
            prop_assert_eq!(gen_turaj(&turaj, n).unwrap(), gen_ulas(&params, n).unwrap());
        }
        for n in 2..=N_MAX {
            prop_assert_eq!(
                turaj_resultant(&turaj, n).unwrap(),
                ulas_resultant(&params, n, UlasLine::First).unwrap()
            );
        }
    }

    #[test]
    fn quasi_combination_keeps_the_resultant(params in ulas_family(), c in small_rational(), n in 2usize..=N_MAX) {
        let terms = common::ulas_terms(&params, n);
        let combined = add(&terms[n], &scale(&c, &terms[n - 1]));
        prop_assert_eq!(res(&combined, &terms[n - 1]), res(&terms[n], &terms[n - 1]));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn turaj_closed_form_ignores_middle_terms(seed in any::<u64>()) {
        let family = random_turaj_families(seed, 1).pop().unwrap();
        let mut stripped = family.clone();
        stripped.middle.clear();
        for params in [family, stripped] {
            let top = params.d + TURAJ_STEPS;
            let terms = common::turaj_terms(&params, top);
            for n in params.d + 1..=top {
                prop_assert_eq!(turaj_resultant(&params, n).unwrap(), res(&terms[n], &terms[n - 1]));
                let (lead, constant) = predicted_lead_const_turaj(&params, n).unwrap();
                prop_assert_eq!(&lead, terms[n].last().unwrap());
                if params.l > 0 {
                    prop_assert_eq!(&constant, &terms[n][0]);
                }
            }
        }
    }

    #[test]
    fn quasi_discriminant_matches_oracle_for_random_c(c in small_rational(), n in 2usize..=5, pick in 0usize..5) {
        let (mut family, direct): (Family, Box<dyn Fn(usize) -> Vec<Q>>) = match pick {
            0 => (Family::central_binomial(CentralBinomialFamily).unwrap(), Box::new(common::central_binomial)),
            p => {
                let r = [0, 4, 6, 10][p - 1];
                let fam = MahlburgOnoFamily::new(r).unwrap();
                (Family::mahlburg_ono(fam).unwrap(), Box::new(move |n| common::mahlburg_ono(r, n)))
            }
        };
        let oracle = common::disc(&add(&direct(n), &scale(&c, &direct(n - 1))));
        match family.quasi_disc(n, &c) {
            Ok(value) => prop_assert_eq!(value, oracle),
            Err(Error::HypothesisViolated(_) | Error::DegenerateB { .. }) => {}
            Err(e) => prop_assert!(false, "unexpected error {}", e),
        }
    }
}

#[test]
fn reports_are_deterministic_up_to_timings() {
    for suite in [Suite::Ulas, Suite::Quasi] {
        let first = serde_json::to_string(&run_suite(suite, 11).without_timings()).unwrap();
        let second = serde_json::to_string(&run_suite(suite, 11).without_timings()).unwrap();
        assert_eq!(first, second, "suite {suite}");
    }
    let a = serde_json::to_string(&run_suite(Suite::Ulas, 11).without_timings()).unwrap();
    let b = serde_json::to_string(&run_suite(Suite::Ulas, 12).without_timings()).unwrap();
    assert_ne!(a, b);
}

#[test]
fn turaj_square_family_gives_x_cubed_plus_one() {
    // d = 1, m = 2, g_n = x, v_n = 1, l = 0, r_0 = 1, r_1 = x.
    let params = TurajParams {
        d: 1,
        m: 2,
        k: 1,
        l: 0,
        initial: vec![Polynomial::one(), Polynomial::x()],
        g: vec![
            CoefficientProvider::constant(q(0)),
            CoefficientProvider::constant(q(1)),
        ],
        v: CoefficientProvider::constant(q(1)),
        middle: Vec::new(),
    };
    let r2 = gen_turaj(&params, 2).unwrap();
    assert_eq!(r2, Polynomial::from_ints(&[1, 0, 0, 1]));
    assert_eq!(predicted_lead_const_turaj(&params, 2).unwrap().0, q(1));
    let terms = common::turaj_terms(&params, 4);
    for n in 2..=4 {
        assert_eq!(from_lib(&gen_turaj(&params, n).unwrap()), terms[n]);
        assert_eq!(
            turaj_resultant(&params, n).unwrap(),
            res(&terms[n], &terms[n - 1])
        );
    }
}
