use num_bigint::BigInt;
use num_integer::Integer;

use super::fuzz::{
    random_hypergeom_parameters, random_turaj_families, random_ulas_families, ULAS_N_MAX,
};
use super::{CaseSpec, Outcome, Quantity};
use crate::error::Result;
use crate::families::{
    predicted_lead_const_turaj, CoefficientProvider, RationalFunction, RecurrenceFamily,
    SchurFamily, SchurParams, TurajFamily, TurajParams, UlasFamily, UlasParams,
};
use crate::formulas::{
    sign_exponent_audit, turaj_resultant, ulas::ulas_resultant_of, AuditFamily, UlasLine,
};
use crate::hypergeom::{
    check_derivative_shift, check_relation, mahlburg_ono_disc, CentralBinomialFamily,
    ContiguousRelation, MahlburgOnoFamily, ShiftedHypergeometricFamily,
};
use crate::poly::Polynomial;
use crate::rational::{int, rat, ExactRational};
use crate::registry::Family;
use crate::resultant::{discriminant, resultant};

pub const MAHLBURG_ONO_RS: [u32; 4] = [0, 4, 6, 10];

/// `{0, 1, -1, 1/2, -3}`.
pub fn c_grid() -> Vec<ExactRational> {
    vec![int(0), int(1), int(-1), rat(1, 2), int(-3)]
}

pub fn shifted_samples() -> Vec<ShiftedHypergeometricFamily> {
    vec![
        ShiftedHypergeometricFamily::new(rat(1, 2), -1, rat(1, 3)).expect("valid parameters"),
        ShiftedHypergeometricFamily::new(rat(1, 3), -2, rat(5, 7)).expect("valid parameters"),
    ]
}

fn consecutive<F: RecurrenceFamily + ?Sized>(family: &mut F, n: usize) -> Result<ExactRational> {
    resultant(&family.term(n)?, &family.term(n - 1)?)
}

fn text(lhs: &Polynomial, rhs: &Polynomial) -> Outcome {
    Outcome::Text(lhs.to_string(), rhs.to_string())
}

fn schur_cases() -> Vec<CaseSpec> {
    let unit = SchurParams {
        a: CoefficientProvider::constant(int(1)),
        b: CoefficientProvider::constant(int(0)),
        c: CoefficientProvider::constant(int(1)),
    };
    let varying = SchurParams {
        a: RationalFunction::linear(int(1), int(1)).into(),
        b: RationalFunction::linear(rat(-2, 3), rat(1, 3)).into(),
        c: RationalFunction::new(
            Polynomial::from_ints(&[-1, 2]),
            Polynomial::from_ints(&[0, 1]),
        )
        .expect("nonzero denominator")
        .into(),
    };
    let mut out = Vec::new();
    for (label, params) in [
        ("schur(1,0,1)", unit),
        ("schur(n+1,(n-2)/3,(2n-1)/n)", varying),
    ] {
        for n in 2..=10 {
            let p = params.clone();
            out.push(CaseSpec::new(
                label,
                n,
                None,
                Quantity::Resultant,
                "schur-closed",
                move || {
                    let mut fam = SchurFamily::new(p.clone());
                    let formula = crate::formulas::schur_resultant(&p, n)?;
                    Ok(Outcome::Values(formula, consecutive(&mut fam, n)?))
                },
            ));
        }
    }
    out
}

fn ulas_line_cases(
    label: &str,
    params: &UlasParams,
    ns: std::ops::RangeInclusive<usize>,
) -> Vec<CaseSpec> {
    let mut out = Vec::new();
    for n in ns {
        for (line, route) in [
            (UlasLine::First, "ulas-first"),
            (UlasLine::Second, "ulas-second"),
        ] {
            let p = params.clone();
            out.push(CaseSpec::new(
                label,
                n,
                None,
                Quantity::Resultant,
                route,
                move || {
                    let mut fam = UlasFamily::new(p.clone())?;
                    let formula = ulas_resultant_of(&mut fam, n, line)?;
                    Ok(Outcome::Values(formula, consecutive(&mut fam, n)?))
                },
            ));
        }
        let p = params.clone();
        out.push(CaseSpec::new(
            label,
            n,
            None,
            Quantity::Degree,
            "ulas-degree",
            move || {
                let mut fam = UlasFamily::new(p.clone())?;
                let generated = fam.term(n)?.deg().unwrap_or(0);
                Ok(Outcome::Values(
                    int(p.predicted_degree(n) as i64),
                    int(generated as i64),
                ))
            },
        ));
    }
    out
}

pub fn ulas_cases(seed: u64) -> Vec<CaseSpec> {
    let mut out = schur_cases();
    let central = CentralBinomialFamily;
    out.extend(ulas_line_cases(
        "example-5.3",
        &central.ulas_params(),
        2..=8,
    ));
    for n in 2..=8 {
        out.push(CaseSpec::new(
            "example-5.3",
            n,
            None,
            Quantity::Resultant,
            "central-binomial-closed",
            move || {
                let fam = CentralBinomialFamily;
                Ok(Outcome::Values(
                    fam.closed_resultant(n)?,
                    resultant(&fam.direct(n), &fam.direct(n - 1))?,
                ))
            },
        ));
    }
    for fam in shifted_samples() {
        let label = Family::shifted(fam.clone())
            .map(|f| f.label())
            .unwrap_or_default();
        out.extend(ulas_line_cases(
            &label,
            &fam.ulas_params().expect("valid family"),
            2..=5,
        ));
        for n in 2..=5 {
            let f = fam.clone();
            out.push(CaseSpec::new(
                label.clone(),
                n,
                None,
                Quantity::Resultant,
                "shifted-closed",
                move || {
                    Ok(Outcome::Values(
                        f.closed_resultant(n)?,
                        resultant(&f.direct(n)?, &f.direct(n - 1)?)?,
                    ))
                },
            ));
        }
    }
    for (idx, params) in random_ulas_families(seed, 100).into_iter().enumerate() {
        let s = params.shape;
        let label = format!(
            "ulas#{idx}({},{},{},{};{:?})",
            s.i, s.j, s.k, s.l, params.regime
        );
        out.extend(ulas_line_cases(&label, &params, 2..=ULAS_N_MAX));
    }
    out
}

fn turaj_label(idx: usize, p: &TurajParams) -> String {
    let middle = if p.middle.is_empty() { "" } else { ",middle" };
    format!(
        "turaj#{idx}(d={},m={},k={},l={}{middle})",
        p.d, p.m, p.k, p.l
    )
}

pub fn turaj_family_cases(label: &str, params: &TurajParams) -> Vec<CaseSpec> {
    let mut out = Vec::new();
    for n in params.d + 1..=params.d + 3 {
        let p = params.clone();
        out.push(CaseSpec::new(
            label,
            n,
            None,
            Quantity::Resultant,
            "turaj-closed",
            move || {
                let mut fam = TurajFamily::new(p.clone())?;
                Ok(Outcome::Values(
                    turaj_resultant(&p, n)?,
                    consecutive(&mut fam, n)?,
                ))
            },
        ));
        let p = params.clone();
        out.push(CaseSpec::new(
            label,
            n,
            None,
            Quantity::Degree,
            "turaj-degree",
            move || {
                let generated = TurajFamily::new(p.clone())?.term(n)?.deg().unwrap_or(0);
                Ok(Outcome::Values(
                    int(p.predicted_degree(n)? as i64),
                    int(generated as i64),
                ))
            },
        ));
        let p = params.clone();
        out.push(CaseSpec::new(
            label,
            n,
            None,
            Quantity::LeadingCoefficient,
            "turaj-lead",
            move || {
                let r = TurajFamily::new(p.clone())?.term(n)?;
                let lead = r.leading().cloned().unwrap_or_default();
                Ok(Outcome::Values(predicted_lead_const_turaj(&p, n)?.0, lead))
            },
        ));
        if params.l > 0 {
            let p = params.clone();
            out.push(CaseSpec::new(
                label,
                n,
                None,
                Quantity::ConstantTerm,
                "turaj-constant",
                move || {
                    let r = TurajFamily::new(p.clone())?.term(n)?;
                    Ok(Outcome::Values(
                        predicted_lead_const_turaj(&p, n)?.1,
                        r.constant_term(),
                    ))
                },
            ));
        }
    }
    out
}

pub fn turaj_cases(seed: u64) -> Vec<CaseSpec> {
    let mut out = Vec::new();
    for (idx, p) in random_turaj_families(seed, 50).iter().enumerate() {
        out.extend(turaj_family_cases(&turaj_label(idx, p), p));
        // The closed form ignores middle terms, so check each family without them too.
        if !p.middle.is_empty() {
            let mut stripped = p.clone();
            stripped.middle.clear();
            out.extend(turaj_family_cases(&turaj_label(idx, &stripped), &stripped));
        }
    }
    out
}

/// Families and index ranges exercised by the quasi-discriminant suite.
pub fn quasi_families() -> Vec<(Family, std::ops::RangeInclusive<usize>)> {
    let mut out = vec![(
        Family::central_binomial(CentralBinomialFamily).expect("valid family"),
        2..=8,
    )];
    for fam in shifted_samples() {
        out.push((Family::shifted(fam).expect("valid family"), 2..=5));
    }
    for r in MAHLBURG_ONO_RS {
        let fam = MahlburgOnoFamily::new(r).expect("valid r");
        out.push((Family::mahlburg_ono(fam).expect("valid family"), 2..=6));
    }
    out
}

pub fn quasi_cases() -> Vec<CaseSpec> {
    let mut out = Vec::new();
    for (family, ns) in quasi_families() {
        let label = family.label();
        let has_display = matches!(
            family,
            Family::CentralBinomial(..) | Family::ShiftedHypergeometric(..)
        );
        for n in ns {
            for c in c_grid() {
                let (f, cc) = (family.clone(), c.clone());
                out.push(CaseSpec::new(
                    label.clone(),
                    n,
                    Some(c.clone()),
                    Quantity::Discriminant,
                    "quasi",
                    move || {
                        let mut fam = f.clone();
                        let formula = fam.quasi_disc(n, &cc)?;
                        Ok(Outcome::Values(formula, discriminant(&fam.quasi(n, &cc)?)?))
                    },
                ));
                if has_display {
                    let (f, cc) = (family.clone(), c.clone());
                    out.push(CaseSpec::new(
                        label.clone(),
                        n,
                        Some(c.clone()),
                        Quantity::Discriminant,
                        "closed-display",
                        move || {
                            let mut fam = f.clone();
                            let formula = fam.formula_disc(n, &cc)?;
                            Ok(Outcome::Values(formula, discriminant(&fam.quasi(n, &cc)?)?))
                        },
                    ));
                }
                let (f, cc) = (family.clone(), c.clone());
                out.push(CaseSpec::new(
                    label.clone(),
                    n,
                    Some(c),
                    Quantity::Resultant,
                    "quasi-stability",
                    move || {
                        let mut fam = f.clone();
                        let prev = fam.term(n - 1)?;
                        let shifted = resultant(&fam.quasi(n, &cc)?, &prev)?;
                        Ok(Outcome::Values(shifted, resultant(&fam.term(n)?, &prev)?))
                    },
                ));
            }
        }
    }
    out
}

fn mahlburg_ono_cases() -> Vec<CaseSpec> {
    let mut out = Vec::new();
    for r in MAHLBURG_ONO_RS {
        let fam = MahlburgOnoFamily::new(r).expect("valid r");
        let label = format!("mahlburg-ono(r={r})");
        for n in 1..=8 {
            let f = fam.clone();
            out.push(CaseSpec::new(
                label.clone(),
                n,
                None,
                Quantity::Discriminant,
                "mahlburg-ono-closed",
                move || {
                    Ok(Outcome::Values(
                        mahlburg_ono_disc(&f, n)?,
                        discriminant(&f.v_r_polynomial(n))?,
                    ))
                },
            ));
            let f = fam.clone();
            out.push(CaseSpec::new(
                label.clone(),
                n,
                None,
                Quantity::Identity,
                "mo-recurrence",
                move || {
                    let u = n as u64;
                    let linear =
                        Polynomial::from_coeffs(vec![f.g().eval_at(u)?, f.f().eval_at(u)?]);
                    let rhs = &(&linear * &f.v_r_polynomial(n))
                        + &f.v_r_polynomial(n - 1).shift(2).scale(&f.h().eval_at(u)?);
                    Ok(text(&f.v_r_polynomial(n + 1), &rhs))
                },
            ));
            let f = fam.clone();
            out.push(CaseSpec::new(
                label.clone(),
                n,
                None,
                Quantity::Identity,
                "mo-lowering",
                move || {
                    let v = f.v_r_polynomial(n);
                    let lhs = &Polynomial::from_ints(&[0, -2, 1]) * &v.derivative();
                    let rhs = &(&f.g1_at(n) * &v) + &(&f.g2_at(n) * &f.v_r_polynomial(n - 1));
                    Ok(text(&lhs, &rhs))
                },
            ));
            let f = fam.clone();
            out.push(CaseSpec::new(
                label.clone(),
                n,
                None,
                Quantity::Identity,
                "mo-raising",
                move || {
                    let v = f.v_r_polynomial(n);
                    let lhs = &Polynomial::from_ints(&[0, -2, 1]) * &v.derivative();
                    let rhs = &(&f.h1_at(n)? * &v) + &(&f.h2_at(n)? * &f.v_r_polynomial(n + 1));
                    Ok(text(&lhs, &rhs))
                },
            ));
            let f = fam.clone();
            out.push(CaseSpec::new(
                label.clone(),
                n,
                None,
                Quantity::ConstantTerm,
                "mo-telescoping",
                move || {
                    Ok(Outcome::Values(
                        f.telescoped_constant(n)?,
                        f.v_r_polynomial(n).constant_term(),
                    ))
                },
            ));
        }
    }
    out
}

fn contiguous_cases(seed: u64) -> Vec<CaseSpec> {
    let mut out = Vec::new();
    let label =
        |a: &ExactRational, b: &ExactRational, c: &ExactRational| format!("2F1[{a},{b};{c}]");
    for (t, (a, b, c)) in random_hypergeom_parameters(seed, 50, false)
        .into_iter()
        .enumerate()
    {
        out.push(CaseSpec::new(
            label(&a, &b, &c),
            t,
            None,
            Quantity::Identity,
            "derivative-shift",
            move || {
                let check = check_derivative_shift(&a, &b, &c)?;
                Ok(text(&check.lhs, &check.rhs))
            },
        ));
    }
    for (offset, which) in ContiguousRelation::ALL.into_iter().enumerate() {
        let draws = random_hypergeom_parameters(
            seed.wrapping_add(offset as u64 + 1),
            50,
            which == ContiguousRelation::Mixed,
        );
        for (t, (a, b, c)) in draws.into_iter().enumerate() {
            out.push(CaseSpec::new(
                label(&a, &b, &c),
                t,
                None,
                Quantity::Identity,
                which.name(),
                move || {
                    let check = check_relation(which, &a, &b, &c)?;
                    Ok(text(&check.lhs, &check.rhs))
                },
            ));
        }
    }
    out
}

fn parity_cases() -> Vec<CaseSpec> {
    let mut out = Vec::new();
    let show = |e: &BigInt| format!("{e} even={}", e.is_even());
    for beta in -6..=-1i64 {
        for n in 1..=20usize {
            out.push(CaseSpec::new(
                format!("example-5.4(beta={beta})"),
                n,
                None,
                Quantity::Parity,
                "sign-exponent",
                move || {
                    let report =
                        sign_exponent_audit(AuditFamily::ShiftedHypergeometric { beta }, n);
                    let (nn, b) = (BigInt::from(n), BigInt::from(beta));
                    let closed =
                        (&nn - 1) * (3 * &b * &b - 3 * &b * (&nn + 3) + &nn * (&nn + 4)) / 3;
                    Ok(Outcome::Text(
                        show(&report.exponent),
                        format!("{closed} even=true"),
                    ))
                },
            ));
        }
    }
    for n in 1..=40usize {
        out.push(CaseSpec::new(
            "mahlburg-ono",
            n,
            None,
            Quantity::Parity,
            "sign-exponent",
            move || {
                let report = sign_exponent_audit(AuditFamily::MahlburgOno, n);
                let nn = BigInt::from(n);
                let closed = &nn * (&nn * &nn + 6 * &nn - 1) / 3;
                Ok(Outcome::Text(
                    show(&report.exponent),
                    format!("{closed} even=true"),
                ))
            },
        ));
    }
    out
}

pub fn hypergeom_cases(seed: u64) -> Vec<CaseSpec> {
    let mut out = mahlburg_ono_cases();
    out.extend(contiguous_cases(seed));
    out.extend(parity_cases());
    out
}
