use num_bigint::BigInt;
use num_integer::Integer;

use super::ulas::ulas_sign_exponent;
use crate::families::UlasShape;

/// Families whose sign exponents are claimed to be even.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AuditFamily {
    /// `2F1[a, b - n; c - n; x]` with integer `b < 0`: shape `(-b, 1 - b, 1, 1)`.
    ShiftedHypergeometric { beta: i64 },
    /// Shape `(0, 1, 1, 2)` together with the discriminant sign
    /// `n(n + 3)/2` for `d = n`, `e = 2`.
    MahlburgOno,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityReport {
    pub exponent: BigInt,
    pub even: bool,
}

pub fn sign_exponent_audit(family: AuditFamily, n: usize) -> ParityReport {
    let exponent = match family {
        AuditFamily::ShiftedHypergeometric { beta } => {
            let i = (-beta) as usize;
            ulas_sign_exponent(
                UlasShape {
                    i,
                    j: i + 1,
                    k: 1,
                    l: 1,
                },
                n,
            )
        }
        AuditFamily::MahlburgOno => {
            let base = ulas_sign_exponent(
                UlasShape {
                    i: 0,
                    j: 1,
                    k: 1,
                    l: 2,
                },
                n,
            );
            base + BigInt::from(n * (n + 3) / 2)
        }
    };
    let even = exponent.is_even();
    ParityReport { exponent, even }
}
