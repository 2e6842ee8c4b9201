//! Terminating Gauss hypergeometric polynomials and the families built from
//! them.

pub mod central_binomial;
pub mod contiguous;
pub mod mahlburg_ono;
pub mod series;
pub mod shifted;

pub use central_binomial::CentralBinomialFamily;
pub use contiguous::{check_derivative_shift, check_relation, ContiguousRelation, IdentityCheck};
pub use mahlburg_ono::{mahlburg_ono_disc, MahlburgOnoFamily};
pub use series::{hyp2f1_poly, pochhammer, HypergeomSpec};
pub use shifted::ShiftedHypergeometricFamily;
