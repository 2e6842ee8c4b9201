//! Exact resultants and discriminants of recurrence-defined polynomial
//! families, with closed-form evaluators and brute-force oracles.

pub mod error;
pub mod families;
pub mod formulas;
pub mod hypergeom;
pub mod poly;
pub mod rational;
pub mod registry;
pub mod resultant;
pub mod spec;
pub mod verify;

pub use error::{Error, Result};
pub use poly::{Degree, PolySummary, Polynomial};
pub use rational::ExactRational;
