//! Casimir eigenvalues of (ℤ,α)-gradings of simple Lie algebras, computed in
//! exact rational arithmetic.

pub mod abelian;
pub mod casimir;
pub mod cli;
pub mod error;
pub mod golden;
pub mod grading;
pub mod involution;
pub mod rat;
pub mod report;
pub mod rootsys;
pub mod suite;

pub use error::{Error, Result};
pub use rat::Rat;
