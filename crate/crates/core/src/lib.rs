//! Generic type BC Hecke algebras and the theta bimodule over them.
//!
//! The crate is `no_std` (with `alloc`). Coefficients live in
//! `Z[v^(1/2), v^(-1/2)]` or one of its specializations, see [`ring`].

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bipartition;
pub mod dualpair;
pub mod hecke;
pub mod laurent;
pub mod partition;
pub mod ring;
pub mod thetamod;
pub mod weyl;

pub use laurent::{HalfInt, LaurentPoly, QuadExtValue};
pub use weyl::{Gen, ParabolicSpec, SignedPerm};

use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("not a signed permutation")]
    InvalidPerm,
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("index out of range")]
    IndexOutOfRange,
    #[error("element is not a distinguished coset representative")]
    NotDistinguished,
    #[error("generator {0} is not in this algebra")]
    BadGenerator(Gen),
    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("{0}")]
    Invalid(String),
}
