//! Exact congruence machinery for the truncated sums
//! `sum_{k<p} C(2k,k)^2 C(4k,2k) m^-k` modulo `p` and `p^2`.
//!
//! The crate is organised bottom-up:
//!
//! - [`arith`]: residues mod `p` and `p^2`, quadratic characters, square roots,
//!   p-adic factorial bookkeeping.
//! - [`binom`]: exact and modular binomials, the central sums `S(m)` and `T(x)`,
//!   and the exact integer identity behind the squaring congruence.
//! - [`legendre`]: Legendre polynomials over `F_p`.
//! - [`curves`]: cubic character sums and point counts by enumeration.
//! - [`quadform`]: representations `p = x^2 + d y^2` (Cornacchia and exhaustive).
//! - [`theorems`]: the registry of statements and the per-prime verdict engine.
//! - [`report`] and [`cli`]: rendering and the command-line front end.
//!
//! With the default `parallel` feature, sweeps over primes and the inner
//! character-sum loops run on rayon; without it everything runs sequentially
//! and produces identical output.

pub mod arith;
pub mod binom;
pub mod cli;
pub mod curves;
mod error;
pub mod legendre;
pub mod par;
pub mod quadform;
pub mod report;
pub mod theorems;

pub use crate::arith::{PrimeCtx, ValuedResidue};
pub use crate::error::{Error, Result};
pub use crate::quadform::QuadRep;
pub use crate::report::VerdictReport;
pub use crate::theorems::{TheoremSpec, VerifyOptions};
