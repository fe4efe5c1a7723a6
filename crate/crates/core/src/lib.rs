//! Exact representation theory for the stable cohomology of `Aut(F_n)` with
//! bivariant twisted coefficients `H^{⊗p} ⊗ (H^*)^{⊗q}`.
//!
//! Layers, bottom up:
//! - [`partitions`]: partitions, skew shapes, hook formulas, tableaux;
//! - [`characters`]: class functions, Murnaghan–Nakayama, induction, LR rule;
//! - [`modules`]: explicit matrix modules (Specht modules, Schur functors,
//!   tensor powers) used as brute-force oracles;
//! - [`labeled`]: labeled set partitions, `F_W(V)` and the maps `Φ_{P,l}`;
//! - [`stable`]: the stable cohomology calculator and its cross-checks;
//! - [`cli`]: command-line front end.

pub mod budget;
pub mod characters;
pub mod cli;
pub mod error;
pub mod labeled;
pub mod linalg;
pub mod modules;
pub mod partitions;
pub mod perm;
pub mod report;
pub mod stable;

pub use budget::Budget;
pub use error::{Error, Result};
pub use partitions::{Partition, SkewShape};
