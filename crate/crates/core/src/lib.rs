//! Computational algebra over odd-degree binary fields: bit-packed GF(2^m)
//! arithmetic, rational-map value sets and preimage profiles, cyclic
//! difference sets with Singer parameters, exhaustive affine curve counting,
//! and binary linear codes defined by trace evaluations.
//!
//! Every object here is finite and exactly computable; the companion CLI
//! (`trinodiff`) sweeps whole fields to verify the published claims about
//! eleven trinomials, their equivalence classes, the curves behind their
//! preimage structure, and the tri-weight codes their value-sets define.

pub mod codes;
pub mod curves;
pub mod diffset;
pub mod error;
pub mod gf2m;
pub mod polyfun;
pub mod set;

pub use error::{Error, Result};
pub use gf2m::{Fe, FieldCtx};
pub use set::ElementSet;
