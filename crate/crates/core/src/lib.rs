//! Exact arithmetic for Seifert matrices: Laurent polynomials over Z, the
//! S-equivalence moves, classical invariants, the Blanchfield pairing and
//! searches for equivalence witnesses.

#![allow(clippy::needless_range_loop)]

pub mod blanchfield;
pub mod error;
pub mod invariants;
pub mod laurent;
pub mod matrix;
pub mod seifert;
pub mod sequiv;
pub mod serde_int;

pub use blanchfield::{BlanchfieldForm, Isometry, IsometryBudget, Verdict, Witness};
pub use error::{AlgebraError, BlanchfieldError, SeifertError};
pub use invariants::InvariantReport;
pub use laurent::{LaurentPoly, RatFun, TorsionClass, Unit};
pub use matrix::{IntMatrix, Matrix};
pub use seifert::{EnlargeKind, Move, MoveChain, ReductionSite, SeifertMatrix};
