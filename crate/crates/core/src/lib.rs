//! Integral bases, element indices and monogenity checks for the simplest
//! sextic fields K_m = Q(α_m).
//!
//! Everything is exact: scalars are arbitrary-precision integers and
//! rationals, and conjugates are handled through the Galois action instead of
//! numerical embeddings.
//!
//! * [`arith`]: integers, rationals, dense polynomials over Z, Q and F_p,
//!   subresultant resultants, and 6×6 exact linear algebra.
//! * [`field`]: arithmetic in K_m, the automorphism σ, norms, traces and
//!   integrality tests.
//! * [`basis`]: the 19 periodic integral-basis templates and a per-m
//!   certification that the instantiated basis is an integral basis.
//! * [`monogenity`]: element indices, the three-factor index-form
//!   decomposition, the non-monogenity obstruction, generator tables, box
//!   searches and parameter scans.

pub mod arith;
pub mod basis;
pub mod decimal;
pub mod error;
pub mod field;
pub mod monogenity;

pub use error::{Error, Result};
pub use field::{qm_of, FieldElement, SexticField};
