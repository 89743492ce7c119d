//! Exact scalars, polynomials and small matrices.

pub mod int;
pub mod matrix;
pub mod modpoly;
pub mod poly;
pub mod resultant;

pub use int::{is_squarefree, squarefreeness, trial_factor, Squarefreeness, TrialFactorization};
pub use matrix::{IntMatrix6, RatMatrix6};
pub use modpoly::ModPoly;
pub use poly::{IntPoly, Poly, RatPoly};
pub use resultant::{discriminant, resultant};
