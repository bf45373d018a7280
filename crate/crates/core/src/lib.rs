pub mod board;
pub mod catalan;
pub mod decimal;
pub mod equivalence;
pub mod error;
pub mod factorization;
pub mod hitnumbers;
pub mod partitions;
pub mod placement;
pub mod polynomial;
pub mod suites;

pub use board::{FerrersBoard, Level, Zone};
pub use error::{Error, Result};
pub use polynomial::{FallingFactorialExpansion, IntPolynomial, LaurentPoly, VarSet};
