//! Exact polynomial arithmetic: univariate integer polynomials with falling-factorial
//! basis conversion, and sparse multivariate Laurent polynomials.

pub mod analogues;
mod int_poly;
mod laurent;

pub use analogues::{
    binomial, factorial, int_falling, multinomial, pq_bracket, pq_factorial, pq_falling, pq_integer, q_binomial,
    q_integer,
};
pub use int_poly::{to_falling_basis, FallingFactorialExpansion, IntPolynomial};
pub use laurent::{Exponents, LaurentPoly, VarSet};
