//! Exact scalar arithmetic: rationals, Laurent polynomials, rational
//! functions, limits in the contraction parameter and exact linear algebra.

mod error;
mod expr;
mod laurent;
pub mod linalg;
mod monomial;
mod point;
mod poly;
mod ratfn;
mod rational;
mod sample;
mod var;

pub use error::ExactError;
pub use expr::{parse_expr, ExprError};
pub use laurent::{laurent_limit, LaurentLimit, Verdict};
pub use monomial::Monomial;
pub use point::Point;
pub use poly::MultiPoly;
pub use ratfn::RationalFn;
pub use rational::{q, qf, qfmt, qparse, qpow, qsign, Rational};
pub use sample::{probably_zero, Sampler, DEFAULT_SEED};
pub use var::{Var, NVARS};

/// Shorthand for parsing a trusted built-in expression.
pub fn rf(src: &str) -> RationalFn {
    match parse_expr(src) {
        Ok(f) => f,
        Err(e) => panic!("bad built-in expression {:?}: {}", src, e),
    }
}
