//! Exact scalars, monomial orders and sparse multivariate polynomials.

pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod polynomial;
pub mod scalar;
pub mod univariate;

pub use linalg::Matrix;
pub use monomial::{compare_monomials, Monomial, MonomialOrder, EXPONENT_CAP};
pub use parse::{format_polynomial, parse_polynomial};
pub use polynomial::{Polynomial, Ring, RingExt};
pub use scalar::{Field, Fp, Rational, Scalar, ScalarDomain, DEFAULT_PRIMES};
pub use univariate::{univariate_gcd, UniPoly};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("arithmetic between different moduli {0} and {1} (0 means Q)")]
    MixedModuli(u64, u64),
    #[error("coefficient fields differ: {0} vs {1}")]
    DomainMismatch(String, String),
    #[error("variable sets differ: [{0}] vs [{1}]")]
    VariableMismatch(String, String),
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("no image given for variable `{0}`")]
    MissingImage(String),
    #[error("exponent {0} exceeds the per-variable cap")]
    ExponentCap(u32),
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("expected a univariate polynomial, ring has {0} variables")]
    NotUnivariate(usize),
}
