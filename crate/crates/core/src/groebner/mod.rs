//! Ideals, Gröbner bases, elimination, Hilbert data and zero-dimensional counting.

pub mod buchberger;
pub mod hilbert;
pub mod ideal;
pub mod jacobian;
pub mod zerodim;

pub use buchberger::{buchberger, normal_form, s_polynomial, GroebnerBasis, GroebnerConfig, DEFAULT_PAIR_BUDGET};
pub use hilbert::{hilbert_data, hilbert_data_of_monomials, HilbertData};
pub use ideal::{elimination_ideal, read_ideal_file, write_ideal_file, Ideal, IdealFile};
pub use jacobian::{jacobian_matrix_at, jacobian_rank_at};
pub use zerodim::{certified_zero_dim_count, quotient_dimension, QuotientDimension, ZeroDimCount};

use thiserror::Error;

use crate::algebra::AlgebraError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("an ideal needs at least one generator")]
    NoGenerators,
    #[error("all generators are zero")]
    ZeroIdeal,
    #[error("generator over a different ring [{0}]")]
    RingMismatch(String),
    #[error("S-pair budget exceeded after {pairs} pairs")]
    BudgetExceeded { pairs: usize },
    #[error("cannot eliminate {k} of {nvars} variables")]
    EliminateAll { k: usize, nvars: usize },
    #[error("ideal file line {line}: {message}")]
    IdealFile { line: usize, message: String },
    #[error("Hilbert data requires homogeneous generators")]
    NotHomogeneous,
    #[error("quotient ring is infinite dimensional")]
    InfiniteQuotient,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
