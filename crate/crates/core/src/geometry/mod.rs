//! Constructors for scrolls, rational normal curves, lines in Plücker
//! coordinates, the local chart of the secant fourfold and its tangent cone.

pub mod chart;
pub mod plucker;
pub mod scroll;

pub use chart::{chart_coordinates, chart_ideal, chart_ring, tangent_cone_ideal, tangent_cone_point};
pub use plucker::{
    chord_family, gamma_family, incidence_equations, plucker_from_points, plucker_labels, rnc_chord_family,
    rnc_secant_family, secant_family, Incidence, LineFamily, LinearSubspace, PluckerVector,
};
pub use scroll::{
    rnc_ideal, rnc_parametrization, scroll_ideal, scroll_matrix, scroll_parametrization, singular_scroll_ideal,
    PolynomialMap, ScrollSpec, SingularScroll,
};

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::groebner::GroebnerError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("a ⩾ 1 required; S_{{0,r}} out of scope")]
    ConeScroll,
    #[error("scroll needs 1 ⩽ a ⩽ b, got a = {a}, b = {b}")]
    InvalidScroll { a: usize, b: usize },
    #[error("r ⩾ {min} required, got r = {r}")]
    RTooSmall { min: usize, r: usize },
    #[error("d ⩾ 2 required, got d = {0}")]
    DegreeTooSmall(usize),
    #[error("linear forms are dependent: rank {rank} < {codim}")]
    DependentForms { rank: usize, codim: usize },
    #[error("point maps have lengths {0} and {1}")]
    PointLength(usize, usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

#[cfg(test)]
pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
