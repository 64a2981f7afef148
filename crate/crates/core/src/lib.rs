//! Exact computer algebra for rational normal scrolls, their secant
//! varieties in the Grassmannian of lines, and the numerical invariants of
//! those varieties.
//!
//! The crate is layered: [`algebra`] (scalars and polynomials), [`groebner`]
//! (ideals), [`geometry`] (constructors for the varieties involved),
//! [`invariants`] (one verification report per claim) and [`gitcheck`]
//! (the semistability certificate for hyperplane sections).

pub mod algebra;
pub mod geometry;
pub mod gitcheck;
pub mod groebner;
pub mod invariants;
