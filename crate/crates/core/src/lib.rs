//! Numerical toolkit for convex bodies in the plane: support-function
//! geometry, elliptic ground states (torsion, principal Dirichlet
//! eigenvalue) solved by finite elements, variational boundary measures on
//! the circle, a verifier suite for the classical sharp inequalities, and an
//! energy-weighted curvature flow that erodes bodies toward disks.

pub mod error;
pub mod geometry;
pub mod spectral;

pub use error::{Error, Result};
