//! Planar convex geometry for Minkowski asymmetry, symmetrization ratios,
//! gauge radii and completeness checks.

pub mod complete;
pub mod error;
pub mod families;
pub mod gauges;
pub mod geom;
pub mod lp;
pub mod symm;
pub mod tol;
pub mod verify;

pub use error::{GeomError, Result};
