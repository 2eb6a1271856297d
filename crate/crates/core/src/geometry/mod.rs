//! Planar domains, their rasterization, and geometric functionals.

pub mod asymmetry;
pub mod clip;
pub mod domain;
pub mod grid;
pub mod tiling;

pub use asymmetry::{fraenkel_asymmetry, pixel_set_asymmetry};
pub use domain::{DomainSpec, Point};
pub use grid::GridMask;
pub use tiling::{build_tiling, CellKind, Tiling};
