// Guards are written `!(x >= lo)` on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bessel;
pub mod bounds;
pub mod error;
pub mod geometry;
pub mod magnetic;
pub mod nodal;
pub mod partition;
pub mod rect;
pub mod solver;

pub use error::{Error, ErrorFamily, Result};
pub use geometry::{DomainSpec, GridMask, Point};
pub use solver::{EigenPair, SparseOperator};
