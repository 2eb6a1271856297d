//! Discrete Dirichlet Laplacians and their lowest eigenpairs.

pub mod assembly;
pub mod eigen;
pub mod factor;
pub mod groundstate;
pub mod operator;

pub use assembly::{assemble_dirichlet_laplacian, assemble_laplacian, assemble_subset, BoundaryTreatment};
pub use eigen::{lowest_eigenpairs, lowest_eigenvalue, EigenPair, SolverConfig};
pub use groundstate::{groundstate_energy, groundstate_energy_with, solve_domain, GroundConfig, GroundEstimate};
pub use operator::{Scalar, SparseOperator};
