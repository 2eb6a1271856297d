//! Nodal domains, boundary sets, critical points and θ-sweeps.

pub mod bipartite;
pub mod boundary;
pub mod domains;
pub mod sweep;

pub use bipartite::{is_bipartite, Bipartiteness};
pub use boundary::{boundary_set, critical_points, odd_count, BoundarySet, CriticalPoint};
pub use domains::{nodal_domains, NodalPartition};
pub use sweep::{
    combine_rect_eigenfunctions, combine_square_eigenfunctions, scaled_family_quotient, square_courant_scan, square_sweep_mask,
    theta_sweep_max_domains, theta_sweep_pair, ScaledFamily, SweepResult,
};
