//! Explicit constants and inequalities of spectral geometry, evaluated.

mod audit;
mod bourgain;
mod constants;
mod inequalities;
mod report;
mod steinerberger;
mod weyl;

pub use audit::{audit_cells, uncertainty_principle_audit, AuditTerms};
pub use bourgain::{
    bourgain_b, bourgain_break_even, bourgain_delta0, bourgain_excess, bourgain_limit_check, bourgain_sup, bourgain_sup_with, BourgainSup,
    PACKING_CONSTANT, SUP_GRID,
};
pub use constants::{lambda_hexagon_unit_area, pleijel_constants, PleijelConstants, HEXAGON_TARGET};
pub use inequalities::{
    bdpv_check, faber_krahn_check, hansen_nadirashvili_check, hansen_nadirashvili_factor, normalized_ground_energy, FK_ALLOWANCE,
    GROUND_TARGET,
};
pub use report::{summary_table, BoundReport};
pub use steinerberger::{steinerberger_crossing, steinerberger_factor, SteinerbergerFactor};
pub use weyl::{grid_count, perimeter, weyl_check, MIN_COUNT};
