//! Aharonov-Bohm operators with flux π at a set of poles.

pub mod characterization;
pub mod operator;
pub mod poles;
pub mod spectrum;

pub use characterization::{
    ab_pleijel_scan, label_overlap, odd_poles, verify_magnetic_characterization, ScanRow, ENERGY_TOLERANCE, VALENCE_RADIUS,
};
pub use operator::{assemble_ab_laplacian, assemble_ab_laplacian_with, CutDirection, Gauge, MagneticOperator};
pub use poles::{circulation, vector_potential, PoleConfig};
pub use spectrum::{ab_spectrum, ab_spectrum_with, centered_disk_ground_energy, AbEigenpair, AbExtrapolation, AbSpectrum};
