//! Pleijel-type constants, recomputed from the Bessel oracle and the grid
//! solver rather than typed in.

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::bessel::lambda_disk_unit_area;
use crate::error::Result;
use crate::geometry::DomainSpec;
use crate::solver::groundstate_energy;

/// Accuracy asked of the solver for `λ(Hexa₁)`.
pub const HEXAGON_TARGET: f64 = 1e-5;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PleijelConstants {
    pub lambda_disk: f64,
    pub lambda_hexagon: f64,
    /// `4π / λ(Disk₁)`
    pub nu_pl: f64,
    /// `4π / λ(Hexa₁)`
    pub nu_hex: f64,
    /// `λ(Disk₁) / λ(Hexa₁)`
    pub ratio: f64,
    /// `4π / λ(Sq₁) = 2/π`
    pub polterovich: f64,
}

impl PleijelConstants {
    /// `polterovich < ν_Hex < ν_Pl < 1`.
    pub fn chain_holds(&self) -> bool {
        self.polterovich < self.nu_hex && self.nu_hex < self.nu_pl && self.nu_pl < 1.0
    }
}

/// Ground energy of the unit-area regular hexagon, solved once per process.
pub fn lambda_hexagon_unit_area() -> Result<f64> {
    static CACHE: OnceLock<f64> = OnceLock::new();
    if let Some(v) = CACHE.get() {
        return Ok(*v);
    }
    let v = groundstate_energy(&DomainSpec::unit_area_hexagon(), HEXAGON_TARGET)?.value;
    Ok(*CACHE.get_or_init(|| v))
}

pub fn pleijel_constants() -> Result<PleijelConstants> {
    let lambda_disk = lambda_disk_unit_area();
    let lambda_hexagon = lambda_hexagon_unit_area()?;
    let lambda_square = 2.0 * PI * PI;
    Ok(PleijelConstants {
        lambda_disk,
        lambda_hexagon,
        nu_pl: 4.0 * PI / lambda_disk,
        nu_hex: 4.0 * PI / lambda_hexagon,
        ratio: lambda_disk / lambda_hexagon,
        polterovich: 4.0 * PI / lambda_square,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disk_constant() {
        let nu = 4.0 * PI / lambda_disk_unit_area();
        assert!((nu - 0.691_73).abs() < 1e-4, "{nu}");
    }
}
