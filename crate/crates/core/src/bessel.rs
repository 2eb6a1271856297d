//! Zeros of Bessel functions of the first kind, used as an exact oracle for
//! disk and sector eigenvalues.
//!
//! `J_ν(x) = (x/2)^ν / Γ(ν+1) · S_ν(x)` with
//! `S_ν(x) = Σ_k (−1)^k (x²/4)^k / (k! (ν+1)_k)`. For `x > 0` the zeros of
//! `J_ν` are those of `S_ν`, so the Gamma prefactor is never evaluated.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// The normalized series `S_ν(x)`.
pub fn bessel_series(nu: f64, x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut k = 0.0;
    loop {
        k += 1.0;
        term *= -q / (k * (nu + k));
        sum += term;
        if term.abs() < 1e-17 * sum.abs().max(1e-300) && k > q.sqrt() {
            break;
        }
        if k > 500.0 {
            break;
        }
    }
    sum
}

/// All positive zeros of `J_ν` below `x_max`, in increasing order.
pub fn bessel_zeros_below(nu: f64, x_max: f64) -> Result<Vec<f64>> {
    if nu < 0.0 {
        return Err(Error::InvalidInput(format!("order must be nonnegative, got {nu}")));
    }
    // The series loses about log10(e^x) digits to cancellation.
    if x_max > 30.0 {
        return Err(Error::InvalidInput(format!("zero search limited to x < 30, got {x_max}")));
    }
    let step = 0.05;
    let mut zeros = Vec::new();
    let mut a = 1e-3;
    let mut fa = bessel_series(nu, a);
    while a < x_max {
        let b = (a + step).min(x_max);
        let fb = bessel_series(nu, b);
        if fa == 0.0 {
            zeros.push(a);
        } else if fa * fb < 0.0 {
            zeros.push(bisect(|x| bessel_series(nu, x), a, b));
        }
        a = b;
        fa = fb;
    }
    Ok(zeros)
}

/// First positive zero `j_{ν,1}`.
pub fn bessel_first_zero(nu: f64) -> Result<f64> {
    // j_{ν,1} < ν + 2√(ν+1) + 2 comfortably for the orders in use
    let bound = nu + 2.0 * (nu + 1.0).sqrt() + 3.0;
    bessel_zeros_below(nu, bound)?.first().copied().ok_or_else(|| Error::InvalidInput(format!("no zero found for order {nu}")))
}

fn bisect(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let mut fa = f(a);
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let fm = f(m);
        if fm == 0.0 {
            return m;
        }
        if fa * fm < 0.0 {
            b = m;
        } else {
            a = m;
            fa = fm;
        }
    }
    0.5 * (a + b)
}

/// `λ(Disk₁) = π j₀₁²`, the ground energy of the disk of area one.
pub fn lambda_disk_unit_area() -> f64 {
    let j = bessel_first_zero(0.0).expect("j01 exists");
    PI * j * j
}

/// Ground energy of the circular sector of radius `r` and opening `π/α`,
/// namely `(j_{α,1} / r)²`.
pub fn sector_ground_energy(radius: f64, alpha: f64) -> Result<f64> {
    let j = bessel_first_zero(alpha)?;
    Ok((j / radius).powi(2))
}

/// Dirichlet eigenvalues of the disk of the given radius strictly below
/// `lambda_max`, with multiplicity (two for every nonzero angular order).
pub fn disk_eigenvalues_below(radius: f64, lambda_max: f64) -> Result<Vec<f64>> {
    let x_max = radius * lambda_max.sqrt();
    let mut out = Vec::new();
    for nu in 0.. {
        let zeros = bessel_zeros_below(nu as f64, x_max)?;
        if zeros.is_empty() {
            break;
        }
        for z in zeros {
            let v = (z / radius).powi(2);
            out.push(v);
            if nu > 0 {
                out.push(v);
            }
        }
    }
    out.sort_by(f64::total_cmp);
    Ok(out)
}
