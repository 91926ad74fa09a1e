//! Roll-invariant parameters built from distances to roll-invariant targets.
//!
//! All angles in the public interface are degrees.

use serde::Serialize;

use crate::algebra::{kennaugh_from_coherency, CoherencyMatrix, ElementaryTarget, KennaughMatrix};
use crate::error::{Error, Result};
use crate::geodesic::gd_kennaugh;

const RANGE_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RollInvariantParams {
    /// Scattering-type angle, degrees in `[0, 90]`.
    pub alpha_gd: f64,
    /// Helicity, degrees in `[0, 45]`.
    pub tau_gd: f64,
    /// Purity / depolarization index in `[0, 1]`.
    pub p_gd: f64,
    /// Classical depolarization index in `[0, 1]`.
    pub p_d: f64,
    pub span: f64,
}

fn clamp_to(value: f64, lo: f64, hi: f64) -> f64 {
    debug_assert!(
        value >= lo - RANGE_SLACK && value <= hi + RANGE_SLACK,
        "{value}"
    );
    value.clamp(lo, hi)
}

/// `90° · GD(K, K_t)`: 0° for odd-bounce, 90° for even-bounce and helices.
pub fn alpha_gd(k: &KennaughMatrix) -> Result<f64> {
    let d = gd_kennaugh(k, &ElementaryTarget::Trihedral.kennaugh())?;
    Ok(clamp_to(90.0 * d.value(), 0.0, 90.0))
}

/// `45° · (1 − √(GD(K, K_lh)·GD(K, K_rh)))`
pub fn tau_gd(k: &KennaughMatrix) -> Result<f64> {
    let left = gd_kennaugh(k, &ElementaryTarget::LeftHelix.kennaugh())?.value();
    let right = gd_kennaugh(k, &ElementaryTarget::RightHelix.kennaugh())?.value();
    Ok(clamp_to(45.0 * (1.0 - (left * right).sqrt()), 0.0, 45.0))
}

/// `((3/2) · GD(K, K_dep))²`, clamped to `[0, 1]`.
///
/// For physical matrices the distance to the ideal depolarizer cannot exceed
/// 2/3, so the index spans 0 (ideal depolarizer) to 1 (non-depolarizing).
pub fn purity_gd(k: &KennaughMatrix) -> Result<f64> {
    let d = gd_kennaugh(k, &ElementaryTarget::IdealDepolarizer.kennaugh())?.value();
    let scaled = 1.5 * d;
    Ok((scaled * scaled).clamp(0.0, 1.0))
}

/// `√((Tr(KᵀK) − K₁₁²) / (3K₁₁²))`
pub fn depolarization_index(k: &KennaughMatrix) -> Result<f64> {
    let k11 = k.k11();
    if !(k11 > 0.0) {
        return Err(Error::domain(format!(
            "depolarization index needs K11 > 0, got {k11}"
        )));
    }
    let total: f64 = k.components().iter().map(|v| v * v).sum();
    let p = ((total - k11 * k11) / (3.0 * k11 * k11)).max(0.0).sqrt();
    Ok(p.min(1.0))
}

pub fn params_for_kennaugh(k: &KennaughMatrix) -> Result<RollInvariantParams> {
    if !k.is_valid_pixel() {
        return Err(Error::InvalidPixel("non-positive total power".into()));
    }
    Ok(RollInvariantParams {
        alpha_gd: alpha_gd(k)?,
        tau_gd: tau_gd(k)?,
        p_gd: purity_gd(k)?,
        p_d: depolarization_index(k)?,
        span: k.span(),
    })
}

pub fn params_for_pixel(t: &CoherencyMatrix) -> Result<RollInvariantParams> {
    if !(t.trace() > 0.0) {
        return Err(Error::InvalidPixel("non-positive total power".into()));
    }
    let mut p = params_for_kennaugh(&kennaugh_from_coherency(t))?;
    p.span = t.trace();
    Ok(p)
}
