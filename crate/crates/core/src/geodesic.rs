//! Geodesic distance on the unit sphere of 4×4 real matrices.
//!
//! `GD(K₁, K₂) = (2/π)·∠(K₁, K₂)` where the angle is taken between the
//! Frobenius-normalized matrices. The angle is evaluated with the half-angle
//! chord form `2·atan2(‖û − v̂‖, ‖û + v̂‖)`, which equals
//! `arccos(⟨û, v̂⟩)` exactly in real arithmetic but keeps full relative
//! precision near 0 (where `arccos` loses half the significant digits).
//!
//! The equivalent coherency, covariance and scattering-matrix forms work on
//! the Hermitian (resp. Kronecker) inner product directly; since the
//! representation maps are isometries the results coincide with the Kennaugh
//! form.

use std::f64::consts::FRAC_2_PI;

use crate::algebra::{
    kronecker_self_conjugate, CoherencyMatrix, CovarianceMatrix, KennaughMatrix, ScatteringMatrix,
};
use crate::error::{Error, Result};

/// Dimensionless distance in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Distance(f64);

impl Distance {
    pub fn value(self) -> f64 {
        self.0
    }

    pub fn similarity(self) -> Similarity {
        Similarity(1.0 - self.0)
    }
}

/// `1 − GD`, in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Similarity(f64);

impl Similarity {
    pub fn value(self) -> f64 {
        self.0
    }

    pub fn distance(self) -> Distance {
        Distance(1.0 - self.0)
    }
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Angle (radians, in `[0, π]`) between two vectors of a real inner-product space.
pub(crate) fn unit_angle(a: &[f64], b: &[f64]) -> Result<f64> {
    debug_assert_eq!(a.len(), b.len());
    let (na, nb) = (norm(a), norm(b));
    if !(na > 0.0 && nb > 0.0 && na.is_finite() && nb.is_finite()) {
        return Err(Error::domain(
            "geodesic distance needs non-zero, finite matrices",
        ));
    }
    let (mut diff, mut sum) = (0.0, 0.0);
    for (x, y) in a.iter().zip(b) {
        let (u, v) = (x / na, y / nb);
        diff += (u - v) * (u - v);
        sum += (u + v) * (u + v);
    }
    Ok(2.0 * diff.sqrt().atan2(sum.sqrt()))
}

/// Maps an angle to a distance. Obtuse angles only occur for non-physical
/// matrices (physical pairs have a non-negative inner product) and saturate at 1.
fn distance_from_angle(angle: f64) -> Distance {
    Distance((angle * FRAC_2_PI).clamp(0.0, 1.0))
}

pub fn gd_kennaugh(k1: &KennaughMatrix, k2: &KennaughMatrix) -> Result<Distance> {
    unit_angle(&k1.components(), &k2.components()).map(distance_from_angle)
}

pub fn gd_coherency(t1: &CoherencyMatrix, t2: &CoherencyMatrix) -> Result<Distance> {
    unit_angle(&t1.components(), &t2.components()).map(distance_from_angle)
}

pub fn gd_covariance(c1: &CovarianceMatrix, c2: &CovarianceMatrix) -> Result<Distance> {
    unit_angle(&c1.components(), &c2.components()).map(distance_from_angle)
}

fn kronecker_components(s: &ScatteringMatrix) -> [f64; 32] {
    let x = kronecker_self_conjugate(s);
    let mut out = [0.0; 32];
    for (n, z) in x.iter().flatten().enumerate() {
        out[2 * n] = z.re;
        out[2 * n + 1] = z.im;
    }
    out
}

/// Coherent form on `S ⊗ S*`; invariant to any complex rescaling of either input.
pub fn gd_scattering(s1: &ScatteringMatrix, s2: &ScatteringMatrix) -> Result<Distance> {
    unit_angle(&kronecker_components(s1), &kronecker_components(s2)).map(distance_from_angle)
}

pub fn similarity(k: &KennaughMatrix, reference: &KennaughMatrix) -> Result<Similarity> {
    gd_kennaugh(k, reference).map(Distance::similarity)
}
