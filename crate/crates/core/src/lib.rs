//! Polarimetric SAR analysis built on the geodesic distance between
//! Kennaugh matrices: similarity to elementary targets, roll-invariant
//! scattering parameters, unsupervised classification and per-pixel
//! scattering power factorization, with PolSARpro raster I/O.
//!
//! ```
//! use polsar_gd::{gd_kennaugh, ElementaryTarget};
//!
//! let d = gd_kennaugh(
//!     &ElementaryTarget::Trihedral.kennaugh(),
//!     &ElementaryTarget::Dihedral.kennaugh(),
//! )
//! .unwrap();
//! assert!((d.value() - 1.0).abs() < 1e-12);
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

pub mod algebra;
pub mod classify;
pub mod commands;
pub mod error;
pub mod geodesic;
pub mod params;
pub mod raster;
pub mod spff;

pub use algebra::{
    coherency_from_covariance, coherency_from_kennaugh, covariance_from_coherency,
    elementary_target, fry_kattawar_residual, grvm_kennaugh, kennaugh_from_coherency,
    kennaugh_from_covariance, kennaugh_from_scattering, rotate_kennaugh, CoherencyMatrix,
    CovarianceMatrix, ElementaryTarget, KennaughMatrix, ScatteringMatrix,
};
pub use classify::{pgd_alpha_class, sample_boundary, BoundaryCurve, Scheme};
pub use error::{Error, Result};
pub use geodesic::{
    gd_coherency, gd_covariance, gd_kennaugh, gd_scattering, similarity, Distance, Similarity,
};
pub use params::{params_for_kennaugh, params_for_pixel, RollInvariantParams};
pub use raster::{run_pipeline, synth_scene, ExecOptions, Job, RasterStack, SceneSpec};
pub use spff::{factorize_pixel, optimize_orientation, PowerDecomposition, SpffConfig, SpffEngine};
