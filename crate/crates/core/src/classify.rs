//! Threshold segmenters, the eight-class purity/alpha scheme and the
//! feasible-region boundary of the purity/alpha plane.
//!
//! Interval conventions: segments are half-open on the right except the last
//! one, which is closed at its upper end (90° for alpha). The helicity
//! threshold assigns exactly 5° to terrain. Label 0 is reserved for no-data.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::KennaughMatrix;
use crate::error::{Error, Result};
use crate::params::{alpha_gd, purity_gd, RollInvariantParams};

pub const NODATA_LABEL: u8 = 0;

const SLACK: f64 = 1e-9;

/// Helicity threshold separating the sea (odd-bounce) from terrain.
pub const TAU_SEA_THRESHOLD: f64 = 5.0;
/// Alpha segment edges for the three scattering zones.
pub const ALPHA_ZONE_EDGES: [f64; 2] = [30.0, 40.0];
/// Alpha segment edges for the eight-class scheme.
pub const PGD_ALPHA_EDGES: [f64; 3] = [30.0, 40.0, 80.0];
/// Purity split between depolarizing and pure scatterers (`P ≤ 0.5` is depolarizing).
pub const PGD_SPLIT: f64 = 0.5;

fn check_range(name: &str, value: f64, lo: f64, hi: f64) -> Result<f64> {
    if !(value >= lo - SLACK && value <= hi + SLACK) {
        return Err(Error::domain(format!(
            "{name} = {value} outside [{lo}, {hi}]"
        )));
    }
    Ok(value.clamp(lo, hi))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TauSegment {
    Sea,
    Terrain,
}

impl TauSegment {
    pub fn label(self) -> u8 {
        match self {
            TauSegment::Sea => 1,
            TauSegment::Terrain => 2,
        }
    }
}

pub fn tau_segment(tau: f64) -> Result<TauSegment> {
    let tau = check_range("tau_gd", tau, 0.0, 45.0)?;
    Ok(if tau < TAU_SEA_THRESHOLD {
        TauSegment::Sea
    } else {
        TauSegment::Terrain
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum AlphaZone {
    /// `[0°, 30°)`
    OddBounce,
    /// `[30°, 40°)`
    Volume,
    /// `[40°, 90°]`
    EvenOrHelix,
}

impl AlphaZone {
    pub fn label(self) -> u8 {
        match self {
            AlphaZone::OddBounce => 1,
            AlphaZone::Volume => 2,
            AlphaZone::EvenOrHelix => 3,
        }
    }
}

pub fn alpha_zone(alpha: f64) -> Result<AlphaZone> {
    let alpha = check_range("alpha_gd", alpha, 0.0, 90.0)?;
    Ok(if alpha < ALPHA_ZONE_EDGES[0] {
        AlphaZone::OddBounce
    } else if alpha < ALPHA_ZONE_EDGES[1] {
        AlphaZone::Volume
    } else {
        AlphaZone::EvenOrHelix
    })
}

/// Class label 1..=8. Odd labels are the depolarizing half (`P_GD ≤ 0.5`),
/// even labels the pure half; consecutive pairs share an alpha segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PgdAlphaClass(u8);

impl PgdAlphaClass {
    pub fn label(self) -> u8 {
        self.0
    }

    /// Zero-based alpha segment index (0..4).
    pub fn alpha_segment(self) -> usize {
        usize::from((self.0 - 1) / 2)
    }

    pub fn is_pure(self) -> bool {
        self.0.is_multiple_of(2)
    }
}

pub fn pgd_alpha_class(p: f64, alpha: f64) -> Result<PgdAlphaClass> {
    let p = check_range("p_gd", p, 0.0, 1.0)?;
    let alpha = check_range("alpha_gd", alpha, 0.0, 90.0)?;
    let segment = PGD_ALPHA_EDGES
        .iter()
        .filter(|&&edge| alpha >= edge)
        .count() as u8;
    let pure = u8::from(p > PGD_SPLIT);
    Ok(PgdAlphaClass(2 * segment + 1 + pure))
}

/// Curves delimiting the physically feasible region of the purity/alpha plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryCurve {
    I,
    II,
    III,
}

impl BoundaryCurve {
    pub const ALL: [BoundaryCurve; 3] = [BoundaryCurve::I, BoundaryCurve::II, BoundaryCurve::III];

    pub fn m_range(self) -> (f64, f64) {
        match self {
            BoundaryCurve::I => (0.0, 1.0),
            BoundaryCurve::II => (0.0, 0.5),
            BoundaryCurve::III => (0.5, 1.0),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BoundaryCurve::I => "I",
            BoundaryCurve::II => "II",
            BoundaryCurve::III => "III",
        }
    }

    /// Diagonal Kennaugh matrix of the curve at parameter `m`.
    pub fn kennaugh(self, m: f64) -> Result<KennaughMatrix> {
        let (lo, hi) = self.m_range();
        if !(m >= lo && m <= hi) {
            return Err(Error::domain(format!(
                "m = {m} outside [{lo}, {hi}] for curve {}",
                self.name()
            )));
        }
        let d = match self {
            BoundaryCurve::I => [(2.0 * m + 1.0) / 2.0, 0.5, 0.5, (2.0 * m - 1.0) / 2.0],
            BoundaryCurve::II => [
                (2.0 * m + 1.0) / 2.0,
                (1.0 - 2.0 * m) / 2.0,
                (2.0 * m - 1.0) / 2.0,
                (2.0 * m + 1.0) / 2.0,
            ],
            BoundaryCurve::III => [
                (2.0 * m + 1.0) / 2.0,
                (2.0 * m - 1.0) / 2.0,
                (2.0 * m - 1.0) / 2.0,
                (3.0 - 2.0 * m) / 2.0,
            ],
        };
        KennaughMatrix::from_diagonal(d)
    }
}

impl fmt::Display for BoundaryCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `(P_GD, α_GD)` of the boundary scatterer at parameter `m`.
pub fn feasible_boundary(curve: BoundaryCurve, m: f64) -> Result<(f64, f64)> {
    let k = curve.kennaugh(m)?;
    Ok((purity_gd(&k)?, alpha_gd(&k)?))
}

/// One sampled boundary point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundaryPoint {
    pub curve: &'static str,
    pub m: f64,
    pub p_gd: f64,
    pub alpha_gd: f64,
}

/// Samples all three curves at spacing `dm`, endpoints included.
pub fn sample_boundary(dm: f64) -> Result<Vec<BoundaryPoint>> {
    if !(dm > 0.0 && dm <= 0.5) {
        return Err(Error::domain(format!(
            "boundary step dm = {dm} must lie in (0, 0.5]"
        )));
    }
    let mut out = Vec::new();
    for curve in BoundaryCurve::ALL {
        let (lo, hi) = curve.m_range();
        let n = ((hi - lo) / dm).round() as usize;
        for i in 0..=n {
            let m = if i == n {
                hi
            } else {
                (lo + i as f64 * dm).min(hi)
            };
            let (p_gd, alpha_gd) = feasible_boundary(curve, m)?;
            out.push(BoundaryPoint {
                curve: curve.name(),
                m,
                p_gd,
                alpha_gd,
            });
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scheme {
    Tau,
    Alpha,
    PgdAlpha,
}

impl Scheme {
    pub fn name(self) -> &'static str {
        match self {
            Scheme::Tau => "tau",
            Scheme::Alpha => "alpha",
            Scheme::PgdAlpha => "pgd-alpha",
        }
    }

    pub fn label(self, p: &RollInvariantParams) -> Result<u8> {
        Ok(match self {
            Scheme::Tau => tau_segment(p.tau_gd)?.label(),
            Scheme::Alpha => alpha_zone(p.alpha_gd)?.label(),
            Scheme::PgdAlpha => pgd_alpha_class(p.p_gd, p.alpha_gd)?.label(),
        })
    }

    /// `(label, name, rgb)` for every label the scheme can emit, no-data first.
    pub fn legend(self) -> Vec<(u8, &'static str, [u8; 3])> {
        let mut legend = vec![(NODATA_LABEL, "nodata", [0, 0, 0])];
        match self {
            Scheme::Tau => {
                legend.push((1, "sea", PALETTE[0]));
                legend.push((2, "terrain", PALETTE[5]));
            }
            Scheme::Alpha => {
                legend.push((1, "odd_bounce", PALETTE[1]));
                legend.push((2, "volume", PALETTE[3]));
                legend.push((3, "even_or_helix", PALETTE[5]));
            }
            Scheme::PgdAlpha => {
                const NAMES: [&str; 8] = [
                    "odd_bounce_depolarizing",
                    "odd_bounce_pure",
                    "volume_depolarizing",
                    "volume_pure",
                    "even_depolarizing",
                    "even_pure",
                    "dihedral_helix_depolarizing",
                    "dihedral_helix_pure",
                ];
                for (i, name) in NAMES.iter().enumerate() {
                    legend.push((i as u8 + 1, name, PALETTE[i]));
                }
            }
        }
        legend
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('_', "-").as_str() {
            "tau" => Ok(Scheme::Tau),
            "alpha" => Ok(Scheme::Alpha),
            "pgd-alpha" | "pgdalpha" => Ok(Scheme::PgdAlpha),
            other => Err(Error::Config(format!(
                "unknown classification scheme '{other}'"
            ))),
        }
    }
}

/// Fixed class palette for rendered maps (classes 1..=8 of the purity/alpha
/// scheme; the two- and three-zone schemes reuse entries).
pub const PALETTE: [[u8; 3]; 8] = [
    [0, 0, 139],    // 1 dark blue
    [65, 105, 225], // 2 royal blue
    [0, 100, 0],    // 3 dark green
    [124, 205, 50], // 4 yellow green
    [178, 34, 34],  // 5 firebrick
    [255, 99, 71],  // 6 tomato
    [128, 0, 128],  // 7 purple
    [255, 215, 0],  // 8 gold
];

/// Labels a raster of per-pixel parameters; `None` and failing pixels get [`NODATA_LABEL`].
pub fn classify_raster(params: &[Option<RollInvariantParams>], scheme: Scheme) -> Vec<u8> {
    params
        .iter()
        .map(|p| {
            p.as_ref()
                .and_then(|p| scheme.label(p).ok())
                .unwrap_or(NODATA_LABEL)
        })
        .collect()
}

/// Per-label histograms of `values`, for user-supplied label masks.
///
/// Returns CSV text with columns `label,bin_lo,bin_hi,count`. Non-finite
/// values and label 0 are skipped.
pub fn label_histograms_csv(
    values: &[f64],
    labels: &[u8],
    lo: f64,
    hi: f64,
    bins: usize,
) -> Result<String> {
    if values.len() != labels.len() {
        return Err(Error::domain("values and labels differ in length"));
    }
    if !(hi > lo) || bins == 0 {
        return Err(Error::domain(
            "histogram needs hi > lo and at least one bin",
        ));
    }
    let mut counts = std::collections::BTreeMap::<u8, Vec<u64>>::new();
    let width = (hi - lo) / bins as f64;
    for (&v, &label) in values.iter().zip(labels) {
        if label == NODATA_LABEL || !v.is_finite() || v < lo || v > hi {
            continue;
        }
        let bin = (((v - lo) / width) as usize).min(bins - 1);
        counts.entry(label).or_insert_with(|| vec![0; bins])[bin] += 1;
    }
    let mut csv = String::from("label,bin_lo,bin_hi,count\n");
    for (label, hist) in counts {
        for (i, c) in hist.iter().enumerate() {
            let b0 = lo + i as f64 * width;
            csv.push_str(&format!("{label},{b0},{},{c}\n", b0 + width));
        }
    }
    Ok(csv)
}
