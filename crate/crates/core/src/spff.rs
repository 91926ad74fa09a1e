//! Per-pixel scattering power factorization.
//!
//! For each pixel the observed Kennaugh matrix is first rotated about the
//! line of sight to the orientation where it is closest to one of the
//! configured elementary targets. Similarities of that oriented observation
//! to every target (and to the random-volume model) are ranked, turned into
//! convex weights by splitting unity along the ranking, and scaled by the
//! span. Whatever the models do not explain lands in a residue term, so the
//! components always add up to the span and are never negative.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{
    coherency_from_covariance, covariance_from_coherency, grvm_kennaugh, kennaugh_from_coherency,
    rotate_kennaugh, CoherencyMatrix, CovarianceMatrix, ElementaryTarget, KennaughMatrix,
};
use crate::error::{Error, Result};
use crate::geodesic::gd_kennaugh;
use crate::params::alpha_gd;

/// Orientation search half-width, degrees (`θ ∈ [−π/8, π/8]`).
pub const THETA_HALF_RANGE_DEG: f64 = 22.5;
/// Window applied to the co-pol ratio before it enters the volume model.
pub const GAMMA_RANGE: (f64, f64) = (1e-4, 1e4);
/// Absolute floor below which `⟨|S_VV|²⟩` is treated as zero.
pub const GAMMA_DENOMINATOR_FLOOR: f64 = 1e-30;
/// Candidate orientations whose normalized inner products differ by less
/// than this are considered tied.
const ORIENTATION_TIE_EPS: f64 = 1e-12;

/// Which branch a pixel took: in `A` the volume similarity is ranked with
/// the others, in `B` it is forced to the end of the dominance order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Branch {
    A,
    B,
}

impl Branch {
    pub fn label(self) -> u8 {
        match self {
            Branch::A => 1,
            Branch::B => 2,
        }
    }
}

/// Mapping from the distributed-target condition to a branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BranchMap {
    /// Condition true → branch A.
    #[default]
    Normal,
    /// Condition true → branch B.
    Swapped,
}

impl FromStr for BranchMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "normal" => Ok(BranchMap::Normal),
            "swapped" => Ok(BranchMap::Swapped),
            other => Err(Error::Config(format!("unknown branch map '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SpffConfig {
    /// Elementary targets in tie-breaking order.
    pub target_set: Vec<ElementaryTarget>,
    /// Orientation grid spacing, degrees.
    pub theta_step_deg: f64,
    /// `[lo, hi)` alpha window (degrees) flagging distributed targets.
    pub alpha_volume_range: (f64, f64),
    pub include_volume: bool,
    pub branch_map: BranchMap,
}

impl Default for SpffConfig {
    fn default() -> Self {
        Self {
            target_set: vec![
                ElementaryTarget::Trihedral,
                ElementaryTarget::Cylinder,
                ElementaryTarget::NarrowDihedral,
                ElementaryTarget::Dihedral,
                ElementaryTarget::LeftHelix,
                ElementaryTarget::RightHelix,
            ],
            theta_step_deg: 0.1,
            alpha_volume_range: (30.0, 40.0),
            include_volume: true,
            branch_map: BranchMap::Normal,
        }
    }
}

impl SpffConfig {
    pub fn validate(&self) -> Result<()> {
        if self.target_set.is_empty() {
            return Err(Error::Config("target set is empty".into()));
        }
        for (i, t) in self.target_set.iter().enumerate() {
            if !t.is_coherent() {
                return Err(Error::Config(format!("{t} is not a coherent target")));
            }
            if self.target_set[..i].contains(t) {
                return Err(Error::Config(format!("duplicate target {t}")));
            }
        }
        let step = self.theta_step_deg;
        if !(step > 0.0 && step <= 5.0) {
            return Err(Error::Config(format!(
                "theta step must lie in (0, 5] degrees, got {step}"
            )));
        }
        let (lo, hi) = self.alpha_volume_range;
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(Error::Config(format!(
                "bad alpha volume range [{lo}, {hi})"
            )));
        }
        Ok(())
    }
}

/// A factorized component: one of the elementary targets or the volume model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Component {
    Target(ElementaryTarget),
    Volume,
}

impl Component {
    /// Output band name, e.g. `P_t`, `P_nd`, `P_rv`.
    pub fn band_name(self) -> String {
        match self {
            Component::Target(t) => format!("P_{}", t.short_name()),
            Component::Volume => "P_rv".to_string(),
        }
    }

    pub fn group(self) -> Option<ScatteringGroup> {
        use ElementaryTarget::*;
        match self {
            Component::Target(Trihedral | Cylinder) => Some(ScatteringGroup::Odd),
            Component::Volume => Some(ScatteringGroup::Rand),
            Component::Target(NarrowDihedral | Dihedral) => Some(ScatteringGroup::Even),
            Component::Target(LeftHelix | RightHelix) => Some(ScatteringGroup::Helix),
            Component::Target(_) => None,
        }
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Component::Target(t) => write!(f, "{t}"),
            Component::Volume => f.write_str("random_volume"),
        }
    }
}

/// Pseudocolor groups, in display column order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScatteringGroup {
    Odd,
    Rand,
    Even,
    Helix,
}

impl ScatteringGroup {
    pub const ALL: [ScatteringGroup; 4] = [
        ScatteringGroup::Odd,
        ScatteringGroup::Rand,
        ScatteringGroup::Even,
        ScatteringGroup::Helix,
    ];

    /// Byte label in dominant-label maps (0 is no-data).
    pub fn label(self) -> u8 {
        match self {
            ScatteringGroup::Odd => 1,
            ScatteringGroup::Rand => 2,
            ScatteringGroup::Even => 3,
            ScatteringGroup::Helix => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ScatteringGroup::Odd => "odd",
            ScatteringGroup::Rand => "rand",
            ScatteringGroup::Even => "even",
            ScatteringGroup::Helix => "hlx",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Orientation {
    pub theta_ms_deg: f64,
    pub k_ms: KennaughMatrix,
    pub best_target: ElementaryTarget,
    pub distance: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaRatio {
    pub gamma: f64,
    /// Set when the raw ratio fell outside [`GAMMA_RANGE`] or was undefined.
    pub clamped: bool,
}

/// `γ = C₁₁ / C₃₃ = ⟨|S_HH|²⟩ / ⟨|S_VV|²⟩`, clamped to [`GAMMA_RANGE`].
pub fn gamma_ratio(c: &CovarianceMatrix) -> Result<GammaRatio> {
    let (hh, vv) = (c.get(0, 0).re, c.get(2, 2).re);
    if !(hh.is_finite() && vv.is_finite()) || hh < 0.0 || vv < 0.0 {
        return Err(Error::InvalidPixel(format!(
            "co-pol powers must be non-negative, got {hh} and {vv}"
        )));
    }
    let (lo, hi) = GAMMA_RANGE;
    if vv <= GAMMA_DENOMINATOR_FLOOR {
        return Ok(GammaRatio {
            gamma: hi,
            clamped: true,
        });
    }
    let raw = hh / vv;
    let gamma = raw.clamp(lo, hi);
    Ok(GammaRatio {
        gamma,
        clamped: gamma != raw,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvexSplit {
    pub weights: Vec<f64>,
    pub residue: f64,
}

/// Splits unity along an ordered list of values in `[0, 1]`:
/// `wᵢ = xᵢ · Π_{j<i}(1 − xⱼ)` and `residue = Π_j (1 − xⱼ)`.
pub fn convex_split(x: &[f64]) -> Result<ConvexSplit> {
    let mut weights = Vec::with_capacity(x.len());
    let mut remaining = 1.0;
    for &v in x {
        if !(0.0..=1.0).contains(&v) {
            return Err(Error::domain(format!("split value {v} outside [0, 1]")));
        }
        weights.push(v * remaining);
        remaining *= 1.0 - v;
    }
    Ok(ConvexSplit {
        weights,
        residue: remaining,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComponentPower {
    pub component: Component,
    pub similarity: f64,
    pub weight: f64,
    pub power: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PowerDecomposition {
    pub span: f64,
    /// One entry per configured target, then the volume model if enabled.
    pub components: Vec<ComponentPower>,
    pub residue: f64,
    /// Components from most to least dominant.
    pub dominance: Vec<Component>,
    pub theta_ms_deg: f64,
    pub best_target: ElementaryTarget,
    pub branch: Branch,
    pub alpha_gd: f64,
    pub gamma: f64,
    pub gamma_clamped: bool,
}

impl PowerDecomposition {
    /// Power of a component, 0 if it is not part of the configuration.
    pub fn power(&self, component: Component) -> f64 {
        self.components
            .iter()
            .find(|c| c.component == component)
            .map_or(0.0, |c| c.power)
    }

    pub fn target_power(&self, target: ElementaryTarget) -> f64 {
        self.power(Component::Target(target))
    }

    /// Sum of all component powers plus the residue.
    pub fn total(&self) -> f64 {
        self.components.iter().map(|c| c.power).sum::<f64>() + self.residue
    }

    pub fn group_power(&self, group: ScatteringGroup) -> f64 {
        let mut p: f64 = self
            .components
            .iter()
            .filter(|c| c.component.group() == Some(group))
            .map(|c| c.power)
            .sum();
        if group == ScatteringGroup::Rand {
            p += self.residue;
        }
        p
    }
}

/// Pseudocolor grouping of a decomposition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RgbComposite {
    /// `P_nd + P_d`
    pub r: f64,
    /// `P_rv + P_res`
    pub g: f64,
    /// `P_t + P_c`
    pub b: f64,
    /// `P_lh + P_rh`, reported but not rendered.
    pub hlx: f64,
    /// Targets outside the four groups (dipole, quarter-wave devices).
    pub other: f64,
}

pub fn rgb_composite(d: &PowerDecomposition) -> RgbComposite {
    let other = d
        .components
        .iter()
        .filter(|c| c.component.group().is_none())
        .map(|c| c.power)
        .sum();
    RgbComposite {
        r: d.group_power(ScatteringGroup::Even),
        g: d.group_power(ScatteringGroup::Rand),
        b: d.group_power(ScatteringGroup::Odd),
        hlx: d.group_power(ScatteringGroup::Helix),
        other,
    }
}

/// Largest of the four group powers; ties resolve to the earlier group in
/// display order. `None` when every group power is zero.
pub fn dominant_label(d: &PowerDecomposition) -> Option<ScatteringGroup> {
    let mut best: Option<(ScatteringGroup, f64)> = None;
    for g in ScatteringGroup::ALL {
        let p = d.group_power(g);
        if p > 0.0 && best.is_none_or(|(_, b)| p > b) {
            best = Some((g, p));
        }
    }
    best.map(|(g, _)| g)
}

/// Factorization engine with the orientation grid and the rotated target
/// matrices precomputed for one configuration.
#[derive(Debug, Clone)]
pub struct SpffEngine {
    cfg: SpffConfig,
    /// Grid indices in search order: 0, −1, 1, −2, 2, ...
    grid: Vec<i32>,
    /// Normalized `R(θ)ᵀ K_i R(θ)` for each grid index (outer) and target (inner).
    rotated_targets: Vec<[f64; 16]>,
    targets: Vec<KennaughMatrix>,
}

fn normalized(k: &KennaughMatrix) -> [f64; 16] {
    let n = k.frobenius_norm();
    let mut c = k.components();
    c.iter_mut().for_each(|v| *v /= n);
    c
}

impl SpffEngine {
    pub fn new(cfg: SpffConfig) -> Result<Self> {
        cfg.validate()?;
        let half = (THETA_HALF_RANGE_DEG / cfg.theta_step_deg + 1e-9).floor() as i32;
        let mut grid = vec![0];
        for i in 1..=half {
            grid.push(-i);
            grid.push(i);
        }
        let targets: Vec<_> = cfg.target_set.iter().map(|t| t.kennaugh()).collect();
        let mut rotated_targets = Vec::with_capacity(grid.len() * targets.len());
        for &i in &grid {
            let theta = (f64::from(i) * cfg.theta_step_deg).to_radians();
            for t in &targets {
                // ⟨R K Rᵀ, T⟩ = ⟨K, Rᵀ T R⟩ and Rᵀ(θ) = R(−θ).
                rotated_targets.push(normalized(&rotate_kennaugh(t, -theta)));
            }
        }
        Ok(Self {
            cfg,
            grid,
            rotated_targets,
            targets,
        })
    }

    pub fn config(&self) -> &SpffConfig {
        &self.cfg
    }

    /// Exhaustive grid search for the line-of-sight rotation bringing `k`
    /// closest to any configured target. Ties (within `1e-12` in the
    /// normalized inner product) keep the smallest `|θ|`, then the smallest
    /// `θ`, then the earliest target.
    pub fn optimize_orientation(&self, k: &KennaughMatrix) -> Result<Orientation> {
        let norm = k.frobenius_norm();
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(Error::domain("orientation search needs a non-zero matrix"));
        }
        let u = normalized(k);
        let n_targets = self.targets.len();
        let mut best = (f64::NEG_INFINITY, 0usize, 0usize);
        for (gi, chunk) in self.rotated_targets.chunks_exact(n_targets).enumerate() {
            for (ti, v) in chunk.iter().enumerate() {
                let dot: f64 = u.iter().zip(v).map(|(a, b)| a * b).sum();
                if dot > best.0 + ORIENTATION_TIE_EPS {
                    best = (dot, gi, ti);
                }
            }
        }
        let (_, gi, ti) = best;
        let theta_ms_deg = f64::from(self.grid[gi]) * self.cfg.theta_step_deg;
        let k_ms = rotate_kennaugh(k, theta_ms_deg.to_radians());
        let distance = gd_kennaugh(&k_ms, &self.targets[ti])?.value();
        Ok(Orientation {
            theta_ms_deg,
            k_ms,
            best_target: self.cfg.target_set[ti],
            distance,
        })
    }

    /// Factorizes a pixel given both second-order representations, which
    /// must describe the same data (checked to `1e-6` of the trace).
    pub fn factorize_pixel(
        &self,
        t: &CoherencyMatrix,
        c: &CovarianceMatrix,
    ) -> Result<PowerDecomposition> {
        let from_c = coherency_from_covariance(c);
        let scale = t.trace().abs().max(f64::MIN_POSITIVE);
        let mismatch = (0..3)
            .flat_map(|i| (0..3).map(move |j| (i, j)))
            .map(|(i, j)| (from_c.get(i, j) - t.get(i, j)).norm())
            .fold(0.0, f64::max);
        if !(mismatch <= 1e-6 * scale) {
            return Err(Error::InvalidPixel(format!(
                "coherency and covariance disagree by {mismatch:.3e}"
            )));
        }
        self.factorize(t, c)
    }

    /// Factorizes a pixel from its coherency matrix alone.
    pub fn factorize_coherency(&self, t: &CoherencyMatrix) -> Result<PowerDecomposition> {
        self.factorize(t, &covariance_from_coherency(t))
    }

    fn factorize(&self, t: &CoherencyMatrix, c: &CovarianceMatrix) -> Result<PowerDecomposition> {
        let k = kennaugh_from_coherency(t);
        let span = k.span();
        if !(span > 0.0 && span.is_finite()) {
            return Err(Error::InvalidPixel(format!(
                "total power {span} is not positive"
            )));
        }
        let gamma = gamma_ratio(c)?;
        let orientation = self.optimize_orientation(&k)?;
        let alpha = alpha_gd(&k)?;
        let (lo, hi) = self.cfg.alpha_volume_range;
        let distributed = lo <= alpha && alpha < hi;
        let branch = match (distributed, self.cfg.branch_map) {
            (true, BranchMap::Normal) | (false, BranchMap::Swapped) => Branch::A,
            _ => Branch::B,
        };

        let mut sims: Vec<(Component, f64)> = Vec::with_capacity(self.targets.len() + 1);
        for (id, target) in self.cfg.target_set.iter().zip(&self.targets) {
            let s = 1.0 - gd_kennaugh(&orientation.k_ms, target)?.value();
            sims.push((Component::Target(*id), s));
        }
        let volume = if self.cfg.include_volume {
            let rv = grvm_kennaugh(gamma.gamma)?;
            Some((
                Component::Volume,
                1.0 - gd_kennaugh(&orientation.k_ms, &rv)?.value(),
            ))
        } else {
            None
        };

        let mut order = sims.clone();
        if branch == Branch::A {
            order.extend(volume);
        }
        // Stable: equal similarities keep configuration order.
        order.sort_by(|a, b| b.1.total_cmp(&a.1));
        if branch == Branch::B {
            order.extend(volume);
        }

        let ranked: Vec<f64> = order.iter().map(|(_, s)| *s).collect();
        let split = convex_split(&ranked)?;

        let mut components: Vec<ComponentPower> = sims
            .iter()
            .chain(volume.iter())
            .map(|&(component, similarity)| ComponentPower {
                component,
                similarity,
                weight: 0.0,
                power: 0.0,
            })
            .collect();
        for ((component, _), w) in order.iter().zip(&split.weights) {
            let slot = components
                .iter_mut()
                .find(|c| c.component == *component)
                .expect("every ranked component has a slot");
            slot.weight = *w;
            slot.power = span * w;
        }

        Ok(PowerDecomposition {
            span,
            components,
            residue: span * split.residue,
            dominance: order.into_iter().map(|(c, _)| c).collect(),
            theta_ms_deg: orientation.theta_ms_deg,
            best_target: orientation.best_target,
            branch,
            alpha_gd: alpha,
            gamma: gamma.gamma,
            gamma_clamped: gamma.clamped,
        })
    }
}

/// One-shot orientation search; builds an engine per call, so prefer
/// [`SpffEngine::optimize_orientation`] in loops.
pub fn optimize_orientation(k: &KennaughMatrix, cfg: &SpffConfig) -> Result<Orientation> {
    SpffEngine::new(cfg.clone())?.optimize_orientation(k)
}

/// One-shot factorization; see [`SpffEngine::factorize_pixel`].
pub fn factorize_pixel(
    t: &CoherencyMatrix,
    c: &CovarianceMatrix,
    cfg: &SpffConfig,
) -> Result<PowerDecomposition> {
    SpffEngine::new(cfg.clone())?.factorize_pixel(t, c)
}
