//! Synthetic T3 scenes built from rectangular regions of known scatterers.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use super::RasterStack;
use crate::algebra::{
    coherency_from_kennaugh, grvm_kennaugh, CoherencyMatrix, ElementaryTarget, Mat3,
};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum Generator {
    Target(ElementaryTarget),
    Volume {
        gamma: f64,
    },
    /// Convex combination of trace-normalized generators.
    Mixture(Vec<MixtureComponent>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MixtureComponent {
    pub weight: f64,
    pub generator: Generator,
}

impl Generator {
    /// Model coherency matrix with unit trace.
    pub fn coherency(&self) -> Result<CoherencyMatrix> {
        let t = match self {
            Generator::Target(id) => coherency_from_kennaugh(&id.kennaugh())?,
            Generator::Volume { gamma } => coherency_from_kennaugh(&grvm_kennaugh(*gamma)?)?,
            Generator::Mixture(parts) => {
                if parts.is_empty() {
                    return Err(Error::Config("mixture needs at least one component".into()));
                }
                let total: f64 = parts.iter().map(|p| p.weight).sum();
                if parts.iter().any(|p| !(p.weight >= 0.0)) || (total - 1.0).abs() > 1e-9 {
                    return Err(Error::Config(format!(
                        "mixture weights must be non-negative and sum to 1, got {total}"
                    )));
                }
                let mut m = [[Complex64::new(0.0, 0.0); 3]; 3];
                for part in parts {
                    let t = part.generator.coherency()?;
                    for (i, row) in m.iter_mut().enumerate() {
                        for (j, v) in row.iter_mut().enumerate() {
                            *v += t.get(i, j) * part.weight;
                        }
                    }
                }
                CoherencyMatrix::new(m)?
            }
        };
        let trace = t.trace();
        if !(trace > 0.0) {
            return Err(Error::Config("generator has no power".into()));
        }
        Ok(t.scaled(1.0 / trace))
    }
}

fn default_span() -> f64 {
    1.0
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Region {
    pub x: usize,
    pub y: usize,
    pub width: usize,
    pub height: usize,
    pub generator: Generator,
    /// Number of looks averaged per pixel; absent for the noise-free model.
    #[serde(default)]
    pub looks: Option<u32>,
    #[serde(default = "default_span")]
    pub span: f64,
}

/// Scene layout. Later regions paint over earlier ones; uncovered pixels
/// are no-data.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneSpec {
    pub width: usize,
    pub height: usize,
    #[serde(default)]
    pub seed: u64,
    pub regions: Vec<Region>,
}

impl SceneSpec {
    pub fn validate(&self) -> Result<()> {
        if self.width == 0 || self.height == 0 {
            return Err(Error::Config(
                "scene must have positive width and height".into(),
            ));
        }
        for (i, r) in self.regions.iter().enumerate() {
            if r.width == 0
                || r.height == 0
                || r.x + r.width > self.width
                || r.y + r.height > self.height
            {
                return Err(Error::Config(format!("region {i} lies outside the scene")));
            }
            if r.looks == Some(0) {
                return Err(Error::Config(format!("region {i} needs looks >= 1")));
            }
            if !(r.span > 0.0 && r.span.is_finite()) {
                return Err(Error::Config(format!("region {i} needs a positive span")));
            }
            r.generator.coherency()?;
        }
        Ok(())
    }
}

/// Lower-triangular `L` with `L Lᴴ = T` for positive semi-definite `T`;
/// columns with a vanishing pivot are zeroed.
fn psd_cholesky(t: &Mat3) -> Mat3 {
    let zero = Complex64::new(0.0, 0.0);
    let mut l = [[zero; 3]; 3];
    let eps = 1e-14 * (t[0][0].re + t[1][1].re + t[2][2].re).abs();
    for j in 0..3 {
        let d = t[j][j].re - (0..j).map(|k| l[j][k].norm_sqr()).sum::<f64>();
        if d <= eps {
            continue;
        }
        let pivot = d.sqrt();
        l[j][j] = Complex64::new(pivot, 0.0);
        for i in j + 1..3 {
            let s: Complex64 = (0..j).map(|k| l[i][k] * l[j][k].conj()).sum();
            l[i][j] = (t[i][j] - s) / pivot;
        }
    }
    l
}

fn speckled(l: &Mat3, looks: u32, rng: &mut ChaCha8Rng) -> Result<CoherencyMatrix> {
    let zero = Complex64::new(0.0, 0.0);
    let mut acc = [[zero; 3]; 3];
    for _ in 0..looks {
        let mut z = [zero; 3];
        for v in &mut z {
            let re: f64 = StandardNormal.sample(rng);
            let im: f64 = StandardNormal.sample(rng);
            *v = Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2;
        }
        let k: [Complex64; 3] = std::array::from_fn(|i| (0..=i).map(|j| l[i][j] * z[j]).sum());
        for i in 0..3 {
            for j in 0..3 {
                acc[i][j] += k[i] * k[j].conj();
            }
        }
    }
    let n = f64::from(looks);
    CoherencyMatrix::new(acc.map(|row| row.map(|v| v / n)))
}

/// Renders a scene to a T3 stack. Pixel `i` draws from ChaCha8 stream `i`
/// of the scene seed, so the output does not depend on evaluation order.
pub fn synth_scene(spec: &SceneSpec) -> Result<RasterStack> {
    spec.validate()?;
    let mut pixels: Vec<Option<CoherencyMatrix>> = vec![None; spec.width * spec.height];
    for region in &spec.regions {
        let model = region.generator.coherency()?.scaled(region.span);
        let chol = psd_cholesky(model.matrix());
        for y in region.y..region.y + region.height {
            for x in region.x..region.x + region.width {
                let idx = y * spec.width + x;
                pixels[idx] = Some(match region.looks {
                    None => model,
                    Some(looks) => {
                        let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
                        rng.set_stream(idx as u64);
                        speckled(&chol, looks, &mut rng)?
                    }
                });
            }
        }
    }
    RasterStack::from_coherency(spec.width, spec.height, &pixels)
}
