//! Tiled, parallel per-pixel execution over a matrix stack.
//!
//! Every pixel is computed independently into a preallocated output plane;
//! tiles are disjoint row ranges, so results do not depend on tile size or
//! worker count.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{BandData, MatrixKind, RasterStack};
use crate::algebra::{coherency_from_covariance, CovarianceMatrix};
use crate::classify::{Scheme, NODATA_LABEL};
use crate::error::{Error, Result};
use crate::params::params_for_pixel;
use crate::spff::{dominant_label, rgb_composite, Component, SpffConfig, SpffEngine};

#[derive(Debug, Clone, PartialEq)]
pub enum Job {
    /// `alpha_gd`, `tau_gd`, `p_gd`, `p_d`, `span`
    Params,
    /// One label band named `class`.
    Classify(Scheme),
    /// Component powers, residue, orientation, branch and dominant group.
    Spff(SpffConfig),
    /// Grouped powers only: `red`, `green`, `blue`, `hlx`.
    Rgb(SpffConfig),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExecOptions {
    /// Worker threads; 0 uses all cores.
    pub workers: usize,
    pub tile_rows: usize,
}

impl Default for ExecOptions {
    fn default() -> Self {
        Self {
            workers: 0,
            tile_rows: 256,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PipelineOutput {
    pub stack: RasterStack,
    /// Valid input pixels that failed to process and were turned into no-data.
    pub invalid_count: usize,
}

struct Layout {
    floats: Vec<String>,
    labels: Vec<String>,
}

enum Kernel {
    Params,
    Classify(Scheme),
    Spff(SpffEngine),
    Rgb(SpffEngine),
}

impl Kernel {
    fn new(job: &Job) -> Result<(Self, Layout)> {
        let names = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        Ok(match job {
            Job::Params => (
                Kernel::Params,
                Layout {
                    floats: names(&["alpha_gd", "tau_gd", "p_gd", "p_d", "span"]),
                    labels: vec![],
                },
            ),
            Job::Classify(scheme) => (
                Kernel::Classify(*scheme),
                Layout {
                    floats: vec![],
                    labels: names(&["class"]),
                },
            ),
            Job::Spff(cfg) => {
                let mut floats: Vec<String> = cfg
                    .target_set
                    .iter()
                    .map(|t| Component::Target(*t).band_name())
                    .collect();
                if cfg.include_volume {
                    floats.push(Component::Volume.band_name());
                }
                floats.extend(names(&[
                    "P_res", "span", "theta_ms", "alpha_gd", "gamma", "red", "green", "blue", "hlx",
                ]));
                (
                    Kernel::Spff(SpffEngine::new(cfg.clone())?),
                    Layout {
                        floats,
                        labels: names(&["branch", "gamma_flag", "dominant"]),
                    },
                )
            }
            Job::Rgb(cfg) => (
                Kernel::Rgb(SpffEngine::new(cfg.clone())?),
                Layout {
                    floats: names(&["red", "green", "blue", "hlx"]),
                    labels: vec![],
                },
            ),
        })
    }

    fn run(
        &self,
        stack: &RasterStack,
        kind: MatrixKind,
        idx: usize,
        f: &mut [f64],
        l: &mut [u8],
    ) -> Result<()> {
        let t = stack.coherency_with_kind(kind, idx)?;
        match self {
            Kernel::Params => {
                let p = params_for_pixel(&t)?;
                f.copy_from_slice(&[p.alpha_gd, p.tau_gd, p.p_gd, p.p_d, p.span]);
            }
            Kernel::Classify(scheme) => {
                l[0] = scheme.label(&params_for_pixel(&t)?)?;
            }
            Kernel::Spff(engine) | Kernel::Rgb(engine) => {
                let d = match kind {
                    MatrixKind::T3 => engine.factorize_coherency(&t)?,
                    MatrixKind::C3 => {
                        let c = CovarianceMatrix::new(stack.raw_matrix(kind, idx))?;
                        engine.factorize_pixel(&coherency_from_covariance(&c), &c)?
                    }
                };
                let rgb = rgb_composite(&d);
                if let Kernel::Rgb(_) = self {
                    f.copy_from_slice(&[rgb.r, rgb.g, rgb.b, rgb.hlx]);
                    return Ok(());
                }
                let n = d.components.len();
                for (slot, c) in f.iter_mut().zip(&d.components) {
                    *slot = c.power;
                }
                f[n..].copy_from_slice(&[
                    d.residue,
                    d.span,
                    d.theta_ms_deg,
                    d.alpha_gd,
                    d.gamma,
                    rgb.r,
                    rgb.g,
                    rgb.b,
                    rgb.hlx,
                ]);
                l.copy_from_slice(&[
                    d.branch.label(),
                    u8::from(d.gamma_clamped),
                    dominant_label(&d).map_or(NODATA_LABEL, |g| g.label()),
                ]);
            }
        }
        Ok(())
    }
}

/// Applies `job` to every pixel of a T3 or C3 stack.
pub fn run_pipeline(stack: &RasterStack, job: &Job, opts: &ExecOptions) -> Result<PipelineOutput> {
    let kind = stack
        .matrix_kind()
        .ok_or_else(|| Error::domain("stack carries neither T3 nor C3 bands"))?;
    if opts.tile_rows == 0 {
        return Err(Error::Config("tile rows must be positive".into()));
    }
    let (kernel, layout) = Kernel::new(job)?;
    let (nf, nl) = (layout.floats.len(), layout.labels.len());
    // Strides are at least 1 so every chunked plane yields one chunk per tile.
    let (sf, sl) = (nf.max(1), nl.max(1));
    let (width, n) = (stack.width(), stack.len());

    let mut floats = vec![f64::NAN; n * sf];
    let mut labels = vec![NODATA_LABEL; n * sl];
    let mut mask = stack.nodata().to_vec();
    let mut failed = vec![false; n];

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers)
        .build()
        .map_err(|e| Error::Config(format!("cannot start worker pool: {e}")))?;
    let tile = (opts.tile_rows * width).max(1);

    pool.install(|| {
        floats
            .par_chunks_mut(tile * sf)
            .zip(labels.par_chunks_mut(tile * sl))
            .zip(failed.par_chunks_mut(tile))
            .enumerate()
            .for_each(|(ti, ((fchunk, lchunk), fail))| {
                for (j, failed) in fail.iter_mut().enumerate() {
                    let idx = ti * tile + j;
                    if stack.nodata()[idx] {
                        continue;
                    }
                    let f = &mut fchunk[j * sf..j * sf + nf];
                    let l = &mut lchunk[j * sl..j * sl + nl];
                    if kernel.run(stack, kind, idx, f, l).is_err() {
                        f.fill(f64::NAN);
                        l.fill(NODATA_LABEL);
                        *failed = true;
                    }
                }
            });
    });

    let invalid_count = failed.iter().filter(|&&x| x).count();
    for (m, f) in mask.iter_mut().zip(&failed) {
        *m |= *f;
    }
    let mut out = RasterStack::new(stack.width(), stack.height());
    for (b, name) in layout.floats.iter().enumerate() {
        let plane = (0..n).map(|i| floats[i * sf + b]).collect();
        out.push_band(name.clone(), BandData::Float(plane))?;
    }
    for (b, name) in layout.labels.iter().enumerate() {
        let plane = (0..n).map(|i| labels[i * sl + b]).collect();
        out.push_band(name.clone(), BandData::Label(plane))?;
    }
    out.set_nodata(mask)?;
    Ok(PipelineOutput {
        stack: out,
        invalid_count,
    })
}
