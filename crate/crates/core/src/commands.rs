//! File-to-file operations behind the command-line front end.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::algebra::ElementaryTarget;
use crate::classify::{sample_boundary, Scheme, NODATA_LABEL};
use crate::error::{Error, Result};
use crate::params::params_for_kennaugh;
use crate::raster::{
    read_polsar_dir, render, run_pipeline, synth_scene, write_bands, write_legend, write_png,
    write_rgb_png, write_t3, ExecOptions, Job, PngScaling, RasterStack, SceneSpec,
};
use crate::spff::{BranchMap, ScatteringGroup, SpffConfig};

/// Optional JSON configuration; every field mirrors a command-line flag.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub workers: Option<usize>,
    pub tile_rows: Option<usize>,
    pub png_sigma: Option<f64>,
    pub scheme: Option<Scheme>,
    pub theta_step: Option<f64>,
    pub branch_map: Option<BranchMap>,
    pub seed: Option<u64>,
    pub dm: Option<f64>,
    /// Full factorization settings; `theta_step` and `branch_map` override it.
    pub spff: Option<SpffConfig>,
}

impl RunConfig {
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        serde_json::from_str(&text).map_err(|e| Error::Config(format!("{}: {e}", path.display())))
    }

    pub fn exec_options(&self) -> ExecOptions {
        let d = ExecOptions::default();
        ExecOptions {
            workers: self.workers.unwrap_or(d.workers),
            tile_rows: self.tile_rows.unwrap_or(d.tile_rows),
        }
    }

    pub fn png_scaling(&self) -> PngScaling {
        self.png_sigma
            .map_or_else(PngScaling::default, PngScaling::ClipSigma)
    }

    pub fn spff_config(&self) -> SpffConfig {
        let mut cfg = self.spff.clone().unwrap_or_default();
        if let Some(step) = self.theta_step {
            cfg.theta_step_deg = step;
        }
        if let Some(map) = self.branch_map {
            cfg.branch_map = map;
        }
        cfg
    }
}

/// What a raster command did.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub width: usize,
    pub height: usize,
    pub nodata: usize,
    /// Pixels that were valid on input but failed to process.
    pub invalid: usize,
    pub files: Vec<PathBuf>,
}

impl Summary {
    fn new(stack: &RasterStack, invalid: usize, files: Vec<PathBuf>) -> Self {
        Self {
            width: stack.width(),
            height: stack.height(),
            nodata: stack.nodata_count(),
            invalid,
            files,
        }
    }
}

/// Legend of the dominant-group band.
pub fn dominant_legend() -> Vec<(u8, &'static str, [u8; 3])> {
    let color = |g| match g {
        ScatteringGroup::Odd => [0, 0, 255],
        ScatteringGroup::Rand => [0, 255, 0],
        ScatteringGroup::Even => [255, 0, 0],
        ScatteringGroup::Helix => [255, 255, 0],
    };
    std::iter::once((NODATA_LABEL, "nodata", [0, 0, 0]))
        .chain(
            ScatteringGroup::ALL
                .iter()
                .map(|&g| (g.label(), g.name(), color(g))),
        )
        .collect()
}

fn write_label_png(
    dir: &Path,
    stack: &RasterStack,
    band: &str,
    legend: &[(u8, &str, [u8; 3])],
) -> Result<PathBuf> {
    let labels = stack
        .label_band(band)
        .ok_or_else(|| Error::domain(format!("no label band {band}")))?;
    let path = dir.join(format!("{band}.png"));
    write_png(
        &path,
        stack.width(),
        stack.height(),
        &render::colorize(labels, legend),
    )?;
    Ok(path)
}

pub fn run_params(input: &Path, out: &Path, opts: &ExecOptions) -> Result<Summary> {
    let stack = read_polsar_dir(input)?;
    let result = run_pipeline(&stack, &Job::Params, opts)?;
    let files = write_bands(&result.stack, out)?;
    Ok(Summary::new(&result.stack, result.invalid_count, files))
}

pub fn run_classify(
    input: &Path,
    out: &Path,
    scheme: Scheme,
    opts: &ExecOptions,
) -> Result<Summary> {
    let stack = read_polsar_dir(input)?;
    let result = run_pipeline(&stack, &Job::Classify(scheme), opts)?;
    let mut files = write_bands(&result.stack, out)?;
    let legend = scheme.legend();
    let legend_path = out.join("class_legend.txt");
    write_legend(&legend_path, &legend)?;
    files.push(legend_path);
    files.push(write_label_png(out, &result.stack, "class", &legend)?);
    Ok(Summary::new(&result.stack, result.invalid_count, files))
}

pub fn run_spff(
    input: &Path,
    out: &Path,
    cfg: &SpffConfig,
    opts: &ExecOptions,
    scaling: PngScaling,
) -> Result<Summary> {
    let stack = read_polsar_dir(input)?;
    let result = run_pipeline(&stack, &Job::Spff(cfg.clone()), opts)?;
    let s = &result.stack;
    let mut files = write_bands(s, out)?;
    let legend = dominant_legend();
    let legend_path = out.join("dominant_legend.txt");
    write_legend(&legend_path, &legend)?;
    files.push(legend_path);
    files.push(write_label_png(out, s, "dominant", &legend)?);
    let band = |n: &str| {
        s.float_band(n)
            .ok_or_else(|| Error::domain(format!("no band {n}")))
    };
    let rgb_path = out.join("rgb.png");
    write_rgb_png(
        &rgb_path,
        s.width(),
        s.height(),
        [band("red")?, band("green")?, band("blue")?],
        scaling,
    )?;
    files.push(rgb_path);
    Ok(Summary::new(s, result.invalid_count, files))
}

pub fn run_synth(spec_path: &Path, out: &Path, seed: Option<u64>) -> Result<Summary> {
    let text = fs::read_to_string(spec_path).map_err(|e| Error::io(spec_path, e))?;
    let mut spec: SceneSpec = serde_json::from_str(&text)
        .map_err(|e| Error::Config(format!("{}: {e}", spec_path.display())))?;
    if let Some(seed) = seed {
        spec.seed = seed;
    }
    let stack = synth_scene(&spec)?;
    write_t3(&stack, out)?;
    let files = crate::raster::T3_BANDS
        .iter()
        .map(|b| out.join(format!("{b}.bin")))
        .chain(std::iter::once(out.join("config.txt")))
        .collect();
    Ok(Summary::new(&stack, 0, files))
}

pub fn boundary_csv(dm: f64) -> Result<String> {
    let mut csv = String::from("curve,m,p_gd,alpha_gd\n");
    for p in sample_boundary(dm)? {
        writeln!(csv, "{},{},{:.9},{:.9}", p.curve, p.m, p.p_gd, p.alpha_gd).expect("string write");
    }
    Ok(csv)
}

pub fn run_boundary(out: &Path, dm: f64) -> Result<()> {
    let csv = boundary_csv(dm)?;
    fs::write(out, csv).map_err(|e| Error::io(out, e))
}

/// Row order of the elementary-target table.
pub const TARGET_ANGLE_ORDER: [ElementaryTarget; 9] = [
    ElementaryTarget::RightHelix,
    ElementaryTarget::LeftHelix,
    ElementaryTarget::Dihedral,
    ElementaryTarget::NarrowDihedral,
    ElementaryTarget::QuarterWavePlus,
    ElementaryTarget::QuarterWaveMinus,
    ElementaryTarget::Dipole,
    ElementaryTarget::Cylinder,
    ElementaryTarget::Trihedral,
];

/// `(target, α_GD, τ_GD)` for each coherent elementary target.
pub fn target_angles() -> Result<Vec<(ElementaryTarget, f64, f64)>> {
    TARGET_ANGLE_ORDER
        .iter()
        .map(|&t| {
            let p = params_for_kennaugh(&t.kennaugh())?;
            Ok((t, p.alpha_gd, p.tau_gd))
        })
        .collect()
}

pub fn target_angles_csv() -> Result<String> {
    let mut csv = String::from("target,alpha_gd,tau_gd\n");
    for (t, a, tau) in target_angles()? {
        writeln!(csv, "{},{a:.4},{tau:.4}", t.name()).expect("string write");
    }
    Ok(csv)
}

pub fn run_target_angles(out: &Path) -> Result<()> {
    let csv = target_angles_csv()?;
    fs::write(out, csv).map_err(|e| Error::io(out, e))
}
