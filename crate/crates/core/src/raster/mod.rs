//! Rasters of per-pixel polarimetric data and the machinery around them:
//! PolSARpro-style file I/O, synthetic scenes, PNG rendering and the tiled
//! execution engine.

mod io;
mod pipeline;
pub(crate) mod render;
mod synth;

pub use io::{
    read_bands, read_c3, read_polsar_dir, read_t3, write_bands, write_c3, write_class_map,
    write_legend, write_t3, C3_BANDS, T3_BANDS,
};
pub use pipeline::{run_pipeline, ExecOptions, Job, PipelineOutput};
pub use render::{stretch_channel, write_png, write_rgb_png, PngScaling};
pub use synth::{synth_scene, Generator, MixtureComponent, Region, SceneSpec};

use num_complex::Complex64;

use crate::algebra::{coherency_from_covariance, CoherencyMatrix, CovarianceMatrix, Mat3};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub enum BandData {
    /// Stored as `f64` in memory, `f32` on disk. NaN marks no-data.
    Float(Vec<f64>),
    /// 8-bit labels; 0 marks no-data.
    Label(Vec<u8>),
}

/// Bitwise equality, so identical no-data planes compare equal.
impl PartialEq for BandData {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (BandData::Float(a), BandData::Float(b)) => {
                a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.to_bits() == y.to_bits())
            }
            (BandData::Label(a), BandData::Label(b)) => a == b,
            _ => false,
        }
    }
}

impl BandData {
    pub fn len(&self) -> usize {
        match self {
            BandData::Float(v) => v.len(),
            BandData::Label(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Band {
    pub name: String,
    pub data: BandData,
}

/// `width × height` grid of named planes sharing one no-data mask.
#[derive(Debug, Clone, PartialEq)]
pub struct RasterStack {
    width: usize,
    height: usize,
    bands: Vec<Band>,
    nodata: Vec<bool>,
}

/// Which second-order matrix a stack carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixKind {
    T3,
    C3,
}

impl MatrixKind {
    pub fn band_names(self) -> &'static [&'static str; 9] {
        match self {
            MatrixKind::T3 => &T3_BANDS,
            MatrixKind::C3 => &C3_BANDS,
        }
    }
}

impl RasterStack {
    pub fn new(width: usize, height: usize) -> Self {
        Self {
            width,
            height,
            bands: Vec::new(),
            nodata: vec![false; width * height],
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn len(&self) -> usize {
        self.width * self.height
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn bands(&self) -> &[Band] {
        &self.bands
    }

    pub fn band(&self, name: &str) -> Option<&Band> {
        self.bands.iter().find(|b| b.name == name)
    }

    pub fn float_band(&self, name: &str) -> Option<&[f64]> {
        match self.band(name).map(|b| &b.data) {
            Some(BandData::Float(v)) => Some(v),
            _ => None,
        }
    }

    pub fn label_band(&self, name: &str) -> Option<&[u8]> {
        match self.band(name).map(|b| &b.data) {
            Some(BandData::Label(v)) => Some(v),
            _ => None,
        }
    }

    /// Adds or replaces a band; its length must match the grid.
    pub fn push_band(&mut self, name: impl Into<String>, data: BandData) -> Result<()> {
        let name = name.into();
        if data.len() != self.len() {
            return Err(Error::domain(format!(
                "band {name} has {} pixels, stack has {}",
                data.len(),
                self.len()
            )));
        }
        if let Some(b) = self.bands.iter_mut().find(|b| b.name == name) {
            b.data = data;
        } else {
            self.bands.push(Band { name, data });
        }
        Ok(())
    }

    pub fn nodata(&self) -> &[bool] {
        &self.nodata
    }

    pub fn set_nodata(&mut self, mask: Vec<bool>) -> Result<()> {
        if mask.len() != self.len() {
            return Err(Error::domain("nodata mask size does not match the stack"));
        }
        self.nodata = mask;
        Ok(())
    }

    pub fn nodata_count(&self) -> usize {
        self.nodata.iter().filter(|&&m| m).count()
    }

    pub fn matrix_kind(&self) -> Option<MatrixKind> {
        [MatrixKind::T3, MatrixKind::C3].into_iter().find(|kind| {
            kind.band_names()
                .iter()
                .all(|n| self.float_band(n).is_some())
        })
    }

    fn raw_matrix(&self, kind: MatrixKind, idx: usize) -> Mat3 {
        let v = |n: usize| self.float_band(kind.band_names()[n]).expect("band present")[idx];
        let d = |n: usize| Complex64::new(v(n), 0.0);
        let z = |re: usize, im: usize| Complex64::new(v(re), v(im));
        let (m12, m13, m23) = (z(1, 2), z(3, 4), z(6, 7));
        [
            [d(0), m12, m13],
            [m12.conj(), d(5), m23],
            [m13.conj(), m23.conj(), d(8)],
        ]
    }

    /// Coherency matrix of a pixel, converting from covariance if needed.
    /// `None` for no-data pixels or stacks without matrix bands.
    pub fn coherency_at(&self, idx: usize) -> Option<Result<CoherencyMatrix>> {
        if self.nodata[idx] {
            return None;
        }
        let kind = self.matrix_kind()?;
        Some(self.coherency_with_kind(kind, idx))
    }

    pub(crate) fn coherency_with_kind(
        &self,
        kind: MatrixKind,
        idx: usize,
    ) -> Result<CoherencyMatrix> {
        let m = self.raw_matrix(kind, idx);
        match kind {
            MatrixKind::T3 => CoherencyMatrix::new(m),
            MatrixKind::C3 => CovarianceMatrix::new(m).map(|c| coherency_from_covariance(&c)),
        }
    }

    /// Builds a T3 stack from per-pixel coherency matrices (`None` = no-data).
    pub fn from_coherency(
        width: usize,
        height: usize,
        pixels: &[Option<CoherencyMatrix>],
    ) -> Result<Self> {
        Self::from_matrices(
            width,
            height,
            MatrixKind::T3,
            pixels.iter().map(|p| p.map(|t| *t.matrix())),
        )
    }

    pub fn from_covariance(
        width: usize,
        height: usize,
        pixels: &[Option<CovarianceMatrix>],
    ) -> Result<Self> {
        Self::from_matrices(
            width,
            height,
            MatrixKind::C3,
            pixels.iter().map(|p| p.map(|c| *c.matrix())),
        )
    }

    fn from_matrices(
        width: usize,
        height: usize,
        kind: MatrixKind,
        pixels: impl ExactSizeIterator<Item = Option<Mat3>>,
    ) -> Result<Self> {
        if pixels.len() != width * height {
            return Err(Error::domain("pixel count does not match raster size"));
        }
        let mut stack = Self::new(width, height);
        let mut planes: Vec<Vec<f64>> =
            (0..9).map(|_| Vec::with_capacity(width * height)).collect();
        let mut mask = Vec::with_capacity(width * height);
        for p in pixels {
            let m = p.unwrap_or([[Complex64::new(f64::NAN, f64::NAN); 3]; 3]);
            let values = [
                m[0][0].re, m[0][1].re, m[0][1].im, m[0][2].re, m[0][2].im, m[1][1].re, m[1][2].re,
                m[1][2].im, m[2][2].re,
            ];
            for (plane, v) in planes.iter_mut().zip(values) {
                plane.push(v);
            }
            mask.push(p.is_none());
        }
        for (name, plane) in kind.band_names().iter().zip(planes) {
            stack.push_band(*name, BandData::Float(plane))?;
        }
        stack.nodata = mask;
        Ok(stack)
    }
}
