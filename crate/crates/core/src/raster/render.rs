//! 8-bit PNG output.

use std::path::Path;

use image::{ImageFormat, RgbImage};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// How a float channel is mapped to 0..=255.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PngScaling {
    /// Clip at `mean + k·σ` of the finite values, then stretch linearly from 0.
    ClipSigma(f64),
    /// Stretch linearly from 0 to the channel maximum.
    MaxValue,
}

impl Default for PngScaling {
    fn default() -> Self {
        PngScaling::ClipSigma(2.0)
    }
}

/// Maps a channel to bytes. Non-finite and non-positive values become 0; a
/// channel without positive values renders black.
pub fn stretch_channel(values: &[f64], scaling: PngScaling) -> Vec<u8> {
    let finite: Vec<f64> = values.iter().copied().filter(|v| v.is_finite()).collect();
    let top = if finite.is_empty() {
        0.0
    } else {
        match scaling {
            PngScaling::ClipSigma(k) => {
                let n = finite.len() as f64;
                let mean = finite.iter().sum::<f64>() / n;
                let var = finite.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n;
                let clip = mean + k * var.sqrt();
                let max = finite.iter().copied().fold(f64::MIN, f64::max);
                clip.min(max)
            }
            PngScaling::MaxValue => finite.iter().copied().fold(f64::MIN, f64::max),
        }
    };
    values
        .iter()
        .map(|&v| {
            if !(top > 0.0) || !v.is_finite() || v <= 0.0 {
                0
            } else {
                (255.0 * (v / top).min(1.0)).round() as u8
            }
        })
        .collect()
}

/// Writes interleaved RGB bytes as a PNG.
pub fn write_png(path: impl AsRef<Path>, width: usize, height: usize, rgb: &[u8]) -> Result<()> {
    let path = path.as_ref();
    if rgb.len() != width * height * 3 {
        return Err(Error::domain(format!(
            "RGB buffer has {} bytes, expected {}",
            rgb.len(),
            width * height * 3
        )));
    }
    let img = RgbImage::from_raw(width as u32, height as u32, rgb.to_vec())
        .ok_or_else(|| Error::domain("image dimensions overflow"))?;
    img.save_with_format(path, ImageFormat::Png)
        .map_err(|e| match e {
            image::ImageError::IoError(io) => Error::io(path, io),
            other => Error::Format {
                path: path.to_path_buf(),
                message: other.to_string(),
            },
        })
}

/// Stretches three float channels independently and writes them as a PNG.
pub fn write_rgb_png(
    path: impl AsRef<Path>,
    width: usize,
    height: usize,
    channels: [&[f64]; 3],
    scaling: PngScaling,
) -> Result<()> {
    let [r, g, b] = channels.map(|c| stretch_channel(c, scaling));
    let rgb: Vec<u8> = (0..r.len()).flat_map(|i| [r[i], g[i], b[i]]).collect();
    write_png(path, width, height, &rgb)
}

/// Colours a label raster through a legend; unknown labels render black.
pub(crate) fn colorize(labels: &[u8], legend: &[(u8, &str, [u8; 3])]) -> Vec<u8> {
    let mut lut = [[0u8; 3]; 256];
    for (label, _, rgb) in legend {
        lut[*label as usize] = *rgb;
    }
    labels.iter().flat_map(|&l| lut[l as usize]).collect()
}
