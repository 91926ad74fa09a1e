//! PolSARpro flat-binary layout: a directory with `config.txt` (row and
//! column counts) and one little-endian `f32`, row-major file per band.
//! Off-diagonal matrix elements are split into `_real`/`_imag` files; the
//! lower triangle is implied by Hermitian symmetry. Label bands written by
//! this crate use one byte per pixel and a `.u8.bin` suffix.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use super::{BandData, MatrixKind, RasterStack};
use crate::error::{Error, Result};

pub const T3_BANDS: [&str; 9] = [
    "T11", "T12_real", "T12_imag", "T13_real", "T13_imag", "T22", "T23_real", "T23_imag", "T33",
];
pub const C3_BANDS: [&str; 9] = [
    "C11", "C12_real", "C12_imag", "C13_real", "C13_imag", "C22", "C23_real", "C23_imag", "C33",
];

const LABEL_SUFFIX: &str = ".u8.bin";
const FLOAT_SUFFIX: &str = ".bin";

fn config_text(rows: usize, cols: usize) -> String {
    format!(
        "Nrow\n{rows}\n---------\nNcol\n{cols}\n---------\nPolarCase\nmonostatic\n---------\nPolarType\nfull\n"
    )
}

fn read_config(dir: &Path) -> Result<(usize, usize)> {
    let path = dir.join("config.txt");
    let text = fs::read_to_string(&path).map_err(|e| Error::io(&path, e))?;
    let lines: Vec<&str> = text.lines().map(str::trim).collect();
    let value = |key: &str| -> Result<usize> {
        let pos = lines
            .iter()
            .position(|l| l.eq_ignore_ascii_case(key))
            .ok_or_else(|| Error::Format {
                path: path.clone(),
                message: format!("missing {key}"),
            })?;
        lines
            .get(pos + 1)
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| Error::Format {
                path: path.clone(),
                message: format!("{key} is not followed by a non-negative integer"),
            })
    };
    Ok((value("Nrow")?, value("Ncol")?))
}

fn write_config(dir: &Path, rows: usize, cols: usize) -> Result<()> {
    let path = dir.join("config.txt");
    fs::write(&path, config_text(rows, cols)).map_err(|e| Error::io(&path, e))
}

fn read_f32_file(path: &Path, pixels: usize) -> Result<Vec<f64>> {
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    let expected = (pixels * 4) as u64;
    if bytes.len() as u64 != expected {
        return Err(Error::SizeMismatch {
            path: path.to_path_buf(),
            expected,
            actual: bytes.len() as u64,
        });
    }
    Ok(bytes
        .chunks_exact(4)
        .map(|b| f64::from(f32::from_le_bytes([b[0], b[1], b[2], b[3]])))
        .collect())
}

fn write_f32_file(path: &Path, values: &[f64]) -> Result<()> {
    let mut bytes = Vec::with_capacity(values.len() * 4);
    for &v in values {
        bytes.extend_from_slice(&(v as f32).to_le_bytes());
    }
    fs::write(path, bytes).map_err(|e| Error::io(path, e))
}

fn ensure_dir(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))
}

fn read_matrix_dir(dir: &Path, kind: MatrixKind) -> Result<RasterStack> {
    let (rows, cols) = read_config(dir)?;
    let mut stack = RasterStack::new(cols, rows);
    let mut mask = vec![false; rows * cols];
    for name in kind.band_names() {
        let values = read_f32_file(&dir.join(format!("{name}{FLOAT_SUFFIX}")), rows * cols)?;
        for (m, v) in mask.iter_mut().zip(&values) {
            *m |= !v.is_finite();
        }
        stack.push_band(*name, BandData::Float(values))?;
    }
    stack.set_nodata(mask)?;
    Ok(stack)
}

pub fn read_t3(dir: impl AsRef<Path>) -> Result<RasterStack> {
    read_matrix_dir(dir.as_ref(), MatrixKind::T3)
}

pub fn read_c3(dir: impl AsRef<Path>) -> Result<RasterStack> {
    read_matrix_dir(dir.as_ref(), MatrixKind::C3)
}

/// Reads a T3 or C3 directory, whichever `T11.bin` / `C11.bin` is present.
pub fn read_polsar_dir(dir: impl AsRef<Path>) -> Result<RasterStack> {
    let dir = dir.as_ref();
    if !dir.is_dir() {
        let e = std::io::Error::new(std::io::ErrorKind::NotFound, "not a directory");
        return Err(Error::io(dir, e));
    }
    if dir.join("T11.bin").exists() {
        read_t3(dir)
    } else if dir.join("C11.bin").exists() {
        read_c3(dir)
    } else {
        Err(Error::Format {
            path: dir.to_path_buf(),
            message: "neither T11.bin nor C11.bin found".into(),
        })
    }
}

fn write_matrix_dir(stack: &RasterStack, dir: &Path, kind: MatrixKind) -> Result<()> {
    ensure_dir(dir)?;
    write_config(dir, stack.height(), stack.width())?;
    for name in kind.band_names() {
        let values = stack
            .float_band(name)
            .ok_or_else(|| Error::domain(format!("stack has no {name} band")))?;
        write_f32_file(&dir.join(format!("{name}{FLOAT_SUFFIX}")), values)?;
    }
    Ok(())
}

pub fn write_t3(stack: &RasterStack, dir: impl AsRef<Path>) -> Result<()> {
    write_matrix_dir(stack, dir.as_ref(), MatrixKind::T3)
}

pub fn write_c3(stack: &RasterStack, dir: impl AsRef<Path>) -> Result<()> {
    write_matrix_dir(stack, dir.as_ref(), MatrixKind::C3)
}

/// Writes every band plus `config.txt`. Float bands are narrowed to `f32`.
pub fn write_bands(stack: &RasterStack, dir: impl AsRef<Path>) -> Result<Vec<PathBuf>> {
    let dir = dir.as_ref();
    ensure_dir(dir)?;
    write_config(dir, stack.height(), stack.width())?;
    let mut written = Vec::new();
    for band in stack.bands() {
        let path = match &band.data {
            BandData::Float(v) => {
                let path = dir.join(format!("{}{FLOAT_SUFFIX}", band.name));
                write_f32_file(&path, v)?;
                path
            }
            BandData::Label(v) => {
                let path = dir.join(format!("{}{LABEL_SUFFIX}", band.name));
                fs::write(&path, v).map_err(|e| Error::io(&path, e))?;
                path
            }
        };
        written.push(path);
    }
    Ok(written)
}

/// Reads every band in a directory written by [`write_bands`] (or any
/// PolSARpro directory). Bands are sorted by name; a pixel is no-data when
/// any float band holds a non-finite value there.
pub fn read_bands(dir: impl AsRef<Path>) -> Result<RasterStack> {
    let dir = dir.as_ref();
    let (rows, cols) = read_config(dir)?;
    let mut names: Vec<String> = fs::read_dir(dir)
        .map_err(|e| Error::io(dir, e))?
        .filter_map(|entry| entry.ok())
        .filter_map(|entry| entry.file_name().into_string().ok())
        .filter(|name| name.ends_with(FLOAT_SUFFIX))
        .collect();
    names.sort();
    let mut stack = RasterStack::new(cols, rows);
    let mut mask = vec![false; rows * cols];
    for file in names {
        let path = dir.join(&file);
        if let Some(name) = file.strip_suffix(LABEL_SUFFIX) {
            let bytes = fs::read(&path).map_err(|e| Error::io(&path, e))?;
            if bytes.len() != rows * cols {
                return Err(Error::SizeMismatch {
                    path,
                    expected: (rows * cols) as u64,
                    actual: bytes.len() as u64,
                });
            }
            stack.push_band(name, BandData::Label(bytes))?;
        } else {
            let name = file.strip_suffix(FLOAT_SUFFIX).expect("filtered on suffix");
            let values = read_f32_file(&path, rows * cols)?;
            for (m, v) in mask.iter_mut().zip(&values) {
                *m |= !v.is_finite();
            }
            stack.push_band(name, BandData::Float(values))?;
        }
    }
    stack.set_nodata(mask)?;
    Ok(stack)
}

/// Tab-separated `label  name  #rrggbb` lines.
pub fn write_legend(path: impl AsRef<Path>, legend: &[(u8, &str, [u8; 3])]) -> Result<()> {
    let path = path.as_ref();
    let mut text = String::from("# label\tname\tcolor\n");
    for (label, name, [r, g, b]) in legend {
        text.push_str(&format!("{label}\t{name}\t#{r:02x}{g:02x}{b:02x}\n"));
    }
    fs::write(path, text).map_err(|e| Error::io(path, e))
}

/// Writes an 8-bit single-band class map and its sidecar legend
/// (`<stem>_legend.txt` next to it).
pub fn write_class_map(
    path: impl AsRef<Path>,
    labels: &[u8],
    legend: &[(u8, &str, [u8; 3])],
) -> Result<PathBuf> {
    let path = path.as_ref();
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        ensure_dir(parent)?;
    }
    let max = legend.iter().map(|l| l.0).max().unwrap_or(0);
    if let Some(bad) = labels.iter().find(|&&l| l > max) {
        return Err(Error::domain(format!("label {bad} not in legend")));
    }
    let mut file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    file.write_all(labels).map_err(|e| Error::io(path, e))?;
    let stem = path
        .file_name()
        .and_then(|s| s.to_str())
        .map(|s| s.split('.').next().unwrap_or(s).to_string())
        .unwrap_or_else(|| "classes".into());
    let legend_path = path.with_file_name(format!("{stem}_legend.txt"));
    write_legend(&legend_path, legend)?;
    Ok(legend_path)
}
