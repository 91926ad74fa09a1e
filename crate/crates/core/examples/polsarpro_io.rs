//! Reading a PolSARpro T3 or C3 directory and summarizing it.
//!
//! `cargo run --example polsarpro_io -- <dir>`; without an argument a small
//! C3 directory is written to the temp dir first and read back.

use std::path::PathBuf;

use polsar_gd::raster::read_polsar_dir;
use polsar_gd::{
    coherency_from_kennaugh, covariance_from_coherency, grvm_kennaugh, params_for_pixel,
    RasterStack,
};

fn main() -> polsar_gd::Result<()> {
    let dir = match std::env::args().nth(1) {
        Some(d) => PathBuf::from(d),
        None => {
            let dir = std::env::temp_dir().join("polsar-gd-c3");
            let pixels: Vec<_> = (0..12)
                .map(|i| {
                    let t = coherency_from_kennaugh(&grvm_kennaugh(0.25 + 0.25 * i as f64)?)?;
                    Ok((i != 5).then(|| covariance_from_coherency(&t)))
                })
                .collect::<polsar_gd::Result<_>>()?;
            polsar_gd::raster::write_c3(&RasterStack::from_covariance(4, 3, &pixels)?, &dir)?;
            dir
        }
    };
    let stack = read_polsar_dir(&dir)?;
    println!(
        "{}: {}x{} {:?}, {} nodata",
        dir.display(),
        stack.width(),
        stack.height(),
        stack.matrix_kind(),
        stack.nodata_count()
    );
    let mut alpha = Vec::new();
    for i in 0..stack.len() {
        if let Some(t) = stack.coherency_at(i) {
            alpha.push(params_for_pixel(&t?)?.alpha_gd);
        }
    }
    let mean = alpha.iter().sum::<f64>() / alpha.len().max(1) as f64;
    let (lo, hi) = alpha
        .iter()
        .fold((f64::MAX, f64::MIN), |(l, h), &a| (l.min(a), h.max(a)));
    println!(
        "alpha_gd over {} pixels: mean {mean:.2}, range [{lo:.2}, {hi:.2}]",
        alpha.len()
    );
    Ok(())
}
