//! Builds a speckled four-quadrant scene and runs every pipeline job on it.
//!
//! Writes into `$TMPDIR/polsar-gd-synthetic` unless a directory is given.

use std::path::PathBuf;

use polsar_gd::commands::{run_classify, run_params, run_spff};
use polsar_gd::raster::{write_t3, Generator, MixtureComponent, PngScaling, Region};
use polsar_gd::{synth_scene, ElementaryTarget, ExecOptions, SceneSpec, Scheme, SpffConfig};

fn quadrant(x: usize, y: usize, generator: Generator) -> Region {
    Region {
        x,
        y,
        width: 64,
        height: 64,
        generator,
        looks: Some(4),
        span: 1.0,
    }
}

fn main() -> polsar_gd::Result<()> {
    let out: PathBuf = std::env::args().nth(1).map_or_else(
        || std::env::temp_dir().join("polsar-gd-synthetic"),
        PathBuf::from,
    );
    let target = |t| Generator::Target(t);
    let spec = SceneSpec {
        width: 128,
        height: 128,
        seed: 42,
        regions: vec![
            quadrant(0, 0, target(ElementaryTarget::Trihedral)),
            quadrant(64, 0, target(ElementaryTarget::Dihedral)),
            quadrant(0, 64, Generator::Volume { gamma: 1.0 }),
            quadrant(
                64,
                64,
                Generator::Mixture(vec![
                    MixtureComponent {
                        weight: 0.5,
                        generator: target(ElementaryTarget::Trihedral),
                    },
                    MixtureComponent {
                        weight: 0.5,
                        generator: target(ElementaryTarget::Dihedral),
                    },
                ]),
            ),
        ],
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&spec).expect("serializable")
    );

    let t3 = out.join("T3");
    write_t3(&synth_scene(&spec)?, &t3)?;
    let opts = ExecOptions::default();
    let params = run_params(&t3, &out.join("params"), &opts)?;
    let classes = run_classify(&t3, &out.join("classes"), Scheme::PgdAlpha, &opts)?;
    let spff = run_spff(
        &t3,
        &out.join("spff"),
        &SpffConfig::default(),
        &opts,
        PngScaling::default(),
    )?;
    for (name, s) in [("params", params), ("classes", classes), ("spff", spff)] {
        println!("{name}: {} files, {} nodata", s.files.len(), s.nodata);
    }
    println!("outputs in {}", out.display());
    Ok(())
}
