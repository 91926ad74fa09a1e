//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion
//! and exits non-zero if any criterion fails.

mod common;

use std::fs;
use std::path::Path;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use polsar_gd::algebra::{Mat3, Mat4};
use polsar_gd::classify::{feasible_boundary, BoundaryCurve, Scheme};
use polsar_gd::commands::{self, target_angles};
use polsar_gd::params::{alpha_gd, params_for_kennaugh};
use polsar_gd::raster::{
    read_bands, write_t3, BandData, Generator, MixtureComponent, PngScaling, Region,
};
use polsar_gd::spff::ScatteringGroup;
use polsar_gd::{
    covariance_from_coherency, fry_kattawar_residual, gd_coherency, gd_covariance, gd_kennaugh,
    gd_scattering, grvm_kennaugh, kennaugh_from_coherency, kennaugh_from_scattering,
    optimize_orientation, rotate_kennaugh, run_pipeline, sample_boundary, synth_scene,
    CoherencyMatrix, CovarianceMatrix, ElementaryTarget, ExecOptions, Job, KennaughMatrix,
    RasterStack, SceneSpec, SpffConfig,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within_time(elapsed: Duration, limit: f64) -> Result<(), String> {
    check(
        elapsed.as_secs_f64() < limit,
        format!("took {:.2} s, limit {limit} s", elapsed.as_secs_f64()),
    )
}

fn target_angle_table() -> Outcome {
    let expected = [
        (90.0, 45.0),
        (90.0, 45.0),
        (90.0, 15.0),
        (84.26, 13.37),
        (60.0, 7.24),
        (60.0, 7.24),
        (60.0, 7.24),
        (25.84, 1.43),
        (0.0, 0.0),
    ];
    let start = Instant::now();
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let csv = dir.path().join("angles.csv");
    commands::run_target_angles(&csv).map_err(|e| e.to_string())?;
    let rows = target_angles().map_err(|e| e.to_string())?;
    within_time(start.elapsed(), 1.0)?;
    let text = fs::read_to_string(&csv).map_err(|e| e.to_string())?;
    check(text.lines().count() == 10, "angle CSV must have 9 rows")?;
    let mut worst: f64 = 0.0;
    for ((t, a, tau), (ea, et)) in rows.iter().zip(expected) {
        let err = (a - ea).abs().max((tau - et).abs());
        check(
            err <= 0.01,
            format!("{}: ({a:.4}, {tau:.4}) vs ({ea}, {et})", t.name()),
        )?;
        worst = worst.max(err);
    }
    Ok(format!("9 rows, max deviation {worst:.4} deg"))
}

fn volume_angles() -> Outcome {
    let c = |re: f64| Complex64::new(re, 0.0);
    let case = |off: f64| -> Mat3 {
        [
            [c(15.0 / 30.0), c(off / 30.0), c(0.0)],
            [c(off / 30.0), c(7.0 / 30.0), c(0.0)],
            [c(0.0), c(0.0), c(8.0 / 30.0)],
        ]
    };
    let sym: Mat3 = [
        [c(0.5), c(0.0), c(0.0)],
        [c(0.0), c(0.25), c(0.0)],
        [c(0.0), c(0.0), c(0.25)],
    ];
    let mut got = Vec::new();
    for (m, expected) in [(case(5.0), 40.40), (sym, 35.26), (case(-5.0), 40.40)] {
        let t = CoherencyMatrix::new(m).map_err(|e| e.to_string())?;
        let a = alpha_gd(&kennaugh_from_coherency(&t)).map_err(|e| e.to_string())?;
        check(
            (a - expected).abs() <= 0.01,
            format!("{a:.4} vs {expected}"),
        )?;
        got.push(a);
    }
    let rv =
        alpha_gd(&grvm_kennaugh(1.0).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    check((rv - 35.26).abs() <= 0.01, format!("K_rv(1): {rv:.4}"))?;
    Ok(format!(
        "{:.4}, {:.4}, {:.4}; K_rv(1) {rv:.4}",
        got[0], got[1], got[2]
    ))
}

fn feasible_region() -> Outcome {
    let (p, a) = feasible_boundary(BoundaryCurve::I, 1.0).map_err(|e| e.to_string())?;
    check(
        (p - 0.25).abs() <= 1e-3 && (a - 54.7356).abs() <= 1e-3,
        format!("curve I at m=1: ({p}, {a})"),
    )?;
    let points = sample_boundary(1e-3).map_err(|e| e.to_string())?;
    let min = points.iter().map(|q| q.p_gd).fold(f64::INFINITY, f64::min);
    check(min >= 0.25 - 1e-6, format!("min P_GD {min}"))?;
    Ok(format!(
        "m=1 gives ({p:.6}, {a:.4}); min P_GD {min:.6} over {} samples",
        points.len()
    ))
}

fn representation_equivalence() -> Outcome {
    let start = Instant::now();
    let mut rng = common::rng(4);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let (s1, s2) = (common::scattering(&mut rng), common::scattering(&mut rng));
        let d = [
            gd_scattering(&s1, &s2),
            gd_kennaugh(
                &kennaugh_from_scattering(&s1),
                &kennaugh_from_scattering(&s2),
            ),
            gd_coherency(
                &CoherencyMatrix::from_scattering(&s1),
                &CoherencyMatrix::from_scattering(&s2),
            ),
            gd_covariance(
                &CovarianceMatrix::from_scattering(&s1),
                &CovarianceMatrix::from_scattering(&s2),
            ),
        ]
        .map(|r| r.map(|d| d.value()));
        let d: Vec<f64> = d
            .into_iter()
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        for i in 0..4 {
            for j in i + 1..4 {
                worst = worst.max((d[i] - d[j]).abs());
            }
        }
    }
    for _ in 0..1000 {
        let (t1, t2) = (common::coherency(&mut rng), common::coherency(&mut rng));
        let (c1, c2) = (
            covariance_from_coherency(&t1),
            covariance_from_coherency(&t2),
        );
        let d = [
            gd_coherency(&t1, &t2),
            gd_covariance(&c1, &c2),
            gd_kennaugh(&kennaugh_from_coherency(&t1), &kennaugh_from_coherency(&t2)),
        ]
        .map(|r| r.map(|d| d.value()));
        let d: Vec<f64> = d
            .into_iter()
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        for i in 0..3 {
            for j in i + 1..3 {
                worst = worst.max((d[i] - d[j]).abs());
            }
        }
    }
    within_time(start.elapsed(), 5.0)?;
    check(worst <= 1e-12, format!("max disagreement {worst:e}"))?;
    Ok(format!(
        "2000 pairs, max disagreement {worst:.1e}, {:.2} s",
        start.elapsed().as_secs_f64()
    ))
}

fn gd_properties() -> Outcome {
    let mut rng = common::rng(5);
    let k = |rng: &mut _| kennaugh_from_coherency(&common::coherency(rng));
    fn gd(a: &KennaughMatrix, b: &KennaughMatrix) -> Result<f64, String> {
        gd_kennaugh(a, b)
            .map(|d| d.value())
            .map_err(|e| e.to_string())
    }
    let mut failures = [0usize; 4];
    let mut worst_scale: f64 = 0.0;
    let mut worst_orth: f64 = 0.0;
    for _ in 0..10_000 {
        let (k1, k2) = (k(&mut rng), k(&mut rng));
        let d = gd(&k1, &k2)?;
        if !(0.0..=1.0).contains(&d) {
            failures[0] += 1;
        }
        let s: f64 = 10f64.powf(rand::Rng::random_range(&mut rng, -6.0..6.0));
        let r: f64 = 10f64.powf(rand::Rng::random_range(&mut rng, -6.0..6.0));
        let err = (gd(&k1.scaled(s), &k2.scaled(r))? - d).abs();
        worst_scale = worst_scale.max(err);
        let p2 = 2f64.powi(rand::Rng::random_range(&mut rng, -30..30));
        if err > 1e-12 || gd(&k1.scaled(p2), &k2)? != d {
            failures[1] += 1;
        }
        let q: Mat4 = common::orthogonal(&mut rng);
        let err = (gd(&k1.congruence(&q), &k2.congruence(&q))? - d).abs();
        worst_orth = worst_orth.max(err);
        if err > 1e-12 {
            failures[2] += 1;
        }
        if gd(&k2, &k1)? != d {
            failures[3] += 1;
        }
    }
    check(
        failures == [0; 4],
        format!("failures (bounded, scale, orthogonal, symmetric) = {failures:?}"),
    )?;
    Ok(format!(
        "4 x 10000 trials, 0 failures; scale dev {worst_scale:.1e}, orthogonal dev {worst_orth:.1e}"
    ))
}

fn roll_invariance() -> Outcome {
    let mut rng = common::rng(6);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let k = kennaugh_from_coherency(&common::coherency(&mut rng));
        let p = params_for_kennaugh(&k).map_err(|e| e.to_string())?;
        for i in 0..64 {
            let theta = -std::f64::consts::PI + i as f64 * std::f64::consts::TAU / 64.0;
            let r = params_for_kennaugh(&rotate_kennaugh(&k, theta)).map_err(|e| e.to_string())?;
            for (a, b) in [
                (p.alpha_gd, r.alpha_gd),
                (p.tau_gd, r.tau_gd),
                (p.p_gd, r.p_gd),
                (p.p_d, r.p_d),
            ] {
                worst = worst.max((a - b).abs());
            }
        }
    }
    check(worst < 1e-10, format!("max deviation {worst:e}"))?;
    Ok(format!("6400 rotations, max deviation {worst:.1e}"))
}

fn fry_kattawar() -> Outcome {
    let rel = |k: &KennaughMatrix| fry_kattawar_residual(k) / (4.0 * k.k11() * k.k11());
    let mut worst: f64 = 0.0;
    for t in ElementaryTarget::COHERENT {
        worst = worst.max(rel(&t.kennaugh()).abs());
    }
    let mut rng = common::rng(7);
    for _ in 0..1000 {
        worst = worst.max(rel(&kennaugh_from_scattering(&common::scattering(&mut rng))).abs());
    }
    check(worst <= 1e-9, format!("coherent residual {worst:e}"))?;
    let dep = rel(&ElementaryTarget::IdealDepolarizer.kennaugh());
    check(dep > 0.0, format!("depolarizer residual {dep}"))?;
    let mut min_mix = f64::INFINITY;
    for _ in 0..1000 {
        let a = kennaugh_from_scattering(&common::scattering(&mut rng));
        let b = kennaugh_from_scattering(&common::scattering(&mut rng));
        let w: f64 = rand::Rng::random_range(&mut rng, 0.05..0.95);
        min_mix = min_mix.min(rel(&a.scaled(w).add(&b.scaled(1.0 - w))));
    }
    let pairs = ElementaryTarget::COHERENT;
    for (i, a) in pairs.iter().enumerate() {
        for b in &pairs[i + 1..] {
            min_mix = min_mix.min(rel(&a.kennaugh().add(&b.kennaugh())));
        }
    }
    check(min_mix > 0.0, format!("mixture residual {min_mix}"))?;
    Ok(format!(
        "coherent max {worst:.1e}; depolarizer {dep:.3}; mixtures min {min_mix:.2e}"
    ))
}

fn quadrant_scene(looks: Option<u32>, size: usize, seed: u64) -> SceneSpec {
    let h = size / 2;
    let target = Generator::Target;
    let region = |x, y, generator| Region {
        x,
        y,
        width: h,
        height: h,
        generator,
        looks,
        span: 1.0,
    };
    SceneSpec {
        width: size,
        height: size,
        seed,
        regions: vec![
            region(0, 0, target(ElementaryTarget::Trihedral)),
            region(h, 0, target(ElementaryTarget::Dihedral)),
            region(0, h, Generator::Volume { gamma: 1.0 }),
            region(
                h,
                h,
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
    }
}

fn power_bands(s: &RasterStack) -> Vec<&[f64]> {
    s.bands()
        .iter()
        .filter(|b| b.name.starts_with("P_"))
        .filter_map(|b| s.float_band(&b.name))
        .collect()
}

fn spff_conservation() -> Outcome {
    let stack = synth_scene(&quadrant_scene(Some(4), 256, 8)).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let out = run_pipeline(
        &stack,
        &Job::Spff(SpffConfig::default()),
        &ExecOptions {
            workers: 1,
            tile_rows: 256,
        },
    )
    .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let s = &out.stack;
    check(
        out.invalid_count == 0 && s.nodata_count() == 0,
        "unexpected nodata pixels",
    )?;
    let bands = power_bands(s);
    check(bands.len() == 8, format!("{} power bands", bands.len()))?;
    let span = s.float_band("span").ok_or("no span band")?;
    let (mut worst, mut min_power) = (0.0f64, f64::INFINITY);
    for i in 0..s.len() {
        let total: f64 = bands.iter().map(|b| b[i]).sum();
        worst = worst.max((total - span[i]).abs() / span[i]);
        min_power = bands.iter().map(|b| b[i]).fold(min_power, f64::min);
    }
    check(worst <= 1e-9, format!("conservation error {worst:e}"))?;
    check(min_power >= 0.0, format!("negative power {min_power}"))?;
    within_time(elapsed, 30.0)?;
    Ok(format!(
        "65536 pixels, max relative error {worst:.1e}, min power {min_power:.2e}, {:.2} s on 1 worker",
        elapsed.as_secs_f64()
    ))
}

fn purity_recovery() -> Outcome {
    let size = 256;
    let stack = synth_scene(&quadrant_scene(None, size, 0)).map_err(|e| e.to_string())?;
    let opts = ExecOptions::default();
    let spff = run_pipeline(&stack, &Job::Spff(SpffConfig::default()), &opts)
        .map_err(|e| e.to_string())?
        .stack;
    let classes = run_pipeline(&stack, &Job::Classify(Scheme::PgdAlpha), &opts)
        .map_err(|e| e.to_string())?
        .stack;
    let band = |n: &str| spff.float_band(n).ok_or(format!("no band {n}"));
    let label = |n: &str| spff.label_band(n).ok_or(format!("no band {n}"));
    let (span, p_t, p_d, p_rv) = (band("span")?, band("P_t")?, band("P_d")?, band("P_rv")?);
    let (branch, dominant) = (label("branch")?, label("dominant")?);
    let class = classes.label_band("class").ok_or("no class band")?;
    let h = size / 2;
    let mut counts = [0usize; 3];
    for y in 0..size {
        for x in 0..size {
            let i = y * size + x;
            let exact = |p: f64| (p - span[i]).abs() <= 1e-9 * span[i];
            match (x < h, y < h) {
                (true, true) => {
                    check(
                        exact(p_t[i]),
                        format!("trihedral pixel {i}: P_t {} span {}", p_t[i], span[i]),
                    )?;
                    check(
                        class[i] == 2,
                        format!("trihedral pixel {i}: class {}", class[i]),
                    )?;
                    counts[0] += 1;
                }
                (false, true) => {
                    check(exact(p_d[i]), format!("dihedral pixel {i}: P_d {}", p_d[i]))?;
                    check(
                        branch[i] == 2,
                        format!("dihedral pixel {i}: branch {}", branch[i]),
                    )?;
                    check(
                        dominant[i] == ScatteringGroup::Even.label(),
                        format!("dihedral pixel {i}: dominant {}", dominant[i]),
                    )?;
                    counts[1] += 1;
                }
                (true, false) => {
                    check(
                        exact(p_rv[i]),
                        format!("volume pixel {i}: P_rv {}", p_rv[i]),
                    )?;
                    check(
                        branch[i] == 1,
                        format!("volume pixel {i}: branch {}", branch[i]),
                    )?;
                    check(
                        dominant[i] == ScatteringGroup::Rand.label(),
                        format!("volume pixel {i}: dominant {}", dominant[i]),
                    )?;
                    counts[2] += 1;
                }
                (false, false) => {}
            }
        }
    }
    Ok(format!(
        "trihedral/dihedral/volume pixels checked: {counts:?}"
    ))
}

fn orientation_recovery() -> Outcome {
    let cfg = SpffConfig::default();
    let kd = ElementaryTarget::Dihedral.kennaugh();
    let mut found = Vec::new();
    for theta0 in [-20.0f64, -10.0, 5.0, 15.0] {
        let o = optimize_orientation(&rotate_kennaugh(&kd, theta0.to_radians()), &cfg)
            .map_err(|e| e.to_string())?;
        check(
            (o.theta_ms_deg + theta0).abs() <= cfg.theta_step_deg + 1e-9,
            format!("theta0 {theta0}: recovered {}", o.theta_ms_deg),
        )?;
        check(
            o.best_target == ElementaryTarget::Dihedral,
            format!("theta0 {theta0}: best {}", o.best_target),
        )?;
        found.push(o.theta_ms_deg);
    }
    Ok(format!("recovered {found:?} deg"))
}

fn dir_bytes(dir: &Path) -> Result<Vec<(String, Vec<u8>)>, String> {
    let mut files: Vec<(String, Vec<u8>)> = fs::read_dir(dir)
        .map_err(|e| e.to_string())?
        .map(|e| {
            let e = e.map_err(|e| e.to_string())?;
            let bytes = fs::read(e.path()).map_err(|e| e.to_string())?;
            Ok((e.file_name().to_string_lossy().into_owned(), bytes))
        })
        .collect::<Result<_, String>>()?;
    files.sort();
    Ok(files)
}

fn determinism() -> Outcome {
    let tmp = tempfile::tempdir().map_err(|e| e.to_string())?;
    let spec = quadrant_scene(Some(4), 128, 77);
    let spec_path = tmp.path().join("scene.json");
    fs::write(
        &spec_path,
        serde_json::to_string(&spec).map_err(|e| e.to_string())?,
    )
    .map_err(|e| e.to_string())?;
    let mut reference: Option<Vec<(String, Vec<u8>)>> = None;
    let mut runs = 0;
    for (run, workers) in [(0, 1), (0, 4), (0, 16), (1, 1), (1, 4)] {
        let t3 = tmp.path().join(format!("t3_{run}"));
        if !t3.exists() {
            commands::run_synth(&spec_path, &t3, None).map_err(|e| e.to_string())?;
        }
        let out = tmp.path().join(format!("spff_{run}_{workers}"));
        let opts = ExecOptions {
            workers,
            tile_rows: 256 / workers,
        };
        commands::run_spff(
            &t3,
            &out,
            &SpffConfig::default(),
            &opts,
            PngScaling::default(),
        )
        .map_err(|e| e.to_string())?;
        let bytes = dir_bytes(&out)?;
        match &reference {
            None => reference = Some(bytes),
            Some(r) => check(
                *r == bytes,
                format!("synth run {run}, {workers} workers differs"),
            )?,
        }
        runs += 1;
    }
    check(
        dir_bytes(&tmp.path().join("t3_0"))? == dir_bytes(&tmp.path().join("t3_1"))?,
        "synthetic scenes differ between runs",
    )?;
    let files = reference.map_or(0, |r| r.len());
    Ok(format!(
        "{runs} runs over 1/4/16 workers and 2 seeded scenes, {files} files bit-identical"
    ))
}

fn real_scene_smoke() -> Outcome {
    let tmp = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut spec = quadrant_scene(Some(4), 64, 12);
    spec.regions[3].width = 20;
    let mut stack = synth_scene(&spec).map_err(|e| e.to_string())?;
    // NaN from the sensor, and a zero-power pixel that is valid on input.
    let mut t11 = stack.float_band("T11").ok_or("no T11")?.to_vec();
    for i in [5usize, 64 * 10 + 3, 64 * 40 + 40] {
        t11[i] = f64::NAN;
    }
    stack
        .push_band("T11", BandData::Float(t11))
        .map_err(|e| e.to_string())?;
    for name in polsar_gd::raster::T3_BANDS {
        let mut v = stack.float_band(name).ok_or("band")?.to_vec();
        v[100] = 0.0;
        stack
            .push_band(name, BandData::Float(v))
            .map_err(|e| e.to_string())?;
    }
    let input = tmp.path().join("T3");
    write_t3(&stack, &input).map_err(|e| e.to_string())?;
    let loaded = polsar_gd::raster::read_t3(&input).map_err(|e| e.to_string())?;
    let input_nodata = loaded.nodata().to_vec();
    let n_in = input_nodata.iter().filter(|&&m| m).count();
    check(
        n_in == 12 * 32 + 3,
        format!("{n_in} nodata pixels on input"),
    )?;

    let opts = ExecOptions::default();
    let cfg = SpffConfig::default();
    let mut expected: Vec<(&str, Vec<String>)> = vec![
        (
            "params",
            ["alpha_gd", "tau_gd", "p_gd", "p_d", "span"]
                .map(|b| format!("{b}.bin"))
                .to_vec(),
        ),
        ("spff", {
            let mut v: Vec<String> = [
                "P_t", "P_c", "P_nd", "P_d", "P_lh", "P_rh", "P_rv", "P_res", "span", "theta_ms",
                "alpha_gd", "gamma",
            ]
            .map(|b| format!("{b}.bin"))
            .to_vec();
            v.extend(
                [
                    "branch.u8.bin",
                    "gamma_flag.u8.bin",
                    "dominant.u8.bin",
                    "rgb.png",
                    "dominant_legend.txt",
                ]
                .map(String::from),
            );
            v
        }),
    ];
    for scheme in ["tau", "alpha", "pgd-alpha"] {
        expected.push((
            scheme,
            vec![
                "class.u8.bin".into(),
                "class_legend.txt".into(),
                "class.png".into(),
            ],
        ));
    }
    let mut invalid = 0;
    for (name, files) in &expected {
        let out = tmp.path().join(name);
        let summary = match *name {
            "params" => commands::run_params(&input, &out, &opts),
            "spff" => commands::run_spff(&input, &out, &cfg, &opts, PngScaling::default()),
            scheme => commands::run_classify(
                &input,
                &out,
                scheme
                    .parse()
                    .map_err(|e: polsar_gd::Error| e.to_string())?,
                &opts,
            ),
        }
        .map_err(|e| format!("{name}: {e}"))?;
        invalid = summary.invalid;
        for f in files {
            check(out.join(f).exists(), format!("{name}: missing {f}"))?;
        }
        let bands = read_bands(&out).map_err(|e| e.to_string())?;
        for band in bands.bands() {
            for (i, &m) in input_nodata.iter().enumerate() {
                if !m {
                    continue;
                }
                let closed = match &band.data {
                    BandData::Float(v) => v[i].is_nan(),
                    BandData::Label(v) => v[i] == 0,
                };
                check(
                    closed,
                    format!("{name}/{}: pixel {i} not nodata", band.name),
                )?;
            }
        }
    }
    check(
        invalid == 1,
        format!("{invalid} pixels failed, expected the zero-power one"),
    )?;
    Ok(format!(
        "5 products on a 64x64 T3 directory, {n_in} nodata pixels closed, 1 invalid pixel reported"
    ))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("elementary-target angle table", target_angle_table),
        ("volume model angles", volume_angles),
        ("feasible region landmark", feasible_region),
        ("representation equivalence", representation_equivalence),
        ("geodesic distance properties", gd_properties),
        ("roll invariance", roll_invariance),
        ("Fry-Kattawar equality", fry_kattawar),
        ("power conservation and non-negativity", spff_conservation),
        ("purity recovery", purity_recovery),
        ("orientation recovery", orientation_recovery),
        ("determinism", determinism),
        ("PolSARpro directory smoke test", real_scene_smoke),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = f();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {:>2} {name} ({secs:.2} s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({secs:.2} s): {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
