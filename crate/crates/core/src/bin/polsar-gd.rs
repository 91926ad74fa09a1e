use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand};
use polsar_gd::classify::Scheme;
use polsar_gd::commands::{self, RunConfig, Summary};
use polsar_gd::spff::BranchMap;

const PALETTE_HELP: &str = "\
Class maps are written as <name>.u8.bin (0 = nodata) with a tab-separated
legend and a colour PNG. pgd-alpha classes 1..8 use dark blue, royal blue,
dark green, yellow green, firebrick, tomato, purple, gold. The spff RGB
composite maps even (d + nd) to red, random (volume + residue) to green and
odd (t + c) to blue, each clipped at mean + k sigma (--png-sigma, default 2).

Exit codes: 0 success, 1 usage, 2 I/O, 3 invalid data or configuration.";

#[derive(Parser)]
#[command(version, about = "Geodesic-distance polarimetric SAR analysis", after_help = PALETTE_HELP)]
struct Cli {
    /// JSON file with defaults for any flag.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Worker threads (0 = all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Rows per tile.
    #[arg(long, global = true)]
    tile_rows: Option<usize>,
    /// PNG clip level in standard deviations above the mean.
    #[arg(long, global = true)]
    png_sigma: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// alpha_gd, tau_gd, p_gd, p_d and span bands.
    Params {
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Class map and legend.
    Classify {
        input: PathBuf,
        /// tau | alpha | pgd-alpha
        #[arg(long)]
        scheme: Option<Scheme>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Power factorization bands, dominant label and RGB composite.
    Spff {
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// Orientation grid step in degrees.
        #[arg(long)]
        theta_step: Option<f64>,
        /// normal | swapped
        #[arg(long)]
        branch_map: Option<BranchMap>,
    },
    /// Synthetic T3 scene from a JSON layout.
    Synth {
        spec: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Feasible-region boundary curves as CSV.
    Boundary {
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long)]
        dm: Option<f64>,
    },
    /// Alpha and tau angles of the elementary targets as CSV.
    Table2 {
        #[arg(short, long)]
        output: PathBuf,
    },
}

fn report(s: &Summary) {
    println!(
        "{}x{} pixels, {} nodata ({} failed), {} files written",
        s.width,
        s.height,
        s.nodata,
        s.invalid,
        s.files.len()
    );
}

fn run(cli: Cli) -> polsar_gd::Result<()> {
    let mut cfg = match &cli.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::default(),
    };
    cfg.workers = cli.workers.or(cfg.workers);
    cfg.tile_rows = cli.tile_rows.or(cfg.tile_rows);
    cfg.png_sigma = cli.png_sigma.or(cfg.png_sigma);
    let opts = cfg.exec_options();
    match cli.command {
        Command::Params { input, output } => report(&commands::run_params(&input, &output, &opts)?),
        Command::Classify {
            input,
            scheme,
            output,
        } => {
            let Some(scheme) = scheme.or(cfg.scheme) else {
                let e = Cli::command().error(
                    ErrorKind::MissingRequiredArgument,
                    "classify needs --scheme",
                );
                let _ = e.print();
                std::process::exit(1);
            };
            report(&commands::run_classify(&input, &output, scheme, &opts)?)
        }
        Command::Spff {
            input,
            output,
            theta_step,
            branch_map,
        } => {
            cfg.theta_step = theta_step.or(cfg.theta_step);
            cfg.branch_map = branch_map.or(cfg.branch_map);
            let spff = cfg.spff_config();
            report(&commands::run_spff(
                &input,
                &output,
                &spff,
                &opts,
                cfg.png_scaling(),
            )?)
        }
        Command::Synth { spec, output, seed } => {
            report(&commands::run_synth(&spec, &output, seed.or(cfg.seed))?)
        }
        Command::Boundary { output, dm } => {
            commands::run_boundary(&output, dm.or(cfg.dm).unwrap_or(1e-3))?
        }
        Command::Table2 { output } => commands::run_target_angles(&output)?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
