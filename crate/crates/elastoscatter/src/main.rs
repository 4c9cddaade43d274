//! Command-line driver: verification suites, far-field emission, the
//! two-obstacle uniqueness comparison and the Green-tensor difference
//! identity. Exit codes: 0 success, 1 numerical failure, 2 config error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use elastoscatter::config::ExperimentConfig;
use elastoscatter::elasto::RVec3;
use elastoscatter::experiment::{cmd_difference_identity, cmd_farfield, cmd_uniqueness, verify};
use elastoscatter::Error;

#[derive(Parser)]
#[command(name = "elastoscatter", version, about = "Elastic wave scattering toolkit")]
struct Cli {
    /// Cap on worker threads (also honors ELASTOSCATTER_THREADS)
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and write its JSON report
    Verify {
        /// one of: kernels, potentials, solver, farfield, rellich
        suite: String,
        #[arg(long)]
        config: Option<PathBuf>,
        /// report destination (default: <suite>_report.json)
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Solve one obstacle and emit far-field pattern and matrix files
    Farfield {
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Compare the far fields of two disjoint obstacles on a solid angle
    Uniqueness {
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Evaluate both sides of the two-domain Green-tensor difference identity
    #[command(name = "diff-identity")]
    DiffIdentity {
        #[arg(long)]
        config: Option<PathBuf>,
        /// probe point, three floats
        #[arg(long, num_args = 3, allow_hyphen_values = true)]
        x: Vec<f64>,
        /// source point, three floats
        #[arg(long, num_args = 3, allow_hyphen_values = true)]
        y: Vec<f64>,
        /// polarization, three floats
        #[arg(long, num_args = 3, allow_hyphen_values = true, default_values_t = [1.0, 0.0, 0.0])]
        eta: Vec<f64>,
    },
}

fn exit_code_for(err: &Error) -> ExitCode {
    match err {
        Error::Config(_)
        | Error::InvalidMaterial(_)
        | Error::InvalidShape(_)
        | Error::InvalidWave(_) => ExitCode::from(2),
        _ => ExitCode::from(1),
    }
}

fn load_config(path: &Option<PathBuf>) -> Result<ExperimentConfig, Error> {
    match path {
        Some(p) => ExperimentConfig::load(p),
        None => Ok(ExperimentConfig::default_rigid_sphere()),
    }
}

fn configure_threads(cli_threads: Option<usize>) {
    let from_env = std::env::var("ELASTOSCATTER_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok());
    if let Some(n) = cli_threads.or(from_env) {
        let n = n.max(1);
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        faer::set_global_parallelism(faer::Par::rayon(n));
    } else {
        faer::set_global_parallelism(faer::Par::rayon(0));
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Verify {
            suite,
            config,
            report,
        } => {
            let cfg = load_config(&config)?;
            let suite_report = verify::run_suite(&suite, &cfg)?;
            suite_report.print_lines();
            let dest = report.unwrap_or_else(|| PathBuf::from(format!("{suite}_report.json")));
            std::fs::write(&dest, serde_json::to_string_pretty(&suite_report)?)?;
            println!(
                "suite '{}': {} in {:.2}s -> {}",
                suite_report.suite,
                if suite_report.all_pass { "PASS" } else { "FAIL" },
                suite_report.elapsed_seconds,
                dest.display()
            );
            if !suite_report.all_pass {
                return Err(Error::FitFailure(format!(
                    "verification suite '{suite}' failed"
                )));
            }
        }
        Command::Farfield { config } => {
            let cfg = load_config(&config)?;
            let files = cmd_farfield(&cfg)?;
            for p in &files.pattern_csv {
                println!("wrote {}", p.display());
            }
            println!("wrote {}", files.matrix_json.display());
            println!("wrote {}", files.metadata_json.display());
        }
        Command::Uniqueness { config } => {
            let cfg = load_config(&config)?;
            let report = cmd_uniqueness(&cfg)?;
            println!("{}", serde_json::to_string_pretty(&report)?);
        }
        Command::DiffIdentity { config, x, y, eta } => {
            let cfg = load_config(&config)?;
            let to_vec = |v: &[f64]| RVec3::new(v[0], v[1], v[2]);
            let report = cmd_difference_identity(&cfg, &to_vec(&x), &to_vec(&y), &to_vec(&eta))?;
            println!("{}", serde_json::to_string_pretty(&report)?);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads(cli.threads);
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}
