use clap::{Parser, Subcommand};
use cliffwave::cli::{self, OutputFormat, RunConfig, WaveletMode};
use cliffwave::wavelet::ProfileKind;
use std::path::PathBuf;
use std::process::ExitCode;

/// Clifford-valued diffusive wavelets on the sphere and the spin group.
#[derive(Parser)]
#[command(name = "cliffwave", version, about)]
struct Args {
    #[command(subcommand)]
    command: Command,

    /// Sphere dimension m (signals live on S^m in Cl_{m+1}).
    #[arg(long, default_value_t = 2, global = true)]
    m: usize,

    /// Band limit / maximum polynomial degree K.
    #[arg(long = "max-degree", default_value_t = 8, global = true)]
    max_degree: usize,

    /// Spectral profile: heat-h, heat-l, or modified.
    #[arg(long, default_value = "modified", global = true)]
    profile: String,

    /// Smallest scale of the wavelet grid.
    #[arg(long = "rho-min", default_value_t = 1e-3, global = true)]
    rho_min: f64,

    /// Largest scale of the wavelet grid.
    #[arg(long = "rho-max", default_value_t = 20.0, global = true)]
    rho_max: f64,

    /// Geometric ratio of the wavelet grid.
    #[arg(long = "rho-ratio", default_value_t = 1.05, global = true)]
    rho_ratio: f64,

    /// Diffusion time for the heat command.
    #[arg(long, default_value_t = 1.0, global = true)]
    t: f64,

    /// Input file.
    #[arg(long = "in", global = true)]
    input: Option<PathBuf>,

    /// Output file (default depends on the command).
    #[arg(long = "out", global = true)]
    output: Option<PathBuf>,

    /// Output format: json or csv.
    #[arg(long, default_value = "json", global = true)]
    format: String,

    /// Tolerance for round-trip checks.
    #[arg(long, default_value_t = 1e-3, global = true)]
    tol: f64,

    /// Seed of the deterministic random generator.
    #[arg(long, default_value_t = 7, global = true)]
    seed: u64,

    /// Override of the l-Casimir constant (default n(n-1)/8 in ambient n).
    #[arg(long = "casimir-constant", global = true)]
    casimir_constant: Option<f64>,
}

#[derive(Subcommand)]
enum Command {
    /// Build the monogenic basis and write its metadata.
    Basis,
    /// Run the exact symbolic identity battery.
    Verify,
    /// Expand a signal into spectral coefficients.
    Analyze,
    /// Evaluate spectral coefficients back into a signal.
    Synthesize,
    /// Apply a heat kernel to a signal.
    Heat,
    /// Diffusive wavelet pipeline.
    Wavelet {
        /// transform, reconstruct, or roundtrip.
        #[arg(default_value = "roundtrip")]
        mode: String,
    },
    /// Tabulate the Spin(m) eigenfunctions.
    SpinEig,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let profile = match ProfileKind::from_tag(&args.profile) {
        Some(p) => p,
        None => {
            eprintln!("unknown profile {:?}", args.profile);
            return ExitCode::from(cli::EXIT_USAGE as u8);
        }
    };
    let format = match OutputFormat::parse(&args.format) {
        Some(f) => f,
        None => {
            eprintln!("unknown format {:?}", args.format);
            return ExitCode::from(cli::EXIT_USAGE as u8);
        }
    };
    let cfg = RunConfig {
        m: args.m,
        max_degree: args.max_degree,
        profile,
        rho_min: args.rho_min,
        rho_max: args.rho_max,
        rho_ratio: args.rho_ratio,
        t: args.t,
        input: args.input,
        output: args.output,
        format,
        tol: args.tol,
        seed: args.seed,
        casimir_constant: args.casimir_constant,
    };
    let result = match &args.command {
        Command::Basis => cli::cmd_basis(&cfg),
        Command::Verify => cli::cmd_verify(&cfg),
        Command::Analyze => cli::cmd_analyze(&cfg),
        Command::Synthesize => cli::cmd_synthesize(&cfg),
        Command::Heat => cli::cmd_heat(&cfg),
        Command::Wavelet { mode } => match WaveletMode::parse(mode) {
            Some(mode) => cli::cmd_wavelet(&cfg, mode),
            None => {
                eprintln!("unknown wavelet mode {mode:?}");
                return ExitCode::from(cli::EXIT_USAGE as u8);
            }
        },
        Command::SpinEig => cli::cmd_spin_eig(&cfg),
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(cli::exit_code_for(&err) as u8)
        }
    }
}
