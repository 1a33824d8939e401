use std::fs;
use std::io::Write;
use std::process;

use clap::{Parser, Subcommand, ValueEnum};

use weightdec::quantum_sim::{SimConfig, VerifyMode};
use weightdec_cli::commands;
use weightdec_cli::{CliError, ExitCode};

#[derive(Parser)]
#[command(
    name = "weightdec",
    version,
    about = "Exact quantum query bounds for weight decision problems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Full,
    Symmetric,
}

#[derive(Subcommand)]
enum Command {
    /// Upper and lower bounds for an instance `n k l`, or for a ratio point
    Bounds {
        #[arg(required_unless_present = "ratio", num_args = 3, value_names = ["N", "K", "L"])]
        instance: Option<Vec<u32>>,
        /// Evaluate at (kappa, lambda) instead of an instance
        #[arg(long, num_args = 2, value_names = ["KAPPA", "LAMBDA"], conflicts_with = "instance", allow_negative_numbers = true)]
        ratio: Option<Vec<f64>>,
        /// Print a single `kappa,lambda,upper,lower,gap` row
        #[arg(long)]
        csv: bool,
    },
    /// List the boundary pairs of S_d
    Sd { d: u32 },
    /// Simulate the padded algorithm on every input of weight k or l
    Verify {
        n: u32,
        k: u32,
        l: u32,
        #[arg(long, value_enum, default_value = "full")]
        mode: Mode,
    },
    /// Bounds on the grid of cell centers; writes CSV
    Sweep {
        #[arg(long)]
        resolution: u32,
        /// Output file. CSV goes to stdout when omitted
        #[arg(long)]
        out: Option<String>,
    },
    /// Minimum approximating-polynomial degree via LP
    Degree {
        n: u32,
        k: u32,
        l: u32,
        #[arg(long = "max-d")]
        max_d: Option<u32>,
    },
    /// Exact query complexity of the symmetric problem with threshold kappa
    G {
        #[arg(allow_negative_numbers = true)]
        kappa: f64,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    let text = match cli.command {
        Command::Bounds {
            instance,
            ratio,
            csv,
        } => match (instance, ratio) {
            (_, Some(r)) => commands::bounds_for_ratio(r[0], r[1], csv)?,
            (Some(i), None) => commands::bounds_for_instance(i[0], i[1], i[2], csv)?,
            (None, None) => unreachable!("clap requires one of the forms"),
        },
        Command::Sd { d } => commands::sd(d)?,
        Command::Verify { n, k, l, mode } => {
            let mode = match mode {
                Mode::Full => VerifyMode::Full,
                Mode::Symmetric => VerifyMode::Symmetric,
            };
            commands::verify(n, k, l, mode, SimConfig::from_env()?)?
        }
        Command::Sweep { resolution, out } => {
            let (csv, summary) = commands::run_sweep(resolution)?;
            match out {
                Some(path) => {
                    fs::write(&path, csv).map_err(|e| CliError::io(&path, e))?;
                    format!("{}\n", summary.line())
                }
                None => {
                    eprintln!("{}", summary.line());
                    csv
                }
            }
        }
        Command::Degree { n, k, l, max_d } => commands::degree(n, k, l, max_d)?,
        Command::G { kappa } => commands::g(kappa)?,
    };
    let mut stdout = std::io::stdout().lock();
    stdout
        .write_all(text.as_bytes())
        .and_then(|_| stdout.flush())
        .map_err(|e| CliError::io("stdout", e))
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() {
                ExitCode::Argument
            } else {
                ExitCode::Ok
            };
            let _ = err.print();
            process::exit(code.code());
        }
    };
    if let Err(err) = run(cli) {
        eprintln!("weightdec: {err}");
        process::exit(err.code.code());
    }
}
