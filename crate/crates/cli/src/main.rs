use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use helmdist::commands::{self, CommandError, Format, GenObject};
use helmdist::suites::{self, Suite, VerifyConfig};
use helmdist_core::DEFAULT_SEED;

/// Exact distance-matrix toolkit for helm graphs: generate the closed-form
/// objects, verify every identity against independent oracles, inspect
/// spectra.
#[derive(Parser)]
#[command(name = "helmdist", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write one matrix (distance, Laplacian, wheel, inverse, pseudo-inverse)
    Gen {
        /// Wheel order; closed-form objects require an even value
        #[arg(long)]
        n: u32,
        /// Which matrix to generate
        #[arg(long, value_enum)]
        object: GenObject,
        /// Output encoding; exact rationals are "p/q" strings either way
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Write to this file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run verification suites over a range of even orders (JSON lines)
    Verify {
        #[arg(long, default_value_t = 4)]
        n_min: u32,
        #[arg(long, default_value_t = 24)]
        n_max: u32,
        /// Which checks to run
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        /// Seed for the randomized spot checks
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Largest n for the O(m^5) cofactor oracle
        #[arg(long, default_value_t = 16)]
        cofactor_limit: u32,
        /// Also run the exact rational PSD certificate for the Laplacian
        #[arg(long)]
        exact_psd: bool,
        /// Write the JSON lines to this file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Eigenvalues, inertia and the interlacing chain for one even order (JSON)
    Spectrum {
        /// Wheel order; must be even and at least 4
        #[arg(long)]
        n: u32,
        /// Write to this file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn open_sink(out: &Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(io::stdout().lock()),
    })
}

fn write_text(out: &Option<PathBuf>, text: &str) -> io::Result<()> {
    let mut sink = open_sink(out)?;
    sink.write_all(text.as_bytes())?;
    sink.flush()
}

fn fail_usage(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {}", message);
    ExitCode::from(EXIT_USAGE)
}

fn command_exit(err: CommandError) -> ExitCode {
    match err {
        CommandError::Usage(_) => fail_usage(err),
        CommandError::Internal(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(EXIT_VERIFY_FAILED)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Gen { n, object, format, out } => match commands::gen_output(n, object, format) {
            Ok(text) => match write_text(&out, &text) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => fail_usage(e),
            },
            Err(e) => command_exit(e),
        },
        Command::Verify {
            n_min,
            n_max,
            suite,
            seed,
            cofactor_limit,
            exact_psd,
            out,
        } => {
            if n_min > n_max {
                return fail_usage(format!("--n-min {} exceeds --n-max {}", n_min, n_max));
            }
            if n_max < 4 {
                return fail_usage(format!("--n-max {} is below the minimum order 4", n_max));
            }
            let config = VerifyConfig {
                n_min,
                n_max,
                suite,
                seed,
                cofactor_limit,
                exact_psd,
            };
            let mut sink = match open_sink(&out) {
                Ok(sink) => sink,
                Err(e) => return fail_usage(e),
            };
            match suites::run_verify(&config, &mut sink) {
                Ok(summary) => {
                    if let Err(e) = sink.flush() {
                        return fail_usage(e);
                    }
                    eprint!("{}", suites::render_summary(&summary));
                    if summary.all_passed() {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(EXIT_VERIFY_FAILED)
                    }
                }
                Err(e) => fail_usage(e),
            }
        }
        Command::Spectrum { n, out } => match commands::spectrum_output(n) {
            Ok(text) => match write_text(&out, &text) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => fail_usage(e),
            },
            Err(e) => command_exit(e),
        },
    }
}
