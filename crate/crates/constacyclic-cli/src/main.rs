use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use constacyclic_cli::commands::{
    cmd_check, cmd_classify, cmd_dual, cmd_enumerate, cmd_example, cmd_sweep, CheckMode,
};

/// Exact constacyclic codes of prime-power length over F_{p^m} + uF_{p^m}:
/// classification, twisted duals, self-orthogonality, and differential
/// verification against a brute-force oracle.
#[derive(Parser)]
#[command(name = "constacyclic", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a spec file and print its normalized classification.
    Classify {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Compute the twisted dual in closed form.
    Dual {
        #[arg(long)]
        spec: PathBuf,
        /// Automorphism as `h=<int>,eps=<coeffs>` (coefficients low-to-high).
        #[arg(long)]
        sigma: String,
        /// Also compute the brute-force dual and compare spans.
        #[arg(long)]
        verify: bool,
        /// Write the dual as JSON to this path.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide a predicate; exit 0 when it holds, 1 when it does not.
    Check {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        sigma: String,
        #[arg(long = "self-orthogonal", conflicts_with = "self_dual")]
        self_orthogonal: bool,
        #[arg(long = "self-dual")]
        self_dual: bool,
    },
    /// List every codeword of the code a spec file denotes.
    Enumerate {
        #[arg(long)]
        spec: PathBuf,
        /// Refuse when the code has more codewords than this.
        #[arg(long)]
        cap: Option<u128>,
    },
    /// Run the differential sweep described by a config file.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        cap: Option<u128>,
        /// Write the line-delimited record log to this path.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rebuild one of the three bundled worked examples from its matrix.
    Example { which: u8 },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Classify { spec } => cmd_classify(&spec),
        Command::Dual {
            spec,
            sigma,
            verify,
            out,
        } => cmd_dual(&spec, &sigma, verify, out.as_deref()),
        Command::Check {
            spec,
            sigma,
            self_orthogonal,
            self_dual,
        } => {
            let mode = match (self_orthogonal, self_dual) {
                (true, false) => CheckMode::SelfOrthogonal,
                (false, true) => CheckMode::SelfDual,
                _ => {
                    eprintln!("pass exactly one of --self-orthogonal or --self-dual");
                    return ExitCode::from(2);
                }
            };
            cmd_check(&spec, &sigma, mode)
        }
        Command::Enumerate { spec, cap } => cmd_enumerate(&spec, cap),
        Command::Sweep { config, cap, out } => cmd_sweep(&config, cap, out.as_deref()),
        Command::Example { which } => cmd_example(which),
    };
    match result {
        Ok(output) => {
            print!("{}", output.text);
            ExitCode::from(u8::try_from(output.exit).unwrap_or(2))
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
