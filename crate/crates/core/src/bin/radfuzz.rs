use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use radfuzz::analysis::{CoherenceMode, DEFAULT_TOL};
use radfuzz::geometry::Exponent;
use radfuzz::interface::commands::{self, CurveKind, CurveSpec, Outcome, RadialQuery, EXIT_INVALID};
use radfuzz::interface::ActSpec;
use radfuzz::radial_sets::{RadialCheck, Representation};

/// Radial fuzzy systems: inference, coherence, covering and curve export.
///
/// Exit codes: 0 success, 2 parse or validation error, 3 incoherent,
/// 4 no rule fires, 5 minimiser did not converge.
#[derive(Parser)]
#[command(name = "radfuzz", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a rule base at one input point.
    Eval {
        /// Rule-base document (JSON).
        file: PathBuf,
        /// Input point, comma separated (e.g. 0,1.5e-1).
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        /// Override the document's representation: conjunctive or implicative.
        #[arg(long)]
        representation: Option<Representation>,
    },
    /// Check the pairwise coherence of an implicative rule base.
    Coherence {
        file: PathBuf,
        /// sufficient (closed-form inequality) or exact (pairwise minimisation).
        #[arg(long, default_value = "sufficient")]
        mode: CoherenceMode,
        /// Tolerance of the exact minimisation.
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Degree of covering on a grid.
    Doc {
        file: PathBuf,
        /// Search box as lo:hi per axis, comma separated; defaults to the document's input_box.
        #[arg(long = "box", allow_hyphen_values = true)]
        input_box: Option<String>,
        /// Grid points per axis, one value or one per axis (default 256, capped at 1e6 nodes).
        #[arg(long)]
        resolution: Option<String>,
    },
    /// Export curve data as CSV.
    Curves {
        file: PathBuf,
        /// membership (x,rule_1..), consequent (y,rule_1..), relation (y,value) or output (x,y_star,status).
        #[arg(long, default_value = "membership")]
        what: CurveKind,
        /// Swept input axis, 1-based.
        #[arg(long, default_value_t = 1)]
        axis: usize,
        /// Sweep range lo:hi.
        #[arg(long, allow_hyphen_values = true)]
        range: Option<String>,
        /// Number of rows.
        #[arg(long, default_value_t = 201)]
        points: usize,
        /// Input point for relation, base point for the axis sweeps.
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
        /// Override the document's representation.
        #[arg(long)]
        representation: Option<Representation>,
    },
    /// Sample the radial identity for a t-norm, act function and exponent.
    VerifyRadial {
        /// Check the triple of this document instead of the flags.
        file: Option<PathBuf>,
        /// minimum, product or lukasiewicz.
        #[arg(long, default_value = "minimum")]
        tnorm: String,
        /// triangular, gaussian or generator.
        #[arg(long, default_value = "triangular")]
        act: String,
        /// Scale q of the generator act.
        #[arg(long)]
        q: Option<f64>,
        /// Power of the generator act (defaults to --p).
        #[arg(long)]
        act_p: Option<f64>,
        /// Norm exponent, a number >= 1 or inf.
        #[arg(long, default_value = "inf")]
        p: Exponent,
        /// Input dimension.
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn read(path: &PathBuf) -> Result<String, Outcome> {
    std::fs::read_to_string(path).map_err(|e| Outcome {
        stdout: String::new(),
        stderr: format!("reason: cannot read {}: {e}\n", path.display()),
        code: EXIT_INVALID,
    })
}

fn bad_arg(e: radfuzz::FuzzyError) -> Outcome {
    Outcome {
        stdout: String::new(),
        stderr: format!("reason: {}\n", commands::reason(&e)),
        code: EXIT_INVALID,
    }
}

fn dispatch(cli: Cli) -> Result<Outcome, Outcome> {
    Ok(match cli.command {
        Command::Eval { file, x, representation } => {
            let x = commands::parse_vector(&x).map_err(bad_arg)?;
            commands::eval(&read(&file)?, &x, representation)
        }
        Command::Coherence { file, mode, tol } => commands::coherence(&read(&file)?, mode, tol),
        Command::Doc {
            file,
            input_box,
            resolution,
        } => {
            let bx = input_box.map(|s| commands::parse_box(&s)).transpose().map_err(bad_arg)?;
            let res = resolution
                .map(|s| commands::parse_resolution(&s))
                .transpose()
                .map_err(bad_arg)?
                .unwrap_or_default();
            commands::doc(&read(&file)?, bx.as_ref(), &res)
        }
        Command::Curves {
            file,
            what,
            axis,
            range,
            points,
            x,
            representation,
        } => {
            let spec = CurveSpec {
                what,
                axis: axis.checked_sub(1).ok_or_else(|| {
                    bad_arg(radfuzz::FuzzyError::InvalidParameter("--axis is 1-based".into()))
                })?,
                range: range.map(|s| commands::parse_range(&s)).transpose().map_err(bad_arg)?,
                points,
                x: x.map(|s| commands::parse_vector(&s)).transpose().map_err(bad_arg)?,
                representation,
            };
            commands::curves(&read(&file)?, &spec)
        }
        Command::VerifyRadial {
            file,
            tnorm,
            act,
            q,
            act_p,
            p,
            n,
            samples,
            tol,
            seed,
        } => {
            let check = RadialCheck { samples, tol, seed };
            match file {
                Some(file) => commands::verify_radial_document(&read(&file)?, check),
                None => commands::verify_radial(&RadialQuery {
                    tnorm,
                    act: ActSpec {
                        family: act,
                        q,
                        p: act_p,
                    },
                    p,
                    n,
                    check,
                }),
            }
        }
    })
}

fn main() -> ExitCode {
    let out = dispatch(Cli::parse()).unwrap_or_else(|e| e);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    ExitCode::from(out.code as u8)
}
