use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use wigfree::builtin::{self, BuiltinName, BuiltinParams, System};
use wigfree::error::{EXIT_CHECK_FAILED, EXIT_OK};
use wigfree::grid::{Evaluator, GridSpec, Method};
use wigfree::output::{self, Format};
use wigfree::wavefile::WavefunctionSpec;
use wigfree::{check, CliError};
use wigfree_core::oracle::wigner_quadrature_adaptive;

#[derive(Parser)]
#[command(name = "wigfree", version, about = "Closed-form Wigner functions without phase-space integrals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate W(q, p) at a single point
    Eval {
        #[command(flatten)]
        source: Source,
        #[arg(long, allow_negative_numbers = true)]
        q: f64,
        #[arg(long, allow_negative_numbers = true)]
        p: f64,
        #[arg(long, value_enum, default_value_t = Mode::Closed)]
        mode: Mode,
        /// Gauss–Hermite order for the quadrature
        #[arg(long, default_value_t = 256)]
        order: usize,
        /// Use adaptive quadrature with this tolerance instead of a fixed order
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Evaluate W on a rectangular grid
    Grid {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        mode: Method,
        #[arg(long, default_value_t = 256)]
        order: usize,
        /// Output file; standard output if omitted
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run normalization, marginal, realness and quadrature checks
    Check {
        #[command(flatten)]
        source: Source,
        /// Allowed closed-form vs quadrature difference, relative to max(1, |W|)
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long, default_value_t = 256)]
        order: usize,
    },
    /// List or emit the built-in systems
    Builtin {
        #[command(subcommand)]
        action: BuiltinAction,
    },
}

#[derive(Subcommand)]
enum BuiltinAction {
    /// List the available systems
    List,
    /// Print a system as a wavefunction file
    Emit {
        #[arg(value_enum)]
        name: BuiltinName,
        #[command(flatten)]
        params: ParamArgs,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Closed,
    Quad,
    Both,
}

#[derive(Args)]
struct Source {
    /// Wavefunction file (JSON); `-` reads standard input
    #[arg(required_unless_present = "builtin", conflicts_with = "builtin")]
    spec: Option<PathBuf>,
    /// Use a built-in system instead of a file
    #[arg(long, value_enum)]
    builtin: Option<BuiltinName>,
    #[command(flatten)]
    params: ParamArgs,
}

#[derive(Args)]
struct ParamArgs {
    #[arg(long, default_value_t = 0)]
    n: usize,
    #[arg(long, default_value_t = 1.0)]
    alpha: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    q0: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    p0: f64,
    #[arg(long, default_value_t = 1.0)]
    dq: f64,
    #[arg(long, default_value_t = 1.0)]
    hbar: f64,
}

#[derive(Args)]
struct GridArgs {
    #[arg(long, default_value_t = -4.0, allow_negative_numbers = true)]
    q_min: f64,
    #[arg(long, default_value_t = 4.0, allow_negative_numbers = true)]
    q_max: f64,
    #[arg(long, default_value_t = -4.0, allow_negative_numbers = true)]
    p_min: f64,
    #[arg(long, default_value_t = 4.0, allow_negative_numbers = true)]
    p_max: f64,
    #[arg(long, default_value_t = 17)]
    nq: usize,
    #[arg(long, default_value_t = 17)]
    np: usize,
}

impl ParamArgs {
    fn params(&self) -> BuiltinParams {
        BuiltinParams {
            n: self.n,
            alpha: self.alpha,
            q0: self.q0,
            p0: self.p0,
            dq: self.dq,
            hbar: self.hbar,
        }
    }
}

impl Source {
    fn load(&self) -> Result<System, CliError> {
        match (&self.spec, self.builtin) {
            (_, Some(name)) => builtin::build(name, &self.params.params()),
            (Some(path), None) => Ok(System::Custom {
                psi: WavefunctionSpec::load(path)?.to_wavefunction()?,
            }),
            (None, None) => Err(CliError::input("no wavefunction given")),
        }
    }
}

fn stdout_error(e: io::Error) -> CliError {
    CliError::io("writing standard output", e)
}

fn run(cli: Cli) -> Result<i32, CliError> {
    wigfree::apply_degree_cap_env()?;
    match cli.command {
        Command::Eval {
            source,
            q,
            p,
            mode,
            order,
            tol,
        } => {
            let system = source.load()?;
            let psi = system.wavefunction();
            let mut out = io::stdout().lock();
            let mut closed = None;
            if mode != Mode::Quad {
                let w = Evaluator::new(psi, Method::Closed, order)?.at(q, p)?;
                writeln!(out, "closed\t{w:.16e}").map_err(stdout_error)?;
                closed = Some(w);
            }
            if mode != Mode::Closed {
                let (w, used) = match tol {
                    Some(tol) => wigner_quadrature_adaptive(psi, q, p, tol)?,
                    None => (Evaluator::new(psi, Method::Quad, order)?.at(q, p)?, order),
                };
                writeln!(out, "quad\t{w:.16e}\torder={used}").map_err(stdout_error)?;
                if let Some(c) = closed {
                    writeln!(out, "diff\t{:.16e}", (c - w).abs()).map_err(stdout_error)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Grid {
            source,
            grid,
            format,
            mode,
            order,
            output,
        } => {
            let spec = GridSpec::new(grid.q_min, grid.q_max, grid.p_min, grid.p_max, grid.nq, grid.np)?;
            let system = source.load()?;
            let values = Evaluator::new(system.wavefunction(), mode, order)?.grid(&spec)?;
            let write = |out: &mut dyn Write| -> io::Result<()> {
                let mut out = BufWriter::new(out);
                match format {
                    Format::Csv => output::write_csv(&mut out, &spec, &values)?,
                    Format::Json => output::write_json(&mut out, &spec, mode, &values)?,
                    Format::Pgm => output::write_pgm(&mut out, &spec, &values)?,
                }
                out.flush()
            };
            match output {
                Some(path) => {
                    let context = format!("writing {}", path.display());
                    let mut file = File::create(&path).map_err(|e| CliError::io(context.clone(), e))?;
                    write(&mut file).map_err(|e| CliError::io(context, e))?;
                }
                None => write(&mut io::stdout().lock()).map_err(stdout_error)?,
            }
            Ok(EXIT_OK)
        }
        Command::Check { source, tol, order } => {
            let system = source.load()?;
            let report = check::run(&system, tol, order)?;
            let mut out = io::stdout().lock();
            writeln!(out, "check {}", report.label).map_err(stdout_error)?;
            for line in &report.lines {
                writeln!(out, "{line}").map_err(stdout_error)?;
            }
            let failed = report.lines.iter().filter(|l| !l.passed).count();
            if failed == 0 {
                writeln!(out, "all {} checks passed", report.lines.len()).map_err(stdout_error)?;
                Ok(EXIT_OK)
            } else {
                writeln!(out, "{failed} of {} checks failed", report.lines.len()).map_err(stdout_error)?;
                Ok(EXIT_CHECK_FAILED)
            }
        }
        Command::Builtin { action } => {
            let mut out = io::stdout().lock();
            match action {
                BuiltinAction::List => {
                    for name in BuiltinName::ALL {
                        writeln!(out, "{:<9} {}", name.as_str(), name.description()).map_err(stdout_error)?;
                    }
                }
                BuiltinAction::Emit { name, params } => {
                    let system = builtin::build(name, &params.params())?;
                    let spec = WavefunctionSpec::from_wavefunction(system.wavefunction());
                    writeln!(out, "{}", spec.to_json()).map_err(stdout_error)?;
                }
            }
            Ok(EXIT_OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("wigfree: error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
