use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use starlike_core::error::{EXIT_INVALID_CONFIG, EXIT_OK, EXIT_VERIFICATION};
use starlike_core::fixtures::{regenerate_fixtures, FixtureStatus};
use starlike_core::output::OutputFormat;
use starlike_core::run::{
    run, Command, ParamRange, RadiusCommand, RunConfig, SweepCommand, VerifyCommand, DEFAULT_VERIFY_GRID,
};
use starlike_core::{Error, GeneratorSpec};

/// Bounds, radii and membership checks for classes of starlike functions
/// defined by subordination to a generator.
#[derive(Parser, Debug)]
#[command(name = "starlike", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Seed for randomized suites; the STARLIKE_SEED variable takes precedence.
    #[arg(long, default_value_t = 7, global = true)]
    seed: u64,
    /// Circle samples for verification grids.
    #[arg(long, default_value_t = DEFAULT_VERIFY_GRID, global = true)]
    grid: usize,
    /// Truncation order of sample series.
    #[arg(long, default_value_t = 128, global = true)]
    series_order: usize,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Format {
    Csv,
    Json,
    Svg,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Csv => OutputFormat::Csv,
            Format::Json => OutputFormat::Json,
            Format::Svg => OutputFormat::Svg,
        }
    }
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Family {
    Booth,
    Cissoid,
    Modkoebe,
    Mobius,
    Linear,
    Dilog,
    Parabola,
    Secant,
}

#[derive(Args, Debug, Clone)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long, allow_negative_numbers = true)]
    alpha: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    beta: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    gamma: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    eta: Option<f64>,
}

impl FamilyArgs {
    /// The generator, with `primary` standing in for a missing main parameter.
    fn spec(&self, primary: Option<f64>) -> Result<GeneratorSpec, Error> {
        let need = |v: Option<f64>, name: &str| {
            v.or(primary)
                .ok_or_else(|| Error::InvalidConfig(format!("{:?} needs --{name}", self.family).to_lowercase()))
        };
        let need_secondary = |v: Option<f64>, name: &str| {
            v.ok_or_else(|| Error::InvalidConfig(format!("{:?} needs --{name}", self.family).to_lowercase()))
        };
        let spec = match self.family {
            Family::Booth => GeneratorSpec::Booth { alpha: need(self.alpha, "alpha")? },
            Family::Cissoid => GeneratorSpec::Cissoid { beta: need(self.beta, "beta")? },
            Family::Modkoebe => {
                GeneratorSpec::ModKoebe { gamma: need_secondary(self.gamma, "gamma")?, eta: need(self.eta, "eta")? }
            }
            Family::Mobius => {
                GeneratorSpec::Mobius { alpha: need(self.alpha, "alpha")?, beta: need_secondary(self.beta, "beta")? }
            }
            Family::Linear => GeneratorSpec::Linear { eta: need(self.eta, "eta")? },
            Family::Dilog => GeneratorSpec::DiLog,
            Family::Parabola => GeneratorSpec::Parabola,
            Family::Secant => GeneratorSpec::Secant { beta: need(self.beta, "beta")? },
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[derive(Args, Debug, Clone)]
struct RangeArgs {
    #[arg(long, allow_negative_numbers = true)]
    from: f64,
    #[arg(long, allow_negative_numbers = true)]
    to: f64,
    #[arg(long)]
    step: f64,
}

impl From<&RangeArgs> for ParamRange {
    fn from(r: &RangeArgs) -> Self {
        ParamRange { from: r.from, to: r.to, step: r.step }
    }
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Growth, real-part, derivative and arc-length bounds.
    Growth {
        #[command(flatten)]
        family: FamilyArgs,
        /// Radii in (0, 1); repeat or separate with commas.
        #[arg(long = "r", value_delimiter = ',', allow_negative_numbers = true)]
        radii: Vec<f64>,
    },
    /// Covering, Bohr, starlikeness and convexity radii.
    Radius {
        #[command(subcommand)]
        which: RadiusCmd,
    },
    /// Boundary curve of the generator's image.
    Plot {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 0.999)]
        rho: f64,
        #[arg(long, default_value_t = 4096)]
        samples: usize,
    },
    /// Randomized checks of the theorems on constructed class members.
    Verify {
        #[command(subcommand)]
        which: VerifyCmd,
    },
    /// Tabulate a radius over a parameter range.
    Sweep {
        #[command(subcommand)]
        which: SweepCmd,
    },
    /// Rebuild golden tables and compare their checksums.
    Fixtures {
        #[arg(long, default_value = "fixtures")]
        root: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum RadiusCmd {
    Koebe {
        #[command(flatten)]
        family: FamilyArgs,
    },
    Bohr {
        #[arg(long)]
        alpha: f64,
    },
    Starlike {
        #[arg(long)]
        gamma: f64,
        #[arg(long)]
        eta: f64,
        /// Order of starlikeness in [0, 1).
        #[arg(long, default_value_t = 0.0)]
        order: f64,
    },
    Eta0 {
        #[arg(long)]
        gamma: f64,
    },
    ConvexityThreshold {
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyCmd {
    Growth {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Radii in (0, 0.95]; defaults to 0.2, 0.5, 0.8.
        #[arg(long = "r", value_delimiter = ',')]
        radii: Vec<f64>,
    },
    Bohr {
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value_t = 25)]
        samples: usize,
    },
    Subordination {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
}

#[derive(Subcommand, Debug)]
enum SweepCmd {
    Bohr {
        #[command(flatten)]
        range: RangeArgs,
    },
    Eta0 {
        #[command(flatten)]
        range: RangeArgs,
    },
    Koebe {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        range: RangeArgs,
    },
}

fn seed(cli: &Cli) -> Result<u64, Error> {
    match std::env::var("STARLIKE_SEED") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::InvalidConfig(format!("STARLIKE_SEED must be an unsigned integer, got {s:?}"))),
        Err(_) => Ok(cli.seed),
    }
}

fn config(cli: &Cli) -> Result<RunConfig, Error> {
    let (command, generator, radii) = match &cli.command {
        Cmd::Growth { family, radii } => (Command::Growth, Some(family.spec(None)?), radii.clone()),
        Cmd::Radius { which } => {
            let (radius, generator) = match which {
                RadiusCmd::Koebe { family } => (RadiusCommand::Koebe, Some(family.spec(None)?)),
                RadiusCmd::Bohr { alpha } => (RadiusCommand::Bohr { alpha: *alpha }, None),
                RadiusCmd::Starlike { gamma, eta, order } => {
                    (RadiusCommand::Starlike { gamma: *gamma, eta: *eta, order: *order }, None)
                }
                RadiusCmd::Eta0 { gamma } => (RadiusCommand::Eta0 { gamma: *gamma }, None),
                RadiusCmd::ConvexityThreshold { tol } => (RadiusCommand::ConvexityThreshold { tol: *tol }, None),
            };
            (Command::Radius { radius }, generator, Vec::new())
        }
        Cmd::Plot { family, rho, samples } => {
            (Command::Plot { rho: *rho, samples: *samples }, Some(family.spec(None)?), Vec::new())
        }
        Cmd::Verify { which } => match which {
            VerifyCmd::Growth { family, samples, radii } => (
                Command::Verify { verify: VerifyCommand::Growth { samples: *samples } },
                Some(family.spec(None)?),
                radii.clone(),
            ),
            VerifyCmd::Bohr { alpha, samples } => (
                Command::Verify { verify: VerifyCommand::Bohr { alpha: *alpha, samples: *samples } },
                None,
                Vec::new(),
            ),
            VerifyCmd::Subordination { family, samples } => (
                Command::Verify { verify: VerifyCommand::Subordination { samples: *samples } },
                Some(family.spec(None)?),
                Vec::new(),
            ),
        },
        Cmd::Sweep { which } => match which {
            SweepCmd::Bohr { range } => (Command::Sweep { sweep: SweepCommand::Bohr { range: range.into() } }, None, Vec::new()),
            SweepCmd::Eta0 { range } => (Command::Sweep { sweep: SweepCommand::Eta0 { range: range.into() } }, None, Vec::new()),
            SweepCmd::Koebe { family, range } => (
                Command::Sweep { sweep: SweepCommand::Koebe { range: range.into() } },
                Some(family.spec(Some(range.from))?),
                Vec::new(),
            ),
        },
        Cmd::Fixtures { .. } => unreachable!("fixtures has no run configuration"),
    };
    Ok(RunConfig {
        command,
        generator,
        radii,
        grid: cli.grid,
        order: cli.series_order,
        seed: seed(cli)?,
        output_format: cli.format.into(),
        output_path: cli.output.clone(),
    })
}

fn emit(path: Option<&PathBuf>, text: &str) -> Result<(), Error> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn fixtures(root: &PathBuf) -> Result<i32, Error> {
    fs::create_dir_all(root)?;
    let report = regenerate_fixtures(root)?;
    for t in &report.tables {
        let status = match t.status {
            FixtureStatus::Created => "created",
            FixtureStatus::Match => "match",
            FixtureStatus::Mismatch => "mismatch",
        };
        println!("{status} {}", t.name);
    }
    Ok(if report.passed() { EXIT_OK } else { EXIT_VERIFICATION })
}

fn execute(cli: &Cli) -> Result<i32, Error> {
    if let Cmd::Fixtures { root } = &cli.command {
        return fixtures(root);
    }
    let cfg = config(cli)?;
    let out = run(&cfg)?;
    emit(cfg.output_path.as_ref(), &out.render(cfg.output_format)?)?;
    for line in &out.failures {
        eprintln!("FAIL {line}");
    }
    Ok(out.exit_code())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID_CONFIG } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let code = match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code.clamp(0, 255) as u8)
}
