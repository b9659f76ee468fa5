//! Run configurations and the table each command produces.

use std::f64::consts::PI;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result, EXIT_OK, EXIT_VERIFICATION};
use crate::generator::GeneratorSpec;
use crate::growth::{auxiliary_bounds, koebe_radius};
use crate::membership::{
    bohr_suite, growth_suite, subordination_suite, SchwarzSpec, DEFAULT_SAMPLE_ORDER, DEFAULT_SEED, MAX_SAMPLE_RADIUS,
};
use crate::output::{format_g15, svg_polyline, Cell, OutputFormat, Table};
use crate::radii::{
    bohr_root, convexity_threshold_modkoebe, eta0, starlikeness_radius, RadiusResult,
};
use crate::THREE_MINUS_TWO_SQRT2;

pub const MIN_GRID: usize = 64;
pub const MIN_ORDER: usize = 16;
pub const DEFAULT_VERIFY_GRID: usize = 256;
pub const DEFAULT_VERIFY_RADII: [f64; 3] = [0.2, 0.5, 0.8];

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParamRange {
    pub from: f64,
    pub to: f64,
    pub step: f64,
}

impl ParamRange {
    /// `from + k·step` for `k = 0, 1, …` up to `to` (inclusive within `1e-9` steps).
    pub fn values(&self) -> Result<Vec<f64>> {
        if !(self.from.is_finite() && self.to.is_finite() && self.step > 0.0 && self.to >= self.from) {
            return Err(Error::InvalidConfig("sweep needs finite from <= to and a positive step".into()));
        }
        let n = ((self.to - self.from) / self.step + 1e-9).floor() as usize;
        if n > 1_000_000 {
            return Err(Error::InvalidConfig("sweep has more than a million points".into()));
        }
        Ok((0..=n).map(|k| self.from + k as f64 * self.step).collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum RadiusCommand {
    Koebe,
    Bohr { alpha: f64 },
    Starlike { gamma: f64, eta: f64, order: f64 },
    Eta0 { gamma: f64 },
    ConvexityThreshold { tol: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum VerifyCommand {
    Growth { samples: usize },
    Bohr { alpha: f64, samples: usize },
    Subordination { samples: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SweepCommand {
    Bohr { range: ParamRange },
    Eta0 { range: ParamRange },
    /// Covering radius as the generator's main parameter varies.
    Koebe { range: ParamRange },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Command {
    Growth,
    Radius { radius: RadiusCommand },
    Plot { rho: f64, samples: usize },
    Verify { verify: VerifyCommand },
    Sweep { sweep: SweepCommand },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub command: Command,
    pub generator: Option<GeneratorSpec>,
    pub radii: Vec<f64>,
    pub grid: usize,
    pub order: usize,
    pub seed: u64,
    pub output_format: OutputFormat,
    pub output_path: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            generator: None,
            radii: Vec::new(),
            grid: DEFAULT_VERIFY_GRID,
            order: DEFAULT_SAMPLE_ORDER,
            seed: DEFAULT_SEED,
            output_format: OutputFormat::Csv,
            output_path: None,
        }
    }

    pub fn with_generator(mut self, spec: GeneratorSpec) -> Self {
        self.generator = Some(spec);
        self
    }

    pub fn with_radii(mut self, radii: Vec<f64>) -> Self {
        self.radii = radii;
        self
    }

    fn generator(&self) -> Result<GeneratorSpec> {
        let g = self.generator.ok_or_else(|| Error::InvalidConfig("this command needs a generator family".into()))?;
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        if self.grid < MIN_GRID {
            return Err(Error::InvalidConfig(format!("grid must be at least {MIN_GRID}")));
        }
        if self.order < MIN_ORDER {
            return Err(Error::InvalidConfig(format!("order must be at least {MIN_ORDER}")));
        }
        if let Some(&r) = self.radii.iter().find(|&&r| !(r > 0.0 && r < 1.0)) {
            return Err(Error::RadiusOutOfRange { value: r, range: "(0, 1)" });
        }
        if let Some(g) = &self.generator {
            g.validate()?;
        }
        if self.output_format == OutputFormat::Svg && !matches!(self.command, Command::Plot { .. }) {
            return Err(Error::InvalidConfig("svg output is only available for plot".into()));
        }
        match self.command {
            Command::Verify { verify: VerifyCommand::Growth { .. } } => {
                if let Some(&r) = self.radii.iter().find(|&&r| r > MAX_SAMPLE_RADIUS) {
                    return Err(Error::InvalidConfig(format!(
                        "r = {r} exceeds the series validity margin {MAX_SAMPLE_RADIUS}"
                    )));
                }
            }
            Command::Plot { rho, samples } => {
                if samples < MIN_GRID {
                    return Err(Error::InvalidConfig(format!("plot needs at least {MIN_GRID} samples")));
                }
                if !(rho > 0.0 && rho <= 1.0) {
                    return Err(Error::RadiusOutOfRange { value: rho, range: "(0, 1]" });
                }
            }
            _ => {}
        }
        Ok(())
    }
}

/// The result of a run: a table, optional SVG, and whether all checks passed.
#[derive(Debug, Clone, PartialEq)]
pub struct RunOutput {
    pub table: Table,
    pub svg: Option<String>,
    pub passed: bool,
    pub seed: Option<u64>,
    /// One line per failed check, naming the sample and where it failed.
    pub failures: Vec<String>,
}

impl RunOutput {
    fn table(table: Table) -> Self {
        Self { table, svg: None, passed: true, seed: None, failures: Vec::new() }
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            EXIT_OK
        } else {
            EXIT_VERIFICATION
        }
    }

    /// Rendering in the requested format.
    pub fn render(&self, format: OutputFormat) -> Result<String> {
        match format {
            OutputFormat::Csv => Ok(self.table.to_csv()),
            OutputFormat::Json => {
                let mut v = json!({ "passed": self.passed, "rows": self.table.to_json_rows() });
                if let Some(seed) = self.seed {
                    v["seed"] = Value::from(seed);
                }
                let mut s = serde_json::to_string_pretty(&v)?;
                s.push('\n');
                Ok(s)
            }
            OutputFormat::Svg => self
                .svg
                .clone()
                .ok_or_else(|| Error::InvalidConfig("svg output is only available for plot".into())),
        }
    }
}

pub fn run(config: &RunConfig) -> Result<RunOutput> {
    config.validate()?;
    match config.command {
        Command::Growth => run_growth(config),
        Command::Radius { radius } => run_radius(config, radius),
        Command::Plot { rho, samples } => run_plot(config, rho, samples),
        Command::Verify { verify } => run_verify(config, verify),
        Command::Sweep { sweep } => run_sweep(config, sweep),
    }
}

fn run_growth(config: &RunConfig) -> Result<RunOutput> {
    let spec = config.generator()?;
    if config.radii.is_empty() {
        return Err(Error::InvalidConfig("growth needs at least one radius".into()));
    }
    let mut t = Table::new(vec!["r", "lower", "upper", "re_bound", "deriv_bound", "length_bound", "sharp"]);
    for &r in &config.radii {
        let b = auxiliary_bounds(&spec, r)?;
        t.push(vec![
            b.r.into(),
            b.lower.into(),
            b.upper.into(),
            b.re_bound.into(),
            b.deriv_bound.into(),
            b.length_bound.into(),
            b.sharp.into(),
        ]);
    }
    Ok(RunOutput::table(t))
}

const RADIUS_COLUMNS: [&str; 5] = ["value", "bracket_lo", "bracket_hi", "residual", "iterations"];

fn radius_cells(r: &RadiusResult) -> Vec<Cell> {
    vec![r.value.into(), r.bracket.0.into(), r.bracket.1.into(), r.residual.into(), r.iterations.into()]
}

fn run_radius(config: &RunConfig, cmd: RadiusCommand) -> Result<RunOutput> {
    let table = match cmd {
        RadiusCommand::Koebe => {
            let k = koebe_radius(&config.generator()?)?;
            let mut t = Table::new(vec!["value", "limit", "limit_step", "steps", "sharp"]);
            t.push(vec![k.value.into(), k.limit.into(), k.limit_step.into(), k.steps.into(), k.sharp.into()]);
            t
        }
        RadiusCommand::Bohr { alpha } => {
            let b = crate::radii::bohr_radius_booth(alpha)?;
            let mut cols = RADIUS_COLUMNS.to_vec();
            cols.extend(["sign_changes", "increasing"]);
            let mut t = Table::new(cols);
            let mut row = radius_cells(&b.result);
            row.extend([b.sign_changes.into(), b.increasing.into()]);
            t.push(row);
            t
        }
        RadiusCommand::Starlike { gamma, eta, order } => {
            let s = starlikeness_radius(gamma, eta, order)?;
            let mut cols = RADIUS_COLUMNS.to_vec();
            cols.push("whole_disk");
            let mut t = Table::new(cols);
            let mut row = radius_cells(&s.result);
            row.push(s.whole_disk.into());
            t.push(row);
            t
        }
        RadiusCommand::Eta0 { gamma } => {
            let mut t = Table::new(RADIUS_COLUMNS.to_vec());
            t.push(radius_cells(&eta0(gamma)?));
            t
        }
        RadiusCommand::ConvexityThreshold { tol } => {
            let mut t = Table::new(RADIUS_COLUMNS.to_vec());
            t.push(radius_cells(&convexity_threshold_modkoebe(tol)?));
            t
        }
    };
    Ok(RunOutput::table(table))
}

fn run_plot(config: &RunConfig, rho: f64, samples: usize) -> Result<RunOutput> {
    let spec = config.generator()?;
    let curve = spec.boundary_curve(rho, samples)?;
    let mut t = Table::new(vec!["theta", "re", "im", "rho"]);
    for (k, w) in curve.iter().enumerate() {
        let theta = 2.0 * PI * k as f64 / samples as f64;
        t.push(vec![theta.into(), w.re.into(), w.im.into(), rho.into()]);
    }
    let svg = Some(svg_polyline(&curve));
    Ok(RunOutput { table: t, svg, passed: true, seed: None, failures: Vec::new() })
}

/// Short comma-free label of a witness for tables.
pub fn witness_label(w: &SchwarzSpec) -> String {
    match w {
        SchwarzSpec::Monomial { k } => format!("monomial:{k}"),
        SchwarzSpec::MoebiusTwist { a } => {
            let sign = if a.im < 0.0 { "" } else { "+" };
            format!("twist:{}{sign}{}i", format_g15(a.re), format_g15(a.im))
        }
        SchwarzSpec::ScaledPoly { coeffs } => format!("poly:{}", coeffs.len() - 1),
    }
}

fn run_verify(config: &RunConfig, cmd: VerifyCommand) -> Result<RunOutput> {
    let seed = config.seed;
    let mut failures = Vec::new();
    let (table, passed) = match cmd {
        VerifyCommand::Growth { samples } => {
            let spec = config.generator()?;
            let radii = if config.radii.is_empty() { DEFAULT_VERIFY_RADII.to_vec() } else { config.radii.clone() };
            let suite = growth_suite(spec, samples, seed, &radii, config.grid, config.order)?;
            let mut t = Table::new(vec![
                "sample", "witness", "r", "lower", "upper", "min_abs", "max_abs", "max_allowance", "violations",
                "passed",
            ]);
            for s in &suite.samples {
                for v in &s.report.violations {
                    failures.push(format!(
                        "growth sample {} ({}): |f| = {} outside [{}, {}] at r = {}, theta = {}",
                        s.index,
                        witness_label(&s.witness),
                        format_g15(v.value),
                        format_g15(v.lower),
                        format_g15(v.upper),
                        format_g15(v.r),
                        format_g15(v.theta)
                    ));
                }
                for rs in &s.report.radii {
                    let violations = s.report.violations.iter().filter(|v| v.r == rs.r).count();
                    t.push(vec![
                        s.index.into(),
                        witness_label(&s.witness).into(),
                        rs.r.into(),
                        rs.lower.into(),
                        rs.upper.into(),
                        rs.min_abs.into(),
                        rs.max_abs.into(),
                        rs.max_allowance.into(),
                        violations.into(),
                        (violations == 0).into(),
                    ]);
                }
            }
            (t, suite.passed())
        }
        VerifyCommand::Bohr { alpha, samples } => {
            let suite = bohr_suite(alpha, samples, seed, config.order)?;
            let mut t = Table::new(vec![
                "sample", "witness", "r", "g_majorant", "f_majorant", "extremal_value", "koebe_radius",
                "slack_subordinate", "slack_extremal", "slack_covering", "passed",
            ]);
            for s in suite.failures() {
                let b = &s.report;
                failures.push(format!(
                    "bohr sample {} ({}): slacks {}, {}, {} at r = {}",
                    s.index,
                    witness_label(&s.witness),
                    format_g15(b.slack_subordinate),
                    format_g15(b.slack_extremal),
                    b.slack_covering.map_or("-".to_string(), format_g15),
                    format_g15(b.r)
                ));
            }
            for s in &suite.samples {
                let b = &s.report;
                t.push(vec![
                    s.index.into(),
                    witness_label(&s.witness).into(),
                    b.r.into(),
                    b.g_majorant.into(),
                    b.f_majorant.into(),
                    b.extremal_value.into(),
                    b.koebe_radius.into(),
                    b.slack_subordinate.into(),
                    b.slack_extremal.into(),
                    b.slack_covering.unwrap_or(f64::NAN).into(),
                    s.passed.into(),
                ]);
            }
            (t, suite.passed())
        }
        VerifyCommand::Subordination { samples } => {
            let spec = config.generator()?;
            let suite = subordination_suite(spec, samples, seed, config.grid, config.order)?;
            let mut t = Table::new(vec!["sample", "witness", "status", "points", "exterior", "passed"]);
            for s in &suite.samples {
                for (rho, theta) in &s.report.exterior {
                    failures.push(format!(
                        "subordination sample {} ({}): f(z)/z outside the dominant's image at rho = {}, theta = {}",
                        s.index,
                        witness_label(&s.witness),
                        format_g15(*rho),
                        format_g15(*theta)
                    ));
                }
                let status = match s.report.status {
                    crate::membership::SubordinationStatus::Verified => "verified",
                    crate::membership::SubordinationStatus::Experimental => "experimental",
                };
                t.push(vec![
                    s.index.into(),
                    witness_label(&s.witness).into(),
                    status.into(),
                    s.report.points.into(),
                    s.report.exterior.len().into(),
                    s.passed.into(),
                ]);
            }
            (t, suite.passed())
        }
    };
    Ok(RunOutput { table, svg: None, passed, seed: Some(seed), failures })
}

fn run_sweep(config: &RunConfig, cmd: SweepCommand) -> Result<RunOutput> {
    let mut t;
    let mut prev: Option<f64> = None;
    // true when the value did not increase from the previous row
    let mut decreasing = |v: f64| {
        let d = prev.map_or(true, |p| v <= p);
        if v.is_finite() {
            prev = Some(v);
        }
        d
    };
    match cmd {
        SweepCommand::Bohr { range } => {
            t = Table::new(vec!["alpha", "value", "residual", "sign_changes", "increasing", "in_hypothesis", "decreasing"]);
            for alpha in range.values()? {
                let in_hypothesis = alpha > 0.0 && alpha <= THREE_MINUS_TWO_SQRT2 * (1.0 + 1e-12);
                match bohr_root(alpha) {
                    Ok(b) => {
                        let v = b.result.value;
                        t.push(vec![
                            alpha.into(),
                            v.into(),
                            b.result.residual.into(),
                            b.sign_changes.into(),
                            b.increasing.into(),
                            in_hypothesis.into(),
                            decreasing(v).into(),
                        ]);
                    }
                    Err(_) => t.push(vec![
                        alpha.into(),
                        f64::NAN.into(),
                        f64::NAN.into(),
                        0usize.into(),
                        false.into(),
                        false.into(),
                        false.into(),
                    ]),
                }
            }
        }
        SweepCommand::Eta0 { range } => {
            t = Table::new(vec!["gamma", "value", "residual", "iterations", "in_hypothesis", "decreasing"]);
            for gamma in range.values()? {
                match eta0(gamma) {
                    Ok(r) => t.push(vec![
                        gamma.into(),
                        r.value.into(),
                        r.residual.into(),
                        r.iterations.into(),
                        true.into(),
                        decreasing(r.value).into(),
                    ]),
                    Err(_) => t.push(vec![
                        gamma.into(),
                        f64::NAN.into(),
                        f64::NAN.into(),
                        0usize.into(),
                        false.into(),
                        false.into(),
                    ]),
                }
            }
        }
        SweepCommand::Koebe { range } => {
            let base = config.generator()?;
            t = Table::new(vec!["parameter", "value", "limit", "limit_step", "sharp", "in_hypothesis", "decreasing"]);
            for x in range.values()? {
                match base.with_primary(x).and_then(|g| koebe_radius(&g)) {
                    Ok(k) => t.push(vec![
                        x.into(),
                        k.value.into(),
                        k.limit.into(),
                        k.limit_step.into(),
                        k.sharp.into(),
                        true.into(),
                        decreasing(k.value).into(),
                    ]),
                    Err(_) => t.push(vec![
                        x.into(),
                        f64::NAN.into(),
                        f64::NAN.into(),
                        f64::NAN.into(),
                        false.into(),
                        false.into(),
                        false.into(),
                    ]),
                }
            }
        }
    }
    Ok(RunOutput::table(t))
}
