//! Golden fixture tables with SHA-256 checksums for drift detection.
//!
//! Layout: `<root>/<family>/<command>.csv` plus `<root>/manifest.json`
//! holding each table's run configuration and checksum.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::generator::GeneratorSpec;
use crate::run::{run, Command, ParamRange, RadiusCommand, RunConfig, SweepCommand};
use crate::THREE_MINUS_TWO_SQRT2;

pub const MANIFEST: &str = "manifest.json";
const FIGURE_SAMPLES: usize = 512;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FixtureTable {
    pub name: String,
    /// Path of the CSV relative to the fixtures root.
    pub path: String,
    pub config: RunConfig,
    pub checksum: String,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub tables: Vec<FixtureTable>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FixtureStatus {
    Created,
    Match,
    Mismatch,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FixtureOutcome {
    pub name: String,
    pub status: FixtureStatus,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FixtureReport {
    pub tables: Vec<FixtureOutcome>,
}

impl FixtureReport {
    pub fn passed(&self) -> bool {
        self.tables.iter().all(|t| t.status != FixtureStatus::Mismatch)
    }
}

/// Hex SHA-256 of the canonical CSV text.
pub fn checksum(csv: &str) -> String {
    hex::encode(Sha256::digest(canonicalize(csv).as_bytes()))
}

/// LF line endings and a single trailing newline.
pub fn canonicalize(csv: &str) -> String {
    let mut s = csv.replace("\r\n", "\n");
    while s.ends_with("\n\n") {
        s.pop();
    }
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn growth(name: &str, spec: GeneratorSpec) -> (String, RunConfig) {
    let radii = (1..=9).map(|k| k as f64 / 10.0).collect();
    (format!("{name}/growth.csv"), RunConfig::new(Command::Growth).with_generator(spec).with_radii(radii))
}

/// The tables the fixture set must cover, in report order.
pub fn default_tables() -> Vec<(String, RunConfig)> {
    let mut v = vec![
        growth("booth", GeneratorSpec::Booth { alpha: 0.25 }),
        growth("cissoid", GeneratorSpec::Cissoid { beta: 0.5 }),
        growth("modkoebe", GeneratorSpec::ModKoebe { gamma: 0.5, eta: 0.2 }),
        growth("mobius", GeneratorSpec::Mobius { alpha: 0.5, beta: 1.0 }),
        growth("linear", GeneratorSpec::Linear { eta: 1.0 }),
    ];
    v.push((
        "booth/sweep-bohr.csv".into(),
        RunConfig::new(Command::Sweep {
            sweep: SweepCommand::Bohr { range: ParamRange { from: 0.01, to: THREE_MINUS_TWO_SQRT2, step: 0.01 } },
        }),
    ));
    v.push((
        "modkoebe/sweep-eta0.csv".into(),
        RunConfig::new(Command::Sweep {
            sweep: SweepCommand::Eta0 { range: ParamRange { from: 0.1, to: 0.9, step: 0.1 } },
        }),
    ));
    v.push((
        "modkoebe/radius-convexity-threshold.csv".into(),
        RunConfig::new(Command::Radius { radius: RadiusCommand::ConvexityThreshold { tol: 1e-12 } }),
    ));
    v.push((
        "dilog/plot.csv".into(),
        RunConfig::new(Command::Plot { rho: 0.999, samples: FIGURE_SAMPLES }).with_generator(GeneratorSpec::DiLog),
    ));
    v.push((
        "secant/plot.csv".into(),
        RunConfig::new(Command::Plot { rho: 1.0, samples: FIGURE_SAMPLES })
            .with_generator(GeneratorSpec::Secant { beta: 1.0 }),
    ));
    v
}

fn render(config: &RunConfig) -> Result<String> {
    Ok(canonicalize(&run(config)?.table.to_csv()))
}

fn write(root: &Path, rel: &str, csv: &str) -> Result<()> {
    let path = root.join(rel);
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    fs::write(path, csv)?;
    Ok(())
}

/// Rebuilds every table. Tables already in the manifest are compared with
/// their stored checksum and left untouched on mismatch; tables missing from
/// the manifest are written and recorded as created.
pub fn regenerate_fixtures(root: &Path) -> Result<FixtureReport> {
    if !root.is_dir() {
        return Err(Error::InvalidConfig(format!("fixtures directory {} does not exist", root.display())));
    }
    let manifest_path = root.join(MANIFEST);
    let mut manifest: Manifest = if manifest_path.exists() {
        serde_json::from_str(&fs::read_to_string(&manifest_path)?)?
    } else {
        Manifest::default()
    };
    let mut outcomes = Vec::new();
    for table in &manifest.tables {
        let csv = render(&table.config)?;
        let actual = checksum(&csv);
        let status = if actual == table.checksum {
            write(root, &table.path, &csv)?;
            FixtureStatus::Match
        } else {
            FixtureStatus::Mismatch
        };
        outcomes.push(FixtureOutcome { name: table.name.clone(), status, expected: table.checksum.clone(), actual });
    }
    for (path, config) in default_tables() {
        let name = path.trim_end_matches(".csv").to_string();
        if manifest.tables.iter().any(|t| t.name == name) {
            continue;
        }
        let csv = render(&config)?;
        let sum = checksum(&csv);
        write(root, &path, &csv)?;
        outcomes.push(FixtureOutcome {
            name: name.clone(),
            status: FixtureStatus::Created,
            expected: sum.clone(),
            actual: sum.clone(),
        });
        manifest.tables.push(FixtureTable { name, path, config, checksum: sum });
    }
    let mut text = serde_json::to_string_pretty(&manifest)?;
    text.push('\n');
    fs::write(manifest_path, text)?;
    Ok(FixtureReport { tables: outcomes })
}
