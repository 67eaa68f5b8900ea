//! Command-line front end: polynomials with their closed-form checks,
//! verification suites, dimension tables and the sum identities.
//!
//! A command line is first turned into a [`JobSpec`], which is what
//! actually runs. Reports are line-delimited JSON; the process exits with
//! 0 when every check holds, 1 when a check fails or the report is
//! incomplete, and 2 on input errors.

mod args;
mod commands;
mod suites;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use args::{Cli, JobArgs, JobCommand, Subcommand};

use crate::combinatorics::Partition;
use crate::dimensions::Space;
use crate::exactalg::{Family, Rat};
use crate::{Error, Result};

/// Environment variable capping `|λ|·n` for polynomial constructions.
pub const MAX_CELLS_VAR: &str = "BCNQKIT_MAX_CELLS";
pub const DEFAULT_MAX_CELLS: u64 = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Poly,
    Verify,
    Dims,
    Identities,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Eigen,
    Orthogonality,
    Evaluation,
    DimensionPaths,
    QSeries,
}

impl Suite {
    pub const ALL: [Suite; 5] =
        [Suite::Eigen, Suite::Orthogonality, Suite::Evaluation, Suite::DimensionPaths, Suite::QSeries];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Eigen => "eigen",
            Suite::Orthogonality => "orthogonality",
            Suite::Evaluation => "evaluation",
            Suite::DimensionPaths => "dimension-paths",
            Suite::QSeries => "q-series",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Table,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<OutputFormat> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "table" => Ok(OutputFormat::Table),
            _ => Err(Error::InvalidInput(format!("unknown format {s:?}"))),
        }
    }
}

/// Everything needed to rerun a command. Round-trips through JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JobSpec {
    pub command: Command,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<Family>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub space: Option<Space>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub suite: Option<Suite>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_weight: Option<u64>,
    /// Largest series length for `q-series`, or `m` for the q-factorial check.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max: Option<u32>,
    /// Parts of `λ`, largest first.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Vec<u32>>,
    /// Explicit `name = value` parameters; excludes `seeds`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<BTreeMap<String, Rat>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub seeds: Vec<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub t: Vec<Rat>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub q: Vec<Rat>,
    #[serde(default)]
    pub format: OutputFormat,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out: Option<PathBuf>,
}

impl JobSpec {
    pub fn new(command: Command) -> JobSpec {
        JobSpec {
            command,
            family: None,
            space: None,
            suite: None,
            n: None,
            d: None,
            k: None,
            max_weight: None,
            max: None,
            lambda: None,
            params: None,
            seeds: Vec::new(),
            t: Vec::new(),
            q: Vec::new(),
            format: OutputFormat::Json,
            out: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.params.is_some() && !self.seeds.is_empty() {
            return Err(Error::InvalidInput("--params and --seed are mutually exclusive".into()));
        }
        if self.command != Command::Dims && self.format != OutputFormat::Json {
            return Err(Error::InvalidInput("only dims supports csv and table output".into()));
        }
        Ok(())
    }

    /// `λ` in context `n`; `n` defaults to the number of parts.
    fn partition(&self) -> Result<Partition> {
        let parts = self
            .lambda
            .as_ref()
            .ok_or_else(|| Error::InvalidInput("--lambda is required".into()))?;
        let n = self.n.unwrap_or_else(|| parts.iter().filter(|&&p| p > 0).count().max(1));
        Partition::new(parts, n)
    }
}

/// The text a job produced and whether every check in it held.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub ok: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.ok {
            0
        } else {
            1
        }
    }
}

/// The cap on `|λ|·n`, from the environment.
pub fn max_cells() -> Result<u64> {
    match std::env::var(MAX_CELLS_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::InvalidInput(format!("{MAX_CELLS_VAR} must be a nonnegative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_CELLS),
    }
}

/// Runs a job.
pub fn run(spec: &JobSpec) -> Result<Outcome> {
    spec.validate()?;
    let cells = max_cells()?;
    match spec.command {
        Command::Poly => commands::run_poly(spec, cells),
        Command::Verify => suites::run_verify(spec, cells),
        Command::Dims => commands::run_dims(spec),
        Command::Identities => commands::run_identities(spec),
    }
}

/// Machine-readable error object.
pub fn error_object(e: &Error) -> String {
    serde_json::json!({ "error": e.kind(), "message": e.to_string() }).to_string()
}

/// Parses a comma-separated list.
fn parse_list<T: FromStr>(s: &str, what: &str) -> Result<Vec<T>> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| x.parse().map_err(|_| Error::InvalidInput(format!("bad {what} {x:?}"))))
        .collect()
}

/// Parses `name=value,name=value`.
fn parse_params(s: &str) -> Result<BTreeMap<String, Rat>> {
    let mut out = BTreeMap::new();
    for item in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| Error::InvalidInput(format!("expected name=value, got {item:?}")))?;
        if out.insert(k.trim().to_string(), v.trim().parse()?).is_some() {
            return Err(Error::InvalidInput(format!("parameter {k} given twice")));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    #[test]
    fn job_spec_round_trips() {
        let mut spec = JobSpec::new(Command::Verify);
        spec.suite = Some(Suite::DimensionPaths);
        spec.family = Some(Family::Big);
        spec.n = Some(2);
        spec.seeds = vec![3, 4];
        spec.t = vec![rat(1, 2)];
        let text = serde_json::to_string(&spec).unwrap();
        assert_eq!(serde_json::from_str::<JobSpec>(&text).unwrap(), spec);

        let mut spec = JobSpec::new(Command::Poly);
        spec.lambda = Some(vec![2, 1]);
        spec.params = Some(parse_params("a=1/2,b=-3").unwrap());
        spec.out = Some(PathBuf::from("out.json"));
        let text = serde_json::to_string(&spec).unwrap();
        assert_eq!(serde_json::from_str::<JobSpec>(&text).unwrap(), spec);
    }

    #[test]
    fn params_and_seeds_exclude_each_other() {
        let mut spec = JobSpec::new(Command::Poly);
        spec.params = Some(BTreeMap::new());
        spec.seeds = vec![1];
        assert!(matches!(spec.validate(), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn list_parsing() {
        assert_eq!(parse_list::<u32>("2,1,0", "part").unwrap(), vec![2, 1, 0]);
        assert_eq!(parse_list::<Rat>("1/2, 2/3", "value").unwrap(), vec![rat(1, 2), rat(2, 3)]);
        assert!(parse_params("a=1,a=2").is_err());
        assert!(parse_params("a").is_err());
        assert_eq!(Suite::from_str("q-series").unwrap(), Suite::QSeries);
    }
}
