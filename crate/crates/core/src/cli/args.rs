use std::path::PathBuf;

use clap::{Args, Parser};

use super::{parse_list, parse_params, Command, JobSpec, OutputFormat};
use crate::{Error, Result};

#[derive(Debug, Parser)]
#[command(name = "bcnqkit", version, about = "Exact Koornwinder and q-Jacobi polynomials and Grassmannian dimension formulas")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Subcommand,
}

#[derive(Debug, clap::Subcommand)]
pub enum Subcommand {
    #[command(flatten)]
    Job(JobCommand),
    /// Print the JSON job a command line stands for, without running it.
    Explain {
        #[command(subcommand)]
        command: JobCommand,
    },
}

#[derive(Debug, clap::Subcommand)]
pub enum JobCommand {
    /// Construct P_λ and compare its values with the closed evaluation formulas.
    Poly(JobArgs),
    /// Run a verification suite.
    Verify(JobArgs),
    /// Emit a dimension table.
    Dims(JobArgs),
    /// Check the p-adic sum identity and the q-factorial identity over a grid.
    Identities(JobArgs),
    /// Run a job stored as JSON.
    Job {
        path: PathBuf,
    },
}

#[derive(Debug, Default, Args)]
pub struct JobArgs {
    /// mk, little or big.
    #[arg(long)]
    pub family: Option<String>,
    /// generalized, padic, complex, real, quantum, weyl or q_weyl.
    #[arg(long)]
    pub space: Option<String>,
    /// eigen, orthogonality, evaluation, dimension-paths or q-series.
    #[arg(long)]
    pub suite: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub k: Option<u32>,
    /// Parts of λ, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    /// Explicit parameters, e.g. a=1/2,b=-3,q=1/3,t=2/5.
    #[arg(long, allow_hyphen_values = true)]
    pub params: Option<String>,
    /// Sampling seeds, comma separated.
    #[arg(long)]
    pub seed: Option<String>,
    #[arg(long)]
    pub max_weight: Option<u64>,
    #[arg(long)]
    pub max: Option<u32>,
    /// Values of t, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<String>,
    /// Values of q, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    pub q: Option<String>,
    /// json, csv or table.
    #[arg(long)]
    pub format: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl JobArgs {
    pub fn into_spec(self, command: Command) -> Result<JobSpec> {
        let mut spec = JobSpec::new(command);
        spec.family = self.family.as_deref().map(str::parse).transpose()?;
        spec.space = self.space.as_deref().map(str::parse).transpose()?;
        spec.suite = self.suite.as_deref().map(str::parse).transpose()?;
        spec.n = self.n;
        spec.d = self.d;
        spec.k = self.k;
        spec.lambda = self.lambda.as_deref().map(|s| parse_list(s, "part")).transpose()?;
        spec.params = self.params.as_deref().map(parse_params).transpose()?;
        spec.seeds = self.seed.as_deref().map(|s| parse_list(s, "seed")).transpose()?.unwrap_or_default();
        spec.max_weight = self.max_weight;
        spec.max = self.max;
        spec.t = self.t.as_deref().map(|s| parse_list(s, "t")).transpose()?.unwrap_or_default();
        spec.q = self.q.as_deref().map(|s| parse_list(s, "q")).transpose()?.unwrap_or_default();
        spec.format = self.format.as_deref().map(str::parse::<OutputFormat>).transpose()?.unwrap_or_default();
        spec.out = self.out;
        spec.validate()?;
        Ok(spec)
    }
}

impl Subcommand {
    /// The job a subcommand line stands for.
    pub fn into_spec(self) -> Result<JobSpec> {
        match self {
            Subcommand::Job(c) | Subcommand::Explain { command: c } => c.into_spec(),
        }
    }
}

impl JobCommand {
    pub fn into_spec(self) -> Result<JobSpec> {
        match self {
            JobCommand::Poly(a) => a.into_spec(Command::Poly),
            JobCommand::Verify(a) => a.into_spec(Command::Verify),
            JobCommand::Dims(a) => a.into_spec(Command::Dims),
            JobCommand::Identities(a) => a.into_spec(Command::Identities),
            JobCommand::Job { path } => {
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
                let spec: JobSpec = serde_json::from_str(&text)
                    .map_err(|e| Error::InvalidInput(format!("bad job file {}: {e}", path.display())))?;
                spec.validate()?;
                Ok(spec)
            }
        }
    }
}
