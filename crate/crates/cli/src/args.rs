use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cvwl_core::{CriterionId, Objective, StateFamily};

use crate::config::{linspace, parse_loss, Command, Gains, RunConfig, StateSource, SweepParam, SweepSpec, Target};
use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(name = "cvwl", version, about = "Multipartite CV entanglement and steering witnesses for Gaussian states")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Sub,
}

#[derive(Debug, Subcommand)]
pub enum Sub {
    /// Print the covariance matrix of a state.
    Build(StateArgs),
    /// Evaluate one criterion.
    Witness(WitnessArgs),
    /// Optimise gains for one criterion.
    Optimize(WitnessArgs),
    /// Evaluate a criterion along a squeeze or efficiency axis.
    Sweep(SweepArgs),
    /// Regenerate a gains table or figure data set.
    Reproduce(ReproduceArgs),
}

#[derive(Debug, Args)]
pub struct StateArgs {
    /// Preset: ghz, epr1, epr2, counterexample or vacuum.
    #[arg(long, conflicts_with = "network", required_unless_present = "network")]
    pub state: Option<String>,
    /// Network file instead of a preset.
    #[arg(long)]
    pub network: Option<PathBuf>,
    /// Number of modes of the preset.
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    /// Squeeze parameter of the preset.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub r: f64,
    /// Loss channel MODE:ETA (1-based mode); repeatable.
    #[arg(long = "loss", value_name = "MODE:ETA")]
    pub loss: Vec<String>,
    /// Output file; stdout when absent.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ObjectiveArg {
    /// Left side over the genuine bound.
    Ratio,
    /// Left side alone.
    Lhs,
    /// Left side over the steering bound.
    Steer,
}

impl From<ObjectiveArg> for Objective {
    fn from(o: ObjectiveArg) -> Self {
        match o {
            ObjectiveArg::Ratio => Objective::EntRatio,
            ObjectiveArg::Lhs => Objective::LeftSide,
            ObjectiveArg::Steer => Objective::SteeringRatio,
        }
    }
}

#[derive(Debug, Args)]
pub struct WitnessArgs {
    #[command(flatten)]
    pub state: StateArgs,
    /// c1 … c10, vlfi … vlfvi, vlfpi … vlfpvi.
    #[arg(long)]
    pub criterion: String,
    /// "auto", N p-gains, or 2N values h1..hN,g1..gN.
    #[arg(long, default_value = "auto", allow_hyphen_values = true)]
    pub gains: String,
    #[arg(long, value_enum, default_value_t = ObjectiveArg::Ratio)]
    pub objective: ObjectiveArg,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum AxisArg {
    R,
    Eta,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub witness: WitnessArgs,
    #[arg(long, value_enum, default_value_t = AxisArg::R)]
    pub axis: AxisArg,
    /// First value; defaults to 0.
    #[arg(long)]
    pub from: Option<f64>,
    /// Last value; defaults to 2 for r and 1 for eta.
    #[arg(long)]
    pub to: Option<f64>,
    /// Number of points, endpoints included.
    #[arg(long, default_value_t = 21)]
    pub steps: usize,
    /// Modes (1-based, comma separated) that the efficiency axis acts on.
    #[arg(long, value_delimiter = ',', default_value = "1")]
    pub modes: Vec<usize>,
    /// Seed each optimisation with the previous optimum (sequential).
    #[arg(long)]
    pub warm_start: bool,
}

#[derive(Debug, Args)]
pub struct ReproduceArgs {
    /// table1 … table5, fig4, fig5, fig6, fig7, fig10, fig11 or fig12.
    pub target: String,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

fn config_err<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Config(e.to_string())
}

impl StateArgs {
    fn apply(&self, cfg: &mut RunConfig) -> Result<(), CliError> {
        cfg.state = Some(match (&self.state, &self.network) {
            (Some(name), None) => {
                let family: StateFamily = name.parse().map_err(config_err)?;
                StateSource::Preset { family, n: self.n, r: self.r }
            }
            (None, Some(path)) => StateSource::Network(path.clone()),
            _ => return Err(CliError::Config("give exactly one of --state and --network".into())),
        });
        cfg.loss = self.loss.iter().map(|s| parse_loss(s)).collect::<Result<_, _>>()?;
        cfg.output = self.output.clone();
        Ok(())
    }
}

impl WitnessArgs {
    fn apply(&self, cfg: &mut RunConfig) -> Result<(), CliError> {
        self.state.apply(cfg)?;
        cfg.criterion = Some(self.criterion.parse::<CriterionId>().map_err(config_err)?);
        cfg.gains = self.gains.parse::<Gains>()?;
        cfg.objective = self.objective.into();
        Ok(())
    }
}

impl Cli {
    /// Converts parsed arguments into a run configuration; `threads` comes from the environment.
    pub fn into_config(self, threads: Option<usize>) -> Result<RunConfig, CliError> {
        let mut cfg = match &self.command {
            Sub::Build(_) => RunConfig::new(Command::Build),
            Sub::Witness(_) => RunConfig::new(Command::Witness),
            Sub::Optimize(_) => RunConfig::new(Command::Optimize),
            Sub::Sweep(a) => {
                let param = match a.axis {
                    AxisArg::R => SweepParam::Squeeze,
                    AxisArg::Eta => {
                        if a.modes.contains(&0) {
                            return Err(CliError::Config("--modes are 1-based".into()));
                        }
                        SweepParam::Efficiency { modes: a.modes.iter().map(|m| m - 1).collect() }
                    }
                };
                let to = a.to.unwrap_or(match a.axis {
                    AxisArg::R => 2.0,
                    AxisArg::Eta => 1.0,
                });
                let values = linspace(a.from.unwrap_or(0.0), to, a.steps)?;
                RunConfig::new(Command::Sweep(SweepSpec { param, values, warm_start: a.warm_start }))
            }
            Sub::Reproduce(a) => RunConfig::new(Command::Reproduce(a.target.parse::<Target>()?)),
        };
        match &self.command {
            Sub::Build(s) => s.apply(&mut cfg)?,
            Sub::Witness(w) | Sub::Optimize(w) => w.apply(&mut cfg)?,
            Sub::Sweep(s) => s.witness.apply(&mut cfg)?,
            Sub::Reproduce(a) => cfg.output = a.output.clone(),
        }
        cfg.threads = threads;
        Ok(cfg)
    }
}

/// Reads `CVWL_THREADS`; unset or empty means no cap.
pub fn threads_from_env() -> Result<Option<usize>, CliError> {
    match std::env::var("CVWL_THREADS") {
        Ok(v) if !v.trim().is_empty() => match v.trim().parse::<usize>() {
            Ok(t) if t > 0 => Ok(Some(t)),
            _ => Err(CliError::Config(format!("CVWL_THREADS must be a positive integer, got '{v}'"))),
        },
        _ => Ok(None),
    }
}
