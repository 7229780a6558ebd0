use std::path::PathBuf;
use std::str::FromStr;

use cvwl_core::{CriterionId, Objective, StateFamily};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq)]
pub enum StateSource {
    Preset { family: StateFamily, n: usize, r: f64 },
    Network(PathBuf),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Gains {
    /// Optimise over the criterion's default parameterisation.
    Auto,
    /// `N` values set the p-gains (x-gains zero); `2N` values are `h₁…h_N, g₁…g_N`.
    Explicit(Vec<f64>),
}

impl FromStr for Gains {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        if s.trim().eq_ignore_ascii_case("auto") {
            return Ok(Self::Auto);
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<f64>()
                    .ok()
                    .filter(|v| v.is_finite())
                    .ok_or_else(|| CliError::Config(format!("bad gain '{t}'")))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Self::Explicit)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum SweepParam {
    Squeeze,
    /// Efficiency applied to each listed mode (zero-based).
    Efficiency {
        modes: Vec<usize>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub param: SweepParam,
    pub values: Vec<f64>,
    pub warm_start: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Table1,
    Table2,
    Table3,
    Table4,
    Table5,
    Fig4,
    Fig5,
    Fig6,
    Fig7,
    Fig10,
    Fig11,
    Fig12,
}

impl Target {
    pub const ALL: [Target; 12] = [
        Self::Table1,
        Self::Table2,
        Self::Table3,
        Self::Table4,
        Self::Table5,
        Self::Fig4,
        Self::Fig5,
        Self::Fig6,
        Self::Fig7,
        Self::Fig10,
        Self::Fig11,
        Self::Fig12,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Table1 => "table1",
            Self::Table2 => "table2",
            Self::Table3 => "table3",
            Self::Table4 => "table4",
            Self::Table5 => "table5",
            Self::Fig4 => "fig4",
            Self::Fig5 => "fig5",
            Self::Fig6 => "fig6",
            Self::Fig7 => "fig7",
            Self::Fig10 => "fig10",
            Self::Fig11 => "fig11",
            Self::Fig12 => "fig12",
        }
    }
}

impl FromStr for Target {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Self::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| CliError::Config(format!("unknown reproduce target '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    /// Emit the covariance matrix.
    Build,
    /// Evaluate one criterion at given or optimised gains.
    Witness,
    /// Optimise gains and report convergence details.
    Optimize,
    Sweep(SweepSpec),
    Reproduce(Target),
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    /// Required by every command except `reproduce`.
    pub state: Option<StateSource>,
    pub criterion: Option<CriterionId>,
    pub gains: Gains,
    pub objective: Objective,
    /// Extra loss channels `(mode, eta)`, zero-based.
    pub loss: Vec<(usize, f64)>,
    /// `None` writes to stdout.
    pub output: Option<PathBuf>,
    /// Cap on sweep worker threads.
    pub threads: Option<usize>,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            state: None,
            criterion: None,
            gains: Gains::Auto,
            objective: Objective::EntRatio,
            loss: Vec::new(),
            output: None,
            threads: None,
        }
    }
}

/// Parses `mode:eta` with a 1-based mode.
pub fn parse_loss(s: &str) -> Result<(usize, f64), CliError> {
    let bad = || CliError::Config(format!("loss '{s}' is not MODE:ETA with MODE >= 1 and ETA in [0, 1]"));
    let (m, e) = s.split_once(':').ok_or_else(bad)?;
    let mode: usize = m.trim().parse().map_err(|_| bad())?;
    let eta: f64 = e.trim().parse().map_err(|_| bad())?;
    if mode == 0 || !(0.0..=1.0).contains(&eta) {
        return Err(bad());
    }
    Ok((mode - 1, eta))
}

/// `steps` evenly spaced values from `from` to `to` inclusive.
pub fn linspace(from: f64, to: f64, steps: usize) -> Result<Vec<f64>, CliError> {
    match steps {
        0 => Err(CliError::Config("a sweep needs at least one step".into())),
        1 => Ok(vec![from]),
        _ => Ok((0..steps).map(|k| from + (to - from) * k as f64 / (steps - 1) as f64).collect()),
    }
}
