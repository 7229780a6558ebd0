use std::fs::File;
use std::io::{self, Write};

use cvwl_core::{
    default_structure, evaluate, optimize_gains, sweep, AnyState, GainChoice, GainStructure, GainVector,
    OptimizeOptions, StateFamily, SweepAxis, SweepConfig, WitnessReport,
};

use crate::config::{Command, Gains, RunConfig, StateSource, SweepParam, SweepSpec};
use crate::error::CliError;
use crate::format::sig6;
use crate::network_file::read_network;
use crate::reproduce;

pub type Table = (Vec<String>, Vec<Vec<String>>);

/// Runs the configured command and writes its CSV to the configured output.
pub fn run(config: &RunConfig) -> Result<(), CliError> {
    let mut buf = Vec::new();
    run_to(config, &mut buf)?;
    match &config.output {
        Some(path) => File::create(path)?.write_all(&buf)?,
        None => io::stdout().lock().write_all(&buf)?,
    }
    Ok(())
}

/// Runs the configured command, writing CSV to `out`.
pub fn run_to(config: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    let (header, rows) = match &config.command {
        Command::Reproduce(target) => reproduce::table(*target, config.threads)?,
        Command::Build => build_table(config)?,
        Command::Witness => witness_table(config, false)?,
        Command::Optimize => witness_table(config, true)?,
        Command::Sweep(spec) => sweep_table(config, spec)?,
    };
    write_csv(out, &header, &rows)
}

pub fn write_csv(out: &mut dyn Write, header: &[String], rows: &[Vec<String>]) -> Result<(), CliError> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    w.flush()?;
    Ok(())
}

fn source(config: &RunConfig) -> Result<&StateSource, CliError> {
    config.state.as_ref().ok_or_else(|| CliError::Config("a state is required (--state or --network)".into()))
}

fn criterion(config: &RunConfig) -> Result<cvwl_core::CriterionId, CliError> {
    config.criterion.ok_or_else(|| CliError::Config("--criterion is required".into()))
}

fn load_state(config: &RunConfig) -> Result<AnyState<f64>, CliError> {
    let mut state = match source(config)? {
        StateSource::Preset { family, n, r } => family.build(*n, *r)?,
        StateSource::Network(path) => read_network(path)?.execute()?.into(),
    };
    let n = state_modes(&state);
    for &(mode, eta) in &config.loss {
        if mode >= n {
            return Err(CliError::Config(format!("loss mode {} out of range 1..={n}", mode + 1)));
        }
        state = state.loss(mode, eta)?;
    }
    Ok(state)
}

fn state_modes(state: &AnyState<f64>) -> usize {
    cvwl_core::Quadratures::n_modes(state)
}

fn family_of(src: &StateSource) -> StateFamily {
    match src {
        StateSource::Preset { family, .. } => *family,
        // Network files get the generic tied layout.
        StateSource::Network(_) => StateFamily::Ghz,
    }
}

fn explicit_gains(values: &[f64], n: usize) -> Result<GainVector<f64>, CliError> {
    let g = if values.len() == n {
        GainVector::new(vec![0.0; n], values.to_vec())
    } else if values.len() == 2 * n {
        GainVector::new(values[..n].to_vec(), values[n..].to_vec())
    } else {
        return Err(CliError::Config(format!(
            "expected {n} p-gains or {} values h1..hN,g1..gN, got {}",
            2 * n,
            values.len()
        )));
    };
    Ok(g?)
}

fn gain_columns(n: usize) -> Vec<String> {
    (1..=n).map(|k| format!("g{k}")).chain((1..=n).map(|k| format!("h{k}"))).collect()
}

fn gain_cells(g: &GainVector<f64>) -> impl Iterator<Item = String> + '_ {
    g.g.iter().chain(&g.h).map(|&v| sig6(v))
}

fn opt_cell(v: Option<f64>) -> String {
    v.map(sig6).unwrap_or_default()
}

fn opt_bool(v: Option<bool>) -> String {
    v.map(|b| b.to_string()).unwrap_or_default()
}

fn check_finite(report: &WitnessReport<f64>) -> Result<(), CliError> {
    if report.lhs.is_finite() {
        Ok(())
    } else {
        Err(CliError::Numerical(format!("criterion {} evaluated to {}", report.criterion, report.lhs)))
    }
}

fn build_table(config: &RunConfig) -> Result<Table, CliError> {
    let state = load_state(config)?;
    let cov = state.covariance();
    let n = state_modes(&state);
    let labels: Vec<String> = (1..=n).map(|k| format!("x{k}")).chain((1..=n).map(|k| format!("p{k}"))).collect();
    let header = std::iter::once("row".to_string()).chain(labels.iter().cloned()).collect();
    let rows = labels
        .iter()
        .enumerate()
        .map(|(i, l)| std::iter::once(l.clone()).chain((0..2 * n).map(|j| sig6(cov[(i, j)]))).collect())
        .collect();
    Ok((header, rows))
}

fn witness_table(config: &RunConfig, optimize_only: bool) -> Result<Table, CliError> {
    let src = source(config)?;
    let c = criterion(config)?;
    let state = load_state(config)?;
    let n = state_modes(&state);
    let structure: GainStructure<f64> = default_structure(family_of(src), n, c);
    let (gains, details) = match (&config.gains, optimize_only) {
        (Gains::Explicit(_), true) => {
            return Err(CliError::Config("optimize chooses the gains itself; drop --gains".into()));
        }
        (Gains::Explicit(v), false) => (explicit_gains(v, n)?, None),
        (Gains::Auto, _) => {
            let opts = OptimizeOptions { objective: config.objective, init: None };
            let res = optimize_gains(&state, c, &structure, &opts)?;
            (res.gains, Some((res.iterations, res.converged)))
        }
    };
    let report = evaluate(&state, c, &gains)?;
    check_finite(&report)?;
    let (label, r) = match src {
        StateSource::Preset { family, r, .. } => (family.name().to_string(), sig6(*r)),
        StateSource::Network(path) => (path.display().to_string(), String::new()),
    };
    let mut header: Vec<String> = ["state", "n", "r", "criterion"].map(String::from).to_vec();
    header.extend(gain_columns(n));
    header.extend(
        ["lhs", "ent_bound", "steer_bound", "ent", "steer_ratio", "ent_verdict", "steer_verdict"].map(String::from),
    );
    let mut row = vec![label, n.to_string(), r, c.to_string()];
    row.extend(gain_cells(&gains));
    row.extend([
        sig6(report.lhs),
        sig6(report.ent_bound),
        opt_cell(report.steer_bound),
        sig6(report.ent_ratio),
        opt_cell(report.steer_ratio()),
        report.verdict_entanglement.to_string(),
        opt_bool(report.verdict_steering),
    ]);
    if optimize_only {
        let (iterations, converged) = details.expect("optimised");
        header.extend(["iterations", "converged"].map(String::from));
        row.extend([iterations.to_string(), converged.to_string()]);
    }
    Ok((header, vec![row]))
}

fn sweep_table(config: &RunConfig, spec: &SweepSpec) -> Result<Table, CliError> {
    let src = source(config)?;
    let c = criterion(config)?;
    let probe = load_state(config)?;
    let n = state_modes(&probe);
    let gains = match &config.gains {
        Gains::Auto => {
            GainChoice::Optimize { structure: default_structure(family_of(src), n, c), objective: config.objective }
        }
        Gains::Explicit(v) => GainChoice::Given(explicit_gains(v, n)?),
    };
    if let SweepParam::Efficiency { modes } = &spec.param {
        if let Some(m) = modes.iter().find(|&&m| m >= n) {
            return Err(CliError::Config(format!("sweep mode {} out of range 1..={n}", m + 1)));
        }
    }
    let points: Vec<(f64, GainVector<f64>, WitnessReport<f64>)> = match src {
        StateSource::Preset { family, n, r } => {
            let axis = match &spec.param {
                SweepParam::Squeeze => SweepAxis::Squeeze,
                SweepParam::Efficiency { modes } => SweepAxis::Efficiency { modes: modes.clone() },
            };
            let cfg = SweepConfig {
                family: *family,
                n: *n,
                criterion: c,
                r: *r,
                loss: config.loss.clone(),
                axis,
                values: spec.values.clone(),
                gains,
                warm_start: spec.warm_start,
                threads: config.threads,
            };
            sweep(&cfg)?.into_iter().map(|row| (row.param, row.gains, row.report)).collect()
        }
        StateSource::Network(_) => {
            let SweepParam::Efficiency { modes } = &spec.param else {
                return Err(CliError::Config("squeeze sweeps need a preset state".into()));
            };
            let mut out = Vec::with_capacity(spec.values.len());
            let mut init: Option<Vec<f64>> = None;
            for &eta in &spec.values {
                let mut state = probe.clone();
                for &m in modes {
                    state = state.loss(m, eta)?;
                }
                let g = match &gains {
                    GainChoice::Optimize { structure, objective } => {
                        let opts = OptimizeOptions {
                            objective: *objective,
                            init: if spec.warm_start { init.clone() } else { None },
                        };
                        let res = optimize_gains(&state, c, structure, &opts)?;
                        init = Some(res.params);
                        res.gains
                    }
                    GainChoice::Given(g) => g.clone(),
                    GainChoice::Analytic => unreachable!("not constructed here"),
                };
                let report = evaluate(&state, c, &g)?;
                out.push((eta, g, report));
            }
            out
        }
    };
    let mut header = vec!["param".to_string()];
    header.extend(gain_columns(n));
    header.extend(["lhs", "bound", "ent", "steer_verdict"].map(String::from));
    let rows = points
        .iter()
        .map(|(param, g, report)| {
            check_finite(report)?;
            let mut row = vec![sig6(*param)];
            row.extend(gain_cells(g));
            row.extend([
                sig6(report.lhs),
                sig6(report.ent_bound),
                sig6(report.ent_ratio),
                opt_bool(report.verdict_steering),
            ]);
            Ok(row)
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok((header, rows))
}
