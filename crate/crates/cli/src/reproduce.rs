//! Fixed grids behind the `reproduce` targets.
//!
//! Tables list optimised gains per squeeze value. Figure targets are long
//! format: one row per `(series, state, n, criterion, r, eta)` point.

use cvwl_core::witnesses::simple_gains;
use cvwl_core::{
    default_structure, sweep, CriterionId, GainChoice, GainVector, Objective, StateFamily, SweepAxis, SweepConfig,
    SweepRow,
};

use crate::config::Target;
use crate::error::CliError;
use crate::format::sig6;
use crate::run::Table;

/// Squeeze values of every table and squeeze-axis figure.
pub const R_GRID: [f64; 7] = [0.0, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0];
/// Squeeze value of the loss figures.
pub const LOSS_R: f64 = 2.0;

fn eta_grid() -> Vec<f64> {
    (0..=10).map(|k| k as f64 / 10.0).collect()
}

pub fn provenance(target: Target) -> &'static str {
    match target {
        Target::Table1 => "Table I",
        Target::Table2 => "Table II",
        Target::Table3 => "Table III",
        Target::Table4 => "Table IV",
        Target::Table5 => "Table V",
        Target::Fig4 => "Fig. 4",
        Target::Fig5 => "Fig. 5",
        Target::Fig6 => "Fig. 6",
        Target::Fig7 => "Fig. 7",
        Target::Fig10 => "Fig. 10",
        Target::Fig11 => "Fig. 11",
        Target::Fig12 => "Fig. 12",
    }
}

struct Series {
    label: &'static str,
    family: StateFamily,
    n: usize,
    criterion: CriterionId,
    gains: GainChoice<f64>,
    axis: SweepAxis,
}

impl Series {
    fn optimized(label: &'static str, family: StateFamily, n: usize, c: CriterionId, objective: Objective) -> Self {
        Self {
            label,
            family,
            n,
            criterion: c,
            gains: GainChoice::Optimize { structure: default_structure(family, n, c), objective },
            axis: SweepAxis::Squeeze,
        }
    }

    fn given(label: &'static str, family: StateFamily, n: usize, c: CriterionId, g: GainVector<f64>) -> Self {
        Self { label, family, n, criterion: c, gains: GainChoice::Given(g), axis: SweepAxis::Squeeze }
    }

    fn lossy(mut self, modes: Vec<usize>) -> Self {
        self.axis = SweepAxis::Efficiency { modes };
        self
    }

    fn run(&self, threads: Option<usize>) -> Result<Vec<SweepRow<f64>>, CliError> {
        let values = match self.axis {
            SweepAxis::Squeeze => R_GRID.to_vec(),
            SweepAxis::Efficiency { .. } => eta_grid(),
        };
        Ok(sweep(&SweepConfig {
            family: self.family,
            n: self.n,
            criterion: self.criterion,
            r: LOSS_R,
            loss: Vec::new(),
            axis: self.axis.clone(),
            values,
            gains: self.gains.clone(),
            warm_start: false,
            threads,
        })?)
    }
}

fn strings(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}

/// Gains `h = (1, -1/sqrt(N-1), ...)`, `g = (1, 1/sqrt(N-1), ...)`.
pub fn balanced_gains(n: usize) -> GainVector<f64> {
    let s = 1.0 / ((n - 1) as f64).sqrt();
    let mut h = vec![-s; n];
    let mut g = vec![s; n];
    h[0] = 1.0;
    g[0] = 1.0;
    GainVector::new(h, g).expect("matching lengths")
}

/// Gains table: one row per squeeze value. Each column is `(name, series index, parameter index)`.
fn gains_table(
    target: Target,
    series: &[Series],
    columns: &[(&str, usize, usize)],
    threads: Option<usize>,
) -> Result<Table, CliError> {
    let data = series.iter().map(|s| s.run(threads)).collect::<Result<Vec<_>, _>>()?;
    let mut header = vec!["r".to_string()];
    header.extend(columns.iter().map(|c| c.0.to_string()));
    header.push("provenance".into());
    let rows = R_GRID
        .iter()
        .enumerate()
        .map(|(k, &r)| {
            let mut row = vec![sig6(r)];
            row.extend(columns.iter().map(|&(_, s, p)| sig6(data[s][k].params[p])));
            row.push(provenance(target).into());
            row
        })
        .collect();
    Ok((header, rows))
}

fn figure(target: Target, series: &[Series], threads: Option<usize>) -> Result<Table, CliError> {
    let header = strings(&["series", "state", "n", "criterion", "r", "eta", "ent", "steer_ratio", "provenance"]);
    let mut rows = Vec::new();
    for s in series {
        for point in s.run(threads)? {
            let (r, eta) = match s.axis {
                SweepAxis::Squeeze => (point.param, 1.0),
                SweepAxis::Efficiency { .. } => (LOSS_R, point.param),
            };
            rows.push(vec![
                s.label.to_string(),
                s.family.name().to_string(),
                s.n.to_string(),
                s.criterion.to_string(),
                sig6(r),
                sig6(eta),
                sig6(point.report.ent_ratio),
                point.report.steer_ratio().map(sig6).unwrap_or_default(),
                provenance(target).to_string(),
            ]);
        }
    }
    Ok((header, rows))
}

pub fn table(target: Target, threads: Option<usize>) -> Result<Table, CliError> {
    use CriterionId::*;
    use StateFamily::*;
    let ratio = Objective::EntRatio;
    let lhs = Objective::LeftSide;
    match target {
        Target::Table1 => {
            let series = [Series::optimized("gen", Ghz, 3, C5, ratio), Series::optimized("gen", EprI, 3, C5, ratio)];
            let cols = [("ghz_g", 0, 1), ("ghz_h", 0, 0), ("epr_g", 1, 1), ("epr_h", 1, 0)];
            gains_table(target, &series, &cols, threads)
        }
        Target::Table2 => {
            let series = [Series::optimized("vlf", Ghz, 3, C1, ratio), Series::optimized("vlf", EprI, 3, C1, ratio)];
            let cols = [
                ("ghz_g1", 0, 0),
                ("ghz_g2", 0, 1),
                ("ghz_g3", 0, 2),
                ("epr_g1", 1, 0),
                ("epr_g2", 1, 1),
                ("epr_g3", 1, 2),
            ];
            gains_table(target, &series, &cols, threads)
        }
        Target::Table3 | Target::Table4 => {
            let family = if target == Target::Table3 { EprI } else { Ghz };
            let series: Vec<Series> = (4..=6).map(|n| Series::optimized("gen", family, n, C8, lhs)).collect();
            let cols = [("n4_g", 0, 1), ("n4_h", 0, 0), ("n5_g", 1, 1), ("n5_h", 1, 0), ("n6_g", 2, 1), ("n6_h", 2, 0)];
            gains_table(target, &series, &cols, threads)
        }
        Target::Table5 => {
            let series: Vec<Series> = (4..=6).map(|n| Series::optimized("gen", EprII, n, C8, lhs)).collect();
            let cols = [
                ("n4_hR", 0, 0),
                ("n4_hL", 0, 1),
                ("n4_gR", 0, 2),
                ("n5_hR", 1, 0),
                ("n5_hL", 1, 1),
                ("n5_gR", 1, 2),
                ("n6_hR", 2, 0),
                ("n6_hL", 2, 1),
                ("n6_gR", 2, 2),
            ];
            gains_table(target, &series, &cols, threads)
        }
        Target::Fig4 => {
            let mut v = Vec::new();
            for f in [Ghz, EprI] {
                v.push(Series::given("simple-sum", f, 3, C3, simple_gains()));
                v.push(Series::given("simple-product", f, 3, C4, simple_gains()));
                v.push(Series::optimized("gen-sum", f, 3, C5, ratio));
                v.push(Series::optimized("gen-product", f, 3, C6, ratio));
            }
            figure(target, &v, threads)
        }
        Target::Fig5 => {
            let mut v = Vec::new();
            for f in [Ghz, EprI] {
                v.push(Series::optimized("vlf-sum", f, 3, C1, ratio));
                v.push(Series::optimized("vlf-product", f, 3, C2, ratio));
                v.push(Series::given("two-vlf", f, 3, C7, GainVector::new(vec![1.0; 3], vec![1.0; 3])?));
            }
            figure(target, &v, threads)
        }
        Target::Fig6 | Target::Fig7 => {
            let modes = if target == Target::Fig6 { vec![0] } else { vec![1, 2] };
            let mut v = Vec::new();
            for f in [Ghz, EprI] {
                v.push(Series::optimized("gen-sum", f, 3, C5, ratio).lossy(modes.clone()));
                v.push(Series::optimized("gen-product", f, 3, C6, ratio).lossy(modes.clone()));
            }
            figure(target, &v, threads)
        }
        Target::Fig10 | Target::Fig11 => {
            let family = if target == Target::Fig10 { EprI } else { Ghz };
            let mut v = Vec::new();
            for n in 3..=7 {
                v.push(Series::given("simple", family, n, C8, balanced_gains(n)));
                v.push(Series::optimized("gen", family, n, C8, lhs));
            }
            figure(target, &v, threads)
        }
        Target::Fig12 => {
            let v =
                vec![Series::optimized("combined", EprII, 4, C10, ratio), Series::optimized("gen", EprII, 4, C8, lhs)];
            figure(target, &v, threads)
        }
    }
}
