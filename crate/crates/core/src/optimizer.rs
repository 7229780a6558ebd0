//! Gain selection: closed-form stationary gains and a grid + simplex minimiser.
//!
//! The search runs over at most three tied parameters. A full grid on
//! `[-2, 2]` locates the basin (step 0.01 for one or two parameters, 0.05 for
//! three), then Nelder–Mead polishes inside the box `[-4, 4]`. Grid ties are
//! resolved towards the initial point, which makes flat directions (such as
//! the vacuum's `h = g` ridge) report the gains closest to the caller's guess.

use rayon::prelude::*;

use crate::error::{invalid, Error, Result};
use crate::gaussian::{AnyState, GainVector, Quadratures};
use crate::networks::{epr_type_ii_arms, StateFamily};
use crate::scalar::Real;
use crate::witnesses::{evaluate, evaluate_fast, simple_gains, CriterionId, GainUse, VlfForm, WitnessReport};

const GRID_HALF_WIDTH: f64 = 2.0;
const BOX_HALF_WIDTH: f64 = 4.0;
const MAX_ITERATIONS: usize = 10_000;
const F_TOL: f64 = 1e-12;
const X_TOL: f64 = 1e-9;

/// Stationary gains `(g, h)` of `Var(u)` and `Var(v)` for the GHZ state with
/// tied gains `h = (1, h, …)`, `g = (1, g, …)`.
pub fn analytic_gains_ghz<T: Real>(n: usize, r: T) -> Result<(T, T)> {
    if n < 2 {
        return invalid(format!("GHZ gains need N >= 2, got {n}"));
    }
    let (anti, sq) = squeeze_pair(r);
    let m = T::from_usize_lossy(n - 1);
    let h = -(anti - sq) / (sq + m * anti);
    let g = (anti - sq) / (anti + m * sq);
    Ok((g, h))
}

/// Stationary gains `(g, h)` for the asymmetric EPR state: `g = −h = tanh(2r)/√(N−1)`.
pub fn analytic_gains_epr1<T: Real>(n: usize, r: T) -> Result<(T, T)> {
    if n < 3 {
        return invalid(format!("EPR gains need N >= 3, got {n}"));
    }
    let (anti, sq) = squeeze_pair(r);
    let h = -(anti - sq) / (T::from_usize_lossy(n - 1).sqrt() * (anti + sq));
    Ok((-h, h))
}

fn squeeze_pair<T: Real>(r: T) -> (T, T) {
    let two_r = r + r;
    (two_r.exp(), (-two_r).exp())
}

/// How free parameters map to a gain vector.
#[derive(Debug, Clone, PartialEq)]
pub enum GainStructure<T> {
    /// No free parameters.
    Fixed(GainVector<T>),
    /// `h = (1, h, …, h)`, `g = (1, g, …, g)`; parameters `[h, g]`.
    Tied { n: usize },
    /// Two-arm layout of the symmetric EPR state with mode 1 pinned to 1.
    /// Parameters `[h_R, h_L, g_R]`; left-arm p-gains equal `h_L`.
    Arms { n: usize },
    /// p-gains only: `g_k` is a parameter for each `k` in `free`, 1 elsewhere.
    PGains { n: usize, free: Vec<usize> },
    /// p-gains only, all equal to one parameter.
    PUniform { n: usize },
}

impl<T: Real> GainStructure<T> {
    pub fn n_params(&self) -> usize {
        match self {
            Self::Fixed(_) => 0,
            Self::Tied { .. } => 2,
            Self::Arms { .. } => 3,
            Self::PGains { free, .. } => free.len(),
            Self::PUniform { .. } => 1,
        }
    }

    pub fn n_modes(&self) -> usize {
        match self {
            Self::Fixed(g) => g.len(),
            Self::Tied { n } | Self::Arms { n } | Self::PGains { n, .. } | Self::PUniform { n } => *n,
        }
    }

    fn gain_use(&self) -> Option<GainUse> {
        match self {
            Self::Fixed(_) => None,
            Self::Tied { .. } | Self::Arms { .. } => Some(GainUse::Full),
            Self::PGains { .. } | Self::PUniform { .. } => Some(GainUse::POnly),
        }
    }

    pub fn gains(&self, params: &[T]) -> Result<GainVector<T>> {
        if params.len() != self.n_params() {
            return invalid(format!("structure takes {} parameters, got {}", self.n_params(), params.len()));
        }
        let n = self.n_modes();
        let one = T::one();
        match self {
            Self::Fixed(g) => Ok(g.clone()),
            Self::Tied { .. } => {
                let mut h = vec![params[0]; n];
                let mut g = vec![params[1]; n];
                h[0] = one;
                g[0] = one;
                GainVector::new(h, g)
            }
            Self::Arms { .. } => {
                let (right, left) = epr_type_ii_arms(n);
                let (mut h, mut g) = (vec![one; n], vec![one; n]);
                for &m in &right {
                    h[m] = params[0];
                    g[m] = params[2];
                }
                for &m in left.iter().skip(1) {
                    h[m] = params[1];
                    g[m] = params[1];
                }
                GainVector::new(h, g)
            }
            Self::PGains { free, .. } => {
                let mut g = vec![one; n];
                for (&m, &p) in free.iter().zip(params) {
                    g[m] = p;
                }
                GainVector::new(vec![T::zero(); n], g)
            }
            Self::PUniform { .. } => GainVector::new(vec![T::zero(); n], vec![params[0]; n]),
        }
    }

    fn validate(&self) -> Result<()> {
        let n = self.n_modes();
        if n == 0 {
            return invalid("gain structure has no modes");
        }
        if let Self::PGains { free, .. } = self {
            if free.iter().any(|&m| m >= n) {
                return invalid("free p-gain index out of range");
            }
        }
        if let Self::Arms { n } = self {
            if *n < 3 {
                return invalid("arm structure needs N >= 3");
            }
        }
        if self.n_params() > 3 {
            return invalid(format!("at most 3 free parameters are supported, got {}", self.n_params()));
        }
        Ok(())
    }
}

/// Default parameterisation of a criterion for a preset.
pub fn default_structure<T: Real>(family: StateFamily, n: usize, criterion: CriterionId) -> GainStructure<T> {
    let others = |(i, j): (usize, usize)| (0..n).filter(|&m| m != i && m != j).collect();
    match criterion {
        CriterionId::C5 | CriterionId::C6 | CriterionId::C8 => {
            if family == StateFamily::EprII && n >= 4 {
                GainStructure::Arms { n }
            } else {
                GainStructure::Tied { n }
            }
        }
        CriterionId::C1 | CriterionId::C2 => GainStructure::PGains { n, free: (0..n).collect() },
        CriterionId::C9 => GainStructure::PUniform { n },
        CriterionId::C10 => GainStructure::PGains { n, free: vec![0, 3] },
        CriterionId::Vlf(f) | CriterionId::VlfProduct(f) => GainStructure::PGains { n, free: others(f.pair()) },
        CriterionId::C3 | CriterionId::C4 if n == 3 => GainStructure::Fixed(simple_gains()),
        CriterionId::C3 | CriterionId::C4 | CriterionId::C7 => {
            GainStructure::Fixed(GainVector::new(vec![T::one(); n.max(1)], vec![T::one(); n.max(1)]).expect("n >= 1"))
        }
    }
}

/// Quantity minimised by [`optimize_gains`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Objective {
    /// `lhs / ent_bound`.
    #[default]
    EntRatio,
    /// `lhs` alone: the stationary-point procedure behind closed-form gains.
    LeftSide,
    /// `lhs / steer_bound`.
    SteeringRatio,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct OptimizeOptions<T> {
    pub objective: Objective,
    /// Starting parameters; zeros when absent. Grid ties resolve towards this point.
    pub init: Option<Vec<T>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OptimizationResult<T> {
    pub gains: GainVector<T>,
    pub params: Vec<T>,
    /// `lhs / ent_bound` at `gains`, whatever the objective.
    pub ent_ratio: T,
    pub objective_value: T,
    pub iterations: usize,
    pub converged: bool,
}

fn objective_value<T: Real>(
    state: &impl Quadratures<T>,
    criterion: CriterionId,
    gains: &GainVector<T>,
    objective: Objective,
) -> Result<T> {
    let ev = evaluate_fast(state, criterion, gains)?;
    match objective {
        Objective::EntRatio => Ok(ev.ent_ratio()),
        Objective::LeftSide => Ok(ev.lhs),
        Objective::SteeringRatio => ev
            .steer_ratio()
            .ok_or_else(|| Error::Unsupported(format!("criterion {criterion} has no steering bound here"))),
    }
}

/// Minimises the objective over the structure's parameters.
pub fn optimize_gains<T: Real>(
    state: &impl Quadratures<T>,
    criterion: CriterionId,
    structure: &GainStructure<T>,
    options: &OptimizeOptions<T>,
) -> Result<OptimizationResult<T>> {
    structure.validate()?;
    if structure.n_modes() != state.n_modes() {
        return invalid(format!("gain structure covers {} modes, state has {}", structure.n_modes(), state.n_modes()));
    }
    let needs = criterion.gain_use();
    if let Some(provides) = structure.gain_use() {
        if needs != provides {
            return invalid(format!("criterion {criterion} cannot use this gain structure"));
        }
    }
    let dim = structure.n_params();
    let init = match &options.init {
        Some(p) if p.len() == dim => p.clone(),
        Some(p) => return invalid(format!("init has {} parameters, structure takes {dim}", p.len())),
        None => vec![T::zero(); dim],
    };
    let f = |p: &[T]| -> Result<T> {
        let bound = T::lit(BOX_HALF_WIDTH);
        if p.iter().any(|v| v.abs() > bound) {
            return Ok(T::infinity());
        }
        objective_value(state, criterion, &structure.gains(p)?, options.objective)
    };
    // Fail early on unsupported objective/criterion pairs.
    f(&init)?;

    let (params, value, iterations, converged) = if dim == 0 {
        (Vec::new(), f(&[])?, 0, true)
    } else {
        let step = if dim <= 2 { 0.01 } else { 0.05 };
        let (grid_p, grid_f) = grid_search(&f, dim, step, &init)?;
        let (nm_p, nm_f, iters, conv) = nelder_mead(&f, &grid_p, T::lit(step))?;
        if nm_f < grid_f - T::lit(F_TOL) * (T::one() + grid_f.abs()) {
            (nm_p, nm_f, iters, conv)
        } else {
            (grid_p, grid_f, iters, conv)
        }
    };
    let gains = structure.gains(&params)?;
    let ent_ratio = evaluate_fast(state, criterion, &gains)?.ent_ratio();
    Ok(OptimizationResult { gains, params, ent_ratio, objective_value: value, iterations, converged })
}

fn grid_search<T: Real>(f: &impl Fn(&[T]) -> Result<T>, dim: usize, step: f64, init: &[T]) -> Result<(Vec<T>, T)> {
    let per_axis = (2.0 * GRID_HALF_WIDTH / step).round() as usize + 1;
    let axis: Vec<T> = (0..per_axis).map(|k| T::lit(-GRID_HALF_WIDTH + step * k as f64)).collect();
    let total = per_axis.pow(dim as u32);
    let point = |mut idx: usize, buf: &mut Vec<T>| {
        buf.clear();
        for _ in 0..dim {
            buf.push(axis[idx % per_axis]);
            idx /= per_axis;
        }
    };
    let mut values = Vec::with_capacity(total);
    let mut buf = Vec::with_capacity(dim);
    for idx in 0..total {
        point(idx, &mut buf);
        values.push(f(&buf)?);
    }
    let best = values.iter().copied().fold(T::infinity(), T::min);
    if !best.is_finite() {
        return Err(Error::NonPhysical("objective is not finite anywhere on the grid".into()));
    }
    let tol = T::lit(F_TOL) * (T::one() + best.abs());
    let dist = |p: &[T]| p.iter().zip(init).map(|(&a, &b)| (a - b) * (a - b)).sum::<T>();
    let mut chosen: Option<(T, usize)> = None;
    for (idx, &v) in values.iter().enumerate() {
        if v <= best + tol {
            point(idx, &mut buf);
            let d = dist(&buf);
            if chosen.is_none_or(|(cd, _)| d < cd) {
                chosen = Some((d, idx));
            }
        }
    }
    let idx = chosen.expect("best is attained").1;
    point(idx, &mut buf);
    Ok((buf, values[idx]))
}

/// Nelder–Mead with standard coefficients. Returns `(x, f, iterations, converged)`.
fn nelder_mead<T: Real>(f: &impl Fn(&[T]) -> Result<T>, start: &[T], step: T) -> Result<(Vec<T>, T, usize, bool)> {
    let dim = start.len();
    let mut simplex: Vec<(Vec<T>, T)> = Vec::with_capacity(dim + 1);
    simplex.push((start.to_vec(), f(start)?));
    for i in 0..dim {
        let mut x = start.to_vec();
        x[i] += step;
        let fx = f(&x)?;
        simplex.push((x, fx));
    }
    let half = T::lit(0.5);
    let two = T::lit(2.0);
    let lerp = |a: &[T], b: &[T], t: T| -> Vec<T> { a.iter().zip(b).map(|(&a, &b)| a + t * (b - a)).collect() };

    let mut converged = false;
    let mut iterations = 0;
    while iterations < MAX_ITERATIONS {
        simplex.sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap_or(std::cmp::Ordering::Equal));
        let (f_best, f_worst) = (simplex[0].1, simplex[dim].1);
        let spread_ok = f_worst.is_finite() && f_worst - f_best < T::lit(F_TOL) * (T::one() + f_best.abs());
        let diameter = simplex[1..]
            .iter()
            .flat_map(|(x, _)| x.iter().zip(&simplex[0].0).map(|(&a, &b)| (a - b).abs()))
            .fold(T::zero(), T::max);
        if spread_ok && diameter < T::lit(X_TOL) {
            converged = true;
            break;
        }
        iterations += 1;

        let mut centroid = vec![T::zero(); dim];
        for (x, _) in &simplex[..dim] {
            for (c, &v) in centroid.iter_mut().zip(x) {
                *c += v;
            }
        }
        let inv = T::one() / T::from_usize_lossy(dim);
        centroid.iter_mut().for_each(|c| *c *= inv);

        let worst = simplex[dim].0.clone();
        let xr = lerp(&centroid, &worst, -T::one());
        let fr = f(&xr)?;
        if fr < f_best {
            let xe = lerp(&centroid, &worst, -two);
            let fe = f(&xe)?;
            simplex[dim] = if fe < fr { (xe, fe) } else { (xr, fr) };
            continue;
        }
        if fr < simplex[dim - 1].1 {
            simplex[dim] = (xr, fr);
            continue;
        }
        let (xc, fc) = if fr < f_worst {
            let xc = lerp(&centroid, &xr, half);
            let fc = f(&xc)?;
            (xc, fc)
        } else {
            let xc = lerp(&centroid, &worst, half);
            let fc = f(&xc)?;
            (xc, fc)
        };
        if fc < fr.min(f_worst) {
            simplex[dim] = (xc, fc);
            continue;
        }
        let best = simplex[0].0.clone();
        for entry in simplex.iter_mut().skip(1) {
            let x = lerp(&best, &entry.0, half);
            let fx = f(&x)?;
            *entry = (x, fx);
        }
    }
    simplex.sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap_or(std::cmp::Ordering::Equal));
    let (x, fx) = simplex.swap_remove(0);
    Ok((x, fx, iterations, converged))
}

/// Quantity varied along a sweep.
#[derive(Debug, Clone, PartialEq)]
pub enum SweepAxis {
    /// The values are squeeze parameters.
    Squeeze,
    /// The values are efficiencies applied to each listed mode (zero-based).
    Efficiency { modes: Vec<usize> },
}

/// Gains used at each sweep point.
#[derive(Debug, Clone, PartialEq)]
pub enum GainChoice<T> {
    Optimize {
        structure: GainStructure<T>,
        objective: Objective,
    },
    /// Closed-form tied gains (GHZ and asymmetric EPR presets only).
    Analytic,
    Given(GainVector<T>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig<T> {
    pub family: StateFamily,
    pub n: usize,
    pub criterion: CriterionId,
    /// Squeeze parameter when the axis is not [`SweepAxis::Squeeze`].
    pub r: T,
    /// Extra loss `(mode, eta)` applied at every point.
    pub loss: Vec<(usize, T)>,
    pub axis: SweepAxis,
    pub values: Vec<T>,
    pub gains: GainChoice<T>,
    /// Seed each optimisation with the previous optimum; forces sequential execution.
    pub warm_start: bool,
    /// Worker cap; `None` uses the global pool.
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow<T> {
    pub param: T,
    pub gains: GainVector<T>,
    pub params: Vec<T>,
    pub report: WitnessReport<T>,
    pub iterations: usize,
    pub converged: bool,
}

impl<T: Real> SweepConfig<T> {
    pub fn state_at(&self, value: T) -> Result<AnyState<T>> {
        let r = match self.axis {
            SweepAxis::Squeeze => value,
            SweepAxis::Efficiency { .. } => self.r,
        };
        let mut state = self.family.build(self.n, r)?;
        if let SweepAxis::Efficiency { modes } = &self.axis {
            for &m in modes {
                state = state.loss(m, value)?;
            }
        }
        for &(m, eta) in &self.loss {
            state = state.loss(m, eta)?;
        }
        Ok(state)
    }

    fn point(&self, value: T, init: Option<Vec<T>>) -> Result<SweepRow<T>> {
        let state = self.state_at(value)?;
        let (gains, params, iterations, converged) = match &self.gains {
            GainChoice::Given(g) => (g.clone(), Vec::new(), 0, true),
            GainChoice::Analytic => {
                let r = match self.axis {
                    SweepAxis::Squeeze => value,
                    SweepAxis::Efficiency { .. } => self.r,
                };
                let (g, h) = match self.family {
                    StateFamily::Ghz => analytic_gains_ghz(self.n, r)?,
                    StateFamily::EprI => analytic_gains_epr1(self.n, r)?,
                    other => return invalid(format!("no closed-form gains for preset {other}")),
                };
                let gains = GainStructure::Tied { n: self.n }.gains(&[h, g])?;
                (gains, vec![h, g], 0, true)
            }
            GainChoice::Optimize { structure, objective } => {
                let opts = OptimizeOptions { objective: *objective, init };
                let res = optimize_gains(&state, self.criterion, structure, &opts)?;
                (res.gains, res.params, res.iterations, res.converged)
            }
        };
        let report = evaluate(&state, self.criterion, &gains)?;
        Ok(SweepRow { param: value, gains, params, report, iterations, converged })
    }
}

/// Evaluates the configured criterion at every value, in order.
pub fn sweep<T: Real>(config: &SweepConfig<T>) -> Result<Vec<SweepRow<T>>> {
    if config.warm_start {
        let mut rows: Vec<SweepRow<T>> = Vec::with_capacity(config.values.len());
        for &v in &config.values {
            let init = rows.last().map(|r| r.params.clone()).filter(|p| !p.is_empty());
            rows.push(config.point(v, init)?);
        }
        return Ok(rows);
    }
    let run = || config.values.par_iter().map(|&v| config.point(v, None)).collect::<Result<Vec<_>>>();
    match config.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?
            .install(run),
        None => run(),
    }
}

/// Indices of the p-gains a vLF form leaves free on `n` modes.
pub fn vlf_free_modes(form: VlfForm, n: usize) -> Vec<usize> {
    let (i, j) = form.pair();
    (0..n).filter(|&m| m != i && m != j).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::GaussianState;
    use crate::networks::{build_epr_type_i, build_ghz};

    #[test]
    fn analytic_limits() {
        assert_eq!(analytic_gains_ghz(3, 0.0f64).unwrap(), (0.0, 0.0));
        let (g, h) = analytic_gains_ghz(4, 20.0f64).unwrap();
        assert!((g - 1.0).abs() < 1e-12 && (h + 1.0 / 3.0).abs() < 1e-12);
        let (g, h) = analytic_gains_ghz(3, 1.0f64).unwrap();
        assert!((g - 0.95).abs() < 0.005 && (h + 0.49).abs() < 0.005);

        let (g, h) = analytic_gains_epr1(4, 20.0f64).unwrap();
        let s = 1.0 / 3f64.sqrt();
        assert!((g - s).abs() < 1e-12 && (h + s).abs() < 1e-12);
        let (g, h) = analytic_gains_epr1(3, 1.0f64).unwrap();
        assert!((g - 0.68).abs() < 0.005 && (h + 0.68).abs() < 0.005);
        assert!(analytic_gains_epr1::<f64>(2, 1.0).is_err());
    }

    #[test]
    fn structures_map_parameters() {
        let t = GainStructure::<f64>::Tied { n: 3 }.gains(&[-0.5, 0.9]).unwrap();
        assert_eq!(t.h, vec![1.0, -0.5, -0.5]);
        assert_eq!(t.g, vec![1.0, 0.9, 0.9]);
        let a = GainStructure::<f64>::Arms { n: 4 }.gains(&[-0.7, -0.5, 0.8]).unwrap();
        assert_eq!(a.h, vec![1.0, -0.7, -0.7, -0.5]);
        assert_eq!(a.g, vec![1.0, 0.8, 0.8, -0.5]);
        let p = GainStructure::<f64>::PGains { n: 4, free: vec![0, 3] }.gains(&[0.2, 0.3]).unwrap();
        assert_eq!(p.g, vec![0.2, 1.0, 1.0, 0.3]);
        assert!(GainStructure::<f64>::Tied { n: 3 }.gains(&[1.0]).is_err());
        assert_eq!(vlf_free_modes(VlfForm::II, 4), vec![0, 3]);
    }

    #[test]
    fn ghz_optimum_matches_closed_form() {
        let r = 1.0f64;
        let state = build_ghz(3, r).unwrap();
        let res = optimize_gains(&state, CriterionId::C5, &GainStructure::Tied { n: 3 }, &Default::default()).unwrap();
        let (g, h) = analytic_gains_ghz(3, r).unwrap();
        assert!((res.params[0] - h).abs() < 0.01 && (res.params[1] - g).abs() < 0.01);
        assert!(res.converged);
        let analytic = GainStructure::Tied { n: 3 }.gains(&[h, g]).unwrap();
        let at_analytic = evaluate_fast(&state, CriterionId::C5, &analytic).unwrap().ent_ratio();
        assert!(res.ent_ratio <= at_analytic + 1e-6);
    }

    #[test]
    fn vacuum_never_violates() {
        let vac = GaussianState::<f64>::vacuum(3).unwrap();
        for c in [CriterionId::C1, CriterionId::C5, CriterionId::C6] {
            let s = default_structure(StateFamily::Vacuum, 3, c);
            let res = optimize_gains(&vac, c, &s, &Default::default()).unwrap();
            assert!(res.ent_ratio >= 1.0 - 1e-12, "{c}: {}", res.ent_ratio);
        }
        let res = optimize_gains(&vac, CriterionId::C5, &GainStructure::Tied { n: 3 }, &Default::default()).unwrap();
        assert_eq!(res.params, vec![0.0, 0.0]);
    }

    #[test]
    fn mismatches_rejected() {
        let s = build_ghz(3, 0.5f64).unwrap();
        let pg = GainStructure::PGains { n: 3, free: vec![0, 1, 2] };
        assert!(optimize_gains(&s, CriterionId::C5, &pg, &Default::default()).is_err());
        assert!(optimize_gains(&s, CriterionId::C1, &GainStructure::Tied { n: 3 }, &Default::default()).is_err());
        assert!(optimize_gains(&s, CriterionId::C8, &GainStructure::Tied { n: 4 }, &Default::default()).is_err());
        let opts = OptimizeOptions { objective: Objective::SteeringRatio, init: None };
        let s4 = build_ghz(4, 0.5f64).unwrap();
        assert!(matches!(
            optimize_gains(&s4, CriterionId::C8, &GainStructure::Tied { n: 4 }, &opts),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn sweep_warm_and_cold_agree() {
        let mut cfg = SweepConfig {
            family: StateFamily::EprI,
            n: 3,
            criterion: CriterionId::C5,
            r: 0.0f64,
            loss: vec![],
            axis: SweepAxis::Squeeze,
            values: vec![0.25, 0.5, 1.0],
            gains: GainChoice::Optimize { structure: GainStructure::Tied { n: 3 }, objective: Objective::EntRatio },
            warm_start: false,
            threads: Some(2),
        };
        let cold = sweep(&cfg).unwrap();
        cfg.warm_start = true;
        let warm = sweep(&cfg).unwrap();
        for (a, b) in cold.iter().zip(&warm) {
            assert!((a.report.ent_ratio - b.report.ent_ratio).abs() < 1e-6);
        }
        let state = build_epr_type_i(3, 1.0).unwrap();
        assert_eq!(cfg.state_at(1.0).unwrap(), AnyState::Pure(state));
    }

    #[test]
    fn analytic_sweep_on_loss_axis() {
        let cfg = SweepConfig {
            family: StateFamily::Ghz,
            n: 3,
            criterion: CriterionId::C5,
            r: 2.0f64,
            loss: vec![],
            axis: SweepAxis::Efficiency { modes: vec![0] },
            values: vec![1.0, 0.5],
            gains: GainChoice::Analytic,
            warm_start: false,
            threads: None,
        };
        let rows = sweep(&cfg).unwrap();
        assert!(rows[0].report.ent_ratio < rows[1].report.ent_ratio);
    }
}
