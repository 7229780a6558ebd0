//! Variance witnesses for multipartite entanglement and EPR steering.
//!
//! Each criterion compares a left-hand side built from `Var(u)` and `Var(v)`
//! with a bound. `ent_ratio = lhs / ent_bound < 1` certifies the property the
//! criterion targets: full inseparability for a single vLF form, genuine
//! multipartite entanglement for C1 to C10. A criterion with a steering bound
//! additionally reports whether `lhs` falls below it.
//!
//! Gains are passed as a [`GainVector`]. Criteria built from vLF forms read
//! only `g` (the x-combinations are fixed differences), and C3, C4 and C7 use
//! fixed gains and ignore the argument.

use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::gaussian::{GainVector, Quadratures};
use crate::partitions::{genuine_bound, partition_bounds, steering_bound, Bipartition};
use crate::scalar::Real;

/// The six two-mode vLF forms. I to III exist for N ≥ 3, IV to VI for N = 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VlfForm {
    I,
    II,
    III,
    IV,
    V,
    VI,
}

impl VlfForm {
    pub const ALL: [VlfForm; 6] = [Self::I, Self::II, Self::III, Self::IV, Self::V, Self::VI];
    pub const TRIPARTITE: [VlfForm; 3] = [Self::I, Self::II, Self::III];

    /// Zero-based modes entering `u = x_i − x_j`.
    pub fn pair(self) -> (usize, usize) {
        match self {
            Self::I => (0, 1),
            Self::II => (1, 2),
            Self::III => (0, 2),
            Self::IV => (2, 3),
            Self::V => (1, 3),
            Self::VI => (0, 3),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Self::I => "I",
            Self::II => "II",
            Self::III => "III",
            Self::IV => "IV",
            Self::V => "V",
            Self::VI => "VI",
        }
    }

    /// Gains of the form on `n` modes: `h = e_i − e_j`, `g` with 1 on the pair and `free` elsewhere.
    pub fn gains<T: Real>(self, n: usize, free: &[T]) -> Result<GainVector<T>> {
        let (i, j) = self.pair();
        if j >= n || !(3..=4).contains(&n) {
            return invalid(format!("vLF form {} is not defined for {n} modes", self.label()));
        }
        if free.len() != n {
            return invalid(format!("expected {n} p-gains, got {}", free.len()));
        }
        let mut h = vec![T::zero(); n];
        h[i] = T::one();
        h[j] = -T::one();
        let mut g = free.to_vec();
        g[i] = T::one();
        g[j] = T::one();
        GainVector::new(h, g)
    }
}

impl fmt::Display for VlfForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CriterionId {
    /// Single vLF sum form `B`.
    Vlf(VlfForm),
    /// Single vLF product form `S`.
    VlfProduct(VlfForm),
    /// `B_I + B_II + B_III`.
    C1,
    /// `S_I + S_II + S_III`.
    C2,
    /// Fixed gains `h = (1, −1/√2, −1/√2)`, `g = (1, 1/√2, 1/√2)`, sum form.
    C3,
    /// C3 gains, product form.
    C4,
    /// General tripartite gains, sum form.
    C5,
    /// General tripartite gains, product form.
    C6,
    /// Smallest pair of unit-gain vLF sums.
    C7,
    /// General N-partite gains, sum form.
    C8,
    /// Sum of the six four-mode vLF forms.
    C9,
    /// `I + B_II` on four modes.
    C10,
}

/// Which part of a [`GainVector`] a criterion reads.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GainUse {
    /// Both `h` and `g`.
    Full,
    /// Only `g`; the x-combinations are fixed.
    POnly,
    /// Neither.
    Fixed,
}

impl CriterionId {
    pub fn gain_use(self) -> GainUse {
        match self {
            Self::C5 | Self::C6 | Self::C8 => GainUse::Full,
            Self::C3 | Self::C4 | Self::C7 => GainUse::Fixed,
            _ => GainUse::POnly,
        }
    }

    /// Required mode count, or `None` when any N ≥ 2 is accepted.
    pub fn n_modes(self) -> Option<usize> {
        match self {
            Self::C8 => None,
            Self::C9 | Self::C10 => Some(4),
            Self::Vlf(f) | Self::VlfProduct(f) if f > VlfForm::III => Some(4),
            Self::Vlf(_) | Self::VlfProduct(_) => None,
            _ => Some(3),
        }
    }

    pub fn is_product(self) -> bool {
        matches!(self, Self::VlfProduct(_) | Self::C2 | Self::C4 | Self::C6)
    }
}

impl fmt::Display for CriterionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Vlf(form) => write!(f, "vlf{}", form.label().to_lowercase()),
            Self::VlfProduct(form) => write!(f, "vlfp{}", form.label().to_lowercase()),
            other => {
                let n = match other {
                    Self::C1 => 1,
                    Self::C2 => 2,
                    Self::C3 => 3,
                    Self::C4 => 4,
                    Self::C5 => 5,
                    Self::C6 => 6,
                    Self::C7 => 7,
                    Self::C8 => 8,
                    Self::C9 => 9,
                    _ => 10,
                };
                write!(f, "c{n}")
            }
        }
    }
}

impl FromStr for CriterionId {
    type Err = Error;

    /// Accepts `c1`..`c10`, `vlfi`..`vlfvi` and `vlfpi`..`vlfpvi` (case-insensitive).
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        let form = |tail: &str| VlfForm::ALL.into_iter().find(|f| f.label().eq_ignore_ascii_case(tail));
        let parsed = match lower.as_str() {
            "c1" => Some(Self::C1),
            "c2" => Some(Self::C2),
            "c3" => Some(Self::C3),
            "c4" => Some(Self::C4),
            "c5" => Some(Self::C5),
            "c6" => Some(Self::C6),
            "c7" => Some(Self::C7),
            "c8" => Some(Self::C8),
            "c9" => Some(Self::C9),
            "c10" => Some(Self::C10),
            _ => {
                if let Some(t) = lower.strip_prefix("vlfp") {
                    form(t).map(Self::VlfProduct)
                } else if let Some(t) = lower.strip_prefix("vlf") {
                    form(t).map(Self::Vlf)
                } else {
                    None
                }
            }
        };
        parsed.ok_or_else(|| Error::InvalidArgument(format!("unknown criterion '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WitnessReport<T> {
    pub criterion: CriterionId,
    pub lhs: T,
    pub ent_bound: T,
    pub steer_bound: Option<T>,
    pub ent_ratio: T,
    pub verdict_entanglement: bool,
    pub verdict_steering: Option<bool>,
    /// Named constituents of `lhs`, e.g. each `B_J` of a summed criterion.
    pub components: Vec<(String, T)>,
    /// Per-bipartition bounds for gain-dependent criteria (sum form, or halved for product form).
    pub partition_bounds: Vec<(Bipartition, T)>,
}

impl<T: Real> WitnessReport<T> {
    fn new(criterion: CriterionId, ev: Evaluation<T>, components: Vec<(String, T)>) -> Self {
        let ent_ratio = ev.ent_ratio();
        Self {
            criterion,
            lhs: ev.lhs,
            ent_bound: ev.ent_bound,
            steer_bound: ev.steer_bound,
            ent_ratio,
            verdict_entanglement: ent_ratio < T::one(),
            verdict_steering: ev.steer_bound.map(|b| ev.lhs < b),
            components,
            partition_bounds: Vec::new(),
        }
    }

    /// `lhs / steer_bound`, when a steering bound exists.
    pub fn steer_ratio(&self) -> Option<T> {
        self.steer_bound.map(|b| safe_ratio(self.lhs, b))
    }
}

fn safe_ratio<T: Real>(lhs: T, bound: T) -> T {
    if bound > T::zero() {
        lhs / bound
    } else {
        T::infinity()
    }
}

/// Bare numbers of a criterion evaluation, without labels or partition listings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation<T> {
    pub lhs: T,
    pub ent_bound: T,
    pub steer_bound: Option<T>,
}

impl<T: Real> Evaluation<T> {
    pub fn ent_ratio(&self) -> T {
        safe_ratio(self.lhs, self.ent_bound)
    }

    pub fn steer_ratio(&self) -> Option<T> {
        self.steer_bound.map(|b| safe_ratio(self.lhs, b))
    }
}

fn check_modes<T: Real>(state: &impl Quadratures<T>, id: CriterionId) -> Result<usize> {
    let n = state.n_modes();
    match id.n_modes() {
        Some(req) if req != n => invalid(format!("criterion {id} needs {req} modes, state has {n}")),
        None if n < 2 => invalid(format!("criterion {id} needs at least 2 modes")),
        _ => Ok(n),
    }
}

fn sum_and_product<T: Real>(state: &impl Quadratures<T>, gains: &GainVector<T>) -> Result<(T, T)> {
    let (vu, vv) = state.quadrature_variances(gains)?;
    Ok((vu + vv, vu.sqrt() * vv.sqrt()))
}

/// Gains of Criteria 3 and 4.
pub fn simple_gains<T: Real>() -> GainVector<T> {
    let q = T::one() / T::lit(2.0).sqrt();
    GainVector::new(vec![T::one(), -q, -q], vec![T::one(), q, q]).expect("fixed lengths")
}

fn forms_for(id: CriterionId) -> &'static [VlfForm] {
    match id {
        CriterionId::C9 => &VlfForm::ALL,
        _ => &VlfForm::TRIPARTITE,
    }
}

/// `I = Var((x₁−x₄)−(x₂+x₃)) + Var(p₁−p₄+p₂+p₃)`.
pub fn four_mode_i_gains<T: Real>() -> GainVector<T> {
    let (o, m) = (T::one(), -T::one());
    GainVector::new(vec![o, m, m, m], vec![o, o, o, m]).expect("fixed lengths")
}

type Components<T> = Vec<(String, T)>;

/// Values of each constituent term plus the numeric evaluation.
fn evaluate_parts<T: Real>(
    state: &impl Quadratures<T>,
    id: CriterionId,
    gains: &GainVector<T>,
    want_parts: bool,
) -> Result<(Evaluation<T>, Components<T>)> {
    let n = check_modes(state, id)?;
    let two = T::lit(2.0);
    let mut parts = Vec::new();
    let mut push = |name: &dyn Fn() -> String, v: T| {
        if want_parts {
            parts.push((name(), v));
        }
    };
    let ev = match id {
        CriterionId::Vlf(form) | CriterionId::VlfProduct(form) => {
            let (s, p) = sum_and_product(state, &form.gains(n, &gains.g)?)?;
            if id.is_product() {
                Evaluation { lhs: p, ent_bound: two, steer_bound: Some(T::one()) }
            } else {
                Evaluation { lhs: s, ent_bound: T::lit(4.0), steer_bound: Some(two) }
            }
        }
        CriterionId::C1 | CriterionId::C2 | CriterionId::C9 => {
            let product = id.is_product();
            let mut lhs = T::zero();
            for &form in forms_for(id) {
                let (s, p) = sum_and_product(state, &form.gains(n, &gains.g)?)?;
                let v = if product { p } else { s };
                let tag = if product { "S" } else { "B" };
                push(&|| format!("{tag}_{form}"), v);
                lhs += v;
            }
            match id {
                CriterionId::C1 => Evaluation { lhs, ent_bound: T::lit(8.0), steer_bound: Some(T::lit(4.0)) },
                CriterionId::C2 => Evaluation { lhs, ent_bound: T::lit(4.0), steer_bound: Some(two) },
                _ => Evaluation { lhs, ent_bound: T::lit(12.0), steer_bound: None },
            }
        }
        CriterionId::C3 | CriterionId::C4 | CriterionId::C5 | CriterionId::C6 | CriterionId::C8 => {
            let fixed;
            let gains = if matches!(id, CriterionId::C3 | CriterionId::C4) {
                fixed = simple_gains();
                &fixed
            } else {
                gains
            };
            let (vu, vv) = state.quadrature_variances(gains)?;
            push(&|| "var_u".into(), vu);
            push(&|| "var_v".into(), vv);
            let genuine = genuine_bound(gains)?;
            let steer = if n == 3 { Some(steering_bound(gains)?) } else { None };
            if id.is_product() {
                Evaluation { lhs: vu.sqrt() * vv.sqrt(), ent_bound: genuine / two, steer_bound: steer.map(|b| b / two) }
            } else {
                Evaluation { lhs: vu + vv, ent_bound: genuine, steer_bound: steer }
            }
        }
        CriterionId::C7 => {
            let ones = vec![T::one(); 3];
            let mut b = [T::zero(); 3];
            for (k, form) in VlfForm::TRIPARTITE.into_iter().enumerate() {
                b[k] = sum_and_product(state, &form.gains(3, &ones)?)?.0;
                push(&|| format!("B_{form}"), b[k]);
            }
            let lhs = (b[0] + b[1]).min(b[0] + b[2]).min(b[1] + b[2]);
            Evaluation { lhs, ent_bound: T::lit(4.0), steer_bound: None }
        }
        CriterionId::C10 => {
            let (i_term, _) = sum_and_product(state, &four_mode_i_gains())?;
            let (b2, _) = sum_and_product(state, &VlfForm::II.gains(4, &gains.g)?)?;
            push(&|| "I".into(), i_term);
            push(&|| "B_II".into(), b2);
            Evaluation { lhs: i_term + b2, ent_bound: T::lit(4.0), steer_bound: None }
        }
    };
    Ok((ev, parts))
}

/// Numbers only; used in optimisation loops.
pub fn evaluate_fast<T: Real>(
    state: &impl Quadratures<T>,
    id: CriterionId,
    gains: &GainVector<T>,
) -> Result<Evaluation<T>> {
    Ok(evaluate_parts(state, id, gains, false)?.0)
}

/// Full report for any criterion.
pub fn evaluate<T: Real>(
    state: &impl Quadratures<T>,
    id: CriterionId,
    gains: &GainVector<T>,
) -> Result<WitnessReport<T>> {
    let (ev, parts) = evaluate_parts(state, id, gains, true)?;
    let mut report = WitnessReport::new(id, ev, parts);
    let listed = match id {
        CriterionId::C3 | CriterionId::C4 => Some(simple_gains()),
        CriterionId::C5 | CriterionId::C6 | CriterionId::C8 => Some(gains.clone()),
        _ => None,
    };
    if let Some(g) = listed {
        let scale = if id.is_product() { T::lit(0.5) } else { T::one() };
        report.partition_bounds = partition_bounds(&g)?.into_iter().map(|(p, b)| (p, b * scale)).collect();
    }
    Ok(report)
}

/// Placeholder gains for criteria that ignore them.
fn unit_gains<T: Real>(n: usize) -> GainVector<T> {
    GainVector::new(vec![T::one(); n], vec![T::one(); n]).expect("n >= 1")
}

fn p_gains<T: Real>(g: &[T]) -> Result<GainVector<T>> {
    GainVector::new(vec![T::zero(); g.len()], g.to_vec())
}

/// Single vLF sum form with p-gains `g` (pair entries ignored).
pub fn vlf<T: Real>(state: &impl Quadratures<T>, which: VlfForm, g: &[T]) -> Result<WitnessReport<T>> {
    evaluate(state, CriterionId::Vlf(which), &p_gains(g)?)
}

/// Single vLF product form.
pub fn vlf_product<T: Real>(state: &impl Quadratures<T>, which: VlfForm, g: &[T]) -> Result<WitnessReport<T>> {
    evaluate(state, CriterionId::VlfProduct(which), &p_gains(g)?)
}

pub fn criterion_sum_vlf<T: Real>(state: &impl Quadratures<T>, g: &[T]) -> Result<WitnessReport<T>> {
    evaluate(state, CriterionId::C1, &p_gains(g)?)
}

pub fn criterion_product_vlf<T: Real>(state: &impl Quadratures<T>, g: &[T]) -> Result<WitnessReport<T>> {
    evaluate(state, CriterionId::C2, &p_gains(g)?)
}

/// Criterion 3 (sum) and Criterion 4 (product) reports.
pub fn criterion_simple<T: Real>(state: &impl Quadratures<T>) -> Result<(WitnessReport<T>, WitnessReport<T>)> {
    let g = unit_gains(state.n_modes().max(1));
    Ok((evaluate(state, CriterionId::C3, &g)?, evaluate(state, CriterionId::C4, &g)?))
}

/// Criterion 5 (sum) and Criterion 6 (product) reports.
pub fn criterion_general<T: Real>(
    state: &impl Quadratures<T>,
    gains: &GainVector<T>,
) -> Result<(WitnessReport<T>, WitnessReport<T>)> {
    Ok((evaluate(state, CriterionId::C5, gains)?, evaluate(state, CriterionId::C6, gains)?))
}

pub fn criterion_two_vlf<T: Real>(state: &impl Quadratures<T>) -> Result<WitnessReport<T>> {
    evaluate(state, CriterionId::C7, &unit_gains(state.n_modes().max(1)))
}

pub fn criterion_npartite<T: Real>(state: &impl Quadratures<T>, gains: &GainVector<T>) -> Result<WitnessReport<T>> {
    evaluate(state, CriterionId::C8, gains)
}

pub fn criterion_four_sum<T: Real>(state: &impl Quadratures<T>, g: &[T]) -> Result<WitnessReport<T>> {
    evaluate(state, CriterionId::C9, &p_gains(g)?)
}

/// Criterion 10 with the free gains `g₁`, `g₄` of `B_II`.
pub fn criterion_combined<T: Real>(state: &impl Quadratures<T>, g1: T, g4: T) -> Result<WitnessReport<T>> {
    let o = T::one();
    evaluate(state, CriterionId::C10, &p_gains(&[g1, o, o, g4])?)
}
