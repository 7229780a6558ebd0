//! Named multimode states built from squeezed inputs and beam-splitter cascades.
//!
//! Every builder first produces a [`NetworkSpec`] and then executes it, so the
//! same wiring can be inspected, serialised or perturbed with loss.

use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::gaussian::{mix, AnyState, GaussianState, MixedState, SqueezeSpec};
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Input<T> {
    Squeezed(SqueezeSpec<T>),
    Vacuum,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Element<T> {
    BeamSplitter { i: usize, j: usize, reflectivity: T },
    Loss { mode: usize, eta: T },
}

/// Input modes (in order) followed by an ordered list of optical elements.
#[derive(Debug, Clone, PartialEq)]
pub struct NetworkSpec<T> {
    pub inputs: Vec<Input<T>>,
    pub ops: Vec<Element<T>>,
}

impl<T: Real> NetworkSpec<T> {
    pub fn new(inputs: Vec<Input<T>>, ops: Vec<Element<T>>) -> Result<Self> {
        let spec = Self { inputs, ops };
        spec.validate()?;
        Ok(spec)
    }

    pub fn n_modes(&self) -> usize {
        self.inputs.len()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.inputs.len();
        if n == 0 {
            return invalid("network has no inputs");
        }
        for input in &self.inputs {
            if let Input::Squeezed(s) = input {
                SqueezeSpec::new(s.r, s.orientation)?;
            }
        }
        let unit = |v: T| v >= T::zero() && v <= T::one();
        for (k, op) in self.ops.iter().enumerate() {
            match *op {
                Element::BeamSplitter { i, j, reflectivity } => {
                    if i >= n || j >= n || i == j {
                        return invalid(format!("element {k}: bad beam-splitter modes ({i}, {j})"));
                    }
                    if !unit(reflectivity) {
                        return invalid(format!("element {k}: reflectivity {reflectivity} outside [0, 1]"));
                    }
                }
                Element::Loss { mode, eta } => {
                    if mode >= n {
                        return invalid(format!("element {k}: loss mode {mode} out of range"));
                    }
                    if !unit(eta) {
                        return invalid(format!("element {k}: efficiency {eta} outside [0, 1]"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn execute(&self) -> Result<GaussianState<T>> {
        self.validate()?;
        let singles = self
            .inputs
            .iter()
            .map(|input| match input {
                Input::Squeezed(s) => GaussianState::squeezed_vacuum(*s),
                Input::Vacuum => GaussianState::vacuum(1),
            })
            .collect::<Result<Vec<_>>>()?;
        let mut state = GaussianState::tensor(&singles)?;
        for op in &self.ops {
            state = match *op {
                Element::BeamSplitter { i, j, reflectivity } => state.beam_splitter(i, j, reflectivity)?,
                Element::Loss { mode, eta } => state.loss(mode, eta)?,
            };
        }
        Ok(state)
    }

    /// Appends a loss element.
    pub fn with_loss(mut self, mode: usize, eta: T) -> Result<Self> {
        self.ops.push(Element::Loss { mode, eta });
        self.validate()?;
        Ok(self)
    }
}

fn bs<T: Real>(i: usize, j: usize, reflectivity: T) -> Element<T> {
    Element::BeamSplitter { i, j, reflectivity }
}

fn ratio<T: Real>(den: usize) -> T {
    T::one() / T::from_usize_lossy(den)
}

/// GHZ cascade: one p-squeezed and N-1 x-squeezed inputs; splitter k joins
/// the running trunk with input k+1 at `R = 1/(N+1-k)`.
pub fn ghz_network<T: Real>(n: usize, r: T) -> Result<NetworkSpec<T>> {
    if n < 2 {
        return invalid(format!("GHZ state needs N >= 2, got {n}"));
    }
    let mut inputs = vec![Input::Squeezed(SqueezeSpec::p(r)?)];
    inputs.extend((1..n).map(|_| Input::Squeezed(SqueezeSpec::x(r).expect("validated above"))));
    let ops = (1..n).map(|k| bs(k - 1, k, ratio(n + 1 - k))).collect();
    NetworkSpec::new(inputs, ops)
}

/// Two-mode squeezer on modes 1, 2 followed by an equal-weight split of mode 2
/// over modes 2..N using vacuum inputs.
pub fn epr_type_i_network<T: Real>(n: usize, r: T) -> Result<NetworkSpec<T>> {
    if n < 3 {
        return invalid(format!("EPR-type state needs N >= 3, got {n}"));
    }
    let mut inputs = vec![Input::Squeezed(SqueezeSpec::p(r)?), Input::Squeezed(SqueezeSpec::x(r)?)];
    inputs.extend((2..n).map(|_| Input::Vacuum));
    let mut ops = vec![bs(0, 1, T::lit(0.5))];
    ops.extend((2..n).map(|k| bs(k - 1, k, ratio(n + 1 - k))));
    NetworkSpec::new(inputs, ops)
}

/// Arm layout of the symmetric EPR state, zero-based: `(right, left)`.
///
/// Modes 0 and 1 head the left and right arms; the remaining modes are dealt
/// alternately, right first. N=4 gives right {1,2}, left {0,3}.
pub fn epr_type_ii_arms(n: usize) -> (Vec<usize>, Vec<usize>) {
    let mut right = vec![1];
    let mut left = vec![0];
    for m in 2..n {
        if m % 2 == 0 {
            right.push(m);
        } else {
            left.push(m);
        }
    }
    (right, left)
}

/// Two-mode squeezer whose outputs are each split evenly over one arm.
///
/// Non-leading left-arm modes are sign-flipped (an `R = 1` splitter) so the
/// left arm carries `(x₁ − x₄ − …)/√l`.
pub fn epr_type_ii_network<T: Real>(n: usize, r: T) -> Result<NetworkSpec<T>> {
    if n < 3 {
        return invalid(format!("EPR-type state needs N >= 3, got {n}"));
    }
    let mut inputs = vec![Input::Squeezed(SqueezeSpec::p(r)?), Input::Squeezed(SqueezeSpec::x(r)?)];
    inputs.extend((2..n).map(|_| Input::Vacuum));
    let (right, left) = epr_type_ii_arms(n);
    let mut ops = vec![bs(0, 1, T::lit(0.5))];
    for arm in [&right, &left] {
        let k = arm.len();
        for t in 0..k.saturating_sub(1) {
            ops.push(bs(arm[t], arm[t + 1], ratio(k - t)));
        }
    }
    ops.extend(left.iter().skip(1).map(|&m| bs(0, m, T::one())));
    NetworkSpec::new(inputs, ops)
}

pub fn build_ghz<T: Real>(n: usize, r: T) -> Result<GaussianState<T>> {
    ghz_network(n, r)?.execute()
}

pub fn build_epr_type_i<T: Real>(n: usize, r: T) -> Result<GaussianState<T>> {
    epr_type_i_network(n, r)?.execute()
}

pub fn build_epr_type_ii<T: Real>(n: usize, r: T) -> Result<GaussianState<T>> {
    epr_type_ii_network(n, r)?.execute()
}

fn tmss<T: Real>(r: T) -> Result<GaussianState<T>> {
    GaussianState::tensor(&[
        GaussianState::squeezed_vacuum(SqueezeSpec::p(r)?)?,
        GaussianState::squeezed_vacuum(SqueezeSpec::x(r)?)?,
    ])?
    .beam_splitter(0, 1, T::lit(0.5))
}

/// Equal mixture of `TMSS(1,2) ⊗ ρ₃` and `ρ₁ ⊗ TMSS(2,3)`, where the lone
/// modes are squeezed by `r` in p.
pub fn build_counterexample<T: Real>(r: T) -> Result<MixedState<T>> {
    counterexample_with(r, SqueezeSpec::p(r)?)
}

/// Counterexample mixture with an explicit squeeze for the lone single-mode factors.
pub fn counterexample_with<T: Real>(r: T, lone: SqueezeSpec<T>) -> Result<MixedState<T>> {
    let pair = tmss(r)?;
    let single = GaussianState::squeezed_vacuum(lone)?;
    let a = GaussianState::tensor(&[pair.clone(), single.clone()])?;
    let b = GaussianState::tensor(&[single, pair])?;
    let half = T::lit(0.5);
    mix(vec![(half, a), (half, b)])
}

/// Named state presets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StateFamily {
    Ghz,
    EprI,
    EprII,
    Counterexample,
    Vacuum,
}

impl StateFamily {
    pub fn name(self) -> &'static str {
        match self {
            Self::Ghz => "ghz",
            Self::EprI => "epr1",
            Self::EprII => "epr2",
            Self::Counterexample => "counterexample",
            Self::Vacuum => "vacuum",
        }
    }

    /// Builds the preset; the counterexample requires `n = 3`.
    pub fn build<T: Real>(self, n: usize, r: T) -> Result<AnyState<T>> {
        Ok(match self {
            Self::Ghz => build_ghz(n, r)?.into(),
            Self::EprI => build_epr_type_i(n, r)?.into(),
            Self::EprII => build_epr_type_ii(n, r)?.into(),
            Self::Vacuum => GaussianState::vacuum(n)?.into(),
            Self::Counterexample => {
                if n != 3 {
                    return invalid(format!("the counterexample mixture has 3 modes, not {n}"));
                }
                build_counterexample(r)?.into()
            }
        })
    }
}

impl fmt::Display for StateFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StateFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Self::Ghz, Self::EprI, Self::EprII, Self::Counterexample, Self::Vacuum]
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown state preset '{s}'")))
    }
}
