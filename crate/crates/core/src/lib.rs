//! Gaussian-state witnesses for multipartite continuous-variable entanglement
//! and EPR steering.
//!
//! Everything is generic over a [`Real`] scalar (`f64` or `f32`); the `*64`
//! aliases below cover the common case.

pub mod error;
pub mod gaussian;
pub mod matrix;
pub mod networks;
pub mod optimizer;
pub mod partitions;
pub mod scalar;
pub mod witnesses;

pub use error::{Error, Result};
pub use gaussian::{mix, AnyState, GainVector, GaussianState, MixedState, Orientation, Quadratures, SqueezeSpec};
pub use matrix::Matrix;
pub use networks::{
    build_counterexample, build_epr_type_i, build_epr_type_ii, build_ghz, counterexample_with, Element, Input,
    NetworkSpec, StateFamily,
};
pub use optimizer::{
    analytic_gains_epr1, analytic_gains_ghz, default_structure, optimize_gains, sweep, GainChoice, GainStructure,
    Objective, OptimizationResult, OptimizeOptions, SweepAxis, SweepConfig, SweepRow,
};
pub use partitions::{biseparable_bound, enumerate_bipartitions, genuine_bound, steering_bound, Bipartition};
pub use scalar::Real;
pub use witnesses::{evaluate, CriterionId, VlfForm, WitnessReport};

pub type GaussianState64 = GaussianState<f64>;
pub type GaussianState32 = GaussianState<f32>;
pub type MixedState64 = MixedState<f64>;
pub type AnyState64 = AnyState<f64>;
pub type GainVector64 = GainVector<f64>;
pub type NetworkSpec64 = NetworkSpec<f64>;
pub type WitnessReport64 = WitnessReport<f64>;
pub type SweepConfig64 = SweepConfig<f64>;
