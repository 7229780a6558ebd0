//! Random states for property and acceptance tests.
#![allow(dead_code)]

use cvwl_core::{mix, GainVector, GaussianState, MixedState, SqueezeSpec};
use rand::Rng;

fn random_inputs<R: Rng>(rng: &mut R, n: usize) -> GaussianState<f64> {
    let singles: Vec<_> = (0..n)
        .map(|_| {
            let r = rng.gen_range(0.0..2.0);
            let spec = if rng.gen_bool(0.5) { SqueezeSpec::x(r) } else { SqueezeSpec::p(r) };
            GaussianState::squeezed_vacuum(spec.unwrap()).unwrap()
        })
        .collect();
    GaussianState::tensor(&singles).unwrap()
}

/// Random splitters restricted to pairs inside `group`, then optional loss on its modes.
fn scramble<R: Rng>(rng: &mut R, mut s: GaussianState<f64>, group: &[usize]) -> GaussianState<f64> {
    if group.len() >= 2 {
        for _ in 0..2 * group.len() {
            let i = group[rng.gen_range(0..group.len())];
            let mut j = group[rng.gen_range(0..group.len())];
            while j == i {
                j = group[rng.gen_range(0..group.len())];
            }
            s = s.beam_splitter(i, j, rng.gen_range(0.0..=1.0)).unwrap();
        }
    }
    for &m in group {
        if rng.gen_bool(0.25) {
            s = s.loss(m, rng.gen_range(0.0..=1.0)).unwrap();
        }
    }
    s
}

/// Gaussian state separable across a random bipartition of `n` modes.
pub fn random_separable<R: Rng>(rng: &mut R, n: usize) -> GaussianState<f64> {
    let mask: u32 = rng.gen_range(1..(1u32 << n) - 1);
    let (a, b): (Vec<usize>, Vec<usize>) = (0..n).partition(|&k| mask >> k & 1 == 1);
    let s = random_inputs(rng, n);
    let s = scramble(rng, s, &a);
    scramble(rng, s, &b)
}

/// Mixture of 1 to 4 separable states with Dirichlet(1, …, 1) weights.
pub fn random_biseparable<R: Rng>(rng: &mut R, n: usize) -> MixedState<f64> {
    let k = rng.gen_range(1..=4);
    let raw: Vec<f64> = (0..k).map(|_| -(1.0 - rng.gen::<f64>()).ln()).collect();
    let total: f64 = raw.iter().sum();
    mix(raw.iter().map(|w| (w / total, random_separable(rng, n))).collect()).unwrap()
}

/// Gaussian state from random inputs and an unrestricted random splitter network.
pub fn random_state<R: Rng>(rng: &mut R, n: usize) -> GaussianState<f64> {
    let s = random_inputs(rng, n);
    let all: Vec<usize> = (0..n).collect();
    scramble(rng, s, &all)
}

pub fn random_gains<R: Rng>(rng: &mut R, n: usize) -> GainVector<f64> {
    let mut draw = || (0..n).map(|_| rng.gen_range(-2.0..2.0)).collect::<Vec<f64>>();
    let h = draw();
    let g = draw();
    GainVector::new(h, g).unwrap()
}
