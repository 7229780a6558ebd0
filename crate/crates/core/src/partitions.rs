//! Bipartitions of N modes and the right-hand sides they impose.

use std::fmt;

use crate::error::{invalid, Error, Result};
use crate::gaussian::GainVector;
use crate::scalar::Real;

/// Largest mode count accepted by [`enumerate_bipartitions`].
pub const MAX_PARTITION_MODES: usize = 20;

/// A split of modes `0..n` into two nonempty groups, canonicalised so that
/// mode 0 lies in `set_a`. Displayed with one-based labels, e.g. `12-3`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bipartition {
    pub set_a: Vec<usize>,
    pub set_b: Vec<usize>,
}

impl Bipartition {
    /// Builds the canonical bipartition whose `set_b` is given by `mask` over modes `1..n`.
    fn from_mask(n: usize, mask: u32) -> Self {
        let (mut set_a, mut set_b) = (vec![0], Vec::new());
        for m in 1..n {
            if mask >> (m - 1) & 1 == 1 {
                set_b.push(m);
            } else {
                set_a.push(m);
            }
        }
        Self { set_a, set_b }
    }

    pub fn n_modes(&self) -> usize {
        self.set_a.len() + self.set_b.len()
    }

    /// Canonical form of an arbitrary split; errors unless it covers `0..n` exactly once.
    pub fn new(set_a: Vec<usize>, set_b: Vec<usize>) -> Result<Self> {
        let n = set_a.len() + set_b.len();
        let mut seen = vec![false; n];
        for &m in set_a.iter().chain(&set_b) {
            if m >= n || std::mem::replace(&mut seen[m], true) {
                return invalid(format!("bipartition sets do not cover modes 0..{n} exactly once"));
            }
        }
        if set_a.is_empty() || set_b.is_empty() {
            return invalid("both sides of a bipartition must be nonempty");
        }
        let (mut a, mut b) = if set_a.contains(&0) { (set_a, set_b) } else { (set_b, set_a) };
        a.sort_unstable();
        b.sort_unstable();
        Ok(Self { set_a: a, set_b: b })
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = |s: &[usize]| {
            let sep = if self.n_modes() > 9 { "." } else { "" };
            s.iter().map(|m| (m + 1).to_string()).collect::<Vec<_>>().join(sep)
        };
        write!(f, "{}-{}", label(&self.set_a), label(&self.set_b))
    }
}

fn check_n(n: usize) -> Result<()> {
    if !(2..=MAX_PARTITION_MODES).contains(&n) {
        return invalid(format!("bipartitions need 2 <= N <= {MAX_PARTITION_MODES}, got {n}"));
    }
    Ok(())
}

/// All `2^(N-1) - 1` canonical bipartitions, ordered by the bitmask of `set_b`.
pub fn enumerate_bipartitions(n: usize) -> Result<Vec<Bipartition>> {
    check_n(n)?;
    Ok((1..1u32 << (n - 1)).map(|mask| Bipartition::from_mask(n, mask)).collect())
}

/// `2(|Σ_A hᵢgᵢ| + |Σ_B hᵢgᵢ|)`: the sum-form bound obeyed by states separable across `p`.
/// The product-form bound is half of this.
pub fn biseparable_bound<T: Real>(gains: &GainVector<T>, p: &Bipartition) -> Result<T> {
    if gains.len() != p.n_modes() {
        return invalid(format!("gain vector has {} entries, bipartition covers {} modes", gains.len(), p.n_modes()));
    }
    let hg = gains.products();
    let side = |s: &[usize]| s.iter().map(|&m| hg[m]).sum::<T>().abs();
    Ok((side(&p.set_a) + side(&p.set_b)) * T::lit(2.0))
}

/// Bounds for every canonical bipartition, in enumeration order.
pub fn partition_bounds<T: Real>(gains: &GainVector<T>) -> Result<Vec<(Bipartition, T)>> {
    let n = gains.len();
    enumerate_bipartitions(n)?.into_iter().map(|p| biseparable_bound(gains, &p).map(|b| (p, b))).collect()
}

/// Minimum of [`biseparable_bound`] over all bipartitions.
pub fn genuine_bound<T: Real>(gains: &GainVector<T>) -> Result<T> {
    let n = gains.len();
    check_n(n)?;
    let hg = gains.products();
    let total: T = hg.iter().copied().sum();
    // Walk masks without materialising the partitions; this sits in optimizer loops.
    let mut best = T::infinity();
    for mask in 1..1u32 << (n - 1) {
        let mut b = T::zero();
        for (m, &t) in hg.iter().enumerate().skip(1) {
            if mask >> (m - 1) & 1 == 1 {
                b += t;
            }
        }
        let a = total - b;
        best = best.min(a.abs() + b.abs());
    }
    Ok(best * T::lit(2.0))
}

/// Sum-form bound `2 min |gᵢhᵢ|` for genuine tripartite steering. Defined for N = 3 only.
pub fn steering_bound<T: Real>(gains: &GainVector<T>) -> Result<T> {
    if gains.len() != 3 {
        return Err(Error::Unsupported(format!("steering bounds are defined for three modes, got {}", gains.len())));
    }
    let min = gains.products().into_iter().map(|v| v.abs()).fold(T::infinity(), T::min);
    Ok(min * T::lit(2.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gv(h: &[f64], g: &[f64]) -> GainVector<f64> {
        GainVector::from_f64(h, g).unwrap()
    }

    #[test]
    fn enumeration_counts_and_labels() {
        let three: Vec<String> = enumerate_bipartitions(3).unwrap().iter().map(ToString::to_string).collect();
        assert_eq!(three, ["13-2", "12-3", "1-23"]);
        let four: Vec<String> = enumerate_bipartitions(4).unwrap().iter().map(ToString::to_string).collect();
        assert_eq!(four, ["134-2", "124-3", "14-23", "123-4", "13-24", "12-34", "1-234"]);
        assert_eq!(enumerate_bipartitions(5).unwrap().len(), 15);
        assert_eq!(enumerate_bipartitions(9).unwrap().len(), 255);
        assert!(enumerate_bipartitions(1).is_err());
        assert!(enumerate_bipartitions(21).is_err());
    }

    #[test]
    fn canonical_constructor() {
        let p = Bipartition::new(vec![2], vec![1, 0]).unwrap();
        assert_eq!(p.set_a, vec![0, 1]);
        assert_eq!(p.set_b, vec![2]);
        assert!(Bipartition::new(vec![0, 0], vec![1]).is_err());
        assert!(Bipartition::new(vec![0, 1], vec![]).is_err());
    }

    #[test]
    fn biseparable_examples() {
        let p12_3 = Bipartition::new(vec![0, 1], vec![2]).unwrap();
        let p13_2 = Bipartition::new(vec![0, 2], vec![1]).unwrap();
        assert_eq!(biseparable_bound(&gv(&[1.0, -1.0, 0.0], &[1.0, 1.0, 0.7]), &p12_3).unwrap(), 0.0);
        assert_eq!(biseparable_bound(&gv(&[1.0, -1.0, 0.0], &[1.0, 1.0, 1.0]), &p13_2).unwrap(), 4.0);
        for p in enumerate_bipartitions(5).unwrap() {
            assert_eq!(biseparable_bound(&gv(&[1.0; 5], &[1.0; 5]), &p).unwrap(), 10.0);
        }
        assert!(biseparable_bound(&gv(&[1.0; 4], &[1.0; 4]), &p12_3).is_err());
    }

    #[test]
    fn genuine_examples() {
        let (h, g) = (-0.4, 0.9);
        assert!((genuine_bound(&gv(&[1.0, h, h], &[1.0, g, g])).unwrap() - 2.0).abs() < 1e-15);
        for n in 3..=9 {
            let s = 1.0 / ((n - 1) as f64).sqrt();
            let mut h = vec![-s; n];
            let mut g = vec![s; n];
            h[0] = 1.0;
            g[0] = 1.0;
            let b = genuine_bound(&gv(&h, &g)).unwrap();
            assert!((b - 4.0 / (n - 1) as f64).abs() < 1e-12, "N={n}: {b}");
            let listed = partition_bounds(&gv(&h, &g)).unwrap();
            let min = listed.iter().map(|(_, b)| *b).fold(f64::INFINITY, f64::min);
            assert!((min - b).abs() < 1e-12);
        }
    }

    #[test]
    fn steering_examples() {
        let q = 1.0 / 2f64.sqrt();
        let b = steering_bound(&gv(&[1.0, -q, -q], &[1.0, q, q])).unwrap();
        assert!((b - 1.0).abs() < 1e-15);
        assert_eq!(steering_bound(&gv(&[1.0, 0.0, 1.0], &[1.0, 1.0, 1.0])).unwrap(), 0.0);
        let (h, g) = (-0.5, 0.8);
        assert!((steering_bound(&gv(&[1.0, h, h], &[1.0, g, g])).unwrap() - 0.8).abs() < 1e-15);
        assert!(matches!(steering_bound(&gv(&[1.0; 4], &[1.0; 4])), Err(Error::Unsupported(_))));
    }
}
