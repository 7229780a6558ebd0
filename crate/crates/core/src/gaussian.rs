//! Covariance-matrix algebra for zero-mean multimode Gaussian states.
//!
//! Quadratures follow `x = a + a†`, `p = (a − a†)/i`, so the vacuum has unit
//! variance in every quadrature and a single mode obeys `ΔxΔp ≥ 1`. The
//! covariance of an N-mode state is stored in block order
//! `(x₁ … x_N, p₁ … p_N)`. `Δ` denotes a standard deviation throughout: a
//! squeezed quadrature has variance `e^{−2r}`.
//!
//! Mode indices are zero-based in this API.

use crate::error::{invalid, Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Real;

/// Which quadrature is squeezed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// `Var(x) = e^{−2r}`, `Var(p) = e^{2r}`.
    SqueezeX,
    /// `Var(p) = e^{−2r}`, `Var(x) = e^{2r}`.
    SqueezeP,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SqueezeSpec<T> {
    pub r: T,
    pub orientation: Orientation,
}

impl<T: Real> SqueezeSpec<T> {
    pub fn new(r: T, orientation: Orientation) -> Result<Self> {
        if r.is_nan() || r < T::zero() || !r.is_finite() {
            return invalid(format!("squeeze parameter must be finite and >= 0, got {r}"));
        }
        Ok(Self { r, orientation })
    }

    pub fn x(r: T) -> Result<Self> {
        Self::new(r, Orientation::SqueezeX)
    }

    pub fn p(r: T) -> Result<Self> {
        Self::new(r, Orientation::SqueezeP)
    }

    /// `(Var(x), Var(p))` of the squeezed vacuum.
    pub fn variances(&self) -> (T, T) {
        let two_r = self.r + self.r;
        let small = (-two_r).exp();
        let large = two_r.exp();
        match self.orientation {
            Orientation::SqueezeX => (small, large),
            Orientation::SqueezeP => (large, small),
        }
    }
}

/// Gains defining `u = Σ hᵢ xᵢ` and `v = Σ gᵢ pᵢ`.
#[derive(Debug, Clone, PartialEq)]
pub struct GainVector<T> {
    pub h: Vec<T>,
    pub g: Vec<T>,
}

impl<T: Real> GainVector<T> {
    pub fn new(h: Vec<T>, g: Vec<T>) -> Result<Self> {
        if h.len() != g.len() {
            return invalid(format!("gain lengths differ: {} x-gains vs {} p-gains", h.len(), g.len()));
        }
        if h.is_empty() {
            return invalid("gain vector is empty");
        }
        Ok(Self { h, g })
    }

    pub fn from_f64(h: &[f64], g: &[f64]) -> Result<Self> {
        Self::new(h.iter().map(|&v| T::lit(v)).collect(), g.iter().map(|&v| T::lit(v)).collect())
    }

    pub fn len(&self) -> usize {
        self.h.len()
    }

    pub fn is_empty(&self) -> bool {
        self.h.is_empty()
    }

    /// Elementwise `hᵢ gᵢ`.
    pub fn products(&self) -> Vec<T> {
        self.h.iter().zip(&self.g).map(|(&h, &g)| h * g).collect()
    }

    pub(crate) fn check_modes(&self, n_modes: usize) -> Result<()> {
        if self.len() != n_modes {
            return invalid(format!("gain vector has {} entries but the state has {} modes", self.len(), n_modes));
        }
        Ok(())
    }
}

/// Anything that can report `(Var(u), Var(v))` for a gain vector.
pub trait Quadratures<T: Real>: Sync {
    fn n_modes(&self) -> usize;

    /// `(Var(u), Var(v))` with `u = Σ hᵢxᵢ`, `v = Σ gᵢpᵢ`.
    fn quadrature_variances(&self, gains: &GainVector<T>) -> Result<(T, T)>;
}

/// Zero-mean N-mode Gaussian state.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianState<T> {
    n_modes: usize,
    cov: Matrix<T>,
}

impl<T: Real> GaussianState<T> {
    pub fn vacuum(n: usize) -> Result<Self> {
        if n == 0 {
            return invalid("a state needs at least one mode");
        }
        Ok(Self { n_modes: n, cov: Matrix::identity(2 * n) })
    }

    pub fn squeezed_vacuum(spec: SqueezeSpec<T>) -> Result<Self> {
        // Re-validate: the fields are public.
        let spec = SqueezeSpec::new(spec.r, spec.orientation)?;
        let (vx, vp) = spec.variances();
        if !(vx.is_finite() && vp.is_finite() && vx > T::zero() && vp > T::zero()) {
            return Err(Error::NonPhysical(format!("squeeze parameter {} overflows the scalar type", spec.r)));
        }
        Ok(Self { n_modes: 1, cov: Matrix::from_diagonal(&[vx, vp]) })
    }

    /// Validates and wraps a `2N × 2N` covariance in `(x…, p…)` order.
    pub fn from_covariance(cov: Matrix<T>) -> Result<Self> {
        let dim = cov.dim();
        if dim == 0 || !dim.is_multiple_of(2) {
            return invalid(format!("covariance dimension must be even and nonzero, got {dim}"));
        }
        if cov.as_slice().iter().any(|v| !v.is_finite()) {
            return Err(Error::NonPhysical("covariance has non-finite entries".into()));
        }
        let state = Self { n_modes: dim / 2, cov };
        state.validate()?;
        Ok(state)
    }

    /// Checks symmetry, the single-mode uncertainty bound and positive semidefiniteness.
    pub fn validate(&self) -> Result<()> {
        let scale = T::one().max(self.cov.max_abs());
        let asym = self.cov.asymmetry();
        if asym > T::symmetry_tol() * scale {
            return Err(Error::NonPhysical(format!("covariance not symmetric (|Δ| = {asym})")));
        }
        let tol = T::physical_tol();
        for j in 0..self.n_modes {
            let det = self.var_x(j) * self.var_p(j) - self.cov_xp(j) * self.cov_xp(j);
            if det < T::one() - tol * scale {
                return Err(Error::NonPhysical(format!(
                    "mode {j} violates Var(x)Var(p) - Cov(x,p)^2 >= 1 (value {det})"
                )));
            }
        }
        let min_eig = self.cov.symmetric_eigenvalues()[0];
        if min_eig < -tol * scale {
            return Err(Error::NonPhysical(format!("covariance has negative eigenvalue {min_eig}")));
        }
        Ok(())
    }

    /// Block-diagonal product state; modes are numbered in list order.
    pub fn tensor(states: &[Self]) -> Result<Self> {
        if states.is_empty() {
            return invalid("tensor product of an empty list");
        }
        let n: usize = states.iter().map(|s| s.n_modes).sum();
        let mut cov = Matrix::zeros(2 * n);
        let mut offset = 0;
        for s in states {
            let m = s.n_modes;
            for a in 0..2 * m {
                let ga = if a < m { offset + a } else { n + offset + a - m };
                for b in 0..2 * m {
                    let gb = if b < m { offset + b } else { n + offset + b - m };
                    cov[(ga, gb)] = s.cov[(a, b)];
                }
            }
            offset += m;
        }
        Ok(Self { n_modes: n, cov })
    }

    pub fn n_modes(&self) -> usize {
        self.n_modes
    }

    pub fn covariance(&self) -> &Matrix<T> {
        &self.cov
    }

    pub fn var_x(&self, mode: usize) -> T {
        self.cov[(mode, mode)]
    }

    pub fn var_p(&self, mode: usize) -> T {
        let k = self.n_modes + mode;
        self.cov[(k, k)]
    }

    pub fn cov_xp(&self, mode: usize) -> T {
        self.cov[(mode, self.n_modes + mode)]
    }

    fn check_mode(&self, mode: usize) -> Result<()> {
        if mode >= self.n_modes {
            return invalid(format!("mode index {mode} out of range for a {}-mode state", self.n_modes));
        }
        Ok(())
    }

    /// Beam splitter of reflectivity `reflectivity` between modes `i` and `j`.
    ///
    /// Output `i` is `√R aᵢ + √(1−R) aⱼ`, output `j` is `√(1−R) aᵢ − √R aⱼ`;
    /// the same real orthogonal map acts on the x block and the p block.
    /// `R = 0` swaps the modes, `R = 1` negates mode `j`.
    pub fn beam_splitter(&self, i: usize, j: usize, reflectivity: T) -> Result<Self> {
        self.check_mode(i)?;
        self.check_mode(j)?;
        if i == j {
            return invalid(format!("beam splitter needs two distinct modes, got {i} twice"));
        }
        if !(reflectivity >= T::zero() && reflectivity <= T::one()) {
            return invalid(format!("reflectivity must lie in [0, 1], got {reflectivity}"));
        }
        let t = reflectivity.sqrt();
        let s = (T::one() - reflectivity).sqrt();
        let n = self.n_modes;
        let dim = 2 * n;
        let mut cov = self.cov.clone();
        // Left multiplication: rows.
        for off in [0, n] {
            let (ri, rj) = (off + i, off + j);
            for c in 0..dim {
                let a = cov[(ri, c)];
                let b = cov[(rj, c)];
                cov[(ri, c)] = t * a + s * b;
                cov[(rj, c)] = s * a - t * b;
            }
        }
        // Right multiplication by the transpose: columns.
        for off in [0, n] {
            let (ci, cj) = (off + i, off + j);
            for r in 0..dim {
                let a = cov[(r, ci)];
                let b = cov[(r, cj)];
                cov[(r, ci)] = t * a + s * b;
                cov[(r, cj)] = s * a - t * b;
            }
        }
        cov.symmetrize();
        Ok(Self { n_modes: n, cov })
    }

    /// Pure-loss channel `a → √η a + √(1−η) a_vac` on one mode.
    pub fn loss(&self, mode: usize, eta: T) -> Result<Self> {
        self.check_mode(mode)?;
        if !(eta >= T::zero() && eta <= T::one()) {
            return invalid(format!("efficiency must lie in [0, 1], got {eta}"));
        }
        let n = self.n_modes;
        let root = eta.sqrt();
        let mut cov = self.cov.clone();
        for k in [mode, n + mode] {
            for c in 0..2 * n {
                cov[(k, c)] *= root;
            }
            for r in 0..2 * n {
                cov[(r, k)] *= root;
            }
        }
        let vac = T::one() - eta;
        cov[(mode, mode)] += vac;
        cov[(n + mode, n + mode)] += vac;
        Ok(Self { n_modes: n, cov })
    }
}

impl<T: Real> Quadratures<T> for GaussianState<T> {
    fn n_modes(&self) -> usize {
        self.n_modes
    }

    fn quadrature_variances(&self, gains: &GainVector<T>) -> Result<(T, T)> {
        gains.check_modes(self.n_modes)?;
        let var_u = self.cov.quadratic_form_block(0, &gains.h);
        let var_v = self.cov.quadratic_form_block(self.n_modes, &gains.g);
        Ok((var_u, var_v))
    }
}

/// Convex combination of zero-mean Gaussian states.
#[derive(Debug, Clone, PartialEq)]
pub struct MixedState<T> {
    components: Vec<(T, GaussianState<T>)>,
}

impl<T: Real> MixedState<T> {
    /// Weights must be positive and sum to one within `1e-9`; they are renormalised exactly.
    pub fn new(components: Vec<(T, GaussianState<T>)>) -> Result<Self> {
        let Some((_, first)) = components.first() else {
            return invalid("mixture needs at least one component");
        };
        let n = first.n_modes();
        let mut total = T::zero();
        for (w, s) in &components {
            if w.is_nan() || *w <= T::zero() || !w.is_finite() {
                return invalid(format!("mixture weight must be positive, got {w}"));
            }
            if s.n_modes() != n {
                return invalid(format!("mixture components have {} and {} modes", n, s.n_modes()));
            }
            total += *w;
        }
        if (total - T::one()).abs() > T::lit(1e-9) {
            return invalid(format!("mixture weights sum to {total}, not 1"));
        }
        let components = components.into_iter().map(|(w, s)| (w / total, s)).collect();
        Ok(Self { components })
    }

    pub fn components(&self) -> &[(T, GaussianState<T>)] {
        &self.components
    }

    /// Single Gaussian with the mixture's second moments (valid because all means vanish).
    pub fn moment_matched(&self) -> GaussianState<T> {
        let n = self.components[0].1.n_modes();
        let dim = 2 * n;
        let mut cov = Matrix::zeros(dim);
        for (w, s) in &self.components {
            for r in 0..dim {
                for c in 0..dim {
                    cov[(r, c)] += *w * s.covariance()[(r, c)];
                }
            }
        }
        GaussianState { n_modes: n, cov }
    }
}

/// Builds a [`MixedState`].
pub fn mix<T: Real>(components: Vec<(T, GaussianState<T>)>) -> Result<MixedState<T>> {
    MixedState::new(components)
}

impl<T: Real> Quadratures<T> for MixedState<T> {
    fn n_modes(&self) -> usize {
        self.components[0].1.n_modes()
    }

    fn quadrature_variances(&self, gains: &GainVector<T>) -> Result<(T, T)> {
        let mut var_u = T::zero();
        let mut var_v = T::zero();
        for (w, s) in &self.components {
            let (u, v) = s.quadrature_variances(gains)?;
            var_u += *w * u;
            var_v += *w * v;
        }
        Ok((var_u, var_v))
    }
}

impl<T: Real> MixedState<T> {
    /// Applies the same loss channel to every component.
    pub fn loss(&self, mode: usize, eta: T) -> Result<Self> {
        let components =
            self.components.iter().map(|(w, s)| s.loss(mode, eta).map(|s| (*w, s))).collect::<Result<Vec<_>>>()?;
        Ok(Self { components })
    }
}

/// Either a single Gaussian state or a mixture.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyState<T> {
    Pure(GaussianState<T>),
    Mixed(MixedState<T>),
}

impl<T: Real> AnyState<T> {
    pub fn loss(&self, mode: usize, eta: T) -> Result<Self> {
        Ok(match self {
            Self::Pure(s) => Self::Pure(s.loss(mode, eta)?),
            Self::Mixed(m) => Self::Mixed(m.loss(mode, eta)?),
        })
    }

    /// Covariance of the state, or of the moment-matched Gaussian for a mixture.
    pub fn covariance(&self) -> Matrix<T> {
        match self {
            Self::Pure(s) => s.covariance().clone(),
            Self::Mixed(m) => m.moment_matched().covariance().clone(),
        }
    }
}

impl<T: Real> From<GaussianState<T>> for AnyState<T> {
    fn from(s: GaussianState<T>) -> Self {
        Self::Pure(s)
    }
}

impl<T: Real> From<MixedState<T>> for AnyState<T> {
    fn from(m: MixedState<T>) -> Self {
        Self::Mixed(m)
    }
}

impl<T: Real> Quadratures<T> for AnyState<T> {
    fn n_modes(&self) -> usize {
        match self {
            Self::Pure(s) => Quadratures::n_modes(s),
            Self::Mixed(m) => m.n_modes(),
        }
    }

    fn quadrature_variances(&self, gains: &GainVector<T>) -> Result<(T, T)> {
        match self {
            Self::Pure(s) => s.quadrature_variances(gains),
            Self::Mixed(m) => m.quadrature_variances(gains),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gv(h: &[f64], g: &[f64]) -> GainVector<f64> {
        GainVector::from_f64(h, g).unwrap()
    }

    #[test]
    fn vacuum_is_identity() {
        let s = GaussianState::<f64>::vacuum(3).unwrap();
        assert_eq!(s.covariance(), &Matrix::identity(6));
        assert_eq!(s.var_x(0), 1.0);
        assert_eq!(s.var_p(0), 1.0);
        let two = GaussianState::<f64>::vacuum(2).unwrap();
        let (vu, _) = two.quadrature_variances(&gv(&[1.0, -1.0], &[0.0, 0.0])).unwrap();
        assert_eq!(vu, 2.0);
    }

    #[test]
    fn zero_modes_rejected() {
        assert!(matches!(GaussianState::<f64>::vacuum(0), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn squeezed_variances() {
        let s = GaussianState::squeezed_vacuum(SqueezeSpec::x(1.0).unwrap()).unwrap();
        assert!((s.var_x(0) - (-2.0f64).exp()).abs() < 1e-15);
        assert!((s.var_p(0) - 2.0f64.exp()).abs() < 1e-12);
        assert!((s.var_x(0) - 0.13534).abs() < 1e-5);
        assert!((s.var_p(0) - 7.38906).abs() < 1e-5);

        let s = GaussianState::squeezed_vacuum(SqueezeSpec::p(2.0).unwrap()).unwrap();
        assert!((s.var_p(0) - (-4.0f64).exp()).abs() < 1e-15);
        assert!((s.var_x(0) - 4.0f64.exp()).abs() < 1e-12);

        let s = GaussianState::squeezed_vacuum(SqueezeSpec::x(0.0).unwrap()).unwrap();
        assert_eq!(s, GaussianState::vacuum(1).unwrap());

        assert!(SqueezeSpec::x(-0.1f64).is_err());
        let bad = SqueezeSpec { r: -1.0, orientation: Orientation::SqueezeP };
        assert!(GaussianState::squeezed_vacuum(bad).is_err());
    }

    #[test]
    fn tensor_blocks() {
        let v = GaussianState::<f64>::vacuum(1).unwrap();
        assert_eq!(GaussianState::tensor(&[v.clone(), v.clone()]).unwrap(), GaussianState::vacuum(2).unwrap());
        let sq = GaussianState::squeezed_vacuum(SqueezeSpec::x(0.7).unwrap()).unwrap();
        let t = GaussianState::tensor(&[sq.clone(), v.clone()]).unwrap();
        let c = t.covariance();
        for (a, b) in [(0, 1), (0, 3), (2, 1), (2, 3), (0, 2), (1, 3)] {
            assert_eq!(c[(a, b)], 0.0);
        }
        assert_eq!(t.var_x(0), sq.var_x(0));
        assert_eq!(t.var_p(0), sq.var_p(0));
        let three = GaussianState::tensor(&[sq, v.clone(), v]).unwrap();
        assert_eq!(three.n_modes(), 3);
        assert!(GaussianState::<f64>::tensor(&[]).is_err());
    }

    #[test]
    fn beam_splitter_examples() {
        let v = GaussianState::<f64>::vacuum(2).unwrap();
        let out = v.beam_splitter(0, 1, 0.5).unwrap();
        for (a, b) in out.covariance().as_slice().iter().zip(v.covariance().as_slice()) {
            assert!((a - b).abs() < 1e-15);
        }

        let r = 0.8;
        let inputs = GaussianState::tensor(&[
            GaussianState::squeezed_vacuum(SqueezeSpec::p(r).unwrap()).unwrap(),
            GaussianState::squeezed_vacuum(SqueezeSpec::x(r).unwrap()).unwrap(),
        ])
        .unwrap();
        let tmss = inputs.beam_splitter(0, 1, 0.5).unwrap();
        let (vu, vv) = tmss.quadrature_variances(&gv(&[1.0, -1.0], &[1.0, 1.0])).unwrap();
        let expect = 2.0 * (-2.0 * r).exp();
        assert!((vu - expect).abs() < 1e-13);
        assert!((vv - expect).abs() < 1e-13);
    }

    #[test]
    fn beam_splitter_r1_negates_second_and_r0_swaps() {
        let inputs = GaussianState::tensor(&[
            GaussianState::squeezed_vacuum(SqueezeSpec::p(0.3f64).unwrap()).unwrap(),
            GaussianState::squeezed_vacuum(SqueezeSpec::x(0.9).unwrap()).unwrap(),
        ])
        .unwrap()
        .beam_splitter(0, 1, 0.3)
        .unwrap();
        let flipped = inputs.beam_splitter(0, 1, 1.0).unwrap();
        let c0 = inputs.covariance();
        let c1 = flipped.covariance();
        // x1-x2 cross covariance changes sign, variances untouched.
        assert_eq!(c1[(0, 0)], c0[(0, 0)]);
        assert_eq!(c1[(1, 1)], c0[(1, 1)]);
        assert!((c1[(0, 1)] + c0[(0, 1)]).abs() < 1e-15);

        let swapped = inputs.beam_splitter(0, 1, 0.0).unwrap();
        assert!((swapped.var_x(0) - inputs.var_x(1)).abs() < 1e-15);
        assert!((swapped.var_p(1) - inputs.var_p(0)).abs() < 1e-15);
    }

    #[test]
    fn beam_splitter_errors() {
        let v = GaussianState::<f64>::vacuum(2).unwrap();
        assert!(v.beam_splitter(0, 0, 0.5).is_err());
        assert!(v.beam_splitter(0, 2, 0.5).is_err());
        assert!(v.beam_splitter(0, 1, 1.5).is_err());
        assert!(v.beam_splitter(0, 1, -0.1).is_err());
        assert!(v.beam_splitter(0, 1, f64::NAN).is_err());
    }

    #[test]
    fn loss_examples() {
        let sq = GaussianState::squeezed_vacuum(SqueezeSpec::x(1.0).unwrap()).unwrap();
        assert_eq!(sq.loss(0, 1.0).unwrap(), sq);
        let half = sq.loss(0, 0.5).unwrap();
        assert!((half.var_x(0) - (0.5 * (-2.0f64).exp() + 0.5)).abs() < 1e-15);
        assert!((half.var_x(0) - 0.56767).abs() < 1e-5);

        let tmss = GaussianState::tensor(&[
            GaussianState::squeezed_vacuum(SqueezeSpec::p(1.0).unwrap()).unwrap(),
            GaussianState::squeezed_vacuum(SqueezeSpec::x(1.0).unwrap()).unwrap(),
        ])
        .unwrap()
        .beam_splitter(0, 1, 0.5)
        .unwrap();
        let gone = tmss.loss(1, 0.0).unwrap();
        assert_eq!(gone.var_x(1), 1.0);
        assert_eq!(gone.var_p(1), 1.0);
        assert_eq!(gone.covariance()[(0, 1)], 0.0);
        assert_eq!(gone.covariance()[(2, 3)], 0.0);

        assert!(sq.loss(0, 1.01).is_err());
        assert!(sq.loss(1, 0.5).is_err());
    }

    #[test]
    fn from_covariance_rejects_unphysical() {
        let squeezed_both = Matrix::from_diagonal(&[0.5, 0.5]);
        assert!(matches!(GaussianState::<f64>::from_covariance(squeezed_both), Err(Error::NonPhysical(_))));
        let asym = Matrix::from_row_major(2, vec![2.0, 0.5, 0.0, 2.0]).unwrap();
        assert!(GaussianState::<f64>::from_covariance(asym).is_err());
        // Per-mode bound satisfied but not PSD: strong anti-correlation beyond the variances.
        let not_psd = Matrix::from_row_major(
            4,
            vec![
                1.0, 3.0, 0.0, 0.0, //
                3.0, 1.0, 0.0, 0.0, //
                0.0, 0.0, 1.0, 0.0, //
                0.0, 0.0, 0.0, 1.0,
            ],
        )
        .unwrap();
        assert!(GaussianState::<f64>::from_covariance(not_psd).is_err());
        assert!(GaussianState::<f64>::from_covariance(Matrix::identity(3)).is_err());
        assert!(GaussianState::<f64>::from_covariance(Matrix::identity(4)).is_ok());
    }

    #[test]
    fn gains_examples() {
        let s = 1.0 / 2f64.sqrt();
        let v = GaussianState::<f64>::vacuum(3).unwrap();
        let (vu, vv) = v.quadrature_variances(&gv(&[1.0, -s, -s], &[1.0, s, s])).unwrap();
        assert!((vu - 2.0).abs() < 1e-15 && (vv - 2.0).abs() < 1e-15);
        assert!(v.quadrature_variances(&gv(&[1.0, 1.0], &[1.0, 1.0])).is_err());
        assert!(GainVector::<f64>::from_f64(&[1.0], &[1.0, 2.0]).is_err());
    }

    #[test]
    fn mixture_rules() {
        let a = GaussianState::<f64>::vacuum(2).unwrap();
        let b = GaussianState::tensor(&[
            GaussianState::squeezed_vacuum(SqueezeSpec::x(0.5).unwrap()).unwrap(),
            GaussianState::vacuum(1).unwrap(),
        ])
        .unwrap();
        let single = mix(vec![(1.0, b.clone())]).unwrap();
        let g = gv(&[1.0, -1.0], &[1.0, 1.0]);
        assert_eq!(single.quadrature_variances(&g).unwrap(), b.quadrature_variances(&g).unwrap());
        let same = mix(vec![(0.5, b.clone()), (0.5, b.clone())]).unwrap();
        assert_eq!(same.quadrature_variances(&g).unwrap(), b.quadrature_variances(&g).unwrap());
        let m = mix(vec![(0.25, a.clone()), (0.75, b.clone())]).unwrap();
        let (mu, mv) = m.quadrature_variances(&g).unwrap();
        let (au, av) = a.quadrature_variances(&g).unwrap();
        let (bu, bv) = b.quadrature_variances(&g).unwrap();
        assert!((mu - (0.25 * au + 0.75 * bu)).abs() < 1e-15);
        assert!((mv - (0.25 * av + 0.75 * bv)).abs() < 1e-15);
        let matched = m.moment_matched();
        let (cu, cv) = matched.quadrature_variances(&g).unwrap();
        assert!((cu - mu).abs() < 1e-14 && (cv - mv).abs() < 1e-14);

        assert!(mix(vec![(0.5, a.clone()), (0.6, b.clone())]).is_err());
        assert!(mix(vec![(1.0, a.clone()), (0.0, b.clone())]).is_err());
        assert!(mix(vec![(0.5, a), (0.5, GaussianState::vacuum(3).unwrap())]).is_err());
        assert!(mix::<f64>(vec![]).is_err());
        // Within 1e-9 of one is accepted and renormalised.
        let near = mix(vec![(0.5 + 4e-10, b.clone()), (0.5, b)]).unwrap();
        let total: f64 = near.components().iter().map(|(w, _)| w).sum();
        assert!((total - 1.0).abs() < 1e-15);
    }

    #[test]
    fn works_in_f32() {
        let s = GaussianState::<f32>::squeezed_vacuum(SqueezeSpec::x(0.5f32).unwrap()).unwrap().loss(0, 0.5).unwrap();
        assert!((s.var_x(0) - (0.5 * (-1.0f32).exp() + 0.5)).abs() < 1e-6);
        s.validate().unwrap();
    }
}
