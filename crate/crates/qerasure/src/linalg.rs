//! Dense complex linear algebra for desk-scale quantum states: tensor
//! products, partial traces, Hermitian spectra, entropies and fidelity.
//!
//! Subsystem indexing is row-major: in a tensor product the leftmost factor
//! is the most significant index. All entropies are in bits.

use ndarray::{Array1, Array2};
use num_complex::Complex;
use num_traits::{One, Zero};
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::scalar::RealScalar;

pub type CVector<T> = Array1<Complex<T>>;
pub type CMatrix<T> = Array2<Complex<T>>;

/// Largest number of Jacobi sweeps before the eigensolver gives up.
const MAX_JACOBI_SWEEPS: usize = 100;

#[inline]
fn cx<T: RealScalar>(re: T, im: T) -> Complex<T> {
    Complex::new(re, im)
}

#[inline]
fn re<T: RealScalar>(x: T) -> Complex<T> {
    Complex::new(x, T::zero())
}

pub fn identity_matrix<T: RealScalar>(dim: usize) -> CMatrix<T> {
    Array2::from_diag_elem(dim, Complex::one())
}

pub fn pauli_x<T: RealScalar>() -> CMatrix<T> {
    ndarray::array![
        [Complex::zero(), Complex::one()],
        [Complex::one(), Complex::zero()]
    ]
}

pub fn pauli_y<T: RealScalar>() -> CMatrix<T> {
    ndarray::array![
        [Complex::zero(), cx(T::zero(), -T::one())],
        [cx(T::zero(), T::one()), Complex::zero()]
    ]
}

pub fn pauli_z<T: RealScalar>() -> CMatrix<T> {
    ndarray::array![
        [Complex::one(), Complex::zero()],
        [Complex::zero(), re(-T::one())]
    ]
}

/// Conjugate transpose.
pub fn dagger<T: RealScalar>(m: &CMatrix<T>) -> CMatrix<T> {
    let mut out = Array2::zeros((m.ncols(), m.nrows()));
    for ((i, j), v) in m.indexed_iter() {
        out[[j, i]] = v.conj();
    }
    out
}

pub fn trace<T: RealScalar>(m: &CMatrix<T>) -> Complex<T> {
    m.diag().iter().fold(Complex::zero(), |acc, &v| acc + v)
}

/// Kronecker product, leftmost factor most significant.
pub fn kron<T: RealScalar>(a: &CMatrix<T>, b: &CMatrix<T>) -> CMatrix<T> {
    let (ar, ac) = a.dim();
    let (br, bc) = b.dim();
    let mut out = Array2::zeros((ar * br, ac * bc));
    for ((i, j), &av) in a.indexed_iter() {
        for ((k, l), &bv) in b.indexed_iter() {
            out[[i * br + k, j * bc + l]] = av * bv;
        }
    }
    out
}

/// Kronecker product of vectors.
pub fn kron_vec<T: RealScalar>(a: &CVector<T>, b: &CVector<T>) -> CVector<T> {
    let (na, nb) = (a.len(), b.len());
    let mut out = Array1::zeros(na * nb);
    for (i, &av) in a.iter().enumerate() {
        for (j, &bv) in b.iter().enumerate() {
            out[i * nb + j] = av * bv;
        }
    }
    out
}

/// Entrywise max-norm distance between two matrices of equal shape.
pub fn max_abs_diff<T: RealScalar>(a: &CMatrix<T>, b: &CMatrix<T>) -> T {
    debug_assert_eq!(a.dim(), b.dim());
    a.iter()
        .zip(b.iter())
        .map(|(&x, &y)| (x - y).norm())
        .fold(T::zero(), T::max)
}

fn frobenius_norm<T: RealScalar>(m: &CMatrix<T>) -> T {
    m.iter().map(|v| v.norm_sqr()).sum::<T>().sqrt()
}

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Returns eigenvalues in ascending order and the unitary of
/// eigenvectors as columns, so `m = V diag(w) V†`.
///
/// Accuracy is near machine precision for the desk-scale dimensions this
/// crate works at; reconstruction error is checked in tests.
pub fn eigh<T: RealScalar>(m: &CMatrix<T>) -> Result<(Vec<T>, CMatrix<T>)> {
    let n = m.nrows();
    if m.ncols() != n {
        return Err(Error::DimMismatch {
            context: "eigh: matrix must be square",
            expected: n,
            actual: m.ncols(),
        });
    }
    if n == 0 {
        return Err(Error::InvalidState("eigh of empty matrix".into()));
    }

    // Symmetrize away float noise; callers guarantee hermiticity.
    let mut a: CMatrix<T> = Array2::zeros((n, n));
    for i in 0..n {
        for j in 0..n {
            a[[i, j]] = (m[[i, j]] + m[[j, i]].conj()) * re(T::constant(0.5));
        }
    }
    let mut v = identity_matrix::<T>(n);

    let scale = frobenius_norm(&a).max(T::one());
    let stop = T::epsilon() * scale;
    let mut converged = false;

    for _ in 0..MAX_JACOBI_SWEEPS {
        let mut off = T::zero();
        for p in 0..n {
            for q in (p + 1)..n {
                off += a[[p, q]].norm_sqr();
            }
        }
        if off.sqrt() <= stop {
            converged = true;
            break;
        }

        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[[p, q]];
                let abs = apq.norm();
                if abs <= T::epsilon() * scale * T::constant(1e-2) {
                    continue;
                }
                let app = a[[p, p]].re;
                let aqq = a[[q, q]].re;

                // Exact unitary diagonalizing the 2x2 Hermitian block
                // [[app, apq], [apq*, aqq]]: columns are its eigenvectors.
                // The small-angle eigenvalue branch (|t| ≤ |apq|) keeps the
                // rotation inner, which cyclic Jacobi needs to converge; the
                // quotient form avoids cancellation when |apq| << |h|.
                let h = (aqq - app) * T::constant(0.5);
                let r = (h * h + abs * abs).sqrt();
                let t_far = if h >= T::zero() { h + r } else { h - r };
                let t = -(abs * abs) / t_far;
                let nrm = (abs * abs + t * t).sqrt();
                let phase = apq / re(abs);
                let u00 = apq / re(nrm);
                let u10 = re(t / nrm);
                let u01 = -phase * re(t / nrm);
                let u11 = re(abs / nrm);

                // Column update: A <- A U on columns p, q.
                for k in 0..n {
                    let akp = a[[k, p]];
                    let akq = a[[k, q]];
                    a[[k, p]] = akp * u00 + akq * u10;
                    a[[k, q]] = akp * u01 + akq * u11;
                }
                // Row update: A <- U† A on rows p, q.
                for k in 0..n {
                    let apk = a[[p, k]];
                    let aqk = a[[q, k]];
                    a[[p, k]] = u00.conj() * apk + u10.conj() * aqk;
                    a[[q, k]] = u01.conj() * apk + u11.conj() * aqk;
                }
                // Accumulate V <- V U.
                for k in 0..n {
                    let vkp = v[[k, p]];
                    let vkq = v[[k, q]];
                    v[[k, p]] = vkp * u00 + vkq * u10;
                    v[[k, q]] = vkp * u01 + vkq * u11;
                }
            }
        }
    }

    if !converged {
        // One final check: the last sweep may have finished the job.
        let mut off = T::zero();
        for p in 0..n {
            for q in (p + 1)..n {
                off += a[[p, q]].norm_sqr();
            }
        }
        if off.sqrt() > stop {
            return Err(Error::NoConvergence("jacobi eigensolver"));
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<T> = (0..n).map(|i| a[[i, i]].re).collect();
    order.sort_by(|&i, &j| diag[i].partial_cmp(&diag[j]).expect("NaN eigenvalue"));

    let values: Vec<T> = order.iter().map(|&i| diag[i]).collect();
    let mut vectors = Array2::zeros((n, n));
    for (new_col, &old_col) in order.iter().enumerate() {
        for k in 0..n {
            vectors[[k, new_col]] = v[[k, old_col]];
        }
    }
    Ok((values, vectors))
}

/// Partial trace over the subsystems *not* listed in `keep`, for a matrix on
/// a tensor product with factor dimensions `dims` (row-major, leftmost most
/// significant). `keep` must be strictly increasing.
pub fn partial_trace_matrix<T: RealScalar>(
    m: &CMatrix<T>,
    dims: &[usize],
    keep: &[usize],
) -> Result<CMatrix<T>> {
    let total: usize = dims.iter().product();
    if m.nrows() != total || m.ncols() != total {
        return Err(Error::DimMismatch {
            context: "partial_trace: factor dims must multiply to matrix dim",
            expected: total,
            actual: m.nrows(),
        });
    }
    if dims.contains(&0) {
        return Err(Error::InvalidState("zero-dimensional factor".into()));
    }
    if keep.windows(2).any(|w| w[0] >= w[1]) || keep.iter().any(|&f| f >= dims.len()) {
        return Err(Error::InvalidState(
            "keep set must be strictly increasing factor indices".into(),
        ));
    }

    let traced: Vec<usize> = (0..dims.len()).filter(|f| !keep.contains(f)).collect();

    // stride of factor f in the row-major linear index
    let mut strides = vec![1usize; dims.len()];
    for f in (0..dims.len().saturating_sub(1)).rev() {
        strides[f] = strides[f + 1] * dims[f + 1];
    }

    // linear offsets contributed by every sub-index combination of a factor set
    let offsets = |factors: &[usize]| -> Vec<usize> {
        let mut offs = vec![0usize];
        for &f in factors {
            let mut next = Vec::with_capacity(offs.len() * dims[f]);
            for &base in &offs {
                for i in 0..dims[f] {
                    next.push(base + i * strides[f]);
                }
            }
            offs = next;
        }
        offs
    };
    let keep_offsets = offsets(keep);
    let traced_offsets = offsets(&traced);

    let dim_keep = keep_offsets.len();
    let mut out: CMatrix<T> = Array2::zeros((dim_keep, dim_keep));
    for (i, &ri) in keep_offsets.iter().enumerate() {
        for (j, &rj) in keep_offsets.iter().enumerate() {
            let mut acc: Complex<T> = Complex::zero();
            for &t in &traced_offsets {
                acc += m[[ri + t, rj + t]];
            }
            out[[i, j]] = acc;
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Density matrices
// ---------------------------------------------------------------------------

/// A quantum state: Hermitian, unit-trace, positive-semidefinite complex
/// matrix. Constructors validate all three invariants.
#[derive(Clone, Debug)]
pub struct DensityMatrix<T: RealScalar> {
    dim: usize,
    mat: CMatrix<T>,
}

impl<T: RealScalar> DensityMatrix<T> {
    pub fn new(mat: CMatrix<T>) -> Result<Self> {
        let dim = mat.nrows();
        if dim == 0 || mat.ncols() != dim {
            return Err(Error::InvalidState(format!(
                "expected nonempty square matrix, got {}x{}",
                mat.nrows(),
                mat.ncols()
            )));
        }
        let tol = T::structural_tol();

        let herm = max_abs_diff(&mat, &dagger(&mat));
        if herm > tol {
            return Err(Error::InvalidState(format!(
                "not Hermitian: max |m - m†| = {herm}"
            )));
        }
        let tr = trace(&mat);
        let tr_err = (tr - Complex::one()).norm();
        if tr_err > tol {
            return Err(Error::InvalidState(format!("trace = {tr}, not 1")));
        }
        let (values, _) = eigh(&mat)?;
        let min = values[0];
        if min < -tol {
            return Err(Error::InvalidState(format!(
                "not positive semidefinite: min eigenvalue = {min}"
            )));
        }
        Ok(Self { dim, mat })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &CMatrix<T> {
        &self.mat
    }

    pub fn from_pure(psi: &PureState<T>) -> Self {
        let mut mat = Array2::zeros((psi.dim, psi.dim));
        for (i, &a) in psi.amps.iter().enumerate() {
            for (j, &b) in psi.amps.iter().enumerate() {
                mat[[i, j]] = a * b.conj();
            }
        }
        Self { dim: psi.dim, mat }
    }

    pub fn maximally_mixed(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidState("dimension must be positive".into()));
        }
        let w = T::one() / T::from_usize(dim).unwrap();
        Ok(Self {
            dim,
            mat: Array2::from_diag_elem(dim, re(w)),
        })
    }

    pub fn from_diagonal(probs: &[T]) -> Result<Self> {
        let mat = Array2::from_diag(&Array1::from_iter(probs.iter().map(|&p| re(p))));
        Self::new(mat)
    }

    /// Qubit state with the given Bloch coordinates; `x² + y² + z² ≤ 1`.
    pub fn from_bloch(x: T, y: T, z: T) -> Result<Self> {
        let r2 = x * x + y * y + z * z;
        if r2 > T::one() + T::structural_tol() {
            return Err(Error::OutOfRange {
                name: "bloch radius",
                value: r2.sqrt().to_f64().unwrap_or(f64::NAN),
                range: "[0, 1]",
            });
        }
        let half = T::constant(0.5);
        let mat = ndarray::array![
            [re((T::one() + z) * half), cx(x * half, -y * half)],
            [cx(x * half, y * half), re((T::one() - z) * half)]
        ];
        Ok(Self { dim: 2, mat })
    }

    /// Bloch coordinates `(Tr ρσx, Tr ρσy, Tr ρσz)` of a qubit state.
    pub fn bloch(&self) -> Result<(T, T, T)> {
        if self.dim != 2 {
            return Err(Error::DimMismatch {
                context: "bloch coordinates need a qubit state",
                expected: 2,
                actual: self.dim,
            });
        }
        let two = T::constant(2.0);
        let x = self.mat[[0, 1]].re * two;
        let y = -self.mat[[0, 1]].im * two;
        let z = self.mat[[0, 0]].re - self.mat[[1, 1]].re;
        Ok((x, y, z))
    }

    pub fn tensor(&self, other: &Self) -> Self {
        Self {
            dim: self.dim * other.dim,
            mat: kron(&self.mat, &other.mat),
        }
    }

    pub fn partial_trace(&self, dims: &[usize], keep: &[usize]) -> Result<Self> {
        let mat = partial_trace_matrix(&self.mat, dims, keep)?;
        Self::new(mat)
    }

    pub fn eigenvalues(&self) -> Result<Vec<T>> {
        Ok(eigh(&self.mat)?.0)
    }

    /// Von Neumann entropy in bits.
    pub fn entropy(&self) -> Result<T> {
        let values = self.eigenvalues()?;
        let clamp = T::eigenvalue_clamp();
        let mut s = T::zero();
        for lam in values {
            if lam > clamp {
                s -= lam * lam.log2();
            }
        }
        Ok(s)
    }

    pub fn purity(&self) -> T {
        trace(&self.mat.dot(&self.mat)).re
    }

    /// Random state `GG†/Tr(GG†)` with `G` standard complex Gaussian.
    pub fn random<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Self {
        let g = random_gaussian_matrix::<T, R>(dim, dim, rng);
        let gg = g.dot(&dagger(&g));
        let tr = trace(&gg).re;
        let mat = gg.mapv(|v| v / re(tr));
        Self { dim, mat }
    }
}

// ---------------------------------------------------------------------------
// Pure states
// ---------------------------------------------------------------------------

/// A unit-norm complex amplitude vector.
#[derive(Clone, Debug)]
pub struct PureState<T: RealScalar> {
    dim: usize,
    amps: CVector<T>,
}

impl<T: RealScalar> PureState<T> {
    pub fn new(amps: CVector<T>) -> Result<Self> {
        let dim = amps.len();
        if dim == 0 {
            return Err(Error::InvalidState("empty amplitude vector".into()));
        }
        let norm = amps.iter().map(|a| a.norm_sqr()).sum::<T>().sqrt();
        if (norm - T::one()).abs() > T::structural_tol() {
            return Err(Error::InvalidState(format!("norm = {norm}, not 1")));
        }
        Ok(Self { dim, amps })
    }

    /// Computational basis ket `|index⟩` in the given dimension.
    pub fn basis(dim: usize, index: usize) -> Result<Self> {
        if index >= dim {
            return Err(Error::OutOfRange {
                name: "basis index",
                value: index as f64,
                range: "[0, dim)",
            });
        }
        let mut amps: CVector<T> = Array1::zeros(dim);
        amps[index] = Complex::one();
        Ok(Self { dim, amps })
    }

    /// `(|0⟩ + |1⟩)/√2`.
    pub fn plus() -> Self {
        let h = T::constant(std::f64::consts::FRAC_1_SQRT_2);
        Self {
            dim: 2,
            amps: ndarray::array![re(h), re(h)],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn amplitudes(&self) -> &CVector<T> {
        &self.amps
    }

    pub fn projector(&self) -> DensityMatrix<T> {
        DensityMatrix::from_pure(self)
    }

    pub fn tensor(&self, other: &Self) -> Self {
        Self {
            dim: self.dim * other.dim,
            amps: kron_vec(&self.amps, &other.amps),
        }
    }

    /// Haar-random pure state (normalized complex Gaussian vector).
    pub fn random<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Self {
        loop {
            let mut amps: CVector<T> = Array1::zeros(dim);
            for a in amps.iter_mut() {
                let x: f64 = StandardNormal.sample(rng);
                let y: f64 = StandardNormal.sample(rng);
                *a = cx(T::constant(x), T::constant(y));
            }
            let norm = amps.iter().map(|a| a.norm_sqr()).sum::<T>().sqrt();
            if norm > T::constant(1e-6) {
                return Self {
                    dim,
                    amps: amps.mapv(|a| a / re(norm)),
                };
            }
        }
    }
}

pub(crate) fn random_gaussian_matrix<T: RealScalar, R: Rng + ?Sized>(
    rows: usize,
    cols: usize,
    rng: &mut R,
) -> CMatrix<T> {
    let mut m: CMatrix<T> = Array2::zeros((rows, cols));
    for v in m.iter_mut() {
        let x: f64 = StandardNormal.sample(rng);
        let y: f64 = StandardNormal.sample(rng);
        *v = cx(T::constant(x), T::constant(y));
    }
    m
}

// ---------------------------------------------------------------------------
// Free functions mirroring the core operations
// ---------------------------------------------------------------------------

/// Tensor product of states, leftmost factor most significant.
pub fn tensor<T: RealScalar>(a: &DensityMatrix<T>, b: &DensityMatrix<T>) -> DensityMatrix<T> {
    a.tensor(b)
}

/// Partial trace keeping the listed factors of a state on `dims`.
pub fn partial_trace<T: RealScalar>(
    rho: &DensityMatrix<T>,
    dims: &[usize],
    keep: &[usize],
) -> Result<DensityMatrix<T>> {
    rho.partial_trace(dims, keep)
}

/// Von Neumann entropy in bits, with `0 log 0 = 0`.
pub fn von_neumann_entropy<T: RealScalar>(rho: &DensityMatrix<T>) -> Result<T> {
    rho.entropy()
}

/// `⟨ψ|ρ|ψ⟩`: the probability that `rho` passes a test for being `psi`.
pub fn fidelity_pure<T: RealScalar>(psi: &PureState<T>, rho: &DensityMatrix<T>) -> Result<T> {
    if psi.dim != rho.dim {
        return Err(Error::DimMismatch {
            context: "fidelity_pure",
            expected: psi.dim,
            actual: rho.dim,
        });
    }
    let w = rho.mat.dot(&psi.amps);
    let val = psi
        .amps
        .iter()
        .zip(w.iter())
        .fold(Complex::<T>::zero(), |acc, (&a, &b)| acc + a.conj() * b);
    debug_assert!(val.im.abs() <= T::structural_tol());
    Ok(val.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    type C = Complex<f64>;

    fn epr_state() -> PureState<f64> {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        PureState::new(ndarray::array![
            C::new(h, 0.0),
            C::new(0.0, 0.0),
            C::new(0.0, 0.0),
            C::new(h, 0.0)
        ])
        .unwrap()
    }

    #[test]
    fn tensor_of_maximally_mixed_is_maximally_mixed() {
        let half = DensityMatrix::<f64>::maximally_mixed(2).unwrap();
        let quarter = half.tensor(&half);
        let expect = DensityMatrix::<f64>::maximally_mixed(4).unwrap();
        assert!(max_abs_diff(quarter.matrix(), expect.matrix()) < 1e-15);
        assert_eq!(quarter.dim(), 4);
    }

    #[test]
    fn tensor_of_basis_projectors() {
        let p0 = PureState::<f64>::basis(2, 0).unwrap().projector();
        let p1 = PureState::<f64>::basis(2, 1).unwrap().projector();
        let p01 = p0.tensor(&p1);
        // |01><01| has its single 1 at index 1
        assert!((p01.matrix()[[1, 1]].re - 1.0).abs() < 1e-15);
        assert!((trace(p01.matrix()) - C::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn tensor_with_basis_state_embeds_diagonal() {
        let rho = DensityMatrix::from_diagonal(&[0.7, 0.3]).unwrap();
        let p0 = PureState::<f64>::basis(2, 0).unwrap().projector();
        let out = rho.tensor(&p0);
        let diag: Vec<f64> = (0..4).map(|i| out.matrix()[[i, i]].re).collect();
        assert_eq!(diag, vec![0.7, 0.0, 0.3, 0.0]);
    }

    #[test]
    fn partial_trace_of_epr_half_is_maximally_mixed() {
        let rho = epr_state().projector();
        for keep in [[0usize], [1usize]] {
            let red = rho.partial_trace(&[2, 2], &keep).unwrap();
            let expect = DensityMatrix::<f64>::maximally_mixed(2).unwrap();
            assert!(max_abs_diff(red.matrix(), expect.matrix()) < 1e-12);
        }
    }

    #[test]
    fn partial_trace_of_product_recovers_factor() {
        let mut rng = SplitMix64::new(11);
        let a = DensityMatrix::<f64>::random(2, &mut rng);
        let b = DensityMatrix::<f64>::random(3, &mut rng);
        let ab = a.tensor(&b);
        let got = ab.partial_trace(&[2, 3], &[0]).unwrap();
        assert!(max_abs_diff(got.matrix(), a.matrix()) < 1e-12);
        let got_b = ab.partial_trace(&[2, 3], &[1]).unwrap();
        assert!(max_abs_diff(got_b.matrix(), b.matrix()) < 1e-12);
    }

    #[test]
    fn partial_trace_keeping_everything_is_identity_operation() {
        let mut rng = SplitMix64::new(19);
        let rho = DensityMatrix::<f64>::random(6, &mut rng);
        let kept = rho.partial_trace(&[2, 3], &[0, 1]).unwrap();
        assert!(max_abs_diff(kept.matrix(), rho.matrix()) < 1e-15);
    }

    #[test]
    fn partial_trace_over_everything_is_scalar_one() {
        let mut rng = SplitMix64::new(5);
        let rho = DensityMatrix::<f64>::random(6, &mut rng);
        let s = rho.partial_trace(&[2, 3], &[]).unwrap();
        assert_eq!(s.dim(), 1);
        assert!((s.matrix()[[0, 0]].re - 1.0).abs() < 1e-12);
    }

    #[test]
    fn partial_trace_is_order_independent_over_disjoint_factors() {
        let mut rng = SplitMix64::new(7);
        for _ in 0..10 {
            let rho = DensityMatrix::<f64>::random(8, &mut rng);
            let one_shot = rho.partial_trace(&[2, 2, 2], &[1]).unwrap();
            let first = rho.partial_trace(&[2, 2, 2], &[1, 2]).unwrap();
            let two_step = first.partial_trace(&[2, 2], &[0]).unwrap();
            assert!(max_abs_diff(one_shot.matrix(), two_step.matrix()) < 1e-10);

            let other_first = rho.partial_trace(&[2, 2, 2], &[0, 1]).unwrap();
            let other = other_first.partial_trace(&[2, 2], &[1]).unwrap();
            assert!(max_abs_diff(one_shot.matrix(), other.matrix()) < 1e-10);
        }
    }

    #[test]
    fn entropy_of_pure_state_is_zero() {
        let mut rng = SplitMix64::new(2);
        let psi = PureState::<f64>::random(4, &mut rng);
        let s = psi.projector().entropy().unwrap();
        assert!(s.abs() < 1e-9, "entropy {s}");
    }

    #[test]
    fn entropy_of_maximally_mixed_qubit_is_one_bit() {
        let rho = DensityMatrix::<f64>::maximally_mixed(2).unwrap();
        assert!((rho.entropy().unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn entropy_of_quarter_mix() {
        let rho = DensityMatrix::<f64>::from_diagonal(&[0.75, 0.25]).unwrap();
        assert!((rho.entropy().unwrap() - 0.811278).abs() < 1e-6);
    }

    #[test]
    fn entropy_is_additive_under_tensor() {
        let mut rng = SplitMix64::new(13);
        for _ in 0..20 {
            let a = DensityMatrix::<f64>::random(3, &mut rng);
            let b = DensityMatrix::<f64>::random(4, &mut rng);
            let joint = a.tensor(&b).entropy().unwrap();
            let separate = a.entropy().unwrap() + b.entropy().unwrap();
            assert!((joint - separate).abs() < 1e-8, "gap {}", joint - separate);
        }
    }

    #[test]
    fn fidelity_basis_cases() {
        let zero = PureState::<f64>::basis(2, 0).unwrap();
        let one = PureState::<f64>::basis(2, 1).unwrap();
        assert!((fidelity_pure(&zero, &zero.projector()).unwrap() - 1.0).abs() < 1e-15);
        assert!(fidelity_pure(&zero, &one.projector()).unwrap().abs() < 1e-15);
    }

    #[test]
    fn fidelity_of_plus_with_dephased_plus() {
        let plus = PureState::<f64>::plus();
        let dephased = DensityMatrix::<f64>::maximally_mixed(2).unwrap();
        assert!((fidelity_pure(&plus, &dephased).unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn fidelity_with_own_projector_is_one() {
        let mut rng = SplitMix64::new(17);
        for _ in 0..50 {
            let psi = PureState::<f64>::random(5, &mut rng);
            let f = fidelity_pure(&psi, &psi.projector()).unwrap();
            assert!((f - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn eigh_reconstructs_random_hermitian() {
        let mut rng = SplitMix64::new(23);
        for dim in [2usize, 3, 5, 8, 12, 16, 24] {
            let g = random_gaussian_matrix::<f64, _>(dim, dim, &mut rng);
            let herm = &g + &dagger(&g);
            let (w, v) = eigh(&herm).unwrap();
            // reconstruction V diag(w) V†
            let mut lam: CMatrix<f64> = Array2::zeros((dim, dim));
            for i in 0..dim {
                lam[[i, i]] = C::new(w[i], 0.0);
            }
            let rebuilt = v.dot(&lam).dot(&dagger(&v));
            assert!(
                max_abs_diff(&rebuilt, &herm) < 1e-9,
                "reconstruction error {} at dim {dim}",
                max_abs_diff(&rebuilt, &herm)
            );
            // unitarity
            let vv = dagger(&v).dot(&v);
            assert!(max_abs_diff(&vv, &identity_matrix(dim)) < 1e-11);
            // ascending order
            assert!(w.windows(2).all(|p| p[0] <= p[1]));
        }
    }

    #[test]
    fn eigh_of_diagonal_sorts() {
        let m = Array2::from_diag(&Array1::from_iter(
            [3.0, 1.0, 2.0].iter().map(|&x| C::new(x, 0.0)),
        ));
        let (w, _) = eigh(&m).unwrap();
        assert_eq!(w, vec![1.0, 2.0, 3.0]);
    }

    #[test]
    fn bloch_round_trip() {
        let rho = DensityMatrix::<f64>::from_bloch(0.3, -0.4, 0.5).unwrap();
        let (x, y, z) = rho.bloch().unwrap();
        assert!((x - 0.3).abs() < 1e-12);
        assert!((y + 0.4).abs() < 1e-12);
        assert!((z - 0.5).abs() < 1e-12);
        assert!(DensityMatrix::<f64>::from_bloch(1.0, 0.4, 0.0).is_err());
    }

    #[test]
    fn density_matrix_rejects_bad_inputs() {
        // trace 2
        let m = identity_matrix::<f64>(2);
        assert!(DensityMatrix::new(m).is_err());
        // non-hermitian
        let m = ndarray::array![
            [C::new(0.5, 0.0), C::new(0.3, 0.0)],
            [C::new(0.0, 0.0), C::new(0.5, 0.0)]
        ];
        assert!(DensityMatrix::new(m).is_err());
        // negative eigenvalue
        let m = ndarray::array![
            [C::new(1.2, 0.0), C::new(0.0, 0.0)],
            [C::new(0.0, 0.0), C::new(-0.2, 0.0)]
        ];
        assert!(DensityMatrix::new(m).is_err());
    }

    #[test]
    fn generic_scalar_f32_instantiation() {
        let rho = DensityMatrix::<f32>::maximally_mixed(2).unwrap();
        assert!((rho.entropy().unwrap() - 1.0).abs() < 1e-4);
        let psi = PureState::<f32>::basis(3, 2).unwrap();
        assert!((fidelity_pure(&psi, &psi.projector()).unwrap() - 1.0).abs() < 1e-5);
    }
}
