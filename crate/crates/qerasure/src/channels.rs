//! Trace-preserving completely positive maps as Kraus operator lists, with
//! constructors for the four erasure-type channels, Choi matrices,
//! composition, and an equality certificate.
//!
//! Channel conventions:
//! - erasure channel: 2 → 3, the third output level is the erasure symbol,
//!   which is its own flag;
//! - phase erasure: 2 → 4 = qubit ⊗ flag, flag 1 marks a dephased qubit;
//! - depolarizing: 2 → 2, replacement by the maximally mixed state realized
//!   as the Pauli twirl with weights (1 − 3ε/4, ε/4, ε/4, ε/4);
//! - mixed erasure/phase-erasure: 2 → 6 = (qubit + erasure level) ⊗ flag,
//!   erasure events carry flag 0.

use ndarray::Array2;
use num_complex::Complex;
use num_traits::One;
use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{
    dagger, identity_matrix, kron, max_abs_diff, pauli_x, pauli_y, pauli_z, random_gaussian_matrix,
    CMatrix, DensityMatrix,
};
use crate::scalar::RealScalar;

fn re<T: RealScalar>(x: T) -> Complex<T> {
    Complex::new(x, T::zero())
}

pub(crate) fn check_prob<T: RealScalar>(name: &'static str, p: T) -> Result<()> {
    if p < T::zero() || p > T::one() {
        return Err(Error::OutOfRange {
            name,
            value: p.to_f64().unwrap_or(f64::NAN),
            range: "[0, 1]",
        });
    }
    Ok(())
}

/// Validated `(ε, δ)` pair for the mixed erasure/phase-erasure channel:
/// both probabilities, with `ε + δ ≤ 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChannelParams<T: RealScalar> {
    pub epsilon: T,
    pub delta: T,
}

impl<T: RealScalar> ChannelParams<T> {
    pub fn new(epsilon: T, delta: T) -> Result<Self> {
        check_prob("epsilon", epsilon)?;
        check_prob("delta", delta)?;
        if epsilon + delta > T::one() + T::structural_tol() {
            return Err(Error::OutOfRange {
                name: "epsilon + delta",
                value: (epsilon + delta).to_f64().unwrap_or(f64::NAN),
                range: "[0, 1]",
            });
        }
        Ok(Self { epsilon, delta })
    }
}

/// A channel as a list of Kraus operators `A_i` (each `dim_out × dim_in`)
/// with `Σ A_i† A_i = I`, acting by `ρ ↦ Σ A_i ρ A_i†`.
#[derive(Clone, Debug)]
pub struct KrausChannel<T: RealScalar> {
    dim_in: usize,
    dim_out: usize,
    kraus: Vec<CMatrix<T>>,
}

impl<T: RealScalar> KrausChannel<T> {
    pub fn new(dim_in: usize, dim_out: usize, kraus: Vec<CMatrix<T>>) -> Result<Self> {
        if dim_in == 0 || dim_out == 0 {
            return Err(Error::InvalidChannel("zero dimension".into()));
        }
        if kraus.is_empty() {
            return Err(Error::InvalidChannel(
                "need at least one Kraus operator".into(),
            ));
        }
        for (i, a) in kraus.iter().enumerate() {
            if a.nrows() != dim_out || a.ncols() != dim_in {
                return Err(Error::InvalidChannel(format!(
                    "Kraus operator {i} is {}x{}, expected {dim_out}x{dim_in}",
                    a.nrows(),
                    a.ncols()
                )));
            }
        }
        let mut sum: CMatrix<T> = Array2::zeros((dim_in, dim_in));
        for a in &kraus {
            sum = sum + dagger(a).dot(a);
        }
        let dev = max_abs_diff(&sum, &identity_matrix(dim_in));
        if dev > T::structural_tol() {
            return Err(Error::InvalidChannel(format!(
                "not trace preserving: |ΣA†A - I| = {dev}"
            )));
        }
        Ok(Self {
            dim_in,
            dim_out,
            kraus,
        })
    }

    pub fn dim_in(&self) -> usize {
        self.dim_in
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    pub fn kraus(&self) -> &[CMatrix<T>] {
        &self.kraus
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            dim_in: dim,
            dim_out: dim,
            kraus: vec![identity_matrix(dim)],
        }
    }

    /// `Σ A_i ρ A_i†` on a raw matrix, without state validation.
    pub fn apply_matrix(&self, m: &CMatrix<T>) -> CMatrix<T> {
        let mut out: CMatrix<T> = Array2::zeros((self.dim_out, self.dim_out));
        for a in &self.kraus {
            let am = a.dot(m);
            out = out + am.dot(&dagger(a));
        }
        out
    }

    /// Send a state through the channel.
    pub fn apply(&self, rho: &DensityMatrix<T>) -> Result<DensityMatrix<T>> {
        if rho.dim() != self.dim_in {
            return Err(Error::DimMismatch {
                context: "channel application",
                expected: self.dim_in,
                actual: rho.dim(),
            });
        }
        DensityMatrix::new(self.apply_matrix(rho.matrix()))
    }

    /// Choi state: the channel applied to one half of a maximally entangled
    /// pair, input factor first. Uniquely determines the channel.
    pub fn choi(&self) -> DensityMatrix<T> {
        let d_in = self.dim_in;
        let d_out = self.dim_out;
        let inv_d = T::one() / T::from_usize(d_in).unwrap();
        let mut c: CMatrix<T> = Array2::zeros((d_in * d_out, d_in * d_out));
        for a in &self.kraus {
            for i in 0..d_in {
                for j in 0..d_in {
                    for m in 0..d_out {
                        for mp in 0..d_out {
                            let v = a[[m, i]] * a[[mp, j]].conj() * re(inv_d);
                            c[[i * d_out + m, j * d_out + mp]] += v;
                        }
                    }
                }
            }
        }
        DensityMatrix::new(c).expect("Choi of a valid channel is a valid state")
    }

    /// Random channel: Gaussian matrices orthonormalized into a Kraus set.
    pub fn random<R: Rng + ?Sized>(
        dim_in: usize,
        dim_out: usize,
        num_kraus: usize,
        rng: &mut R,
    ) -> Self {
        use crate::linalg::eigh;
        assert!(num_kraus >= 1 && dim_in >= 1 && dim_out >= 1);
        let gs: Vec<CMatrix<T>> = (0..num_kraus)
            .map(|_| random_gaussian_matrix(dim_out, dim_in, rng))
            .collect();
        let mut m: CMatrix<T> = Array2::zeros((dim_in, dim_in));
        for g in &gs {
            m = m + dagger(g).dot(g);
        }
        // M^{-1/2}; M is positive definite almost surely
        let (w, v) = eigh(&m).expect("gram matrix eigendecomposition");
        let mut inv_sqrt: CMatrix<T> = Array2::zeros((dim_in, dim_in));
        for (i, &lam) in w.iter().enumerate() {
            inv_sqrt[[i, i]] = re(T::one() / lam.sqrt());
        }
        let m_inv_sqrt = v.dot(&inv_sqrt).dot(&dagger(&v));
        let kraus: Vec<CMatrix<T>> = gs.iter().map(|g| g.dot(&m_inv_sqrt)).collect();
        Self::new(dim_in, dim_out, kraus).expect("normalized Kraus set")
    }
}

// ---------------------------------------------------------------------------
// Channel constructors
// ---------------------------------------------------------------------------

/// Embedding of the qubit into the 3-level qubit+erasure space.
fn qubit_embedding<T: RealScalar>() -> CMatrix<T> {
    let mut e: CMatrix<T> = Array2::zeros((3, 2));
    e[[0, 0]] = Complex::one();
    e[[1, 1]] = Complex::one();
    e
}

/// Quantum erasure channel (2 → 3): with probability `epsilon` the qubit is
/// replaced by the erasure level `|2⟩`, orthogonal to the qubit space, which
/// tells the receiver an erasure happened.
pub fn qec<T: RealScalar>(epsilon: T) -> Result<KrausChannel<T>> {
    check_prob("epsilon", epsilon)?;
    let mut kraus = Vec::new();
    if epsilon < T::one() {
        kraus.push(qubit_embedding::<T>().mapv(|v| v * re((T::one() - epsilon).sqrt())));
    }
    if epsilon > T::zero() {
        let s = epsilon.sqrt();
        for col in 0..2 {
            let mut a: CMatrix<T> = Array2::zeros((3, 2));
            a[[2, col]] = re(s);
            kraus.push(a);
        }
    }
    KrausChannel::new(2, 3, kraus)
}

/// Phase erasure channel (2 → 4 = qubit ⊗ flag): with probability `epsilon`
/// the qubit's phase is randomized (σz twirl) and the flag qubit is raised;
/// amplitudes survive either way.
pub fn pec<T: RealScalar>(epsilon: T) -> Result<KrausChannel<T>> {
    check_prob("epsilon", epsilon)?;
    let half = T::constant(0.5);
    // |q⟩ ↦ |q⟩ ⊗ |flag⟩, flag least significant
    let embed_flag = |op: &CMatrix<T>, flag: usize, weight: T| -> CMatrix<T> {
        let mut a: CMatrix<T> = Array2::zeros((4, 2));
        for q in 0..2 {
            for c in 0..2 {
                a[[q * 2 + flag, c]] = op[[q, c]] * re(weight.sqrt());
            }
        }
        a
    };
    let eye = identity_matrix::<T>(2);
    let sz = pauli_z::<T>();
    let mut kraus = Vec::new();
    if epsilon < T::one() {
        kraus.push(embed_flag(&eye, 0, T::one() - epsilon));
    }
    if epsilon > T::zero() {
        kraus.push(embed_flag(&eye, 1, epsilon * half));
        kraus.push(embed_flag(&sz, 1, epsilon * half));
    }
    KrausChannel::new(2, 4, kraus)
}

/// Depolarizing channel (2 → 2): `ρ ↦ (1−ε)ρ + ε·I/2`, with no flag telling
/// the receiver which qubits were randomized.
pub fn depolarizing<T: RealScalar>(epsilon: T) -> Result<KrausChannel<T>> {
    check_prob("epsilon", epsilon)?;
    let quarter = epsilon * T::constant(0.25);
    let keep = T::one() - T::constant(3.0) * quarter;
    let mut kraus = Vec::new();
    if keep > T::zero() {
        kraus.push(identity_matrix::<T>(2).mapv(|v| v * re(keep.sqrt())));
    }
    if quarter > T::zero() {
        let s = re(quarter.sqrt());
        kraus.push(pauli_x::<T>().mapv(|v| v * s));
        kraus.push(pauli_y::<T>().mapv(|v| v * s));
        kraus.push(pauli_z::<T>().mapv(|v| v * s));
    }
    KrausChannel::new(2, 2, kraus)
}

/// Mixed erasure/phase-erasure channel (2 → 6 = (qubit+erasure) ⊗ flag):
/// erases with probability `epsilon` (flag 0), phase-erases with probability
/// `delta` (flag 1), and transmits intact otherwise (flag 0).
pub fn mixed_erasure<T: RealScalar>(epsilon: T, delta: T) -> Result<KrausChannel<T>> {
    let params = ChannelParams::new(epsilon, delta)?;
    let (eps, del) = (params.epsilon, params.delta);
    let half = T::constant(0.5);
    let intact = (T::one() - eps - del).max(T::zero());

    // 3-level row `s`, flag `f` → output row s*2 + f
    let embed = |op: &CMatrix<T>, flag: usize, weight: T| -> CMatrix<T> {
        let mut a: CMatrix<T> = Array2::zeros((6, 2));
        for s in 0..3 {
            for c in 0..2 {
                a[[s * 2 + flag, c]] = op[[s, c]] * re(weight.sqrt());
            }
        }
        a
    };

    let e = qubit_embedding::<T>();
    let e_sz = e.dot(&pauli_z::<T>());
    let mut kraus = Vec::new();
    if intact > T::zero() {
        kraus.push(embed(&e, 0, intact));
    }
    if del > T::zero() {
        kraus.push(embed(&e, 1, del * half));
        kraus.push(embed(&e_sz, 1, del * half));
    }
    if eps > T::zero() {
        let s = eps.sqrt();
        for col in 0..2 {
            let mut a: CMatrix<T> = Array2::zeros((6, 2));
            a[[4, col]] = re(s); // |2⟩ ⊗ flag 0
            kraus.push(a);
        }
    }
    KrausChannel::new(2, 6, kraus)
}

// ---------------------------------------------------------------------------
// Channel algebra
// ---------------------------------------------------------------------------

/// `outer ∘ inner`: apply `inner` first. Kraus set is all products `B_j A_i`.
pub fn compose<T: RealScalar>(
    outer: &KrausChannel<T>,
    inner: &KrausChannel<T>,
) -> Result<KrausChannel<T>> {
    if outer.dim_in != inner.dim_out {
        return Err(Error::DimMismatch {
            context: "compose: outer input must match inner output",
            expected: inner.dim_out,
            actual: outer.dim_in,
        });
    }
    let kraus: Vec<CMatrix<T>> = outer
        .kraus
        .iter()
        .flat_map(|b| inner.kraus.iter().map(move |a| b.dot(a)))
        .collect();
    KrausChannel::new(inner.dim_in, outer.dim_out, kraus)
}

/// Parallel combination acting on a tensor-product input, leftmost factor
/// most significant.
pub fn tensor_channels<T: RealScalar>(a: &KrausChannel<T>, b: &KrausChannel<T>) -> KrausChannel<T> {
    let kraus: Vec<CMatrix<T>> = a
        .kraus
        .iter()
        .flat_map(|x| b.kraus.iter().map(move |y| kron(x, y)))
        .collect();
    KrausChannel::new(a.dim_in * b.dim_in, a.dim_out * b.dim_out, kraus)
        .expect("tensor of valid channels is valid")
}

/// Max-norm distance between Choi matrices; an exact certificate of channel
/// equality at finite precision.
pub fn choi_distance<T: RealScalar>(c1: &KrausChannel<T>, c2: &KrausChannel<T>) -> Result<T> {
    if c1.dim_in != c2.dim_in || c1.dim_out != c2.dim_out {
        return Err(Error::DimMismatch {
            context: "choi_distance: channels must share dimensions",
            expected: c1.dim_in * c1.dim_out,
            actual: c2.dim_in * c2.dim_out,
        });
    }
    Ok(max_abs_diff(c1.choi().matrix(), c2.choi().matrix()))
}

/// True iff the channels agree as maps, certified by Choi max-norm ≤ `tol`.
pub fn channels_equal<T: RealScalar>(
    c1: &KrausChannel<T>,
    c2: &KrausChannel<T>,
    tol: T,
) -> Result<bool> {
    Ok(choi_distance(c1, c2)? <= tol)
}
