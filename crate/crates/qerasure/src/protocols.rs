//! Constructive protocols behind the capacity bounds: sharing entangled
//! pairs through the erasure channel and teleporting over the survivors,
//! and the fair-coin channel splitting that forces the one-way capacity to
//! vanish at ε ≥ 1/2.

use ndarray::Array2;
use num_complex::Complex;
use num_traits::One;

use crate::channels::{self, choi_distance, KrausChannel};
use crate::error::{Error, Result};
use crate::linalg::{
    identity_matrix, kron, partial_trace_matrix, pauli_x, pauli_z, CMatrix, CVector, DensityMatrix,
    PureState,
};
use crate::rng::{trial_seed, SplitMix64};
use crate::scalar::RealScalar;

fn re<T: RealScalar>(x: T) -> Complex<T> {
    Complex::new(x, T::zero())
}

/// The maximally entangled two-qubit pair `(|00⟩ + |11⟩)/√2`.
pub fn epr_pair<T: RealScalar>() -> PureState<T> {
    let h = T::constant(std::f64::consts::FRAC_1_SQRT_2);
    let mut amps: CVector<T> = ndarray::Array1::zeros(4);
    amps[0] = re(h);
    amps[3] = re(h);
    PureState::new(amps).expect("unit norm")
}

/// Outcome of sharing entangled pairs through an erasure channel: which
/// pairs survived and, per pair, the fidelity of the shared state with the
/// ideal pair (survivors hold exactly 1, erased pairs 0).
#[derive(Clone, Debug)]
pub struct EprShareOutcome<T: RealScalar> {
    pub n_pairs: usize,
    pub surviving: Vec<usize>,
    pub per_pair_fidelity: Vec<T>,
}

impl<T: RealScalar> EprShareOutcome<T> {
    pub fn survivor_fraction(&self) -> f64 {
        self.surviving.len() as f64 / self.n_pairs as f64
    }
}

/// Ideal pair with the receiving half embedded in the 3-level
/// qubit+erasure space (dim 6 = 2 ⊗ 3).
fn embedded_epr<T: RealScalar>() -> PureState<T> {
    let h = T::constant(std::f64::consts::FRAC_1_SQRT_2);
    let mut amps: CVector<T> = ndarray::Array1::zeros(6);
    amps[0] = re(h); // |0⟩|0⟩
    amps[4] = re(h); // |1⟩|1⟩ → index 1*3 + 1
    PureState::new(amps).expect("unit norm")
}

/// Send one half of each of `n_pairs` entangled pairs through the erasure
/// channel of strength `epsilon`, unraveled per-branch: each pair is erased
/// with probability ε (flagged and discarded) or arrives intact.
///
/// Pair `i` draws its branch from a generator seeded with
/// `trial_seed(seed, i)`, so the outcome is a pure function of
/// `(epsilon, n_pairs, seed)` under any evaluation order. The branch states
/// are simulated densely and scored against the ideal pair; survivors hold
/// fidelity 1 up to float noise because the non-erased Kraus branch is
/// proportional to the embedding.
pub fn simulate_epr_through_qec<T: RealScalar>(
    epsilon: f64,
    n_pairs: usize,
    seed: u64,
) -> Result<EprShareOutcome<T>> {
    if !(0.0..=1.0).contains(&epsilon) {
        return Err(Error::OutOfRange {
            name: "epsilon",
            value: epsilon,
            range: "[0, 1]",
        });
    }
    if n_pairs == 0 {
        return Err(Error::OutOfRange {
            name: "n_pairs",
            value: 0.0,
            range: "[1, inf)",
        });
    }

    let pair = epr_pair::<T>().projector();
    let ideal = embedded_epr::<T>();

    // branch channels: erasure events are flagged, so conditioning on the
    // flag is a physical operation for the receiver
    let survive_kraus = {
        let mut e: CMatrix<T> = Array2::zeros((3, 2));
        e[[0, 0]] = Complex::one();
        e[[1, 1]] = Complex::one();
        e
    };
    let erase_channel = channels::qec(T::one())?;

    // (id ⊗ branch) applied to the pair, normalized per branch
    let survive_state = {
        let op = kron(&identity_matrix::<T>(2), &survive_kraus);
        let m = op.dot(pair.matrix()).dot(&crate::linalg::dagger(&op));
        DensityMatrix::new(m)? // branch weight is 1 for the unit-weight Kraus
    };
    let erased_state = {
        let mut m: CMatrix<T> = Array2::zeros((6, 6));
        for a in erase_channel.kraus() {
            let op = kron(&identity_matrix::<T>(2), a);
            m = m + op.dot(pair.matrix()).dot(&crate::linalg::dagger(&op));
        }
        DensityMatrix::new(m)?
    };
    let f_survive = crate::linalg::fidelity_pure(&ideal, &survive_state)?;
    let f_erased = crate::linalg::fidelity_pure(&ideal, &erased_state)?;

    let mut surviving = Vec::new();
    let mut per_pair_fidelity = Vec::with_capacity(n_pairs);
    for i in 0..n_pairs {
        let mut rng = SplitMix64::new(trial_seed(seed, i as u64));
        if rng.next_bool(epsilon) {
            per_pair_fidelity.push(f_erased);
        } else {
            surviving.push(i);
            per_pair_fidelity.push(f_survive);
        }
    }
    Ok(EprShareOutcome {
        n_pairs,
        surviving,
        per_pair_fidelity,
    })
}

/// Restrict a surviving shared state on 2 ⊗ 3 back to two qubits. Errors if
/// any weight sits on the erasure level.
pub fn project_pair_to_qubits<T: RealScalar>(state: &DensityMatrix<T>) -> Result<DensityMatrix<T>> {
    if state.dim() != 6 {
        return Err(Error::DimMismatch {
            context: "pair projection expects a 2x3 joint state",
            expected: 6,
            actual: state.dim(),
        });
    }
    let m = state.matrix();
    let erasure_weight = m[[2, 2]].re + m[[5, 5]].re;
    if erasure_weight > T::structural_tol() {
        return Err(Error::InvalidState(format!(
            "state has erasure weight {erasure_weight}"
        )));
    }
    let mut out: CMatrix<T> = Array2::zeros((4, 4));
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                for d in 0..2 {
                    out[[a * 2 + b, c * 2 + d]] = m[[a * 3 + b, c * 3 + d]];
                }
            }
        }
    }
    DensityMatrix::new(out)
}

/// The exact state a surviving pair is left in, as a two-qubit state.
pub fn surviving_pair_state<T: RealScalar>() -> Result<DensityMatrix<T>> {
    let pair = epr_pair::<T>().projector();
    let mut e: CMatrix<T> = Array2::zeros((3, 2));
    e[[0, 0]] = Complex::one();
    e[[1, 1]] = Complex::one();
    let op = kron(&identity_matrix::<T>(2), &e);
    let m = op.dot(pair.matrix()).dot(&crate::linalg::dagger(&op));
    project_pair_to_qubits(&DensityMatrix::new(m)?)
}

/// Standard teleportation on the dense 3-qubit joint state
/// source ⊗ pairA ⊗ pairB: Bell measurement on (source, pairA), then the
/// outcome-conditioned Pauli correction on pairB, averaged over outcomes.
///
/// Correction table, with `|β_ab⟩ = (Z^a X^b ⊗ I)(|00⟩+|11⟩)/√2` the
/// measured Bell state: outcome (a, b) applies `Z^a X^b`.
///
/// | outcome | Bell state        | correction |
/// |---------|-------------------|------------|
/// | (0, 0)  | (|00⟩+|11⟩)/√2    | I          |
/// | (0, 1)  | (|01⟩+|10⟩)/√2    | X          |
/// | (1, 0)  | (|00⟩−|11⟩)/√2    | Z          |
/// | (1, 1)  | (|01⟩−|10⟩)/√2    | ZX         |
pub fn teleport<T: RealScalar>(
    state: &DensityMatrix<T>,
    pair: &DensityMatrix<T>,
) -> Result<DensityMatrix<T>> {
    if state.dim() != 2 {
        return Err(Error::DimMismatch {
            context: "teleport source state",
            expected: 2,
            actual: state.dim(),
        });
    }
    if pair.dim() != 4 {
        return Err(Error::DimMismatch {
            context: "teleport resource pair",
            expected: 4,
            actual: pair.dim(),
        });
    }

    let joint = state.tensor(pair);
    let h = T::constant(std::f64::consts::FRAC_1_SQRT_2);
    let eye = identity_matrix::<T>(2);
    let sx = pauli_x::<T>();
    let sz = pauli_z::<T>();

    let mut out: CMatrix<T> = Array2::zeros((2, 2));
    for a in 0..2usize {
        for b in 0..2usize {
            // |β_ab⟩ amplitudes on (source, pairA)
            let mut bell: CVector<T> = ndarray::Array1::zeros(4);
            let sign = if a == 1 { -T::one() } else { T::one() };
            bell[b] = re(h); // |0, b⟩
            bell[2 + (1 - b)] = re(sign * h); // ± |1, 1−b⟩
            let mut proj: CMatrix<T> = Array2::zeros((4, 4));
            for i in 0..4 {
                for j in 0..4 {
                    proj[[i, j]] = bell[i] * bell[j].conj();
                }
            }
            let meas = kron(&proj, &eye);
            // projector acts only on the traced factors, so one application
            // inside the partial trace suffices
            let selected = meas.dot(joint.matrix());
            let bob = partial_trace_matrix(&selected, &[2, 2, 2], &[2])?;

            let mut correction = eye.clone();
            if b == 1 {
                correction = correction.dot(&sx);
            }
            if a == 1 {
                correction = sz.dot(&correction);
            }
            out = out
                + correction
                    .dot(&bob)
                    .dot(&crate::linalg::dagger(&correction));
        }
    }
    DensityMatrix::new(out)
}

// ---------------------------------------------------------------------------
// No-cloning channel splitting
// ---------------------------------------------------------------------------

/// The fair-coin splitting for ε ≥ 1/2: per use, heads routes the qubit to
/// the first receiver through an erasure channel of strength 2ε−1 while the
/// second receiver gets a pure erasure symbol; tails is symmetric. Returns
/// both receivers' marginal channels, each of which equals the plain
/// erasure channel of strength ε.
pub fn split_qec_construction<T: RealScalar>(
    epsilon: T,
) -> Result<(KrausChannel<T>, KrausChannel<T>)> {
    if epsilon < T::constant(0.5) || epsilon > T::one() {
        return Err(Error::OutOfRange {
            name: "epsilon",
            value: epsilon.to_f64().unwrap_or(f64::NAN),
            range: "[1/2, 1]",
        });
    }
    let inner = channels::qec(T::constant(2.0) * epsilon - T::one())?;
    let half_sqrt = re(T::constant(0.5).sqrt());

    let marginal = || -> Result<KrausChannel<T>> {
        let mut kraus: Vec<CMatrix<T>> = inner
            .kraus()
            .iter()
            .map(|a| a.mapv(|v| v * half_sqrt))
            .collect();
        // the other coin face: this receiver sees a pure erasure symbol
        for col in 0..2 {
            let mut a: CMatrix<T> = Array2::zeros((3, 2));
            a[[2, col]] = half_sqrt;
            kraus.push(a);
        }
        KrausChannel::new(2, 3, kraus)
    };
    Ok((marginal()?, marginal()?))
}

/// Verification record of the series-parallel splitting of the mixed
/// channel: a phase erasure of strength δ, classical fan-out of the
/// dephased qubits (dephasing renders them classical, so copying the
/// z-basis record adds no disturbance), and the fair-coin split at inner
/// strength ε/(1−δ) on the rest.
#[derive(Clone, Debug)]
pub struct SplitVerification<T: RealScalar> {
    pub epsilon: T,
    pub delta: T,
    /// erasure strength fed to the inner fair-coin split
    pub inner_strength: T,
    /// Choi max-norm distance of each receiver's marginal from the mixed
    /// channel being simulated
    pub receiver_distances: [T; 2],
    pub tolerance: T,
    pub passed: bool,
}

/// Assemble the mixed-channel splitting and verify each receiver's marginal
/// against the mixed erasure/phase-erasure channel. Defined for
/// `ε/(1−δ) ≥ 1/2` and `ε + δ ≤ 1`.
pub fn mixed_split_construction<T: RealScalar>(
    epsilon: T,
    delta: T,
    tolerance: T,
) -> Result<SplitVerification<T>> {
    let params = channels::ChannelParams::new(epsilon, delta)?;
    let (eps, del) = (params.epsilon, params.delta);
    if T::one() - del <= T::zero() {
        return Err(Error::OutOfRange {
            name: "delta",
            value: del.to_f64().unwrap_or(f64::NAN),
            range: "[0, 1)",
        });
    }
    let ratio = eps / (T::one() - del);
    if ratio < T::constant(0.5) - T::structural_tol() {
        return Err(Error::OutOfRange {
            name: "epsilon / (1 - delta)",
            value: ratio.to_f64().unwrap_or(f64::NAN),
            range: "[1/2, 1]",
        });
    }
    let (bob_inner, charlie_inner) = split_qec_construction(ratio.min(T::one()))?;
    let reference = channels::mixed_erasure(eps, del)?;

    // receiver marginal on 2 → 6: the non-dephased branch goes through the
    // split (flag 0); the dephased branch is copied to the receiver (flag 1)
    let build_marginal = |split: &KrausChannel<T>| -> Result<KrausChannel<T>> {
        let mut kraus: Vec<CMatrix<T>> = Vec::new();
        let through = (T::one() - del).sqrt();
        for a in split.kraus() {
            // 3-level row s with flag 0 → output row 2s
            let mut m: CMatrix<T> = Array2::zeros((6, 2));
            for s in 0..3 {
                for c in 0..2 {
                    m[[s * 2, c]] = a[[s, c]] * re(through);
                }
            }
            kraus.push(m);
        }
        if del > T::zero() {
            let w = re((del * T::constant(0.5)).sqrt());
            // dephased copy: embedded identity and embedded σz, flag 1
            let mut plain: CMatrix<T> = Array2::zeros((6, 2));
            plain[[1, 0]] = w;
            plain[[3, 1]] = w;
            kraus.push(plain);
            let mut flipped: CMatrix<T> = Array2::zeros((6, 2));
            flipped[[1, 0]] = w;
            flipped[[3, 1]] = -w;
            kraus.push(flipped);
        }
        KrausChannel::new(2, 6, kraus)
    };

    let bob = build_marginal(&bob_inner)?;
    let charlie = build_marginal(&charlie_inner)?;
    let distances = [
        choi_distance(&bob, &reference)?,
        choi_distance(&charlie, &reference)?,
    ];
    let passed = distances.iter().all(|&d| d <= tolerance);
    Ok(SplitVerification {
        epsilon: eps,
        delta: del,
        inner_strength: ratio.min(T::one()),
        receiver_distances: distances,
        tolerance,
        passed,
    })
}
