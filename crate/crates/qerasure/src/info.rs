//! Entropic information measures: binary entropy, entropy exchange,
//! coherent information, Holevo χ, induced classical channels, and the
//! Blahut–Arimoto capacity of a discrete classical channel.

use ndarray::{Array1, Array2};
use num_complex::Complex;
use num_traits::{One, Zero};

use crate::channels::KrausChannel;
use crate::error::{Error, Result};
use crate::linalg::{
    dagger, eigh, identity_matrix, max_abs_diff, CMatrix, DensityMatrix, PureState,
};
use crate::scalar::RealScalar;

/// Blahut–Arimoto iteration cap; the stop rule is a certified
/// upper/lower-bound gap, this only guards against pathological inputs.
const BA_MAX_ITERATIONS: usize = 100_000;

/// Binary entropy `H₂(p)` in bits, with the endpoints defined as 0.
pub fn binary_entropy<T: RealScalar>(p: T) -> Result<T> {
    crate::channels::check_prob("p", p)?;
    if p == T::zero() || p == T::one() {
        return Ok(T::zero());
    }
    let q = T::one() - p;
    Ok(-p * p.log2() - q * q.log2())
}

/// A probability-weighted list of states of equal dimension.
#[derive(Clone, Debug)]
pub struct Ensemble<T: RealScalar> {
    probs: Vec<T>,
    states: Vec<DensityMatrix<T>>,
}

impl<T: RealScalar> Ensemble<T> {
    pub fn new(probs: Vec<T>, states: Vec<DensityMatrix<T>>) -> Result<Self> {
        if probs.len() != states.len() || probs.is_empty() {
            return Err(Error::InvalidEnsemble(format!(
                "{} probabilities for {} states",
                probs.len(),
                states.len()
            )));
        }
        if probs.iter().any(|&p| p < T::zero()) {
            return Err(Error::InvalidEnsemble("negative probability".into()));
        }
        let total: T = probs.iter().copied().sum();
        if (total - T::one()).abs() > T::structural_tol() {
            return Err(Error::InvalidEnsemble(format!(
                "probabilities sum to {total}"
            )));
        }
        let dim = states[0].dim();
        if states.iter().any(|s| s.dim() != dim) {
            return Err(Error::InvalidEnsemble("states of unequal dimension".into()));
        }
        Ok(Self { probs, states })
    }

    /// Uniform ensemble over the computational basis of a given dimension.
    pub fn uniform_basis(dim: usize) -> Result<Self> {
        let p = T::one() / T::from_usize(dim).unwrap();
        let states = (0..dim)
            .map(|i| Ok(PureState::<T>::basis(dim, i)?.projector()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(vec![p; dim], states)
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.states[0].dim()
    }

    pub fn probs(&self) -> &[T] {
        &self.probs
    }

    pub fn states(&self) -> &[DensityMatrix<T>] {
        &self.states
    }
}

/// Entropy of the environment after the channel acts on `rho`, computed as
/// `S(W)` for the Kraus overlap matrix `W_ij = Tr(A_i ρ A_j†)`.
pub fn entropy_exchange<T: RealScalar>(
    channel: &KrausChannel<T>,
    rho: &DensityMatrix<T>,
) -> Result<T> {
    if rho.dim() != channel.dim_in() {
        return Err(Error::DimMismatch {
            context: "entropy_exchange",
            expected: channel.dim_in(),
            actual: rho.dim(),
        });
    }
    let k = channel.kraus().len();
    // B_i = A_i ρ; W_ij = Σ_{m,b} B_i[m,b] · conj(A_j[m,b])
    let products: Vec<CMatrix<T>> = channel
        .kraus()
        .iter()
        .map(|a| a.dot(rho.matrix()))
        .collect();
    let mut w: CMatrix<T> = Array2::zeros((k, k));
    for i in 0..k {
        for j in 0..k {
            let mut acc: Complex<T> = Complex::zero();
            for (x, y) in products[i].iter().zip(channel.kraus()[j].iter()) {
                acc += x * y.conj();
            }
            w[[i, j]] = acc;
        }
    }
    // W is Hermitian, PSD and unit trace for a valid channel and state.
    DensityMatrix::new(w)?.entropy()
}

/// Coherent information `S(N(ρ)) − S_e(N, ρ)`; may be negative.
pub fn coherent_information<T: RealScalar>(
    channel: &KrausChannel<T>,
    rho: &DensityMatrix<T>,
) -> Result<T> {
    let out_entropy = channel.apply(rho)?.entropy()?;
    let exchange = entropy_exchange(channel, rho)?;
    Ok(out_entropy - exchange)
}

/// Holevo χ of the channel's output ensemble:
/// `S(Σ pᵢ N(ρᵢ)) − Σ pᵢ S(N(ρᵢ))`.
pub fn holevo_chi<T: RealScalar>(channel: &KrausChannel<T>, ensemble: &Ensemble<T>) -> Result<T> {
    if ensemble.dim() != channel.dim_in() {
        return Err(Error::DimMismatch {
            context: "holevo_chi",
            expected: channel.dim_in(),
            actual: ensemble.dim(),
        });
    }
    let outputs: Vec<DensityMatrix<T>> = ensemble
        .states()
        .iter()
        .map(|s| channel.apply(s))
        .collect::<Result<_>>()?;
    let d = channel.dim_out();
    let mut avg: CMatrix<T> = Array2::zeros((d, d));
    let mut mean_entropy = T::zero();
    for (p, out) in ensemble.probs().iter().zip(&outputs) {
        avg = avg + out.matrix().mapv(|v| v * Complex::new(*p, T::zero()));
        mean_entropy += *p * out.entropy()?;
    }
    let chi = DensityMatrix::new(avg)?.entropy()? - mean_entropy;
    // χ ≥ 0 by concavity; round-off can leave a tiny negative residue
    if chi < T::zero() && chi > -T::arithmetic_tol() {
        return Ok(T::zero());
    }
    Ok(chi)
}

// ---------------------------------------------------------------------------
// Classical channels
// ---------------------------------------------------------------------------

/// A discrete memoryless classical channel: a row-stochastic matrix of
/// conditional probabilities `P(j|i)`.
#[derive(Clone, Debug)]
pub struct ClassicalChannel<T: RealScalar> {
    matrix: Array2<T>,
}

impl<T: RealScalar> ClassicalChannel<T> {
    pub fn new(matrix: Array2<T>) -> Result<Self> {
        if matrix.nrows() == 0 || matrix.ncols() == 0 {
            return Err(Error::InvalidClassicalChannel("empty matrix".into()));
        }
        let tol = T::structural_tol();
        for (idx, &v) in matrix.indexed_iter() {
            if v < -tol || v > T::one() + tol {
                return Err(Error::InvalidClassicalChannel(format!(
                    "entry {idx:?} = {v} outside [0, 1]"
                )));
            }
        }
        for (i, row) in matrix.rows().into_iter().enumerate() {
            let s: T = row.iter().copied().sum();
            if (s - T::one()).abs() > tol {
                return Err(Error::InvalidClassicalChannel(format!(
                    "row {i} sums to {s}"
                )));
            }
        }
        // clamp round-off so downstream logs never see negatives
        let matrix = matrix.mapv(|v| v.max(T::zero()).min(T::one()));
        Ok(Self { matrix })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            matrix: Array2::from_diag(&Array1::from_elem(n, T::one())),
        }
    }

    /// Binary symmetric channel with crossover probability `p`.
    pub fn binary_symmetric(p: T) -> Result<Self> {
        crate::channels::check_prob("p", p)?;
        let q = T::one() - p;
        Self::new(ndarray::array![[q, p], [p, q]])
    }

    /// Binary erasure channel: inputs {0, 1}, outputs {0, 1, erased}.
    pub fn binary_erasure(p: T) -> Result<Self> {
        crate::channels::check_prob("p", p)?;
        let q = T::one() - p;
        Self::new(ndarray::array![[q, T::zero(), p], [T::zero(), q, p]])
    }

    pub fn num_inputs(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn num_outputs(&self) -> usize {
        self.matrix.ncols()
    }

    pub fn matrix(&self) -> &Array2<T> {
        &self.matrix
    }
}

/// Full computational-basis projective measurement on a space of the given
/// dimension, as a POVM.
pub fn basis_povm<T: RealScalar>(dim: usize) -> Vec<CMatrix<T>> {
    (0..dim)
        .map(|i| {
            let mut m: CMatrix<T> = Array2::zeros((dim, dim));
            m[[i, i]] = Complex::one();
            m
        })
        .collect()
}

/// Computational-basis measurement of one tensor factor, identity on the
/// rest: one POVM element per basis state of factor `which`.
pub fn factor_basis_povm<T: RealScalar>(dims: &[usize], which: usize) -> Vec<CMatrix<T>> {
    use crate::linalg::kron;
    assert!(which < dims.len());
    (0..dims[which])
        .map(|b| {
            let mut m: CMatrix<T> = Array2::ones((1, 1));
            for (f, &d) in dims.iter().enumerate() {
                let factor = if f == which {
                    let mut proj: CMatrix<T> = Array2::zeros((d, d));
                    proj[[b, b]] = Complex::one();
                    proj
                } else {
                    identity_matrix(d)
                };
                m = kron(&m, &factor);
            }
            m
        })
        .collect()
}

/// Classical channel induced by preparing the given pure states, sending
/// them through the channel, and measuring the given POVM:
/// `P(j|i) = Tr(M_j N(|ψᵢ⟩⟨ψᵢ|))`.
pub fn induced_classical_channel<T: RealScalar>(
    channel: &KrausChannel<T>,
    input_states: &[PureState<T>],
    povm: &[CMatrix<T>],
) -> Result<ClassicalChannel<T>> {
    if input_states.is_empty() || povm.is_empty() {
        return Err(Error::InvalidClassicalChannel(
            "need at least one input state and POVM element".into(),
        ));
    }
    for psi in input_states {
        if psi.dim() != channel.dim_in() {
            return Err(Error::DimMismatch {
                context: "induced channel input states",
                expected: channel.dim_in(),
                actual: psi.dim(),
            });
        }
    }
    let d = channel.dim_out();
    let mut sum: CMatrix<T> = Array2::zeros((d, d));
    for m in povm {
        if m.nrows() != d || m.ncols() != d {
            return Err(Error::DimMismatch {
                context: "POVM element dimension",
                expected: d,
                actual: m.nrows(),
            });
        }
        if max_abs_diff(m, &dagger(m)) > T::structural_tol() {
            return Err(Error::IncompletePovm(f64::NAN));
        }
        let (w, _) = eigh(m)?;
        if w[0] < -T::structural_tol() {
            return Err(Error::InvalidClassicalChannel(format!(
                "POVM element not PSD: min eigenvalue {}",
                w[0]
            )));
        }
        sum += m;
    }
    let dev = max_abs_diff(&sum, &identity_matrix(d));
    if dev > T::structural_tol() {
        return Err(Error::IncompletePovm(dev.to_f64().unwrap_or(f64::NAN)));
    }

    let mut p: Array2<T> = Array2::zeros((input_states.len(), povm.len()));
    for (i, psi) in input_states.iter().enumerate() {
        let out = channel.apply(&psi.projector())?;
        for (j, m) in povm.iter().enumerate() {
            let val = crate::linalg::trace(&m.dot(out.matrix()));
            p[[i, j]] = val.re;
        }
    }
    ClassicalChannel::new(p)
}

/// Capacity of a discrete classical channel in bits, by Blahut–Arimoto
/// alternating maximization with a certified stop rule: iterate until the
/// gap between the capacity upper and lower bounds is at most `tol`.
pub fn blahut_arimoto<T: RealScalar>(channel: &ClassicalChannel<T>, tol: T) -> Result<T> {
    Ok(blahut_arimoto_with_history(channel, tol)?.0)
}

/// Same as [`blahut_arimoto`] but also returns the per-iteration capacity
/// lower bounds, which are nondecreasing.
pub fn blahut_arimoto_with_history<T: RealScalar>(
    channel: &ClassicalChannel<T>,
    tol: T,
) -> Result<(T, Vec<T>)> {
    if tol <= T::zero() {
        return Err(Error::OutOfRange {
            name: "tol",
            value: tol.to_f64().unwrap_or(f64::NAN),
            range: "(0, inf)",
        });
    }
    let p = channel.matrix();
    let (n_in, n_out) = (p.nrows(), p.ncols());
    let ln2 = T::constant(std::f64::consts::LN_2);
    let tol_nats = tol * ln2;

    let mut dist = vec![T::one() / T::from_usize(n_in).unwrap(); n_in];
    let mut history = Vec::new();

    for _ in 0..BA_MAX_ITERATIONS {
        // output distribution under the current input distribution
        let mut q = vec![T::zero(); n_out];
        for i in 0..n_in {
            for j in 0..n_out {
                q[j] += dist[i] * p[[i, j]];
            }
        }
        // d_i = D(P(·|i) || q), in nats
        let mut d = vec![T::zero(); n_in];
        for i in 0..n_in {
            let mut acc = T::zero();
            for j in 0..n_out {
                let pij = p[[i, j]];
                if pij > T::zero() {
                    acc += pij * (pij / q[j]).ln();
                }
            }
            d[i] = acc;
        }
        let upper = d.iter().copied().fold(T::neg_infinity(), T::max);
        let lower = dist
            .iter()
            .zip(&d)
            .map(|(&pi, &di)| pi * di.exp())
            .sum::<T>()
            .ln();
        history.push(lower.max(T::zero()) / ln2);

        if upper - lower <= tol_nats {
            let capacity = (upper + lower) * T::constant(0.5) / ln2;
            return Ok((capacity.max(T::zero()), history));
        }

        // p_i ← p_i exp(d_i) / Σ
        let mut norm = T::zero();
        for i in 0..n_in {
            dist[i] *= d[i].exp();
            norm += dist[i];
        }
        for x in dist.iter_mut() {
            *x /= norm;
        }
    }
    Err(Error::NoConvergence("blahut-arimoto"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::{compose, depolarizing, pec, qec, KrausChannel};
    use crate::rng::SplitMix64;

    #[test]
    fn binary_entropy_values() {
        assert_eq!(binary_entropy(0.0f64).unwrap(), 0.0);
        assert_eq!(binary_entropy(1.0f64).unwrap(), 0.0);
        assert!((binary_entropy(0.5f64).unwrap() - 1.0).abs() < 1e-15);
        assert!((binary_entropy(0.25f64).unwrap() - 0.811278).abs() < 1e-6);
        assert!(binary_entropy(1.5f64).is_err());
    }

    #[test]
    fn entropy_exchange_of_identity_is_zero() {
        let ch = KrausChannel::<f64>::identity(2);
        let mut rng = SplitMix64::new(1);
        let rho = DensityMatrix::<f64>::random(2, &mut rng);
        assert!(entropy_exchange(&ch, &rho).unwrap().abs() < 1e-12);
    }

    #[test]
    fn entropy_exchange_of_erasure_channels_on_maximally_mixed() {
        let rho = DensityMatrix::<f64>::maximally_mixed(2).unwrap();
        for i in 1..10 {
            let eps = i as f64 / 10.0;
            let expect = binary_entropy(eps).unwrap() + eps;
            let s_qec = entropy_exchange(&qec(eps).unwrap(), &rho).unwrap();
            assert!((s_qec - expect).abs() < 1e-10, "qec eps {eps}: {s_qec}");
            let s_pec = entropy_exchange(&pec(eps).unwrap(), &rho).unwrap();
            assert!((s_pec - expect).abs() < 1e-10, "pec eps {eps}: {s_pec}");
        }
    }

    #[test]
    fn coherent_information_of_identity_on_maximally_mixed() {
        let ch = KrausChannel::<f64>::identity(2);
        let rho = DensityMatrix::<f64>::maximally_mixed(2).unwrap();
        assert!((coherent_information(&ch, &rho).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn coherent_information_formulas_on_maximally_mixed() {
        let rho = DensityMatrix::<f64>::maximally_mixed(2).unwrap();
        for i in 0..=10 {
            let eps = i as f64 / 10.0;
            let ci_qec = coherent_information(&qec(eps).unwrap(), &rho).unwrap();
            assert!((ci_qec - (1.0 - 2.0 * eps)).abs() < 1e-9, "qec eps {eps}");
            let ci_pec = coherent_information(&pec(eps).unwrap(), &rho).unwrap();
            assert!((ci_pec - (1.0 - eps)).abs() < 1e-9, "pec eps {eps}");
        }
        let ci = coherent_information(&qec(0.25).unwrap(), &rho).unwrap();
        assert!((ci - 0.5).abs() < 1e-10);
    }

    #[test]
    fn coherent_information_bounded_by_input_entropy() {
        let mut rng = SplitMix64::new(2);
        for _ in 0..20 {
            let ch = KrausChannel::<f64>::random(2, 3, 3, &mut rng);
            let rho = DensityMatrix::<f64>::random(2, &mut rng);
            let ci = coherent_information(&ch, &rho).unwrap();
            assert!(ci <= rho.entropy().unwrap() + 1e-8);
            assert!(ci <= 1.0 + 1e-8);
        }
    }

    #[test]
    fn data_processing_cannot_increase_coherent_information() {
        let mut rng = SplitMix64::new(3);
        for _ in 0..10 {
            let first = KrausChannel::<f64>::random(2, 3, 2, &mut rng);
            let second = KrausChannel::<f64>::random(3, 3, 3, &mut rng);
            let rho = DensityMatrix::<f64>::random(2, &mut rng);
            let single = coherent_information(&first, &rho).unwrap();
            let chained = coherent_information(&compose(&second, &first).unwrap(), &rho).unwrap();
            assert!(
                chained <= single + 1e-8,
                "chained {chained} > single {single}"
            );
        }
    }

    #[test]
    fn holevo_chi_basic_cases() {
        let single = Ensemble::new(
            vec![1.0],
            vec![DensityMatrix::<f64>::maximally_mixed(2).unwrap()],
        )
        .unwrap();
        let id = KrausChannel::<f64>::identity(2);
        assert!(holevo_chi(&id, &single).unwrap().abs() < 1e-12);

        let zbasis = Ensemble::<f64>::uniform_basis(2).unwrap();
        assert!((holevo_chi(&id, &zbasis).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn holevo_chi_of_erasure_on_z_basis() {
        let zbasis = Ensemble::<f64>::uniform_basis(2).unwrap();
        for i in 0..=10 {
            let eps = i as f64 / 10.0;
            let chi = holevo_chi(&qec(eps).unwrap(), &zbasis).unwrap();
            assert!((chi - (1.0 - eps)).abs() < 1e-9, "eps {eps}: chi {chi}");
        }
    }

    #[test]
    fn holevo_chi_nonnegative_for_random_ensembles() {
        let mut rng = SplitMix64::new(4);
        let ch = qec::<f64>(0.3).unwrap();
        for _ in 0..50 {
            let k = 1 + (rng.next_u64() % 4) as usize;
            let raw: Vec<f64> = (0..k).map(|_| rng.next_f64() + 1e-3).collect();
            let total: f64 = raw.iter().sum();
            let probs: Vec<f64> = raw.iter().map(|x| x / total).collect();
            let states: Vec<_> = (0..k)
                .map(|_| DensityMatrix::<f64>::random(2, &mut rng))
                .collect();
            let ens = Ensemble::new(probs, states).unwrap();
            assert!(holevo_chi(&ch, &ens).unwrap() >= 0.0);
        }
    }

    #[test]
    fn induced_channel_from_erasure_is_binary_erasure() {
        for i in 0..=10 {
            let eps = i as f64 / 10.0;
            let ch = qec(eps).unwrap();
            let inputs = [
                PureState::<f64>::basis(2, 0).unwrap(),
                PureState::<f64>::basis(2, 1).unwrap(),
            ];
            let induced = induced_classical_channel(&ch, &inputs, &basis_povm(3)).unwrap();
            let expect = ClassicalChannel::binary_erasure(eps).unwrap();
            let diff = (induced.matrix() - expect.matrix())
                .iter()
                .fold(0.0f64, |m, &x| m.max(x.abs()));
            assert!(diff < 1e-12, "eps {eps}: diff {diff}");
        }
    }

    #[test]
    fn induced_channel_from_phase_erasure_is_noiseless() {
        for i in 0..=10 {
            let eps = i as f64 / 10.0;
            let ch = pec(eps).unwrap();
            let inputs = [
                PureState::<f64>::basis(2, 0).unwrap(),
                PureState::<f64>::basis(2, 1).unwrap(),
            ];
            let povm = factor_basis_povm(&[2, 2], 0);
            let induced = induced_classical_channel(&ch, &inputs, &povm).unwrap();
            let expect = ClassicalChannel::<f64>::identity(2);
            let diff = (induced.matrix() - expect.matrix())
                .iter()
                .fold(0.0f64, |m, &x| m.max(x.abs()));
            assert!(diff < 1e-12, "eps {eps}");
        }
    }

    #[test]
    fn induced_channel_from_depolarizing_is_binary_symmetric() {
        for i in 0..=10 {
            let eps = i as f64 / 10.0;
            let ch = depolarizing(eps).unwrap();
            let inputs = [
                PureState::<f64>::basis(2, 0).unwrap(),
                PureState::<f64>::basis(2, 1).unwrap(),
            ];
            let induced = induced_classical_channel(&ch, &inputs, &basis_povm(2)).unwrap();
            let expect = ClassicalChannel::binary_symmetric(eps / 2.0).unwrap();
            let diff = (induced.matrix() - expect.matrix())
                .iter()
                .fold(0.0f64, |m, &x| m.max(x.abs()));
            assert!(diff < 1e-12, "eps {eps}");
        }
    }

    #[test]
    fn induced_channel_rejects_incomplete_povm() {
        let ch = qec::<f64>(0.2).unwrap();
        let inputs = [PureState::<f64>::basis(2, 0).unwrap()];
        let mut povm = basis_povm::<f64>(3);
        povm.pop();
        assert!(matches!(
            induced_classical_channel(&ch, &inputs, &povm),
            Err(Error::IncompletePovm(_))
        ));
    }

    #[test]
    fn blahut_arimoto_identity_and_useless_channels() {
        let id = ClassicalChannel::<f64>::identity(2);
        assert!((blahut_arimoto(&id, 1e-9).unwrap() - 1.0).abs() < 1e-8);
        let bsc_half = ClassicalChannel::binary_symmetric(0.5f64).unwrap();
        assert!(blahut_arimoto(&bsc_half, 1e-9).unwrap().abs() < 1e-8);
    }

    #[test]
    fn blahut_arimoto_binary_erasure_capacity() {
        for i in 0..=10 {
            let eps = i as f64 / 10.0;
            let ch = ClassicalChannel::binary_erasure(eps).unwrap();
            let c = blahut_arimoto(&ch, 1e-9).unwrap();
            assert!((c - (1.0 - eps)).abs() < 1e-6, "eps {eps}: C {c}");
        }
    }

    #[test]
    fn blahut_arimoto_binary_symmetric_grid() {
        for i in 0..=20 {
            let p = i as f64 / 20.0;
            let ch = ClassicalChannel::binary_symmetric(p).unwrap();
            let c = blahut_arimoto(&ch, 1e-9).unwrap();
            let expect = 1.0 - binary_entropy(p).unwrap();
            assert!((c - expect).abs() < 1e-6, "p {p}: C {c} vs {expect}");
        }
    }

    #[test]
    fn blahut_arimoto_z_channel_needs_iteration() {
        // asymmetric channel: capacity log2(1 + (1-s) s^{s/(1-s)}) at s = 1/2
        let ch = ClassicalChannel::new(ndarray::array![[1.0, 0.0], [0.5, 0.5]]).unwrap();
        let c = blahut_arimoto(&ch, 1e-10).unwrap();
        let expect = (1.0f64 + 0.5 * 0.5f64).log2();
        assert!((c - expect).abs() < 1e-8, "C {c} vs {expect}");
    }

    #[test]
    fn blahut_arimoto_lower_bounds_are_nondecreasing() {
        let ch = ClassicalChannel::new(ndarray::array![
            [0.7, 0.2, 0.1],
            [0.1, 0.8, 0.1],
            [0.25, 0.25, 0.5]
        ])
        .unwrap();
        let (_, history) = blahut_arimoto_with_history(&ch, 1e-10).unwrap();
        assert!(history.len() > 1);
        for w in history.windows(2) {
            assert!(
                w[1] >= w[0] - 1e-12,
                "iterates regressed: {} -> {}",
                w[0],
                w[1]
            );
        }
    }

    #[test]
    fn classical_channel_rejects_non_stochastic_rows() {
        assert!(ClassicalChannel::new(ndarray::array![[0.5, 0.4]]).is_err());
        assert!(ClassicalChannel::new(ndarray::array![[1.2, -0.2]]).is_err());
    }

    #[test]
    fn blahut_arimoto_rejects_nonpositive_tolerance() {
        let id = ClassicalChannel::<f64>::identity(2);
        assert!(blahut_arimoto(&id, 0.0).is_err());
        assert!(blahut_arimoto(&id, -1e-6).is_err());
    }
}
