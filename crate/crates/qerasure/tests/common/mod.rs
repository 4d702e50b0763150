//! Shared test support: independent oracles kept deliberately separate from
//! the implementation paths they check.
//!
//! Each integration-test target compiles this module on its own, so not
//! every helper is used by every target.
#![allow(dead_code)]

use ndarray::Array1;
use num_complex::Complex;
use qerasure::channels::{tensor_channels, KrausChannel};
use qerasure::gf2::GF2Vector;
use qerasure::linalg::{eigh, CVector, DensityMatrix, PureState};
use qerasure::stab::{symplectic_product, ErasurePattern, StabilizerCode};

/// Exhaustive erasure-correctability oracle: enumerate all 4^|E| Paulis
/// supported on the erased set; the pattern fails iff some non-stabilizer
/// Pauli there commutes with every check. Usable up to |E| ≈ 8.
pub fn correctable_by_enumeration(code: &StabilizerCode, pattern: &ErasurePattern) -> bool {
    let n = code.n();
    let erased = pattern.erased();
    let e = erased.len();
    for mask in 1..(4usize.pow(e as u32)) {
        let mut v = GF2Vector::zeros(2 * n);
        let mut m = mask;
        for &qubit in erased {
            let pauli = m % 4; // 0=I 1=X 2=Z 3=Y
            m /= 4;
            if pauli == 1 || pauli == 3 {
                v.set(qubit, true);
            }
            if pauli == 2 || pauli == 3 {
                v.set(n + qubit, true);
            }
        }
        if v.is_zero() {
            continue;
        }
        let commutes = (0..code.checks().num_rows())
            .all(|r| !symplectic_product(code.checks().row(r), &v).unwrap());
        if commutes && !code.checks().row_space_contains(&v) {
            return false;
        }
    }
    true
}

/// Entropy of the environment via an explicit purification: purify `rho`,
/// send the second factor through the channel, and take the entropy of the
/// joint output. Independent of the Kraus-overlap route.
pub fn entropy_exchange_by_purification(
    channel: &KrausChannel<f64>,
    rho: &DensityMatrix<f64>,
) -> f64 {
    let d = rho.dim();
    let (values, vectors) = eigh(rho.matrix()).unwrap();
    let mut amps: CVector<f64> = Array1::zeros(d * d);
    for (i, &lam) in values.iter().enumerate() {
        let w = lam.max(0.0).sqrt();
        for row in 0..d {
            // reference ket |i> tensor eigenvector u_i
            amps[i * d + row] += vectors[[row, i]] * Complex::new(w, 0.0);
        }
    }
    let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    let purification = PureState::new(amps.mapv(|a| a / norm)).unwrap();
    let extended = tensor_channels(&KrausChannel::identity(d), channel);
    let joint = extended.apply(&purification.projector()).unwrap();
    joint.entropy().unwrap()
}
