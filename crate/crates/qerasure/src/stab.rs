//! Stabilizer codes over GF(2) in the symplectic (X|Z) convention, random
//! code sampling, erasure correctability at known locations, and the Monte
//! Carlo threshold scan showing random codes reach rate 1 − 2ε against
//! erasures.

use rand::Rng;

use crate::error::{Error, Result};
use crate::gf2::{GF2Matrix, GF2Vector, RowBasis};
use crate::rng::{trial_seed, SplitMix64};

/// Abort generator sampling after this many rejections. Rejections only
/// happen on linearly dependent draws, so this is unreachable in practice
/// for n ≤ 2048.
const MAX_REJECTIONS: usize = 1_000_000;

/// Symplectic product of two 2n-bit Pauli vectors in (X|Z) convention:
/// `u_X·v_Z + u_Z·v_X mod 2`. Zero iff the Paulis commute.
pub fn symplectic_product(u: &GF2Vector, v: &GF2Vector) -> Result<bool> {
    if u.len() != v.len() || !u.len().is_multiple_of(2) {
        return Err(Error::DimMismatch {
            context: "symplectic product needs equal even lengths",
            expected: u.len(),
            actual: v.len(),
        });
    }
    Ok(u.dot(&symplectic_dual(v)))
}

/// Swap the X and Z halves, so a plain dot product computes the symplectic
/// product against the original.
pub(crate) fn symplectic_dual(v: &GF2Vector) -> GF2Vector {
    let n = v.len() / 2;
    let mut out = GF2Vector::zeros(v.len());
    for i in 0..n {
        if v.get(i) {
            out.set(n + i, true);
        }
        if v.get(n + i) {
            out.set(i, true);
        }
    }
    out
}

/// An erasure pattern: the set of qubit positions reported erased.
#[derive(Clone, Debug)]
pub struct ErasurePattern {
    n: usize,
    erased: Vec<usize>,
}

impl ErasurePattern {
    pub fn new(n: usize, mut erased: Vec<usize>) -> Result<Self> {
        erased.sort_unstable();
        erased.dedup();
        if erased.iter().any(|&i| i >= n) {
            return Err(Error::OutOfRange {
                name: "erased qubit index",
                value: *erased.last().unwrap() as f64,
                range: "[0, n)",
            });
        }
        Ok(Self { n, erased })
    }

    /// Each qubit erased independently with probability `epsilon`.
    pub fn sample_bernoulli<R: Rng + ?Sized>(n: usize, epsilon: f64, rng: &mut R) -> Self {
        let erased = (0..n)
            .filter(|_| (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64) < epsilon)
            .collect();
        Self { n, erased }
    }

    /// Exactly `floor(n ε)` erased positions, uniformly chosen.
    pub fn sample_fixed_weight<R: Rng + ?Sized>(n: usize, epsilon: f64, rng: &mut R) -> Self {
        let weight = ((n as f64) * epsilon).floor() as usize;
        let mut positions: Vec<usize> = (0..n).collect();
        // partial Fisher-Yates
        for i in 0..weight.min(n) {
            let j = i + (rng.next_u64() % (n - i) as u64) as usize;
            positions.swap(i, j);
        }
        let mut erased: Vec<usize> = positions[..weight.min(n)].to_vec();
        erased.sort_unstable();
        Self { n, erased }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn erased(&self) -> &[usize] {
        &self.erased
    }

    pub fn len(&self) -> usize {
        self.erased.len()
    }

    pub fn is_empty(&self) -> bool {
        self.erased.is_empty()
    }
}

/// An \[\[n, k\]\] stabilizer code: n − k independent, mutually commuting check
/// rows of a (n−k) × 2n symplectic matrix.
#[derive(Clone, Debug)]
pub struct StabilizerCode {
    n: usize,
    k: usize,
    checks: GF2Matrix,
}

impl StabilizerCode {
    pub fn new(n: usize, k: usize, checks: GF2Matrix) -> Result<Self> {
        if k >= n || n == 0 {
            return Err(Error::InvalidCode(format!(
                "need 0 <= k < n, got [[{n}, {k}]]"
            )));
        }
        if checks.num_rows() != n - k || checks.num_cols() != 2 * n {
            return Err(Error::InvalidCode(format!(
                "check matrix is {}x{}, expected {}x{}",
                checks.num_rows(),
                checks.num_cols(),
                n - k,
                2 * n
            )));
        }
        // precompute duals so the pairwise check runs at word speed
        let duals: Vec<GF2Vector> = checks.rows().iter().map(symplectic_dual).collect();
        for i in 0..checks.num_rows() {
            for (j, dual) in duals.iter().enumerate().skip(i + 1) {
                if checks.row(i).dot(dual) {
                    return Err(Error::InvalidCode(format!(
                        "generators {i} and {j} anticommute"
                    )));
                }
            }
        }
        if checks.rank() != n - k {
            return Err(Error::InvalidCode(
                "generators are linearly dependent".into(),
            ));
        }
        Ok(Self { n, k, checks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn checks(&self) -> &GF2Matrix {
        &self.checks
    }
}

/// Sample a random \[\[n, k\]\] stabilizer code.
///
/// Each generator is drawn uniformly from the subspace of 2n-bit vectors
/// commuting with all previously accepted generators (tracked by a running
/// basis of that subspace); draws that are linearly dependent on earlier
/// picks are rejected and redrawn. This is the rejection-sampled stand-in
/// for a uniformly random stabilizer group: dependence rejections have
/// probability 2^(2m−2n) after m acceptances, so exhaustion is unreachable
/// at the block sizes this crate targets.
pub fn random_stabilizer_code<R: Rng + ?Sized>(
    n: usize,
    k: usize,
    rng: &mut R,
) -> Result<StabilizerCode> {
    if k >= n || n == 0 {
        return Err(Error::InvalidCode(format!(
            "need 0 <= k < n, got [[{n}, {k}]]"
        )));
    }
    // basis of the admissible subspace: starts as all of GF(2)^{2n}
    let mut admissible: Vec<GF2Vector> = (0..2 * n)
        .map(|i| {
            let mut v = GF2Vector::zeros(2 * n);
            v.set(i, true);
            v
        })
        .collect();
    let mut accepted: Vec<GF2Vector> = Vec::with_capacity(n - k);
    let mut span = RowBasis::new(2 * n);
    let mut rejections = 0usize;

    while accepted.len() < n - k {
        // uniform element of the admissible span: random subset XOR
        let mut candidate = GF2Vector::zeros(2 * n);
        let mut word = 0u64;
        for (idx, basis_vec) in admissible.iter().enumerate() {
            if idx % 64 == 0 {
                word = rng.next_u64();
            }
            if (word >> (idx % 64)) & 1 == 1 {
                candidate.xor_assign(basis_vec);
            }
        }
        if candidate.is_zero() || span.contains(&candidate) {
            rejections += 1;
            if rejections >= MAX_REJECTIONS {
                return Err(Error::RngExhausted(rejections));
            }
            continue;
        }

        // shrink the admissible subspace to the candidate's commutant
        let dual = symplectic_dual(&candidate);
        let mut pivot: Option<usize> = None;
        for (idx, basis_vec) in admissible.iter().enumerate() {
            if basis_vec.dot(&dual) {
                pivot = Some(idx);
                break;
            }
        }
        if let Some(p) = pivot {
            let pivot_vec = admissible[p].clone();
            for (idx, basis_vec) in admissible.iter_mut().enumerate() {
                if idx != p && basis_vec.dot(&dual) {
                    basis_vec.xor_assign(&pivot_vec);
                }
            }
            admissible.swap_remove(p);
        }

        span.insert(&candidate);
        accepted.push(candidate);
    }

    StabilizerCode::new(n, k, GF2Matrix::from_rows(accepted))
}

/// Decide erasure correctability at known locations: the pattern is
/// correctable iff every Pauli supported on the erased set that commutes
/// with all checks is itself a stabilizer element, i.e. no logical operator
/// lives on the erasure. Computed by two rank comparisons on
/// column-restricted check matrices.
pub fn is_erasure_correctable(code: &StabilizerCode, pattern: &ErasurePattern) -> Result<bool> {
    if pattern.n() != code.n() {
        return Err(Error::DimMismatch {
            context: "erasure pattern block length",
            expected: code.n(),
            actual: pattern.n(),
        });
    }
    let n = code.n();
    let e = pattern.len();
    if e == 0 {
        return Ok(true);
    }

    // columns of the X and Z coordinates on the erased set
    let x_cols: Vec<usize> = pattern.erased().to_vec();
    let z_cols: Vec<usize> = pattern.erased().iter().map(|&i| n + i).collect();

    // Commutation of a vector supported on E with check row h depends only
    // on h's coordinates over E, with X and Z swapped; the solution space of
    // "commutes with every check" has dimension 2e − rank.
    let mut swapped_cols = z_cols.clone();
    swapped_cols.extend_from_slice(&x_cols);
    let constraint = code.checks().select_columns(&swapped_cols);
    let dim_commuting = 2 * e - constraint.rank();

    // Stabilizer elements supported on E: combinations of checks vanishing
    // outside E; dimension (n−k) − rank of the outside-restricted checks.
    let outside: Vec<usize> = (0..2 * n)
        .filter(|&c| {
            let qubit = c % n;
            pattern.erased().binary_search(&qubit).is_err()
        })
        .collect();
    let restricted = code.checks().select_columns(&outside);
    let dim_stabilizer = (n - code.k()) - restricted.rank();

    Ok(dim_commuting == dim_stabilizer)
}

/// How erasure patterns are drawn in the Monte Carlo runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PatternSampling {
    /// i.i.d. Bernoulli(ε) per qubit, matching the channel model.
    Bernoulli,
    /// Exactly `floor(nε)` erasures, for variance reduction.
    FixedWeight,
}

/// Fraction of trials in which a freshly sampled random \[\[n, k\]\] code fails
/// to correct a sampled erasure pattern. Trial `i` uses the generator seeded
/// with `trial_seed(seed, i)` (code first, then pattern), so the result is a
/// pure function of the arguments regardless of evaluation order.
pub fn erasure_failure_rate(
    n: usize,
    k: usize,
    epsilon: f64,
    trials: usize,
    seed: u64,
    sampling: PatternSampling,
) -> Result<f64> {
    if trials == 0 {
        return Err(Error::OutOfRange {
            name: "trials",
            value: 0.0,
            range: "[1, inf)",
        });
    }
    if !(0.0..=1.0).contains(&epsilon) {
        return Err(Error::OutOfRange {
            name: "epsilon",
            value: epsilon,
            range: "[0, 1]",
        });
    }
    let mut failures = 0usize;
    for trial in 0..trials {
        let mut rng = SplitMix64::new(trial_seed(seed, trial as u64));
        let code = random_stabilizer_code(n, k, &mut rng)?;
        let pattern = match sampling {
            PatternSampling::Bernoulli => ErasurePattern::sample_bernoulli(n, epsilon, &mut rng),
            PatternSampling::FixedWeight => {
                ErasurePattern::sample_fixed_weight(n, epsilon, &mut rng)
            }
        };
        if !is_erasure_correctable(&code, &pattern)? {
            failures += 1;
        }
    }
    Ok(failures as f64 / trials as f64)
}

/// Failure rate per code rate: `k = round(rate · n)`, clamped to `[0, n−1]`.
pub fn threshold_scan(
    n: usize,
    epsilon: f64,
    rates: &[f64],
    trials: usize,
    seed: u64,
    sampling: PatternSampling,
) -> Result<Vec<(f64, f64)>> {
    let mut out = Vec::with_capacity(rates.len());
    for &rate in rates {
        if !(0.0..1.0).contains(&rate) {
            return Err(Error::OutOfRange {
                name: "rate",
                value: rate,
                range: "[0, 1)",
            });
        }
        let k = (((n as f64) * rate).round() as usize).min(n - 1);
        let failure = erasure_failure_rate(n, k, epsilon, trials, seed, sampling)?;
        out.push((rate, failure));
    }
    Ok(out)
}

/// The \[\[5,1,3\]\] code: cyclic shifts of XZZXI in (X|Z) convention.
pub fn five_qubit_code() -> StabilizerCode {
    let mut checks = GF2Matrix::zeros(4, 10);
    for (row, shift) in (0..4).zip(0..4) {
        // X on q, Z on q+1, Z on q+2, X on q+3 (indices mod 5)
        checks.set(row, shift % 5, true);
        checks.set(row, (shift + 3) % 5, true);
        checks.set(row, 5 + (shift + 1) % 5, true);
        checks.set(row, 5 + (shift + 2) % 5, true);
    }
    StabilizerCode::new(5, 1, checks).expect("the five-qubit code is a valid stabilizer code")
}
