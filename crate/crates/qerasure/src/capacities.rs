//! Closed-form capacities of the erasure-type channels, published threshold
//! constants for the depolarizing channel, a deterministic single-use
//! coherent-information maximizer over the Bloch ball, and capacity-curve
//! generation.

use crate::channels::{check_prob, depolarizing, ChannelParams, KrausChannel};
use crate::error::{Error, Result};
use crate::info::{binary_entropy, coherent_information};
use crate::linalg::DensityMatrix;
use crate::scalar::RealScalar;

/// Bloch-coordinate grid resolution of the coarse scan: 17 points per axis.
const BLOCH_GRID_POINTS: usize = 17;

/// One point of a capacity curve: the channel parameters and the three
/// capacities in bits per channel use. For the channels in scope
/// `0 ≤ Q ≤ Q₂ ≤ C ≤ 1` always holds.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CapacityPoint<T: RealScalar> {
    pub epsilon: T,
    pub delta: T,
    pub q: T,
    pub q2: T,
    pub c: T,
}

/// Published threshold constants for the depolarizing channel, collected as
/// a strictly increasing sequence of ε values.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DepolarizingThresholds<T: RealScalar> {
    /// Below this all three capacities are positive.
    pub all_positive_below: T,
    /// Low end of the window where Q is positive while the single-use
    /// coherent information is identically zero.
    pub nonadditivity_low: T,
    /// Q vanishes from here on.
    pub q_vanishes_at: T,
    /// Q₂ vanishes from here on.
    pub q2_vanishes_at: T,
    /// Complete depolarization: everything vanishes.
    pub all_vanish_at: T,
}

impl<T: RealScalar> Default for DepolarizingThresholds<T> {
    fn default() -> Self {
        Self {
            all_positive_below: T::constant(0.25408),
            nonadditivity_low: T::constant(0.25239),
            q_vanishes_at: T::constant(1.0 / 3.0),
            q2_vanishes_at: T::constant(2.0 / 3.0),
            all_vanish_at: T::one(),
        }
    }
}

impl<T: RealScalar> DepolarizingThresholds<T> {
    pub fn as_sequence(&self) -> [T; 5] {
        [
            self.nonadditivity_low,
            self.all_positive_below,
            self.q_vanishes_at,
            self.q2_vanishes_at,
            self.all_vanish_at,
        ]
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.as_sequence().windows(2).all(|w| w[0] < w[1])
    }
}

/// Capacities of the mixed erasure/phase-erasure channel:
/// `Q = max{0, 1−δ−2ε}`, `Q₂ = 1−δ−ε`, `C = 1−ε`.
pub fn mixed_capacities<T: RealScalar>(epsilon: T, delta: T) -> Result<CapacityPoint<T>> {
    let p = ChannelParams::new(epsilon, delta)?;
    let one = T::one();
    let q2_raw = one - p.delta - p.epsilon;
    let q2 = q2_raw.max(T::zero());
    let q = (q2_raw - p.epsilon).max(T::zero());
    let c = one - p.epsilon;
    Ok(CapacityPoint {
        epsilon: p.epsilon,
        delta: p.delta,
        q,
        q2,
        c,
    })
}

/// Capacities of the plain erasure channel: `Q = max{0, 1−2ε}`, `Q₂ = C = 1−ε`.
pub fn qec_capacities<T: RealScalar>(epsilon: T) -> Result<CapacityPoint<T>> {
    mixed_capacities(epsilon, T::zero())
}

/// Capacities of the phase erasure channel: `Q = Q₂ = 1−ε`, `C = 1`.
pub fn pec_capacities<T: RealScalar>(epsilon: T) -> Result<CapacityPoint<T>> {
    mixed_capacities(T::zero(), epsilon)
}

/// One-shot classical capacity of the depolarizing channel,
/// `1 − H₂(ε/2)`: the capacity of the binary symmetric channel obtained by
/// sending and measuring any orthogonal basis.
pub fn depolarizing_one_shot_classical<T: RealScalar>(epsilon: T) -> Result<T> {
    check_prob("epsilon", epsilon)?;
    Ok(T::one() - binary_entropy(epsilon * T::constant(0.5))?)
}

// ---------------------------------------------------------------------------
// Coherent-information maximization over the Bloch ball
// ---------------------------------------------------------------------------

fn ci_at<T: RealScalar>(channel: &KrausChannel<T>, pt: (T, T, T)) -> Result<T> {
    let rho = DensityMatrix::from_bloch(pt.0, pt.1, pt.2)?;
    coherent_information(channel, &rho)
}

fn lex_less<T: RealScalar>(a: (T, T, T), b: (T, T, T)) -> bool {
    if a.0 != b.0 {
        return a.0 < b.0;
    }
    if a.1 != b.1 {
        return a.1 < b.1;
    }
    a.2 < b.2
}

/// Clamp a Bloch coordinate tuple into the unit ball by radial projection.
fn into_ball<T: RealScalar>(pt: (T, T, T)) -> (T, T, T) {
    let r2 = pt.0 * pt.0 + pt.1 * pt.1 + pt.2 * pt.2;
    if r2 <= T::one() {
        return pt;
    }
    let r = r2.sqrt();
    (pt.0 / r, pt.1 / r, pt.2 / r)
}

/// Maximum single-use coherent information of a qubit-input channel over the
/// Bloch ball, with the achieving state.
///
/// Deterministic: a coarse 17³ Bloch-coordinate grid scan followed by axis
/// pattern search with shrinking steps; value ties (within 1e−12) resolve to
/// the lexicographically smallest coordinate tuple.
pub fn max_coherent_information<T: RealScalar>(
    channel: &KrausChannel<T>,
    tol: T,
) -> Result<(T, DensityMatrix<T>)> {
    if channel.dim_in() != 2 {
        return Err(Error::DimMismatch {
            context: "coherent-information maximizer needs a qubit input",
            expected: 2,
            actual: channel.dim_in(),
        });
    }
    if tol <= T::zero() {
        return Err(Error::OutOfRange {
            name: "tol",
            value: tol.to_f64().unwrap_or(f64::NAN),
            range: "(0, inf)",
        });
    }
    let tie = T::constant(1e-12);
    let n = BLOCH_GRID_POINTS;
    let coord = |i: usize| -> T {
        let num = T::from_usize(2 * i).unwrap();
        let den = T::from_usize(n - 1).unwrap();
        num / den - T::one()
    };

    let mut best_pt = (T::zero(), T::zero(), T::zero());
    let mut best_val = T::neg_infinity();
    for ix in 0..n {
        for iy in 0..n {
            for iz in 0..n {
                let pt = (coord(ix), coord(iy), coord(iz));
                let r2 = pt.0 * pt.0 + pt.1 * pt.1 + pt.2 * pt.2;
                if r2 > T::one() + tie {
                    continue;
                }
                let val = ci_at(channel, pt)?;
                if val > best_val + tie || ((val - best_val).abs() <= tie && lex_less(pt, best_pt))
                {
                    best_val = val;
                    best_pt = pt;
                }
            }
        }
    }

    // Pattern search: move only on strict improvement so exactly-flat
    // landscapes keep the grid stage's tie-broken representative.
    let mut step = T::constant(2.0) / T::from_usize(n - 1).unwrap();
    let floor = tol.max(T::constant(1e-12)).sqrt() * T::constant(1e-2);
    while step > floor {
        let mut moved = false;
        let candidates = [
            (best_pt.0 + step, best_pt.1, best_pt.2),
            (best_pt.0 - step, best_pt.1, best_pt.2),
            (best_pt.0, best_pt.1 + step, best_pt.2),
            (best_pt.0, best_pt.1 - step, best_pt.2),
            (best_pt.0, best_pt.1, best_pt.2 + step),
            (best_pt.0, best_pt.1, best_pt.2 - step),
        ];
        for cand in candidates {
            let pt = into_ball(cand);
            let val = ci_at(channel, pt)?;
            if val > best_val + tie {
                best_val = val;
                best_pt = pt;
                moved = true;
            }
        }
        if !moved {
            step *= T::constant(0.5);
        }
    }

    let argmax = DensityMatrix::from_bloch(best_pt.0, best_pt.1, best_pt.2)?;
    Ok((best_val, argmax))
}

/// Bracket the ε where the depolarizing channel's single-use coherent
/// information at the maximally mixed input crosses zero. Bisection on
/// `[0.24, 0.26]` down to a bracket width of `width`.
pub fn depolarizing_ci_zero_crossing<T: RealScalar>(width: T) -> Result<(T, T)> {
    if width <= T::zero() {
        return Err(Error::OutOfRange {
            name: "width",
            value: width.to_f64().unwrap_or(f64::NAN),
            range: "(0, inf)",
        });
    }
    let mixed = DensityMatrix::maximally_mixed(2)?;
    let ci = |eps: T| -> Result<T> { coherent_information(&depolarizing(eps)?, &mixed) };
    let mut lo = T::constant(0.24);
    let mut hi = T::constant(0.26);
    let (flo, fhi) = (ci(lo)?, ci(hi)?);
    if flo <= T::zero() || fhi >= T::zero() {
        return Err(Error::NoConvergence(
            "zero crossing not bracketed by [0.24, 0.26]",
        ));
    }
    while hi - lo > width {
        let mid = (lo + hi) * T::constant(0.5);
        if ci(mid)? > T::zero() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo, hi))
}

// ---------------------------------------------------------------------------
// Capacity curves
// ---------------------------------------------------------------------------

/// Which family of channels a curve sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CurveFamily {
    /// Erasure channel vs ε.
    Qec,
    /// Mixed channel with δ = ε, vs total erasure probability δ + ε.
    MixedEqual,
    /// Phase erasure channel vs ε.
    Pec,
}

/// A sampled capacity curve; `rains_line` carries the constant `t/n = 1/3`
/// perfect-code threshold for the erasure family.
#[derive(Clone, Debug)]
pub struct CapacityCurve<T: RealScalar> {
    pub family: CurveFamily,
    pub points: Vec<CapacityPoint<T>>,
    pub rains_line: Option<T>,
}

impl<T: RealScalar> CapacityCurve<T> {
    /// Curve abscissa of a point: ε for the pure families, δ + ε for the
    /// mixed family.
    pub fn abscissa(&self, point: &CapacityPoint<T>) -> T {
        match self.family {
            CurveFamily::Qec => point.epsilon,
            CurveFamily::Pec => point.delta,
            CurveFamily::MixedEqual => point.epsilon + point.delta,
        }
    }
}

/// Evaluate the closed-form capacities over a parameter grid.
pub fn capacity_curve<T: RealScalar>(family: CurveFamily, grid: &[T]) -> Result<CapacityCurve<T>> {
    let half = T::constant(0.5);
    let mut points = Vec::with_capacity(grid.len());
    for &x in grid {
        check_prob("grid point", x)?;
        let point = match family {
            CurveFamily::Qec => qec_capacities(x)?,
            CurveFamily::Pec => pec_capacities(x)?,
            CurveFamily::MixedEqual => mixed_capacities(x * half, x * half)?,
        };
        points.push(point);
    }
    let rains_line = match family {
        CurveFamily::Qec => Some(T::one() / T::constant(3.0)),
        _ => None,
    };
    Ok(CapacityCurve {
        family,
        points,
        rains_line,
    })
}

/// Inclusive linear grid with `steps` points from `start` to `stop`.
pub fn linear_grid<T: RealScalar>(start: T, stop: T, steps: usize) -> Vec<T> {
    if steps == 0 {
        return Vec::new();
    }
    if steps == 1 {
        return vec![start];
    }
    let den = T::from_usize(steps - 1).unwrap();
    (0..steps)
        .map(|i| start + (stop - start) * T::from_usize(i).unwrap() / den)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::{pec, qec};

    #[test]
    fn qec_capacity_values() {
        let p = qec_capacities(0.0f64).unwrap();
        assert_eq!((p.q, p.q2, p.c), (1.0, 1.0, 1.0));
        let p = qec_capacities(1.0f64).unwrap();
        assert_eq!((p.q, p.q2, p.c), (0.0, 0.0, 0.0));
        let p = qec_capacities(0.25f64).unwrap();
        assert!((p.q - 0.5).abs() < 1e-15);
        assert!((p.q2 - 0.75).abs() < 1e-15);
        assert!((p.c - 0.75).abs() < 1e-15);
        let p = qec_capacities(0.5f64).unwrap();
        assert_eq!(p.q, 0.0);
        assert!((p.q2 - 0.5).abs() < 1e-15);
    }

    #[test]
    fn pec_capacity_values() {
        let p = pec_capacities(0.0f64).unwrap();
        assert_eq!((p.q, p.q2, p.c), (1.0, 1.0, 1.0));
        let p = pec_capacities(0.4f64).unwrap();
        assert!((p.q - 0.6).abs() < 1e-15);
        assert!((p.q2 - 0.6).abs() < 1e-15);
        assert_eq!(p.c, 1.0);
        let p = pec_capacities(1.0f64).unwrap();
        assert_eq!((p.q, p.q2, p.c), (0.0, 0.0, 1.0));
    }

    #[test]
    fn mixed_capacity_values_and_reductions() {
        let p = mixed_capacities(0.2f64, 0.2).unwrap();
        assert!((p.q - 0.4).abs() < 1e-15);
        assert!((p.q2 - 0.6).abs() < 1e-15);
        assert!((p.c - 0.8).abs() < 1e-15);
        for i in 0..=100 {
            let eps = i as f64 / 100.0;
            assert_eq!(
                mixed_capacities(eps, 0.0).unwrap(),
                qec_capacities(eps).unwrap()
            );
            assert_eq!(
                mixed_capacities(0.0, eps).unwrap(),
                pec_capacities(eps).unwrap()
            );
        }
        assert!(mixed_capacities(0.6f64, 0.5).is_err());
    }

    #[test]
    fn capacity_ordering_holds_everywhere() {
        for i in 0..=50 {
            for j in 0..=(50 - i) {
                let eps = i as f64 / 50.0;
                let delta = j as f64 / 50.0;
                let p = mixed_capacities(eps, delta).unwrap();
                assert!(0.0 <= p.q && p.q <= p.q2 && p.q2 <= p.c && p.c <= 1.0);
            }
        }
    }

    #[test]
    fn thresholds_strictly_increase() {
        let t = DepolarizingThresholds::<f64>::default();
        assert!(t.is_strictly_increasing());
    }

    #[test]
    fn one_shot_classical_depolarizing() {
        assert!((depolarizing_one_shot_classical(0.0f64).unwrap() - 1.0).abs() < 1e-15);
        assert!(depolarizing_one_shot_classical(1.0f64).unwrap().abs() < 1e-15);
        let c = depolarizing_one_shot_classical(0.5f64).unwrap();
        assert!((c - 0.188722).abs() < 1e-6, "C {c}");
        // strictly decreasing on (0, 1)
        let mut prev = f64::INFINITY;
        for i in 0..=100 {
            let c = depolarizing_one_shot_classical(i as f64 / 100.0).unwrap();
            assert!(c < prev);
            prev = c;
        }
    }

    #[test]
    fn maximizer_finds_erasure_capacity_below_half() {
        let (val, argmax) = max_coherent_information(&qec::<f64>(0.3).unwrap(), 1e-6).unwrap();
        assert!((val - 0.4).abs() < 1e-4, "val {val}");
        let (x, y, z) = argmax.bloch().unwrap();
        assert!(x.abs() < 1e-3 && y.abs() < 1e-3 && z.abs() < 1e-3);
    }

    #[test]
    fn maximizer_reports_pure_state_above_half() {
        let (val, argmax) = max_coherent_information(&qec::<f64>(0.6).unwrap(), 1e-6).unwrap();
        assert!(val.abs() < 1e-6, "val {val}");
        assert!(argmax.purity() > 1.0 - 1e-6, "purity {}", argmax.purity());
    }

    #[test]
    fn maximizer_on_phase_erasure() {
        let (val, argmax) = max_coherent_information(&pec::<f64>(0.4).unwrap(), 1e-6).unwrap();
        assert!((val - 0.6).abs() < 1e-4);
        let (x, y, z) = argmax.bloch().unwrap();
        assert!(x.abs() < 1e-3 && y.abs() < 1e-3 && z.abs() < 1e-3);
    }

    #[test]
    fn maximizer_rejects_wrong_input_dimension() {
        let ch = KrausChannel::<f64>::identity(3);
        assert!(max_coherent_information(&ch, 1e-6).is_err());
    }

    #[test]
    fn zero_crossing_bracket() {
        let (lo, hi) = depolarizing_ci_zero_crossing::<f64>(1e-4).unwrap();
        assert!(hi - lo <= 1e-4);
        assert!(lo >= 0.24 && hi <= 0.26);
        // the crossing sits inside the published nonadditivity window's
        // neighborhood around 0.2524
        assert!(lo < 0.2525 && hi > 0.2523, "bracket [{lo}, {hi}]");
    }

    #[test]
    fn curve_values_match_formulas() {
        let grid = linear_grid(0.0f64, 1.0, 5);
        let curve = capacity_curve(CurveFamily::Qec, &grid).unwrap();
        let qs: Vec<f64> = curve.points.iter().map(|p| p.q).collect();
        let cs: Vec<f64> = curve.points.iter().map(|p| p.c).collect();
        assert_eq!(qs, vec![1.0, 0.5, 0.0, 0.0, 0.0]);
        assert_eq!(cs, vec![1.0, 0.75, 0.5, 0.25, 0.0]);
        assert_eq!(curve.rains_line, Some(1.0 / 3.0));

        let curve = capacity_curve(CurveFamily::Pec, &grid).unwrap();
        assert!(curve.points.iter().all(|p| p.c == 1.0));
        assert_eq!(curve.rains_line, None);

        let grid6 = linear_grid(0.0f64, 1.0, 6);
        let curve = capacity_curve(CurveFamily::MixedEqual, &grid6).unwrap();
        let p = &curve.points[2];
        assert!((curve.abscissa(p) - 0.4).abs() < 1e-15);
        assert!((p.q - 0.4).abs() < 1e-12);
        assert!((p.q2 - 0.6).abs() < 1e-12);
        assert!((p.c - 0.8).abs() < 1e-12);
    }

    #[test]
    fn mixed_formula_is_piecewise_linear_and_continuous() {
        // continuity along a diagonal sweep across the Q = 0 kink
        let mut prev: Option<CapacityPoint<f64>> = None;
        for i in 0..=1000 {
            let x = i as f64 / 1000.0;
            let p = mixed_capacities(x / 2.0, x / 2.0).unwrap();
            if let Some(q) = prev {
                assert!((p.q - q.q).abs() < 2e-3);
                assert!((p.q2 - q.q2).abs() < 2e-3);
                assert!((p.c - q.c).abs() < 2e-3);
            }
            prev = Some(p);
        }
    }

    #[test]
    fn linear_grid_endpoints_are_exact() {
        let g = linear_grid(0.0f64, 1.0, 101);
        assert_eq!(g.len(), 101);
        assert_eq!(g[0], 0.0);
        assert_eq!(g[100], 1.0);
        assert_eq!(linear_grid(0.3f64, 0.3, 1), vec![0.3]);
    }

    #[test]
    fn f32_capacities_work() {
        let p = qec_capacities(0.25f32).unwrap();
        assert!((p.q - 0.5).abs() < 1e-6);
    }
}
