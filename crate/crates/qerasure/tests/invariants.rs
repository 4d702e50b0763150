//! Cross-module consistency checks pinning one computation route against an
//! independent one.

mod common;

use common::entropy_exchange_by_purification;
use qerasure::channels::{depolarizing, mixed_erasure, pec, qec, KrausChannel};
use qerasure::info::entropy_exchange;
use qerasure::linalg::DensityMatrix;
use qerasure::rng::SplitMix64;

#[test]
fn entropy_exchange_matches_purification_route() {
    let mut rng = SplitMix64::new(31);
    let named: Vec<KrausChannel<f64>> = vec![
        qec(0.3).unwrap(),
        pec(0.6).unwrap(),
        depolarizing(0.5).unwrap(),
        mixed_erasure(0.2, 0.3).unwrap(),
    ];
    for ch in &named {
        for _ in 0..5 {
            let rho = DensityMatrix::<f64>::random(2, &mut rng);
            let fast = entropy_exchange(ch, &rho).unwrap();
            let slow = entropy_exchange_by_purification(ch, &rho);
            assert!(
                (fast - slow).abs() < 1e-8,
                "routes disagree: {fast} vs {slow}"
            );
        }
    }
    for _ in 0..10 {
        let ch = KrausChannel::<f64>::random(3, 4, 3, &mut rng);
        let rho = DensityMatrix::<f64>::random(3, &mut rng);
        let fast = entropy_exchange(&ch, &rho).unwrap();
        let slow = entropy_exchange_by_purification(&ch, &rho);
        assert!(
            (fast - slow).abs() < 1e-8,
            "routes disagree: {fast} vs {slow}"
        );
    }
}

#[test]
fn entropy_exchange_is_bounded_by_log_kraus_count() {
    let mut rng = SplitMix64::new(37);
    for _ in 0..20 {
        let k = 2 + (rng.next_u64() % 4) as usize;
        let ch = KrausChannel::<f64>::random(2, 2, k, &mut rng);
        let rho = DensityMatrix::<f64>::random(2, &mut rng);
        let s = entropy_exchange(&ch, &rho).unwrap();
        assert!(s >= -1e-10);
        assert!(s <= (k as f64).log2() + 1e-10);
    }
}
