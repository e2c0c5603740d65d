//! Monte-Carlo checks of the random-state generators against known moments.

mod common;

use entgeom::states::{random_density_ginibre, random_pure};
use entgeom::{PartySubset, SubsystemEntropyCache};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

const SAMPLES: u64 = 10_000;

#[test]
fn hilbert_schmidt_mean_purity() {
    // E[tr ρ²] = (d + k)/(dk + 1) for ρ = GG†/tr GG†, G of size d×k.
    let (d, k) = (4.0, 4.0);
    let expected = (d + k) / (d * k + 1.0);
    let mean = (0..SAMPLES)
        .map(|seed| random_density_ginibre(&[4], 4, seed).unwrap().purity())
        .sum::<f64>()
        / SAMPLES as f64;
    assert!((mean - expected).abs() < 0.01, "mean purity {mean}, expected {expected}");
    assert!((expected - 8.0 / 17.0).abs() < 1e-15);
}

/// Marginal entropy of `a|00> + b|01> + c|10> + d|11>` from the closed-form
/// 2×2 spectrum: `λ± = (1 ± √(1 − 4|ad − bc|²))/2`.
fn two_qubit_marginal_entropy(amps: [(f64, f64); 4]) -> f64 {
    let norm: f64 = amps.iter().map(|(r, i)| r * r + i * i).sum();
    let [a, b, c, d] = amps;
    let det_re = (a.0 * d.0 - a.1 * d.1) - (b.0 * c.0 - b.1 * c.1);
    let det_im = (a.0 * d.1 + a.1 * d.0) - (b.0 * c.1 + b.1 * c.0);
    let det2 = (det_re * det_re + det_im * det_im) / (norm * norm);
    let disc = (1.0 - 4.0 * det2).max(0.0).sqrt();
    common::binary_entropy(((1.0 + disc) / 2.0).min(1.0 - 1e-300))
}

#[test]
fn page_mean_for_two_qubits() {
    // Page: for a Haar-random pure state on C²⊗C² the mean marginal entropy is
    // 1/3 nat = 1/(3 ln 2) bits.
    let page = 1.0 / (3.0 * std::f64::consts::LN_2);

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let oracle = (0..SAMPLES)
        .map(|_| {
            let mut amp = || -> (f64, f64) { (rng.sample(StandardNormal), rng.sample(StandardNormal)) };
            two_qubit_marginal_entropy([amp(), amp(), amp(), amp()])
        })
        .sum::<f64>()
        / SAMPLES as f64;

    let mut max_seen: f64 = 0.0;
    let library = (0..SAMPLES)
        .map(|seed| {
            let s = random_pure(&[2, 2], seed).unwrap();
            let cache = SubsystemEntropyCache::new(&s);
            assert!(cache.entropy(s.all()).unwrap().abs() < 1e-9);
            let e = cache.entropy(PartySubset::singleton(0)).unwrap();
            max_seen = max_seen.max(e);
            assert!((-1e-12..=1.0 + 1e-12).contains(&e));
            e
        })
        .sum::<f64>()
        / SAMPLES as f64;

    assert!((oracle - page).abs() < 0.01, "oracle mean {oracle}, Page {page}");
    assert!((library - oracle).abs() < 0.01, "library mean {library}, oracle {oracle}");
    assert!(max_seen <= 1.0 + 1e-12);
}

#[test]
fn rank_one_ginibre_is_pure() {
    for seed in 0..20 {
        let s = random_density_ginibre(&[2, 3], 1, seed).unwrap();
        assert!((s.purity() - 1.0).abs() < 1e-10);
        let ev = entgeom::hermitian_eigenvalues(s.matrix()).unwrap();
        assert!(ev.iter().all(|&l| l >= -1e-12));
        assert!((s.matrix().trace().re - 1.0).abs() < 1e-12);
    }
}
