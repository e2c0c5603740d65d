//! Shared test support: an independent brute-force entropy oracle and state
//! generators.
//!
//! The oracle deliberately shares no code path with the library: partial
//! traces iterate explicit digit tuples, and spectra come from the real
//! symmetric embedding `[[A, −B], [B, A]]` of `A + iB`.

#![allow(dead_code)]

use entgeom::states::{random_density_ginibre, random_pure};
use entgeom::{validate_density, MultipartiteState};
use nalgebra::DMatrix;

fn digits(mut index: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (k, &d) in dims.iter().enumerate().rev() {
        out[k] = index % d;
        index /= d;
    }
    out
}

/// Reduced matrix on `keep` (sorted party indices), as `(re, im)` pairs.
pub fn brute_partial_trace(state: &MultipartiteState, keep: &[usize]) -> (usize, Vec<(f64, f64)>) {
    let dims = state.dims();
    let side = state.side();
    let kept_dims: Vec<usize> = keep.iter().map(|&k| dims[k]).collect();
    let small: usize = kept_dims.iter().product();
    let mut out = vec![(0.0, 0.0); small * small];
    let m = state.matrix();
    for r in 0..side {
        let dr = digits(r, dims);
        for c in 0..side {
            let dc = digits(c, dims);
            let traced_equal = (0..dims.len()).filter(|k| !keep.contains(k)).all(|k| dr[k] == dc[k]);
            if !traced_equal {
                continue;
            }
            let (mut rr, mut cc) = (0, 0);
            for &k in keep {
                rr = rr * dims[k] + dr[k];
                cc = cc * dims[k] + dc[k];
            }
            let z = m[(r, c)];
            out[rr * small + cc].0 += z.re;
            out[rr * small + cc].1 += z.im;
        }
    }
    (small, out)
}

/// Eigenvalues of a Hermitian matrix given as `(re, im)` entries.
pub fn realified_eigenvalues(n: usize, entries: &[(f64, f64)]) -> Vec<f64> {
    let big = DMatrix::from_fn(2 * n, 2 * n, |i, j| {
        let (a, b) = entries[(i % n) * n + (j % n)];
        match (i < n, j < n) {
            (true, true) | (false, false) => a,
            (true, false) => -b,
            (false, true) => b,
        }
    });
    let mut ev: Vec<f64> = big.symmetric_eigen().eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    // Every eigenvalue appears twice.
    ev.into_iter().step_by(2).collect()
}

pub fn oracle_entropy(state: &MultipartiteState, keep: &[usize]) -> f64 {
    if keep.is_empty() {
        return 0.0;
    }
    let (n, entries) = brute_partial_trace(state, keep);
    realified_eigenvalues(n, &entries)
        .into_iter()
        .filter(|&l| l > 1e-15)
        .map(|l| -l * l.log2())
        .sum()
}

fn union(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut v: Vec<usize> = a.iter().chain(b).copied().collect();
    v.sort_unstable();
    v.dedup();
    v
}

pub fn others(n: usize, exclude: &[usize]) -> Vec<usize> {
    (0..n).filter(|k| !exclude.contains(k)).collect()
}

/// `S(x | cond)`.
pub fn oracle_cond(state: &MultipartiteState, x: &[usize], cond: &[usize]) -> f64 {
    oracle_entropy(state, &union(x, cond)) - oracle_entropy(state, cond)
}

/// `I(a:b|c) = S(ac) + S(bc) − S(abc) − S(c)`.
pub fn oracle_cmi(state: &MultipartiteState, a: &[usize], b: &[usize], c: &[usize]) -> f64 {
    oracle_entropy(state, &union(a, c)) + oracle_entropy(state, &union(b, c))
        - oracle_entropy(state, &union(&union(a, b), c))
        - oracle_entropy(state, c)
}

/// `I(j:R|i) + I(i:R|j)`, `R` the remaining parties.
pub fn oracle_metric(state: &MultipartiteState, i: usize, j: usize) -> f64 {
    let r = others(state.parties(), &[i, j]);
    oracle_cmi(state, &[j], &r, &[i]) + oracle_cmi(state, &[i], &r, &[j])
}

fn even_permutations(m: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, m: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == m {
            let inversions = (0..m)
                .flat_map(|a| (a + 1..m).map(move |b| (a, b)))
                .filter(|&(a, b)| prefix[a] > prefix[b])
                .count();
            if inversions.is_multiple_of(2) {
                out.push(prefix.clone());
            }
            return;
        }
        for v in 0..m {
            if !prefix.contains(&v) {
                prefix.push(v);
                rec(prefix, m, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), m, &mut out);
    out
}

/// `(−1)^m Σ_{σ even} Π_{t<m−1} s_σ(t)` from explicit conditionals.
fn oracle_volume_with(s: &[f64]) -> f64 {
    let m = s.len();
    let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
    sign * even_permutations(m)
        .iter()
        .map(|p| p[..m - 1].iter().map(|&t| s[t]).product::<f64>())
        .sum::<f64>()
}

/// `V − Ṽ` over `subset` (size ≥ 3), from the permutation definition.
pub fn oracle_volume(state: &MultipartiteState, subset: &[usize]) -> f64 {
    let n = state.parties();
    let within: Vec<f64> = subset
        .iter()
        .map(|&a| {
            let rest: Vec<usize> = subset.iter().copied().filter(|&b| b != a).collect();
            oracle_cond(state, &[a], &rest)
        })
        .collect();
    let tilde: Vec<f64> = subset
        .iter()
        .map(|&a| oracle_cond(state, &[a], &others(n, &[a])))
        .collect();
    oracle_volume_with(&within) - oracle_volume_with(&tilde)
}

/// Brute-force `E_raw`: every pair, triple and larger proper subset.
pub fn oracle_content_raw(state: &MultipartiteState) -> f64 {
    let n = state.parties();
    let mut total = 0.0;
    for mask in 1u32..(1 << n) {
        let subset: Vec<usize> = (0..n).filter(|&k| mask & (1 << k) != 0).collect();
        total += match subset.len() {
            0 | 1 => 0.0,
            2 => oracle_metric(state, subset[0], subset[1]),
            _ => oracle_volume(state, &subset),
        };
    }
    total
}

pub fn binary_entropy(p: f64) -> f64 {
    -p * p.log2() - (1.0 - p) * (1.0 - p).log2()
}

/// Full-rank Ginibre state on `qubits` qubits.
pub fn random_qubits(qubits: usize, seed: u64) -> MultipartiteState {
    random_density_ginibre(&vec![2; qubits], 1 << qubits, seed).unwrap()
}

/// `p |a><a| + (1−p) |b><b|` with `a`, `b` products of random single-qubit
/// pure states.
pub fn separable_mixture(parties: usize, seed: u64) -> MultipartiteState {
    let product = |offset: u64| {
        (1..parties).fold(random_pure(&[2], seed.wrapping_mul(97).wrapping_add(offset)).unwrap(), |acc, k| {
            acc.compose(&random_pure(&[2], seed.wrapping_mul(97).wrapping_add(offset + k as u64)).unwrap())
                .unwrap()
        })
    };
    let a = product(0);
    let b = product(50);
    let p = 0.2 + 0.6 * ((seed % 7) as f64 / 6.0);
    let mut m = a.matrix().scale(p);
    m.add_scaled(b.matrix(), 1.0 - p);
    validate_density(m, &vec![2; parties]).unwrap()
}
