//! Entropic distances, the convoluted metric and its higher-dimensional
//! analogues, plus the aggregate entanglement content.
//!
//! For a subset `L` of the parties, two "volumes" are built from conditional
//! entropies: one conditions each member on the rest of `L`, the other on all
//! remaining parties of the system. Their difference is the convoluted monotone
//! over `L`:
//!
//! | `|L|` | monotone | unit      |
//! |-------|----------|-----------|
//! | 2     | `M`      | bits      |
//! | 3     | `²M`     | bits²     |
//! | m     | `ᵐ⁻¹M`   | bits^(m−1)|
//!
//! Each vanishes when `ρ = ρ_L ⊗ ρ_rest`.

mod categorize;
mod islands;
mod ono;

pub use categorize::{categorize, CategoryReport, MonotoneEntry};
pub use islands::{filter_islands, IslandQuery, IslandReport, DEFAULT_ISLAND_EPSILON};
pub use ono::{ono_check, resolve_monogamy, MonogamyResolution, OnoReport};

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::entropy::SubsystemEntropyCache;
use crate::error::{Error, Result};
use crate::state::{MultipartiteState, PartySubset};
use crate::states::bell;

/// Largest tolerated gap between the two algebraic forms of `M`.
const METRIC_IDENTITY_TOL: f64 = 1e-9;

fn pair(cache: &SubsystemEntropyCache<'_>, i: usize, j: usize) -> Result<(PartySubset, PartySubset)> {
    let n = cache.parties();
    for k in [i, j] {
        if k >= n {
            return Err(Error::PartyOutOfRange { index: k, parties: n });
        }
    }
    if i == j {
        return Err(Error::DuplicateParty(i));
    }
    // Ordered so that every pair quantity is bitwise symmetric in (i, j).
    Ok((PartySubset::singleton(i.min(j)), PartySubset::singleton(i.max(j))))
}

fn need_parties(cache: &SubsystemEntropyCache<'_>, needed: usize) -> Result<()> {
    let got = cache.parties();
    if got < needed {
        return Err(Error::TooFewParties { needed, got });
    }
    Ok(())
}

/// `D_ij = S(i|j) + S(j|i) = 2S(ij) - S(i) - S(j)`. Can be negative.
pub fn distance_d(cache: &SubsystemEntropyCache<'_>, i: usize, j: usize) -> Result<f64> {
    let (a, b) = pair(cache, i, j)?;
    Ok(2.0 * cache.entropy(a.union(b))? - cache.entropy(a)? - cache.entropy(b)?)
}

/// `D̃_ij = S(i|rest∪j) + S(j|rest∪i) = 2S(all) - S(all∖i) - S(all∖j)`.
pub fn distance_d_tilde(cache: &SubsystemEntropyCache<'_>, i: usize, j: usize) -> Result<f64> {
    let (a, b) = pair(cache, i, j)?;
    need_parties(cache, 3)?;
    let all = cache.state().all();
    Ok(2.0 * cache.entropy(all)? - cache.entropy(all.difference(a))? - cache.entropy(all.difference(b))?)
}

/// Convoluted metric `M_ij = D_ij - D̃_ij`.
///
/// Also evaluated as `I(j:R|i) + I(i:R|j)` with `R` the remaining parties; the
/// two forms must agree to 1e-9, otherwise an error is returned.
pub fn convoluted_metric(cache: &SubsystemEntropyCache<'_>, i: usize, j: usize) -> Result<f64> {
    let m = distance_d(cache, i, j)? - distance_d_tilde(cache, i, j)?;
    let via_cmi = metric_as_cmi(cache, i, j)?;
    if (m - via_cmi).abs() > METRIC_IDENTITY_TOL {
        return Err(Error::Inconsistent(format!(
            "M({i},{j}) = {m} but CMI form gives {via_cmi}"
        )));
    }
    Ok(m)
}

/// `I(j:R|i) + I(i:R|j)` where `R` is every party other than `i` and `j`.
pub fn metric_as_cmi(cache: &SubsystemEntropyCache<'_>, i: usize, j: usize) -> Result<f64> {
    let (a, b) = pair(cache, i, j)?;
    need_parties(cache, 3)?;
    let rest = a.union(b).complement(cache.parties());
    Ok(cache.conditional_mutual_information(b, rest, a)?
        + cache.conditional_mutual_information(a, rest, b)?)
}

/// Conditional entropies `S(x | L∖x)` and `S(x | all∖x)` for each `x ∈ L`.
fn conditional_profiles(
    cache: &SubsystemEntropyCache<'_>,
    subset: PartySubset,
) -> Result<(Vec<f64>, Vec<f64>)> {
    let all = cache.state().all();
    let mut local = Vec::with_capacity(subset.len());
    let mut global = Vec::with_capacity(subset.len());
    for x in subset.iter() {
        let xs = PartySubset::singleton(x);
        local.push(cache.conditional_entropy(xs, subset.difference(xs))?);
        global.push(cache.conditional_entropy(xs, all.difference(xs))?);
    }
    Ok((local, global))
}

fn check_subset(cache: &SubsystemEntropyCache<'_>, subset: PartySubset, min: usize) -> Result<()> {
    subset.check_within(cache.parties())?;
    if subset.len() < min {
        return Err(Error::InvalidSubsetSize {
            got: subset.len(),
            reason: "volume monotones need at least three parties",
        });
    }
    Ok(())
}

/// Convoluted area `²M_ijk = Area - Ãrea`, with
/// `Area = -(s_i s_j + s_i s_k + s_j s_k)` and `s_x = S(x | other two)`;
/// `Ãrea` uses `S(x | all others)` instead.
pub fn convoluted_area(cache: &SubsystemEntropyCache<'_>, i: usize, j: usize, k: usize) -> Result<f64> {
    need_parties(cache, 3)?;
    let subset = PartySubset::new(&[i, j, k])?;
    check_subset(cache, subset, 3)?;
    let (s, t) = conditional_profiles(cache, subset)?;
    let area = -(s[0] * s[1] + s[0] * s[2] + s[2] * s[1]);
    let area_tilde = -(t[0] * t[1] + t[0] * t[2] + t[2] * t[1]);
    Ok(area - area_tilde)
}

/// `e_{m-1}(s)`: sum over leave-one-out products.
fn leave_one_out_sum(s: &[f64]) -> f64 {
    (0..s.len())
        .map(|skip| {
            s.iter()
                .enumerate()
                .filter(|&(k, _)| k != skip)
                .map(|(_, v)| v)
                .product::<f64>()
        })
        .sum()
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// Closed-form volume `(-1)^m ((m-1)!/2) e_{m-1}(s)`.
fn volume_closed_form(s: &[f64]) -> f64 {
    let m = s.len();
    let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
    sign * factorial(m - 1) / 2.0 * leave_one_out_sum(s)
}

/// Volume as the literal signed sum over even permutations `σ` of
/// `Π_{t<m} s_{σ(t)}` (the last position is left out of each product).
fn volume_permutation_sum(s: &[f64]) -> f64 {
    let m = s.len();
    let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
    let mut total = 0.0;
    let mut perm: Vec<usize> = (0..m).collect();
    for_each_permutation(&mut perm, 0, &mut |p| {
        if is_even(p) {
            total += p[..m - 1].iter().map(|&k| s[k]).product::<f64>();
        }
    });
    sign * total
}

fn for_each_permutation(p: &mut Vec<usize>, start: usize, f: &mut dyn FnMut(&[usize])) {
    if start == p.len() {
        f(p);
        return;
    }
    for k in start..p.len() {
        p.swap(start, k);
        for_each_permutation(p, start + 1, f);
        p.swap(start, k);
    }
}

fn is_even(p: &[usize]) -> bool {
    let mut inversions = 0usize;
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            if p[a] > p[b] {
                inversions += 1;
            }
        }
    }
    inversions.is_multiple_of(2)
}

/// `(V, Ṽ)` for a subset of size `m ≥ 3`, via the closed form.
pub fn volumes(cache: &SubsystemEntropyCache<'_>, subset: PartySubset) -> Result<(f64, f64)> {
    check_subset(cache, subset, 3)?;
    let (s, t) = conditional_profiles(cache, subset)?;
    Ok((volume_closed_form(&s), volume_closed_form(&t)))
}

/// `(V, Ṽ)` summed term by term over even permutations; `m!` terms, so keep
/// `m` small. Used to cross-check [`volumes`].
pub fn volumes_by_permutation(cache: &SubsystemEntropyCache<'_>, subset: PartySubset) -> Result<(f64, f64)> {
    check_subset(cache, subset, 3)?;
    let (s, t) = conditional_profiles(cache, subset)?;
    Ok((volume_permutation_sum(&s), volume_permutation_sum(&t)))
}

/// Convoluted volume `ᵐ⁻¹M = V - Ṽ` over a subset of size `m ≥ 3`.
///
/// When the subset is the whole system both volumes use identical conditional
/// entropies and the result is exactly zero.
pub fn convoluted_volume(cache: &SubsystemEntropyCache<'_>, subset: PartySubset) -> Result<f64> {
    let (v, vt) = volumes(cache, subset)?;
    Ok(v - vt)
}

/// The monotone matching the subset size: `M`, `²M`, or `ᵐ⁻¹M`.
pub fn monotone_over(cache: &SubsystemEntropyCache<'_>, subset: PartySubset) -> Result<f64> {
    subset.check_within(cache.parties())?;
    let ix = subset.indices();
    match ix.len() {
        0 | 1 => Err(Error::InvalidSubsetSize {
            got: ix.len(),
            reason: "monotones are defined for at least two parties",
        }),
        2 => convoluted_metric(cache, ix[0], ix[1]),
        3 => convoluted_area(cache, ix[0], ix[1], ix[2]),
        _ => convoluted_volume(cache, subset),
    }
}

/// Unnormalized content: the sum of [`monotone_over`] across every subset of
/// size 2 through `n`, each unordered subset counted once.
pub fn entanglement_content_raw(cache: &SubsystemEntropyCache<'_>) -> Result<f64> {
    need_parties(cache, 3)?;
    let n = cache.parties();
    let mut total = 0.0;
    for size in 2..=n {
        for subset in PartySubset::all_of_size(n, size) {
            total += monotone_over(cache, subset)?;
        }
    }
    Ok(total)
}

/// Raw content of the canonical four-qubit `Bell ⊗ Bell` state.
pub fn bell_bell_reference() -> f64 {
    static REFERENCE: OnceLock<f64> = OnceLock::new();
    *REFERENCE.get_or_init(|| {
        let bb = bell().compose(&bell()).expect("bell pair composes");
        let cache = SubsystemEntropyCache::new(&bb);
        entanglement_content_raw(&cache).expect("bell pair content")
    })
}

/// Rescales a raw content so that `Bell ⊗ Bell` maps to 2.
pub fn normalize_content(raw: f64) -> f64 {
    raw / (bell_bell_reference() / 2.0)
}

/// Aggregate entanglement content `E`, raw or normalized.
pub fn entanglement_content(cache: &SubsystemEntropyCache<'_>, normalize: bool) -> Result<f64> {
    let raw = entanglement_content_raw(cache)?;
    Ok(if normalize { normalize_content(raw) } else { raw })
}

/// Every monotone of one state.
#[derive(Debug, Clone, PartialEq)]
pub struct GeometryReport {
    pub parties: usize,
    pub pair_metric: BTreeMap<(usize, usize), f64>,
    pub triple_area: BTreeMap<(usize, usize, usize), f64>,
    /// Subsets of size four and up.
    pub volumes: BTreeMap<PartySubset, f64>,
    pub e_raw: f64,
    pub e_normalized: f64,
}

/// Computes all monotones; `max_volume_size` limits the volume subsets listed
/// (E is always summed over every size).
pub fn geometry_report(state: &MultipartiteState, max_volume_size: Option<usize>) -> Result<GeometryReport> {
    let cache = SubsystemEntropyCache::new(state);
    need_parties(&cache, 3)?;
    let n = state.parties();
    let mut pair_metric = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            pair_metric.insert((i, j), convoluted_metric(&cache, i, j)?);
        }
    }
    let mut triple_area = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                triple_area.insert((i, j, k), convoluted_area(&cache, i, j, k)?);
            }
        }
    }
    let mut volumes = BTreeMap::new();
    let top = max_volume_size.unwrap_or(n).min(n);
    for size in 4..=top {
        for subset in PartySubset::all_of_size(n, size) {
            volumes.insert(subset, convoluted_volume(&cache, subset)?);
        }
    }
    let e_raw = entanglement_content_raw(&cache)?;
    Ok(GeometryReport {
        parties: n,
        pair_metric,
        triple_area,
        volumes,
        e_raw,
        e_normalized: normalize_content(e_raw),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::ComplexMatrix;
    use crate::state::validate_density;
    use crate::states::{bell, ghz, product_basis, random_density_ginibre, w_state};

    fn p(ix: &[usize]) -> PartySubset {
        PartySubset::new(ix).unwrap()
    }

    fn ket0() -> MultipartiteState {
        product_basis(&[2], &[0]).unwrap()
    }

    #[test]
    fn distances_on_canonical_states() {
        let prod = product_basis(&[2, 2, 2], &[0, 1, 1]).unwrap();
        let c = SubsystemEntropyCache::new(&prod);
        assert!(distance_d(&c, 0, 1).unwrap().abs() < 1e-12);
        assert!(distance_d_tilde(&c, 0, 1).unwrap().abs() < 1e-12);

        let bc = bell().compose(&ket0()).unwrap();
        let c = SubsystemEntropyCache::new(&bc);
        assert!((distance_d(&c, 0, 1).unwrap() + 2.0).abs() < 1e-12);
        assert!((distance_d_tilde(&c, 0, 1).unwrap() + 2.0).abs() < 1e-12);
        assert!(convoluted_metric(&c, 0, 1).unwrap().abs() < 1e-12);

        let g = ghz(3).unwrap();
        let c = SubsystemEntropyCache::new(&g);
        assert!(distance_d(&c, 0, 1).unwrap().abs() < 1e-12);
        assert!((distance_d_tilde(&c, 0, 1).unwrap() + 2.0).abs() < 1e-12);
        assert!((convoluted_metric(&c, 0, 1).unwrap() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn metric_errors() {
        let g = ghz(3).unwrap();
        let c = SubsystemEntropyCache::new(&g);
        assert!(matches!(distance_d(&c, 1, 1), Err(Error::DuplicateParty(1))));
        assert!(matches!(
            convoluted_metric(&c, 0, 3),
            Err(Error::PartyOutOfRange { index: 3, .. })
        ));
        let b = bell();
        let c = SubsystemEntropyCache::new(&b);
        assert!(distance_d(&c, 0, 1).is_ok());
        assert!(matches!(
            distance_d_tilde(&c, 0, 1),
            Err(Error::TooFewParties { needed: 3, got: 2 })
        ));
    }

    #[test]
    fn w_metric() {
        let w = w_state(3).unwrap();
        let c = SubsystemEntropyCache::new(&w);
        let h = -(1.0f64 / 3.0) * (1.0f64 / 3.0).log2() - (2.0f64 / 3.0) * (2.0f64 / 3.0).log2();
        assert!((convoluted_metric(&c, 0, 1).unwrap() - 2.0 * h).abs() < 1e-12);
    }

    #[test]
    fn area_cases() {
        let g = ghz(3).unwrap();
        let c = SubsystemEntropyCache::new(&g);
        assert_eq!(convoluted_area(&c, 0, 1, 2).unwrap(), 0.0);

        let g3d = ghz(3).unwrap().compose(&ket0()).unwrap();
        let c = SubsystemEntropyCache::new(&g3d);
        assert!(convoluted_area(&c, 0, 1, 2).unwrap().abs() < 1e-12);

        let g4 = ghz(4).unwrap();
        let c = SubsystemEntropyCache::new(&g4);
        assert!((convoluted_area(&c, 0, 1, 2).unwrap() - 3.0).abs() < 1e-12);
        assert!(matches!(
            convoluted_area(&c, 0, 1, 1),
            Err(Error::DuplicateParty(1))
        ));
    }

    #[test]
    fn volume_cases() {
        let g4d = ghz(4).unwrap().compose(&ket0()).unwrap();
        let c = SubsystemEntropyCache::new(&g4d);
        assert!(convoluted_volume(&c, p(&[0, 1, 2, 3])).unwrap().abs() < 1e-12);

        let g5 = ghz(5).unwrap();
        let c = SubsystemEntropyCache::new(&g5);
        assert!((convoluted_volume(&c, p(&[0, 1, 2, 3])).unwrap() - 12.0).abs() < 1e-12);
        assert_eq!(convoluted_volume(&c, p(&[0, 1, 2, 3, 4])).unwrap(), 0.0);
        assert!(matches!(
            convoluted_volume(&c, p(&[0, 1])),
            Err(Error::InvalidSubsetSize { got: 2, .. })
        ));
    }

    #[test]
    fn volume_of_three_matches_area() {
        let s = random_density_ginibre(&[2, 2, 2, 2], 16, 3).unwrap();
        let c = SubsystemEntropyCache::new(&s);
        for t in PartySubset::all_of_size(4, 3) {
            let ix = t.indices();
            let a = convoluted_area(&c, ix[0], ix[1], ix[2]).unwrap();
            let v = convoluted_volume(&c, t).unwrap();
            assert!((a - v).abs() < 1e-12, "{t}: {a} vs {v}");
        }
    }

    #[test]
    fn permutation_sum_matches_closed_form() {
        let s = [0.3, -1.2, 0.7, 0.05, -0.4];
        for m in 3..=5 {
            let a = volume_closed_form(&s[..m]);
            let b = volume_permutation_sum(&s[..m]);
            assert!((a - b).abs() < 1e-12, "m={m}: {a} vs {b}");
        }
        // m = 3 reproduces the negated pairwise-product sum.
        let t = [2.0, 3.0, 5.0];
        assert_eq!(volume_permutation_sum(&t), -(6.0 + 10.0 + 15.0));
    }

    #[test]
    fn bell_pair_content() {
        let bb = bell().compose(&bell()).unwrap();
        let c = SubsystemEntropyCache::new(&bb);
        assert!((entanglement_content_raw(&c).unwrap() - 32.0).abs() < 1e-10);
        assert_eq!(entanglement_content(&c, true).unwrap(), 2.0);
        assert!((bell_bell_reference() - 32.0).abs() < 1e-10);
    }

    #[test]
    fn content_vanishes_on_product() {
        let prod = product_basis(&[2, 2, 2, 2], &[1, 0, 1, 1]).unwrap();
        let c = SubsystemEntropyCache::new(&prod);
        assert!(entanglement_content(&c, true).unwrap().abs() < 1e-12);
        let b = bell();
        let c = SubsystemEntropyCache::new(&b);
        assert!(matches!(
            entanglement_content(&c, false),
            Err(Error::TooFewParties { .. })
        ));
    }

    #[test]
    fn report_shape() {
        let mixed = validate_density(ComplexMatrix::identity(8).scale(0.125), &[2, 2, 2]).unwrap();
        let r = geometry_report(&mixed, None).unwrap();
        assert_eq!(r.pair_metric.len(), 3);
        assert_eq!(r.triple_area.len(), 1);
        assert!(r.volumes.is_empty());
        let g5 = ghz(5).unwrap();
        let r = geometry_report(&g5, None).unwrap();
        assert_eq!(r.volumes.len(), 5 + 1);
        let r = geometry_report(&g5, Some(3)).unwrap();
        assert!(r.volumes.is_empty());
    }
}
