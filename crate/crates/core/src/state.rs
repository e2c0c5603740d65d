//! Validated multipartite density matrices and subsystem operations.
//!
//! Parties are ordered as in `dims`; a [`PartySubset`] is a bitmask over those
//! positions, so every subset operation keeps the relative party order.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{hermitian_eigenvalues, kron, ComplexMatrix, TAU_HERM};

/// Tolerance on `|tr ρ - 1|`.
pub const TAU_TRACE: f64 = 1e-9;
/// Eigenvalues down to `-TAU_PSD` are accepted as numerical noise.
pub const TAU_PSD: f64 = 1e-9;
/// Upper bound on party count (the entropy lattice has `2^n` entries).
pub const MAX_PARTIES: usize = 16;
/// Upper bound on the total Hilbert-space dimension.
pub const MAX_TOTAL_DIM: usize = 1 << 16;

/// A set of party positions, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PartySubset(u32);

impl PartySubset {
    pub const EMPTY: PartySubset = PartySubset(0);

    /// Builds a subset from party positions; duplicates are rejected.
    pub fn new(indices: &[usize]) -> Result<Self> {
        let mut mask = 0u32;
        for &i in indices {
            if i >= MAX_PARTIES {
                return Err(Error::PartyOutOfRange {
                    index: i,
                    parties: MAX_PARTIES,
                });
            }
            if mask & (1 << i) != 0 {
                return Err(Error::DuplicateParty(i));
            }
            mask |= 1 << i;
        }
        Ok(Self(mask))
    }

    pub const fn from_mask(mask: u32) -> Self {
        Self(mask)
    }

    pub fn singleton(i: usize) -> Self {
        assert!(i < MAX_PARTIES);
        Self(1 << i)
    }

    /// All parties `0..n`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_PARTIES);
        Self(((1u64 << n) - 1) as u32)
    }

    pub const fn mask(self) -> u32 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, i: usize) -> bool {
        i < 32 && self.0 & (1 << i) != 0
    }

    pub const fn union(self, other: Self) -> Self {
        Self(self.0 | other.0)
    }

    pub const fn intersection(self, other: Self) -> Self {
        Self(self.0 & other.0)
    }

    pub const fn difference(self, other: Self) -> Self {
        Self(self.0 & !other.0)
    }

    pub const fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub const fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Parties of `0..n` not in `self`.
    pub fn complement(self, n: usize) -> Self {
        Self::full(n).difference(self)
    }

    /// Party positions in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.0 & (1 << i) != 0)
    }

    pub fn indices(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Errors if any member is `>= n`.
    pub fn check_within(self, n: usize) -> Result<()> {
        match self.iter().find(|&i| i >= n) {
            Some(index) => Err(Error::PartyOutOfRange { index, parties: n }),
            None => Ok(()),
        }
    }

    /// Every subset of `0..n` with exactly `size` members, in increasing mask order.
    pub fn all_of_size(n: usize, size: usize) -> impl Iterator<Item = PartySubset> {
        (0u32..(1u32 << n))
            .filter(move |m| m.count_ones() as usize == size)
            .map(PartySubset)
    }
}

impl fmt::Debug for PartySubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PartySubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// A density matrix together with its tensor-factor structure.
#[derive(Debug, Clone, PartialEq)]
pub struct MultipartiteState {
    dims: Vec<usize>,
    matrix: ComplexMatrix,
    labels: Option<Vec<String>>,
}

fn check_dims(dims: &[usize]) -> Result<usize> {
    if dims.len() > MAX_PARTIES {
        return Err(Error::TooManyParties(dims.len()));
    }
    let mut product: usize = 1;
    for &d in dims {
        if d < 2 {
            return Err(Error::InvalidDimension(d));
        }
        product = product.saturating_mul(d);
        if product > MAX_TOTAL_DIM {
            return Err(Error::DimensionOverflow(product));
        }
    }
    Ok(product)
}

/// Checks shape, Hermiticity, unit trace and positivity (in that order).
///
/// The stored matrix is kept exactly as given; small negative eigenvalues are
/// only clamped later, when entropies are evaluated.
pub fn validate_density(matrix: ComplexMatrix, dims: &[usize]) -> Result<MultipartiteState> {
    let product = check_dims(dims)?;
    if !matrix.is_square() {
        return Err(Error::NotSquare {
            rows: matrix.rows(),
            cols: matrix.cols(),
        });
    }
    if matrix.rows() != product {
        return Err(Error::DimensionMismatch {
            side: matrix.rows(),
            product,
        });
    }
    let dev = matrix.hermiticity_deviation();
    if dev > TAU_HERM {
        return Err(Error::NotHermitian(dev));
    }
    let tr = matrix.trace();
    if (tr.re - 1.0).abs() > TAU_TRACE || tr.im.abs() > TAU_TRACE {
        return Err(Error::NotUnitTrace(tr.re));
    }
    let min_eig = hermitian_eigenvalues(&matrix)?
        .last()
        .copied()
        .unwrap_or(0.0);
    if min_eig < -TAU_PSD {
        return Err(Error::NotPsd(min_eig));
    }
    Ok(MultipartiteState {
        dims: dims.to_vec(),
        matrix,
        labels: None,
    })
}

/// Row-major strides of each party inside the full index.
fn strides(dims: &[usize]) -> Vec<usize> {
    let mut s = vec![1; dims.len()];
    for k in (0..dims.len().saturating_sub(1)).rev() {
        s[k] = s[k + 1] * dims[k + 1];
    }
    s
}

/// Full-index offsets of every joint configuration of `parties`, enumerated
/// row-major over those parties.
fn subset_offsets(dims: &[usize], strides: &[usize], parties: &[usize]) -> Vec<usize> {
    let mut offsets = vec![0usize];
    for &p in parties {
        let mut next = Vec::with_capacity(offsets.len() * dims[p]);
        for &o in &offsets {
            for digit in 0..dims[p] {
                next.push(o + digit * strides[p]);
            }
        }
        offsets = next;
    }
    offsets
}

impl MultipartiteState {
    /// Wraps a matrix already known to be a valid state (e.g. a marginal of one).
    pub(crate) fn from_trusted(matrix: ComplexMatrix, dims: Vec<usize>) -> Self {
        debug_assert_eq!(matrix.rows(), dims.iter().product::<usize>());
        Self {
            dims,
            matrix,
            labels: None,
        }
    }

    /// Projector onto a (normalized internally) state vector.
    pub fn from_pure(amplitudes: &[Complex64], dims: &[usize]) -> Result<Self> {
        let product = check_dims(dims)?;
        if amplitudes.len() != product {
            return Err(Error::DimensionMismatch {
                side: amplitudes.len(),
                product,
            });
        }
        let norm = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::InvalidSpec("zero or non-finite state vector".into()));
        }
        let v: Vec<Complex64> = amplitudes.iter().map(|z| z / norm).collect();
        Ok(Self::from_trusted(ComplexMatrix::outer(&v), dims.to_vec()))
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dims.len() {
            return Err(Error::InvalidSpec(format!(
                "{} labels for {} parties",
                labels.len(),
                self.dims.len()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn parties(&self) -> usize {
        self.dims.len()
    }

    pub fn side(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// All parties of this state.
    pub fn all(&self) -> PartySubset {
        PartySubset::full(self.parties())
    }

    pub fn purity(&self) -> f64 {
        let m = &self.matrix;
        let mut p = 0.0;
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                p += (m[(i, j)] * m[(j, i)]).re;
            }
        }
        p
    }

    /// Tensor product `self ⊗ other` with concatenated party lists.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        check_dims(&dims)?;
        let labels = match (&self.labels, &other.labels) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).cloned().collect()),
            _ => None,
        };
        Ok(Self {
            dims,
            matrix: kron(&self.matrix, &other.matrix),
            labels,
        })
    }

    /// Reduced state on `keep`; the remaining parties are traced out.
    pub fn partial_trace(&self, keep: PartySubset) -> Result<Self> {
        let n = self.parties();
        keep.check_within(n)?;
        let kept = keep.indices();
        let traced = keep.complement(n).indices();
        let st = strides(&self.dims);
        let off_k = subset_offsets(&self.dims, &st, &kept);
        let off_t = subset_offsets(&self.dims, &st, &traced);
        let side = off_k.len();
        let mut out = ComplexMatrix::zeros(side, side);
        for (r, &kr) in off_k.iter().enumerate() {
            for (col, &kc) in off_k.iter().enumerate() {
                let mut acc = Complex64::new(0.0, 0.0);
                for &t in &off_t {
                    acc += self.matrix[(kr + t, kc + t)];
                }
                out[(r, col)] = acc;
            }
        }
        let dims = kept.iter().map(|&p| self.dims[p]).collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| kept.iter().map(|&p| l[p].clone()).collect());
        Ok(Self {
            dims,
            matrix: out,
            labels,
        })
    }

    /// Transposes the tensor indices of the parties in `subset` only.
    pub fn partial_transpose(&self, subset: PartySubset) -> Result<ComplexMatrix> {
        let n = self.parties();
        subset.check_within(n)?;
        let st = strides(&self.dims);
        let off_s = subset_offsets(&self.dims, &st, &subset.indices());
        let off_r = subset_offsets(&self.dims, &st, &subset.complement(n).indices());
        let mut out = ComplexMatrix::zeros(self.side(), self.side());
        for &ra in &off_r {
            for &sb in &off_s {
                for &rc in &off_r {
                    for &sd in &off_s {
                        out[(ra + sb, rc + sd)] = self.matrix[(ra + sd, rc + sb)];
                    }
                }
            }
        }
        Ok(out)
    }

    /// `U ρ U†` for a unitary acting on the full space.
    pub fn conjugate_by(&self, unitary: &ComplexMatrix) -> Result<Self> {
        if unitary.rows() != self.side() || unitary.cols() != self.side() {
            return Err(Error::DimensionMismatch {
                side: unitary.rows(),
                product: self.side(),
            });
        }
        let matrix = unitary.matmul(&self.matrix).matmul(&unitary.adjoint());
        Ok(Self {
            dims: self.dims.clone(),
            matrix,
            labels: self.labels.clone(),
        })
    }

    /// Applies one unitary per party: `(⊗ U_k) ρ (⊗ U_k)†`.
    pub fn apply_local_unitaries(&self, unitaries: &[ComplexMatrix]) -> Result<Self> {
        if unitaries.len() != self.parties() {
            return Err(Error::InvalidSpec(format!(
                "{} local unitaries for {} parties",
                unitaries.len(),
                self.parties()
            )));
        }
        let mut total = ComplexMatrix::identity(1);
        for (u, &d) in unitaries.iter().zip(&self.dims) {
            if u.rows() != d || u.cols() != d {
                return Err(Error::DimensionMismatch {
                    side: u.rows(),
                    product: d,
                });
            }
            total = kron(&total, u);
        }
        self.conjugate_by(&total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::c;

    fn bell() -> MultipartiteState {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let z = c(0.0, 0.0);
        MultipartiteState::from_pure(&[c(s, 0.0), z, z, c(s, 0.0)], &[2, 2]).unwrap()
    }

    #[test]
    fn subset_construction() {
        let s = PartySubset::new(&[2, 0]).unwrap();
        assert_eq!(s.indices(), vec![0, 2]);
        assert_eq!(s.to_string(), "{0,2}");
        assert!(matches!(
            PartySubset::new(&[1, 1]),
            Err(Error::DuplicateParty(1))
        ));
        assert!(matches!(
            s.check_within(2),
            Err(Error::PartyOutOfRange { index: 2, parties: 2 })
        ));
        assert_eq!(PartySubset::all_of_size(4, 2).count(), 6);
        assert_eq!(s.complement(4).indices(), vec![1, 3]);
    }

    #[test]
    fn validate_accepts_maximally_mixed() {
        let m = ComplexMatrix::identity(4).scale(0.25);
        let st = validate_density(m, &[2, 2]).unwrap();
        assert_eq!(st.parties(), 2);
    }

    #[test]
    fn validate_rejects_negative_spectrum() {
        // Trace is exactly one here, so positivity is what fails.
        let m = ComplexMatrix::from_real_diag(&[0.5, 0.6, 0.0, -0.1]);
        assert!(matches!(validate_density(m, &[2, 2]), Err(Error::NotPsd(_))));
        let m = ComplexMatrix::from_real_diag(&[0.5, 0.6, 0.1, -0.1]);
        assert!(matches!(
            validate_density(m, &[2, 2]),
            Err(Error::NotUnitTrace(_))
        ));
    }

    #[test]
    fn validate_rejects_shape_problems() {
        let m = ComplexMatrix::identity(3).scale(1.0 / 3.0);
        assert!(matches!(
            validate_density(m, &[2, 2]),
            Err(Error::DimensionMismatch { side: 3, product: 4 })
        ));
        let m = ComplexMatrix::identity(2).scale(0.5);
        assert!(matches!(
            validate_density(m, &[1, 2]),
            Err(Error::InvalidDimension(1))
        ));
        let mut m = ComplexMatrix::identity(2).scale(0.5);
        m[(0, 1)] = c(0.1, 0.0);
        assert!(matches!(
            validate_density(m, &[2]),
            Err(Error::NotHermitian(_))
        ));
    }

    #[test]
    fn bell_marginal_is_maximally_mixed() {
        let a = bell().partial_trace(PartySubset::singleton(0)).unwrap();
        assert!(a.matrix().max_abs_diff(&ComplexMatrix::identity(2).scale(0.5)) < 1e-15);
        assert_eq!(a.dims(), &[2]);
    }

    #[test]
    fn product_marginals() {
        let ra = validate_density(
            ComplexMatrix::from_real_rows(&[&[0.7, 0.2], &[0.2, 0.3]]).unwrap(),
            &[2],
        )
        .unwrap();
        let rb = validate_density(ComplexMatrix::from_real_diag(&[0.1, 0.5, 0.4]), &[3]).unwrap();
        let ab = ra.compose(&rb).unwrap();
        let back_a = ab.partial_trace(PartySubset::singleton(0)).unwrap();
        let back_b = ab.partial_trace(PartySubset::singleton(1)).unwrap();
        assert!(back_a.matrix().max_abs_diff(ra.matrix()) < 1e-15);
        assert!(back_b.matrix().max_abs_diff(rb.matrix()) < 1e-15);
        let empty = ab.partial_trace(PartySubset::EMPTY).unwrap();
        assert!((empty.matrix()[(0, 0)].re - 1.0).abs() < 1e-15);
    }

    #[test]
    fn partial_trace_rejects_out_of_range() {
        let s = PartySubset::new(&[0, 2]).unwrap();
        assert!(matches!(
            bell().partial_trace(s),
            Err(Error::PartyOutOfRange { index: 2, .. })
        ));
    }

    #[test]
    fn partial_transpose_of_product() {
        let ra = validate_density(
            ComplexMatrix::from_real_rows(&[&[0.6, 0.1], &[0.1, 0.4]]).unwrap(),
            &[2],
        )
        .unwrap();
        let mut mb = ComplexMatrix::from_real_diag(&[0.5, 0.5]);
        mb[(0, 1)] = c(0.2, 0.3);
        mb[(1, 0)] = c(0.2, -0.3);
        let rb = validate_density(mb.clone(), &[2]).unwrap();
        let ab = ra.compose(&rb).unwrap();
        let pt = ab.partial_transpose(PartySubset::singleton(1)).unwrap();
        assert!(pt.max_abs_diff(&kron(ra.matrix(), &mb.transpose())) < 1e-15);
    }

    #[test]
    fn bell_partial_transpose_spectrum() {
        // The partial transpose of |Φ+><Φ+| is SWAP/2, with spectrum {1/2,1/2,1/2,-1/2}.
        let pt = bell().partial_transpose(PartySubset::singleton(1)).unwrap();
        let ev = hermitian_eigenvalues(&pt).unwrap();
        assert!((ev[3] + 0.5).abs() < 1e-12);
        assert!(ev[..3].iter().all(|v| (v - 0.5).abs() < 1e-12));
    }

    #[test]
    fn local_unitary_dimension_checks() {
        let st = bell();
        assert!(st
            .apply_local_unitaries(&[ComplexMatrix::identity(2)])
            .is_err());
        let same = st
            .apply_local_unitaries(&[ComplexMatrix::identity(2), ComplexMatrix::identity(2)])
            .unwrap();
        assert_eq!(same.matrix(), st.matrix());
    }
}
