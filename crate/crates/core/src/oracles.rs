//! Independent entanglement quantifiers: Wootters concurrence and negativity.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::matrix::{c, hermitian_eigen, hermitian_eigenvalues, ComplexMatrix};
use crate::state::{MultipartiteState, PartySubset};

/// A validated state on exactly two qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoQubitState(MultipartiteState);

impl TwoQubitState {
    pub fn new(state: MultipartiteState) -> Result<Self> {
        if state.dims() != [2, 2] {
            return Err(Error::WrongDims {
                expected: vec![2, 2],
                got: state.dims().to_vec(),
            });
        }
        Ok(Self(state))
    }

    pub fn state(&self) -> &MultipartiteState {
        &self.0
    }

    pub fn into_inner(self) -> MultipartiteState {
        self.0
    }
}

impl TryFrom<MultipartiteState> for TwoQubitState {
    type Error = Error;

    fn try_from(state: MultipartiteState) -> Result<Self> {
        Self::new(state)
    }
}

/// `σ_y ⊗ σ_y`, which is real.
fn spin_flip() -> ComplexMatrix {
    let mut yy = ComplexMatrix::zeros(4, 4);
    yy[(0, 3)] = c(-1.0, 0.0);
    yy[(1, 2)] = c(1.0, 0.0);
    yy[(2, 1)] = c(1.0, 0.0);
    yy[(3, 0)] = c(-1.0, 0.0);
    yy
}

/// Positive square root of a PSD Hermitian matrix (negative noise clamped).
fn psd_sqrt(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    let eig = hermitian_eigen(m)?;
    let n = m.rows();
    let mut out = ComplexMatrix::zeros(n, n);
    for (l, v) in eig.values.iter().zip(&eig.vectors) {
        out.add_scaled(&ComplexMatrix::outer(v), l.max(0.0).sqrt());
    }
    Ok(out)
}

/// Wootters concurrence `max(0, λ1 − λ2 − λ3 − λ4)`.
///
/// The `λ_i` are the square roots of the spectrum of `ρ ρ̃` with
/// `ρ̃ = (Y⊗Y) ρ* (Y⊗Y)`. They are taken as the singular values of
/// `A = √ρ (Y⊗Y) √ρ*`, since `A A† = √ρ ρ̃ √ρ`; this avoids square roots of
/// eigenvalue noise near zero.
pub fn concurrence(state: &TwoQubitState) -> Result<f64> {
    let rho = state.state().matrix();
    let root = psd_sqrt(rho)?;
    let a = root.matmul(&spin_flip()).matmul(&root.conj());
    let na = DMatrix::from_fn(4, 4, |i, j| a[(i, j)]);
    let mut lambdas: Vec<f64> = na.singular_values().iter().copied().collect();
    lambdas.sort_by(|x, y| y.total_cmp(x));
    Ok((lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]).max(0.0))
}

/// `(‖ρ^{T_S}‖₁ − 1)/2`: the magnitude of the negative part of the partial
/// transpose over `subset`.
pub fn negativity(state: &MultipartiteState, subset: PartySubset) -> Result<f64> {
    let pt = state.partial_transpose(subset)?;
    // Fold from +0.0: an empty f64 sum is −0.0.
    Ok(hermitian_eigenvalues(&pt)?
        .into_iter()
        .filter(|&l| l < 0.0)
        .fold(0.0, |acc, l| acc - l))
}

/// Positive partial transpose within `tol`.
pub fn is_ppt(state: &MultipartiteState, subset: PartySubset, tol: f64) -> Result<bool> {
    Ok(negativity(state, subset)? <= tol)
}
