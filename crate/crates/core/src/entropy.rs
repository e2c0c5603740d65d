//! Von Neumann entropies (in bits) over the subset lattice of a state.
//!
//! [`SubsystemEntropyCache`] memoizes `S(ρ_X)` for every party subset `X`;
//! each slot is filled at most once even under concurrent access.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::matrix::{hermitian_eigenvalues, ComplexMatrix};
use crate::state::{MultipartiteState, PartySubset, TAU_PSD};

/// `-Σ λ log2 λ` over a spectrum; eigenvalues in `[-TAU_PSD, 0]` count as zero.
pub fn entropy_of_spectrum(eigenvalues: &[f64]) -> Result<f64> {
    let mut s = 0.0;
    for &l in eigenvalues {
        if l < -TAU_PSD {
            return Err(Error::NotPsd(l));
        }
        if l > 0.0 {
            s -= l * l.log2();
        }
    }
    Ok(s)
}

pub fn entropy_of_matrix(m: &ComplexMatrix) -> Result<f64> {
    entropy_of_spectrum(&hermitian_eigenvalues(m)?)
}

/// Entropy of the whole state, in bits.
pub fn von_neumann_entropy(state: &MultipartiteState) -> Result<f64> {
    entropy_of_matrix(state.matrix())
}

/// Memoized subsystem entropies of one state.
#[derive(Debug)]
pub struct SubsystemEntropyCache<'a> {
    state: &'a MultipartiteState,
    table: Vec<OnceLock<Result<f64>>>,
}

impl<'a> SubsystemEntropyCache<'a> {
    pub fn new(state: &'a MultipartiteState) -> Self {
        let slots = 1usize << state.parties();
        Self {
            state,
            table: (0..slots).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn state(&self) -> &'a MultipartiteState {
        self.state
    }

    pub fn parties(&self) -> usize {
        self.state.parties()
    }

    /// Number of subsets whose entropy has been computed so far.
    pub fn cached_len(&self) -> usize {
        self.table.iter().filter(|c| c.get().is_some()).count()
    }

    /// `S(ρ_subset)`; the empty subset has entropy 0.
    pub fn entropy(&self, subset: PartySubset) -> Result<f64> {
        subset.check_within(self.parties())?;
        if subset.is_empty() {
            return Ok(0.0);
        }
        self.table[subset.mask() as usize]
            .get_or_init(|| {
                let reduced = self.state.partial_trace(subset)?;
                von_neumann_entropy(&reduced)
            })
            .clone()
    }

    /// `S(x|y) = S(x ∪ y) - S(y)`; may be negative.
    pub fn conditional_entropy(&self, x: PartySubset, y: PartySubset) -> Result<f64> {
        if !x.is_disjoint(y) {
            return Err(Error::OverlappingSubsets);
        }
        Ok(self.entropy(x.union(y))? - self.entropy(y)?)
    }

    /// `I(a:b) = S(a) + S(b) - S(a ∪ b)`.
    pub fn mutual_information(&self, a: PartySubset, b: PartySubset) -> Result<f64> {
        if !a.is_disjoint(b) {
            return Err(Error::OverlappingSubsets);
        }
        Ok(self.entropy(a)? + self.entropy(b)? - self.entropy(a.union(b))?)
    }

    /// `I(a:b|c) = S(ac) + S(bc) - S(abc) - S(c)`.
    pub fn conditional_mutual_information(
        &self,
        a: PartySubset,
        b: PartySubset,
        c: PartySubset,
    ) -> Result<f64> {
        if !a.is_disjoint(b) || !a.is_disjoint(c) || !b.is_disjoint(c) {
            return Err(Error::OverlappingSubsets);
        }
        Ok(self.entropy(a.union(c))? + self.entropy(b.union(c))?
            - self.entropy(a.union(b).union(c))?
            - self.entropy(c)?)
    }
}
