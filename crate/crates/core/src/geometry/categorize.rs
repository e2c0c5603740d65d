//! Which pairs and triples carry nonvanishing monotones, and the island
//! block structure that pattern implies.

use crate::entropy::SubsystemEntropyCache;
use crate::error::{Error, Result};
use crate::state::{MultipartiteState, PartySubset};

use super::islands::{filter_islands, IslandQuery, MAX_EXHAUSTIVE_PARTIES};
use super::{convoluted_area, convoluted_metric};

#[derive(Debug, Clone, PartialEq)]
pub struct MonotoneEntry {
    pub subset: PartySubset,
    pub value: f64,
    pub vanishes: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CategoryReport {
    pub parties: usize,
    pub epsilon: f64,
    pub pairs: Vec<MonotoneEntry>,
    pub triples: Vec<MonotoneEntry>,
    /// Finest island partition (only for systems up to eight parties).
    pub blocks: Option<Vec<PartySubset>>,
}

impl CategoryReport {
    pub fn nonvanishing_pairs(&self) -> impl Iterator<Item = &MonotoneEntry> {
        self.pairs.iter().filter(|e| !e.vanishes)
    }

    pub fn nonvanishing_triples(&self) -> impl Iterator<Item = &MonotoneEntry> {
        self.triples.iter().filter(|e| !e.vanishes)
    }

    pub fn pair(&self, i: usize, j: usize) -> Option<&MonotoneEntry> {
        let key = PartySubset::new(&[i, j]).ok()?;
        self.pairs.iter().find(|e| e.subset == key)
    }

    pub fn triple(&self, i: usize, j: usize, k: usize) -> Option<&MonotoneEntry> {
        let key = PartySubset::new(&[i, j, k]).ok()?;
        self.triples.iter().find(|e| e.subset == key)
    }

    pub fn is_fully_separable_pattern(&self) -> bool {
        self.pairs.iter().chain(&self.triples).all(|e| e.vanishes)
    }

    /// Largest island; 2 for pairwise blocks, 3 for tripartite ones, etc.
    pub fn largest_block(&self) -> Option<usize> {
        self.blocks
            .as_ref()
            .and_then(|b| b.iter().map(|s| s.len()).max())
    }
}

/// Evaluates `M` on all pairs and `²M` on all triples of a state with `n ≥ 4`.
pub fn categorize(state: &MultipartiteState, epsilon: f64) -> Result<CategoryReport> {
    let n = state.parties();
    if n < 4 {
        return Err(Error::TooFewParties { needed: 4, got: n });
    }
    let cache = SubsystemEntropyCache::new(state);
    let entry = |subset: PartySubset, value: f64| MonotoneEntry {
        subset,
        value,
        vanishes: value.abs() <= epsilon,
    };
    let mut pairs = Vec::new();
    for subset in PartySubset::all_of_size(n, 2) {
        let ix = subset.indices();
        pairs.push(entry(subset, convoluted_metric(&cache, ix[0], ix[1])?));
    }
    let mut triples = Vec::new();
    for subset in PartySubset::all_of_size(n, 3) {
        let ix = subset.indices();
        triples.push(entry(subset, convoluted_area(&cache, ix[0], ix[1], ix[2])?));
    }
    let blocks = if n <= MAX_EXHAUSTIVE_PARTIES {
        filter_islands(state, IslandQuery::Exhaustive, epsilon)?.partition
    } else {
        None
    };
    Ok(CategoryReport {
        parties: n,
        epsilon,
        pairs,
        triples,
        blocks,
    })
}
