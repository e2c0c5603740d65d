//! Island filtering: does a group of parties factor out of the rest?
//!
//! A group `L` is tested with the single monotone over `L` (`M`, `²M` or a
//! volume). The exhaustive mode refines the whole system into its finest
//! partition of islands by repeated bipartition tests, smallest parts first.

use crate::entropy::SubsystemEntropyCache;
use crate::error::{Error, Result};
use crate::state::{MultipartiteState, PartySubset};

use super::monotone_over;

/// Monotone values at or below this count as vanishing (units bits^(|L|−1)).
pub const DEFAULT_ISLAND_EPSILON: f64 = 1e-8;

/// Largest system the exhaustive partition search accepts.
pub const MAX_EXHAUSTIVE_PARTIES: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IslandQuery {
    Subset(PartySubset),
    Exhaustive,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IslandReport {
    pub queried_subset: PartySubset,
    pub monotone_value: f64,
    pub is_island: bool,
    pub epsilon: f64,
    /// Finest island partition, in exhaustive mode.
    pub partition: Option<Vec<PartySubset>>,
}

struct Filter<'c, 'a> {
    cache: &'c SubsystemEntropyCache<'a>,
    epsilon: f64,
}

impl Filter<'_, '_> {
    fn monotone(&self, subset: PartySubset) -> Result<f64> {
        if subset == self.cache.state().all() {
            // The whole system is trivially separable from nothing.
            return Ok(0.0);
        }
        monotone_over(self.cache, subset)
    }

    /// Whether `subset` factors out of the rest of the system. No convoluted
    /// monotone exists for a single party, so singletons are tested with
    /// `I(i : rest) = 0`, which holds exactly for product states.
    fn is_island(&self, subset: PartySubset) -> Result<bool> {
        if subset.len() == 1 {
            let rest = subset.complement(self.cache.parties());
            return Ok(self.cache.mutual_information(subset, rest)? <= self.epsilon);
        }
        Ok(self.monotone(subset)? <= self.epsilon)
    }

    fn refine(&self, block: PartySubset, out: &mut Vec<PartySubset>) -> Result<()> {
        if block.len() > 1 {
            for size in 1..block.len() {
                for part in submasks_of_size(block, size) {
                    if self.is_island(part)? {
                        // block and part are both islands, so block∖part is one too.
                        self.refine(part, out)?;
                        self.refine(block.difference(part), out)?;
                        return Ok(());
                    }
                }
            }
        }
        out.push(block);
        Ok(())
    }
}

fn submasks_of_size(block: PartySubset, size: usize) -> Vec<PartySubset> {
    let members = block.indices();
    let k = members.len();
    (1u32..(1 << k) - 1)
        .filter(|m| m.count_ones() as usize == size)
        .map(|m| {
            let mask = (0..k)
                .filter(|&b| m & (1 << b) != 0)
                .fold(0u32, |acc, b| acc | (1 << members[b]));
            PartySubset::from_mask(mask)
        })
        .collect()
}

/// Tests one group, or (exhaustive) finds the finest island partition.
pub fn filter_islands(state: &MultipartiteState, query: IslandQuery, epsilon: f64) -> Result<IslandReport> {
    let n = state.parties();
    if n < 3 {
        return Err(Error::TooFewParties { needed: 3, got: n });
    }
    let cache = SubsystemEntropyCache::new(state);
    let filter = Filter {
        cache: &cache,
        epsilon,
    };
    match query {
        IslandQuery::Subset(subset) => {
            subset.check_within(n)?;
            if subset.len() < 2 {
                return Err(Error::InvalidSubsetSize {
                    got: subset.len(),
                    reason: "island queries need at least two parties",
                });
            }
            let value = filter.monotone(subset)?;
            Ok(IslandReport {
                queried_subset: subset,
                monotone_value: value,
                is_island: value <= epsilon,
                epsilon,
                partition: None,
            })
        }
        IslandQuery::Exhaustive => {
            if n > MAX_EXHAUSTIVE_PARTIES {
                return Err(Error::TooManyParties(n));
            }
            let mut partition = Vec::new();
            filter.refine(state.all(), &mut partition)?;
            partition.sort();
            Ok(IslandReport {
                queried_subset: state.all(),
                monotone_value: 0.0,
                is_island: true,
                epsilon,
                partition: Some(partition),
            })
        }
    }
}
