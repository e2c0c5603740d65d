//! Island filtering in a small network: which groups factor out?
//!
//! ```text
//! cargo run --example filter_network
//! ```

use entgeom::geometry::DEFAULT_ISLAND_EPSILON;
use entgeom::states::{ghz, product_basis, random_density_ginibre};
use entgeom::{filter_islands, IslandQuery, PartySubset};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    // Parties 0-1: random mixed pair; 2: a lone qutrit; 3-5: GHZ3.
    let net = random_density_ginibre(&[2, 2], 4, 1)?
        .compose(&product_basis(&[3], &[2])?)?
        .compose(&ghz(3)?)?;

    for ix in [&[0, 1][..], &[1, 3], &[3, 4, 5], &[0, 1, 2]] {
        let report = filter_islands(&net, IslandQuery::Subset(PartySubset::new(ix)?), DEFAULT_ISLAND_EPSILON)?;
        println!(
            "{:<10} monotone = {:>12.6e}  island: {}",
            report.queried_subset.to_string(),
            report.monotone_value,
            report.is_island
        );
    }
    let all = filter_islands(&net, IslandQuery::Exhaustive, DEFAULT_ISLAND_EPSILON)?;
    print!("\nexhaustive:\n{all}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
