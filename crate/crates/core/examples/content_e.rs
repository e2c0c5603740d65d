//! Aggregate entanglement content `E` and its normalization, `E(Bell ⊗ Bell) = 2`.
//!
//! ```text
//! cargo run --example content_e
//! ```

use entgeom::geometry::bell_bell_reference;
use entgeom::states::{bell, ghz, product_basis, random_density_ginibre, w_state};
use entgeom::{entanglement_content, geometry_report, SubsystemEntropyCache};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    println!("E_raw(Bell ⊗ Bell) = {}", bell_bell_reference());
    let states = [
        ("Bell ⊗ Bell", bell().compose(&bell())?),
        ("GHZ4", ghz(4)?),
        ("W4", w_state(4)?),
        ("|0000>", product_basis(&[2; 4], &[0; 4])?),
        ("random mixed", random_density_ginibre(&[2; 4], 16, 3)?),
    ];
    for (name, s) in &states {
        let cache = SubsystemEntropyCache::new(s);
        println!(
            "{name:<13} E_raw = {:>9.5}  E = {:>8.5}",
            entanglement_content(&cache, false)?,
            entanglement_content(&cache, true)?
        );
    }
    println!("\nfull report for Bell ⊗ Bell:\n{}", geometry_report(&states[0].1, None)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
