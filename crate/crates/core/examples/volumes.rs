//! Areas and higher volumes: closed form versus permutation sum.
//!
//! ```text
//! cargo run --example volumes
//! ```

use entgeom::geometry::{volumes, volumes_by_permutation};
use entgeom::states::{ghz, random_density_ginibre};
use entgeom::{convoluted_area, convoluted_volume, PartySubset, SubsystemEntropyCache};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let g4 = ghz(4)?;
    let cache = SubsystemEntropyCache::new(&g4);
    println!("GHZ4  ²M_012 = {}", convoluted_area(&cache, 0, 1, 2)?);

    let g5 = ghz(5)?;
    let cache = SubsystemEntropyCache::new(&g5);
    let quad = PartySubset::new(&[0, 1, 2, 3])?;
    println!("GHZ5  ³M_0123 = {}", convoluted_volume(&cache, quad)?);

    let rho = random_density_ginibre(&[2, 2, 2, 2, 2], 32, 42)?;
    let cache = SubsystemEntropyCache::new(&rho);
    for m in 3..=5 {
        let subset = PartySubset::full(m);
        let (v, vt) = volumes(&cache, subset)?;
        let (pv, pvt) = volumes_by_permutation(&cache, subset)?;
        println!(
            "random, m = {m}: V = {v:+.12}  (perm {pv:+.12})   Ṽ = {vt:+.12}  (perm {pvt:+.12})"
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
