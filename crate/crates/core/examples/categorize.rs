//! Telling bipartite from tripartite entanglement by which monotones vanish.
//!
//! ```text
//! cargo run --example categorize
//! ```

use entgeom::geometry::DEFAULT_ISLAND_EPSILON;
use entgeom::states::{bell, ghz, product_basis, w_state};
use entgeom::categorize;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        ("Bell ⊗ Bell", bell().compose(&bell())?),
        ("W3 ⊗ |1>", w_state(3)?.compose(&product_basis(&[2], &[1])?)?),
        ("GHZ4", ghz(4)?),
    ];
    for (name, state) in &cases {
        let r = categorize(state, DEFAULT_ISLAND_EPSILON)?;
        let pairs: Vec<String> = r.nonvanishing_pairs().map(|e| e.subset.to_string()).collect();
        let triples: Vec<String> = r.nonvanishing_triples().map(|e| e.subset.to_string()).collect();
        println!("{name}");
        println!("  nonzero M:  {}", pairs.join(" "));
        println!("  nonzero ²M: {}", triples.join(" "));
        println!("  largest island: {:?}", r.largest_block());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
