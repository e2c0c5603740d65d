//! Two-qubit concurrence and partial-transpose negativity.
//!
//! ```text
//! cargo run --example oracles
//! ```

use entgeom::oracles::{concurrence, is_ppt, negativity, TwoQubitState};
use entgeom::states::{bell, werner};
use entgeom::PartySubset;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let a = PartySubset::singleton(0);
    let b = bell();
    println!("Bell: C = {:.12}, N = {:.12}", concurrence(&TwoQubitState::new(b.clone())?)?, negativity(&b, a)?);
    println!("\n   p   C(Werner)  (3p-1)/2   N        PPT");
    for k in 0..=5 {
        let p = k as f64 / 5.0;
        let w = werner(p)?;
        println!(
            "{p:>4.1}  {:>9.6}  {:>8.4}  {:>7.4}  {}",
            concurrence(&TwoQubitState::new(w.clone())?)?,
            ((3.0 * p - 1.0) / 2.0).max(0.0),
            negativity(&w, a)?,
            is_ppt(&w, a, 1e-12)?
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
