//! Convoluted metric on canonical 3-qubit states.
//!
//! `M_ij = D_ij − D̃_ij` compares the entropic distance of `i` and `j` with the
//! same distance measured through the complement; it equals
//! `I(j:R|i) + I(i:R|j)` with `R` the remaining parties.
//!
//! ```text
//! cargo run --example metric_basics
//! ```

use entgeom::geometry::{distance_d, distance_d_tilde, metric_as_cmi};
use entgeom::states::{bell, ghz, product_basis, w_state};
use entgeom::{convoluted_metric, MultipartiteState, SubsystemEntropyCache};

fn show(name: &str, state: &MultipartiteState) -> entgeom::Result<()> {
    let cache = SubsystemEntropyCache::new(state);
    println!(
        "{name:<14} D_01 = {:>8.5}  D~_01 = {:>8.5}  M_01 = {:>8.5}  (CMI form {:>8.5})",
        distance_d(&cache, 0, 1)?,
        distance_d_tilde(&cache, 0, 1)?,
        convoluted_metric(&cache, 0, 1)?,
        metric_as_cmi(&cache, 0, 1)?,
    );
    Ok(())
}

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    show("GHZ3", &ghz(3)?)?;
    show("W3", &w_state(3)?)?;
    // A Bell pair next to an unrelated qubit is separable from it: M vanishes.
    show("Bell ⊗ |0>", &bell().compose(&product_basis(&[2], &[0])?)?)?;
    show("|000>", &product_basis(&[2, 2, 2], &[0, 0, 0])?)?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
