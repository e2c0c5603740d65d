//! Upper-bounding the convex roof of `M` over pure-state decompositions.
//!
//! ```text
//! cargo run --release --example roof_search
//! ```

use entgeom::roof::{ensemble_average, hjw_decomposition, roof_minimize, Functional, IsometryParams};
use entgeom::states::{random_density_ginibre, random_pure};
use entgeom::{convoluted_metric, validate_density, SubsystemEntropyCache};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let f = Functional::Metric(0, 1);

    // A separable mixture of two product states: the roof value is 0.
    let a = random_pure(&[2], 1)?.compose(&random_pure(&[2], 2)?)?.compose(&random_pure(&[2], 3)?)?;
    let b = random_pure(&[2], 4)?.compose(&random_pure(&[2], 5)?)?.compose(&random_pure(&[2], 6)?)?;
    let mut m = a.matrix().scale(0.3);
    m.add_scaled(b.matrix(), 0.7);
    let mix = validate_density(m, &[2, 2, 2])?;

    let direct = convoluted_metric(&SubsystemEntropyCache::new(&mix), 0, 1)?;
    let eigen = ensemble_average(&hjw_decomposition(&mix, &IsometryParams::identity(2))?, f)?;
    println!("separable mixture: M(ρ) = {direct:.6}, eigen-ensemble average = {eigen:.6}");
    for budget in [1, 10, 50, 200] {
        let r = roof_minimize(&mix, f, 2, budget, 0)?;
        println!("  budget {budget:>3}: bound {:.3e}  ({} members)", r.value, r.ensemble.len());
    }

    // A generic rank-2 state with four-member decompositions.
    let rho = random_density_ginibre(&[2, 2, 2], 2, 9)?;
    let r = roof_minimize(&rho, f, 4, 400, 0)?;
    println!(
        "random rank-2 state: bound {:.6} after {} evaluations, {} restarts",
        r.value, r.evaluations, r.restarts
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
