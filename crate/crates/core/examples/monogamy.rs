//! Ono's triangle inequality on convoluted metrics, and what a vanishing area
//! forces.
//!
//! ```text
//! cargo run --example monogamy
//! ```

use entgeom::experiment::monogamy_scenario;
use entgeom::geometry::resolve_monogamy;
use entgeom::ono_check;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    // Plain triangles first.
    print!("equilateral:\n{}", ono_check(1.0, 1.0, 1.0, 3f64.sqrt() / 4.0)?);
    print!("\ndegenerate right:\n{}", ono_check(1.0, 1.0, 2f64.sqrt(), 0.0)?);

    // Symmetric premise: M_AC = M_BC = t, zero area, M_AB bounded by t.
    let res = resolve_monogamy(0.7, 0.7, 0.7);
    println!("\nsymmetric premise: candidates {:?}, forced M_AB = {:?}", res.candidates, res.forced_ab);

    for t in [0.0, 0.05, 0.3] {
        print!("\nweakly coupled pair, t = {t}:\n{}", monogamy_scenario(t)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
