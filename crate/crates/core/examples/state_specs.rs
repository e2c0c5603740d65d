//! Describing states as JSON specs and building them.
//!
//! ```text
//! cargo run --example state_specs
//! ```

use entgeom::{build_state, geometry_report, StateSpec};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let text = r#"{
        "kind": "compose",
        "children": [
            {"kind": "bell"},
            {"kind": "random-mixed", "dims": [2], "seed": 5},
            {"kind": "w", "parties": 3}
        ]
    }"#;
    let spec = StateSpec::from_json(text)?;
    let state = build_state(&spec)?;
    println!("dims {:?}, purity {:.6}", state.dims(), state.purity());
    let report = geometry_report(&state, Some(4))?;
    println!("E = {:.6}", report.e_normalized);

    // Errors name the offending field.
    match StateSpec::from_json(r#"{"kind": "ghz"}"#) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!("ghz without a party count"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
