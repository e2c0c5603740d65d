//! Concurrence versus normalized content `E` over random `ρ₁₂ ⊗ ρ₃₄`.
//!
//! ```text
//! cargo run --release --example fig2 -- 1000 0
//! ```

use entgeom::experiment::{csv_string, run_fig2, ExperimentConfig};

pub fn run_with(samples: usize, seed: u64) -> Result<(), Box<dyn std::error::Error>> {
    let out = run_fig2(&ExperimentConfig {
        samples,
        seed,
        inject_bell: true,
        inject_product: true,
        ..Default::default()
    })?;
    let csv = csv_string(&out.rows);
    let lines: Vec<&str> = csv.lines().collect();
    println!("{}", lines[..lines.len().min(6)].join("\n"));
    println!("...");
    println!("{}", lines[lines.len().saturating_sub(3)..].join("\n"));
    print!("\n{}", out.summary);
    Ok(())
}

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    run_with(100, 0)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let samples = args.next().map(|s| s.parse()).transpose()?.unwrap_or(1000);
    let seed = args.next().map(|s| s.parse()).transpose()?.unwrap_or(0);
    run_with(samples, seed)
}
