//! Runs the construction for one seed and prints the certificate summary.
//!
//! cargo run --release --example construct_octic -- 1

use std::time::Instant;

use hurwitz98::pipeline::{run_construction, DEFAULT_RETRIES};
use hurwitz98::DEFAULT_PRIME;

fn main() -> hurwitz98::Result<()> {
    let seed: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(1);
    let start = Instant::now();
    let cert = run_construction(DEFAULT_PRIME, seed, DEFAULT_RETRIES)?;
    println!("seed {seed}: {} in {:.2?}", cert.status, start.elapsed());
    println!("attempts: {:?}", cert.run);
    if let Some(v) = &cert.verdicts {
        println!("h0 values: {:?}", v.dimensions);
        println!(
            "deg (f1, f2) = {:?}, deg Q = {:?}",
            v.base.degree, v.residual.degree
        );
        println!(
            "singular scheme degree {:?}, genus {}",
            v.nodes.singular_degree, v.genus
        );
        println!(
            "ramification {:?} -> {:?}, branch form squarefree: {}, elimination agrees: {:?}",
            v.ramification.total_degree,
            v.ramification.degree,
            v.ramification.squarefree,
            v.ramification.elimination_agrees
        );
        println!("R recovered: {}", v.recovery.recovered);
    }
    Ok(())
}
