//! Writes a certificate, re-checks it from its raw data, then shows that a
//! hand-edited copy is caught.
//!
//! cargo run --release --example verify_certificate -- /tmp/cert.json

use hurwitz98::certificate::{reverify, reverify_path};
use hurwitz98::pipeline::run_construction;

fn main() -> hurwitz98::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "certificate.json".into());
    let cert = run_construction(10007, 1, 10)?;
    let bytes = cert.write(&path)?;
    println!("wrote {bytes} bytes to {path}: {}", cert.status);

    let report = reverify_path(&path)?;
    println!("reverify: {:?}", report.outcome);

    let mut edited = cert.clone();
    if let Some(v) = edited.verdicts.as_mut() {
        v.genus = 8;
    }
    let report = reverify(&edited)?;
    println!(
        "edited copy: {:?}, mismatches {:?}",
        report.outcome,
        report.mismatches()
    );
    Ok(())
}
