//! The dimension count behind the birationality argument.
//!
//! cargo run --example dimension_audit

use hurwitz98::verify::{dimension_audit, DimensionAudit};

fn main() {
    print!("{}", dimension_audit().render());
    println!();
    // the same count fails for genus 10
    print!("{}", DimensionAudit::for_genus(10).render());
}
