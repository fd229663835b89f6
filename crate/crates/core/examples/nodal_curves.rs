//! Singular points of plane curves: ordinary nodes, cusps, and the genus of
//! a nodal curve.
//!
//! cargo run --example nodal_curves

use hurwitz98::verify::{genus_check, node_report, verify_nodes};
use hurwitz98::{PrimeField, Ring, SparsePoly};

fn main() -> hurwitz98::Result<()> {
    let f = PrimeField::new(10007)?;
    let plane = Ring::plane(f);
    let origin = [f.elem(0), f.elem(0), f.elem(1)];
    for (name, text) in [
        ("nodal cubic", "y^2*z - x^3 - x^2*z"),
        ("cuspidal cubic", "y^2*z - x^3"),
    ] {
        let g = SparsePoly::parse(plane, text).expect("valid polynomial");
        let report = node_report(&g, &[origin]);
        println!(
            "{name}: singular degree {:?}, nodes {:?}",
            report.singular_degree, report.nodes
        );
        match verify_nodes(&g, &[origin]) {
            Ok(r) => println!(
                "  ordinary nodes only, geometric genus {}",
                genus_check(&r, 3)
            ),
            Err(e) => println!("  rejected: {e}"),
        }
    }
    Ok(())
}
