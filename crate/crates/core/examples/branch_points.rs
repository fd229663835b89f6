//! Branch points of a pencil restricted to a curve. Lines through a point of
//! a plane cubic give a double cover of P^1 branched at 4 points.
//!
//! cargo run --example branch_points

use hurwitz98::groebner::IdealBasis;
use hurwitz98::pipeline::Pencil;
use hurwitz98::verify::ramification_report;
use hurwitz98::{PrimeField, Ring, SparsePoly};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> hurwitz98::Result<()> {
    let f = PrimeField::new(10007)?;
    let plane = Ring::plane(f);
    let chart = Ring::chart(f);
    let cubic =
        SparsePoly::parse(plane, "y^2*z - x^3 - 3*x*z^2 - y*z^2").expect("valid polynomial");
    let pencil = Pencil {
        f1: SparsePoly::var(plane, 0),
        f2: SparsePoly::var(plane, 1),
    };
    let origin = IdealBasis::new(
        chart,
        vec![SparsePoly::var(chart, 0), SparsePoly::var(chart, 1)],
    );
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let r = ramification_report(&cubic, &pencil, &origin, &mut rng);
    println!(
        "(g, h) has length {:?}; {:?} after removing the base point",
        r.total_degree, r.degree
    );
    println!(
        "reduced: {:?}, branch form squarefree: {}",
        r.reduced, r.squarefree
    );
    println!("branch form coefficients: {:?}", r.branch_form);
    Ok(())
}
