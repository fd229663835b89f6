//! Reduced Groebner bases with Buchberger's algorithm and a certificate that
//! every S-polynomial reduces to zero.
//!
//! cargo run --example groebner_basis

use hurwitz98::groebner::buchberger;
use hurwitz98::{PrimeField, Ring, SparsePoly};

fn main() -> hurwitz98::Result<()> {
    let f = PrimeField::new(10007)?;
    let plane = Ring::plane(f);
    let gens: Vec<SparsePoly> = ["x^2 + y^2 - z^2", "x*y - 2*z^2", "x^3 - y*z^2"]
        .iter()
        .map(|s| SparsePoly::parse(plane, s).expect("valid polynomial"))
        .collect();
    let gb = buchberger(plane, &gens);
    println!("{} elements:", gb.len());
    for g in gb.elements() {
        println!("  {g}");
    }
    println!("S-polynomials reduce to zero: {}", gb.certify());
    let h = SparsePoly::parse(plane, "x^4 + y^4").unwrap();
    println!("normal form of x^4 + y^4: {}", gb.normal_form(&h));
    Ok(())
}
