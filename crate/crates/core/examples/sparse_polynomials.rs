//! Sparse polynomials in grevlex order: parsing, arithmetic, derivatives,
//! charts.
//!
//! cargo run --example sparse_polynomials

use hurwitz98::{PrimeField, Ring, SparsePoly};

fn main() -> hurwitz98::Result<()> {
    let f = PrimeField::new(10007)?;
    let plane = Ring::plane(f);
    let chart = Ring::chart(f);
    let g = SparsePoly::parse(plane, "y^2*z - x^3 - x^2*z").expect("valid polynomial");
    println!("g = {g}");
    println!("leading monomial {:?}", g.leading_monomial());
    for v in 0..3 {
        println!("d/d{} g = {}", plane.names()[v], g.partial_derivative(v));
    }
    let g2 = g.mul(&g);
    println!("g^2 has {} terms, degree {:?}", g2.len(), g2.total_degree());
    let affine = g.dehomogenize(2, chart);
    println!("in the chart z = 1: {affine}");
    println!("homogenized back: {}", affine.homogenize(2, plane, 3));
    Ok(())
}
