//! Intersection, quotient and saturation of ideals by elimination, and the
//! linear-algebra quotient for finite schemes.
//!
//! cargo run --example ideal_operations

use hurwitz98::groebner::{quotient_zerodim, zerodim_degree, IdealBasis};
use hurwitz98::linsys::points_ideal;
use hurwitz98::{PrimeField, Ring, SparsePoly};

fn main() -> hurwitz98::Result<()> {
    let f = PrimeField::new(10007)?;
    let chart = Ring::chart(f);
    let poly = |s: &str| SparsePoly::parse(chart, s).expect("valid polynomial");
    let pt = |x: u64, y: u64| [f.elem(x), f.elem(y), f.elem(1)];

    // four points, then drop two of them
    let all = points_ideal(f, &[pt(0, 0), pt(1, 0), pt(0, 1), pt(2, 3)])?;
    let some = points_ideal(f, &[pt(0, 0), pt(2, 3)])?;
    let rest = all.quotient(&some);
    println!(
        "deg I_X = {}, deg (I_X : I_Y) = {}",
        zerodim_degree(&all)?,
        zerodim_degree(&rest)?
    );
    let linear = IdealBasis::from_groebner(&quotient_zerodim(&all, &some)?);
    println!("both quotient routes agree: {}", rest.equals(&linear));

    // a double point at the origin on the x-axis, saturated away
    let fat = IdealBasis::new(chart, vec![poly("y"), poly("x^3 - x^2")]);
    let origin = IdealBasis::new(chart, vec![poly("x"), poly("y")]);
    let sat = fat.saturate(&origin);
    println!(
        "(y, x^2 (x - 1)) saturated by the origin: {:?}",
        sat.groebner()
            .elements()
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
    );

    let lines =
        IdealBasis::new(chart, vec![poly("x")]).intersect(&IdealBasis::new(chart, vec![poly("y")]));
    println!(
        "(x) meet (y) = {:?}",
        lines
            .groebner()
            .elements()
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
    );
    Ok(())
}
