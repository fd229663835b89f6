//! The finite algebra of a zero-dimensional ideal: length, multiplication
//! operators, and a reducedness test.
//!
//! cargo run --example finite_algebra

use hurwitz98::groebner::{IdealBasis, QuotientAlgebra};
use hurwitz98::{PrimeField, Ring, SparsePoly};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> hurwitz98::Result<()> {
    let f = PrimeField::new(10007)?;
    let chart = Ring::chart(f);
    let poly = |s: &str| SparsePoly::parse(chart, s).expect("valid polynomial");
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for (name, gens) in [
        ("conic meets cubic", vec!["x^2 + y^2 - 1", "y - x^3 + 2*x"]),
        ("tangent line", vec!["y - x^2", "y"]),
    ] {
        let ideal = IdealBasis::new(chart, gens.into_iter().map(poly).collect());
        let alg = QuotientAlgebra::from_ideal(&ideal)?;
        let cp = alg.charpoly(&poly("x"));
        println!(
            "{name}: length {}, standard monomials {:?}, {:?}, charpoly of x has degree {:?}",
            alg.dim(),
            alg.basis()
                .iter()
                .map(|m| m.exps()[..2].to_vec())
                .collect::<Vec<_>>(),
            alg.reducedness(&mut rng),
            cp.degree()
        );
    }
    Ok(())
}
