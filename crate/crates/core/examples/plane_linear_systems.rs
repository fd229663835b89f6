//! Curves through simple and double points: dimensions, Hilbert function,
//! and the generator/syzygy degrees of twelve general points.
//!
//! cargo run --example plane_linear_systems

use hurwitz98::linsys::{
    generator_syzygy_profile, hilbert_function, linear_system, FatPointSystem, Point,
};
use hurwitz98::pipeline::random_point;
use hurwitz98::PrimeField;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> hurwitz98::Result<()> {
    let f = PrimeField::new(10007)?;
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut pts: Vec<Point> = Vec::new();
    while pts.len() < 12 {
        let p = random_point(f, &mut rng);
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    let simple = FatPointSystem::simple(f, &pts)?;
    let double = FatPointSystem::double(f, &pts)?;
    println!(
        "h0(I_P(5)) = {}",
        linear_system(&simple, 5, None).dimension()
    );
    println!(
        "h0(I_P^2(8)) = {}",
        linear_system(&double, 8, None).dimension()
    );
    println!(
        "dim (I_P)_d for d = 0..8: {:?}",
        hilbert_function(&simple, 8)
    );
    let profile = generator_syzygy_profile(&simple, 8);
    println!("minimal generators by degree: {:?}", profile.generators);
    println!("first syzygies by degree:     {:?}", profile.syzygies);
    println!("general shape: {}", profile.matches_twelve_general_points());
    Ok(())
}
