//! Exact linear algebra over F_p: inverses, rank, kernel, characteristic
//! polynomial.
//!
//! cargo run --example prime_field_linear_algebra

use hurwitz98::{DenseMatrix, PrimeField};

fn main() -> hurwitz98::Result<()> {
    let f = PrimeField::new(10007)?;
    let a = f.elem(1234);
    println!("1234^-1 = {} mod 10007", f.inv(a)?.value());
    println!("PrimeField::new(5) -> {}", PrimeField::new(5).unwrap_err());

    let m = DenseMatrix::from_i64(f, &[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
    let (rank, kernel) = m.rank_and_kernel();
    println!(
        "rank {rank}, kernel {:?}",
        kernel
            .iter()
            .map(|v| v.iter().map(|c| f.to_signed(*c)).collect::<Vec<_>>())
            .collect::<Vec<_>>()
    );

    let cp = m.charpoly();
    println!(
        "charpoly coefficients (low to high): {:?}",
        cp.coeffs()
            .iter()
            .map(|c| f.to_signed(*c))
            .collect::<Vec<_>>()
    );
    Ok(())
}
