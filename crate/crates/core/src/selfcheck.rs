//! Fixed-seed invariant suite over `F_7` and `F_10007`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::certificate::{reverify, Outcome};
use crate::field::{FieldElement, PrimeField};
use crate::groebner::buchberger;
use crate::linsys::{generator_syzygy_profile, linear_system, FatPointSystem, Point};
use crate::matrix::DenseMatrix;
use crate::pipeline::{random_point, run_construction};
use crate::poly::{monomial_basis, Ring, SparsePoly};
use crate::verify::dimension_audit;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
}

fn random_form(ring: Ring, d: u16, rng: &mut ChaCha8Rng) -> SparsePoly {
    let f = ring.field;
    let terms = ring
        .monomials_of_degree(d)
        .into_iter()
        .map(|m| (m, f.random(rng)))
        .collect();
    SparsePoly::from_terms(ring, terms)
}

fn random_matrix(f: PrimeField, n: usize, rng: &mut ChaCha8Rng) -> DenseMatrix {
    DenseMatrix::from_rows(
        f,
        n,
        (0..n)
            .map(|_| (0..n).map(|_| f.random(rng)).collect())
            .collect(),
    )
}

fn inverses(f: PrimeField, rng: &mut ChaCha8Rng) -> bool {
    (0..200).all(|_| {
        let a = f.random_nonzero(rng);
        let inv = f.inv(a).unwrap();
        f.mul(a, inv) == FieldElement::ONE && f.inv(inv).unwrap() == a
    })
}

fn cayley_hamilton(f: PrimeField, rng: &mut ChaCha8Rng) -> bool {
    (0..100).all(|_| {
        let m = random_matrix(f, 4, rng);
        let cp = m.charpoly();
        let mut acc = DenseMatrix::zeros(f, 4, 4);
        for &c in cp.coeffs().iter().rev() {
            acc = acc.mul(&m).add(&DenseMatrix::identity(f, 4).scale(c));
        }
        acc.is_zero()
    })
}

fn kernels(f: PrimeField, rng: &mut ChaCha8Rng) -> bool {
    (0..100).all(|_| {
        let m = DenseMatrix::from_rows(
            f,
            8,
            (0..6)
                .map(|_| (0..8).map(|_| f.random(rng)).collect())
                .collect(),
        );
        let (rank, ker) = m.rank_and_kernel();
        rank + ker.len() == 8 && ker.iter().all(|v| m.mul_vec(v).iter().all(|c| c.is_zero()))
    })
}

fn groebner_certified(f: PrimeField, rng: &mut ChaCha8Rng) -> bool {
    let ring = Ring::plane(f);
    (0..20).all(|i| {
        let gens: Vec<SparsePoly> = (0..3)
            .map(|k| random_form(ring, 2 + ((i + k) % 2) as u16, rng))
            .collect();
        let gb = buchberger(ring, &gens);
        gb.certify() && gens.iter().all(|g| gb.contains(g))
    })
}

fn euler_identity(f: PrimeField, rng: &mut ChaCha8Rng) -> bool {
    let ring = Ring::plane(f);
    [5u16, 8].iter().all(|&d| {
        (0..20).all(|_| {
            let g = random_form(ring, d, rng);
            let lhs = (0..3).fold(SparsePoly::zero(ring), |acc, v| {
                acc.add(&g.partial_derivative(v).mul(&SparsePoly::var(ring, v)))
            });
            lhs == g.scale(f.elem(d as u64))
        })
    })
}

fn general_points(f: PrimeField, n: usize, rng: &mut ChaCha8Rng) -> Vec<Point> {
    let mut pts: Vec<Point> = Vec::new();
    while pts.len() < n {
        let p = random_point(f, rng);
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    pts
}

fn nodal_dimension(f: PrimeField, rng: &mut ChaCha8Rng) -> bool {
    let pts = general_points(f, 12, rng);
    let d = linear_system(&FatPointSystem::double(f, &pts).unwrap(), 8, None).dimension();
    d == 9 && monomial_basis(8).len() == 45
}

fn twelve_point_profile(f: PrimeField, rng: &mut ChaCha8Rng) -> bool {
    let pts = general_points(f, 12, rng);
    generator_syzygy_profile(&FatPointSystem::simple(f, &pts).unwrap(), 8)
        .matches_twelve_general_points()
}

fn construction_round_trip() -> bool {
    match run_construction(10007, 1, 10) {
        Ok(cert) => {
            cert.is_success()
                && reverify(&cert)
                    .map(|r| r.outcome == Outcome::Reproduced)
                    .unwrap_or(false)
        }
        Err(_) => false,
    }
}

/// Runs every check and returns one result per check.
pub fn run_selfcheck() -> Vec<CheckResult> {
    let small = PrimeField::new(7).unwrap();
    let big = PrimeField::new(10007).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut out = Vec::new();
    let mut record = |name: &str, passed: bool| {
        out.push(CheckResult {
            name: name.to_string(),
            passed,
        })
    };
    record("field inverses over F_7", inverses(small, &mut rng));
    record("field inverses over F_10007", inverses(big, &mut rng));
    record("kernels over F_7", kernels(small, &mut rng));
    record("Cayley-Hamilton over F_7", cayley_hamilton(small, &mut rng));
    record(
        "Cayley-Hamilton over F_10007",
        cayley_hamilton(big, &mut rng),
    );
    record(
        "Groebner certification over F_7",
        groebner_certified(small, &mut rng),
    );
    record(
        "Groebner certification over F_10007",
        groebner_certified(big, &mut rng),
    );
    record("Euler identity over F_10007", euler_identity(big, &mut rng));
    record(
        "h0(I_P^2(8)) = 9 over F_10007",
        nodal_dimension(big, &mut rng),
    );
    record(
        "twelve-point resolution shape over F_10007",
        twelve_point_profile(big, &mut rng),
    );
    record("dimension audit", dimension_audit().holds());
    record(
        "construction and reverification, seed 1",
        construction_round_trip(),
    );
    out
}
