//! The randomized construction: points, pencil, residual points, octic.
//!
//! Everything happens in working coordinates `w = A·v` for a random
//! invertible `A`, chosen so that no point of `P ∪ R` lies on `z = 0`;
//! zero-dimensional ideals live in the chart `z = 1`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};
use crate::groebner::{
    quotient_zerodim, zerodim_degree, GroebnerBasis, IdealBasis, QuotientAlgebra, Reducedness,
};
use crate::linsys::{
    linear_system, normalize_point, points_ideal, FatPointSystem, LinearSystem, Point,
};
use crate::matrix::DenseMatrix;
use crate::poly::{Ring, SparsePoly};
use crate::verify::{verify_construction, Status, Verdicts};

/// Numerology of the construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConstructionConstants {
    pub genus: u32,
    pub cover_degree: u32,
    pub curve_degree: u32,
    pub quintic_degree: u32,
    pub nodes: u32,
    pub branch_points: u32,
    pub n_p: usize,
    pub n_r: usize,
    pub n_q: usize,
    pub bezout: usize,
}

impl ConstructionConstants {
    pub const OCTIC: Self = ConstructionConstants {
        genus: 9,
        cover_degree: 8,
        curve_degree: 8,
        quintic_degree: 5,
        nodes: 12,
        branch_points: 32,
        n_p: 12,
        n_r: 5,
        n_q: 8,
        bezout: 25,
    };

    /// Degree-genus formula, Riemann-Hurwitz and Bezout all agree.
    pub fn is_consistent(&self) -> bool {
        let d = self.curve_degree;
        self.nodes == (d - 1) * (d - 2) / 2 - self.genus
            && self.branch_points == 2 * self.genus - 2 + 2 * self.cover_degree
            && self.bezout == (self.quintic_degree * self.quintic_degree) as usize
            && self.n_q == self.bezout - self.n_p - self.n_r
            && self.n_p == self.nodes as usize
    }
}

/// Pencil resamples after a failure in steps 3 and 4 before new points are
/// drawn.
pub const PENCIL_RETRIES: usize = 3;
/// Fresh point sets tried inside one call of [`choose_points`].
pub const POINT_ATTEMPTS: usize = 20;
/// Default number of restarts from step 1.
pub const DEFAULT_RETRIES: u32 = 10;

/// Projective change of coordinates `w = A·v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateChange {
    field: PrimeField,
    matrix: [[FieldElement; 3]; 3],
}

impl CoordinateChange {
    pub fn new(field: PrimeField, matrix: [[FieldElement; 3]; 3]) -> Result<Self> {
        let m = DenseMatrix::from_rows(field, 3, matrix.iter().map(|r| r.to_vec()).collect());
        if m.rank() != 3 {
            return Err(Error::Schema("singular coordinate change".into()));
        }
        Ok(CoordinateChange { field, matrix })
    }

    pub fn identity(field: PrimeField) -> Self {
        let (o, z) = (FieldElement::ONE, FieldElement::ZERO);
        CoordinateChange {
            field,
            matrix: [[o, z, z], [z, o, z], [z, z, o]],
        }
    }

    pub fn random<R: Rng + ?Sized>(field: PrimeField, rng: &mut R) -> Self {
        loop {
            let matrix = [(); 3].map(|_| [(); 3].map(|_| field.random(rng)));
            if let Ok(c) = Self::new(field, matrix) {
                return c;
            }
        }
    }

    pub fn matrix(&self) -> &[[FieldElement; 3]; 3] {
        &self.matrix
    }

    pub fn apply(&self, p: &Point) -> Point {
        let f = self.field;
        let w = self
            .matrix
            .map(|row| (0..3).fold(FieldElement::ZERO, |acc, j| f.mul_add(acc, row[j], p[j])));
        normalize_point(f, w).expect("invertible change keeps points nonzero")
    }
}

/// Uniform point of `P^2(F_p)`.
pub fn random_point<R: Rng + ?Sized>(field: PrimeField, rng: &mut R) -> Point {
    loop {
        let v = [(); 3].map(|_| field.random(rng));
        if let Some(p) = normalize_point(field, v) {
            return p;
        }
    }
}

/// Output of step 1.
#[derive(Clone, Debug)]
pub struct PointChoice {
    pub change: CoordinateChange,
    pub original_p: Vec<Point>,
    pub original_r: Vec<Point>,
    /// `P` and `R` in working coordinates, all in the chart `z = 1`.
    pub p: Vec<Point>,
    pub r: Vec<Point>,
    /// `H^0(I_{P ∪ R}(5))`, of dimension 4.
    pub quintics: LinearSystem,
}

/// Step 1: random `P` (12 points) and `R` (5 points) with
/// `h^0(I_{P ∪ R}(5)) = 4` and `h^0(I_P^2(8)) = 9`.
pub fn choose_points<R: Rng + ?Sized>(
    field: PrimeField,
    rng: &mut R,
    attempts: usize,
) -> Result<PointChoice> {
    let k = ConstructionConstants::OCTIC;
    for _ in 0..attempts {
        let change = CoordinateChange::random(field, rng);
        let all: Vec<Point> = (0..k.n_p + k.n_r)
            .map(|_| random_point(field, rng))
            .collect();
        let working: Vec<Point> = all.iter().map(|p| change.apply(p)).collect();
        if working.iter().any(|w| w[2].is_zero()) {
            continue;
        }
        let Ok(simple) = FatPointSystem::simple(field, &working) else {
            continue;
        };
        let quintics = linear_system(&simple, 5, None);
        if quintics.dimension() != 4 {
            continue;
        }
        let double = FatPointSystem::double(field, &working[..k.n_p]).expect("distinct points");
        if linear_system(&double, 8, None).dimension() != 9 {
            continue;
        }
        return Ok(PointChoice {
            change,
            original_p: all[..k.n_p].to_vec(),
            original_r: all[k.n_p..].to_vec(),
            p: working[..k.n_p].to_vec(),
            r: working[k.n_p..].to_vec(),
            quintics,
        });
    }
    Err(Error::RetryExhausted(format!(
        "no admissible point set in {attempts} attempts"
    )))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pencil {
    pub f1: SparsePoly,
    pub f2: SparsePoly,
}

impl Pencil {
    /// The pencil spanned by two coefficient rows on the basis of `system`,
    /// or `None` when the rows are dependent.
    pub fn from_coefficients(system: &LinearSystem, rows: [&[FieldElement]; 2]) -> Option<Self> {
        let n = system.dimension();
        let field = system.basis.first()?.field();
        let m = DenseMatrix::from_rows(field, n, rows.iter().map(|r| r.to_vec()).collect());
        if m.rank() < 2 {
            return None;
        }
        let combine = |row: &[FieldElement]| {
            system
                .basis
                .iter()
                .zip(row)
                .fold(SparsePoly::zero(Ring::plane(field)), |acc, (b, &c)| {
                    acc.add(&b.scale(c))
                })
        };
        Some(Pencil {
            f1: combine(rows[0]),
            f2: combine(rows[1]),
        })
    }

    pub fn chart(&self) -> (SparsePoly, SparsePoly) {
        let chart = Ring::chart(self.f1.field());
        (
            self.f1.dehomogenize(2, chart),
            self.f2.dehomogenize(2, chart),
        )
    }
}

/// Step 2: a random pencil in `system`, resampled until independent.
pub fn choose_pencil<R: Rng + ?Sized>(system: &LinearSystem, rng: &mut R) -> Pencil {
    let field = system.basis[0].field();
    let n = system.dimension();
    loop {
        let a: Vec<FieldElement> = (0..n).map(|_| field.random(rng)).collect();
        let b: Vec<FieldElement> = (0..n).map(|_| field.random(rng)).collect();
        if let Some(p) = Pencil::from_coefficients(system, [&a, &b]) {
            return p;
        }
    }
}

/// Step 3: `I_Q = (f1, f2) : I_{P ∪ R}`, of degree 8, reduced and disjoint
/// from `P ∪ R`.
pub fn residual_points<R: Rng + ?Sized>(
    pencil: &Pencil,
    ideal_pr: &IdealBasis,
    points_pr: &[Point],
    rng: &mut R,
) -> Result<GroebnerBasis> {
    let k = ConstructionConstants::OCTIC;
    let (f1, f2) = pencil.chart();
    let base = IdealBasis::new(f1.ring(), vec![f1, f2]);
    match zerodim_degree(&base) {
        Ok(d) if d == k.bezout => {}
        Ok(d) => {
            return Err(Error::DegenerateResidual(format!(
                "base scheme of degree {d} in the chart"
            )))
        }
        Err(_) => {
            return Err(Error::DegenerateResidual(
                "quintics share a component".into(),
            ))
        }
    }
    let q = quotient_zerodim(&base, ideal_pr)?;
    let alg = QuotientAlgebra::new(q.clone())?;
    if alg.dim() != k.n_q {
        return Err(Error::DegenerateResidual(format!(
            "residual scheme of degree {}",
            alg.dim()
        )));
    }
    if alg.reducedness(rng) == Reducedness::NotReduced {
        return Err(Error::DegenerateResidual(
            "residual scheme is not reduced".into(),
        ));
    }
    if !disjoint_from(&q, points_pr) {
        return Err(Error::DegenerateResidual(
            "residual scheme meets P ∪ R".into(),
        ));
    }
    Ok(q)
}

/// `V(gb)` avoids every point (all in the chart).
pub fn disjoint_from(gb: &GroebnerBasis, points: &[Point]) -> bool {
    points
        .iter()
        .all(|p| gb.elements().iter().any(|g| !g.evaluate(&p[..2]).is_zero()))
}

/// Step 4: the unique octic singular at `P` and containing `Q`.
pub fn octic(field: PrimeField, p: &[Point], ideal_q: &GroebnerBasis) -> Result<SparsePoly> {
    let double = FatPointSystem::double(field, p)?;
    let sys = linear_system(&double, 8, Some(ideal_q));
    if sys.dimension() != 1 {
        return Err(Error::WrongDimension {
            expected: 1,
            found: sys.dimension(),
        });
    }
    Ok(sys.basis[0].monic())
}

/// All data of one attempt, in working coordinates.
#[derive(Clone, Debug)]
pub struct Construction {
    pub field: PrimeField,
    pub change: CoordinateChange,
    pub original_p: Vec<Point>,
    pub original_r: Vec<Point>,
    pub p: Vec<Point>,
    pub r: Vec<Point>,
    pub pencil: Pencil,
    pub ideal_q: GroebnerBasis,
    pub octic: SparsePoly,
}

/// Counters of one run.
#[derive(Clone, Debug, Default, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct RunState {
    pub restarts: u32,
    pub point_sets: u32,
    pub pencils: u32,
    pub exhausted: bool,
}

/// Random source for the reducedness witnesses of a verification, derived
/// from the run seed so any verification can be replayed.
pub fn verification_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15)
}

/// Runs steps 1-4 and the full verification, retrying as needed.
pub fn run_construction(prime: u32, seed: u64, retries: u32) -> Result<Certificate> {
    let field = PrimeField::new(prime)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut state = RunState::default();
    let mut last: (Status, Option<Construction>, Option<Verdicts>) = (
        Status::failed("choose_points", "no attempt made"),
        None,
        None,
    );
    for restart in 0..retries {
        state.restarts = restart;
        let choice = match choose_points(field, &mut rng, POINT_ATTEMPTS) {
            Ok(c) => c,
            Err(e) => {
                state.point_sets += POINT_ATTEMPTS as u32;
                last = (Status::failed("choose_points", &e.to_string()), None, None);
                continue;
            }
        };
        state.point_sets += 1;
        let all: Vec<Point> = choice.p.iter().chain(&choice.r).copied().collect();
        let ideal_pr = points_ideal(field, &all)?;
        for _ in 0..=PENCIL_RETRIES {
            state.pencils += 1;
            let pencil = choose_pencil(&choice.quintics, &mut rng);
            let ideal_q = match residual_points(&pencil, &ideal_pr, &all, &mut rng) {
                Ok(q) => q,
                Err(e) => {
                    log::debug!("seed {seed}: residual step failed: {e}");
                    last = (
                        Status::failed("residual_points", &e.to_string()),
                        None,
                        None,
                    );
                    continue;
                }
            };
            let g = match octic(field, &choice.p, &ideal_q) {
                Ok(g) => g,
                Err(e) => {
                    log::debug!("seed {seed}: octic step failed: {e}");
                    last = (Status::failed("octic", &e.to_string()), None, None);
                    continue;
                }
            };
            let c = Construction {
                field,
                change: choice.change.clone(),
                original_p: choice.original_p.clone(),
                original_r: choice.original_r.clone(),
                p: choice.p.clone(),
                r: choice.r.clone(),
                pencil,
                ideal_q,
                octic: g,
            };
            let verdicts = verify_construction(&c, seed);
            let status = verdicts.status();
            log::info!(
                "seed {seed}: attempt {} finished with {status}",
                state.pencils
            );
            let done = status == Status::Success;
            last = (status, Some(c), Some(verdicts));
            if done {
                break;
            }
        }
        if last.0 == Status::Success {
            break;
        }
    }
    state.exhausted = last.0 != Status::Success;
    let (status, construction, verdicts) = last;
    Ok(Certificate::new(
        prime,
        seed,
        retries,
        state,
        status,
        construction.as_ref(),
        verdicts,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_are_consistent() {
        let k = ConstructionConstants::OCTIC;
        assert!(k.is_consistent());
        assert_eq!(k.nodes, 21 - 9);
        assert_eq!(k.branch_points, 32);
        assert_eq!(k.n_q, 8);
    }

    #[test]
    fn coordinate_change_is_projective() {
        let f = PrimeField::new(10007).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let c = CoordinateChange::random(f, &mut rng);
        let p = random_point(f, &mut rng);
        let scaled = p.map(|x| f.mul(x, f.elem(17)));
        assert_eq!(c.apply(&p), c.apply(&scaled));
        assert_eq!(CoordinateChange::identity(f).apply(&p), p);
    }

    #[test]
    fn pencil_independence() {
        let f = PrimeField::new(10007).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let choice = choose_points(f, &mut rng, POINT_ATTEMPTS).unwrap();
        let (o, z) = (FieldElement::ONE, FieldElement::ZERO);
        assert!(
            Pencil::from_coefficients(&choice.quintics, [&[o, z, z, z], &[z, o, z, z]]).is_some()
        );
        assert!(
            Pencil::from_coefficients(&choice.quintics, [&[o, o, z, z], &[o, o, z, z]]).is_none()
        );
        let pencil = choose_pencil(&choice.quintics, &mut rng);
        for p in choice.p.iter().chain(&choice.r) {
            assert!(pencil.f1.evaluate(p).is_zero() && pencil.f2.evaluate(p).is_zero());
        }
    }

    #[test]
    fn common_factor_is_rejected() {
        let f = PrimeField::new(10007).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let choice = choose_points(f, &mut rng, POINT_ATTEMPTS).unwrap();
        let all: Vec<Point> = choice.p.iter().chain(&choice.r).copied().collect();
        let ideal_pr = points_ideal(f, &all).unwrap();
        let plane = Ring::plane(f);
        let line = SparsePoly::parse(plane, "x + 2*y - 3*z").unwrap();
        let q1 = SparsePoly::parse(plane, "x^4 - y^3*z + 5*z^4").unwrap();
        let q2 = SparsePoly::parse(plane, "y^4 + x^2*y*z - 7*x*z^3").unwrap();
        let pencil = Pencil {
            f1: line.mul(&q1),
            f2: line.mul(&q2),
        };
        assert!(matches!(
            residual_points(&pencil, &ideal_pr, &all, &mut rng),
            Err(Error::DegenerateResidual(_))
        ));
    }
}
