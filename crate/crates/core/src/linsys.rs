//! Plane curves through fat points: graded pieces of point ideals, Hilbert
//! functions and low-degree generator/syzygy counts.

use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};
use crate::groebner::{zerodim_degree, GroebnerBasis, IdealBasis};
use crate::matrix::{echelon_basis, DenseMatrix};
use crate::poly::{monomial_basis, Monomial, Ring, SparsePoly};

/// A point of `P^2(F_p)`, normalized so its last nonzero coordinate is 1.
pub type Point = [FieldElement; 3];

/// Scales a nonzero triple so the last nonzero coordinate becomes 1.
pub fn normalize_point(field: PrimeField, p: [FieldElement; 3]) -> Option<Point> {
    let k = (0..3).rev().find(|&i| !p[i].is_zero())?;
    let inv = field.inv(p[k]).unwrap();
    Some(p.map(|c| field.mul(c, inv)))
}

fn normalizing_index(p: &Point) -> usize {
    (0..3)
        .rev()
        .find(|&i| !p[i].is_zero())
        .expect("point with all coordinates zero")
}

/// Points of `P^2` with multiplicity 1 (pass through) or 2 (singular).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FatPointSystem {
    field: PrimeField,
    points: Vec<(Point, u8)>,
}

impl FatPointSystem {
    pub fn new(field: PrimeField, points: Vec<(Point, u8)>) -> Result<Self> {
        let mut normalized: Vec<(Point, u8)> = Vec::with_capacity(points.len());
        for (p, m) in points {
            if !(1..=2).contains(&m) {
                return Err(Error::Schema(format!("unsupported multiplicity {m}")));
            }
            let p = normalize_point(field, p).ok_or_else(|| Error::Schema("zero point".into()))?;
            if normalized.iter().any(|(q, _)| *q == p) {
                return Err(Error::Schema("repeated point".into()));
            }
            normalized.push((p, m));
        }
        Ok(FatPointSystem {
            field,
            points: normalized,
        })
    }

    pub fn simple(field: PrimeField, points: &[Point]) -> Result<Self> {
        Self::new(field, points.iter().map(|&p| (p, 1)).collect())
    }

    pub fn double(field: PrimeField, points: &[Point]) -> Result<Self> {
        Self::new(field, points.iter().map(|&p| (p, 2)).collect())
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn points(&self) -> &[(Point, u8)] {
        &self.points
    }

    /// Number of linear conditions imposed: 1 per simple point, 3 per
    /// double point.
    pub fn condition_count(&self) -> usize {
        self.points
            .iter()
            .map(|&(_, m)| if m == 1 { 1 } else { 3 })
            .sum()
    }

    /// Conditions on forms of degree `d`, one row per condition, columns
    /// indexed by `monomial_basis(d)`. A double point contributes the value
    /// and the two partials in the variables other than its normalizing
    /// coordinate.
    pub fn condition_matrix(&self, d: u16) -> DenseMatrix {
        let f = self.field;
        let basis = monomial_basis(d);
        let mut rows = Vec::with_capacity(self.condition_count());
        for &(p, m) in &self.points {
            rows.push(basis.iter().map(|mon| monomial_value(f, mon, &p)).collect());
            if m == 2 {
                let k = normalizing_index(&p);
                for v in (0..3).filter(|&v| v != k) {
                    rows.push(
                        basis
                            .iter()
                            .map(|mon| monomial_partial(f, mon, v, &p))
                            .collect(),
                    );
                }
            }
        }
        DenseMatrix::from_rows(f, basis.len(), rows)
    }
}

fn monomial_value(f: PrimeField, m: &Monomial, p: &Point) -> FieldElement {
    (0..3).fold(FieldElement::ONE, |acc, i| {
        f.mul(acc, f.pow(p[i], m.exp(i) as u64))
    })
}

fn monomial_partial(f: PrimeField, m: &Monomial, v: usize, p: &Point) -> FieldElement {
    let e = m.exp(v);
    if e == 0 {
        return FieldElement::ZERO;
    }
    let lowered = m.div(&Monomial::var(v)).unwrap();
    f.mul(f.elem(e as u64), monomial_value(f, &lowered, p))
}

/// A graded piece of an ideal: forms of one degree, as an echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSystem {
    pub degree: u16,
    pub basis: Vec<SparsePoly>,
}

impl LinearSystem {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Whether `f` is a combination of the basis.
    pub fn contains(&self, f: &SparsePoly) -> bool {
        let mons = monomial_basis(self.degree);
        let mut rows: Vec<Vec<FieldElement>> = self.basis.iter().map(|b| b.coords(&mons)).collect();
        let rank = rows.len();
        rows.push(f.coords(&mons));
        DenseMatrix::from_rows(f.field(), mons.len(), rows).rank() == rank
    }
}

/// Forms of degree `d` satisfying the point conditions of `s` and, when
/// `extra` is given, lying in the ideal it generates. `extra` is a Gröbner
/// basis in the chart `z = 1`; membership is tested on `F(x, y, 1)`.
pub fn linear_system(s: &FatPointSystem, d: u16, extra: Option<&GroebnerBasis>) -> LinearSystem {
    let f = s.field;
    let mons = monomial_basis(d);
    let mut m = s.condition_matrix(d);
    if let Some(gb) = extra {
        m.stack(&membership_rows(gb, &mons));
    }
    let (_, kernel) = m.rank_and_kernel();
    let plane = Ring::plane(f);
    LinearSystem {
        degree: d,
        basis: kernel
            .iter()
            .map(|v| SparsePoly::from_coords(plane, &mons, v))
            .collect(),
    }
}

/// Rows expressing "the normal form of `F(x, y, 1)` vanishes" for an
/// unknown `F` with coordinates on `mons`.
fn membership_rows(gb: &GroebnerBasis, mons: &[Monomial]) -> DenseMatrix {
    let chart = gb.ring();
    let f = chart.field;
    let plane = Ring::plane(f);
    let forms: Vec<SparsePoly> = mons
        .iter()
        .map(|&m| {
            gb.normal_form(&SparsePoly::term(plane, m, FieldElement::ONE).dehomogenize(2, chart))
        })
        .collect();
    let mut support: Vec<Monomial> = forms
        .iter()
        .flat_map(|nf| nf.terms().iter().map(|(m, _)| *m))
        .collect();
    support.sort_by(|a, b| chart.cmp(b, a));
    support.dedup();
    let rows = support
        .iter()
        .map(|s| forms.iter().map(|nf| nf.coeff(s)).collect())
        .collect();
    DenseMatrix::from_rows(f, mons.len(), rows)
}

/// `dim I_d` for `d = 0..=d_max`.
pub fn hilbert_function(s: &FatPointSystem, d_max: u16) -> Vec<usize> {
    (0..=d_max)
        .map(|d| {
            let m = s.condition_matrix(d);
            m.cols() - m.rank()
        })
        .collect()
}

/// Minimal generator and first syzygy counts of the ideal of `s`, per degree
/// `0..=d_max`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct ResolutionProfile {
    pub generators: Vec<usize>,
    pub syzygies: Vec<usize>,
}

impl ResolutionProfile {
    /// The shape of twelve general points: `O(-4)^3 <- O(-6)^2`, read off in
    /// degrees up to 8.
    pub fn matches_twelve_general_points(&self) -> bool {
        let window = |v: &[usize], d: usize| v.get(d).copied().unwrap_or(0);
        (0..=8).all(|d| window(&self.generators, d) == if d == 4 { 3 } else { 0 })
            && (0..=8).all(|d| window(&self.syzygies, d) == if d == 6 { 2 } else { 0 })
    }
}

/// Multiplies every vector (coordinates on `monomial_basis(d)`) by `x`,
/// `y` and `z`.
fn times_linear_forms(
    f: PrimeField,
    d: u16,
    vectors: &[Vec<FieldElement>],
) -> Vec<Vec<FieldElement>> {
    let plane = Ring::plane(f);
    let (src, dst) = (monomial_basis(d), monomial_basis(d + 1));
    let mut out = Vec::with_capacity(3 * vectors.len());
    for v in vectors {
        let p = SparsePoly::from_coords(plane, &src, v);
        for var in 0..3 {
            out.push(
                p.mul_term(&Monomial::var(var), FieldElement::ONE)
                    .coords(&dst),
            );
        }
    }
    out
}

pub fn generator_syzygy_profile(s: &FatPointSystem, d_max: u16) -> ResolutionProfile {
    let f = s.field;
    let plane = Ring::plane(f);
    let mut generators = vec![0; d_max as usize + 1];
    let mut syzygies = vec![0; d_max as usize + 1];
    // minimal generators found so far, as (degree, polynomial)
    let mut gens: Vec<(u16, SparsePoly)> = Vec::new();
    let mut prev_piece: Vec<Vec<FieldElement>> = Vec::new();
    // kernel of the syzygy map in the previous degree, blocks per generator
    let mut prev_syz: Vec<Vec<Vec<FieldElement>>> = Vec::new();
    for d in 0..=d_max {
        let mons = monomial_basis(d);
        let piece = s.condition_matrix(d).rank_and_kernel().1;
        // generators: complete R_1 * I_{d-1} to I_d
        let mut span = if d == 0 {
            Vec::new()
        } else {
            echelon_basis(f, mons.len(), times_linear_forms(f, d - 1, &prev_piece))
        };
        for v in &piece {
            let mut trial = span.clone();
            trial.push(v.clone());
            let trial = echelon_basis(f, mons.len(), trial);
            if trial.len() > span.len() {
                span = trial;
                gens.push((d, SparsePoly::from_coords(plane, &mons, v)));
                generators[d as usize] += 1;
            }
        }
        // syzygies: kernel of (a_i) -> sum a_i g_i, domain blocks R_{d - deg g_i}
        let blocks: Vec<Vec<Monomial>> =
            gens.iter().map(|(gd, _)| monomial_basis(d - gd)).collect();
        let mut cols = Vec::new();
        for ((_, g), block) in gens.iter().zip(&blocks) {
            for m in block {
                cols.push(g.mul_term(m, FieldElement::ONE).coords(&mons));
            }
        }
        let domain: usize = blocks.iter().map(|b| b.len()).sum();
        let kernel = if domain == 0 {
            Vec::new()
        } else {
            DenseMatrix::from_columns(f, mons.len(), &cols)
                .rank_and_kernel()
                .1
        };
        let split: Vec<Vec<Vec<FieldElement>>> =
            kernel.iter().map(|v| split_blocks(v, &blocks)).collect();
        // syzygies coming from degree d - 1, multiplied by x, y, z
        let mut lifted = Vec::new();
        for syz in &prev_syz {
            for var in 0..3 {
                let mut v = Vec::with_capacity(domain);
                for (i, (gd, _)) in gens.iter().enumerate() {
                    let len = blocks[i].len();
                    match syz.get(i) {
                        // generators new in degree d have no part in old syzygies
                        Some(part) if d > *gd => {
                            let p =
                                SparsePoly::from_coords(plane, &monomial_basis(d - 1 - gd), part);
                            v.extend(
                                p.mul_term(&Monomial::var(var), FieldElement::ONE)
                                    .coords(&blocks[i]),
                            );
                        }
                        _ => v.extend(std::iter::repeat_n(FieldElement::ZERO, len)),
                    }
                }
                lifted.push(v);
            }
        }
        let old_rank = if lifted.is_empty() {
            0
        } else {
            DenseMatrix::from_rows(f, domain, lifted).rank()
        };
        syzygies[d as usize] = kernel.len() - old_rank;
        prev_piece = piece;
        prev_syz = split;
    }
    ResolutionProfile {
        generators,
        syzygies,
    }
}

fn split_blocks(v: &[FieldElement], blocks: &[Vec<Monomial>]) -> Vec<Vec<FieldElement>> {
    let mut out = Vec::with_capacity(blocks.len());
    let mut at = 0;
    for b in blocks {
        out.push(v[at..at + b.len()].to_vec());
        at += b.len();
    }
    out
}

/// Ideal of distinct points in the chart `z = 1`. Every point must have
/// nonzero `z`.
pub fn points_ideal(field: PrimeField, points: &[Point]) -> Result<IdealBasis> {
    let chart = Ring::chart(field);
    if points.is_empty() {
        return Ok(IdealBasis::unit(chart));
    }
    if points.iter().any(|p| p[2].is_zero()) {
        return Err(Error::ChartViolation("point on the line z = 0".into()));
    }
    let s = FatPointSystem::simple(field, points)?;
    let n = points.len();
    // the ideal is generated in degrees up to one past the first degree
    // where the points impose independent conditions
    let mut d = 0u16;
    loop {
        let m = s.condition_matrix(d);
        if m.rank() == n {
            break;
        }
        d += 1;
    }
    let sys = linear_system(&s, d + 1, None);
    let ideal = IdealBasis::new(
        chart,
        sys.basis.iter().map(|g| g.dehomogenize(2, chart)).collect(),
    );
    debug_assert_eq!(zerodim_degree(&ideal).ok(), Some(n));
    Ok(ideal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn f() -> PrimeField {
        PrimeField::new(10007).unwrap()
    }

    fn random_points(f: PrimeField, n: usize, rng: &mut ChaCha8Rng) -> Vec<Point> {
        let mut pts: Vec<Point> = Vec::new();
        while pts.len() < n {
            let p = [f.random(rng), f.random(rng), FieldElement::ONE];
            if !pts.contains(&p) {
                pts.push(p);
            }
        }
        pts
    }

    #[test]
    fn condition_counts() {
        let f = f();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let pts = random_points(f, 4, &mut rng);
        let s = FatPointSystem::new(f, vec![(pts[0], 1), (pts[1], 2), (pts[2], 2), (pts[3], 1)])
            .unwrap();
        assert_eq!(s.condition_matrix(5).rows(), 8);
        assert!(FatPointSystem::simple(f, &[pts[0], pts[0]]).is_err());
    }

    #[test]
    fn general_dimensions() {
        let f = f();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let p = random_points(f, 12, &mut rng);
        assert_eq!(
            linear_system(&FatPointSystem::double(f, &p).unwrap(), 8, None).dimension(),
            9
        );
        assert_eq!(
            linear_system(&FatPointSystem::simple(f, &p).unwrap(), 5, None).dimension(),
            9
        );
        let pr = random_points(f, 17, &mut rng);
        assert_eq!(
            linear_system(&FatPointSystem::simple(f, &pr).unwrap(), 5, None).dimension(),
            4
        );
    }

    #[test]
    fn basis_satisfies_conditions() {
        let f = f();
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let p = random_points(f, 12, &mut rng);
        let sys = linear_system(&FatPointSystem::double(f, &p).unwrap(), 8, None);
        for g in &sys.basis {
            for q in &p {
                assert!(g.evaluate(q).is_zero());
                for v in 0..3 {
                    assert!(g.partial_derivative(v).evaluate(q).is_zero());
                }
            }
        }
    }

    #[test]
    fn extra_ideal_conditions_agree_with_points() {
        let f = f();
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let pts = random_points(f, 20, &mut rng);
        let (a, b) = pts.split_at(12);
        let gb = points_ideal(f, b).unwrap().groebner();
        let via_ideal = linear_system(&FatPointSystem::simple(f, a).unwrap(), 5, Some(&gb));
        let via_points = linear_system(&FatPointSystem::simple(f, &pts).unwrap(), 5, None);
        assert_eq!(via_ideal, via_points);
        assert_eq!(via_ideal.dimension(), 1);
    }

    #[test]
    fn hilbert_function_examples() {
        let f = f();
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        let s = FatPointSystem::simple(f, &random_points(f, 12, &mut rng)).unwrap();
        assert_eq!(&hilbert_function(&s, 6)[1..], &[0, 0, 0, 3, 9, 16]);
        let empty = FatPointSystem::simple(f, &[]).unwrap();
        assert_eq!(hilbert_function(&empty, 4), vec![1, 3, 6, 10, 15]);
        let one = FatPointSystem::simple(f, &random_points(f, 1, &mut rng)).unwrap();
        assert_eq!(hilbert_function(&one, 4), vec![0, 2, 5, 9, 14]);
    }

    #[test]
    fn profile_of_twelve_points() {
        let f = f();
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        let s = FatPointSystem::simple(f, &random_points(f, 12, &mut rng)).unwrap();
        let prof = generator_syzygy_profile(&s, 8);
        assert_eq!(prof.generators, vec![0, 0, 0, 0, 3, 0, 0, 0, 0]);
        assert_eq!(prof.syzygies, vec![0, 0, 0, 0, 0, 0, 2, 0, 0]);
        assert!(prof.matches_twelve_general_points());
    }

    #[test]
    fn profile_of_two_conics() {
        // x^2 - z^2 and y^2 - z^2 meet in (±1, ±1, 1)
        let f = f();
        let one = FieldElement::ONE;
        let m1 = f.neg(one);
        let pts = [
            [one, one, one],
            [one, m1, one],
            [m1, one, one],
            [m1, m1, one],
        ];
        let prof = generator_syzygy_profile(&FatPointSystem::simple(f, &pts).unwrap(), 6);
        assert_eq!(prof.generators, vec![0, 0, 2, 0, 0, 0, 0]);
        assert_eq!(prof.syzygies, vec![0, 0, 0, 0, 1, 0, 0]);
    }

    #[test]
    fn points_ideal_has_the_right_degree() {
        let f = f();
        let mut rng = ChaCha8Rng::seed_from_u64(16);
        for n in [1, 3, 12, 17] {
            let pts = random_points(f, n, &mut rng);
            let i = points_ideal(f, &pts).unwrap();
            assert_eq!(zerodim_degree(&i).unwrap(), n);
            let chart = Ring::chart(f);
            for g in i.gens() {
                for p in &pts {
                    assert!(g.evaluate(&p[..2]).is_zero());
                }
                assert_eq!(g.ring(), chart);
            }
        }
    }
}
