//! Finite-dimensional quotient algebras `F_p[x_1..x_n] / I`.
//!
//! Elements are coordinate vectors on the standard monomials of a reduced
//! Gröbner basis. Multiplication operators, characteristic polynomials and
//! kernel computations give degree, reducedness and the linear-algebra
//! versions of quotient and saturation.

use std::collections::HashMap;

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::matrix::{echelon_basis, DenseMatrix};
use crate::poly::{Monomial, Ring, SparsePoly, UniPoly, MAX_VARS};

use super::buchberger::{buchberger, GroebnerBasis};
use super::ideal::IdealBasis;

/// How many random linear forms the reducedness test tries.
pub const REDUCEDNESS_ATTEMPTS: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Reducedness {
    /// A linear form with squarefree characteristic polynomial of full
    /// degree was found.
    Reduced,
    /// Some multiplication operator is not semisimple, so the algebra has
    /// nilpotents.
    NotReduced,
    /// Every attempt was inconclusive.
    Undecided,
}

#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    gb: GroebnerBasis,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    var_ops: Vec<DenseMatrix>,
}

/// Standard monomials of a Gröbner basis in increasing term order, or an
/// error when there are infinitely many.
pub fn standard_monomials(gb: &GroebnerBasis) -> Result<Vec<Monomial>> {
    let ring = gb.ring();
    let n = ring.nvars;
    if gb.is_unit() {
        return Ok(Vec::new());
    }
    let lms = gb.leading_monomials();
    let mut bounds = [0u16; MAX_VARS];
    for (v, bound) in bounds.iter_mut().enumerate().take(n) {
        *bound = lms
            .iter()
            .filter(|m| (0..n).all(|i| i == v || m.exp(i) == 0) && m.exp(v) > 0)
            .map(|m| m.exp(v))
            .min()
            .ok_or(Error::NotZeroDimensional)?;
    }
    let mut out = Vec::new();
    let mut cur = [0u16; MAX_VARS];
    fn rec(
        v: usize,
        n: usize,
        bounds: &[u16; MAX_VARS],
        cur: &mut [u16; MAX_VARS],
        lms: &[Monomial],
        out: &mut Vec<Monomial>,
    ) {
        if v == n {
            let m = Monomial::new(&cur[..n]);
            if !lms.iter().any(|l| l.divides(&m)) {
                out.push(m);
            }
            return;
        }
        for e in 0..bounds[v] {
            cur[v] = e;
            // once a prefix is divisible, larger exponents stay divisible
            let prefix = Monomial::new(&cur[..n]);
            if lms.iter().any(|l| l.divides(&prefix)) {
                break;
            }
            rec(v + 1, n, bounds, cur, lms, out);
        }
        cur[v] = 0;
    }
    rec(0, n, &bounds, &mut cur, &lms, &mut out);
    out.sort_by(|a, b| ring.cmp(a, b));
    Ok(out)
}

/// `dim_k F_p[x]/I`, the length of the scheme cut out by `I` in the chart.
pub fn zerodim_degree(ideal: &IdealBasis) -> Result<usize> {
    Ok(standard_monomials(&ideal.groebner())?.len())
}

impl QuotientAlgebra {
    pub fn new(gb: GroebnerBasis) -> Result<Self> {
        let basis = standard_monomials(&gb)?;
        let index: HashMap<Monomial, usize> =
            basis.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let mut alg = QuotientAlgebra {
            gb,
            basis,
            index,
            var_ops: Vec::new(),
        };
        let ring = alg.gb.ring();
        alg.var_ops = (0..ring.nvars)
            .map(|v| {
                let x = SparsePoly::var(ring, v);
                let cols: Vec<Vec<FieldElement>> = alg
                    .basis
                    .iter()
                    .map(|&m| alg.coords(&x.mul_term(&m, FieldElement::ONE)))
                    .collect();
                DenseMatrix::from_columns(ring.field, alg.basis.len(), &cols)
            })
            .collect();
        Ok(alg)
    }

    pub fn from_ideal(ideal: &IdealBasis) -> Result<Self> {
        Self::new(ideal.groebner())
    }

    pub fn groebner(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn ring(&self) -> Ring {
        self.gb.ring()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    /// Coordinates of the class of `f`.
    pub fn coords(&self, f: &SparsePoly) -> Vec<FieldElement> {
        let nf = self.gb.normal_form(f);
        let mut v = vec![FieldElement::ZERO; self.basis.len()];
        for (m, c) in nf.terms() {
            v[self.index[m]] = *c;
        }
        v
    }

    /// The polynomial with the given coordinates.
    pub fn lift(&self, coords: &[FieldElement]) -> SparsePoly {
        SparsePoly::from_coords(self.ring(), &self.basis, coords)
    }

    /// Matrix of `v ↦ f·v` on the standard monomial basis.
    pub fn multiplication_operator(&self, f: &SparsePoly) -> DenseMatrix {
        let n = self.basis.len();
        let mut cols: Vec<Vec<FieldElement>> = vec![Vec::new(); n];
        if n == 0 {
            return DenseMatrix::zeros(self.ring().field, 0, 0);
        }
        // basis[0] is 1; every other standard monomial is x_v times an
        // earlier one
        cols[0] = self.coords(f);
        for k in 1..n {
            let m = self.basis[k];
            let (v, prev) = (0..self.ring().nvars)
                .filter(|&v| m.exp(v) > 0)
                .find_map(|v| {
                    let mut e = *m.exps();
                    e[v] -= 1;
                    let p = Monomial::new(&e[..self.ring().nvars]);
                    self.index.get(&p).map(|&i| (v, i))
                })
                .expect("standard monomials form an order ideal");
            debug_assert!(prev < k);
            cols[k] = self.var_ops[v].mul_vec(&cols[prev]);
        }
        DenseMatrix::from_columns(self.ring().field, n, &cols)
    }

    /// Characteristic polynomial of multiplication by `f`.
    pub fn charpoly(&self, f: &SparsePoly) -> UniPoly {
        self.multiplication_operator(f).charpoly()
    }

    /// Whether `f` is a unit of the algebra.
    pub fn is_unit(&self, f: &SparsePoly) -> bool {
        self.dim() == 0 || self.multiplication_operator(f).rank() == self.dim()
    }

    /// One-sided reducedness witness. A random linear form whose
    /// characteristic polynomial is squarefree of full degree separates the
    /// points and proves the algebra is a product of fields. A form whose
    /// squarefree part does not annihilate it exhibits a nilpotent.
    pub fn reducedness<R: Rng + ?Sized>(&self, rng: &mut R) -> Reducedness {
        let n = self.dim();
        if n == 0 {
            return Reducedness::Reduced;
        }
        let ring = self.ring();
        let f = ring.field;
        for _ in 0..REDUCEDNESS_ATTEMPTS {
            let mut form = SparsePoly::zero(ring);
            for v in 0..ring.nvars {
                form = form.add(&SparsePoly::var(ring, v).scale(f.random(rng)));
            }
            let op = self.multiplication_operator(&form);
            let cp = op.charpoly();
            if cp.is_squarefree() {
                return Reducedness::Reduced;
            }
            let deriv = cp.derivative();
            if deriv.is_zero() {
                continue;
            }
            let sqfree = cp.div_rem(&cp.gcd(&deriv)).0;
            // Horner evaluation of sqfree(form) applied to the unit element
            let mut acc = vec![FieldElement::ZERO; n];
            for &c in sqfree.coeffs().iter().rev() {
                acc = op.mul_vec(&acc);
                acc[0] = f.add(acc[0], c);
            }
            if acc.iter().any(|c| !c.is_zero()) {
                return Reducedness::NotReduced;
            }
        }
        Reducedness::Undecided
    }

    /// Subspace `{a : j·a = 0 for all j in gens}`, in echelon form.
    pub fn annihilator(&self, gens: &[SparsePoly]) -> Vec<Vec<FieldElement>> {
        let n = self.dim();
        let mut stacked = DenseMatrix::zeros(self.ring().field, 0, n);
        for g in gens {
            stacked.stack(&self.multiplication_operator(g));
        }
        stacked.rank_and_kernel().1
    }

    /// Subspace of elements killed by a power of every generator: the part
    /// of the algebra supported on `V(gens)`.
    pub fn torsion(&self, gens: &[SparsePoly]) -> Vec<Vec<FieldElement>> {
        let n = self.dim();
        let mut stacked = DenseMatrix::zeros(self.ring().field, 0, n);
        for g in gens {
            stacked.stack(&stable_power(self.multiplication_operator(g)));
        }
        stacked.rank_and_kernel().1
    }

    /// The ideal `I + (lifts of vectors)`.
    pub fn extend_ideal(&self, vectors: &[Vec<FieldElement>]) -> GroebnerBasis {
        let mut gens: Vec<SparsePoly> = self.gb.elements().to_vec();
        let vecs = echelon_basis(self.ring().field, self.dim(), vectors.to_vec());
        gens.extend(vecs.iter().map(|v| self.lift(v)));
        buchberger(self.ring(), &gens)
    }
}

/// A power `M^(2^k)` whose kernel equals `ker M^n`: squares until the rank
/// stops dropping.
fn stable_power(mut m: DenseMatrix) -> DenseMatrix {
    let mut rank = m.rank();
    loop {
        if rank == 0 || rank == m.rows() {
            return m;
        }
        let sq = m.mul(&m);
        let r = sq.rank();
        if r == rank {
            return m;
        }
        m = sq;
        rank = r;
    }
}

/// `(I : J)` for zero-dimensional `I`, as `I` plus the annihilator of `J`
/// in `F_p[x]/I`.
pub fn quotient_zerodim(ideal: &IdealBasis, by: &IdealBasis) -> Result<GroebnerBasis> {
    let alg = QuotientAlgebra::from_ideal(ideal)?;
    let ann = alg.annihilator(by.gens());
    Ok(alg.extend_ideal(&ann))
}

/// `(I : J^∞)` for zero-dimensional `I`: removes the local components of
/// `F_p[x]/I` at the points of `V(J)`.
pub fn saturate_zerodim(ideal: &IdealBasis, by: &IdealBasis) -> Result<GroebnerBasis> {
    let alg = QuotientAlgebra::from_ideal(ideal)?;
    let tor = alg.torsion(by.gens());
    Ok(alg.extend_ideal(&tor))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn chart(p: u32) -> Ring {
        Ring::chart(PrimeField::new(p).unwrap())
    }

    fn ideal(ring: Ring, gens: &[&str]) -> IdealBasis {
        IdealBasis::new(
            ring,
            gens.iter()
                .map(|g| SparsePoly::parse(ring, g).unwrap())
                .collect(),
        )
    }

    #[test]
    fn degree_examples() {
        let r = chart(10007);
        assert_eq!(zerodim_degree(&ideal(r, &["x", "y"])).unwrap(), 1);
        assert!(matches!(
            zerodim_degree(&ideal(r, &["x"])),
            Err(Error::NotZeroDimensional)
        ));
        assert_eq!(
            zerodim_degree(&ideal(r, &["x^2 - y", "y^3 - x*y + 1"])).unwrap(),
            6
        );
        assert_eq!(zerodim_degree(&IdealBasis::unit(r)).unwrap(), 0);
    }

    #[test]
    fn multiplication_operator_examples() {
        let r = chart(7);
        let alg = QuotientAlgebra::from_ideal(&ideal(r, &["x^2 - 2", "y"])).unwrap();
        assert_eq!(
            alg.multiplication_operator(&SparsePoly::one(r)),
            DenseMatrix::identity(r.field, 2)
        );
        let inside = SparsePoly::parse(r, "x^2*y + 3*x^2 - 6").unwrap();
        assert!(alg.multiplication_operator(&inside).is_zero());
        let mx = alg.multiplication_operator(&SparsePoly::var(r, 0));
        assert_eq!(mx.charpoly(), UniPoly::from_i64(r.field, &[-2, 0, 1]));
    }

    #[test]
    fn operators_commute_and_multiply() {
        let r = chart(10007);
        let alg =
            QuotientAlgebra::from_ideal(&ideal(r, &["x^3 - y^2 + x", "y^3 - 2*x*y + 5"])).unwrap();
        let a = SparsePoly::parse(r, "x*y + 3").unwrap();
        let b = SparsePoly::parse(r, "y^2 - x + 1").unwrap();
        let (ma, mb) = (
            alg.multiplication_operator(&a),
            alg.multiplication_operator(&b),
        );
        assert_eq!(ma.mul(&mb), mb.mul(&ma));
        assert_eq!(ma.mul(&mb), alg.multiplication_operator(&a.mul(&b)));
    }

    #[test]
    fn reducedness_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let r = chart(7);
        let fat = QuotientAlgebra::from_ideal(&ideal(r, &["x^2", "y"])).unwrap();
        assert_eq!(fat.reducedness(&mut rng), Reducedness::NotReduced);
        // the points (0,0), (1,2), (3,5): product of coordinate conditions
        let pts = [(0i64, 0i64), (1, 2), (3, 5)];
        let mut acc: Option<IdealBasis> = None;
        for (a, b) in pts {
            let m = IdealBasis::new(
                r,
                vec![
                    SparsePoly::parse(r, &format!("x - {a}")).unwrap(),
                    SparsePoly::parse(r, &format!("y - {b}")).unwrap(),
                ],
            );
            acc = Some(match acc {
                None => m,
                Some(i) => i.intersect(&m),
            });
        }
        let three = QuotientAlgebra::from_ideal(&acc.unwrap()).unwrap();
        assert_eq!(three.dim(), 3);
        assert_eq!(three.reducedness(&mut rng), Reducedness::Reduced);
    }

    #[test]
    fn linear_algebra_routes_match_elimination() {
        let r = chart(10007);
        let i = ideal(r, &["x^2*y - y", "y^3 - x*y^2"]);
        // not zero-dimensional: quotient routes need a finite algebra
        assert!(QuotientAlgebra::from_ideal(&i).is_err());
        let i = ideal(r, &["x^3 - x*y", "y^2 - x^2 + y"]);
        let j = ideal(r, &["x", "y"]);
        let q1 = IdealBasis::from_groebner(&quotient_zerodim(&i, &j).unwrap());
        let q2 = i.quotient(&j);
        assert!(q1.equals(&q2));
        let s1 = IdealBasis::from_groebner(&saturate_zerodim(&i, &j).unwrap());
        let s2 = i.saturate(&j);
        assert!(s1.equals(&s2));
        assert!(zerodim_degree(&s1).unwrap() < zerodim_degree(&i).unwrap());
    }
}
