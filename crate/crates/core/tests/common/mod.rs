//! Test-only oracles shared by the integration tests.
#![allow(dead_code)]

use hurwitz98::groebner::{
    buchberger, quotient_zerodim, zerodim_degree, IdealBasis, QuotientAlgebra, Reducedness,
};
use hurwitz98::poly::{Monomial, Ring, SparsePoly, UniPoly};
use hurwitz98::{DenseMatrix, FieldElement, PrimeField};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// F_{7^k} as base-7 digit vectors modulo a fixed irreducible polynomial,
/// with a full multiplication table.
pub struct ExtensionField {
    q: usize,
    mul: Vec<u16>,
}

impl ExtensionField {
    pub fn new(k: usize) -> Self {
        // x^2 + 1 and x^3 - 2 are irreducible over F_7
        let modulus: Vec<i64> = match k {
            1 => vec![0, 1],
            2 => vec![1, 0, 1],
            3 => vec![-2, 0, 0, 1],
            _ => unreachable!(),
        };
        let q = 7usize.pow(k as u32);
        let digits = |mut v: usize| -> Vec<i64> {
            (0..k)
                .map(|_| {
                    let d = (v % 7) as i64;
                    v /= 7;
                    d
                })
                .collect()
        };
        let mut mul = vec![0u16; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let mut prod = vec![0i64; 2 * k];
                for i in 0..k {
                    for j in 0..k {
                        prod[i + j] += da[i] * db[j];
                    }
                }
                for top in (k..2 * k).rev() {
                    let c = prod[top];
                    for (i, m) in modulus.iter().enumerate().take(k) {
                        prod[top - k + i] -= c * m;
                    }
                    prod[top] = 0;
                }
                let v = (0..k)
                    .rev()
                    .fold(0usize, |acc, i| acc * 7 + prod[i].rem_euclid(7) as usize);
                mul[a * q + b] = v as u16;
            }
        }
        ExtensionField { q, mul }
    }

    fn add(&self, a: usize, b: usize) -> usize {
        let (mut a, mut b, mut out, mut place) = (a, b, 0, 1);
        while a > 0 || b > 0 {
            out += ((a % 7 + b % 7) % 7) * place;
            a /= 7;
            b /= 7;
            place *= 7;
        }
        out
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }

    fn pow(&self, a: usize, e: u16) -> usize {
        (0..e).fold(1, |acc, _| self.mul(acc, a))
    }

    /// Value of a chart polynomial with F_7 coefficients.
    fn eval(&self, f: &[(u16, u16, usize)], x: usize, y: usize) -> usize {
        f.iter().fold(0, |acc, &(a, b, c)| {
            self.add(acc, self.mul(c, self.mul(self.pow(x, a), self.pow(y, b))))
        })
    }

    pub fn count_common_zeros(&self, f: &[(u16, u16, usize)], g: &[(u16, u16, usize)]) -> usize {
        let mut n = 0;
        for x in 0..self.q {
            for y in 0..self.q {
                if self.eval(f, x, y) == 0 && self.eval(g, x, y) == 0 {
                    n += 1;
                }
            }
        }
        n
    }
}

pub fn chart_terms(p: &SparsePoly) -> Vec<(u16, u16, usize)> {
    p.terms()
        .iter()
        .map(|(m, c)| (m.exp(0), m.exp(1), c.value() as usize))
        .collect()
}

pub fn random_form(ring: Ring, d: u16, rng: &mut ChaCha8Rng) -> SparsePoly {
    let f = ring.field;
    SparsePoly::from_terms(
        ring,
        ring.monomials_of_degree(d)
            .into_iter()
            .map(|m| (m, f.random(rng)))
            .collect(),
    )
}

/// Number of distinct roots of `chi` in F_{7^k}: `deg gcd(chi, t^(7^k) - t)`.
pub fn roots_in_extension(chi: &UniPoly, k: u32) -> usize {
    let f = chi.field();
    let t = UniPoly::from_i64(f, &[0, 1]);
    let frob = t.pow_mod(7u64.pow(k), chi).sub(&t);
    chi.gcd(&frob).degree().unwrap_or(0)
}

/// Conic-cubic intersections over F_7 compared with point counts over
/// F_7, F_49, F_343. Stops after `wanted` instances whose points all lie
/// over those fields; returns the number of such instances checked.
pub fn point_count_oracle(seed: u64, wanted: usize) -> Result<usize, String> {
    let f7 = PrimeField::new(7).unwrap();
    let plane = Ring::plane(f7);
    let chart = Ring::chart(f7);
    let fields: Vec<ExtensionField> = (1..=3).map(ExtensionField::new).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut exact = 0;
    for _ in 0..2000 {
        if exact == wanted {
            break;
        }
        let conic = random_form(plane, 2, &mut rng);
        let cubic = random_form(plane, 3, &mut rng);
        let (c, e) = (conic.dehomogenize(2, chart), cubic.dehomogenize(2, chart));
        let ideal = IdealBasis::new(chart, vec![c.clone(), e.clone()]);
        // skip common components and intersections on z = 0
        let Ok(degree) = zerodim_degree(&ideal) else {
            continue;
        };
        if degree != 6 {
            continue;
        }
        let counts: Vec<usize> = fields
            .iter()
            .map(|k| k.count_common_zeros(&chart_terms(&c), &chart_terms(&e)))
            .collect();
        let alg = QuotientAlgebra::from_ideal(&ideal).map_err(|e| e.to_string())?;
        let distinct_roots = |chi: &UniPoly| 6 - chi.gcd(&chi.derivative()).degree().unwrap_or(0);
        let separating = (0..7)
            .map(|s| SparsePoly::parse(chart, &format!("x + {s}*y")).unwrap())
            .chain([SparsePoly::var(chart, 1)])
            .map(|l| alg.charpoly(&l))
            .max_by_key(|chi| distinct_roots(chi))
            .unwrap();
        let (a1, a2, a3) = (
            counts[0],
            (counts[1] - counts[0]) / 2,
            (counts[2] - counts[0]) / 3,
        );
        let rational = a1 + 2 * a2 + 3 * a3;
        if rational > degree {
            return Err(format!("{rational} points over F_343 but degree {degree}"));
        }
        // a separating form sees exactly the Frobenius-fixed points
        if rational == distinct_roots(&separating) {
            for k in 1..=3u32 {
                let roots = roots_in_extension(&separating, k);
                if roots != counts[k as usize - 1] {
                    return Err(format!(
                        "F_7^{k}: {roots} roots, {} points",
                        counts[k as usize - 1]
                    ));
                }
            }
        }
        if rational == 6 {
            exact += 1;
        }
    }
    if exact < wanted {
        return Err(format!("only {exact} usable instances"));
    }
    Ok(exact)
}

/// Basis of the polynomials of degree at most `d` vanishing on `points`,
/// by elimination on plain integers mod 7.
pub fn interpolated_ideal(points: &[(i64, i64)], ring: Ring) -> IdealBasis {
    let p = 7i64;
    let d = points.len() as u16;
    let mons: Vec<(u16, u16)> = (0..=d)
        .flat_map(|t| (0..=t).map(move |a| (a, t - a)))
        .collect();
    let pw = |b: i64, e: u16| (0..e).fold(1i64, |acc, _| acc * b % p);
    let mut rows: Vec<Vec<i64>> = points
        .iter()
        .map(|&(x, y)| mons.iter().map(|&(a, b)| pw(x, a) * pw(y, b) % p).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..mons.len() {
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = (1..p).find(|v| v * rows[r][c] % p == 1).unwrap();
        for v in rows[r].iter_mut() {
            *v = *v * inv % p;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let k = rows[i][c];
                let pivot_row = rows[r].clone();
                for (v, w) in rows[i].iter_mut().zip(&pivot_row) {
                    *v = (*v - k * w).rem_euclid(p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let f = ring.field;
    let mut gens = Vec::new();
    for free in (0..mons.len()).filter(|c| !pivots.contains(c)) {
        let mut terms = vec![(
            Monomial::new(&[mons[free].0, mons[free].1]),
            FieldElement::ONE,
        )];
        for (i, &pc) in pivots.iter().enumerate() {
            let v = (-rows[i][free]).rem_euclid(p);
            if v != 0 {
                terms.push((Monomial::new(&[mons[pc].0, mons[pc].1]), f.elem(v as u64)));
            }
        }
        gens.push(SparsePoly::from_terms(ring, terms));
    }
    IdealBasis::new(ring, gens)
}

/// `I_X : I_Y` against the interpolated ideal of `X \ Y` for random point
/// sets over F_7, by both quotient routes.
pub fn quotient_oracle(seed: u64, instances: usize) -> Result<(), String> {
    let f7 = PrimeField::new(7).unwrap();
    let chart = Ring::chart(f7);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut reducedness_rng = ChaCha8Rng::seed_from_u64(seed + 1);
    for _ in 0..instances {
        let n = rng.gen_range(3..=6);
        let mut xs: Vec<(i64, i64)> = Vec::new();
        while xs.len() < n {
            let p = (rng.gen_range(0..7), rng.gen_range(0..7));
            if !xs.contains(&p) {
                xs.push(p);
            }
        }
        let k = rng.gen_range(1..n);
        let (ys, rest) = xs.split_at(k);
        let ix = interpolated_ideal(&xs, chart);
        let iy = interpolated_ideal(ys, chart);
        let expected = interpolated_ideal(rest, chart);
        if !ix.quotient(&iy).equals(&expected) {
            return Err(format!(
                "elimination quotient differs for X = {xs:?}, Y = {ys:?}"
            ));
        }
        let linear =
            IdealBasis::from_groebner(&quotient_zerodim(&ix, &iy).map_err(|e| e.to_string())?);
        if !linear.equals(&expected) {
            return Err(format!(
                "linear-algebra quotient differs for X = {xs:?}, Y = {ys:?}"
            ));
        }
        if zerodim_degree(&linear).ok() != Some(rest.len()) {
            return Err(format!("degree of X \\ Y is not {}", rest.len()));
        }
        let alg = QuotientAlgebra::from_ideal(&linear).map_err(|e| e.to_string())?;
        if alg.reducedness(&mut reducedness_rng) == Reducedness::NotReduced {
            return Err("reduced point set reported non-reduced".into());
        }
    }
    Ok(())
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

/// `chi_M(M) = 0` for random matrices of sizes 1..=8, by Horner evaluation.
pub fn cayley_hamilton(prime: u32, seed: u64, instances: usize) -> bool {
    let f = PrimeField::new(prime).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..instances).all(|i| {
        let n = 1 + i % 8;
        let m = random_matrix(f, n, &mut rng);
        let mut acc = DenseMatrix::zeros(f, n, n);
        for &c in m.charpoly().coeffs().iter().rev() {
            acc = acc.mul(&m).add(&DenseMatrix::identity(f, n).scale(c));
        }
        acc.is_zero()
    })
}

/// Every S-polynomial of the computed basis reduces to zero and every input
/// lies in the ideal, for random plane forms.
pub fn s_polynomial_certification(prime: u32, seed: u64, instances: usize) -> bool {
    let f = PrimeField::new(prime).unwrap();
    let ring = Ring::plane(f);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..instances).all(|i| {
        let gens: Vec<SparsePoly> = (0..3)
            .map(|k| random_form(ring, 2 + ((i + k) % 3) as u16, &mut rng))
            .collect();
        let gb = buchberger(ring, &gens);
        gb.certify() && gens.iter().all(|g| gb.contains(g))
    })
}
