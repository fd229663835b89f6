//! Dense matrices over `F_p`: echelon forms, kernels, solving and
//! characteristic polynomials.
//!
//! Every elimination pivots on the first nonzero entry in column order, so
//! results depend only on the input matrix.

use std::fmt;

use crate::field::{FieldElement, PrimeField};
use crate::poly::UniPoly;

#[derive(Clone, PartialEq, Eq)]
pub struct DenseMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl fmt::Debug for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "DenseMatrix {}x{} over F_{}",
            self.rows,
            self.cols,
            self.field.modulus()
        )?;
        for r in 0..self.rows {
            let row: Vec<u32> = self.row(r).iter().map(|c| c.value()).collect();
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

impl DenseMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        DenseMatrix {
            field,
            rows,
            cols,
            data: vec![FieldElement::ZERO; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = FieldElement::ONE;
        }
        m
    }

    pub fn from_rows(field: PrimeField, cols: usize, rows: Vec<Vec<FieldElement>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r);
        }
        DenseMatrix {
            field,
            rows: n,
            cols,
            data,
        }
    }

    pub fn from_i64(field: PrimeField, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            field,
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
                .collect(),
        )
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(field: PrimeField, rows: usize, columns: &[Vec<FieldElement>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (r, &v) in col.iter().enumerate() {
                m[(r, c)] = v;
            }
        }
        m
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|r| self[(r, c)]).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)];
            }
        }
        t
    }

    /// Appends the rows of `other` below `self`.
    pub fn stack(&mut self, other: &DenseMatrix) {
        assert_eq!(self.cols, other.cols);
        self.data.extend_from_slice(&other.data);
        self.rows += other.rows;
    }

    pub fn push_row(&mut self, row: &[FieldElement]) {
        assert_eq!(row.len(), self.cols);
        self.data.extend_from_slice(row);
        self.rows += 1;
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        DenseMatrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, c: FieldElement) -> Self {
        let f = self.field;
        DenseMatrix {
            data: self.data.iter().map(|&a| f.mul(a, c)).collect(),
            ..self.clone()
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(
            self.cols, other.rows,
            "dimension mismatch in matrix product"
        );
        let p = self.field.modulus() as u64;
        let mut out = Self::zeros(self.field, self.rows, other.cols);
        let mut acc = vec![0u64; other.cols];
        for r in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for (k, &a) in self.row(r).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let a = a.value() as u64;
                for (slot, &b) in acc.iter_mut().zip(other.row(k)) {
                    // p < 2^31 so one product plus a reduced accumulator fits
                    *slot = (*slot + a * b.value() as u64) % p;
                }
            }
            for (c, &v) in acc.iter().enumerate() {
                out[(r, c)] = FieldElement::from_reduced(v as u32);
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(v.len(), self.cols);
        let f = self.field;
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(FieldElement::ZERO, |acc, (&a, &b)| f.mul_add(acc, a, b))
            })
            .collect()
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert_eq!(self.rows, self.cols);
        let mut base = self.clone();
        let mut acc = Self::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let f = self.field;
        let p = f.modulus() as u64;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..cols {
            if lead == self.rows {
                break;
            }
            let Some(pr) = (lead..self.rows).find(|&r| !self[(r, c)].is_zero()) else {
                continue;
            };
            if pr != lead {
                for k in 0..cols {
                    self.data.swap(pr * cols + k, lead * cols + k);
                }
            }
            let inv = f.inv(self[(lead, c)]).unwrap();
            for k in c..cols {
                self[(lead, k)] = f.mul(self[(lead, k)], inv);
            }
            let pivot_row: Vec<u64> = self.row(lead)[c..]
                .iter()
                .map(|v| v.value() as u64)
                .collect();
            for r in 0..self.rows {
                if r == lead {
                    continue;
                }
                let factor = self[(r, c)];
                if factor.is_zero() {
                    continue;
                }
                let neg = p - factor.value() as u64;
                let row = &mut self.data[r * cols + c..(r + 1) * cols];
                for (slot, &pv) in row.iter_mut().zip(&pivot_row) {
                    if pv != 0 {
                        *slot = FieldElement::from_reduced(
                            ((slot.value() as u64 + neg * pv) % p) as u32,
                        );
                    }
                }
            }
            pivots.push(c);
            lead += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Rank together with a basis of the right kernel `{v : M v = 0}`.
    ///
    /// The kernel basis is returned in reduced echelon form: the vectors have
    /// distinct leading positions, each leading coordinate is 1, and the
    /// vectors are ordered by leading position.
    pub fn rank_and_kernel(&self) -> (usize, Vec<Vec<FieldElement>>) {
        let f = self.field;
        let mut m = self.clone();
        let pivots = m.rref();
        let rank = pivots.len();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut kernel = Vec::with_capacity(self.cols - rank);
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![FieldElement::ZERO; self.cols];
            v[free] = FieldElement::ONE;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m[(r, free)]);
            }
            kernel.push(v);
        }
        (rank, echelon_basis(f, self.cols, kernel))
    }

    /// Solves `M x = b`; `None` when the system is inconsistent.
    pub fn solve(&self, b: &[FieldElement]) -> Option<Vec<FieldElement>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = DenseMatrix::zeros(self.field, self.rows, self.cols + 1);
        for r in 0..self.rows {
            aug.data[r * (self.cols + 1)..r * (self.cols + 1) + self.cols]
                .copy_from_slice(self.row(r));
            aug[(r, self.cols)] = b[r];
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![FieldElement::ZERO; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug[(r, self.cols)];
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = DenseMatrix::zeros(self.field, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug[(r, c)] = self[(r, c)];
            }
            aug[(r, n + r)] = FieldElement::ONE;
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = DenseMatrix::zeros(self.field, n, n);
        for r in 0..n {
            for c in 0..n {
                inv[(r, c)] = aug[(r, n + c)];
            }
        }
        Some(inv)
    }

    /// Characteristic polynomial `det(t I - M)`, monic of degree `n`.
    ///
    /// Reduces to upper Hessenberg form by elementary similarities and then
    /// expands the determinant with the standard three-term recurrence. Works
    /// in every characteristic.
    pub fn charpoly(&self) -> UniPoly {
        assert_eq!(self.rows, self.cols, "charpoly of a non-square matrix");
        let f = self.field;
        let n = self.rows;
        let mut h = self.clone();
        for j in 0..n.saturating_sub(2) {
            let Some(i) = (j + 1..n).find(|&i| !h[(i, j)].is_zero()) else {
                continue;
            };
            if i != j + 1 {
                for k in 0..n {
                    h.data.swap(i * n + k, (j + 1) * n + k);
                }
                for k in 0..n {
                    h.data.swap(k * n + i, k * n + j + 1);
                }
            }
            let piv_inv = f.inv(h[(j + 1, j)]).unwrap();
            for k in j + 2..n {
                let u = f.mul(h[(k, j)], piv_inv);
                if u.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let v = f.sub(h[(k, c)], f.mul(u, h[(j + 1, c)]));
                    h[(k, c)] = v;
                }
                for r in 0..n {
                    let v = f.add(h[(r, j + 1)], f.mul(u, h[(r, k)]));
                    h[(r, j + 1)] = v;
                }
            }
        }
        let t = UniPoly::new(f, vec![FieldElement::ZERO, FieldElement::ONE]);
        let mut polys: Vec<UniPoly> = vec![UniPoly::constant(f, FieldElement::ONE)];
        for m in 1..=n {
            let diag = UniPoly::constant(f, h[(m - 1, m - 1)]);
            let mut pm = t.sub(&diag).mul(&polys[m - 1]);
            let mut prod = FieldElement::ONE;
            for i in (1..m).rev() {
                prod = f.mul(prod, h[(i, i - 1)]);
                if prod.is_zero() {
                    break;
                }
                let coef = f.mul(h[(i - 1, m - 1)], prod);
                pm = pm.sub(&polys[i - 1].scale(coef));
            }
            polys.push(pm);
        }
        polys.pop().unwrap()
    }
}

impl std::ops::Index<(usize, usize)> for DenseMatrix {
    type Output = FieldElement;
    fn index(&self, (r, c): (usize, usize)) -> &FieldElement {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for DenseMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut FieldElement {
        &mut self.data[r * self.cols + c]
    }
}

/// Reduced echelon basis of the span of `vectors` (each of length `len`).
pub fn echelon_basis(
    field: PrimeField,
    len: usize,
    vectors: Vec<Vec<FieldElement>>,
) -> Vec<Vec<FieldElement>> {
    if vectors.is_empty() {
        return vectors;
    }
    let mut m = DenseMatrix::from_rows(field, len, vectors);
    let rank = m.rref().len();
    (0..rank).map(|r| m.row(r).to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f7() -> PrimeField {
        PrimeField::new(7).unwrap()
    }

    fn random_matrix(f: PrimeField, rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> DenseMatrix {
        DenseMatrix::from_rows(
            f,
            cols,
            (0..rows)
                .map(|_| (0..cols).map(|_| f.random(rng)).collect())
                .collect(),
        )
    }

    /// Fraction-free elimination on plain integers reduced mod p, written
    /// without the field type.
    fn naive_rank(p: i64, rows: &[Vec<i64>]) -> usize {
        let mut m: Vec<Vec<i64>> = rows.to_vec();
        let (nr, nc) = (m.len(), m.first().map_or(0, |r| r.len()));
        let mut rank = 0;
        for c in 0..nc {
            let Some(pr) = (rank..nr).find(|&r| m[r][c].rem_euclid(p) != 0) else {
                continue;
            };
            m.swap(rank, pr);
            for r in 0..nr {
                if r != rank && m[r][c].rem_euclid(p) != 0 {
                    let (a, b) = (m[rank][c], m[r][c]);
                    let pivot_row = m[rank].clone();
                    for (v, w) in m[r].iter_mut().zip(&pivot_row) {
                        *v = (a * *v - b * w).rem_euclid(p);
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn identity_and_zero_kernels() {
        let f = PrimeField::new(10007).unwrap();
        let (r, k) = DenseMatrix::identity(f, 6).rank_and_kernel();
        assert_eq!((r, k.len()), (6, 0));
        let (r, k) = DenseMatrix::zeros(f, 3, 5).rank_and_kernel();
        assert_eq!((r, k.len()), (0, 5));
        for (i, v) in k.iter().enumerate() {
            assert_eq!(v.iter().position(|c| !c.is_zero()), Some(i));
        }
    }

    #[test]
    fn rank_matches_naive_elimination() {
        let f = f7();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..1000 {
            let m = random_matrix(f, 6, 8, &mut rng);
            let raw: Vec<Vec<i64>> = (0..6)
                .map(|r| m.row(r).iter().map(|c| c.value() as i64).collect())
                .collect();
            let (rank, kernel) = m.rank_and_kernel();
            assert_eq!(rank, naive_rank(7, &raw));
            assert_eq!(rank + kernel.len(), 8);
            for v in &kernel {
                assert!(m.mul_vec(v).iter().all(|c| c.is_zero()));
                let lead = v.iter().position(|c| !c.is_zero()).unwrap();
                assert_eq!(v[lead], FieldElement::ONE);
            }
            let leads: Vec<usize> = kernel
                .iter()
                .map(|v| v.iter().position(|c| !c.is_zero()).unwrap())
                .collect();
            assert!(leads.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn solve_examples() {
        let f = f7();
        let id = DenseMatrix::identity(f, 4);
        let b: Vec<FieldElement> = [3, 1, 4, 1].iter().map(|&v| f.elem(v)).collect();
        assert_eq!(id.solve(&b).unwrap(), b);
        let z = DenseMatrix::zeros(f, 3, 3);
        assert!(z
            .solve(&[FieldElement::ONE, FieldElement::ZERO, FieldElement::ZERO])
            .is_none());

        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut m = random_matrix(f, 5, 5, &mut rng);
        while m.rank() < 5 {
            m = random_matrix(f, 5, 5, &mut rng);
        }
        let mut e1 = vec![FieldElement::ZERO; 5];
        e1[0] = FieldElement::ONE;
        let b = m.mul_vec(&e1);
        assert_eq!(m.solve(&b).unwrap(), e1);
    }

    #[test]
    fn inverse_round_trip() {
        let f = PrimeField::new(10007).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let m = random_matrix(f, 7, 7, &mut rng);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), DenseMatrix::identity(f, 7));
        let mut singular = m.clone();
        for c in 0..7 {
            singular[(6, c)] = singular[(5, c)];
        }
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn charpoly_examples() {
        let f = f7();
        let m = DenseMatrix::from_i64(f, &[&[4]]);
        assert_eq!(m.charpoly(), UniPoly::from_i64(f, &[-4, 1]));
        let id = DenseMatrix::identity(f, 3);
        // (t-1)^3 = t^3 - 3t^2 + 3t - 1
        assert_eq!(id.charpoly(), UniPoly::from_i64(f, &[-1, 3, -3, 1]));
        // companion matrix of t^2 + 3t + 5
        let comp = DenseMatrix::from_i64(f, &[&[0, -5], &[1, -3]]);
        assert_eq!(comp.charpoly(), UniPoly::from_i64(f, &[5, 3, 1]));
    }

    /// Evaluates a univariate polynomial at a square matrix by Horner's rule.
    fn eval_at_matrix(poly: &UniPoly, m: &DenseMatrix) -> DenseMatrix {
        let f = m.field();
        let n = m.rows();
        let mut acc = DenseMatrix::zeros(f, n, n);
        for &c in poly.coeffs().iter().rev() {
            acc = acc.mul(m).add(&DenseMatrix::identity(f, n).scale(c));
        }
        acc
    }

    #[test]
    fn cayley_hamilton() {
        let f = f7();
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..100 {
            let m = random_matrix(f, 4, 4, &mut rng);
            let cp = m.charpoly();
            assert_eq!(cp.degree(), Some(4));
            assert!(cp.is_monic());
            assert!(eval_at_matrix(&cp, &m).is_zero());
        }
    }

    /// det(tI - M) at n+1 points by elimination, then Lagrange interpolation.
    fn charpoly_by_interpolation(m: &DenseMatrix) -> UniPoly {
        let f = m.field();
        let n = m.rows();
        let det = |a: &DenseMatrix| -> FieldElement {
            let mut a = a.clone();
            let mut d = FieldElement::ONE;
            for c in 0..n {
                let Some(pr) = (c..n).find(|&r| !a[(r, c)].is_zero()) else {
                    return FieldElement::ZERO;
                };
                if pr != c {
                    for k in 0..n {
                        let t = a[(pr, k)];
                        a[(pr, k)] = a[(c, k)];
                        a[(c, k)] = t;
                    }
                    d = f.neg(d);
                }
                d = f.mul(d, a[(c, c)]);
                let inv = f.inv(a[(c, c)]).unwrap();
                for r in c + 1..n {
                    let u = f.mul(a[(r, c)], inv);
                    for k in 0..n {
                        let v = f.sub(a[(r, k)], f.mul(u, a[(c, k)]));
                        a[(r, k)] = v;
                    }
                }
            }
            d
        };
        let xs: Vec<FieldElement> = (0..=n as u64).map(|i| f.elem(i)).collect();
        let mut result = UniPoly::zero(f);
        for (i, &xi) in xs.iter().enumerate() {
            let shifted = DenseMatrix::identity(f, n)
                .scale(xi)
                .add(&m.scale(f.from_i64(-1)));
            let yi = det(&shifted);
            let mut basis = UniPoly::constant(f, FieldElement::ONE);
            for (j, &xj) in xs.iter().enumerate() {
                if i != j {
                    let denom = f.inv(f.sub(xi, xj)).unwrap();
                    basis = basis.mul(&UniPoly::linear_root(f, xj)).scale(denom);
                }
            }
            result = result.add(&basis.scale(yi));
        }
        result
    }

    #[test]
    fn charpoly_matches_interpolated_determinant() {
        let f = PrimeField::new(10007).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in [2usize, 5, 9, 16] {
            let mut m = random_matrix(f, n, n, &mut rng);
            // sparsify to exercise zero sub-diagonal paths
            for r in 0..n {
                for c in 0..n {
                    if rng.gen_bool(0.4) {
                        m[(r, c)] = FieldElement::ZERO;
                    }
                }
            }
            assert_eq!(m.charpoly(), charpoly_by_interpolation(&m));
        }
    }

    #[test]
    fn matrix_power_matches_repeated_product() {
        let f = f7();
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let m = random_matrix(f, 4, 4, &mut rng);
        let mut acc = DenseMatrix::identity(f, 4);
        for _ in 0..13 {
            acc = acc.mul(&m);
        }
        assert_eq!(m.pow(13), acc);
    }
}
