//! Sparse polynomials over `F_p` in at most four variables.
//!
//! Plane curves live in `F_p[x, y, z]`; affine charts drop `z`, and
//! elimination adds one auxiliary variable in front. Terms are kept sorted
//! in strictly decreasing order for the ring's [`TermOrder`].

mod uni;

use std::cmp::Ordering;
use std::fmt;

pub use uni::{BinaryForm, UniPoly};

use crate::field::{FieldElement, PrimeField};

pub const MAX_VARS: usize = 4;

/// Exponent vector; unused trailing slots are zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct Monomial([u16; MAX_VARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; MAX_VARS]);

    pub fn new(exps: &[u16]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut e = [0; MAX_VARS];
        e[..exps.len()].copy_from_slice(exps);
        Monomial(e)
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0; MAX_VARS];
        e[i] = 1;
        Monomial(e)
    }

    #[inline]
    pub fn exps(&self) -> &[u16; MAX_VARS] {
        &self.0
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u16 {
        self.0[i]
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a += b;
        }
        Monomial(e)
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0).all(|(&a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    #[inline]
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a -= b;
        }
        Some(Monomial(e))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a = (*a).max(b);
        }
        Monomial(e)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0).all(|(&a, b)| a == 0 || b == 0)
    }
}

/// Monomial orders. `Elimination { block }` compares the first `block`
/// variables by graded reverse lex first and breaks ties with graded
/// reverse lex on the remaining variables.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum TermOrder {
    GrevLex,
    Lex,
    Elimination { block: usize },
}

fn grevlex_slice(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    da.cmp(&db).then_with(|| {
        for i in (0..a.len()).rev() {
            if a[i] != b[i] {
                return b[i].cmp(&a[i]);
            }
        }
        Ordering::Equal
    })
}

impl TermOrder {
    #[inline]
    pub fn cmp(self, nvars: usize, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (&a.0[..nvars], &b.0[..nvars]);
        match self {
            TermOrder::GrevLex => grevlex_slice(a, b),
            TermOrder::Lex => a.cmp(b),
            TermOrder::Elimination { block } => grevlex_slice(&a[..block], &b[..block])
                .then_with(|| grevlex_slice(&a[block..], &b[block..])),
        }
    }

    /// Whether the order is compatible with total degree.
    pub fn is_graded(self) -> bool {
        matches!(self, TermOrder::GrevLex)
    }
}

/// Ambient polynomial ring: coefficient field, variable count and order.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Ring {
    pub field: PrimeField,
    pub nvars: usize,
    pub order: TermOrder,
    names: [&'static str; MAX_VARS],
}

impl Ring {
    pub fn new(field: PrimeField, nvars: usize, order: TermOrder) -> Self {
        assert!((1..=MAX_VARS).contains(&nvars));
        let names = match nvars {
            1 => ["t", "", "", ""],
            2 => ["x", "y", "", ""],
            3 => ["x", "y", "z", ""],
            _ => ["u", "x", "y", "z"],
        };
        Ring {
            field,
            nvars,
            order,
            names,
        }
    }

    /// `F_p[x, y, z]` with graded reverse lex.
    pub fn plane(field: PrimeField) -> Self {
        Self::new(field, 3, TermOrder::GrevLex)
    }

    /// The affine chart `z = 1`: `F_p[x, y]` with graded reverse lex.
    pub fn chart(field: PrimeField) -> Self {
        Self::new(field, 2, TermOrder::GrevLex)
    }

    pub fn with_names(mut self, names: &[&'static str]) -> Self {
        assert_eq!(names.len(), self.nvars);
        self.names[..names.len()].copy_from_slice(names);
        self
    }

    pub fn with_order(mut self, order: TermOrder) -> Self {
        self.order = order;
        self
    }

    pub fn names(&self) -> &[&'static str] {
        &self.names[..self.nvars]
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(self.nvars, a, b)
    }

    /// All monomials of total degree `d`, in decreasing term order.
    pub fn monomials_of_degree(&self, d: u16) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = [0u16; MAX_VARS];
        fn rec(n: usize, i: usize, left: u16, cur: &mut [u16; MAX_VARS], out: &mut Vec<Monomial>) {
            if i + 1 == n {
                cur[i] = left;
                out.push(Monomial(*cur));
                cur[i] = 0;
                return;
            }
            for e in 0..=left {
                cur[i] = e;
                rec(n, i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        rec(self.nvars, 0, d, &mut cur, &mut out);
        out.sort_by(|a, b| self.cmp(b, a));
        out
    }
}

/// Monomial basis of forms of degree `d` in `F_p[x, y, z]`, in decreasing
/// graded reverse lex order. Has `(d + 1)(d + 2) / 2` elements.
pub fn monomial_basis(d: u16) -> Vec<Monomial> {
    let field = PrimeField::new_unchecked(3);
    Ring::plane(field).monomials_of_degree(d)
}

/// Sparse polynomial; `terms` strictly decreasing, no zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparsePoly {
    ring: Ring,
    terms: Vec<(Monomial, FieldElement)>,
}

impl SparsePoly {
    pub fn zero(ring: Ring) -> Self {
        SparsePoly {
            ring,
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: Ring, c: FieldElement) -> Self {
        Self::term(ring, Monomial::ONE, c)
    }

    pub fn one(ring: Ring) -> Self {
        Self::constant(ring, FieldElement::ONE)
    }

    pub fn var(ring: Ring, i: usize) -> Self {
        assert!(i < ring.nvars);
        Self::term(ring, Monomial::var(i), FieldElement::ONE)
    }

    pub fn term(ring: Ring, m: Monomial, c: FieldElement) -> Self {
        if c.is_zero() {
            Self::zero(ring)
        } else {
            SparsePoly {
                ring,
                terms: vec![(m, c)],
            }
        }
    }

    /// Sorts, merges duplicates and drops zero coefficients.
    pub fn from_terms(ring: Ring, mut terms: Vec<(Monomial, FieldElement)>) -> Self {
        let f = ring.field;
        terms.sort_unstable_by(|a, b| ring.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, FieldElement)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = f.add(*lc, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        SparsePoly { ring, terms: out }
    }

    /// Trusts the caller that `terms` are already normalized.
    pub(crate) fn from_sorted_terms(ring: Ring, terms: Vec<(Monomial, FieldElement)>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        SparsePoly { ring, terms }
    }

    pub fn from_i64(ring: Ring, terms: &[(&[u16], i64)]) -> Self {
        Self::from_terms(
            ring,
            terms
                .iter()
                .map(|(e, c)| (Monomial::new(e), ring.field.from_i64(*c)))
                .collect(),
        )
    }

    /// Parses expressions such as `3*x^2*y - z + 1` using the ring's variable
    /// names. Only sums of monomial terms are accepted.
    pub fn parse(ring: Ring, s: &str) -> Option<Self> {
        let f = ring.field;
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut terms = Vec::new();
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for ch in cleaned.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() {
                chunks.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
            } else if ch == '+' || ch == '-' {
                neg ^= ch == '-';
            } else {
                cur.push(ch);
            }
        }
        if !cur.is_empty() {
            chunks.push((neg, cur));
        }
        for (neg, chunk) in chunks {
            let mut coeff = FieldElement::ONE;
            let mut m = [0u16; MAX_VARS];
            for factor in chunk.split('*') {
                if let Ok(v) = factor.parse::<i64>() {
                    coeff = f.mul(coeff, f.from_i64(v));
                    continue;
                }
                let (name, exp) = match factor.split_once('^') {
                    Some((n, e)) => (n, e.parse::<u16>().ok()?),
                    None => (factor, 1),
                };
                let idx = ring.names().iter().position(|&n| n == name)?;
                m[idx] += exp;
            }
            if neg {
                coeff = f.neg(coeff);
            }
            terms.push((Monomial(m), coeff));
        }
        Some(Self::from_terms(ring, terms))
    }

    #[inline]
    pub fn ring(&self) -> Ring {
        self.ring
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.ring.field
    }

    #[inline]
    pub fn terms(&self) -> &[(Monomial, FieldElement)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, FieldElement)> {
        self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| *m == Monomial::ONE)
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.0)
    }

    pub fn leading_coeff(&self) -> FieldElement {
        self.terms.first().map_or(FieldElement::ZERO, |t| t.1)
    }

    /// Largest total degree of a term; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.degree() == m0.degree()),
        }
    }

    pub fn coeff(&self, m: &Monomial) -> FieldElement {
        self.terms
            .binary_search_by(|(tm, _)| self.ring.cmp(m, tm))
            .map_or(FieldElement::ZERO, |i| self.terms[i].1)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() || self.leading_coeff() == FieldElement::ONE {
            return self.clone();
        }
        let inv = self.field().inv(self.leading_coeff()).unwrap();
        self.scale(inv)
    }

    pub fn scale(&self, c: FieldElement) -> Self {
        if c.is_zero() {
            return Self::zero(self.ring);
        }
        let f = self.field();
        SparsePoly {
            ring: self.ring,
            terms: self.terms.iter().map(|&(m, a)| (m, f.mul(a, c))).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        let f = self.field();
        SparsePoly {
            ring: self.ring,
            terms: self.terms.iter().map(|&(m, a)| (m, f.neg(a))).collect(),
        }
    }

    /// `self + c * m * other`, by a single merge pass.
    pub fn add_scaled(&self, other: &Self, c: FieldElement, m: &Monomial) -> Self {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        let f = self.field();
        let ring = self.ring;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() || j < b.len() {
            if j == b.len() {
                out.extend_from_slice(&a[i..]);
                break;
            }
            let bm = b[j].0.mul(m);
            if i == a.len() {
                out.push((bm, f.mul(b[j].1, c)));
                j += 1;
                continue;
            }
            match ring.cmp(&a[i].0, &bm) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push((bm, f.mul(b[j].1, c)));
                    j += 1;
                }
                Ordering::Equal => {
                    let v = f.mul_add(a[i].1, b[j].1, c);
                    if !v.is_zero() {
                        out.push((bm, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        SparsePoly { ring, terms: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_scaled(other, FieldElement::ONE, &Monomial::ONE)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_scaled(other, self.field().from_i64(-1), &Monomial::ONE)
    }

    pub fn mul_term(&self, m: &Monomial, c: FieldElement) -> Self {
        Self::zero(self.ring).add_scaled(self, c, m)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        let f = self.field();
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for &(ma, ca) in &self.terms {
            for &(mb, cb) in &other.terms {
                terms.push((ma.mul(&mb), f.mul(ca, cb)));
            }
        }
        Self::from_terms(self.ring, terms)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.ring);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn partial_derivative(&self, var: usize) -> Self {
        assert!(var < self.ring.nvars);
        let f = self.field();
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(var) > 0)
            .map(|&(m, c)| {
                let e = m.exp(var);
                let mut nm = m;
                nm.0[var] -= 1;
                (nm, f.mul(c, f.elem(e as u64)))
            })
            .collect();
        // lowering one exponent can reorder terms under non-graded orders
        Self::from_terms(self.ring, terms)
    }

    pub fn evaluate(&self, point: &[FieldElement]) -> FieldElement {
        assert_eq!(point.len(), self.ring.nvars, "point has wrong arity");
        let f = self.field();
        let maxdeg = self
            .terms
            .iter()
            .map(|(m, _)| *m.0.iter().max().unwrap())
            .max()
            .unwrap_or(0) as usize;
        let powers: Vec<Vec<FieldElement>> = point
            .iter()
            .map(|&x| {
                let mut v = Vec::with_capacity(maxdeg + 1);
                let mut acc = FieldElement::ONE;
                for _ in 0..=maxdeg {
                    v.push(acc);
                    acc = f.mul(acc, x);
                }
                v
            })
            .collect();
        self.terms.iter().fold(FieldElement::ZERO, |acc, (m, c)| {
            let mut t = *c;
            for (i, pw) in powers.iter().enumerate() {
                t = f.mul(t, pw[m.exp(i) as usize]);
            }
            f.add(acc, t)
        })
    }

    /// Re-expresses the polynomial in `target`, sending variable `i` to
    /// variable `var_map[i]`.
    pub fn map_ring(&self, target: Ring, var_map: &[usize]) -> Self {
        assert_eq!(var_map.len(), self.ring.nvars);
        assert_eq!(target.field, self.ring.field);
        let terms = self
            .terms
            .iter()
            .map(|&(m, c)| {
                let mut e = [0u16; MAX_VARS];
                for (i, &j) in var_map.iter().enumerate() {
                    e[j] += m.exp(i);
                }
                (Monomial(e), c)
            })
            .collect();
        Self::from_terms(target, terms)
    }

    /// Sets variable `var` to 1 and drops it from the ring.
    pub fn dehomogenize(&self, var: usize, target: Ring) -> Self {
        assert_eq!(target.nvars + 1, self.ring.nvars);
        let terms = self
            .terms
            .iter()
            .map(|&(m, c)| {
                let mut e = [0u16; MAX_VARS];
                let mut k = 0;
                for i in 0..self.ring.nvars {
                    if i != var {
                        e[k] = m.exp(i);
                        k += 1;
                    }
                }
                (Monomial(e), c)
            })
            .collect();
        Self::from_terms(target, terms)
    }

    /// Homogenizes to total degree `degree` (at least the polynomial's
    /// degree) by inserting a new variable at position `var` of `target`.
    pub fn homogenize(&self, var: usize, target: Ring, degree: u32) -> Self {
        assert_eq!(target.nvars, self.ring.nvars + 1);
        let terms = self
            .terms
            .iter()
            .map(|&(m, c)| {
                assert!(m.degree() <= degree, "homogenization degree too small");
                let mut e = [0u16; MAX_VARS];
                let mut k = 0;
                for (i, slot) in e.iter_mut().enumerate().take(target.nvars) {
                    if i == var {
                        *slot = (degree - m.degree()) as u16;
                    } else {
                        *slot = m.exp(k);
                        k += 1;
                    }
                }
                (Monomial(e), c)
            })
            .collect();
        Self::from_terms(target, terms)
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero());
        let f = self.field();
        let (lm, lc) = divisor.terms[0];
        let lc_inv = f.inv(lc).unwrap();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some(&(m, c)) = rem.terms.first() {
            let qm = m.div(&lm)?;
            let qc = f.mul(c, lc_inv);
            quot.push((qm, qc));
            rem = rem.add_scaled(divisor, f.neg(qc), &qm);
        }
        Some(Self::from_terms(self.ring, quot))
    }

    /// Coefficient vector with respect to an explicit monomial list.
    pub fn coords(&self, basis: &[Monomial]) -> Vec<FieldElement> {
        basis.iter().map(|m| self.coeff(m)).collect()
    }

    pub fn from_coords(ring: Ring, basis: &[Monomial], coords: &[FieldElement]) -> Self {
        Self::from_terms(
            ring,
            basis.iter().copied().zip(coords.iter().copied()).collect(),
        )
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = self.ring.names();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (i, name) in names.iter().enumerate() {
                match m.exp(i) {
                    0 => {}
                    1 => write!(f, "*{name}")?,
                    e => write!(f, "*{name}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn plane(p: u32) -> Ring {
        Ring::plane(PrimeField::new(p).unwrap())
    }

    fn random_form(ring: Ring, d: u16, rng: &mut ChaCha8Rng) -> SparsePoly {
        let f = ring.field;
        SparsePoly::from_terms(
            ring,
            ring.monomials_of_degree(d)
                .into_iter()
                .map(|m| (m, f.random(rng)))
                .collect(),
        )
    }

    fn random_poly(ring: Ring, maxdeg: u16, rng: &mut ChaCha8Rng) -> SparsePoly {
        let mut acc = SparsePoly::zero(ring);
        for d in 0..=maxdeg {
            acc = acc.add(&random_form(ring, d, rng));
        }
        acc
    }

    #[test]
    fn difference_of_squares() {
        let r = plane(10007);
        let a = SparsePoly::parse(r, "x + y").unwrap();
        let b = SparsePoly::parse(r, "x - y").unwrap();
        assert_eq!(a.mul(&b), SparsePoly::parse(r, "x^2 - y^2").unwrap());
        assert!(a.add(&a.scale(r.field.from_i64(-1))).is_zero());
    }

    #[test]
    fn multinomial_square_mod_7() {
        let r = plane(7);
        let s = SparsePoly::parse(r, "x + y + z").unwrap();
        // multinomial coefficients: 2!/(1!1!) = 2 on mixed terms
        let expect = SparsePoly::parse(r, "x^2 + y^2 + z^2 + 2*x*y + 2*x*z + 2*y*z").unwrap();
        assert_eq!(s.mul(&s), expect);
    }

    #[test]
    fn derivative_examples() {
        let r = plane(10007);
        let x8 = SparsePoly::parse(r, "x^8").unwrap();
        assert_eq!(
            x8.partial_derivative(0),
            SparsePoly::parse(r, "8*x^7").unwrap()
        );
        let x5 = SparsePoly::parse(r, "x^5").unwrap();
        assert!(x5.partial_derivative(1).is_zero());
    }

    #[test]
    fn evaluate_examples() {
        let r = plane(10007);
        let f = r.field;
        let pt = [f.elem(1), f.elem(2), f.elem(3)];
        assert_eq!(
            SparsePoly::parse(r, "x*y*z").unwrap().evaluate(&pt).value(),
            6
        );
        let q = SparsePoly::parse(r, "x^2 + y^2 + z^2").unwrap();
        assert_eq!(q.evaluate(&[FieldElement::ONE; 3]).value(), 3);
    }

    #[test]
    fn homogeneous_scaling() {
        let r = plane(10007);
        let f = r.field;
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let g = random_form(r, 8, &mut rng);
        let pt = [f.elem(3), f.elem(17), f.elem(400)];
        let lambda = f.elem(12);
        let scaled: Vec<FieldElement> = pt.iter().map(|&c| f.mul(c, lambda)).collect();
        assert_eq!(
            g.evaluate(&scaled),
            f.mul(f.pow(lambda, 8), g.evaluate(&pt))
        );
    }

    #[test]
    fn monomial_basis_sizes() {
        assert_eq!(monomial_basis(5).len(), 21);
        assert_eq!(monomial_basis(8).len(), 45);
        assert_eq!(monomial_basis(0), vec![Monomial::ONE]);
        for d in 0..=20u16 {
            let n = d as usize;
            assert_eq!(monomial_basis(d).len(), (n + 1) * (n + 2) / 2);
        }
        // grevlex with x > y > z: x^2 > xy > y^2 > xz > yz > z^2
        let names: Vec<[u16; 3]> = monomial_basis(2)
            .iter()
            .map(|m| [m.exp(0), m.exp(1), m.exp(2)])
            .collect();
        assert_eq!(
            names,
            vec![
                [2, 0, 0],
                [1, 1, 0],
                [0, 2, 0],
                [1, 0, 1],
                [0, 1, 1],
                [0, 0, 2]
            ]
        );
    }

    #[test]
    fn euler_identity() {
        let r = plane(10007);
        let f = r.field;
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for k in 0..100 {
            let d = if k % 2 == 0 { 5 } else { 8 };
            let g = random_form(r, d, &mut rng);
            let mut lhs = SparsePoly::zero(r);
            for v in 0..3 {
                lhs = lhs.add(&SparsePoly::var(r, v).mul(&g.partial_derivative(v)));
            }
            assert_eq!(lhs, g.scale(f.elem(d as u64)));
        }
    }

    #[test]
    fn homogenize_round_trip() {
        let field = PrimeField::new(10007).unwrap();
        let (pl, ch) = (Ring::plane(field), Ring::chart(field));
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let g = random_form(pl, 6, &mut rng);
        let a = g.dehomogenize(2, ch);
        assert_eq!(a.homogenize(2, pl, 6), g);
    }

    #[test]
    fn exact_division() {
        let r = plane(10007);
        let a = SparsePoly::parse(r, "x^2 - 3*y*z + z^2").unwrap();
        let b = SparsePoly::parse(r, "x*y + 5*z^2").unwrap();
        assert_eq!(a.mul(&b).div_exact(&b).unwrap(), a);
        assert!(a
            .add(&SparsePoly::parse(r, "x").unwrap())
            .mul(&b)
            .add(&SparsePoly::one(r))
            .div_exact(&b)
            .is_none());
    }

    #[test]
    fn elimination_order_prefers_block() {
        let field = PrimeField::new(7).unwrap();
        let r = Ring::new(field, 3, TermOrder::Elimination { block: 1 });
        // u beats any power of the other variables
        assert_eq!(
            r.cmp(&Monomial::new(&[1, 0, 0]), &Monomial::new(&[0, 9, 9])),
            Ordering::Greater
        );
        let lex = Ring::new(field, 3, TermOrder::Lex);
        assert_eq!(
            lex.cmp(&Monomial::new(&[0, 1, 0]), &Monomial::new(&[0, 0, 5])),
            Ordering::Greater
        );
    }

    proptest! {
        #[test]
        fn ring_axioms_mod_7(seed in any::<u64>()) {
            let r = plane(7);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (a, b, c) = (random_poly(r, 3, &mut rng), random_poly(r, 3, &mut rng), random_poly(r, 3, &mut rng));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).sub(&b), a);
        }

        #[test]
        fn evaluation_is_multiplicative(seed in any::<u64>()) {
            let r = plane(10007);
            let f = r.field;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (a, b) = (random_poly(r, 4, &mut rng), random_poly(r, 4, &mut rng));
            let pt = [f.random(&mut rng), f.random(&mut rng), f.random(&mut rng)];
            prop_assert_eq!(a.mul(&b).evaluate(&pt), f.mul(a.evaluate(&pt), b.evaluate(&pt)));
            prop_assert_eq!(a.add(&b).evaluate(&pt), f.add(a.evaluate(&pt), b.evaluate(&pt)));
        }

        #[test]
        fn display_parses_back(seed in any::<u64>()) {
            let r = plane(10007);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let a = random_poly(r, 3, &mut rng);
            prop_assert_eq!(SparsePoly::parse(r, &a.to_string()).unwrap(), a);
        }
    }
}
