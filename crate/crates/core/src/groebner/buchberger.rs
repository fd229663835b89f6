//! Buchberger's algorithm with the Gebauer–Möller pair criteria.

use std::cmp::Ordering;

use crate::field::FieldElement;
use crate::poly::{Monomial, Ring, SparsePoly};

/// A reduced Gröbner basis. Elements are monic and sorted by increasing
/// leading monomial, so two bases of the same ideal in the same ring compare
/// equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    elements: Vec<SparsePoly>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn elements(&self) -> &[SparsePoly] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.leading_monomial().unwrap())
            .collect()
    }

    /// True for the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(|g| g.is_constant())
    }

    /// Remainder of `f` after full division by the basis.
    pub fn normal_form(&self, f: &SparsePoly) -> SparsePoly {
        assert_eq!(f.ring(), self.ring, "normal form across rings");
        let refs: Vec<&SparsePoly> = self.elements.iter().collect();
        reduce(f, &refs, true)
    }

    pub fn contains(&self, f: &SparsePoly) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Re-checks the Gröbner property: every S-polynomial of a pair of
    /// elements reduces to zero. Also checks reducedness.
    pub fn certify(&self) -> bool {
        for (i, g) in self.elements.iter().enumerate() {
            if g.leading_coeff() != FieldElement::ONE {
                return false;
            }
            for (j, h) in self.elements.iter().enumerate() {
                if i == j {
                    continue;
                }
                let lm = h.leading_monomial().unwrap();
                if g.terms().iter().any(|(m, _)| lm.divides(m)) {
                    return false;
                }
            }
        }
        for i in 0..self.elements.len() {
            for j in i + 1..self.elements.len() {
                let s = s_polynomial(&self.elements[i], &self.elements[j]);
                if !self.normal_form(&s).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

pub(crate) fn s_polynomial(f: &SparsePoly, g: &SparsePoly) -> SparsePoly {
    let field = f.field();
    let (fm, gm) = (f.leading_monomial().unwrap(), g.leading_monomial().unwrap());
    let l = fm.lcm(&gm);
    let fi = field.inv(f.leading_coeff()).unwrap();
    let gi = field.inv(g.leading_coeff()).unwrap();
    let a = f.mul_term(&l.div(&fm).unwrap(), fi);
    a.add_scaled(g, field.neg(gi), &l.div(&gm).unwrap())
}

/// Divides `f` by `divisors`. With `full = false` only the leading term is
/// reduced until it is no longer divisible.
pub(crate) fn reduce(f: &SparsePoly, divisors: &[&SparsePoly], full: bool) -> SparsePoly {
    let ring = f.ring();
    let field = ring.field;
    let lms: Vec<(Monomial, FieldElement)> = divisors
        .iter()
        .map(|g| {
            (
                g.leading_monomial().unwrap(),
                field.inv(g.leading_coeff()).unwrap(),
            )
        })
        .collect();
    let mut work = f.clone();
    let mut rem: Vec<(Monomial, FieldElement)> = Vec::new();
    // `work` keeps only the not-yet-examined part; finished terms go to `rem`.
    while let Some(&(m, c)) = work.terms().first() {
        match lms.iter().position(|(lm, _)| lm.divides(&m)) {
            Some(k) => {
                let q = m.div(&lms[k].0).unwrap();
                let coef = field.neg(field.mul(c, lms[k].1));
                work = work.add_scaled(divisors[k], coef, &q);
            }
            None => {
                if !full {
                    break;
                }
                rem.push((m, c));
                let mut terms = work.into_terms();
                terms.remove(0);
                work = SparsePoly::from_sorted_terms(ring, terms);
            }
        }
    }
    if full {
        SparsePoly::from_sorted_terms(ring, rem)
    } else {
        work
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Computes the reduced Gröbner basis of the ideal generated by `gens`.
///
/// Pairs are processed by the normal strategy: smallest total degree of the
/// lcm first, then smallest lcm in the term order, then by index. The result
/// depends only on the generators and their order.
pub fn buchberger(ring: Ring, gens: &[SparsePoly]) -> GroebnerBasis {
    let mut basis: Vec<SparsePoly> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    // seed with the generators, each reduced against what is already there
    for g in gens.iter().filter(|g| !g.is_zero()) {
        assert_eq!(g.ring(), ring, "generator from another ring");
        let refs: Vec<&SparsePoly> = basis
            .iter()
            .zip(&active)
            .filter(|(_, &a)| a)
            .map(|(b, _)| b)
            .collect();
        let h = reduce(g, &refs, false);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return unit_basis(ring);
        }
        insert(&mut basis, &mut active, &mut pairs, h.monic());
    }

    while let Some(k) = select_pair(&pairs, ring) {
        let pair = pairs.swap_remove(k);
        let s = s_polynomial(&basis[pair.i], &basis[pair.j]);
        let refs: Vec<&SparsePoly> = basis
            .iter()
            .zip(&active)
            .filter(|(_, &a)| a)
            .map(|(b, _)| b)
            .collect();
        let h = reduce(&s, &refs, false);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return unit_basis(ring);
        }
        insert(&mut basis, &mut active, &mut pairs, h.monic());
    }

    let kept: Vec<SparsePoly> = basis
        .into_iter()
        .zip(active)
        .filter(|(_, a)| *a)
        .map(|(b, _)| b)
        .collect();
    interreduce(ring, kept)
}

fn unit_basis(ring: Ring) -> GroebnerBasis {
    GroebnerBasis {
        ring,
        elements: vec![SparsePoly::one(ring)],
    }
}

fn select_pair(pairs: &[Pair], ring: Ring) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (k, p) in pairs.iter().enumerate() {
        best = match best {
            None => Some(k),
            Some(b) => {
                let q = &pairs[b];
                let ord = p
                    .lcm
                    .degree()
                    .cmp(&q.lcm.degree())
                    .then_with(|| ring.cmp(&p.lcm, &q.lcm))
                    .then_with(|| (p.j, p.i).cmp(&(q.j, q.i)));
                if ord == Ordering::Less {
                    Some(k)
                } else {
                    Some(b)
                }
            }
        };
    }
    best
}

/// Gebauer–Möller update for a new basis element.
fn insert(
    basis: &mut Vec<SparsePoly>,
    active: &mut Vec<bool>,
    pairs: &mut Vec<Pair>,
    h: SparsePoly,
) {
    let hm = h.leading_monomial().unwrap();
    let new = basis.len();

    let candidates: Vec<(usize, Monomial, bool)> = (0..basis.len())
        .filter(|&i| active[i])
        .map(|i| {
            let gm = basis[i].leading_monomial().unwrap();
            (i, hm.lcm(&gm), hm.is_coprime(&gm))
        })
        .collect();

    // chain criterion among the new pairs, processed in index order: a
    // non-coprime pair is dropped when another pair that is still pending or
    // kept has an lcm dividing its own
    let mut keep = vec![true; candidates.len()];
    for a in 0..candidates.len() {
        let (_, la, coprime) = candidates[a];
        if coprime {
            continue;
        }
        if (0..candidates.len()).any(|b| b != a && keep[b] && candidates[b].1.divides(&la)) {
            keep[a] = false;
        }
    }

    // old pairs made redundant by h
    pairs.retain(|p| {
        !(hm.divides(&p.lcm)
            && hm.lcm(&basis[p.i].leading_monomial().unwrap()) != p.lcm
            && hm.lcm(&basis[p.j].leading_monomial().unwrap()) != p.lcm)
    });

    for (k, &(i, lcm, coprime)) in candidates.iter().enumerate() {
        if keep[k] && !coprime {
            pairs.push(Pair { i, j: new, lcm });
        }
    }

    for i in 0..basis.len() {
        if active[i] && hm.divides(&basis[i].leading_monomial().unwrap()) {
            active[i] = false;
        }
    }
    basis.push(h);
    active.push(true);
}

/// Minimalizes and fully reduces a Gröbner basis.
fn interreduce(ring: Ring, mut elems: Vec<SparsePoly>) -> GroebnerBasis {
    elems.sort_by(|a, b| {
        ring.cmp(
            &a.leading_monomial().unwrap(),
            &b.leading_monomial().unwrap(),
        )
    });
    let mut minimal: Vec<SparsePoly> = Vec::new();
    for g in elems {
        let gm = g.leading_monomial().unwrap();
        if minimal
            .iter()
            .any(|h| h.leading_monomial().unwrap().divides(&gm))
        {
            continue;
        }
        minimal.push(g);
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<&SparsePoly> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != k)
            .map(|(_, g)| g)
            .collect();
        let g = &minimal[k];
        let lead = SparsePoly::term(ring, g.leading_monomial().unwrap(), g.leading_coeff());
        let tail = g.sub(&lead);
        let r = reduce(&tail, &others, true);
        reduced.push(lead.add(&r).monic());
    }
    GroebnerBasis {
        ring,
        elements: reduced,
    }
}
