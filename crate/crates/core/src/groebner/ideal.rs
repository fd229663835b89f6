//! Ideals given by generators, and the operations built on elimination:
//! intersection, quotient, saturation.

use crate::poly::{Ring, SparsePoly, TermOrder, MAX_VARS};

use super::buchberger::{buchberger, GroebnerBasis};

/// A finitely generated ideal. Generators are nonzero and monic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealBasis {
    ring: Ring,
    gens: Vec<SparsePoly>,
}

impl IdealBasis {
    pub fn new(ring: Ring, gens: Vec<SparsePoly>) -> Self {
        let gens = gens
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| {
                assert_eq!(g.ring(), ring, "generator from another ring");
                g.monic()
            })
            .collect();
        IdealBasis { ring, gens }
    }

    pub fn unit(ring: Ring) -> Self {
        Self::new(ring, vec![SparsePoly::one(ring)])
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn gens(&self) -> &[SparsePoly] {
        &self.gens
    }

    pub fn groebner(&self) -> GroebnerBasis {
        buchberger(self.ring, &self.gens)
    }

    pub fn from_groebner(gb: &GroebnerBasis) -> Self {
        Self::new(gb.ring(), gb.elements().to_vec())
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Self::new(self.ring, gens)
    }

    pub fn product(&self, other: &Self) -> Self {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        Self::new(self.ring, gens)
    }

    /// `self ⊆ other`, tested by reducing each generator modulo `other`.
    pub fn is_contained_in(&self, other: &GroebnerBasis) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    /// Ideal equality by mutual containment of generators.
    pub fn equals(&self, other: &Self) -> bool {
        self.is_contained_in(&other.groebner()) && other.is_contained_in(&self.groebner())
    }

    /// `self ∩ F_p[kept variables]`, computed with a block order that puts
    /// the eliminated variables first. The result lives in the same ring.
    pub fn eliminate(&self, eliminate: &[usize]) -> Self {
        let n = self.ring.nvars;
        assert!(eliminate.iter().all(|&v| v < n));
        if eliminate.is_empty() {
            return self.clone();
        }
        // new position of each variable: eliminated ones first
        let mut order: Vec<usize> = eliminate.to_vec();
        order.extend((0..n).filter(|v| !eliminate.contains(v)));
        let mut to_new = [0usize; MAX_VARS];
        for (new, &old) in order.iter().enumerate() {
            to_new[old] = new;
        }
        let block = Ring::new(
            self.ring.field,
            n,
            TermOrder::Elimination {
                block: eliminate.len(),
            },
        );
        let gens: Vec<SparsePoly> = self
            .gens
            .iter()
            .map(|g| g.map_ring(block, &to_new[..n]))
            .collect();
        let gb = buchberger(block, &gens);
        let k = eliminate.len();
        let kept: Vec<SparsePoly> = gb
            .elements()
            .iter()
            .filter(|g| g.terms().iter().all(|(m, _)| (0..k).all(|i| m.exp(i) == 0)))
            .map(|g| g.map_ring(self.ring, &order))
            .collect();
        Self::new(self.ring, kept)
    }

    /// `self ∩ other` via `u·I + (1 - u)·J` and elimination of `u`.
    pub fn intersect(&self, other: &Self) -> Self {
        assert_eq!(self.ring, other.ring);
        let n = self.ring.nvars;
        assert!(n < MAX_VARS, "no room for the auxiliary variable");
        let ext = Ring::new(self.ring.field, n + 1, TermOrder::Elimination { block: 1 });
        let shift: Vec<usize> = (1..=n).collect();
        let u = SparsePoly::var(ext, 0);
        let one_minus_u = SparsePoly::one(ext).sub(&u);
        let mut gens: Vec<SparsePoly> = self
            .gens
            .iter()
            .map(|g| u.mul(&g.map_ring(ext, &shift)))
            .collect();
        gens.extend(
            other
                .gens
                .iter()
                .map(|g| one_minus_u.mul(&g.map_ring(ext, &shift))),
        );
        let gb = buchberger(ext, &gens);
        // u does not occur in the kept elements, so dropping it is exact
        let kept: Vec<SparsePoly> = gb
            .elements()
            .iter()
            .filter(|g| g.terms().iter().all(|(m, _)| m.exp(0) == 0))
            .map(|g| g.dehomogenize(0, self.ring))
            .collect();
        Self::new(self.ring, kept)
    }

    /// `(I : h) = (I ∩ (h)) / h`.
    pub fn quotient_by(&self, h: &SparsePoly) -> Self {
        assert!(!h.is_zero(), "quotient by the zero polynomial");
        if h.is_constant() {
            return self.clone();
        }
        let principal = IdealBasis::new(self.ring, vec![h.clone()]);
        let meet = self.intersect(&principal);
        let gens = meet
            .gens
            .iter()
            .map(|g| g.div_exact(h).expect("element of (h) is divisible by h"))
            .collect();
        Self::new(self.ring, gens)
    }

    /// `(I : J) = ∩_j (I : j)` over the generators of `J`.
    pub fn quotient(&self, other: &Self) -> Self {
        assert_eq!(self.ring, other.ring);
        let mut acc: Option<IdealBasis> = None;
        for j in &other.gens {
            let q = self.quotient_by(j);
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q),
            });
        }
        acc.unwrap_or_else(|| Self::unit(self.ring))
    }

    /// `(I : J^∞)` by iterating quotients until the reduced Gröbner basis
    /// stops changing.
    pub fn saturate(&self, other: &Self) -> Self {
        let mut cur = self.clone();
        let mut cur_gb = cur.groebner();
        loop {
            let next = cur.quotient(other);
            let next_gb = next.groebner();
            if next_gb == cur_gb {
                return IdealBasis::from_groebner(&cur_gb);
            }
            cur = IdealBasis::from_groebner(&next_gb);
            cur_gb = next_gb;
        }
    }
}
