//! Univariate polynomials and binary forms over `F_p`.

use std::fmt;

use crate::error::Result;
use crate::field::{FieldElement, PrimeField};

/// Dense univariate polynomial, coefficients from the constant term up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    field: PrimeField,
    coeffs: Vec<FieldElement>,
}

impl UniPoly {
    pub fn new(field: PrimeField, mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { field, coeffs }
    }

    pub fn from_i64(field: PrimeField, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: PrimeField) -> Self {
        UniPoly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(field: PrimeField, c: FieldElement) -> Self {
        Self::new(field, vec![c])
    }

    /// `t - c`
    pub fn linear_root(field: PrimeField, c: FieldElement) -> Self {
        Self::new(field, vec![field.neg(c), FieldElement::ONE])
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> FieldElement {
        self.coeffs.last().copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == FieldElement::ONE
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let f = self.field;
        let inv = f
            .inv(self.leading_coeff())
            .expect("nonzero leading coefficient");
        self.scale(inv)
    }

    pub fn scale(&self, c: FieldElement) -> Self {
        let f = self.field;
        Self::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &Vec<FieldElement>, i: usize| v.get(i).copied().unwrap_or(FieldElement::ZERO);
        Self::new(
            f,
            (0..n)
                .map(|i| f.add(get(&self.coeffs, i), get(&other.coeffs, i)))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let f = self.field;
        self.add(&other.scale(f.from_i64(-1)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field);
        }
        let f = self.field;
        let mut out = vec![FieldElement::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.mul_add(out[i + j], a, b);
            }
        }
        Self::new(f, out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let f = self.field;
        let dd = divisor.coeffs.len() - 1;
        let lead_inv = f.inv(divisor.leading_coeff()).unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(f), self.clone());
        }
        let mut quot = vec![FieldElement::ZERO; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = f.mul(rem[k + dd], lead_inv);
            quot[k] = c;
            if c.is_zero() {
                continue;
            }
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = f.sub(rem[k + j], f.mul(c, b));
            }
        }
        rem.truncate(dd);
        (Self::new(f, quot), Self::new(f, rem))
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        let f = self.field;
        Self::new(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| f.mul(c, f.elem(i as u64)))
                .collect(),
        )
    }

    /// Squarefree iff `gcd(a, a')` is constant. A vanishing derivative means
    /// `a` is a p-th power (or constant) and is reported as not squarefree
    /// unless `a` is a nonzero constant.
    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => {
                let d = self.derivative();
                if d.is_zero() {
                    return false;
                }
                self.gcd(&d).degree() == Some(0)
            }
        }
    }

    pub fn eval(&self, x: FieldElement) -> FieldElement {
        let f = self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElement::ZERO, |acc, &c| f.mul_add(c, acc, x))
    }

    /// `self^e mod modulus`, used for Frobenius computations.
    pub fn pow_mod(&self, mut e: u64, modulus: &Self) -> Self {
        let mut base = self.div_rem(modulus).1;
        let mut acc = Self::constant(self.field, FieldElement::ONE)
            .div_rem(modulus)
            .1;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).div_rem(modulus).1;
            }
            base = base.mul(&base).div_rem(modulus).1;
            e >>= 1;
        }
        acc
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*t")?,
                _ => write!(f, "{c}*t^{i}")?,
            }
        }
        Ok(())
    }
}

/// Homogeneous polynomial in `(t0, t1)`. `coeffs[i]` multiplies
/// `t0^i * t1^(degree - i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm {
    field: PrimeField,
    degree: usize,
    coeffs: Vec<FieldElement>,
}

impl BinaryForm {
    pub fn new(field: PrimeField, degree: usize, coeffs: Vec<FieldElement>) -> Self {
        assert_eq!(
            coeffs.len(),
            degree + 1,
            "binary form needs degree + 1 coefficients"
        );
        BinaryForm {
            field,
            degree,
            coeffs,
        }
    }

    /// Homogenizes `b(t)` with `t = t0 / t1` to the target degree.
    pub fn from_unipoly(b: &UniPoly, degree: usize) -> Result<Self> {
        if b.degree().is_some_and(|d| d > degree) {
            return Err(crate::error::Error::Schema(format!(
                "cannot homogenize a degree {} polynomial to degree {degree}",
                b.degree().unwrap()
            )));
        }
        let mut coeffs = b.coeffs().to_vec();
        coeffs.resize(degree + 1, FieldElement::ZERO);
        Ok(BinaryForm {
            field: b.field(),
            degree,
            coeffs,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The affine part `B(t, 1)`.
    pub fn dehomogenize(&self) -> UniPoly {
        UniPoly::new(self.field, self.coeffs.clone())
    }

    pub fn eval(&self, t0: FieldElement, t1: FieldElement) -> FieldElement {
        let f = self.field;
        let mut acc = FieldElement::ZERO;
        for (i, &c) in self.coeffs.iter().enumerate() {
            let term = f.mul(
                c,
                f.mul(f.pow(t0, i as u64), f.pow(t1, (self.degree - i) as u64)),
            );
            acc = f.add(acc, term);
        }
        acc
    }

    /// Distinct roots on `P^1`: the affine part is squarefree and the point
    /// `(1 : 0)` is at most a simple root.
    pub fn is_squarefree(&self) -> bool {
        let affine = self.dehomogenize();
        match affine.degree() {
            None => false,
            Some(d) => d + 1 >= self.degree && affine.is_squarefree(),
        }
    }

    /// `B(a*t0 + b*t1, c*t0 + d*t1)`.
    pub fn substitute(
        &self,
        a: FieldElement,
        b: FieldElement,
        c: FieldElement,
        d: FieldElement,
    ) -> Self {
        let f = self.field;
        // work with univariate polys in s = t0 (t1 = 1) and track degree
        let l0 = UniPoly::new(f, vec![b, a]);
        let l1 = UniPoly::new(f, vec![d, c]);
        let mut out = UniPoly::zero(f);
        for (i, &coef) in self.coeffs.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            let mut term = UniPoly::constant(f, coef);
            for _ in 0..i {
                term = term.mul(&l0);
            }
            for _ in 0..self.degree - i {
                term = term.mul(&l1);
            }
            out = out.add(&term);
        }
        BinaryForm::from_unipoly(&out, self.degree).expect("degree preserved by substitution")
    }

    /// True if `other = lambda * self` for some nonzero scalar.
    pub fn is_proportional(&self, other: &Self) -> bool {
        if self.degree != other.degree {
            return false;
        }
        let f = self.field;
        let Some(k) = self.coeffs.iter().position(|c| !c.is_zero()) else {
            return other.is_zero();
        };
        if other.coeffs[k].is_zero() {
            return false;
        }
        let lambda = f.div(other.coeffs[k], self.coeffs[k]).unwrap();
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .all(|(&a, &b)| f.mul(a, lambda) == b)
    }
}
