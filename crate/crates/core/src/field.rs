//! Arithmetic in the prime field `F_p`.
//!
//! Elements are plain `u32` residues wrapped in [`FieldElement`]; all
//! arithmetic goes through a [`PrimeField`] context so that values stay
//! small and `Copy`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The prime used throughout the construction unless overridden.
pub const DEFAULT_PRIME: u32 = 10007;

/// A residue class modulo the ambient prime, always in `[0, p)`.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Wraps a value the caller has already reduced modulo p.
    #[inline]
    pub(crate) fn from_reduced(v: u32) -> Self {
        FieldElement(v)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The field `Z/pZ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    /// Builds `F_p` after checking that `p` is prime and that it does not
    /// divide the degrees 5 and 8 used by the construction.
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p == 2 || p == 5 {
            return Err(Error::ExcludedCharacteristic(p));
        }
        if p > (1 << 31) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    /// Any prime below 2^31, including the excluded characteristics.
    /// Only meant for arithmetic unit tests.
    pub fn new_unchecked(p: u32) -> Self {
        debug_assert!(is_prime(p));
        PrimeField { p }
    }

    #[inline]
    pub fn modulus(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn elem(self, v: u64) -> FieldElement {
        FieldElement((v % self.p as u64) as u32)
    }

    #[inline]
    pub fn from_i64(self, v: i64) -> FieldElement {
        FieldElement(v.rem_euclid(self.p as i64) as u32)
    }

    /// Symmetric representative in `(-p/2, p/2]`.
    pub fn to_signed(self, a: FieldElement) -> i64 {
        let v = a.0 as i64;
        if v > self.p as i64 / 2 {
            v - self.p as i64
        } else {
            v
        }
    }

    #[inline]
    pub fn add(self, a: FieldElement, b: FieldElement) -> FieldElement {
        let s = a.0 as u64 + b.0 as u64;
        let p = self.p as u64;
        FieldElement(if s >= p { (s - p) as u32 } else { s as u32 })
    }

    #[inline]
    pub fn sub(self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 >= b.0 {
            FieldElement(a.0 - b.0)
        } else {
            FieldElement((a.0 as u64 + self.p as u64 - b.0 as u64) as u32)
        }
    }

    #[inline]
    pub fn neg(self, a: FieldElement) -> FieldElement {
        if a.0 == 0 {
            a
        } else {
            FieldElement(self.p - a.0)
        }
    }

    #[inline]
    pub fn mul(self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32)
    }

    /// `a + b * c`
    #[inline]
    pub fn mul_add(self, a: FieldElement, b: FieldElement, c: FieldElement) -> FieldElement {
        FieldElement(((a.0 as u64 + b.0 as u64 * c.0 as u64) % self.p as u64) as u32)
    }

    pub fn pow(self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inv(self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let (mut r0, mut r1) = (self.p as i64, a.0 as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(self.from_i64(t0))
    }

    pub fn div(self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Euler's criterion; zero counts as a square.
    pub fn is_square(self, a: FieldElement) -> bool {
        a.is_zero() || self.pow(a, (self.p as u64 - 1) / 2) == FieldElement::ONE
    }

    pub fn random<R: rand::Rng + ?Sized>(self, rng: &mut R) -> FieldElement {
        FieldElement(rng.gen_range(0..self.p))
    }

    pub fn random_nonzero<R: rand::Rng + ?Sized>(self, rng: &mut R) -> FieldElement {
        FieldElement(rng.gen_range(1..self.p))
    }
}

/// Deterministic trial division; the moduli in scope are tiny.
pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}
