//! Exact construction of 12-nodal plane octics of geometric genus 9 with a
//! simply branched degree-8 pencil, over a prime field.

pub mod certificate;
pub mod cli;
pub mod error;
pub mod field;
pub mod groebner;
pub mod linsys;
pub mod matrix;
pub mod pipeline;
pub mod poly;
pub mod selfcheck;
pub mod verify;

pub use error::{Error, Result};
pub use field::{FieldElement, PrimeField, DEFAULT_PRIME};
pub use matrix::DenseMatrix;
pub use poly::{monomial_basis, BinaryForm, Monomial, Ring, SparsePoly, TermOrder, UniPoly};
