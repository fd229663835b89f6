//! Gröbner bases over `F_p` and the ideal computations built on them.

mod buchberger;
mod ideal;
mod zerodim;

pub use buchberger::{buchberger, GroebnerBasis};
pub use ideal::IdealBasis;
pub use zerodim::{
    quotient_zerodim, saturate_zerodim, standard_monomials, zerodim_degree, QuotientAlgebra,
    Reducedness, REDUCEDNESS_ATTEMPTS,
};
