//! Exact scalars: cyclotomic numbers, Laurent polynomials, number theory.

pub mod cyclo;
pub mod embed;
pub mod laurent;
pub mod linalg;
pub mod mixed;
pub mod nt;

pub type BigRat = num_rational::BigRational;

pub use cyclo::{parse_cyc, sum_all, CycError, CycField, CycQ};
pub use laurent::LaurentZ;
pub use mixed::MixedScalar;
