//! Exact arithmetic: sparse Laurent polynomials, the two quotient rings the
//! evaluation lattice lives in, and integer matrix normal forms.

mod cyclo;
mod golden;
mod laurent;
mod snf;

pub use cyclo::{classify_omega, Cyclo12, OmegaClass};
pub use golden::{classify_golden, GoldenClass, GoldenValue};
pub use laurent::LaurentPoly;
pub use snf::{determinant, smith_normal_form, symmetric_signature, to_bigint_matrix, SnfResult};
