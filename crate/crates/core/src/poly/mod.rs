//! Exact multivariate polynomial arithmetic over `Q` and prime fields.

mod field;
mod monomial;
mod order;
mod parse;
mod polynomial;
mod ring;

pub use field::{Coeff, CoefficientField};
pub use monomial::{minimalize, Monomial};
pub use order::MonomialOrder;
pub use parse::parse_polynomial;
pub use polynomial::Polynomial;
pub use ring::{PolyRing, DEFAULT_TERM_CAP, TERM_CAP_ENV};
