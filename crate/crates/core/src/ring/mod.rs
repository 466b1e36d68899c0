//! Exact multivariate polynomial arithmetic over the rationals.

mod monomial;
mod order;
mod poly;
mod potential;

pub use monomial::Monomial;
pub use order::{MonomialOrder, OrderKind};
pub use poly::{rat, ratio, Coeff, Polynomial};
pub use potential::{check_params, deformed_potential, fermat_potential, partials};
