//! Gröbner bases over the rationals, standard-monomial bases of quotients and
//! local Milnor algebras.

mod groebner;
mod local;
mod quotient;

pub use groebner::{
    groebner, groebner_with_limits, normal_form, GroebnerBasis, GroebnerLimits, Ideal, NormalFormer,
};
pub use local::{local_quotient, local_quotient_basis, LocalMethod, LocalOptions, LocalQuotient};
pub use quotient::{
    quotient_basis, quotient_basis_from, standard_monomials, Locality, QuotientBasis,
};

use crate::error::Result;
use crate::ring::{partials, MonomialOrder, Polynomial};
use crate::symmetry::DiagonalGroup;

/// The ideal of all first partial derivatives of `f`.
pub fn jacobian_ideal(f: &Polynomial, order: MonomialOrder) -> Result<Ideal> {
    Ideal::new(f.nvars(), partials(f), order)
}

/// Dimension of the global (`local = false`) or local Milnor algebra of `f`.
pub fn milnor_number(f: &Polynomial, local: bool, order: MonomialOrder) -> Result<usize> {
    milnor_number_with(f, local, order, &LocalOptions::default())
}

pub fn milnor_number_with(
    f: &Polynomial,
    local: bool,
    order: MonomialOrder,
    opts: &LocalOptions,
) -> Result<usize> {
    let ideal = jacobian_ideal(f, order)?;
    let trivial = DiagonalGroup::zero_sum(f.nvars(), 1);
    if local {
        Ok(local_quotient(&ideal, &trivial, opts)?.dim())
    } else {
        Ok(quotient_basis(&ideal, &trivial)?.dim())
    }
}
