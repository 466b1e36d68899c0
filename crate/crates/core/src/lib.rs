//! Exact computations around the deformed Fermat potential
//! `x_1^a + ... + x_{n+2}^a - x_1 ... x_{n+2}`: Jacobian rings and their local
//! parts, orbifold Hochschild dimensions of the equivariant matrix-factorization
//! category, primitive Hodge numbers of degree-`a` hypersurfaces, the thimble
//! hom table, Koszul matrix factorizations and the degree-bound checks.

pub mod cache;
pub mod error;
pub mod hochschild;
pub mod hodge;
pub mod mfkoszul;
pub mod ring;
pub mod stdbasis;
pub mod symmetry;
pub mod thimbles;
pub mod verify;

pub use cache::Cache;
pub use error::{Error, Result};
pub use hochschild::{
    hochschild_dimensions, sector_contribution, HHOptions, HHReport, SectorReport, REPORT_SCHEMA,
};
pub use hodge::{
    index_bijection_check, primitive_hodge, qh_dimension, BijectionWitness, HodgeReport,
};
pub use mfkoszul::{
    default_splitting, koszul_mf, koszul_mf_for, verify_mf, MatrixFactorization, MfReport,
};
pub use ring::{
    deformed_potential, fermat_potential, partials, Monomial, MonomialOrder, OrderKind, Polynomial,
};
pub use symmetry::{build_group, CharacterClass, DiagonalGroup, GroupElement, GroupVariant};
pub use thimbles::{
    check_degree_bounds, hom_descriptor, hom_graph, DegreeBoundReport, HomDescriptor,
    HomGraphSummary, ThimbleIndex,
};
pub use verify::{verify, Envelope, VerificationReport};
