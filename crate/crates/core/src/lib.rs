//! Exact decision procedures for semifree circle-action isotropy data.
//!
//! The central object is a finite signed multiset of fixed-point
//! representations at a common complex dimension `n` ([`IsotropyData`]).
//! The crate evaluates the localization identities such data must satisfy
//! to come from a closed stably complex manifold, decides realizability by
//! the binomial multiplicity criterion, produces an explicit witness built
//! from sphere powers and representation spheres, and computes bordism
//! classes both in `Z[t, tbar]` and in the polynomial ring on the 2-sphere
//! class.
//!
//! Everything is exact: arbitrary-precision integers for counts and
//! coefficients, exact rationals for the moment-system solver, no floating
//! point anywhere. All values are immutable after construction and all
//! operations are pure, so they can be shared freely across threads.

pub mod bordism;
pub mod chern;
pub mod data;
pub mod error;
pub mod identities;
pub mod json;
pub mod oracle;
pub mod realization;

pub use bordism::{
    bordism_class, graded_bordism_class, kclass_to_bordism, BordismPolynomial,
    ComponentNotRealizable, NotInImage,
};
pub use chern::MultiIndex;
pub use data::{IsotropyData, KClass, MultiplicityTable, RepClass, Sign, SignedPoint};
pub use error::Error;
pub use identities::{
    check_identities, identity_i, localization_value, moment_q, solve_moments,
    vandermonde_det, IdentityReport, LaurentMonomial, RationalMatrix,
};
pub use realization::{
    realize, rep_sphere_data, sphere_power_data, verify_witness, witness_to_data, Defect,
    NotRealizable, Witness,
};

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
pub use num_traits;
