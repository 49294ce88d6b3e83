//! Multivariable signatures and nullities of colored links, computed from
//! generalized Seifert matrices, and the lower bounds they give on
//! splitting and unlinking numbers.
//!
//! ```
//! use splitsig::{build_gss, signature_nullity, splitting_bound_multivariable};
//! use splitsig::{ComponentInvariants, ConwayForm, TorusPoint, DEFAULT_TOL};
//!
//! let form: ConwayForm = "4,3,2".parse().unwrap();
//! let gss = build_gss(&form).unwrap();
//! let r = signature_nullity(&gss, &TorusPoint::all_minus_one(2), DEFAULT_TOL).unwrap();
//! assert_eq!((r.signature, r.nullity), (-2, 0));
//!
//! let report = splitting_bound_multivariable(2, r.signature, r.nullity as u32, &ComponentInvariants::unknots(2)).unwrap();
//! assert_eq!(report.value, 3);
//! ```

pub mod bounds;
pub mod catalog;
pub mod ccomplex;
pub mod error;
pub mod hermitian;
pub mod invariants;
pub mod twobridge;

pub use bounds::{
    linking_number_bound, rank_obstruction, splitting_bound_lt, splitting_bound_multivariable, unlinking_bound,
    BoundKind, BoundReport, ComponentInvariants, ComponentValue, FixtureKind, FixtureRecord, ObstructionSample,
};
pub use catalog::Catalog;
pub use ccomplex::{
    assemble_h, h_at_minus_ones, parse_fraction, GeneralizedSeifertSystem, Sign, SignPattern, TorusPoint, Violation,
};
pub use error::{Error, Result};
pub use hermitian::{
    bordered_delta, bordered_delta_exact, gaussian_hermitian_signature, hermitian_signature,
    integer_symmetric_signature, HermitianMatrix, SignatureResult, DEFAULT_TOL,
};
pub use invariants::{
    estimate_beta, lt_signature_from_multivariable, signature_nullity, torus_scan, InvariantSample, ScanGrid,
};
pub use twobridge::{build_gss, h_minus_one_closed_form, predicted_splitting, ConwayForm};
