//! Signature-based Gröbner bases with checkable criteria.
//!
//! The crate provides an incremental signature engine ([`f5`]), a plain
//! Buchberger engine with the Gebauer–Möller update ([`baseline`]) used as an
//! oracle, explicit syzygy certificates for every discarded critical pair
//! ([`syzygy`]) and a checker for a stronger normalization test
//! ([`falsifier`]).

pub mod baseline;
pub mod corpus;
pub mod error;
pub mod f5;
pub mod falsifier;
pub mod field;
pub mod ideal;
pub mod monomial;
mod parse;
pub mod poly;
pub mod signature;
pub mod stats;
pub mod syzygy;

pub use baseline::{buchberger_basis, ideal_equal, BaselineOptions, BaselineRun};
pub use error::{Error, Result};
pub use f5::{
    incremental_basis, top_reduction_signed, BasisState, CriticalPair, EngineOptions, F5Run,
    PairOrder, Rejection, RejectionKind, RewriteRule, RuleTarget, Side, Stage, TopReduction,
};
pub use falsifier::{completely_normalized, scan_run, ImprovedCheckReport, Normalization};
pub use field::{Field, PrimeField, Rationals, DEFAULT_PRIME};
pub use ideal::{parse_ideal, FieldSpec, IdealSpec};
pub use monomial::{Monomial, MonomialOrder, OrderKind};
pub use poly::{PolyRing, Polynomial};
pub use signature::{sig_compare, sig_mul, spol_labeled, LabeledPoly, Signature, Witness};
pub use stats::Stats;
pub use syzygy::{
    certify_rejection, check_t_representation, evaluate, mht, principal_syzygy, Certificate,
    ModuleVector, TRepVerdict, TRepViolation, TRepresentation,
};
