//! Exact computation of Long-Moody representations of colored braid groups
//! and twisted Alexander invariants of braid closures.
//!
//! Everything is exact: integers, rationals, prime fields and cyclotomic
//! fields, with Laurent polynomial rings over them. The main entry points are
//! [`longmoody::LongMoody`] for the matrices of the construction and
//! [`alexander::verify_closure_formula`] for comparing the twisted Alexander
//! invariant of a braid closure with the determinant quotient built from the
//! reduced construction.

pub mod alexander;
pub mod braid;
pub mod error;
pub mod fox;
pub mod freegroup;
pub mod longmoody;
pub mod matrix;
pub mod phi;
pub mod presets;
pub mod rep;
pub mod rings;

pub use alexander::{
    alexander_matrix, closure_formula_rhs, closure_presentation, minor_consistency_check,
    twisted_alexander, verify_closure_formula, ClosureFormulaReport, GeneratorImages,
    GroupPresentation, InvariantValue,
};
pub use braid::{
    act, closure_component_count, exponent_sum, is_colored, permutation, BraidWord, Coloring,
};
pub use error::{Error, ParseError, Result};
pub use fox::{check_fundamental_formula, fox_derivative};
pub use freegroup::{parse_word, Alphabet, AlphabetKind, FreeWord, GroupRingElement};
pub use longmoody::{lm_reduced, lm_unreduced, twisted_burau, LongMoody};
pub use matrix::RingMatrix;
pub use phi::{evaluate_phi, AbelianizationMap, ColoredAugmentation};
pub use rep::Representation;
pub use rings::{parse_element, Ring, RingDescriptor, RingElement};
