//! The mod-2 Steenrod algebra in the admissible basis and its action on
//! polynomial modules.

mod action;
mod adem;
mod closure;
mod symmetric;
mod word;

pub use action::{apply_element, apply_word, sq_localized, sq_poly, SteenrodAction};
pub use adem::adem_normalize;
pub use closure::an_closure;
pub use symmetric::{SymmetricPoly, MAX_SYMMETRIC_VARS};
pub use word::{admissible_basis, ag_series, ag_series_with, AdmissibleWord, LengthConstraint, SteenrodElement};
