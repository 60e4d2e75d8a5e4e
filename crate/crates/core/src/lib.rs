//! Exact mod-2 computations around the length filtration of the Steenrod
//! algebra.
//!
//! The crate works entirely over F₂ and never touches floating point. It
//! provides
//!
//! * multivariate Laurent polynomials over F₂, localized at the product of
//!   all nonzero linear forms, with symmetric-function conversion and the
//!   Dickson invariants ([`f2poly`]);
//! * the mod-2 Steenrod algebra in the admissible basis, its length
//!   filtration and its action on (Laurent, localized) polynomial modules
//!   ([`steenrod`]);
//! * GLₙ(F₂), its group algebra and the Steinberg idempotents, with ranks of
//!   idempotent summands of twisted polynomial modules ([`steinberg`]);
//! * graded-dimension checks of splittings of Madsen–Tillmann spectra
//!   ([`spectra`]);
//! * the μ-class relation table coming from the image of H\*(M(n)) in
//!   H\*(BO(n)) ([`relations`]);
//! * Dyer–Lashof generator bookkeeping for infinite loop spaces ([`looph`]);
//! * the shared text grammar for words and polynomials ([`expr`]).
//!
//! Work that splits over independent degrees runs on rayon when the
//! `parallel` feature is enabled; see [`Execution`].

pub mod error;
pub mod exec;
pub mod expr;
pub mod f2poly;
pub mod gl;
pub mod graded;
pub mod linalg;
pub mod looph;
pub mod relations;
pub mod spectra;
pub mod steenrod;
pub mod steinberg;
pub mod verify;

pub use error::{Error, Result};
pub use exec::Execution;
pub use f2poly::{binom2, LaurentPoly, LocalizedElement, Monomial, SigmaPoly};
pub use gl::GlElement;
pub use graded::GradedDims;
pub use steenrod::{AdmissibleWord, LengthConstraint, SteenrodElement};
pub use steinberg::{GroupAlgebraElement, IdempotentVariant};

/// Version string embedded in cache keys and JSON envelopes.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
