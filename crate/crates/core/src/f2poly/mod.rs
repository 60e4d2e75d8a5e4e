//! Polynomials and Laurent polynomials over F₂.

mod binom;
mod dickson;
mod localized;
mod poly;
mod symmetric;

pub use binom::binom2;
pub use dickson::{dickson_basis, euler_form_product, linear_form, nonzero_linear_forms};
pub use localized::{substitute_linear, LocalizedElement};
pub use poly::{monomials_of_degree, LaurentPoly, Monomial};
pub use symmetric::{elementary_symmetric, symmetrize_to_sigma, SigmaPoly};
