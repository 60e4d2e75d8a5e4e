use super::poly::{LaurentPoly, Monomial};
use crate::gl::generating_set;

/// The linear form Σ_{i ∈ mask} x_i.
pub fn linear_form(nvars: usize, mask: u32) -> LaurentPoly {
    LaurentPoly::from_terms(
        nvars,
        (0..nvars).filter(|i| mask >> i & 1 == 1).map(|i| Monomial::var(nvars, i)),
    )
}

/// All 2ⁿ − 1 nonzero linear forms, indexed by their coefficient masks.
pub fn nonzero_linear_forms(nvars: usize) -> Vec<LaurentPoly> {
    (1u32..1 << nvars).map(|mask| linear_form(nvars, mask)).collect()
}

/// U(n) = ∏_{0≠α∈F₂ⁿ} (α·x), of degree 2ⁿ − 1.
pub fn euler_form_product(nvars: usize) -> LaurentPoly {
    nonzero_linear_forms(nvars)
        .iter()
        .fold(LaurentPoly::one(nvars), |acc, l| &acc * l)
}

/// The Dickson invariants generating F₂[x₁..xₙ]^{GLₙ(F₂)}, in increasing
/// degree 2ⁿ − 2^{n−1}, …, 2ⁿ − 2, 2ⁿ − 1.
///
/// They are the coefficients of X^{2^i} in ∏_{α∈F₂ⁿ}(X + α·x). Each one is
/// checked against the elementary transvections before being returned.
pub fn dickson_basis(nvars: usize) -> Vec<LaurentPoly> {
    assert!(nvars >= 1, "Dickson invariants need n >= 1");
    // coeffs[k] is the coefficient of X^k
    let mut coeffs = vec![LaurentPoly::one(nvars)];
    for mask in 0u32..1 << nvars {
        let form = linear_form(nvars, mask);
        let mut next = vec![LaurentPoly::zero(nvars); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1] += c;
            next[k] += &(c * &form);
        }
        coeffs = next;
    }
    let out: Vec<LaurentPoly> = (0..nvars).rev().map(|i| coeffs[1 << i].clone()).collect();
    if nvars <= crate::gl::MAX_N {
        for g in generating_set(nvars) {
            for q in &out {
                let image = q.substitute_polynomial(&g).expect("polynomial substitution");
                assert_eq!(&image, q, "Dickson invariant is not GL-invariant");
            }
        }
    }
    out
}
