use std::fmt;

use super::poly::{LaurentPoly, Monomial};
use crate::error::{Error, Result};

/// A polynomial in the elementary symmetric polynomials σ₁..σₙ.
///
/// Stored as an ordinary polynomial whose i-th variable stands for σ_{i+1};
/// the weighted degree gives σ_i degree i.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SigmaPoly(LaurentPoly);

impl SigmaPoly {
    pub fn new(p: LaurentPoly) -> Self {
        SigmaPoly(p)
    }

    pub fn zero(n: usize) -> Self {
        SigmaPoly(LaurentPoly::zero(n))
    }

    /// σ_{i+1}.
    pub fn sigma(n: usize, i: usize) -> Self {
        SigmaPoly(LaurentPoly::var(n, i))
    }

    pub fn inner(&self) -> &LaurentPoly {
        &self.0
    }

    pub fn into_inner(self) -> LaurentPoly {
        self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Σ_j j·e_j for one σ-monomial.
    pub fn monomial_degree(m: &Monomial) -> i32 {
        m.exps().iter().enumerate().map(|(j, &e)| (j as i32 + 1) * e).sum()
    }

    /// Common weighted degree, if nonzero and homogeneous.
    pub fn degree(&self) -> Option<i32> {
        let mut degs = self.0.terms().map(Self::monomial_degree);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Expand into the x-variables.
    pub fn to_x(&self) -> LaurentPoly {
        let n = self.nvars();
        let sigmas: Vec<LaurentPoly> = (1..=n).map(|i| elementary_symmetric(n, i)).collect();
        let mut out = LaurentPoly::zero(n);
        for m in self.0.terms() {
            let mut term = LaurentPoly::one(n);
            for (s, &e) in sigmas.iter().zip(m.exps()) {
                if e > 0 {
                    term = &term * &s.pow(e as u32);
                }
            }
            out += &term;
        }
        out
    }

    pub fn checked_add(&self, other: &SigmaPoly) -> Result<SigmaPoly> {
        self.0.checked_add(&other.0).map(SigmaPoly)
    }

    pub fn checked_mul(&self, other: &SigmaPoly) -> Result<SigmaPoly> {
        self.0.checked_mul(&other.0).map(SigmaPoly)
    }

    pub fn pow(&self, e: u32) -> SigmaPoly {
        SigmaPoly(self.0.pow(e))
    }
}

impl fmt::Display for SigmaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_with(f, "s")
    }
}

/// σ_k(x₁, …, xₙ).
pub fn elementary_symmetric(n: usize, k: usize) -> LaurentPoly {
    let terms = (0u32..1 << n).filter(|m| m.count_ones() as usize == k).map(|mask| {
        Monomial::new((0..n).map(|i| (mask >> i & 1) as i32).collect())
    });
    LaurentPoly::from_terms(n, terms)
}

/// Rewrite a symmetric polynomial in σ₁..σₙ by repeatedly cancelling the
/// lex-leading monomial x^a (a₁ ≥ ⋯ ≥ aₙ) against σ₁^{a₁−a₂}⋯σₙ^{aₙ}.
pub fn symmetrize_to_sigma(p: &LaurentPoly) -> Result<SigmaPoly> {
    if let Some(e) = p.min_exponent().filter(|&e| e < 0) {
        return Err(Error::ExponentOutOfRange { exponent: e, minimum: 0 });
    }
    if let Some((i, j)) = p.asymmetry_witness() {
        return Err(Error::NotSymmetric(i + 1, j + 1));
    }
    let n = p.nvars();
    let sigmas: Vec<LaurentPoly> = (1..=n).map(|i| elementary_symmetric(n, i)).collect();
    let mut rest = p.clone();
    let mut out = LaurentPoly::zero(n);
    while let Some(lead) = rest.leading().cloned() {
        let a = lead.exps();
        let c: Vec<i32> = (0..n)
            .map(|i| a[i] - if i + 1 < n { a[i + 1] } else { 0 })
            .collect();
        // a symmetric polynomial's lex leader has nonincreasing exponents
        debug_assert!(c.iter().all(|&e| e >= 0));
        let mut term = LaurentPoly::one(n);
        for (s, &e) in sigmas.iter().zip(&c) {
            if e > 0 {
                term = &term * &s.pow(e as u32);
            }
        }
        rest += &term;
        out += &LaurentPoly::from_monomial(Monomial::new(c));
    }
    Ok(SigmaPoly(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(n: usize, exps: &[&[i32]]) -> SigmaPoly {
        SigmaPoly::new(LaurentPoly::from_exponents(n, exps))
    }

    #[test]
    fn examples() {
        let p = LaurentPoly::from_exponents(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(symmetrize_to_sigma(&p).unwrap(), sig(2, &[&[1, 0]]));
        let w2 = LaurentPoly::from_exponents(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(symmetrize_to_sigma(&w2).unwrap(), sig(2, &[&[2, 0], &[0, 1]]));
        let w3 = LaurentPoly::from_exponents(2, &[&[2, 1], &[1, 2]]);
        assert_eq!(symmetrize_to_sigma(&w3).unwrap(), sig(2, &[&[1, 1]]));
        assert_eq!(symmetrize_to_sigma(&w3).unwrap().to_string(), "s1 s2");
    }

    #[test]
    fn rejects_bad_input() {
        let p = LaurentPoly::from_exponents(2, &[&[2, 0]]);
        assert_eq!(symmetrize_to_sigma(&p), Err(Error::NotSymmetric(1, 2)));
        let q = LaurentPoly::from_exponents(2, &[&[-1, 0], &[0, -1]]);
        assert!(matches!(symmetrize_to_sigma(&q), Err(Error::ExponentOutOfRange { .. })));
    }

    #[test]
    fn round_trip_all_sigma_monomials() {
        for n in 1..=3 {
            for d in 0..=12 {
                for m in super::super::monomials_of_degree(n, d) {
                    let s = SigmaPoly::new(LaurentPoly::from_monomial(m));
                    assert_eq!(symmetrize_to_sigma(&s.to_x()).unwrap(), s);
                }
            }
        }
    }
}
