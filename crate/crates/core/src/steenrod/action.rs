use std::collections::BTreeSet;

use super::word::SteenrodElement;
use crate::error::{Error, Result};
use crate::f2poly::{binom2, nonzero_linear_forms, LaurentPoly, LocalizedElement, Monomial};
use crate::linalg::{add_assign, toggle};

/// Sq^k on a Laurent polynomial with all exponents ≥ −1.
///
/// Per variable Sq^j(x^m) = C(m, j)·x^{m+j}; monomials are expanded with the
/// Cartan formula over compositions k = j₁ + ⋯ + jₙ. Distinct compositions
/// give distinct monomials, so no cancellation happens inside one monomial.
pub fn sq_poly(k: u32, p: &LaurentPoly) -> Result<LaurentPoly> {
    if let Some(e) = p.min_exponent().filter(|&e| e < -1) {
        return Err(Error::ExponentOutOfRange { exponent: e, minimum: -1 });
    }
    if k == 0 {
        return Ok(p.clone());
    }
    let mut out = BTreeSet::new();
    for m in p.terms() {
        sq_monomial(k as i32, m, &mut out);
    }
    Ok(LaurentPoly::from_set(p.nvars(), out))
}

fn sq_monomial(k: i32, m: &Monomial, out: &mut BTreeSet<Monomial>) {
    let exps = m.exps();
    let n = exps.len();
    // capacity[i]: the most the variables i.. can absorb (x^{-1} is unbounded)
    let mut capacity = vec![0i64; n + 1];
    for i in (0..n).rev() {
        let c = if exps[i] < 0 { i64::MAX / 4 } else { exps[i] as i64 };
        capacity[i] = capacity[i + 1].saturating_add(c);
    }
    if (k as i64) > capacity[0] {
        return;
    }
    let mut cur = exps.to_vec();
    fn rec(i: usize, left: i32, exps: &[i32], capacity: &[i64], cur: &mut Vec<i32>, out: &mut BTreeSet<Monomial>) {
        if i == exps.len() {
            if left == 0 {
                toggle(out, Monomial::new(cur.clone()));
            }
            return;
        }
        let e = exps[i];
        let hi = if e < 0 { left } else { left.min(e) };
        for j in 0..=hi {
            if (left - j) as i64 > capacity[i + 1] {
                continue;
            }
            if !binom2(e as i64, j as i64) {
                continue;
            }
            cur[i] = e + j;
            rec(i + 1, left - j, exps, capacity, cur, out);
        }
        cur[i] = e;
    }
    rec(0, k, exps, &capacity, &mut cur, out);
}

/// (A·B) truncated to degree ≤ cap; both factors have nonnegative degrees.
fn mul_trunc(a: &LaurentPoly, b: &LaurentPoly, cap: i32) -> LaurentPoly {
    let mut out = BTreeSet::new();
    for x in a.terms() {
        for y in b.terms() {
            if x.degree() + y.degree() <= cap {
                toggle(&mut out, x.mul(y));
            }
        }
    }
    LaurentPoly::from_set(a.nvars(), out)
}

fn pow_trunc(a: &LaurentPoly, mut e: u32, cap: i32) -> LaurentPoly {
    let mut base = a.truncate(cap);
    let mut acc = LaurentPoly::one(a.nvars());
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_trunc(&acc, &base, cap);
        }
        e >>= 1;
        if e > 0 {
            base = mul_trunc(&base, &base, cap);
        }
    }
    acc
}

/// Degree ≤ cap part of (Sq(U)/U)^{−m} = ∏_{ℓ≠0} (1 + ℓ)^{−m}.
fn inverse_total_square_factor(nvars: usize, m: u32, cap: i32) -> LaurentPoly {
    // (1 + ℓ)^{-1} = Σ_r ℓ^r
    let mut inv = LaurentPoly::one(nvars);
    for l in nonzero_linear_forms(nvars) {
        let mut geometric = LaurentPoly::one(nvars);
        let mut power = LaurentPoly::one(nvars);
        for _ in 0..cap {
            power = &power * &l;
            geometric += &power;
        }
        inv = mul_trunc(&inv, &geometric, cap);
    }
    pow_trunc(&inv, m, cap)
}

/// Sq^k on f / U^m.
///
/// Uses Sq(f·U^{−m}) = Sq(f)·Sq(U)^{−m} with Sq(U) = U·∏_{ℓ≠0}(1 + ℓ), the
/// inverse expanded as a power series truncated at `degree_cap`. The result
/// is exact when `degree_cap ≥ deg(e) + k`, which is required.
pub fn sq_localized(k: u32, e: &LocalizedElement, degree_cap: i32) -> Result<LocalizedElement> {
    let Some(top) = e.max_degree() else {
        return Ok(e.clone());
    };
    let needed = top + k as i32;
    if degree_cap < needed {
        return Err(Error::CapTooSmall { cap: degree_cap, needed });
    }
    if k == 0 {
        return Ok(e.clone());
    }
    let e = e.normalized();
    let f = e.numerator();
    if e.twist() == 0 {
        return Ok(LocalizedElement::from_poly(sq_poly(k, f)?));
    }
    let series_cap = (k as i32).min(degree_cap - top);
    let w = inverse_total_square_factor(f.nvars(), e.twist(), series_cap);
    let mut out = BTreeSet::new();
    for i in 0..=k {
        let wj = w.component((k - i) as i32);
        if wj.is_zero() {
            continue;
        }
        let si = sq_poly(i, f)?;
        add_assign(&mut out, (&si * &wj).term_set());
    }
    Ok(LocalizedElement::new(LaurentPoly::from_set(f.nvars(), out), e.twist()))
}

/// A module over the Steenrod algebra.
pub trait SteenrodAction: Clone {
    fn sq(&self, k: u32) -> Result<Self>;
    fn add_assign_checked(&mut self, other: &Self) -> Result<()>;
    fn zero_like(&self) -> Self;
}

impl SteenrodAction for LaurentPoly {
    fn sq(&self, k: u32) -> Result<Self> {
        sq_poly(k, self)
    }

    fn add_assign_checked(&mut self, other: &Self) -> Result<()> {
        *self = self.checked_add(other)?;
        Ok(())
    }

    fn zero_like(&self) -> Self {
        LaurentPoly::zero(self.nvars())
    }
}

impl SteenrodAction for LocalizedElement {
    fn sq(&self, k: u32) -> Result<Self> {
        let cap = self.max_degree().unwrap_or(0) + k as i32;
        sq_localized(k, self, cap)
    }

    fn add_assign_checked(&mut self, other: &Self) -> Result<()> {
        *self = self.checked_add(other)?;
        Ok(())
    }

    fn zero_like(&self) -> Self {
        LocalizedElement::from_poly(LaurentPoly::zero(self.nvars()))
    }
}

/// Sq^{i₁}(Sq^{i₂}(⋯Sq^{i_k}(x))), rightmost factor first.
pub fn apply_word<M: SteenrodAction>(word: &[u32], x: &M) -> Result<M> {
    word.iter().rev().try_fold(x.clone(), |acc, &i| acc.sq(i))
}

pub fn apply_element<M: SteenrodAction>(a: &SteenrodElement, x: &M) -> Result<M> {
    let mut out = x.zero_like();
    for w in a.words() {
        out.add_assign_checked(&apply_word(w.entries(), x)?)?;
    }
    Ok(out)
}
