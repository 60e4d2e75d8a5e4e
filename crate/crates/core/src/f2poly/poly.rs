use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use crate::error::{Error, Result};
use crate::gl::GlElement;
use crate::linalg::{add_assign, toggle};

/// A Laurent monomial x₁^{m₁}⋯xₙ^{mₙ}.
///
/// Ordered graded-lexicographically: first by total degree, then by the
/// exponent vector, so on homogeneous input the order is plain lex.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    degree: i32,
    exps: Vec<i32>,
}

impl Monomial {
    pub fn new(exps: Vec<i32>) -> Self {
        Monomial {
            degree: exps.iter().sum(),
            exps,
        }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial::new(vec![0; nvars])
    }

    /// The variable with 0-based index `i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial::new(exps)
    }

    pub fn exps(&self) -> &[i32] {
        &self.exps
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn min_exponent(&self) -> Option<i32> {
        self.exps.iter().copied().min()
    }

    pub fn is_polynomial(&self) -> bool {
        self.exps.iter().all(|&e| e >= 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            degree: self.degree + other.degree,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, factor: i32) -> Monomial {
        Monomial {
            degree: self.degree * factor,
            exps: self.exps.iter().map(|e| e * factor).collect(),
        }
    }

    pub fn swap_vars(&self, i: usize, j: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.swap(i, j);
        Monomial { degree: self.degree, exps }
    }

    pub(crate) fn fmt_with(&self, f: &mut fmt::Formatter<'_>, prefix: &str) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{prefix}{}", i + 1)?;
            } else {
                write!(f, "{prefix}{}^{e}", i + 1)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// All monomials of degree `d` with nonnegative exponents, ascending.
pub fn monomials_of_degree(nvars: usize, d: i32) -> Vec<Monomial> {
    fn rec(nvars: usize, left: i32, cur: &mut Vec<i32>, out: &mut Vec<Monomial>) {
        if cur.len() + 1 == nvars {
            cur.push(left);
            out.push(Monomial::new(cur.clone()));
            cur.pop();
            return;
        }
        for e in 0..=left {
            cur.push(e);
            rec(nvars, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if d < 0 {
        return out;
    }
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(nvars, d, &mut Vec::with_capacity(nvars), &mut out);
    out.sort();
    out
}

/// An F₂-linear combination of Laurent monomials in a fixed number of
/// variables. Addition is symmetric difference of supports.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeSet<Monomial>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: BTreeSet::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_monomial(Monomial::one(nvars))
    }

    /// The variable x_{i+1}.
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::from_monomial(Monomial::var(nvars, i))
    }

    pub fn from_monomial(m: Monomial) -> Self {
        LaurentPoly {
            nvars: m.nvars(),
            terms: BTreeSet::from([m]),
        }
    }

    /// Sum of the given monomials; repeated monomials cancel in pairs.
    pub fn from_terms<I: IntoIterator<Item = Monomial>>(nvars: usize, terms: I) -> Self {
        let mut p = LaurentPoly::zero(nvars);
        for m in terms {
            assert_eq!(m.nvars(), nvars, "monomial has the wrong variable count");
            toggle(&mut p.terms, m);
        }
        p
    }

    /// Convenience constructor from exponent vectors.
    pub fn from_exponents(nvars: usize, exps: &[&[i32]]) -> Self {
        Self::from_terms(nvars, exps.iter().map(|e| Monomial::new(e.to_vec())))
    }

    pub(crate) fn from_set(nvars: usize, terms: BTreeSet<Monomial>) -> Self {
        LaurentPoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.first().is_some_and(|m| m.exps.iter().all(|&e| e == 0))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = &Monomial> {
        self.terms.iter()
    }

    pub fn term_set(&self) -> &BTreeSet<Monomial> {
        &self.terms
    }

    pub fn into_term_set(self) -> BTreeSet<Monomial> {
        self.terms
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains(m)
    }

    /// Largest monomial in graded-lex order.
    pub fn leading(&self) -> Option<&Monomial> {
        self.terms.last()
    }

    /// The common degree of all terms, if nonzero and homogeneous.
    pub fn degree(&self) -> Option<i32> {
        let lo = self.terms.first()?.degree;
        let hi = self.terms.last()?.degree;
        (lo == hi).then_some(lo)
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.last().map(|m| m.degree)
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.first().map(|m| m.degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    pub fn homogeneous_components(&self) -> BTreeMap<i32, LaurentPoly> {
        let mut out: BTreeMap<i32, LaurentPoly> = BTreeMap::new();
        for m in &self.terms {
            out.entry(m.degree)
                .or_insert_with(|| LaurentPoly::zero(self.nvars))
                .terms
                .insert(m.clone());
        }
        out
    }

    pub fn component(&self, d: i32) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|m| m.degree == d).cloned().collect(),
        }
    }

    /// Drop all terms of degree above `max_degree`.
    pub fn truncate(&self, max_degree: i32) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|m| m.degree <= max_degree).cloned().collect(),
        }
    }

    pub fn min_exponent(&self) -> Option<i32> {
        self.terms.iter().filter_map(Monomial::min_exponent).min()
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.iter().all(Monomial::is_polynomial)
    }

    fn check_vars(&self, other: &LaurentPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableCountMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        add_assign(&mut out.terms, &other.terms);
        Ok(out)
    }

    pub fn checked_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_vars(other)?;
        let mut terms = BTreeSet::new();
        for a in &self.terms {
            for b in &other.terms {
                toggle(&mut terms, a.mul(b));
            }
        }
        Ok(LaurentPoly { nvars: self.nvars, terms })
    }

    pub fn mul_monomial(&self, m: &Monomial) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|t| t.mul(m)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> LaurentPoly {
        let mut base = self.clone();
        let mut acc = LaurentPoly::one(self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        acc
    }

    /// Frobenius: (Σ m)² = Σ m².
    pub fn square(&self) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|m| m.scale(2)).collect(),
        }
    }

    pub fn swap_vars(&self, i: usize, j: usize) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|m| m.swap_vars(i, j)).collect(),
        }
    }

    /// A transposition that changes `self`, if any.
    pub fn asymmetry_witness(&self) -> Option<(usize, usize)> {
        (0..self.nvars.saturating_sub(1))
            .map(|i| (i, i + 1))
            .find(|&(i, j)| self.swap_vars(i, j) != *self)
    }

    pub fn is_symmetric(&self) -> bool {
        self.asymmetry_witness().is_none()
    }

    /// Linear substitution x_j ↦ Σ_i g_{ij} x_i on an ordinary polynomial.
    pub fn substitute_polynomial(&self, g: &GlElement) -> Result<LaurentPoly> {
        if g.n() != self.nvars {
            return Err(Error::VariableCountMismatch { left: g.n(), right: self.nvars });
        }
        if let Some(e) = self.min_exponent().filter(|&e| e < 0) {
            return Err(Error::ExponentOutOfRange { exponent: e, minimum: 0 });
        }
        let mut cache = PowerCache::new(g);
        let mut out = BTreeSet::new();
        for m in &self.terms {
            let image = cache.monomial_image(m);
            add_assign(&mut out, &image.terms);
        }
        Ok(LaurentPoly { nvars: self.nvars, terms: out })
    }

    pub(crate) fn fmt_with(&self, f: &mut fmt::Formatter<'_>, prefix: &str) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, m) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            m.fmt_with(f, prefix)?;
        }
        Ok(())
    }
}

/// Powers of the substituted variables for one matrix.
pub(crate) struct PowerCache<'a> {
    g: &'a GlElement,
    powers: HashMap<(usize, i32), LaurentPoly>,
}

impl<'a> PowerCache<'a> {
    pub(crate) fn new(g: &'a GlElement) -> Self {
        PowerCache { g, powers: HashMap::new() }
    }

    /// (Σ_i g_{ij} x_i)^e for e ≥ 0, via Frobenius on the binary digits of e.
    fn form_power(&mut self, j: usize, e: i32) -> LaurentPoly {
        if let Some(p) = self.powers.get(&(j, e)) {
            return p.clone();
        }
        let n = self.g.n();
        let col = self.g.column_mask(j);
        let mut acc = LaurentPoly::one(n);
        let mut bit = 0;
        while e >> bit > 0 {
            if e >> bit & 1 == 1 {
                let frob = LaurentPoly::from_terms(
                    n,
                    (0..n).filter(|i| col >> i & 1 == 1).map(|i| {
                        let mut exps = vec![0; n];
                        exps[i] = 1 << bit;
                        Monomial::new(exps)
                    }),
                );
                acc = &acc * &frob;
            }
            bit += 1;
        }
        self.powers.insert((j, e), acc.clone());
        acc
    }

    pub(crate) fn monomial_image(&mut self, m: &Monomial) -> LaurentPoly {
        let n = self.g.n();
        let mut acc = LaurentPoly::one(n);
        for (j, &e) in m.exps().iter().enumerate() {
            if e != 0 {
                acc = &acc * &self.form_power(j, e);
            }
        }
        acc
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, "x")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, "x")
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    /// Panics on a variable-count mismatch; use [`LaurentPoly::checked_add`]
    /// to get an error instead.
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("LaurentPoly addition")
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        add_assign(&mut self.terms, &rhs.terms);
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    /// Panics on a variable-count mismatch; use [`LaurentPoly::checked_mul`]
    /// to get an error instead.
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("LaurentPoly multiplication")
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> LaurentPoly {
        LaurentPoly::var(n, i - 1)
    }

    #[test]
    fn ring_examples() {
        let s = &x(2, 1) + &x(2, 2);
        assert!((&s + &s).is_zero());
        assert_eq!(&s * &s, LaurentPoly::from_exponents(2, &[&[2, 0], &[0, 2]]));
        let x1x2 = &x(2, 1) * &x(2, 2);
        assert_eq!(&s * &x1x2, LaurentPoly::from_exponents(2, &[&[2, 1], &[1, 2]]));
    }

    #[test]
    fn mismatch_is_an_error() {
        assert_eq!(
            x(2, 1).checked_add(&x(3, 1)),
            Err(Error::VariableCountMismatch { left: 2, right: 3 })
        );
        assert!(x(2, 1).checked_mul(&x(3, 1)).is_err());
    }

    #[test]
    fn display() {
        let p = LaurentPoly::from_exponents(2, &[&[-1, -1], &[2, 1], &[0, 0]]);
        assert_eq!(p.to_string(), "x1^2 x2 + 1 + x1^-1 x2^-1");
        assert_eq!(LaurentPoly::zero(3).to_string(), "0");
    }

    #[test]
    fn substitution_examples() {
        let id = GlElement::identity(2);
        let p = LaurentPoly::from_exponents(2, &[&[2, 1], &[0, 3]]);
        assert_eq!(p.substitute_polynomial(&id).unwrap(), p);
        let swap = GlElement::permutation(&[1, 0]);
        let m = LaurentPoly::from_exponents(2, &[&[2, 1]]);
        assert_eq!(
            m.substitute_polynomial(&swap).unwrap(),
            LaurentPoly::from_exponents(2, &[&[1, 2]])
        );
        let g = GlElement::from_entries(&[&[1, 1], &[0, 1]]).unwrap();
        assert_eq!(x(2, 2).substitute_polynomial(&g).unwrap(), &x(2, 1) + &x(2, 2));
        assert!(LaurentPoly::from_exponents(2, &[&[-1, 0]]).substitute_polynomial(&g).is_err());
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(0, 0).len(), 1);
        assert!(monomials_of_degree(2, -1).is_empty());
    }
}
