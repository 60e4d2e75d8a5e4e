use std::fmt;

use super::dickson::{euler_form_product, nonzero_linear_forms};
use super::poly::{LaurentPoly, Monomial};
use crate::error::{Error, Result};
use crate::gl::GlElement;

/// numerator / U(n)^twist, where U(n) is the product of all nonzero linear
/// forms in n variables.
///
/// Elements are not canonicalized; equality is tested by cross-multiplying.
#[derive(Clone, Debug)]
pub struct LocalizedElement {
    numerator: LaurentPoly,
    twist: u32,
}

/// U(n) / (x₁⋯xₙ): the product of the nonzero forms that are not coordinates.
fn cofactor(nvars: usize) -> LaurentPoly {
    nonzero_linear_forms(nvars)
        .into_iter()
        .filter(|l| l.len() > 1)
        .fold(LaurentPoly::one(nvars), |acc, l| &acc * &l)
}

impl LocalizedElement {
    pub fn new(numerator: LaurentPoly, twist: u32) -> Self {
        LocalizedElement { numerator, twist }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        LocalizedElement { numerator: p, twist: 0 }
    }

    /// Rewrite a Laurent polynomial with a polynomial numerator, using
    /// x^m = x^{m+t}·R^t / U^t with R = U/(x₁⋯xₙ) and t the deepest negative
    /// exponent.
    pub fn from_laurent(p: &LaurentPoly) -> Self {
        let t = p.min_exponent().map_or(0, |e| (-e).max(0));
        if t == 0 {
            return Self::from_poly(p.clone());
        }
        let n = p.nvars();
        let shift = Monomial::new(vec![t; n]);
        let shifted = p.mul_monomial(&shift);
        let r = cofactor(n).pow(t as u32);
        LocalizedElement {
            numerator: &shifted * &r,
            twist: t as u32,
        }
    }

    /// U(n)^k for an integer k, as a localized element.
    pub fn euler_power(nvars: usize, k: i32) -> Self {
        if k >= 0 {
            Self::from_poly(euler_form_product(nvars).pow(k as u32))
        } else {
            LocalizedElement {
                numerator: LaurentPoly::one(nvars),
                twist: (-k) as u32,
            }
        }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.numerator
    }

    pub fn twist(&self) -> u32 {
        self.twist
    }

    pub fn nvars(&self) -> usize {
        self.numerator.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    fn euler_degree(&self) -> i32 {
        (1i32 << self.nvars()) - 1
    }

    /// Degree of the numerator minus twist·(2ⁿ − 1), when homogeneous.
    pub fn degree(&self) -> Option<i32> {
        self.numerator
            .degree()
            .map(|d| d - self.twist as i32 * self.euler_degree())
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.numerator
            .max_degree()
            .map(|d| d - self.twist as i32 * self.euler_degree())
    }

    /// Same element with a polynomial numerator.
    pub fn normalized(&self) -> Self {
        if self.numerator.is_polynomial() {
            return self.clone();
        }
        let inner = Self::from_laurent(&self.numerator);
        LocalizedElement {
            numerator: inner.numerator,
            twist: inner.twist + self.twist,
        }
    }

    /// Same element written over U^twist, twist ≥ self.twist.
    pub fn with_twist(&self, twist: u32) -> Self {
        assert!(twist >= self.twist);
        let u = euler_form_product(self.nvars()).pow(twist - self.twist);
        LocalizedElement {
            numerator: &self.numerator * &u,
            twist,
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.nvars() != other.nvars() {
            return Err(Error::VariableCountMismatch { left: self.nvars(), right: other.nvars() });
        }
        let t = self.twist.max(other.twist);
        let a = self.with_twist(t);
        let b = other.with_twist(t);
        Ok(LocalizedElement {
            numerator: a.numerator.checked_add(&b.numerator)?,
            twist: t,
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        Ok(LocalizedElement {
            numerator: self.numerator.checked_mul(&other.numerator)?,
            twist: self.twist + other.twist,
        })
    }

    /// The linear substitution x_j ↦ Σ_i g_{ij} x_i, using g·U = U.
    pub fn substitute_linear(&self, g: &GlElement) -> Result<Self> {
        let norm = self.normalized();
        Ok(LocalizedElement {
            numerator: norm.numerator.substitute_polynomial(g)?,
            twist: norm.twist,
        })
    }

    /// The numerator, provided the twist is zero.
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        (self.twist == 0).then_some(&self.numerator)
    }
}

/// Substitute into a Laurent polynomial, landing in the localized ring.
pub fn substitute_linear(g: &GlElement, p: &LaurentPoly) -> Result<LocalizedElement> {
    LocalizedElement::from_laurent(p).substitute_linear(g)
}

impl PartialEq for LocalizedElement {
    /// numerator₁·U^{t₂} = numerator₂·U^{t₁}.
    fn eq(&self, other: &Self) -> bool {
        if self.nvars() != other.nvars() {
            return false;
        }
        let t = self.twist.max(other.twist);
        self.with_twist(t).numerator == other.with_twist(t).numerator
    }
}

impl Eq for LocalizedElement {}

impl fmt::Display for LocalizedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.twist {
            0 => write!(f, "{}", self.numerator),
            t => write!(f, "({}) / U^{t}", self.numerator),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laurent_round_trip() {
        // x1^-1 x2^-1 = (x1 + x2) / U(2)
        let p = LaurentPoly::from_exponents(2, &[&[-1, -1]]);
        let e = LocalizedElement::from_laurent(&p);
        assert_eq!(e.twist(), 1);
        assert_eq!(e.numerator(), &LaurentPoly::from_exponents(2, &[&[1, 0], &[0, 1]]));
        assert_eq!(e.degree(), Some(-2));
        assert_eq!(e, LocalizedElement::new(p, 0));
    }

    #[test]
    fn cross_multiplied_equality() {
        let u = euler_form_product(2);
        let a = LocalizedElement::new(u.clone(), 1);
        assert_eq!(a, LocalizedElement::from_poly(LaurentPoly::one(2)));
        let b = LocalizedElement::new(&u * &u, 3);
        assert_eq!(b, LocalizedElement::new(LaurentPoly::one(2), 1));
        assert_ne!(b, LocalizedElement::from_poly(LaurentPoly::one(2)));
    }

    #[test]
    fn substitution_of_inverse() {
        // x2^-1 under x2 -> x1 + x2 should become 1/(x1 + x2)
        let g = GlElement::from_entries(&[&[1, 1], &[0, 1]]).unwrap();
        let p = LaurentPoly::from_exponents(2, &[&[0, -1]]);
        let image = substitute_linear(&g, &p).unwrap();
        let l = LaurentPoly::from_exponents(2, &[&[1, 0], &[0, 1]]);
        let check = image.checked_mul(&LocalizedElement::from_poly(l)).unwrap();
        assert_eq!(check, LocalizedElement::from_poly(LaurentPoly::one(2)));
    }

    #[test]
    fn ring_operations_respect_equality() {
        let p = LaurentPoly::from_exponents(2, &[&[-1, 2], &[3, -1]]);
        let q = LaurentPoly::from_exponents(2, &[&[-1, -1], &[0, 1]]);
        let a = LocalizedElement::from_laurent(&p);
        let b = LocalizedElement::from_laurent(&q);
        let a2 = a.with_twist(a.twist() + 2);
        assert_eq!(a.checked_mul(&b).unwrap(), a2.checked_mul(&b).unwrap());
        assert_eq!(a.checked_add(&b).unwrap(), a2.checked_add(&b).unwrap());
        assert_eq!(a.checked_mul(&b).unwrap(), LocalizedElement::from_laurent(&(&p * &q)));
    }
}
