//! The group algebra F₂[GLₙ(F₂)], Steinberg idempotents and the ranks of
//! their actions on twisted polynomial modules U(n)^k·F₂[x₁..xₙ].

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

pub use crate::gl::{enumerate_gl, group_order, GlElement};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::f2poly::{monomials_of_degree, LaurentPoly, Monomial};
use crate::gl::{borel_subgroup, permutation_matrices, MAX_N};
use crate::graded::GradedDims;
use crate::linalg::{toggle, BitMatrix};

/// An F₂-linear combination of elements of GLₙ(F₂).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroupAlgebraElement {
    n: usize,
    support: BTreeSet<GlElement>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize) -> Self {
        GroupAlgebraElement { n, support: BTreeSet::new() }
    }

    pub fn delta(g: GlElement) -> Self {
        GroupAlgebraElement { n: g.n(), support: BTreeSet::from([g]) }
    }

    pub fn one(n: usize) -> Self {
        Self::delta(GlElement::identity(n))
    }

    /// Sum of the given elements; repeats cancel in pairs.
    pub fn sum_of<I: IntoIterator<Item = GlElement>>(n: usize, elements: I) -> Self {
        let mut support = BTreeSet::new();
        for g in elements {
            assert_eq!(g.n(), n, "matrix size mismatch");
            toggle(&mut support, g);
        }
        GroupAlgebraElement { n, support }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn support(&self) -> impl Iterator<Item = &GlElement> {
        self.support.iter()
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn contains(&self, g: &GlElement) -> bool {
        self.support.contains(g)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut support = self.support.clone();
        for g in &other.support {
            toggle(&mut support, *g);
        }
        Ok(GroupAlgebraElement { n: self.n, support })
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::SizeMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    /// Embed into F₂[GL_{n+1}] through the upper-left block.
    pub fn embed_upper_left(&self) -> Self {
        GroupAlgebraElement {
            n: self.n + 1,
            support: self.support.iter().map(GlElement::embed_upper_left).collect(),
        }
    }

    pub fn is_idempotent(&self) -> bool {
        ga_multiply(self, self).is_ok_and(|sq| sq == *self)
    }
}

impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.support.is_empty() {
            return write!(f, "0");
        }
        for (k, g) in self.support.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "[{g}]")?;
        }
        Ok(())
    }
}

/// Convolution product over F₂.
pub fn ga_multiply(a: &GroupAlgebraElement, b: &GroupAlgebraElement) -> Result<GroupAlgebraElement> {
    a.check(b)?;
    // count products in a hash map first; the support can be large for n = 4
    let mut parity: HashMap<GlElement, bool> = HashMap::new();
    for g in &a.support {
        for h in &b.support {
            *parity.entry(g.mul(h)).or_default() ^= true;
        }
    }
    Ok(GroupAlgebraElement {
        n: a.n,
        support: parity.into_iter().filter_map(|(g, odd)| odd.then_some(g)).collect(),
    })
}

/// Which product order builds the idempotent.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IdempotentVariant {
    /// Σ̄·B̄: sum of permutation matrices times sum of the Borel subgroup.
    Standard,
    /// B̄·Σ̄.
    Conjugate,
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_N {
        return Err(Error::SizeTooLarge { n, max: MAX_N });
    }
    if n == 0 {
        return Err(Error::SizeOutOfRange(0));
    }
    Ok(())
}

/// The Steinberg idempotent of F₂[GLₙ(F₂)], 1 ≤ n ≤ 4.
///
/// Over F₂ the Borel subgroup is the upper unitriangular group and its index
/// in GLₙ(F₂) is odd, so no normalizing scalar is needed. The result is
/// squared and compared before being returned.
pub fn steinberg_idempotent(n: usize, variant: IdempotentVariant) -> Result<GroupAlgebraElement> {
    check_size(n)?;
    let sigma = GroupAlgebraElement::sum_of(n, permutation_matrices(n));
    let borel = GroupAlgebraElement::sum_of(n, borel_subgroup(n));
    let e = match variant {
        IdempotentVariant::Standard => ga_multiply(&sigma, &borel)?,
        IdempotentVariant::Conjugate => ga_multiply(&borel, &sigma)?,
    };
    if !e.is_idempotent() {
        return Err(Error::NotIdempotent(n));
    }
    Ok(e)
}

/// Outcome of checking embed(e_{n−1})·eₙ = eₙ.
#[derive(Clone, Debug, Serialize)]
pub struct BlockIdentityReport {
    pub n: usize,
    pub pass: bool,
    /// Size of the symmetric difference between the two sides on failure.
    pub witness_size: Option<usize>,
    /// One group element on which the two sides differ.
    pub witness: Option<String>,
}

pub fn verify_block_identity(n: usize) -> Result<BlockIdentityReport> {
    if !(2..=MAX_N).contains(&n) {
        return Err(Error::SizeOutOfRange(n));
    }
    let e = steinberg_idempotent(n, IdempotentVariant::Standard)?;
    let smaller = steinberg_idempotent(n - 1, IdempotentVariant::Standard)?.embed_upper_left();
    let product = ga_multiply(&smaller, &e)?;
    let diff = product.add(&e)?;
    let witness = diff.support().next().map(ToString::to_string);
    Ok(BlockIdentityReport {
        n,
        pass: diff.is_empty(),
        witness_size: (!diff.is_empty()).then_some(diff.len()),
        witness,
    })
}

/// The graded piece U(n)^k·F₂[x₁..xₙ] in degree d has basis U^k·x^m with
/// m ≥ 0 and |m| = d − k(2ⁿ − 1).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ThomSlice {
    pub n: usize,
    pub twist: i32,
    pub degree: i32,
}

impl ThomSlice {
    pub fn polynomial_degree(&self) -> i32 {
        self.degree - self.twist * ((1 << self.n) - 1)
    }

    pub fn basis(&self) -> Vec<Monomial> {
        monomials_of_degree(self.n, self.polynomial_degree())
    }
}

/// Matrix of Σ_{g ∈ support(a)} g acting on a slice, in the monomial basis.
///
/// Column c is the image of the c-th basis monomial. Since g·U = U, the
/// Thom factor U^k passes through unchanged.
pub fn action_matrix(a: &GroupAlgebraElement, slice: ThomSlice) -> Result<BitMatrix> {
    if a.n() != slice.n {
        return Err(Error::SizeMismatch { left: a.n(), right: slice.n });
    }
    let basis = slice.basis();
    let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut matrix = BitMatrix::zeros(basis.len(), basis.len());
    for g in a.support() {
        for (c, m) in basis.iter().enumerate() {
            let image = LaurentPoly::from_monomial(m.clone()).substitute_polynomial(g)?;
            for t in image.terms() {
                matrix.flip(index[t], c);
            }
        }
    }
    Ok(matrix)
}

/// dims[d] = rank of eₙ on the degree-d slice of U(n)^k·F₂[x], d in dmin..=dmax.
pub fn summand_dims(n: usize, twist: i32, dmin: i32, dmax: i32) -> Result<GradedDims> {
    summand_dims_with(Execution::default(), n, twist, dmin, dmax)
}

pub fn summand_dims_with(exec: Execution, n: usize, twist: i32, dmin: i32, dmax: i32) -> Result<GradedDims> {
    let e = steinberg_idempotent(n, IdempotentVariant::Standard)?;
    let ranks = exec.map_range(dmin..=dmax, |d| {
        action_matrix(&e, ThomSlice { n, twist, degree: d }).map(|m| m.rank() as u64)
    });
    let values = ranks.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(GradedDims::from_values(dmin, values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2poly::euler_form_product;

    #[test]
    fn unit_and_deltas() {
        let g = enumerate_gl(3).unwrap();
        let x = GroupAlgebraElement::sum_of(3, g.iter().copied().step_by(5));
        assert_eq!(ga_multiply(&GroupAlgebraElement::one(3), &x).unwrap(), x);
        let (a, b) = (g[3], g[77]);
        assert_eq!(
            ga_multiply(&GroupAlgebraElement::delta(a), &GroupAlgebraElement::delta(b)).unwrap(),
            GroupAlgebraElement::delta(a.mul(&b))
        );
        assert!(ga_multiply(&GroupAlgebraElement::one(2), &x).is_err());
    }

    #[test]
    fn idempotent_examples() {
        assert_eq!(
            steinberg_idempotent(1, IdempotentVariant::Standard).unwrap(),
            GroupAlgebraElement::one(1)
        );
        let e2 = steinberg_idempotent(2, IdempotentVariant::Standard).unwrap();
        let u = GlElement::from_entries(&[&[1, 1], &[0, 1]]).unwrap();
        let s = GlElement::permutation(&[1, 0]);
        let expected = GroupAlgebraElement::sum_of(2, [GlElement::identity(2), u, s, s.mul(&u)]);
        assert_eq!(e2, expected);
        for n in 2..=3 {
            for v in [IdempotentVariant::Standard, IdempotentVariant::Conjugate] {
                let e = steinberg_idempotent(n, v).unwrap();
                assert_eq!(ga_multiply(&e, &e).unwrap(), e);
            }
        }
        let e3 = steinberg_idempotent(3, IdempotentVariant::Standard).unwrap();
        let products: BTreeSet<GlElement> = permutation_matrices(3)
            .iter()
            .flat_map(|s| borel_subgroup(3).into_iter().map(move |b| s.mul(&b)))
            .collect();
        assert_eq!(products.len(), 48);
        assert!(e3.support().all(|g| products.contains(g)));
        assert!(matches!(
            steinberg_idempotent(5, IdempotentVariant::Standard),
            Err(Error::SizeTooLarge { .. })
        ));
    }

    #[test]
    fn block_identity() {
        for n in 2..=3 {
            let r = verify_block_identity(n).unwrap();
            assert!(r.pass, "n={n}: {r:?}");
        }
    }

    #[cfg(feature = "long-tests")]
    #[test]
    fn gl4() {
        for v in [IdempotentVariant::Standard, IdempotentVariant::Conjugate] {
            assert!(steinberg_idempotent(4, v).is_ok());
        }
        assert!(verify_block_identity(4).unwrap().pass);
    }

    #[test]
    fn action_matrix_examples() {
        let e1 = steinberg_idempotent(1, IdempotentVariant::Standard).unwrap();
        let m = action_matrix(&e1, ThomSlice { n: 1, twist: 0, degree: 5 }).unwrap();
        assert_eq!(m, BitMatrix::identity(1));
        let e2 = steinberg_idempotent(2, IdempotentVariant::Standard).unwrap();
        let m = action_matrix(&e2, ThomSlice { n: 2, twist: 0, degree: 1 }).unwrap();
        assert_eq!((m.rows(), m.rank()), (2, 1));
        let m = action_matrix(&e2, ThomSlice { n: 2, twist: -1, degree: -2 }).unwrap();
        assert_eq!((m.rows(), m.rank()), (2, 1));
        let empty = action_matrix(&e2, ThomSlice { n: 2, twist: 0, degree: -1 }).unwrap();
        assert_eq!((empty.rows(), empty.cols()), (0, 0));
    }

    #[test]
    fn action_matrices_are_idempotent() {
        for n in 1..=3 {
            let e = steinberg_idempotent(n, IdempotentVariant::Standard).unwrap();
            for twist in [-1, 0, 1] {
                for degree in -8..=9 {
                    let m = action_matrix(&e, ThomSlice { n, twist, degree }).unwrap();
                    assert_eq!(m.mul(&m), m, "n={n} k={twist} d={degree}");
                }
            }
        }
    }

    #[test]
    fn support_fixes_euler_product() {
        for n in 1..=3 {
            let u = euler_form_product(n);
            let e = steinberg_idempotent(n, IdempotentVariant::Standard).unwrap();
            for g in e.support() {
                assert_eq!(u.substitute_polynomial(g).unwrap(), u);
            }
        }
    }

    #[test]
    fn summand_examples() {
        let m2 = summand_dims(2, 0, 0, 6).unwrap();
        assert_eq!((m2[1], m2[4]), (1, 2));
        assert_eq!(summand_dims(2, -1, -2, -2).unwrap()[-2], 1);
        assert!(summand_dims(1, 0, 0, 10).unwrap().values().iter().all(|&v| v == 1));
    }
}
