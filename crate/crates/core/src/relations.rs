//! The image of H\*(M(n)) in H\*(BO(n)) and the μ-class relations it induces.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::f2poly::{dickson_basis, symmetrize_to_sigma, LaurentPoly, Monomial, SigmaPoly};
use crate::linalg::SparseEchelon;
use crate::spectra::thom_class;
use crate::steenrod::{an_closure, apply_word};
use crate::verify::{CheckReport, Failure};

/// μ_{i₁,…,iₙ}, the class attached to σ₁^{i₁}⋯σₙ^{iₙ}.
///
/// Ordered by degree, then lexicographically on exponents.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MuMonomial {
    degree: u32,
    exps: Vec<u32>,
}

impl MuMonomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().enumerate().map(|(j, &e)| (j as u32 + 1) * e).sum();
        MuMonomial { degree, exps }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    /// μ_{2i,2j,…}, the square of this class.
    pub fn doubled(&self) -> MuMonomial {
        MuMonomial::new(self.exps.iter().map(|e| 2 * e).collect())
    }
}

impl fmt::Display for MuMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.exps.iter().map(u32::to_string).collect();
        write!(f, "mu[{}]", parts.join(","))
    }
}

/// Σ μ_I = 0, homogeneous of one degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MuRelation {
    degree: u32,
    terms: BTreeSet<MuMonomial>,
}

impl MuRelation {
    pub fn new(terms: BTreeSet<MuMonomial>) -> Result<Self> {
        let first = terms.iter().next().ok_or(Error::ZeroInput)?;
        let degree = first.degree();
        if terms.iter().any(|m| m.degree() != degree) {
            return Err(Error::NotHomogeneous);
        }
        Ok(MuRelation { degree, terms })
    }

    pub fn from_exponents(terms: &[&[u32]]) -> Result<Self> {
        Self::new(terms.iter().map(|e| MuMonomial::new(e.to_vec())).collect())
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> &BTreeSet<MuMonomial> {
        &self.terms
    }

    pub fn doubled(&self) -> MuRelation {
        MuRelation {
            degree: 2 * self.degree,
            terms: self.terms.iter().map(MuMonomial::doubled).collect(),
        }
    }
}

impl fmt::Display for MuRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().rev().map(ToString::to_string).collect();
        write!(f, "{} = 0", parts.join(" + "))
    }
}

impl Serialize for MuRelation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<&[u32]> = self.terms.iter().rev().map(|m| m.exps()).collect();
        let mut s = serializer.serialize_struct("MuRelation", 2)?;
        s.serialize_field("degree", &self.degree)?;
        s.serialize_field("terms", &terms)?;
        s.end()
    }
}

fn sigma_monomial(exps: &[i32]) -> SigmaPoly {
    SigmaPoly::new(LaurentPoly::from_exponents(exps.len(), &[exps]))
}

/// (σ₁²+σ₂)^i (σ₁σ₂)^j σ₁^ε with 2i + 3j + ε = d, ε ∈ {1,2}, for 1 ≤ d ≤ dmax.
pub fn image_basis_n2(dmax: i32) -> BTreeMap<i32, Vec<SigmaPoly>> {
    let w2 = SigmaPoly::new(LaurentPoly::from_exponents(2, &[&[2, 0], &[0, 1]]));
    let w3 = sigma_monomial(&[1, 1]);
    let mut out: BTreeMap<i32, Vec<SigmaPoly>> = BTreeMap::new();
    for d in 1..=dmax {
        let mut basis = Vec::new();
        for eps in 1..=2 {
            for j in 0..=(d - eps) / 3 {
                let rest = d - eps - 3 * j;
                if rest % 2 != 0 {
                    continue;
                }
                let i = rest / 2;
                let p = w2
                    .pow(i as u32)
                    .checked_mul(&w3.pow(j as u32))
                    .and_then(|p| p.checked_mul(&sigma_monomial(&[eps, 0])))
                    .expect("two-variable products");
                basis.push(p);
            }
        }
        out.insert(d, basis);
    }
    out
}

/// Exponent vectors e with Σ e_k·degrees[k] = target.
fn weighted_compositions(degrees: &[i32], target: i32) -> Vec<Vec<u32>> {
    fn go(degrees: &[i32], target: i32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        match degrees.split_first() {
            None => {
                if target == 0 {
                    out.push(prefix.clone());
                }
            }
            Some((&d, rest)) => {
                for e in 0..=target / d {
                    prefix.push(e as u32);
                    go(rest, target - e * d, prefix, out);
                    prefix.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    if target >= 0 {
        go(degrees, target, &mut Vec::new(), &mut out);
    }
    out
}

/// The Dickson module on the A(n−2)-closure of Sq^{2^{n−1},…,2,1}(x₁⁻¹⋯xₙ⁻¹),
/// as a per-degree basis in σ-form.
pub fn image_generators_general(n: usize, dmax: i32) -> Result<BTreeMap<i32, Vec<SigmaPoly>>> {
    if !(2..=3).contains(&n) {
        return Err(Error::SizeOutOfRange(n));
    }
    let word: Vec<u32> = (0..n).rev().map(|i| 1 << i).collect();
    let g0 = apply_word(&word, &thom_class(n))?;
    let generators = an_closure(n as u32 - 2, &g0, dmax)?;
    let dickson = dickson_basis(n);
    let dickson_degrees: Vec<i32> = dickson.iter().map(|q| q.degree().unwrap_or(0)).collect();
    let mut out = BTreeMap::new();
    for d in 1..=dmax {
        let mut span: SparseEchelon<Monomial> = SparseEchelon::new();
        for (&gd, gens) in generators.range(..=d) {
            for exps in weighted_compositions(&dickson_degrees, d - gd) {
                let coeff = dickson
                    .iter()
                    .zip(&exps)
                    .fold(LaurentPoly::one(n), |acc, (q, &e)| &acc * &q.pow(e));
                for g in gens {
                    span.insert((&coeff * g).into_term_set());
                }
            }
        }
        let basis = span
            .reduced_rows()
            .into_iter()
            .map(|row| symmetrize_to_sigma(&LaurentPoly::from_terms(n, row)))
            .collect::<Result<Vec<_>>>()?;
        out.insert(d, basis);
    }
    Ok(out)
}

/// One μ symbol per σ-monomial of `p`.
pub fn expand_to_mu(p: &SigmaPoly) -> Result<MuRelation> {
    let terms = p
        .inner()
        .terms()
        .map(|m| {
            m.exps()
                .iter()
                .map(|&e| u32::try_from(e).map_err(|_| Error::ExponentOutOfRange { exponent: e, minimum: 0 }))
                .collect::<Result<Vec<u32>>>()
                .map(MuMonomial::new)
        })
        .collect::<Result<BTreeSet<_>>>()?;
    MuRelation::new(terms)
}

fn relation_span(basis: &[SigmaPoly]) -> Result<SparseEchelon<MuMonomial>> {
    basis.iter().map(|p| expand_to_mu(p).map(|r| r.terms)).collect()
}

/// Per-degree echelon basis of the relations modulo squares of lower ones.
///
/// R_d is spanned by the μ-expansions of the image basis in degree d. In even
/// degrees the doubled R_{d/2} is divided out: every relation is reduced
/// against it and the reduced vectors are put in reduced echelon form, which
/// depends only on the two spans.
pub fn relation_table(dmax: i32) -> Result<BTreeMap<i32, Vec<MuRelation>>> {
    let spans: BTreeMap<i32, SparseEchelon<MuMonomial>> = image_basis_n2(dmax)
        .into_iter()
        .map(|(d, basis)| relation_span(&basis).map(|s| (d, s)))
        .collect::<Result<_>>()?;
    let mut out = BTreeMap::new();
    for (&d, span) in &spans {
        let squares: SparseEchelon<MuMonomial> = if d % 2 == 0 {
            spans[&(d / 2)]
                .reduced_rows()
                .into_iter()
                .map(|row| row.iter().map(MuMonomial::doubled).collect())
                .collect()
        } else {
            SparseEchelon::new()
        };
        let quotient: SparseEchelon<MuMonomial> = span
            .reduced_rows()
            .into_iter()
            .map(|row| squares.reduce_fully(row))
            .collect();
        let rows = quotient
            .reduced_rows()
            .into_iter()
            .rev()
            .map(MuRelation::new)
            .collect::<Result<Vec<_>>>()?;
        out.insert(d, rows);
    }
    Ok(out)
}

/// The published relations through degree 6, by degree.
pub fn published_table() -> BTreeMap<i32, Vec<MuRelation>> {
    let rel = |t: &[&[u32]]| MuRelation::from_exponents(t).expect("nonempty homogeneous");
    BTreeMap::from([
        (1, vec![rel(&[&[1, 0]])]),
        (2, vec![]),
        (3, vec![rel(&[&[3, 0], &[1, 1]])]),
        (4, vec![rel(&[&[2, 1]])]),
        (5, vec![rel(&[&[5, 0], &[3, 1], &[1, 2]]), rel(&[&[3, 1]])]),
        (6, vec![rel(&[&[4, 1], &[2, 2]])]),
    ])
}

fn span_of(rels: &[MuRelation]) -> SparseEchelon<MuMonomial> {
    rels.iter().map(|r| r.terms.clone()).collect()
}

/// Span equality of `relation_table` with the published table, degree by
/// degree. A failure records the two ranks.
pub fn compare_with_published_table() -> Result<CheckReport> {
    let ours = relation_table(6)?;
    let published = published_table();
    let first_failure = (1..=6).find_map(|d| {
        let a = span_of(&ours[&d]);
        let b = span_of(&published[&d]);
        (!a.same_span(&b)).then_some(Failure { degree: d, lhs: a.rank() as i64, rhs: b.rank() as i64 })
    });
    Ok(CheckReport {
        check: "mu-relation-table".into(),
        range: [1, 6],
        pass: first_failure.is_none(),
        first_failure,
        detail: None,
    })
}
