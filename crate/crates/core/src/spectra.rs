//! Graded-dimension shadows of the splittings of Madsen–Tillmann spectra.
//!
//! H\*(MTO(n)) is modelled as (x₁⋯xₙ)⁻¹·F₂[x₁..xₙ]^{Σₙ} with Thom class
//! (x₁⋯xₙ)⁻¹ in degree −n. The splitting of Σ⁻ⁿD(n) off MTO(n) forces the
//! cyclic A-module on the Thom class to have the dimensions of A/Gₙ.

use serde::Serialize;

use crate::error::Result;
use crate::exec::Execution;
use crate::f2poly::{LaurentPoly, Monomial};
use crate::graded::GradedDims;
use crate::linalg::SparseEchelon;
use crate::steenrod::{admissible_basis, ag_series, apply_word, LengthConstraint};
use crate::steinberg::summand_dims_with;
use crate::verify::CheckReport;

/// Partitions of `total` into parts of size at most `max_part`.
pub fn partitions_bounded(total: i32, max_part: usize) -> u64 {
    if total < 0 {
        return 0;
    }
    let t = total as usize;
    let mut ways = vec![0u64; t + 1];
    ways[0] = 1;
    for part in 1..=max_part.min(t.max(1)) {
        for s in part..=t {
            ways[s] += ways[s - part];
        }
    }
    ways[t]
}

/// dims of H\*(MTO(n)): σ-monomials of degree d + n.
pub fn mto_dims(n: usize, dmin: i32, dmax: i32) -> GradedDims {
    GradedDims::from_fn(dmin, dmax, |d| partitions_bounded(d + n as i32, n))
}

/// H\*(BSO(3)) = F₂[w₂, w₃].
pub fn bso3_dims(dmin: i32, dmax: i32) -> GradedDims {
    GradedDims::from_fn(dmin, dmax, |d| {
        if d < 0 {
            return 0;
        }
        (0..=d / 3).filter(|b| (d - 3 * b) % 2 == 0).count() as u64
    })
}

/// (x₁⋯xₙ)⁻¹.
pub fn thom_class(n: usize) -> LaurentPoly {
    LaurentPoly::from_monomial(Monomial::new(vec![-1; n]))
}

fn thom_images(n: usize, degree: i32, constraint: LengthConstraint) -> Result<Vec<LaurentPoly>> {
    let shifted = degree + n as i32;
    if shifted < 0 {
        return Ok(Vec::new());
    }
    let thom = thom_class(n);
    admissible_basis(shifted as u32, constraint)
        .iter()
        .map(|w| {
            let v = apply_word(w.entries(), &thom)?;
            debug_assert!(v.min_exponent().is_none_or(|e| e >= -1));
            Ok(v)
        })
        .collect()
}

fn span_rank(vectors: &[LaurentPoly]) -> usize {
    vectors
        .iter()
        .map(|v| v.term_set().clone())
        .collect::<SparseEchelon<Monomial>>()
        .rank()
}

/// dims[d] = dim span{ Sq^I (x₁⋯xₙ)⁻¹ : I admissible, |I| = d + n } for
/// −n ≤ d ≤ dmax.
pub fn thom_cyclic_dims(n: usize, dmax: i32) -> Result<GradedDims> {
    thom_cyclic_dims_with(Execution::default(), n, dmax)
}

pub fn thom_cyclic_dims_with(exec: Execution, n: usize, dmax: i32) -> Result<GradedDims> {
    let dmin = -(n as i32);
    let ranks = exec.map_range(dmin..=dmax, |d| {
        thom_images(n, d, LengthConstraint::Any).map(|v| span_rank(&v) as u64)
    });
    Ok(GradedDims::from_values(dmin, ranks.into_iter().collect::<Result<_>>()?))
}

/// How the Thom-class images of short and long admissible words sit in one degree.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct SpanProfile {
    pub degree: i32,
    /// admissible words of length ≤ n
    pub short_words: usize,
    pub short_rank: usize,
    /// rank once all admissible words are included
    pub total_rank: usize,
}

impl SpanProfile {
    /// Short words independent and long words adding nothing.
    pub fn is_free_quotient(&self) -> bool {
        self.short_rank == self.short_words && self.total_rank == self.short_rank
    }
}

pub fn thom_span_profile(n: usize, degree: i32) -> Result<SpanProfile> {
    let short = thom_images(n, degree, LengthConstraint::AtMost(n))?;
    let all = thom_images(n, degree, LengthConstraint::Any)?;
    Ok(SpanProfile {
        degree,
        short_words: short.len(),
        short_rank: span_rank(&short),
        total_rank: span_rank(&all),
    })
}

/// thom_cyclic_dims(n)[d] = dim (A/Gₙ)^{d+n} for −n ≤ d ≤ dmax.
pub fn check_split_shadow(n: usize, dmax: i32) -> Result<CheckReport> {
    let lo = -(n as i32);
    let lhs = thom_cyclic_dims(n, dmax.max(lo))?;
    let rhs = ag_series(n, (dmax + n as i32).max(0) as u32);
    Ok(CheckReport::compare(
        format!("split-shadow n={n}"),
        lo,
        dmax,
        |d| lhs[d] as i64,
        |d| rhs[d + n as i32] as i64,
    ))
}

/// summand(n,−1)[d] = summand(n,0)[d] + summand(n−1,−1)[d+1] on −n ≤ d ≤ dmax.
pub fn check_takayasu(n: usize, dmax: i32) -> Result<CheckReport> {
    check_takayasu_with(Execution::default(), n, dmax)
}

pub fn check_takayasu_with(exec: Execution, n: usize, dmax: i32) -> Result<CheckReport> {
    let lo = -(n as i32);
    let middle = summand_dims_with(exec, n, -1, lo, dmax)?;
    let right = summand_dims_with(exec, n, 0, lo, dmax)?;
    let left = summand_dims_with(exec, n - 1, -1, lo + 1, dmax + 1)?;
    Ok(CheckReport::compare(
        format!("takayasu n={n} k=-1"),
        lo,
        dmax,
        |d| middle[d] as i64,
        |d| (right[d] + left[d + 1]) as i64,
    ))
}

/// One degree of the sequence Σ^k M(n−1)_{2k+1} → M(n)_k → M(n)_{k+1}.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct TakayasuRow {
    pub degree: i32,
    pub fibre: u64,
    pub middle: u64,
    pub cofibre: u64,
}

/// Dimensions of the three terms for any twist; no pass/fail meaning.
pub fn takayasu_table(n: usize, k: i32, dmin: i32, dmax: i32) -> Result<Vec<TakayasuRow>> {
    let middle = summand_dims_with(Execution::default(), n, k, dmin, dmax)?;
    let cofibre = summand_dims_with(Execution::default(), n, k + 1, dmin, dmax)?;
    let fibre = summand_dims_with(Execution::default(), n - 1, 2 * k + 1, dmin - k, dmax - k)?;
    Ok((dmin..=dmax)
        .map(|d| TakayasuRow {
            degree: d,
            fibre: fibre[d - k],
            middle: middle[d],
            cofibre: cofibre[d],
        })
        .collect())
}

/// mto_dims(2)[d] = dim (A/G₂)^{d+2} + dim H^d(BSO(3)) on −2 ≤ d ≤ dmax.
pub fn check_mto2_decomposition(dmax: i32) -> CheckReport {
    let mto = mto_dims(2, -2, dmax);
    let ag = ag_series(2, (dmax + 2).max(0) as u32);
    let bso = bso3_dims(-2, dmax);
    CheckReport::compare(
        "mto2-decomposition",
        -2,
        dmax,
        |d| mto[d] as i64,
        |d| (ag[d + 2] + bso[d]) as i64,
    )
}
