//! Dyer–Lashof generator counts for H\*(Ω^∞M(n)).
//!
//! H\*(Ω^∞X) is polynomial on Q^I x with I admissible (i_j ≤ 2·i_{j+1}) and
//! excess(I) > |x|, so indecomposables are counted by pairs (I, x).

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::graded::GradedDims;
use crate::steenrod::{admissible_basis, LengthConstraint};

/// Q^{i₁}⋯Q^{i_k} with i_j ≤ 2·i_{j+1}.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct DlWord(Vec<u32>);

impl DlWord {
    pub fn new(entries: Vec<u32>) -> Option<Self> {
        Self::is_admissible(&entries).then_some(DlWord(entries))
    }

    pub fn empty() -> Self {
        DlWord(Vec::new())
    }

    pub fn is_admissible(entries: &[u32]) -> bool {
        entries.iter().all(|&i| i > 0) && entries.windows(2).all(|w| w[0] <= 2 * w[1])
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// i₁ − (i₂ + ⋯ + i_k); `None` for the empty word.
    pub fn excess(&self) -> Option<i64> {
        let (&first, rest) = self.0.split_first()?;
        Some(first as i64 - rest.iter().map(|&i| i as i64).sum::<i64>())
    }

    pub fn excess_exceeds(&self, e: i64) -> bool {
        self.excess().is_none_or(|x| x > e)
    }
}

impl fmt::Display for DlWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(|i| format!("Q{i}")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Q^I x for a class x of degree `base_degree`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DlGenerator {
    pub word: DlWord,
    pub base_degree: u32,
}

impl DlGenerator {
    pub fn new(word: DlWord, base_degree: u32) -> Option<Self> {
        word.excess_exceeds(base_degree as i64).then_some(DlGenerator { word, base_degree })
    }

    pub fn total_degree(&self) -> u32 {
        self.base_degree + self.word.degree()
    }

    pub fn weight(&self) -> u64 {
        1 << self.word.len()
    }

    /// Q^i applied on the left, if the result is still a generator.
    pub fn apply_q(&self, i: u32) -> Option<DlGenerator> {
        let mut entries = Vec::with_capacity(self.word.len() + 1);
        entries.push(i);
        entries.extend_from_slice(self.word.entries());
        DlGenerator::new(DlWord::new(entries)?, self.base_degree)
    }
}

/// Admissible words of degree `d` and excess > `e`, lexicographically
/// descending. The empty word is included when d = 0.
pub fn dl_words(d: u32, e: i64) -> Vec<DlWord> {
    fn go(remaining: u32, prev: Option<u32>, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        let lo = prev.map_or(1, |p| p.div_ceil(2).max(1));
        for i in (lo..=remaining).rev() {
            prefix.push(i);
            go(remaining - i, Some(i), prefix, out);
            prefix.pop();
        }
    }
    let mut raw = Vec::new();
    go(d, None, &mut Vec::new(), &mut raw);
    raw.into_iter().map(DlWord).filter(|w| w.excess_exceeds(e)).collect()
}

fn count_words(d: u32, e: i64, include_empty: bool) -> u64 {
    dl_words(d, e).iter().filter(|w| include_empty || !w.is_empty()).count() as u64
}

/// Generator counts a(d) for 0 ≤ d ≤ dmax.
///
/// With `include_basepoint_factor` the degree-0 classes of `base` are read as
/// basepoint components: each contributes the generators Q^I[1] of
/// H\*(Q₀S⁰), I nonempty, instead of a class of its own.
pub fn omega_indecomposables(base: &GradedDims, dmax: i32, include_basepoint_factor: bool) -> GradedDims {
    let b = |x: i32| base.get(x).unwrap_or(0);
    GradedDims::from_fn(0, dmax, |d| {
        (0..=d)
            .map(|x| {
                let empty_ok = !(include_basepoint_factor && x == 0);
                b(x) * count_words((d - x) as u32, x as i64, empty_ok)
            })
            .sum()
    })
}

/// Generator counts in total degree `d`, bucketed by weight 2^{length}.
pub fn weight_histogram(base: &GradedDims, d: i32) -> BTreeMap<u64, u64> {
    let mut out = BTreeMap::new();
    for x in 0..=d {
        let mult = base.get(x).unwrap_or(0);
        if mult == 0 {
            continue;
        }
        for w in dl_words((d - x) as u32, x as i64) {
            *out.entry(1u64 << w.len()).or_insert(0) += mult;
        }
    }
    out
}

/// dims of H̃\*(M(n)): admissible words of length exactly n, shifted by n.
pub fn m_dims(n: usize, dmax: i32) -> GradedDims {
    GradedDims::from_fn(0, dmax, |d| {
        admissible_basis((d + n as i32) as u32, LengthConstraint::Exactly(n)).len() as u64
    })
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RecursionLevel {
    pub n: usize,
    pub a: GradedDims,
    /// b_n(d) for d = 0..=dmax; may go negative
    pub b: Vec<i64>,
    pub first_negative: Option<i32>,
    /// whether this level counts towards `pass`
    pub hard: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ExactnessReport {
    pub check: String,
    pub range: [i32; 2],
    pub pass: bool,
    pub levels: Vec<RecursionLevel>,
}

/// Levels at or below this are hard assertions; higher ones are reported only.
pub const HARD_LEVEL: usize = 2;

/// b₀ = a₀, b_n = a_n − b_{n−1}, with a_n the indecomposables of Ω^∞M(n).
pub fn exactness_recursion(n_max: usize, dmax: i32) -> ExactnessReport {
    let mut levels: Vec<RecursionLevel> = Vec::new();
    for n in 0..=n_max {
        let a = omega_indecomposables(&m_dims(n, dmax), dmax, n <= 1);
        let b: Vec<i64> = (0..=dmax)
            .map(|d| {
                let prev = levels.last().map_or(0, |l| l.b[d as usize]);
                a[d] as i64 - prev
            })
            .collect();
        let first_negative = b.iter().position(|&v| v < 0).map(|d| d as i32);
        levels.push(RecursionLevel { n, a, b, first_negative, hard: n <= HARD_LEVEL });
    }
    let pass = levels.iter().filter(|l| l.hard).all(|l| l.first_negative.is_none());
    ExactnessReport {
        check: format!("exactness-recursion n<={n_max}"),
        range: [0, dmax],
        pass,
        levels,
    }
}
