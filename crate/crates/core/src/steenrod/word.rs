use std::collections::BTreeSet;
use std::fmt;

use super::adem::adem_normalize;
use crate::exec::Execution;
use crate::graded::GradedDims;
use crate::linalg::toggle;

/// Sq^{i₁}⋯Sq^{i_k} with i_j ≥ 2·i_{j+1} and all entries positive.
///
/// The empty word is the unit: degree 0, length 0 and infinite excess.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct AdmissibleWord(Vec<u32>);

impl AdmissibleWord {
    /// Returns `None` unless every entry is positive and the word is admissible.
    pub fn new(entries: Vec<u32>) -> Option<Self> {
        Self::is_admissible(&entries).then_some(AdmissibleWord(entries))
    }

    pub(crate) fn new_unchecked(entries: Vec<u32>) -> Self {
        debug_assert!(Self::is_admissible(&entries));
        AdmissibleWord(entries)
    }

    pub fn empty() -> Self {
        AdmissibleWord(Vec::new())
    }

    pub fn is_admissible(entries: &[u32]) -> bool {
        entries.iter().all(|&i| i > 0) && entries.windows(2).all(|w| w[0] >= 2 * w[1])
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

    /// i₁ − (i₂ + ⋯ + i_k); `None` stands for +∞ on the empty word.
    pub fn excess(&self) -> Option<i64> {
        let (first, rest) = self.0.split_first()?;
        Some(*first as i64 - rest.iter().map(|&i| i as i64).sum::<i64>())
    }

    pub fn excess_exceeds(&self, e: i64) -> bool {
        self.excess().is_none_or(|x| x > e)
    }
}

impl fmt::Display for AdmissibleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "Sq{i}")?;
        }
        Ok(())
    }
}

/// An element of the Steenrod algebra: an F₂-sum of admissible words.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct SteenrodElement {
    words: BTreeSet<AdmissibleWord>,
}

impl SteenrodElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_word(AdmissibleWord::empty())
    }

    pub fn from_word(w: AdmissibleWord) -> Self {
        SteenrodElement { words: BTreeSet::from([w]) }
    }

    pub(crate) fn from_set(words: BTreeSet<AdmissibleWord>) -> Self {
        SteenrodElement { words }
    }

    pub fn words(&self) -> impl Iterator<Item = &AdmissibleWord> {
        self.words.iter()
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &AdmissibleWord) -> bool {
        self.words.contains(w)
    }

    /// Common degree of all terms, if nonzero and homogeneous.
    pub fn degree(&self) -> Option<u32> {
        let mut degs = self.words.iter().map(AdmissibleWord::degree);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn add(&self, other: &SteenrodElement) -> SteenrodElement {
        let mut words = self.words.clone();
        for w in &other.words {
            toggle(&mut words, w.clone());
        }
        SteenrodElement { words }
    }

    /// Composition product, normalized back to the admissible basis.
    pub fn mul(&self, other: &SteenrodElement) -> SteenrodElement {
        let mut words = BTreeSet::new();
        for a in &self.words {
            for b in &other.words {
                let cat: Vec<u32> = a.0.iter().chain(&b.0).copied().collect();
                for w in adem_normalize(&cat).words {
                    toggle(&mut words, w);
                }
            }
        }
        SteenrodElement { words }
    }
}

impl fmt::Display for SteenrodElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.words.is_empty() {
            return write!(f, "0");
        }
        for (k, w) in self.words.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

/// Which lengths an enumeration keeps.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LengthConstraint {
    Exactly(usize),
    AtMost(usize),
    Any,
}

impl LengthConstraint {
    fn max_len(self) -> usize {
        match self {
            LengthConstraint::Exactly(n) | LengthConstraint::AtMost(n) => n,
            LengthConstraint::Any => usize::MAX,
        }
    }

    pub fn accepts(self, len: usize) -> bool {
        match self {
            LengthConstraint::Exactly(n) => len == n,
            LengthConstraint::AtMost(n) => len <= n,
            LengthConstraint::Any => true,
        }
    }
}

/// All admissible words of degree `d` meeting the length constraint, in
/// lexicographic order of their entries.
pub fn admissible_basis(d: u32, constraint: LengthConstraint) -> Vec<AdmissibleWord> {
    fn rec(left: u32, max_entry: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        if cur.len() == max_len {
            return;
        }
        // an admissible tail starting at i sums to less than 2i
        for i in (left.div_ceil(2)..=left.min(max_entry)).filter(|&i| left < 2 * i || left == i) {
            cur.push(i);
            rec(left - i, i / 2, max_len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, u32::MAX, constraint.max_len(), &mut Vec::new(), &mut out);
    out.sort();
    out.into_iter()
        .filter(|w| constraint.accepts(w.len()))
        .map(AdmissibleWord::new_unchecked)
        .collect()
}

/// Degreewise dimensions of A/Gₙ, i.e. admissible words of length ≤ n.
pub fn ag_series(n: usize, dmax: u32) -> GradedDims {
    ag_series_with(Execution::default(), n, dmax)
}

pub fn ag_series_with(exec: Execution, n: usize, dmax: u32) -> GradedDims {
    let counts = exec.map_range(0..=dmax as i32, |d| {
        admissible_basis(d as u32, LengthConstraint::AtMost(n)).len() as u64
    });
    GradedDims::from_values(0, counts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(v: &[&[u32]]) -> Vec<AdmissibleWord> {
        v.iter().map(|w| AdmissibleWord::new(w.to_vec()).unwrap()).collect()
    }

    /// Every composition of d, filtered by the admissibility predicate.
    fn brute_force(d: u32, constraint: LengthConstraint) -> Vec<AdmissibleWord> {
        fn comps(left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if left == 0 {
                out.push(cur.clone());
                return;
            }
            for i in 1..=left {
                cur.push(i);
                comps(left - i, cur, out);
                cur.pop();
            }
        }
        let mut all = Vec::new();
        comps(d, &mut Vec::new(), &mut all);
        let mut out: Vec<_> = all
            .into_iter()
            .filter(|w| constraint.accepts(w.len()))
            .filter_map(AdmissibleWord::new)
            .collect();
        out.sort();
        out
    }

    #[test]
    fn basis_examples() {
        assert_eq!(admissible_basis(3, LengthConstraint::AtMost(2)), words(&[&[2, 1], &[3]]));
        assert_eq!(admissible_basis(0, LengthConstraint::AtMost(3)), vec![AdmissibleWord::empty()]);
        assert_eq!(admissible_basis(0, LengthConstraint::Exactly(0)), vec![AdmissibleWord::empty()]);
        assert_eq!(admissible_basis(7, LengthConstraint::Exactly(2)), words(&[&[5, 2], &[6, 1]]));
    }

    #[test]
    fn basis_matches_brute_force() {
        for d in 0..=16 {
            for c in [
                LengthConstraint::Any,
                LengthConstraint::AtMost(1),
                LengthConstraint::AtMost(2),
                LengthConstraint::Exactly(2),
                LengthConstraint::Exactly(3),
            ] {
                assert_eq!(admissible_basis(d, c), brute_force(d, c), "d={d} {c:?}");
            }
        }
    }

    #[test]
    fn series_examples() {
        assert_eq!(ag_series(1, 8)[5], 1);
        let g0 = ag_series(0, 6);
        assert_eq!(g0.values(), vec![1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(ag_series(2, 8)[6], 3);
    }

    #[test]
    fn excess_and_display() {
        let w = AdmissibleWord::new(vec![4, 2, 1]).unwrap();
        assert_eq!(w.excess(), Some(1));
        assert_eq!(w.to_string(), "Sq4 Sq2 Sq1");
        assert_eq!(AdmissibleWord::empty().excess(), None);
        assert!(AdmissibleWord::empty().excess_exceeds(1000));
        assert!(AdmissibleWord::new(vec![2, 2]).is_none());
        assert_eq!(SteenrodElement::zero().to_string(), "0");
        assert_eq!(SteenrodElement::one().to_string(), "1");
    }
}
