//! Linear algebra over F₂: dense bit matrices and sparse echelon bases.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Dense matrix over F₂ stored as packed rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words_per_row = cols.div_ceil(64);
        BitMatrix {
            rows,
            cols,
            words_per_row,
            data: vec![0; rows * words_per_row],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols);
        self.data[r * self.words_per_row + c / 64] >> (c % 64) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols);
        let w = &mut self.data[r * self.words_per_row + c / 64];
        if value {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    pub fn flip(&mut self, r: usize, c: usize) {
        assert!(r < self.rows && c < self.cols);
        self.data[r * self.words_per_row + c / 64] ^= 1 << (c % 64);
    }

    fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.words_per_row..(r + 1) * self.words_per_row]
    }

    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = BitMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                if self.get(r, k) {
                    let src = other.row(k).to_vec();
                    let start = r * out.words_per_row;
                    for (dst, s) in out.data[start..start + out.words_per_row].iter_mut().zip(src) {
                        *dst ^= s;
                    }
                }
            }
        }
        out
    }

    /// Rank by Gaussian elimination on a copy.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let wpr = m.words_per_row;
        let mut rank = 0;
        for c in 0..m.cols {
            let (w, bit) = (c / 64, 1u64 << (c % 64));
            let Some(p) = (rank..m.rows).find(|&r| m.data[r * wpr + w] & bit != 0) else {
                continue;
            };
            if p != rank {
                for i in 0..wpr {
                    m.data.swap(p * wpr + i, rank * wpr + i);
                }
            }
            for r in 0..m.rows {
                if r != rank && m.data[r * wpr + w] & bit != 0 {
                    for i in 0..wpr {
                        let v = m.data[rank * wpr + i];
                        m.data[r * wpr + i] ^= v;
                    }
                }
            }
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        rank
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let line: String = (0..self.cols)
                .map(|c| if self.get(r, c) { '1' } else { '0' })
                .collect();
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

/// Toggle `key` in an F₂-vector represented by its support.
pub fn toggle<K: Ord>(set: &mut BTreeSet<K>, key: K) {
    if let Some(k) = set.take(&key) {
        drop(k);
    } else {
        set.insert(key);
    }
}

/// Symmetric difference in place.
pub fn add_assign<K: Ord + Clone>(acc: &mut BTreeSet<K>, other: &BTreeSet<K>) {
    for k in other {
        toggle(acc, k.clone());
    }
}

/// Echelon basis of a subspace of a sparse F₂-vector space.
///
/// Vectors are sets of basis keys; each stored row is indexed by its largest
/// key (its pivot) and no two rows share a pivot.
#[derive(Clone, Debug)]
pub struct SparseEchelon<K: Ord + Clone> {
    rows: BTreeMap<K, BTreeSet<K>>,
}

impl<K: Ord + Clone> Default for SparseEchelon<K> {
    fn default() -> Self {
        SparseEchelon { rows: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> SparseEchelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` until its pivot is not a pivot of the basis. Each step
    /// strictly lowers the largest key, so this terminates.
    pub fn reduce(&self, mut v: BTreeSet<K>) -> BTreeSet<K> {
        while let Some(lead) = v.last() {
            match self.rows.get(lead) {
                Some(row) => add_assign(&mut v, row),
                None => break,
            }
        }
        v
    }

    /// Reduce every key of `v` that is a pivot, not just the leading one.
    pub fn reduce_fully(&self, v: BTreeSet<K>) -> BTreeSet<K> {
        let mut v = v;
        let mut cursor: Option<K> = None;
        loop {
            let next = match &cursor {
                None => v.last().cloned(),
                Some(c) => v.range(..c.clone()).next_back().cloned(),
            };
            let Some(key) = next else { break };
            if let Some(row) = self.rows.get(&key) {
                add_assign(&mut v, row);
            }
            cursor = Some(key);
        }
        v
    }

    /// Insert `v`; returns the reduced remainder if it was independent.
    pub fn insert(&mut self, v: BTreeSet<K>) -> bool {
        let r = self.reduce(v);
        match r.last().cloned() {
            Some(lead) => {
                self.rows.insert(lead, r);
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, v: &BTreeSet<K>) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    pub fn rows(&self) -> impl Iterator<Item = &BTreeSet<K>> {
        self.rows.values()
    }

    /// The unique reduced row echelon basis of the span, ordered by pivot.
    pub fn reduced_rows(&self) -> Vec<BTreeSet<K>> {
        let mut out = Vec::with_capacity(self.rows.len());
        for (pivot, row) in &self.rows {
            let mut rest = row.clone();
            rest.remove(pivot);
            let mut rest = self.reduce_fully(rest);
            rest.insert(pivot.clone());
            out.push(rest);
        }
        out
    }

    /// Span equality with another echelon basis.
    pub fn same_span(&self, other: &SparseEchelon<K>) -> bool {
        self.rank() == other.rank() && other.rows().all(|r| self.contains(r))
    }
}

impl<K: Ord + Clone> FromIterator<BTreeSet<K>> for SparseEchelon<K> {
    fn from_iter<I: IntoIterator<Item = BTreeSet<K>>>(iter: I) -> Self {
        let mut e = SparseEchelon::new();
        for v in iter {
            e.insert(v);
        }
        e
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[u32]) -> BTreeSet<u32> {
        v.iter().copied().collect()
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(BitMatrix::zeros(0, 0).rank(), 0);
        assert_eq!(BitMatrix::identity(70).rank(), 70);
        let mut m = BitMatrix::zeros(3, 3);
        for (r, c) in [(0, 0), (0, 1), (1, 1), (1, 2), (2, 0), (2, 2)] {
            m.set(r, c, true);
        }
        // third row is the sum of the first two
        assert_eq!(m.rank(), 2);
        assert_eq!(m.mul(&BitMatrix::identity(3)), m);
    }

    #[test]
    fn echelon_span() {
        let mut e = SparseEchelon::new();
        assert!(e.insert(set(&[1, 2])));
        assert!(e.insert(set(&[2, 3])));
        assert!(!e.insert(set(&[1, 3])));
        assert_eq!(e.rank(), 2);
        let f: SparseEchelon<u32> = [set(&[1, 3]), set(&[1, 2])].into_iter().collect();
        assert!(e.same_span(&f));
        let rref = e.reduced_rows();
        assert_eq!(rref, f.reduced_rows());
        assert_eq!(rref, vec![set(&[1, 2]), set(&[1, 3])]);
    }
}
