//! Invertible matrices over F₂ of size at most 4.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported matrix size.
pub const MAX_N: usize = 4;

/// An invertible n×n matrix over F₂, n ≤ 4.
///
/// Row `i` is stored as a bit mask; bit `j` is the entry (i, j).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GlElement {
    n: u8,
    rows: [u8; MAX_N],
}

impl GlElement {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_N);
        let mut rows = [0u8; MAX_N];
        for (i, r) in rows.iter_mut().enumerate().take(n) {
            *r = 1 << i;
        }
        GlElement { n: n as u8, rows }
    }

    /// Build from row bit masks, rejecting singular matrices.
    pub fn from_rows(n: usize, rows: &[u8]) -> Result<Self> {
        if n > MAX_N {
            return Err(Error::SizeTooLarge { n, max: MAX_N });
        }
        if rows.len() != n {
            return Err(Error::SizeMismatch { left: n, right: rows.len() });
        }
        let mask = ((1u16 << n) - 1) as u8;
        let mut r = [0u8; MAX_N];
        for (dst, src) in r.iter_mut().zip(rows) {
            *dst = src & mask;
        }
        if rank(&r[..n]) != n {
            return Err(Error::NotInvertible);
        }
        Ok(GlElement { n: n as u8, rows: r })
    }

    /// Build from a 0/1 entry grid given row by row.
    pub fn from_entries(entries: &[&[u8]]) -> Result<Self> {
        let rows: Vec<u8> = entries
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .fold(0u8, |acc, (j, &e)| acc | ((e & 1) << j))
            })
            .collect();
        Self::from_rows(entries.len(), &rows)
    }

    /// The permutation matrix with a 1 in position (perm[j], j), i.e. the
    /// substitution x_j ↦ x_{perm[j]}.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut rows = [0u8; MAX_N];
        for (j, &i) in perm.iter().enumerate() {
            rows[i] |= 1 << j;
        }
        GlElement { n: n as u8, rows }
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn entry(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    pub fn row_mask(&self, i: usize) -> u8 {
        self.rows[i]
    }

    /// Bit mask of column `j`: bit `i` is the entry (i, j).
    pub fn column_mask(&self, j: usize) -> u8 {
        (0..self.n()).fold(0, |acc, i| acc | ((self.rows[i] >> j & 1) << i))
    }

    pub fn mul(&self, other: &GlElement) -> GlElement {
        assert_eq!(self.n, other.n, "matrix size mismatch");
        let mut rows = [0u8; MAX_N];
        for (i, out) in rows.iter_mut().enumerate().take(self.n()) {
            for k in 0..self.n() {
                if self.entry(i, k) {
                    *out ^= other.rows[k];
                }
            }
        }
        GlElement { n: self.n, rows }
    }

    pub fn transpose(&self) -> GlElement {
        let mut rows = [0u8; MAX_N];
        for (j, r) in rows.iter_mut().enumerate().take(self.n()) {
            *r = self.column_mask(j);
        }
        GlElement { n: self.n, rows }
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.n()).all(|i| self.rows[i] & ((1u8 << i) - 1) == 0)
    }

    pub fn is_permutation(&self) -> bool {
        (0..self.n()).all(|i| self.rows[i].count_ones() == 1)
            && (0..self.n()).all(|j| self.column_mask(j).count_ones() == 1)
    }

    /// Embed into GL_{n+1} as the upper-left block with a 1 in the corner.
    pub fn embed_upper_left(&self) -> GlElement {
        let n = self.n();
        assert!(n < MAX_N);
        let mut rows = self.rows;
        rows[n] = 1 << n;
        GlElement { n: self.n + 1, rows }
    }

    /// Encoding used for the deterministic enumeration order.
    pub fn code(&self) -> u16 {
        (0..self.n()).fold(0u16, |acc, i| acc | (self.rows[i] as u16) << (i * self.n()))
    }
}

fn rank(rows: &[u8]) -> usize {
    let mut rows = rows.to_vec();
    let mut rank = 0;
    for bit in 0..8 {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r] >> bit & 1 == 1) else {
            continue;
        };
        rows.swap(p, rank);
        for r in 0..rows.len() {
            if r != rank && rows[r] >> bit & 1 == 1 {
                rows[r] ^= rows[rank];
            }
        }
        rank += 1;
    }
    rank
}

/// |GLₙ(F₂)| = ∏_{i<n} (2ⁿ − 2ⁱ).
pub fn group_order(n: usize) -> u64 {
    (0..n).map(|i| (1u64 << n) - (1u64 << i)).product()
}

/// All of GLₙ(F₂) for 1 ≤ n ≤ 4, ordered by [`GlElement::code`].
pub fn enumerate_gl(n: usize) -> Result<Vec<GlElement>> {
    if n > MAX_N {
        return Err(Error::SizeTooLarge { n, max: MAX_N });
    }
    if n == 0 {
        return Err(Error::SizeOutOfRange(0));
    }
    let mask = (1u32 << n) - 1;
    let out: Vec<GlElement> = (0u32..1 << (n * n))
        .filter_map(|code| {
            let rows: Vec<u8> = (0..n).map(|i| ((code >> (i * n)) & mask) as u8).collect();
            GlElement::from_rows(n, &rows).ok()
        })
        .collect();
    debug_assert_eq!(out.len() as u64, group_order(n));
    Ok(out)
}

/// All n! permutation matrices.
pub fn permutation_matrices(n: usize) -> Vec<GlElement> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut out);
    out.sort();
    out
}

fn permute(perm: &mut Vec<usize>, k: usize, out: &mut Vec<GlElement>) {
    if k == perm.len() {
        out.push(GlElement::permutation(perm));
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, out);
        perm.swap(k, i);
    }
}

/// The Borel subgroup: upper triangular invertible matrices (unipotent over F₂).
pub fn borel_subgroup(n: usize) -> Vec<GlElement> {
    let free: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    (0u32..1 << free.len())
        .map(|bits| {
            let mut g = GlElement::identity(n);
            for (t, &(i, j)) in free.iter().enumerate() {
                if bits >> t & 1 == 1 {
                    g.rows[i] |= 1 << j;
                }
            }
            g
        })
        .collect()
}

/// Elementary transvections I + E_{ij}, i ≠ j; they generate GLₙ(F₂).
pub fn generating_set(n: usize) -> Vec<GlElement> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let mut g = GlElement::identity(n);
                g.rows[i] |= 1 << j;
                out.push(g);
            }
        }
    }
    out
}

impl fmt::Display for GlElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n() {
            if i > 0 {
                write!(f, "/")?;
            }
            for j in 0..self.n() {
                write!(f, "{}", self.entry(i, j) as u8)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        assert_eq!(enumerate_gl(1).unwrap().len(), 1);
        assert_eq!(enumerate_gl(2).unwrap().len(), 6);
        assert_eq!(enumerate_gl(3).unwrap().len(), 168);
        assert_eq!(enumerate_gl(4).unwrap().len(), 20160);
        assert!(matches!(enumerate_gl(5), Err(Error::SizeTooLarge { n: 5, .. })));
    }

    #[test]
    fn singular_rejected() {
        assert_eq!(
            GlElement::from_entries(&[&[1, 1], &[1, 1]]),
            Err(Error::NotInvertible)
        );
    }

    #[test]
    fn subgroups() {
        assert_eq!(permutation_matrices(3).len(), 6);
        assert_eq!(borel_subgroup(3).len(), 8);
        assert!(borel_subgroup(4).iter().all(GlElement::is_upper_triangular));
        assert!(permutation_matrices(4).iter().all(GlElement::is_permutation));
    }

    #[test]
    fn multiplication_is_associative_with_identity() {
        let g = enumerate_gl(3).unwrap();
        let id = GlElement::identity(3);
        for a in g.iter().step_by(7) {
            assert_eq!(a.mul(&id), *a);
            for b in g.iter().step_by(11) {
                for c in g.iter().step_by(13) {
                    assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
                }
            }
        }
    }

    #[test]
    fn embedding_keeps_block() {
        let s = GlElement::permutation(&[1, 0]);
        let e = s.embed_upper_left();
        assert_eq!(e, GlElement::permutation(&[1, 0, 2]));
    }
}
