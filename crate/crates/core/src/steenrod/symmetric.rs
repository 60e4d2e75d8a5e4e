use std::collections::{BTreeMap, BTreeSet};

use super::action::SteenrodAction;
use crate::error::{Error, Result};
use crate::f2poly::{LaurentPoly, Monomial};
use crate::linalg::{add_assign, toggle};

/// A symmetric polynomial in the basis of monomial symmetric functions.
///
/// Each term is a partition λ (exponents sorted descending, padded with
/// zeros to `nvars`) standing for the orbit sum m_λ. The Steenrod action
/// stays inside this basis, so symmetric inputs can be pushed through long
/// words without ever listing whole orbits.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymmetricPoly {
    nvars: usize,
    terms: BTreeSet<Vec<u32>>,
}

/// Largest variable count for which orbit sizes fit comfortably in u128.
pub const MAX_SYMMETRIC_VARS: usize = 30;

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Number of distinct permutations of `parts`.
fn orbit_size(parts: &[u32]) -> u128 {
    let mut denom = 1u128;
    let mut run = 1usize;
    for w in parts.windows(2) {
        if w[0] == w[1] {
            run += 1;
        } else {
            denom *= factorial(run);
            run = 1;
        }
    }
    denom *= factorial(run);
    factorial(parts.len()) / denom
}

impl SymmetricPoly {
    pub fn zero(nvars: usize) -> Self {
        SymmetricPoly { nvars, terms: BTreeSet::new() }
    }

    /// m_λ for the given exponents, in any order.
    pub fn orbit_sum(exps: &[u32]) -> Result<Self> {
        if exps.len() > MAX_SYMMETRIC_VARS {
            return Err(Error::SizeTooLarge { n: exps.len(), max: MAX_SYMMETRIC_VARS });
        }
        let mut p = exps.to_vec();
        p.sort_unstable_by(|a, b| b.cmp(a));
        Ok(SymmetricPoly { nvars: exps.len(), terms: BTreeSet::from([p]) })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn partitions(&self) -> impl Iterator<Item = &Vec<u32>> {
        self.terms.iter()
    }

    /// Expand every orbit sum.
    pub fn to_poly(&self) -> LaurentPoly {
        let mut out = BTreeSet::new();
        for lambda in &self.terms {
            let mut perm: Vec<u32> = lambda.iter().rev().copied().collect();
            loop {
                out.insert(Monomial::new(perm.iter().map(|&e| e as i32).collect()));
                if !next_permutation(&mut perm) {
                    break;
                }
            }
        }
        LaurentPoly::from_terms(self.nvars, out)
    }

    /// Sq^k(m_λ) = Σ_μ c_{λμ} m_μ. Counting pairs (α ∈ O(λ), γ ∈ O(μ)) with
    /// x^γ in Sq^k(x^α) two ways gives c_{λμ} = |O(λ)|·t / |O(μ)|, where t is
    /// the number of terms of Sq^k(x^λ) that sort to μ.
    pub fn sq(&self, k: u32) -> SymmetricPoly {
        if k == 0 {
            return self.clone();
        }
        let mut out = BTreeSet::new();
        for lambda in &self.terms {
            let mut hits: BTreeMap<Vec<u32>, u128> = BTreeMap::new();
            let mut cur = lambda.clone();
            cartan_terms(lambda, 0, k, &mut cur, &mut |gamma| {
                let mut mu = gamma.to_vec();
                mu.sort_unstable_by(|a, b| b.cmp(a));
                *hits.entry(mu).or_insert(0) += 1;
            });
            let size = orbit_size(lambda);
            for (mu, t) in hits {
                let c = size * t / orbit_size(&mu);
                if c % 2 == 1 {
                    toggle(&mut out, mu);
                }
            }
        }
        SymmetricPoly { nvars: self.nvars, terms: out }
    }
}

/// Calls `emit` with λ + β for each β, Σβ = k, with every C(λ_i, β_i) odd.
fn cartan_terms(lambda: &[u32], i: usize, left: u32, cur: &mut Vec<u32>, emit: &mut impl FnMut(&[u32])) {
    if i == lambda.len() {
        if left == 0 {
            emit(cur);
        }
        return;
    }
    let capacity: u32 = lambda[i + 1..].iter().sum();
    let e = lambda[i];
    for j in 0..=left.min(e) {
        // C(e, j) is odd iff j's bits lie inside e's
        if j & e != j || left - j > capacity {
            continue;
        }
        cur[i] = e + j;
        cartan_terms(lambda, i + 1, left - j, cur, emit);
    }
    cur[i] = e;
}

fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot has a successor");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl SteenrodAction for SymmetricPoly {
    fn sq(&self, k: u32) -> Result<Self> {
        Ok(SymmetricPoly::sq(self, k))
    }

    fn add_assign_checked(&mut self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableCountMismatch { left: self.nvars, right: other.nvars });
        }
        add_assign(&mut self.terms, &other.terms);
        Ok(())
    }

    fn zero_like(&self) -> Self {
        SymmetricPoly::zero(self.nvars)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::steenrod::apply_word;

    #[test]
    fn orbit_sizes() {
        assert_eq!(orbit_size(&[1, 1, 1]), 1);
        assert_eq!(orbit_size(&[2, 1, 0]), 6);
        assert_eq!(orbit_size(&[3, 1, 1, 0]), 12);
    }

    #[test]
    fn expansion() {
        let p = SymmetricPoly::orbit_sum(&[0, 2, 0]).unwrap().to_poly();
        assert_eq!(p, LaurentPoly::from_exponents(3, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]]));
    }

    #[test]
    fn agrees_with_direct_action() {
        let words: [&[u32]; 6] = [&[1], &[2, 1], &[3, 2], &[4, 2, 1], &[5, 3, 2], &[2, 6, 1]];
        for start in [&[1u32, 1, 1, 1][..], &[2, 1, 0, 0], &[3, 1, 1, 0], &[1, 1, 1, 1, 1]] {
            let sym = SymmetricPoly::orbit_sum(start).unwrap();
            let poly = sym.to_poly();
            for w in words {
                let a = apply_word(w, &sym).unwrap().to_poly();
                let b = apply_word(w, &poly).unwrap();
                assert_eq!(a, b, "{w:?} on {start:?}");
            }
        }
    }
}
