use std::collections::BTreeSet;

use super::word::{AdmissibleWord, SteenrodElement};
use crate::f2poly::binom2;
use crate::linalg::toggle;

/// Rewrite a product Sq^{i₁}⋯Sq^{i_k} in the admissible basis.
///
/// Sq⁰ factors are dropped. The leftmost pair with a < 2b is replaced by
///
/// Sq^a Sq^b = Σ_{c=0}^{⌊a/2⌋} C(b−c−1, a−2c) Sq^{a+b−c} Sq^c.
///
/// Termination: the moment Σ_j j·i_j (positions counted from 1) strictly
/// drops under each rewrite, by b − c > 0, and dropping a Sq⁰ only shifts
/// later entries left. Since the moment is a nonnegative integer, every
/// word has finitely many descendants.
pub fn adem_normalize(word: &[u32]) -> SteenrodElement {
    let mut pending: BTreeSet<Vec<u32>> = BTreeSet::new();
    pending.insert(word.iter().copied().filter(|&i| i > 0).collect());
    let mut done: BTreeSet<AdmissibleWord> = BTreeSet::new();
    while let Some(w) = pending.pop_first() {
        match w.windows(2).position(|p| p[0] < 2 * p[1]) {
            None => toggle(&mut done, AdmissibleWord::new_unchecked(w)),
            Some(j) => {
                let (a, b) = (w[j], w[j + 1]);
                for c in 0..=a / 2 {
                    if !binom2(b as i64 - c as i64 - 1, (a - 2 * c) as i64) {
                        continue;
                    }
                    let mut next = Vec::with_capacity(w.len());
                    next.extend_from_slice(&w[..j]);
                    next.push(a + b - c);
                    if c > 0 {
                        next.push(c);
                    }
                    next.extend_from_slice(&w[j + 2..]);
                    toggle(&mut pending, next);
                }
            }
        }
    }
    SteenrodElement::from_set(done)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn elt(words: &[&[u32]]) -> SteenrodElement {
        SteenrodElement::from_set(
            words.iter().map(|w| AdmissibleWord::new(w.to_vec()).unwrap()).collect(),
        )
    }

    #[test]
    fn examples() {
        assert!(adem_normalize(&[1, 1]).is_zero());
        assert_eq!(adem_normalize(&[2, 2]), elt(&[&[3, 1]]));
        assert_eq!(adem_normalize(&[1, 2]), elt(&[&[3]]));
        assert_eq!(adem_normalize(&[]), SteenrodElement::one());
        assert_eq!(adem_normalize(&[0, 0]), SteenrodElement::one());
        assert_eq!(adem_normalize(&[2, 0, 1]), elt(&[&[2, 1]]));
    }

    #[test]
    fn known_relations() {
        // Sq^2 Sq^3 = Sq^5 + Sq^4 Sq^1
        assert_eq!(adem_normalize(&[2, 3]), elt(&[&[5], &[4, 1]]));
        // Sq^3 Sq^2 = 0
        assert!(adem_normalize(&[3, 2]).is_zero());
        // Sq^2 Sq^2 Sq^2 = Sq^3 Sq^1 Sq^2 = Sq^3 Sq^3 = Sq^5 Sq^1
        assert_eq!(adem_normalize(&[2, 2, 2]), elt(&[&[5, 1]]));
    }

    #[test]
    fn idempotent_and_degree_preserving() {
        for a in 0..=9u32 {
            for b in 0..=9 {
                for c in 0..=5 {
                    let x = adem_normalize(&[a, b, c]);
                    for w in x.words() {
                        assert_eq!(w.degree(), a + b + c);
                        assert_eq!(adem_normalize(w.entries()), SteenrodElement::from_word(w.clone()));
                    }
                }
            }
        }
    }
}
