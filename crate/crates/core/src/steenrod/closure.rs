use std::collections::{BTreeMap, VecDeque};

use super::action::sq_poly;
use crate::error::Result;
use crate::f2poly::{LaurentPoly, Monomial};
use crate::linalg::SparseEchelon;

/// Per-degree basis of the A(k)-submodule generated by `seed`, up to `dmax`.
///
/// A(k) is generated by Sq^1, Sq^2, …, Sq^{2^k}, so the span is closed by
/// applying those squares to every new basis vector until nothing new
/// appears. Each degree's basis is returned in reduced echelon form.
pub fn an_closure(k: u32, seed: &LaurentPoly, dmax: i32) -> Result<BTreeMap<i32, Vec<LaurentPoly>>> {
    let nvars = seed.nvars();
    let mut spans: BTreeMap<i32, SparseEchelon<Monomial>> = BTreeMap::new();
    let mut queue = VecDeque::new();
    for (d, part) in seed.homogeneous_components() {
        if d <= dmax && spans.entry(d).or_default().insert(part.term_set().clone()) {
            queue.push_back(part);
        }
    }
    while let Some(v) = queue.pop_front() {
        for i in 0..=k {
            let w = sq_poly(1 << i, &v)?;
            let Some(d) = w.degree() else { continue };
            if d > dmax {
                continue;
            }
            if spans.entry(d).or_default().insert(w.term_set().clone()) {
                queue.push_back(w);
            }
        }
    }
    Ok(spans
        .into_iter()
        .filter(|(_, e)| e.rank() > 0)
        .map(|(d, e)| {
            let rows = e
                .reduced_rows()
                .into_iter()
                .map(|r| LaurentPoly::from_terms(nvars, r))
                .collect();
            (d, rows)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exterior_on_sq1() {
        let s1 = LaurentPoly::from_exponents(2, &[&[1, 0], &[0, 1]]);
        let c = an_closure(0, &s1, 20).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c[&1], vec![s1.clone()]);
        assert_eq!(c[&2], vec![s1.square()]);
    }

    #[test]
    fn zero_seed() {
        assert!(an_closure(3, &LaurentPoly::zero(2), 10).unwrap().is_empty());
    }

    #[test]
    fn closed_under_generators() {
        let seed = LaurentPoly::from_exponents(3, &[&[1, 0, 0], &[0, 1, 1]]);
        let c = an_closure(1, &seed, 9).unwrap();
        for basis in c.values() {
            for v in basis {
                for sq in [1u32, 2] {
                    let w = sq_poly(sq, v).unwrap();
                    let Some(d) = w.degree().filter(|&d| d <= 9) else { continue };
                    let span: SparseEchelon<Monomial> =
                        c[&d].iter().map(|b| b.term_set().clone()).collect();
                    assert!(span.contains(w.term_set()));
                }
            }
        }
    }
}
