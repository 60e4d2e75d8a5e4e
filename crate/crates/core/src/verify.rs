//! Pass/fail reports and the combined verification driver.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::exec::Execution;
use crate::f2poly::Monomial;
use crate::linalg::SparseEchelon;
use crate::looph::exactness_recursion;
use crate::relations::{compare_with_published_table, image_basis_n2, image_generators_general};
use crate::spectra::{check_mto2_decomposition, check_split_shadow, check_takayasu_with};
use crate::steenrod::{adem_normalize, admissible_basis, apply_element, apply_word, LengthConstraint, SymmetricPoly};
use crate::steinberg::{steinberg_idempotent, summand_dims_with, verify_block_identity, IdempotentVariant};

/// First degree where two series disagree.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Failure {
    pub degree: i32,
    pub lhs: i64,
    pub rhs: i64,
}

/// `{check, range, pass, first_failure}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub range: [i32; 2],
    pub pass: bool,
    pub first_failure: Option<Failure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckReport {
    /// Compare two series degree by degree on `lo..=hi`.
    pub fn compare(
        check: impl Into<String>,
        lo: i32,
        hi: i32,
        lhs: impl Fn(i32) -> i64,
        rhs: impl Fn(i32) -> i64,
    ) -> Self {
        let first_failure = (lo..=hi).find_map(|d| {
            let (l, r) = (lhs(d), rhs(d));
            (l != r).then_some(Failure { degree: d, lhs: l, rhs: r })
        });
        CheckReport {
            check: check.into(),
            range: [lo, hi],
            pass: first_failure.is_none(),
            first_failure,
            detail: None,
        }
    }

    pub fn boolean(check: impl Into<String>, lo: i32, hi: i32, pass: bool) -> Self {
        CheckReport {
            check: check.into(),
            range: [lo, hi],
            pass,
            first_failure: None,
            detail: None,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    /// Conjunction of several reports under one name.
    pub fn all(check: impl Into<String>, parts: Vec<CheckReport>) -> Self {
        let lo = parts.iter().map(|r| r.range[0]).min().unwrap_or(0);
        let hi = parts.iter().map(|r| r.range[1]).max().unwrap_or(0);
        let failed = parts.iter().find(|r| !r.pass);
        CheckReport {
            check: check.into(),
            range: [lo, hi],
            pass: failed.is_none(),
            first_failure: failed.and_then(|r| r.first_failure),
            detail: failed.map(|r| r.detail.clone().unwrap_or_else(|| r.check.clone())),
        }
    }
}

/// Whether `word` applied factor by factor agrees with its admissible
/// normal form on x₁⋯x_m, m = min(deg, max_vars).
///
/// x₁⋯x_m is symmetric, so both sides are computed on orbit sums; the
/// comparison is still an equality of polynomials in m variables.
pub fn adem_faithful(word: &[u32], max_vars: usize) -> Result<bool> {
    let degree: u32 = word.iter().sum();
    let m = (degree as usize).clamp(1, max_vars);
    let v = SymmetricPoly::orbit_sum(&vec![1; m])?;
    let direct = apply_word(word, &v)?;
    let normal = apply_element(&adem_normalize(word), &v)?;
    Ok(direct == normal)
}

/// Check a batch of words; returns the words that fail.
pub fn adem_faithfulness(exec: Execution, words: &[Vec<u32>], max_vars: usize) -> Result<Vec<Vec<u32>>> {
    let results = exec.map_slice(words, |w| adem_faithful(w, max_vars));
    let mut bad = Vec::new();
    for (w, r) in words.iter().zip(results) {
        if !r? {
            bad.push(w.clone());
        }
    }
    Ok(bad)
}

/// `count` words with entries in 1..=max_entry and length in 1..=max_len.
pub fn random_words(seed: u64, count: usize, max_entry: u32, max_len: usize) -> Vec<Vec<u32>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let len = rng.gen_range(1..=max_len);
            (0..len).map(|_| rng.gen_range(1..=max_entry)).collect()
        })
        .collect()
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// Upper degree for every ranged check; `None` keeps the full ranges.
    pub max_degree: Option<i32>,
    pub seed: u64,
    pub words: usize,
    /// Longer n = 3 ranges and the n = 4 group algebra.
    pub extended: bool,
    pub exec: Execution,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_degree: None,
            seed: 0x5eed,
            words: 500,
            extended: false,
            exec: Execution::default(),
        }
    }
}

impl VerifyOptions {
    fn cap(&self, hi: i32) -> i32 {
        self.max_degree.map_or(hi, |m| m.min(hi))
    }
}

fn admissible_count(d: i32, c: LengthConstraint) -> i64 {
    if d < 0 {
        0
    } else {
        admissible_basis(d as u32, c).len() as i64
    }
}

/// Numbered checks run by `verify_all`.
pub const CRITERIA: [(u8, &str); 11] = [
    (1, "adem-faithfulness"),
    (2, "idempotent-block"),
    (3, "m2-dims"),
    (4, "steinberg-summand-shadow"),
    (5, "split-shadow"),
    (6, "mu-relation-table"),
    (7, "image-consistency"),
    (8, "mto2-decomposition"),
    (9, "takayasu"),
    (10, "n3-stretch"),
    (11, "loop-recursion"),
];

pub fn criterion(id: u8, opts: &VerifyOptions) -> Result<CheckReport> {
    let name = CRITERIA
        .iter()
        .find(|(i, _)| *i == id)
        .map_or("unknown", |(_, n)| n);
    let exec = opts.exec;
    let report = match id {
        1 => {
            let words = random_words(opts.seed, opts.words, 12, 4);
            let bad = adem_faithfulness(exec, &words, 12)?;
            let hi = words.iter().map(|w| w.iter().sum::<u32>()).max().unwrap_or(0) as i32;
            let r = CheckReport::boolean(name, 1, hi, bad.is_empty());
            match bad.first() {
                Some(w) => r.with_detail(format!("{} of {} words disagree, first {:?}", bad.len(), words.len(), w)),
                None => r.with_detail(format!("{} words", words.len())),
            }
        }
        2 => {
            let mut parts = Vec::new();
            let top = if opts.extended { 4 } else { 3 };
            for n in 2..=top {
                let idem = steinberg_idempotent(n, IdempotentVariant::Standard).is_ok();
                let block = verify_block_identity(n)?;
                parts.push(CheckReport::boolean(format!("{name} n={n}"), n as i32, n as i32, idem && block.pass));
            }
            CheckReport::all(name, parts)
        }
        3 => {
            let hi = opts.cap(20);
            let dims = summand_dims_with(exec, 2, 0, 0, hi)?;
            CheckReport::compare(name, 0, hi, |d| dims[d] as i64, |d| admissible_count(d + 2, LengthConstraint::Exactly(2)))
        }
        4 => {
            let hi = opts.cap(15);
            let dims = summand_dims_with(exec, 2, -1, -2, hi)?;
            CheckReport::compare(name, -2, hi, |d| dims[d] as i64, |d| admissible_count(d + 2, LengthConstraint::AtMost(2)))
        }
        5 => CheckReport::all(name, vec![check_split_shadow(2, opts.cap(13))?, check_split_shadow(1, opts.cap(10))?]),
        6 => compare_with_published_table()?,
        7 => image_consistency(opts.cap(20))?,
        8 => check_mto2_decomposition(opts.cap(20)),
        9 => check_takayasu_with(exec, 2, opts.cap(12))?,
        10 => {
            let (img_hi, sum_hi) = if opts.extended { (16, 14) } else { (12, 10) };
            let (img_hi, sum_hi) = (opts.cap(img_hi), opts.cap(sum_hi));
            let img = image_generators_general(3, img_hi)?;
            let sum = summand_dims_with(exec, 3, 0, 0, sum_hi)?;
            let expected = |d: i32| admissible_count(d + 3, LengthConstraint::Exactly(3));
            CheckReport::all(
                name,
                vec![
                    CheckReport::compare(format!("{name} image"), 1, img_hi, |d| img[&d].len() as i64, expected),
                    CheckReport::compare(format!("{name} summand"), 0, sum_hi, |d| sum[d] as i64, expected),
                ],
            )
        }
        11 => {
            let hi = opts.cap(12);
            let r = exactness_recursion(2, hi);
            let neg = r.levels.iter().find_map(|l| {
                l.first_negative.map(|d| (l.n, Failure { degree: d, lhs: l.b[d as usize], rhs: 0 }))
            });
            CheckReport {
                check: name.into(),
                range: [0, hi],
                pass: r.pass,
                first_failure: neg.map(|(_, f)| f),
                detail: neg.map(|(n, _)| format!("b_{n} negative")),
            }
        }
        _ => return Err(crate::error::Error::Eval(format!("no check numbered {id}"))),
    };
    Ok(CheckReport { check: format!("{id} {name}"), ..report })
}

/// Span equality of the two descriptions of the image for n = 2, and their
/// dimension against length-2 admissibles.
pub fn image_consistency(dmax: i32) -> Result<CheckReport> {
    let general = image_generators_general(2, dmax)?;
    let explicit = image_basis_n2(dmax);
    let span = |ps: &[crate::f2poly::SigmaPoly]| -> SparseEchelon<Monomial> {
        ps.iter().map(|p| p.inner().term_set().clone()).collect()
    };
    let mut first_failure = None;
    let mut detail = None;
    for d in 1..=dmax {
        let a = span(&general[&d]);
        let b = span(&explicit[&d]);
        let expected = admissible_count(d + 2, LengthConstraint::Exactly(2));
        if !a.same_span(&b) || a.rank() as i64 != expected || explicit[&d].len() as i64 != expected {
            first_failure = Some(Failure { degree: d, lhs: a.rank() as i64, rhs: expected });
            detail = Some(if a.same_span(&b) { "dimension" } else { "span" }.to_string());
            break;
        }
    }
    Ok(CheckReport {
        check: "image-consistency".into(),
        range: [1, dmax],
        pass: first_failure.is_none(),
        first_failure,
        detail,
    })
}

/// Every numbered check in order.
pub fn verify_all(opts: &VerifyOptions) -> Result<Vec<CheckReport>> {
    CRITERIA.iter().map(|&(id, _)| criterion(id, opts)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn faithful_on_known_words() {
        assert!(adem_faithful(&[2, 2], 12).unwrap());
        assert!(adem_faithful(&[3, 5, 1], 12).unwrap());
    }

    #[test]
    fn test_vector_separates_wrong_forms() {
        // Sq2 Sq2 = Sq3 Sq1, which differs from Sq4 on x1 x2 x3 x4
        let v = SymmetricPoly::orbit_sum(&[1, 1, 1, 1]).unwrap();
        let direct = apply_word(&[2, 2], &v).unwrap();
        assert_eq!(direct, apply_word(&[3, 1], &v).unwrap());
        assert_ne!(direct, apply_word(&[4], &v).unwrap());
    }

    #[test]
    fn random_words_are_seeded() {
        assert_eq!(random_words(7, 20, 12, 4), random_words(7, 20, 12, 4));
        assert!(random_words(1, 100, 12, 4).iter().all(|w| (1..=4).contains(&w.len()) && w.iter().all(|&i| (1..=12).contains(&i))));
    }

    #[test]
    fn capped_run_passes() {
        let opts = VerifyOptions { max_degree: Some(6), words: 20, ..Default::default() };
        for r in verify_all(&opts).unwrap() {
            assert!(r.pass, "{r:?}");
        }
    }

    #[test]
    fn conjunction() {
        let ok = CheckReport::boolean("a", 0, 3, true);
        let bad = CheckReport::compare("b", -1, 2, |_| 1, |d| d as i64);
        let r = CheckReport::all("both", vec![ok, bad]);
        assert!(!r.pass);
        assert_eq!(r.range, [-1, 3]);
        assert_eq!(r.first_failure.unwrap().degree, -1);
    }
}
