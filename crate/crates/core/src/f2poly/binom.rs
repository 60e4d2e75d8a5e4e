/// C(m, k) mod 2 for any integer `m` and `k ≥ 0`.
///
/// Negative `m` uses C(m, k) ≡ C(k − m − 1, k) (mod 2); nonnegative
/// arguments go through Lucas' theorem (`k` must be a bit-subset of `m`).
pub fn binom2(m: i64, k: i64) -> bool {
    assert!(k >= 0, "binom2 needs k >= 0");
    let top = if m < 0 { k - m - 1 } else { m };
    if k > top {
        return false;
    }
    top & k == k
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Exact binomial coefficient by the falling-factorial product.
    fn exact(m: i64, k: i64) -> i128 {
        let mut num: i128 = 1;
        let mut den: i128 = 1;
        for i in 0..k {
            num *= (m - i) as i128;
            den *= (i + 1) as i128;
            let g = gcd(num.abs(), den);
            num /= g;
            den /= g;
        }
        assert_eq!(den, 1);
        num
    }

    fn gcd(a: i128, b: i128) -> i128 {
        if b == 0 { a.max(1) } else { gcd(b, a % b) }
    }

    #[test]
    fn examples() {
        assert!(binom2(-1, 2));
        assert!(!binom2(5, 2));
        for m in -20..20 {
            assert!(binom2(m, 0));
        }
    }

    #[test]
    fn matches_exact_values() {
        for m in -25..=25 {
            for k in 0..=25 {
                assert_eq!(binom2(m, k), exact(m, k).rem_euclid(2) == 1, "C({m},{k})");
            }
        }
    }

    #[test]
    fn pascal() {
        for m in -50..=50 {
            for k in 1..=50 {
                assert_eq!(binom2(m, k), binom2(m - 1, k) ^ binom2(m - 1, k - 1));
            }
        }
    }
}
