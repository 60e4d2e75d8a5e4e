//! Sequential / data-parallel dispatch for per-degree work.
//!
//! Every heavy computation in the crate is a map over independent degrees or
//! inputs followed by an ordered collect, so the two execution modes always
//! produce identical output.

use std::ops::RangeInclusive;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How independent work items are evaluated.
///
/// Without the `parallel` feature, [`Execution::Parallel`] falls back to the
/// sequential path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Whether this build can actually run work in parallel.
    pub fn parallel_available() -> bool {
        cfg!(feature = "parallel")
    }

    pub fn map_range<R, F>(self, range: RangeInclusive<i32>, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(i32) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => range.into_par_iter().map(f).collect(),
            _ => range.map(f).collect(),
        }
    }

    pub fn map_slice<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => items.par_iter().map(f).collect(),
            _ => items.iter().map(f).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let f = |d: i32| d * d - 3;
        let a = Execution::Sequential.map_range(-5..=40, f);
        let b = Execution::Parallel.map_range(-5..=40, f);
        assert_eq!(a, b);
        let items: Vec<u64> = (0..100).collect();
        assert_eq!(
            Execution::Sequential.map_slice(&items, |x| x * 7),
            Execution::Parallel.map_slice(&items, |x| x * 7)
        );
    }
}
