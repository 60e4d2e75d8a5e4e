//! Graded dimension series.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Index;

use serde::{Deserialize, Serialize};

/// Dimensions of the graded pieces of a graded F₂-vector space on the
/// degree window `dmin..=dmax`.
///
/// Serializes as `{"dmin":…, "dmax":…, "dims":{"<d>":<v>, …}}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GradedDims {
    pub dmin: i32,
    pub dmax: i32,
    pub dims: BTreeMap<i32, u64>,
}

impl GradedDims {
    /// All-zero series on the window.
    pub fn zeros(dmin: i32, dmax: i32) -> Self {
        GradedDims {
            dmin,
            dmax,
            dims: (dmin..=dmax).map(|d| (d, 0)).collect(),
        }
    }

    pub fn from_fn(dmin: i32, dmax: i32, f: impl FnMut(i32) -> u64) -> Self {
        let mut f = f;
        GradedDims {
            dmin,
            dmax,
            dims: (dmin..=dmax).map(|d| (d, f(d))).collect(),
        }
    }

    /// Build from values listed in degree order starting at `dmin`.
    pub fn from_values(dmin: i32, values: Vec<u64>) -> Self {
        let dmax = dmin + values.len() as i32 - 1;
        GradedDims {
            dmin,
            dmax,
            dims: (dmin..).zip(values).collect(),
        }
    }

    pub fn get(&self, d: i32) -> Option<u64> {
        self.dims.get(&d).copied()
    }

    pub fn contains(&self, d: i32) -> bool {
        (self.dmin..=self.dmax).contains(&d)
    }

    pub fn values(&self) -> Vec<u64> {
        (self.dmin..=self.dmax).map(|d| self[d]).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i32, u64)> + '_ {
        self.dims.iter().map(|(&d, &v)| (d, v))
    }

    /// Every queried degree in the window has an entry.
    pub fn is_well_formed(&self) -> bool {
        self.dmin <= self.dmax + 1 && (self.dmin..=self.dmax).all(|d| self.dims.contains_key(&d))
    }

    /// CSV with a header row, ascending degree.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("degree,dim\n");
        for (d, v) in self.iter() {
            out.push_str(&format!("{d},{v}\n"));
        }
        out
    }
}

impl Index<i32> for GradedDims {
    type Output = u64;

    fn index(&self, d: i32) -> &u64 {
        self.dims
            .get(&d)
            .unwrap_or_else(|| panic!("degree {d} outside {}..={}", self.dmin, self.dmax))
    }
}

impl fmt::Display for GradedDims {
    /// `d: a_d a_{d+1} …` starting at `dmin`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.dmin)?;
        for v in self.values() {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}
