//! Counting integer vectors under per-coordinate upper bounds.
//!
//! `s_count(x, a)` is the number of `y` with `0 <= y_k <= x_k` and
//! `y_1 + ... + y_r = a`.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::Count;

/// Upper bounds `x_1, ..., x_r`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BoundVector(Vec<usize>);

impl BoundVector {
    pub fn new(x: Vec<usize>) -> Self {
        BoundVector(x)
    }

    pub fn bounds(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `m = x_1 + ... + x_r`.
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

impl From<Vec<usize>> for BoundVector {
    fn from(x: Vec<usize>) -> Self {
        BoundVector(x)
    }
}

/// Zero for `a < 0` or `a > m`.
pub fn s_count(x: &BoundVector, a: i64) -> Count {
    let m = x.total();
    if a < 0 || a as u64 > m as u64 {
        return Count::zero();
    }
    let a = a as usize;
    // ways[s] = number of prefix vectors summing to s, capped at a
    let mut ways = vec![BigUint::zero(); a + 1];
    ways[0] = BigUint::one();
    for &bound in x.bounds() {
        let mut prefix = BigUint::zero();
        let mut next = Vec::with_capacity(a + 1);
        for s in 0..=a {
            prefix += &ways[s];
            if s > bound {
                prefix -= &ways[s - bound - 1];
            }
            next.push(prefix.clone());
        }
        ways = next;
    }
    ways.swap_remove(a)
}

/// Splits `s_count(x, a)` by the first coordinate: `(T, U)` where `T` counts
/// solutions with `y_1 = x_1` and `U` those with `y_1 < x_1`.
///
/// Requires `r >= 1` and `x_1 >= 1`.
pub fn s_split(x: &BoundVector, a: i64) -> Result<(Count, Count)> {
    let Some((&first, rest)) = x.bounds().split_first() else {
        return Err(Error::SplitUndefined("empty bound vector"));
    };
    if first == 0 {
        return Err(Error::SplitUndefined("first bound is zero"));
    }
    let take_all = s_count(&BoundVector(rest.to_vec()), a - first as i64);
    let mut lowered = x.bounds().to_vec();
    lowered[0] -= 1;
    let take_fewer = s_count(&BoundVector(lowered), a);
    Ok((take_all, take_fewer))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(x: &[usize]) -> BoundVector {
        BoundVector::new(x.to_vec())
    }

    fn n(v: u64) -> Count {
        Count::from(v)
    }

    #[test]
    fn empty_vector() {
        assert_eq!(s_count(&bv(&[]), 0), n(1));
        assert_eq!(s_count(&bv(&[]), 1), n(0));
        assert_eq!(s_count(&bv(&[]), -1), n(0));
    }

    #[test]
    fn small_values() {
        assert_eq!(s_count(&bv(&[2, 1]), 1), n(2));
        assert_eq!(s_count(&bv(&[2, 1]), 2), n(2));
        assert_eq!(s_count(&bv(&[2, 1]), 2), s_count(&bv(&[2, 1]), 3 - 2));
        assert_eq!(s_count(&bv(&[2, 1]), 4), n(0));
        assert_eq!(s_count(&bv(&[0, 0, 3]), 2), n(1));
    }

    #[test]
    fn splits() {
        assert_eq!(s_split(&bv(&[2, 1]), 1).unwrap(), (n(0), n(2)));
        assert_eq!(s_split(&bv(&[1]), 1).unwrap(), (n(1), n(0)));
        assert_eq!(s_split(&bv(&[2, 1]), 3).unwrap(), (n(1), n(0)));
        assert!(s_split(&bv(&[]), 0).is_err());
        assert!(s_split(&bv(&[0, 2]), 1).is_err());
    }

    #[test]
    fn large_counts_do_not_overflow() {
        // 40 bounds of 100: the middle coefficient is far past u64
        let x = bv(&[100; 40]);
        let mid = s_count(&x, 2000);
        assert!(mid > Count::from(u64::MAX));
        assert_eq!(mid, s_count(&x, 4000 - 2000));
    }
}
