//! Maximum and minimum number of 1s over factors of every length.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::word::FiniteWord;

/// `F¹(i)` and `f¹(i)` for `1 <= i <= L`.
///
/// The 0s functions are derived: `F⁰(i) = i − f¹(i)`, `f⁰(i) = i − F¹(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrefixProfile {
    // Both vectors hold the value for length 0 at index 0, so they have L + 1 entries.
    max: Vec<usize>,
    min: Vec<usize>,
}

impl PrefixProfile {
    /// Builds a profile from `F¹(1..=L)` and `f¹(1..=L)`, checking the invariants:
    /// both non-decreasing with steps in `{0, 1}`, starting from 0, and `f¹ <= F¹`.
    pub fn from_arrays(max_ones: &[usize], min_ones: &[usize]) -> Result<Self> {
        if max_ones.len() != min_ones.len() {
            return Err(Error::InvalidInput(format!(
                "array lengths differ: {} vs {}",
                max_ones.len(),
                min_ones.len()
            )));
        }
        let mut max = Vec::with_capacity(max_ones.len() + 1);
        let mut min = Vec::with_capacity(min_ones.len() + 1);
        max.push(0);
        min.push(0);
        max.extend_from_slice(max_ones);
        min.extend_from_slice(min_ones);
        for i in 1..max.len() {
            for (name, arr) in [("max", &max), ("min", &min)] {
                let step = arr[i].wrapping_sub(arr[i - 1]);
                if step > 1 {
                    return Err(Error::InvalidInput(format!(
                        "{name}_ones step at length {i} is not 0 or 1"
                    )));
                }
            }
            if min[i] > max[i] {
                return Err(Error::InvalidInput(format!(
                    "min_ones exceeds max_ones at length {i}"
                )));
            }
        }
        Ok(PrefixProfile { max, min })
    }

    /// Number of lengths covered, `L`.
    pub fn len(&self) -> usize {
        self.max.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `F¹(i)`, 1-based; `F¹(0) = 0`. Panics if `i > L`.
    pub fn max_ones(&self, i: usize) -> usize {
        self.max[i]
    }

    /// `f¹(i)`, 1-based; `f¹(0) = 0`. Panics if `i > L`.
    pub fn min_ones(&self, i: usize) -> usize {
        self.min[i]
    }

    /// `F⁰(i) = i − f¹(i)`.
    pub fn max_zeros(&self, i: usize) -> usize {
        i - self.min[i]
    }

    /// `f⁰(i) = i − F¹(i)`.
    pub fn min_zeros(&self, i: usize) -> usize {
        i - self.max[i]
    }

    /// `F¹(1..=L)`.
    pub fn max_ones_slice(&self) -> &[usize] {
        &self.max[1..]
    }

    /// `f¹(1..=L)`.
    pub fn min_ones_slice(&self) -> &[usize] {
        &self.min[1..]
    }
}

/// Computes the profile of `w` with one sliding window per length.
///
/// Lengths are processed in parallel; the result does not depend on scheduling.
pub fn compute_profile(w: &FiniteWord) -> Result<PrefixProfile> {
    if w.is_empty() {
        return Err(Error::InvalidInput("profile of the empty word".into()));
    }
    let sums = w.prefix_sums();
    let n = w.len();
    let per_length: Vec<(usize, usize)> = (1..=n)
        .into_par_iter()
        .map(|len| window_extremes(&sums, len))
        .collect();
    let mut max = Vec::with_capacity(n + 1);
    let mut min = Vec::with_capacity(n + 1);
    max.push(0);
    min.push(0);
    for (hi, lo) in per_length {
        max.push(hi);
        min.push(lo);
    }
    Ok(PrefixProfile { max, min })
}

/// `(max, min)` number of 1s over windows of length `len`, given prefix sums.
pub(crate) fn window_extremes(sums: &[usize], len: usize) -> (usize, usize) {
    let n = sums.len() - 1;
    let mut hi = 0;
    let mut lo = usize::MAX;
    for start in 0..=n - len {
        let ones = sums[start + len] - sums[start];
        hi = hi.max(ones);
        lo = lo.min(ones);
    }
    (hi, lo)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> FiniteWord {
        s.parse().unwrap()
    }

    #[test]
    fn fibonacci_max_ones() {
        let fib = w("01001010010010100101");
        let p = compute_profile(&fib).unwrap();
        assert_eq!(
            p.max_ones_slice(),
            &[1, 1, 2, 2, 2, 3, 3, 4, 4, 4, 5, 5, 5, 6, 6, 7, 7, 7, 8, 8]
        );
    }

    #[test]
    fn all_zeros() {
        let p = compute_profile(&FiniteWord::zeros(9)).unwrap();
        assert!(p.max_ones_slice().iter().all(|&x| x == 0));
        assert_eq!(p.max_zeros(9), 9);
    }

    #[test]
    fn violating_factor_count() {
        let p = compute_profile(&w("11100110110")).unwrap();
        assert_eq!(p.max_ones(5), 4);
    }

    #[test]
    fn alternating() {
        let p = compute_profile(&w("0101")).unwrap();
        assert_eq!(p.min_ones_slice(), &[0, 1, 1, 2]);
        assert_eq!(p.max_ones_slice(), &[1, 1, 2, 2]);
    }

    #[test]
    fn empty_rejected() {
        assert!(matches!(
            compute_profile(&FiniteWord::empty()),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn from_arrays_validates() {
        assert!(PrefixProfile::from_arrays(&[1, 1, 2], &[0, 1, 1]).is_ok());
        assert!(PrefixProfile::from_arrays(&[1, 3], &[0, 0]).is_err());
        assert!(PrefixProfile::from_arrays(&[1, 1], &[1, 2]).is_err());
        assert!(PrefixProfile::from_arrays(&[2], &[0]).is_err());
        assert!(PrefixProfile::from_arrays(&[1], &[0, 0]).is_err());
    }
}
