use alloc::vec::Vec;
use core::fmt;

use crate::{Error, NumericalSemigroup, Result};

/// A set of integers containing every integer from some threshold on.
///
/// Stored in canonical form: `threshold - 1` is not a member and the window
/// `[start, threshold)` starts at the smallest member, so structural equality
/// is set equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CofiniteSet {
    start: i64,
    threshold: i64,
    // mask[i] is membership of start + i, for start + i < threshold.
    mask: Vec<bool>,
}

impl CofiniteSet {
    /// All integers `>= threshold`.
    pub fn tail(threshold: i64) -> Self {
        Self {
            start: threshold,
            threshold,
            mask: Vec::new(),
        }
    }

    /// `{z in [lo, hi) : pred(z)} ∪ [hi, ∞)`.
    pub fn from_predicate(lo: i64, hi: i64, mut pred: impl FnMut(i64) -> bool) -> Self {
        let lo = lo.min(hi);
        let mask: Vec<bool> = (lo..hi).map(&mut pred).collect();
        Self::normalized(lo, hi, mask)
    }

    /// The set `below ∪ [threshold, ∞)`; entries of `below` at or above the
    /// threshold are absorbed.
    pub fn from_parts(threshold: i64, below: &[i64]) -> Self {
        let lo = below
            .iter()
            .copied()
            .min()
            .unwrap_or(threshold)
            .min(threshold);
        let mut mask = alloc::vec![false; (threshold - lo) as usize];
        for &z in below {
            if z < threshold {
                mask[(z - lo) as usize] = true;
            }
        }
        Self::normalized(lo, threshold, mask)
    }

    fn normalized(mut start: i64, mut threshold: i64, mut mask: Vec<bool>) -> Self {
        while mask.last() == Some(&true) {
            mask.pop();
            threshold -= 1;
        }
        let lead = mask.iter().position(|&m| m).unwrap_or(mask.len());
        if lead > 0 {
            mask.drain(..lead);
            start += lead as i64;
        }
        debug_assert_eq!(start + mask.len() as i64, threshold);
        Self {
            start,
            threshold,
            mask,
        }
    }

    /// Smallest integer `T` with `[T, ∞)` inside the set.
    pub fn threshold(&self) -> i64 {
        self.threshold
    }

    /// Smallest member.
    pub fn min(&self) -> i64 {
        self.start
    }

    /// Members strictly below the threshold, ascending.
    pub fn below(&self) -> Vec<i64> {
        self.below_iter().collect()
    }

    pub fn below_iter(&self) -> impl Iterator<Item = i64> + '_ {
        self.mask
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(move |(i, _)| self.start + i as i64)
    }

    /// Members in `[lo, hi)`, ascending.
    pub fn members_in(&self, lo: i64, hi: i64) -> impl Iterator<Item = i64> + '_ {
        (lo..hi).filter(move |&z| self.contains(z))
    }

    #[inline]
    pub fn contains(&self, z: i64) -> bool {
        if z >= self.threshold {
            true
        } else if z < self.start {
            false
        } else {
            self.mask[(z - self.start) as usize]
        }
    }

    pub fn shift(&self, c: i64) -> Self {
        Self {
            start: self.start + c,
            threshold: self.threshold + c,
            mask: self.mask.clone(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let lo = self.start.min(other.start);
        let hi = self.threshold.min(other.threshold);
        Self::from_predicate(lo, hi, |z| self.contains(z) || other.contains(z))
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let lo = self
            .start
            .max(other.start)
            .min(self.threshold.max(other.threshold));
        let hi = self.threshold.max(other.threshold);
        Self::from_predicate(lo, hi, |z| self.contains(z) && other.contains(z))
    }

    /// The sumset `{x + y : x in self, y in other}`.
    ///
    /// Every sum at or above `min(X) + T_Y` (or `T_X + min(Y)`) is reached
    /// through the tail of one addend, so only the finite window below needs
    /// explicit search.
    pub fn sumset(&self, other: &Self) -> Self {
        let lo = self.start + other.start;
        let hi = (self.start + other.threshold).min(self.threshold + other.start);
        let xs: Vec<i64> = self.members_in(self.start, hi - other.start).collect();
        Self::from_predicate(lo, hi, |z| xs.iter().any(|&x| other.contains(z - x)))
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.start >= other.threshold
            || self
                .members_in(self.start, other.threshold)
                .all(|z| other.contains(z))
    }

    /// `self \ other`, ascending. Always finite since both sets contain
    /// every integer from the larger threshold on.
    pub fn difference(&self, other: &Self) -> Vec<i64> {
        self.members_in(self.start, other.threshold)
            .filter(|&z| !other.contains(z))
            .collect()
    }

    /// `|self \ other|`.
    pub fn difference_card(&self, other: &Self) -> u64 {
        self.members_in(self.start, other.threshold)
            .filter(|&z| !other.contains(z))
            .count() as u64
    }

    /// `{z : F - z not in self}`.
    pub fn reflect(&self, frobenius: i64) -> Self {
        let lo = frobenius - self.threshold + 1;
        let hi = frobenius - self.start + 1;
        Self::from_predicate(lo, hi, |z| !self.contains(frobenius - z))
    }

    /// `{x in self : x - n not in self}` for a positive `n` in `S`; one
    /// element per residue class mod `n` when the set is closed under adding `S`.
    pub fn apery(&self, semigroup: &NumericalSemigroup, n: i64) -> Result<Vec<i64>> {
        if n <= 0 || !semigroup.contains(n) {
            return Err(Error::NotInSemigroup(n));
        }
        Ok(self
            .members_in(self.start, self.threshold + n)
            .filter(|&x| !self.contains(x - n))
            .collect())
    }
}

impl fmt::Debug for CofiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CofiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for z in self.below_iter() {
            write!(f, "{z},")?;
        }
        write!(f, "{},→}}", self.threshold)
    }
}
