use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cofinite::CofiniteSet;
use crate::{Error, Result};

#[derive(Debug)]
struct Inner {
    generators: Vec<i64>,
    frobenius: i64,
    // membership[z] for z in [0, frobenius]; empty when frobenius = -1.
    membership: Vec<bool>,
}

/// A numerical semigroup `S = <n1, ..., ne>`: a submonoid of the non-negative
/// integers with finite complement.
///
/// Cloning is cheap; the membership table is shared.
#[derive(Clone)]
pub struct NumericalSemigroup {
    inner: Arc<Inner>,
}

pub(crate) fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Marks every `z` in `[0, bound]` reachable as a non-negative combination of `gens`.
fn reachable(gens: &[i64], bound: i64) -> Vec<bool> {
    let len = bound as usize + 1;
    let mut table = vec![false; len];
    table[0] = true;
    for z in 1..len {
        table[z] = gens
            .iter()
            .any(|&g| (g as usize) <= z && table[z - g as usize]);
    }
    table
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `generators`, keeping only the
    /// minimal generating set.
    pub fn new(generators: &[i64]) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&g) = generators.iter().find(|&&g| g < 1) {
            return Err(Error::NonPositiveGenerator(g));
        }
        let d = generators.iter().fold(0, |acc, &g| gcd(acc, g));
        if d != 1 {
            return Err(Error::NotNumerical { gcd: d });
        }

        let mut sorted = generators.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut minimal: Vec<i64> = Vec::new();
        for &g in &sorted {
            if minimal.is_empty() || !reachable(&minimal, g)[g as usize] {
                minimal.push(g);
            }
        }

        // Schur: F <= n1 * ne - n1 - ne, so the table up to n1 * ne covers F.
        let bound = minimal[0] * minimal[minimal.len() - 1];
        let table = reachable(&minimal, bound);
        let frobenius = table.iter().rposition(|&m| !m).map_or(-1, |z| z as i64);
        let mut membership = table;
        membership.truncate((frobenius + 1).max(0) as usize);

        Ok(Self {
            inner: Arc::new(Inner {
                generators: minimal,
                frobenius,
                membership,
            }),
        })
    }

    /// Minimal generators in ascending order.
    pub fn generators(&self) -> &[i64] {
        &self.inner.generators
    }

    pub fn frobenius(&self) -> i64 {
        self.inner.frobenius
    }

    /// Smallest nonzero element.
    pub fn multiplicity(&self) -> i64 {
        self.inner.generators[0]
    }

    /// Number of minimal generators.
    pub fn embedding_dimension(&self) -> usize {
        self.inner.generators.len()
    }

    #[inline]
    pub fn contains(&self, z: i64) -> bool {
        if z < 0 {
            false
        } else if z > self.inner.frobenius {
            true
        } else {
            self.inner.membership[z as usize]
        }
    }

    /// The non-members in `[0, F]`, ascending.
    pub fn gaps(&self) -> Vec<i64> {
        (0..=self.frobenius())
            .filter(|&z| !self.contains(z))
            .collect()
    }

    pub fn genus(&self) -> usize {
        self.inner.membership.iter().filter(|&&m| !m).count()
    }

    /// `Ap(S, n) = {s in S : s - n not in S}`, ascending.
    pub fn apery_set(&self, n: i64) -> Result<Vec<i64>> {
        self.as_cofinite().apery(self, n)
    }

    /// `S = {z : F - z not in S}`.
    pub fn is_symmetric(&self) -> bool {
        let f = self.frobenius();
        (-1..=f + 1).all(|z| self.contains(z) != self.contains(f - z))
    }

    /// `S` itself as a cofinite subset of the integers.
    pub fn as_cofinite(&self) -> CofiniteSet {
        CofiniteSet::from_predicate(0, self.frobenius() + 1, |z| self.contains(z))
    }

    /// Two handles describe the same semigroup.
    pub fn same_as(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.generators() == other.generators()
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for NumericalSemigroup {}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NumericalSemigroup")
            .field("generators", &self.generators())
            .field("frobenius", &self.frobenius())
            .finish()
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}
