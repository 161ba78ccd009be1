use alloc::vec::Vec;
use core::fmt;

use crate::{CofiniteSet, Error, NumericalSemigroup, Result};

/// A relative ideal `A = (g1, ..., gm) = ∪ (gi + S)` of a numerical semigroup.
///
/// The generators are kept minimal and ascending: `gi - gj` is never in `S`
/// for `i != j`.
#[derive(Clone, PartialEq, Eq)]
pub struct RelativeIdeal {
    semigroup: NumericalSemigroup,
    gens: Vec<i64>,
    set: CofiniteSet,
}

/// Drops every candidate that lies in `g' + S` for another candidate `g'`.
fn minimize(semigroup: &NumericalSemigroup, mut gens: Vec<i64>) -> Vec<i64> {
    gens.sort_unstable();
    gens.dedup();
    // S-order refines the usual order, so a generator can only be absorbed by
    // a smaller one.
    let mut kept: Vec<i64> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|&k| semigroup.contains(g - k)) {
            kept.push(g);
        }
    }
    kept
}

impl RelativeIdeal {
    pub fn new(semigroup: &NumericalSemigroup, generators: &[i64]) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let gens = minimize(semigroup, generators.to_vec());
        Ok(Self::from_minimal(semigroup.clone(), gens))
    }

    /// The principal ideal `c + S`.
    pub fn principal(semigroup: &NumericalSemigroup, c: i64) -> Self {
        Self::from_minimal(semigroup.clone(), alloc::vec![c])
    }

    /// `S` as an ideal of itself.
    pub fn whole(semigroup: &NumericalSemigroup) -> Self {
        Self::principal(semigroup, 0)
    }

    fn from_minimal(semigroup: NumericalSemigroup, gens: Vec<i64>) -> Self {
        let lo = gens[0];
        let hi = gens[gens.len() - 1] + semigroup.frobenius() + 1;
        let set = CofiniteSet::from_predicate(lo, hi, |z| {
            gens.iter().any(|&g| semigroup.contains(z - g))
        });
        Self {
            semigroup,
            gens,
            set,
        }
    }

    /// Wraps a cofinite set already closed under adding `S`, extracting its
    /// minimal generators.
    ///
    /// A member `m` is a generator iff `m - n` is outside the set for every
    /// semigroup generator `n`: any nonzero element of `S` factors through
    /// one of them.
    pub fn from_set(semigroup: &NumericalSemigroup, set: CofiniteSet) -> Self {
        let step = semigroup.generators();
        let gens: Vec<i64> = set
            .members_in(set.min(), set.threshold() + semigroup.multiplicity())
            .filter(|&m| step.iter().all(|&n| !set.contains(m - n)))
            .collect();
        debug_assert!(!gens.is_empty());
        Self {
            semigroup: semigroup.clone(),
            gens,
            set,
        }
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    /// Minimal generators, ascending.
    pub fn generators(&self) -> &[i64] {
        &self.gens
    }

    pub fn set(&self) -> &CofiniteSet {
        &self.set
    }

    pub fn contains(&self, z: i64) -> bool {
        self.set.contains(z)
    }

    /// Number of minimal generators, `μ(A)`.
    pub fn mu(&self) -> usize {
        self.gens.len()
    }

    pub fn is_principal(&self) -> bool {
        self.gens.len() == 1
    }

    pub fn min_element(&self) -> i64 {
        self.gens[0]
    }

    pub fn max_generator(&self) -> i64 {
        self.gens[self.gens.len() - 1]
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.semigroup.same_as(&other.semigroup) {
            Ok(())
        } else {
            Err(Error::SemigroupMismatch)
        }
    }

    /// `A + B`, generated by the pairwise sums of generators.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let sums: Vec<i64> = self
            .gens
            .iter()
            .flat_map(|&a| other.gens.iter().map(move |&b| a + b))
            .collect();
        Ok(Self::from_minimal(
            self.semigroup.clone(),
            minimize(&self.semigroup, sums),
        ))
    }

    /// `A ∪ B`, the value set of a sum of submodules `I + J`.
    pub fn union(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut gens = self.gens.clone();
        gens.extend_from_slice(&other.gens);
        Ok(Self::from_minimal(
            self.semigroup.clone(),
            minimize(&self.semigroup, gens),
        ))
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self::from_set(
            &self.semigroup,
            self.set.intersection(&other.set),
        ))
    }

    /// `A* = {z : z + A ⊆ S}`.
    pub fn dual(&self) -> Self {
        let s = &self.semigroup;
        let m = self.min_element();
        // z + m < 0 below the window; z + g > F for every generator above it.
        let lo = -m;
        let hi = s.frobenius() + 1 - m;
        let set =
            CofiniteSet::from_predicate(lo, hi, |z| self.gens.iter().all(|&g| s.contains(z + g)));
        Self::from_set(s, set)
    }

    pub fn shift(&self, c: i64) -> Self {
        Self {
            semigroup: self.semigroup.clone(),
            gens: self.gens.iter().map(|&g| g + c).collect(),
            set: self.set.shift(c),
        }
    }

    /// The sub-ideal generated by the generators selected by `mask` (bit `i`
    /// selects the `i`-th generator).
    pub fn restrict(&self, mask: u64) -> Option<Self> {
        let gens: Vec<i64> = self
            .gens
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &g)| g)
            .collect();
        if gens.is_empty() {
            None
        } else {
            Some(Self::from_minimal(self.semigroup.clone(), gens))
        }
    }

    /// `Ap(A, n) = {x in A : x - n not in A}`.
    pub fn apery_set(&self, n: i64) -> Result<Vec<i64>> {
        self.set.apery(&self.semigroup, n)
    }
}

impl fmt::Debug for RelativeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RelativeIdeal")
            .field("semigroup", &self.semigroup.generators())
            .field("generators", &self.gens)
            .field("set", &self.set)
            .finish()
    }
}

impl fmt::Display for RelativeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn s(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::new(gens).unwrap()
    }

    fn ideal(sg: &NumericalSemigroup, gens: &[i64]) -> RelativeIdeal {
        RelativeIdeal::new(sg, gens).unwrap()
    }

    /// Window check of `z in A` against the definition.
    fn naive_member(sg: &NumericalSemigroup, gens: &[i64], z: i64) -> bool {
        gens.iter().any(|&g| sg.contains(z - g))
    }

    #[test]
    fn minimal_generators() {
        let s456 = s(&[4, 5, 6]);
        assert_eq!(ideal(&s456, &[4, 5, 8]).generators(), &[4, 5]);
        let s57 = s(&[5, 7]);
        assert_eq!(ideal(&s57, &[17, 21, 25]).generators(), &[17, 21, 25]);
        assert_eq!(
            ideal(&s57, &[25, 17, 21, 22, 17]).generators(),
            &[17, 21, 25]
        );
        let p = ideal(&s57, &[-3]);
        assert!(p.is_principal());
        assert_eq!(p.set(), &s57.as_cofinite().shift(-3));
        assert_eq!(
            RelativeIdeal::new(&s57, &[]).unwrap_err(),
            Error::EmptyGenerators
        );
    }

    #[test]
    fn invariants_of_generators() {
        let s57 = s(&[5, 7]);
        let a = ideal(&s57, &[17, 21, 25]);
        assert_eq!(a.mu(), 3);
        assert_eq!(a.min_element(), 17);
        let s456 = s(&[4, 5, 6]);
        let b = ideal(&s456, &[4, 5]);
        assert_eq!((b.mu(), b.min_element(), b.is_principal()), (2, 4, false));
        assert!(a.set().threshold() <= a.max_generator() + s57.frobenius() + 1);
    }

    #[test]
    fn sums() {
        let s456 = s(&[4, 5, 6]);
        let a = ideal(&s456, &[4, 5]);
        assert_eq!(
            a.sum(&a).unwrap().set(),
            &CofiniteSet::from_parts(12, &[8, 9, 10])
        );
        let s57 = s(&[5, 7]);
        let c = ideal(&s57, &[9]);
        let z = RelativeIdeal::whole(&s57);
        assert_eq!(z.sum(&c).unwrap(), c);
        let a = ideal(&s57, &[17, 21, 25]);
        let b = ideal(&s57, &[0, 3, 4]);
        assert_eq!(a.sum(&b).unwrap().generators(), &[17, 20, 21]);
    }

    #[test]
    fn intersections() {
        let s456 = s(&[4, 5, 6]);
        let i = ideal(&s456, &[4]).intersect(&ideal(&s456, &[5])).unwrap();
        assert_eq!(i.generators(), &[9, 10]);
        let s23 = s(&[2, 3]);
        let j = ideal(&s23, &[0]).intersect(&ideal(&s23, &[1])).unwrap();
        assert_eq!(j.generators(), &[3, 4]);
        let a = ideal(&s456, &[4, 5]);
        assert_eq!(a.intersect(&a).unwrap(), a);
    }

    #[test]
    fn unions() {
        let s456 = s(&[4, 5, 6]);
        let u = ideal(&s456, &[4]).union(&ideal(&s456, &[5, 8])).unwrap();
        assert_eq!(u.generators(), &[4, 5]);
        assert_eq!(u.set(), &CofiniteSet::from_parts(8, &[4, 5]));
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = ideal(&s(&[4, 5, 6]), &[0]);
        let b = ideal(&s(&[5, 7]), &[0]);
        assert_eq!(a.sum(&b).unwrap_err(), Error::SemigroupMismatch);
        assert_eq!(a.intersect(&b).unwrap_err(), Error::SemigroupMismatch);
    }

    #[test]
    fn duals() {
        let s57 = s(&[5, 7]);
        let a = ideal(&s57, &[17, 21, 25]);
        assert_eq!(a.dual().generators(), &[0, 3, 4]);
        assert_eq!(ideal(&s57, &[6]).dual().generators(), &[-6]);
        assert_eq!(ideal(&s57, &[0, 1]).dual().set().min(), 14);
        // brute force over a wide window
        let d = a.dual();
        for z in -60..60 {
            let expect = a.generators().iter().all(|&g| s57.contains(z + g));
            assert_eq!(d.contains(z), expect, "z = {z}");
        }
    }

    #[test]
    fn shifts() {
        let s57 = s(&[5, 7]);
        let a = ideal(&s57, &[17, 21, 25]);
        assert_eq!(a.shift(-17).generators(), &[0, 4, 8]);
        assert_eq!(a.shift(0), a);
        assert_eq!(a.shift(5).shift(-5), a);
        assert_eq!(a.shift(-17), ideal(&s57, &[0, 4, 8]));
    }

    #[test]
    fn ideal_apery_set() {
        let s57 = s(&[5, 7]);
        let a = ideal(&s57, &[17, 21, 25]);
        assert_eq!(
            a.apery_set(12).unwrap(),
            vec![17, 21, 22, 24, 25, 26, 27, 28, 30, 31, 32, 35]
        );
    }

    #[test]
    fn set_matches_definition() {
        let s456 = s(&[4, 5, 6]);
        let gens = [-3, 2, 7];
        let a = ideal(&s456, &gens);
        for z in -10..30 {
            assert_eq!(a.contains(z), naive_member(&s456, &gens, z));
        }
    }

    #[test]
    fn restrict_selects_generators() {
        let s57 = s(&[5, 7]);
        let a = ideal(&s57, &[17, 21, 25]);
        assert_eq!(a.restrict(0b101).unwrap().generators(), &[17, 25]);
        assert!(a.restrict(0).is_none());
    }
}
