//! Two-generated semigroups `S = <a, b>` and the lattice
//! `Z = ℤ² / (b, -a)ℤ`.
//!
//! The class of `(x, y)` maps to `ψ(x, y) = ax + by`, which identifies `Z`
//! with `ℤ` and the image of `ℕ₀²` with `S`. Relative ideals become staircase
//! regions in the plane. Their boundary (the lattice classes of the Apéry set
//! `Ap(A, a + b)`) is cyclically ordered by the integer key
//! `(b·x - a·y) mod (a² + b²)`, and the minimal generators, taken in that
//! order, give a closed formula for the dual ideal.

use alloc::vec::Vec;

use crate::semigroup::gcd;
use crate::torsion::{self, TorsionProfile};
use crate::{Error, NumericalSemigroup, RelativeIdeal, Result};

/// `S = <a, b>` with `gcd(a, b) = 1` and `b > a > 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypersurfaceSemigroup {
    a: i64,
    b: i64,
    // a⁻¹ mod b
    a_inv: i64,
    base: NumericalSemigroup,
}

/// A representative `(x, y)` of a class in `ℤ² / (b, -a)ℤ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeClass {
    pub x: i64,
    pub y: i64,
}

impl LatticeClass {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }
}

impl From<(i64, i64)> for LatticeClass {
    fn from((x, y): (i64, i64)) -> Self {
        Self { x, y }
    }
}

/// Minimal generators as lattice points with
/// `x1 < x2 < ... < xn < x1 + b` and `y1 > y2 > ... > yn > y1 - a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedGenerators {
    pub pairs: Vec<LatticeClass>,
    pub psi_values: Vec<i64>,
}

/// The boundary of an ideal in cyclic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryCycle {
    pub cycle: Vec<LatticeClass>,
    pub keys: Vec<i64>,
    /// Entries with both `(x - 1, y)` and `(x, y - 1)` in the ideal.
    pub maximal_flags: Vec<bool>,
}

impl BoundaryCycle {
    pub fn maximal(&self) -> Vec<LatticeClass> {
        self.cycle
            .iter()
            .zip(&self.maximal_flags)
            .filter(|(_, &m)| m)
            .map(|(&c, _)| c)
            .collect()
    }
}

fn mod_inverse(a: i64, m: i64) -> i64 {
    if m == 1 {
        return 0;
    }
    let (mut old_r, mut r) = (a.rem_euclid(m), m);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1);
    old_s.rem_euclid(m)
}

impl HypersurfaceSemigroup {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        let (a, b) = (a.min(b), a.max(b));
        if a <= 1 || a == b {
            return Err(Error::NotTwoGenerated {
                generators: alloc::vec![a, b],
            });
        }
        if gcd(a, b) != 1 {
            return Err(Error::NotNumerical { gcd: gcd(a, b) });
        }
        let base = NumericalSemigroup::new(&[a, b])?;
        debug_assert_eq!(base.frobenius(), a * b - a - b);
        Ok(Self {
            a,
            b,
            a_inv: mod_inverse(a, b),
            base,
        })
    }

    /// Views a semigroup with exactly two minimal generators as `<a, b>`.
    pub fn from_semigroup(s: &NumericalSemigroup) -> Result<Self> {
        match *s.generators() {
            [a, b] => Ok(Self {
                a,
                b,
                a_inv: mod_inverse(a, b),
                base: s.clone(),
            }),
            _ => Err(Error::NotTwoGenerated {
                generators: s.generators().to_vec(),
            }),
        }
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn base(&self) -> &NumericalSemigroup {
        &self.base
    }

    pub fn psi(&self, c: LatticeClass) -> i64 {
        self.a * c.x + self.b * c.y
    }

    /// The representative of `ψ⁻¹(g)` with `x` in `[x_lo, x_lo + b)`.
    pub fn lattice_normalize(&self, g: i64, x_lo: i64) -> LatticeClass {
        let (a, b) = (self.a, self.b);
        let residue = ((g.rem_euclid(b) as i128 * self.a_inv as i128) % b as i128) as i64;
        let x = x_lo + (residue - x_lo).rem_euclid(b);
        let y = (g - a * x) / b;
        debug_assert_eq!(a * x + b * y, g);
        LatticeClass { x, y }
    }

    /// `(b·x - a·y) mod (a² + b²)`: an exact stand-in for the angle of the
    /// class on `ℝ/ℤ`. Shifting by `(b, -a)` changes `b·x - a·y` by exactly
    /// `a² + b²`.
    pub fn cyclic_key(&self, c: LatticeClass) -> i64 {
        let (a, b) = (self.a, self.b);
        (b * c.x - a * c.y).rem_euclid(a * a + b * b)
    }

    /// Whether two representatives describe the same class.
    pub fn same_class(&self, p: LatticeClass, q: LatticeClass) -> bool {
        let (dx, dy) = (p.x - q.x, p.y - q.y);
        dx % self.b == 0 && dx / self.b * -self.a == dy
    }

    fn check_ideal(&self, ideal: &RelativeIdeal) -> Result<()> {
        if ideal.semigroup().same_as(&self.base) {
            Ok(())
        } else {
            Err(Error::SemigroupMismatch)
        }
    }

    /// Minimal generators of `A` in the cyclic order, anchored at the
    /// generator whose canonical `x` in `[0, b)` is smallest.
    pub fn ordered_generators(&self, ideal: &RelativeIdeal) -> Result<OrderedGenerators> {
        self.check_ideal(ideal)?;
        let mut pairs: Vec<LatticeClass> = ideal
            .generators()
            .iter()
            .map(|&g| self.lattice_normalize(g, 0))
            .collect();
        pairs.sort_unstable();
        let ordered = self.ordered_from(&pairs);
        Ok(ordered)
    }

    /// Re-anchors `pairs` (all with `x` in one width-`b` window, sorted by `x`)
    /// so that the cyclic order starts at `pairs[0]`.
    fn ordered_from(&self, pairs: &[LatticeClass]) -> OrderedGenerators {
        let x1 = pairs[0].x;
        let mut pairs: Vec<LatticeClass> = pairs
            .iter()
            .map(|&p| self.lattice_normalize(self.psi(p), x1))
            .collect();
        pairs.sort_unstable();
        let (a, b) = (self.a, self.b);
        let n = pairs.len();
        assert!(
            pairs.windows(2).all(|w| w[0].x < w[1].x && w[0].y > w[1].y)
                && pairs[n - 1].x < pairs[0].x + b
                && pairs[n - 1].y > pairs[0].y - a,
            "generator chain inequalities violated: {pairs:?}"
        );
        let psi_values = pairs.iter().map(|&p| self.psi(p)).collect();
        OrderedGenerators { pairs, psi_values }
    }

    /// Every rotation of the cyclic generator order, each re-anchored at its
    /// first element.
    pub fn rotations(&self, ideal: &RelativeIdeal) -> Result<Vec<OrderedGenerators>> {
        let base = self.ordered_generators(ideal)?;
        let n = base.pairs.len();
        Ok((0..n)
            .map(|r| {
                let rotated: Vec<LatticeClass> = (0..n).map(|k| base.pairs[(r + k) % n]).collect();
                self.ordered_from(&rotated)
            })
            .collect())
    }

    /// The boundary `ψ⁻¹(Ap(A, a + b))` sorted by cyclic key, starting from
    /// the smallest key.
    pub fn boundary_cycle(&self, ideal: &RelativeIdeal) -> Result<BoundaryCycle> {
        self.check_ideal(ideal)?;
        let (a, b) = (self.a, self.b);
        let apery = ideal.apery_set(a + b)?;
        let mut entries: Vec<(i64, LatticeClass, bool)> = apery
            .iter()
            .map(|&g| {
                let c = self.lattice_normalize(g, 0);
                let maximal = ideal.contains(g - a) && ideal.contains(g - b);
                (self.cyclic_key(c), c, maximal)
            })
            .collect();
        entries.sort_unstable_by_key(|e| e.0);
        if let Some(w) = entries.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::DuplicateBoundaryKey(w[0].0));
        }
        Ok(BoundaryCycle {
            keys: entries.iter().map(|e| e.0).collect(),
            cycle: entries.iter().map(|e| e.1).collect(),
            maximal_flags: entries.iter().map(|e| e.2).collect(),
        })
    }

    /// `A*` from the ordered generators:
    /// `(-a·x1 - b·yn, ab - a·x(i+1) - b·yi | i = 1..n-1)`.
    pub fn dual_formula(&self, ideal: &RelativeIdeal) -> Result<RelativeIdeal> {
        let ordered = self.ordered_generators(ideal)?;
        Ok(self.dual_from_ordered(&ordered))
    }

    pub fn dual_from_ordered(&self, ordered: &OrderedGenerators) -> RelativeIdeal {
        let gens = self.dual_generators(ordered);
        RelativeIdeal::new(&self.base, &gens).expect("non-empty generator list")
    }

    /// The generator list produced by the closed formula, before minimality
    /// is re-derived.
    pub fn dual_generators(&self, ordered: &OrderedGenerators) -> Vec<i64> {
        let (a, b) = (self.a, self.b);
        let p = &ordered.pairs;
        let n = p.len();
        let mut gens = Vec::with_capacity(n);
        gens.push(-a * p[0].x - b * p[n - 1].y);
        for i in 0..n - 1 {
            gens.push(a * b - a * p[i + 1].x - b * p[i].y);
        }
        gens
    }

    /// Number of torsion elements in a minimal generating set of `I ⊗ I*`
    /// built from the products of generators: the `μ(A)μ(A*)` pairs
    /// `(g, h) ∈ G(A) × G(A*)` minus one representative for each minimal
    /// generator of `A + A*`. Pairs whose sum is not a minimal generator are
    /// torsion, and so are all but one of the pairs sharing a sum.
    pub fn torsion_generator_pairs(&self, ideal: &RelativeIdeal) -> Result<usize> {
        let dual = self.dual_formula(ideal)?;
        let sum = ideal.sum(&dual)?;
        Ok(ideal.mu() * dual.mu() - sum.mu())
    }

    /// Pairs `(g, h) ∈ G(A) × G(A*)` whose sum is not a minimal generator of
    /// `A + A*`. A lower bound for [`Self::torsion_generator_pairs`].
    pub fn non_generator_sums(&self, ideal: &RelativeIdeal) -> Result<usize> {
        let dual = self.dual_formula(ideal)?;
        let sum = ideal.sum(&dual)?;
        let gc = sum.generators();
        Ok(ideal
            .generators()
            .iter()
            .flat_map(|&g| dual.generators().iter().map(move |&h| g + h))
            .filter(|s| gc.binary_search(s).is_err())
            .count())
    }

    /// Evaluates `τ(A,B) + |supp τ_z| ≥ μ(A)μ(B)` and `τ(A,B) ≥ μ(A)μ(B)/2`
    /// for non-principal `A`, `B`.
    pub fn check_half_mu_bound(
        &self,
        a: &RelativeIdeal,
        b: &RelativeIdeal,
    ) -> Result<HalfMuReport> {
        self.check_ideal(a)?;
        self.check_ideal(b)?;
        if a.is_principal() || b.is_principal() {
            return Err(Error::PrincipalIdeal);
        }
        let profile = torsion::torsion_profile(a, b)?;
        Ok(HalfMuReport::new(a, b, &profile))
    }
}

/// Outcome of the `μ(A)μ(B)` bounds for one pair of ideals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfMuReport {
    pub tau: u64,
    pub support: usize,
    pub mu_a: usize,
    pub mu_b: usize,
    pub mu_product: usize,
    /// `τ + support ≥ μ(A)μ(B)`
    pub inequality_1: bool,
    /// `2τ ≥ μ(A)μ(B)`
    pub inequality_2: bool,
}

impl HalfMuReport {
    pub fn new(a: &RelativeIdeal, b: &RelativeIdeal, profile: &TorsionProfile) -> Self {
        let mu_product = a.mu() * b.mu();
        Self {
            tau: profile.total,
            support: profile.support_size,
            mu_a: a.mu(),
            mu_b: b.mu(),
            mu_product,
            inequality_1: profile.total as usize + profile.support_size >= mu_product,
            inequality_2: 2 * profile.total as usize >= mu_product,
        }
    }

    pub fn bound_ok(&self) -> bool {
        self.inequality_1 && self.inequality_2
    }

    /// `2τ - μ(A)μ(B)`, twice the slack of the half bound.
    pub fn twice_slack(&self) -> i64 {
        2 * self.tau as i64 - self.mu_product as i64
    }
}

/// `A* = {z : F - z ∉ A}`, valid over symmetric semigroups.
pub fn dual_symmetric(ideal: &RelativeIdeal) -> Result<RelativeIdeal> {
    let s = ideal.semigroup();
    if !s.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    Ok(RelativeIdeal::from_set(
        s,
        ideal.set().reflect(s.frobenius()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn h57() -> HypersurfaceSemigroup {
        HypersurfaceSemigroup::new(5, 7).unwrap()
    }

    fn lc(v: &[(i64, i64)]) -> Vec<LatticeClass> {
        v.iter().map(|&p| p.into()).collect()
    }

    #[test]
    fn construction_guards() {
        assert!(HypersurfaceSemigroup::new(4, 6).is_err());
        assert!(HypersurfaceSemigroup::new(1, 6).is_err());
        assert!(HypersurfaceSemigroup::new(5, 5).is_err());
        let h = HypersurfaceSemigroup::new(7, 5).unwrap();
        assert_eq!((h.a(), h.b()), (5, 7));
        assert_eq!(h.base().frobenius(), 23);
        let s456 = NumericalSemigroup::new(&[4, 5, 6]).unwrap();
        assert!(matches!(
            HypersurfaceSemigroup::from_semigroup(&s456),
            Err(Error::NotTwoGenerated { .. })
        ));
    }

    #[test]
    fn normalize_representatives() {
        let h = h57();
        assert_eq!(h.lattice_normalize(17, 0), LatticeClass::new(2, 1));
        assert_eq!(h.lattice_normalize(21, 0), LatticeClass::new(0, 3));
        assert_eq!(h.lattice_normalize(25, 0), LatticeClass::new(5, 0));
        assert_eq!(h.lattice_normalize(0, 0), LatticeClass::new(0, 0));
        assert_eq!(h.lattice_normalize(21, 2), LatticeClass::new(7, -2));
        assert_eq!(h.lattice_normalize(-3, -10), LatticeClass::new(-9, 6));
        assert!(h.same_class(LatticeClass::new(7, 0), LatticeClass::new(0, 5)));
        assert!(!h.same_class(LatticeClass::new(7, 0), LatticeClass::new(0, 4)));
    }

    #[test]
    fn ordered_generators_of_example() {
        let h = h57();
        let a = RelativeIdeal::new(h.base(), &[17, 21, 25]).unwrap();
        let o = h.ordered_generators(&a).unwrap();
        assert_eq!(o.pairs, lc(&[(0, 3), (2, 1), (5, 0)]));
        assert_eq!(o.psi_values, vec![21, 17, 25]);
        let p = RelativeIdeal::principal(h.base(), 9);
        assert_eq!(h.ordered_generators(&p).unwrap().pairs.len(), 1);
    }

    #[test]
    fn ordered_generators_small() {
        let h = HypersurfaceSemigroup::new(2, 3).unwrap();
        let a = RelativeIdeal::new(h.base(), &[0, 1]).unwrap();
        let o = h.ordered_generators(&a).unwrap();
        assert_eq!(o.pairs.len(), 2);
        assert!(o.pairs[1].x - o.pairs[0].x < 3);
    }

    #[test]
    fn boundary_of_example() {
        let h = h57();
        let a = RelativeIdeal::new(h.base(), &[17, 21, 25]).unwrap();
        let bc = h.boundary_cycle(&a).unwrap();
        assert_eq!(bc.cycle.len(), 12);
        let expected = lc(&[
            (0, 5),
            (0, 4),
            (0, 3),
            (1, 3),
            (2, 3),
            (2, 2),
            (2, 1),
            (3, 1),
            (4, 1),
            (5, 1),
            (5, 0),
            (6, 0),
        ]);
        let start = bc.cycle.iter().position(|&c| c == expected[0]).unwrap();
        let rotated: Vec<_> = (0..12).map(|k| bc.cycle[(start + k) % 12]).collect();
        assert_eq!(rotated, expected);
        let mut max = bc.maximal();
        max.sort();
        assert_eq!(max, lc(&[(0, 5), (2, 3), (5, 1)]));
    }

    #[test]
    fn boundary_of_whole_semigroup() {
        let h = HypersurfaceSemigroup::new(2, 3).unwrap();
        let s = RelativeIdeal::whole(h.base());
        assert_eq!(h.boundary_cycle(&s).unwrap().cycle.len(), 5);
    }

    #[test]
    fn dual_by_formula() {
        let h = h57();
        let a = RelativeIdeal::new(h.base(), &[17, 21, 25]).unwrap();
        let o = h.ordered_generators(&a).unwrap();
        let mut raw = h.dual_generators(&o);
        raw.sort();
        assert_eq!(raw, vec![0, 3, 4]);
        assert_eq!(h.dual_formula(&a).unwrap().generators(), &[0, 3, 4]);
        assert_eq!(dual_symmetric(&a).unwrap().generators(), &[0, 3, 4]);
        let p = RelativeIdeal::principal(h.base(), 11);
        assert_eq!(h.dual_formula(&p).unwrap().generators(), &[-11]);
        assert_eq!(dual_symmetric(&p).unwrap().generators(), &[-11]);
        let h23 = HypersurfaceSemigroup::new(2, 3).unwrap();
        let a = RelativeIdeal::new(h23.base(), &[0, 1]).unwrap();
        assert_eq!(h23.dual_formula(&a).unwrap(), a.dual());
    }

    #[test]
    fn dual_symmetric_guard() {
        let s = NumericalSemigroup::new(&[3, 5, 7]).unwrap();
        let a = RelativeIdeal::whole(&s);
        assert_eq!(dual_symmetric(&a).unwrap_err(), Error::NotSymmetric);
        let s = NumericalSemigroup::new(&[4, 5, 6]).unwrap();
        let whole = RelativeIdeal::whole(&s);
        assert_eq!(dual_symmetric(&whole).unwrap(), whole);
    }

    #[test]
    fn rotations_agree() {
        let h = h57();
        let a = RelativeIdeal::new(h.base(), &[17, 21, 25]).unwrap();
        let rots = h.rotations(&a).unwrap();
        assert_eq!(rots.len(), 3);
        for r in rots {
            assert_eq!(h.dual_from_ordered(&r).generators(), &[0, 3, 4]);
        }
    }

    #[test]
    fn torsion_pairs() {
        let h = h57();
        let a = RelativeIdeal::new(h.base(), &[17, 21, 25]).unwrap();
        // 9 pairs; sums 17, 20 and 21 (twice) land on G(A + A*) = {17, 20, 21}.
        assert_eq!(h.non_generator_sums(&a).unwrap(), 5);
        assert_eq!(h.torsion_generator_pairs(&a).unwrap(), 6);
        let p = RelativeIdeal::principal(h.base(), 3);
        assert_eq!(h.torsion_generator_pairs(&p).unwrap(), 0);
        let h23 = HypersurfaceSemigroup::new(2, 3).unwrap();
        let a = RelativeIdeal::new(h23.base(), &[0, 1]).unwrap();
        // A* = (2, 3); sums 2, 3, 3, 4 against G(A + A*) = {2, 3}.
        assert_eq!(h23.non_generator_sums(&a).unwrap(), 1);
        assert_eq!(h23.torsion_generator_pairs(&a).unwrap(), 2);
    }

    #[test]
    fn half_mu_bound() {
        let h23 = HypersurfaceSemigroup::new(2, 3).unwrap();
        let a = RelativeIdeal::new(h23.base(), &[0, 1]).unwrap();
        let r = h23.check_half_mu_bound(&a, &a).unwrap();
        assert_eq!((r.tau, r.support, r.mu_product), (2, 2, 4));
        assert!(r.inequality_1 && r.inequality_2);
        assert_eq!(r.twice_slack(), 0);

        let h511 = HypersurfaceSemigroup::new(5, 11).unwrap();
        let a = RelativeIdeal::new(h511.base(), &[20, 21, 22]).unwrap();
        let b = RelativeIdeal::new(h511.base(), &[0, 23, 24]).unwrap();
        let r = h511.check_half_mu_bound(&a, &b).unwrap();
        assert!(r.tau >= 5);
        assert!(r.bound_ok());

        let a = RelativeIdeal::new(h23.base(), &[0, 1]).unwrap();
        let p = RelativeIdeal::principal(h23.base(), 0);
        assert_eq!(
            h23.check_half_mu_bound(&p, &a).unwrap_err(),
            Error::PrincipalIdeal
        );
    }
}
