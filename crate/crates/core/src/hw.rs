//! Irreducible arithmetic sequences and the Huneke–Wiegand check for
//! two-generated monomial ideals `(1, tⁿ)`.
//!
//! For a step `n`, let `P = {x : x, x + n ∈ S}` and
//! `T = {x : x, x + n, x + 2n ∈ S}`. These are the duals of `(0, n)` and
//! `(0, n, 2n)`. Sums of two pairs are triples, so `P + P ⊆ T`, and the
//! triples not of that form are the irreducible ones. Their number is the
//! torsion length of `I ⊗ I*` for `I = (1, tⁿ)`. A gap `n` with no
//! irreducible triple would be a counterexample to the conjecture for that
//! ideal.

use alloc::vec::Vec;

use crate::{CofiniteSet, Error, NumericalSemigroup, RelativeIdeal, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleReport {
    pub step: i64,
    pub pairs_set: CofiniteSet,
    pub triples_set: CofiniteSet,
    /// `T \ (P + P)`, ascending.
    pub irreducible: Vec<i64>,
    pub count: u64,
}

fn check_step(n: i64) -> Result<()> {
    if n <= 0 {
        Err(Error::NonPositiveStep(n))
    } else {
        Ok(())
    }
}

/// `P = {x : x ∈ S, x + n ∈ S} = (0, n)*`.
pub fn pairs_set(s: &NumericalSemigroup, n: i64) -> Result<CofiniteSet> {
    check_step(n)?;
    Ok(RelativeIdeal::new(s, &[0, n])?.dual().set().clone())
}

/// `T = {x : x, x + n, x + 2n ∈ S} = (0, n, 2n)*`.
pub fn triples_set(s: &NumericalSemigroup, n: i64) -> Result<CofiniteSet> {
    check_step(n)?;
    Ok(RelativeIdeal::new(s, &[0, n, 2 * n])?.dual().set().clone())
}

pub fn irreducible_triples(s: &NumericalSemigroup, n: i64) -> Result<TripleReport> {
    let pairs = pairs_set(s, n)?;
    let triples = triples_set(s, n)?;
    // P + P contains everything from min P + F + 1 on, since F + 1 ∈ P.
    let sums = pairs.sumset(&pairs);
    debug_assert!(sums.threshold() <= pairs.min() + s.frobenius() + 1);
    let irreducible = triples.difference(&sums);
    Ok(TripleReport {
        step: n,
        count: irreducible.len() as u64,
        pairs_set: pairs,
        triples_set: triples,
        irreducible,
    })
}

/// Irreducible triples found by scanning `x` directly against membership in
/// `S`, without any set algebra.
pub fn irreducible_triples_direct(s: &NumericalSemigroup, n: i64) -> Result<Vec<i64>> {
    check_step(n)?;
    let is_pair = |x: i64| s.contains(x) && s.contains(x + n);
    let f = s.frobenius();
    // Irreducible starts lie below min P + F + 1 <= 2F + 2.
    Ok((0..=2 * f + 2)
        .filter(|&x| is_pair(x) && s.contains(x + 2 * n))
        .filter(|&x| !(0..=x).any(|y| is_pair(y) && is_pair(x - y)))
        .collect())
}

/// Length of the torsion of `I ⊗ I*` for `I = (1, tⁿ)`, computed two ways:
/// counting irreducible triples directly, and as `|(I²)⁻¹ \ (I⁻¹)²|` on the
/// value sets, i.e. `|(0, n, 2n)* \ ((0, n)* + (0, n)*)|`.
pub fn torsion_length_2gen(s: &NumericalSemigroup, n: i64) -> Result<u64> {
    let direct = irreducible_triples_direct(s, n)?.len() as u64;
    let pairs = pairs_set(s, n)?;
    let quotient = triples_set(s, n)?.difference_card(&pairs.sumset(&pairs));
    if direct != quotient {
        return Err(Error::RouteMismatch { direct, quotient });
    }
    Ok(direct)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapCount {
    pub n: i64,
    pub count: u64,
    pub min_irreducible: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HwReport {
    pub per_gap: Vec<GapCount>,
    pub all_positive: bool,
}

impl HwReport {
    /// Gaps with no irreducible triple.
    pub fn counterexamples(&self) -> impl Iterator<Item = &GapCount> {
        self.per_gap.iter().filter(|g| g.count == 0)
    }
}

/// Counts irreducible triples for every gap of `S`.
pub fn hw_check_semigroup(s: &NumericalSemigroup) -> Result<HwReport> {
    let per_gap = s
        .gaps()
        .into_iter()
        .map(|n| {
            let count = torsion_length_2gen(s, n)?;
            let report = irreducible_triples(s, n)?;
            debug_assert_eq!(report.count, count);
            Ok(GapCount {
                n,
                count,
                min_irreducible: report.irreducible.first().copied(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let all_positive = per_gap.iter().all(|g| g.count > 0);
    Ok(HwReport {
        per_gap,
        all_positive,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn s(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::new(gens).unwrap()
    }

    #[test]
    fn pairs_of_57() {
        let p = pairs_set(&s(&[5, 7]), 1).unwrap();
        assert_eq!(p, CofiniteSet::from_parts(24, &[14, 19, 20, 21]));
        assert_eq!(pairs_set(&s(&[2, 3]), 1).unwrap(), CofiniteSet::tail(2));
        let s57 = s(&[5, 7]);
        assert_eq!(pairs_set(&s57, 24).unwrap(), s57.as_cofinite());
        assert_eq!(pairs_set(&s57, 0).unwrap_err(), Error::NonPositiveStep(0));
    }

    #[test]
    fn triples_of_57_step_1() {
        let r = irreducible_triples(&s(&[5, 7]), 1).unwrap();
        assert_eq!(r.triples_set, CofiniteSet::from_parts(24, &[19, 20]));
        assert_eq!(
            r.irreducible,
            vec![19, 20, 24, 25, 26, 27, 29, 30, 31, 32, 36, 37]
        );
        assert_eq!(r.count, 12);
        assert_eq!(torsion_length_2gen(&s(&[5, 7]), 1).unwrap(), 12);
    }

    #[test]
    fn triples_of_57_step_23() {
        let r = irreducible_triples(&s(&[5, 7]), 23).unwrap();
        assert!(r.irreducible.contains(&5));
        assert!(r.irreducible.contains(&7));
        assert!(r.count >= 1);
    }

    #[test]
    fn triples_of_23() {
        let r = irreducible_triples(&s(&[2, 3]), 1).unwrap();
        assert_eq!(r.triples_set, CofiniteSet::tail(2));
        assert_eq!(r.irreducible, vec![2, 3]);
        assert_eq!(torsion_length_2gen(&s(&[2, 3]), 2).unwrap(), 0);
    }

    #[test]
    fn hw_reports() {
        let r = hw_check_semigroup(&s(&[5, 7])).unwrap();
        assert!(r.all_positive);
        assert_eq!(r.per_gap.len(), 12);
        let r = hw_check_semigroup(&s(&[2, 3])).unwrap();
        assert_eq!(
            r.per_gap,
            vec![GapCount {
                n: 1,
                count: 2,
                min_irreducible: Some(2)
            }]
        );
        let r = hw_check_semigroup(&s(&[1])).unwrap();
        assert!(r.per_gap.is_empty() && r.all_positive);
        assert_eq!(r.counterexamples().count(), 0);
    }
}
