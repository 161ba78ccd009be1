//! Torsion in the semigroup tensor product `A ⊗_S B`.
//!
//! `A ⊗_S B` is `A × B` modulo `(s + a, b) ~ (a, s + b)`. The fiber over `z`
//! of the sum map `χ(a ⊗ b) = a + b` has one class per connected component
//! of the bipartite graph `Γ_z(A, B)` on the minimal generators, and
//! `τ_z(A, B) = max(0, |χ⁻¹(z)| - 1)`. Summing over `z` gives the torsion
//! number `τ(A, B)`, which for monomial ideals is the length of the torsion
//! submodule of `I ⊗ J`.
//!
//! [`fiber_oracle`] counts the classes straight from the tensor relation and
//! never looks at the graph, so the two can be checked against each other.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::{CofiniteSet, Error, RelativeIdeal, Result, UnionFind};

/// The bipartite graph `Γ_z(A, B)`.
///
/// Vertex `v_i` is the `i`-th minimal generator of `A` (0-based here), present
/// when `z - a_i ∈ B`; `w_j` likewise for `B`. Edge `v_i w_j` is present when
/// `z - a_i - b_j ∈ S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaGraph {
    pub z: i64,
    pub left_vertices: Vec<usize>,
    pub right_vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    pub component_count: usize,
}

impl GammaGraph {
    /// Edges with 1-based indices, matching the `v1..vm`, `w1..wn` naming.
    pub fn edges_one_based(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|&(i, j)| (i + 1, j + 1)).collect()
    }

    pub fn tau(&self) -> u64 {
        self.component_count.saturating_sub(1) as u64
    }

    /// Graphviz rendering; isolated vertices are listed so every component shows.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph gamma_{} {{", self.z);
        let _ = writeln!(out, "  label=\"Gamma_{}\";", self.z);
        for &i in &self.left_vertices {
            let _ = writeln!(out, "  v{};", i + 1);
        }
        for &j in &self.right_vertices {
            let _ = writeln!(out, "  w{};", j + 1);
        }
        for &(i, j) in &self.edges {
            let _ = writeln!(out, "  v{} -- w{};", i + 1, j + 1);
        }
        out.push_str("}\n");
        out
    }
}

fn same_semigroup(a: &RelativeIdeal, b: &RelativeIdeal) -> Result<()> {
    if a.semigroup().same_as(b.semigroup()) {
        Ok(())
    } else {
        Err(Error::SemigroupMismatch)
    }
}

pub fn gamma_graph(a: &RelativeIdeal, b: &RelativeIdeal, z: i64) -> Result<GammaGraph> {
    same_semigroup(a, b)?;
    let s = a.semigroup();
    let (ga, gb) = (a.generators(), b.generators());
    let left: Vec<usize> = (0..ga.len()).filter(|&i| b.contains(z - ga[i])).collect();
    let right: Vec<usize> = (0..gb.len()).filter(|&j| a.contains(z - gb[j])).collect();
    let mut edges = Vec::new();
    let mut uf = UnionFind::new(ga.len() + gb.len());
    for (i, &ai) in ga.iter().enumerate() {
        for (j, &bj) in gb.iter().enumerate() {
            if s.contains(z - ai - bj) {
                edges.push((i, j));
                uf.union(i, ga.len() + j);
            }
        }
    }
    let absent = ga.len() + gb.len() - left.len() - right.len();
    Ok(GammaGraph {
        z,
        left_vertices: left,
        right_vertices: right,
        edges,
        component_count: uf.components() - absent,
    })
}

/// Component count of `Γ_z(A, B)` without materializing the graph.
///
/// `parent` is scratch space of length at least `μ(A) + μ(B)`.
fn component_count(a: &RelativeIdeal, b: &RelativeIdeal, z: i64, parent: &mut [usize]) -> usize {
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let s = a.semigroup();
    let (ga, gb) = (a.generators(), b.generators());
    let m = ga.len();
    let mut count = 0;
    for (i, &ai) in ga.iter().enumerate() {
        parent[i] = i;
        count += b.contains(z - ai) as usize;
    }
    for (j, &bj) in gb.iter().enumerate() {
        parent[m + j] = m + j;
        count += a.contains(z - bj) as usize;
    }
    for (i, &ai) in ga.iter().enumerate() {
        for (j, &bj) in gb.iter().enumerate() {
            if s.contains(z - ai - bj) {
                let (ri, rj) = (find(parent, i), find(parent, m + j));
                if ri != rj {
                    parent[ri] = rj;
                    count -= 1;
                }
            }
        }
    }
    count
}

/// `τ_z(A, B)`: one less than the number of components of `Γ_z(A, B)`.
pub fn tau_z(a: &RelativeIdeal, b: &RelativeIdeal, z: i64) -> Result<u64> {
    same_semigroup(a, b)?;
    let mut scratch = alloc::vec![0; a.mu() + b.mu()];
    Ok(component_count(a, b, z, &mut scratch).saturating_sub(1) as u64)
}

/// Range of `z` outside of which `τ_z(A, B)` vanishes.
///
/// Below `min A + min B` the fiber is empty. Above `F + max A + max B` every
/// `z - a_i - b_j` exceeds `F`, so the graph is complete bipartite.
pub fn scan_window(a: &RelativeIdeal, b: &RelativeIdeal) -> (i64, i64) {
    let f = a.semigroup().frobenius();
    (
        a.min_element() + b.min_element(),
        f + a.max_generator() + b.max_generator(),
    )
}

/// The nonzero `τ_z` values of a pair of ideals and their sum `τ(A, B)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionProfile {
    /// Inclusive scan window.
    pub window: (i64, i64),
    pub tau_by_z: BTreeMap<i64, u64>,
    pub total: u64,
    pub support_size: usize,
}

pub fn torsion_profile(a: &RelativeIdeal, b: &RelativeIdeal) -> Result<TorsionProfile> {
    same_semigroup(a, b)?;
    let window = scan_window(a, b);
    let mut scratch = alloc::vec![0; a.mu() + b.mu()];
    let mut tau_by_z = BTreeMap::new();
    let mut total = 0;
    for z in window.0..=window.1 {
        let t = component_count(a, b, z, &mut scratch).saturating_sub(1) as u64;
        if t > 0 {
            tau_by_z.insert(z, t);
            total += t;
        }
    }
    Ok(TorsionProfile {
        window,
        support_size: tau_by_z.len(),
        tau_by_z,
        total,
    })
}

/// `τ(A, B)` alone.
pub fn tau(a: &RelativeIdeal, b: &RelativeIdeal) -> Result<u64> {
    Ok(torsion_profile(a, b)?.total)
}

/// Tensor classes over `z`, each listed by its first coordinates `a`
/// (the class of `a ⊗ (z - a)`), ascending.
///
/// Nodes are the `a ∈ A` with `z - a ∈ B`. The relation
/// `(s + a', b) ~ (a', s + b)` joins nodes `a > a'` with `a - a' ∈ S`. Every
/// such step factors into single steps by semigroup generators whose
/// intermediate points are again nodes, so only those are joined here.
pub fn fiber_classes(a: &RelativeIdeal, b: &RelativeIdeal, z: i64) -> Result<Vec<Vec<i64>>> {
    let (nodes, mut uf) = fiber_union_find(a, b, z)?;
    let mut classes: BTreeMap<usize, Vec<i64>> = BTreeMap::new();
    for (k, &x) in nodes.iter().enumerate() {
        classes.entry(uf.find(k)).or_default().push(x);
    }
    let mut out: Vec<Vec<i64>> = classes.into_values().collect();
    out.sort();
    Ok(out)
}

/// Number of tensor classes over `z`, computed from the tensor relation alone.
pub fn fiber_oracle(a: &RelativeIdeal, b: &RelativeIdeal, z: i64) -> Result<usize> {
    let (_, uf) = fiber_union_find(a, b, z)?;
    Ok(uf.components())
}

fn fiber_union_find(a: &RelativeIdeal, b: &RelativeIdeal, z: i64) -> Result<(Vec<i64>, UnionFind)> {
    same_semigroup(a, b)?;
    let lo = a.min_element();
    let hi = z - b.min_element();
    let mut slot = alloc::vec![usize::MAX; (hi - lo + 1).max(0) as usize];
    let mut nodes = Vec::new();
    for x in lo..=hi {
        if a.contains(x) && b.contains(z - x) {
            slot[(x - lo) as usize] = nodes.len();
            nodes.push(x);
        }
    }
    let mut uf = UnionFind::new(nodes.len());
    for (k, &x) in nodes.iter().enumerate() {
        for &n in a.semigroup().generators() {
            if x - n >= lo {
                let l = slot[(x - n - lo) as usize];
                if l != usize::MAX {
                    uf.union(k, l);
                }
            }
        }
    }
    Ok((nodes, uf))
}

/// A failing split `G(A) = P ⊔ Q` of the split criterion, with the smallest
/// element of `(A_P + B) ∩ (A_Q + B)` missing from `(A_P ∩ A_Q) + B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitWitness {
    pub left: Vec<i64>,
    pub right: Vec<i64>,
    pub element: i64,
}

/// Default cap on `μ(A)` for split enumeration.
pub const DEFAULT_SPLIT_CAP: usize = 16;

/// Semigroup-level split criterion: `A ⊗ B` is torsion-free iff
/// `(A_P ∩ A_Q) + B = (A_P + B) ∩ (A_Q + B)` for every split of the minimal
/// generators of `A` into non-empty parts `P`, `Q`.
///
/// Returns `None` when every split passes, or the first failing split.
pub fn torsion_free_split_check(
    a: &RelativeIdeal,
    b: &RelativeIdeal,
    cap: usize,
) -> Result<Option<SplitWitness>> {
    same_semigroup(a, b)?;
    let mu = a.mu();
    if mu > cap || mu >= 64 {
        return Err(Error::SplitCapExceeded { mu, cap });
    }
    let full = (1u64 << mu) - 1;
    // A split and its mirror test the same equation; fix generator 0 on the left.
    for mask in (1..full).step_by(2) {
        let p = a.restrict(mask).expect("mask selects generator 0");
        let q = a.restrict(full ^ mask).expect("proper split");
        let lhs = p.intersect(&q)?.sum(b)?;
        let rhs = p.sum(b)?.intersect(&q.sum(b)?)?;
        if lhs != rhs {
            let element = rhs.set().difference(lhs.set())[0];
            return Ok(Some(SplitWitness {
                left: p.generators().to_vec(),
                right: q.generators().to_vec(),
                element,
            }));
        }
    }
    Ok(None)
}

/// `τ(A, B) - |C \ (A + B)|`, where `C ⊇ A + B` stands for the value set of
/// the product ideal `IJ`.
pub fn bound_with_correction(
    a: &RelativeIdeal,
    b: &RelativeIdeal,
    correction: &CofiniteSet,
) -> Result<i64> {
    let sum = a.sum(b)?;
    if !sum.set().is_subset(correction) {
        return Err(Error::CorrectionNotSuperset);
    }
    let t = tau(a, b)? as i64;
    Ok(t - correction.difference_card(sum.set()) as i64)
}
