//! Exhaustive search campaigns over two-generated semigroups `<a, b>` and
//! their relative ideals.
//!
//! Ideals are enumerated in shift-normal form: the smallest generator is `0`
//! and every other generator lies in `[0, gen_window)`. Each campaign writes
//! one record per tested tuple, in a fixed order (by `(a, b)`, then by the
//! enumeration order of the ideals), so identical specs produce identical
//! output regardless of the number of worker threads.

use std::collections::BTreeMap;
use std::fmt;
use std::io;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use semitorsion_core::hw;
use semitorsion_core::hypersurface::{dual_symmetric, HypersurfaceSemigroup};
use semitorsion_core::torsion::{self, fiber_oracle, scan_window, torsion_free_split_check};
use semitorsion_core::{NumericalSemigroup, RelativeIdeal};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mode {
    /// `τ + |supp| ≥ μ(A)μ(B)` and `2τ ≥ μ(A)μ(B)` for non-principal pairs.
    HalfMuBound,
    /// Closed-form, brute-force and reflection duals agree; biduality;
    /// rotation invariance; torsion generator count `≥ 2μ - 2`.
    DualConsistency,
    /// Irreducible triples exist for every gap of `<a, b>`.
    Hw,
    /// `Γ_z` component counts against the fiber oracle, on every fiber.
    OracleCompare,
    /// Split criterion `⇔ τ = 0`, `τ(A,B) = τ(B,A)`, shift invariance.
    SplitCriterion,
}

impl Mode {
    pub const ALL: [Mode; 5] = [
        Mode::HalfMuBound,
        Mode::DualConsistency,
        Mode::Hw,
        Mode::OracleCompare,
        Mode::SplitCriterion,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mode::HalfMuBound => "half-mu-bound",
            Mode::DualConsistency => "dual-consistency",
            Mode::Hw => "hw",
            Mode::OracleCompare => "oracle-compare",
            Mode::SplitCriterion => "split-criterion",
        }
    }

    /// Column names of the CSV output.
    pub fn csv_header(self) -> &'static str {
        match self {
            Mode::HalfMuBound => "a,b,gens_A,gens_B,tau,support,mu_A,mu_B,bound_ok",
            Mode::DualConsistency => {
                "a,b,gens_A,dual_gens,formula_ok,symmetric_ok,bidual_ok,rotation_ok,boundary_ok,torsion_pairs,bound_ok"
            }
            Mode::Hw => "a,b,gaps,min_count,routes_ok,all_positive,bound_ok",
            Mode::OracleCompare => "semigroup,gens_A,gens_B,fibers,disagreements,bound_ok",
            Mode::SplitCriterion => {
                "a,b,gens_A,gens_B,tau,tau_swapped,split_torsion_free,shift_ok,bound_ok"
            }
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Mode::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown mode {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchSpec {
    pub mode: Mode,
    /// Largest `a·b` of the semigroups `<a, b>` visited.
    pub ab_max: i64,
    /// Width of the generator range; `None` means `a + b` for each semigroup.
    pub gen_window: Option<i64>,
    pub mu_max: usize,
    pub seed: u64,
    /// Random general-semigroup samples added by the oracle-compare mode.
    pub samples: usize,
}

impl SearchSpec {
    pub fn new(mode: Mode, ab_max: i64, mu_max: usize) -> Self {
        Self {
            mode,
            ab_max,
            gen_window: None,
            mu_max,
            seed: 0,
            samples: 0,
        }
    }
}

fn list_field(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HalfMuRecord {
    pub a: i64,
    pub b: i64,
    #[serde(rename = "gens_A")]
    pub gens_a: Vec<i64>,
    #[serde(rename = "gens_B")]
    pub gens_b: Vec<i64>,
    pub tau: u64,
    pub support: usize,
    #[serde(rename = "mu_A")]
    pub mu_a: usize,
    #[serde(rename = "mu_B")]
    pub mu_b: usize,
    pub bound_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualRecord {
    pub a: i64,
    pub b: i64,
    #[serde(rename = "gens_A")]
    pub gens_a: Vec<i64>,
    pub dual_gens: Vec<i64>,
    pub formula_ok: bool,
    pub symmetric_ok: bool,
    pub bidual_ok: bool,
    pub rotation_ok: bool,
    pub boundary_ok: bool,
    pub torsion_pairs: usize,
    pub bound_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HwRecord {
    pub a: i64,
    pub b: i64,
    pub gaps: usize,
    pub min_count: Option<u64>,
    pub routes_ok: bool,
    pub all_positive: bool,
    pub bound_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleRecord {
    pub semigroup: Vec<i64>,
    #[serde(rename = "gens_A")]
    pub gens_a: Vec<i64>,
    #[serde(rename = "gens_B")]
    pub gens_b: Vec<i64>,
    pub fibers: usize,
    pub disagreements: usize,
    pub bound_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitRecord {
    pub a: i64,
    pub b: i64,
    #[serde(rename = "gens_A")]
    pub gens_a: Vec<i64>,
    #[serde(rename = "gens_B")]
    pub gens_b: Vec<i64>,
    pub tau: u64,
    pub tau_swapped: u64,
    pub split_torsion_free: bool,
    pub shift_ok: bool,
    pub bound_ok: bool,
}

/// One line of search output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Record {
    HalfMu(HalfMuRecord),
    Dual(DualRecord),
    Hw(HwRecord),
    Oracle(OracleRecord),
    Split(SplitRecord),
}

impl Record {
    pub fn bound_ok(&self) -> bool {
        match self {
            Record::HalfMu(r) => r.bound_ok,
            Record::Dual(r) => r.bound_ok,
            Record::Hw(r) => r.bound_ok,
            Record::Oracle(r) => r.bound_ok,
            Record::Split(r) => r.bound_ok,
        }
    }

    /// A CSV row matching [`Mode::csv_header`]; list fields are space-separated.
    pub fn csv_row(&self) -> String {
        match self {
            Record::HalfMu(r) => format!(
                "{},{},{},{},{},{},{},{},{}",
                r.a,
                r.b,
                list_field(&r.gens_a),
                list_field(&r.gens_b),
                r.tau,
                r.support,
                r.mu_a,
                r.mu_b,
                r.bound_ok
            ),
            Record::Dual(r) => format!(
                "{},{},{},{},{},{},{},{},{},{},{}",
                r.a,
                r.b,
                list_field(&r.gens_a),
                list_field(&r.dual_gens),
                r.formula_ok,
                r.symmetric_ok,
                r.bidual_ok,
                r.rotation_ok,
                r.boundary_ok,
                r.torsion_pairs,
                r.bound_ok
            ),
            Record::Hw(r) => format!(
                "{},{},{},{},{},{},{}",
                r.a,
                r.b,
                r.gaps,
                r.min_count.map_or(String::new(), |c| c.to_string()),
                r.routes_ok,
                r.all_positive,
                r.bound_ok
            ),
            Record::Oracle(r) => format!(
                "{},{},{},{},{},{}",
                list_field(&r.semigroup),
                list_field(&r.gens_a),
                list_field(&r.gens_b),
                r.fibers,
                r.disagreements,
                r.bound_ok
            ),
            Record::Split(r) => format!(
                "{},{},{},{},{},{},{},{},{}",
                r.a,
                r.b,
                list_field(&r.gens_a),
                list_field(&r.gens_b),
                r.tau,
                r.tau_swapped,
                r.split_torsion_free,
                r.shift_ok,
                r.bound_ok
            ),
        }
    }
}

/// Totals and extremal values of a campaign.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub mode: String,
    pub semigroups: usize,
    pub tuples: usize,
    pub violations: usize,
    /// The first few violating records, in output order.
    pub examples: Vec<Record>,
    pub stats: BTreeMap<&'static str, i64>,
}

const MAX_EXAMPLES: usize = 10;

impl Summary {
    fn new(mode: Mode) -> Self {
        Self {
            mode: mode.name().to_string(),
            semigroups: 0,
            tuples: 0,
            violations: 0,
            examples: Vec::new(),
            stats: BTreeMap::new(),
        }
    }

    fn track_min(&mut self, key: &'static str, v: i64) {
        let e = self.stats.entry(key).or_insert(v);
        *e = (*e).min(v);
    }

    fn track_max(&mut self, key: &'static str, v: i64) {
        let e = self.stats.entry(key).or_insert(v);
        *e = (*e).max(v);
    }

    fn add(&mut self, key: &'static str, v: i64) {
        *self.stats.entry(key).or_insert(0) += v;
    }

    fn observe(&mut self, record: &Record) {
        self.tuples += 1;
        if !record.bound_ok() {
            self.violations += 1;
            if self.examples.len() < MAX_EXAMPLES {
                self.examples.push(record.clone());
            }
        }
        match record {
            Record::HalfMu(r) => {
                let mm = (r.mu_a * r.mu_b) as i64;
                self.track_min("min_twice_tau_minus_mu_product", 2 * r.tau as i64 - mm);
                self.track_min(
                    "min_tau_plus_support_minus_mu_product",
                    r.tau as i64 + r.support as i64 - mm,
                );
                self.track_max("max_tau", r.tau as i64);
            }
            Record::Dual(r) => {
                let mu = r.gens_a.len() as i64;
                self.track_min(
                    "min_torsion_pairs_minus_bound",
                    r.torsion_pairs as i64 - (2 * mu - 2),
                );
                self.track_max("max_torsion_pairs", r.torsion_pairs as i64);
            }
            Record::Hw(r) => {
                if let Some(c) = r.min_count {
                    self.track_min("min_count", c as i64);
                }
                self.add("gaps", r.gaps as i64);
                self.add("route_mismatches", !r.routes_ok as i64);
            }
            Record::Oracle(r) => {
                self.add("fibers", r.fibers as i64);
                self.add("disagreements", r.disagreements as i64);
            }
            Record::Split(r) => {
                self.add("torsion_free_pairs", (r.tau == 0) as i64);
                self.add("split_free_pairs", r.split_torsion_free as i64);
                self.track_max("max_tau", r.tau as i64);
            }
        }
    }
}

/// Coprime `(a, b)` with `1 < a < b` and `a·b ≤ ab_max`, ascending.
pub fn coprime_pairs(ab_max: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    let mut a = 2;
    while a * (a + 1) <= ab_max {
        for b in a + 1..=ab_max / a {
            if gcd(a, b) == 1 {
                out.push((a, b));
            }
        }
        a += 1;
    }
    out
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// All relative ideals of `s` with minimal generators `0 = g1 < ... < gk`
/// in `[0, window)` and `k ≤ mu_max`, in lexicographic order of generators.
///
/// Minimal generating sets are unique, so each ideal appears exactly once.
pub fn canonical_ideals(s: &NumericalSemigroup, window: i64, mu_max: usize) -> Vec<RelativeIdeal> {
    fn extend(
        s: &NumericalSemigroup,
        chosen: &mut Vec<i64>,
        from: i64,
        window: i64,
        mu_max: usize,
        out: &mut Vec<RelativeIdeal>,
    ) {
        out.push(RelativeIdeal::new(s, chosen).expect("non-empty"));
        if chosen.len() == mu_max {
            return;
        }
        for g in from..window {
            if chosen.iter().all(|&c| !s.contains(g - c)) {
                chosen.push(g);
                extend(s, chosen, g + 1, window, mu_max, out);
                chosen.pop();
            }
        }
    }
    let mut out = Vec::new();
    if mu_max > 0 {
        extend(s, &mut vec![0], 1, window, mu_max, &mut out);
    }
    out
}

pub fn half_mu_record(
    h: &HypersurfaceSemigroup,
    a: &RelativeIdeal,
    b: &RelativeIdeal,
) -> HalfMuRecord {
    let r = h
        .check_half_mu_bound(a, b)
        .expect("non-principal ideals over the same semigroup");
    HalfMuRecord {
        a: h.a(),
        b: h.b(),
        gens_a: a.generators().to_vec(),
        gens_b: b.generators().to_vec(),
        tau: r.tau,
        support: r.support,
        mu_a: r.mu_a,
        mu_b: r.mu_b,
        bound_ok: r.bound_ok(),
    }
}

pub fn dual_record(h: &HypersurfaceSemigroup, a: &RelativeIdeal) -> DualRecord {
    let by_formula = h.dual_formula(a).expect("ideal over <a, b>");
    let brute = a.dual();
    let reflected = dual_symmetric(a).expect("two-generated semigroups are symmetric");
    let formula_ok = by_formula == brute;
    let symmetric_ok = reflected == brute;
    let bidual_ok = h.dual_formula(&by_formula).expect("ideal over <a, b>") == *a;
    let rotation_ok = h
        .rotations(a)
        .expect("ideal over <a, b>")
        .iter()
        .all(|r| h.dual_from_ordered(r) == by_formula);
    let boundary_ok = h
        .boundary_cycle(a)
        .map(|c| c.cycle.len() as i64 == h.a() + h.b() && c.maximal().len() == a.mu())
        .unwrap_or(false);
    let torsion_pairs = h.torsion_generator_pairs(a).expect("ideal over <a, b>");
    let pairs_ok = torsion_pairs + 2 >= 2 * a.mu();
    DualRecord {
        a: h.a(),
        b: h.b(),
        gens_a: a.generators().to_vec(),
        dual_gens: by_formula.generators().to_vec(),
        formula_ok,
        symmetric_ok,
        bidual_ok,
        rotation_ok,
        boundary_ok,
        torsion_pairs,
        bound_ok: formula_ok && symmetric_ok && bidual_ok && rotation_ok && boundary_ok && pairs_ok,
    }
}

pub fn hw_record(h: &HypersurfaceSemigroup) -> HwRecord {
    let s = h.base();
    let (report, routes_ok) = match hw::hw_check_semigroup(s) {
        Ok(r) => (Some(r), true),
        Err(_) => (None, false),
    };
    let all_positive = report.as_ref().is_some_and(|r| r.all_positive);
    HwRecord {
        a: h.a(),
        b: h.b(),
        gaps: s.gaps().len(),
        min_count: report
            .as_ref()
            .and_then(|r| r.per_gap.iter().map(|g| g.count).min()),
        routes_ok,
        all_positive,
        bound_ok: routes_ok && all_positive,
    }
}

pub fn oracle_record(a: &RelativeIdeal, b: &RelativeIdeal) -> OracleRecord {
    let (lo, hi) = scan_window(a, b);
    let mut disagreements = 0;
    for z in lo..=hi {
        let graph = torsion::gamma_graph(a, b, z)
            .expect("same semigroup")
            .component_count;
        if graph != fiber_oracle(a, b, z).expect("same semigroup") {
            disagreements += 1;
        }
    }
    OracleRecord {
        semigroup: a.semigroup().generators().to_vec(),
        gens_a: a.generators().to_vec(),
        gens_b: b.generators().to_vec(),
        fibers: (hi - lo + 1).max(0) as usize,
        disagreements,
        bound_ok: disagreements == 0,
    }
}

pub fn split_record(
    h: &HypersurfaceSemigroup,
    a: &RelativeIdeal,
    b: &RelativeIdeal,
) -> SplitRecord {
    let tau = torsion::tau(a, b).expect("same semigroup");
    let tau_swapped = torsion::tau(b, a).expect("same semigroup");
    let shifted = torsion::tau(&a.shift(3), &b.shift(-5)).expect("same semigroup");
    let split_torsion_free = torsion_free_split_check(a, b, torsion::DEFAULT_SPLIT_CAP)
        .expect("mu within cap")
        .is_none();
    let shift_ok = shifted == tau;
    SplitRecord {
        a: h.a(),
        b: h.b(),
        gens_a: a.generators().to_vec(),
        gens_b: b.generators().to_vec(),
        tau,
        tau_swapped,
        split_torsion_free,
        shift_ok,
        bound_ok: split_torsion_free == (tau == 0) && tau == tau_swapped && shift_ok,
    }
}

/// Unordered pairs `(i, j)` with `i ≤ j`.
fn unordered_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect()
}

fn records_for(spec: &SearchSpec, h: &HypersurfaceSemigroup) -> Vec<Record> {
    let s = h.base();
    let window = spec.gen_window.unwrap_or(h.a() + h.b());
    if spec.mode == Mode::Hw {
        return vec![Record::Hw(hw_record(h))];
    }
    let ideals = canonical_ideals(s, window, spec.mu_max);
    match spec.mode {
        Mode::HalfMuBound => {
            let np: Vec<&RelativeIdeal> = ideals.iter().filter(|i| !i.is_principal()).collect();
            unordered_pairs(np.len())
                .into_par_iter()
                .map(|(i, j)| Record::HalfMu(half_mu_record(h, np[i], np[j])))
                .collect()
        }
        Mode::DualConsistency => ideals
            .par_iter()
            .map(|a| Record::Dual(dual_record(h, a)))
            .collect(),
        Mode::OracleCompare => unordered_pairs(ideals.len())
            .into_par_iter()
            .map(|(i, j)| Record::Oracle(oracle_record(&ideals[i], &ideals[j])))
            .collect(),
        Mode::SplitCriterion => {
            let n = ideals.len();
            (0..n * n)
                .into_par_iter()
                .map(|k| Record::Split(split_record(h, &ideals[k / n], &ideals[k % n])))
                .collect()
        }
        Mode::Hw => unreachable!(),
    }
}

/// Random general semigroups with 2 to 4 generators below 13 and random
/// ideals, for the oracle comparison beyond the two-generated case.
fn sampled_oracle_records(spec: &SearchSpec) -> Vec<Record> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut cases = Vec::with_capacity(spec.samples);
    while cases.len() < spec.samples {
        let k = rng.gen_range(2..=4);
        let gens: Vec<i64> = (0..k).map(|_| rng.gen_range(2..13)).collect();
        let Ok(s) = NumericalSemigroup::new(&gens) else {
            continue;
        };
        let ideal = |rng: &mut ChaCha8Rng| {
            let m = rng.gen_range(1..=spec.mu_max.max(1));
            let g: Vec<i64> = (0..m).map(|_| rng.gen_range(-5..20)).collect();
            RelativeIdeal::new(&s, &g).expect("non-empty")
        };
        let a = ideal(&mut rng);
        let b = ideal(&mut rng);
        cases.push((a, b));
    }
    cases
        .par_iter()
        .map(|(a, b)| Record::Oracle(oracle_record(a, b)))
        .collect()
}

/// Runs a campaign, handing every record to `sink` in output order.
pub fn run(
    spec: &SearchSpec,
    mut sink: impl FnMut(&Record) -> io::Result<()>,
) -> io::Result<Summary> {
    let mut summary = Summary::new(spec.mode);
    for (a, b) in coprime_pairs(spec.ab_max) {
        let h = HypersurfaceSemigroup::new(a, b).expect("coprime pair");
        summary.semigroups += 1;
        for record in records_for(spec, &h) {
            summary.observe(&record);
            sink(&record)?;
        }
    }
    if spec.mode == Mode::OracleCompare && spec.samples > 0 {
        for record in sampled_oracle_records(spec) {
            summary.observe(&record);
            sink(&record)?;
        }
    }
    Ok(summary)
}
