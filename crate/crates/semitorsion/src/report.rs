//! JSON shapes for command output.

use serde::Serialize;

use semitorsion_core::hw::HwReport;
use semitorsion_core::torsion::TorsionProfile;
use semitorsion_core::NumericalSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InfoReport {
    pub generators: Vec<i64>,
    pub frobenius: i64,
    pub multiplicity: i64,
    pub genus: usize,
    pub gaps: Vec<i64>,
    pub symmetric: bool,
}

impl InfoReport {
    pub fn new(s: &NumericalSemigroup) -> Self {
        Self {
            generators: s.generators().to_vec(),
            frobenius: s.frobenius(),
            multiplicity: s.multiplicity(),
            genus: s.genus(),
            gaps: s.gaps(),
            symmetric: s.is_symmetric(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TauEntry {
    pub z: i64,
    pub tau_z: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TauReport {
    pub semigroup: Vec<i64>,
    #[serde(rename = "gens_A")]
    pub gens_a: Vec<i64>,
    #[serde(rename = "gens_B")]
    pub gens_b: Vec<i64>,
    pub tau: u64,
    pub support: usize,
    pub window: (i64, i64),
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile: Option<Vec<TauEntry>>,
}

impl TauReport {
    pub fn new(
        s: &NumericalSemigroup,
        gens_a: &[i64],
        gens_b: &[i64],
        profile: &TorsionProfile,
        with_profile: bool,
    ) -> Self {
        Self {
            semigroup: s.generators().to_vec(),
            gens_a: gens_a.to_vec(),
            gens_b: gens_b.to_vec(),
            tau: profile.total,
            support: profile.support_size,
            window: profile.window,
            profile: with_profile.then(|| {
                profile
                    .tau_by_z
                    .iter()
                    .map(|(&z, &tau_z)| TauEntry { z, tau_z })
                    .collect()
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HwGap {
    pub n: i64,
    pub count: u64,
    pub min_irreducible: Option<i64>,
}

/// `{semigroup, gaps: [{n, count, min_irreducible}], all_positive}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HwJson {
    pub semigroup: Vec<i64>,
    pub gaps: Vec<HwGap>,
    pub all_positive: bool,
}

impl HwJson {
    pub fn new(s: &NumericalSemigroup, report: &HwReport) -> Self {
        Self {
            semigroup: s.generators().to_vec(),
            gaps: report
                .per_gap
                .iter()
                .map(|g| HwGap {
                    n: g.n,
                    count: g.count,
                    min_irreducible: g.min_irreducible,
                })
                .collect(),
            all_positive: report.all_positive,
        }
    }
}
