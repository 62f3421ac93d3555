//! Verification campaigns over exhaustively enumerated populations.
//!
//! For each gamma and genus the gamma-hyperelliptic population is enumerated
//! and checked against the K- and S-weight bounds, the weight identities,
//! the small-genus minimum values, the extremal constructions and, for
//! multiplicity 4, the discrete K-weight spectrum. Anything that disagrees
//! lands in a violation list; nothing is asserted fatally.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::gamma;
use crate::harness::analyze::Bounds;
use crate::semigroup::Semigroup;
use crate::tableau::{path_of, Mode};
use crate::tree::{self, EnumerationOptions, TreeNode, Visitor};
use crate::weights;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub gamma_max: u32,
    pub genus_max: u32,
    /// Limits each gamma to genera `[2 gamma, 2 gamma + span]`.
    pub genus_span: Option<u32>,
    pub threads: usize,
    pub serial_depth: u32,
    /// Genus limit of the gamma-independent identity suite.
    pub identity_genus_max: u32,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            gamma_max: 3,
            genus_max: 16,
            genus_span: None,
            threads: 1,
            serial_depth: tree::DEFAULT_SERIAL_DEPTH,
            identity_genus_max: 10,
        }
    }
}

impl VerifyConfig {
    /// Genera checked for `gamma`, possibly empty.
    pub fn genus_range(&self, gamma: u32) -> std::ops::RangeInclusive<u32> {
        let lo = (2 * gamma).max(1);
        let hi = match self.genus_span {
            Some(span) => self.genus_max.min(2 * gamma + span),
            None => self.genus_max,
        };
        lo..=hi
    }

    fn options(&self) -> EnumerationOptions {
        EnumerationOptions {
            threads: self.threads,
            serial_depth: self.serial_depth,
            gammas: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    KBound,
    SBound,
    KWeightIdentity,
    Symmetry,
    Pairing,
    ComplementArea,
    OddList,
    EvenTail,
    Tableau,
    SmallGenusMinimum,
    LowerUnattained,
    Minimizer,
    Prop2Spectrum,
    Prop2Family,
    Prop2Nonmaximal,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub gamma: Option<u32>,
    pub genus: u32,
    pub gaps: Option<Vec<u32>>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmallGenusCheck {
    pub expected_min_w_k: i64,
    pub observed_min_w_k: Option<i64>,
    pub holds: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximizerCheck {
    pub generators: [u32; 3],
    /// Gap set of the construction, if it is in range.
    pub gaps: Option<Vec<u32>>,
    pub upper_k_attained: bool,
    /// The attainers of the upper bound are exactly the construction.
    pub unique_attainer: bool,
    /// Uniqueness is expected from `g >= 4 gamma + 1` on.
    pub asserted: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prop2Member {
    pub gaps: Vec<u32>,
    pub w_k: i64,
    /// Values of `k` whose spectrum value equals `w_k`.
    pub spectrum_k: Vec<u32>,
    /// The family index whose construction equals this semigroup.
    pub family_k: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prop2Record {
    pub population: u64,
    pub spectrum: Vec<(u32, i64)>,
    pub nonmaximal_range: (i64, i64),
    /// `k` values whose four-generator construction is in range.
    pub family_in_range: Vec<u32>,
    pub members: Vec<Prop2Member>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellRecord {
    pub gamma: u32,
    pub genus: u32,
    pub population: u64,
    pub vacuous: bool,
    pub min_w_k: Option<i64>,
    pub max_w_k: Option<i64>,
    pub min_w_s: Option<i64>,
    pub max_w_s: Option<i64>,
    pub min_attainers: Vec<Vec<u32>>,
    pub max_attainers: Vec<Vec<u32>>,
    pub bounds: Option<Bounds>,
    pub small_genus: Option<SmallGenusCheck>,
    pub minimizer_attains: Option<bool>,
    pub maximizer: Option<MaximizerCheck>,
    pub prop2: Option<Prop2Record>,
    pub violations: Vec<Violation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentitySummary {
    pub genus_max: u32,
    pub checked: u64,
    pub gamma_members: u64,
    pub failures: Vec<Violation>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub gamma_max: u32,
    pub genus_max: u32,
    pub genus_span: Option<u32>,
    pub cells: Vec<CellRecord>,
    pub identities: IdentitySummary,
    pub violation_count: u64,
    /// Cells with `g >= 4 gamma + 1` whose upper-bound attainers are not
    /// exactly the three-generator maximizer.
    pub uniqueness_exceptions: Vec<(u32, u32)>,
    pub runtime_ms: u64,
}

impl SweepResult {
    pub fn cell(&self, gamma: u32, genus: u32) -> Option<&CellRecord> {
        self.cells.iter().find(|c| c.gamma == gamma && c.genus == genus)
    }

    pub fn violations(&self) -> impl Iterator<Item = &Violation> {
        self.cells
            .iter()
            .flat_map(|c| c.violations.iter())
            .chain(self.identities.failures.iter())
    }

    pub fn is_clean(&self) -> bool {
        self.violation_count == 0
    }
}

/// Per-semigroup data computed inside the enumeration workers.
#[derive(Debug, Clone)]
struct Member {
    gaps: Vec<u32>,
    multiplicity: u32,
    w_s: i64,
    w_k: i64,
    violations: Vec<Violation>,
}

/// Weight identities that hold for every semigroup of genus >= 1, plus the
/// tableau box counts.
fn identity_failures(s: &Semigroup, out: &mut Vec<Violation>) {
    let g = i64::from(s.genus());
    if g == 0 {
        return;
    }
    let w_s = weights::s_weight(s) as i64;
    let w_k = weights::k_weight(s) as i64;
    let r = weights::total_ramification(s) as i64;
    let gaps = || Some(s.gaps().into_vec());
    let mut fail = |kind, detail: String| {
        out.push(Violation {
            kind,
            gamma: None,
            genus: s.genus(),
            gaps: gaps(),
            detail,
        })
    };
    if w_k != w_s + 2 * g - 1 - s.frobenius() {
        fail(
            ViolationKind::KWeightIdentity,
            format!("W_K={w_k} W_S={w_s} l_g={}", s.frobenius()),
        );
    }
    let symmetric = s.is_symmetric();
    if (w_k == w_s) != symmetric || symmetric != s.is_symmetric_by_mirror() {
        fail(
            ViolationKind::Symmetry,
            format!("W_K={w_k} W_S={w_s} symmetric={symmetric}"),
        );
    }
    if w_s + r != g * g {
        fail(ViolationKind::Pairing, format!("W_S={w_s} R={r} g^2={}", g * g));
    }
    let t = path_of(s);
    if t.box_count(Mode::S) as i64 != w_s || t.box_count(Mode::K) as i64 + g - 1 != w_k {
        fail(
            ViolationKind::Tableau,
            format!(
                "boxes S={} K={} vs W_S={w_s} W_K={w_k}",
                t.box_count(Mode::S),
                t.box_count(Mode::K)
            ),
        );
    }
}

/// Checks that depend on a certified gamma.
fn gamma_member_failures(s: &Semigroup, gamma: u32, out: &mut Vec<Violation>) {
    let g = i64::from(s.genus());
    let w_k = weights::k_weight(s) as i64;
    let mut fail = |kind, detail: String| {
        out.push(Violation {
            kind,
            gamma: Some(gamma),
            genus: s.genus(),
            gaps: Some(s.gaps().into_vec()),
            detail,
        })
    };
    match weights::k_ramification(s, gamma) {
        Ok(r_k) if w_k + r_k != g * (g - 1) => fail(
            ViolationKind::ComplementArea,
            format!("W_K={w_k} R_K={r_k} g(g-1)={}", g * (g - 1)),
        ),
        Ok(_) => {}
        Err(e) => fail(ViolationKind::OddList, e.to_string()),
    }
    if let Some(x) = (4 * gamma..s.conductor())
        .step_by(2)
        .find(|&x| !s.contains(x))
    {
        fail(ViolationKind::EvenTail, format!("even {x} >= 4 gamma is a gap"));
    }
    if let Ok(b) = gamma::check_bounds(s, gamma) {
        if !b.within_k {
            fail(
                ViolationKind::KBound,
                format!("{} <= {} <= {} fails", b.lower_k, b.w_k, b.upper_k),
            );
        }
        if !b.within_s {
            fail(
                ViolationKind::SBound,
                format!("{} <= {} <= {} fails", b.lower_s, b.w_s, b.upper_s),
            );
        }
    }
}

struct MemberCollector {
    gamma: u32,
    members: Vec<Member>,
}

impl Visitor for MemberCollector {
    fn visit(&mut self, node: &TreeNode) {
        let s = node.to_semigroup();
        let mut violations = Vec::new();
        identity_failures(&s, &mut violations);
        gamma_member_failures(&s, self.gamma, &mut violations);
        self.members.push(Member {
            gaps: s.gaps().into_vec(),
            multiplicity: s.multiplicity(),
            w_s: weights::s_weight(&s) as i64,
            w_k: weights::k_weight(&s) as i64,
            violations,
        });
    }

    fn merge(&mut self, other: Self) {
        self.members.extend(other.members);
    }
}

#[derive(Default)]
struct IdentityCollector {
    checked: u64,
    gamma_members: u64,
    failures: Vec<Violation>,
}

impl Visitor for IdentityCollector {
    fn visit(&mut self, node: &TreeNode) {
        let s = node.to_semigroup();
        self.checked += 1;
        identity_failures(&s, &mut self.failures);
        for gamma in gamma::detect_gammas(&s, gamma::gamma_ceiling(&s)) {
            self.gamma_members += 1;
            gamma_member_failures(&s, gamma, &mut self.failures);
        }
    }

    fn merge(&mut self, other: Self) {
        self.checked += other.checked;
        self.gamma_members += other.gamma_members;
        self.failures.extend(other.failures);
    }
}

/// Identities over every semigroup of genus `<= genus_max`.
pub fn identity_suite(genus_max: u32, opts: &EnumerationOptions) -> Result<IdentitySummary> {
    let (mut v, _) = tree::enumerate(genus_max, opts, IdentityCollector::default)?;
    v.failures.sort();
    Ok(IdentitySummary {
        genus_max,
        checked: v.checked,
        gamma_members: v.gamma_members,
        failures: v.failures,
    })
}

fn cell_violation(gamma: u32, genus: u32, kind: ViolationKind, gaps: Option<Vec<u32>>, detail: String) -> Violation {
    Violation {
        kind,
        gamma: Some(gamma),
        genus,
        gaps,
        detail,
    }
}

fn prop2_record(gamma: u32, genus: u32, members: &[Member], violations: &mut Vec<Violation>) -> Option<Prop2Record> {
    let spectrum = gamma::prop2_spectrum(gamma, genus).ok()?;
    let nonmaximal_range = gamma::prop2_nonmaximal_range(gamma, genus);
    let maximal = gamma::bounds(gamma, genus).1;
    let family: BTreeMap<u32, Vec<u32>> = (1..=gamma + 1)
        .filter_map(|k| {
            gamma::make_prop2_member(gamma, genus, k)
                .ok()
                .map(|s| (k, s.gaps().into_vec()))
        })
        .collect();
    let mut out = Vec::new();
    for m in members.iter().filter(|m| m.multiplicity == 4) {
        let spectrum_k: Vec<u32> = spectrum
            .iter()
            .filter(|&&(_, v)| v == m.w_k)
            .map(|&(k, _)| k)
            .collect();
        let family_k = spectrum_k
            .iter()
            .copied()
            .find(|k| family.get(k) == Some(&m.gaps));
        if spectrum_k.is_empty() {
            violations.push(cell_violation(
                gamma,
                genus,
                ViolationKind::Prop2Spectrum,
                Some(m.gaps.clone()),
                format!("W_K={} not in {:?}", m.w_k, spectrum),
            ));
        } else if family_k.is_none() && spectrum_k.iter().any(|k| family.contains_key(k)) {
            violations.push(cell_violation(
                gamma,
                genus,
                ViolationKind::Prop2Family,
                Some(m.gaps.clone()),
                format!("W_K={} matches k in {spectrum_k:?} but no family member equals it", m.w_k),
            ));
        }
        if m.w_k != maximal && !(nonmaximal_range.0..=nonmaximal_range.1).contains(&m.w_k) {
            violations.push(cell_violation(
                gamma,
                genus,
                ViolationKind::Prop2Nonmaximal,
                Some(m.gaps.clone()),
                format!("W_K={} outside {:?}", m.w_k, nonmaximal_range),
            ));
        }
        out.push(Prop2Member {
            gaps: m.gaps.clone(),
            w_k: m.w_k,
            spectrum_k,
            family_k,
        });
    }
    Some(Prop2Record {
        population: out.len() as u64,
        spectrum,
        nonmaximal_range,
        family_in_range: family.keys().copied().collect(),
        members: out,
    })
}

fn build_cell(gamma: u32, genus: u32, mut members: Vec<Member>) -> CellRecord {
    members.sort_by(|a, b| a.gaps.cmp(&b.gaps));
    let mut violations: Vec<Violation> = members.iter().flat_map(|m| m.violations.iter().cloned()).collect();
    for v in violations.iter_mut() {
        v.gamma = Some(gamma);
    }
    let vacuous = members.is_empty();
    let min_w_k = members.iter().map(|m| m.w_k).min();
    let max_w_k = members.iter().map(|m| m.w_k).max();
    let attainers = |w: Option<i64>| -> Vec<Vec<u32>> {
        members
            .iter()
            .filter(|m| Some(m.w_k) == w)
            .map(|m| m.gaps.clone())
            .collect()
    };
    let min_attainers = attainers(min_w_k);
    let max_attainers = attainers(max_w_k);
    let in_bound_range = genus > 2 * gamma;
    let bounds = in_bound_range.then(|| Bounds::new(gamma, genus));

    let small_genus = (gamma >= 1 && (genus == 2 * gamma || genus == 2 * gamma + 1)).then(|| {
        let expected = i64::from(genus) - 1;
        SmallGenusCheck {
            expected_min_w_k: expected,
            observed_min_w_k: min_w_k,
            holds: min_w_k.map(|m| m == expected),
        }
    });
    if let Some(SmallGenusCheck { holds: Some(false), expected_min_w_k, observed_min_w_k }) = &small_genus {
        violations.push(cell_violation(
            gamma,
            genus,
            ViolationKind::SmallGenusMinimum,
            None,
            format!("minimum W_K {observed_min_w_k:?}, expected {expected_min_w_k}"),
        ));
    }

    if let (Some(b), Some(min)) = (bounds, min_w_k) {
        if genus >= 2 * gamma + 2 && min != b.lower_k {
            violations.push(cell_violation(
                gamma,
                genus,
                ViolationKind::LowerUnattained,
                None,
                format!("minimum W_K {min}, lower bound {}", b.lower_k),
            ));
        }
    }

    let minimizer_attains = (!vacuous && genus > 3 * gamma).then(|| {
        match gamma::make_minimizer(gamma, genus) {
            Ok(s) => min_attainers.contains(&s.gaps().into_vec()),
            Err(_) => false,
        }
    });
    if minimizer_attains == Some(false) {
        violations.push(cell_violation(
            gamma,
            genus,
            ViolationKind::Minimizer,
            None,
            "staircase minimizer is not among the minimum attainers".into(),
        ));
    }

    let maximizer = (in_bound_range && !vacuous).then(|| {
        let b = Bounds::new(gamma, genus);
        let gaps = gamma::make_maximizer(gamma, genus).ok().map(|s| s.gaps().into_vec());
        let upper: Vec<Vec<u32>> = members
            .iter()
            .filter(|m| m.w_k == b.upper_k)
            .map(|m| m.gaps.clone())
            .collect();
        MaximizerCheck {
            generators: [4, 4 * gamma + 2, 2 * genus - 4 * gamma + 1],
            unique_attainer: gaps.as_ref().is_some_and(|g| upper == [g.clone()]),
            gaps,
            upper_k_attained: !upper.is_empty(),
            asserted: genus > 4 * gamma,
        }
    });

    let prop2 = if gamma >= 1 && genus >= 3 * gamma {
        prop2_record(gamma, genus, &members, &mut violations)
    } else {
        None
    };

    violations.sort();
    CellRecord {
        gamma,
        genus,
        population: members.len() as u64,
        vacuous,
        min_w_k,
        max_w_k,
        min_w_s: members.iter().map(|m| m.w_s).min(),
        max_w_s: members.iter().map(|m| m.w_s).max(),
        min_attainers,
        max_attainers,
        bounds,
        small_genus,
        minimizer_attains,
        maximizer,
        prop2,
        violations,
    }
}

/// Runs the whole campaign.
pub fn verify(config: &VerifyConfig) -> Result<SweepResult> {
    let start = Instant::now();
    let opts = config.options();
    let mut cells = Vec::new();
    for gamma in 0..=config.gamma_max {
        let range = config.genus_range(gamma);
        if range.is_empty() {
            continue;
        }
        let (collector, _) = tree::enumerate_gamma_hyperelliptic_up_to(gamma, *range.end(), &opts, || {
            MemberCollector {
                gamma,
                members: Vec::new(),
            }
        })?;
        let mut by_genus: BTreeMap<u32, Vec<Member>> = BTreeMap::new();
        for m in collector.members {
            by_genus.entry(m.gaps.len() as u32).or_default().push(m);
        }
        for genus in range {
            cells.push(build_cell(gamma, genus, by_genus.remove(&genus).unwrap_or_default()));
        }
    }
    let identities = identity_suite(config.identity_genus_max.min(config.genus_max), &opts)?;
    let violation_count =
        cells.iter().map(|c| c.violations.len() as u64).sum::<u64>() + identities.failures.len() as u64;
    let uniqueness_exceptions = cells
        .iter()
        .filter_map(|c| c.maximizer.as_ref().map(|m| (c, m)))
        .filter(|(_, m)| m.asserted && !m.unique_attainer)
        .map(|(c, _)| (c.gamma, c.genus))
        .collect();
    Ok(SweepResult {
        gamma_max: config.gamma_max,
        genus_max: config.genus_max,
        genus_span: config.genus_span,
        cells,
        identities,
        violation_count,
        uniqueness_exceptions,
        runtime_ms: start.elapsed().as_millis() as u64,
    })
}

fn join_gaps(sets: &[Vec<u32>]) -> String {
    sets.iter()
        .map(|g| g.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(";")
}

/// One CSV row per (gamma, genus) cell. Column order is fixed by field order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellRow {
    pub gamma: u32,
    pub genus: u32,
    pub population: u64,
    pub vacuous: bool,
    pub min_w_k: Option<i64>,
    pub max_w_k: Option<i64>,
    pub min_w_s: Option<i64>,
    pub max_w_s: Option<i64>,
    pub lower_k: Option<i64>,
    pub upper_k: Option<i64>,
    pub lower_s: Option<i64>,
    pub upper_s: Option<i64>,
    pub violations: usize,
    pub minimizer_attains: Option<bool>,
    pub maximizer_unique: Option<bool>,
    pub prop2_population: Option<u64>,
    pub min_attainers: String,
    pub max_attainers: String,
}

impl From<&CellRecord> for CellRow {
    fn from(c: &CellRecord) -> Self {
        CellRow {
            gamma: c.gamma,
            genus: c.genus,
            population: c.population,
            vacuous: c.vacuous,
            min_w_k: c.min_w_k,
            max_w_k: c.max_w_k,
            min_w_s: c.min_w_s,
            max_w_s: c.max_w_s,
            lower_k: c.bounds.map(|b| b.lower_k),
            upper_k: c.bounds.map(|b| b.upper_k),
            lower_s: c.bounds.map(|b| b.lower_s),
            upper_s: c.bounds.map(|b| b.upper_s),
            violations: c.violations.len(),
            minimizer_attains: c.minimizer_attains,
            maximizer_unique: c.maximizer.as_ref().map(|m| m.unique_attainer),
            prop2_population: c.prop2.as_ref().map(|p| p.population),
            min_attainers: join_gaps(&c.min_attainers),
            max_attainers: join_gaps(&c.max_attainers),
        }
    }
}

pub fn to_csv(result: &SweepResult) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for c in &result.cells {
        w.serialize(CellRow::from(c)).expect("in-memory csv write");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv flush")).expect("csv is utf-8")
}

pub fn to_text(result: &SweepResult) -> String {
    let mut out = String::from(
        "gamma genus   pop  minW_K  maxW_K  lower_k upper_k  viol  note\n",
    );
    let opt = |x: Option<i64>| x.map_or("-".to_string(), |v| v.to_string());
    for c in &result.cells {
        let mut note = String::new();
        if c.vacuous {
            note.push_str("vacuous");
        }
        if let Some(m) = &c.maximizer {
            if m.asserted && !m.unique_attainer {
                note.push_str(&format!("{} upper-bound attainers", c.max_attainers.len()));
            }
        }
        out.push_str(&format!(
            "{:>5} {:>5} {:>5} {:>7} {:>7} {:>8} {:>7} {:>5}  {}\n",
            c.gamma,
            c.genus,
            c.population,
            opt(c.min_w_k),
            opt(c.max_w_k),
            opt(c.bounds.map(|b| b.lower_k)),
            opt(c.bounds.map(|b| b.upper_k)),
            c.violations.len(),
            note
        ));
    }
    out.push_str(&format!(
        "identities: {} semigroups of genus <= {} checked ({} gamma-certified), {} failures\n",
        result.identities.checked,
        result.identities.genus_max,
        result.identities.gamma_members,
        result.identities.failures.len()
    ));
    out.push_str(&format!(
        "violations: {}   uniqueness exceptions: {:?}   runtime: {} ms\n",
        result.violation_count, result.uniqueness_exceptions, result.runtime_ms
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_one_cells_are_pinned() {
        let r = verify(&VerifyConfig {
            gamma_max: 1,
            genus_max: 10,
            ..Default::default()
        })
        .unwrap();
        assert!(r.is_clean(), "{:?}", r.violations().collect::<Vec<_>>());
        for c in r.cells.iter().filter(|c| c.gamma == 1 && !c.vacuous) {
            let n = i64::from(c.genus) - 2;
            let expected = n * (n - 1) / 2 + 2;
            assert_eq!((c.min_w_k, c.max_w_k), (Some(expected), Some(expected)));
        }
        assert!(r.cell(1, 3).unwrap().vacuous);
    }

    #[test]
    fn vacuous_cells_are_reported() {
        let r = verify(&VerifyConfig {
            gamma_max: 3,
            genus_max: 9,
            ..Default::default()
        })
        .unwrap();
        let c = r.cell(3, 7).unwrap();
        assert!(c.vacuous);
        assert_eq!(c.population, 0);
        assert_eq!(r.cells.iter().filter(|c| c.gamma == 3).count(), 4);
    }

    #[test]
    fn genus_range_respects_span() {
        let c = VerifyConfig {
            genus_max: 20,
            genus_span: Some(12),
            ..Default::default()
        };
        assert_eq!(c.genus_range(0), 1..=12);
        assert_eq!(c.genus_range(4), 8..=20);
        let c = VerifyConfig {
            genus_max: 5,
            ..Default::default()
        };
        assert!(c.genus_range(3).is_empty());
    }

    #[test]
    fn csv_rows_match_cells() {
        let r = verify(&VerifyConfig {
            gamma_max: 2,
            genus_max: 9,
            ..Default::default()
        })
        .unwrap();
        let text = to_csv(&r);
        let mut rd = csv::Reader::from_reader(text.as_bytes());
        assert_eq!(rd.records().count(), r.cells.len());
    }
}
