//! Single-semigroup reports.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::gamma::{self, BoundCheck, GammaCertificate};
use crate::semigroup::Semigroup;
use crate::tree::minimal_generators;
use crate::weights;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupRepr {
    pub minimal_generators: Vec<u32>,
    pub gaps: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub lower_k: i64,
    pub upper_k: i64,
    pub lower_s: i64,
    pub upper_s: i64,
}

impl Bounds {
    pub fn new(gamma: u32, genus: u32) -> Self {
        let (lower_k, upper_k, lower_s, upper_s) = gamma::bounds(gamma, genus);
        Bounds {
            lower_k,
            upper_k,
            lower_s,
            upper_s,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub within_k: bool,
    pub within_s: bool,
    pub attains_min_k: bool,
    pub attains_max_k: bool,
}

impl From<&BoundCheck> for Flags {
    fn from(b: &BoundCheck) -> Self {
        Flags {
            within_k: b.within_k,
            within_s: b.within_s,
            attains_min_k: b.attains_min_k,
            attains_max_k: b.attains_max_k,
        }
    }
}

/// Everything known about one semigroup. This is the JSON report schema.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeReport {
    pub semigroup: SemigroupRepr,
    pub genus: u32,
    pub frobenius: i64,
    pub multiplicity: u32,
    pub conductor: u32,
    pub symmetric: bool,
    /// Every gamma for which the semigroup is gamma-hyperelliptic.
    pub gammas: Vec<u32>,
    /// Gamma used for `r_k`, bounds and flags.
    pub gamma: Option<u32>,
    pub certificates: Vec<GammaCertificate>,
    pub w_s: u64,
    pub w_k: u64,
    pub r: u64,
    pub r_k: Option<i64>,
    pub k_odd_tail: u64,
    pub even_heads: Option<Vec<u32>>,
    pub odd_members_below_2g: Vec<u32>,
    pub bounds: Option<Bounds>,
    pub flags: Option<Flags>,
}

/// Builds the report. An explicit `gamma` that does not certify is kept as
/// a negative certificate and leaves the gamma-dependent fields empty;
/// without one, the detected gamma (if any) is used.
pub fn analyze(s: &Semigroup, gamma: Option<u32>) -> Result<AnalyzeReport> {
    let gammas = gamma::detect_gammas(s, gamma::gamma_ceiling(s));
    let mut certificates: Vec<GammaCertificate> =
        gammas.iter().map(|&g| gamma::certify(s, g)).collect();
    let resolved = match gamma {
        Some(g) if gammas.contains(&g) => Some(g),
        Some(g) => {
            certificates.push(gamma::certify(s, g));
            None
        }
        None => gammas.first().copied(),
    };
    let wr = weights::weight_report(s, resolved)?;
    let check = resolved.map(|g| gamma::check_bounds(s, g)).transpose()?;
    Ok(AnalyzeReport {
        semigroup: SemigroupRepr {
            minimal_generators: minimal_generators(s),
            gaps: s.gaps().into_vec(),
        },
        genus: s.genus(),
        frobenius: s.frobenius(),
        multiplicity: s.multiplicity(),
        conductor: s.conductor(),
        symmetric: s.is_symmetric(),
        gammas,
        gamma: resolved,
        certificates,
        w_s: wr.w_s,
        w_k: wr.w_k,
        r: wr.ramification,
        r_k: wr.r_k,
        k_odd_tail: wr.k_odd_tail,
        even_heads: wr.even_heads,
        odd_members_below_2g: wr.odd_members_below_2g,
        bounds: resolved.map(|g| Bounds::new(g, s.genus())),
        flags: check.as_ref().map(Flags::from),
    })
}

fn join(xs: &[u32]) -> String {
    xs.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

/// Flat CSV row. Column order is fixed by field order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub generators: String,
    pub gaps: String,
    pub genus: u32,
    pub frobenius: i64,
    pub multiplicity: u32,
    pub symmetric: bool,
    pub gammas: String,
    pub gamma: Option<u32>,
    pub w_s: u64,
    pub w_k: u64,
    pub r: u64,
    pub r_k: Option<i64>,
    pub k_odd_tail: u64,
    pub lower_k: Option<i64>,
    pub upper_k: Option<i64>,
    pub lower_s: Option<i64>,
    pub upper_s: Option<i64>,
    pub within_k: Option<bool>,
    pub within_s: Option<bool>,
    pub attains_min_k: Option<bool>,
    pub attains_max_k: Option<bool>,
}

pub const REPORT_COLUMNS: [&str; 21] = [
    "generators",
    "gaps",
    "genus",
    "frobenius",
    "multiplicity",
    "symmetric",
    "gammas",
    "gamma",
    "w_s",
    "w_k",
    "r",
    "r_k",
    "k_odd_tail",
    "lower_k",
    "upper_k",
    "lower_s",
    "upper_s",
    "within_k",
    "within_s",
    "attains_min_k",
    "attains_max_k",
];

impl From<&AnalyzeReport> for ReportRow {
    fn from(r: &AnalyzeReport) -> Self {
        ReportRow {
            generators: join(&r.semigroup.minimal_generators),
            gaps: join(&r.semigroup.gaps),
            genus: r.genus,
            frobenius: r.frobenius,
            multiplicity: r.multiplicity,
            symmetric: r.symmetric,
            gammas: join(&r.gammas),
            gamma: r.gamma,
            w_s: r.w_s,
            w_k: r.w_k,
            r: r.r,
            r_k: r.r_k,
            k_odd_tail: r.k_odd_tail,
            lower_k: r.bounds.map(|b| b.lower_k),
            upper_k: r.bounds.map(|b| b.upper_k),
            lower_s: r.bounds.map(|b| b.lower_s),
            upper_s: r.bounds.map(|b| b.upper_s),
            within_k: r.flags.map(|f| f.within_k),
            within_s: r.flags.map(|f| f.within_s),
            attains_min_k: r.flags.map(|f| f.attains_min_k),
            attains_max_k: r.flags.map(|f| f.attains_max_k),
        }
    }
}

pub fn to_csv<'a>(reports: impl IntoIterator<Item = &'a AnalyzeReport>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut wrote = false;
    for r in reports {
        w.serialize(ReportRow::from(r)).expect("in-memory csv write");
        wrote = true;
    }
    if !wrote {
        w.write_record(REPORT_COLUMNS).expect("in-memory csv write");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv flush")).expect("csv is utf-8")
}

/// Human-readable summary.
pub fn to_text(r: &AnalyzeReport) -> String {
    let mut lines = vec![
        format!("generators     <{}>", r.semigroup.minimal_generators.iter().map(u32::to_string).collect::<Vec<_>>().join(", ")),
        format!("gaps           {{{}}}", r.semigroup.gaps.iter().map(u32::to_string).collect::<Vec<_>>().join(", ")),
        format!("genus          {}", r.genus),
        format!("frobenius      {}", r.frobenius),
        format!("multiplicity   {}", r.multiplicity),
        format!("symmetric      {}", r.symmetric),
        format!("gammas         {:?}", r.gammas),
        format!("W_S            {}", r.w_s),
        format!("W_K            {}", r.w_k),
        format!("R              {}", r.r),
        format!("k(S)           {}", r.k_odd_tail),
    ];
    if let (Some(g), Some(rk)) = (r.gamma, r.r_k) {
        lines.push(format!("R_K (gamma={g})  {rk}"));
    }
    if let (Some(b), Some(f)) = (r.bounds, r.flags) {
        lines.push(format!(
            "K-bounds       {} <= {} <= {}  within={} min={} max={}",
            b.lower_k, r.w_k, b.upper_k, f.within_k, f.attains_min_k, f.attains_max_k
        ));
        lines.push(format!(
            "S-bounds       {} <= {} <= {}  within={}",
            b.lower_s, r.w_s, b.upper_s, f.within_s
        ));
    }
    for c in r.certificates.iter().filter(|c| !c.is_affirmative()) {
        lines.push(format!(
            "gamma={} not certified: {} evens in [2,{}], pivot {} (needs {})",
            c.gamma,
            c.even_elements_in_window.len(),
            4 * c.gamma,
            c.pivot_element,
            4 * c.gamma + 2
        ));
    }
    lines.join("\n") + "\n"
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn maximizer_report() {
        let s = Semigroup::from_generators(&[4, 14, 29]).unwrap();
        let r = analyze(&s, Some(3)).unwrap();
        assert_eq!(r.w_k, 109);
        assert_eq!(r.gammas, vec![3]);
        assert!(r.flags.unwrap().attains_max_k);
        assert_eq!(r.r_k, Some(271));
        assert_eq!(r.semigroup.minimal_generators, vec![4, 14, 29]);
    }

    #[test]
    fn hyperelliptic_report() {
        let s = Semigroup::from_gaps(&[1, 3, 5, 7, 9]).unwrap();
        let r = analyze(&s, None).unwrap();
        assert!(r.symmetric);
        assert_eq!(r.gamma, Some(0));
        assert_eq!((r.w_k, r.w_s), (10, 10));
    }

    #[test]
    fn uncertified_gamma_is_reported() {
        let s = Semigroup::from_generators(&[4, 5, 6]).unwrap();
        let r = analyze(&s, Some(1)).unwrap();
        assert_eq!(r.gamma, None);
        assert!(r.bounds.is_none() && r.r_k.is_none());
        assert_eq!(r.certificates.len(), 1);
        assert!(!r.certificates[0].is_affirmative());
        assert!(to_text(&r).contains("gamma=1 not certified"));
    }

    #[test]
    fn csv_has_one_row_per_report() {
        let a = analyze(&Semigroup::from_generators(&[2, 3]).unwrap(), None).unwrap();
        let b = analyze(&Semigroup::from_generators(&[4, 6, 11, 13]).unwrap(), None).unwrap();
        let text = to_csv([&a, &b]);
        let mut rd = csv::Reader::from_reader(text.as_bytes());
        assert_eq!(rd.headers().unwrap().iter().collect::<Vec<_>>(), REPORT_COLUMNS);
        assert_eq!(rd.records().count(), 2);
        let empty = to_csv(std::iter::empty());
        assert_eq!(empty.lines().count(), 1);
    }
}
