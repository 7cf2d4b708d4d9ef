//! Claim harness: replays the dominance lemmas and theorems on parameter
//! grids, checks the displayed b-coefficient expansions exactly, and renders
//! the outcome as Markdown and JSON.

mod background;
mod identity;
mod scan;
mod theta1;
mod theta2;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::energy::EnergyOrder;
use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::graph::Graph;
use crate::io::to_graph6;
use crate::poly::BSeq;
use crate::quasiorder::{compare_bseq, Relation};

pub use background::{verify_background, BackgroundConfig};
pub use identity::{BCache, Identity, IdentityCheck, Piece, Term};
pub use scan::{conjecture_scan, ScanReport, ScanRow};
pub use theta1::{verify_lemma_3_10, verify_lemma_3_3, verify_lemma_3_9, verify_theorem_3_8};
pub use theta2::{verify_lemmas_3_5_3_6, verify_theorem_3_4};

/// How many instances per subcase get their displayed expansions checked.
pub const IDENTITY_SAMPLES: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Severity {
    /// Established by a proof; a failure is a discrepancy.
    Proved,
    /// Left open; the outcome is recorded only.
    Reported,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Expected {
    /// `lhs ⪯ rhs`
    Le,
    /// `lhs ≺ rhs`
    Lt,
    /// `E(lhs) < E(rhs)`
    EnergyLess,
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Expected::Le => "⪯",
            Expected::Lt => "≺",
            Expected::EnergyLess => "E<",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Actual {
    Quasi(Relation),
    Energy(EnergyOrder),
}

impl fmt::Display for Actual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Actual::Quasi(r) => write!(f, "{r}"),
            Actual::Energy(o) => write!(f, "energy {o}"),
        }
    }
}

impl Expected {
    pub fn satisfied_by(self, actual: Actual) -> bool {
        match (self, actual) {
            (Expected::Le, Actual::Quasi(r)) => r.is_le(),
            (Expected::Lt, Actual::Quasi(r)) => r == Relation::StrictlyLess,
            (Expected::EnergyLess, Actual::Energy(o)) => o == EnergyOrder::Less,
            _ => false,
        }
    }
}

/// Everything needed to reproduce a failed comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Artifacts {
    pub lhs_graph6: String,
    pub rhs_graph6: String,
    pub lhs_b: Vec<String>,
    pub rhs_b: Vec<String>,
    /// Indices `i` of `b_{2i}` where the sequences differ.
    pub witness: Vec<usize>,
}

impl Artifacts {
    pub fn new(g: &Graph, h: &Graph, bg: Option<&BSeq>, bh: Option<&BSeq>) -> Self {
        let strs = |b: Option<&BSeq>| b.map(|b| b.b.iter().map(|x| x.to_string()).collect()).unwrap_or_default();
        let witness = match (bg, bh) {
            (Some(x), Some(y)) => compare_bseq(x, y).map(|q| q.witness()).unwrap_or_default(),
            _ => Vec::new(),
        };
        Artifacts {
            lhs_graph6: to_graph6(g),
            rhs_graph6: to_graph6(h),
            lhs_b: strs(bg),
            rhs_b: strs(bh),
            witness,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimInstance {
    pub claim: String,
    pub lhs: String,
    pub rhs: String,
    pub expected: Expected,
    pub actual: Actual,
    pub pass: bool,
    pub severity: Severity,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub artifacts: Option<Artifacts>,
}

impl ClaimInstance {
    pub fn new(
        claim: impl Into<String>,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
        expected: Expected,
        actual: Actual,
        severity: Severity,
    ) -> Self {
        ClaimInstance {
            claim: claim.into(),
            lhs: lhs.into(),
            rhs: rhs.into(),
            expected,
            actual,
            pass: expected.satisfied_by(actual),
            severity,
            note: None,
            artifacts: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// The part of the id before the first `-`, e.g. `T3.4`.
    pub fn family(&self) -> &str {
        self.claim.split('-').next().unwrap_or(&self.claim)
    }
}

/// Parameter grid for the lemma and theorem sweeps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Grid {
    pub cycles: Vec<usize>,
    pub arms: Vec<usize>,
    pub n_min: usize,
    pub n_max: usize,
}

impl Default for Grid {
    fn default() -> Self {
        Grid {
            cycles: vec![4, 6, 8, 10, 12],
            arms: (2..=8).collect(),
            n_min: 20,
            n_max: 28,
        }
    }
}

impl Grid {
    pub fn validate(&self) -> Result<()> {
        if let Some(c) = self.cycles.iter().find(|&&c| c < 4 || c % 2 == 1) {
            return Err(Error::BadParam(format!("grid cycle length {c} must be even and >= 4")));
        }
        if let Some(l) = self.arms.iter().find(|&&l| l < 2) {
            return Err(Error::BadParam(format!("grid path length {l} must be >= 2")));
        }
        if self.n_min > self.n_max {
            return Err(Error::BadParam(format!("grid n range {}..={} is empty", self.n_min, self.n_max)));
        }
        Ok(())
    }

    pub fn contains_n(&self, n: usize) -> bool {
        (self.n_min..=self.n_max).contains(&n)
    }
}

/// All sweep parameters of one harness run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct VerifyConfig {
    pub grid: Grid,
    /// Orders for the hexagon-only arm-merging lemmas.
    pub merge_n: (usize, usize),
    /// Orders for the chain-to-star comparison.
    pub chain_star_n: (usize, usize),
    pub gap_tol: f64,
    pub background: BackgroundConfig,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            grid: Grid::default(),
            merge_n: (18, 26),
            chain_star_n: (20, 28),
            gap_tol: 1e-6,
            background: BackgroundConfig::default(),
        }
    }
}

/// A named group of claims that can be run on its own.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClaimFamily {
    L33,
    T34,
    L35,
    L36,
    T38,
    L39,
    L310,
    Background,
}

impl ClaimFamily {
    pub const ALL: [ClaimFamily; 8] = [
        ClaimFamily::L33,
        ClaimFamily::T34,
        ClaimFamily::L35,
        ClaimFamily::L36,
        ClaimFamily::T38,
        ClaimFamily::L39,
        ClaimFamily::L310,
        ClaimFamily::Background,
    ];

    pub fn id(self) -> &'static str {
        match self {
            ClaimFamily::L33 => "L3.3",
            ClaimFamily::T34 => "T3.4",
            ClaimFamily::L35 => "L3.5",
            ClaimFamily::L36 => "L3.6",
            ClaimFamily::T38 => "T3.8",
            ClaimFamily::L39 => "L3.9",
            ClaimFamily::L310 => "L3.10",
            ClaimFamily::Background => "BG",
        }
    }
}

impl fmt::Display for ClaimFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for ClaimFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        ClaimFamily::ALL
            .into_iter()
            .find(|f| f.id().eq_ignore_ascii_case(t))
            .or_else(|| t.eq_ignore_ascii_case("background").then_some(ClaimFamily::Background))
            .ok_or_else(|| {
                let known: Vec<&str> = ClaimFamily::ALL.iter().map(|f| f.id()).collect();
                Error::parse(0, format!("unknown claim id {t:?}; expected one of {}", known.join(", ")))
            })
    }
}

/// Per-claim-id tallies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimSummary {
    pub claim: String,
    pub severity: Severity,
    pub instances: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub claims: Vec<ClaimInstance>,
    pub identities: Vec<IdentityCheck>,
    /// Grid tuples not compared, keyed by reason.
    pub skipped: BTreeMap<String, usize>,
    pub summary: Vec<ClaimSummary>,
}

impl VerifyReport {
    pub fn merge(&mut self, other: VerifyReport) {
        self.claims.extend(other.claims);
        self.identities.extend(other.identities);
        for (k, v) in other.skipped {
            *self.skipped.entry(k).or_default() += v;
        }
        self.finalize();
    }

    pub(crate) fn skip(&mut self, reason: impl Into<String>) {
        *self.skipped.entry(reason.into()).or_default() += 1;
    }

    /// Sorts everything into a canonical order and recomputes the summary,
    /// so reports are byte-identical regardless of thread scheduling.
    pub fn finalize(&mut self) {
        self.claims.sort_by(|x, y| {
            (&x.claim, &x.lhs, &x.rhs).cmp(&(&y.claim, &y.lhs, &y.rhs))
        });
        self.claims.dedup();
        self.identities.sort_by(|x, y| (&x.id, &x.instance).cmp(&(&y.id, &y.instance)));
        self.identities.dedup();
        let mut by: BTreeMap<(String, Severity), (usize, usize)> = BTreeMap::new();
        for c in &self.claims {
            let e = by.entry((c.claim.clone(), c.severity)).or_default();
            e.0 += 1;
            e.1 += c.pass as usize;
        }
        self.summary = by
            .into_iter()
            .map(|((claim, severity), (instances, passed))| ClaimSummary {
                claim,
                severity,
                instances,
                passed,
                failed: instances - passed,
            })
            .collect();
    }

    pub fn proved_failures(&self) -> Vec<&ClaimInstance> {
        self.claims
            .iter()
            .filter(|c| c.severity == Severity::Proved && !c.pass)
            .collect()
    }

    pub fn identity_failures(&self) -> Vec<&IdentityCheck> {
        self.identities.iter().filter(|c| !c.holds).collect()
    }

    /// Claims whose id starts with `prefix`.
    pub fn claims_with_prefix<'a>(&'a self, prefix: &'a str) -> impl Iterator<Item = &'a ClaimInstance> + 'a {
        self.claims.iter().filter(move |c| c.claim.starts_with(prefix))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_markdown(&self) -> String {
        let mut s = String::from("# Claim report\n\n");
        s.push_str("| claim | severity | instances | passed | failed |\n|---|---|---:|---:|---:|\n");
        for r in &self.summary {
            let sev = match r.severity {
                Severity::Proved => "proved",
                Severity::Reported => "reported",
            };
            s.push_str(&format!(
                "| {} | {} | {} | {} | {} |\n",
                r.claim, sev, r.instances, r.passed, r.failed
            ));
        }
        let failures: Vec<&ClaimInstance> = self.claims.iter().filter(|c| !c.pass).collect();
        if !failures.is_empty() {
            s.push_str("\n## Failed instances\n\n");
            for c in failures {
                s.push_str(&format!(
                    "- `{}` {} {} {}: got {}",
                    c.claim, c.lhs, c.expected, c.rhs, c.actual
                ));
                if let Some(n) = &c.note {
                    s.push_str(&format!(" ({n})"));
                }
                s.push('\n');
                if let Some(a) = &c.artifacts {
                    s.push_str(&format!(
                        "  - lhs `{}` b = [{}]\n  - rhs `{}` b = [{}]\n  - differs at i = {:?}\n",
                        a.lhs_graph6,
                        a.lhs_b.join(", "),
                        a.rhs_graph6,
                        a.rhs_b.join(", "),
                        a.witness
                    ));
                }
            }
        }
        let notes: Vec<&ClaimInstance> = self.claims.iter().filter(|c| c.pass && c.note.is_some()).collect();
        if !notes.is_empty() {
            s.push_str("\n## Notes\n\n");
            for c in notes {
                s.push_str(&format!(
                    "- `{}` {} vs {}: {}\n",
                    c.claim,
                    c.lhs,
                    c.rhs,
                    c.note.as_deref().unwrap_or("")
                ));
            }
        }
        if !self.identities.is_empty() {
            s.push_str("\n## Expansion identities\n\n| identity | instance | holds |\n|---|---|---|\n");
            for c in &self.identities {
                s.push_str(&format!(
                    "| {} | {} | {} |\n",
                    c.id,
                    c.instance,
                    if c.holds { "yes".to_string() } else { format!("no, differs at {:?}", c.residual_at) }
                ));
            }
        }
        if !self.skipped.is_empty() {
            s.push_str("\n## Skipped grid tuples\n\n");
            for (k, v) in &self.skipped {
                s.push_str(&format!("- {k}: {v}\n"));
            }
        }
        s
    }
}

/// Runs the selected claim families and merges their reports.
pub fn run(families: &[ClaimFamily], cfg: &VerifyConfig) -> Result<VerifyReport> {
    cfg.grid.validate()?;
    let mut report = VerifyReport::default();
    let mut fams = families.to_vec();
    fams.sort();
    fams.dedup();
    for f in fams {
        let r = match f {
            ClaimFamily::L33 => verify_lemma_3_3(&cfg.grid)?,
            ClaimFamily::T34 => verify_theorem_3_4(&cfg.grid)?,
            ClaimFamily::L35 | ClaimFamily::L36 => {
                let mut r = verify_lemmas_3_5_3_6(cfg.merge_n)?;
                let keep = f.id();
                r.claims.retain(|c| c.family() == keep);
                r.identities.retain(|c| c.id.split('-').next() == Some(keep));
                r
            }
            ClaimFamily::T38 => verify_theorem_3_8(&cfg.grid)?,
            ClaimFamily::L39 => verify_lemma_3_9(cfg.merge_n)?,
            ClaimFamily::L310 => verify_lemma_3_10(cfg.chain_star_n, cfg.gap_tol)?,
            ClaimFamily::Background => verify_background(&cfg.background)?,
        };
        report.merge(r);
    }
    report.finalize();
    Ok(report)
}

/// The L3.5, L3.6 and L3.9 sweeps on one range, as one report.
pub fn verify_lemmas_3_5_3_6_3_9(n_range: (usize, usize)) -> Result<VerifyReport> {
    let mut r = verify_lemmas_3_5_3_6(n_range)?;
    r.merge(verify_lemma_3_9(n_range)?);
    Ok(r)
}

/// A comparison whose right side is either fixed or any member of a set.
#[derive(Debug, Clone)]
pub(crate) enum Rhs {
    One(FamilySpec),
    Any(Vec<FamilySpec>),
}

#[derive(Debug, Clone)]
pub(crate) struct Pending {
    pub claim: String,
    pub lhs: FamilySpec,
    pub rhs: Rhs,
    pub expected: Expected,
    pub note: Option<String>,
}

impl Pending {
    pub fn one(claim: impl Into<String>, lhs: FamilySpec, rhs: FamilySpec, expected: Expected) -> Self {
        Pending {
            claim: claim.into(),
            lhs,
            rhs: Rhs::One(rhs),
            expected,
            note: None,
        }
    }
}

/// Exact b-sequence comparisons for all pending proved claims.
pub(crate) fn evaluate(pending: Vec<Pending>, cache: &BCache) -> Result<Vec<ClaimInstance>> {
    pending
        .into_par_iter()
        .map(|p| {
            let bl = cache.spec(&p.lhs)?;
            let candidates = match &p.rhs {
                Rhs::One(s) => vec![*s],
                Rhs::Any(v) => v.clone(),
            };
            if candidates.is_empty() {
                return Err(Error::Precondition(format!("{}: no comparison target for {}", p.claim, p.lhs)));
            }
            let mut best: Option<(FamilySpec, Relation, usize)> = None;
            for s in &candidates {
                let br = cache.spec(s)?;
                let q = compare_bseq(&bl, &br)?;
                let ok = p.expected.satisfied_by(Actual::Quasi(q.relation));
                let score = q.greater_at.len();
                if ok {
                    best = Some((*s, q.relation, 0));
                    break;
                }
                if best.as_ref().map_or(true, |b| score < b.2) {
                    best = Some((*s, q.relation, score));
                }
            }
            let (rhs, rel, _) = best.expect("non-empty candidate list");
            let mut c = ClaimInstance::new(
                p.claim.clone(),
                p.lhs.to_string(),
                rhs.to_string(),
                p.expected,
                Actual::Quasi(rel),
                Severity::Proved,
            );
            c.note = p.note.clone();
            if let Rhs::Any(v) = &p.rhs {
                let extra = format!("searched {} candidates", v.len());
                c.note = Some(match c.note.take() {
                    Some(n) => format!("{n}; {extra}"),
                    None => extra,
                });
            }
            if !c.pass {
                let br = cache.spec(&rhs)?;
                c.artifacts = Some(Artifacts::new(&p.lhs.build()?, &rhs.build()?, Some(&bl), Some(&br)));
            }
            Ok(c)
        })
        .collect()
}

/// Checks the displayed expansions for up to `IDENTITY_SAMPLES` well-formed
/// instances per id. `make` returns the identities of one instance.
pub(crate) fn sample_identities<T, F>(instances: &[(String, T)], cache: &BCache, report: &mut VerifyReport, make: F) -> Result<()>
where
    T: Sync,
    F: Fn(&str, &T) -> Vec<Identity> + Sync,
{
    let mut taken: BTreeMap<String, usize> = BTreeMap::new();
    let mut chosen: Vec<(Identity, String)> = Vec::new();
    for (label, inst) in instances {
        for id in make(label, inst) {
            let count = taken.entry(id.id.clone()).or_default();
            if *count < IDENTITY_SAMPLES && id.well_formed() {
                *count += 1;
                chosen.push((id, label.clone()));
            }
        }
    }
    let checks: Vec<IdentityCheck> = chosen
        .par_iter()
        .map(|(id, label)| cache.check(id, label))
        .collect::<Result<_>>()?;
    report.identities.extend(checks);
    Ok(())
}

/// Every `Θ_II(n;6,6,6;·)`, one per isomorphism class.
pub(crate) fn hexagon_stars(n: usize) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    let total = n as i64 + 5 - 18;
    for l1 in 2..=total {
        for l2 in 2..=l1 {
            let l3 = total - l1 - l2;
            if l3 >= 2 && l3 <= l2 {
                out.push(FamilySpec::ThetaII {
                    n,
                    a: 6,
                    b: 6,
                    k: 6,
                    l1: l1 as usize,
                    l2: l2 as usize,
                    l3: l3 as usize,
                });
            }
        }
    }
    out
}

/// Every `Θ_I(n;6,6,6;·;2)`, one per isomorphism class.
pub(crate) fn hexagon_chains(n: usize) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    let total = n as i64 + 4 - 18;
    for l1 in 2..=total {
        let l2 = total - l1;
        if l2 >= 2 && l2 <= l1 {
            out.push(FamilySpec::ThetaI {
                n,
                a: 6,
                b: 6,
                k: 6,
                l1: l1 as usize,
                l2: l2 as usize,
                lc: 2,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expected_semantics() {
        use Relation::*;
        assert!(Expected::Le.satisfied_by(Actual::Quasi(Equal)));
        assert!(Expected::Le.satisfied_by(Actual::Quasi(StrictlyLess)));
        assert!(!Expected::Lt.satisfied_by(Actual::Quasi(Equal)));
        assert!(!Expected::Le.satisfied_by(Actual::Quasi(Incomparable)));
        assert!(Expected::EnergyLess.satisfied_by(Actual::Energy(EnergyOrder::Less)));
        assert!(!Expected::EnergyLess.satisfied_by(Actual::Energy(EnergyOrder::Undecided)));
        assert!(!Expected::EnergyLess.satisfied_by(Actual::Quasi(StrictlyLess)));
    }

    #[test]
    fn claim_ids_parse() {
        assert_eq!("L3.10".parse::<ClaimFamily>().unwrap(), ClaimFamily::L310);
        assert_eq!("t3.4".parse::<ClaimFamily>().unwrap(), ClaimFamily::T34);
        assert_eq!("background".parse::<ClaimFamily>().unwrap(), ClaimFamily::Background);
        assert!("L9.9".parse::<ClaimFamily>().is_err());
    }

    #[test]
    fn hexagon_targets() {
        assert_eq!(hexagon_stars(19), vec![FamilySpec::ThetaII { n: 19, a: 6, b: 6, k: 6, l1: 2, l2: 2, l3: 2 }]);
        assert_eq!(hexagon_stars(20).len(), 1);
        assert_eq!(hexagon_stars(22).len(), 3);
        assert_eq!(hexagon_chains(18).len(), 1);
        assert!(hexagon_chains(17).is_empty());
        for s in hexagon_stars(25).into_iter().chain(hexagon_chains(25)) {
            assert_eq!(s.build().unwrap().order(), 25);
        }
    }

    #[test]
    fn report_is_canonical() {
        let c = |id: &str, lhs: &str| {
            ClaimInstance::new(id, lhs, "x", Expected::Le, Actual::Quasi(Relation::Equal), Severity::Proved)
        };
        let mut r1 = VerifyReport {
            claims: vec![c("b", "2"), c("a", "1")],
            ..Default::default()
        };
        let mut r2 = VerifyReport {
            claims: vec![c("a", "1"), c("b", "2")],
            ..Default::default()
        };
        r1.finalize();
        r2.finalize();
        assert_eq!(r1.to_json(), r2.to_json());
        assert_eq!(r1.summary.len(), 2);
        assert!(r1.to_markdown().contains("| a | proved | 1 | 1 | 0 |"));
    }
}
