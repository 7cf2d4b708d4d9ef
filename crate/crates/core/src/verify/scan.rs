//! Every central structure of one order against `P_n^{6,6,6}`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::charpoly::bseq;
use crate::energy::{energy_compare, EnergyOrder};
use crate::enumerate::{enumerate_central, Mode};
use crate::error::{Error, Result};
use crate::families::{gamma_classify, FamilySpec, GammaForm};
use crate::quasiorder::{compare_bseq, Relation};

use super::{Actual, ClaimInstance, Expected, Severity};

const SCAN_GAP_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanRow {
    pub spec: FamilySpec,
    pub label: String,
    pub relation: Relation,
    pub gamma: Vec<GammaForm>,
    /// Certified energy order against the target, computed whenever the
    /// quasi-order does not already decide it.
    pub energy: Option<EnergyOrder>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub energy_note: Option<String>,
}

impl ScanRow {
    pub fn in_gamma(&self) -> bool {
        !self.gamma.is_empty()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanCounts {
    pub strictly_less: usize,
    pub equal: usize,
    pub strictly_greater: usize,
    pub incomparable: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub n: usize,
    pub mode: Mode,
    pub target: String,
    pub rows: Vec<ScanRow>,
    pub counts: ScanCounts,
    /// Whether `Equal` occurs exactly once, for the target itself.
    pub equal_only_self: bool,
    /// Members outside Γ1 ∪ Γ2 that are not strictly below the target.
    pub non_gamma_not_less: Vec<String>,
    /// Incomparable members outside Γ1 ∪ Γ2.
    pub incomparable_outside_gamma: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl ScanReport {
    /// Non-Γ members must be strictly below the target (proved); Γ members
    /// get their energy order recorded (open).
    pub fn claims(&self) -> Vec<ClaimInstance> {
        let mut out = Vec::new();
        for r in &self.rows {
            let lhs = r.spec.to_string();
            if r.relation == Relation::Equal && r.label == self.target {
                out.push(ClaimInstance::new(
                    "scan-self",
                    lhs,
                    &self.target,
                    Expected::Le,
                    Actual::Quasi(r.relation),
                    Severity::Proved,
                ));
            } else if !r.in_gamma() {
                out.push(ClaimInstance::new(
                    "scan-main",
                    lhs,
                    &self.target,
                    Expected::Lt,
                    Actual::Quasi(r.relation),
                    Severity::Proved,
                ));
            } else {
                let forms: Vec<String> = r.gamma.iter().map(|f| f.to_string()).collect();
                let (actual, how) = match r.energy {
                    Some(o) => (Actual::Energy(o), r.energy_note.clone().unwrap_or_default()),
                    None => (Actual::Energy(EnergyOrder::Less), "implied by ≺".to_string()),
                };
                out.push(
                    ClaimInstance::new("scan-gamma", lhs, &self.target, Expected::EnergyLess, actual, Severity::Reported)
                        .with_note(format!("{}; relation {}; {how}", forms.join(", "), r.relation)),
                );
            }
        }
        out
    }
}

/// Compares every central structure of order `n` with `P_n^{6,6,6}`.
///
/// In `Mode::Full` only orders up to 16 are enumerable, which is below the
/// smallest order `P_n^{6,6,6}` exists at; the report says so and is empty.
pub fn conjecture_scan(n: usize, mode: Mode) -> Result<ScanReport> {
    let target_spec = FamilySpec::Pn666 { n };
    let empty = |note: String| ScanReport {
        n,
        mode,
        target: target_spec.to_string(),
        rows: Vec::new(),
        counts: ScanCounts::default(),
        equal_only_self: false,
        non_gamma_not_less: Vec::new(),
        incomparable_outside_gamma: Vec::new(),
        note: Some(note),
    };
    if mode == Mode::Full {
        return Ok(empty(format!(
            "conjecture range not reachable in full mode: P_n^(6,6,6) needs n ≥ 19, full enumeration stops at 16 (n = {n})"
        )));
    }
    if n < 19 {
        return Err(Error::BadParam(format!("P_n^(6,6,6) needs n ≥ 19, got {n}")));
    }
    let tg = target_spec.build()?;
    let tb = bseq(&tg)?;
    // The target as a star spec, so the self row can be recognized.
    let target_star = FamilySpec::ThetaII { n, a: 6, b: 6, k: 6, l1: n - 17, l2: 2, l3: 2 }.normalized();
    let specs = enumerate_central(n);
    let mut rows: Vec<ScanRow> = specs
        .par_iter()
        .map(|s| -> Result<ScanRow> {
            let g = s.build()?;
            let q = compare_bseq(&bseq(&g)?, &tb)?;
            let gamma = gamma_classify(s)?.forms();
            let (energy, energy_note) = match q.relation {
                Relation::StrictlyLess | Relation::Equal => (None, None),
                _ => {
                    let e = energy_compare(&g, &tg, SCAN_GAP_TOL)?;
                    (Some(e.order), Some(format!("E = {} vs {}", e.e1, e.e2)))
                }
            };
            let label = if *s == target_star {
                target_spec.to_string()
            } else {
                s.to_string()
            };
            Ok(ScanRow {
                spec: *s,
                label,
                relation: q.relation,
                gamma,
                energy,
                energy_note,
            })
        })
        .collect::<Result<_>>()?;
    rows.sort_by(|x, y| x.spec.cmp(&y.spec));
    let mut counts = ScanCounts::default();
    for r in &rows {
        match r.relation {
            Relation::StrictlyLess => counts.strictly_less += 1,
            Relation::Equal => counts.equal += 1,
            Relation::StrictlyGreater => counts.strictly_greater += 1,
            Relation::Incomparable => counts.incomparable += 1,
        }
    }
    let target = target_spec.to_string();
    let equal_only_self = counts.equal == 1
        && rows
            .iter()
            .any(|r| r.relation == Relation::Equal && r.label == target);
    let non_gamma_not_less = rows
        .iter()
        .filter(|r| !r.in_gamma() && r.label != target && r.relation != Relation::StrictlyLess)
        .map(|r| r.spec.to_string())
        .collect();
    let incomparable_outside_gamma = rows
        .iter()
        .filter(|r| !r.in_gamma() && r.relation == Relation::Incomparable)
        .map(|r| r.spec.to_string())
        .collect();
    Ok(ScanReport {
        n,
        mode,
        target,
        rows,
        counts,
        equal_only_self,
        non_gamma_not_less,
        incomparable_outside_gamma,
        note: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_mode_is_out_of_range() {
        let r = conjecture_scan(14, Mode::Full).unwrap();
        assert!(r.rows.is_empty());
        assert!(r.note.unwrap().contains("not reachable"));
    }

    #[test]
    fn central_mode_needs_the_target() {
        assert!(conjecture_scan(18, Mode::CentralOnly).is_err());
    }
}
