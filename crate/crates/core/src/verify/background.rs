//! Desk-scale checks of the unicyclic and bicyclic maximal-energy results
//! the tricyclic claims build on.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, vertex_orbits};
use crate::energy::{energy_certified, energy_compare, EnergyEnclosure};
use crate::error::{Error, Result};
use crate::families::{cycle, FamilySpec};
use crate::graph::Graph;
use crate::io::to_graph6;

use super::{Actual, ClaimInstance, Expected, Severity, VerifyReport};

/// Orders where `C_n` beats `P_n^6` among unicyclic graphs (n ≥ 5).
const CYCLE_WINS: [usize; 6] = [7, 9, 10, 11, 13, 15];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct BackgroundConfig {
    /// Inclusive range for `C_n` vs `P_n^6`.
    pub cycle_n: (usize, usize),
    /// Every unicyclic graph is enumerated for `7 ≤ n ≤ unicyclic_max`.
    pub unicyclic_max: usize,
    pub random_count: usize,
    pub random_n: usize,
    pub seed: u64,
    pub gap_tol: f64,
}

impl Default for BackgroundConfig {
    fn default() -> Self {
        BackgroundConfig {
            cycle_n: (7, 16),
            unicyclic_max: 12,
            random_count: 50,
            random_n: 16,
            seed: 0x7269_6379,
            gap_tol: 1e-9,
        }
    }
}

fn energy_claim(claim: &str, lhs: (&str, &Graph), rhs: (&str, &Graph), gap_tol: f64) -> Result<ClaimInstance> {
    let e = energy_compare(lhs.1, rhs.1, gap_tol)?;
    Ok(ClaimInstance::new(
        claim,
        lhs.0,
        rhs.0,
        Expected::EnergyLess,
        Actual::Energy(e.order),
        Severity::Proved,
    )
    .with_note(format!("E(lhs) in {}, E(rhs) in {}", e.e1, e.e2)))
}

/// All connected unicyclic graphs of order `n`, one per isomorphism class.
pub fn unicyclic_graphs(n: usize) -> Result<Vec<Graph>> {
    if n < 3 {
        return Ok(Vec::new());
    }
    let mut level: Vec<Graph> = vec![cycle(3)?];
    for m in 4..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            let orbits = vertex_orbits(g, &vec![0; g.order()])?;
            let mut reps: Vec<usize> = orbits.clone();
            reps.sort_unstable();
            reps.dedup();
            for v in reps {
                let mut h = g.clone();
                let w = h.add_vertex();
                h.add_edge(v, w)?;
                if seen.insert(canonical_form(&h)?) {
                    next.push(h);
                }
            }
        }
        let c = cycle(m)?;
        seen.insert(canonical_form(&c)?);
        next.push(c);
        level = next;
    }
    Ok(level)
}

/// A uniformly seeded bipartite unicyclic graph: an even cycle with a random
/// recursive forest grown on it.
fn random_bipartite_unicyclic(n: usize, rng: &mut ChaCha8Rng) -> Result<Graph> {
    let lengths: Vec<usize> = (4..=n).step_by(2).collect();
    let c = *lengths
        .choose(rng)
        .ok_or_else(|| Error::BadParam(format!("no even cycle fits in {n} vertices")))?;
    let mut g = cycle(c)?;
    while g.order() < n {
        let v = rng.gen_range(0..g.order());
        let w = g.add_vertex();
        g.add_edge(v, w)?;
    }
    Ok(g)
}

/// Largest energy among `graphs` against `best`: returns the claim for the
/// strongest competitor (the first one not certified below `best`, if any).
fn max_claim(claim: &str, n: usize, best: (&str, &Graph), graphs: &[Graph], gap_tol: f64) -> Result<ClaimInstance> {
    let best_cf = canonical_form(best.1)?;
    let e_best = energy_certified(best.1, 1e-9)?;
    let others: Vec<(Graph, EnergyEnclosure)> = graphs
        .par_iter()
        .map(|g| -> Result<Option<(Graph, EnergyEnclosure)>> {
            if canonical_form(g)? == best_cf {
                return Ok(None);
            }
            Ok(Some((g.clone(), energy_certified(g, 1e-9)?)))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    if others.len() + 1 != graphs.len() {
        return Err(Error::Precondition(format!("{claim}: {} is not in the enumerated set", best.0)));
    }
    let mut rival: Option<&(Graph, EnergyEnclosure)> = None;
    let mut failing: Option<ClaimInstance> = None;
    for o in &others {
        if rival.map_or(true, |r| o.1.hi > r.1.hi) {
            rival = Some(o);
        }
        if o.1.hi >= e_best.lo && failing.is_none() {
            let g6 = to_graph6(&o.0);
            let c = energy_claim(claim, (&g6, &o.0), best, gap_tol)?;
            if !c.pass {
                failing = Some(c);
            }
        }
    }
    let note = format!("n = {n}: {} graphs", graphs.len());
    let c = match (failing, rival) {
        (Some(c), _) => c,
        (None, Some(r)) => {
            let g6 = to_graph6(&r.0);
            energy_claim(claim, (&g6, &r.0), best, gap_tol)?
        }
        (None, None) => return Err(Error::Precondition(format!("{claim}: nothing to compare at n = {n}"))),
    };
    let prev = c.note.clone().unwrap_or_default();
    Ok(c.with_note(format!("{note}; strongest rival shown; {prev}")))
}

/// Certified energy checks of the unicyclic split, the unicyclic maximum,
/// and `E(R_{10,10}) < E(P_20^{6,6})`.
pub fn verify_background(cfg: &BackgroundConfig) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    for n in cfg.cycle_n.0.max(5)..=cfg.cycle_n.1 {
        let c = FamilySpec::Cycle { n };
        let p = FamilySpec::Pna { n, a: 6 };
        let (cg, pg) = (c.build()?, p.build()?);
        let (cs, ps) = (c.to_string(), p.to_string());
        let claim = if CYCLE_WINS.contains(&n) {
            energy_claim("BG-cycle", (&ps, &pg), (&cs, &cg), cfg.gap_tol)?
        } else {
            energy_claim("BG-cycle", (&cs, &cg), (&ps, &pg), cfg.gap_tol)?
        };
        report.claims.push(claim);
    }
    for n in 7..=cfg.unicyclic_max {
        let best = if CYCLE_WINS.contains(&n) {
            FamilySpec::Cycle { n }
        } else {
            FamilySpec::Pna { n, a: 6 }
        };
        let all = unicyclic_graphs(n)?;
        let bg = best.build()?;
        report.claims.push(max_claim("BG-unicyclic-all", n, (&best.to_string(), &bg), &all, cfg.gap_tol)?);
    }
    if cfg.random_count > 0 {
        let n = cfg.random_n;
        let best = FamilySpec::Pna { n, a: 6 };
        let bg = best.build()?;
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let mut sample = vec![cycle(n)?];
        for _ in 0..cfg.random_count {
            sample.push(random_bipartite_unicyclic(n, &mut rng)?);
        }
        let bcf = canonical_form(&bg)?;
        let mut seen = HashSet::new();
        seen.insert(bcf);
        let picked: Vec<Graph> = sample
            .into_iter()
            .filter_map(|g| match canonical_form(&g) {
                Ok(cf) if seen.insert(cf.clone()) => Some(Ok(g)),
                Ok(_) => None,
                Err(e) => Some(Err(e)),
            })
            .collect::<Result<_>>()?;
        let claims: Vec<ClaimInstance> = picked
            .par_iter()
            .map(|g| energy_claim("BG-unicyclic-random", (&to_graph6(g), g), (&best.to_string(), &bg), cfg.gap_tol))
            .collect::<Result<_>>()?;
        report.claims.extend(claims);
    }
    let r = FamilySpec::Rab { a: 10, b: 10 };
    let p = FamilySpec::Pnab { n: 20, a: 6, b: 6 };
    report.claims.push(energy_claim(
        "BG-bicyclic-R",
        (&r.to_string(), &r.build()?),
        (&p.to_string(), &p.build()?),
        cfg.gap_tol,
    )?);
    report.finalize();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unicyclic_counts() {
        // Connected unicyclic graphs of orders 3..=8.
        let counts: Vec<usize> = (3..=8).map(|n| unicyclic_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 13, 33, 89]);
    }

    #[test]
    fn random_graphs_are_bipartite_unicyclic() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let g = random_bipartite_unicyclic(12, &mut rng).unwrap();
            assert!(g.is_bipartite() && g.is_connected());
            assert_eq!(g.size(), 12);
        }
    }
}
