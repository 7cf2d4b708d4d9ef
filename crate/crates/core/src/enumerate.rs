//! Exhaustive generation of central structures and of the full class of
//! connected bipartite tricyclic graphs with three vertex-disjoint cycles.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, vertex_orbits};
use crate::error::{Error, Result};
use crate::families::{recognize, CycleClass, FamilySpec};
use crate::graph::Graph;
use crate::quasiorder::{compare, Relation};

/// Smallest order of a central structure: three 4-cycles in a chain joined
/// by single edges.
pub const MIN_CENTRAL_ORDER: usize = 12;
/// Hard cap for full enumeration.
pub const FULL_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Full,
    CentralOnly,
}

/// Cycle-length filter, matched as a multiset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleFilter {
    pub lengths: [usize; 3],
}

impl CycleFilter {
    pub fn new(a: usize, b: usize, k: usize) -> Self {
        let mut lengths = [a, b, k];
        lengths.sort_unstable();
        CycleFilter { lengths }
    }

    pub fn matches(&self, spec: &FamilySpec) -> bool {
        match cycle_lengths(spec) {
            Some(c) => c == self.lengths,
            None => false,
        }
    }
}

fn cycle_lengths(spec: &FamilySpec) -> Option<[usize; 3]> {
    match *spec {
        FamilySpec::ThetaI { a, b, k, .. } | FamilySpec::ThetaII { a, b, k, .. } => {
            let mut c = [a, b, k];
            c.sort_unstable();
            Some(c)
        }
        _ => None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationScope {
    pub n: usize,
    pub mode: Mode,
    pub filter: Option<CycleFilter>,
    pub full_limit: usize,
}

impl EnumerationScope {
    pub fn central(n: usize) -> Self {
        EnumerationScope {
            n,
            mode: Mode::CentralOnly,
            filter: None,
            full_limit: FULL_LIMIT,
        }
    }

    pub fn full(n: usize) -> Self {
        EnumerationScope {
            mode: Mode::Full,
            ..Self::central(n)
        }
    }

    /// Graphs in scope, each with its central structure's spec.
    pub fn run(&self) -> Result<Vec<ClassMember>> {
        let members = match self.mode {
            Mode::CentralOnly => enumerate_central(self.n)
                .into_iter()
                .map(|spec| ClassMember {
                    graph: spec.build().expect("enumerated specs build"),
                    core: spec,
                    planted: false,
                })
                .collect(),
            Mode::Full => {
                if self.n > self.full_limit {
                    return Err(Error::TooLarge {
                        order: self.n,
                        limit: self.full_limit,
                    });
                }
                enumerate_full(self.n)?
                    .into_iter()
                    .map(classify_member)
                    .collect::<Result<Vec<_>>>()?
            }
        };
        Ok(match self.filter {
            Some(f) => members.into_iter().filter(|m| f.matches(&m.core)).collect(),
            None => members,
        })
    }
}

#[derive(Debug, Clone)]
pub struct ClassMember {
    pub graph: Graph,
    /// Normalized spec of the tree-free core.
    pub core: FamilySpec,
    pub planted: bool,
}

fn classify_member(g: Graph) -> Result<ClassMember> {
    let (core, _) = central_structure(&g)?;
    Ok(ClassMember {
        planted: core.order() < g.order(),
        graph: g,
        core,
    })
}

/// The tree-free core of a class member, recognized as a Θ_I or Θ_II spec.
pub fn central_structure(g: &Graph) -> Result<(FamilySpec, Graph)> {
    let keep: HashSet<usize> = g.two_core().into_iter().collect();
    let drop: Vec<usize> = (0..g.order()).filter(|v| !keep.contains(v)).collect();
    let core = g.delete_vertices(&drop)?.without_labels();
    Ok((recognize(&core)?, core))
}

/// Every Θ_I and Θ_II spec of order `n`, one per isomorphism class, sorted.
/// Empty below the minimum order.
pub fn enumerate_central(n: usize) -> Vec<FamilySpec> {
    if n < MIN_CENTRAL_ORDER {
        return Vec::new();
    }
    let mut specs = HashSet::new();
    let evens = |max: usize| (4..=max).step_by(2);
    // Θ_I: a + b + k + l1 + l2 = n + 4
    for a in evens(n) {
        for b in evens(n) {
            for k in evens(n) {
                let Some(rest) = (n + 4).checked_sub(a + b + k) else {
                    continue;
                };
                for l1 in 2..rest.saturating_sub(1) {
                    let l2 = rest - l1;
                    if l2 < 2 {
                        continue;
                    }
                    for lc in 1..=b / 2 + 1 {
                        let s = FamilySpec::ThetaI { n, a, b, k, l1, l2, lc };
                        specs.insert(s.normalized());
                    }
                }
            }
        }
    }
    // Θ_II: a + b + k + l1 + l2 + l3 = n + 5
    for a in evens(n) {
        for b in evens(n) {
            for k in evens(n) {
                let Some(rest) = (n + 5).checked_sub(a + b + k) else {
                    continue;
                };
                for l1 in 2..=rest {
                    for l2 in 2..=rest.saturating_sub(l1) {
                        let l3 = rest - l1 - l2;
                        if l3 < 2 {
                            continue;
                        }
                        let s = FamilySpec::ThetaII { n, a, b, k, l1, l2, l3 };
                        specs.insert(s.normalized());
                    }
                }
            }
        }
    }
    let mut specs: Vec<FamilySpec> = specs.into_iter().collect();
    specs.sort();
    dedup_by_form(specs, |s| s.build().expect("enumerated specs build"))
}

/// Keeps the first item of each isomorphism class, preserving order.
fn dedup_by_form<T: Send + Sync, F>(items: Vec<T>, graph_of: F) -> Vec<T>
where
    F: Fn(&T) -> Graph + Sync,
{
    let forms: Vec<Vec<u8>> = items
        .par_iter()
        .map(|x| canonical_form(&graph_of(x)).expect("order within the canonical limit"))
        .collect();
    let mut seen = HashSet::new();
    items
        .into_iter()
        .zip(forms)
        .filter_map(|(x, f)| seen.insert(f).then_some(x))
        .collect()
}

/// True iff `g` has three pairwise vertex-disjoint cycles.
pub fn has_three_disjoint_cycles(g: &Graph) -> bool {
    if g.cyclomatic_number() < 3 {
        return false;
    }
    let masks: Vec<Vec<bool>> = g
        .all_cycles()
        .iter()
        .map(|c| {
            let mut m = vec![false; g.order()];
            for &v in c {
                m[v] = true;
            }
            m
        })
        .collect();
    let disjoint = |x: &[bool], y: &[bool]| !x.iter().zip(y).any(|(&p, &q)| p && q);
    let c = masks.len();
    for i in 0..c {
        for j in i + 1..c {
            if !disjoint(&masks[i], &masks[j]) {
                continue;
            }
            for k in j + 1..c {
                if disjoint(&masks[i], &masks[k]) && disjoint(&masks[j], &masks[k]) {
                    return true;
                }
            }
        }
    }
    false
}

/// The class membership predicate.
pub fn in_class(g: &Graph) -> bool {
    g.is_connected()
        && g.is_bipartite()
        && g.size() == g.order() + 2
        && has_three_disjoint_cycles(g)
}

/// Every class member of order `n`, one per isomorphism class, in canonical
/// form order. A member with planted trees has a pendant vertex whose
/// removal leaves a member of order `n - 1`, so the class grows from the
/// central structures by pendant additions at orbit representatives.
pub fn enumerate_full(n: usize) -> Result<Vec<Graph>> {
    if n > FULL_LIMIT {
        return Err(Error::TooLarge {
            order: n,
            limit: FULL_LIMIT,
        });
    }
    let mut level: Vec<(Vec<u8>, Graph)> = Vec::new();
    for m in MIN_CENTRAL_ORDER..=n {
        let grown: Vec<(Vec<u8>, Graph)> = level
            .par_iter()
            .flat_map_iter(|(_, g)| pendant_extensions(g))
            .collect();
        let fresh = enumerate_central(m)
            .into_iter()
            .map(|s| {
                let g = s.build().expect("enumerated specs build").without_labels();
                (canonical_form(&g).expect("order within the canonical limit"), g)
            });
        let mut next: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
        for (f, g) in grown.into_iter().chain(fresh) {
            next.entry(f).or_insert(g);
        }
        level = next.into_iter().collect();
    }
    Ok(level.into_iter().map(|(_, g)| g).collect())
}

fn pendant_extensions(g: &Graph) -> Vec<(Vec<u8>, Graph)> {
    let orbits = vertex_orbits(g, &vec![0; g.order()]).expect("order within the canonical limit");
    (0..g.order())
        .filter(|&v| orbits[v] == v)
        .map(|v| {
            let mut h = g.clone();
            let w = h.add_vertex();
            h.add_edge(v, w).expect("fresh pendant edge");
            (canonical_form(&h).expect("order within the canonical limit"), h)
        })
        .collect()
}

/// Per-class counts for one order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCount {
    pub n: usize,
    pub kind: String,
    /// Θ_I: `[end, middle, end]`; Θ_II: cycle lengths in decreasing order.
    pub cycles: [usize; 3],
    pub central: usize,
    pub planted: usize,
}

pub fn count_summary(n: usize, members: &[ClassMember]) -> Vec<ClassCount> {
    let mut map: BTreeMap<CycleClass, (usize, usize)> = BTreeMap::new();
    for m in members {
        let class = m.core.cycle_class().expect("central structures have a cycle class");
        let e = map.entry(class).or_default();
        if m.planted {
            e.1 += 1;
        } else {
            e.0 += 1;
        }
    }
    map.into_iter()
        .map(|(class, (central, planted))| {
            let (kind, cycles) = match class {
                CycleClass::Chain { middle, ends } => ("theta1", [ends.0, middle, ends.1]),
                CycleClass::Star { cycles } => ("theta2", cycles),
            };
            ClassCount {
                n,
                kind: kind.into(),
                cycles,
                central,
                planted,
            }
        })
        .collect()
}

/// Outcome of comparing one planted-tree member against the central
/// structures of its order and cycle class.
#[derive(Debug, Clone, Serialize)]
pub struct PlantedCheck {
    pub graph6: String,
    pub core: FamilySpec,
    /// A central structure `H` with `G ≺ H`, if any.
    pub strict_witness: Option<FamilySpec>,
    /// A central structure `H` with `G ⪯ H`, if any.
    pub weak_witness: Option<FamilySpec>,
}

/// For each planted-tree member of order `n`, searches the central
/// structures of the same order and cycle class for one that dominates it.
pub fn planted_tree_check(n: usize) -> Result<Vec<PlantedCheck>> {
    let members = EnumerationScope::full(n).run()?;
    let centrals: Vec<(FamilySpec, Graph)> = enumerate_central(n)
        .into_iter()
        .map(|s| {
            let g = s.build().expect("enumerated specs build");
            (s, g)
        })
        .collect();
    members
        .par_iter()
        .filter(|m| m.planted)
        .map(|m| {
            let class = m.core.cycle_class();
            let mut strict = None;
            let mut weak = None;
            for (s, h) in centrals.iter().filter(|(s, _)| s.cycle_class() == class) {
                let r = compare(&m.graph, h)?.relation;
                if r == Relation::StrictlyLess && strict.is_none() {
                    strict = Some(*s);
                }
                if r.is_le() && weak.is_none() {
                    weak = Some(*s);
                }
                if strict.is_some() {
                    break;
                }
            }
            Ok(PlantedCheck {
                graph6: crate::io::to_graph6(&m.graph),
                core: m.core,
                strict_witness: strict,
                weak_witness: weak,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{theta_i, theta_ii};

    #[test]
    fn below_minimum_is_empty() {
        assert!(enumerate_central(11).is_empty());
        let twelve = enumerate_central(12);
        assert_eq!(twelve.len(), 3);
        assert!(twelve.iter().all(|s| matches!(s, FamilySpec::ThetaI { l1: 2, l2: 2, .. })));
    }

    #[test]
    fn order_13_with_squares() {
        let f = CycleFilter::new(4, 4, 4);
        let specs: Vec<FamilySpec> = enumerate_central(13).into_iter().filter(|s| f.matches(s)).collect();
        let stars: Vec<_> = specs.iter().filter(|s| matches!(s, FamilySpec::ThetaII { .. })).collect();
        assert_eq!(stars, vec![&"theta2:13:4,4,4:2,2,2".parse::<FamilySpec>().unwrap()]);
        assert!(specs
            .iter()
            .filter(|s| matches!(s, FamilySpec::ThetaI { .. }))
            .all(|s| matches!(s, FamilySpec::ThetaI { l1, l2, .. } if l1 + l2 == 5)));
        // lc ∈ {1,2,3}, arm split (2,3)
        assert_eq!(specs.len(), 1 + 3);
    }

    #[test]
    fn hexagon_filter_at_20() {
        let f = CycleFilter::new(6, 6, 6);
        let specs: Vec<FamilySpec> = enumerate_central(20).into_iter().filter(|s| f.matches(s)).collect();
        let want = ["theta2:20:6,6,6:3,2,2", "theta2:20:6,6,6:2,3,2"];
        for w in want {
            let s: FamilySpec = w.parse().unwrap();
            assert!(specs.contains(&s.normalized()), "{w}");
        }
        // both strings name the same graph
        assert_eq!(
            "theta2:20:6,6,6:3,2,2".parse::<FamilySpec>().unwrap().normalized(),
            "theta2:20:6,6,6:2,3,2".parse::<FamilySpec>().unwrap().normalized()
        );
    }

    #[test]
    fn central_is_duplicate_free() {
        for n in 12..=18 {
            let specs = enumerate_central(n);
            let forms: HashSet<Vec<u8>> = specs
                .iter()
                .map(|s| canonical_form(&s.build().unwrap()).unwrap())
                .collect();
            assert_eq!(forms.len(), specs.len());
            for s in &specs {
                assert_eq!(recognize(&s.build().unwrap()).unwrap(), *s);
            }
        }
    }

    #[test]
    fn disjoint_cycle_predicate() {
        assert!(has_three_disjoint_cycles(&theta_ii(20, 6, 6, 6, 3, 2, 2).unwrap()));
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(!has_three_disjoint_cycles(&k4));
        // Theta graph on K_{2,3} with a pendant 4-cycle.
        let mut g = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let base = g.order();
        for _ in 0..4 {
            g.add_vertex();
        }
        for (u, v) in [(base, base + 1), (base + 1, base + 2), (base + 2, base + 3), (base + 3, base), (4, base)] {
            g.add_edge(u, v).unwrap();
        }
        assert_eq!(g.cyclomatic_number(), 3);
        assert!(!has_three_disjoint_cycles(&g));
    }

    #[test]
    fn full_13_and_members() {
        let full = enumerate_full(13).unwrap();
        let central = enumerate_central(13).len();
        // Order-12 chains with one pendant vertex, plus the order-13 cores.
        let planted = full.iter().filter(|g| (0..g.order()).any(|v| g.degree(v) == 1)).count();
        assert_eq!(full.len(), central + planted);
        assert!(planted > 0);
        for g in &full {
            assert!(in_class(g));
        }
        let forms: HashSet<Vec<u8>> = full.iter().map(|g| canonical_form(g).unwrap()).collect();
        assert_eq!(forms.len(), full.len());
    }

    #[test]
    fn core_extraction() {
        let mut g = theta_i(14, 4, 4, 4, 3, 3, 2).unwrap();
        let w = g.add_vertex();
        g.add_edge(0, w).unwrap();
        let (spec, core) = central_structure(&g).unwrap();
        assert_eq!(core.order(), 14);
        assert_eq!(spec, "theta1:14:4,4,4:3,3:2".parse::<FamilySpec>().unwrap().normalized());
    }

    #[test]
    fn too_large() {
        assert!(matches!(enumerate_full(17), Err(Error::TooLarge { .. })));
    }
}
