//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test --release -p tricyclic-core --test acceptance`.
//! Criteria known to be unattainable (see the notes printed with them) are
//! reported as FAIL without failing the process; any other FAIL does.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tricyclic_core::charpoly::{bseq, charpoly_oracle, charpoly_recursive, matching_count_oracle};
use tricyclic_core::energy::{coulson_energy, energy_certified, energy_compare, EnergyOrder};
use tricyclic_core::enumerate::{enumerate_central, enumerate_full, planted_tree_check, Mode};
use tricyclic_core::families::{cycle, p_n_a, p_n_ab, path, r_ab, star, FamilySpec};
use tricyclic_core::poly::IntPoly;
use tricyclic_core::quasiorder::{compare, verify_path_chain};
use tricyclic_core::verify::{self, BackgroundConfig, ClaimFamily, Grid, VerifyConfig};
use tricyclic_core::Graph;

struct Outcome {
    pass: bool,
    /// FAIL is the documented outcome; it does not fail the run.
    known: bool,
    detail: String,
}

impl Outcome {
    fn pass(detail: impl Into<String>) -> Self {
        Outcome {
            pass: true,
            known: false,
            detail: detail.into(),
        }
    }

    fn check(pass: bool, detail: impl Into<String>) -> Self {
        Outcome {
            pass,
            known: false,
            detail: detail.into(),
        }
    }

    fn known_fail(detail: impl Into<String>) -> Self {
        Outcome {
            pass: false,
            known: true,
            detail: detail.into(),
        }
    }
}

fn poly_desc(c: &[i64]) -> IntPoly {
    IntPoly::from_i64(c)
}

fn criterion_1() -> Outcome {
    let fixtures: [(&str, Graph, Vec<i64>); 4] = [
        ("C_6", cycle(6).unwrap(), vec![1, 0, -6, 0, 9, 0, -4]),
        ("P_6^4", p_n_a(6, 4).unwrap(), vec![1, 0, -6, 0, 6, 0, 0]),
        ("P_5^4", p_n_a(5, 4).unwrap(), vec![1, 0, -3, 0, 2, 0]),
        ("P_5", path(5).unwrap(), vec![1, 0, -4, 0, 3, 0]),
    ];
    let mut bad = Vec::new();
    for (name, g, printed) in &fixtures {
        let rec = charpoly_recursive(g);
        assert_eq!(rec, charpoly_oracle(g).unwrap(), "{name}: routes disagree");
        if rec != poly_desc(printed) {
            bad.push(format!("{name}: computed {rec}, printed {}", poly_desc(printed)));
        }
    }
    if bad == ["P_5^4: computed λ^5−5λ^3+2λ, printed λ^5−3λ^3+2λ"] {
        Outcome::known_fail(format!(
            "3 of 4 fixtures match; {} (5 edges force a_2 = −5)",
            bad[0]
        ))
    } else {
        Outcome::check(bad.is_empty(), if bad.is_empty() { "all 4 fixtures match".into() } else { bad.join("; ") })
    }
}

fn family_instances(max_n: usize) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.push((format!("path:{n}"), path(n).unwrap()));
        out.push((format!("star:{n}"), star(n).unwrap()));
        if n >= 3 {
            out.push((format!("cycle:{n}"), cycle(n).unwrap()));
        }
        for a in 3..=n {
            out.push((format!("pna:{n}:{a}"), p_n_a(n, a).unwrap()));
            for b in 3..=a {
                if a + b <= n + 1 {
                    out.push((format!("pnab:{n}:{a},{b}"), p_n_ab(n, a, b).unwrap()));
                }
            }
        }
    }
    for a in 3..max_n {
        for b in 3..=a {
            if a + b <= max_n {
                if let Ok(g) = r_ab(a, b) {
                    out.push((format!("rab:{}:{a},{b}", a + b), g));
                }
            }
        }
    }
    for n in 12..=max_n {
        for s in enumerate_central(n) {
            out.push((s.to_string(), s.build().unwrap()));
        }
    }
    out
}

fn criterion_2() -> Outcome {
    let mut graphs = family_instances(14);
    let families = graphs.len();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for i in 0..500 {
        let n = rng.gen_range(8..=16);
        graphs.push((format!("random #{i}"), common::random_bipartite_tricyclic(n, &mut rng)));
    }
    let mut bad = Vec::new();
    for (name, g) in &graphs {
        let p = charpoly_recursive(g);
        if p != charpoly_oracle(g).unwrap() {
            bad.push(format!("{name}: charpoly"));
        }
        if g.is_bipartite() && bseq(g).unwrap() != matching_count_oracle(g).unwrap() {
            bad.push(format!("{name}: b-sequence"));
        }
    }
    Outcome::check(
        bad.is_empty(),
        format!("{families} family instances + 500 random tricyclic graphs; mismatches: {bad:?}"),
    )
}

fn criterion_3() -> Outcome {
    let bad: Vec<usize> = (4..=30).filter(|&n| !verify_path_chain(n).unwrap().holds()).collect();
    Outcome::check(bad.is_empty(), format!("n = 4..=30; failing orders {bad:?}"))
}

fn convolve(x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(0); x.len() + y.len() - 1];
    for (i, a) in x.iter().enumerate() {
        for (j, b) in y.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    while out.len() > 1 && out.last() == Some(&BigInt::from(0)) {
        out.pop();
    }
    out
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut union_bad = 0;
    for _ in 0..200 {
        let g = common::random_bipartite_cyclic(rng.gen_range(2..=9), rng.gen_range(0..=2), &mut rng);
        let h = common::random_bipartite_cyclic(rng.gen_range(2..=9), rng.gen_range(0..=2), &mut rng);
        let direct = bseq(&g.disjoint_union(&h)).unwrap();
        let mut trimmed = direct.b.clone();
        while trimmed.len() > 1 && trimmed.last() == Some(&BigInt::from(0)) {
            trimmed.pop();
        }
        if trimmed != convolve(&bseq(&g).unwrap().b, &bseq(&h).unwrap().b) {
            union_bad += 1;
        }
    }
    let mut edge_bad = 0;
    let mut cases = 0;
    let mut bridges = 0;
    while cases < 200 {
        let (g, u, v) = if rng.gen_bool(0.3) {
            let a = common::random_bipartite_cyclic(rng.gen_range(3..=7), rng.gen_range(0..=2), &mut rng);
            let b = common::random_bipartite_cyclic(rng.gen_range(3..=7), rng.gen_range(0..=2), &mut rng);
            let u = rng.gen_range(0..a.order());
            let v = a.order() + rng.gen_range(0..b.order());
            (a.disjoint_union(&b), u, v)
        } else {
            let g = common::random_bipartite_cyclic(rng.gen_range(6..=12), rng.gen_range(0..=2), &mut rng);
            let c = g.bipartition().unwrap();
            let u = rng.gen_range(0..g.order());
            let v = rng.gen_range(0..g.order());
            if c[u] == c[v] || g.has_edge(u, v) {
                continue;
            }
            (g, u, v)
        };
        let mut ge = g.clone();
        ge.add_edge(u, v).unwrap();
        let lengths = ge.cycles_through_edge(u, v).unwrap().lengths();
        if !lengths.iter().all(|l| l % 4 == 2) {
            continue;
        }
        bridges += lengths.is_empty() as usize;
        cases += 1;
        if !compare(&g, &ge).unwrap().relation.is_le() {
            edge_bad += 1;
        }
    }
    Outcome::check(
        union_bad == 0 && edge_bad == 0,
        format!("union product: 200 pairs, {union_bad} mismatches; edge addition: 200 cases ({bridges} bridges), {edge_bad} violations"),
    )
}

/// Subcase ids the default grid must cover, with the number of instances
/// the parameter region admits when it is smaller than 3.
const SUBCASES: &[&str] = &[
    "L3.3-case1",
    "L3.3-case2",
    "T3.4-sub1.1",
    "T3.4-sub1.3",
    "T3.4-sub2.1",
    "T3.4-sub2.2",
    "T3.4-sub2.3",
    "T3.4-sub3.1",
    "T3.4-sub3.2",
    "T3.4-sub4.1",
    "T3.4-sub4.2",
    "T3.4-sub4.3",
    "T3.4-sub4.4",
    "T3.4-sub5.1",
    "T3.4-sub5.2",
    "T3.4-sub5.3",
    "T3.4-sub6.1",
    "T3.4-sub6.2",
    "T3.4-sub6.3",
    "T3.4-sub7.1",
    "T3.4-sub7.2",
    "T3.4-sub7.3",
    "T3.4-sub8.1",
    "T3.4-sub8.2",
    "T3.4-sub8.3",
    "L3.5",
    "L3.6",
    "T3.8-sub1.1",
    "T3.8-sub1.2",
    "T3.8-sub1.3",
    "T3.8-sub2.1",
    "T3.8-sub2.2",
    "T3.8-sub3.1",
    "T3.8-sub3.2",
    "T3.8-sub4.1",
    "T3.8-sub4.2",
    "L3.9",
    "L3.10",
];

fn criterion_5() -> Outcome {
    let fams: Vec<ClaimFamily> = ClaimFamily::ALL
        .iter()
        .copied()
        .filter(|f| *f != ClaimFamily::Background)
        .collect();
    let report = verify::run(&fams, &VerifyConfig::default()).unwrap();
    let failures = report.proved_failures();
    let mut count: BTreeMap<&str, usize> = BTreeMap::new();
    for c in &report.claims {
        *count.entry(c.claim.as_str()).or_default() += 1;
    }
    let short: Vec<String> = SUBCASES
        .iter()
        .filter(|s| count.get(*s).copied().unwrap_or(0) < 3)
        .map(|s| format!("{s}={}", count.get(s).copied().unwrap_or(0)))
        .collect();
    // Subcase 1.3 of the star theorem needs a, b, k ≥ 8 and so n ≥ 29.
    let extra = verify::verify_theorem_3_4(&Grid {
        cycles: vec![8, 10],
        n_min: 29,
        n_max: 31,
        ..Grid::default()
    })
    .unwrap();
    let extra_13 = extra.claims_with_prefix("T3.4-sub1.3").filter(|c| c.pass).count();
    let extra_fail = extra.proved_failures().len();
    let id_findings: Vec<String> = report
        .identity_failures()
        .iter()
        .map(|c| c.id.clone())
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    let base = format!(
        "{} proved instances, {} failures; {} displayed expansions checked, printed-form mismatches in {:?}",
        report.claims.iter().filter(|c| c.severity == verify::Severity::Proved).count(),
        failures.len(),
        report.identities.len(),
        id_findings
    );
    let expected_short = ["T3.4-sub1.3=0", "T3.4-sub8.1=1", "T3.4-sub8.2=1", "T3.4-sub8.3=1"];
    if !failures.is_empty() || extra_fail > 0 {
        return Outcome::check(false, format!("{base}; supplement failures {extra_fail}"));
    }
    if short.is_empty() {
        return Outcome::pass(base);
    }
    if short == expected_short && extra_13 >= 3 {
        return Outcome::known_fail(format!(
            "{base}; coverage below 3 only where the region is smaller: {short:?} \
             (sub1.3 starts at n = 29, {extra_13} instances pass for n in 29..=31; \
             case 8 subcases are single fixed graphs at n = 20)"
        ));
    }
    Outcome::check(false, format!("{base}; under-covered {short:?}"))
}

fn criterion_6() -> Outcome {
    let g: FamilySpec = "theta1:22:6,6,6:6,2:2".parse().unwrap();
    let h: FamilySpec = "theta2:22:6,6,6:5,2,2".parse().unwrap();
    let e = energy_compare(&g.build().unwrap(), &h.build().unwrap(), 1e-6).unwrap();
    Outcome::check(
        e.order == EnergyOrder::Less,
        format!("E(G) in {}, E(H) in {}: {}", e.e1, e.e2, e.order),
    )
}

fn criterion_7() -> Outcome {
    let mut worst: f64 = 0.0;
    let corpus = common::energy_corpus();
    for (_, g) in &corpus {
        let e = energy_certified(g, 1e-10).unwrap();
        let c = coulson_energy(g, 1e-7).unwrap();
        worst = worst.max((e.midpoint_f64() - c.value).abs());
    }
    let c6 = energy_certified(&cycle(6).unwrap(), 1e-10).unwrap();
    let eight = BigRational::from_integer(BigInt::from(8));
    let width = c6.width().to_f64();
    let ok = worst <= 1e-4 && c6.contains(&eight) && width <= 1e-9;
    Outcome::check(
        ok,
        format!(
            "{} graphs, max |certified − Coulson| = {worst:.2e}; E(C_6) in {c6} (width {width:.1e})",
            corpus.len()
        ),
    )
}

fn criterion_8() -> Outcome {
    let cfg = BackgroundConfig {
        unicyclic_max: 6,
        random_count: 0,
        ..BackgroundConfig::default()
    };
    let r = verify::verify_background(&cfg).unwrap();
    let cycles: Vec<_> = r.claims_with_prefix("BG-cycle").collect();
    let bic: Vec<_> = r.claims_with_prefix("BG-bicyclic-R").collect();
    let bad: Vec<String> = r
        .claims
        .iter()
        .filter(|c| !c.pass)
        .map(|c| format!("{} {} vs {}: {}", c.claim, c.lhs, c.rhs, c.actual))
        .collect();
    Outcome::check(
        bad.is_empty() && cycles.len() == 10 && bic.len() == 1,
        format!("C_n vs P_n^6 for n = 7..=16 and R_(10,10) vs P_20^(6,6); failures {bad:?}"),
    )
}

fn criterion_9() -> Outcome {
    let r = verify::conjecture_scan(20, Mode::CentralOnly).unwrap();
    let gamma_incomparable = r
        .rows
        .iter()
        .filter(|x| x.in_gamma() && x.relation == tricyclic_core::quasiorder::Relation::Incomparable)
        .count();
    let gamma = r.rows.iter().filter(|x| x.in_gamma()).count();
    Outcome::check(
        r.non_gamma_not_less.is_empty() && r.incomparable_outside_gamma.is_empty() && r.equal_only_self,
        format!(
            "{} central structures ({gamma} in Γ1 ∪ Γ2): {:?}; incomparable in Γ: {gamma_incomparable}; non-Γ not ≺: {:?}",
            r.rows.len(),
            r.counts,
            r.non_gamma_not_less
        ),
    )
}

fn criterion_10() -> Outcome {
    let full = enumerate_full(14).unwrap().len();
    let oracle = common::class_oracle_count(14);
    let checks = planted_tree_check(14).unwrap();
    let undominated = checks.iter().filter(|c| c.weak_witness.is_none()).count();
    let detail = format!(
        "enumerate_full(14) = {full}, oracle = {oracle}; planted members without a ⪯-dominating central structure of the same class: {undominated}/{}",
        checks.len()
    );
    if full != oracle {
        return Outcome::check(false, detail);
    }
    if undominated == 0 {
        return Outcome::pass(detail);
    }
    if (undominated, checks.len()) == (25, 138) {
        return Outcome::known_fail(format!("count half holds; {detail} (e.g. {})", checks
            .iter()
            .find(|c| c.weak_witness.is_none())
            .map(|c| c.graph6.as_str())
            .unwrap_or("")));
    }
    Outcome::check(false, detail)
}

fn main() {
    let criteria: [(&str, Duration, fn() -> Outcome); 10] = [
        ("printed polynomial fixtures", Duration::from_secs(1), criterion_1),
        ("oracle equivalence", Duration::from_secs(120), criterion_2),
        ("path chain", Duration::from_secs(10), criterion_3),
        ("union product and edge addition", Duration::from_secs(60), criterion_4),
        ("claim harness on the default grid", Duration::from_secs(600), criterion_5),
        ("computed chain-vs-star energy case", Duration::from_secs(30), criterion_6),
        ("energy cross-validation", Duration::from_secs(60), criterion_7),
        ("background theorems", Duration::from_secs(60), criterion_8),
        ("conjecture scan at n = 20", Duration::from_secs(900), criterion_9),
        ("full enumeration at n = 14", Duration::from_secs(1200), criterion_10),
    ];
    let mut unexpected = 0;
    for (i, (name, limit, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let mut o = f();
        let elapsed = t.elapsed();
        if elapsed > *limit {
            o.pass = false;
            o.known = false;
            o.detail = format!("{} (took {elapsed:.1?}, limit {limit:?})", o.detail);
        }
        let status = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {status}: {name} [{elapsed:.2?}] {}", i + 1, o.detail);
        if !o.pass && !o.known {
            unexpected += 1;
        }
    }
    if unexpected > 0 {
        eprintln!("{unexpected} criteria failed unexpectedly");
        std::process::exit(1);
    }
}
