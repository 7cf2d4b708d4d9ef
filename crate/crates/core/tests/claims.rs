//! Worked instances of the lemma and theorem claims, checked both directly
//! and through the harness.

use tricyclic_core::energy::{energy_compare, EnergyOrder};
use tricyclic_core::families::{gamma_classify, FamilySpec, GammaForm};
use tricyclic_core::quasiorder::{compare, Relation};
use tricyclic_core::verify::{
    self, conjecture_scan, verify_background, verify_lemma_3_10, verify_lemma_3_3, verify_lemma_3_9,
    verify_lemmas_3_5_3_6, verify_theorem_3_4, verify_theorem_3_8, BackgroundConfig, Grid, Severity,
};
use tricyclic_core::enumerate::Mode;

fn rel(a: &str, b: &str) -> Relation {
    let g = a.parse::<FamilySpec>().unwrap().build().unwrap();
    let h = b.parse::<FamilySpec>().unwrap().build().unwrap();
    compare(&g, &h).unwrap().relation
}

fn small_grid(cycles: &[usize], n: (usize, usize)) -> Grid {
    Grid {
        cycles: cycles.to_vec(),
        arms: (2..=6).collect(),
        n_min: n.0,
        n_max: n.1,
    }
}

#[test]
fn arc_position_moves_toward_two() {
    assert!(rel("theta1:20:6,8,6:2,2:1", "theta1:20:6,8,6:2,2:2").is_le());
    assert_eq!(rel("theta1:20:6,8,6:2,2:2", "theta1:20:6,8,6:2,2:2"), Relation::Equal);
    assert!(rel("theta1:21:4,10,6:2,3:4", "theta1:21:4,10,6:2,3:2").is_le());
}

#[test]
fn star_subcase_maps() {
    assert!(rel("theta2:29:8,8,8:3,4,3", "theta2:29:6,6,6:5,6,5").is_le());
    assert!(rel("theta2:22:6,4,6:2,6,3", "theta2:22:6,6,6:2,4,3").is_le());
    assert!(rel("theta2:20:4,4,4:4,5,4", "theta2:20:6,6,6:2,3,2").is_le());
}

#[test]
fn hexagon_arm_merging_is_strict() {
    assert_eq!(rel("theta2:22:6,6,6:3,3,3", "theta2:22:6,6,6:3,4,2"), Relation::StrictlyLess);
    assert_eq!(rel("theta2:22:6,6,6:4,3,2", "theta2:22:6,6,6:5,2,2"), Relation::StrictlyLess);
    assert_eq!(rel("theta1:20:6,6,6:3,3:2", "theta1:20:6,6,6:4,2:2"), Relation::StrictlyLess);
}

#[test]
fn chain_subcase_map() {
    assert!(rel("theta1:22:8,6,6:3,3:2", "theta1:22:6,6,6:5,3:2").is_le());
}

#[test]
fn chain_versus_star_at_l5_needs_energies() {
    let g = "theta1:22:6,6,6:6,2:2".parse::<FamilySpec>().unwrap().build().unwrap();
    let h = "theta2:22:6,6,6:5,2,2".parse::<FamilySpec>().unwrap().build().unwrap();
    let e = energy_compare(&g, &h, 1e-6).unwrap();
    assert_eq!(e.order, EnergyOrder::Less);
    assert!(e.e1.hi < e.e2.lo);
    for n in [20, 26] {
        let l = n - 17;
        let a = format!("theta1:{n}:6,6,6:{},2:2", l + 1);
        let b = format!("theta2:{n}:6,6,6:{l},2,2");
        assert_eq!(rel(&a, &b), Relation::StrictlyLess, "n = {n}");
    }
}

#[test]
fn gamma_examples() {
    let s: FamilySpec = "theta2:25:10,6,6:2,3,3".parse().unwrap();
    assert!(gamma_classify(&s).unwrap().forms().contains(&GammaForm::Gamma2I));
    let s: FamilySpec = "theta2:28:8,8,8:3,3,3".parse().unwrap();
    assert!(gamma_classify(&s).unwrap().forms().contains(&GammaForm::Gamma2II));
    let s: FamilySpec = "theta2:20:6,6,6:3,2,2".parse().unwrap();
    assert!(gamma_classify(&s).unwrap().forms().is_empty());
}

#[test]
fn harness_arc_lemma() {
    let r = verify_lemma_3_3(&small_grid(&[4, 6, 8], (20, 21))).unwrap();
    assert!(r.claims_with_prefix("L3.3-case1").count() > 0);
    assert!(r.claims_with_prefix("L3.3-case2").count() > 0);
    assert!(r.proved_failures().is_empty());
}

#[test]
fn harness_star_theorem() {
    let r = verify_theorem_3_4(&small_grid(&[4, 6, 8], (20, 22))).unwrap();
    assert!(r.claims_with_prefix("T3.4-sub8.3").count() == 1);
    assert!(r.claims_with_prefix("T3.4-sub2.1").count() > 0);
    assert!(r.proved_failures().is_empty());
}

#[test]
fn harness_chain_theorem() {
    let r = verify_theorem_3_8(&small_grid(&[4, 6, 8], (20, 22))).unwrap();
    assert!(r.claims_with_prefix("T3.8-sub1.2").count() > 0);
    assert!(r.proved_failures().is_empty());
    assert!(r.skipped.keys().any(|k| k.contains("Γ1")));
}

#[test]
fn harness_merging_lemmas() {
    let r = verify_lemmas_3_5_3_6((22, 22)).unwrap();
    assert!(r.claims_with_prefix("L3.5").count() > 0);
    assert!(r.claims_with_prefix("L3.6").count() > 0);
    assert!(r.proved_failures().is_empty());
    let r = verify_lemma_3_9((20, 22)).unwrap();
    assert!(r.claims.iter().all(|c| c.pass));
    let all = verify::verify_lemmas_3_5_3_6_3_9((20, 21)).unwrap();
    assert!(all.proved_failures().is_empty());
}

#[test]
fn harness_chain_versus_star() {
    let r = verify_lemma_3_10((20, 26), 1e-6).unwrap();
    let l5: Vec<_> = r.claims_with_prefix("L3.10-l5").collect();
    assert!(l5.iter().any(|c| c.severity == Severity::Proved && c.pass));
    assert!(r.proved_failures().is_empty());
    // The printed expansion of H drops a hexagon term; the corrected one holds.
    assert!(r.identities.iter().any(|i| i.id == "L3.10-expand-H-corrected" && i.holds));
}

#[test]
fn background_spot_checks() {
    let cfg = BackgroundConfig {
        cycle_n: (9, 11),
        unicyclic_max: 8,
        random_count: 5,
        ..BackgroundConfig::default()
    };
    let r = verify_background(&cfg).unwrap();
    assert_eq!(r.claims_with_prefix("BG-cycle").count(), 3);
    assert_eq!(r.claims_with_prefix("BG-bicyclic-R").count(), 1);
    assert!(r.proved_failures().is_empty());
    // C_10 beats P_10^6.
    let c10 = r.claims.iter().find(|c| c.claim == "BG-cycle" && c.rhs == "cycle:10").unwrap();
    assert!(c10.pass);
}

#[test]
fn scan_at_twenty() {
    let s = conjecture_scan(20, Mode::CentralOnly).unwrap();
    assert!(s.equal_only_self);
    assert!(s.non_gamma_not_less.is_empty());
    assert!(s.incomparable_outside_gamma.is_empty());
    let own = s.rows.iter().find(|r| r.label == "p666:20").unwrap();
    assert_eq!(own.relation, Relation::Equal);
    let claims = s.claims();
    assert!(claims.iter().filter(|c| c.severity == Severity::Proved).all(|c| c.pass));
}

#[test]
fn report_round_trips_through_json() {
    let r = verify_lemma_3_9((20, 20)).unwrap();
    let back: verify::VerifyReport = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(back, r);
    assert!(r.to_markdown().starts_with("# Claim report"));
}
