//! Star-shaped claims: reduction of any `Θ_II` outside Γ2 to three hexagons,
//! then merging arms.

use std::collections::BTreeSet;

use crate::canon::are_isomorphic;
use crate::error::Result;
use crate::families::{gamma_classify, FamilySpec};

use super::identity::{BCache, Identity, Piece, Term};
use super::{evaluate, hexagon_stars, sample_identities, Expected, Grid, Pending, Rhs, VerifyReport};

/// Where one oriented instance (`a ≥ k ≥ b`) is sent.
#[derive(Debug, Clone, PartialEq, Eq)]
enum Route {
    /// A subcase with an explicit target `(l'_1, l'_2, l'_3)`.
    Map(&'static str, [i64; 3]),
    /// A region with no explicit map; some hexagon star must dominate.
    Exists(&'static str),
    OutOfScope(&'static str),
}

fn route(a: i64, b: i64, k: i64, l1: i64, l2: i64, l3: i64, n: i64) -> Route {
    use Route::*;
    let x1 = l1 + a - 2 >= 7;
    let x2 = l2 + b - 3 >= 7;
    let x3 = l3 + k - 2 >= 7;
    let abk = (a, b, k);
    let hex = abk == (6, 6, 6);
    match (x1, x2, x3) {
        (true, true, true) => {
            let m = [a + l1 - 6, b + l2 - 6, k + l3 - 6];
            if l1 >= 3 && l2 >= 4 && l3 >= 3 {
                Map("sub1.1", m)
            } else if l2 == 3 && l1 >= 3 && l3 >= 3 && !(l1 == 3 && l3 == 3) {
                Map("sub1.3", m)
            } else {
                Exists("case1")
            }
        }
        (false, true, true) => match abk {
            _ if hex => Map("trivial", [l1, l2, l3]),
            (6, 4, 6) if l1 == 2 && l2 >= 6 && l3 >= 3 => Map("sub2.1", [2, l2 - 2, l3]),
            (6, 4, 4) if l1 == 2 && l2 >= 6 && l3 >= 5 => Map("sub2.2", [2, l2 - 2, l3 - 2]),
            (4, 4, 4) if l1 == 4 && l2 >= 6 && l3 >= 5 => Map("sub2.3", [2, l2 - 2, l3 - 2]),
            _ => Exists("case2"),
        },
        (true, true, false) => {
            if a > 6 && k == 6 && (b == 6 || b == 4) && l3 == 2 && l1 >= 3 {
                Map("sub3.1", [a + l1 - 6, b + l2 - 6, 2])
            } else if a > 6 && k == 4 && b == 4 && l3 == 4 && l2 >= 6 {
                Map("sub3.2", [a + l1 - 6, l2 - 2, 2])
            } else {
                Exists("case3")
            }
        }
        (true, false, true) if l1 >= 3 && l3 >= 3 => {
            let (t1, t3) = (a + l1 - 6, k + l3 - 6);
            match (b, l2) {
                (6, 3) => Map("sub4.1", [t1, 3, t3]),
                (6, 2) => Map("sub4.2", [t1, 2, t3]),
                (4, 5) => Map("sub4.3", [t1, 3, t3]),
                (4, 4) => Map("sub4.4", [t1, 2, t3]),
                _ => Exists("case4"),
            }
        }
        (true, false, true) => Exists("case4"),
        (false, true, false) => match abk {
            _ if hex => Map("trivial", [l1, l2, l3]),
            (6, 4, 6) if l1 == 2 && l3 == 2 => Map("sub5.1", [2, l2 - 2, 2]),
            (6, 4, 4) if l1 == 2 && l3 == 4 => Map("sub5.2", [2, l2 - 2, 2]),
            (4, 4, 4) if l1 == 4 && l3 == 4 => Map("sub5.3", [2, l2 - 2, 2]),
            _ => Exists("case5"),
        },
        (false, false, true) => match abk {
            _ if hex => Map("trivial", [l1, l2, l3]),
            (6, 4, 6) if l1 == 2 && (4..=5).contains(&l2) && l3 >= 3 => Map("sub6.1", [2, l2 - 2, l3]),
            (6, 4, 4) if l1 == 2 && (4..=5).contains(&l2) && l3 >= 5 => Map("sub6.2", [2, l2 - 2, l3 - 2]),
            (4, 4, 4) if l1 == 4 && (4..=5).contains(&l2) && l3 >= 5 => Map("sub6.3", [2, l2 - 2, l3 - 2]),
            _ => Exists("case6"),
        },
        (true, false, false) => {
            let t1 = a + l1 - 6;
            if a <= 6 {
                Exists("case7")
            } else if k == 6 && b == 6 && l3 == 2 && l2 <= 3 {
                Map("sub7.1", [t1, l2, 2])
            } else if k == 6 && b == 4 && l3 == 2 && (4..=5).contains(&l2) {
                Map("sub7.2", [t1, l2 - 2, 2])
            } else if k == 4 && b == 4 && l3 == 4 && (4..=5).contains(&l2) {
                Map("sub7.3", [t1, l2 - 2, 2])
            } else {
                Exists("case7")
            }
        }
        (false, false, false) => match (abk, l1, l2, l3) {
            _ if hex => Map("trivial", [l1, l2, l3]),
            ((6, 4, 6), 2, 5, 2) if n == 20 => Map("sub8.1", [2, 3, 2]),
            ((6, 4, 4), 2, 5, 4) if n == 20 => Map("sub8.2", [2, 3, 2]),
            ((4, 4, 4), 4, 5, 4) if n == 20 => Map("sub8.3", [2, 3, 2]),
            _ => OutOfScope("case8"),
        },
    }
}

/// Parameters of one oriented instance and its hexagon target.
#[derive(Debug, Clone, Copy)]
struct Inst {
    a: i64,
    b: i64,
    k: i64,
    l1: i64,
    l2: i64,
    l3: i64,
    t: [i64; 3],
    g: FamilySpec,
    h: FamilySpec,
}

fn star(n: i64, abk: [i64; 3], l: [i64; 3]) -> Option<FamilySpec> {
    if l.iter().any(|&x| x < 2) {
        return None;
    }
    let s = FamilySpec::ThetaII {
        n: n as usize,
        a: abk[0] as usize,
        b: abk[1] as usize,
        k: abk[2] as usize,
        l1: l[0] as usize,
        l2: l[1] as usize,
        l3: l[2] as usize,
    };
    s.build().ok().map(|_| s)
}

/// The two displayed expansions (original and target) of a subcase.
fn displays(sub: &str, p: &Inst) -> Vec<Identity> {
    use Piece::{Cycle as C, Pa, Pab, Path as P};
    let Inst { a, b, k, l1, l2, l3, t, .. } = *p;
    let [t1, t2, t3] = t;
    let c6 = C(6);
    let (gl, hl): ((Vec<Piece>, Vec<Piece>), (Vec<Piece>, Vec<Piece>)) = match sub {
        "sub1.1" => (
            (vec![Pab(a + k + l1 + l3 - 3, a, k), Pa(b + l2 - 2, b)], vec![Pa(a + l1 - 2, a), Pa(k + l3 - 2, k), Pa(b + l2 - 3, b)]),
            (vec![Pab(t1 + t3 + 9, 6, 6), Pa(t2 + 4, 6)], vec![Pa(t1 + 4, 6), Pa(t3 + 4, 6), Pa(t2 + 3, 6)]),
        ),
        "sub1.3" => (
            (vec![Pab(k + b + l2 + l3 - 3, k, b), Pa(a + l1 - 2, a)], vec![Pa(a + l1 - 3, a), Pa(k + l3 - 2, k), Pa(b + l2 - 2, b)]),
            (vec![Pab(t2 + t3 + 9, 6, 6), Pa(t1 + 4, 6)], vec![Pa(t1 + 3, 6), Pa(t3 + 4, 6), Pa(t2 + 4, 6)]),
        ),
        "sub2.1" => (
            (vec![Pab(l3 + 11, 6, 6), Pa(l2 + 2, 4)], vec![c6, Pa(l3 + 4, 6), Pa(l2 + 1, 4)]),
            (vec![Pab(l3 + 11, 6, 6), Pa(l2 + 2, 6)], vec![c6, Pa(l3 + 4, 6), Pa(l2 + 1, 6)]),
        ),
        "sub2.2" => (
            (vec![Pab(l3 + 9, 6, 4), Pa(l2 + 2, 4)], vec![c6, Pa(l3 + 2, 4), Pa(l2 + 1, 4)]),
            (vec![Pab(l3 + 9, 6, 6), Pa(l2 + 2, 6)], vec![c6, Pa(l3 + 2, 6), Pa(l2 + 1, 6)]),
        ),
        "sub2.3" => (
            (vec![Pab(l3 + 9, 4, 4), Pa(l2 + 2, 4)], vec![Pa(6, 4), Pa(l3 + 2, 4), Pa(l2 + 1, 4)]),
            (vec![Pab(l3 + 9, 6, 6), Pa(l2 + 2, 6)], vec![c6, Pa(l3 + 2, 6), Pa(l2 + 1, 6)]),
        ),
        "sub3.1" => (
            (vec![Pab(a + l1 + 5, a, 6), Pa(b + l2 - 2, b)], vec![Pa(a + l1 - 2, a), c6, Pa(b + l2 - 3, b)]),
            (vec![Pab(a + l1 + 5, 6, 6), Pa(b + l2 - 2, 6)], vec![Pa(a + l1 - 2, 6), c6, Pa(b + l2 - 3, 6)]),
        ),
        "sub3.2" => (
            (vec![Pab(a + l1 + 5, a, 4), Pa(l2 + 2, 4)], vec![Pa(a + l1 - 2, a), Pa(6, 4), Pa(l2 + 1, 4)]),
            (vec![Pab(a + l1 + 5, 6, 6), Pa(l2 + 2, 6)], vec![Pa(a + l1 - 2, 6), c6, Pa(l2 + 1, 6)]),
        ),
        "sub4.1" | "sub4.2" | "sub4.3" | "sub4.4" => {
            let m = a + k + l1 + l3 - 3;
            let (gx, gy, hx, hy) = match sub {
                "sub4.1" => (Pa(7, 6), c6, Pa(7, 6), c6),
                "sub4.2" => (c6, P(5), c6, P(5)),
                "sub4.3" => (Pa(7, 4), Pa(6, 4), Pa(7, 6), c6),
                _ => (Pa(6, 4), Pa(5, 4), c6, P(5)),
            };
            (
                (vec![Pab(m, a, k), gx], vec![Pa(a + l1 - 2, a), Pa(k + l3 - 2, k), gy]),
                (vec![Pab(m, 6, 6), hx], vec![Pa(a + l1 - 2, 6), Pa(k + l3 - 2, 6), hy]),
            )
        }
        "sub5.1" => (
            (vec![Pab(13, 6, 6), Pa(l2 + 2, 4)], vec![c6, c6, Pa(l2 + 1, 4)]),
            (vec![Pab(13, 6, 6), Pa(l2 + 2, 6)], vec![c6, c6, Pa(l2 + 1, 6)]),
        ),
        "sub5.2" => (
            (vec![Pab(l2 + 9, 4, 4), c6], vec![P(5), Pa(6, 4), Pa(l2 + 2, 4)]),
            (vec![Pab(l2 + 9, 6, 6), c6], vec![P(5), c6, Pa(l2 + 2, 6)]),
        ),
        "sub5.3" => (
            (vec![Pab(13, 4, 4), Pa(l2 + 2, 4)], vec![Pa(6, 4), Pa(6, 4), Pa(l2 + 1, 4)]),
            (vec![Pab(13, 6, 6), Pa(l2 + 2, 6)], vec![c6, c6, Pa(l2 + 1, 6)]),
        ),
        "sub6.1" => (
            (vec![Pab(l2 + 9, 6, 4), Pa(l3 + 4, 6)], vec![c6, Pa(l2 + 2, 4), Pa(l3 + 3, 6)]),
            (vec![Pab(l2 + 9, 6, 6), Pa(l3 + 4, 6)], vec![c6, Pa(l2 + 2, 6), Pa(l3 + 3, 6)]),
        ),
        "sub6.2" => (
            (vec![Pab(l2 + 9, 6, 4), Pa(l3 + 2, 4)], vec![c6, Pa(l2 + 2, 4), Pa(l3 + 1, 4)]),
            (vec![Pab(l2 + 9, 6, 6), Pa(l3 + 2, 6)], vec![c6, Pa(l2 + 2, 6), Pa(l3 + 1, 6)]),
        ),
        "sub6.3" => (
            (vec![Pab(l2 + 9, 4, 4), Pa(l3 + 2, 4)], vec![Pa(6, 4), Pa(l2 + 2, 4), Pa(l3 + 1, 4)]),
            (vec![Pab(l2 + 9, 6, 6), Pa(l3 + 2, 6)], vec![c6, Pa(l2 + 2, 6), Pa(l3 + 1, 6)]),
        ),
        "sub7.1" => (
            (vec![Pab(a + l1 + l2 + 3, a, 6), c6], vec![Pa(a + l1 - 2, a), Pa(l2 + 4, 6), P(5)]),
            (vec![Pab(a + l1 + l2 + 3, 6, 6), c6], vec![Pa(a + l1 - 2, 6), Pa(l2 + 4, 6), P(5)]),
        ),
        "sub7.2" => (
            (vec![Pab(a + l1 + l2 + 1, a, 4), c6], vec![Pa(a + l1 - 2, a), Pa(l2 + 2, 4), P(5)]),
            (vec![Pab(a + l1 + l2 + 1, 6, 6), c6], vec![Pa(a + l1 - 2, 6), Pa(l2 + 2, 6), P(5)]),
        ),
        "sub7.3" => (
            (vec![Pab(a + l1 + l2 + 1, a, 4), Pa(6, 4)], vec![Pa(a + l1 - 2, a), Pa(l2 + 2, 4), P(5)]),
            (vec![Pab(a + l1 + l2 + 1, 6, 6), c6], vec![Pa(a + l1 - 2, 6), Pa(l2 + 2, 6), P(5)]),
        ),
        "sub8.1" => (
            (vec![Pab(14, 6, 4), c6], vec![c6, Pa(7, 4), P(5)]),
            (vec![Pab(14, 6, 6), c6], vec![c6, Pa(7, 6), P(5)]),
        ),
        "sub8.2" => (
            (vec![c6, Pab(14, 4, 4)], vec![P(5), Pa(6, 4), Pa(7, 4)]),
            (vec![c6, Pab(14, 6, 6)], vec![P(5), c6, Pa(7, 6)]),
        ),
        "sub8.3" => (
            (vec![Pab(13, 4, 4), Pa(7, 4)], vec![Pa(6, 4), Pa(6, 4), Pa(6, 4)]),
            (vec![Pab(13, 6, 6), Pa(7, 6)], vec![c6, c6, c6]),
        ),
        _ => return Vec::new(),
    };
    let mk = |side: &str, g: FamilySpec, (f1, f2): (Vec<Piece>, Vec<Piece>)| {
        Identity::new(
            format!("T3.4-{sub}/{side}"),
            vec![Term::graph(g)],
            vec![Term::new(0, f1), Term::new(1, f2)],
        )
    };
    let mut out = vec![mk("G", p.g, gl), mk("H", p.h, hl)];
    if sub == "sub7.3" {
        // The printed second term has `P_5` where deleting both ends of the
        // cut edge leaves `P_5^4`.
        let fixed = (
            vec![Pab(a + l1 + l2 + 1, a, 4), Pa(6, 4)],
            vec![Pa(a + l1 - 2, a), Pa(l2 + 2, 4), Pa(5, 4)],
        );
        out.push(mk("G-corrected", p.g, fixed));
    }
    out
}

/// Every `Θ_II` of the grid outside Γ2, compared with the hexagon star its
/// subcase prescribes (or with all hexagon stars where no map is given).
pub fn verify_theorem_3_4(grid: &Grid) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    let mut specs = BTreeSet::new();
    for &a in &grid.cycles {
        for &b in &grid.cycles {
            for &k in &grid.cycles {
                for &l1 in &grid.arms {
                    for &l2 in &grid.arms {
                        for &l3 in &grid.arms {
                            let n = a + b + k + l1 + l2 + l3 - 5;
                            if grid.contains_n(n) {
                                specs.insert(FamilySpec::ThetaII { n, a, b, k, l1, l2, l3 }.normalized());
                            }
                        }
                    }
                }
            }
        }
    }
    let mut pending = Vec::new();
    let mut mapped: Vec<(String, (String, Inst))> = Vec::new();
    for spec in specs {
        if gamma_classify(&spec)?.in_gamma2() {
            report.skip("T3.4: in Γ2");
            continue;
        }
        for o in spec.orientations() {
            let FamilySpec::ThetaII { n, a, b, k, l1, l2, l3 } = o else {
                unreachable!("orientations keep the family")
            };
            if !(a >= k && k >= b) {
                continue;
            }
            let [ni, a, b, k, l1, l2, l3] = [n, a, b, k, l1, l2, l3].map(|x| x as i64);
            match route(a, b, k, l1, l2, l3, ni) {
                Route::Map(sub, t) => match star(ni, [6, 6, 6], t) {
                    Some(h) => {
                        let claim = format!("T3.4-{sub}");
                        pending.push(Pending::one(claim.clone(), o, h, Expected::Le));
                        let inst = Inst { a, b, k, l1, l2, l3, t, g: o, h };
                        mapped.push((o.to_string(), (sub.to_string(), inst)));
                    }
                    None => pending.push(Pending {
                        claim: format!("T3.4-{sub}-exist"),
                        lhs: o,
                        rhs: Rhs::Any(hexagon_stars(n)),
                        expected: Expected::Le,
                        note: Some(format!("map gives l' = {t:?}, not a valid target")),
                    }),
                },
                Route::Exists(case) => pending.push(Pending {
                    claim: format!("T3.4-{case}-exist"),
                    lhs: o,
                    rhs: Rhs::Any(hexagon_stars(n)),
                    expected: Expected::Le,
                    note: None,
                }),
                Route::OutOfScope(case) => report.skip(format!("T3.4: {case} outside the n = 20 instances")),
            }
        }
    }
    let cache = BCache::default();
    report.claims = evaluate(pending, &cache)?;
    mapped.sort_by(|x, y| x.0.cmp(&y.0));
    sample_identities(&mapped, &cache, &mut report, |_, (sub, inst)| displays(sub, inst))?;
    report.finalize();
    Ok(report)
}

fn hex_star(n: usize, l1: usize, l2: usize, l3: usize) -> FamilySpec {
    FamilySpec::ThetaII { n, a: 6, b: 6, k: 6, l1, l2, l3 }
}

fn merge_identities(claim: &str, l: [i64; 3], g: FamilySpec, h: FamilySpec) -> Vec<Identity> {
    use Piece::{Cycle as C, Pa, Path as P};
    let [l1, l2, l3] = l;
    let c6 = C(6);
    match claim {
        "L3.5" => {
            let a = vec![Pa(l1 + 3, 6), Pa(l2 + 4, 6), Pa(l3 + 4, 6)];
            let b = vec![Pa(l1 + 3, 6), Pa(l2 + l3 + 2, 6), c6];
            let common = vec![Pa(l1 + 3, 6), Pa(l2 + 4, 6), c6, P(l3 - 2)];
            vec![
                Identity::new(
                    "L3.5-difference",
                    vec![Term::graph(g), Term::new(1, b.clone())],
                    vec![Term::graph(h), Term::new(1, a.clone())],
                ),
                Identity::new(
                    "L3.5-expand-G",
                    vec![Term::new(1, a)],
                    vec![Term::new(1, common.clone()), Term::new(2, vec![Pa(l1 + 3, 6), Pa(l2 + 4, 6), P(l3 - 3), P(5)])],
                ),
                Identity::new(
                    "L3.5-expand-H",
                    vec![Term::new(1, b)],
                    vec![Term::new(1, common), Term::new(2, vec![Pa(l1 + 3, 6), Pa(l2 + 3, 6), P(l3 - 3), c6])],
                ),
                Identity::new(
                    "L3.5-tail-left",
                    vec![Term::new(0, vec![Pa(l2 + 4, 6), P(5)])],
                    vec![
                        Term::new(0, vec![Pa(l2 + 3, 6), P(5), P(1)]),
                        Term::new(1, vec![Pa(l2 + 2, 6), P(4), P(1)]),
                        Term::new(2, vec![Pa(l2 + 1, 6), P(3), P(1)]),
                        Term::new(3, vec![c6, P(l2 - 6), P(3)]),
                        Term::new(4, vec![P(5), P(l2 - 7), P(3)]),
                    ],
                ),
                Identity::new(
                    "L3.5-tail-right",
                    vec![Term::new(0, vec![Pa(l2 + 3, 6), c6])],
                    vec![
                        Term::new(0, vec![Pa(l2 + 3, 6), P(6)]),
                        Term::new(1, vec![Pa(l2 + 2, 6), P(4), P(1)]),
                        Term::new(2, vec![Pa(l2 + 1, 6), P(3), P(1)]),
                        Term::new(3, vec![c6, P(l2 - 5), P(2)]),
                        Term::new(4, vec![P(5), P(l2 - 6), P(2)]),
                        Term::scaled(2, 3, vec![Pa(l2 + 3, 6)]),
                    ],
                ),
            ]
        }
        "L3.6" => {
            let a = vec![Pa(l1 + 4, 6), Pa(l2 + 4, 6), P(5)];
            let b = vec![Pa(l1 + l2 + 2, 6), c6, P(5)];
            let common = vec![Pa(l2 + 4, 6), c6, P(l1 - 2), P(5)];
            vec![
                Identity::new(
                    "L3.6-difference",
                    vec![Term::graph(g), Term::new(1, b.clone())],
                    vec![Term::graph(h), Term::new(1, a.clone())],
                ),
                Identity::new(
                    "L3.6-expand-G",
                    vec![Term::new(1, a)],
                    vec![Term::new(1, common.clone()), Term::new(2, vec![Pa(l2 + 4, 6), P(5), P(l1 - 3), P(5)])],
                ),
                Identity::new(
                    "L3.6-expand-H",
                    vec![Term::new(1, b)],
                    vec![Term::new(1, common), Term::new(2, vec![Pa(l2 + 3, 6), c6, P(l1 - 3), P(5)])],
                ),
            ]
        }
        _ => Vec::new(),
    }
}

/// Arm merging among hexagon stars: `(l1,l2,l3) → (l1, l2+l3-2, 2)` and
/// `(l1,l2,2) → (l1+l2-2, 2, 2)`, strict for non-isomorphic pairs.
pub fn verify_lemmas_3_5_3_6(n_range: (usize, usize)) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    let mut pending = Vec::new();
    let mut inst: Vec<(String, (&'static str, [i64; 3], FamilySpec, FamilySpec))> = Vec::new();
    for n in n_range.0..=n_range.1 {
        let Some(total) = (n + 5).checked_sub(18) else { continue };
        for l1 in 2..=total {
            for l2 in 2..=total {
                if l1 + l2 + 2 > total {
                    continue;
                }
                let l3 = total - l1 - l2;
                let g = hex_star(n, l1, l2, l3);
                let h = hex_star(n, l1, l2 + l3 - 2, 2);
                if are_isomorphic(&g.build()?, &h.build()?)? {
                    report.skip("L3.5: pair is isomorphic");
                } else {
                    pending.push(Pending::one("L3.5", g, h, Expected::Lt));
                    inst.push((g.to_string(), ("L3.5", [l1, l2, l3].map(|x| x as i64), g, h)));
                }
            }
            let l2 = total.saturating_sub(l1 + 2);
            if l2 >= 2 {
                let g = hex_star(n, l1, l2, 2);
                let h = hex_star(n, l1 + l2 - 2, 2, 2);
                if are_isomorphic(&g.build()?, &h.build()?)? {
                    report.skip("L3.6: pair is isomorphic");
                } else {
                    pending.push(Pending::one("L3.6", g, h, Expected::Lt));
                    inst.push((g.to_string(), ("L3.6", [l1 as i64, l2 as i64, 2], g, h)));
                }
            }
        }
    }
    let cache = BCache::default();
    report.claims = evaluate(pending, &cache)?;
    inst.sort_by(|x, y| x.0.cmp(&y.0));
    sample_identities(&inst, &cache, &mut report, |_, (claim, l, g, h)| merge_identities(claim, *l, *g, *h))?;
    report.finalize();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subcase_routes() {
        assert_eq!(route(8, 8, 8, 3, 4, 3, 26), Route::Map("sub1.1", [5, 6, 5]));
        assert_eq!(route(6, 4, 6, 2, 6, 3, 22), Route::Map("sub2.1", [2, 4, 3]));
        assert_eq!(route(4, 4, 4, 4, 5, 4, 20), Route::Map("sub8.3", [2, 3, 2]));
        assert_eq!(route(6, 6, 6, 2, 3, 2, 20), Route::Map("trivial", [2, 3, 2]));
        assert_eq!(route(6, 4, 4, 3, 6, 3, 20), Route::Exists("case3"));
    }

    #[test]
    fn mapped_targets_keep_the_order() {
        for a in [4i64, 6, 8, 10] {
            for b in [4i64, 6, 8, 10] {
                for k in [4i64, 6, 8, 10] {
                    if !(a >= k && k >= b) {
                        continue;
                    }
                    for l1 in 2..=8 {
                        for l2 in 2..=8 {
                            for l3 in 2..=8 {
                                let n = a + b + k + l1 + l2 + l3 - 5;
                                if let Route::Map(sub, t) = route(a, b, k, l1, l2, l3, n) {
                                    assert_eq!(t.iter().sum::<i64>() + 13, n, "{sub} {a},{b},{k};{l1},{l2},{l3}");
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn small_merge_range() {
        let r = verify_lemmas_3_5_3_6((22, 22)).unwrap();
        assert!(r.proved_failures().is_empty(), "{}", r.to_markdown());
        assert!(r.claims.iter().any(|c| c.claim == "L3.5" && c.lhs == "theta2:22:6,6,6:3,3,3"));
    }
}
