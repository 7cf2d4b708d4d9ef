//! Named graph families, their compact string and JSON encodings, recognition
//! of tree-free tricyclic central structures, and the exceptional classes.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::canon;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A parameterized family member. Θ_I and Θ_II are the chain and star
/// shaped central structures on three vertex-disjoint cycles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Star { n: usize },
    Pna { n: usize, a: usize },
    Pnab { n: usize, a: usize, b: usize },
    Rab { a: usize, b: usize },
    #[serde(rename = "pn666")]
    Pn666 { n: usize },
    #[serde(rename = "theta_i")]
    ThetaI { n: usize, a: usize, b: usize, k: usize, l1: usize, l2: usize, lc: usize },
    #[serde(rename = "theta_ii")]
    ThetaII { n: usize, a: usize, b: usize, k: usize, l1: usize, l2: usize, l3: usize },
}

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::BadParam("path needs n >= 1".into()));
    }
    let mut b = Builder::default();
    b.chain("path", n);
    Ok(b.finish())
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::BadParam("cycle needs n >= 3".into()));
    }
    let mut b = Builder::default();
    b.ring("cycle", n);
    Ok(b.finish())
}

pub fn star(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::BadParam("star needs n >= 1".into()));
    }
    let mut b = Builder::default();
    let c = b.vertex("center".into());
    for i in 1..n {
        let leaf = b.vertex(format!("leaf:{i}"));
        b.edge(c, leaf);
    }
    Ok(b.finish())
}

/// Cycle `C_a` with a pendant path of `n - a` vertices hanging from one cycle vertex.
pub fn p_n_a(n: usize, a: usize) -> Result<Graph> {
    if a < 3 {
        return Err(Error::BadParam(format!("cycle length {a} < 3")));
    }
    if n < a {
        return Err(Error::BadParam(format!("n = {n} smaller than cycle length {a}")));
    }
    let mut b = Builder::default();
    let ring = b.ring("cycle-a", a);
    if n > a {
        let tail = b.chain("path", n - a);
        b.edge(ring[0], tail[0]);
    }
    Ok(b.finish())
}

/// Cycles `C_a` and `C_b` joined by a path of order `n - a - b + 2` whose end
/// vertices are identified with one vertex of each cycle.
pub fn p_n_ab(n: usize, a: usize, b: usize) -> Result<Graph> {
    if a < 3 || b < 3 {
        return Err(Error::BadParam(format!("cycle lengths {a}, {b} must be >= 3")));
    }
    if n + 1 < a + b {
        return Err(Error::BadParam(format!("n = {n} below a + b - 1 = {}", a + b - 1)));
    }
    let mut bl = Builder::default();
    let ra = bl.ring("cycle-a", a);
    let end = bl.bridge("path", ra[0], n + 2 - a - b);
    let rb = bl.ring_at("cycle-b", b, end);
    debug_assert_eq!(rb[0], end);
    Ok(bl.finish())
}

/// Cycles `C_a` and `C_b` joined by a single edge.
pub fn r_ab(a: usize, b: usize) -> Result<Graph> {
    if a < 3 || b < 3 {
        return Err(Error::BadParam(format!("cycle lengths {a}, {b} must be >= 3")));
    }
    let mut bl = Builder::default();
    let ra = bl.ring("cycle-a", a);
    let rb = bl.ring("cycle-b", b);
    bl.edge(ra[0], rb[0]);
    Ok(bl.finish())
}

/// The constraint under which the two-cycle comparison with `R_{a,b}` is stated:
/// `a, b >= 10` and both congruent to 2 mod 4.
pub fn r_ab_in_comparison_range(a: usize, b: usize) -> bool {
    a >= 10 && b >= 10 && a % 4 == 2 && b % 4 == 2
}

/// Three hexagons and a path `P_{n-18}`: two hexagons hang by an edge from
/// one path end, the third from the other end.
pub fn p_n_666(n: usize) -> Result<Graph> {
    if n < 20 {
        return Err(Error::BadParam(format!("P_n^(6,6,6) needs n >= 20, got {n}")));
    }
    let mut b = Builder::default();
    let h1 = b.ring("cycle-a", 6);
    let h2 = b.ring("cycle-b", 6);
    let h3 = b.ring("cycle-k", 6);
    let p = b.chain("path", n - 18);
    b.edge(p[0], h2[0]);
    b.edge(p[0], h3[0]);
    b.edge(p[p.len() - 1], h1[0]);
    Ok(b.finish())
}

fn check_cycle(name: &str, len: usize) -> Result<()> {
    if len < 4 || len % 2 != 0 {
        return Err(Error::BadParam(format!(
            "cycle {name} = {len} must be even and >= 4"
        )));
    }
    Ok(())
}

fn check_arm(name: &str, l: usize) -> Result<()> {
    if l < 2 {
        return Err(Error::BadParam(format!("path {name} = {l} must be >= 2")));
    }
    Ok(())
}

/// Chain form: `C_a` joined to `C_b` by a path of `l1` vertices, `C_k` joined
/// to `C_b` by a path of `l2` vertices, the two attachment points on `C_b`
/// cutting off a smaller arc of `lc` vertices.
pub fn theta_i(n: usize, a: usize, b: usize, k: usize, l1: usize, l2: usize, lc: usize) -> Result<Graph> {
    check_cycle("a", a)?;
    check_cycle("b", b)?;
    check_cycle("k", k)?;
    check_arm("l1", l1)?;
    check_arm("l2", l2)?;
    if lc < 1 || lc > b / 2 + 1 {
        return Err(Error::BadParam(format!(
            "lc = {lc} outside 1..={} for b = {b}",
            b / 2 + 1
        )));
    }
    let expected = (a + b + k + l1 + l2) as i64 - 4;
    if expected != n as i64 {
        return Err(Error::CountMismatch { expected, given: n });
    }
    let mut bl = Builder::default();
    let ra = bl.ring("cycle-a", a);
    let u2 = bl.bridge("path1", ra[0], l1);
    let rb = bl.ring_at("cycle-b", b, u2);
    let v1 = bl.bridge("path2", rb[lc - 1], l2);
    bl.ring_at("cycle-k", k, v1);
    let g = bl.finish();
    debug_assert_eq!(g.order(), n);
    Ok(g)
}

/// Star form: cycles `C_a`, `C_b`, `C_k` each joined to a common center by
/// paths of `l1`, `l2`, `l3` vertices (counting the cycle vertex and the center).
pub fn theta_ii(n: usize, a: usize, b: usize, k: usize, l1: usize, l2: usize, l3: usize) -> Result<Graph> {
    check_cycle("a", a)?;
    check_cycle("b", b)?;
    check_cycle("k", k)?;
    check_arm("l1", l1)?;
    check_arm("l2", l2)?;
    check_arm("l3", l3)?;
    let expected = (a + b + k + l1 + l2 + l3) as i64 - 5;
    if expected != n as i64 {
        return Err(Error::CountMismatch { expected, given: n });
    }
    let mut bl = Builder::default();
    let center = bl.vertex("center".into());
    for (name, pname, len, l) in [
        ("cycle-a", "path1", a, l1),
        ("cycle-b", "path2", b, l2),
        ("cycle-k", "path3", k, l3),
    ] {
        let end = bl.bridge(pname, center, l);
        bl.ring_at(name, len, end);
    }
    let g = bl.finish();
    debug_assert_eq!(g.order(), n);
    Ok(g)
}

#[derive(Default)]
struct Builder {
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn vertex(&mut self, label: String) -> usize {
        self.labels.push(label);
        self.labels.len() - 1
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    fn chain(&mut self, name: &str, len: usize) -> Vec<usize> {
        let vs: Vec<usize> = (0..len).map(|i| self.vertex(format!("{name}:{i}"))).collect();
        for w in vs.windows(2) {
            self.edge(w[0], w[1]);
        }
        vs
    }

    fn ring(&mut self, name: &str, len: usize) -> Vec<usize> {
        let vs = self.chain(name, len);
        self.edge(vs[len - 1], vs[0]);
        vs
    }

    /// A cycle through the existing vertex `at`, which becomes its vertex 0.
    fn ring_at(&mut self, name: &str, len: usize, at: usize) -> Vec<usize> {
        let mut vs = vec![at];
        for i in 1..len {
            let v = self.vertex(format!("{name}:{i}"));
            self.edge(vs[i - 1], v);
            vs.push(v);
        }
        self.edge(vs[len - 1], at);
        vs
    }

    /// A path of `len` vertices starting at existing vertex `from`; returns the far end.
    fn bridge(&mut self, name: &str, from: usize, len: usize) -> usize {
        let mut prev = from;
        for i in 1..len {
            let v = self.vertex(format!("{name}:{i}"));
            self.edge(prev, v);
            prev = v;
        }
        prev
    }

    fn finish(self) -> Graph {
        let mut g = Graph::from_edges(self.labels.len(), &self.edges)
            .expect("family builders emit simple graphs");
        for (v, l) in self.labels.into_iter().enumerate() {
            g.set_label(v, l);
        }
        g
    }
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        use FamilySpec::*;
        match *self {
            Path { n } => path(n),
            Cycle { n } => cycle(n),
            Star { n } => star(n),
            Pna { n, a } => p_n_a(n, a),
            Pnab { n, a, b } => p_n_ab(n, a, b),
            Rab { a, b } => r_ab(a, b),
            Pn666 { n } => p_n_666(n),
            ThetaI { n, a, b, k, l1, l2, lc } => theta_i(n, a, b, k, l1, l2, lc),
            ThetaII { n, a, b, k, l1, l2, l3 } => theta_ii(n, a, b, k, l1, l2, l3),
        }
    }

    pub fn order(&self) -> usize {
        use FamilySpec::*;
        match *self {
            Path { n } | Cycle { n } | Star { n } | Pna { n, .. } | Pnab { n, .. } => n,
            Pn666 { n } | ThetaI { n, .. } | ThetaII { n, .. } => n,
            Rab { a, b } => a + b,
        }
    }

    pub fn kind_name(&self) -> &'static str {
        use FamilySpec::*;
        match self {
            Path { .. } => "path",
            Cycle { .. } => "cycle",
            Star { .. } => "star",
            Pna { .. } => "pna",
            Pnab { .. } => "pnab",
            Rab { .. } => "rab",
            Pn666 { .. } => "p666",
            ThetaI { .. } => "theta1",
            ThetaII { .. } => "theta2",
        }
    }

    pub fn is_central(&self) -> bool {
        matches!(self, FamilySpec::ThetaI { .. } | FamilySpec::ThetaII { .. })
    }

    /// Every relabeling of the same structure: Θ_I may swap its two end arms,
    /// Θ_II may permute its three arms. Other families have one orientation.
    pub fn orientations(&self) -> Vec<FamilySpec> {
        match *self {
            FamilySpec::ThetaI { n, a, b, k, l1, l2, lc } => {
                let mut v = vec![*self];
                let swapped = FamilySpec::ThetaI { n, a: k, b, k: a, l1: l2, l2: l1, lc };
                if swapped != *self {
                    v.push(swapped);
                }
                v
            }
            FamilySpec::ThetaII { n, a, b, k, l1, l2, l3 } => {
                let arms = [(a, l1), (b, l2), (k, l3)];
                let mut v = Vec::new();
                for p in PERMUTATIONS_3 {
                    let s = FamilySpec::ThetaII {
                        n,
                        a: arms[p[0]].0,
                        l1: arms[p[0]].1,
                        b: arms[p[1]].0,
                        l2: arms[p[1]].1,
                        k: arms[p[2]].0,
                        l3: arms[p[2]].1,
                    };
                    if !v.contains(&s) {
                        v.push(s);
                    }
                }
                v
            }
            _ => vec![*self],
        }
    }

    /// Representative orientation: the largest in the derived ordering.
    pub fn normalized(&self) -> FamilySpec {
        self.orientations().into_iter().max().expect("at least one orientation")
    }

    /// Cycle-length class `(type, cycle lengths)` used to group central
    /// structures: Θ_I keeps its middle cycle distinguished.
    pub fn cycle_class(&self) -> Option<CycleClass> {
        match *self {
            FamilySpec::ThetaI { a, b, k, .. } => Some(CycleClass::Chain {
                middle: b,
                ends: (a.max(k), a.min(k)),
            }),
            FamilySpec::ThetaII { a, b, k, .. } => {
                let mut c = [a, b, k];
                c.sort_unstable_by(|x, y| y.cmp(x));
                Some(CycleClass::Star { cycles: c })
            }
            _ => None,
        }
    }
}

const PERMUTATIONS_3: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CycleClass {
    Chain { middle: usize, ends: (usize, usize) },
    Star { cycles: [usize; 3] },
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match *self {
            Path { n } => write!(f, "path:{n}"),
            Cycle { n } => write!(f, "cycle:{n}"),
            Star { n } => write!(f, "star:{n}"),
            Pna { n, a } => write!(f, "pna:{n}:{a}"),
            Pnab { n, a, b } => write!(f, "pnab:{n}:{a},{b}"),
            Rab { a, b } => write!(f, "rab:{}:{a},{b}", a + b),
            Pn666 { n } => write!(f, "p666:{n}"),
            ThetaI { n, a, b, k, l1, l2, lc } => write!(f, "theta1:{n}:{a},{b},{k}:{l1},{l2}:{lc}"),
            ThetaII { n, a, b, k, l1, l2, l3 } => write!(f, "theta2:{n}:{a},{b},{k}:{l1},{l2},{l3}"),
        }
    }
}

/// Parses `kind ":" n { ":" list }` where each list is comma-separated
/// decimal integers. The field shapes per kind are fixed; see the README.
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilySpec> {
        let mut fields: Vec<(usize, &str)> = Vec::new();
        let mut start = 0;
        for (i, ch) in s.char_indices() {
            if ch == ':' {
                fields.push((start, &s[start..i]));
                start = i + 1;
            }
        }
        fields.push((start, &s[start..]));
        let (kpos, kind) = fields[0];
        // Expected list lengths after the kind field, n included.
        let shape: &[usize] = match kind {
            "path" | "cycle" | "star" | "p666" => &[1],
            "pna" => &[1, 1],
            "pnab" | "rab" => &[1, 2],
            "theta1" => &[1, 3, 2, 1],
            "theta2" => &[1, 3, 3],
            _ => return Err(Error::parse(kpos, format!("unknown family kind {kind:?}"))),
        };
        if fields.len() - 1 != shape.len() {
            return Err(Error::parse(
                s.len(),
                format!(
                    "{kind} expects {} ':'-separated fields after the kind, found {}",
                    shape.len(),
                    fields.len() - 1
                ),
            ));
        }
        let mut vals: Vec<usize> = Vec::new();
        for (&(pos, text), &want) in fields[1..].iter().zip(shape) {
            let parts: Vec<&str> = text.split(',').collect();
            if parts.len() != want {
                return Err(Error::parse(
                    pos,
                    format!("expected {want} comma-separated integers, found {:?}", text),
                ));
            }
            let mut off = pos;
            for p in parts {
                if p.is_empty() || !p.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(Error::parse(off, format!("not a non-negative integer: {p:?}")));
                }
                let v: usize = p
                    .parse()
                    .map_err(|_| Error::parse(off, format!("integer out of range: {p:?}")))?;
                vals.push(v);
                off += p.len() + 1;
            }
        }
        use FamilySpec::*;
        let spec = match kind {
            "path" => Path { n: vals[0] },
            "cycle" => Cycle { n: vals[0] },
            "star" => Star { n: vals[0] },
            "p666" => Pn666 { n: vals[0] },
            "pna" => Pna { n: vals[0], a: vals[1] },
            "pnab" => Pnab { n: vals[0], a: vals[1], b: vals[2] },
            "rab" => {
                if vals[0] != vals[1] + vals[2] {
                    return Err(Error::CountMismatch {
                        expected: (vals[1] + vals[2]) as i64,
                        given: vals[0],
                    });
                }
                Rab { a: vals[1], b: vals[2] }
            }
            "theta1" => ThetaI {
                n: vals[0],
                a: vals[1],
                b: vals[2],
                k: vals[3],
                l1: vals[4],
                l2: vals[5],
                lc: vals[6],
            },
            "theta2" => ThetaII {
                n: vals[0],
                a: vals[1],
                b: vals[2],
                k: vals[3],
                l1: vals[4],
                l2: vals[5],
                l3: vals[6],
            },
            _ => unreachable!("kind checked above"),
        };
        Ok(spec)
    }
}

/// Parses and builds in one step, so parameter errors surface alongside
/// syntax errors.
pub fn build_spec(s: &str) -> Result<(FamilySpec, Graph)> {
    let spec: FamilySpec = s.parse()?;
    let g = spec.build()?;
    Ok((spec, g))
}

/// Identifies a tree-free tricyclic graph with three vertex-disjoint cycles
/// as a Θ_I or Θ_II member, returning its normalized parameters. The result
/// is confirmed by rebuilding the spec and testing isomorphism.
pub fn recognize(g: &Graph) -> Result<FamilySpec> {
    let fail = |why: &str| Err(Error::NotCentralStructure(why.to_string()));
    if !g.is_connected() {
        return fail("graph is disconnected");
    }
    if g.cyclomatic_number() != 3 {
        return fail("cyclomatic number is not 3");
    }
    let n = g.order();
    if (0..n).any(|v| g.degree(v) < 2) {
        return fail("graph has planted trees");
    }
    let cycles = g.all_cycles();
    if cycles.len() != 3 {
        return fail("cycles are not vertex-disjoint");
    }
    let mut on_cycle = vec![usize::MAX; n];
    for (ci, c) in cycles.iter().enumerate() {
        for &v in c {
            if on_cycle[v] != usize::MAX {
                return fail("cycles are not vertex-disjoint");
            }
            on_cycle[v] = ci;
        }
    }
    let lens: Vec<usize> = cycles.lengths();
    // Walks from `start` through `first` along degree-2 non-cycle vertices;
    // returns the stopping vertex and the number of vertices visited.
    let walk = |start: usize, first: usize| -> (usize, usize) {
        let (mut prev, mut cur, mut count) = (start, first, 2);
        while on_cycle[cur] == usize::MAX && g.degree(cur) == 2 {
            let next = g.neighbors(cur).iter().copied().find(|&w| w != prev).unwrap();
            prev = cur;
            cur = next;
            count += 1;
        }
        (cur, count)
    };
    let hubs: Vec<usize> = (0..n)
        .filter(|&v| on_cycle[v] == usize::MAX && g.degree(v) >= 3)
        .collect();
    let spec = match hubs.as_slice() {
        [c] if g.degree(*c) == 3 => {
            let mut arms = Vec::new();
            for &w in g.neighbors(*c) {
                let (end, count) = walk(*c, w);
                if on_cycle[end] == usize::MAX {
                    return fail("path from the center does not reach a cycle");
                }
                arms.push((lens[on_cycle[end]], count, on_cycle[end]));
            }
            let mut seen: Vec<usize> = arms.iter().map(|x| x.2).collect();
            seen.sort_unstable();
            seen.dedup();
            if seen.len() != 3 {
                return fail("two center paths reach the same cycle");
            }
            FamilySpec::ThetaII {
                n,
                a: arms[0].0,
                l1: arms[0].1,
                b: arms[1].0,
                l2: arms[1].1,
                k: arms[2].0,
                l3: arms[2].1,
            }
        }
        [] => {
            // Chain: each end cycle has one vertex of degree 3.
            let extra = |ci: usize| -> usize {
                cycles.cycles[ci].iter().map(|&v| g.degree(v) - 2).sum()
            };
            let ends: Vec<usize> = (0..3).filter(|&ci| extra(ci) == 1).collect();
            let mids: Vec<usize> = (0..3).filter(|&ci| extra(ci) == 2).collect();
            if ends.len() != 2 || mids.len() != 1 {
                return fail("cycles are not arranged in a chain");
            }
            let mid = mids[0];
            let mut arms = Vec::new();
            for &ci in &ends {
                let att = *cycles.cycles[ci]
                    .iter()
                    .find(|&&v| g.degree(v) == 3)
                    .unwrap();
                let out = *g
                    .neighbors(att)
                    .iter()
                    .find(|&&w| on_cycle[w] != ci)
                    .unwrap();
                let (end, count) = if on_cycle[out] == mid {
                    (out, 2)
                } else {
                    walk(att, out)
                };
                if on_cycle[end] != mid {
                    return fail("end cycle is not joined to the middle cycle");
                }
                let pos = cycles.cycles[mid].iter().position(|&v| v == end).unwrap();
                arms.push((lens[ci], count, pos));
            }
            let b = lens[mid];
            let d = arms[0].2.abs_diff(arms[1].2);
            let lc = d.min(b - d) + 1;
            FamilySpec::ThetaI {
                n,
                a: arms[0].0,
                l1: arms[0].1,
                b,
                k: arms[1].0,
                l2: arms[1].1,
                lc,
            }
        }
        _ => return fail("more than one branching vertex off the cycles"),
    };
    let built = spec.build().map_err(|e| Error::NotCentralStructure(e.to_string()))?;
    if !canon::are_isomorphic(&built, g)? {
        return fail("measured parameters do not rebuild the graph");
    }
    Ok(spec.normalized())
}

/// The nine exceptional parameter forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GammaForm {
    Gamma1I,
    Gamma1II,
    Gamma1III,
    Gamma1IV,
    Gamma2I,
    Gamma2II,
    Gamma2III,
    Gamma2IV,
    Gamma2V,
}

impl fmt::Display for GammaForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GammaForm::Gamma1I => "Gamma1(i)",
            GammaForm::Gamma1II => "Gamma1(ii)",
            GammaForm::Gamma1III => "Gamma1(iii)",
            GammaForm::Gamma1IV => "Gamma1(iv)",
            GammaForm::Gamma2I => "Gamma2(i)",
            GammaForm::Gamma2II => "Gamma2(ii)",
            GammaForm::Gamma2III => "Gamma2(iii)",
            GammaForm::Gamma2IV => "Gamma2(iv)",
            GammaForm::Gamma2V => "Gamma2(v)",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaMatch {
    pub form: GammaForm,
    /// The orientation of the parameters in which the form's constraints hold.
    pub witness: FamilySpec,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct GammaClass {
    pub matches: Vec<GammaMatch>,
}

impl GammaClass {
    pub fn is_none(&self) -> bool {
        self.matches.is_empty()
    }

    pub fn forms(&self) -> Vec<GammaForm> {
        self.matches.iter().map(|m| m.form).collect()
    }

    pub fn contains(&self, form: GammaForm) -> bool {
        self.matches.iter().any(|m| m.form == form)
    }

    pub fn in_gamma1(&self) -> bool {
        self.matches.iter().any(|m| m.form <= GammaForm::Gamma1IV)
    }

    pub fn in_gamma2(&self) -> bool {
        self.matches.iter().any(|m| m.form >= GammaForm::Gamma2I)
    }
}

fn gamma_forms_oriented(spec: &FamilySpec) -> Vec<GammaForm> {
    let two_three = |l: usize| (2..=3).contains(&l);
    let mut out = Vec::new();
    match *spec {
        FamilySpec::ThetaI { a, b, k, l1, l2, lc, .. } => {
            if lc != 2 {
                return out;
            }
            if b == 4 && a >= 8 && k >= 8 && two_three(l1) && two_three(l2) {
                out.push(GammaForm::Gamma1I);
            }
            if a >= 8 && b >= 6 && k >= 8 && two_three(l1) && two_three(l2) && !(l1 == 3 && l2 == 3) {
                out.push(GammaForm::Gamma1II);
            }
            if a == 4 && b >= 6 && k >= 6 && two_three(l1) && two_three(l2) {
                out.push(GammaForm::Gamma1III);
            }
            if k == 4 && two_three(l2) {
                out.push(GammaForm::Gamma1IV);
            }
        }
        FamilySpec::ThetaII { a, b, k, l1, l2, l3, .. } => {
            if l1 == 2 && a >= 8 {
                out.push(GammaForm::Gamma2I);
            }
            if (l1, l2, l3) == (3, 3, 3) && a >= k && k >= b && b >= 8 {
                out.push(GammaForm::Gamma2II);
            }
            if b == 4 && l2 == 3 {
                out.push(GammaForm::Gamma2III);
            }
            if b == 4 && l2 == 2 {
                out.push(GammaForm::Gamma2IV);
            }
            if b == 4 && (l1, l2, l3) == (3, 4, 3) && a >= k && k >= 6 {
                out.push(GammaForm::Gamma2V);
            }
        }
        _ => {}
    }
    out
}

/// All exceptional forms matched by some orientation of the parameters, each
/// with the first orientation (in `orientations` order) that witnesses it.
pub fn gamma_classify(spec: &FamilySpec) -> Result<GammaClass> {
    if !spec.is_central() {
        return Err(Error::NotCentralStructure(format!(
            "{spec} is not a chain or star central structure"
        )));
    }
    let mut class = GammaClass::default();
    for o in spec.orientations() {
        for form in gamma_forms_oriented(&o) {
            if !class.contains(form) {
                class.matches.push(GammaMatch { form, witness: o });
            }
        }
    }
    class.matches.sort_by_key(|m| m.form);
    Ok(class)
}

/// Recognizes a raw graph, then classifies its parameters.
pub fn gamma_classify_graph(g: &Graph) -> Result<GammaClass> {
    gamma_classify(&recognize(g)?)
}
