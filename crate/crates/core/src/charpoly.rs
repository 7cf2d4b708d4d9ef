//! Characteristic polynomials by three independent routes: the trace
//! recurrence on the adjacency matrix, edge-deletion recursion, and Sachs
//! figure enumeration for b-coefficients.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::canon;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{BSeq, IntPoly};

pub const ORACLE_LIMIT: usize = 64;
/// Subgraphs above this order are not memoized in the recursion.
pub const MEMO_LIMIT: usize = 24;
pub const SACHS_LIMIT: usize = 20;

/// `det(λI - A)` by the Faddeev–LeVerrier recurrence over exact integers:
/// `M_1 = I`, `a_k = -tr(A M_k) / k`, `M_{k+1} = A M_k + a_k I`. Every
/// division is exact.
pub fn charpoly_oracle(g: &Graph) -> Result<IntPoly> {
    let n = g.order();
    if n > ORACLE_LIMIT {
        return Err(Error::TooLarge {
            order: n,
            limit: ORACLE_LIMIT,
        });
    }
    let mut a = vec![BigInt::zero(); n + 1];
    a[0] = BigInt::from(1);
    if n == 0 {
        return Ok(IntPoly::new(a));
    }
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let mut row = vec![BigInt::zero(); n];
            row[i] = BigInt::from(1);
            row
        })
        .collect();
    for k in 1..=n {
        // A·M: row i is the sum of the rows of M indexed by neighbors of i.
        let am: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                let mut row = vec![BigInt::zero(); n];
                for &w in g.neighbors(i) {
                    for (r, x) in row.iter_mut().zip(&m[w]) {
                        if !x.is_zero() {
                            *r += x;
                        }
                    }
                }
                row
            })
            .collect();
        let trace: BigInt = (0..n).map(|i| &am[i][i]).sum();
        let ak = -trace / BigInt::from(k);
        if k < n {
            m = am;
            for (i, row) in m.iter_mut().enumerate() {
                row[i] += &ak;
            }
        }
        a[k] = ak;
    }
    Ok(IntPoly::new(a))
}

fn memo() -> &'static Mutex<HashMap<Vec<u8>, IntPoly>> {
    static MEMO: OnceLock<Mutex<HashMap<Vec<u8>, IntPoly>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The edge-deletion recursion:
/// `φ(G) = φ(G-uv) - φ(G-u-v) - 2 Σ_{C ∋ uv} φ(G-C)`, with the pendant form
/// `φ(G) = λ φ(G-v) - φ(G-u-v)` whenever `v` has degree 1. Components are
/// multiplied, pendant edges are taken first, otherwise an edge on a shortest
/// cycle. Connected subgraphs up to `MEMO_LIMIT` vertices are memoized by
/// canonical form in a process-wide table; results never depend on it.
pub fn charpoly_recursive(g: &Graph) -> IntPoly {
    recurse(&g.without_labels())
}

fn recurse(g: &Graph) -> IntPoly {
    let n = g.order();
    if n == 0 {
        return IntPoly::one();
    }
    if g.size() == 0 {
        return IntPoly::monomial(n);
    }
    let comps = g.components();
    if comps.len() > 1 {
        let mut acc = IntPoly::one();
        for c in comps {
            let others: Vec<usize> = (0..n).filter(|v| c.binary_search(v).is_err()).collect();
            let sub = g.delete_vertices(&others).expect("component vertices are valid");
            acc = acc.mul(&recurse(&sub));
        }
        return acc;
    }
    let key = if n <= MEMO_LIMIT {
        let k = canon::canonical_form(g).expect("order within canonical limit");
        if let Some(p) = memo().lock().unwrap().get(&k) {
            return p.clone();
        }
        Some(k)
    } else {
        None
    };
    let p = expand(g);
    if let Some(k) = key {
        memo().lock().unwrap().insert(k, p.clone());
    }
    p
}

fn expand(g: &Graph) -> IntPoly {
    let n = g.order();
    if let Some(v) = (0..n).find(|&v| g.degree(v) == 1) {
        let u = g.neighbors(v)[0];
        let mut p = recurse(&g.delete_vertices(&[v]).unwrap()).times_lambda();
        p.add_scaled(&recurse(&g.delete_vertices(&[u, v]).unwrap()), -1);
        return p;
    }
    let cycle = g
        .shortest_cycle()
        .expect("connected graph without pendant vertices has a cycle");
    let (u, v) = (cycle[0], cycle[1]);
    let mut p = recurse(&g.delete_edge(u, v).unwrap());
    p.add_scaled(&recurse(&g.delete_vertices(&[u, v]).unwrap()), -1);
    for c in g.cycles_through_edge(u, v).unwrap().iter() {
        p.add_scaled(&recurse(&g.delete_vertices(c).unwrap()), -2);
    }
    p
}

/// `b_{2i} = (-1)^i a_{2i}`, after checking that odd coefficients vanish and
/// every `b_{2i}` is non-negative.
pub fn b_sequence(p: &IntPoly, bipartite_witness: bool) -> Result<BSeq> {
    if !bipartite_witness {
        return Err(Error::NotBipartitePolynomial(
            "source graph has no bipartition".into(),
        ));
    }
    let n = p.degree();
    for i in (1..=n).step_by(2) {
        if !p.a(i).is_zero() {
            return Err(Error::NotBipartitePolynomial(format!(
                "a_{i} = {} is nonzero",
                p.a(i)
            )));
        }
    }
    let mut b = Vec::with_capacity(n / 2 + 1);
    for i in 0..=n / 2 {
        let a = p.a(2 * i);
        let bi = if i % 2 == 0 { a } else { -a };
        if bi.is_negative() {
            return Err(Error::NotBipartitePolynomial(format!("b_{} = {bi} is negative", 2 * i)));
        }
        b.push(bi);
    }
    Ok(BSeq::new(n, b))
}

/// b-sequence of a bipartite graph, computed through the oracle polynomial.
pub fn bseq(g: &Graph) -> Result<BSeq> {
    if !g.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    b_sequence(&charpoly_oracle(g)?, true)
}

/// One application of the b-coefficient edge recursion at `uv`.
#[derive(Debug, Clone)]
pub struct BRecursionStep {
    pub minus_edge: Graph,
    pub minus_ends: Graph,
    /// `(G - C_l, l, (-1)^(1 + l/2))` for each cycle through `uv`.
    pub cycle_terms: Vec<(Graph, usize, i32)>,
    pub combined: BSeq,
}

/// `b_{2i}(G) = b_{2i}(G-uv) + b_{2i-2}(G-u-v) + 2 Σ (-1)^{1+l/2} b_{2i-l}(G-C_l)`.
pub fn b_recursion_step(g: &Graph, u: usize, v: usize) -> Result<BRecursionStep> {
    if !g.has_edge(u, v) {
        return Err(Error::MissingEdge(u, v));
    }
    if !g.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    let n = g.order();
    let minus_edge = g.delete_edge(u, v)?;
    let minus_ends = g.delete_vertices(&[u, v])?;
    let mut combined = vec![BigInt::zero(); n / 2 + 1];
    let b1 = bseq(&minus_edge)?;
    let b2 = bseq(&minus_ends)?;
    for (i, slot) in combined.iter_mut().enumerate() {
        *slot += b1.get(i);
        if i >= 1 {
            *slot += b2.get(i - 1);
        }
    }
    let mut cycle_terms = Vec::new();
    for c in g.cycles_through_edge(u, v)?.iter() {
        let l = c.len();
        let sign: i32 = if (1 + l / 2) % 2 == 0 { 1 } else { -1 };
        let rest = g.delete_vertices(c)?;
        let bc = bseq(&rest)?;
        for (i, slot) in combined.iter_mut().enumerate() {
            if 2 * i >= l {
                *slot += BigInt::from(2 * sign) * bc.get(i - l / 2);
            }
        }
        cycle_terms.push((rest, l, sign));
    }
    Ok(BRecursionStep {
        minus_edge,
        minus_ends,
        cycle_terms,
        combined: BSeq::new(n, combined),
    })
}

/// b-coefficients by Sachs figures: each choice of pairwise disjoint cycles
/// contributes `2^c Π (-1)^(1+l/2)` times the matching counts of the rest.
/// Only bipartite graphs are accepted (odd cycles would add odd `a_i`).
pub fn matching_count_oracle(g: &Graph) -> Result<BSeq> {
    let n = g.order();
    if n > SACHS_LIMIT {
        return Err(Error::TooLarge {
            order: n,
            limit: SACHS_LIMIT,
        });
    }
    if !g.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();
    let cycles: Vec<(u32, usize)> = g
        .all_cycles()
        .iter()
        .map(|c| (c.iter().fold(0u32, |m, &v| m | (1 << v)), c.len()))
        .collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut matchings = MatchingCounter {
        adj,
        memo: HashMap::new(),
    };
    let mut total = vec![BigInt::zero(); n / 2 + 1];
    // Depth-first over sets of disjoint cycles, tracking used vertices.
    let mut stack: Vec<(usize, u32, BigInt, usize)> = vec![(0, 0, BigInt::from(1), 0)];
    while let Some((next, used, weight, cyc_vertices)) = stack.pop() {
        let m = matchings.counts(full & !used);
        for (j, c) in m.iter().enumerate() {
            let idx = cyc_vertices / 2 + j;
            if idx < total.len() {
                total[idx] += &weight * BigInt::from(*c);
            }
        }
        for (ci, &(mask, l)) in cycles.iter().enumerate().skip(next) {
            if mask & used == 0 {
                let sign: i64 = if (1 + l / 2) % 2 == 0 { 2 } else { -2 };
                stack.push((ci + 1, used | mask, &weight * sign, cyc_vertices + l));
            }
        }
    }
    Ok(BSeq::new(n, total))
}

struct MatchingCounter {
    adj: Vec<u32>,
    memo: HashMap<u32, Vec<u64>>,
}

impl MatchingCounter {
    /// `counts[j]` = number of `j`-edge matchings inside `mask`.
    fn counts(&mut self, mask: u32) -> Vec<u64> {
        if mask == 0 {
            return vec![1];
        }
        if let Some(c) = self.memo.get(&mask) {
            return c.clone();
        }
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut out = self.counts(rest);
        let mut nb = self.adj[v] & rest;
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            let sub = self.counts(rest & !(1 << w));
            if out.len() < sub.len() + 1 {
                out.resize(sub.len() + 1, 0);
            }
            for (j, c) in sub.iter().enumerate() {
                out[j + 1] += c;
            }
        }
        self.memo.insert(mask, out.clone());
        out
    }
}
