//! Coefficientwise comparison of b-sequences and the standard ordering facts
//! about path forests and disjoint unions.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::charpoly::bseq;
use crate::error::{Error, Result};
use crate::families::path;
use crate::graph::Graph;
use crate::poly::BSeq;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Equal,
    StrictlyLess,
    StrictlyGreater,
    Incomparable,
}

impl Relation {
    /// `⪯`: equal or strictly less.
    pub fn is_le(self) -> bool {
        matches!(self, Relation::Equal | Relation::StrictlyLess)
    }

    pub fn reversed(self) -> Relation {
        match self {
            Relation::StrictlyLess => Relation::StrictlyGreater,
            Relation::StrictlyGreater => Relation::StrictlyLess,
            r => r,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Equal => "=",
            Relation::StrictlyLess => "≺",
            Relation::StrictlyGreater => "≻",
            Relation::Incomparable => "incomparable",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Relation::Equal => "equal",
            Relation::StrictlyLess => "strictly_less",
            Relation::StrictlyGreater => "strictly_greater",
            Relation::Incomparable => "incomparable",
        };
        f.write_str(s)
    }
}

/// A comparison outcome. `witness` lists the indices `i` (of `b_{2i}`) where
/// the sequences differ; for incomparable pairs `less_at` and `greater_at`
/// split them by direction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiOrd {
    pub relation: Relation,
    pub less_at: Vec<usize>,
    pub greater_at: Vec<usize>,
}

impl QuasiOrd {
    pub fn witness(&self) -> Vec<usize> {
        let mut w: Vec<usize> = self.less_at.iter().chain(&self.greater_at).copied().collect();
        w.sort_unstable();
        w
    }

    /// Smallest index where the sequences differ.
    pub fn first_witness(&self) -> Option<usize> {
        self.witness().first().copied()
    }
}

/// Compares two b-sequences of the same order, padding with zeros.
pub fn compare_bseq(b1: &BSeq, b2: &BSeq) -> Result<QuasiOrd> {
    if b1.n != b2.n {
        return Err(Error::OrderMismatch(b1.n, b2.n));
    }
    let len = b1.len().max(b2.len());
    let mut less_at = Vec::new();
    let mut greater_at = Vec::new();
    for i in 0..len {
        match b1.get(i).cmp(&b2.get(i)) {
            Ordering::Less => less_at.push(i),
            Ordering::Greater => greater_at.push(i),
            Ordering::Equal => {}
        }
    }
    let relation = match (less_at.is_empty(), greater_at.is_empty()) {
        (true, true) => Relation::Equal,
        (false, true) => Relation::StrictlyLess,
        (true, false) => Relation::StrictlyGreater,
        (false, false) => Relation::Incomparable,
    };
    Ok(QuasiOrd {
        relation,
        less_at,
        greater_at,
    })
}

/// Quasi-order comparison of two bipartite graphs of equal order.
pub fn compare(g1: &Graph, g2: &Graph) -> Result<QuasiOrd> {
    if g1.order() != g2.order() {
        return Err(Error::OrderMismatch(g1.order(), g2.order()));
    }
    compare_bseq(&bseq(g1)?, &bseq(g2)?)
}

/// `P_i ∪ P_{n-i}`; `i = 0` stands for `P_n` itself.
fn path_pair(n: usize, i: usize) -> Result<Graph> {
    if i == 0 {
        return path(n);
    }
    Ok(path(i)?.disjoint_union(&path(n - i)?))
}

#[derive(Debug, Clone, Serialize)]
pub struct ChainLink {
    pub left: (usize, usize),
    pub right: (usize, usize),
    pub relation: Relation,
    /// Both sides are the same forest (the chain lists a partition twice).
    pub duplicate: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct PathChainReport {
    pub n: usize,
    /// The chain members as `(i, n - i)`, with `(0, n)` meaning `P_n`.
    pub members: Vec<(usize, usize)>,
    pub links: Vec<ChainLink>,
}

impl PathChainReport {
    /// Every link between distinct forests is strictly decreasing and every
    /// repeated forest compares equal.
    pub fn holds(&self) -> bool {
        self.links.iter().all(|l| {
            if l.duplicate {
                l.relation == Relation::Equal
            } else {
                l.relation == Relation::StrictlyGreater
            }
        })
    }
}

/// The decreasing chain `P_n, P_2∪P_{n-2}, P_4∪P_{n-4}, …, P_{2k}∪P_{n-2k},
/// P_{2k+1}∪P_{n-2k-1}, P_{2k-1}∪P_{n-2k+1}, …, P_3∪P_{n-3}, P_1∪P_{n-1}`
/// with `k = ⌊n/4⌋`, compared link by link.
pub fn verify_path_chain(n: usize) -> Result<PathChainReport> {
    if n < 4 {
        return Err(Error::BadParam(format!("path chain needs n >= 4, got {n}")));
    }
    let k = n / 4;
    let mut members = vec![0usize];
    members.extend((1..=k).map(|j| 2 * j));
    members.push(2 * k + 1);
    members.extend((1..k).rev().map(|j| 2 * j + 1));
    members.push(1);
    members.dedup();
    let forests: Vec<Graph> = members
        .iter()
        .map(|&i| path_pair(n, i))
        .collect::<Result<_>>()?;
    let bs: Vec<BSeq> = forests.iter().map(bseq).collect::<Result<_>>()?;
    let mut links = Vec::new();
    for w in 0..members.len() - 1 {
        let (i, j) = (members[w], members[w + 1]);
        let key = |x: usize| if x == 0 { (0, n) } else { (x.min(n - x), x.max(n - x)) };
        links.push(ChainLink {
            left: (i, n - i),
            right: (j, n - j),
            relation: compare_bseq(&bs[w], &bs[w + 1])?.relation,
            duplicate: key(i) == key(j),
        });
    }
    Ok(PathChainReport {
        n,
        members: members.iter().map(|&i| (i, n - i)).collect(),
        links,
    })
}

/// `G1 ⪯ G2 ⇒ G0 ∪ G1 ⪯ G0 ∪ G2`. Returns whether the conclusion holds;
/// a `false` here means the comparator is broken.
pub fn union_monotonicity_check(g0: &Graph, g1: &Graph, g2: &Graph) -> Result<bool> {
    let pre = compare(g1, g2)?;
    if !pre.relation.is_le() {
        return Err(Error::Precondition(format!(
            "G1 ⪯ G2 does not hold ({})",
            pre.relation
        )));
    }
    Ok(compare(&g0.disjoint_union(g1), &g0.disjoint_union(g2))?
        .relation
        .is_le())
}

/// One line of the CSV batch output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareRow {
    pub spec1: String,
    pub spec2: String,
    pub relation: Relation,
    pub first_witness_index: Option<usize>,
}
