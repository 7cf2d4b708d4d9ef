//! Exact checks of b-coefficient expansions written as sums of shifted
//! b-sequences of disjoint unions.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::charpoly::bseq;
use crate::error::{Error, Result};
use crate::families::{cycle, p_n_a, p_n_ab, path, FamilySpec};
use crate::graph::Graph;
use crate::poly::BSeq;

/// One connected (or empty) building block. Sizes are signed so that a
/// display instantiated outside its range is detected instead of wrapping.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Piece {
    /// `P_n`; `P_0` is the empty graph.
    Path(i64),
    Cycle(i64),
    /// `P_n^a`: `C_a` with a pendant path, `n` vertices in total.
    Pa(i64, i64),
    /// `P_n^{a,b}`.
    Pab(i64, i64, i64),
    Spec(FamilySpec),
}

impl Piece {
    fn build(&self) -> Result<Graph> {
        let bad = || Error::BadParam(format!("piece {self} is outside its range"));
        let u = |x: i64| usize::try_from(x).map_err(|_| bad());
        match *self {
            Piece::Path(0) => Ok(Graph::empty(0)),
            Piece::Path(n) => path(u(n)?),
            Piece::Cycle(n) => cycle(u(n)?),
            Piece::Pa(n, a) => p_n_a(u(n)?, u(a)?),
            Piece::Pab(n, a, b) => p_n_ab(u(n)?, u(a)?, u(b)?),
            Piece::Spec(s) => s.build(),
        }
    }

    fn well_formed(&self) -> bool {
        match *self {
            Piece::Path(n) => n >= 0,
            Piece::Cycle(n) => n >= 3,
            Piece::Pa(n, a) => a >= 3 && n >= a,
            Piece::Pab(n, a, b) => a >= 3 && b >= 3 && n + 1 >= a + b,
            Piece::Spec(s) => s.build().is_ok(),
        }
    }
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Piece::Path(n) => write!(f, "P{n}"),
            Piece::Cycle(n) => write!(f, "C{n}"),
            Piece::Pa(n, a) => write!(f, "P{n}^{a}"),
            Piece::Pab(n, a, b) => write!(f, "P{n}^({a},{b})"),
            Piece::Spec(s) => write!(f, "[{s}]"),
        }
    }
}

/// `coeff · b_{2(i - shift)}(⋃ pieces)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: i64,
    pub shift: usize,
    pub pieces: Vec<Piece>,
}

impl Term {
    pub fn new(shift: usize, pieces: Vec<Piece>) -> Self {
        Term {
            coeff: 1,
            shift,
            pieces,
        }
    }

    pub fn scaled(coeff: i64, shift: usize, pieces: Vec<Piece>) -> Self {
        Term { coeff, shift, pieces }
    }

    pub fn graph(spec: FamilySpec) -> Self {
        Term::new(0, vec![Piece::Spec(spec)])
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff != 1 {
            write!(f, "{}·", self.coeff)?;
        }
        write!(f, "b[-{}](", self.shift)?;
        for (i, p) in self.pieces.iter().enumerate() {
            if i > 0 {
                f.write_str(" ∪ ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// `Σ lhs = Σ rhs` coefficientwise in `i`.
#[derive(Debug, Clone)]
pub struct Identity {
    pub id: String,
    pub lhs: Vec<Term>,
    pub rhs: Vec<Term>,
}

impl Identity {
    pub fn new(id: impl Into<String>, lhs: Vec<Term>, rhs: Vec<Term>) -> Self {
        Identity {
            id: id.into(),
            lhs,
            rhs,
        }
    }

    pub fn well_formed(&self) -> bool {
        self.lhs
            .iter()
            .chain(&self.rhs)
            .flat_map(|t| &t.pieces)
            .all(Piece::well_formed)
    }

    pub fn display(&self) -> String {
        let side = |ts: &[Term]| ts.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" + ");
        format!("{} = {}", side(&self.lhs), side(&self.rhs))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub id: String,
    pub instance: String,
    pub holds: bool,
    /// Indices `i` where both sides differ.
    pub residual_at: Vec<usize>,
    pub display: String,
}

/// Memoized b-sequences of pieces, shared across parallel workers.
#[derive(Default)]
pub struct BCache {
    map: Mutex<HashMap<Piece, Arc<BSeq>>>,
}

impl BCache {
    pub fn get(&self, p: &Piece) -> Result<Arc<BSeq>> {
        if let Some(b) = self.map.lock().expect("cache lock").get(p) {
            return Ok(b.clone());
        }
        let b = Arc::new(bseq(&p.build()?)?);
        self.map.lock().expect("cache lock").insert(*p, b.clone());
        Ok(b)
    }

    pub fn spec(&self, s: &FamilySpec) -> Result<Arc<BSeq>> {
        self.get(&Piece::Spec(*s))
    }

    fn union(&self, pieces: &[Piece]) -> Result<BSeq> {
        let mut acc = BSeq::new(0, vec![BigInt::from(1)]);
        for p in pieces {
            acc = acc.union(&*self.get(p)?);
        }
        Ok(acc)
    }

    fn side(&self, terms: &[Term]) -> Result<Vec<BigInt>> {
        let mut out: Vec<BigInt> = Vec::new();
        for t in terms {
            let b = self.union(&t.pieces)?;
            if out.len() < b.len() + t.shift {
                out.resize(b.len() + t.shift, BigInt::zero());
            }
            for (i, x) in b.b.iter().enumerate() {
                out[i + t.shift] += x * t.coeff;
            }
        }
        Ok(out)
    }

    /// Evaluates both sides exactly; errors only if a piece fails to build.
    pub fn check(&self, id: &Identity, instance: &str) -> Result<IdentityCheck> {
        let l = self.side(&id.lhs)?;
        let r = self.side(&id.rhs)?;
        let len = l.len().max(r.len());
        let zero = BigInt::zero();
        let residual_at: Vec<usize> = (0..len)
            .filter(|&i| l.get(i).unwrap_or(&zero) != r.get(i).unwrap_or(&zero))
            .collect();
        Ok(IdentityCheck {
            id: id.id.clone(),
            instance: instance.to_string(),
            holds: residual_at.is_empty(),
            residual_at,
            display: id.display(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pendant_edge_expansion() {
        // Cutting the edge between C_6 and its tail in P_9^6.
        let id = Identity::new(
            "t",
            vec![Term::new(0, vec![Piece::Pa(9, 6)])],
            vec![
                Term::new(0, vec![Piece::Cycle(6), Piece::Path(3)]),
                Term::new(1, vec![Piece::Path(5), Piece::Path(2)]),
            ],
        );
        assert!(id.well_formed());
        let c = BCache::default().check(&id, "x").unwrap();
        assert!(c.holds, "{c:?}");
    }

    #[test]
    fn cycle_edge_expansion_with_sign() {
        // b(C_6) = b(P_6) + b_{-1}(P_4) + 2 b_{-3}(∅)
        let id = Identity::new(
            "t",
            vec![Term::new(0, vec![Piece::Cycle(6)])],
            vec![
                Term::new(0, vec![Piece::Path(6)]),
                Term::new(1, vec![Piece::Path(4)]),
                Term::scaled(2, 3, vec![Piece::Path(0)]),
            ],
        );
        assert!(BCache::default().check(&id, "x").unwrap().holds);
        let wrong = Identity::new("w", id.lhs.clone(), id.rhs[..2].to_vec());
        let c = BCache::default().check(&wrong, "x").unwrap();
        assert_eq!(c.residual_at, vec![3]);
    }

    #[test]
    fn ill_formed_pieces() {
        assert!(!Piece::Pa(5, 6).well_formed());
        assert!(!Piece::Path(-1).well_formed());
        assert!(Piece::Pab(11, 6, 6).well_formed());
        assert!(!Piece::Pab(10, 6, 6).well_formed());
    }
}
