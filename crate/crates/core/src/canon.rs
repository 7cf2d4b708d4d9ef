//! Exact canonical labeling by partition refinement and individualization.
//!
//! The search explores the individualization tree, keeps the lexicographically
//! largest leaf certificate, and prunes children that lie in the same orbit of
//! the automorphisms found so far (seeded with transpositions of twin
//! vertices, which are always automorphisms).

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default order limit for canonicalization.
pub const DEFAULT_LIMIT: usize = 32;

/// Hard ceiling imposed by the 64-bit row representation.
pub const MAX_LIMIT: usize = 64;

/// Canonical byte string: equal for two graphs iff they are isomorphic.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    canonical_form_with_limit(g, DEFAULT_LIMIT)
}

pub fn canonical_form_with_limit(g: &Graph, limit: usize) -> Result<Vec<u8>> {
    let colors = vec![0u32; g.order()];
    Ok(Canonizer::run(g, &colors, limit)?.certificate_bytes(&colors))
}

/// Canonical form of a vertex-colored graph: isomorphisms must preserve colors.
pub fn canonical_form_colored(g: &Graph, colors: &[u32]) -> Result<Vec<u8>> {
    if colors.len() != g.order() {
        return Err(Error::BadParam(format!(
            "{} colors for {} vertices",
            colors.len(),
            g.order()
        )));
    }
    Ok(Canonizer::run(g, colors, MAX_LIMIT.min(DEFAULT_LIMIT.max(g.order())))?
        .certificate_bytes(colors))
}

/// `lab[v]` is the canonical position of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>> {
    let colors = vec![0u32; g.order()];
    Ok(Canonizer::run(g, &colors, DEFAULT_LIMIT)?.best_lab)
}

/// Vertex orbit representatives: `orbit[v]` is the smallest vertex known to
/// be equivalent to `v` under an automorphism preserving `colors`.
///
/// Orbits are built from the automorphisms discovered during the canonical
/// search, so they are never coarser than the true orbits.
pub fn vertex_orbits(g: &Graph, colors: &[u32]) -> Result<Vec<usize>> {
    if colors.len() != g.order() {
        return Err(Error::BadParam(format!(
            "{} colors for {} vertices",
            colors.len(),
            g.order()
        )));
    }
    let c = Canonizer::run(g, colors, MAX_LIMIT.min(DEFAULT_LIMIT.max(g.order())))?;
    let mut uf = UnionFind::new(g.order());
    for gen in &c.generators {
        for (v, &w) in gen.iter().enumerate() {
            uf.union(v, w);
        }
    }
    Ok((0..g.order()).map(|v| uf.min_of(v)).collect())
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.order() != h.order() || g.size() != h.size() {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

struct Canonizer {
    n: usize,
    adj: Vec<u64>,
    best_cert: Option<Vec<u64>>,
    best_lab: Vec<usize>,
    first_cert: Option<Vec<u64>>,
    first_lab: Vec<usize>,
    generators: Vec<Vec<usize>>,
}

impl Canonizer {
    fn run(g: &Graph, colors: &[u32], limit: usize) -> Result<Canonizer> {
        let n = g.order();
        let limit = limit.min(MAX_LIMIT);
        if n > limit {
            return Err(Error::TooLarge { order: n, limit });
        }
        let adj: Vec<u64> = (0..n)
            .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | (1 << w)))
            .collect();
        let mut c = Canonizer {
            n,
            adj,
            best_cert: None,
            best_lab: Vec::new(),
            first_cert: None,
            first_lab: Vec::new(),
            generators: Vec::new(),
        };
        c.seed_twin_generators(colors);

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (colors[v], v));
        let mut cells: Vec<Vec<usize>> = Vec::new();
        for v in order {
            match cells.last_mut() {
                Some(cell) if colors[cell[0]] == colors[v] => cell.push(v),
                _ => cells.push(vec![v]),
            }
        }
        let cells = c.refine(cells);
        let mut prefix = Vec::new();
        c.search(cells, &mut prefix);
        if n == 0 {
            c.best_lab = Vec::new();
            c.best_cert = Some(Vec::new());
        }
        Ok(c)
    }

    /// Transpositions of same-colored twins (equal neighborhoods up to each other).
    fn seed_twin_generators(&mut self, colors: &[u32]) {
        let n = self.n;
        for x in 0..n {
            for y in x + 1..n {
                if colors[x] != colors[y] {
                    continue;
                }
                let strip = (1u64 << x) | (1u64 << y);
                if self.adj[x] & !strip == self.adj[y] & !strip {
                    let mut perm: Vec<usize> = (0..n).collect();
                    perm.swap(x, y);
                    self.generators.push(perm);
                }
            }
        }
    }

    /// Equitable refinement. New cells are ordered by (old cell, neighbor-count
    /// vector), which depends only on isomorphism-invariant data.
    fn refine(&self, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        loop {
            let masks: Vec<u64> = cells
                .iter()
                .map(|c| c.iter().fold(0u64, |m, &v| m | (1 << v)))
                .collect();
            let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<u8>, usize)> = cell
                    .iter()
                    .map(|&v| {
                        let key = masks
                            .iter()
                            .map(|&m| (self.adj[v] & m).count_ones() as u8)
                            .collect();
                        (key, v)
                    })
                    .collect();
                keyed.sort();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
            }
            if next.len() == cells.len() {
                return next;
            }
            cells = next;
        }
    }

    fn search(&mut self, cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        if cells.len() == self.n {
            self.leaf(&cells);
            return;
        }
        let (target, _) = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .expect("non-discrete partition has a non-singleton cell");
        let candidates = cells[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &x in &candidates {
            if !explored.is_empty() && self.equivalent_to_explored(x, &explored, prefix) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend(cells[..target].iter().cloned());
            child.push(vec![x]);
            child.push(candidates.iter().copied().filter(|&y| y != x).collect());
            child.extend(cells[target + 1..].iter().cloned());
            let child = self.refine(child);
            prefix.push(x);
            self.search(child, prefix);
            prefix.pop();
            explored.push(x);
        }
    }

    fn equivalent_to_explored(&self, x: usize, explored: &[usize], prefix: &[usize]) -> bool {
        let mut uf = UnionFind::new(self.n);
        for gen in &self.generators {
            if prefix.iter().all(|&p| gen[p] == p) {
                for (v, &w) in gen.iter().enumerate() {
                    uf.union(v, w);
                }
            }
        }
        let rx = uf.find(x);
        explored.iter().any(|&e| uf.find(e) == rx)
    }

    fn leaf(&mut self, cells: &[Vec<usize>]) {
        let mut lab = vec![0usize; self.n];
        for (pos, cell) in cells.iter().enumerate() {
            lab[cell[0]] = pos;
        }
        let cert = self.certificate(&lab);
        match &self.first_cert {
            None => {
                self.first_cert = Some(cert.clone());
                self.first_lab = lab.clone();
            }
            Some(first) if *first == cert => {
                let aut = compose_to(&self.first_lab, &lab);
                self.generators.push(aut);
            }
            _ => {}
        }
        match &self.best_cert {
            None => {
                self.best_cert = Some(cert);
                self.best_lab = lab;
            }
            Some(best) => match cert.cmp(best) {
                std::cmp::Ordering::Greater => {
                    self.best_cert = Some(cert);
                    self.best_lab = lab;
                }
                std::cmp::Ordering::Equal => {
                    let aut = compose_to(&self.best_lab, &lab);
                    self.generators.push(aut);
                }
                std::cmp::Ordering::Less => {}
            },
        }
    }

    fn certificate(&self, lab: &[usize]) -> Vec<u64> {
        let mut rows = vec![0u64; self.n];
        for v in 0..self.n {
            let mut m = self.adj[v];
            let mut row = 0u64;
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                m &= m - 1;
                row |= 1 << lab[w];
            }
            rows[lab[v]] = row;
        }
        rows
    }

    /// Order as 4 bytes, the colors in canonical order, then the upper
    /// triangle of the canonically relabeled adjacency matrix packed into bits.
    fn certificate_bytes(&self, colors: &[u32]) -> Vec<u8> {
        let n = self.n;
        let rows = self.best_cert.as_ref().expect("search produced a leaf");
        let mut out = Vec::with_capacity(4 + (n * n) / 16 + 1);
        out.extend_from_slice(&(n as u32).to_be_bytes());
        if colors.iter().any(|&c| c != 0) {
            let mut by_pos = vec![0u32; n];
            for v in 0..n {
                by_pos[self.best_lab[v]] = colors[v];
            }
            for c in by_pos {
                out.extend_from_slice(&c.to_be_bytes());
            }
        }
        let mut byte = 0u8;
        let mut bits = 0;
        for i in 0..n {
            for j in i + 1..n {
                byte = (byte << 1) | ((rows[i] >> j) & 1) as u8;
                bits += 1;
                if bits == 8 {
                    out.push(byte);
                    byte = 0;
                    bits = 0;
                }
            }
        }
        if bits > 0 {
            out.push(byte << (8 - bits));
        }
        out
    }
}

/// The automorphism sending each vertex `v` to the vertex that `from_lab`
/// places where `to_lab` places `v`.
fn compose_to(from_lab: &[usize], to_lab: &[usize]) -> Vec<usize> {
    let mut inv = vec![0usize; from_lab.len()];
    for (v, &p) in from_lab.iter().enumerate() {
        inv[p] = v;
    }
    to_lab.iter().map(|&p| inv[p]).collect()
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    /// Roots are always the minimum of their class.
    fn min_of(&mut self, x: usize) -> usize {
        self.find(x)
    }
}
