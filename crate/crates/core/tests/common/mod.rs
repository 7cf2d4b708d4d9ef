#![allow(dead_code)]

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;
use tricyclic_core::canon::canonical_form;
use tricyclic_core::families::FamilySpec;
use tricyclic_core::Graph;

/// A random tree on `n` vertices (uniform attachment).
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let mut g = Graph::empty(1);
    while g.order() < n {
        let v = rng.gen_range(0..g.order());
        let w = g.add_vertex();
        g.add_edge(v, w).unwrap();
    }
    g
}

fn colors(g: &Graph) -> Vec<bool> {
    g.bipartition().expect("trees are bipartite")
}

/// A connected bipartite graph with cyclomatic number `extra`: a random
/// tree plus `extra` chords between the colour classes. `extra` is clamped
/// to what a bipartite graph of order `n` can hold.
pub fn random_bipartite_cyclic<R: Rng>(n: usize, extra: usize, rng: &mut R) -> Graph {
    let extra = extra.min((n / 2) * n.div_ceil(2) + 1 - n.max(1));
    loop {
        let mut g = random_tree(n, rng);
        let c = colors(&g);
        let mut chords: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| c[u] != c[v] && !g.has_edge(u, v))
            .collect();
        if chords.len() < extra {
            continue;
        }
        chords.shuffle(rng);
        for &(u, v) in &chords[..extra] {
            g.add_edge(u, v).unwrap();
        }
        return g;
    }
}

pub fn random_bipartite_tricyclic<R: Rng>(n: usize, rng: &mut R) -> Graph {
    random_bipartite_cyclic(n, 3, rng)
}

/// Every unlabeled tree of order `n`, by leaf addition with canonical dedup.
pub fn all_trees(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(1)];
    for _ in 1..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in 0..t.order() {
                let mut h = t.clone();
                let w = h.add_vertex();
                h.add_edge(v, w).unwrap();
                if seen.insert(canonical_form(&h).unwrap()) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level
}

fn tree_path_mask(t: &Graph, u: usize, v: usize) -> u64 {
    let n = t.order();
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::from([u]);
    parent[u] = u;
    while let Some(x) = queue.pop_front() {
        for &y in t.neighbors(x) {
            if parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut mask = 0u64;
    let mut x = v;
    loop {
        mask |= 1 << x;
        if x == u {
            break;
        }
        x = parent[x];
    }
    mask
}

/// Generate-and-filter oracle for the class at order `n`: every tree plus
/// three cross-colour chords whose fundamental cycles are pairwise
/// vertex-disjoint, deduplicated by canonical form.
pub fn class_oracle_count(n: usize) -> usize {
    let mut seen = HashSet::new();
    for t in all_trees(n) {
        let c = colors(&t);
        let chords: Vec<((usize, usize), u64)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| c[u] != c[v] && !t.has_edge(u, v))
            .map(|(u, v)| ((u, v), tree_path_mask(&t, u, v)))
            .collect();
        for i in 0..chords.len() {
            for j in i + 1..chords.len() {
                if chords[i].1 & chords[j].1 != 0 {
                    continue;
                }
                for k in j + 1..chords.len() {
                    if (chords[i].1 | chords[j].1) & chords[k].1 != 0 {
                        continue;
                    }
                    let mut g = t.clone();
                    for &((u, v), _) in [&chords[i], &chords[j], &chords[k]] {
                        g.add_edge(u, v).unwrap();
                    }
                    seen.insert(canonical_form(&g).unwrap());
                }
            }
        }
    }
    seen.len()
}

/// Assorted small bipartite graphs with known structure.
pub fn energy_corpus() -> Vec<(String, Graph)> {
    let specs = [
        "path:2",
        "path:5",
        "path:9",
        "cycle:4",
        "cycle:6",
        "cycle:8",
        "cycle:10",
        "star:7",
        "pna:6:4",
        "pna:10:6",
        "pna:12:8",
        "pnab:11:6,6",
        "pnab:14:6,4",
        "rab:10:4,6",
        "theta2:13:4,4,4:2,2,2",
        "theta1:14:4,4,4:3,3:2",
        "theta1:16:6,4,4:3,3:1",
        "theta2:18:6,6,4:2,2,3",
        "p666:20",
        "theta1:22:6,6,6:6,2:2",
    ];
    specs
        .iter()
        .map(|s| {
            let spec: FamilySpec = s.parse().unwrap();
            (s.to_string(), spec.build().unwrap())
        })
        .collect()
}
