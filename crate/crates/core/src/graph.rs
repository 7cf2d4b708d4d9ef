//! Labeled undirected simple graphs with sorted adjacency sets, plus the
//! surgery and structural predicates the polynomial recursions rely on.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Undirected simple graph on vertices `0..n`.
///
/// Every neighbor list is sorted and duplicate-free, and adjacency is
/// symmetric. Optional per-vertex labels record where a vertex came from
/// (`"cycle-a:0"`, `"path1:2"`, ...); they survive vertex deletion and
/// disjoint union but are ignored by isomorphism testing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

/// Simple cycles, each stored as its vertex sequence; the closing edge runs
/// from the last vertex back to the first.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CycleSet {
    pub cycles: Vec<Vec<usize>>,
}

impl CycleSet {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(Vec::len).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &[usize]> {
        self.cycles.iter().map(Vec::as_slice)
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            labels: None,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        if let Some(labels) = &mut self.labels {
            labels.push(String::new());
        }
        self.adj.len() - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.order();
        if u >= n {
            return Err(Error::BadVertex(u, n));
        }
        if v >= n {
            return Err(Error::BadVertex(v, n));
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(Error::DuplicateEdge(u, v)),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(())
            }
        }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels
            .as_ref()
            .map(|l| l[v].as_str())
            .filter(|s| !s.is_empty())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn set_label(&mut self, v: usize, label: impl Into<String>) {
        let n = self.order();
        let labels = self.labels.get_or_insert_with(|| vec![String::new(); n]);
        labels[v] = label.into();
    }

    pub fn without_labels(&self) -> Graph {
        Graph {
            adj: self.adj.clone(),
            labels: None,
        }
    }

    /// Checks symmetry, simplicity and index range.
    pub fn validate(&self) -> Result<()> {
        let n = self.order();
        for (u, nb) in self.adj.iter().enumerate() {
            for w in nb.windows(2) {
                if w[0] >= w[1] {
                    return Err(Error::DuplicateEdge(u, w[1]));
                }
            }
            for &v in nb {
                if v >= n {
                    return Err(Error::BadVertex(v, n));
                }
                if v == u {
                    return Err(Error::SelfLoop(u));
                }
                if self.adj[v].binary_search(&u).is_err() {
                    return Err(Error::MissingEdge(v, u));
                }
            }
        }
        if let Some(labels) = &self.labels {
            if labels.len() != n {
                return Err(Error::BadParam(format!(
                    "{} labels for {} vertices",
                    labels.len(),
                    n
                )));
            }
        }
        Ok(())
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        let mut g = self.clone();
        g.adj[u].retain(|&x| x != v);
        g.adj[v].retain(|&x| x != u);
        debug_assert!(g.validate().is_ok());
        Ok(g)
    }

    /// Induced subgraph on the vertices not in `vs`, reindexed densely in
    /// increasing order of the surviving original indices.
    pub fn delete_vertices(&self, vs: &[usize]) -> Result<Graph> {
        let n = self.order();
        let mut removed = vec![false; n];
        for &v in vs {
            if v >= n {
                return Err(Error::BadVertex(v, n));
            }
            removed[v] = true;
        }
        let mut new_index = vec![usize::MAX; n];
        let mut next = 0;
        for v in 0..n {
            if !removed[v] {
                new_index[v] = next;
                next += 1;
            }
        }
        let adj = (0..n)
            .filter(|&v| !removed[v])
            .map(|v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| !removed[w])
                    .map(|&w| new_index[w])
                    .collect()
            })
            .collect();
        let labels = self.labels.as_ref().map(|labels| {
            (0..n)
                .filter(|&v| !removed[v])
                .map(|v| labels[v].clone())
                .collect()
        });
        let g = Graph { adj, labels };
        debug_assert!(g.validate().is_ok());
        Ok(g)
    }

    /// `self ∪ other`, with `other`'s vertices shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|nb| nb.iter().map(|&v| v + shift).collect()),
        );
        let labels = match (&self.labels, &other.labels) {
            (None, None) => None,
            (a, b) => {
                let mut l = a.clone().unwrap_or_else(|| vec![String::new(); shift]);
                l.extend(
                    b.clone()
                        .unwrap_or_else(|| vec![String::new(); other.order()]),
                );
                Some(l)
            }
        };
        let g = Graph { adj, labels };
        debug_assert!(g.validate().is_ok());
        g
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        if perm.len() != n {
            return Err(Error::BadParam(format!(
                "permutation of length {} for order {}",
                perm.len(),
                n
            )));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return Err(Error::BadParam("not a permutation".into()));
            }
            seen[p] = true;
        }
        let mut adj = vec![Vec::new(); n];
        for (u, nb) in self.adj.iter().enumerate() {
            let mut mapped: Vec<usize> = nb.iter().map(|&v| perm[v]).collect();
            mapped.sort_unstable();
            adj[perm[u]] = mapped;
        }
        let labels = self.labels.as_ref().map(|labels| {
            let mut out = vec![String::new(); n];
            for (v, l) in labels.iter().enumerate() {
                out[perm[v]] = l.clone();
            }
            out
        });
        Ok(Graph { adj, labels })
    }

    /// Proper 2-coloring if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.order();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &v in &self.adj[u] {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.components().len() == 1
    }

    /// `|E| - |V| + #components`.
    pub fn cyclomatic_number(&self) -> usize {
        self.size() + self.components().len() - self.order()
    }

    /// Every simple cycle through the edge `uv`, found by enumerating the
    /// simple `u`–`v` paths of `g - uv`. Each cycle starts at `u` and ends at `v`.
    pub fn cycles_through_edge(&self, u: usize, v: usize) -> Result<CycleSet> {
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        let mut cycles = Vec::new();
        let mut on_path = vec![false; self.order()];
        let mut path = vec![u];
        on_path[u] = true;
        self.paths_to(u, v, (u, v), &mut on_path, &mut path, &mut cycles);
        cycles.sort();
        Ok(CycleSet { cycles })
    }

    fn paths_to(
        &self,
        at: usize,
        target: usize,
        skip: (usize, usize),
        on_path: &mut [bool],
        path: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        for &w in &self.adj[at] {
            if (at, w) == skip || (w, at) == skip || on_path[w] {
                continue;
            }
            path.push(w);
            if w == target {
                out.push(path.clone());
            } else {
                on_path[w] = true;
                self.paths_to(w, target, skip, on_path, path, out);
                on_path[w] = false;
            }
            path.pop();
        }
    }

    /// All simple cycles, each listed once starting from its smallest vertex
    /// and oriented so that the second vertex is smaller than the last.
    pub fn all_cycles(&self) -> CycleSet {
        let n = self.order();
        let mut cycles = Vec::new();
        let mut on_path = vec![false; n];
        for s in 0..n {
            let mut path = vec![s];
            on_path[s] = true;
            self.cycles_from(s, s, &mut on_path, &mut path, &mut cycles);
            on_path[s] = false;
        }
        cycles.sort();
        CycleSet { cycles }
    }

    fn cycles_from(
        &self,
        start: usize,
        at: usize,
        on_path: &mut [bool],
        path: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        for &w in &self.adj[at] {
            if w < start {
                continue;
            }
            if w == start {
                if path.len() >= 3 && path[1] < path[path.len() - 1] {
                    out.push(path.clone());
                }
                continue;
            }
            if on_path[w] {
                continue;
            }
            on_path[w] = true;
            path.push(w);
            self.cycles_from(start, w, on_path, path, out);
            path.pop();
            on_path[w] = false;
        }
    }

    /// A shortest cycle, or `None` for forests. For each edge `uv` a BFS from
    /// `u` to `v` in `g - uv` gives the shortest cycle through that edge.
    pub fn shortest_cycle(&self) -> Option<Vec<usize>> {
        let n = self.order();
        let mut best: Option<Vec<usize>> = None;
        for (u, v) in self.edges() {
            let mut parent = vec![usize::MAX; n];
            parent[u] = u;
            let mut queue = VecDeque::from([u]);
            'bfs: while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if (x == u && y == v) || parent[y] != usize::MAX {
                        continue;
                    }
                    parent[y] = x;
                    if y == v {
                        break 'bfs;
                    }
                    queue.push_back(y);
                }
            }
            if parent[v] == usize::MAX {
                continue;
            }
            let mut cycle = vec![v];
            let mut x = v;
            while x != u {
                x = parent[x];
                cycle.push(x);
            }
            if best.as_ref().map_or(true, |b| cycle.len() < b.len()) {
                best = Some(cycle);
            }
        }
        best
    }

    /// Vertices that survive repeated removal of degree-≤1 vertices.
    pub fn two_core(&self) -> Vec<usize> {
        let n = self.order();
        let mut deg: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        let mut removed = vec![false; n];
        let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
        while let Some(v) = stack.pop() {
            if removed[v] {
                continue;
            }
            removed[v] = true;
            for &w in &self.adj[v] {
                if !removed[w] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        stack.push(w);
                    }
                }
            }
        }
        (0..n).filter(|&v| !removed[v]).collect()
    }

    /// Adjacency matrix as rows of 0/1 entries.
    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        let n = self.order();
        let mut m = vec![vec![0u8; n]; n];
        for (u, v) in self.edges() {
            m[u][v] = 1;
            m[v][u] = 1;
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        let mut g = Graph::empty(3);
        assert_eq!(g.add_edge(1, 1), Err(Error::SelfLoop(1)));
        g.add_edge(0, 1).unwrap();
        assert_eq!(g.add_edge(1, 0), Err(Error::DuplicateEdge(1, 0)));
        assert_eq!(g.add_edge(0, 3), Err(Error::BadVertex(3, 3)));
    }

    #[test]
    fn delete_only_edge_of_p2() {
        let g = path(2).delete_edge(0, 1).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.size(), 0);
        assert_eq!(path(2).delete_edge(0, 0), Err(Error::MissingEdge(0, 0)));
    }

    #[test]
    fn middle_edge_of_p4_splits_into_two_p2() {
        let g = path(4).delete_edge(1, 2).unwrap();
        let sizes: Vec<usize> = g.components().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![2, 2]);
        assert_eq!(g.size(), 2);
    }

    #[test]
    fn cycle_minus_vertex_is_path() {
        let g = cycle(6).delete_vertices(&[3]).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.size(), 4);
        assert!(g.is_connected());
        assert_eq!(g.max_degree(), 2);
        assert_eq!(cycle(6).delete_vertices(&[9]), Err(Error::BadVertex(9, 6)));
        assert_eq!(cycle(6).delete_vertices(&[]).unwrap(), cycle(6));
    }

    #[test]
    fn labels_follow_deletion() {
        let mut g = path(3);
        g.set_label(0, "a");
        g.set_label(2, "c");
        let h = g.delete_vertices(&[1]).unwrap();
        assert_eq!(h.label(0), Some("a"));
        assert_eq!(h.label(1), Some("c"));
    }

    #[test]
    fn union_shifts_indices() {
        let g = path(2).disjoint_union(&path(3));
        assert_eq!(g.order(), 5);
        assert_eq!(g.size(), 3);
        assert_eq!(g.components().len(), 2);
        assert!(g.has_edge(3, 4));
        assert_eq!(path(4).disjoint_union(&Graph::empty(0)), path(4));
        let h = cycle(4).disjoint_union(&cycle(6));
        assert_eq!((h.order(), h.size()), (10, 10));
        assert!(h.is_bipartite());
    }

    #[test]
    fn bipartite_cycles() {
        assert!(cycle(6).is_bipartite());
        assert!(!cycle(5).is_bipartite());
        let coloring = cycle(6).bipartition().unwrap();
        for (u, v) in cycle(6).edges() {
            assert_ne!(coloring[u], coloring[v]);
        }
    }

    #[test]
    fn cycles_through_edges() {
        let c = cycle(6).cycles_through_edge(2, 3).unwrap();
        assert_eq!(c.lengths(), vec![6]);
        assert!(path(5).cycles_through_edge(1, 2).unwrap().is_empty());
        assert_eq!(
            path(5).cycles_through_edge(0, 2),
            Err(Error::MissingEdge(0, 2))
        );
    }

    #[test]
    fn all_cycles_of_k4() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let cs = k4.all_cycles();
        assert_eq!(cs.len(), 7);
        assert_eq!(cs.lengths().iter().filter(|&&l| l == 3).count(), 4);
        assert_eq!(k4.cyclomatic_number(), 3);
    }

    #[test]
    fn cyclomatic_numbers() {
        assert_eq!(path(7).cyclomatic_number(), 0);
        assert_eq!(cycle(6).cyclomatic_number(), 1);
        assert_eq!(Graph::empty(4).cyclomatic_number(), 0);
    }

    #[test]
    fn shortest_cycle_found() {
        let mut g = cycle(8);
        g.add_edge(0, 3).unwrap();
        let c = g.shortest_cycle().unwrap();
        assert_eq!(c.len(), 4);
        for i in 0..c.len() {
            assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
        }
        assert!(path(6).shortest_cycle().is_none());
    }

    #[test]
    fn two_core_strips_trees() {
        let mut g = cycle(4);
        let a = g.add_vertex();
        let b = g.add_vertex();
        g.add_edge(0, a).unwrap();
        g.add_edge(a, b).unwrap();
        assert_eq!(g.two_core(), vec![0, 1, 2, 3]);
        assert!(path(5).two_core().is_empty());
    }
}
