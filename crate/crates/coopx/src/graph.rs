//! Simple undirected graphs with deterministic iteration order.
//!
//! Vertices are `0..n`. Adjacency lists are kept sorted ascending, so every
//! traversal (BFS, component discovery, greedy selections built on top)
//! breaks ties by ascending vertex id and is reproducible across runs.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Degree summary: maximum degree, minimum degree, regularity flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeStats {
    pub max: usize,
    pub min: usize,
    pub is_regular: bool,
}

/// An undirected simple graph (no self-loops, no parallel edges).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Build a graph on `n >= 1` vertices from an edge list.
    ///
    /// Edges may arrive in any order and orientation; they are normalized to
    /// `u < v` and stored sorted. Self-loops, duplicates, and out-of-range
    /// endpoints are rejected.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(edge_list.len());
        for &(a, b) in edge_list {
            if a >= n {
                return Err(Error::VertexOutOfRange { v: a, n });
            }
            if b >= n {
                return Err(Error::VertexOutOfRange { v: b, n });
            }
            if a == b {
                return Err(Error::SelfLoop { v: a });
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge {
                u: w[0].0,
                v: w[0].1,
            });
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, adj, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Normalized `(u, v)` pairs with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Open neighborhood `N(v)`, ascending.
    pub fn neighbors(&self, v: usize) -> Result<&[usize]> {
        self.adj
            .get(v)
            .map(|a| a.as_slice())
            .ok_or(Error::VertexOutOfRange { v, n: self.n })
    }

    /// Closed neighborhood `N(v) ∪ {v}`, ascending.
    pub fn closed_neighbors(&self, v: usize) -> Result<Vec<usize>> {
        let open = self.neighbors(v)?;
        let mut out = Vec::with_capacity(open.len() + 1);
        let mut inserted = false;
        for &u in open {
            if !inserted && u > v {
                out.push(v);
                inserted = true;
            }
            out.push(u);
        }
        if !inserted {
            out.push(v);
        }
        Ok(out)
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        Ok(self.neighbors(v)?.len())
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && u != v && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let mut max = 0usize;
        let mut min = usize::MAX;
        for list in &self.adj {
            max = max.max(list.len());
            min = min.min(list.len());
        }
        DegreeStats {
            max,
            min,
            is_regular: max == min,
        }
    }

    pub fn is_connected(&self) -> bool {
        let all: BTreeSet<usize> = (0..self.n).collect();
        self.connected_components(&all)
            .map(|c| c.len() == 1)
            .unwrap_or(false)
    }

    /// BFS visit order of `subset` starting at `root`.
    ///
    /// Neighbors are explored in ascending id order, so the returned order is
    /// canonical. Errors if `root` is outside `subset` or if the subgraph
    /// induced by `subset` is not connected.
    pub fn bfs_order(&self, root: usize, subset: &BTreeSet<usize>) -> Result<Vec<usize>> {
        for &v in subset {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { v, n: self.n });
            }
        }
        if !subset.contains(&root) {
            return Err(Error::RootOutsideSubset { root });
        }
        let mut order = Vec::with_capacity(subset.len());
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        let mut queue = std::collections::VecDeque::new();
        seen.insert(root);
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &u in &self.adj[v] {
                if subset.contains(&u) && seen.insert(u) {
                    queue.push_back(u);
                }
            }
        }
        if order.len() != subset.len() {
            return Err(Error::SubsetDisconnected);
        }
        Ok(order)
    }

    /// Connected components of the subgraph induced by `subset`.
    ///
    /// Components are listed by ascending minimum member id, each with its
    /// members ascending.
    pub fn connected_components(&self, subset: &BTreeSet<usize>) -> Result<Vec<Vec<usize>>> {
        for &v in subset {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { v, n: self.n });
            }
        }
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        let mut components = Vec::new();
        for &start in subset {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = std::collections::VecDeque::new();
            seen.insert(start);
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &u in &self.adj[v] {
                    if subset.contains(&u) && seen.insert(u) {
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        Ok(components)
    }

    /// A copy of this graph with `verts` turned into a clique (existing edges
    /// are kept; only missing pairs are added).
    pub fn union_with_clique(&self, verts: &BTreeSet<usize>) -> Result<Graph> {
        for &v in verts {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { v, n: self.n });
            }
        }
        let mut edges = self.edges.clone();
        let vs: Vec<usize> = verts.iter().copied().collect();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if !self.contains_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(self.n, &edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn construction_rejects_bad_edges() {
        assert!(matches!(
            Graph::new(3, &[(0, 0)]),
            Err(Error::SelfLoop { v: 0 })
        ));
        assert!(matches!(
            Graph::new(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge { u: 0, v: 1 })
        ));
        assert!(matches!(
            Graph::new(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { v: 3, n: 3 })
        ));
        assert!(matches!(Graph::new(0, &[]), Err(Error::EmptyGraph)));
    }

    #[test]
    fn neighborhoods_are_sorted() {
        let g = Graph::new(4, &[(2, 0), (0, 1), (3, 0)]).unwrap();
        assert_eq!(g.neighbors(0).unwrap(), &[1, 2, 3]);
        assert_eq!(g.closed_neighbors(0).unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(g.closed_neighbors(2).unwrap(), vec![0, 2]);
        assert!(g.neighbors(4).is_err());
    }

    #[test]
    fn bfs_order_on_c4_breaks_ties_by_id() {
        // hand-run: root 0 enqueues 1 then 3, then 1 contributes 2
        let g = cycle(4);
        let all: BTreeSet<usize> = (0..4).collect();
        assert_eq!(g.bfs_order(0, &all).unwrap(), vec![0, 1, 3, 2]);
    }

    #[test]
    fn bfs_order_errors() {
        let g = cycle(4);
        let sub: BTreeSet<usize> = [1, 3].into_iter().collect();
        assert!(matches!(
            g.bfs_order(0, &sub),
            Err(Error::RootOutsideSubset { root: 0 })
        ));
        assert!(matches!(
            g.bfs_order(1, &sub),
            Err(Error::SubsetDisconnected)
        ));
    }

    #[test]
    fn components_are_listed_by_minimum_member() {
        let g = Graph::new(6, &[(0, 1), (2, 3), (4, 5), (1, 4)]).unwrap();
        let sub: BTreeSet<usize> = [0, 1, 2, 3, 5].into_iter().collect();
        // edge (1,4) leaves the subset, so {0,1}, {2,3}, {5}
        assert_eq!(
            g.connected_components(&sub).unwrap(),
            vec![vec![0, 1], vec![2, 3], vec![5]]
        );
    }

    #[test]
    fn degree_stats_and_connectivity() {
        let g = cycle(5);
        let s = g.degree_stats();
        assert_eq!((s.max, s.min, s.is_regular), (2, 2, true));
        assert!(g.is_connected());
        let h = Graph::new(3, &[(0, 1)]).unwrap();
        assert!(!h.is_connected());
        assert!(!h.degree_stats().is_regular);
    }

    #[test]
    fn clique_union_adds_only_missing_pairs() {
        let g = Graph::new(4, &[(0, 1), (1, 2)]).unwrap();
        let vs: BTreeSet<usize> = [0, 1, 2].into_iter().collect();
        let gp = g.union_with_clique(&vs).unwrap();
        assert_eq!(gp.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(gp.n(), 4);
    }
}
