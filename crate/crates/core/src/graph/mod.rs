//! Immutable simple graphs over dense vertex ids, with bitset adjacency.

mod blocks;
mod forest;
mod paths;
mod set;
mod weight;

pub(crate) use forest::visit_linear_forests;
pub(crate) use paths::interior_of as paths_interior;
pub use paths::{
    enumerate_induced_paths, is_hole, is_induced_path, visit_induced_paths_from, Hole,
    InducedPath, Visit,
};
pub use set::{VertexSet, MAX_VERTICES};
pub use weight::{lightest_path, EdgeOrder, LightestTree, PathWeight};
pub(crate) use weight::lightest_path_within;

use std::collections::VecDeque;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Edges may be given in either orientation.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut adj = vec![VertexSet::new(); n];
        let mut list = Vec::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !adj[u].insert(v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[v].insert(u);
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        Ok(Graph { n, adj, edges: list })
    }

    pub fn empty(n: usize) -> Self {
        Self::new(n, std::iter::empty()).expect("vertex count within capacity")
    }

    /// The cycle `0-1-..-(n-1)-0`; `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    /// The path `0-1-..-(n-1)`.
    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn complete(n: usize) -> Self {
        Self::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("valid clique")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as `(min, max)` pairs in ascending order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Vertices adjacent to at least one member of `s` (may include members of `s`).
    pub fn neighbors_of(&self, s: VertexSet) -> VertexSet {
        let mut out = VertexSet::new();
        for v in s {
            out |= self.adj[v];
        }
        out
    }

    /// `s` together with every vertex adjacent to it.
    pub fn closed_neighbors_of(&self, s: VertexSet) -> VertexSet {
        self.neighbors_of(s) | s
    }

    #[inline]
    pub fn has_neighbor_in(&self, v: usize, s: VertexSet) -> bool {
        self.adj[v].intersects(&s)
    }

    /// Number of edges of the subgraph induced on `s`.
    pub fn induced_edge_count(&self, s: VertexSet) -> usize {
        s.iter().map(|v| (self.adj[v] & s).len()).sum::<usize>() / 2
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn check_set(&self, vs: &[usize]) -> Result<VertexSet> {
        let mut s = VertexSet::new();
        for &v in vs {
            self.check_vertex(v)?;
            s.insert(v);
        }
        Ok(s)
    }

    /// Subgraph induced on `keep`, relabelled to `0..keep.len()` in ascending order.
    /// Also returns the original id of each new vertex.
    pub fn induced_subgraph(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = keep.iter().filter(|&v| v < self.n).collect();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in old.iter().enumerate() {
            new_id[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| new_id[u] != usize::MAX && new_id[v] != usize::MAX)
            .map(|&(u, v)| (new_id[u], new_id[v]));
        let g = Graph::new(old.len(), edges).expect("subgraph of a valid graph");
        (g, old)
    }

    /// The same graph with one edge removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let (a, b) = (u.min(v), u.max(v));
        Graph::new(self.n, self.edges.iter().copied().filter(|&e| e != (a, b)))
            .expect("subgraph of a valid graph")
    }

    /// Breadth-first distances from `s` inside `allowed`; `None` marks unreachable.
    pub(crate) fn bfs_within(&self, allowed: VertexSet, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        if !allowed.contains(s) {
            return dist;
        }
        dist[s] = Some(0);
        let mut frontier = VertexSet::singleton(s);
        let mut seen = frontier;
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let next = self.neighbors_of(frontier) & allowed - seen;
            for v in next {
                dist[v] = Some(d);
            }
            seen |= next;
            frontier = next;
        }
        dist
    }

    /// A shortest `s`-`t` path using only vertices of `allowed` (which must contain both).
    pub(crate) fn shortest_path_within(
        &self,
        allowed: VertexSet,
        s: usize,
        t: usize,
    ) -> Option<Vec<usize>> {
        if !allowed.contains(s) || !allowed.contains(t) {
            return None;
        }
        let mut parent = vec![usize::MAX; self.n];
        parent[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if u == t {
                let mut path = vec![t];
                let mut x = t;
                while x != s {
                    x = parent[x];
                    path.push(x);
                }
                path.reverse();
                return Some(path);
            }
            for v in self.adj[u] & allowed {
                if parent[v] == usize::MAX {
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        None
    }

    /// Vertices reachable from `s` inside `allowed`.
    pub(crate) fn component_within(&self, allowed: VertexSet, s: usize) -> VertexSet {
        if !allowed.contains(s) {
            return VertexSet::new();
        }
        let mut seen = VertexSet::singleton(s);
        let mut frontier = seen;
        while !frontier.is_empty() {
            frontier = self.neighbors_of(frontier) & allowed - seen;
            seen |= frontier;
        }
        seen
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges).finish()
    }
}

/// True iff `x` and `y` are disjoint and no edge joins them.
pub fn is_anticomplete(g: &Graph, x: &[usize], y: &[usize]) -> Result<bool> {
    let xs = g.check_set(x)?;
    let ys = g.check_set(y)?;
    Ok(anticomplete(g, xs, ys))
}

#[inline]
pub(crate) fn anticomplete(g: &Graph, x: VertexSet, y: VertexSet) -> bool {
    if crate::fault::active(crate::fault::Fault::AnticompleteIgnoresOverlap) {
        return !g.neighbors_of(x).intersects(&y);
    }
    !x.intersects(&y) && !g.neighbors_of(x).intersects(&y)
}

/// True iff `v` lies outside `structure` and its neighbours in `structure` are not all
/// contained in a three-vertex path of `g[structure]`.
pub fn is_major(g: &Graph, structure: VertexSet, v: usize) -> bool {
    if structure.contains(v) {
        return false;
    }
    let nbrs = g.neighbors(v) & structure;
    let k = nbrs.len();
    if crate::fault::active(crate::fault::Fault::MajorUsesEdges) {
        return match k {
            0 | 1 => false,
            2 => {
                let mut it = nbrs.iter();
                let (a, b) = (it.next().unwrap(), it.next().unwrap());
                !g.adjacent(a, b)
            }
            _ => true,
        };
    }
    match k {
        0 | 1 => false,
        2 => {
            let mut it = nbrs.iter();
            let (a, b) = (it.next().unwrap(), it.next().unwrap());
            !(g.adjacent(a, b) || (g.neighbors(a) & g.neighbors(b)).intersects(&structure))
        }
        3 => !nbrs.iter().any(|c| (g.neighbors(c) & nbrs).len() == 2),
        _ => true,
    }
}

/// Length of a shortest `u`-`v` path, or `None` when they lie in different components.
pub fn distance(g: &Graph, u: usize, v: usize) -> Result<Option<usize>> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    Ok(g.bfs_within(g.vertices(), u)[v])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_duplicates_and_range() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(Graph::new(3, [(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(Graph::new(3, [(0, 3)]), Err(Error::VertexOutOfRange { vertex: 3, n: 3 }));
        assert_eq!(Graph::new(MAX_VERTICES + 1, []), Err(Error::TooManyVertices(MAX_VERTICES + 1)));
    }

    #[test]
    fn anticomplete_examples() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(is_anticomplete(&g, &[0, 1], &[2, 3]).unwrap());
        assert!(!is_anticomplete(&g, &[0], &[0]).unwrap());
        let p = Graph::path(3);
        assert!(is_anticomplete(&p, &[0], &[2]).unwrap());
        assert!(!is_anticomplete(&p, &[0], &[1]).unwrap());
        assert!(is_anticomplete(&p, &[0], &[5]).is_err());
    }

    #[test]
    fn distance_examples() {
        let c6 = Graph::cycle(6);
        assert_eq!(distance(&c6, 0, 3).unwrap(), Some(3));
        assert_eq!(distance(&c6, 2, 2).unwrap(), Some(0));
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(distance(&g, 0, 3).unwrap(), None);
        assert!(distance(&g, 0, 4).is_err());
    }

    #[test]
    fn major_vertices_of_a_hole() {
        // C_8 on 0..8 plus vertex 8 attached to a varying neighbourhood
        let with = |nbrs: &[usize]| {
            let mut e: Vec<_> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
            e.extend(nbrs.iter().map(|&v| (8, v)));
            Graph::new(9, e).unwrap()
        };
        let hole = VertexSet::full(8);
        assert!(!is_major(&with(&[]), hole, 8));
        assert!(!is_major(&with(&[0, 1, 2]), hole, 8));
        assert!(!is_major(&with(&[0, 2]), hole, 8));
        assert!(is_major(&with(&[0, 3]), hole, 8));
        assert!(is_major(&with(&[0, 2, 4]), hole, 8));
        assert!(is_major(&with(&[0, 1, 2, 3]), hole, 8));
        assert!(!is_major(&with(&[0, 1]), hole, 0));
    }

    #[test]
    fn induced_subgraph_relabels() {
        let c6 = Graph::cycle(6);
        let (h, map) = c6.induced_subgraph([0, 1, 2, 4].into_iter().collect());
        assert_eq!(map, vec![0, 1, 2, 4]);
        assert_eq!(h.edges(), &[(0, 1), (1, 2)]);
    }
}
