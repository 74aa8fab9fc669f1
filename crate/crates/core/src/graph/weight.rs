use std::cmp::Ordering;

use super::{Graph, InducedPath, VertexSet};
use crate::error::{Error, Result};
use crate::fault::{self, Fault};

/// A linear order `e_1, .., e_m` of the edges of a graph; ranks start at 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeOrder {
    n: usize,
    rank: Vec<u32>,
}

impl EdgeOrder {
    /// Edges ranked by `(min endpoint, max endpoint)`.
    pub fn canonical(g: &Graph) -> Self {
        Self::build(g, g.edges())
    }

    /// Edges ranked in the given sequence, which must list every edge of `g` exactly once.
    pub fn from_sequence(g: &Graph, seq: &[(usize, usize)]) -> Result<Self> {
        if seq.len() != g.edge_count() {
            return Err(Error::InvalidParameter(format!(
                "edge order lists {} edges, graph has {}",
                seq.len(),
                g.edge_count()
            )));
        }
        let order = Self::build(g, seq);
        for &(u, v) in seq {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if !g.adjacent(u, v) {
                return Err(Error::InvalidParameter(format!("{u}-{v} is not an edge")));
            }
        }
        let mut seen: Vec<u32> = g.edges().iter().map(|&(u, v)| order.rank[u * g.n() + v]).collect();
        seen.sort_unstable();
        if seen != (1..=g.edge_count() as u32).collect::<Vec<_>>() {
            return Err(Error::InvalidParameter("edge order repeats an edge".into()));
        }
        Ok(order)
    }

    fn build(g: &Graph, seq: &[(usize, usize)]) -> Self {
        let n = g.n();
        let mut rank = vec![0; n * n];
        for (i, &(u, v)) in seq.iter().enumerate() {
            if u < n && v < n {
                rank[u * n + v] = i as u32 + 1;
                rank[v * n + u] = i as u32 + 1;
            }
        }
        EdgeOrder { n, rank }
    }

    /// Rank of edge `uv`, or `None` if it is not an edge.
    #[inline]
    pub fn rank(&self, u: usize, v: usize) -> Option<u32> {
        match self.rank.get(u * self.n + v) {
            Some(&r) if r > 0 && u < self.n && v < self.n => Some(r),
            _ => None,
        }
    }

    #[inline]
    fn rank_of_edge(&self, u: usize, v: usize) -> u32 {
        self.rank[u * self.n + v]
    }
}

/// The weight of an edge set where edge `e_i` weighs `1 + 2^-i`, kept symbolically as the
/// edge count and the sorted list of ranks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathWeight {
    edge_count: usize,
    ranks: Vec<u32>,
}

impl PathWeight {
    pub fn from_ranks(mut ranks: Vec<u32>) -> Self {
        ranks.sort_unstable();
        ranks.dedup();
        PathWeight { edge_count: ranks.len(), ranks }
    }

    /// Weight of the edges of a vertex sequence; `None` if some consecutive pair is not an edge.
    pub fn of_path(order: &EdgeOrder, vertices: &[usize]) -> Option<Self> {
        let ranks = vertices
            .windows(2)
            .map(|w| order.rank(w[0], w[1]))
            .collect::<Option<Vec<_>>>()?;
        Some(Self::from_ranks(ranks))
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Ranks in ascending order.
    pub fn ranks(&self) -> &[u32] {
        &self.ranks
    }

    fn with_edge(&self, r: u32) -> Self {
        let mut ranks = self.ranks.clone();
        let pos = ranks.partition_point(|&x| x < r);
        ranks.insert(pos, r);
        PathWeight { edge_count: self.edge_count + 1, ranks }
    }
}

impl Ord for PathWeight {
    fn cmp(&self, other: &Self) -> Ordering {
        self.edge_count.cmp(&other.edge_count).then_with(|| {
            // Equal counts: the set holding the smallest rank of the symmetric difference
            // carries the largest fractional term, so it is heavier.
            let reversed = fault::active(Fault::WeightReversed);
            for (a, b) in self.ranks.iter().zip(&other.ranks) {
                if a != b {
                    return if reversed { a.cmp(b) } else { b.cmp(a) };
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for PathWeight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lightest paths from one source inside an allowed vertex set.
pub struct LightestTree {
    source: usize,
    parent: Vec<usize>,
    weight: Vec<Option<PathWeight>>,
}

impl LightestTree {
    /// Label-setting search from `s` over `g[allowed]`. Every lightest path is a shortest
    /// path, so labels are settled one breadth-first layer at a time.
    pub fn new(g: &Graph, order: &EdgeOrder, allowed: VertexSet, s: usize) -> Self {
        let n = g.n();
        let mut parent = vec![usize::MAX; n];
        let mut weight: Vec<Option<PathWeight>> = vec![None; n];
        if allowed.contains(s) {
            parent[s] = s;
            weight[s] = Some(PathWeight::from_ranks(Vec::new()));
            let mut layer = VertexSet::singleton(s);
            let mut seen = layer;
            while !layer.is_empty() {
                let next = g.neighbors_of(layer) & allowed - seen;
                for v in next {
                    let mut best: Option<(PathWeight, usize)> = None;
                    for u in g.neighbors(v) & layer {
                        let w = weight[u].as_ref().expect("settled").with_edge(order.rank_of_edge(u, v));
                        if best.as_ref().is_none_or(|(b, _)| w < *b) {
                            best = Some((w, u));
                        }
                    }
                    let (w, u) = best.expect("next layer vertex has a settled neighbour");
                    weight[v] = Some(w);
                    parent[v] = u;
                }
                seen |= next;
                layer = next;
            }
        }
        LightestTree { source: s, parent, weight }
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn reaches(&self, t: usize) -> bool {
        self.parent.get(t).is_some_and(|&p| p != usize::MAX)
    }

    pub fn weight(&self, t: usize) -> Option<&PathWeight> {
        self.weight.get(t).and_then(Option::as_ref)
    }

    /// The lightest path from the source to `t`, source first.
    pub fn path_to(&self, t: usize) -> Option<Vec<usize>> {
        if !self.reaches(t) {
            return None;
        }
        let mut path = vec![t];
        let mut x = t;
        while x != self.source {
            x = self.parent[x];
            path.push(x);
        }
        path.reverse();
        Some(path)
    }
}

/// The lightest `s`-`t` path of `g`, or `None` when `s` and `t` are disconnected.
/// When `s == t` the zero-length path is returned.
pub fn lightest_path(g: &Graph, order: &EdgeOrder, s: usize, t: usize) -> Result<Option<InducedPath>> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    Ok(lightest_path_within(g, order, g.vertices(), s, t).map(InducedPath::from_trusted))
}

pub(crate) fn lightest_path_within(
    g: &Graph,
    order: &EdgeOrder,
    allowed: VertexSet,
    s: usize,
    t: usize,
) -> Option<Vec<usize>> {
    if !allowed.contains(t) {
        return None;
    }
    LightestTree::new(g, order, allowed, s).path_to(t)
}
