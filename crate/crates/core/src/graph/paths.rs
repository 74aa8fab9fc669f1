use super::{Graph, VertexSet};
use crate::error::{Error, Result};
use crate::fault::{self, Fault};

/// A chordless path `v_0, .., v_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InducedPath {
    vertices: Vec<usize>,
}

impl InducedPath {
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self> {
        if is_induced_path(g, &vertices) {
            Ok(InducedPath { vertices })
        } else {
            Err(Error::InvalidWitness(format!("{vertices:?} is not an induced path")))
        }
    }

    pub(crate) fn from_trusted(vertices: Vec<usize>) -> Self {
        debug_assert!(!vertices.is_empty());
        InducedPath { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.vertices
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn ends(&self) -> (usize, usize) {
        (self.vertices[0], *self.vertices.last().expect("nonempty"))
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().collect()
    }

    /// Vertices other than the ends.
    pub fn interior(&self) -> VertexSet {
        interior_of(&self.vertices)
    }

    pub fn reversed(&self) -> Self {
        let mut v = self.vertices.clone();
        v.reverse();
        InducedPath { vertices: v }
    }
}

pub(crate) fn interior_of(path: &[usize]) -> VertexSet {
    if path.len() <= 2 {
        VertexSet::new()
    } else {
        path[1..path.len() - 1].iter().collect()
    }
}

/// A chordless cycle `c_0, .., c_{k-1}` with `k >= 4`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hole {
    vertices: Vec<usize>,
}

impl Hole {
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self> {
        if is_hole(g, &vertices) {
            Ok(Hole { vertices })
        } else {
            Err(Error::InvalidWitness(format!("{vertices:?} is not a hole")))
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_even(&self) -> bool {
        self.len() % 2 == 0
    }

    pub fn is_long(&self, ell: usize) -> bool {
        self.len() >= ell
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().collect()
    }

    /// The rotation/reflection starting at the smallest vertex and continuing towards
    /// its smaller neighbour.
    pub fn canonical(&self) -> Vec<usize> {
        canonical_cycle(&self.vertices)
    }
}

pub(crate) fn canonical_cycle(vs: &[usize]) -> Vec<usize> {
    let k = vs.len();
    let i = (0..k).min_by_key(|&i| vs[i]).unwrap_or(0);
    let fwd = vs[(i + 1) % k];
    let back = vs[(i + k - 1) % k];
    if fwd <= back {
        (0..k).map(|j| vs[(i + j) % k]).collect()
    } else {
        (0..k).map(|j| vs[(i + k - j) % k]).collect()
    }
}

/// True iff `vs` lists distinct vertices forming a chordless path.
pub fn is_induced_path(g: &Graph, vs: &[usize]) -> bool {
    if vs.is_empty() || vs.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let set: VertexSet = vs.iter().collect();
    if set.len() != vs.len() {
        return false;
    }
    let k = vs.len();
    vs.iter().enumerate().all(|(i, &v)| {
        let mut want = VertexSet::new();
        if i > 0 {
            want.insert(vs[i - 1]);
        }
        if i + 1 < k {
            want.insert(vs[i + 1]);
        }
        g.neighbors(v) & set == want
    })
}

/// True iff `vs` is a chordless cycle of length at least four, listed in cyclic order.
pub fn is_hole(g: &Graph, vs: &[usize]) -> bool {
    let k = vs.len();
    if k < 4 || vs.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let set: VertexSet = vs.iter().collect();
    if set.len() != k {
        return false;
    }
    let ignore_chords = fault::active(Fault::HoleIgnoresChords);
    vs.iter().enumerate().all(|(i, &v)| {
        let prev = vs[(i + k - 1) % k];
        let next = vs[(i + 1) % k];
        if ignore_chords {
            g.adjacent(v, prev) && g.adjacent(v, next)
        } else {
            g.neighbors(v) & set == [prev, next].into_iter().collect()
        }
    })
}

/// What to do after visiting a path.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Visit {
    Descend,
    Prune,
    Stop,
}

/// Visits every induced path that starts at `start` and continues through vertices of
/// `allowed`, including the zero-length path, extending depth first up to `max_edges`.
/// Returns `true` if the visitor stopped the walk.
pub fn visit_induced_paths_from<F>(
    g: &Graph,
    allowed: VertexSet,
    start: usize,
    max_edges: usize,
    mut f: F,
) -> bool
where
    F: FnMut(&[usize]) -> Visit,
{
    let mut path = vec![start];
    walk(g, allowed, &mut path, VertexSet::new(), max_edges, &mut f)
}

fn walk<F>(
    g: &Graph,
    allowed: VertexSet,
    path: &mut Vec<usize>,
    blocked: VertexSet,
    max_edges: usize,
    f: &mut F,
) -> bool
where
    F: FnMut(&[usize]) -> Visit,
{
    match f(path) {
        Visit::Stop => return true,
        Visit::Prune => return false,
        Visit::Descend => {}
    }
    if path.len() > max_edges {
        return false;
    }
    let last = *path.last().expect("nonempty");
    let candidates = g.neighbors(last) & allowed - blocked;
    let blocked = blocked | g.neighbors(last) | VertexSet::singleton(last);
    for c in candidates {
        path.push(c);
        let stop = walk(g, allowed, path, blocked, max_edges, f);
        path.pop();
        if stop {
            return true;
        }
    }
    false
}

/// Every induced path of `g` with at most `max_edges` edges, each reported once
/// (oriented from its smaller end).
pub fn enumerate_induced_paths(g: &Graph, max_edges: usize) -> impl Iterator<Item = InducedPath> + '_ {
    (0..g.n()).flat_map(move |s| {
        let mut found = Vec::new();
        visit_induced_paths_from(g, g.vertices(), s, max_edges, |p| {
            if p.len() == 1 || *p.last().expect("nonempty") > s {
                found.push(InducedPath::from_trusted(p.to_vec()));
            }
            Visit::Descend
        });
        found
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hole_examples() {
        assert!(is_hole(&Graph::cycle(4), &[0, 1, 2, 3]));
        assert!(!is_hole(&Graph::complete(3), &[0, 1, 2]));
        let chorded = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert!(!is_hole(&chorded, &[0, 1, 2, 3]));
        assert!(!is_hole(&Graph::cycle(5), &[0, 1, 2, 3, 9]));
        assert!(!is_hole(&Graph::cycle(5), &[0, 2, 4, 1, 3]));
    }

    #[test]
    fn induced_path_examples() {
        let c5 = Graph::cycle(5);
        assert!(is_induced_path(&c5, &[0, 1, 2, 3]));
        assert!(!is_induced_path(&c5, &[0, 1, 2, 3, 4]));
        assert!(is_induced_path(&c5, &[3]));
        assert!(InducedPath::new(&c5, vec![0, 2]).is_err());
    }

    #[test]
    fn enumeration_counts() {
        let c5 = Graph::cycle(5);
        let paths: Vec<_> = enumerate_induced_paths(&c5, 2).collect();
        let count = |k| paths.iter().filter(|p| p.len() == k).count();
        assert_eq!((count(0), count(1), count(2)), (5, 5, 5));

        let k3 = Graph::complete(3);
        assert_eq!(enumerate_induced_paths(&k3, 2).filter(|p| p.len() > 0).count(), 3);

        let e = Graph::empty(4);
        assert_eq!(enumerate_induced_paths(&e, 3).count(), 4);
    }

    #[test]
    fn canonical_rotation() {
        assert_eq!(canonical_cycle(&[3, 1, 4, 2]), vec![1, 3, 2, 4]);
        assert_eq!(canonical_cycle(&[2, 4, 1, 3]), vec![1, 3, 2, 4]);
    }
}
