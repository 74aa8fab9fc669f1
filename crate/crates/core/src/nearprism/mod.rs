//! Frames, clean lightest near-prisms, contrivances and cleaning sets, and the long
//! near-prism decision procedure for prospects.

mod clean;
mod contrivance;
mod detect;
mod frame;

pub use clean::detect_clean_lightest_near_prism;
pub use contrivance::{cleaning_set_for_prism, reconstruct_l, LSet, PrismContrivance};
pub use detect::{detect_long_near_prism, detect_long_near_prism_by_guesses, detect_long_near_prism_with};
pub use frame::{enumerate_frames, enumerate_ordered_frames, Frame, FramePart, OrderedFrame};

use crate::configs::Configuration;
use crate::error::{Error, Result};
use crate::graph::{is_hole, is_induced_path, is_major, Graph, VertexSet};

/// Two triangles `a` and `b` (sharing at most one vertex) joined by paths `paths[i]` from
/// `a[i]` to `b[i]`. A shared vertex `c = a[i] = b[i]` has the one-vertex path `[c]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NearPrism {
    pub a: [usize; 3],
    pub b: [usize; 3],
    pub paths: [Vec<usize>; 3],
}

impl NearPrism {
    pub fn vertex_set(&self) -> VertexSet {
        self.paths.iter().flatten().collect()
    }

    /// Edge counts of the three paths.
    pub fn lengths(&self) -> [usize; 3] {
        self.paths.each_ref().map(|p| p.len() - 1)
    }

    /// Checks the definition without longness: triangles, disjoint induced paths, and no
    /// edges beyond the triangles and the paths.
    pub fn check_structure(&self, g: &Graph) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidWitness(format!("near-prism: {m}")));
        for t in [self.a, self.b] {
            if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
                return bad("triangle repeats a vertex");
            }
            if !(g.adjacent(t[0], t[1]) && g.adjacent(t[0], t[2]) && g.adjacent(t[1], t[2])) {
                return bad("base is not a triangle");
            }
        }
        let shared = (0..3).filter(|&i| self.a[i] == self.b[i]).count();
        let overlap = self.a.iter().filter(|v| self.b.contains(v)).count();
        if shared != overlap || shared > 1 {
            return bad("triangles overlap wrongly");
        }
        let mut total = 0;
        for i in 0..3 {
            let p = &self.paths[i];
            if !is_induced_path(g, p) || p[0] != self.a[i] || *p.last().unwrap() != self.b[i] {
                return bad("path is not an induced a_i-b_i path");
            }
            total += p.len();
        }
        let s = self.vertex_set();
        if s.len() != total {
            return bad("paths are not disjoint");
        }
        if g.induced_edge_count(s) != 6 + self.lengths().iter().sum::<usize>() {
            return bad("extra edges between paths");
        }
        Ok(())
    }

    /// The hole formed by paths `i` and `j` and the base edges joining them.
    pub fn hole(&self, i: usize, j: usize) -> Vec<usize> {
        let mut c = self.paths[i].clone();
        c.extend(self.paths[j].iter().rev());
        c
    }

    /// The frame `F_K`: paths of length at most `ell - 1` are kept whole, longer paths
    /// contribute their two end segments of length `ell/2 - 1`. `None` if two or more paths
    /// are short.
    pub fn frame(&self, ell: usize) -> Option<Frame> {
        let stub = ell / 2 - 1;
        let parts = self.paths.each_ref().map(|p| {
            if p.len() - 1 <= ell - 1 {
                FramePart::Path(p.clone())
            } else {
                let mut b_stub: Vec<usize> = p[p.len() - 1 - stub..].to_vec();
                b_stub.reverse();
                FramePart::Stubs { a_stub: p[..=stub].to_vec(), b_stub }
            }
        });
        let frame = Frame { a: self.a, b: self.b, parts };
        (frame.path_parts() <= 1).then_some(frame)
    }

    /// No vertex outside the prism has a neighbour in the frame interior.
    pub fn is_tidy(&self, g: &Graph, ell: usize) -> bool {
        let Some(f) = self.frame(ell) else { return false };
        let outside = g.vertices() - self.vertex_set();
        !g.neighbors_of(f.interior()).intersects(&outside)
    }

    /// No vertex of `g` is major for the prism.
    pub fn is_clean(&self, g: &Graph) -> bool {
        let s = self.vertex_set();
        (g.vertices() - s).iter().all(|v| !is_major(g, s, v))
    }

    /// Position of `v` as `(path index, index along the path)`.
    fn locate(&self, v: usize) -> Option<(usize, usize)> {
        self.paths.iter().enumerate().find_map(|(i, p)| p.iter().position(|&w| w == v).map(|k| (i, k)))
    }
}

impl Configuration for NearPrism {
    fn validate(&self, g: &Graph, ell: usize) -> Result<()> {
        self.check_structure(g)?;
        for (i, j) in [(0, 1), (1, 2), (0, 2)] {
            let h = self.hole(i, j);
            if !is_hole(g, &h) || h.len() < ell {
                return Err(Error::InvalidWitness("near-prism is not long".into()));
            }
        }
        Ok(())
    }

    fn holes(&self) -> Vec<Vec<usize>> {
        vec![self.hole(0, 1), self.hole(1, 2), self.hole(0, 2)]
    }
}

/// Whether `v` is major for the near-prism: its neighbours on the prism are not covered by
/// any three-vertex path of the prism.
pub fn is_k_major(g: &Graph, k: &NearPrism, v: usize) -> Result<bool> {
    g.check_vertex(v)?;
    let s = k.vertex_set();
    if s.contains(v) {
        return Err(Error::InvalidParameter(format!("vertex {v} belongs to the near-prism")));
    }
    Ok(is_major(g, s, v))
}

/// Where a major vertex `x` attaches to each constituent path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MajorAttachments {
    /// Neighbour of `x` on path `i` closest to `a[i]`.
    pub alpha: [Option<usize>; 3],
    /// Neighbour of `x` on path `i` closest to `b[i]`.
    pub beta: [Option<usize>; 3],
    /// Vertices of path `i` from `a[i]` up to `alpha[i]`, or the whole path if there is no
    /// neighbour.
    pub a_sets: [VertexSet; 3],
    /// `a_sets[0]` if `x` has a neighbour on the first path, else path 0 plus `a_sets[1]`.
    pub l_set: VertexSet,
}

impl MajorAttachments {
    pub fn a_pair(&self, i: usize, j: usize) -> VertexSet {
        self.a_sets[i] | self.a_sets[j]
    }
}

pub fn major_attachments(g: &Graph, k: &NearPrism, x: usize) -> Result<MajorAttachments> {
    if !is_k_major(g, k, x)? {
        return Err(Error::Precondition(format!("vertex {x} is not major for the near-prism")));
    }
    let mut alpha = [None; 3];
    let mut beta = [None; 3];
    let mut a_sets = [VertexSet::new(); 3];
    for i in 0..3 {
        let p = &k.paths[i];
        let hits: Vec<usize> = (0..p.len()).filter(|&j| g.adjacent(x, p[j])).collect();
        alpha[i] = hits.first().map(|&j| p[j]);
        beta[i] = hits.last().map(|&j| p[j]);
        let upto = hits.first().copied().unwrap_or(p.len() - 1);
        a_sets[i] = p[..=upto].iter().collect();
    }
    let p0: VertexSet = k.paths[0].iter().collect();
    let l_set = if alpha[0].is_some() { a_sets[0] } else { p0 | a_sets[1] };
    Ok(MajorAttachments { alpha, beta, a_sets, l_set })
}

/// The subpath of the constituent path through `v` reaching at most `m` steps towards `a`
/// and `n` steps towards `b`, each direction stopping early at the path end or right after
/// entering the frame interior. Returned in `a`-to-`b` order.
pub fn truncated_subpath(k: &NearPrism, ell: usize, v: usize, m: usize, n: usize) -> Result<Vec<usize>> {
    let frame = k.frame(ell).ok_or_else(|| Error::Precondition("near-prism has no frame".into()))?;
    let interior = frame.interior();
    if interior.contains(v) {
        return Err(Error::InvalidParameter(format!("vertex {v} lies in the frame interior")));
    }
    let (i, at) = k.locate(v).ok_or_else(|| Error::InvalidParameter(format!("vertex {v} is not on the near-prism")))?;
    let p = &k.paths[i];
    let mut lo = at;
    for _ in 0..m {
        if lo == 0 {
            break;
        }
        lo -= 1;
        if interior.contains(p[lo]) {
            break;
        }
    }
    let mut hi = at;
    for _ in 0..n {
        if hi + 1 == p.len() {
            break;
        }
        hi += 1;
        if interior.contains(p[hi]) {
            break;
        }
    }
    Ok(p[lo..=hi].to_vec())
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::harness::generate::prism_edges;

    /// The planted prism on `0..n` from the generator, as a graph and a near-prism.
    pub(crate) fn prism(lengths: [usize; 3]) -> (Graph, NearPrism) {
        let (n, edges) = prism_edges(lengths);
        let g = Graph::new(n, edges).unwrap();
        (g.clone(), prism_in(&g, lengths))
    }

    pub(crate) fn prism_in(g: &Graph, lengths: [usize; 3]) -> NearPrism {
        let shared = lengths.iter().position(|&l| l == 0);
        let b: [usize; 3] = match shared {
            None => [3, 4, 5],
            Some(s) => {
                let mut next = 3;
                [0, 1, 2].map(|i| if i == s { i } else { next += 1; next - 1 })
            }
        };
        let paths = [0, 1, 2].map(|i| g.shortest_path_within(
            (g.vertices() - [0, 1, 2, b[0], b[1], b[2]].into_iter().collect()) | [i, b[i]].into_iter().collect(),
            i,
            b[i],
        ).unwrap());
        NearPrism { a: [0, 1, 2], b, paths }
    }

    #[test]
    fn planted_prisms_validate() {
        let (g, k) = prism([2, 7, 7]);
        k.validate(&g, 6).unwrap();
        assert!(k.is_tidy(&g, 6));
        assert!(k.is_clean(&g));
        let (g, k) = prism([0, 7, 7]);
        k.validate(&g, 6).unwrap();
        let (g, k) = prism([1, 2, 2]);
        k.check_structure(&g).unwrap();
        assert!(k.validate(&g, 6).is_err());
    }

    #[test]
    fn frame_of_a_prism() {
        let (_, k) = prism([2, 7, 7]);
        let f = k.frame(6).unwrap();
        assert_eq!(f.path_parts(), 1);
        assert_eq!(f.vertex_set().len(), 3 + 3 + 1 + 2 * 4);
        assert_eq!(f.ends().len(), 4);
        let (_, k) = prism([2, 3, 7]);
        assert!(k.frame(6).is_none());
    }

    fn with_extra(g: &Graph, nbrs: &[usize]) -> Graph {
        let z = g.n();
        Graph::new(z + 1, g.edges().iter().copied().chain(nbrs.iter().map(|&v| (v, z)))).unwrap()
    }

    #[test]
    fn majors_and_attachments() {
        let (g, k) = prism([2, 7, 7]);
        let z = g.n();
        let p1 = &k.paths[1];
        let p2 = &k.paths[2];
        assert!(!is_k_major(&with_extra(&g, &[]), &k, z).unwrap());
        assert!(!is_k_major(&with_extra(&g, &[p1[3], p1[4]]), &k, z).unwrap());
        let g2 = with_extra(&g, &[p1[3], p2[4]]);
        assert!(is_k_major(&g2, &k, z).unwrap());
        assert!(is_k_major(&g2, &k, 0).is_err());
        let att = major_attachments(&g2, &k, z).unwrap();
        assert_eq!(att.alpha, [None, Some(p1[3]), Some(p2[4])]);
        assert_eq!(att.a_sets[0], k.paths[0].iter().collect());
        assert_eq!(att.a_sets[1], p1[..=3].iter().collect());
        assert_eq!(att.l_set, att.a_sets[0] | att.a_sets[1]);
        assert!(major_attachments(&with_extra(&g, &[p1[3]]), &k, z).is_err());
    }

    #[test]
    fn truncated_paths() {
        let (_, k) = prism([2, 7, 7]);
        let p = &k.paths[1];
        // p = a, stub, s, m1, m2, t, stub, b for length 7
        assert_eq!(truncated_subpath(&k, 6, p[3], 0, 0).unwrap(), vec![p[3]]);
        assert_eq!(truncated_subpath(&k, 6, p[2], 3, 0).unwrap(), vec![p[1], p[2]]);
        assert_eq!(truncated_subpath(&k, 6, p[3], 4, 1).unwrap(), p[1..=4].to_vec());
        assert!(truncated_subpath(&k, 6, p[1], 1, 1).is_err());
    }
}
