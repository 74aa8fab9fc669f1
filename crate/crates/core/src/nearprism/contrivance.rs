use super::OrderedFrame;
use crate::graph::{lightest_path_within, EdgeOrder, Graph, LightestTree, VertexSet};

/// A guessed quintuple `(x, y, alpha, h, Q)`; `q` is the vertex set of a linear forest whose
/// components are the paths of `Q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrismContrivance {
    pub x: usize,
    pub y: usize,
    pub alpha: usize,
    pub h: u8,
    pub q: VertexSet,
}

impl PrismContrivance {
    pub fn cost(&self) -> usize {
        self.q.len()
    }

    /// Vertices of `Q` that are not ends of their path.
    pub fn q_interior(&self, g: &Graph) -> VertexSet {
        q_interior(g, self.q)
    }
}

pub(crate) fn q_interior(g: &Graph, q: VertexSet) -> VertexSet {
    q.iter().filter(|&v| (g.neighbors(v) & q).len() == 2).collect()
}

/// The reconstructed set `L` as the paths it consists of: `[a_1..alpha]` when `h = 1`,
/// `[P_1, a_2..alpha]` when `h = 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LSet {
    pub paths: Vec<Vec<usize>>,
}

impl LSet {
    pub fn vertex_set(&self) -> VertexSet {
        self.paths.iter().flatten().collect()
    }

    pub fn interior(&self) -> VertexSet {
        self.paths.iter().fold(VertexSet::new(), |s, p| {
            if p.len() > 2 { s | p[1..p.len() - 1].iter().collect() } else { s }
        })
    }
}

/// The subgraph `H` in which `L` is searched: `allowed` minus vertices outside `Q` with a
/// neighbour in the interior of `Q`, and minus neighbours of `x` or `y` outside the frame and
/// `Q`.
pub(crate) fn search_region(g: &Graph, allowed: VertexSet, of: &OrderedFrame, q: VertexSet, q_star: VertexSet, x: usize, y: usize) -> VertexSet {
    let z1 = g.neighbors_of(q_star) - q;
    let z2 = (g.neighbors(x) | g.neighbors(y)) - of.frame.vertex_set() - q;
    allowed - z1 - z2
}

/// The region for the second path when `h = 2`, together with `P_1`.
pub(crate) fn second_region(g: &Graph, order: &EdgeOrder, of: &OrderedFrame, h: VertexSet) -> Option<(Vec<usize>, VertexSet)> {
    match (of.s(0), of.t(0)) {
        (Some(s), Some(t)) => {
            let m = lightest_path_within(g, order, h, s, t)?;
            let rest = h - g.closed_neighbors_of(m.iter().collect());
            Some((of.complete_part(0, Some(&m)), rest))
        }
        _ => Some((of.complete_part(0, None), h)),
    }
}

pub(crate) fn join_stub(of: &OrderedFrame, k: usize, tail: Vec<usize>) -> Vec<usize> {
    let (a_stub, _) = of.stubs(k).expect("stub part");
    let mut p = a_stub.to_vec();
    p.extend_from_slice(&tail[1..]);
    p
}

/// Reconstructs `L(x)` from a guessed contrivance inside `allowed`. `None` when a required
/// path does not exist, in which case the guess is discarded.
pub fn reconstruct_l(
    g: &Graph,
    allowed: VertexSet,
    order: &EdgeOrder,
    of: &OrderedFrame,
    c: &PrismContrivance,
) -> Option<LSet> {
    let q_star = c.q_interior(g);
    if !q_star.contains(c.alpha) || !(1..=2).contains(&c.h) {
        return None;
    }
    let h = search_region(g, allowed, of, c.q, q_star, c.x, c.y);
    if c.h == 1 {
        let s = of.s(0)?;
        let r = lightest_path_within(g, order, h, s, c.alpha)?;
        return Some(LSet { paths: vec![join_stub(of, 0, r)] });
    }
    let (p1, rest) = second_region(g, order, of, h)?;
    let r = LightestTree::new(g, order, rest, of.s(1)?).path_to(c.alpha)?;
    Some(LSet { paths: vec![p1, join_stub(of, 1, r)] })
}

/// The cleaning set: vertices outside the frame, `Q` and `L` with a neighbour in the interior
/// of `Q` or of a path of `L`.
pub(crate) fn cleaning_set_from(g: &Graph, allowed: VertexSet, of: &OrderedFrame, q: VertexSet, q_star: VertexSet, l: &LSet) -> VertexSet {
    let outside = allowed - of.frame.vertex_set() - q - l.vertex_set();
    outside & g.neighbors_of(q_star | l.interior())
}

pub fn cleaning_set_for_prism(
    g: &Graph,
    allowed: VertexSet,
    order: &EdgeOrder,
    of: &OrderedFrame,
    c: &PrismContrivance,
) -> Option<VertexSet> {
    let l = reconstruct_l(g, allowed, order, of, c)?;
    Some(cleaning_set_from(g, allowed, of, c.q, c.q_interior(g), &l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nearprism::tests::prism;
    use crate::nearprism::{enumerate_ordered_frames, major_attachments, NearPrism};

    /// The prism plus a vertex joined to the given prism vertices, with the ordered frame of
    /// the prism.
    fn setup(lengths: [usize; 3], nbrs: &[(usize, usize)]) -> (Graph, NearPrism, OrderedFrame, usize) {
        let (g, k) = prism(lengths);
        let x = g.n();
        let g = Graph::new(x + 1, g.edges().iter().copied().chain(nbrs.iter().map(|&(i, j)| (k.paths[i][j], x)))).unwrap();
        let f = k.frame(6).unwrap();
        let of = enumerate_ordered_frames(&g, 6).find(|of| of.frame == f && of.order == [0, 1, 2]).unwrap();
        (g, k, of, x)
    }

    #[test]
    fn first_path_when_x_sees_p1() {
        let (g, k, of, x) = setup([7, 7, 7], &[(0, 3), (1, 4)]);
        let att = major_attachments(&g, &k, x).unwrap();
        let c = PrismContrivance { x, y: x, alpha: k.paths[0][3], h: 1, q: k.paths[0][2..=4].iter().collect() };
        let l = reconstruct_l(&g, g.vertices(), &EdgeOrder::canonical(&g), &of, &c).unwrap();
        assert_eq!(l.vertex_set(), att.l_set);
        assert_eq!(l.vertex_set(), att.a_sets[0]);
    }

    #[test]
    fn frame_path_then_second_path() {
        let (g, k, of, x) = setup([1, 8, 8], &[(1, 4), (2, 4)]);
        let att = major_attachments(&g, &k, x).unwrap();
        let c = PrismContrivance { x, y: x, alpha: k.paths[1][4], h: 2, q: k.paths[1][3..=5].iter().collect() };
        let order = EdgeOrder::canonical(&g);
        let l = reconstruct_l(&g, g.vertices(), &order, &of, &c).unwrap();
        assert_eq!(l.paths[0], k.paths[0]);
        assert_eq!(l.vertex_set(), att.l_set);
        let cleaning = cleaning_set_for_prism(&g, g.vertices(), &order, &of, &c).unwrap();
        assert!(cleaning.contains(x));
        assert!(!cleaning.intersects(&k.vertex_set()));
    }

    #[test]
    fn clean_prism_gets_a_disjoint_set() {
        let (g, k, of, _) = setup([1, 8, 8], &[]);
        let c = PrismContrivance { x: g.n() - 1, y: g.n() - 1, alpha: k.paths[1][4], h: 2, q: k.paths[1][3..=5].iter().collect() };
        let cleaning = cleaning_set_for_prism(&g, g.vertices(), &EdgeOrder::canonical(&g), &of, &c).unwrap();
        assert!(!cleaning.intersects(&k.vertex_set()));
    }

    #[test]
    fn garbage_guesses_are_discarded() {
        let (g, k, of, x) = setup([1, 8, 8], &[(1, 4), (2, 4)]);
        let order = EdgeOrder::canonical(&g);
        let bad_alpha = PrismContrivance { x, y: x, alpha: k.paths[1][3], h: 2, q: k.paths[1][3..=5].iter().collect() };
        assert!(reconstruct_l(&g, g.vertices(), &order, &of, &bad_alpha).is_none());
        let no_s1 = PrismContrivance { h: 1, alpha: k.paths[1][4], ..bad_alpha };
        assert!(reconstruct_l(&g, g.vertices(), &order, &of, &no_s1).is_none());
    }
}
