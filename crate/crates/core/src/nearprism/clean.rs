use super::{NearPrism, OrderedFrame};
use crate::configs::Configuration;
use crate::graph::{lightest_path_within, EdgeOrder, Graph, VertexSet};

/// Joins the frame by lightest `s_k`-`t_k` paths taken in order, each later search avoiding
/// the closed neighbourhood of the earlier ones, inside `allowed`. Returns the result if it
/// is a long near-prism of `g`.
pub fn detect_clean_lightest_near_prism(
    g: &Graph,
    allowed: VertexSet,
    order: &EdgeOrder,
    of: &OrderedFrame,
    ell: usize,
) -> Option<NearPrism> {
    let frame = &of.frame;
    let ends = frame.ends();
    let w0 = allowed & g.closed_neighbors_of(frame.interior()) - ends;
    let mut avail = allowed - w0;
    let mut paths: [Vec<usize>; 3] = Default::default();
    for k in 0..3 {
        let middle = match (of.s(k), of.t(k)) {
            (Some(s), Some(t)) => {
                let m = lightest_path_within(g, order, avail, s, t)?;
                avail = avail - g.closed_neighbors_of(m.iter().collect());
                Some(m)
            }
            _ => None,
        };
        paths[k] = of.complete_part(k, middle.as_deref());
    }
    let k = NearPrism { a: [0, 1, 2].map(|k| of.a(k)), b: [0, 1, 2].map(|k| of.b(k)), paths };
    k.validate(g, ell).ok().map(|_| k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nearprism::enumerate_ordered_frames;
    use crate::nearprism::tests::prism;

    fn recovers(g: &Graph, k: &NearPrism) -> bool {
        let order = EdgeOrder::canonical(g);
        let f = k.frame(6).unwrap();
        enumerate_ordered_frames(g, 6)
            .filter(|of| of.frame == f)
            .filter_map(|of| detect_clean_lightest_near_prism(g, g.vertices(), &order, &of, 6))
            .any(|found| found.vertex_set() == k.vertex_set())
    }

    #[test]
    fn recovers_a_bare_prism() {
        let (g, k) = prism([2, 7, 7]);
        assert!(recovers(&g, &k));
    }

    #[test]
    fn recovers_with_pendant_on_an_end() {
        let (g, k) = prism([2, 7, 7]);
        let s = k.paths[1][2];
        let g2 = Graph::new(g.n() + 1, g.edges().iter().copied().chain([(s, g.n())])).unwrap();
        assert!(recovers(&g2, &k));
    }

    #[test]
    fn disconnected_ends_fail() {
        let (g, k) = prism([2, 7, 7]);
        let p = &k.paths[2];
        let cut = g.without_edge(p[3], p[4]);
        let order = EdgeOrder::canonical(&cut);
        let f = k.frame(6).unwrap();
        for of in enumerate_ordered_frames(&cut, 6).filter(|of| of.frame == f) {
            assert!(detect_clean_lightest_near_prism(&cut, cut.vertices(), &order, &of, 6).is_none());
        }
    }
}
