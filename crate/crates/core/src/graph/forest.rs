use super::{Graph, VertexSet};
use crate::error::Result;

/// Visits every nonempty subset of `cands` (in canonical order) of size at most `max` that
/// induces a linear forest. Stops when the visitor returns `true`.
pub(crate) fn visit_linear_forests<F>(g: &Graph, cands: &[usize], from: usize, q: &mut VertexSet, max: usize, f: &mut F) -> Result<bool>
where
    F: FnMut(VertexSet) -> Result<bool>,
{
    if q.len() == max {
        return Ok(false);
    }
    for i in from..cands.len() {
        let v = cands[i];
        let nbrs = g.neighbors(v) & *q;
        if nbrs.len() > 2 || nbrs.iter().any(|w| (g.neighbors(w) & *q).len() >= 2) {
            continue;
        }
        if nbrs.len() == 2 {
            let mut it = nbrs.iter();
            let (w1, w2) = (it.next().unwrap(), it.next().unwrap());
            if g.component_within(*q, w1).contains(w2) {
                continue;
            }
        }
        q.insert(v);
        let stop = f(*q)? || visit_linear_forests(g, cands, i + 1, q, max, f)?;
        q.remove(v);
        if stop {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_forest_count_on_a_triangle_and_path() {
        let g = Graph::cycle(3);
        let mut n = 0;
        visit_linear_forests(&g, &[0, 1, 2], 0, &mut VertexSet::new(), 10, &mut |_| { n += 1; Ok(false) }).unwrap();
        assert_eq!(n, 6);
        let g = Graph::path(4);
        let mut n = 0;
        visit_linear_forests(&g, &[0, 1, 2, 3], 0, &mut VertexSet::new(), 10, &mut |_| { n += 1; Ok(false) }).unwrap();
        assert_eq!(n, 15);
    }
}
