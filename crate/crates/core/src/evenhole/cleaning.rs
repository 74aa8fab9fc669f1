use std::collections::HashSet;
use std::ops::ControlFlow;

use crate::budget::Budget;
use crate::error::Result;
use crate::graph::{is_induced_path, visit_linear_forests, EdgeOrder, Graph, LightestTree, VertexSet};

/// A guessed six-tuple `(x, y, p1, p2, m, Q)`; `q` is the vertex set of the linear forest
/// whose components are the paths of `Q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HoleContrivance {
    pub x: usize,
    pub y: usize,
    pub p1: usize,
    pub p2: usize,
    pub m: usize,
    pub q: VertexSet,
}

impl HoleContrivance {
    pub fn cost(&self) -> usize {
        self.q.len()
    }
}

/// Distinct cleaning sets in the order they were first produced.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CleaningList {
    pub sets: Vec<VertexSet>,
}

fn q_interior(g: &Graph, q: VertexSet) -> VertexSet {
    q.iter().filter(|&v| (g.neighbors(v) & q).len() == 2).collect()
}

/// The set produced by one guess, or `None` when the guess is discarded.
pub fn cleaning_set_for_hole(g: &Graph, order: &EdgeOrder, c: &HoleContrivance) -> Option<VertexSet> {
    let q_star = q_interior(g, c.q);
    if c.q.contains(c.x) || c.q.contains(c.y) || !c.q.contains(c.p1) || !c.q.contains(c.p2) {
        return None;
    }
    if !g.has_neighbor_in(c.x, q_star) || !g.has_neighbor_in(c.y, q_star) {
        return None;
    }
    let xy: VertexSet = [c.x, c.y].into_iter().collect();
    let z1 = g.neighbors_of(q_star) - c.q;
    let z2 = g.neighbors_of(xy) - c.q - VertexSet::singleton(c.m);
    let region = g.vertices() - z1 - z2;
    let r = LightestTree::new(g, order, region, c.p1).path_to(c.m)?;
    let s = LightestTree::new(g, order, region, c.p2).path_to(c.m)?;
    let p = join(&r, &s);
    if !is_induced_path(g, &p) {
        return None;
    }
    Some(z1 | z3(g, q_star, xy, &p))
}

/// `r` from `p1` to `m` followed by `s` walked back from `m` to `p2`.
fn join(r: &[usize], s: &[usize]) -> Vec<usize> {
    let mut p = r.to_vec();
    p.extend(s[..s.len() - 1].iter().rev());
    p
}

fn z3(g: &Graph, q_star: VertexSet, xy: VertexSet, p: &[usize]) -> VertexSet {
    let inner: VertexSet = p[1..p.len() - 1].iter().collect();
    (g.neighbors_of(xy) & g.neighbors_of(inner)) - q_star
}

/// Whether `v` has three pairwise non-adjacent neighbours, as every major vertex of a
/// shortest long even hole in a candidate does.
fn has_three_independent(g: &Graph, within: VertexSet, v: usize) -> bool {
    let vs: Vec<usize> = (g.neighbors(v) & within).iter().collect();
    for (i, &a) in vs.iter().enumerate() {
        for (j, &b) in vs.iter().enumerate().skip(i + 1) {
            if !g.adjacent(a, b) && vs[j + 1..].iter().any(|&c| !g.adjacent(a, c) && !g.adjacent(b, c)) {
                return true;
            }
        }
    }
    false
}

/// Emits every distinct cleaning set of a candidate inside `within`, first the neighbourhoods
/// of middle vertices of induced three-vertex paths, then the sets from contrivances of cost
/// at most `4 ell - 4`. Stops when `f` breaks.
pub fn for_each_cleaning_set<F>(g: &Graph, within: VertexSet, order: &EdgeOrder, ell: usize, budget: &Budget, mut f: F) -> Result<()>
where
    F: FnMut(VertexSet) -> ControlFlow<()>,
{
    let mut seen = HashSet::new();
    let mut emit = |x: VertexSet| -> ControlFlow<()> {
        if seen.insert(x) { f(x) } else { ControlFlow::Continue(()) }
    };
    for y in within {
        let nbrs = g.neighbors(y) & within;
        for x in nbrs {
            for z in nbrs.iter().filter(|&z| z > x && !g.adjacent(x, z)) {
                budget.check()?;
                let out = nbrs - [x, z].into_iter().collect();
                if emit(out).is_break() {
                    return Ok(());
                }
            }
        }
    }
    let majors: Vec<usize> = within.iter().filter(|&v| has_three_independent(g, within, v)).collect();
    if majors.is_empty() {
        return Ok(());
    }
    let major_set: VertexSet = majors.iter().copied().collect();
    let cands: Vec<usize> = within.iter().collect();
    let mut q = VertexSet::new();
    let mut visit = |q: VertexSet| -> Result<bool> {
        budget.check()?;
        let q_star = q_interior(g, q);
        if (g.neighbors_of(major_set) & q_star).len() < 2 {
            return Ok(false);
        }
        let z1 = (g.neighbors_of(q_star) & within) - q;
        for &x in &majors {
            let ends: Vec<usize> = (g.neighbors(x) & q_star).iter().collect();
            if q.contains(x) || ends.len() < 2 {
                continue;
            }
            for &y in &majors {
                if q.contains(y) || !g.has_neighbor_in(y, q_star) {
                    continue;
                }
                let xy: VertexSet = [x, y].into_iter().collect();
                let z2 = (g.neighbors_of(xy) & within) - q;
                let base = within - z1 - z2;
                let trees: Vec<LightestTree> = ends.iter().map(|&p| LightestTree::new(g, order, base, p)).collect();
                let mids = within - z1 - g.closed_neighbors_of(VertexSet::singleton(x));
                for m in mids {
                    budget.check()?;
                    let near_y = z2.contains(m);
                    let local: Vec<LightestTree> = if near_y {
                        let region = base | VertexSet::singleton(m);
                        ends.iter().map(|&p| LightestTree::new(g, order, region, p)).collect()
                    } else {
                        Vec::new()
                    };
                    let pick = |i: usize| if near_y { &local[i] } else { &trees[i] };
                    for i in 0..ends.len() {
                        let Some(r) = pick(i).path_to(m) else { continue };
                        for j in i + 1..ends.len() {
                            if g.adjacent(ends[i], ends[j]) {
                                continue;
                            }
                            let Some(s) = pick(j).path_to(m) else { continue };
                            if r.len().abs_diff(s.len()) > 1 {
                                continue;
                            }
                            let p = join(&r, &s);
                            if !is_induced_path(g, &p) {
                                continue;
                            }
                            let x_set = z1 | (z3(g, q_star, xy, &p) & within);
                            if emit(x_set).is_break() {
                                return Ok(true);
                            }
                        }
                    }
                }
            }
        }
        Ok(false)
    };
    visit_linear_forests(g, &cands, 0, &mut q, 4 * ell - 4, &mut visit)?;
    Ok(())
}

pub fn cleaning_list(g: &Graph, order: &EdgeOrder, ell: usize) -> Result<CleaningList> {
    cleaning_list_with(g, order, ell, &Budget::unlimited())
}

pub fn cleaning_list_with(g: &Graph, order: &EdgeOrder, ell: usize, budget: &Budget) -> Result<CleaningList> {
    crate::configs::check_ell(ell)?;
    let mut sets = Vec::new();
    for_each_cleaning_set(g, g.vertices(), order, ell, budget, |x| {
        sets.push(x);
        ControlFlow::Continue(())
    })?;
    Ok(CleaningList { sets })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_lists_the_empty_set() {
        let g = Graph::cycle(14);
        let list = cleaning_list(&g, &EdgeOrder::canonical(&g), 6).unwrap();
        assert!(list.sets.contains(&VertexSet::new()));
    }

    #[test]
    fn apex_is_cleaned() {
        let c = Graph::cycle(14);
        let g = Graph::new(15, c.edges().iter().copied().chain((0..14).map(|v| (v, 14)))).unwrap();
        let list = cleaning_list(&g, &EdgeOrder::canonical(&g), 6).unwrap();
        assert!(list.sets.iter().any(|x| x.contains(14) && !x.intersects(&VertexSet::full(14))));
    }

    #[test]
    fn edgeless_graph_has_an_empty_list() {
        let g = Graph::empty(5);
        assert!(cleaning_list(&g, &EdgeOrder::canonical(&g), 6).unwrap().sets.is_empty());
    }

    #[test]
    fn single_guess_on_a_cycle_with_a_major_vertex() {
        // x sees 0 and 4 on a 14-cycle, the gap 0..4 has midpoint 2
        let c = Graph::cycle(14);
        let g = Graph::new(15, c.edges().iter().copied().chain([(0, 14), (4, 14), (9, 14)])).unwrap();
        let order = EdgeOrder::canonical(&g);
        let q: VertexSet = [13, 0, 1, 3, 4, 5].into_iter().collect();
        let guess = HoleContrivance { x: 14, y: 14, p1: 0, p2: 4, m: 2, q };
        let x = cleaning_set_for_hole(&g, &order, &guess).unwrap();
        assert!(x.contains(14));
        assert!(!x.intersects(&VertexSet::full(14)));
    }
}
