use std::collections::HashSet;

use super::contrivance::{cleaning_set_from, join_stub, q_interior, search_region, second_region, LSet};
use super::{detect_clean_lightest_near_prism, enumerate_ordered_frames, FramePart, NearPrism, OrderedFrame};
use crate::budget::Budget;
use crate::configs::check_ell;
use crate::error::Result;
use crate::graph::{visit_linear_forests, EdgeOrder, Graph, LightestTree, VertexSet};

/// Decides whether a prospect contains a long near-prism. On graphs that are not prospects
/// a `Some` answer is still a valid near-prism, but `None` proves nothing.
pub fn detect_long_near_prism(g: &Graph, ell: usize) -> Result<Option<NearPrism>> {
    detect_long_near_prism_with(g, ell, &Budget::unlimited())
}

struct Prepared {
    of: OrderedFrame,
    g1: VertexSet,
    region: VertexSet,
    majors: VertexSet,
}

pub fn detect_long_near_prism_with(g: &Graph, ell: usize, budget: &Budget) -> Result<Option<NearPrism>> {
    search(g, ell, budget, true)
}

/// Runs only the guessed cleaning sets, skipping the empty one.
#[doc(hidden)]
pub fn detect_long_near_prism_by_guesses(g: &Graph, ell: usize) -> Result<Option<NearPrism>> {
    search(g, ell, &Budget::unlimited(), false)
}

fn search(g: &Graph, ell: usize, budget: &Budget, try_empty: bool) -> Result<Option<NearPrism>> {
    check_ell(ell)?;
    let order = EdgeOrder::canonical(g);
    let mut prepared = Vec::new();
    for of in enumerate_ordered_frames(g, ell) {
        budget.check()?;
        if matches!(of.part(1), FramePart::Path(_)) || matches!(of.part(2), FramePart::Path(_)) {
            continue;
        }
        if let Some(p) = prepare(g, of) {
            prepared.push(p);
        }
    }
    for p in prepared.iter().filter(|_| try_empty) {
        budget.check()?;
        if let Some(k) = detect_clean_lightest_near_prism(g, p.g1, &order, &p.of, ell) {
            return Ok(Some(k));
        }
    }
    for p in &prepared {
        if p.majors.is_empty() {
            continue;
        }
        if let Some(k) = guess_contrivances(g, &order, p, ell, budget)? {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Builds `G_1` for the frame and the region a tidy near-prism with this frame must live in.
/// `None` when some stub part cannot be completed.
fn prepare(g: &Graph, of: OrderedFrame) -> Option<Prepared> {
    let frame_set = of.frame.vertex_set();
    let interior = of.frame.interior();
    let g1 = g.vertices() - (g.neighbors_of(interior) - frame_set);
    let mut region = frame_set;
    for k in 0..3 {
        let (Some(s), Some(t)) = (of.s(k), of.t(k)) else { continue };
        let st: VertexSet = [s, t].into_iter().collect();
        let fixed = frame_set - st;
        let free = (g1 - g.closed_neighbors_of(fixed)) | st;
        let comp = g.component_within(free, s);
        if !comp.contains(t) {
            return None;
        }
        region |= comp;
    }
    let majors = (g1 - frame_set)
        .iter()
        .filter(|&v| has_three_independent(g, g.neighbors(v) & region))
        .collect();
    Some(Prepared { of, g1, region, majors })
}

fn has_three_independent(g: &Graph, s: VertexSet) -> bool {
    let vs: Vec<usize> = s.iter().collect();
    for (i, &a) in vs.iter().enumerate() {
        for (j, &b) in vs.iter().enumerate().skip(i + 1) {
            if g.adjacent(a, b) {
                continue;
            }
            if vs[j + 1..].iter().any(|&c| !g.adjacent(a, c) && !g.adjacent(b, c)) {
                return true;
            }
        }
    }
    false
}

/// Tries every contrivance of cost at most `6 ell - 2` for one frame and runs the clean
/// detector after deleting each distinct cleaning set.
fn guess_contrivances(g: &Graph, order: &EdgeOrder, p: &Prepared, ell: usize, budget: &Budget) -> Result<Option<NearPrism>> {
    let max_cost = 6 * ell - 2;
    let candidates: Vec<usize> = p.region.iter().collect();
    let majors: Vec<usize> = p.majors.iter().collect();
    let major_reach = g.neighbors_of(p.majors);
    let mut seen: HashSet<VertexSet> = HashSet::from([VertexSet::new()]);
    let mut found = None;
    let mut q = VertexSet::new();
    let mut visit = |q: VertexSet| -> Result<bool> {
        budget.check()?;
        let q_star = q_interior(g, q);
        if !q_star.intersects(&major_reach) {
            return Ok(false);
        }
        for &x in &majors {
            let alphas = g.neighbors(x) & q_star;
            if q.contains(x) || alphas.is_empty() {
                continue;
            }
            for &y in &majors {
                if q.contains(y) {
                    continue;
                }
                let h = search_region(g, p.g1, &p.of, q, q_star, x, y);
                for l in candidate_ls(g, order, &p.of, h, alphas) {
                    budget.check()?;
                    let x_set = cleaning_set_from(g, p.g1, &p.of, q, q_star, &l);
                    if !seen.insert(x_set) {
                        continue;
                    }
                    if let Some(k) = detect_clean_lightest_near_prism(g, p.g1 - x_set, order, &p.of, ell) {
                        found = Some(k);
                        return Ok(true);
                    }
                }
            }
        }
        Ok(false)
    };
    visit_linear_forests(g, &candidates, 0, &mut q, max_cost, &mut visit)?;
    Ok(found)
}

/// Every `L` obtainable for the given region, over both values of `h` and all `alpha`.
fn candidate_ls(g: &Graph, order: &EdgeOrder, of: &OrderedFrame, h: VertexSet, alphas: VertexSet) -> Vec<LSet> {
    let mut out = Vec::new();
    if let Some(s) = of.s(0) {
        let tree = LightestTree::new(g, order, h, s);
        for a in alphas {
            if let Some(r) = tree.path_to(a) {
                out.push(LSet { paths: vec![join_stub(of, 0, r)] });
            }
        }
    }
    if let (Some((p1, rest)), Some(s)) = (second_region(g, order, of, h), of.s(1)) {
        let tree = LightestTree::new(g, order, rest, s);
        for a in alphas {
            if let Some(r) = tree.path_to(a) {
                out.push(LSet { paths: vec![p1.clone(), join_stub(of, 1, r)] });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::configs::Configuration;
    use crate::nearprism::tests::prism;

    #[test]
    fn finds_planted_prism() {
        let (g, _) = prism([2, 7, 7]);
        let k = detect_long_near_prism(&g, 6).unwrap().unwrap();
        k.validate(&g, 6).unwrap();
    }

    #[test]
    fn triangle_free_graphs_have_none() {
        assert!(detect_long_near_prism(&Graph::cycle(30), 6).unwrap().is_none());
    }

    #[test]
    fn short_prisms_are_rejected() {
        let (g, _) = prism([1, 2, 2]);
        assert!(detect_long_near_prism(&g, 6).unwrap().is_none());
    }
}
