use std::collections::BTreeMap;

use super::Jewel;
use crate::budget::Budget;
use crate::error::Result;
use crate::fault::{self, Fault};
use crate::graph::{anticomplete, visit_induced_paths_from, Graph, VertexSet, Visit};

/// A long jewel of order at most `k` (both same-ended paths have at most `k` vertices).
pub fn detect_long_jewel(g: &Graph, ell: usize, k: usize) -> Result<Option<Jewel>> {
    detect_long_jewel_with(g, ell, k, &Budget::unlimited())
}

pub fn detect_long_jewel_with(g: &Graph, ell: usize, k: usize, budget: &Budget) -> Result<Option<Jewel>> {
    if k < 2 {
        return Ok(None);
    }
    // Induced paths with at most k vertices and at least one edge, grouped by ordered ends.
    let mut by_ends: BTreeMap<(usize, usize), Vec<Vec<usize>>> = BTreeMap::new();
    for s in 0..g.n() {
        visit_induced_paths_from(g, g.vertices(), s, k - 1, |p| {
            if p.len() >= 2 {
                by_ends.entry((s, *p.last().unwrap())).or_default().push(p.to_vec());
            }
            Visit::Descend
        });
    }
    let ignore_parity = fault::active(Fault::JewelIgnoresParity);
    for (&(u, v), paths) in &by_ends {
        for (i, q1) in paths.iter().enumerate() {
            for q2 in &paths[i + 1..] {
                if q1.len() % 2 == q2.len() % 2 && !ignore_parity {
                    continue;
                }
                budget.check()?;
                if let Some(p) = connect(g, ell, u, v, q1, q2, budget)? {
                    return Ok(Some(Jewel { q1: q1.clone(), q2: q2.clone(), p }));
                }
            }
        }
    }
    Ok(None)
}

/// Tries every start segment `R` from `u` and then any path from its far end `w` to `v`
/// through vertices away from the fixed part.
fn connect(
    g: &Graph,
    ell: usize,
    u: usize,
    v: usize,
    q1: &[usize],
    q2: &[usize],
    budget: &Budget,
) -> Result<Option<Vec<usize>>> {
    let min = (q1.len() - 1).min(q2.len() - 1);
    let r_len = (ell as isize - min as isize - 2).max(0) as usize;
    let qs: VertexSet = q1.iter().chain(q2).collect();
    let mut q_minus_u = qs;
    q_minus_u.remove(u);
    let allowed = g.vertices() - qs - g.neighbors_of(q_minus_u);
    let mut result = None;
    let mut err = None;
    visit_induced_paths_from(g, allowed, u, r_len, |r| {
        if r.len() - 1 < r_len {
            return Visit::Descend;
        }
        if let Err(e) = budget.check() {
            err = Some(e);
            return Visit::Stop;
        }
        let rest: VertexSet = r[1..].iter().collect();
        if !anticomplete(g, rest, q_minus_u) {
            return Visit::Prune;
        }
        let w = *r.last().unwrap();
        let mut fixed: VertexSet = qs | r.iter().collect();
        fixed.remove(v);
        fixed.remove(w);
        let x = g.vertices() - fixed - g.neighbors_of(fixed);
        let mut region = x;
        region.insert(w);
        region.insert(v);
        if let Some(tail) = g.shortest_path_within(region, w, v) {
            let mut p = r.to_vec();
            p.extend(&tail[1..]);
            result = Some(p);
            return Visit::Stop;
        }
        Visit::Prune
    });
    match err {
        Some(e) => Err(e),
        None => Ok(result),
    }
}
