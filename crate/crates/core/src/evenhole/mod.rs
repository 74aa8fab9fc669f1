//! Major vertices of holes, the clean lightest long even hole detector, cleaning lists, and
//! the full decision procedure.

mod cleaning;
mod pipeline;

pub use cleaning::{cleaning_list, cleaning_list_with, cleaning_set_for_hole, for_each_cleaning_set, CleaningList, HoleContrivance};
pub use pipeline::{detect_long_even_hole, run_pipeline, Detection, PipelineOptions, Stage};

use crate::error::{Error, Result};
use crate::graph::{is_hole, is_major, EdgeOrder, Graph, Hole, LightestTree, VertexSet};

/// Whether `v` is major for the hole: no three consecutive vertices of the hole cover its
/// neighbours on it.
pub fn is_c_major(g: &Graph, c: &Hole, v: usize) -> Result<bool> {
    g.check_vertex(v)?;
    let s = c.vertex_set();
    if s.contains(v) {
        return Err(Error::InvalidParameter(format!("vertex {v} lies on the hole")));
    }
    Ok(is_major(g, s, v))
}

/// Looks for a long even hole made of three lightest paths between three vertices of
/// `allowed`. Finds every clean lightest long even hole of a candidate.
pub fn detect_clean_lightest_long_even_hole(g: &Graph, allowed: VertexSet, order: &EdgeOrder, ell: usize) -> Option<Hole> {
    let vs: Vec<usize> = allowed.iter().collect();
    let mut paths: Vec<Vec<Option<(Vec<usize>, VertexSet)>>> = vec![vec![None; g.n()]; g.n()];
    for &u in &vs {
        let tree = LightestTree::new(g, order, allowed, u);
        for &v in vs.iter().filter(|&&v| v > u) {
            if let Some(p) = tree.path_to(v) {
                let set = p.iter().collect();
                paths[u][v] = Some((p, set));
            }
        }
    }
    let get = |u: usize, v: usize| paths[u][v].as_ref();
    for (i, &v1) in vs.iter().enumerate() {
        for (j, &v2) in vs.iter().enumerate().skip(i + 1) {
            let Some((p12, s12)) = get(v1, v2) else { continue };
            for &v3 in &vs[j + 1..] {
                let (Some((p23, s23)), Some((p13, s13))) = (get(v2, v3), get(v1, v3)) else { continue };
                let len = p12.len() + p23.len() + p13.len() - 3;
                if len < ell || len % 2 == 1 {
                    continue;
                }
                if (*s12 & *s23).len() != 1 || (*s23 & *s13).len() != 1 || (*s12 & *s13).len() != 1 {
                    continue;
                }
                let mut cycle = p12.clone();
                cycle.extend_from_slice(&p23[1..]);
                cycle.extend(p13[1..p13.len() - 1].iter().rev());
                if is_hole(g, &cycle) {
                    return Some(Hole::new(g, cycle).expect("checked hole"));
                }
            }
        }
    }
    None
}
