use super::{check_ell, Claw, Configuration, Theta};
use crate::budget::Budget;
use crate::configs::tree::three_in_a_tree_within;
use crate::error::Result;
use crate::fault::{self, Fault};
use crate::graph::{anticomplete, visit_induced_paths_from, Graph, VertexSet, Visit};

/// A long theta, found by extending induced claws with an induced tree on their tips.
pub fn detect_long_theta(g: &Graph, ell: usize) -> Result<Option<Theta>> {
    detect_long_theta_with(g, ell, &Budget::unlimited())
}

pub fn detect_long_theta_with(g: &Graph, ell: usize, budget: &Budget) -> Result<Option<Theta>> {
    check_ell(ell)?;
    let shapes = arm_lengths(ell);
    let longest = shapes.iter().map(|s| s[2]).max().unwrap_or(0);
    for a in 0..g.n() {
        // arms[k] = induced paths of exactly k edges starting at a
        let mut arms: Vec<Vec<Vec<usize>>> = vec![Vec::new(); longest + 1];
        visit_induced_paths_from(g, g.vertices(), a, longest, |p| {
            arms[p.len() - 1].push(p.to_vec());
            Visit::Descend
        });
        for shape in &shapes {
            if let Some(theta) = claws_of_shape(g, ell, a, &arms, *shape, budget)? {
                return Ok(Some(theta));
            }
        }
    }
    Ok(None)
}

/// Nondecreasing arm-length triples `k1 <= k2 <= k3` with each arm at least 2, each pair
/// summing to at least `ell - 2` and the total at most `2 ell - 6`.
fn arm_lengths(ell: usize) -> Vec<[usize; 3]> {
    let (min_arm, min_pair) = if fault::active(Fault::ThetaShortArms) { (2, ell - 1) } else { (2, ell - 2) };
    let max_total = 2 * ell - 6;
    let mut out = Vec::new();
    for k1 in min_arm..=max_total {
        for k2 in k1..=max_total {
            for k3 in k2..=max_total {
                if k1 + k2 >= min_pair && k1 + k2 + k3 <= max_total {
                    out.push([k1, k2, k3]);
                }
            }
        }
    }
    out
}

fn claws_of_shape(
    g: &Graph,
    ell: usize,
    a: usize,
    arms: &[Vec<Vec<usize>>],
    [k1, k2, k3]: [usize; 3],
    budget: &Budget,
) -> Result<Option<Theta>> {
    let rest = |p: &Vec<usize>| -> VertexSet { p[1..].iter().collect() };
    for (i1, arm1) in arms[k1].iter().enumerate() {
        let r1 = rest(arm1);
        let start2 = if k2 == k1 { i1 + 1 } else { 0 };
        for (i2, arm2) in arms[k2].iter().enumerate().skip(start2) {
            let r2 = rest(arm2);
            if !anticomplete(g, r1, r2) {
                continue;
            }
            let start3 = if k3 == k2 { i2 + 1 } else { 0 };
            for arm3 in arms[k3].iter().skip(start3) {
                let r3 = rest(arm3);
                if !anticomplete(g, r1 | r2, r3) {
                    continue;
                }
                budget.check()?;
                let claw = Claw { center: a, arms: [arm1.clone(), arm2.clone(), arm3.clone()] };
                if let Some(theta) = extend_claw(g, ell, &claw, budget)? {
                    return Ok(Some(theta));
                }
            }
        }
    }
    Ok(None)
}

fn extend_claw(g: &Graph, ell: usize, claw: &Claw, budget: &Budget) -> Result<Option<Theta>> {
    let tips = claw.tips();
    let tip_set: VertexSet = tips.into_iter().collect();
    let body = claw.vertex_set() - tip_set;
    let allowed = (g.vertices() - g.closed_neighbors_of(body)) | tip_set;
    let Some(tree) = three_in_a_tree_within(g, allowed, tips, budget)? else { return Ok(None) };
    let tree = tree.minimal(g);
    let (t, legs) = tree.legs(g);
    let paths = [0, 1, 2].map(|i| {
        let mut p = claw.arms[i].clone();
        p.extend(legs[i].iter().rev().skip(1));
        p
    });
    let theta = Theta { u: claw.center, v: t, paths };
    theta.validate(g, ell)?;
    Ok(Some(theta))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theta_graph(lengths: [usize; 3]) -> Graph {
        let mut edges = Vec::new();
        let mut next = 2;
        for len in lengths {
            let mut prev = 0;
            for _ in 0..len - 1 {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
            edges.push((prev, 1));
        }
        Graph::new(next, edges).unwrap()
    }

    #[test]
    fn arm_shapes() {
        assert_eq!(arm_lengths(6), vec![[2, 2, 2]]);
        assert!(arm_lengths(8).contains(&[3, 3, 4]));
        assert!(!arm_lengths(8).contains(&[2, 3, 5]));
    }

    #[test]
    fn finds_the_three_threes() {
        let g = theta_graph([3, 3, 3]);
        let t = detect_long_theta(&g, 6).unwrap().unwrap();
        t.validate(&g, 6).unwrap();
    }

    #[test]
    fn short_or_absent_thetas() {
        assert!(detect_long_theta(&theta_graph([2, 2, 2]), 6).unwrap().is_none());
        assert!(detect_long_theta(&Graph::cycle(20), 6).unwrap().is_none());
        assert!(detect_long_theta(&theta_graph([3, 3, 3]), 8).unwrap().is_none());
        assert!(detect_long_theta(&theta_graph([4, 4, 5]), 8).unwrap().is_some());
    }
}
