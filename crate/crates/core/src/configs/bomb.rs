use super::{check_ell, BanTheBomb, Configuration};
use crate::budget::Budget;
use crate::configs::tree::three_in_a_tree_within;
use crate::error::{Error, Result};
use crate::graph::{visit_induced_paths_from, Graph, VertexSet, Visit};

/// A long ban-the-bomb. The graph must contain no long theta; if a tree found on a bomb
/// reveals one, [`Error::Precondition`] is returned.
pub fn detect_long_ban_the_bomb(g: &Graph, ell: usize) -> Result<Option<BanTheBomb>> {
    detect_long_ban_the_bomb_with(g, ell, &Budget::unlimited())
}

pub fn detect_long_ban_the_bomb_with(g: &Graph, ell: usize, budget: &Budget) -> Result<Option<BanTheBomb>> {
    check_ell(ell)?;
    let r_len = 2 * ell - 6;
    for q1 in 0..g.n() {
        let mut spines = Vec::new();
        visit_induced_paths_from(g, g.vertices(), q1, r_len, |p| {
            if p.len() - 1 < r_len {
                return Visit::Descend;
            }
            if *p.last().unwrap() > q1 {
                spines.push(p.to_vec());
            }
            Visit::Prune
        });
        for r in &spines {
            if let Some(b) = bombs_on_spine(g, ell, r, budget)? {
                return Ok(Some(b));
            }
        }
    }
    Ok(None)
}

fn bombs_on_spine(g: &Graph, ell: usize, r: &[usize], budget: &Budget) -> Result<Option<BanTheBomb>> {
    let (v1, w, v2) = (r[ell - 4], r[ell - 3], r[ell - 2]);
    let (q1, q2) = (r[0], *r.last().unwrap());
    let spine: VertexSet = r.iter().collect();
    let pair: VertexSet = [v1, v2].into_iter().collect();
    let triple = pair | VertexSet::singleton(w);
    for u in g.vertices() - spine {
        let seen = g.neighbors(u) & spine;
        if seen != pair && seen != triple {
            continue;
        }
        for x in g.neighbors(u) - spine {
            if g.has_neighbor_in(x, spine) {
                continue;
            }
            budget.check()?;
            let leaves: VertexSet = [q1, q2, x].into_iter().collect();
            let mut body = spine | VertexSet::singleton(u);
            body.remove(q1);
            body.remove(q2);
            let allowed = (g.vertices() - g.closed_neighbors_of(body)) | leaves;
            let Some(tree) = three_in_a_tree_within(g, allowed, [q1, q2, x], budget)? else { continue };
            let tree = tree.minimal(g);
            let (t, legs) = tree.legs(g);
            if t != x {
                return Err(Error::Precondition("the graph contains a long theta".into()));
            }
            let mut p1 = legs[0].clone();
            p1.extend(&r[1..=ell - 4]);
            let mut p2 = legs[1].clone();
            p2.extend(r[ell - 2..r.len() - 1].iter().rev());
            let b = BanTheBomb { u, v1, w, v2, x, p1, p2 };
            b.validate(g, ell)?;
            return Ok(Some(b));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// u=0 v1=1 w=2 v2=3 x=4, with P1 and P2 of the given length.
    pub(crate) fn bomb_graph(len: usize, uw: bool) -> Graph {
        let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)];
        if uw {
            edges.push((0, 2));
        }
        let mut next = 5;
        for end in [1, 3] {
            let mut prev = 4;
            for _ in 0..len - 1 {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
            edges.push((prev, end));
        }
        Graph::new(next, edges).unwrap()
    }

    #[test]
    fn finds_long_ban_the_bomb() {
        for uw in [false, true] {
            let g = bomb_graph(4, uw);
            let b = detect_long_ban_the_bomb(&g, 6).unwrap().unwrap();
            b.validate(&g, 6).unwrap();
        }
    }

    #[test]
    fn short_arms_and_cycles_have_none() {
        assert!(detect_long_ban_the_bomb(&bomb_graph(2, false), 6).unwrap().is_none());
        assert!(detect_long_ban_the_bomb(&Graph::cycle(20), 6).unwrap().is_none());
    }
}
