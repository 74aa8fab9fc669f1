use super::check_ell;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Graph, Hole, VertexSet};

/// An even hole with length between `ell` and `k` inclusive, if one exists.
pub fn detect_bounded_long_even_hole(g: &Graph, ell: usize, k: usize) -> Result<Option<Hole>> {
    detect_bounded_long_even_hole_with(g, ell, k, &Budget::unlimited())
}

pub fn detect_bounded_long_even_hole_with(
    g: &Graph,
    ell: usize,
    k: usize,
    budget: &Budget,
) -> Result<Option<Hole>> {
    check_ell(ell)?;
    if k < ell {
        return Err(Error::InvalidParameter(format!("k = {k} is below l = {ell}")));
    }
    let mut search = Search { g, ell, k, budget, path: Vec::new() };
    for root in 0..g.n() {
        let later = g.vertices() - VertexSet::full(root + 1);
        for v1 in g.neighbors(root) & later {
            search.path = vec![root, v1];
            if let Some(h) = search.extend(later, VertexSet::new())? {
                return Ok(Some(Hole::new(g, h)?));
            }
        }
    }
    Ok(None)
}

/// Cycles are rooted at their smallest vertex; the path grows from the root and closes
/// when the new vertex is adjacent to the root.
struct Search<'a> {
    g: &'a Graph,
    ell: usize,
    k: usize,
    budget: &'a Budget,
    path: Vec<usize>,
}

impl Search<'_> {
    /// `blocked` holds the inner path vertices and their neighbours.
    fn extend(&mut self, later: VertexSet, blocked: VertexSet) -> Result<Option<Vec<usize>>> {
        self.budget.check()?;
        let g = self.g;
        let root = self.path[0];
        let last = *self.path.last().unwrap();
        let inner_blocked = if self.path.len() > 2 {
            let prev = self.path[self.path.len() - 2];
            blocked | g.neighbors(prev) | VertexSet::singleton(prev)
        } else {
            blocked
        };
        for c in g.neighbors(last) & later - inner_blocked {
            if c == self.path[self.path.len() - 2] {
                continue;
            }
            if g.adjacent(c, root) {
                let len = self.path.len() + 1;
                if len >= 4 && len % 2 == 0 && len >= self.ell && len <= self.k {
                    let mut cycle = self.path.clone();
                    cycle.push(c);
                    return Ok(Some(cycle));
                }
            } else if self.path.len() + 2 <= self.k {
                self.path.push(c);
                let found = self.extend(later, inner_blocked)?;
                self.path.pop();
                if found.is_some() {
                    return Ok(found);
                }
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles() {
        let h = detect_bounded_long_even_hole(&Graph::cycle(8), 6, 12).unwrap().unwrap();
        assert_eq!(h.len(), 8);
        assert!(detect_bounded_long_even_hole(&Graph::cycle(14), 6, 12).unwrap().is_none());
        assert!(detect_bounded_long_even_hole(&Graph::cycle(7), 6, 12).unwrap().is_none());
    }

    #[test]
    fn antipodal_chord_kills_the_octagon() {
        let g = Graph::new(8, (0..8).map(|i| (i, (i + 1) % 8)).chain([(0, 4)])).unwrap();
        assert!(detect_bounded_long_even_hole(&g, 6, 12).unwrap().is_none());
    }

    #[test]
    fn parameter_checks() {
        let g = Graph::cycle(6);
        assert!(detect_bounded_long_even_hole(&g, 5, 12).is_err());
        assert!(detect_bounded_long_even_hole(&g, 4, 12).is_err());
        assert!(detect_bounded_long_even_hole(&g, 6, 5).is_err());
    }
}
