use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A vertex set inducing a tree that contains three terminals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedTree {
    pub vertices: VertexSet,
    pub terminals: [usize; 3],
}

impl InducedTree {
    pub fn is_valid(&self, g: &Graph) -> bool {
        let s = self.vertices;
        !s.is_empty()
            && self.terminals.iter().all(|&t| s.contains(t))
            && g.induced_edge_count(s) + 1 == s.len()
            && g.component_within(s, self.terminals[0]) == s
    }

    /// The smallest subtree containing the terminals. It is either a path through all
    /// three or a subdivided claw with the terminals as leaves.
    pub fn minimal(&self, g: &Graph) -> InducedTree {
        let mut s = self.vertices;
        loop {
            let leaf = s
                .iter()
                .find(|&v| !self.terminals.contains(&v) && (g.neighbors(v) & s).len() <= 1);
            match leaf {
                Some(v) => {
                    s.remove(v);
                }
                None => return InducedTree { vertices: s, terminals: self.terminals },
            }
        }
    }

    /// For a minimal tree: its branch vertex (a terminal when the tree is a path) and the
    /// path from that vertex to each terminal in turn.
    pub fn legs(&self, g: &Graph) -> (usize, [Vec<usize>; 3]) {
        let s = self.vertices;
        let center = s
            .iter()
            .find(|&v| (g.neighbors(v) & s).len() >= 3)
            .or_else(|| self.terminals.iter().copied().find(|&t| (g.neighbors(t) & s).len() == 2))
            .unwrap_or(self.terminals[0]);
        let legs = self.terminals.map(|t| {
            g.shortest_path_within(s, center, t).expect("tree is connected")
        });
        (center, legs)
    }
}

/// An induced tree of `g` containing `v1`, `v2` and `v3`, if one exists.
pub fn three_in_a_tree(g: &Graph, v1: usize, v2: usize, v3: usize) -> Result<Option<InducedTree>> {
    three_in_a_tree_within(g, g.vertices(), [v1, v2, v3], &Budget::unlimited())
}

/// As [`three_in_a_tree`], restricted to the subgraph induced on `allowed`.
pub fn three_in_a_tree_within(
    g: &Graph,
    allowed: VertexSet,
    terminals: [usize; 3],
    budget: &Budget,
) -> Result<Option<InducedTree>> {
    for &t in &terminals {
        g.check_vertex(t)?;
    }
    let [a, b, c] = terminals;
    if a == b || b == c || a == c {
        return Err(Error::InvalidParameter("three-in-a-tree terminals must be distinct".into()));
    }
    if !terminals.iter().all(|&t| allowed.contains(t)) {
        return Ok(None);
    }
    let goal: VertexSet = terminals.into_iter().collect();
    let found = grow(g, allowed, VertexSet::singleton(a), VertexSet::new(), goal, budget)?;
    Ok(found.map(|vertices| InducedTree { vertices, terminals }))
}

/// Branch and bound over induced trees containing `tree`. Vertices with two neighbours in
/// the tree can never join it; `excluded` holds vertices rejected by earlier branches.
fn grow(
    g: &Graph,
    allowed: VertexSet,
    tree: VertexSet,
    excluded: VertexSet,
    goal: VertexSet,
    budget: &Budget,
) -> Result<Option<VertexSet>> {
    budget.check()?;
    if goal.is_subset(&tree) {
        return Ok(Some(tree));
    }
    let boundary = g.neighbors_of(tree) - tree;
    let mut dead = VertexSet::new();
    for v in boundary {
        if (g.neighbors(v) & tree).len() >= 2 {
            dead.insert(v);
        }
    }
    let avail = allowed - tree - excluded - dead;
    let missing = goal - tree;
    if !missing.is_subset(&avail) {
        return Ok(None);
    }
    // Breadth-first search from the tree through available vertices; stop at the first
    // missing terminal and step back to its tree-adjacent ancestor.
    let mut parent = vec![usize::MAX; g.n()];
    let mut layer = tree;
    let mut seen = tree;
    let mut hit = None;
    while hit.is_none() && !layer.is_empty() {
        let mut next = VertexSet::new();
        for u in layer {
            for v in g.neighbors(u) & avail - seen - next {
                parent[v] = u;
                next.insert(v);
            }
        }
        hit = (next & missing).first();
        seen |= next;
        layer = next;
    }
    // Every missing terminal must be reachable.
    let reach = {
        let mut r = seen;
        let mut frontier = layer;
        while !frontier.is_empty() {
            frontier = g.neighbors_of(frontier) & avail - r;
            r |= frontier;
        }
        r
    };
    let Some(mut c) = hit else { return Ok(None) };
    if !missing.is_subset(&reach) {
        return Ok(None);
    }
    while !tree.contains(parent[c]) {
        c = parent[c];
    }
    let mut with = tree;
    with.insert(c);
    if let Some(t) = grow(g, allowed, with, excluded, goal, budget)? {
        return Ok(Some(t));
    }
    if goal.contains(c) {
        return Ok(None);
    }
    let mut without = excluded;
    without.insert(c);
    grow(g, allowed, tree, without, goal, budget)
}
