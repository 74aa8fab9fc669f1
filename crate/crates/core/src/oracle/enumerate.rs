use crate::graph::{Graph, VertexSet};

/// Every chordless cycle of length at least four, once each, listed from its smallest
/// vertex towards the smaller of that vertex's two cycle neighbours.
pub fn chordless_cycles(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for root in 0..g.n() {
        for first in g.neighbors(root).iter().filter(|&v| v > root) {
            let mut path = vec![root, first];
            grow_cycle(g, &mut path, &mut out);
        }
    }
    out
}

fn grow_cycle(g: &Graph, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let root = path[0];
    let last = *path.last().unwrap();
    for c in g.neighbors(last).iter().filter(|&c| c > root) {
        if path.contains(&c) {
            continue;
        }
        // c may touch only `last`, and possibly the root when it closes the cycle.
        let chord = path[1..path.len() - 1].iter().any(|&p| g.adjacent(p, c));
        if chord {
            continue;
        }
        if g.adjacent(c, root) {
            if path.len() >= 3 && path[1] < c {
                let mut cycle = path.clone();
                cycle.push(c);
                out.push(cycle);
            }
        } else {
            path.push(c);
            grow_cycle(g, path, out);
            path.pop();
        }
    }
}

/// Number of vertex subsets inducing a cycle of length at least four (exponential).
pub fn count_holes_by_subsets(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 20, "subset enumeration is limited to 20 vertices");
    let mut count = 0;
    for mask in 0u32..(1 << n) {
        if mask.count_ones() < 4 {
            continue;
        }
        let s: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let two_regular = s.iter().all(|v| (g.neighbors(v) & s).len() == 2);
        if two_regular && connected(g, s) {
            count += 1;
        }
    }
    count
}

pub(crate) fn connected(g: &Graph, s: VertexSet) -> bool {
    let Some(start) = s.first() else { return true };
    let mut seen = VertexSet::singleton(start);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for w in g.neighbors(v) & s {
            if seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen == s
}

/// Every induced path with at most `max_edges` edges, in both orientations (zero-length
/// paths once).
pub fn induced_paths(g: &Graph, max_edges: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for s in 0..g.n() {
        let mut path = vec![s];
        grow_path(g, &mut path, max_edges, &mut out);
    }
    out
}

fn grow_path(g: &Graph, path: &mut Vec<usize>, max_edges: usize, out: &mut Vec<Vec<usize>>) {
    out.push(path.clone());
    if path.len() > max_edges {
        return;
    }
    let last = *path.last().unwrap();
    for c in g.neighbors(last) {
        if path.contains(&c) || path[..path.len() - 1].iter().any(|&p| g.adjacent(p, c)) {
            continue;
        }
        path.push(c);
        grow_path(g, path, max_edges, out);
        path.pop();
    }
}
