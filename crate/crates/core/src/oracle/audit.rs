//! Checks structural lemmas on extremal objects found by brute force. On a correct
//! implementation of the definitions every check passes, so any finding points at a bug.

use std::collections::BTreeMap;

use serde::Serialize;

use super::configs::{all_long_near_prisms, is_candidate, is_prospect, OracleNearPrism};
use super::enumerate::chordless_cycles;
use super::cycle_weight;
use crate::graph::{is_major, EdgeOrder, Graph, PathWeight, VertexSet};

/// At most this many shortest holes or near-prisms are audited per graph.
const MAX_OBJECTS: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Lemma {
    /// A major vertex of a shortest long even hole in a candidate has three pairwise
    /// non-adjacent neighbours on it and two neighbours off every three-vertex subpath.
    Triad,
    /// A shortest long even hole in a candidate has no shortcut.
    Shortcuts,
    /// Short arcs of a lightest long even hole are lightest paths avoiding major vertices.
    LexEasyReroute,
    /// A major vertex of a tidy shortest long near-prism sees two constituent paths.
    TwoPaths,
    /// A major vertex missing one constituent path sees another in one vertex or in two
    /// non-adjacent vertices.
    NoTwoHat,
    /// A major vertex of a tidy shortest long near-prism (no long theta) has three pairwise
    /// non-adjacent neighbours on it.
    ThreePairwiseNonadjacent,
    /// No short path free of major interior vertices jumps between two constituent paths
    /// while missing the third.
    PrismJump,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditFinding {
    pub lemma: Lemma,
    pub witness: Vec<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub prospect: bool,
    pub candidate: bool,
    /// How many objects (vertices, pairs or paths) each lemma was checked on.
    pub checked: BTreeMap<Lemma, usize>,
    pub findings: Vec<AuditFinding>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.findings.is_empty()
    }

    fn tick(&mut self, lemma: Lemma) {
        *self.checked.entry(lemma).or_insert(0) += 1;
    }

    fn flag(&mut self, lemma: Lemma, witness: Vec<usize>, detail: String) {
        self.findings.push(AuditFinding { lemma, witness, detail });
    }
}

pub fn audit_lemmas(g: &Graph, order: &EdgeOrder, ell: usize) -> AuditReport {
    let mut report = AuditReport { prospect: is_prospect(g, ell), ..Default::default() };
    if !report.prospect {
        return report;
    }
    report.candidate = is_candidate(g, ell);
    if report.candidate {
        audit_holes(g, order, ell, &mut report);
    } else {
        audit_prisms(g, ell, &mut report);
    }
    report
}

fn majors_of(g: &Graph, s: VertexSet) -> Vec<usize> {
    (g.vertices() - s).iter().filter(|&v| is_major(g, s, v)).collect()
}

fn three_independent(g: &Graph, s: VertexSet) -> bool {
    let vs = s.to_vec();
    (0..vs.len()).any(|i| {
        (i + 1..vs.len()).any(|j| {
            !g.adjacent(vs[i], vs[j])
                && (j + 1..vs.len()).any(|k| !g.adjacent(vs[i], vs[k]) && !g.adjacent(vs[j], vs[k]))
        })
    })
}

fn audit_holes(g: &Graph, order: &EdgeOrder, ell: usize, report: &mut AuditReport) {
    let holes: Vec<Vec<usize>> = chordless_cycles(g).into_iter().filter(|c| c.len() % 2 == 0 && c.len() >= ell).collect();
    let Some(shortest) = holes.iter().map(Vec::len).min() else { return };
    for c in holes.iter().filter(|c| c.len() == shortest).take(MAX_OBJECTS) {
        triad(g, c, report);
        shortcuts(g, c, report);
    }
    let lightest = holes.iter().min_by(|a, b| cycle_weight(order, a).cmp(&cycle_weight(order, b))).expect("nonempty");
    lex_easy_reroute(g, order, lightest, report);
}

fn triad(g: &Graph, c: &[usize], report: &mut AuditReport) {
    let cs: VertexSet = c.iter().copied().collect();
    for x in majors_of(g, cs) {
        report.tick(Lemma::Triad);
        let nbrs = g.neighbors(x) & cs;
        if !three_independent(g, nbrs) {
            report.flag(Lemma::Triad, vec![x], format!("major vertex {x} lacks three independent neighbours on {c:?}"));
            continue;
        }
        for i in 0..c.len() {
            let q: VertexSet = (0..3).map(|k| c[(i + k) % c.len()]).collect();
            if (nbrs - q).len() < 2 {
                report.flag(Lemma::Triad, vec![x, c[i]], format!("major vertex {x} has fewer than two neighbours off the subpath at {}", c[i]));
                break;
            }
        }
    }
}

fn cyclic_distance(len: usize, i: usize, j: usize) -> usize {
    let d = i.abs_diff(j);
    d.min(len - d)
}

fn shortcuts(g: &Graph, c: &[usize], report: &mut AuditReport) {
    let cs: VertexSet = c.iter().copied().collect();
    let allowed = g.vertices() - majors_of(g, cs).into_iter().collect();
    for i in 0..c.len() {
        for j in i + 2..c.len() {
            let d = cyclic_distance(c.len(), i, j);
            if d < 2 {
                continue;
            }
            report.tick(Lemma::Shortcuts);
            if let Some(p) = g.shortest_path_within(allowed, c[i], c[j]) {
                if p.len() - 1 < d {
                    report.flag(Lemma::Shortcuts, p, format!("shortcut between {} and {} at hole distance {d}", c[i], c[j]));
                }
            }
        }
    }
}

/// Induced `u`-`v` paths through `allowed` with at most `max_edges` edges.
fn induced_paths_between(g: &Graph, allowed: VertexSet, u: usize, v: usize, max_edges: usize) -> Vec<Vec<usize>> {
    fn grow(g: &Graph, allowed: VertexSet, v: usize, path: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        if last == v {
            out.push(path.clone());
            return;
        }
        if path.len() > max {
            return;
        }
        for w in g.neighbors(last) & allowed {
            if path.contains(&w) || path[..path.len() - 1].iter().any(|&p| g.adjacent(p, w)) {
                continue;
            }
            path.push(w);
            grow(g, allowed, v, path, max, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    grow(g, allowed, v, &mut vec![u], max_edges, &mut out);
    out
}

fn lex_easy_reroute(g: &Graph, order: &EdgeOrder, c: &[usize], report: &mut AuditReport) {
    let cs: VertexSet = c.iter().copied().collect();
    let allowed = g.vertices() - majors_of(g, cs).into_iter().collect();
    let n = c.len();
    for i in 0..n {
        for d in 2..=(n / 2).saturating_sub(2) {
            let arc: Vec<usize> = (0..=d).map(|k| c[(i + k) % n]).collect();
            let (u, v) = (arc[0], arc[d]);
            if u > v && 2 * d == n {
                continue;
            }
            report.tick(Lemma::LexEasyReroute);
            let best = induced_paths_between(g, allowed, u, v, d)
                .into_iter()
                .min_by_key(|p| PathWeight::of_path(order, p).expect("path edges exist"));
            if best.as_deref() != Some(&arc[..]) {
                report.flag(Lemma::LexEasyReroute, arc, format!("lightest path avoiding majors is {best:?}"));
            }
        }
    }
}

/// The interior of the frame of a long near-prism, or `None` if it has no frame.
fn frame_interior(k: &OracleNearPrism, ell: usize) -> Option<VertexSet> {
    let stub = ell / 2 - 1;
    let mut short = 0;
    let mut s = VertexSet::new();
    for p in &k.paths {
        let len = p.len() - 1;
        if len <= ell - 1 {
            short += 1;
            s = s | p.iter().copied().collect();
        } else {
            s = s | p[..stub].iter().chain(&p[len - stub + 1..]).copied().collect();
        }
    }
    (short <= 1).then_some(s)
}

fn audit_prisms(g: &Graph, ell: usize, report: &mut AuditReport) {
    let prisms = all_long_near_prisms(g, ell);
    let edges = |k: &OracleNearPrism| k.paths.iter().map(|p| p.len() - 1).sum::<usize>();
    let Some(shortest) = prisms.iter().map(edges).min() else { return };
    let tidy = prisms.iter().filter(|k| edges(k) == shortest).filter(|k| {
        frame_interior(k, ell).is_some_and(|fs| !g.neighbors_of(fs).intersects(&(g.vertices() - k.vertex_set())))
    });
    for k in tidy.take(MAX_OBJECTS) {
        prism_majors(g, k, report);
        prism_jump(g, k, report);
    }
}

fn prism_majors(g: &Graph, k: &OracleNearPrism, report: &mut AuditReport) {
    let ks = k.vertex_set();
    let sets: Vec<VertexSet> = k.paths.iter().map(|p| p.iter().copied().collect()).collect();
    for x in majors_of(g, ks) {
        let hits: Vec<VertexSet> = sets.iter().map(|s| g.neighbors(x) & *s).collect();
        report.tick(Lemma::TwoPaths);
        if hits.iter().filter(|h| !h.is_empty()).count() < 2 {
            report.flag(Lemma::TwoPaths, vec![x], format!("major vertex {x} sees one constituent path"));
        }
        for j in 0..3 {
            if !hits[j].is_empty() {
                continue;
            }
            for i in (0..3).filter(|&i| i != j) {
                report.tick(Lemma::NoTwoHat);
                let h = hits[i].to_vec();
                let ok = h.len() == 1 || h.iter().any(|&a| h.iter().any(|&b| a != b && !g.adjacent(a, b)));
                if !ok {
                    report.flag(Lemma::NoTwoHat, vec![x], format!("major vertex {x} sees path {i} in {h:?}"));
                }
            }
        }
        report.tick(Lemma::ThreePairwiseNonadjacent);
        if !three_independent(g, g.neighbors(x) & ks) {
            report.flag(Lemma::ThreePairwiseNonadjacent, vec![x], format!("major vertex {x} lacks three independent neighbours"));
        }
    }
}

fn prism_jump(g: &Graph, k: &OracleNearPrism, report: &mut AuditReport) {
    let ks = k.vertex_set();
    let majors: VertexSet = majors_of(g, ks).into_iter().collect();
    for (i, j, m) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
        let pk: VertexSet = k.paths[m].iter().copied().collect();
        let allowed = g.vertices() - g.closed_neighbors_of(pk);
        let limit = (1 + (k.paths[i].len() - 1).min(k.paths[j].len() - 1)) / 2;
        let targets: VertexSet = k.paths[j].iter().copied().collect();
        for &u in k.paths[i].iter().filter(|&&u| allowed.contains(u)) {
            for v in targets & allowed {
                report.tick(Lemma::PrismJump);
                for q in induced_paths_between(g, allowed, u, v, limit) {
                    if q.len() >= 2 && !q[1..q.len() - 1].iter().any(|&w| majors.contains(w)) {
                        report.flag(Lemma::PrismJump, q, format!("jump between paths {i} and {j}"));
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn long_cycle_passes() {
        let g = Graph::cycle(14);
        let r = audit_lemmas(&g, &EdgeOrder::canonical(&g), 6);
        assert!(r.candidate && r.passed());
        assert!(r.checked[&Lemma::Shortcuts] > 0);
        assert!(r.checked[&Lemma::LexEasyReroute] > 0);
    }

    #[test]
    fn non_prospects_are_skipped() {
        let g = Graph::cycle(8);
        let r = audit_lemmas(&g, &EdgeOrder::canonical(&g), 6);
        assert!(!r.prospect && r.checked.is_empty());
    }
}
