use crate::graph::{visit_induced_paths_from, Graph, Visit, VertexSet};

/// One part of a frame: a whole path from `a_i` to `b_i`, or two stubs starting at `a_i` and
/// `b_i` whose far ends are `s_i` and `t_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FramePart {
    Path(Vec<usize>),
    Stubs { a_stub: Vec<usize>, b_stub: Vec<usize> },
}

impl FramePart {
    pub fn vertex_set(&self) -> VertexSet {
        match self {
            FramePart::Path(p) => p.iter().collect(),
            FramePart::Stubs { a_stub, b_stub } => a_stub.iter().chain(b_stub).collect(),
        }
    }

    fn edge_count(&self) -> usize {
        match self {
            FramePart::Path(p) => p.len() - 1,
            FramePart::Stubs { a_stub, b_stub } => a_stub.len() + b_stub.len() - 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Frame {
    pub a: [usize; 3],
    pub b: [usize; 3],
    pub parts: [FramePart; 3],
}

impl Frame {
    pub fn vertex_set(&self) -> VertexSet {
        self.parts.iter().fold(VertexSet::new(), |s, p| s | p.vertex_set())
    }

    pub fn path_parts(&self) -> usize {
        self.parts.iter().filter(|p| matches!(p, FramePart::Path(_))).count()
    }

    /// The far ends of all stubs.
    pub fn ends(&self) -> VertexSet {
        let mut s = VertexSet::new();
        for p in &self.parts {
            if let FramePart::Stubs { a_stub, b_stub } = p {
                s.insert(*a_stub.last().unwrap());
                s.insert(*b_stub.last().unwrap());
            }
        }
        s
    }

    /// Vertices of the frame that are not ends.
    pub fn interior(&self) -> VertexSet {
        self.vertex_set() - self.ends()
    }

    /// Checks the frame definition in `g` for the given `ell`.
    pub fn is_valid(&self, g: &Graph, ell: usize) -> bool {
        let stub = ell / 2 - 1;
        let tri = |t: [usize; 3]| {
            t[0] != t[1] && t[1] != t[2] && t[0] != t[2]
                && g.adjacent(t[0], t[1]) && g.adjacent(t[0], t[2]) && g.adjacent(t[1], t[2])
        };
        if !tri(self.a) || !tri(self.b) || self.path_parts() > 1 {
            return false;
        }
        let shared = (0..3).filter(|&i| self.a[i] == self.b[i]).count();
        if shared > 1 || self.a.iter().filter(|v| self.b.contains(v)).count() != shared {
            return false;
        }
        let mut total = 0;
        for i in 0..3 {
            match &self.parts[i] {
                FramePart::Path(p) => {
                    if p.is_empty() || p.len() > ell || p[0] != self.a[i] || *p.last().unwrap() != self.b[i] {
                        return false;
                    }
                    total += p.len();
                }
                FramePart::Stubs { a_stub, b_stub } => {
                    if self.a[i] == self.b[i] || a_stub.len() != stub + 1 || b_stub.len() != stub + 1 {
                        return false;
                    }
                    if a_stub[0] != self.a[i] || b_stub[0] != self.b[i] {
                        return false;
                    }
                    total += 2 * (stub + 1);
                }
            }
        }
        let vs = self.vertex_set();
        vs.len() == total && g.induced_edge_count(vs) == 6 + self.parts.iter().map(FramePart::edge_count).sum::<usize>()
            && self.parts.iter().all(|p| match p {
                FramePart::Path(q) => q.windows(2).all(|w| g.adjacent(w[0], w[1])),
                FramePart::Stubs { a_stub, b_stub } => {
                    a_stub.windows(2).chain(b_stub.windows(2)).all(|w| g.adjacent(w[0], w[1]))
                }
            })
    }
}

/// A frame with a chosen correspondence of base orders: part `order[k]` of the frame is the
/// `k`-th part of the ordered frame.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderedFrame {
    pub frame: Frame,
    pub order: [usize; 3],
}

impl OrderedFrame {
    pub fn a(&self, k: usize) -> usize {
        self.frame.a[self.order[k]]
    }

    pub fn b(&self, k: usize) -> usize {
        self.frame.b[self.order[k]]
    }

    pub fn part(&self, k: usize) -> &FramePart {
        &self.frame.parts[self.order[k]]
    }

    /// The stubs of part `k`, if it is not a path.
    pub fn stubs(&self, k: usize) -> Option<(&[usize], &[usize])> {
        match self.part(k) {
            FramePart::Stubs { a_stub, b_stub } => Some((a_stub, b_stub)),
            FramePart::Path(_) => None,
        }
    }

    pub fn s(&self, k: usize) -> Option<usize> {
        self.stubs(k).map(|(a, _)| *a.last().unwrap())
    }

    pub fn t(&self, k: usize) -> Option<usize> {
        self.stubs(k).map(|(_, b)| *b.last().unwrap())
    }

    /// Joins the stubs of part `k` through an `s_k`-`t_k` path `middle`, or returns the
    /// frame path.
    pub(crate) fn complete_part(&self, k: usize, middle: Option<&[usize]>) -> Vec<usize> {
        match (self.part(k), middle) {
            (FramePart::Path(p), _) => p.clone(),
            (FramePart::Stubs { a_stub, b_stub }, Some(m)) => {
                let mut p = a_stub.clone();
                p.extend_from_slice(&m[1..]);
                p.extend(b_stub.iter().rev().skip(1));
                p
            }
            (FramePart::Stubs { .. }, None) => panic!("stub part needs a middle path"),
        }
    }
}

const ORDERS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for u in 0..g.n() {
        for v in g.neighbors(u).iter().filter(|&v| v > u) {
            for w in (g.neighbors(u) & g.neighbors(v)).iter().filter(|&w| w > v) {
                out.push([u, v, w]);
            }
        }
    }
    out
}

/// Induced paths from `start` with exactly `len` edges whose other vertices avoid `forbidden`.
fn paths_of_length(g: &Graph, allowed: VertexSet, start: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    visit_induced_paths_from(g, allowed | VertexSet::singleton(start), start, len, |p| {
        if p.len() == len + 1 {
            out.push(p.to_vec());
            Visit::Prune
        } else {
            Visit::Descend
        }
    });
    out
}

/// Every frame of `g` (as an unordered object: base correspondence fixed by the parts).
pub fn enumerate_frames(g: &Graph, ell: usize) -> Vec<Frame> {
    let stub = ell / 2 - 1;
    let tris = triangles(g);
    let mut out = Vec::new();
    for (x, ta) in tris.iter().enumerate() {
        for tb in &tris[x + 1..] {
            if ta.iter().filter(|v| tb.contains(v)).count() > 1 {
                continue;
            }
            let bases: VertexSet = ta.iter().chain(tb).copied().collect();
            for perm in ORDERS {
                let b = perm.map(|k| tb[k]);
                if (0..3).any(|i| ta[i] != b[i] && (tb.contains(&ta[i]) || ta.contains(&b[i]))) {
                    continue;
                }
                frames_on_bases(g, *ta, b, bases, ell, stub, &mut out);
            }
        }
    }
    out
}

fn frames_on_bases(
    g: &Graph,
    a: [usize; 3],
    b: [usize; 3],
    bases: VertexSet,
    ell: usize,
    stub: usize,
    out: &mut Vec<Frame>,
) {
    let mut options: [Vec<FramePart>; 3] = Default::default();
    for i in 0..3 {
        if a[i] == b[i] {
            options[i].push(FramePart::Path(vec![a[i]]));
            continue;
        }
        let ends: VertexSet = [a[i], b[i]].into_iter().collect();
        let inner = g.vertices() - g.closed_neighbors_of(bases - ends);
        if g.adjacent(a[i], b[i]) {
            options[i].push(FramePart::Path(vec![a[i], b[i]]));
        } else {
            visit_induced_paths_from(g, inner | VertexSet::singleton(b[i]), a[i], ell - 1, |p| {
                let last = *p.last().unwrap();
                if last == b[i] {
                    options[i].push(FramePart::Path(p.to_vec()));
                    Visit::Prune
                } else {
                    Visit::Descend
                }
            });
        }
        let a_side = g.vertices() - g.closed_neighbors_of(bases - VertexSet::singleton(a[i]));
        let b_side = g.vertices() - g.closed_neighbors_of(bases - VertexSet::singleton(b[i]));
        let a_stubs = paths_of_length(g, a_side, a[i], stub);
        let b_stubs = paths_of_length(g, b_side, b[i], stub);
        for sa in &a_stubs {
            let sa_set: VertexSet = sa.iter().collect();
            for sb in &b_stubs {
                let sb_set: VertexSet = sb.iter().collect();
                if sa_set.intersects(&g.closed_neighbors_of(sb_set)) {
                    continue;
                }
                options[i].push(FramePart::Stubs { a_stub: sa.clone(), b_stub: sb.clone() });
            }
        }
    }
    for p0 in &options[0] {
        let s0 = p0.vertex_set();
        for p1 in &options[1] {
            let s1 = p1.vertex_set();
            if !compatible(g, s0, s1, bases) {
                continue;
            }
            for p2 in &options[2] {
                let parts = [p0, p1, p2];
                if parts.iter().filter(|p| matches!(p, FramePart::Path(_))).count() > 1 {
                    continue;
                }
                let s2 = p2.vertex_set();
                if !compatible(g, s0, s2, bases) || !compatible(g, s1, s2, bases) {
                    continue;
                }
                out.push(Frame { a, b, parts: [p0.clone(), p1.clone(), p2.clone()] });
            }
        }
    }
}

fn compatible(g: &Graph, s: VertexSet, t: VertexSet, bases: VertexSet) -> bool {
    let s = s - bases;
    let t = t - bases;
    !s.intersects(&g.closed_neighbors_of(t))
}

/// Every ordered frame of `g`: each frame with its six base orderings.
pub fn enumerate_ordered_frames(g: &Graph, ell: usize) -> impl Iterator<Item = OrderedFrame> {
    enumerate_frames(g, ell)
        .into_iter()
        .flat_map(|frame| ORDERS.map(|order| OrderedFrame { frame: frame.clone(), order }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nearprism::tests::prism;
    use crate::oracle::{oracle_configuration, ConfigKind};

    #[test]
    fn no_frames_without_triangle_pairs() {
        assert_eq!(enumerate_ordered_frames(&Graph::cycle(20), 6).count(), 0);
        assert_eq!(enumerate_ordered_frames(&Graph::complete(4), 6).count(), 0);
    }

    #[test]
    fn long_prism_frames() {
        let (g, k) = prism([2, 7, 7]);
        let frames = enumerate_frames(&g, 6);
        let expected = k.frame(6).unwrap();
        assert!(frames.iter().all(|f| f.is_valid(&g, 6)));
        assert!(frames.contains(&expected));
        let ordered: Vec<_> = enumerate_ordered_frames(&g, 6).collect();
        assert_eq!(ordered.len(), 6 * frames.len());
        let oracle = oracle_configuration(&g, 6, ConfigKind::Frame).enumeration_count;
        assert_eq!(frames.len(), oracle);
    }
}
