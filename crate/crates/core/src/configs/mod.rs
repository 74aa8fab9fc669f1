//! Bounded long even holes, long jewels, long thetas and long ban-the-bombs, plus the
//! three-in-a-tree search they rely on.

mod bomb;
mod bounded;
mod jewel;
mod theta;
mod tree;

pub use bomb::{detect_long_ban_the_bomb, detect_long_ban_the_bomb_with};
pub use bounded::{detect_bounded_long_even_hole, detect_bounded_long_even_hole_with};
pub use jewel::{detect_long_jewel, detect_long_jewel_with};
pub use theta::{detect_long_theta, detect_long_theta_with};
pub use tree::{three_in_a_tree, three_in_a_tree_within, InducedTree};

use crate::error::{Error, Result};
use crate::graph::{anticomplete, is_hole, is_induced_path, Graph, Hole, VertexSet};

/// A structure made of holes, at least one of which is a long even hole whenever the
/// structure is valid.
pub trait Configuration {
    /// Checks the structure against its definition, including longness for `ell`.
    fn validate(&self, g: &Graph, ell: usize) -> Result<()>;

    /// The holes the structure is built from, each as a cyclic vertex sequence.
    fn holes(&self) -> Vec<Vec<usize>>;
}

/// A long even hole inside a valid configuration.
pub fn derive_even_hole<C: Configuration + ?Sized>(g: &Graph, config: &C, ell: usize) -> Result<Hole> {
    config.validate(g, ell)?;
    for h in config.holes() {
        if h.len() % 2 == 0 && h.len() >= ell && is_hole(g, &h) {
            return Hole::new(g, h);
        }
    }
    Err(Error::InvalidWitness("configuration contains no long even hole".into()))
}

pub(crate) fn check_ell(ell: usize) -> Result<()> {
    if ell < 6 || ell % 2 == 1 {
        return Err(Error::InvalidParameter(format!("l must be an even integer >= 6, got {ell}")));
    }
    Ok(())
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidWitness(msg.into())
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(invalid(msg))
    }
}

fn interior(path: &[usize]) -> VertexSet {
    crate::graph::paths_interior(path)
}

/// The cycle made of `p` followed by `q` walked backwards, where both run from the same
/// start to the same end.
pub(crate) fn glue(p: &[usize], q: &[usize]) -> Vec<usize> {
    let mut c = p.to_vec();
    c.extend(q[1..q.len() - 1].iter().rev());
    c
}

/// Two paths `Q1`, `Q2` of different parity joining `u` to `v`, and a path `P` joining
/// `u` to `v` whose interior is anticomplete to both interiors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Jewel {
    pub q1: Vec<usize>,
    pub q2: Vec<usize>,
    pub p: Vec<usize>,
}

impl Jewel {
    pub fn order(&self) -> usize {
        self.q1.len().max(self.q2.len())
    }
}

impl Configuration for Jewel {
    fn validate(&self, g: &Graph, ell: usize) -> Result<()> {
        for path in [&self.q1, &self.q2, &self.p] {
            require(is_induced_path(g, path), "jewel path is not induced")?;
        }
        let ends = |p: &Vec<usize>| (p[0], *p.last().unwrap());
        require(ends(&self.q1) == ends(&self.p) && ends(&self.q2) == ends(&self.p), "jewel paths do not share ends")?;
        require(self.q1.len() % 2 != self.q2.len() % 2, "jewel paths have the same parity")?;
        let min = (self.q1.len() - 1).min(self.q2.len() - 1);
        require(self.p.len() - 1 + min >= ell, "jewel is not long")?;
        require(
            anticomplete(g, interior(&self.p), interior(&self.q1) | interior(&self.q2)),
            "jewel interiors are not anticomplete",
        )
    }

    fn holes(&self) -> Vec<Vec<usize>> {
        vec![glue(&self.p, &self.q1), glue(&self.p, &self.q2)]
    }
}

/// Three paths joining non-adjacent `u` and `v` whose pairwise unions are holes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theta {
    pub u: usize,
    pub v: usize,
    pub paths: [Vec<usize>; 3],
}

impl Configuration for Theta {
    fn validate(&self, g: &Graph, ell: usize) -> Result<()> {
        require(self.u != self.v && !g.adjacent(self.u, self.v), "theta ends are adjacent")?;
        for p in &self.paths {
            require(is_induced_path(g, p), "theta path is not induced")?;
            require(p[0] == self.u && *p.last().unwrap() == self.v, "theta path has wrong ends")?;
        }
        for i in 0..3 {
            for j in i + 1..3 {
                let (a, b) = (interior(&self.paths[i]), interior(&self.paths[j]));
                require(anticomplete(g, a, b), "theta interiors are not anticomplete")?;
            }
        }
        for h in self.holes() {
            require(is_hole(g, &h), "theta union is not a hole")?;
            require(h.len() >= ell, "theta is not long")?;
        }
        Ok(())
    }

    fn holes(&self) -> Vec<Vec<usize>> {
        let [a, b, c] = &self.paths;
        vec![glue(a, b), glue(b, c), glue(a, c)]
    }
}

/// Three paths from a common centre whose union is induced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claw {
    pub center: usize,
    pub arms: [Vec<usize>; 3],
}

impl Claw {
    pub fn tips(&self) -> [usize; 3] {
        self.arms.each_ref().map(|a| *a.last().unwrap())
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.arms.iter().flatten().collect()
    }
}

/// The 4-cycle `u-v1-w-v2` (with `uw` optional), a vertex `x` adjacent to `u` only, and
/// paths `P1` from `x` to `v1` and `P2` from `x` to `v2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BanTheBomb {
    pub u: usize,
    pub v1: usize,
    pub w: usize,
    pub v2: usize,
    pub x: usize,
    pub p1: Vec<usize>,
    pub p2: Vec<usize>,
}

impl Configuration for BanTheBomb {
    fn validate(&self, g: &Graph, ell: usize) -> Result<()> {
        let &BanTheBomb { u, v1, w, v2, x, .. } = self;
        let core: VertexSet = [u, v1, w, v2, x].into_iter().collect();
        require(core.len() == 5, "ban-the-bomb core vertices repeat")?;
        require(
            g.adjacent(u, v1) && g.adjacent(v1, w) && g.adjacent(w, v2) && g.adjacent(v2, u),
            "ban-the-bomb four-cycle missing an edge",
        )?;
        require(!g.adjacent(v1, v2), "ban-the-bomb v1 and v2 are adjacent")?;
        require(g.neighbors(x) & core == VertexSet::singleton(u), "ban-the-bomb x must see exactly u")?;
        for (p, v, other) in [(&self.p1, v1, v2), (&self.p2, v2, v1)] {
            require(is_induced_path(g, p), "ban-the-bomb path is not induced")?;
            require(p[0] == x && *p.last().unwrap() == v, "ban-the-bomb path has wrong ends")?;
            require(p.len() >= 3, "ban-the-bomb path is too short")?;
            let around: VertexSet = [u, w, other].into_iter().collect();
            require(anticomplete(g, interior(p), around), "ban-the-bomb path interior sees the cycle")?;
        }
        let rest1: VertexSet = self.p1[1..].iter().collect();
        let rest2: VertexSet = self.p2[1..].iter().collect();
        require(anticomplete(g, rest1, rest2), "ban-the-bomb paths are not anticomplete")?;
        for h in self.holes() {
            require(is_hole(g, &h), "ban-the-bomb union is not a hole")?;
            require(h.len() >= ell, "ban-the-bomb is not long")?;
        }
        Ok(())
    }

    fn holes(&self) -> Vec<Vec<usize>> {
        let mut h1 = self.p1.clone();
        h1.push(self.u);
        let mut h2 = self.p2.clone();
        h2.push(self.u);
        let mut h3 = self.p1.clone();
        h3.push(self.w);
        h3.extend(self.p2[1..].iter().rev());
        vec![h1, h2, h3]
    }
}
