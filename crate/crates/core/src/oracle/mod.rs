//! Brute-force ground truth. Nothing here calls the detectors; only graph-core types and
//! predicates are shared.

pub mod audit;
mod configs;
mod enumerate;

pub use audit::{audit_lemmas, AuditFinding, AuditReport, Lemma};
pub use configs::{
    all_long_near_prisms, is_candidate, is_prospect, oracle_configuration, ConfigKind, OracleNearPrism,
};
pub use enumerate::{chordless_cycles, count_holes_by_subsets, induced_paths};

use serde::Serialize;

use crate::graph::{is_hole, EdgeOrder, Graph, PathWeight};

/// A witness produced by the oracle, in plain vertex lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum OracleWitness {
    Hole { vertices: Vec<usize> },
    Jewel { q1: Vec<usize>, q2: Vec<usize>, p: Vec<usize> },
    Theta { u: usize, v: usize, paths: [Vec<usize>; 3] },
    BanTheBomb { u: usize, v1: usize, w: usize, v2: usize, x: usize, p1: Vec<usize>, p2: Vec<usize> },
    NearPrism { a: [usize; 3], b: [usize; 3], paths: [Vec<usize>; 3] },
    VertexSet { vertices: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub verdict: bool,
    pub witness: Option<OracleWitness>,
    /// Number of objects examined by the exhaustive search.
    pub enumeration_count: usize,
}

impl OracleReport {
    fn from_hole(hole: Option<Vec<usize>>, count: usize) -> Self {
        OracleReport {
            verdict: hole.is_some(),
            witness: hole.map(|vertices| OracleWitness::Hole { vertices }),
            enumeration_count: count,
        }
    }

    pub fn hole(&self) -> Option<&[usize]> {
        match &self.witness {
            Some(OracleWitness::Hole { vertices }) => Some(vertices),
            _ => None,
        }
    }
}

/// Whether `g` has an even hole of length at least `ell`; the witness is the
/// lexicographically first such hole in canonical rotation.
pub fn oracle_long_even_hole(g: &Graph, ell: usize) -> OracleReport {
    oracle_even_hole_in_range(g, ell, usize::MAX)
}

/// Even holes with length in `ell..=k`.
pub fn oracle_even_hole_in_range(g: &Graph, ell: usize, k: usize) -> OracleReport {
    let cycles = chordless_cycles(g);
    let best = cycles
        .iter()
        .filter(|c| c.len() % 2 == 0 && c.len() >= ell && c.len() <= k)
        .min()
        .cloned();
    OracleReport::from_hole(best, cycles.len())
}

/// The lightest long even hole: fewest edges, then lexicographically earliest edge set.
pub fn oracle_lightest_long_even_hole(g: &Graph, order: &EdgeOrder, ell: usize) -> OracleReport {
    let cycles = chordless_cycles(g);
    let best = cycles
        .iter()
        .filter(|c| c.len() % 2 == 0 && c.len() >= ell)
        .map(|c| (cycle_weight(order, c), c))
        .min_by(|a, b| a.0.cmp(&b.0))
        .map(|(_, c)| c.clone());
    OracleReport::from_hole(best, cycles.len())
}

pub(crate) fn cycle_weight(order: &EdgeOrder, c: &[usize]) -> PathWeight {
    let mut closed = c.to_vec();
    closed.push(c[0]);
    PathWeight::of_path(order, &closed).expect("cycle edges exist")
}

/// Checks a hole witness: a chordless cycle that is even and long.
pub fn is_long_even_hole(g: &Graph, vs: &[usize], ell: usize) -> bool {
    vs.len() % 2 == 0 && vs.len() >= ell && is_hole(g, vs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        let mut e: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        e.extend((0..5).map(|i| (i, i + 5)));
        e.extend((0..5).map(|i| (i + 5, (i + 2) % 5 + 5)));
        Graph::new(10, e).unwrap()
    }

    #[test]
    fn cycles() {
        let r = oracle_long_even_hole(&Graph::cycle(10), 6);
        assert!(r.verdict);
        assert_eq!(r.hole().unwrap(), &[0, 1, 2, 3, 4, 5, 6, 7, 8, 9]);
        assert!(!oracle_long_even_hole(&Graph::cycle(10), 12).verdict);
        for n in 4..=30 {
            for ell in [4, 6, 8] {
                assert_eq!(oracle_long_even_hole(&Graph::cycle(n), ell).verdict, n % 2 == 0 && n >= ell);
            }
        }
    }

    #[test]
    fn petersen_has_six_holes() {
        let g = petersen();
        let r = oracle_long_even_hole(&g, 6);
        assert!(r.verdict);
        assert_eq!(r.hole().unwrap().len(), 6);
        assert!(is_long_even_hole(&g, r.hole().unwrap(), 6));
    }

    #[test]
    fn lightest_of_two_disjoint_cycles() {
        let mut e: Vec<(usize, usize)> = (0..14).map(|i| (i, (i + 1) % 14)).collect();
        e.extend((0..14).map(|i| (14 + i, 14 + (i + 1) % 14)));
        let g = Graph::new(28, e).unwrap();
        // Rank the second cycle's edges first: it is then the heavier one.
        let mut seq: Vec<_> = g.edges()[14..].to_vec();
        seq.extend(&g.edges()[..14]);
        let order = EdgeOrder::from_sequence(&g, &seq).unwrap();
        let r = oracle_lightest_long_even_hole(&g, &order, 6);
        assert_eq!(r.hole().unwrap()[0], 0);
        let r = oracle_lightest_long_even_hole(&g, &EdgeOrder::canonical(&g), 6);
        assert_eq!(r.hole().unwrap()[0], 14);
        assert!(!oracle_lightest_long_even_hole(&Graph::cycle(7), &EdgeOrder::canonical(&Graph::cycle(7)), 6).verdict);
    }

    #[test]
    fn counts_match_subset_enumeration() {
        for g in [petersen(), Graph::complete(5), Graph::cycle(8)] {
            if g.n() <= 10 {
                assert_eq!(chordless_cycles(&g).len(), count_holes_by_subsets(&g));
            }
        }
    }
}
