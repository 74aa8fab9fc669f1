//! Seeded instance generators.

use rand::seq::SliceRandom;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// Extra vertices added around a planted structure. Each one is joined to at most `attach`
/// random structure vertices, and noise vertices are joined to each other with
/// probability `p`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Noise {
    pub vertices: usize,
    pub attach: usize,
    pub p: f64,
}

impl Noise {
    pub const NONE: Noise = Noise { vertices: 0, attach: 0, p: 0.0 };
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GeneratorSpec {
    Gnp { n: usize, p: f64 },
    Cycle { n: usize },
    /// A hole of the given length.
    PlantedHole { length: usize, noise: Noise },
    /// Two triangles joined by paths of the given lengths; a zero length makes the
    /// triangles share that vertex.
    PlantedPrism { lengths: [usize; 3], noise: Noise },
    /// Two vertices joined by three paths of the given lengths.
    PlantedTheta { lengths: [usize; 3], noise: Noise },
}

impl GeneratorSpec {
    pub fn name(&self) -> &'static str {
        match self {
            GeneratorSpec::Gnp { .. } => "gnp",
            GeneratorSpec::Cycle { .. } => "cycle",
            GeneratorSpec::PlantedHole { .. } => "planted-hole",
            GeneratorSpec::PlantedPrism { .. } => "planted-prism",
            GeneratorSpec::PlantedTheta { .. } => "planted-theta",
        }
    }
}

/// A generated graph together with everything needed to regenerate it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Instance {
    #[serde(skip)]
    pub graph: Graph,
    pub ell: usize,
    pub seed: u64,
    pub provenance: GeneratorSpec,
    /// Where the planted structure's vertices ended up after relabelling.
    pub planted: Vec<usize>,
}

pub fn generate(spec: &GeneratorSpec, ell: usize, seed: u64) -> Result<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bad = |msg: String| Err(Error::InvalidParameter(msg));
    let (graph, planted) = match *spec {
        GeneratorSpec::Gnp { n, p } => {
            if !(0.0..=1.0).contains(&p) {
                return bad(format!("edge probability {p} is outside [0, 1]"));
            }
            if n > MAX_VERTICES {
                return Err(Error::TooManyVertices(n));
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            (Graph::new(n, edges)?, Vec::new())
        }
        GeneratorSpec::Cycle { n } => {
            if n < 3 {
                return bad(format!("a cycle needs at least 3 vertices, got {n}"));
            }
            if n > MAX_VERTICES {
                return Err(Error::TooManyVertices(n));
            }
            (Graph::cycle(n), (0..n).collect())
        }
        GeneratorSpec::PlantedHole { length, noise } => {
            if length < 4 {
                return bad(format!("a hole needs length at least 4, got {length}"));
            }
            let edges = (0..length).map(|i| (i, (i + 1) % length)).collect();
            plant(length, edges, noise, &mut rng)?
        }
        GeneratorSpec::PlantedPrism { lengths, noise } => {
            if lengths.iter().filter(|&&l| l == 0).count() > 1 {
                return bad("at most one prism path may have length 0".into());
            }
            let (n, edges) = prism_edges(lengths);
            plant(n, edges, noise, &mut rng)?
        }
        GeneratorSpec::PlantedTheta { lengths, noise } => {
            if lengths.iter().any(|&l| l < 2) {
                return bad("theta paths need length at least 2".into());
            }
            let (n, edges) = theta_edges(lengths);
            plant(n, edges, noise, &mut rng)?
        }
    };
    Ok(Instance { graph, ell, seed, provenance: spec.clone(), planted })
}

/// Triangles `0,1,2` and `3,4,5` (or `3,4` plus the shared vertex), paths from `i` to `3+i`.
pub(crate) fn prism_edges(lengths: [usize; 3]) -> (usize, Vec<(usize, usize)>) {
    let shared = lengths.iter().position(|&l| l == 0);
    let b: [usize; 3] = match shared {
        None => [3, 4, 5],
        Some(s) => {
            let mut next = 3;
            [0, 1, 2].map(|i| {
                if i == s {
                    i
                } else {
                    next += 1;
                    next - 1
                }
            })
        }
    };
    let mut next = if shared.is_some() { 5 } else { 6 };
    let mut edges = vec![(0, 1), (0, 2), (1, 2)];
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        edges.push((b[i], b[j]));
    }
    for i in 0..3 {
        if lengths[i] == 0 {
            continue;
        }
        let mut prev = i;
        for _ in 0..lengths[i] - 1 {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, b[i]));
    }
    (next, edges)
}

/// Ends `0` and `1`, paths through fresh vertices.
pub(crate) fn theta_edges(lengths: [usize; 3]) -> (usize, Vec<(usize, usize)>) {
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
    (next, edges)
}

fn plant(
    core: usize,
    mut edges: Vec<(usize, usize)>,
    noise: Noise,
    rng: &mut ChaCha8Rng,
) -> Result<(Graph, Vec<usize>)> {
    if !(0.0..=1.0).contains(&noise.p) {
        return Err(Error::InvalidParameter(format!("noise probability {} is outside [0, 1]", noise.p)));
    }
    let n = core + noise.vertices;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    for z in core..n {
        let k = rng.random_range(0..=noise.attach.min(core));
        let mut targets: Vec<usize> = (0..core).collect();
        targets.shuffle(rng);
        edges.extend(targets[..k].iter().map(|&t| (t, z)));
        for y in core..z {
            if rng.random_bool(noise.p) {
                edges.push((y, z));
            }
        }
    }
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(rng);
    let relabelled = edges.into_iter().map(|(u, v)| (label[u], label[v]));
    Ok((Graph::new(n, relabelled)?, label[..core].to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_instance() {
        let inst = generate(&GeneratorSpec::Cycle { n: 14 }, 6, 0).unwrap();
        assert_eq!(inst.graph, Graph::cycle(14));
    }

    #[test]
    fn gnp_is_deterministic() {
        let spec = GeneratorSpec::Gnp { n: 14, p: 0.2 };
        let a = generate(&spec, 6, 42).unwrap();
        let b = generate(&spec, 6, 42).unwrap();
        assert_eq!(a.graph, b.graph);
        let c = generate(&spec, 6, 43).unwrap();
        assert_ne!(a.graph, c.graph);
    }

    #[test]
    fn planted_shapes() {
        let (n, e) = prism_edges([2, 7, 7]);
        assert_eq!((n, e.len()), (19, 6 + 16));
        let (n, e) = prism_edges([0, 7, 7]);
        assert_eq!((n, e.len()), (17, 6 + 14));
        let (n, e) = theta_edges([3, 3, 3]);
        assert_eq!((n, e.len()), (8, 9));
        let noise = Noise { vertices: 5, attach: 2, p: 0.3 };
        let inst = generate(&GeneratorSpec::PlantedPrism { lengths: [2, 7, 7], noise }, 6, 9).unwrap();
        assert_eq!(inst.graph.n(), 24);
        assert_eq!(inst.planted.len(), 19);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(generate(&GeneratorSpec::Gnp { n: 5, p: 1.5 }, 6, 0).is_err());
        assert!(generate(&GeneratorSpec::Cycle { n: 2 }, 6, 0).is_err());
        assert!(generate(&GeneratorSpec::PlantedTheta { lengths: [1, 3, 3], noise: Noise::NONE }, 6, 0).is_err());
        assert!(generate(&GeneratorSpec::PlantedPrism { lengths: [0, 0, 3], noise: Noise::NONE }, 6, 0).is_err());
    }
}
