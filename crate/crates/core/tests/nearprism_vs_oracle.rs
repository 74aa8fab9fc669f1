use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use longhole::configs::Configuration;
use longhole::harness::{generate, GeneratorSpec, Noise};
use longhole::graph::{is_major, Graph};
use longhole::nearprism::{detect_long_near_prism, detect_long_near_prism_by_guesses, NearPrism};
use longhole::oracle::{all_long_near_prisms, is_prospect};

fn compare(spec: &GeneratorSpec, seeds: std::ops::Range<u64>) -> (usize, usize) {
    let (mut prospects, mut positives) = (0, 0);
    for seed in seeds {
        let inst = generate(spec, 6, seed).unwrap();
        let g = &inst.graph;
        if !is_prospect(g, 6) {
            continue;
        }
        prospects += 1;
        let t = Instant::now();
        let found = detect_long_near_prism(g, 6).unwrap();
        let dt = t.elapsed();
        let oracle = !all_long_near_prisms(g, 6).is_empty();
        if let Some(k) = &found {
            k.validate(g, 6).unwrap();
        }
        assert_eq!(found.is_some(), oracle, "{spec:?} seed {seed} graph {g:?}");
        if dt.as_millis() > 200 {
            eprintln!("slow: {spec:?} seed {seed} {dt:?}");
        }
        positives += oracle as usize;
    }
    (prospects, positives)
}

#[test]
fn random_prospects_agree() {
    let mut total = 0;
    for (n, p) in [(10, 0.2), (12, 0.2), (12, 0.3), (14, 0.15), (14, 0.2), (14, 0.25)] {
        let (pros, _) = compare(&GeneratorSpec::Gnp { n, p }, 0..200);
        total += pros;
    }
    assert!(total >= 500, "only {total} prospects");
}

#[test]
fn planted_prisms_agree() {
    let mut positives = 0;
    for lengths in [[1, 6, 6], [0, 5, 7], [2, 7, 7], [0, 7, 7], [3, 6, 6], [1, 6, 8]] {
        for attach in [1, 2, 3] {
            let noise = Noise { vertices: 3, attach, p: 0.3 };
            let t = Instant::now();
            let (pros, pos) = compare(&GeneratorSpec::PlantedPrism { lengths, noise }, 0..30);
            eprintln!("{lengths:?} attach {attach}: {pros} prospects {pos} positive {:?}", t.elapsed());
            positives += pos;
        }
    }
    assert!(positives >= 50);
}

/// A prism with triangles `0,1,2` and `3,4,5` and path `i` from `i` to `3 + i`.
fn prism(lengths: [usize; 3]) -> (Graph, Vec<Vec<usize>>) {
    let mut edges = vec![(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)];
    let mut next = 6;
    let mut paths = vec![];
    for (i, len) in lengths.into_iter().enumerate() {
        let mut p = vec![i];
        for _ in 0..len - 1 {
            edges.push((*p.last().unwrap(), next));
            p.push(next);
            next += 1;
        }
        edges.push((*p.last().unwrap(), 3 + i));
        p.push(3 + i);
        paths.push(p);
    }
    (Graph::new(next, edges).unwrap(), paths)
}

/// Every long near-prism has a major vertex that survives deletion of its frame's
/// neighbourhood.
fn no_clean_prism(g: &Graph) -> bool {
    let all = all_long_near_prisms(g, 6);
    !all.is_empty()
        && all.iter().all(|k| {
            let k = NearPrism { a: k.a, b: k.b, paths: k.paths.clone() };
            let s = k.vertex_set();
            let g1 = g.vertices() - g.neighbors_of(k.frame(6).unwrap().interior());
            (g1 - s).iter().any(|x| is_major(g, s, x))
        })
}

#[test]
fn cleaning_guesses_find_dirty_prisms() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut dirty = 0;
    for lengths in [[1, 8, 8], [2, 9, 9], [1, 10, 10], [3, 8, 10], [2, 7, 11]] {
        let (base, paths) = prism(lengths);
        let middles: Vec<usize> =
            paths.iter().filter(|p| p.len() > 6).flat_map(|p| p[3..p.len() - 3].to_vec()).collect();
        for _ in 0..200 {
            let k = rng.random_range(3..=5);
            let mut m = middles.clone();
            m.shuffle(&mut rng);
            let z = base.n();
            let g = Graph::new(z + 1, base.edges().iter().copied().chain(m[..k].iter().map(|&v| (v, z)))).unwrap();
            if !is_prospect(&g, 6) || !no_clean_prism(&g) {
                continue;
            }
            dirty += 1;
            let k = detect_long_near_prism_by_guesses(&g, 6).unwrap();
            k.unwrap_or_else(|| panic!("no cleaning set exposed a prism in {g:?}")).validate(&g, 6).unwrap();
            detect_long_near_prism(&g, 6).unwrap().unwrap().validate(&g, 6).unwrap();
        }
    }
    assert!(dirty >= 50, "only {dirty} prospects without a clean near-prism");
}
