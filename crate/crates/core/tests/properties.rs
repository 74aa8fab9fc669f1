use num_bigint::BigUint;
use proptest::prelude::*;

use longhole::graph::{Graph, PathWeight};
use longhole::harness::{decode_graph6, encode_graph6};

/// `2^max * sum(1 + 2^-i)` over the ranks, exact.
fn scaled_weight(ranks: &[u32], max: u32) -> BigUint {
    ranks.iter().map(|&i| (BigUint::from(1u8) << max) + (BigUint::from(1u8) << (max - i))).sum()
}

fn rank_set() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::btree_set(1u32..200, 0..12).prop_map(|s| s.into_iter().collect())
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::new(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn weight_order_matches_exact_sum(a in rank_set(), b in rank_set()) {
        let max = a.iter().chain(&b).copied().max().unwrap_or(0);
        let exact = scaled_weight(&a, max).cmp(&scaled_weight(&b, max));
        prop_assert_eq!(PathWeight::from_ranks(a).cmp(&PathWeight::from_ranks(b)), exact);
    }

    #[test]
    fn graph6_decode_inverts_encode(g in graph(90)) {
        let s = encode_graph6(&g);
        prop_assert_eq!(decode_graph6(s.as_bytes()).unwrap(), g);
    }

    #[test]
    fn graph6_encode_inverts_decode(bytes in prop::collection::vec(63u8..=126, 1..12)) {
        if let Ok(g) = decode_graph6(&bytes) {
            prop_assert_eq!(encode_graph6(&g).into_bytes(), bytes);
        }
    }
}

#[test]
fn graph6_exhaustive_small() {
    for n in 0..=7usize {
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        for mask in 0u64..1 << pairs.len() {
            let edges = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e);
            let g = Graph::new(n, edges).unwrap();
            let s = encode_graph6(&g);
            let h = decode_graph6(s.as_bytes()).unwrap();
            assert_eq!(h, g);
            assert_eq!(encode_graph6(&h), s);
        }
    }
}
