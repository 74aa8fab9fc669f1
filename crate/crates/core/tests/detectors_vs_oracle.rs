use longhole::configs::{
    detect_bounded_long_even_hole, detect_long_ban_the_bomb, detect_long_jewel, detect_long_theta, three_in_a_tree,
    Configuration,
};
use longhole::harness::{generate, GeneratorSpec};
use longhole::oracle::{oracle_configuration, oracle_even_hole_in_range, ConfigKind};
use longhole::Graph;

fn random_graphs(count: u64, n_range: std::ops::RangeInclusive<usize>) -> impl Iterator<Item = (u64, Graph)> {
    (0..count).map(move |seed| {
        let span = (n_range.end() - n_range.start() + 1) as u64;
        let n = n_range.start() + (seed % span) as usize;
        let p = [0.2, 0.3, 0.4, 0.5][(seed / span % 4) as usize];
        (seed, generate(&GeneratorSpec::Gnp { n, p }, 6, seed).unwrap().graph)
    })
}

#[test]
fn bounded_holes_agree() {
    for (seed, g) in random_graphs(300, 5..=11) {
        let found = detect_bounded_long_even_hole(&g, 6, 12).unwrap();
        let oracle = oracle_even_hole_in_range(&g, 6, 12);
        assert_eq!(found.is_some(), oracle.verdict, "seed {seed}: {g:?}");
    }
}

#[test]
fn jewels_agree() {
    for (seed, g) in random_graphs(300, 5..=11) {
        let found = detect_long_jewel(&g, 6, 7).unwrap();
        if let Some(j) = &found {
            j.validate(&g, 6).unwrap();
        }
        let oracle = oracle_configuration(&g, 6, ConfigKind::Jewel { max_order: 7 });
        assert_eq!(found.is_some(), oracle.verdict, "seed {seed}: {g:?}");
    }
}

#[test]
fn thetas_agree() {
    for (seed, g) in random_graphs(300, 5..=11) {
        let found = detect_long_theta(&g, 6).unwrap();
        let oracle = oracle_configuration(&g, 6, ConfigKind::Theta);
        assert_eq!(found.is_some(), oracle.verdict, "seed {seed}: {g:?}");
    }
}

#[test]
fn ban_the_bombs_agree_without_thetas() {
    let mut checked = 0;
    for (seed, g) in random_graphs(600, 6..=12) {
        if oracle_configuration(&g, 6, ConfigKind::Theta).verdict {
            continue;
        }
        checked += 1;
        let found = detect_long_ban_the_bomb(&g, 6).unwrap();
        let oracle = oracle_configuration(&g, 6, ConfigKind::BanTheBomb);
        assert_eq!(found.is_some(), oracle.verdict, "seed {seed}: {g:?}");
    }
    assert!(checked > 100);
}

#[test]
fn trees_agree() {
    for (seed, g) in random_graphs(300, 5..=11) {
        let t = [0, 2, g.n() - 1];
        let found = three_in_a_tree(&g, t[0], t[1], t[2]).unwrap();
        if let Some(tree) = &found {
            assert!(tree.is_valid(&g));
        }
        let oracle = oracle_configuration(&g, 6, ConfigKind::ThreeInATree { terminals: t });
        assert_eq!(found.is_some(), oracle.verdict, "seed {seed}: {g:?}");
    }
}
