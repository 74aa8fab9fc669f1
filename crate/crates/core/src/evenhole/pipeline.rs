use std::fmt;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use super::{detect_clean_lightest_long_even_hole, for_each_cleaning_set};
use crate::budget::Budget;
use crate::configs::{
    check_ell, derive_even_hole, detect_bounded_long_even_hole_with, detect_long_ban_the_bomb_with,
    detect_long_jewel_with, detect_long_theta_with,
};
use crate::error::Result;
use crate::graph::{EdgeOrder, Graph, Hole, VertexSet};
use crate::nearprism::detect_long_near_prism_with;

/// The step that settled the question.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stage {
    ShortHole,
    Jewel,
    Theta,
    BanTheBomb,
    NearPrism,
    CleanHole,
    None,
}

impl Stage {
    pub fn as_str(self) -> &'static str {
        match self {
            Stage::ShortHole => "short-hole",
            Stage::Jewel => "jewel",
            Stage::Theta => "theta",
            Stage::BanTheBomb => "ban-the-bomb",
            Stage::NearPrism => "near-prism",
            Stage::CleanHole => "clean-hole",
            Stage::None => "none",
        }
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PipelineOptions {
    /// Run the cleaning steps separately inside each biconnected block large enough to hold
    /// a hole longer than `2 ell`.
    pub split_blocks: bool,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions { split_blocks: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Detection {
    pub hole: Option<Hole>,
    pub stage: Stage,
}

/// A long even hole of `g`, or `None` if there is none.
pub fn detect_long_even_hole(g: &Graph, ell: usize) -> Result<Option<Hole>> {
    Ok(run_pipeline(g, ell, &PipelineOptions::default(), &Budget::unlimited())?.hole)
}

pub fn run_pipeline(g: &Graph, ell: usize, opts: &PipelineOptions, budget: &Budget) -> Result<Detection> {
    check_ell(ell)?;
    let found = |hole: Hole, stage: Stage| Ok(Detection { hole: Some(hole), stage });
    if let Some(h) = detect_bounded_long_even_hole_with(g, ell, 2 * ell, budget)? {
        return found(h, Stage::ShortHole);
    }
    if let Some(j) = detect_long_jewel_with(g, ell, ell + 2, budget)? {
        return found(derive_even_hole(g, &j, ell)?, Stage::Jewel);
    }
    if let Some(t) = detect_long_theta_with(g, ell, budget)? {
        return found(derive_even_hole(g, &t, ell)?, Stage::Theta);
    }
    if let Some(b) = detect_long_ban_the_bomb_with(g, ell, budget)? {
        return found(derive_even_hole(g, &b, ell)?, Stage::BanTheBomb);
    }
    if let Some(k) = detect_long_near_prism_with(g, ell, budget)? {
        return found(derive_even_hole(g, &k, ell)?, Stage::NearPrism);
    }
    let order = EdgeOrder::canonical(g);
    let regions: Vec<VertexSet> = if opts.split_blocks {
        g.cyclic_blocks().into_iter().filter(|b| b.len() >= 2 * ell + 2).collect()
    } else {
        vec![g.vertices()]
    };
    for region in regions {
        let mut hit = None;
        for_each_cleaning_set(g, region, &order, ell, budget, |x| {
            match detect_clean_lightest_long_even_hole(g, region - x, &order, ell) {
                Some(h) => {
                    hit = Some(h);
                    ControlFlow::Break(())
                }
                None => ControlFlow::Continue(()),
            }
        })?;
        if let Some(h) = hit {
            return found(h, Stage::CleanHole);
        }
    }
    Ok(Detection { hole: None, stage: Stage::None })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        let mut e: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        e.extend((0..5).map(|i| (i, i + 5)));
        e.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        Graph::new(10, e).unwrap()
    }

    #[test]
    fn small_examples() {
        let h = detect_long_even_hole(&Graph::cycle(6), 6).unwrap().unwrap();
        assert_eq!(h.len(), 6);
        assert!(detect_long_even_hole(&Graph::cycle(7), 6).unwrap().is_none());
        assert_eq!(detect_long_even_hole(&petersen(), 6).unwrap().unwrap().len(), 6);
        assert!(detect_long_even_hole(&Graph::complete(8), 6).unwrap().is_none());
        assert!(detect_long_even_hole(&Graph::cycle(6), 5).is_err());
    }

    #[test]
    fn long_cycles_reach_the_clean_stage() {
        let g = Graph::cycle(14);
        let d = run_pipeline(&g, 6, &PipelineOptions::default(), &Budget::unlimited()).unwrap();
        assert_eq!(d.stage, Stage::CleanHole);
        assert_eq!(d.hole.unwrap().len(), 14);
        let d = run_pipeline(&g, 6, &PipelineOptions { split_blocks: false }, &Budget::unlimited()).unwrap();
        assert_eq!(d.stage, Stage::CleanHole);
    }
}
