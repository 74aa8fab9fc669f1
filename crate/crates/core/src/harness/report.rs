//! Single-instance runs and their machine-readable reports.

use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::format::encode_graph6;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::evenhole::{run_pipeline, PipelineOptions, Stage};
use crate::graph::Graph;
use crate::oracle::{is_long_even_hole, oracle_long_even_hole};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Engine {
    Pipeline,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Yes,
    No,
}

impl From<bool> for Verdict {
    fn from(b: bool) -> Self {
        if b { Verdict::Yes } else { Verdict::No }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
        })
    }
}

/// Outcome of one detection run. The oracle engine reports stage `none` on negative
/// instances and `exhaustive` on positive ones.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub verdict: Verdict,
    pub stage: ReportStage,
    pub witness: Option<Vec<usize>>,
    pub elapsed_ms: f64,
    pub fingerprint: String,
    pub engine: Engine,
    pub ell: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ReportStage {
    Pipeline(Stage),
    Oracle(OracleStage),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OracleStage {
    Exhaustive,
}

impl fmt::Display for ReportStage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReportStage::Pipeline(s) => s.fmt(f),
            ReportStage::Oracle(OracleStage::Exhaustive) => f.write_str("exhaustive"),
        }
    }
}

impl RunReport {
    /// Checks the report invariants against `g`: stage `none` exactly on negative verdicts,
    /// and a witness that is a long even hole exactly on positive ones.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let none = self.stage == ReportStage::Pipeline(Stage::None);
        let yes = self.verdict == Verdict::Yes;
        if none == yes {
            return Err(Error::InvalidWitness(format!("verdict {} with stage {}", self.verdict, self.stage)));
        }
        match (&self.witness, yes) {
            (Some(w), true) if is_long_even_hole(g, w, self.ell) => Ok(()),
            (None, false) => Ok(()),
            (w, _) => Err(Error::InvalidWitness(format!("witness {w:?} for verdict {}", self.verdict))),
        }
    }
}

/// Hex SHA-256 of the graph6 encoding.
pub fn fingerprint(g: &Graph) -> String {
    hex::encode(Sha256::digest(encode_graph6(g).as_bytes()))
}

/// Runs one engine on `g`. The pipeline honours `budget`; the oracle always runs to completion.
pub fn run(g: &Graph, ell: usize, engine: Engine, budget: &Budget) -> Result<RunReport> {
    let start = Instant::now();
    let (witness, stage) = match engine {
        Engine::Pipeline => {
            let d = run_pipeline(g, ell, &PipelineOptions::default(), budget)?;
            (d.hole.map(|h| h.vertices().to_vec()), ReportStage::Pipeline(d.stage))
        }
        Engine::Oracle => {
            let r = oracle_long_even_hole(g, ell);
            let stage = if r.verdict {
                ReportStage::Oracle(OracleStage::Exhaustive)
            } else {
                ReportStage::Pipeline(Stage::None)
            };
            (r.hole().map(<[usize]>::to_vec), stage)
        }
    };
    Ok(RunReport {
        verdict: witness.is_some().into(),
        stage,
        witness,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        fingerprint: fingerprint(g),
        engine,
        ell,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_cycle_is_a_short_hole() {
        let g = Graph::cycle(6);
        let r = run(&g, 6, Engine::Pipeline, &Budget::unlimited()).unwrap();
        assert_eq!((r.verdict, r.stage), (Verdict::Yes, ReportStage::Pipeline(Stage::ShortHole)));
        assert_eq!(r.witness.as_ref().unwrap().len(), 6);
        r.validate(&g).unwrap();
    }

    #[test]
    fn oracle_rejects_seven_cycle() {
        let g = Graph::cycle(7);
        let r = run(&g, 6, Engine::Oracle, &Budget::unlimited()).unwrap();
        assert_eq!(r.verdict, Verdict::No);
        r.validate(&g).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["stage"], "none");
        assert_eq!(json["verdict"], "no");
        assert_eq!(json["fingerprint"].as_str().unwrap().len(), 64);
    }

    #[test]
    fn mismatched_stage_is_invalid() {
        let g = Graph::cycle(6);
        let mut r = run(&g, 6, Engine::Pipeline, &Budget::unlimited()).unwrap();
        r.stage = ReportStage::Pipeline(Stage::None);
        assert!(r.validate(&g).is_err());
    }
}
