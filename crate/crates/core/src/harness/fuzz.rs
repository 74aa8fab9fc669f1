//! Differential fuzzing of the pipeline against the oracle, with counterexample shrinking.

use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::Path;
use std::time::{Duration, Instant};

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::format::encode_graph6;
use super::generate::{generate, GeneratorSpec};
use super::report::{run, Engine, RunReport, Verdict};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::fault::{self, Fault};
use crate::graph::{Graph, VertexSet};
use crate::oracle::oracle_long_even_hole;

/// Environment variable capping the worker pool size.
pub const THREADS_ENV: &str = "LONGHOLE_THREADS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Gnp,
    Cycle,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FuzzConfig {
    pub count: usize,
    pub n_min: usize,
    pub n_max: usize,
    /// Edge probabilities, used round-robin. Ignored for cycles.
    pub p: Vec<f64>,
    pub family: Family,
    pub ell: usize,
    pub seed: u64,
    pub timeout_ms: u64,
    /// Mutation injected into the pipeline side only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fault: Option<Fault>,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            count: 100,
            n_min: 6,
            n_max: 16,
            p: vec![0.1, 0.2, 0.3, 0.4, 0.5],
            family: Family::Gnp,
            ell: 6,
            seed: 0,
            timeout_ms: 120_000,
            fault: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Agree,
    Disagree,
    Undecided,
    /// The pipeline failed, or its report broke an invariant.
    Violation,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceResult {
    pub index: usize,
    pub seed: u64,
    pub spec: GeneratorSpec,
    pub outcome: Outcome,
    pub pipeline: Option<RunReport>,
    pub oracle_verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub index: usize,
    pub outcome: Outcome,
    pub seed: u64,
    pub spec: GeneratorSpec,
    pub original: String,
    pub shrunk: String,
    pub shrunk_vertices: usize,
    pub shrunk_edges: usize,
    pub pipeline_verdict: Option<Verdict>,
    pub oracle_verdict: Verdict,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Percentiles {
    pub p50: f64,
    pub p90: f64,
    pub p99: f64,
    pub max: f64,
}

impl Percentiles {
    fn of(mut xs: Vec<f64>) -> Self {
        if xs.is_empty() {
            return Percentiles::default();
        }
        xs.sort_by(f64::total_cmp);
        let at = |q: f64| xs[((q * xs.len() as f64).ceil() as usize).clamp(1, xs.len()) - 1];
        Percentiles { p50: at(0.5), p90: at(0.9), p99: at(0.99), max: xs[xs.len() - 1] }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FuzzReport {
    pub config: FuzzConfig,
    pub instances: usize,
    pub decided: usize,
    pub agreements: usize,
    pub disagreements: usize,
    pub undecided: usize,
    pub violations: usize,
    /// Agreements over decided instances; 1 when nothing was decided.
    pub agreement_rate: f64,
    pub stages: BTreeMap<String, usize>,
    pub pipeline_ms: Percentiles,
    pub oracle_ms: Percentiles,
    pub counterexamples: Vec<Counterexample>,
    #[serde(skip)]
    pub results: Vec<InstanceResult>,
}

impl FuzzReport {
    /// Writes `counterexamples.g6` (one shrunk graph per line), `manifest.json` and `summary.json`.
    pub fn persist(&self, dir: &Path) -> io::Result<()> {
        fs::create_dir_all(dir)?;
        let lines: String = self.counterexamples.iter().map(|c| format!("{}\n", c.shrunk)).collect();
        fs::write(dir.join("counterexamples.g6"), lines)?;
        let manifest = serde_json::json!({ "config": self.config, "counterexamples": self.counterexamples });
        fs::write(dir.join("manifest.json"), serde_json::to_string_pretty(&manifest)?)?;
        fs::write(dir.join("summary.json"), serde_json::to_string_pretty(self)?)?;
        Ok(())
    }
}

/// Worker pool size: `LONGHOLE_THREADS` if set to a positive integer, else rayon's default.
pub fn thread_count() -> usize {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&t: &usize| t > 0)
        .unwrap_or_else(rayon::current_num_threads)
}

fn validate_config(c: &FuzzConfig) -> Result<()> {
    let bad = |m: &str| Err(Error::InvalidParameter(m.into()));
    if c.n_min > c.n_max {
        return bad("n-min exceeds n-max");
    }
    if c.family == Family::Gnp && c.count > 0 && c.p.is_empty() {
        return bad("at least one edge probability is needed");
    }
    if c.p.iter().any(|p| !(0.0..=1.0).contains(p)) {
        return bad("edge probabilities must lie in [0, 1]");
    }
    if c.family == Family::Cycle && c.n_min < 3 {
        return bad("cycles need at least 3 vertices");
    }
    crate::configs::check_ell(c.ell)
}

/// The generator spec and seed of every instance, drawn from one stream so that the
/// corpus depends on `config.seed` only.
pub fn instance_specs(config: &FuzzConfig) -> Vec<(GeneratorSpec, u64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    (0..config.count)
        .map(|i| {
            let n = rng.random_range(config.n_min..=config.n_max);
            let seed = rng.random::<u64>();
            let spec = match config.family {
                Family::Gnp => GeneratorSpec::Gnp { n, p: config.p[i % config.p.len()] },
                Family::Cycle => GeneratorSpec::Cycle { n },
            };
            (spec, seed)
        })
        .collect()
}

fn pipeline_run(g: &Graph, config: &FuzzConfig) -> Result<RunReport> {
    let budget = Budget::with_timeout(Duration::from_millis(config.timeout_ms));
    fault::with(config.fault, || run(g, config.ell, Engine::Pipeline, &budget))
}

fn run_instance(index: usize, spec: GeneratorSpec, seed: u64, config: &FuzzConfig) -> Result<(InstanceResult, Graph)> {
    let g = generate(&spec, config.ell, seed)?.graph;
    let oracle_verdict = oracle_long_even_hole(&g, config.ell).verdict.into();
    let (outcome, pipeline, error) = match pipeline_run(&g, config) {
        Err(Error::Interrupted) => (Outcome::Undecided, None, None),
        Err(e) => (Outcome::Violation, None, Some(e.to_string())),
        Ok(r) => match r.validate(&g) {
            Err(e) if r.verdict == oracle_verdict => (Outcome::Violation, Some(r), Some(e.to_string())),
            Err(e) => (Outcome::Disagree, Some(r), Some(e.to_string())),
            Ok(()) if r.verdict == oracle_verdict => (Outcome::Agree, Some(r), None),
            Ok(()) => (Outcome::Disagree, Some(r), None),
        },
    };
    Ok((InstanceResult { index, seed, spec, outcome, pipeline, oracle_verdict, error }, g))
}

/// Whether the pipeline still gets `g` wrong in the way recorded by `outcome`. Timeouts never count.
fn mismatch(g: &Graph, config: &FuzzConfig, outcome: Outcome) -> bool {
    let r = match pipeline_run(g, config) {
        Err(Error::Interrupted) => return false,
        Err(_) => return outcome == Outcome::Violation,
        Ok(r) => r,
    };
    let agrees = r.verdict == oracle_long_even_hole(g, config.ell).verdict.into();
    match outcome {
        Outcome::Disagree => !agrees,
        Outcome::Violation => agrees && r.validate(g).is_err(),
        _ => false,
    }
}

/// Greedily deletes vertices, then edges, while `keep` still holds, repeating until no
/// single deletion of either kind preserves it.
pub fn shrink(g: &Graph, keep: impl Fn(&Graph) -> bool) -> Graph {
    let mut g = g.clone();
    loop {
        let mut changed = false;
        let mut v = 0;
        while v < g.n() {
            let (h, _) = g.induced_subgraph(g.vertices() - VertexSet::singleton(v));
            if keep(&h) {
                g = h;
                changed = true;
            } else {
                v += 1;
            }
        }
        let mut i = 0;
        while i < g.edge_count() {
            let (a, b) = g.edges()[i];
            let h = g.without_edge(a, b);
            if keep(&h) {
                g = h;
                changed = true;
            } else {
                i += 1;
            }
        }
        if !changed {
            return g;
        }
    }
}

pub fn fuzz(config: &FuzzConfig) -> Result<FuzzReport> {
    validate_config(config)?;
    let specs = instance_specs(config);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(thread_count())
        .build()
        .map_err(|e| Error::InvalidParameter(e.to_string()))?;
    let runs: Vec<(InstanceResult, Graph)> = pool.install(|| {
        specs
            .into_par_iter()
            .enumerate()
            .map(|(i, (spec, seed))| run_instance(i, spec, seed, config))
            .collect::<Result<_>>()
    })?;

    let mut counterexamples = Vec::new();
    for (r, g) in runs.iter().filter(|(r, _)| matches!(r.outcome, Outcome::Disagree | Outcome::Violation)) {
        let small = shrink(g, |h| mismatch(h, config, r.outcome));
        counterexamples.push(Counterexample {
            index: r.index,
            outcome: r.outcome,
            seed: r.seed,
            spec: r.spec.clone(),
            original: encode_graph6(g),
            shrunk: encode_graph6(&small),
            shrunk_vertices: small.n(),
            shrunk_edges: small.edge_count(),
            pipeline_verdict: r.pipeline.as_ref().map(|p| p.verdict),
            oracle_verdict: r.oracle_verdict,
        });
    }

    let results: Vec<InstanceResult> = runs.into_iter().map(|(r, _)| r).collect();
    let count = |o: Outcome| results.iter().filter(|r| r.outcome == o).count();
    let (agreements, disagreements, undecided, violations) =
        (count(Outcome::Agree), count(Outcome::Disagree), count(Outcome::Undecided), count(Outcome::Violation));
    let decided = results.len() - undecided;
    let mut stages = BTreeMap::new();
    for r in results.iter().filter_map(|r| r.pipeline.as_ref()) {
        *stages.entry(r.stage.to_string()).or_insert(0) += 1;
    }
    let pipeline_ms = Percentiles::of(results.iter().filter_map(|r| r.pipeline.as_ref().map(|p| p.elapsed_ms)).collect());
    let oracle_ms = Percentiles::of(oracle_times(&results, config));
    Ok(FuzzReport {
        config: config.clone(),
        instances: results.len(),
        decided,
        agreements,
        disagreements,
        undecided,
        violations,
        agreement_rate: if decided == 0 { 1.0 } else { agreements as f64 / decided as f64 },
        stages,
        pipeline_ms,
        oracle_ms,
        counterexamples,
        results,
    })
}

/// Oracle timings are taken in a separate sequential pass so that they are not skewed by
/// contention with pipeline workers.
fn oracle_times(results: &[InstanceResult], config: &FuzzConfig) -> Vec<f64> {
    results
        .iter()
        .filter_map(|r| generate(&r.spec, config.ell, r.seed).ok())
        .map(|inst| {
            let t = Instant::now();
            oracle_long_even_hole(&inst.graph, config.ell);
            t.elapsed().as_secs_f64() * 1e3
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_config_gives_empty_report() {
        let r = fuzz(&FuzzConfig { count: 0, ..Default::default() }).unwrap();
        assert_eq!((r.instances, r.decided, r.agreement_rate), (0, 0, 1.0));
        assert!(r.counterexamples.is_empty());
    }

    #[test]
    fn small_gnp_run_agrees() {
        let config = FuzzConfig { count: 10, n_min: 6, n_max: 10, p: vec![0.3], seed: 1, ..Default::default() };
        let r = fuzz(&config).unwrap();
        assert_eq!(r.agreements, 10);
        assert_eq!(r.stages.values().sum::<usize>(), 10);
    }

    #[test]
    fn corpus_is_deterministic() {
        let config = FuzzConfig { count: 20, seed: 9, ..Default::default() };
        assert_eq!(instance_specs(&config), instance_specs(&config));
        assert_ne!(instance_specs(&config), instance_specs(&FuzzConfig { seed: 10, ..config }));
    }

    #[test]
    fn shrinking_keeps_the_property_and_is_minimal() {
        let keep = |h: &Graph| oracle_long_even_hole(h, 6).verdict;
        let g = generate(&GeneratorSpec::Gnp { n: 14, p: 0.3 }, 6, 4).unwrap().graph;
        assert!(keep(&g));
        let s = shrink(&g, keep);
        assert!(keep(&s));
        assert_eq!((s.n(), s.edge_count()), (6, 6));
    }

    #[test]
    fn percentiles_of_ten() {
        let p = Percentiles::of((1..=10).map(f64::from).collect());
        assert_eq!((p.p50, p.p90, p.p99, p.max), (5.0, 9.0, 10.0, 10.0));
    }
}
