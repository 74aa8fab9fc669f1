use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use longhole::budget::Budget;
use longhole::error::Error;
use longhole::graph::{EdgeOrder, Graph};
use longhole::harness::format::write_edge_list;
use longhole::harness::{
    encode_graph6, fuzz, generate, parse_graph, run, Engine, Family, Format, FuzzConfig, GeneratorSpec, Noise,
};
use longhole::oracle::audit_lemmas;

/// Detects induced even cycles of length at least l.
#[derive(Parser)]
#[command(name = "longhole", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a graph has a long even hole.
    Detect {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "pipeline")]
        engine: EngineArg,
        /// Print the run report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Compare the pipeline with the oracle on random graphs.
    Fuzz {
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 6)]
        n_min: usize,
        #[arg(long, default_value_t = 16)]
        n_max: usize,
        /// Edge probabilities, used round-robin.
        #[arg(long, value_delimiter = ',', default_value = "0.1,0.2,0.3,0.4,0.5")]
        p: Vec<f64>,
        #[arg(long, value_enum, default_value = "gnp")]
        family: FamilyArg,
        #[arg(long, default_value_t = 6)]
        l: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 120_000)]
        timeout_ms: u64,
        /// Directory for counterexamples, manifest and summary.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Check structural lemmas on the extremal objects of a graph.
    Audit {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Generate a seeded instance.
    Gen {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Vertex count for gnp and cycle.
        #[arg(long, default_value_t = 14)]
        n: usize,
        #[arg(long, default_value_t = 0.2)]
        p: f64,
        /// Hole length for planted-hole.
        #[arg(long, default_value_t = 14)]
        length: usize,
        /// Three path lengths for planted-prism and planted-theta.
        #[arg(long, value_delimiter = ',', num_args = 3, default_value = "2,7,7")]
        lengths: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        noise_vertices: usize,
        #[arg(long, default_value_t = 2)]
        noise_attach: usize,
        #[arg(long, default_value_t = 0.2)]
        noise_p: f64,
        #[arg(long, value_enum, default_value = "graph6")]
        format: FormatArg,
        /// Output file; standard output if absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Input {
    #[arg(long)]
    l: usize,
    #[arg(long)]
    input: PathBuf,
    /// Input format; inferred from the extension if absent (.g6 and .graph6 mean graph6).
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Pipeline,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Gnp,
    Cycle,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Gnp,
    Cycle,
    PlantedHole,
    PlantedPrism,
    PlantedTheta,
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidWitness(_) | Error::Precondition(_) => Failure::Internal(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Detect { input, engine, json } => detect(&input, engine, json),
        Command::Fuzz { count, n_min, n_max, p, family, l, seed, timeout_ms, out, json } => {
            let family = match family {
                FamilyArg::Gnp => Family::Gnp,
                FamilyArg::Cycle => Family::Cycle,
            };
            normalize_strict(l).and_then(|ell| {
                let config = FuzzConfig { count, n_min, n_max, p, family, ell, seed, timeout_ms, fault: None };
                fuzz_cmd(&config, out.as_deref(), json)
            })
        }
        Command::Audit { input, json } => audit(&input, json),
        Command::Gen { kind, seed, n, p, length, lengths, noise_vertices, noise_attach, noise_p, format, out } => {
            let noise = Noise { vertices: noise_vertices, attach: noise_attach, p: noise_p };
            let lengths = [lengths[0], lengths[1], lengths[2]];
            let spec = match kind {
                KindArg::Gnp => GeneratorSpec::Gnp { n, p },
                KindArg::Cycle => GeneratorSpec::Cycle { n },
                KindArg::PlantedHole => GeneratorSpec::PlantedHole { length, noise },
                KindArg::PlantedPrism => GeneratorSpec::PlantedPrism { lengths, noise },
                KindArg::PlantedTheta => GeneratorSpec::PlantedTheta { lengths, noise },
            };
            gen(&spec, seed, format, out.as_deref())
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(m)) => {
            eprintln!("internal error: {m}");
            ExitCode::from(3)
        }
    }
}

/// Odd values round up to the next even one; 4 is answered by the oracle.
fn normalize(l: usize) -> Result<(usize, bool), Failure> {
    let ell = l + l % 2;
    match ell {
        0..=2 => Err(Failure::Input(format!("l must be at least 3, got {l}"))),
        4 => Ok((4, true)),
        _ => Ok((ell, false)),
    }
}

fn normalize_strict(l: usize) -> Result<usize, Failure> {
    match normalize(l)? {
        (ell, false) => Ok(ell),
        _ => Err(Failure::Input(format!("l must be at least 5 here, got {l}"))),
    }
}

fn read_graph(input: &Input) -> Result<Graph, Failure> {
    let bytes = fs::read(&input.input).map_err(|e| Failure::Input(format!("{}: {e}", input.input.display())))?;
    let format = match input.format {
        Some(FormatArg::Graph6) => Format::Graph6,
        Some(FormatArg::Edgelist) => Format::EdgeList,
        None => match input.input.extension().and_then(|e| e.to_str()) {
            Some("g6" | "graph6") => Format::Graph6,
            _ => Format::EdgeList,
        },
    };
    parse_graph(&bytes, format).map_err(|e| Failure::Input(format!("{}: {e}", input.input.display())))
}

fn detect(input: &Input, engine: EngineArg, json: bool) -> Outcome {
    let g = read_graph(input)?;
    let (ell, force_oracle) = normalize(input.l)?;
    let engine = match engine {
        EngineArg::Oracle => Engine::Oracle,
        EngineArg::Pipeline if force_oracle => Engine::Oracle,
        EngineArg::Pipeline => Engine::Pipeline,
    };
    let report = run(&g, ell, engine, &Budget::unlimited())?;
    report.validate(&g).map_err(|e| Failure::Internal(e.to_string()))?;
    let mut out = io::stdout().lock();
    if json {
        writeln!(out, "{}", serde_json::to_string(&report)?)?;
    } else {
        writeln!(out, "verdict: {}", report.verdict)?;
        writeln!(out, "stage: {}", report.stage)?;
        if let Some(w) = &report.witness {
            writeln!(out, "witness: {}", join(w))?;
        }
        writeln!(out, "elapsed_ms: {:.3}", report.elapsed_ms)?;
    }
    Ok(())
}

fn fuzz_cmd(config: &FuzzConfig, out: Option<&Path>, json: bool) -> Outcome {
    let report = fuzz(config)?;
    if let Some(dir) = out {
        report.persist(dir)?;
    }
    let mut stdout = io::stdout().lock();
    if json {
        writeln!(stdout, "{}", serde_json::to_string_pretty(&report)?)?;
    } else {
        writeln!(stdout, "instances: {}", report.instances)?;
        writeln!(stdout, "agreements: {} of {} decided ({:.4})", report.agreements, report.decided, report.agreement_rate)?;
        writeln!(stdout, "disagreements: {}", report.disagreements)?;
        writeln!(stdout, "undecided: {}", report.undecided)?;
        writeln!(stdout, "violations: {}", report.violations)?;
        for (stage, n) in &report.stages {
            writeln!(stdout, "stage {stage}: {n}")?;
        }
        let p = report.pipeline_ms;
        writeln!(stdout, "pipeline ms: p50 {:.3} p90 {:.3} p99 {:.3} max {:.3}", p.p50, p.p90, p.p99, p.max)?;
        for c in &report.counterexamples {
            writeln!(stdout, "counterexample {} ({:?}): {}", c.index, c.outcome, c.shrunk)?;
        }
    }
    if report.disagreements + report.violations > 0 {
        return Err(Failure::Internal(format!(
            "{} disagreements and {} violations",
            report.disagreements, report.violations
        )));
    }
    Ok(())
}

fn audit(input: &Input, json: bool) -> Outcome {
    let g = read_graph(input)?;
    let ell = normalize_strict(input.l)?;
    let report = audit_lemmas(&g, &EdgeOrder::canonical(&g), ell);
    let mut out = io::stdout().lock();
    if json {
        writeln!(out, "{}", serde_json::to_string(&report)?)?;
    } else {
        writeln!(out, "prospect: {}", report.prospect)?;
        writeln!(out, "candidate: {}", report.candidate)?;
        for (lemma, n) in &report.checked {
            writeln!(out, "checked {}: {n}", serde_json::to_value(lemma)?.as_str().unwrap_or_default())?;
        }
        for f in &report.findings {
            writeln!(out, "finding {:?}: {} [{}]", f.lemma, f.detail, join(&f.witness))?;
        }
    }
    if !report.passed() {
        return Err(Failure::Internal(format!("{} audit findings", report.findings.len())));
    }
    Ok(())
}

fn gen(spec: &GeneratorSpec, seed: u64, format: FormatArg, out: Option<&Path>) -> Outcome {
    let inst = generate(spec, 6, seed)?;
    let text = match format {
        FormatArg::Graph6 => format!("{}\n", encode_graph6(&inst.graph)),
        FormatArg::Edgelist => write_edge_list(&inst.graph),
    };
    match out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn join(vs: &[usize]) -> String {
    vs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}
