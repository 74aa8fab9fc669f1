//! Instance generation, file formats, differential fuzzing and run reports.

pub mod format;
pub mod fuzz;
pub mod generate;
pub mod report;

pub use format::{decode_graph6, encode_graph6, parse_edge_list, parse_graph, Format, ParseError};
pub use generate::{generate, GeneratorSpec, Instance, Noise};
pub use fuzz::{fuzz, shrink, Counterexample, Family, FuzzConfig, FuzzReport, InstanceResult, Outcome, Percentiles};
pub use report::{fingerprint, run, Engine, OracleStage, ReportStage, RunReport, Verdict};
