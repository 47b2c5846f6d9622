//! Command-line surface for the linking classifier: graph ingestion in
//! edge-list and graph6 form, classification reports with certificates,
//! witness extraction, and the theorem-verification sweeps.

pub mod args;
pub mod commands;
pub mod graphio;
pub mod report;

pub use args::{Cli, Command, Format, Theorem, WitnessKind};
pub use commands::{exit_code, run, CliError, Outcome};
pub use graphio::{parse_graph, to_edge_list, to_graph6, InputError, LabeledGraph};
pub use report::RunReport;
