//! Command-line support for `covreg`: graph documents, reports and the
//! verification harness.

pub mod error;
pub mod graph_io;
pub mod harness;
pub mod report;

pub use error::{CliError, Result};
pub use graph_io::{load_graph, parse_graph, GraphDocument};
pub use report::{Check, Report, Verification};
