//! Ingestion, batch driving, and report emission around the core library.

pub mod batch;
pub mod fixtures_run;
pub mod input;
pub mod report;

pub use batch::{run_batch, BatchMode};
pub use input::{grdb_dump_import, parse_polytope_file, ParseError, PolytopeInput};
pub use report::{emit_report, parse_report, BatchReport, Format, ReportRecord};
