//! File formats: Cayley/gyration tables (text and csv), lattice diagrams in
//! DOT and the JSON verification report.

pub mod dot;
pub mod report;
pub mod tables;

pub use dot::emit_lattice_dot;
pub use report::ReportDocument;
pub use tables::{emit_tables, load_tables, TableDocument, TableFormat};
