//! Java method extraction, clone-aware test scenario generation and
//! reporting.
//!
//! The pipeline: [`model::build_project_model`] walks and parses a source
//! tree, [`smell::detect_clone_groups`] collapses duplicate method bodies,
//! [`testgen::generate_project_testcases`] derives valid / invalid / null
//! scenarios, and [`report`] renders the console report, summary and JSON.

pub mod cli;
pub mod frontend;
pub mod metrics;
pub mod model;
pub mod report;
pub mod smell;
pub mod testgen;

pub use frontend::{parse_compilation_unit, reconstruct_source, tokenize, SourceUnit, Token};
pub use model::{build_project_model, count_loc, MethodRecord, ProjectModel};
pub use smell::{detect_clone_groups, CloneGroup, NormalizationLevel};
pub use testgen::{generate_project_testcases, TestCase, TestSuite};
