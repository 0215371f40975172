//! Console analysis report, project summary, JSON document and the
//! optimization metric.

mod json;
mod text;
pub mod timing;

use thiserror::Error;

use crate::model::ProjectModel;
use crate::testgen::TestSuite;

pub use json::render_json;
pub use text::{render_analysis_report, render_summary};
pub use timing::{format_iso, format_wall, Clock, PhaseTimer, PhaseTimings};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("test cases with refactoring ({with}) exceed cases without ({without})")]
pub struct OptimizationError {
    pub without: usize,
    pub with: usize,
}

/// Percentage reduction in test cases, `100 * (without - with) / without`
/// rounded half up. Kept off the endpoints unless exact: any reduction
/// reports at least 1%, and 100% means every case was removed.
pub fn compute_optimization(without: usize, with: usize) -> Result<u8, OptimizationError> {
    if with > without {
        return Err(OptimizationError { without, with });
    }
    if without == 0 {
        return Ok(0);
    }
    let removed = (without - with) as u128;
    let without_wide = without as u128;
    let rounded = (200 * removed + without_wide) / (2 * without_wide);
    let percent = if with == without {
        0
    } else if with == 0 {
        100
    } else {
        rounded.clamp(1, 99)
    };
    Ok(percent as u8)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectSummary {
    pub project_name: String,
    pub unique_package_names: Vec<String>,
    pub package_occurrences: Vec<String>,
    pub file_names: Vec<String>,
    pub total_loc: usize,
    pub cases_without_refactoring: usize,
    pub cases_with_refactoring: usize,
    pub optimization_percent: u8,
    pub refactoring_enabled: bool,
    pub junit_builder: bool,
    pub parse_error_count: usize,
    pub unreadable_file_count: usize,
    pub timings: PhaseTimings,
}

impl ProjectSummary {
    pub fn new(
        model: &ProjectModel,
        suite: &TestSuite<'_>,
        junit_builder: bool,
        timings: PhaseTimings,
    ) -> Result<Self, OptimizationError> {
        let optimization_percent = compute_optimization(
            suite.count_without_refactoring,
            suite.count_with_refactoring,
        )?;
        Ok(ProjectSummary {
            project_name: model.project_name.clone(),
            unique_package_names: model.unique_package_names.clone(),
            package_occurrences: model.package_occurrences.clone(),
            file_names: model.files.iter().map(|f| f.file_name().to_owned()).collect(),
            total_loc: model.total_loc,
            cases_without_refactoring: suite.count_without_refactoring,
            cases_with_refactoring: suite.count_with_refactoring,
            optimization_percent,
            refactoring_enabled: suite.refactoring_enabled,
            junit_builder,
            parse_error_count: model.parse_error_count(),
            unreadable_file_count: model.file_errors.len(),
            timings,
        })
    }

    pub fn total_packages(&self) -> usize {
        self.unique_package_names.len()
    }

    pub fn total_files(&self) -> usize {
        self.file_names.len()
    }
}
