use std::collections::HashMap;

use serde::Serialize;

use super::timing::format_iso;
use super::ProjectSummary;
use crate::model::{FileError, ProjectModel};
use crate::smell::CloneGroup;
use crate::testgen::TestSuite;

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Document<'a> {
    project: &'a str,
    files: Vec<FileJson<'a>>,
    test_cases: Vec<TestCaseJson<'a>>,
    summary: SummaryJson<'a>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct FileJson<'a> {
    path: &'a str,
    package: &'a str,
    loc: usize,
    eligible: bool,
    parse_error_count: usize,
    parse_errors: Vec<String>,
    methods: Vec<MethodJson<'a>>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct MethodJson<'a> {
    name: &'a str,
    class: &'a str,
    signature: &'a str,
    return_type: &'a str,
    params: &'a [String],
    start_line: u32,
    end_line: u32,
    /// `null` for methods not considered for generation.
    clone_group_id: Option<usize>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct TestCaseJson<'a> {
    file: &'a str,
    class: &'a str,
    method: &'a str,
    kind: &'static str,
    params: &'a [String],
    boundary: &'static str,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct PhaseJson {
    name: &'static str,
    elapsed_ms: u64,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct SummaryJson<'a> {
    project_name: &'a str,
    total_packages: usize,
    package_names: &'a [String],
    package_occurrences: &'a [String],
    total_files: usize,
    file_names: &'a [String],
    total_loc: usize,
    cases_without_refactoring: usize,
    cases_with_refactoring: usize,
    optimization_percent: u8,
    refactoring_enabled: bool,
    junit_builder: bool,
    parse_error_count: usize,
    unreadable_files: &'a [FileError],
    start_time: String,
    end_time: String,
    elapsed_ms: u64,
    phases: Vec<PhaseJson>,
}

/// Machine-readable report. Key order is fixed; `groups` supplies the
/// `cloneGroupId` of every grouped method (its index in `groups`).
pub fn render_json(
    model: &ProjectModel,
    suite: &TestSuite<'_>,
    groups: &[CloneGroup<'_>],
    summary: &ProjectSummary,
) -> String {
    let group_of: HashMap<_, usize> = groups
        .iter()
        .enumerate()
        .flat_map(|(id, g)| g.members.iter().map(move |m| (m.key(), id)))
        .collect();

    let files = model
        .files
        .iter()
        .map(|f| FileJson {
            path: &f.file_path,
            package: &f.package_name,
            loc: f.line_count,
            eligible: f.eligible,
            parse_error_count: f.parse_error_count(),
            parse_errors: f.parse_errors.iter().map(ToString::to_string).collect(),
            methods: f
                .methods
                .iter()
                .map(|m| MethodJson {
                    name: &m.method_name,
                    class: &m.class_name,
                    signature: &m.signature,
                    return_type: &m.return_descriptor,
                    params: &m.param_names,
                    start_line: m.start_line,
                    end_line: m.end_line,
                    clone_group_id: group_of.get(&m.key()).copied(),
                })
                .collect(),
        })
        .collect();

    let test_cases = suite
        .cases
        .iter()
        .map(|c| TestCaseJson {
            file: &c.method.file_path,
            class: &c.method.class_name,
            method: &c.method.method_name,
            kind: c.kind.word(),
            params: &c.param_names,
            boundary: c.kind.boundary(),
        })
        .collect();

    let t = &summary.timings;
    let doc = Document {
        project: &model.project_name,
        files,
        test_cases,
        summary: SummaryJson {
            project_name: &summary.project_name,
            total_packages: summary.total_packages(),
            package_names: &summary.unique_package_names,
            package_occurrences: &summary.package_occurrences,
            total_files: summary.total_files(),
            file_names: &summary.file_names,
            total_loc: summary.total_loc,
            cases_without_refactoring: summary.cases_without_refactoring,
            cases_with_refactoring: summary.cases_with_refactoring,
            optimization_percent: summary.optimization_percent,
            refactoring_enabled: summary.refactoring_enabled,
            junit_builder: summary.junit_builder,
            parse_error_count: summary.parse_error_count,
            unreadable_files: &model.file_errors,
            start_time: format_iso(&t.start),
            end_time: format_iso(&t.end),
            elapsed_ms: t.elapsed_ms,
            phases: t
                .phases
                .iter()
                .map(|p| PhaseJson {
                    name: p.name,
                    elapsed_ms: p.elapsed_ms,
                })
                .collect(),
        },
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("report serializes");
    text.push('\n');
    text
}
