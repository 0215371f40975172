use std::fmt::Write;

use super::timing::{format_wall, PhaseTimings};
use super::ProjectSummary;
use crate::model::{MethodRecord, ProjectModel};
use crate::testgen::{RenderStyle, TestSuite};

/// Per-file console report. Only the scenario lines depend on `style`.
pub fn render_analysis_report(
    model: &ProjectModel,
    suite: &TestSuite<'_>,
    timings: &PhaseTimings,
    style: RenderStyle,
) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "Start Time: {}", format_wall(&timings.start));
    let _ = writeln!(out, "### Analyzing project :{} ###", model.project_name);

    for file in &model.files {
        out.push('\n');
        let _ = writeln!(out, "Details <Packages> :{}", file.package_name);
        out.push_str("-----\n");
        let _ = writeln!(out, "Source file {}", file.file_name());
        out.push('\n');
        let _ = writeln!(out, "FullPath /{}/{}", model.project_name, file.file_path);
        let _ = writeln!(out, "Has number of lines: {}", file.line_count);
        for e in &file.parse_errors {
            let _ = writeln!(out, "Parse error at {}:{}: {}", e.line, e.column, e.message);
        }
        out.push_str("Details are :-\n");

        for method in &file.methods {
            out.push('\n');
            write_method(&mut out, method, file.eligible, suite, style);
        }
        out.push('\n');
        out.push_str("-File analyzed End-\n");
    }

    if !model.file_errors.is_empty() {
        out.push('\n');
        for e in &model.file_errors {
            let _ = writeln!(out, "Unreadable file {}: {}", e.path, e.message);
        }
    }
    out
}

fn write_method(
    out: &mut String,
    method: &MethodRecord,
    eligible: bool,
    suite: &TestSuite<'_>,
    style: RenderStyle,
) {
    let _ = writeln!(out, "Method name :{}", method.method_name);
    let _ = writeln!(out, "Signature :{}", method.signature);
    let _ = writeln!(out, "Return Type :{}", method.return_descriptor);
    out.push_str("Input variable :\n");
    let _ = writeln!(out, "{}", method.param_names.join("\t"));
    if !eligible {
        out.push_str("Generate Possible Test Scenario: skipped (test file)\n");
        return;
    }
    if let Some(rep) = suite.clone_of(method) {
        let _ = writeln!(
            out,
            "Generate Possible Test Scenario: skipped (clone of {}.{} at {}:{})",
            rep.class_name, rep.method_name, rep.file_path, rep.start_line
        );
        return;
    }
    out.push_str("Generate Possible Test Scenario:\n");
    for case in suite.cases_for(method) {
        let _ = writeln!(out, "{}", case.render(style));
    }
}

/// Project summary block. Canonical style counts unique packages and
/// prints LOC as an integer; paper-compatible style lists one package
/// entry per declaring file and prints LOC with one decimal.
pub fn render_summary(summary: &ProjectSummary, style: RenderStyle) -> String {
    let packages = match style {
        RenderStyle::Canonical => &summary.unique_package_names,
        RenderStyle::PaperCompat => &summary.package_occurrences,
    };
    let loc = match style {
        RenderStyle::Canonical => summary.total_loc.to_string(),
        RenderStyle::PaperCompat => format!("{}.0", summary.total_loc),
    };

    let mut out = String::new();
    out.push_str("##### Summary #####\n\n");
    let _ = writeln!(out, "Project Name :{}", summary.project_name);
    let _ = writeln!(out, "Total Package :{}", packages.len());
    out.push_str("Package Name :\n");
    for p in packages {
        let _ = writeln!(out, "    <{p}>");
    }
    let _ = writeln!(out, "Total Files :{}", summary.total_files());
    out.push_str("File Name :\n");
    for f in &summary.file_names {
        let _ = writeln!(out, "    [{f}]");
    }
    let _ = writeln!(out, "Total LOC :{loc}");
    let _ = writeln!(
        out,
        "Total Test Cases Without Refactoring:{}",
        summary.cases_without_refactoring
    );
    let _ = writeln!(
        out,
        "Total Test Cases With Refactoring: {}",
        summary.cases_with_refactoring
    );
    let _ = writeln!(
        out,
        "Optimization After Refactoring: {}%",
        summary.optimization_percent
    );
    let _ = writeln!(
        out,
        "JUnit Builder: {}",
        if summary.junit_builder { "Yes" } else { "No" }
    );
    out.push_str("\n#####\n\n");
    let _ = writeln!(out, "Start Time: {}", format_wall(&summary.timings.start));
    let _ = writeln!(out, "End Time: {}", format_wall(&summary.timings.end));
    let _ = writeln!(out, "Time Elapsed: {}ms", summary.timings.elapsed_ms);
    out
}
