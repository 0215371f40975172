//! Flat method and metrics model of a project.

pub mod descriptor;
mod walk;

use serde::Serialize;

use crate::frontend::{SourceUnit, SyntaxError};
use crate::smell::{Fingerprint, NormalizationLevel};

pub use crate::metrics::count_loc;
pub use descriptor::{encode_signature, encode_type};
pub use walk::{analyze_file, build_project_model, Exclusions, ModelError, ModelOptions};

/// Fingerprints of a method body at both normalization levels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BodyFingerprints {
    pub type1: Fingerprint,
    pub type2: Fingerprint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MethodRecord {
    /// Project-relative, `/`-separated.
    pub file_path: String,
    pub package_name: String,
    /// Dotted for nested types, e.g. `Outer.Inner`.
    pub class_name: String,
    pub method_name: String,
    pub signature: String,
    pub return_descriptor: String,
    pub param_names: Vec<String>,
    pub param_count: usize,
    /// `None` for bodiless (abstract, interface, native) methods.
    pub fingerprints: Option<BodyFingerprints>,
    pub start_line: u32,
    pub end_line: u32,
}

impl MethodRecord {
    pub fn fingerprint(&self, level: NormalizationLevel) -> Option<&Fingerprint> {
        self.fingerprints.as_ref().map(|f| match level {
            NormalizationLevel::Type1 => &f.type1,
            NormalizationLevel::Type2 => &f.type2,
        })
    }

    /// Identity within a project model.
    pub fn key(&self) -> (&str, &str, &str, &str, u32) {
        (
            &self.file_path,
            &self.class_name,
            &self.method_name,
            &self.signature,
            self.start_line,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FileRecord {
    pub file_path: String,
    pub package_name: String,
    pub line_count: usize,
    pub methods: Vec<MethodRecord>,
    /// Lexical and syntax errors, in source order.
    pub parse_errors: Vec<SyntaxError>,
    /// Whether the file's methods receive generated test cases.
    pub eligible: bool,
}

impl FileRecord {
    pub fn file_name(&self) -> &str {
        self.file_path.rsplit('/').next().unwrap_or(&self.file_path)
    }

    pub fn parse_error_count(&self) -> usize {
        self.parse_errors.len()
    }
}

/// A file that could not be read at all.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FileError {
    pub path: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectModel {
    pub project_name: String,
    /// Ordered by path.
    pub files: Vec<FileRecord>,
    /// Sorted, deduplicated.
    pub unique_package_names: Vec<String>,
    /// One entry per file that declares a package, in file order.
    pub package_occurrences: Vec<String>,
    pub total_loc: usize,
    pub file_errors: Vec<FileError>,
}

impl ProjectModel {
    pub fn from_files(
        project_name: impl Into<String>,
        mut files: Vec<FileRecord>,
        file_errors: Vec<FileError>,
    ) -> Self {
        files.sort_by(|a, b| a.file_path.cmp(&b.file_path));
        let package_occurrences: Vec<String> = files
            .iter()
            .filter(|f| !f.package_name.is_empty())
            .map(|f| f.package_name.clone())
            .collect();
        let mut unique_package_names = package_occurrences.clone();
        unique_package_names.sort();
        unique_package_names.dedup();
        let total_loc = files.iter().map(|f| f.line_count).sum();
        ProjectModel {
            project_name: project_name.into(),
            files,
            unique_package_names,
            package_occurrences,
            total_loc,
            file_errors,
        }
    }

    pub fn methods(&self) -> impl Iterator<Item = &MethodRecord> {
        self.files.iter().flat_map(|f| f.methods.iter())
    }

    /// Methods of eligible files, in model order.
    pub fn eligible_methods(&self) -> Vec<&MethodRecord> {
        self.files
            .iter()
            .filter(|f| f.eligible)
            .flat_map(|f| f.methods.iter())
            .collect()
    }

    pub fn parse_error_count(&self) -> usize {
        self.files.iter().map(FileRecord::parse_error_count).sum()
    }
}

/// One record per method declaration, nested types included, in source
/// order.
pub fn extract_methods(unit: &SourceUnit) -> Vec<MethodRecord> {
    let mut records = Vec::new();
    for ty in &unit.types {
        ty.walk("", &mut |qualified, t| {
            for m in &t.methods {
                let fingerprints = m.has_body().then(|| BodyFingerprints {
                    type1: Fingerprint::of(&m.body, NormalizationLevel::Type1),
                    type2: Fingerprint::of(&m.body, NormalizationLevel::Type2),
                });
                let param_names: Vec<String> = m.params.iter().map(|p| p.name.clone()).collect();
                records.push(MethodRecord {
                    file_path: unit.file_path.clone(),
                    package_name: unit.package_name.clone(),
                    class_name: qualified.to_owned(),
                    method_name: m.name.clone(),
                    signature: encode_signature(m),
                    return_descriptor: encode_type(&m.return_type),
                    param_count: param_names.len(),
                    param_names,
                    fingerprints,
                    start_line: m.start_line,
                    end_line: m.end_line,
                });
            }
        });
    }
    records.sort_by_key(|r| r.start_line);
    records
}

pub fn is_test_file_name(file_name: &str) -> bool {
    file_name.ends_with("Test.java")
}
