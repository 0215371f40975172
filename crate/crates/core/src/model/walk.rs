use std::fs;
use std::path::{Path, PathBuf};

use globset::{Glob, GlobSet, GlobSetBuilder};
use rayon::prelude::*;
use thiserror::Error;
use walkdir::WalkDir;

use super::{extract_methods, is_test_file_name, FileError, FileRecord, ProjectModel};
use crate::frontend::{parse_compilation_unit, tokenize_bytes, SyntaxError};

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("cannot read project root {path}: {source}")]
    RootUnreadable {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("project root {0} is not a directory")]
    RootNotDirectory(PathBuf),
    #[error("invalid exclusion pattern {pattern:?}: {source}")]
    BadGlob {
        pattern: String,
        source: globset::Error,
    },
}

/// Glob patterns matched against project-relative paths.
#[derive(Debug, Clone)]
pub struct Exclusions {
    patterns: Vec<String>,
    set: GlobSet,
}

impl Exclusions {
    pub fn new<S: AsRef<str>>(patterns: &[S]) -> Result<Self, ModelError> {
        let mut builder = GlobSetBuilder::new();
        for p in patterns {
            let p = p.as_ref();
            let glob = Glob::new(p).map_err(|source| ModelError::BadGlob {
                pattern: p.to_owned(),
                source,
            })?;
            builder.add(glob);
        }
        let set = builder.build().map_err(|source| ModelError::BadGlob {
            pattern: patterns
                .iter()
                .map(|p| p.as_ref())
                .collect::<Vec<_>>()
                .join(","),
            source,
        })?;
        Ok(Exclusions {
            patterns: patterns.iter().map(|p| p.as_ref().to_owned()).collect(),
            set,
        })
    }

    pub fn none() -> Self {
        Exclusions {
            patterns: Vec::new(),
            set: GlobSet::empty(),
        }
    }

    pub fn patterns(&self) -> &[String] {
        &self.patterns
    }

    pub fn is_excluded(&self, relative_path: &str) -> bool {
        self.set.is_match(relative_path)
    }
}

impl Default for Exclusions {
    fn default() -> Self {
        Exclusions::none()
    }
}

#[derive(Debug, Clone, Default)]
pub struct ModelOptions {
    pub exclusions: Exclusions,
    /// Generate for `*Test.java` files too. They are always counted.
    pub include_test_files: bool,
}

fn relative_path(root: &Path, path: &Path) -> String {
    let rel = path.strip_prefix(root).unwrap_or(path);
    rel.components()
        .map(|c| c.as_os_str().to_string_lossy())
        .collect::<Vec<_>>()
        .join("/")
}

fn is_hidden(name: &std::ffi::OsStr) -> bool {
    name.to_string_lossy().starts_with('.')
}

/// Analyzes one file's bytes into a record. Never fails: lexical errors
/// become the file's single parse error.
pub fn analyze_file(relative_path: &str, bytes: &[u8], eligible: bool) -> FileRecord {
    match tokenize_bytes(bytes) {
        Ok(tokens) => {
            let unit = parse_compilation_unit(&tokens, relative_path);
            FileRecord {
                file_path: relative_path.to_owned(),
                package_name: unit.package_name.clone(),
                line_count: unit.line_count,
                methods: extract_methods(&unit),
                parse_errors: unit.errors,
                eligible,
            }
        }
        Err(e) => {
            let newlines = bytes.iter().filter(|&&b| b == b'\n').count();
            let line_count = newlines + usize::from(bytes.last().is_some_and(|&b| b != b'\n'));
            FileRecord {
                file_path: relative_path.to_owned(),
                package_name: String::new(),
                line_count,
                methods: Vec::new(),
                parse_errors: vec![SyntaxError {
                    line: e.line,
                    column: e.column,
                    message: e.kind.to_string(),
                }],
                eligible,
            }
        }
    }
}

/// Walks `root` for `.java` files (hidden entries skipped), parses them in
/// parallel and merges the results in path order.
pub fn build_project_model(
    root: &Path,
    project_name: &str,
    options: &ModelOptions,
) -> Result<ProjectModel, ModelError> {
    let meta = fs::metadata(root).map_err(|source| ModelError::RootUnreadable {
        path: root.to_owned(),
        source,
    })?;
    if !meta.is_dir() {
        return Err(ModelError::RootNotDirectory(root.to_owned()));
    }
    fs::read_dir(root).map_err(|source| ModelError::RootUnreadable {
        path: root.to_owned(),
        source,
    })?;

    let mut candidates = Vec::new();
    let mut file_errors = Vec::new();
    let walker = WalkDir::new(root)
        .follow_links(false)
        .into_iter()
        .filter_entry(|e| e.depth() == 0 || !is_hidden(e.file_name()));
    for entry in walker {
        match entry {
            Ok(entry) => {
                if entry.file_type().is_dir() {
                    continue;
                }
                let name = entry.file_name().to_string_lossy();
                if !name.ends_with(".java") {
                    continue;
                }
                let rel = relative_path(root, entry.path());
                if options.exclusions.is_excluded(&rel) {
                    continue;
                }
                candidates.push((rel, entry.into_path()));
            }
            Err(e) => {
                let path = e
                    .path()
                    .map(|p| relative_path(root, p))
                    .unwrap_or_default();
                file_errors.push(FileError {
                    path,
                    message: e.to_string(),
                });
            }
        }
    }
    candidates.sort();

    let outcomes: Vec<Result<FileRecord, FileError>> = candidates
        .par_iter()
        .map(|(rel, path)| {
            let bytes = fs::read(path).map_err(|e| FileError {
                path: rel.clone(),
                message: e.to_string(),
            })?;
            let file_name = rel.rsplit('/').next().unwrap_or(rel);
            let eligible = options.include_test_files || !is_test_file_name(file_name);
            Ok(analyze_file(rel, &bytes, eligible))
        })
        .collect();

    let mut files = Vec::with_capacity(outcomes.len());
    for outcome in outcomes {
        match outcome {
            Ok(file) => files.push(file),
            Err(e) => file_errors.push(e),
        }
    }
    file_errors.sort_by(|a, b| a.path.cmp(&b.path));
    Ok(ProjectModel::from_files(project_name, files, file_errors))
}
