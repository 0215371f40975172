#![allow(dead_code)]

pub mod gen;

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use epit::model::{analyze_file, FileRecord};
use epit::{detect_clone_groups, NormalizationLevel, ProjectModel};

use gen::GenProject;

pub fn fixtures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

pub fn fixture(name: &str) -> PathBuf {
    fixtures_dir().join(name)
}

/// Every `.java` fixture, plus the bare method excerpt.
pub fn fixture_sources() -> Vec<PathBuf> {
    let mut out = Vec::new();
    for entry in walkdir(&fixtures_dir()) {
        let name = entry.file_name().unwrap().to_string_lossy().into_owned();
        if name.ends_with(".java") || name == "excerpt.txt" {
            out.push(entry);
        }
    }
    out.sort();
    out
}

pub fn walkdir(dir: &Path) -> Vec<PathBuf> {
    let mut out = Vec::new();
    let mut stack = vec![dir.to_path_buf()];
    while let Some(d) = stack.pop() {
        for entry in fs::read_dir(&d).unwrap() {
            let path = entry.unwrap().path();
            if path.is_dir() {
                stack.push(path);
            } else {
                out.push(path);
            }
        }
    }
    out.sort();
    out
}

pub const FIXED_CLOCK: &str = "1576062247";

pub fn epit(args: &[&str], fixed_clock: bool) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_epit"));
    cmd.args(args);
    if fixed_clock {
        cmd.env("EPIT_FIXED_CLOCK", FIXED_CLOCK);
    } else {
        cmd.env_remove("EPIT_FIXED_CLOCK");
    }
    cmd.output().expect("run epit")
}

pub fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

/// Compares against `tests/fixtures/golden/<name>`; `UPDATE_GOLDEN=1`
/// rewrites the file instead.
pub fn assert_golden(name: &str, actual: &str) {
    let path = fixture("golden").join(name);
    if std::env::var("UPDATE_GOLDEN").as_deref() == Ok("1") {
        fs::create_dir_all(path.parent().unwrap()).unwrap();
        fs::write(&path, actual).unwrap();
        return;
    }
    let expected = fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("missing golden {}: {e}", path.display()));
    if expected != actual {
        let first = expected
            .lines()
            .zip(actual.lines())
            .position(|(a, b)| a != b)
            .unwrap_or(expected.lines().count().min(actual.lines().count()));
        panic!(
            "golden mismatch in {name} at line {}:\n expected: {:?}\n   actual: {:?}",
            first + 1,
            expected.lines().nth(first),
            actual.lines().nth(first)
        );
    }
}

pub fn copy_tree(from: &Path, to: &Path) {
    for file in walkdir(from) {
        let rel = file.strip_prefix(from).unwrap();
        let dest = to.join(rel);
        fs::create_dir_all(dest.parent().unwrap()).unwrap();
        fs::copy(&file, dest).unwrap();
    }
}

/// Model built straight from generated sources, every file eligible.
pub fn model_of(project: &GenProject) -> ProjectModel {
    let files: Vec<FileRecord> = project
        .files
        .iter()
        .map(|(rel, text)| analyze_file(rel, text.as_bytes(), true))
        .collect();
    ProjectModel::from_files("Gen", files, Vec::new())
}

pub type Key = (String, String, String);
pub type Partition = BTreeSet<BTreeSet<Key>>;

/// Clone partition from the crate and from the pairwise oracle, keyed by
/// (file, class, method).
pub fn partitions(project: &GenProject, level: NormalizationLevel) -> (Partition, Partition) {
    let model = model_of(project);
    let eligible = model.eligible_methods();
    let groups = detect_clone_groups(&eligible, level);
    let ours = groups
        .iter()
        .map(|g| {
            g.members
                .iter()
                .map(|m| (m.file_path.clone(), m.class_name.clone(), m.method_name.clone()))
                .collect()
        })
        .collect();

    let type2 = level == NormalizationLevel::Type2;
    let bodies: Vec<_> = project
        .methods
        .iter()
        .map(|m| m.body.as_deref().map(|b| oracle::normalize(b, type2)))
        .collect();
    let theirs = oracle::pairwise_partition(&bodies)
        .into_iter()
        .map(|g| {
            g.into_iter()
                .map(|i| {
                    let m = &project.methods[i];
                    (m.file.clone(), m.class.clone(), m.name.clone())
                })
                .collect()
        })
        .collect();
    (ours, theirs)
}
