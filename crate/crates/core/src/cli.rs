//! `epit analyze` entry point.
//!
//! Exit codes: 0 success, 1 when any file had parse errors or could not be
//! read (reports are still produced), 2 for usage and I/O failures.

use std::collections::HashMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::model::{build_project_model, Exclusions, ModelError, ModelOptions};
use crate::report::{
    render_analysis_report, render_json, render_summary, Clock, OptimizationError, PhaseTimer,
    ProjectSummary,
};
use crate::report::timing::ClockError;
use crate::smell::{detect_clone_groups, NormalizationLevel};
use crate::testgen::{emit_junit_class, generate_project_testcases, RenderStyle, StubEntry, TestSuite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE_ERRORS: i32 = 1;
pub const EXIT_FAILURE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "epit", version, about = "Generate test scenarios from Java sources")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Analyze a project tree and report generated test cases.
    Analyze(AnalyzeArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    /// Project root directory.
    root: PathBuf,
    /// Project name shown in reports (default: root directory name).
    #[arg(long)]
    project: Option<String>,
    /// Generate cases for clone-group representatives only.
    #[arg(long)]
    refactor: bool,
    /// Clone normalization level.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
    clone_level: u8,
    /// Emit JUnit test skeletons under --out.
    #[arg(long, requires = "out")]
    junit: bool,
    /// Output directory for stubs and report.json.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Reproduce the original console spacing and summary counts.
    #[arg(long)]
    paper_compat: bool,
    /// Generate cases for `*Test.java` files too.
    #[arg(long)]
    include_test_files: bool,
    /// Skip files whose project-relative path matches GLOB.
    #[arg(long = "exclude", value_name = "GLOB")]
    exclude: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub root: PathBuf,
    pub project_name: String,
    pub refactor: bool,
    pub clone_level: NormalizationLevel,
    pub junit: bool,
    pub format: OutputFormat,
    pub paper_compat: bool,
    pub out_dir: Option<PathBuf>,
    pub include_test_files: bool,
    pub exclusions: Vec<String>,
}

impl RunConfig {
    pub fn new(root: impl Into<PathBuf>) -> Self {
        let root = root.into();
        RunConfig {
            project_name: default_project_name(&root),
            root,
            refactor: false,
            clone_level: NormalizationLevel::Type1,
            junit: false,
            format: OutputFormat::Text,
            paper_compat: false,
            out_dir: None,
            include_test_files: false,
            exclusions: Vec::new(),
        }
    }

    fn style(&self) -> RenderStyle {
        if self.paper_compat {
            RenderStyle::PaperCompat
        } else {
            RenderStyle::Canonical
        }
    }
}

impl From<AnalyzeArgs> for RunConfig {
    fn from(args: AnalyzeArgs) -> Self {
        let mut config = RunConfig::new(args.root);
        if let Some(name) = args.project {
            config.project_name = name;
        }
        config.refactor = args.refactor;
        config.clone_level =
            NormalizationLevel::from_number(args.clone_level).unwrap_or_default();
        config.junit = args.junit;
        config.format = args.format;
        config.paper_compat = args.paper_compat;
        config.out_dir = args.out;
        config.include_test_files = args.include_test_files;
        config.exclusions = args.exclude;
        config
    }
}

fn default_project_name(root: &Path) -> String {
    let resolved = root.canonicalize().unwrap_or_else(|_| root.to_owned());
    resolved
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| "project".to_owned())
}

#[derive(Debug, Error)]
pub enum RunError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Clock(#[from] ClockError),
    #[error(transparent)]
    Optimization(#[from] OptimizationError),
    #[error("--junit requires --out DIR")]
    MissingOutDir,
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
}

/// Everything a run produces, before it is written anywhere.
#[derive(Debug, Clone)]
pub struct RunOutput {
    pub text_report: String,
    pub text_summary: String,
    pub json: String,
    pub stub_files: Vec<PathBuf>,
    pub parse_error_count: usize,
    pub unreadable_file_count: usize,
    pub warnings: Vec<String>,
}

impl RunOutput {
    pub fn exit_code(&self) -> i32 {
        if self.parse_error_count > 0 || self.unreadable_file_count > 0 {
            EXIT_PARSE_ERRORS
        } else {
            EXIT_OK
        }
    }
}

/// Runs the pipeline: walk and parse, detect clones, generate, emit stubs,
/// render.
pub fn execute(config: &RunConfig, clock: Clock) -> Result<RunOutput, RunError> {
    if config.junit && config.out_dir.is_none() {
        return Err(RunError::MissingOutDir);
    }
    let options = ModelOptions {
        exclusions: Exclusions::new(&config.exclusions)?,
        include_test_files: config.include_test_files,
    };

    let mut timer = PhaseTimer::start(clock);
    let model = timer.phase("parse", || {
        build_project_model(&config.root, &config.project_name, &options)
    })?;
    let eligible = model.eligible_methods();
    let groups = timer.phase("detect", || detect_clone_groups(&eligible, config.clone_level));
    let suite = timer.phase("generate", || {
        generate_project_testcases(&model, &groups, config.refactor)
    });
    let stub_files = match (&config.out_dir, config.junit) {
        (Some(out), true) => timer.phase("emit", || write_stubs(out, &suite))?,
        _ => Vec::new(),
    };
    let timings = timer.finish();

    let style = config.style();
    let summary = ProjectSummary::new(&model, &suite, config.junit, timings)?;
    let text_report = render_analysis_report(&model, &suite, &summary.timings, style);
    let text_summary = render_summary(&summary, style);
    let json = render_json(&model, &suite, &groups, &summary);

    if let Some(out) = &config.out_dir {
        write_file(&out.join("report.json"), &json)?;
    }

    let mut warnings = Vec::new();
    for f in model.files.iter().filter(|f| !f.parse_errors.is_empty()) {
        for e in &f.parse_errors {
            warnings.push(format!("{}:{}:{}: {}", f.file_path, e.line, e.column, e.message));
        }
    }
    for e in &model.file_errors {
        warnings.push(format!("{}: {}", e.path, e.message));
    }

    Ok(RunOutput {
        text_report,
        text_summary,
        json,
        stub_files,
        parse_error_count: model.parse_error_count(),
        unreadable_file_count: model.file_errors.len(),
        warnings,
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), RunError> {
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent).map_err(|source| RunError::Write {
            path: parent.to_owned(),
            source,
        })?;
    }
    fs::write(path, text).map_err(|source| RunError::Write {
        path: path.to_owned(),
        source,
    })
}

/// One test class per source class, under `out` mirroring the package.
pub fn write_stubs(out: &Path, suite: &TestSuite<'_>) -> Result<Vec<PathBuf>, RunError> {
    // (package, class) -> ordered methods with their cases
    let mut order: Vec<(&str, &str)> = Vec::new();
    let mut classes: HashMap<(&str, &str), Vec<(usize, usize)>> = HashMap::new();
    let mut i = 0;
    while i < suite.cases.len() {
        let method = suite.cases[i].method;
        let key = method.key();
        let mut j = i;
        while j < suite.cases.len() && suite.cases[j].method.key() == key {
            j += 1;
        }
        let class_key = (method.package_name.as_str(), method.class_name.as_str());
        let entry = classes.entry(class_key).or_insert_with(|| {
            order.push(class_key);
            Vec::new()
        });
        entry.push((i, j));
        i = j;
    }

    let mut written = Vec::new();
    for class_key @ (package, class_name) in order {
        let entries: Vec<StubEntry<'_, '_>> = classes[&class_key]
            .iter()
            .map(|&(a, b)| StubEntry {
                method: suite.cases[a].method,
                cases: &suite.cases[a..b],
            })
            .collect();
        let source = emit_junit_class(package, class_name, &entries);
        let mut path = out.to_path_buf();
        for segment in package.split('.').filter(|s| !s.is_empty()) {
            path.push(segment);
        }
        path.push(format!("{}.java", crate::testgen::stub_class_name(class_name)));
        write_file(&path, &source)?;
        written.push(path);
    }
    Ok(written)
}

/// Parses `argv` (program name first) and runs, writing to the given
/// streams. Returns the process exit code.
pub fn run_with<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{}", e.render());
                    EXIT_FAILURE
                }
            };
        }
    };
    let Command::Analyze(args) = cli.command;
    let config = RunConfig::from(args);

    let clock = match Clock::from_env() {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_FAILURE;
        }
    };
    match execute(&config, clock) {
        Ok(output) => {
            for w in &output.warnings {
                let _ = writeln!(stderr, "warning: {w}");
            }
            let written = match config.format {
                OutputFormat::Text => write!(
                    stdout,
                    "{}\n{}",
                    output.text_report, output.text_summary
                ),
                OutputFormat::Json => write!(stdout, "{}", output.json),
            };
            if let Err(e) = written.and_then(|_| stdout.flush()) {
                let _ = writeln!(stderr, "error: cannot write report: {e}");
                return EXIT_FAILURE;
            }
            output.exit_code()
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_FAILURE
        }
    }
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}
