//! Three-scenario test case generation (valid / invalid / null input).

mod junit;

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::model::{MethodRecord, ProjectModel};
use crate::smell::CloneGroup;

pub use junit::{emit_junit_class, emit_junit_stub, stub_class_name, StubEntry};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ScenarioKind {
    Valid,
    Invalid,
    NullInput,
}

impl ScenarioKind {
    pub const ALL: [ScenarioKind; 3] = [
        ScenarioKind::Valid,
        ScenarioKind::Invalid,
        ScenarioKind::NullInput,
    ];

    pub fn ordinal(self) -> u8 {
        match self {
            ScenarioKind::Valid => 1,
            ScenarioKind::Invalid => 2,
            ScenarioKind::NullInput => 3,
        }
    }

    pub fn word(self) -> &'static str {
        match self {
            ScenarioKind::Valid => "valid",
            ScenarioKind::Invalid => "invalid",
            ScenarioKind::NullInput => "null",
        }
    }

    /// Fixed boundary input, independent of parameter types.
    pub fn boundary(self) -> &'static str {
        match self {
            ScenarioKind::Valid => "1",
            ScenarioKind::Invalid => "-1",
            ScenarioKind::NullInput => "null",
        }
    }
}

impl fmt::Display for ScenarioKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.word())
    }
}

/// Spacing of rendered scenario lines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RenderStyle {
    /// `Test Case 1 : valid [a, b] are input with : 1`
    #[default]
    Canonical,
    /// `Test Case 1 : valid [a, b]are input with :1`, as the original
    /// console printed it.
    PaperCompat,
}

pub fn render_scenario(kind: ScenarioKind, param_names: &[String], style: RenderStyle) -> String {
    let params = format!("[{}]", param_names.join(", "));
    match style {
        RenderStyle::Canonical => format!(
            "Test Case {} : {} {params} are input with : {}",
            kind.ordinal(),
            kind.word(),
            kind.boundary()
        ),
        RenderStyle::PaperCompat => format!(
            "Test Case {} : {} {params}are input with :{}",
            kind.ordinal(),
            kind.word(),
            kind.boundary()
        ),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TestCase<'m> {
    pub method: &'m MethodRecord,
    pub kind: ScenarioKind,
    pub param_names: Vec<String>,
    /// Canonical rendering.
    pub rendered_line: String,
}

impl TestCase<'_> {
    pub fn render(&self, style: RenderStyle) -> String {
        match style {
            RenderStyle::Canonical => self.rendered_line.clone(),
            style => render_scenario(self.kind, &self.param_names, style),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TestSuite<'m> {
    pub cases: Vec<TestCase<'m>>,
    pub count_without_refactoring: usize,
    pub count_with_refactoring: usize,
    pub refactoring_enabled: bool,
    /// With refactoring on: each suppressed clone mapped to its group's
    /// representative.
    pub suppressed_clones: HashMap<MethodKey<'m>, &'m MethodRecord>,
}

type MethodKey<'m> = (&'m str, &'m str, &'m str, &'m str, u32);

impl<'m> TestSuite<'m> {
    pub fn cases_for<'s>(
        &'s self,
        method: &'s MethodRecord,
    ) -> impl Iterator<Item = &'s TestCase<'m>> + 's {
        let key = method.key();
        self.cases.iter().filter(move |c| c.method.key() == key)
    }

    /// The representative `method` was collapsed into, if it was.
    pub fn clone_of(&self, method: &MethodRecord) -> Option<&'m MethodRecord> {
        self.suppressed_clones.get(&method.key()).copied()
    }
}

/// Exactly three cases, in ordinal order.
pub fn generate_scenarios(method: &MethodRecord) -> [TestCase<'_>; 3] {
    ScenarioKind::ALL.map(|kind| TestCase {
        method,
        kind,
        param_names: method.param_names.clone(),
        rendered_line: render_scenario(kind, &method.param_names, RenderStyle::Canonical),
    })
}

/// Generates the suite for the model's eligible methods. `groups` must be
/// the clone groups of exactly those methods. Both counts are always
/// computed; `refactor` decides which cases are materialised.
pub fn generate_project_testcases<'m>(
    model: &'m ProjectModel,
    groups: &[CloneGroup<'m>],
    refactor: bool,
) -> TestSuite<'m> {
    let eligible = model.eligible_methods();
    let representatives: HashSet<_> = groups.iter().map(|g| g.representative().key()).collect();
    let selected = eligible
        .iter()
        .filter(|m| !refactor || representatives.contains(&m.key()));
    let cases = selected.flat_map(|m| generate_scenarios(m)).collect();
    let mut suppressed_clones = HashMap::new();
    if refactor {
        for group in groups {
            for member in &group.members[1..] {
                suppressed_clones.insert(member.key(), group.representative());
            }
        }
    }
    TestSuite {
        cases,
        count_without_refactoring: 3 * eligible.len(),
        count_with_refactoring: 3 * groups.len(),
        refactoring_enabled: refactor,
        suppressed_clones,
    }
}
