//! JUnit 4 test-class skeletons, one test method per scenario.

use std::collections::HashSet;
use std::fmt::Write;

use super::{ScenarioKind, TestCase};
use crate::model::MethodRecord;

pub struct StubEntry<'a, 'm> {
    pub method: &'m MethodRecord,
    pub cases: &'a [TestCase<'m>],
}

/// `Outer.Inner` -> `Outer_InnerGeneratedTest`.
pub fn stub_class_name(class_name: &str) -> String {
    format!("{}GeneratedTest", class_name.replace('.', "_"))
}

fn assertion_for(kind: ScenarioKind) -> &'static str {
    match kind {
        ScenarioKind::Valid => "assertTrue",
        ScenarioKind::Invalid | ScenarioKind::NullInput => "assertFalse",
    }
}

/// Emits one test class for the source class `class_name`. Overloaded
/// source methods get an index suffix (`test_f_valid`, `test_f_2_valid`).
pub fn emit_junit_class(package_name: &str, class_name: &str, entries: &[StubEntry<'_, '_>]) -> String {
    let mut out = String::new();
    if !package_name.is_empty() {
        let _ = writeln!(out, "package {package_name};\n");
    }
    out.push_str("import static org.junit.Assert.fail;\n\n");
    out.push_str("import org.junit.Test;\n\n");
    let _ = writeln!(out, "/** Generated test scenarios for {{@code {class_name}}}. */");
    let _ = writeln!(out, "public class {} {{", stub_class_name(class_name));

    let mut stems: HashSet<String> = HashSet::new();
    for entry in entries {
        let name = &entry.method.method_name;
        let mut stem = format!("test_{name}");
        let mut index = 2;
        while stems.contains(&stem) {
            stem = format!("test_{name}_{index}");
            index += 1;
        }
        stems.insert(stem.clone());

        for case in entry.cases {
            let _ = writeln!(out);
            let _ = writeln!(out, "    @Test");
            let _ = writeln!(out, "    public void {stem}_{}() {{", case.kind.word());
            let _ = writeln!(out, "        // {}", case.rendered_line);
            let _ = writeln!(
                out,
                "        // {}: {name}({})",
                assertion_for(case.kind),
                case.kind.boundary()
            );
            let _ = writeln!(
                out,
                "        fail(\"scenario not implemented: {name} with {} input\");",
                case.kind.word()
            );
            let _ = writeln!(out, "    }}");
        }
    }
    out.push_str("}\n");
    out
}

pub fn emit_junit_stub(method: &MethodRecord, cases: &[TestCase<'_>]) -> String {
    emit_junit_class(
        &method.package_name,
        &method.class_name,
        &[StubEntry { method, cases }],
    )
}
