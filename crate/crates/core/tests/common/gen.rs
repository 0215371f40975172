//! Seeded random Java projects with known ground truth: every emitted
//! method is recorded, and duplicates can be injected on purpose.

use std::fs;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone)]
pub struct GenMethod {
    pub file: String,
    pub class: String,
    pub name: String,
    pub param_count: usize,
    /// Body text including braces; `None` for abstract declarations.
    pub body: Option<String>,
    pub eligible: bool,
}

#[derive(Debug, Clone, Default)]
pub struct GenProject {
    pub files: Vec<(String, String)>,
    pub methods: Vec<GenMethod>,
}

impl GenProject {
    pub fn write_to(&self, dir: &Path) {
        for (rel, text) in &self.files {
            let path = dir.join(rel);
            fs::create_dir_all(path.parent().unwrap()).unwrap();
            fs::write(path, text).unwrap();
        }
    }

    pub fn eligible_count(&self) -> usize {
        self.methods.iter().filter(|m| m.eligible).count()
    }

    pub fn total_loc(&self) -> usize {
        self.files.iter().map(|(_, t)| t.len() - t.replace('\n', "").len()).sum()
    }
}

#[derive(Debug, Clone)]
pub struct GenOptions {
    pub files: std::ops::RangeInclusive<usize>,
    pub classes_per_file: std::ops::RangeInclusive<usize>,
    pub methods_per_class: std::ops::RangeInclusive<usize>,
    pub statements: std::ops::RangeInclusive<usize>,
    /// Probability that a method body copies an earlier one.
    pub clone_rate: f64,
    /// Probability that a copy is renamed rather than only reformatted.
    pub rename_rate: f64,
    pub test_files: bool,
    /// Emit interfaces, enums and field initializers as well.
    pub rich: bool,
}

impl Default for GenOptions {
    fn default() -> Self {
        GenOptions {
            files: 1..=5,
            classes_per_file: 1..=2,
            methods_per_class: 0..=5,
            statements: 0..=6,
            clone_rate: 0.2,
            rename_rate: 0.5,
            test_files: true,
            rich: true,
        }
    }
}

/// Small clone-heavy projects for partition checks.
pub fn small_clone_options() -> GenOptions {
    GenOptions {
        files: 1..=3,
        classes_per_file: 1..=2,
        methods_per_class: 1..=6,
        statements: 0..=4,
        clone_rate: 0.45,
        rename_rate: 0.5,
        test_files: false,
        rich: true,
    }
}

const VARS: &[&str] = &["a", "b", "count", "total", "idx", "value", "sum", "tmp"];
const TYPES: &[&str] = &[
    "int", "long", "String", "boolean", "char", "double", "int[]", "String[]",
    "List<String>", "Map<String, Integer>", "Object",
];

/// Statement skeleton. `{v}` slots take variables, `{l}` slots integer
/// literals, `{s}` string literals.
const STATEMENTS: &[&str] = &[
    "int {v} = {l} ;",
    "{v} = {v} + {l} ;",
    "if ( {v} > {l} ) { return ; }",
    "for ( int {v} = 0 ; {v} < {l} ; {v} ++ ) { {v} += {v} ; }",
    "System . out . println ( {s} + {v} ) ;",
    "List < String > {v} = new ArrayList < > ( ) ;",
    "Runnable {v} = ( ) -> { {v} ++ ; } ;",
    "String {v} = \"{-not-a-brace-}\" ;",
    "char {v} = '}' ;",
    "while ( {v} != {l} ) { {v} -- ; }",
    "{v} = {v} == null ? {l} : {v} ;",
    "Object {v} = new Object ( ) { public String toString ( ) { return {s} ; } } ;",
    "try { {v} = {l} / {v} ; } catch ( ArithmeticException {v} ) { {v} = 0 ; }",
    "switch ( {v} ) { case 1 : {v} ++ ; break ; default : break ; }",
];

#[derive(Debug, Clone)]
enum Slot {
    Var(usize),
    Int(i64),
    Str(u32),
}

#[derive(Debug, Clone)]
struct Stmt {
    template: usize,
    slots: Vec<Slot>,
}

fn random_stmt(rng: &mut ChaCha8Rng) -> Stmt {
    let template = rng.gen_range(0..STATEMENTS.len());
    let slots = STATEMENTS[template]
        .split(' ')
        .filter_map(|t| match t {
            "{v}" => Some(Slot::Var(rng.gen_range(0..VARS.len()))),
            "{l}" => Some(Slot::Int(rng.gen_range(0..50))),
            "{s}" => Some(Slot::Str(rng.gen_range(0..5))),
            _ => None,
        })
        .collect();
    Stmt { template, slots }
}

/// Consistent renaming: every variable maps through a shifted bijection
/// and every literal changes value.
fn rename(stmts: &[Stmt], shift: usize) -> Vec<Stmt> {
    stmts
        .iter()
        .map(|s| Stmt {
            template: s.template,
            slots: s
                .slots
                .iter()
                .map(|slot| match slot {
                    Slot::Var(v) => Slot::Var((v + shift) % VARS.len() + VARS.len()),
                    Slot::Int(n) => Slot::Int(n + 100),
                    Slot::Str(n) => Slot::Str(n + 10),
                })
                .collect(),
        })
        .collect()
}

fn var_name(i: usize) -> String {
    if i < VARS.len() {
        VARS[i].to_owned()
    } else {
        format!("{}Renamed", VARS[i % VARS.len()])
    }
}

fn is_glue(tok: &str) -> bool {
    matches!(tok, "(" | ")" | "{" | "}" | ";" | ",")
}

/// Renders a body with randomized whitespace and comments. The token
/// sequence is fixed by `stmts`; only trivia varies between calls.
fn render_body(stmts: &[Stmt], rng: &mut ChaCha8Rng) -> String {
    let mut tokens: Vec<String> = vec!["{".into()];
    for stmt in stmts {
        let mut slots = stmt.slots.iter();
        for t in STATEMENTS[stmt.template].split(' ') {
            let tok = match t {
                "{v}" | "{l}" | "{s}" => match slots.next().unwrap() {
                    Slot::Var(v) => var_name(*v),
                    Slot::Int(n) => n.to_string(),
                    Slot::Str(n) => format!("\"s{n}\""),
                },
                other => other.to_owned(),
            };
            tokens.push(tok);
        }
    }
    tokens.push("}".into());

    let mut out = String::new();
    for (i, tok) in tokens.iter().enumerate() {
        if i > 0 {
            let prev = &tokens[i - 1];
            let sep = match rng.gen_range(0..10) {
                0 => " /* } { */ ",
                1 => " // note }\n        ",
                2 | 3 => "\n        ",
                4 if is_glue(prev) || is_glue(tok) => "",
                5 => "  ",
                _ => " ",
            };
            out.push_str(sep);
        }
        out.push_str(tok);
    }
    out
}

pub struct Generator {
    rng: ChaCha8Rng,
    opts: GenOptions,
    /// Bodies emitted so far, available for copying.
    pool: Vec<Vec<Stmt>>,
    project: GenProject,
    in_interface: bool,
}

impl Generator {
    pub fn new(seed: u64, opts: GenOptions) -> Self {
        Generator {
            rng: ChaCha8Rng::seed_from_u64(seed),
            opts,
            pool: Vec::new(),
            project: GenProject::default(),
            in_interface: false,
        }
    }

    fn body(&mut self) -> String {
        let stmts = if !self.pool.is_empty() && self.rng.gen_bool(self.opts.clone_rate) {
            let base = self.pool.choose(&mut self.rng).unwrap().clone();
            if self.rng.gen_bool(self.opts.rename_rate) {
                let shift = self.rng.gen_range(0..VARS.len());
                rename(&base, shift)
            } else {
                base
            }
        } else {
            let n = self.rng.gen_range(self.opts.statements.clone());
            (0..n).map(|_| random_stmt(&mut self.rng)).collect()
        };
        self.pool.push(stmts.clone());
        render_body(&stmts, &mut self.rng)
    }

    fn params(&mut self) -> Vec<String> {
        let n = self.rng.gen_range(0..=3);
        (0..n)
            .map(|i| {
                let ty = *TYPES.choose(&mut self.rng).unwrap();
                let ty = if i == n - 1 && self.rng.gen_bool(0.1) {
                    format!("{ty}...")
                } else {
                    ty.to_owned()
                };
                let fin = if self.rng.gen_bool(0.2) { "final " } else { "" };
                format!("{fin}{ty} p{i}")
            })
            .collect()
    }

    fn header_noise(&mut self) -> String {
        let mut s = String::new();
        if self.rng.gen_bool(0.2) {
            s.push_str("    @Override\n");
        }
        if self.rng.gen_bool(0.1) {
            s.push_str("    @SuppressWarnings(\"unchecked\")\n");
        }
        if self.rng.gen_bool(0.15) {
            s.push_str("    /** Docs with { braces ( and parens. */\n");
        }
        s
    }

    #[allow(clippy::too_many_arguments)]
    fn method(
        &mut self,
        out: &mut String,
        file: &str,
        class: &str,
        name: &str,
        eligible: bool,
        abstract_decl: bool,
        indent: &str,
    ) {
        out.push_str(&self.header_noise().replace("    ", indent));
        let params = self.params();
        let modifiers = ["public ", "private ", "protected ", "", "public static ", "static final "]
            .choose(&mut self.rng)
            .unwrap()
            .to_string();
        let generic = if self.rng.gen_bool(0.1) { "<T> " } else { "" };
        let ret = ["void", "int", "String", "List<T>", "int[]", "Map<String, List<Integer>>"]
            .choose(&mut self.rng)
            .unwrap()
            .replace("<T>", if generic.is_empty() { "<String>" } else { "<T>" });
        let throws = if self.rng.gen_bool(0.15) { " throws Exception" } else { "" };
        let body = if abstract_decl { None } else { Some(self.body()) };
        let modifiers = match (self.in_interface, abstract_decl) {
            (true, _) => String::new(),
            (false, true) => "abstract ".to_owned(),
            (false, false) => modifiers,
        };
        out.push_str(&format!(
            "{indent}{modifiers}{generic}{ret} {name}({}){throws}",
            params.join(", ")
        ));
        match &body {
            Some(b) => {
                out.push(' ');
                out.push_str(b);
                out.push('\n');
            }
            None => out.push_str(";\n"),
        }
        self.project.methods.push(GenMethod {
            file: file.to_owned(),
            class: class.to_owned(),
            name: name.to_owned(),
            param_count: params.len(),
            body,
            eligible,
        });
    }

    fn fields(&mut self, out: &mut String, indent: &str) {
        if !self.opts.rich {
            return;
        }
        let choices = [
            "private int counter = compute(1, 2);",
            "static final String NAME = \"x(y)\";",
            "private final List<String> items = new ArrayList<>();",
            "private Runnable job = () -> { counter++; };",
            "private Comparator<String> cmp = new Comparator<String>() { public int compare(String a, String b) { return 0; } };",
            "int[] table = { 1, 2, 3 }, other[] = {};",
        ];
        for _ in 0..self.rng.gen_range(0..=2) {
            out.push_str(indent);
            out.push_str(choices.choose(&mut self.rng).unwrap());
            out.push('\n');
        }
    }

    fn class(&mut self, out: &mut String, file: &str, name: &str, eligible: bool, depth: usize) {
        let indent = "    ".repeat(depth + 1);
        let outer = "    ".repeat(depth);
        let kind_roll = if self.opts.rich { self.rng.gen_range(0..10) } else { 0 };
        match kind_roll {
            // interface: abstract plus default methods
            8 if depth == 0 => {
                out.push_str(&format!("{outer}public interface {name} {{\n"));
                let n = self.rng.gen_range(self.opts.methods_per_class.clone());
                for i in 0..n {
                    let abstract_decl = self.rng.gen_bool(0.5);
                    if !abstract_decl {
                        out.push_str(&indent);
                        out.push_str("default\n");
                    }
                    self.in_interface = true;
                    self.method(out, file, name, &format!("op{i}"), eligible, abstract_decl, &indent);
                    self.in_interface = false;
                }
            }
            // enum with constant arguments, a constructor and methods
            9 => {
                out.push_str(&format!("{outer}enum {name} {{\n"));
                out.push_str(&format!("{indent}RED(\"r\"), GREEN(\"g\") {{ }}, BLUE(\"b\");\n"));
                out.push_str(&format!("{indent}private final String code;\n"));
                out.push_str(&format!("{indent}{name}(String code) {{ this.code = code; }}\n"));
                self.project.methods.push(GenMethod {
                    file: file.to_owned(),
                    class: name.to_owned(),
                    name: name.to_owned(),
                    param_count: 1,
                    body: Some("{ this.code = code; }".to_owned()),
                    eligible,
                });
                let n = self.rng.gen_range(self.opts.methods_per_class.clone());
                for i in 0..n {
                    self.method(out, file, name, &format!("m{i}"), eligible, false, &indent);
                }
            }
            _ => {
                let abstract_class = self.opts.rich && self.rng.gen_bool(0.1);
                let generic = if self.opts.rich && self.rng.gen_bool(0.2) { "<T extends Comparable<T>>" } else { "" };
                let prefix = if abstract_class { "public abstract" } else if depth > 0 { "static" } else { "public" };
                out.push_str(&format!("{outer}{prefix} class {name}{generic} {{\n"));
                self.fields(out, &indent);
                let n = self.rng.gen_range(self.opts.methods_per_class.clone());
                for i in 0..n {
                    let abstract_decl = abstract_class && self.rng.gen_bool(0.3);
                    self.method(out, file, name, &format!("m{i}"), eligible, abstract_decl, &indent);
                }
                if self.opts.rich && depth == 0 && self.rng.gen_bool(0.25) {
                    let nested = format!("{name}.Inner");
                    let mut inner = String::new();
                    // the nested record uses the qualified class name
                    self.nested(&mut inner, file, &nested, eligible, depth + 1);
                    out.push_str(&inner);
                }
            }
        }
        out.push_str(&outer);
        out.push_str("}\n");
    }

    fn nested(&mut self, out: &mut String, file: &str, qualified: &str, eligible: bool, depth: usize) {
        let indent = "    ".repeat(depth + 1);
        let outer = "    ".repeat(depth);
        out.push_str(&format!("{outer}static class Inner {{\n"));
        let n = self.rng.gen_range(self.opts.methods_per_class.clone());
        for i in 0..n {
            self.method(out, file, qualified, &format!("n{i}"), eligible, false, &indent);
        }
        out.push_str(&outer);
        out.push_str("}\n");
    }

    fn file(&mut self, index: usize, test: bool) {
        let package = if self.rng.gen_bool(0.8) {
            Some(["app", "app.util", "org.example.core"][self.rng.gen_range(0..3)])
        } else {
            None
        };
        let base = if test { format!("Gen{index}Test") } else { format!("Gen{index}") };
        let dir = package.map(|p| p.replace('.', "/") + "/").unwrap_or_default();
        let rel = format!("{dir}{base}.java");

        let mut text = String::new();
        if self.rng.gen_bool(0.3) {
            text.push_str("/* Generated\n * source { } */\n");
        }
        if let Some(p) = package {
            text.push_str(&format!("package {p};\n\n"));
        }
        text.push_str("import java.util.*;\nimport static java.lang.Math.max;\n\n");
        let classes = self.rng.gen_range(self.opts.classes_per_file.clone());
        for c in 0..classes {
            let name = if c == 0 { base.clone() } else { format!("{base}Helper{c}") };
            let mut body = String::new();
            self.class(&mut body, &rel, &name, !test, 0);
            text.push_str(&body);
            text.push('\n');
        }
        self.project.files.push((rel, text));
    }

    pub fn generate(mut self) -> GenProject {
        let files = self.rng.gen_range(self.opts.files.clone());
        for i in 0..files {
            self.file(i, false);
        }
        if self.opts.test_files && self.rng.gen_bool(0.5) {
            self.file(files, true);
        }
        self.project
    }

    /// Keeps adding files until the project reaches `loc` lines.
    pub fn generate_at_least(mut self, loc: usize) -> GenProject {
        let mut i = 0;
        while self.project.total_loc() < loc {
            self.file(i, false);
            i += 1;
        }
        self.project
    }
}

pub fn generate(seed: u64, opts: GenOptions) -> GenProject {
    Generator::new(seed, opts).generate()
}
