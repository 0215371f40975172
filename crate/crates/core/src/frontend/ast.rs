use std::fmt;

use super::lexer::Token;

pub const PRIMITIVES: &[&str] = &[
    "boolean", "byte", "char", "short", "int", "long", "float", "double", "void",
];

/// A source-level type reference. Qualifiers and type arguments are
/// dropped: `java.util.List<String>[]` becomes `List` with one dimension.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TypeRef {
    pub base_name: String,
    pub array_dims: u32,
    pub is_primitive: bool,
}

impl TypeRef {
    pub fn named(base_name: impl Into<String>, array_dims: u32) -> Self {
        let base_name = base_name.into();
        let is_primitive = PRIMITIVES.contains(&base_name.as_str());
        TypeRef {
            base_name,
            array_dims,
            is_primitive,
        }
    }
}

impl fmt::Display for TypeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.base_name)?;
        for _ in 0..self.array_dims {
            f.write_str("[]")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamDecl {
    pub ty: TypeRef,
    pub name: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MethodDecl {
    pub name: String,
    pub modifiers: Vec<String>,
    pub return_type: TypeRef,
    pub params: Vec<ParamDecl>,
    /// Full token span from `{` to the matching `}`, trivia included.
    /// Empty for abstract and interface methods.
    pub body: Vec<Token>,
    pub is_constructor: bool,
    pub start_line: u32,
    pub end_line: u32,
}

impl MethodDecl {
    pub fn has_body(&self) -> bool {
        !self.body.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TypeKind {
    Class,
    Interface,
    Enum,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeDecl {
    pub name: String,
    pub kind: TypeKind,
    pub methods: Vec<MethodDecl>,
    pub nested_types: Vec<TypeDecl>,
    pub line: u32,
}

impl TypeDecl {
    /// Visits this type and all nested types depth-first, outer first,
    /// passing the dotted name of each.
    pub fn walk<'a>(&'a self, prefix: &str, f: &mut dyn FnMut(&str, &'a TypeDecl)) {
        let qualified = if prefix.is_empty() {
            self.name.clone()
        } else {
            format!("{prefix}.{}", self.name)
        };
        f(&qualified, self);
        for nested in &self.nested_types {
            nested.walk(&qualified, f);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("syntax error at {line}:{column}: {message}")]
pub struct SyntaxError {
    pub line: u32,
    pub column: u32,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourceUnit {
    pub file_path: String,
    pub package_name: String,
    pub imports: Vec<String>,
    pub types: Vec<TypeDecl>,
    pub line_count: usize,
    pub errors: Vec<SyntaxError>,
}

impl SourceUnit {
    pub fn method_count(&self) -> usize {
        let mut n = 0;
        for ty in &self.types {
            ty.walk("", &mut |_, t| n += t.methods.len());
        }
        n
    }
}
