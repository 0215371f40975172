//! Java front end: lossless lexer plus a declaration-level parser.

pub mod ast;
pub mod lexer;
pub mod parser;

pub use ast::{MethodDecl, ParamDecl, SourceUnit, SyntaxError, TypeDecl, TypeKind, TypeRef};
pub use lexer::{reconstruct_source, tokenize, tokenize_bytes, LexError, LexErrorKind, Token, TokenKind};
pub use parser::parse_compilation_unit;
