//! Declaration-level recursive-descent parser.
//!
//! Package, imports, type declarations and member headers are structured;
//! method bodies are kept as balanced token spans. Errors at member level
//! are recorded and the parser resynchronises at the next `;` or balanced
//! `{ ... }`, so a damaged file still yields the methods around the damage.

use super::ast::{MethodDecl, ParamDecl, SourceUnit, SyntaxError, TypeDecl, TypeKind, TypeRef};
use super::lexer::{Token, TokenKind};
use crate::metrics::count_loc_tokens;

const MAX_NESTING: usize = 200;

const MODIFIERS: &[&str] = &[
    "public",
    "protected",
    "private",
    "static",
    "abstract",
    "final",
    "native",
    "synchronized",
    "transient",
    "volatile",
    "strictfp",
    "default",
];

type PResult<T> = Result<T, SyntaxError>;

struct Parser<'t> {
    tokens: &'t [Token],
    /// Indices of non-trivia tokens; the last one is end-of-input.
    sig: Vec<usize>,
    pos: usize,
    depth: usize,
    errors: Vec<SyntaxError>,
}

enum Member {
    Method(MethodDecl),
    Type(TypeDecl),
    Skipped,
}

impl<'t> Parser<'t> {
    fn new(tokens: &'t [Token]) -> Self {
        let mut sig: Vec<usize> = tokens
            .iter()
            .enumerate()
            .filter(|(_, t)| !t.kind.is_trivia())
            .map(|(i, _)| i)
            .collect();
        // Tolerate a sequence without the end-of-input marker.
        if sig.last().is_none_or(|&i| tokens[i].kind != TokenKind::EndOfInput) {
            sig.push(usize::MAX);
        }
        Parser {
            tokens,
            sig,
            pos: 0,
            depth: 0,
            errors: Vec::new(),
        }
    }

    fn token_at(&self, pos: usize) -> Option<&'t Token> {
        let idx = *self.sig.get(pos.min(self.sig.len() - 1))?;
        self.tokens.get(idx)
    }

    fn peek_n(&self, n: usize) -> Option<&'t Token> {
        self.token_at(self.pos + n)
    }

    fn at_eof(&self) -> bool {
        self.peek_n(0).is_none_or(|t| t.kind == TokenKind::EndOfInput)
    }

    fn at_punct(&self, s: &str) -> bool {
        self.peek_n(0).is_some_and(|t| t.is_punct(s))
    }

    fn at_kw(&self, s: &str) -> bool {
        self.peek_n(0).is_some_and(|t| t.is_keyword(s))
    }

    fn at_op(&self, s: &str) -> bool {
        self.peek_n(0).is_some_and(|t| t.is(TokenKind::Operator, s))
    }

    fn at_ident(&self) -> bool {
        self.peek_n(0).is_some_and(|t| t.kind == TokenKind::Identifier)
    }

    fn bump(&mut self) {
        if !self.at_eof() {
            self.pos += 1;
        }
    }

    fn error_here(&self, message: impl Into<String>) -> SyntaxError {
        let (line, column) = self.position();
        SyntaxError {
            line,
            column,
            message: message.into(),
        }
    }

    fn position(&self) -> (u32, u32) {
        match self.peek_n(0) {
            Some(t) => (t.line, t.column),
            None => self
                .tokens
                .last()
                .map_or((1, 1), |t| (t.line, t.column)),
        }
    }

    fn line(&self) -> u32 {
        self.position().0
    }

    fn describe_current(&self) -> String {
        match self.peek_n(0) {
            Some(t) if t.kind == TokenKind::EndOfInput => "end of input".to_owned(),
            Some(t) => format!("`{}`", t.lexeme),
            None => "end of input".to_owned(),
        }
    }

    fn expect_punct(&mut self, s: &str) -> PResult<()> {
        if self.at_punct(s) {
            self.bump();
            Ok(())
        } else {
            Err(self.error_here(format!("expected `{s}`, found {}", self.describe_current())))
        }
    }

    fn expect_ident(&mut self) -> PResult<String> {
        match self.peek_n(0) {
            Some(t) if t.kind == TokenKind::Identifier => {
                self.bump();
                Ok(t.lexeme.clone())
            }
            _ => Err(self.error_here(format!(
                "expected identifier, found {}",
                self.describe_current()
            ))),
        }
    }

    /// At `open`: consumes through the matching `close` and returns the
    /// position of `close`. Returns `None` (having consumed everything) if
    /// the input ends first.
    fn skip_balanced(&mut self, open: &str, close: &str) -> Option<usize> {
        let mut depth = 0usize;
        while !self.at_eof() {
            if self.at_punct(open) {
                depth += 1;
            } else if self.at_punct(close) {
                depth = depth.saturating_sub(1);
                if depth == 0 {
                    let end = self.pos;
                    self.bump();
                    return Some(end);
                }
            }
            self.bump();
        }
        None
    }

    /// At `<`: skips a type parameter/argument list, splitting `>>` and
    /// `>>>` as closers.
    fn skip_type_args(&mut self) -> PResult<()> {
        let mut depth: i32 = 0;
        loop {
            let Some(t) = self.peek_n(0) else {
                return Err(self.error_here("unterminated type arguments"));
            };
            match (t.kind, t.lexeme.as_str()) {
                (TokenKind::Operator, "<") => depth += 1,
                (TokenKind::Operator, ">") => depth -= 1,
                (TokenKind::Operator, ">>") => depth -= 2,
                (TokenKind::Operator, ">>>") => depth -= 3,
                (TokenKind::EndOfInput, _)
                | (TokenKind::Punctuation, ";" | "{" | "}" | "(" | ")") => {
                    return Err(self.error_here(format!(
                        "unterminated type arguments, found {}",
                        self.describe_current()
                    )))
                }
                _ => {}
            }
            self.bump();
            if depth <= 0 {
                return Ok(());
            }
        }
    }

    fn qualified_name(&mut self) -> PResult<String> {
        let mut name = self.expect_ident()?;
        while self.at_punct(".") && self.peek_n(1).is_some_and(|t| t.kind == TokenKind::Identifier)
        {
            self.bump();
            name.push('.');
            name.push_str(&self.expect_ident()?);
        }
        Ok(name)
    }

    fn skip_annotation(&mut self) -> PResult<()> {
        self.expect_punct("@")?;
        self.qualified_name()?;
        if self.at_punct("(") && self.skip_balanced("(", ")").is_none() {
            return Err(self.error_here("unterminated annotation arguments"));
        }
        Ok(())
    }

    fn at_annotation(&self) -> bool {
        self.at_punct("@") && !self.peek_n(1).is_some_and(|t| t.is_keyword("interface"))
    }

    fn modifiers(&mut self) -> PResult<Vec<String>> {
        let mut mods: Vec<String> = Vec::new();
        loop {
            if self.at_annotation() {
                self.skip_annotation()?;
                continue;
            }
            let Some(t) = self.peek_n(0) else { break };
            let word = match t.kind {
                TokenKind::Keyword if MODIFIERS.contains(&t.lexeme.as_str()) => {
                    self.bump();
                    t.lexeme.clone()
                }
                TokenKind::Identifier if t.lexeme == "sealed" && self.next_is_word(1) => {
                    self.bump();
                    t.lexeme.clone()
                }
                TokenKind::Identifier
                    if t.lexeme == "non"
                        && self.peek_n(1).is_some_and(|t| t.is(TokenKind::Operator, "-"))
                        && self
                            .peek_n(2)
                            .is_some_and(|t| t.is(TokenKind::Identifier, "sealed")) =>
                {
                    self.pos += 3;
                    "non-sealed".to_owned()
                }
                _ => break,
            };
            if !mods.contains(&word) {
                mods.push(word);
            }
        }
        Ok(mods)
    }

    fn next_is_word(&self, n: usize) -> bool {
        self.peek_n(n)
            .is_some_and(|t| matches!(t.kind, TokenKind::Keyword | TokenKind::Identifier))
    }

    fn at_type_decl_start(&self) -> bool {
        self.at_kw("class")
            || self.at_kw("interface")
            || self.at_kw("enum")
            || (self.at_punct("@") && self.peek_n(1).is_some_and(|t| t.is_keyword("interface")))
            || (self.peek_n(0).is_some_and(|t| t.is(TokenKind::Identifier, "record"))
                && self.peek_n(1).is_some_and(|t| t.kind == TokenKind::Identifier)
                && self
                    .peek_n(2)
                    .is_some_and(|t| t.is_punct("(") || t.is(TokenKind::Operator, "<")))
    }

    fn compilation_unit(&mut self) -> (String, Vec<String>, Vec<TypeDecl>) {
        let mut package = String::new();
        let mut imports = Vec::new();
        let mut types = Vec::new();
        while !self.at_eof() {
            let result = if self.at_punct(";") {
                self.bump();
                Ok(())
            } else if self.at_kw("package") {
                self.bump();
                self.qualified_name()
                    .and_then(|name| {
                        self.expect_punct(";")?;
                        Ok(name)
                    })
                    .map(|name| package = name)
            } else if self.at_kw("import") {
                self.import().map(|name| imports.push(name))
            } else {
                self.modifiers()
                    .and_then(|mods| self.type_decl(mods))
                    .map(|ty| types.push(ty))
            };
            if let Err(e) = result {
                self.errors.push(e);
                self.recover(true);
            }
        }
        (package, imports, types)
    }

    fn import(&mut self) -> PResult<String> {
        self.bump();
        let mut name = String::new();
        if self.at_kw("static") {
            self.bump();
            name.push_str("static ");
        }
        name.push_str(&self.qualified_name()?);
        if self.at_punct(".") && self.peek_n(1).is_some_and(|t| t.is(TokenKind::Operator, "*")) {
            self.pos += 2;
            name.push_str(".*");
        }
        self.expect_punct(";")?;
        Ok(name)
    }

    /// Skips to the next `;` (consumed) or over a balanced `{ ... }`.
    /// A `}` stops the skip; at top level it is consumed as stray.
    fn recover(&mut self, top_level: bool) {
        while !self.at_eof() {
            if self.at_punct(";") {
                self.bump();
                return;
            }
            if self.at_punct("{") {
                self.skip_balanced("{", "}");
                return;
            }
            if self.at_punct("}") {
                if top_level {
                    self.bump();
                }
                return;
            }
            self.bump();
        }
    }

    fn type_decl(&mut self, _modifiers: Vec<String>) -> PResult<TypeDecl> {
        let line = self.line();
        let kind = if self.at_kw("class") {
            self.bump();
            TypeKind::Class
        } else if self.at_kw("interface") {
            self.bump();
            TypeKind::Interface
        } else if self.at_kw("enum") {
            self.bump();
            TypeKind::Enum
        } else if self.at_punct("@") && self.peek_n(1).is_some_and(|t| t.is_keyword("interface")) {
            self.pos += 2;
            TypeKind::Interface
        } else if self.peek_n(0).is_some_and(|t| t.is(TokenKind::Identifier, "record")) {
            self.bump();
            TypeKind::Class
        } else {
            return Err(self.error_here(format!(
                "expected type declaration, found {}",
                self.describe_current()
            )));
        };
        let name = self.expect_ident()?;
        if self.at_op("<") {
            self.skip_type_args()?;
        }
        if self.at_punct("(") && self.skip_balanced("(", ")").is_none() {
            return Err(self.error_here("unterminated record header"));
        }
        // extends / implements / permits
        while !self.at_punct("{") {
            if self.at_eof() || self.at_punct(";") || self.at_punct("}") {
                return Err(self.error_here(format!(
                    "expected `{{` to open body of {name}, found {}",
                    self.describe_current()
                )));
            }
            if self.at_op("<") {
                self.skip_type_args()?;
            } else {
                self.bump();
            }
        }
        if self.depth >= MAX_NESTING {
            return Err(self.error_here("type nesting too deep"));
        }
        self.depth += 1;
        let body = self.type_body(kind, &name);
        self.depth -= 1;
        let (methods, nested_types) = body;
        Ok(TypeDecl {
            name,
            kind,
            methods,
            nested_types,
            line,
        })
    }

    /// At `{`. Always returns what could be parsed; problems are recorded.
    fn type_body(&mut self, kind: TypeKind, name: &str) -> (Vec<MethodDecl>, Vec<TypeDecl>) {
        let mut methods = Vec::new();
        let mut nested = Vec::new();
        self.bump();
        if kind == TypeKind::Enum {
            if let Err(e) = self.enum_constants() {
                self.errors.push(e);
                self.recover(false);
            }
        }
        while !self.at_eof() && !self.at_punct("}") {
            match self.member(name) {
                Ok(Member::Method(m)) => methods.push(m),
                Ok(Member::Type(t)) => nested.push(t),
                Ok(Member::Skipped) => {}
                Err(e) => {
                    self.errors.push(e);
                    self.recover(false);
                }
            }
        }
        if self.at_punct("}") {
            self.bump();
        } else {
            self.errors.push(self.error_here(format!(
                "expected `}}` to close {name}, found end of input"
            )));
        }
        (methods, nested)
    }

    fn enum_constants(&mut self) -> PResult<()> {
        loop {
            while self.at_annotation() {
                self.skip_annotation()?;
            }
            if self.at_punct(";") {
                self.bump();
                return Ok(());
            }
            if self.at_punct("}") {
                return Ok(());
            }
            self.expect_ident()?;
            if self.at_punct("(") && self.skip_balanced("(", ")").is_none() {
                return Err(self.error_here("unterminated enum constant arguments"));
            }
            if self.at_punct("{") && self.skip_balanced("{", "}").is_none() {
                return Err(self.error_here("unterminated enum constant body"));
            }
            if self.at_punct(",") {
                self.bump();
            } else if !self.at_punct(";") && !self.at_punct("}") {
                return Err(self.error_here(format!(
                    "expected `,`, `;` or `}}` after enum constant, found {}",
                    self.describe_current()
                )));
            }
        }
    }

    fn member(&mut self, class_name: &str) -> PResult<Member> {
        if self.at_punct(";") {
            self.bump();
            return Ok(Member::Skipped);
        }
        let start_line = self.line();
        let modifiers = self.modifiers()?;
        if self.at_type_decl_start() {
            return self.type_decl(modifiers).map(Member::Type);
        }
        if self.at_punct("{") {
            return match self.skip_balanced("{", "}") {
                Some(_) => Ok(Member::Skipped),
                None => Err(self.error_here("unterminated initializer block")),
            };
        }
        if self.at_op("<") {
            self.skip_type_args()?;
        }
        let is_constructor = self.at_ident()
            && self.peek_n(1).is_some_and(|t| t.is_punct("("))
            && self.peek_n(0).is_some_and(|t| t.lexeme == class_name);
        let (return_type, name) = if is_constructor {
            let name = self.expect_ident()?;
            (TypeRef::named(class_name, 0), name)
        } else {
            let ty = self.parse_type()?;
            let name = self.expect_ident()?;
            (ty, name)
        };
        if !self.at_punct("(") {
            self.skip_field()?;
            return Ok(Member::Skipped);
        }
        let params = self.params()?;
        let mut return_type = return_type;
        while self.at_punct("[") && self.peek_n(1).is_some_and(|t| t.is_punct("]")) {
            self.pos += 2;
            return_type.array_dims += 1;
        }
        if self.at_kw("throws") {
            self.bump();
            while !self.at_punct("{") && !self.at_punct(";") {
                if self.at_eof() || self.at_punct("}") || self.at_punct("(") {
                    return Err(self.error_here(format!(
                        "expected method body, found {}",
                        self.describe_current()
                    )));
                }
                if self.at_op("<") {
                    self.skip_type_args()?;
                } else {
                    self.bump();
                }
            }
        }
        let (body, end_line) = if self.at_punct("{") {
            let open = self.pos;
            match self.skip_balanced("{", "}") {
                Some(close) => {
                    let (a, b) = (self.sig[open], self.sig[close]);
                    (self.tokens[a..=b].to_vec(), self.tokens[b].line)
                }
                None => {
                    return Err(self.error_here(format!(
                        "expected `}}` to close body of {name}, found end of input"
                    )))
                }
            }
        } else if self.at_punct(";") {
            let line = self.line();
            self.bump();
            (Vec::new(), line)
        } else if self.at_kw("default") {
            // annotation element default value
            self.skip_field()?;
            (Vec::new(), self.token_at(self.pos - 1).map_or(start_line, |t| t.line))
        } else {
            return Err(self.error_here(format!(
                "expected method body or `;`, found {}",
                self.describe_current()
            )));
        };
        Ok(Member::Method(MethodDecl {
            name,
            modifiers,
            return_type,
            params,
            body,
            is_constructor,
            start_line,
            end_line,
        }))
    }

    /// Skips through the terminating `;` of a field declaration, stepping
    /// over nested brackets (array initialisers, anonymous classes, lambdas).
    fn skip_field(&mut self) -> PResult<()> {
        let mut depth = 0usize;
        while !self.at_eof() {
            let t = self.peek_n(0).expect("not at eof");
            if t.kind == TokenKind::Punctuation {
                match t.lexeme.as_str() {
                    "(" | "[" | "{" => depth += 1,
                    ")" | "]" | "}" => {
                        if depth == 0 {
                            return Err(self.error_here(format!(
                                "expected `;`, found {}",
                                self.describe_current()
                            )));
                        }
                        depth -= 1;
                    }
                    ";" if depth == 0 => {
                        self.bump();
                        return Ok(());
                    }
                    _ => {}
                }
            }
            self.bump();
        }
        Err(self.error_here("expected `;`, found end of input"))
    }

    fn parse_type(&mut self) -> PResult<TypeRef> {
        while self.at_annotation() {
            self.skip_annotation()?;
        }
        let t = self.peek_n(0);
        let base = match t {
            Some(t) if t.kind == TokenKind::Keyword && super::ast::PRIMITIVES.contains(&t.lexeme.as_str()) => {
                self.bump();
                t.lexeme.clone()
            }
            Some(t) if t.kind == TokenKind::Identifier => {
                let mut last = self.expect_ident()?;
                loop {
                    if self.at_op("<") {
                        self.skip_type_args()?;
                    }
                    if self.at_punct(".")
                        && self.peek_n(1).is_some_and(|t| t.kind == TokenKind::Identifier)
                    {
                        self.bump();
                        last = self.expect_ident()?;
                    } else {
                        break;
                    }
                }
                last
            }
            _ => {
                return Err(self.error_here(format!(
                    "expected type, found {}",
                    self.describe_current()
                )))
            }
        };
        let mut dims = 0;
        while self.at_punct("[") && self.peek_n(1).is_some_and(|t| t.is_punct("]")) {
            self.pos += 2;
            dims += 1;
        }
        Ok(TypeRef::named(base, dims))
    }

    fn params(&mut self) -> PResult<Vec<ParamDecl>> {
        self.expect_punct("(")?;
        let mut params = Vec::new();
        if self.at_punct(")") {
            self.bump();
            return Ok(params);
        }
        loop {
            self.modifiers()?;
            let mut ty = self.parse_type()?;
            if self.at_punct("...") {
                self.bump();
                ty.array_dims += 1;
            }
            if self.at_kw("this") {
                // receiver parameter, not part of the signature
                self.bump();
            } else {
                let name = self.expect_ident()?;
                while self.at_punct("[") && self.peek_n(1).is_some_and(|t| t.is_punct("]")) {
                    self.pos += 2;
                    ty.array_dims += 1;
                }
                params.push(ParamDecl { ty, name });
            }
            if self.at_punct(",") {
                self.bump();
            } else {
                self.expect_punct(")")?;
                return Ok(params);
            }
        }
    }
}

/// Parses one file's tokens. Never fails outright: syntax errors are
/// collected in [`SourceUnit::errors`] alongside whatever was recovered.
pub fn parse_compilation_unit(tokens: &[Token], file_path: &str) -> SourceUnit {
    let mut parser = Parser::new(tokens);
    let (package_name, imports, types) = parser.compilation_unit();
    SourceUnit {
        file_path: file_path.to_owned(),
        package_name,
        imports,
        types,
        line_count: count_loc_tokens(tokens),
        errors: parser.errors,
    }
}
