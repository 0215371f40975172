//! Lossless tokenizer for Java source.
//!
//! Every byte of the input ends up in exactly one token, including
//! whitespace and comments, so [`reconstruct_source`] can rebuild the file.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TokenKind {
    Keyword,
    Identifier,
    IntegerLiteral,
    FloatLiteral,
    StringLiteral,
    CharLiteral,
    Operator,
    Punctuation,
    Comment,
    Whitespace,
    EndOfInput,
}

impl TokenKind {
    /// Comments and whitespace.
    pub fn is_trivia(self) -> bool {
        matches!(self, TokenKind::Comment | TokenKind::Whitespace)
    }

    pub fn is_literal(self) -> bool {
        matches!(
            self,
            TokenKind::IntegerLiteral
                | TokenKind::FloatLiteral
                | TokenKind::StringLiteral
                | TokenKind::CharLiteral
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Token {
    pub kind: TokenKind,
    pub lexeme: String,
    /// 1-based.
    pub line: u32,
    /// 1-based, counted in characters.
    pub column: u32,
}

impl Token {
    pub fn is(&self, kind: TokenKind, lexeme: &str) -> bool {
        self.kind == kind && self.lexeme == lexeme
    }

    pub fn is_punct(&self, lexeme: &str) -> bool {
        self.is(TokenKind::Punctuation, lexeme)
    }

    pub fn is_keyword(&self, lexeme: &str) -> bool {
        self.is(TokenKind::Keyword, lexeme)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LexErrorKind {
    UnterminatedString,
    UnterminatedTextBlock,
    UnterminatedChar,
    UnterminatedBlockComment,
    UnexpectedCharacter(char),
    InvalidUtf8,
}

impl fmt::Display for LexErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LexErrorKind::UnterminatedString => f.write_str("unterminated string literal"),
            LexErrorKind::UnterminatedTextBlock => f.write_str("unterminated text block"),
            LexErrorKind::UnterminatedChar => f.write_str("unterminated character literal"),
            LexErrorKind::UnterminatedBlockComment => f.write_str("unterminated block comment"),
            LexErrorKind::UnexpectedCharacter(c) => write!(f, "unexpected character {c:?}"),
            LexErrorKind::InvalidUtf8 => f.write_str("input is not valid UTF-8"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("lexical error at {line}:{column}: {kind}")]
pub struct LexError {
    pub kind: LexErrorKind,
    pub line: u32,
    pub column: u32,
}

pub const KEYWORDS: &[&str] = &[
    "abstract", "assert", "boolean", "break", "byte", "case", "catch", "char", "class", "const",
    "continue", "default", "do", "double", "else", "enum", "extends", "final", "finally", "float",
    "for", "goto", "if", "implements", "import", "instanceof", "int", "interface", "long",
    "native", "new", "package", "private", "protected", "public", "return", "short", "static",
    "strictfp", "super", "switch", "synchronized", "this", "throw", "throws", "transient", "try",
    "void", "volatile", "while", "true", "false", "null",
];

// Longest first so the scanner can take the first match.
const OPERATORS: &[&str] = &[
    ">>>=", "<<=", ">>=", ">>>", "->", "++", "--", "&&", "||", "==", "!=", "<=", ">=", "+=", "-=",
    "*=", "/=", "&=", "|=", "^=", "%=", "<<", ">>", "=", ">", "<", "!", "~", "?", ":", "+", "-",
    "*", "/", "&", "|", "^", "%",
];

const PUNCTUATION: &[&str] = &["...", "::", "(", ")", "{", "}", "[", "]", ";", ",", ".", "@"];

pub fn is_keyword(word: &str) -> bool {
    KEYWORDS.contains(&word)
}

fn is_ident_start(c: char) -> bool {
    c == '_' || c == '$' || c.is_alphabetic()
}

fn is_ident_part(c: char) -> bool {
    c == '_' || c == '$' || c.is_alphanumeric()
}

struct Scanner<'a> {
    src: &'a str,
    pos: usize,
    line: u32,
    column: u32,
    tokens: Vec<Token>,
}

impl<'a> Scanner<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn peek_at(&self, n: usize) -> Option<char> {
        self.rest().chars().nth(n)
    }

    fn error(&self, kind: LexErrorKind, line: u32, column: u32) -> LexError {
        LexError { kind, line, column }
    }

    fn push(&mut self, kind: TokenKind, len: usize) {
        let lexeme = &self.src[self.pos..self.pos + len];
        let token = Token {
            kind,
            lexeme: lexeme.to_owned(),
            line: self.line,
            column: self.column,
        };
        for c in lexeme.chars() {
            if c == '\n' {
                self.line += 1;
                self.column = 1;
            } else {
                self.column += 1;
            }
        }
        self.pos += len;
        self.tokens.push(token);
    }

    fn run(mut self) -> Result<Vec<Token>, LexError> {
        while let Some(c) = self.peek_at(0) {
            let rest = self.rest();
            if c.is_whitespace() {
                let len = rest
                    .find(|c: char| !c.is_whitespace())
                    .unwrap_or(rest.len());
                self.push(TokenKind::Whitespace, len);
            } else if rest.starts_with("//") {
                // The newline belongs to the following whitespace token.
                let len = rest.find(['\n', '\r']).unwrap_or(rest.len());
                self.push(TokenKind::Comment, len);
            } else if let Some(after) = rest.strip_prefix("/*") {
                match after.find("*/") {
                    Some(end) => self.push(TokenKind::Comment, end + 4),
                    None => {
                        return Err(self.error(
                            LexErrorKind::UnterminatedBlockComment,
                            self.line,
                            self.column,
                        ))
                    }
                }
            } else if rest.starts_with("\"\"\"") {
                let len = self.text_block_len()?;
                self.push(TokenKind::StringLiteral, len);
            } else if c == '"' {
                let len = self.quoted_len('"', LexErrorKind::UnterminatedString)?;
                self.push(TokenKind::StringLiteral, len);
            } else if c == '\'' {
                let len = self.quoted_len('\'', LexErrorKind::UnterminatedChar)?;
                self.push(TokenKind::CharLiteral, len);
            } else if c.is_ascii_digit()
                || (c == '.' && self.peek_at(1).is_some_and(|d| d.is_ascii_digit()))
            {
                let (kind, len) = number_len(rest);
                self.push(kind, len);
            } else if is_ident_start(c) {
                let len = rest
                    .find(|c: char| !is_ident_part(c))
                    .unwrap_or(rest.len());
                let kind = if is_keyword(&rest[..len]) {
                    TokenKind::Keyword
                } else {
                    TokenKind::Identifier
                };
                self.push(kind, len);
            } else if let Some(p) = PUNCTUATION.iter().find(|p| rest.starts_with(**p)) {
                self.push(TokenKind::Punctuation, p.len());
            } else if let Some(op) = OPERATORS.iter().find(|op| rest.starts_with(**op)) {
                self.push(TokenKind::Operator, op.len());
            } else {
                return Err(self.error(
                    LexErrorKind::UnexpectedCharacter(c),
                    self.line,
                    self.column,
                ));
            }
        }
        self.tokens.push(Token {
            kind: TokenKind::EndOfInput,
            lexeme: String::new(),
            line: self.line,
            column: self.column,
        });
        Ok(self.tokens)
    }

    /// Length in bytes of a single-line quoted literal starting at `pos`.
    fn quoted_len(&self, quote: char, kind: LexErrorKind) -> Result<usize, LexError> {
        let rest = self.rest();
        let mut chars = rest.char_indices().skip(1);
        while let Some((i, c)) = chars.next() {
            match c {
                '\\' => {
                    if chars.next().is_none() {
                        break;
                    }
                }
                '\n' | '\r' => break,
                c if c == quote => return Ok(i + c.len_utf8()),
                _ => {}
            }
        }
        Err(self.error(kind, self.line, self.column))
    }

    fn text_block_len(&self) -> Result<usize, LexError> {
        let rest = self.rest();
        let mut i = 3;
        let bytes = rest.as_bytes();
        while i < bytes.len() {
            if bytes[i] == b'\\' {
                i += 2;
            } else if rest[i..].starts_with("\"\"\"") {
                return Ok(i + 3);
            } else {
                i += 1;
            }
        }
        Err(self.error(LexErrorKind::UnterminatedTextBlock, self.line, self.column))
    }
}

/// Scans a numeric literal. Loose on purpose: anything digit-led that Java
/// would reject still becomes a single literal token.
fn number_len(s: &str) -> (TokenKind, usize) {
    let b = s.as_bytes();
    let n = b.len();
    let mut i = 0;
    let mut float = false;

    let radix_prefixed = n > 1 && b[0] == b'0' && matches!(b[1], b'x' | b'X' | b'b' | b'B');
    if radix_prefixed {
        let hex = matches!(b[1], b'x' | b'X');
        i = 2;
        while i < n && (b[i].is_ascii_hexdigit() || b[i] == b'_') {
            i += 1;
        }
        if hex && i < n && b[i] == b'.' {
            float = true;
            i += 1;
            while i < n && (b[i].is_ascii_hexdigit() || b[i] == b'_') {
                i += 1;
            }
        }
        if hex && i < n && matches!(b[i], b'p' | b'P') {
            float = true;
            i = exponent_end(b, i);
        }
    } else {
        while i < n && (b[i].is_ascii_digit() || b[i] == b'_') {
            i += 1;
        }
        if i < n && b[i] == b'.' && b.get(i + 1).is_none_or(|c| !c.is_ascii_alphabetic() || matches!(c, b'e' | b'E' | b'f' | b'F' | b'd' | b'D')) {
            float = true;
            i += 1;
            while i < n && (b[i].is_ascii_digit() || b[i] == b'_') {
                i += 1;
            }
        }
        if i < n && matches!(b[i], b'e' | b'E') {
            let end = exponent_end(b, i);
            if end > i + 1 {
                float = true;
                i = end;
            }
        }
    }
    // a hex literal only takes a float suffix after its `p` exponent
    if i < n && matches!(b[i], b'f' | b'F' | b'd' | b'D') && (!radix_prefixed || float) {
        float = true;
        i += 1;
    } else if i < n && matches!(b[i], b'l' | b'L') && !float {
        i += 1;
    }
    let kind = if float {
        TokenKind::FloatLiteral
    } else {
        TokenKind::IntegerLiteral
    };
    (kind, i)
}

/// `b[start]` is the exponent marker; returns the index after the exponent
/// digits, or `start + 1` if there are none.
fn exponent_end(b: &[u8], start: usize) -> usize {
    let mut i = start + 1;
    if i < b.len() && matches!(b[i], b'+' | b'-') {
        i += 1;
    }
    let digits = i;
    while i < b.len() && (b[i].is_ascii_digit() || b[i] == b'_') {
        i += 1;
    }
    if i == digits {
        start + 1
    } else {
        i
    }
}

/// Splits `source` into tokens, trivia included, terminated by an
/// end-of-input token.
pub fn tokenize(source: &str) -> Result<Vec<Token>, LexError> {
    Scanner {
        src: source,
        pos: 0,
        line: 1,
        column: 1,
        tokens: Vec::new(),
    }
    .run()
}

/// Like [`tokenize`] but accepts raw bytes, rejecting invalid UTF-8.
pub fn tokenize_bytes(source: &[u8]) -> Result<Vec<Token>, LexError> {
    match std::str::from_utf8(source) {
        Ok(text) => tokenize(text),
        Err(e) => {
            let valid = std::str::from_utf8(&source[..e.valid_up_to()]).unwrap_or_default();
            let line = 1 + valid.matches('\n').count() as u32;
            let column = 1 + valid.rsplit('\n').next().map_or(0, |l| l.chars().count()) as u32;
            Err(LexError {
                kind: LexErrorKind::InvalidUtf8,
                line,
                column,
            })
        }
    }
}

pub fn reconstruct_source(tokens: &[Token]) -> String {
    tokens.iter().map(|t| t.lexeme.as_str()).collect()
}
