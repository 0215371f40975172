//! Physical line counting.

use crate::frontend::Token;

/// Number of physical lines: newline characters, plus one for a final
/// unterminated line.
pub fn count_loc(source: &str) -> usize {
    let newlines = source.bytes().filter(|&b| b == b'\n').count();
    newlines + usize::from(!source.is_empty() && !source.ends_with('\n'))
}

/// [`count_loc`] over the text a token sequence reconstructs to.
pub fn count_loc_tokens(tokens: &[Token]) -> usize {
    let mut newlines = 0;
    let mut last = None;
    for t in tokens {
        newlines += t.lexeme.bytes().filter(|&b| b == b'\n').count();
        if let Some(b) = t.lexeme.bytes().last() {
            last = Some(b);
        }
    }
    newlines + usize::from(last.is_some_and(|b| b != b'\n'))
}
