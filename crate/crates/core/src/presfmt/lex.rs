//! Tokenizer for the text formats.
//!
//! Input is processed line by line; this module turns one line into spanned
//! tokens.  Comments (`#` to end of line) are the caller's concern — they
//! are stripped before lexing because they may contain arbitrary text.

use crate::error::{Error, Span};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(super) enum Tok {
    Ident(String),
    Int(i64),
    At,
    Caret,
    Star,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semi,
    Eq,
    Arrow,
    Minus,
}

impl Tok {
    /// Human-readable rendering for error messages.
    pub(super) fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(n) => format!("`{n}`"),
            Tok::At => "`@`".into(),
            Tok::Caret => "`^`".into(),
            Tok::Star => "`*`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Eq => "`=`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Minus => "`-`".into(),
        }
    }
}

/// A token plus where it starts.
#[derive(Clone, Debug)]
pub(super) struct STok {
    pub tok: Tok,
    pub span: Span,
}

/// Tokenize one (comment-stripped) line.
pub(super) fn lex_line(line: &str, line_no: usize) -> Result<Vec<STok>, Error> {
    let bytes = line.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let span = Span {
            line: line_no,
            col: i + 1,
        };
        match c {
            ' ' | '\t' => {
                i += 1;
            }
            '@' => {
                out.push(STok { tok: Tok::At, span });
                i += 1;
            }
            '^' => {
                out.push(STok { tok: Tok::Caret, span });
                i += 1;
            }
            '*' => {
                out.push(STok { tok: Tok::Star, span });
                i += 1;
            }
            '(' => {
                out.push(STok { tok: Tok::LParen, span });
                i += 1;
            }
            ')' => {
                out.push(STok { tok: Tok::RParen, span });
                i += 1;
            }
            '[' => {
                out.push(STok { tok: Tok::LBracket, span });
                i += 1;
            }
            ']' => {
                out.push(STok { tok: Tok::RBracket, span });
                i += 1;
            }
            ',' => {
                out.push(STok { tok: Tok::Comma, span });
                i += 1;
            }
            ';' => {
                out.push(STok { tok: Tok::Semi, span });
                i += 1;
            }
            '=' => {
                out.push(STok { tok: Tok::Eq, span });
                i += 1;
            }
            '-' => {
                // `->` is the endomorphism arrow; `-` glued to digits is a
                // negative integer; anything else is a bare minus (valid
                // only as a symbolic exponent sign in map templates).
                if bytes.get(i + 1) == Some(&b'>') {
                    out.push(STok { tok: Tok::Arrow, span });
                    i += 2;
                } else if bytes.get(i + 1).is_some_and(u8::is_ascii_digit) {
                    let (tok, len) = lex_int(line, i, span)?;
                    out.push(STok { tok, span });
                    i += len;
                } else {
                    out.push(STok { tok: Tok::Minus, span });
                    i += 1;
                }
            }
            _ if c.is_ascii_digit() => {
                let (tok, len) = lex_int(line, i, span)?;
                out.push(STok { tok, span });
                i += len;
            }
            _ if c.is_ascii_alphabetic() => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push(STok {
                    tok: Tok::Ident(line[start..i].to_string()),
                    span,
                });
            }
            _ => {
                return Err(Error::parse(span, "a token", format!("`{c}`")));
            }
        }
    }
    Ok(out)
}

/// Lex an integer starting at byte `start` (which may be a `-`).
fn lex_int(line: &str, start: usize, span: Span) -> Result<(Tok, usize), Error> {
    let bytes = line.as_bytes();
    let mut end = start + 1; // skip sign or first digit
    while end < bytes.len() && bytes[end].is_ascii_digit() {
        end += 1;
    }
    let text = &line[start..end];
    let value: i64 = text
        .parse()
        .map_err(|_| Error::parse(span, "an integer fitting in 64 bits", format!("`{text}`")))?;
    Ok((Tok::Int(value), end - start))
}
