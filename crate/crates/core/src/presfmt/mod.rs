//! The line-oriented text formats.
//!
//! Every document is a single section: a `[name]` header followed by
//! `key = value` lines.  Blank lines are skipped and `#` starts a comment
//! anywhere in a line.  Four section kinds are parsed:
//!
//! * `[group]` — a finite presentation: a `gens` line, an optional `deg`
//!   line assigning an integer degree to every generator, and any number of
//!   `rels` lines (several relators on one line separate with `;`);
//! * `[lpres]` — an L-presentation: `gens`, then `fixed`, `seeds` and
//!   `endo <name> = x -> word, …` lines;
//! * `[certs]` — window certificates: an `N` line first, then one
//!   `up <gen>` and one `down <gen>` line per base generator;
//! * `[map]` — a pullback word map: `x = word` rules for single generators
//!   and template rules like `a@i = t^-i*a*t^i` covering every level of a
//!   leveled generator at once (the level variable of the left-hand side
//!   may appear as an exponent `^i` / `^-i` on the right).
//!
//! A fifth section, `[lpres-expansion]`, is only ever written (by
//! [`print_expansion`]); it lists the relators of a truncated expansion one
//! per line.
//!
//! Words share one grammar everywhere:
//!
//! ```text
//! word := term { ["*"] term }
//! term := atom { "^" ( int | atom ) }          (left-associative)
//! atom := gen | "(" word ")" | "[" word "," word "]" | "1"
//! gen  := ident [ "@" int ]
//! ```
//!
//! `x^n` is the n-th power, `x^y` with `y` a generator or parenthesized
//! word is the conjugate `y⁻¹·x·y`, and `[x,y]` is the commutator
//! `x⁻¹·y⁻¹·x·y`; `1` is the identity.  Since `^` chains associate to the
//! left, `a^t^u` means `(a^t)^u`.
//!
//! Parsers return [`crate::error::Error::Parse`] carrying the 1-based
//! line/column of the first offending lexeme.  Printers emit a canonical
//! form — collapsed powers, `*` separators, one relator per line — that
//! parses back to the same value.

mod lex;
mod parse;
mod print;

pub use parse::{
    parse_certs, parse_document, parse_lpres, parse_map, parse_presentation, parse_word, Document,
};
pub use print::{
    print_certs, print_derived, print_document, print_expansion, print_lpres, print_map,
    print_presentation, print_word, sha256_hex,
};
