//! Parsers for the section formats: document structuring, the shared word
//! grammar, and one parser per section kind.

use std::collections::BTreeMap;

use super::lex::{lex_line, STok, Tok};
use crate::error::{Error, Span};
use crate::freegroup::{FreeEndomorphism, Generator, Word};
use crate::kernel::{CertificateSet, WindowAlphabet};
use crate::lpres::{FinitePresentation, LPresentation};
use crate::oracles::{MapRule, PullbackMap, RuleLhs, RuleRhs, TemplateFactor};

/// Any of the parseable documents.
#[derive(Clone, Debug)]
pub enum Document {
    Group(FinitePresentation),
    Lpres(LPresentation),
    Certs(CertificateSet),
    Map(PullbackMap),
}

/// One meaningful line of a document.
enum Line {
    Header { name: String, span: Span },
    KeyValue { key: Vec<STok>, value: Vec<STok>, span: Span },
}

/// Strip comments, drop blank lines, and classify the rest.
fn structure(text: &str) -> Result<Vec<Line>, Error> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        let line = match line.find('#') {
            Some(pos) => &line[..pos],
            None => line,
        };
        if line.trim().is_empty() {
            continue;
        }
        let trimmed = line.trim();
        let col = line.len() - line.trim_start().len() + 1;
        let span = Span { line: line_no, col };
        if let Some(rest) = trimmed.strip_prefix('[') {
            let Some(name) = rest.strip_suffix(']') else {
                return Err(Error::parse(span, "a section header like `[group]`", format!("`{trimmed}`")));
            };
            let ok = !name.is_empty()
                && name.chars().all(|c| c.is_ascii_lowercase() || c == '-');
            if !ok {
                return Err(Error::parse(span, "a section header like `[group]`", format!("`{trimmed}`")));
            }
            out.push(Line::Header {
                name: name.to_string(),
                span,
            });
            continue;
        }
        let toks = lex_line(line, line_no)?;
        let Some(eq) = toks.iter().position(|t| t.tok == Tok::Eq) else {
            return Err(Error::parse(span, "a `key = value` line", format!("`{trimmed}`")));
        };
        if eq == 0 {
            return Err(Error::parse(span, "a key before `=`", "`=`"));
        }
        let value = toks[eq + 1..].to_vec();
        let mut key = toks;
        key.truncate(eq);
        out.push(Line::KeyValue { key, value, span });
    }
    Ok(out)
}

/// Letter validation hook used by the word parser: called on every
/// generator with the span of its first token.
type Validator<'v> = &'v mut dyn FnMut(&Generator, Span) -> Result<(), Error>;

/// Recursive-descent parser over one token slice.
struct P<'a, 'v> {
    toks: &'a [STok],
    pos: usize,
    end: Span,
    validate: Validator<'v>,
}

impl<'a, 'v> P<'a, 'v> {
    fn new(toks: &'a [STok], line_span: Span, validate: Validator<'v>) -> Self {
        let end = toks.last().map(|t| t.span).unwrap_or(line_span);
        P {
            toks,
            pos: 0,
            end,
            validate,
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn span(&self) -> Span {
        self.toks.get(self.pos).map(|t| t.span).unwrap_or(self.end)
    }

    fn found(&self) -> String {
        match self.toks.get(self.pos) {
            Some(t) => t.tok.describe(),
            None => "end of line".into(),
        }
    }

    fn bump(&mut self) -> Option<&STok> {
        let t = self.toks.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, expected: &str) -> Error {
        Error::parse(self.span(), expected, self.found())
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> Result<(), Error> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(expected))
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    /// Does the next token start an atom?
    fn at_atom(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Ident(_)) | Some(Tok::LParen) | Some(Tok::LBracket) | Some(Tok::Int(_))
        )
    }

    /// `gen := ident ["@" int]`, running the validation hook.
    fn parse_gen(&mut self) -> Result<Generator, Error> {
        let span = self.span();
        let Some(Tok::Ident(name)) = self.peek() else {
            return Err(self.err("a generator name"));
        };
        let name = name.clone();
        self.pos += 1;
        let gen = if self.peek() == Some(&Tok::At) {
            self.pos += 1;
            let Some(Tok::Int(level)) = self.peek() else {
                return Err(self.err("a level integer after `@`"));
            };
            let level = *level;
            self.pos += 1;
            Generator::indexed(name, level)
        } else {
            Generator::plain(name)
        };
        (self.validate)(&gen, span)?;
        Ok(gen)
    }

    /// `word := term { ["*"] term }` — terms may be juxtaposed.
    fn parse_word(&mut self) -> Result<Word, Error> {
        let mut acc = self.parse_term()?;
        loop {
            if self.peek() == Some(&Tok::Star) {
                self.pos += 1;
                acc = acc.multiply(&self.parse_term()?);
            } else if self.at_atom() {
                acc = acc.multiply(&self.parse_term()?);
            } else {
                break;
            }
        }
        Ok(acc)
    }

    /// `term := atom { "^" (int | atom) }`, chains associating left, so
    /// `a^t^u` is `(a^t)^u`.
    fn parse_term(&mut self) -> Result<Word, Error> {
        let mut value = self.parse_atom()?;
        while self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.peek() {
                Some(Tok::Int(n)) => {
                    let n = *n;
                    self.pos += 1;
                    value = value.pow(n);
                }
                _ if self.at_atom() => {
                    let by = self.parse_atom()?;
                    value = value.conjugate(&by);
                }
                _ => return Err(self.err("an integer exponent or a conjugating atom")),
            }
        }
        Ok(value)
    }

    /// `atom := gen | "(" word ")" | "[" word "," word "]" | "1"`.
    fn parse_atom(&mut self) -> Result<Word, Error> {
        match self.peek() {
            Some(Tok::Ident(_)) => Ok(Word::generator(self.parse_gen()?)),
            Some(Tok::Int(1)) => {
                self.pos += 1;
                Ok(Word::identity())
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let w = self.parse_word()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(w)
            }
            Some(Tok::LBracket) => {
                self.pos += 1;
                let x = self.parse_word()?;
                self.expect(Tok::Comma, "`,` between commutator arguments")?;
                let y = self.parse_word()?;
                self.expect(Tok::RBracket, "`]`")?;
                // [x, y] = x⁻¹·y⁻¹·x·y.
                Ok(x.inverse().multiply(&y.inverse()).multiply(&x).multiply(&y))
            }
            _ => Err(self.err("a generator, `(`, `[`, or `1`")),
        }
    }

    /// Map-template right-hand side: the word grammar where additionally a
    /// term may carry the symbolic exponent `^var` or `^-var`, standing for
    /// the level of the generator being instantiated.
    fn parse_template(&mut self, var: &str) -> Result<Vec<TemplateFactor>, Error> {
        let mut factors: Vec<TemplateFactor> = Vec::new();
        let mut pending = Word::identity();
        loop {
            if self.peek() == Some(&Tok::Star) {
                self.pos += 1;
            } else if !self.at_atom() {
                break;
            }
            // One term; may turn out symbolic.
            let mut value = self.parse_atom()?;
            let mut symbolic: Option<bool> = None; // Some(negate)
            while self.peek() == Some(&Tok::Caret) {
                if symbolic.is_some() {
                    return Err(self.err("no further exponent after a symbolic power"));
                }
                self.pos += 1;
                match self.peek() {
                    Some(Tok::Int(n)) => {
                        let n = *n;
                        self.pos += 1;
                        value = value.pow(n);
                    }
                    Some(Tok::Minus) => {
                        self.pos += 1;
                        match self.peek() {
                            Some(Tok::Ident(v)) if v == var => {
                                self.pos += 1;
                                symbolic = Some(true);
                            }
                            _ => return Err(self.err(&format!("the level variable `{var}` after `-`"))),
                        }
                    }
                    Some(Tok::Ident(v)) if v == var => {
                        self.pos += 1;
                        symbolic = Some(false);
                    }
                    _ if self.at_atom() => {
                        let by = self.parse_atom()?;
                        value = value.conjugate(&by);
                    }
                    _ => return Err(self.err("an integer exponent, a conjugating atom, or the level variable")),
                }
            }
            match symbolic {
                None => pending = pending.multiply(&value),
                Some(negate) => {
                    if !pending.is_identity() {
                        factors.push(TemplateFactor::Const(std::mem::take(&mut pending)));
                    }
                    factors.push(TemplateFactor::Pow {
                        base: value,
                        negate,
                    });
                }
            }
        }
        if !pending.is_identity() {
            factors.push(TemplateFactor::Const(pending));
        }
        Ok(factors)
    }
}

/// Parse a single word over a fixed alphabet.  The input must hold exactly
/// one non-blank line; letters outside `alphabet` are rejected with the
/// span of their first token.
pub fn parse_word(text: &str, alphabet: &[Generator]) -> Result<Word, Error> {
    let mut lexed: Option<(Vec<STok>, Span)> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        let line = match line.find('#') {
            Some(pos) => &line[..pos],
            None => line,
        };
        if line.trim().is_empty() {
            continue;
        }
        let span = Span { line: line_no, col: 1 };
        if lexed.is_some() {
            return Err(Error::parse(span, "a single-line word", "a second line"));
        }
        lexed = Some((lex_line(line, line_no)?, span));
    }
    let (toks, span) = lexed.ok_or_else(|| {
        Error::parse(Span { line: 1, col: 1 }, "a word", "end of input")
    })?;
    let mut validate = member_validator(alphabet);
    let mut p = P::new(&toks, span, &mut validate);
    let w = p.parse_word()?;
    if !p.at_end() {
        return Err(p.err("end of line"));
    }
    Ok(w)
}

fn member_validator(alphabet: &[Generator]) -> impl FnMut(&Generator, Span) -> Result<(), Error> + '_ {
    move |g: &Generator, span: Span| {
        if alphabet.contains(g) {
            Ok(())
        } else {
            Err(Error::parse(span, "a declared generator", format!("`{g}`")))
        }
    }
}

/// Parse whichever section the document holds.
pub fn parse_document(text: &str) -> Result<Document, Error> {
    parse_document_inner(text).map(|(doc, _)| doc)
}

fn parse_document_inner(text: &str) -> Result<(Document, Span), Error> {
    let lines = structure(text)?;
    let Some(first) = lines.first() else {
        return Err(Error::parse(
            Span { line: 1, col: 1 },
            "a section header",
            "end of input",
        ));
    };
    let Line::Header { name, span } = first else {
        let span = match first {
            Line::KeyValue { span, .. } => *span,
            Line::Header { span, .. } => *span,
        };
        return Err(Error::parse(span, "a section header", "a key/value line"));
    };
    let (name, header_span) = (name.clone(), *span);
    let body = &lines[1..];
    for l in body {
        if let Line::Header { span, .. } = l {
            return Err(Error::parse(*span, "a single section per document", "a second header"));
        }
    }
    let doc = match name.as_str() {
        "group" => Document::Group(parse_group_section(body)?),
        "lpres" => Document::Lpres(parse_lpres_section(body)?),
        "certs" => Document::Certs(parse_certs_section(body, header_span)?),
        "map" => Document::Map(parse_map_section(body)?),
        other => {
            return Err(Error::parse(
                header_span,
                "one of the sections [group], [lpres], [certs], [map]",
                format!("`[{other}]`"),
            ))
        }
    };
    Ok((doc, header_span))
}

/// Parse a `[group]` document.
pub fn parse_presentation(text: &str) -> Result<FinitePresentation, Error> {
    match parse_document_inner(text)? {
        (Document::Group(p), _) => Ok(p),
        (_, span) => Err(Error::parse(span, "a [group] section", "another section kind")),
    }
}

/// Parse an `[lpres]` document.
pub fn parse_lpres(text: &str) -> Result<LPresentation, Error> {
    match parse_document_inner(text)? {
        (Document::Lpres(lp), _) => Ok(lp),
        (_, span) => Err(Error::parse(span, "an [lpres] section", "another section kind")),
    }
}

/// Parse a `[certs]` document.
pub fn parse_certs(text: &str) -> Result<CertificateSet, Error> {
    match parse_document_inner(text)? {
        (Document::Certs(c), _) => Ok(c),
        (_, span) => Err(Error::parse(span, "a [certs] section", "another section kind")),
    }
}

/// Parse a `[map]` document.
pub fn parse_map(text: &str) -> Result<PullbackMap, Error> {
    match parse_document_inner(text)? {
        (Document::Map(m), _) => Ok(m),
        (_, span) => Err(Error::parse(span, "a [map] section", "another section kind")),
    }
}

/// The single-`Ident` key name, if the key has that shape.
fn key_name(key: &[STok]) -> Option<&str> {
    match key {
        [STok { tok: Tok::Ident(name), .. }] => Some(name),
        _ => None,
    }
}

/// Parse a whitespace-separated generator list (a `gens` value).
fn parse_gen_list(value: &[STok], span: Span) -> Result<Vec<Generator>, Error> {
    let mut validate = |_: &Generator, _: Span| Ok(());
    let mut p = P::new(value, span, &mut validate);
    let mut out: Vec<Generator> = Vec::new();
    while !p.at_end() {
        let g = p.parse_gen()?;
        if out.contains(&g) {
            return Err(Error::DuplicateGenerator(g.to_string()));
        }
        out.push(g);
    }
    Ok(out)
}

/// Parse a `;`-separated list of words.
fn parse_word_list(
    value: &[STok],
    span: Span,
    alphabet: &[Generator],
) -> Result<Vec<Word>, Error> {
    let mut out = Vec::new();
    let mut validate = member_validator(alphabet);
    let mut p = P::new(value, span, &mut validate);
    if p.at_end() {
        return Ok(out);
    }
    loop {
        out.push(p.parse_word()?);
        if p.at_end() {
            break;
        }
        p.expect(Tok::Semi, "`;` between words or end of line")?;
    }
    Ok(out)
}

fn parse_group_section(lines: &[Line]) -> Result<FinitePresentation, Error> {
    let mut gens: Option<Vec<Generator>> = None;
    // First pass: locate the generator list so relators can validate.
    for l in lines {
        let Line::KeyValue { key, value, span } = l else { continue };
        if key_name(key) == Some("gens") {
            if gens.is_some() {
                return Err(Error::parse(*span, "a single gens line", "a second one"));
            }
            gens = Some(parse_gen_list(value, *span)?);
        }
    }
    let gens = gens.ok_or_else(|| {
        Error::parse(Span { line: 1, col: 1 }, "a gens line", "none")
    })?;

    let mut degree: Option<BTreeMap<Generator, i64>> = None;
    let mut relators: Vec<Word> = Vec::new();
    for l in lines {
        let Line::KeyValue { key, value, span } = l else { continue };
        match key_name(key) {
            Some("gens") => {}
            Some("deg") => {
                if degree.is_some() {
                    return Err(Error::parse(*span, "a single deg line", "a second one"));
                }
                degree = Some(parse_degree_pairs(value, *span)?);
            }
            Some("rels") => {
                relators.extend(parse_word_list(value, *span, &gens)?);
            }
            _ => {
                return Err(Error::parse(
                    *span,
                    "one of the keys `gens`, `deg`, `rels`",
                    key[0].tok.describe(),
                ))
            }
        }
    }
    FinitePresentation::new(gens, relators, degree)
}

fn parse_degree_pairs(value: &[STok], span: Span) -> Result<BTreeMap<Generator, i64>, Error> {
    let mut validate = |_: &Generator, _: Span| Ok(());
    let mut p = P::new(value, span, &mut validate);
    let mut out = BTreeMap::new();
    while !p.at_end() {
        let g = p.parse_gen()?;
        let Some(Tok::Int(d)) = p.peek() else {
            return Err(p.err("an integer degree"));
        };
        let d = *d;
        p.bump();
        if out.insert(g.clone(), d).is_some() {
            return Err(Error::parse(
                span,
                "one degree per generator",
                format!("`{g}` twice"),
            ));
        }
    }
    Ok(out)
}

fn parse_lpres_section(lines: &[Line]) -> Result<LPresentation, Error> {
    let mut gens: Option<Vec<Generator>> = None;
    for l in lines {
        let Line::KeyValue { key, value, span } = l else { continue };
        if key_name(key) == Some("gens") {
            if gens.is_some() {
                return Err(Error::parse(*span, "a single gens line", "a second one"));
            }
            gens = Some(parse_gen_list(value, *span)?);
        }
    }
    let gens = gens.ok_or_else(|| {
        Error::parse(Span { line: 1, col: 1 }, "a gens line", "none")
    })?;

    let mut fixed: Vec<Word> = Vec::new();
    let mut seeds: Vec<Word> = Vec::new();
    let mut endos: Vec<(String, FreeEndomorphism)> = Vec::new();
    for l in lines {
        let Line::KeyValue { key, value, span } = l else { continue };
        match key.as_slice() {
            [STok { tok: Tok::Ident(k), .. }] if k == "gens" => {}
            [STok { tok: Tok::Ident(k), .. }] if k == "fixed" => {
                fixed.extend(parse_word_list(value, *span, &gens)?);
            }
            [STok { tok: Tok::Ident(k), .. }] if k == "seeds" => {
                seeds.extend(parse_word_list(value, *span, &gens)?);
            }
            [STok { tok: Tok::Ident(k), .. }, STok { tok: Tok::Ident(name), .. }]
                if k == "endo" =>
            {
                if endos.iter().any(|(n, _)| n == name) {
                    return Err(Error::DuplicateEndo(name.clone()));
                }
                let endo = parse_endo_rules(value, *span, name, &gens)?;
                endos.push((name.clone(), endo));
            }
            _ => {
                return Err(Error::parse(
                    *span,
                    "one of the keys `gens`, `fixed`, `seeds`, `endo <name>`",
                    key[0].tok.describe(),
                ))
            }
        }
    }
    LPresentation::new(gens, fixed, seeds, endos)
}

/// `x -> word, y -> word, …` with every generator mapped exactly once.
fn parse_endo_rules(
    value: &[STok],
    span: Span,
    endo_name: &str,
    gens: &[Generator],
) -> Result<FreeEndomorphism, Error> {
    let mut validate = member_validator(gens);
    let mut p = P::new(value, span, &mut validate);
    let mut images: BTreeMap<Generator, Word> = BTreeMap::new();
    loop {
        let at = p.span();
        let g = p.parse_gen()?;
        if images.contains_key(&g) {
            return Err(Error::parse(
                at,
                "a generator without an image yet",
                format!("`{g}` again"),
            ));
        }
        p.expect(Tok::Arrow, "`->` after the generator")?;
        let img = p.parse_word()?;
        images.insert(g, img);
        if p.at_end() {
            break;
        }
        p.expect(Tok::Comma, "`,` between images or end of line")?;
    }
    for g in gens {
        if !images.contains_key(g) {
            return Err(Error::EndoNotTotal {
                endo: endo_name.to_string(),
                generator: g.to_string(),
            });
        }
    }
    FreeEndomorphism::new(images)
}

fn parse_certs_section(lines: &[Line], header: Span) -> Result<CertificateSet, Error> {
    let mut bound: Option<i64> = None;
    let mut base: Vec<Generator> = Vec::new();
    let mut up: BTreeMap<Generator, Word> = BTreeMap::new();
    let mut down: BTreeMap<Generator, Word> = BTreeMap::new();
    for l in lines {
        let Line::KeyValue { key, value, span } = l else { continue };
        match key.as_slice() {
            [STok { tok: Tok::Ident(k), .. }] if k == "N" => {
                if bound.is_some() {
                    return Err(Error::parse(*span, "a single N line", "a second one"));
                }
                match value.as_slice() {
                    [STok { tok: Tok::Int(n), .. }] if *n >= 0 => bound = Some(*n),
                    _ => {
                        return Err(Error::parse(
                            *span,
                            "a nonnegative integer window bound",
                            value.first().map(|t| t.tok.describe()).unwrap_or_else(|| "end of line".into()),
                        ))
                    }
                }
            }
            [STok { tok: Tok::Ident(dir), .. }, STok { tok: Tok::Ident(name), span: gspan }]
                if dir == "up" || dir == "down" =>
            {
                let Some(n) = bound else {
                    return Err(Error::parse(
                        *span,
                        "the window bound `N = …` before certificate rows",
                        format!("`{dir}`"),
                    ));
                };
                let g = Generator::plain(name.clone());
                let table = if dir == "up" { &mut up } else { &mut down };
                if table.contains_key(&g) {
                    return Err(Error::parse(
                        *gspan,
                        format!("a single `{dir}` row per generator"),
                        format!("`{g}` again"),
                    ));
                }
                let mut validate = window_validator(n);
                let mut p = P::new(value, *span, &mut validate);
                let w = p.parse_word()?;
                if !p.at_end() {
                    return Err(p.err("end of line"));
                }
                if !base.contains(&g) {
                    base.push(g.clone());
                }
                table.insert(g, w);
            }
            _ => {
                return Err(Error::parse(
                    *span,
                    "one of the keys `N`, `up <gen>`, `down <gen>`",
                    key[0].tok.describe(),
                ))
            }
        }
    }
    if bound.is_none() {
        return Err(Error::parse(header, "an `N = …` line", "none"));
    }
    let window = WindowAlphabet::new(base, bound.unwrap())?;
    CertificateSet::new(window, up, down)
}

/// Certificate words must use leveled letters inside `[-n, n]`.
fn window_validator(n: i64) -> impl FnMut(&Generator, Span) -> Result<(), Error> {
    move |g: &Generator, span: Span| match g.level() {
        None => Err(Error::parse(
            span,
            "a leveled generator like `a@0`",
            format!("`{g}`"),
        )),
        Some(l) if l.abs() > n => Err(Error::parse(
            span,
            format!("a level within [-{n}, {n}]"),
            format!("`{g}`"),
        )),
        Some(_) => Ok(()),
    }
}

fn parse_map_section(lines: &[Line]) -> Result<PullbackMap, Error> {
    let mut rules: Vec<MapRule> = Vec::new();
    for l in lines {
        let Line::KeyValue { key, value, span } = l else { continue };
        let (lhs, var): (RuleLhs, Option<String>) = match key.as_slice() {
            [STok { tok: Tok::Ident(name), .. }] => {
                (RuleLhs::Exact(Generator::plain(name.clone())), None)
            }
            [STok { tok: Tok::Ident(name), .. }, STok { tok: Tok::At, .. }, STok { tok: Tok::Int(lvl), .. }] => {
                (RuleLhs::Exact(Generator::indexed(name.clone(), *lvl)), None)
            }
            [STok { tok: Tok::Ident(name), .. }, STok { tok: Tok::At, .. }, STok { tok: Tok::Ident(var), .. }] => (
                RuleLhs::Pattern {
                    name: name.clone(),
                    var: var.clone(),
                },
                Some(var.clone()),
            ),
            _ => {
                return Err(Error::parse(
                    *span,
                    "a map rule key: `x`, `x@3`, or `x@i`",
                    key[0].tok.describe(),
                ))
            }
        };
        let clash = rules.iter().any(|r| match (&r.lhs, &lhs) {
            (RuleLhs::Exact(a), RuleLhs::Exact(b)) => a == b,
            (RuleLhs::Pattern { name: a, .. }, RuleLhs::Pattern { name: b, .. }) => a == b,
            _ => false,
        });
        if clash {
            return Err(Error::parse(*span, "a fresh rule left-hand side", "a repeated one"));
        }
        // Right-hand sides are words over the *target* alphabet, which the
        // map does not declare; no letter validation here.
        let mut validate = |_: &Generator, _: Span| Ok(());
        let mut p = P::new(value, *span, &mut validate);
        let rhs = match &var {
            Some(v) => {
                let factors = p.parse_template(v)?;
                RuleRhs::Template(factors)
            }
            None => RuleRhs::Exact(p.parse_word()?),
        };
        if !p.at_end() {
            return Err(p.err("end of line"));
        }
        rules.push(MapRule { lhs, rhs });
    }
    Ok(PullbackMap::new(rules))
}
