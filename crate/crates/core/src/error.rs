//! Crate-wide error type and its mapping onto process exit codes.

use thiserror::Error;

/// Location of an offending lexeme in a source text, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub line: usize,
    pub col: usize,
}

impl std::fmt::Display for Span {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

/// Everything that can go wrong in this crate.
///
/// Variants split into three groups, which the command-line tool maps onto
/// exit codes:
///
/// * syntax or semantic defects in an *input file* → exit code 2
///   ([`Error::is_input_error`]);
/// * violated *preconditions* of an operation (valid files, but the request
///   does not apply to them) → exit code 3;
/// * verification failures are not errors at all — they are reported through
///   [`crate::oracles::VerificationReport`] and map to exit code 1.
#[derive(Debug, Error)]
pub enum Error {
    /// Syntax error while parsing one of the text formats.
    #[error("{span}: expected {expected}, found {found}")]
    Parse {
        span: Span,
        expected: String,
        found: String,
    },

    /// A generator was declared twice in the same `gens` list.
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),

    /// A word used a generator that is not part of the ambient alphabet.
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    /// A degree map mentioned a generator that was never declared.
    #[error("degree assigned to unknown generator `{0}`")]
    DegreeForUnknownGenerator(String),

    /// A degree map is present but leaves some generator without a value.
    #[error("degree map does not cover generator `{0}`")]
    DegreeMissingFor(String),

    /// A relator has nonzero total degree, so no degree map onto the
    /// integers can kill it.
    #[error("relator `{relator}` has total degree {degree}, expected 0")]
    RelatorDegreeNonzero { relator: String, degree: i64 },

    /// An endomorphism does not assign an image to every generator.
    #[error("endomorphism `{endo}` has no image for generator `{generator}`")]
    EndoNotTotal { endo: String, generator: String },

    /// Two endomorphisms with the same name were declared.
    #[error("duplicate endomorphism name `{0}`")]
    DuplicateEndo(String),

    /// Endomorphisms over different alphabets were combined.
    #[error("endomorphism alphabets differ: {0}")]
    AlphabetMismatch(String),

    /// A word was applied to a map that has no image for one of its letters.
    #[error("no image for generator `{0}`")]
    MissingImage(String),

    /// An operation on leveled words met a generator without a level.
    #[error("generator `{0}` carries no level index")]
    NotIndexed(String),

    /// An operation on plain alphabets met a generator that already has a
    /// level.
    #[error("generator `{0}` already carries a level index")]
    AlreadyIndexed(String),

    /// The requested operation needs a degree map but the presentation has
    /// none.
    #[error("presentation carries no degree map")]
    MissingDegree,

    /// The distinguished generator must have degree ±1 for the kernel
    /// construction to apply.
    #[error("generator `{generator}` has degree {degree}, expected 1 or -1")]
    DegreeNotUnit { generator: String, degree: i64 },

    /// The certificate window is too small to contain the rewritten seed
    /// relators.
    #[error("window bound {given} is too small: rewritten relators need at least {needed}")]
    WindowTooSmall { given: i64, needed: i64 },

    /// Certificates talk about a different rewritten alphabet than the
    /// presentation produces.
    #[error("certificate alphabet mismatch: {0}")]
    CertMismatch(String),

    /// A certificate row is missing or out of range.
    #[error("certificate for `{direction} {generator}` {problem}")]
    CertRow {
        direction: &'static str,
        generator: String,
        problem: String,
    },

    /// HNN-style embedding is only defined for ascending L-presentations.
    #[error("L-presentation is not ascending: it has {0} fixed relator(s)")]
    NotAscending(usize),

    /// A fresh stable letter would collide with an existing generator.
    #[error("stable letter `{0}` collides with an existing generator")]
    StableLetterClash(String),

    /// A word handed to an oracle uses letters the oracle does not model.
    #[error("oracle `{oracle}` cannot interpret generator `{generator}`")]
    OracleAlphabet { oracle: String, generator: String },

    /// Kernel derivation was invoked without a certificate file.
    #[error("certificates required: kernel derivation needs a certificate file (--certs)")]
    CertsRequired,

    /// The selected oracle evaluates the presentation's own alphabet, so a
    /// pullback map does not apply.
    #[error("the {0} oracle works on the presentation's own alphabet and takes no pullback map")]
    PullbackUnsupported(String),

    /// Underlying I/O failure (file read/write in the CLI).
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// Convenience constructor for parse errors.
    pub fn parse(span: Span, expected: impl Into<String>, found: impl Into<String>) -> Self {
        Error::Parse {
            span,
            expected: expected.into(),
            found: found.into(),
        }
    }

    /// True for defects of an input file (syntax or file-level semantics),
    /// as opposed to violated preconditions of the requested operation.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. }
                | Error::DuplicateGenerator(_)
                | Error::UnknownGenerator(_)
                | Error::DegreeForUnknownGenerator(_)
                | Error::DegreeMissingFor(_)
                | Error::RelatorDegreeNonzero { .. }
                | Error::EndoNotTotal { .. }
                | Error::DuplicateEndo(_)
                | Error::CertRow { .. }
                | Error::Io { .. }
        )
    }

    /// Exit code the command-line tool uses for this error.
    pub fn exit_code(&self) -> u8 {
        if self.is_input_error() {
            2
        } else {
            3
        }
    }
}
