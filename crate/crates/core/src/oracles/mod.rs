//! Ground-truth engines for verifying expanded relators, plus the driver
//! that feeds an expansion through an oracle.
//!
//! An *oracle* decides the word problem of a concrete target group: given a
//! word it returns `None` when the word is the identity and
//! `Some(witness)` explaining a failure otherwise.  Three oracles live
//! here:
//!
//! * [`grig`] — the self-similar action of the Grigorchuk group on the
//!   binary rooted tree (exact, decides the full word problem);
//! * [`dyadic`] — exact affine maps `x ↦ 2ᵏ·x + q` over dyadic rationals,
//!   modelling Baumslag–Solitar style groups (faithful linear
//!   representation);
//! * [`abelian`] — membership of a word's abelianization in the
//!   endomorphism-saturated relator lattice, backed by the Smith normal
//!   form in [`snf`] (a necessary condition, useful as a cheap
//!   cross-check).
//!
//! [`verify_lpres`] expands an L-presentation to a depth, optionally
//! translates each relator into the target group's alphabet through a
//! [`PullbackMap`], and reports every relator the oracle rejects.

pub mod abelian;
pub mod dyadic;
pub mod grig;
pub mod snf;

use std::collections::BTreeMap;

use crate::error::Error;
use crate::freegroup::{Generator, Sign, Word};
use crate::lpres::{expand, DedupMode, LPresentation};

/// Left-hand side of a pullback rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RuleLhs {
    /// Matches one generator exactly.
    Exact(Generator),
    /// Matches `name@l` for every level `l`; `var` names the level inside
    /// the rule's right-hand side.
    Pattern { name: String, var: String },
}

/// One multiplicative factor of a template right-hand side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TemplateFactor {
    /// A fixed word.
    Const(Word),
    /// `base^level` (or `base^-level` when `negate`), instantiated with the
    /// level of the generator being resolved.
    Pow { base: Word, negate: bool },
}

/// Right-hand side of a pullback rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RuleRhs {
    Exact(Word),
    Template(Vec<TemplateFactor>),
}

/// One rule of a pullback map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapRule {
    pub lhs: RuleLhs,
    pub rhs: RuleRhs,
}

/// A word map sending generators of one presentation into words over
/// another alphabet, with template rules covering whole level families.
///
/// Resolution order: exact rules (in file order) shadow pattern rules.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PullbackMap {
    rules: Vec<MapRule>,
}

impl PullbackMap {
    pub fn new(rules: Vec<MapRule>) -> Self {
        PullbackMap { rules }
    }

    pub fn rules(&self) -> &[MapRule] {
        &self.rules
    }

    /// The image of one generator, if any rule covers it.
    pub fn resolve(&self, g: &Generator) -> Option<Word> {
        for rule in &self.rules {
            if let RuleLhs::Exact(h) = &rule.lhs {
                if h == g {
                    return Some(instantiate(&rule.rhs, g.level().unwrap_or(0)));
                }
            }
        }
        let level = g.level()?;
        for rule in &self.rules {
            if let RuleLhs::Pattern { name, .. } = &rule.lhs {
                if name == g.name() {
                    return Some(instantiate(&rule.rhs, level));
                }
            }
        }
        None
    }

    /// Push a whole word through the map.
    pub fn apply(&self, w: &Word) -> Result<Word, Error> {
        let mut out = Word::identity();
        for l in w.letters() {
            let img = self
                .resolve(&l.gen)
                .ok_or_else(|| Error::MissingImage(l.gen.to_string()))?;
            out = match l.sign {
                Sign::Plus => out.multiply(&img),
                Sign::Minus => out.multiply(&img.inverse()),
            };
        }
        Ok(out)
    }

    /// Materialize the map on a concrete alphabet.
    pub fn images_for(&self, gens: &[Generator]) -> Result<BTreeMap<Generator, Word>, Error> {
        gens.iter()
            .map(|g| {
                self.resolve(g)
                    .map(|w| (g.clone(), w))
                    .ok_or_else(|| Error::MissingImage(g.to_string()))
            })
            .collect()
    }
}

fn instantiate(rhs: &RuleRhs, level: i64) -> Word {
    match rhs {
        RuleRhs::Exact(w) => w.clone(),
        RuleRhs::Template(factors) => {
            let mut out = Word::identity();
            for f in factors {
                match f {
                    TemplateFactor::Const(w) => out = out.multiply(w),
                    TemplateFactor::Pow { base, negate } => {
                        let e = if *negate { -level } else { level };
                        out = out.multiply(&base.pow(e));
                    }
                }
            }
            out
        }
    }
}

/// One rejected relator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    /// Composition depth that produced the relator (0 for fixed relators
    /// and seeds).
    pub depth: usize,
    /// The relator as expanded (before any pullback).
    pub relator: Word,
    /// The oracle's explanation.
    pub witness: String,
}

/// Outcome of verifying an expansion against an oracle.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    /// Relators checked.
    pub total: usize,
    /// Expansion depth used.
    pub depth: usize,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn verified(&self) -> bool {
        self.failures.is_empty()
    }

    /// Text form: `FAIL <depth> <relator> <witness>` per failure, or
    /// `OK <count>` when everything checked out.
    pub fn render(&self) -> String {
        if self.verified() {
            return format!("OK {}\n", self.total);
        }
        let mut out = String::new();
        for f in &self.failures {
            out.push_str(&format!(
                "FAIL {} {} {}\n",
                f.depth,
                crate::presfmt::print_word(&f.relator),
                f.witness
            ));
        }
        out
    }
}

/// Expand `lp` to `depth` and run every relator through `oracle`, first
/// translating it with `pullback` if one is given.  `jobs > 1` splits the
/// relators across that many threads (the oracle must be shareable).
///
/// Failures come back in expansion order with the depth that produced the
/// offending relator.
pub fn verify_lpres<F>(
    lp: &LPresentation,
    depth: usize,
    oracle: F,
    pullback: Option<&PullbackMap>,
    jobs: usize,
) -> Result<VerificationReport, Error>
where
    F: Fn(&Word) -> Result<Option<String>, Error> + Sync,
{
    let report = expand(lp, depth, DedupMode::Exact);
    let mut prepared: Vec<(usize, Word, Word)> = Vec::with_capacity(report.len());
    for (d, w) in &report.entries {
        let input = match pullback {
            Some(m) => m.apply(w)?,
            None => w.clone(),
        };
        prepared.push((*d, w.clone(), input));
    }
    let total = prepared.len();

    let failures = if jobs <= 1 || total <= 1 {
        check_chunk(&prepared, &oracle)?
    } else {
        let jobs = jobs.min(total);
        let chunk_size = total.div_ceil(jobs);
        let chunks: Vec<&[(usize, Word, Word)]> = prepared.chunks(chunk_size).collect();
        let results: Vec<Result<Vec<Failure>, Error>> = std::thread::scope(|scope| {
            let handles: Vec<_> = chunks
                .into_iter()
                .map(|chunk| scope.spawn(|| check_chunk(chunk, &oracle)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("verification worker panicked"))
                .collect()
        });
        let mut merged = Vec::new();
        for r in results {
            merged.extend(r?);
        }
        merged
    };

    Ok(VerificationReport {
        total,
        depth,
        failures,
    })
}

fn check_chunk<F>(chunk: &[(usize, Word, Word)], oracle: &F) -> Result<Vec<Failure>, Error>
where
    F: Fn(&Word) -> Result<Option<String>, Error>,
{
    let mut failures = Vec::new();
    for (depth, relator, input) in chunk {
        if let Some(witness) = oracle(input)? {
            failures.push(Failure {
                depth: *depth,
                relator: relator.clone(),
                witness,
            });
        }
    }
    Ok(failures)
}
