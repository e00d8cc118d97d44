//! Ascending L-presentations for kernels of degree maps onto the integers.
//!
//! Given a finite presentation of a group `G` together with a degree map
//! `deg: G → ℤ` and a distinguished generator `t` of degree `±1`, the kernel
//! `H = ker(deg)` is generated by the conjugates `x@i = t⁻ⁱ·x·tⁱ` of the
//! degree-zero generators `x`.  This module derives a finite *ascending*
//! L-presentation for `H`:
//!
//! 1. [`neumann_normalize`] rebases every generator to degree zero (except
//!    `t` itself), replacing `g` by `g·t^(−deg g)` while keeping its name;
//! 2. [`rs_rewrite`] rewrites each relator into the leveled alphabet
//!    `x@i` by Reidemeister–Schreier rewriting along the transversal
//!    `{tⁱ}`;
//! 3. a [`CertificateSet`] supplies, for every base generator `x`, words
//!    inside the window `|level| ≤ N` equal in `H` to `x@(N+1)` and
//!    `x@(−N−1)`; the [`Gamma`] evaluator folds arbitrary levels back into
//!    the window by shifting those certificate words;
//! 4. [`build_endos`] turns γ into the two shift endomorphisms
//!    `eta: x@i ↦ γ(x@(i+1))` and `tau: x@i ↦ γ(x@(i−1))`, and
//!    [`derive_lpres`] packages window generators, rewritten relators and
//!    the two endomorphisms into an [`LPresentation`].
//!
//! The resulting presentation is correct because conjugation by `t` acts on
//! the rewritten generators as the level shift, so the full set of shifted
//! relators — which present `H` — is exactly the `{eta, tau}`-orbit of the
//! window seeds.  [`gamma_iterate_check`] tests that identity on concrete
//! words and shift ranges.

use std::collections::{BTreeMap, HashMap};

use crate::error::Error;
use crate::freegroup::{FreeEndomorphism, Generator, Letter, Sign, Word};
use crate::lpres::{FinitePresentation, LPresentation};

/// A presentation in which the distinguished generator `t` has degree one
/// and every other (*base*) generator has degree zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedPresentation {
    t: Generator,
    base: Vec<Generator>,
    relators: Vec<Word>,
}

impl NormalizedPresentation {
    pub fn new(t: Generator, base: Vec<Generator>, relators: Vec<Word>) -> Result<Self, Error> {
        if t.level().is_some() {
            return Err(Error::AlreadyIndexed(t.to_string()));
        }
        for g in &base {
            if g.level().is_some() {
                return Err(Error::AlreadyIndexed(g.to_string()));
            }
            if *g == t {
                return Err(Error::DuplicateGenerator(g.to_string()));
            }
        }
        for (i, g) in base.iter().enumerate() {
            if base[..i].contains(g) {
                return Err(Error::DuplicateGenerator(g.to_string()));
            }
        }
        for r in &relators {
            for g in r.support() {
                if *g != t && !base.contains(g) {
                    return Err(Error::UnknownGenerator(g.to_string()));
                }
            }
            let tsum = r.exp_sum(&t);
            if tsum != 0 {
                return Err(Error::RelatorDegreeNonzero {
                    relator: crate::presfmt::print_word(r),
                    degree: tsum,
                });
            }
        }
        Ok(NormalizedPresentation { t, base, relators })
    }

    pub fn t(&self) -> &Generator {
        &self.t
    }

    pub fn base(&self) -> &[Generator] {
        &self.base
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// The normalized data as an ordinary presentation (degree: base ↦ 0,
    /// `t` ↦ 1).
    pub fn presentation(&self) -> FinitePresentation {
        let mut gens = self.base.clone();
        gens.push(self.t.clone());
        let mut degree = BTreeMap::new();
        for g in &self.base {
            degree.insert(g.clone(), 0);
        }
        degree.insert(self.t.clone(), 1);
        FinitePresentation::new(gens, self.relators.clone(), Some(degree))
            .expect("normalized data satisfies the presentation invariants")
    }
}

/// Rebase a presented group so that all generators except `t` have degree
/// zero.
///
/// Requires a total degree map with `deg t = ±1`.  If `deg t = −1` the
/// construction silently works with `t⁻¹` (every occurrence of `t` in the
/// relators is sign-flipped); [`derive_lpres`] records that in its
/// provenance.  Every other generator `g` is replaced by `g·t^(−deg g)`,
/// which has degree zero; the replacement keeps the generator's name, since
/// the two generate the same group together with `t`.
pub fn neumann_normalize(
    p: &FinitePresentation,
    t: &Generator,
) -> Result<NormalizedPresentation, Error> {
    let (np, _) = neumann_normalize_inner(p, t)?;
    Ok(np)
}

/// As [`neumann_normalize`], also reporting whether `t` had to be inverted
/// to reach degree one.
pub(crate) fn neumann_normalize_inner(
    p: &FinitePresentation,
    t: &Generator,
) -> Result<(NormalizedPresentation, bool), Error> {
    let degree = p.degree().ok_or(Error::MissingDegree)?;
    if !p.generators().contains(t) {
        return Err(Error::UnknownGenerator(t.to_string()));
    }
    for g in p.generators() {
        if g.level().is_some() {
            return Err(Error::AlreadyIndexed(g.to_string()));
        }
    }
    let dt = degree[t];
    if dt != 1 && dt != -1 {
        return Err(Error::DegreeNotUnit {
            generator: t.to_string(),
            degree: dt,
        });
    }
    let inverted = dt == -1;
    // Substitution sending each old generator to its expression in the new
    // ones: t ↦ t^(±1), g ↦ g·t^(deg g) — inverse of the rebasing
    // g_new = g_old·t^(−deg g).
    let t_word = if inverted {
        Word::generator(t.clone()).inverse()
    } else {
        Word::generator(t.clone())
    };
    let mut images: BTreeMap<Generator, Word> = BTreeMap::new();
    images.insert(t.clone(), t_word.clone());
    let mut base: Vec<Generator> = Vec::new();
    for g in p.generators() {
        if g == t {
            continue;
        }
        base.push(g.clone());
        let d = degree[g] * if inverted { -1 } else { 1 };
        images.insert(g.clone(), Word::generator(g.clone()).multiply(&t_word.pow(d)));
    }
    let relators: Vec<Word> = p
        .relators()
        .iter()
        .map(|r| crate::lpres::substitute(r, &images))
        .collect::<Result<_, _>>()?;
    let np = NormalizedPresentation::new(t.clone(), base, relators)?;
    Ok((np, inverted))
}

/// Reidemeister–Schreier rewriting of a zero-degree word into the leveled
/// kernel alphabet.
///
/// Scanning left to right with `c` the cumulative `t`-exponent of the
/// consumed prefix, a letter `x^±` rewrites to `(x@(−c))^±` and `t`-letters
/// only move `c`.  In particular `t⁻ⁱ·x·tⁱ` rewrites to the single letter
/// `x@i`.  The word must be over the normalized alphabet and have zero
/// total `t`-exponent (otherwise it does not lie in the kernel).
pub fn rs_rewrite(w: &Word, np: &NormalizedPresentation) -> Result<Word, Error> {
    let tsum = w.exp_sum(np.t());
    if tsum != 0 {
        return Err(Error::RelatorDegreeNonzero {
            relator: crate::presfmt::print_word(w),
            degree: tsum,
        });
    }
    let mut c: i64 = 0;
    let mut out: Vec<Letter> = Vec::new();
    for l in w.letters() {
        if l.gen == *np.t() {
            c += l.sign.unit();
        } else if np.base().contains(&l.gen) {
            out.push(Letter::new(l.gen.at(-c), l.sign));
        } else {
            return Err(Error::UnknownGenerator(l.gen.to_string()));
        }
    }
    Ok(Word::from_letters(out))
}

/// Add `k` to the level of every letter.  Conjugation by `tᵏ` acts on the
/// kernel generators exactly like this shift.
pub fn shift(w: &Word, k: i64) -> Result<Word, Error> {
    let mut out: Vec<Letter> = Vec::with_capacity(w.len());
    for l in w.letters() {
        let level = l
            .gen
            .level()
            .ok_or_else(|| Error::NotIndexed(l.gen.to_string()))?;
        out.push(Letter::new(l.gen.at(level + k), l.sign));
    }
    Ok(Word::from_letters(out))
}

/// Smallest window bound accommodating all the given words: the maximum
/// absolute level occurring in them (0 for no words or level-free words).
pub fn window_bound(words: &[Word]) -> i64 {
    words.iter().map(Word::max_abs_level).max().unwrap_or(0)
}

/// The leveled alphabet `{ x@i : x base generator, |i| ≤ bound }`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowAlphabet {
    base: Vec<Generator>,
    bound: i64,
}

impl WindowAlphabet {
    pub fn new(base: Vec<Generator>, bound: i64) -> Result<Self, Error> {
        assert!(bound >= 0, "window bound must be nonnegative");
        for (i, g) in base.iter().enumerate() {
            if g.level().is_some() {
                return Err(Error::AlreadyIndexed(g.to_string()));
            }
            if base[..i].contains(g) {
                return Err(Error::DuplicateGenerator(g.to_string()));
            }
        }
        Ok(WindowAlphabet { base, bound })
    }

    pub fn base(&self) -> &[Generator] {
        &self.base
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }

    /// Is the leveled generator inside the window?
    pub fn contains(&self, g: &Generator) -> bool {
        match g.level() {
            Some(l) => l.abs() <= self.bound && self.base.contains(&g.base()),
            None => false,
        }
    }

    /// All window generators, base-major: `x@(−N) … x@N`, then the next
    /// base generator.
    pub fn generators(&self) -> Vec<Generator> {
        let mut out = Vec::with_capacity(self.base.len() * (2 * self.bound as usize + 1));
        for g in &self.base {
            for i in -self.bound..=self.bound {
                out.push(g.at(i));
            }
        }
        out
    }

    fn check_word(&self, w: &Word, direction: &'static str, owner: &Generator) -> Result<(), Error> {
        for l in w.letters() {
            if !self.contains(&l.gen) {
                return Err(Error::CertRow {
                    direction,
                    generator: owner.to_string(),
                    problem: format!("uses `{}` outside the window (bound {})", l.gen, self.bound),
                });
            }
        }
        Ok(())
    }
}

/// Window certificates: for every base generator `x`, words inside the
/// window equal in the kernel to the first out-of-window conjugates
/// `x@(N+1)` (the `up` row) and `x@(−N−1)` (the `down` row).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateSet {
    window: WindowAlphabet,
    up: BTreeMap<Generator, Word>,
    down: BTreeMap<Generator, Word>,
}

impl CertificateSet {
    pub fn new(
        window: WindowAlphabet,
        up: BTreeMap<Generator, Word>,
        down: BTreeMap<Generator, Word>,
    ) -> Result<Self, Error> {
        for g in window.base() {
            let u = up.get(g).ok_or(Error::CertRow {
                direction: "up",
                generator: g.to_string(),
                problem: "is missing".into(),
            })?;
            window.check_word(u, "up", g)?;
            let d = down.get(g).ok_or(Error::CertRow {
                direction: "down",
                generator: g.to_string(),
                problem: "is missing".into(),
            })?;
            window.check_word(d, "down", g)?;
        }
        for g in up.keys().chain(down.keys()) {
            if !window.base().contains(g) {
                return Err(Error::CertRow {
                    direction: "up/down",
                    generator: g.to_string(),
                    problem: "does not name a base generator".into(),
                });
            }
        }
        Ok(CertificateSet { window, up, down })
    }

    pub fn window(&self) -> &WindowAlphabet {
        &self.window
    }

    pub fn up(&self, g: &Generator) -> Option<&Word> {
        self.up.get(g)
    }

    pub fn down(&self, g: &Generator) -> Option<&Word> {
        self.down.get(g)
    }

    /// Same certificates with the base generators listed in a different
    /// order (used to align with a presentation's generator order).
    fn reordered(&self, base: Vec<Generator>) -> Result<CertificateSet, Error> {
        let window = WindowAlphabet::new(base, self.window.bound)?;
        CertificateSet::new(window, self.up.clone(), self.down.clone())
    }
}

/// Memoized evaluator for the window-folding map γ.
///
/// γ fixes window letters and rewrites an out-of-window letter `x@i`
/// (say `i > N`) as the certificate word for `x@(N+1)`, shifted up by
/// `i − N − 1`, recursively folded again.  Each recursion step strictly
/// shrinks the overshoot, so evaluation terminates; results are memoized
/// per letter.
pub struct Gamma<'a> {
    certs: &'a CertificateSet,
    memo: HashMap<Generator, Word>,
}

impl<'a> Gamma<'a> {
    pub fn new(certs: &'a CertificateSet) -> Self {
        Gamma {
            certs,
            memo: HashMap::new(),
        }
    }

    /// γ of a single positive letter.
    pub fn letter(&mut self, g: &Generator) -> Result<Word, Error> {
        let level = g
            .level()
            .ok_or_else(|| Error::NotIndexed(g.to_string()))?;
        let window = self.certs.window();
        let base = g.base();
        if !window.base().contains(&base) {
            return Err(Error::UnknownGenerator(g.to_string()));
        }
        if level.abs() <= window.bound() {
            return Ok(Word::generator(g.clone()));
        }
        if let Some(hit) = self.memo.get(g) {
            return Ok(hit.clone());
        }
        let n = window.bound();
        let (cert, step) = if level > n {
            (self.certs.up(&base).expect("validated row"), level - (n + 1))
        } else {
            (self.certs.down(&base).expect("validated row"), level + (n + 1))
        };
        let folded = self.word(&shift(cert, step)?)?;
        self.memo.insert(g.clone(), folded.clone());
        Ok(folded)
    }

    /// γ extended multiplicatively over a word.
    pub fn word(&mut self, w: &Word) -> Result<Word, Error> {
        let mut out = Word::identity();
        for l in w.letters() {
            let img = self.letter(&l.gen)?;
            out = match l.sign {
                Sign::Plus => out.multiply(&img),
                Sign::Minus => out.multiply(&img.inverse()),
            };
        }
        Ok(out)
    }
}

/// The two shift endomorphisms of the window alphabet induced by
/// conjugation by `t` and `t⁻¹`: `eta: x@i ↦ γ(x@(i+1))` and
/// `tau: x@i ↦ γ(x@(i−1))`.
pub fn build_endos(certs: &CertificateSet) -> (FreeEndomorphism, FreeEndomorphism) {
    let mut gamma = Gamma::new(certs);
    let mut eta = BTreeMap::new();
    let mut tau = BTreeMap::new();
    for g in certs.window().generators() {
        let level = g.level().expect("window generators are leveled");
        let up = gamma
            .letter(&g.at(level + 1))
            .expect("window is closed under certificate folding");
        let down = gamma
            .letter(&g.at(level - 1))
            .expect("window is closed under certificate folding");
        eta.insert(g.clone(), up);
        tau.insert(g, down);
    }
    let eta = FreeEndomorphism::new(eta).expect("images stay inside the window");
    let tau = FreeEndomorphism::new(tau).expect("images stay inside the window");
    (eta, tau)
}

/// Check the identity that makes the derivation sound: on each given window
/// word `w` and for every shift amount `k` in `lo..=hi`,
/// `γ(shiftᵏ(w))` must equal `etaᵏ(w)` for `k ≥ 0` and `tau^(−k)(w)` for
/// `k < 0`.
pub fn gamma_iterate_check(
    certs: &CertificateSet,
    words: &[Word],
    lo: i64,
    hi: i64,
) -> Result<bool, Error> {
    let (eta, tau) = build_endos(certs);
    let mut gamma = Gamma::new(certs);
    for w in words {
        for k in lo..=hi {
            let folded = gamma.word(&shift(w, k)?)?;
            let iterate = {
                let (endo, times) = if k >= 0 { (&eta, k) } else { (&tau, -k) };
                let mut acc = w.clone();
                for _ in 0..times {
                    acc = endo.apply(&acc)?;
                }
                acc
            };
            if folded != iterate {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Inputs recorded alongside a derived L-presentation.
#[derive(Clone, Debug)]
pub struct Provenance {
    /// The presentation the derivation started from.
    pub input: FinitePresentation,
    /// The distinguished generator as requested.
    pub t: Generator,
    /// Whether `t` had degree −1 and was used inverted.
    pub t_inverted: bool,
    /// The rebased presentation (all non-`t` generators of degree zero).
    pub normalized: NormalizedPresentation,
    /// The certificates that closed the window.
    pub certs: CertificateSet,
}

/// An ascending L-presentation produced by [`derive_lpres`], together with
/// the data it was derived from.
#[derive(Clone, Debug)]
pub struct DerivedLPresentation {
    pub lp: LPresentation,
    pub provenance: Provenance,
}

impl DerivedLPresentation {
    /// The `eta` endomorphism (conjugation by `t`, folded into the window).
    pub fn eta(&self) -> &FreeEndomorphism {
        &self.lp.endos()[0].1
    }

    /// The `tau` endomorphism (conjugation by `t⁻¹`).
    pub fn tau(&self) -> &FreeEndomorphism {
        &self.lp.endos()[1].1
    }
}

/// Derive an ascending finite L-presentation for the kernel of the degree
/// map of `p`, distinguished generator `t`.
///
/// The certificates fix the window bound `N`; it must be at least the
/// largest level in the rewritten relators (else [`Error::WindowTooSmall`]
/// reports the minimum), and a caller-requested bound, if any, must agree
/// with the certificates.  The result has the window generators (base-major,
/// in the order the input presentation listed them), the rewritten relators
/// as seeds, no fixed relators, and the endomorphisms `eta` and `tau`.
pub fn derive_lpres(
    p: &FinitePresentation,
    t: &Generator,
    certs: &CertificateSet,
    requested_bound: Option<i64>,
) -> Result<DerivedLPresentation, Error> {
    let (np, t_inverted) = neumann_normalize_inner(p, t)?;

    let mut seeds: Vec<Word> = Vec::new();
    for r in np.relators() {
        let rewritten = rs_rewrite(r, &np)?;
        // Identity relators impose nothing; exact duplicates impose the
        // same thing twice.  Drop both kinds.
        if !rewritten.is_identity() && !seeds.contains(&rewritten) {
            seeds.push(rewritten);
        }
    }
    let needed = window_bound(&seeds);

    let n = certs.window().bound();
    if let Some(req) = requested_bound {
        if req != n {
            return Err(Error::CertMismatch(format!(
                "requested window bound {req} but certificates declare {n}"
            )));
        }
    }
    if n < needed {
        return Err(Error::WindowTooSmall {
            given: n,
            needed,
        });
    }

    // The certificates must talk about exactly the base generators the
    // normalization produced; align their order with the presentation's.
    let mut cert_base = certs.window().base().to_vec();
    cert_base.sort();
    let mut np_base = np.base().to_vec();
    np_base.sort();
    if cert_base != np_base {
        return Err(Error::CertMismatch(format!(
            "certificates cover [{}] but the rebased presentation has [{}]",
            cert_base
                .iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>()
                .join(" "),
            np_base
                .iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        )));
    }
    let certs = certs.reordered(np.base().to_vec())?;

    let (eta, tau) = build_endos(&certs);
    let lp = LPresentation::new(
        certs.window().generators(),
        Vec::new(),
        seeds,
        vec![("eta".into(), eta), ("tau".into(), tau)],
    )?;
    Ok(DerivedLPresentation {
        lp,
        provenance: Provenance {
            input: p.clone(),
            t: t.clone(),
            t_inverted,
            normalized: np,
            certs,
        },
    })
}
