//! Words in a free group, kept eagerly reduced, plus free-group
//! endomorphisms and enumeration of finitely generated endomorphism monoids.
//!
//! A [`Generator`] is a name with an optional integer *level* (written
//! `a@3` in the text formats).  Levels carry the window index of rewritten
//! generators in the kernel construction; plain generators have no level.
//! A [`Word`] is a freely reduced sequence of signed generators.  All
//! constructors reduce, so adjacent inverse pairs never survive, and
//! structural equality of [`Word`]s is equality in the free group.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;

/// Is `name` acceptable as a generator name: nonempty, a letter first,
/// letters/digits/underscores after (the identifier grammar of the text
/// formats, minus the optional `@level` suffix which is carried separately).
pub fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A free-group generator: a name plus an optional level index.
///
/// `Generator::plain("a")` and `Generator::indexed("a", 3)` are distinct
/// generators; the latter prints as `a@3`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    name: String,
    level: Option<i64>,
}

impl Generator {
    /// A level-free generator.
    ///
    /// # Panics
    /// If `name` is not a valid identifier.
    pub fn plain(name: impl Into<String>) -> Self {
        let name = name.into();
        assert!(is_valid_name(&name), "invalid generator name {name:?}");
        Generator { name, level: None }
    }

    /// A generator carrying a level index.
    ///
    /// # Panics
    /// If `name` is not a valid identifier.
    pub fn indexed(name: impl Into<String>, level: i64) -> Self {
        let name = name.into();
        assert!(is_valid_name(&name), "invalid generator name {name:?}");
        Generator {
            name,
            level: Some(level),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn level(&self) -> Option<i64> {
        self.level
    }

    /// The level-free generator with the same name.
    pub fn base(&self) -> Generator {
        Generator {
            name: self.name.clone(),
            level: None,
        }
    }

    /// The same name at the given level.
    pub fn at(&self, level: i64) -> Generator {
        Generator {
            name: self.name.clone(),
            level: Some(level),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.level {
            None => write!(f, "{}", self.name),
            Some(l) => write!(f, "{}@{}", self.name, l),
        }
    }
}

/// Sign of a letter: the generator itself or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// `+1` or `-1`.
    pub fn unit(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// A signed generator: one letter of a word.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub gen: Generator,
    pub sign: Sign,
}

impl Letter {
    pub fn new(gen: Generator, sign: Sign) -> Self {
        Letter { gen, sign }
    }

    pub fn inverse(&self) -> Letter {
        Letter {
            gen: self.gen.clone(),
            sign: self.sign.flip(),
        }
    }

    /// Do the two letters cancel when adjacent?
    fn cancels(&self, other: &Letter) -> bool {
        self.gen == other.gen && self.sign != other.sign
    }
}

/// A freely reduced word.  The empty word is the identity.
///
/// Reduction is an invariant, not an operation: every way of building a
/// `Word` reduces eagerly, so two `Word`s are equal as values exactly when
/// they are equal in the free group.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    /// The identity word.
    pub fn identity() -> Word {
        Word::default()
    }

    /// A single positive letter.
    pub fn generator(g: Generator) -> Word {
        Word {
            letters: vec![Letter::new(g, Sign::Plus)],
        }
    }

    /// Build a word from raw letters, cancelling adjacent inverse pairs.
    ///
    /// One left-to-right pass over a stack suffices: a new letter either
    /// cancels the current top or becomes the new top, and cancellation can
    /// only expose a top that was already reduced against its own left
    /// neighbour.
    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Word {
        let mut stack: Vec<Letter> = Vec::new();
        for l in letters {
            if stack.last().is_some_and(|top| top.cancels(&l)) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        Word { letters: stack }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Reduced length.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The inverse word: letters reversed and flipped.  No reduction pass is
    /// needed — the reverse of a reduced word is reduced.
    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(Letter::inverse).collect(),
        }
    }

    /// Group multiplication `self · rhs`, reducing across the seam.
    pub fn multiply(&self, rhs: &Word) -> Word {
        // Only the seam can cancel; both sides are already reduced.
        let mut out = self.letters.clone();
        for l in &rhs.letters {
            if out.last().is_some_and(|top| top.cancels(l)) {
                out.pop();
            } else {
                out.push(l.clone());
            }
        }
        Word { letters: out }
    }

    /// `self^n`, with `w^0 = 1` and negative powers via the inverse.
    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.multiply(&base);
        }
        out
    }

    /// Conjugate `by⁻¹ · self · by`.
    pub fn conjugate(&self, by: &Word) -> Word {
        by.inverse().multiply(self).multiply(by)
    }

    /// Exponent sum of `g`: occurrences of `g` counted with sign.  This is
    /// the image of the word in the free abelianization, one coordinate at
    /// a time.
    pub fn exp_sum(&self, g: &Generator) -> i64 {
        self.letters
            .iter()
            .filter(|l| &l.gen == g)
            .map(|l| l.sign.unit())
            .sum()
    }

    /// Strip matching inverse letters from both ends until the first and
    /// last letters no longer cancel.  The result is conjugate to `self`.
    pub fn cyclic_reduce(&self) -> Word {
        let mut lo = 0;
        let mut hi = self.letters.len();
        while hi - lo >= 2 && self.letters[lo].cancels(&self.letters[hi - 1]) {
            lo += 1;
            hi -= 1;
        }
        Word {
            letters: self.letters[lo..hi].to_vec(),
        }
    }

    /// Iterate over the distinct generators occurring in the word.
    pub fn support(&self) -> impl Iterator<Item = &Generator> {
        let mut seen = Vec::new();
        self.letters.iter().filter_map(move |l| {
            if seen.contains(&&l.gen) {
                None
            } else {
                seen.push(&l.gen);
                Some(&l.gen)
            }
        })
    }

    /// Largest absolute level among indexed letters; 0 if none occur.
    pub fn max_abs_level(&self) -> i64 {
        self.letters
            .iter()
            .filter_map(|l| l.gen.level())
            .map(i64::abs)
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for Word {
    /// Debug-friendly rendering; the canonical text form lives in
    /// [`crate::presfmt::print_word`] and agrees with this one.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::presfmt::print_word(self))
    }
}

/// A free-group endomorphism, given by images of a finite alphabet.
///
/// The alphabet is the key set of the image map; images must only use
/// generators from that same alphabet, so endomorphisms compose.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeEndomorphism {
    images: BTreeMap<Generator, Word>,
}

impl FreeEndomorphism {
    /// The identity on the given alphabet.
    pub fn identity(alphabet: impl IntoIterator<Item = Generator>) -> Self {
        let images = alphabet
            .into_iter()
            .map(|g| (g.clone(), Word::generator(g)))
            .collect();
        FreeEndomorphism { images }
    }

    /// Build from an image map, checking that images stay inside the
    /// alphabet spanned by the keys.
    pub fn new(images: BTreeMap<Generator, Word>) -> Result<Self, Error> {
        for w in images.values() {
            for g in w.support() {
                if !images.contains_key(g) {
                    return Err(Error::UnknownGenerator(g.to_string()));
                }
            }
        }
        Ok(FreeEndomorphism { images })
    }

    pub fn alphabet(&self) -> impl Iterator<Item = &Generator> {
        self.images.keys()
    }

    pub fn images(&self) -> &BTreeMap<Generator, Word> {
        &self.images
    }

    pub fn image(&self, g: &Generator) -> Option<&Word> {
        self.images.get(g)
    }

    fn same_alphabet(&self, other: &FreeEndomorphism) -> bool {
        self.images.len() == other.images.len()
            && self.images.keys().zip(other.images.keys()).all(|(a, b)| a == b)
    }

    /// Apply to a word: substitute every letter by its image (inverted for
    /// negative letters) and reduce.
    pub fn apply(&self, w: &Word) -> Result<Word, Error> {
        let mut out = Word::identity();
        for l in w.letters() {
            let img = self
                .image(&l.gen)
                .ok_or_else(|| Error::MissingImage(l.gen.to_string()))?;
            out = match l.sign {
                Sign::Plus => out.multiply(img),
                Sign::Minus => out.multiply(&img.inverse()),
            };
        }
        Ok(out)
    }

    /// Composition `self ∘ rhs`: first `rhs`, then `self`.  Both must act on
    /// the same alphabet.
    pub fn compose(&self, rhs: &FreeEndomorphism) -> Result<FreeEndomorphism, Error> {
        if !self.same_alphabet(rhs) {
            return Err(Error::AlphabetMismatch(format!(
                "[{}] vs [{}]",
                join_gens(self.alphabet()),
                join_gens(rhs.alphabet())
            )));
        }
        let mut images = BTreeMap::new();
        for (g, img) in &rhs.images {
            images.insert(g.clone(), self.apply(img)?);
        }
        Ok(FreeEndomorphism { images })
    }

    /// Does this endomorphism fix every generator?
    pub fn is_identity(&self) -> bool {
        self.images.iter().all(|(g, w)| {
            w.letters().len() == 1
                && w.letters()[0].gen == *g
                && w.letters()[0].sign == Sign::Plus
        })
    }
}

fn join_gens<'a>(gens: impl Iterator<Item = &'a Generator>) -> String {
    gens.map(|g| g.to_string()).collect::<Vec<_>>().join(" ")
}

/// All distinct endomorphisms expressible as compositions of at most
/// `depth` factors from `phi`, including the identity (the empty
/// composition).  Distinctness is extensional: two compositions count once
/// if they agree on every generator.
///
/// Elements come out in first-discovery order of a breadth-first sweep, so
/// the identity is first and composition depth never decreases along the
/// result.
pub fn enumerate_monoid(phi: &[FreeEndomorphism], depth: usize) -> Result<Vec<FreeEndomorphism>, Error> {
    let alphabet: Vec<Generator> = match phi.first() {
        Some(f) => f.alphabet().cloned().collect(),
        None => Vec::new(),
    };
    let levels = enumerate_monoid_levels(&alphabet, phi, depth)?;
    Ok(levels.into_iter().flatten().collect())
}

/// Breadth-first monoid enumeration, grouped by the smallest number of
/// factors realizing each element.  `levels[d]` holds the elements first
/// reached at composition depth `d`; `levels[0]` is the identity on
/// `alphabet`.
pub(crate) fn enumerate_monoid_levels(
    alphabet: &[Generator],
    phi: &[FreeEndomorphism],
    depth: usize,
) -> Result<Vec<Vec<FreeEndomorphism>>, Error> {
    let ident = FreeEndomorphism::identity(alphabet.iter().cloned());
    for f in phi {
        if !f.same_alphabet(&ident) {
            return Err(Error::AlphabetMismatch(format!(
                "[{}] vs [{}]",
                join_gens(f.alphabet()),
                join_gens(ident.alphabet())
            )));
        }
    }

    let mut seen: Vec<FreeEndomorphism> = vec![ident.clone()];
    let mut levels: Vec<Vec<FreeEndomorphism>> = vec![vec![ident]];
    for d in 1..=depth {
        let mut fresh: Vec<FreeEndomorphism> = Vec::new();
        for prev in &levels[d - 1] {
            for f in phi {
                // Extend on the left so the newest factor is applied last:
                // an element of depth d is f ∘ (element of depth d-1).
                let next = f.compose(prev)?;
                if !seen.contains(&next) && !fresh.contains(&next) {
                    fresh.push(next);
                }
            }
        }
        if fresh.is_empty() {
            // The monoid is exhausted; deeper sweeps cannot add anything.
            break;
        }
        seen.extend(fresh.iter().cloned());
        levels.push(fresh);
    }
    Ok(levels)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(name: &str) -> Generator {
        Generator::plain(name)
    }

    fn w(letters: &[(&str, i64)]) -> Word {
        // Each pair (name, e) contributes |e| copies of the signed letter.
        let mut ls = Vec::new();
        for &(name, e) in letters {
            let sign = if e < 0 { Sign::Minus } else { Sign::Plus };
            for _ in 0..e.unsigned_abs() {
                ls.push(Letter::new(g(name), sign));
            }
        }
        Word::from_letters(ls)
    }

    #[test]
    fn reduction_cancels_inverse_pairs() {
        // a a⁻¹ a reduces to a.
        let word = Word::from_letters(vec![
            Letter::new(g("a"), Sign::Plus),
            Letter::new(g("a"), Sign::Minus),
            Letter::new(g("a"), Sign::Plus),
        ]);
        assert_eq!(word, Word::generator(g("a")));
        assert_eq!(word.len(), 1);
    }

    #[test]
    fn reduction_collapses_nested_pairs() {
        // a b b⁻¹ a⁻¹ reduces to the identity.
        let word = Word::from_letters(vec![
            Letter::new(g("a"), Sign::Plus),
            Letter::new(g("b"), Sign::Plus),
            Letter::new(g("b"), Sign::Minus),
            Letter::new(g("a"), Sign::Minus),
        ]);
        assert!(word.is_identity());
    }

    #[test]
    fn multiply_reduces_across_seam() {
        let ab = w(&[("a", 1), ("b", 1)]);
        let b_inv_c = w(&[("b", -1), ("c", 1)]);
        assert_eq!(ab.multiply(&b_inv_c), w(&[("a", 1), ("c", 1)]));
        // Identity on either side is neutral.
        assert_eq!(ab.multiply(&Word::identity()), ab);
        assert_eq!(Word::identity().multiply(&ab), ab);
    }

    #[test]
    fn inverse_is_an_involution_and_kills() {
        let word = w(&[("a", 2), ("b", -1), ("c", 3)]);
        assert_eq!(word.inverse().inverse(), word);
        assert!(word.multiply(&word.inverse()).is_identity());
        assert!(word.inverse().multiply(&word).is_identity());
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let ab = w(&[("a", 1), ("b", 1)]);
        assert_eq!(ab.pow(0), Word::identity());
        assert_eq!(ab.pow(3), ab.multiply(&ab).multiply(&ab));
        assert_eq!(ab.pow(-2), ab.inverse().multiply(&ab.inverse()));
    }

    #[test]
    fn exp_sum_counts_signed_occurrences() {
        let word = w(&[("a", 2), ("b", -1), ("a", -3)]);
        assert_eq!(word.exp_sum(&g("a")), -1);
        assert_eq!(word.exp_sum(&g("b")), -1);
        assert_eq!(word.exp_sum(&g("c")), 0);
    }

    #[test]
    fn cyclic_reduce_strips_conjugating_shell() {
        // b⁻¹ a b  →  a; and a word already cyclically reduced is untouched.
        let aw = Word::generator(g("a"));
        let conj = aw.conjugate(&Word::generator(g("b")));
        assert_eq!(conj.cyclic_reduce(), aw);
        let com = w(&[("a", 1)]).multiply(&w(&[("b", 1), ("a", -1), ("b", -1)]));
        assert_eq!(com.cyclic_reduce(), com);
    }

    #[test]
    fn indexed_generators_are_distinct_letters() {
        let a0 = Generator::indexed("a", 0);
        let a1 = Generator::indexed("a", 1);
        assert_ne!(a0, a1);
        assert_ne!(a0, g("a"));
        let word = Word::generator(a0.clone()).multiply(&Word::generator(a1).inverse());
        assert_eq!(word.len(), 2);
        assert_eq!(word.max_abs_level(), 1);
        assert_eq!(a0.base(), g("a"));
        assert_eq!(g("a").at(-3), Generator::indexed("a", -3));
    }

    #[test]
    #[should_panic(expected = "invalid generator name")]
    fn generator_names_are_validated() {
        let _ = Generator::plain("2bad");
    }

    fn doubling_endo() -> FreeEndomorphism {
        // a ↦ a², b ↦ b on the alphabet {a, b}.
        let mut images = BTreeMap::new();
        images.insert(g("a"), w(&[("a", 2)]));
        images.insert(g("b"), Word::generator(g("b")));
        FreeEndomorphism::new(images).unwrap()
    }

    #[test]
    fn apply_substitutes_and_reduces() {
        let e = doubling_endo();
        // a b a⁻¹ ↦ a² b a⁻².
        let word = w(&[("a", 1), ("b", 1), ("a", -1)]);
        assert_eq!(e.apply(&word).unwrap(), w(&[("a", 2), ("b", 1), ("a", -2)]));
        // Applying to the identity gives the identity.
        assert!(e.apply(&Word::identity()).unwrap().is_identity());
    }

    #[test]
    fn compose_agrees_with_sequential_application() {
        let e = doubling_endo();
        let ee = e.compose(&e).unwrap();
        // a ↦ a⁴ under the square.
        assert_eq!(ee.image(&g("a")).unwrap(), &w(&[("a", 4)]));
        let word = w(&[("a", 1), ("b", -1), ("a", 1)]);
        assert_eq!(
            ee.apply(&word).unwrap(),
            e.apply(&e.apply(&word).unwrap()).unwrap()
        );
    }

    #[test]
    fn compose_rejects_alphabet_mismatch() {
        let e = doubling_endo();
        let other = FreeEndomorphism::identity(vec![g("x")]);
        assert!(matches!(e.compose(&other), Err(Error::AlphabetMismatch(_))));
    }

    #[test]
    fn endo_images_must_stay_inside_alphabet() {
        let mut images = BTreeMap::new();
        images.insert(g("a"), Word::generator(g("z")));
        assert!(matches!(
            FreeEndomorphism::new(images),
            Err(Error::UnknownGenerator(_))
        ));
    }

    #[test]
    fn enumerate_monoid_of_empty_family_is_identity() {
        let out = enumerate_monoid(&[], 5).unwrap();
        assert_eq!(out.len(), 1);
        assert!(out[0].is_identity());
    }

    #[test]
    fn enumerate_monoid_detects_idempotents() {
        // e: a ↦ a, b ↦ a is idempotent, so the monoid {1, e} is exhausted
        // at depth 1 no matter how deep we sweep.
        let mut images = BTreeMap::new();
        images.insert(g("a"), Word::generator(g("a")));
        images.insert(g("b"), Word::generator(g("a")));
        let e = FreeEndomorphism::new(images).unwrap();
        let out = enumerate_monoid(&[e.clone()], 4).unwrap();
        assert_eq!(out.len(), 2);
        assert!(out[0].is_identity());
        assert_eq!(out[1], e);
    }

    #[test]
    fn enumerate_monoid_counts_free_compositions() {
        // a ↦ a² generates a free cyclic monoid: depth d adds exactly one
        // new endomorphism a ↦ a^(2^d).
        let e = doubling_endo();
        let out = enumerate_monoid(&[e], 3).unwrap();
        assert_eq!(out.len(), 4);
        assert_eq!(out[3].image(&g("a")).unwrap(), &w(&[("a", 8)]));
    }
}
