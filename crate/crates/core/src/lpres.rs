//! Finite presentations and finite L-presentations.
//!
//! An L-presentation `⟨X | Q | R | Φ⟩` presents the quotient of the free
//! group on `X` by the normal closure of `Q ∪ { φ(r) : φ in the monoid
//! generated by Φ, r ∈ R }`.  [`expand`] truncates that set at a composition
//! depth, turning the L-presentation into an ordinary [`FinitePresentation`]
//! that approximates the group from above.  [`hnn_embed`] realizes an
//! *ascending* L-presentation (empty `Q`) inside a finitely presented
//! overgroup with one stable letter per endomorphism.

use std::collections::{BTreeMap, HashSet};

use crate::error::Error;
use crate::freegroup::{enumerate_monoid_levels, FreeEndomorphism, Generator, Letter, Sign, Word};

/// A finite presentation `⟨generators | relators⟩`, optionally equipped
/// with a degree map onto the integers.
///
/// When the degree map is present it must cover every generator and every
/// relator must have total degree zero, so that the map induces a
/// homomorphism from the presented group onto (a subgroup of) the integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePresentation {
    generators: Vec<Generator>,
    relators: Vec<Word>,
    degree: Option<BTreeMap<Generator, i64>>,
}

impl FinitePresentation {
    pub fn new(
        generators: Vec<Generator>,
        relators: Vec<Word>,
        degree: Option<BTreeMap<Generator, i64>>,
    ) -> Result<Self, Error> {
        check_distinct(&generators)?;
        for r in &relators {
            check_supported(r, &generators)?;
        }
        if let Some(deg) = &degree {
            for g in deg.keys() {
                if !generators.contains(g) {
                    return Err(Error::DegreeForUnknownGenerator(g.to_string()));
                }
            }
            for g in &generators {
                if !deg.contains_key(g) {
                    return Err(Error::DegreeMissingFor(g.to_string()));
                }
            }
            for r in &relators {
                let total: i64 = r
                    .letters()
                    .iter()
                    .map(|l| l.sign.unit() * deg[&l.gen])
                    .sum();
                if total != 0 {
                    return Err(Error::RelatorDegreeNonzero {
                        relator: crate::presfmt::print_word(r),
                        degree: total,
                    });
                }
            }
        }
        Ok(FinitePresentation {
            generators,
            relators,
            degree,
        })
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn degree(&self) -> Option<&BTreeMap<Generator, i64>> {
        self.degree.as_ref()
    }

    /// Degree of a word under the degree map, if one is present.
    pub fn word_degree(&self, w: &Word) -> Option<i64> {
        let deg = self.degree.as_ref()?;
        Some(
            w.letters()
                .iter()
                .map(|l| l.sign.unit() * deg.get(&l.gen).copied().unwrap_or(0))
                .sum(),
        )
    }
}

/// A finite L-presentation `⟨X | Q | R | Φ⟩`.
///
/// `fixed` is `Q` (relators imposed once), `seeds` is `R` (relators whose
/// whole endomorphism orbit is imposed), and `endos` is `Φ` with the names
/// the text format gave them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LPresentation {
    generators: Vec<Generator>,
    fixed: Vec<Word>,
    seeds: Vec<Word>,
    endos: Vec<(String, FreeEndomorphism)>,
}

impl LPresentation {
    pub fn new(
        generators: Vec<Generator>,
        fixed: Vec<Word>,
        seeds: Vec<Word>,
        endos: Vec<(String, FreeEndomorphism)>,
    ) -> Result<Self, Error> {
        check_distinct(&generators)?;
        for w in fixed.iter().chain(seeds.iter()) {
            check_supported(w, &generators)?;
        }
        let mut names: Vec<&str> = Vec::new();
        for (name, endo) in &endos {
            if names.contains(&name.as_str()) {
                return Err(Error::DuplicateEndo(name.clone()));
            }
            names.push(name);
            for g in &generators {
                let img = endo.image(g).ok_or_else(|| Error::EndoNotTotal {
                    endo: name.clone(),
                    generator: g.to_string(),
                })?;
                check_supported(img, &generators)?;
            }
            // No images for letters outside the declared alphabet either.
            for g in endo.alphabet() {
                if !generators.contains(g) {
                    return Err(Error::UnknownGenerator(g.to_string()));
                }
            }
        }
        Ok(LPresentation {
            generators,
            fixed,
            seeds,
            endos,
        })
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn fixed(&self) -> &[Word] {
        &self.fixed
    }

    pub fn seeds(&self) -> &[Word] {
        &self.seeds
    }

    pub fn endos(&self) -> &[(String, FreeEndomorphism)] {
        &self.endos
    }

    /// Ascending means no fixed relators, so each endomorphism descends to
    /// an endomorphism of the presented group.
    pub fn is_ascending(&self) -> bool {
        self.fixed.is_empty()
    }

    /// Structural classification of the presentation data.
    pub fn classify(&self) -> Classification {
        Classification {
            ascending: self.is_ascending(),
            invariant: self.is_ascending(),
            generator_count: self.generators.len(),
            fixed_count: self.fixed.len(),
            seed_count: self.seeds.len(),
            endo_count: self.endos.len(),
        }
    }
}

/// What kind of L-presentation we are looking at; see
/// [`LPresentation::classify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    /// No fixed relators.
    pub ascending: bool,
    /// The endomorphisms descend to the presented group.  True for
    /// ascending presentations; detecting invariance of a non-trivial fixed
    /// part is undecidable in general, so non-ascending data is reported as
    /// not (known to be) invariant.
    pub invariant: bool,
    pub generator_count: usize,
    pub fixed_count: usize,
    pub seed_count: usize,
    pub endo_count: usize,
}

/// How [`expand`] discards duplicate relators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DedupMode {
    /// Keep one copy of each word (free-group equality).
    #[default]
    Exact,
    /// Also identify words that are cyclic rotations of each other or of
    /// each other's inverses — relators that generate the same normal
    /// closure contribution.
    Cyclic,
}

/// Per-stage production counts of an expansion: how many words a stage
/// produced and how many survived deduplication.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub produced: usize,
    pub kept: usize,
}

/// Result of truncating an L-presentation at a composition depth.
#[derive(Clone, Debug)]
pub struct ExpansionReport {
    /// The truncation depth that was requested.
    pub depth: usize,
    /// Deduplication mode used.
    pub dedup: DedupMode,
    /// Surviving relators with the composition depth that first produced
    /// them (`0` covers both fixed relators and the seeds themselves).
    pub entries: Vec<(usize, Word)>,
    /// Counts for the fixed relators.
    pub fixed_tally: Tally,
    /// `depth_tallies[d]` counts seed images at composition depth `d`.
    pub depth_tallies: Vec<Tally>,
}

impl ExpansionReport {
    /// Relators in report order.
    pub fn relators(&self) -> impl Iterator<Item = &Word> {
        self.entries.iter().map(|(_, w)| w)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total number of words produced before any deduplication.
    pub fn produced(&self) -> usize {
        self.fixed_tally.produced + self.depth_tallies.iter().map(|t| t.produced).sum::<usize>()
    }

    /// The expanded presentation over the same generators.
    pub fn presentation(&self, lp: &LPresentation) -> FinitePresentation {
        FinitePresentation::new(
            lp.generators().to_vec(),
            self.relators().cloned().collect(),
            None,
        )
        .expect("expansion relators are over the presentation's own alphabet")
    }
}

/// Key under which a word is deduplicated.
fn dedup_key(w: &Word, mode: DedupMode) -> Word {
    match mode {
        DedupMode::Exact => w.clone(),
        DedupMode::Cyclic => cyclic_key(w),
    }
}

/// Canonical representative of the cyclic-conjugacy-and-inversion class of
/// `w`: the lexicographically least rotation of the cyclically reduced word,
/// minimized over the word and its inverse.
fn cyclic_key(w: &Word) -> Word {
    let core = w.cyclic_reduce();
    if core.is_identity() {
        return core;
    }
    let mut best: Option<Vec<Letter>> = None;
    for cand in [core.clone(), core.inverse()] {
        let letters = cand.letters();
        let n = letters.len();
        for start in 0..n {
            let mut rot: Vec<Letter> = Vec::with_capacity(n);
            rot.extend_from_slice(&letters[start..]);
            rot.extend_from_slice(&letters[..start]);
            // Rotations of a cyclically reduced word stay reduced, so the
            // letter vector itself is a valid word.
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    Word::from_letters(best.unwrap_or_default())
}

/// Truncated expansion: all fixed relators plus every image `φ(r)` of a
/// seed under a composition of at most `depth` endomorphisms.
///
/// Images that reduce to the identity are dropped (they impose nothing),
/// and duplicates are removed according to `mode`; both removals are
/// recorded in the tallies.  Output order is deterministic: fixed relators
/// first, then depth by depth, within a depth seed by seed, and within a
/// seed ordered by canonical print of the image.
pub fn expand(lp: &LPresentation, depth: usize, mode: DedupMode) -> ExpansionReport {
    let endos: Vec<FreeEndomorphism> = lp.endos().iter().map(|(_, e)| e.clone()).collect();
    let levels = enumerate_monoid_levels(lp.generators(), &endos, depth)
        .expect("L-presentation endomorphisms share the presentation alphabet");

    let mut seen: HashSet<Word> = HashSet::new();
    let mut entries: Vec<(usize, Word)> = Vec::new();
    let mut fixed_tally = Tally::default();

    for q in lp.fixed() {
        fixed_tally.produced += 1;
        if q.is_identity() {
            continue;
        }
        if seen.insert(dedup_key(q, mode)) {
            fixed_tally.kept += 1;
            entries.push((0, q.clone()));
        }
    }

    let mut depth_tallies: Vec<Tally> = Vec::new();
    for (d, level) in levels.iter().enumerate() {
        let mut tally = Tally::default();
        for seed in lp.seeds() {
            let mut batch: Vec<Word> = Vec::new();
            for phi in level {
                tally.produced += 1;
                let img = phi
                    .apply(seed)
                    .expect("endomorphism is total on the presentation alphabet");
                if !img.is_identity() {
                    batch.push(img);
                }
            }
            batch.sort_by_key(crate::presfmt::print_word);
            for img in batch {
                if seen.insert(dedup_key(&img, mode)) {
                    tally.kept += 1;
                    entries.push((d, img));
                }
            }
        }
        depth_tallies.push(tally);
    }
    // The monoid sweep stops early once exhausted; pad so callers can index
    // tallies by depth (later depths produce nothing new by definition).
    while depth_tallies.len() < depth + 1 {
        depth_tallies.push(Tally::default());
    }

    ExpansionReport {
        depth,
        dedup: mode,
        entries,
        fixed_tally,
        depth_tallies,
    }
}

/// Substitute generators by their images under a (total enough) map and
/// reduce.  Errors if some letter of `w` has no image.
pub fn substitute(w: &Word, images: &BTreeMap<Generator, Word>) -> Result<Word, Error> {
    let mut out = Word::identity();
    for l in w.letters() {
        let img = images
            .get(&l.gen)
            .ok_or_else(|| Error::MissingImage(l.gen.to_string()))?;
        out = match l.sign {
            Sign::Plus => out.multiply(img),
            Sign::Minus => out.multiply(&img.inverse()),
        };
    }
    Ok(out)
}

/// Does `generator ↦ images[generator]` define a homomorphism out of the
/// presented group?  By von Dyck's theorem it does exactly when every
/// relator's image evaluates to the identity in the target, which is what
/// the supplied `eval` closure decides.
///
/// `eval` is handed the substituted relator word (over the *target*'s
/// alphabet) and must return whether it is the identity in the target
/// group.
pub fn check_dyck_hom<F>(
    p: &FinitePresentation,
    images: &BTreeMap<Generator, Word>,
    mut eval: F,
) -> Result<bool, Error>
where
    F: FnMut(&Word) -> Result<bool, Error>,
{
    for g in p.generators() {
        if !images.contains_key(g) {
            return Err(Error::MissingImage(g.to_string()));
        }
    }
    for r in p.relators() {
        let image = substitute(r, images)?;
        if !eval(&image)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Embed an ascending L-presentation into a finitely presented overgroup.
///
/// Each endomorphism `φ` gets a fresh stable letter `t_φ` acting by
/// conjugation: the output presents `⟨X ∪ {t_φ} | R, t_φ⁻¹ x t_φ = φ(x)⟩`.
/// For an ascending presentation the subgroup generated by the image of `X`
/// is exactly the L-presented group, conjugation by `t_φ` realizing `φ`.
pub fn hnn_embed(lp: &LPresentation) -> Result<FinitePresentation, Error> {
    if !lp.is_ascending() {
        return Err(Error::NotAscending(lp.fixed().len()));
    }
    let mut generators = lp.generators().to_vec();
    let mut stable: Vec<Generator> = Vec::new();
    for (name, _) in lp.endos() {
        let t = Generator::plain(format!("t_{name}"));
        if generators.contains(&t) {
            return Err(Error::StableLetterClash(t.to_string()));
        }
        generators.push(t.clone());
        stable.push(t);
    }
    let mut relators: Vec<Word> = lp.seeds().to_vec();
    for ((_, endo), t) in lp.endos().iter().zip(&stable) {
        let tw = Word::generator(t.clone());
        for x in lp.generators() {
            let image = endo
                .image(x)
                .expect("L-presentation endomorphisms are total");
            // t⁻¹ x t φ(x)⁻¹: conjugation by the stable letter realizes φ.
            let relator = tw
                .inverse()
                .multiply(&Word::generator(x.clone()))
                .multiply(&tw)
                .multiply(&image.inverse());
            relators.push(relator);
        }
    }
    FinitePresentation::new(generators, relators, None)
}

fn check_distinct(generators: &[Generator]) -> Result<(), Error> {
    for (i, g) in generators.iter().enumerate() {
        if generators[..i].contains(g) {
            return Err(Error::DuplicateGenerator(g.to_string()));
        }
    }
    Ok(())
}

fn check_supported(w: &Word, generators: &[Generator]) -> Result<(), Error> {
    for g in w.support() {
        if !generators.contains(g) {
            return Err(Error::UnknownGenerator(g.to_string()));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presfmt::{parse_lpres, parse_word, print_word};

    fn gens(names: &[&str]) -> Vec<Generator> {
        names.iter().map(|n| Generator::plain(*n)).collect()
    }

    fn word(text: &str, alphabet: &[Generator]) -> Word {
        parse_word(text, alphabet).unwrap()
    }

    /// ⟨a, b | — | a⁻¹b | b ↦ b²⟩-style toy used in several tests:
    /// seed a⁻¹·b, endomorphism d: a ↦ a, b ↦ b².
    fn toy_lp() -> LPresentation {
        let alphabet = gens(&["a", "b"]);
        let mut images = BTreeMap::new();
        images.insert(Generator::plain("a"), Word::generator(Generator::plain("a")));
        images.insert(Generator::plain("b"), word("b^2", &alphabet));
        let d = FreeEndomorphism::new(images).unwrap();
        LPresentation::new(
            alphabet.clone(),
            vec![],
            vec![word("a^-1*b", &alphabet)],
            vec![("d".into(), d)],
        )
        .unwrap()
    }

    #[test]
    fn presentation_rejects_duplicate_generators() {
        let err = FinitePresentation::new(gens(&["a", "a"]), vec![], None);
        assert!(matches!(err, Err(Error::DuplicateGenerator(_))));
    }

    #[test]
    fn presentation_rejects_foreign_relators() {
        let err = FinitePresentation::new(
            gens(&["a"]),
            vec![Word::generator(Generator::plain("b"))],
            None,
        );
        assert!(matches!(err, Err(Error::UnknownGenerator(_))));
    }

    #[test]
    fn degree_map_must_be_total_and_kill_relators() {
        let alphabet = gens(&["a", "t"]);
        let mut deg = BTreeMap::new();
        deg.insert(Generator::plain("a"), 0);
        let err = FinitePresentation::new(alphabet.clone(), vec![], Some(deg.clone()));
        assert!(matches!(err, Err(Error::DegreeMissingFor(_))));

        deg.insert(Generator::plain("t"), 1);
        let bad_relator = word("a*t", &alphabet);
        let err = FinitePresentation::new(alphabet.clone(), vec![bad_relator], Some(deg.clone()));
        assert!(matches!(err, Err(Error::RelatorDegreeNonzero { degree: 1, .. })));

        let ok_relator = word("a^-1*t^-1*a*t", &alphabet);
        let p = FinitePresentation::new(alphabet, vec![ok_relator.clone()], Some(deg)).unwrap();
        assert_eq!(p.word_degree(&ok_relator), Some(0));
        assert_eq!(p.word_degree(&Word::generator(Generator::plain("t"))), Some(1));
    }

    #[test]
    fn lpres_requires_total_endomorphisms() {
        let alphabet = gens(&["a", "b"]);
        let mut images = BTreeMap::new();
        images.insert(Generator::plain("a"), Word::generator(Generator::plain("a")));
        let partial = FreeEndomorphism::new(images).unwrap();
        let err = LPresentation::new(alphabet, vec![], vec![], vec![("p".into(), partial)]);
        assert!(matches!(err, Err(Error::EndoNotTotal { .. })));
    }

    #[test]
    fn classification_flags_ascending() {
        let lp = toy_lp();
        let c = lp.classify();
        assert!(c.ascending && c.invariant);
        assert_eq!((c.generator_count, c.seed_count, c.endo_count), (2, 1, 1));

        let alphabet = gens(&["a", "b"]);
        let with_fixed = LPresentation::new(
            alphabet.clone(),
            vec![word("a^2", &alphabet)],
            lp.seeds().to_vec(),
            lp.endos().to_vec(),
        )
        .unwrap();
        assert!(!with_fixed.classify().ascending);
    }

    #[test]
    fn expand_depth_zero_is_fixed_plus_seeds() {
        let lp = toy_lp();
        let report = expand(&lp, 0, DedupMode::Exact);
        assert_eq!(report.len(), 1);
        assert_eq!(print_word(&report.entries[0].1), "a^-1*b");
        assert_eq!(report.produced(), 1);
    }

    #[test]
    fn expand_grows_one_image_per_depth_here() {
        let lp = toy_lp();
        let report = expand(&lp, 3, DedupMode::Exact);
        // Depth d image is a⁻¹·b^(2^d); all distinct.
        let prints: Vec<String> = report.relators().map(print_word).collect();
        assert_eq!(prints, ["a^-1*b", "a^-1*b^2", "a^-1*b^4", "a^-1*b^8"]);
        assert_eq!(report.depth_tallies.len(), 4);
        for t in &report.depth_tallies {
            assert_eq!((t.produced, t.kept), (1, 1));
        }
    }

    #[test]
    fn expand_without_seeds_returns_fixed_only() {
        let alphabet = gens(&["a"]);
        let lp = LPresentation::new(
            alphabet.clone(),
            vec![word("a^2", &alphabet)],
            vec![],
            vec![],
        )
        .unwrap();
        let report = expand(&lp, 7, DedupMode::Exact);
        assert_eq!(report.len(), 1);
        assert_eq!(report.produced(), 1);
    }

    #[test]
    fn expand_drops_identity_images() {
        // Seed [a, b] dies under the endomorphism collapsing b onto a.
        let alphabet = gens(&["a", "b"]);
        let mut images = BTreeMap::new();
        images.insert(Generator::plain("a"), Word::generator(Generator::plain("a")));
        images.insert(Generator::plain("b"), Word::generator(Generator::plain("a")));
        let collapse = FreeEndomorphism::new(images).unwrap();
        let lp = LPresentation::new(
            alphabet.clone(),
            vec![],
            vec![word("[a,b]", &alphabet)],
            vec![("c".into(), collapse)],
        )
        .unwrap();
        let report = expand(&lp, 2, DedupMode::Exact);
        assert_eq!(report.len(), 1, "only the seed itself survives");
        assert_eq!(report.depth_tallies[1].produced, 1);
        assert_eq!(report.depth_tallies[1].kept, 0);
    }

    #[test]
    fn cyclic_dedup_identifies_rotations_and_inverses() {
        let alphabet = gens(&["a", "b"]);
        let u = word("a*b", &alphabet);
        let rot = word("b*a", &alphabet);
        let inv = word("b^-1*a^-1", &alphabet);
        assert_eq!(cyclic_key(&u), cyclic_key(&rot));
        assert_eq!(cyclic_key(&u), cyclic_key(&inv));
        assert_ne!(cyclic_key(&u), cyclic_key(&word("a*b^-1", &alphabet)));
        // Conjugates share a key through cyclic reduction.
        let conj = word("b^-1*(a*b)*b", &alphabet);
        assert_eq!(cyclic_key(&u), cyclic_key(&conj));
    }

    #[test]
    fn expand_cyclic_mode_thins_conjugate_images() {
        // Seed a·b and endomorphism swapping a and b: the depth-1 image b·a
        // is a rotation of the seed, so cyclic mode keeps only one.
        let alphabet = gens(&["a", "b"]);
        let mut images = BTreeMap::new();
        images.insert(Generator::plain("a"), Word::generator(Generator::plain("b")));
        images.insert(Generator::plain("b"), Word::generator(Generator::plain("a")));
        let swap = FreeEndomorphism::new(images).unwrap();
        let lp = LPresentation::new(
            alphabet.clone(),
            vec![],
            vec![word("a*b", &alphabet)],
            vec![("s".into(), swap)],
        )
        .unwrap();
        assert_eq!(expand(&lp, 1, DedupMode::Exact).len(), 2);
        assert_eq!(expand(&lp, 1, DedupMode::Cyclic).len(), 1);
    }

    #[test]
    fn substitute_requires_images_for_all_letters() {
        let alphabet = gens(&["a", "b"]);
        let w = word("a*b", &alphabet);
        let mut images = BTreeMap::new();
        images.insert(Generator::plain("a"), Word::generator(Generator::plain("x")));
        assert!(matches!(
            substitute(&w, &images),
            Err(Error::MissingImage(_))
        ));
    }

    #[test]
    fn dyck_check_accepts_honest_homomorphism() {
        // ⟨a, b | [a,b]⟩ maps to itself by a ↦ a², b ↦ b; the commutator
        // relator lands in the normal closure (here: checked abelianly).
        let alphabet = gens(&["a", "b"]);
        let p = FinitePresentation::new(
            alphabet.clone(),
            vec![word("[a,b]", &alphabet)],
            None,
        )
        .unwrap();
        let mut images = BTreeMap::new();
        images.insert(Generator::plain("a"), word("a^2", &alphabet));
        images.insert(Generator::plain("b"), Word::generator(Generator::plain("b")));
        let ok = check_dyck_hom(&p, &images, |w| {
            Ok(alphabet.iter().all(|g| w.exp_sum(g) == 0))
        })
        .unwrap();
        assert!(ok);
    }

    #[test]
    fn dyck_check_rejects_non_homomorphism() {
        // ⟨a | a²⟩ cannot map onto ⟨a⟩ free by a ↦ a: a² is not trivial.
        let alphabet = gens(&["a"]);
        let p = FinitePresentation::new(alphabet.clone(), vec![word("a^2", &alphabet)], None)
            .unwrap();
        let mut images = BTreeMap::new();
        images.insert(Generator::plain("a"), Word::generator(Generator::plain("a")));
        let ok = check_dyck_hom(&p, &images, |w| Ok(w.is_identity())).unwrap();
        assert!(!ok);
    }

    #[test]
    fn dyck_check_requires_total_image_map() {
        let alphabet = gens(&["a", "b"]);
        let p = FinitePresentation::new(alphabet, vec![], None).unwrap();
        let images = BTreeMap::new();
        assert!(matches!(
            check_dyck_hom(&p, &images, |_| Ok(true)),
            Err(Error::MissingImage(_))
        ));
    }

    #[test]
    fn hnn_embed_adds_stable_letter_and_conjugation_relators() {
        let lp = toy_lp();
        let p = hnn_embed(&lp).unwrap();
        let names: Vec<String> = p.generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(names, ["a", "b", "t_d"]);
        // 1 seed + 2 conjugation relators.
        assert_eq!(p.relators().len(), 3);
        let prints: Vec<String> = p.relators().iter().map(print_word).collect();
        assert!(prints.contains(&"t_d^-1*a*t_d*a^-1".to_string()));
        assert!(prints.contains(&"t_d^-1*b*t_d*b^-2".to_string()));
    }

    #[test]
    fn hnn_embed_rejects_non_ascending_input() {
        let text = "[lpres]\ngens = a\nfixed = a^4\nseeds = a^2\nendo e = a -> a^2\n";
        let lp = parse_lpres(text).unwrap();
        assert!(matches!(hnn_embed(&lp), Err(Error::NotAscending(1))));
    }

    #[test]
    fn hnn_embed_without_endos_is_just_the_presentation() {
        let alphabet = gens(&["a", "b"]);
        let lp = LPresentation::new(
            alphabet.clone(),
            vec![],
            vec![word("[a,b]", &alphabet)],
            vec![],
        )
        .unwrap();
        let p = hnn_embed(&lp).unwrap();
        assert_eq!(p.generators(), lp.generators());
        assert_eq!(p.relators(), lp.seeds());
    }

    #[test]
    fn hnn_embed_reports_stable_letter_clash() {
        let alphabet = gens(&["a", "t_e"]);
        let lp = LPresentation::new(
            alphabet.clone(),
            vec![],
            vec![],
            vec![("e".into(), FreeEndomorphism::identity(alphabet))],
        )
        .unwrap();
        assert!(matches!(hnn_embed(&lp), Err(Error::StableLetterClash(_))));
    }
}
