//! Abelianized necessary-condition oracle.
//!
//! Every relator of an endomorphically presented group has an exponent
//! vector inside the lattice spanned by the exponent vectors of the fixed
//! relators together with the endomorphism orbit of the seed relators.
//! Membership in that lattice is therefore a *necessary* condition for a
//! word to be trivial: a vector outside the lattice certifies a
//! non-relator, while membership proves nothing on its own.

use std::collections::VecDeque;

use num_bigint::BigInt;

use crate::error::Error;
use crate::freegroup::{FreeEndomorphism, Generator, Word};
use crate::lpres::LPresentation;
use crate::oracles::snf::{in_row_lattice, row_times_matrix, IntMatrix};

/// Exponent sums of `w` over `alphabet`, in alphabet order.  Letters
/// outside the alphabet are rejected.
pub fn exponent_vector(w: &Word, alphabet: &[Generator]) -> Result<Vec<BigInt>, Error> {
    for g in w.support() {
        if !alphabet.contains(g) {
            return Err(Error::OracleAlphabet {
                oracle: "abelian".into(),
                generator: g.to_string(),
            });
        }
    }
    Ok(alphabet
        .iter()
        .map(|g| BigInt::from(w.exp_sum(g)))
        .collect())
}

/// One row per word: the exponent vectors over `alphabet`.
pub fn exponent_matrix(words: &[Word], alphabet: &[Generator]) -> Result<IntMatrix, Error> {
    let rows = words
        .iter()
        .map(|w| exponent_vector(w, alphabet))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(IntMatrix::from_bigint_rows(rows, alphabet.len()))
}

/// The matrix of the map an endomorphism induces on exponent vectors:
/// row `y` holds the exponent vector of the image of generator `y`, so a
/// word's vector `v` maps to `v · A`.
pub fn endo_matrix(phi: &FreeEndomorphism, alphabet: &[Generator]) -> Result<IntMatrix, Error> {
    let rows = alphabet
        .iter()
        .map(|g| {
            let image = phi.image(g).ok_or_else(|| Error::MissingImage(g.to_string()))?;
            exponent_vector(image, alphabet)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(IntMatrix::from_bigint_rows(rows, alphabet.len()))
}

fn spans(rows: &[Vec<BigInt>], v: &[BigInt], cols: usize) -> bool {
    let m = IntMatrix::from_bigint_rows(rows.to_vec(), cols);
    in_row_lattice(v, &m)
}

/// The exponent-vector lattice of all relators: fixed relators plus the
/// full endomorphism orbit of the seeds.  The orbit closure terminates
/// because lattices in `Zⁿ` satisfy the ascending chain condition; only
/// seed vectors are pushed through the endomorphisms, since the fixed
/// relators are not subject to them.
pub fn saturated_relator_matrix(lp: &LPresentation) -> Result<IntMatrix, Error> {
    let alphabet = lp.generators().to_vec();
    let n = alphabet.len();
    let endo_mats = lp
        .endos()
        .iter()
        .map(|(_, phi)| endo_matrix(phi, &alphabet))
        .collect::<Result<Vec<_>, _>>()?;
    let mut orbit: Vec<Vec<BigInt>> = Vec::new();
    let mut queue: VecDeque<Vec<BigInt>> = VecDeque::new();
    for seed in lp.seeds() {
        let v = exponent_vector(seed, &alphabet)?;
        if !spans(&orbit, &v, n) {
            orbit.push(v.clone());
            queue.push_back(v);
        }
    }
    while let Some(v) = queue.pop_front() {
        for a in &endo_mats {
            let image = row_times_matrix(&v, a);
            if !spans(&orbit, &image, n) {
                orbit.push(image.clone());
                queue.push_back(image);
            }
        }
    }
    let mut rows = lp
        .fixed()
        .iter()
        .map(|q| exponent_vector(q, &alphabet))
        .collect::<Result<Vec<_>, _>>()?;
    rows.extend(orbit);
    Ok(IntMatrix::from_bigint_rows(rows, n))
}

/// Word-problem oracle for the necessary condition: answers `None` when a
/// word's exponent vector lies in the saturated relator lattice, and a
/// witness string when it provably is not a relator.
pub struct AbelianOracle {
    alphabet: Vec<Generator>,
    lattice: IntMatrix,
}

impl AbelianOracle {
    pub fn for_presentation(lp: &LPresentation) -> Result<Self, Error> {
        Ok(AbelianOracle {
            alphabet: lp.generators().to_vec(),
            lattice: saturated_relator_matrix(lp)?,
        })
    }

    pub fn check(&self, w: &Word) -> Result<Option<String>, Error> {
        let v = exponent_vector(w, &self.alphabet)?;
        if in_row_lattice(&v, &self.lattice) {
            Ok(None)
        } else {
            let coords: Vec<String> = v.iter().map(BigInt::to_string).collect();
            Ok(Some(format!(
                "exponent vector ({}) is outside the relator lattice",
                coords.join(", ")
            )))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lpres::{expand, DedupMode};
    use crate::oracles::snf::bigint_row;
    use crate::presfmt::{parse_lpres, parse_word};

    fn hand_lp() -> LPresentation {
        parse_lpres(concat!(
            "[lpres]\n",
            "gens = a b z\n",
            "seeds = [a,b]; a^z*a^-2; (b^2)^z*b^-1\n",
            "endo eta = a -> a^2, b -> b, z -> z\n",
            "endo tau = a -> z*a*z^-1, b -> b, z -> z\n",
        ))
        .unwrap()
    }

    fn word(lp: &LPresentation, text: &str) -> Word {
        parse_word(text, lp.generators()).unwrap()
    }

    #[test]
    fn exponent_vectors() {
        let lp = hand_lp();
        let w = word(&lp, "a^z*a^-2");
        assert_eq!(
            exponent_vector(&w, lp.generators()).unwrap(),
            bigint_row(&[-1, 0, 0])
        );
        let c = word(&lp, "[a,b]");
        assert_eq!(
            exponent_vector(&c, lp.generators()).unwrap(),
            bigint_row(&[0, 0, 0])
        );
        let foreign = Word::generator(Generator::plain("q"));
        assert!(matches!(
            exponent_vector(&foreign, lp.generators()),
            Err(Error::OracleAlphabet { .. })
        ));
    }

    #[test]
    fn saturated_lattice_of_the_two_generator_quotient() {
        // Seeds abelianize to (-1, 0, 0) and (0, 1, 0); both endomorphisms
        // preserve that span, so the lattice is exactly { (x, y, 0) }.
        let lp = hand_lp();
        let oracle = AbelianOracle::for_presentation(&lp).unwrap();
        assert!(oracle.check(&word(&lp, "a*b^-3")).unwrap().is_none());
        assert!(oracle.check(&word(&lp, "b")).unwrap().is_none());
        let witness = oracle.check(&word(&lp, "z")).unwrap().unwrap();
        assert!(witness.contains("(0, 0, 1)"), "got: {witness}");
        assert!(oracle.check(&word(&lp, "a*z^2")).unwrap().is_some());
    }

    #[test]
    fn fixed_relators_are_not_pushed_through_endomorphisms() {
        let lp = parse_lpres(concat!(
            "[lpres]\n",
            "gens = a b\n",
            "fixed = a\n",
            "endo swap = a -> b, b -> b\n",
        ))
        .unwrap();
        let oracle = AbelianOracle::for_presentation(&lp).unwrap();
        assert!(oracle.check(&word(&lp, "a")).unwrap().is_none());
        // If the fixed relator were wrongly saturated, its image b would be
        // in the lattice and this obstruction would disappear.
        assert!(oracle.check(&word(&lp, "b")).unwrap().is_some());
    }

    #[test]
    fn empty_presentation_has_zero_lattice() {
        let lp = parse_lpres("[lpres]\ngens = a b\n").unwrap();
        let oracle = AbelianOracle::for_presentation(&lp).unwrap();
        assert!(oracle.check(&Word::identity()).unwrap().is_none());
        assert!(oracle.check(&word(&lp, "a")).unwrap().is_some());
    }

    #[test]
    fn every_expanded_relator_passes_the_necessary_condition() {
        let lp = hand_lp();
        let oracle = AbelianOracle::for_presentation(&lp).unwrap();
        let report = expand(&lp, 3, DedupMode::Exact);
        assert!(report.len() > 3);
        for r in report.relators() {
            assert!(
                oracle.check(r).unwrap().is_none(),
                "expanded relator {r} flagged by its own lattice"
            );
        }
    }
}
