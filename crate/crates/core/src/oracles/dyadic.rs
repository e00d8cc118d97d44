//! Exact affine maps `x ↦ 2ᵏ·x + q` over the dyadic rationals
//! `q = n·2ᵉ`, with arbitrary-precision numerators.
//!
//! Such maps form a group under composition (the Baumslag–Solitar group
//! `BS(1,2)` in its standard affine representation), and tuples of them
//! model direct products.  Because the representation is faithful, a word
//! evaluates to the identity tuple exactly when it is trivial in the
//! modelled group — this is the oracle used for the four-generator group
//! with presentation `⟨a, b, t, u | [a,b], [a,u], [t,b], [t,u],
//! a^t·a⁻², b^u·b⁻²⟩`, where `a, t` act on the first coordinate and
//! `b, u` on the second.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::freegroup::{Generator, Sign, Word};

/// A dyadic rational `num·2^exp` with `num` odd (or zero, with `exp = 0`).
/// The normalization makes equality structural.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyadicRational {
    num: BigInt,
    exp: i64,
}

impl DyadicRational {
    pub fn new(mut num: BigInt, mut exp: i64) -> Self {
        if num.is_zero() {
            return DyadicRational {
                num,
                exp: 0,
            };
        }
        let two = BigInt::from(2);
        while (&num % &two).is_zero() {
            num /= &two;
            exp += 1;
        }
        DyadicRational { num, exp }
    }

    pub fn zero() -> Self {
        DyadicRational {
            num: BigInt::zero(),
            exp: 0,
        }
    }

    pub fn from_integer(n: i64) -> Self {
        DyadicRational::new(BigInt::from(n), 0)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &DyadicRational) -> DyadicRational {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        // Align to the smaller exponent; the shifts are nonnegative.
        let exp = self.exp.min(other.exp);
        let a = &self.num << usize::try_from(self.exp - exp).expect("exponent gap fits usize");
        let b = &other.num << usize::try_from(other.exp - exp).expect("exponent gap fits usize");
        DyadicRational::new(a + b, exp)
    }

    pub fn neg(&self) -> DyadicRational {
        DyadicRational {
            num: -&self.num,
            exp: self.exp,
        }
    }

    /// Multiply by `2^k`.
    pub fn mul_pow2(&self, k: i64) -> DyadicRational {
        if self.is_zero() {
            self.clone()
        } else {
            DyadicRational {
                num: self.num.clone(),
                exp: self.exp + k,
            }
        }
    }
}

impl fmt::Display for DyadicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}*2^{}", self.num, self.exp)
        }
    }
}

/// An invertible affine map `x ↦ 2ᵏ·x + q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap {
    k: i64,
    q: DyadicRational,
}

impl AffineMap {
    pub fn new(k: i64, q: DyadicRational) -> Self {
        AffineMap { k, q }
    }

    pub fn identity() -> Self {
        AffineMap {
            k: 0,
            q: DyadicRational::zero(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.k == 0 && self.q.is_zero()
    }

    /// `self ∘ other`: apply `other` first.
    /// `2^k1·(2^k2·x + q2) + q1 = 2^(k1+k2)·x + (2^k1·q2 + q1)`.
    pub fn compose(&self, other: &AffineMap) -> AffineMap {
        AffineMap {
            k: self.k + other.k,
            q: other.q.mul_pow2(self.k).add(&self.q),
        }
    }

    /// The inverse map `x ↦ 2^(−k)·x − 2^(−k)·q`.
    pub fn inverse(&self) -> AffineMap {
        AffineMap {
            k: -self.k,
            q: self.q.neg().mul_pow2(-self.k),
        }
    }
}

impl fmt::Display for AffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "x -> x");
        }
        write!(f, "x -> ")?;
        if self.k != 0 {
            write!(f, "2^{}*x", self.k)?;
        } else {
            write!(f, "x")?;
        }
        if !self.q.is_zero() {
            if self.q.num.is_negative() {
                write!(f, " - {}", self.q.neg())?;
            } else {
                write!(f, " + {}", self.q)?;
            }
        }
        Ok(())
    }
}

/// Evaluate a word with the given per-generator images (tuples of affine
/// maps, composed componentwise, leftmost letter outermost).
pub fn eval(
    w: &Word,
    images: &BTreeMap<Generator, Vec<AffineMap>>,
) -> Result<Vec<AffineMap>, Error> {
    let arity = images.values().next().map(Vec::len).unwrap_or(0);
    let mut acc = vec![AffineMap::identity(); arity];
    for l in w.letters() {
        let img = images.get(&l.gen).ok_or_else(|| Error::OracleAlphabet {
            oracle: "dyadic".into(),
            generator: l.gen.to_string(),
        })?;
        debug_assert_eq!(img.len(), arity, "images must share one arity");
        for (a, f) in acc.iter_mut().zip(img) {
            let factor = match l.sign {
                Sign::Plus => f.clone(),
                Sign::Minus => f.inverse(),
            };
            *a = a.compose(&factor);
        }
    }
    Ok(acc)
}

/// Word-problem check under `images`: `None` when the word evaluates to the
/// identity tuple, otherwise a witness naming the first non-identity
/// component.
pub fn check(
    w: &Word,
    images: &BTreeMap<Generator, Vec<AffineMap>>,
) -> Result<Option<String>, Error> {
    let value = eval(w, images)?;
    for (i, f) in value.iter().enumerate() {
        if !f.is_identity() {
            return Ok(Some(format!("acts on component {i} as {f}")));
        }
    }
    Ok(None)
}

/// The faithful affine images for the group
/// `⟨a, b, t, u | [a,b], [a,u], [t,b], [t,u], a^t·a⁻², b^u·b⁻²⟩` — two
/// commuting copies of `BS(1,2)`, with `a, t` acting on the first
/// coordinate (translation and halving) and `b, u` on the second.
pub fn bs12sq_images() -> BTreeMap<Generator, Vec<AffineMap>> {
    let translate = AffineMap::new(0, DyadicRational::from_integer(1));
    let halve = AffineMap::new(-1, DyadicRational::zero());
    let id = AffineMap::identity;
    let mut out = BTreeMap::new();
    out.insert(Generator::plain("a"), vec![translate.clone(), id()]);
    out.insert(Generator::plain("b"), vec![id(), translate]);
    out.insert(Generator::plain("t"), vec![halve.clone(), id()]);
    out.insert(Generator::plain("u"), vec![id(), halve]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presfmt::parse_word;

    fn gens() -> Vec<Generator> {
        ["a", "b", "t", "u"].map(Generator::plain).to_vec()
    }

    fn ok(text: &str) -> bool {
        let w = parse_word(text, &gens()).unwrap();
        check(&w, &bs12sq_images()).unwrap().is_none()
    }

    #[test]
    fn dyadic_normalization() {
        assert_eq!(
            DyadicRational::new(BigInt::from(12), 0),
            DyadicRational::new(BigInt::from(3), 2)
        );
        assert!(DyadicRational::new(BigInt::from(0), 5).is_zero());
        assert_eq!(
            DyadicRational::from_integer(6).add(&DyadicRational::from_integer(-6)),
            DyadicRational::zero()
        );
        // 1/2 + 1/2 = 1.
        let half = DyadicRational::new(BigInt::from(1), -1);
        assert_eq!(half.add(&half), DyadicRational::from_integer(1));
    }

    #[test]
    fn affine_group_laws() {
        let f = AffineMap::new(3, DyadicRational::from_integer(5));
        let g = AffineMap::new(-2, DyadicRational::new(BigInt::from(7), -4));
        assert!(f.compose(&f.inverse()).is_identity());
        assert!(f.inverse().compose(&f).is_identity());
        // Composition is associative around a third map.
        let h = AffineMap::new(1, DyadicRational::from_integer(-1));
        assert_eq!(
            f.compose(&g).compose(&h),
            f.compose(&g.compose(&h))
        );
    }

    #[test]
    fn defining_relators_evaluate_to_identity() {
        for r in ["[a,b]", "[a,u]", "[t,b]", "[t,u]", "a^t*a^-2", "b^u*b^-2"] {
            assert!(ok(r), "{r} should act trivially");
        }
    }

    #[test]
    fn non_relators_are_caught_with_witnesses() {
        assert!(!ok("a"));
        assert!(!ok("[a,t]"));
        assert!(!ok("a^t*a^-1"));
        let w = parse_word("b^u*b^-3", &gens()).unwrap();
        let witness = check(&w, &bs12sq_images()).unwrap().unwrap();
        assert!(witness.contains("component 1"), "got: {witness}");
    }

    #[test]
    fn conjugation_by_t_doubles_the_translation() {
        // t⁻¹·a·t acts on coordinate 0 as x + 2.
        let w = parse_word("a^t", &gens()).unwrap();
        let value = eval(&w, &bs12sq_images()).unwrap();
        assert_eq!(
            value[0],
            AffineMap::new(0, DyadicRational::from_integer(2))
        );
        assert!(value[1].is_identity());
    }

    #[test]
    fn deep_conjugates_stay_exact() {
        // t⁻⁸·a·t⁸ translates by 2⁸; pairing with a⁻²⁵⁶ gives the identity.
        assert!(ok("a^(t^8)*a^-256"));
        assert!(!ok("a^(t^8)*a^-255"));
        // Negative direction: t⁴·a·t⁻⁴ translates by 2⁻⁴.
        let w = parse_word("a^(t^-4)", &gens()).unwrap();
        let value = eval(&w, &bs12sq_images()).unwrap();
        assert_eq!(
            value[0],
            AffineMap::new(0, DyadicRational::new(BigInt::from(1), -4))
        );
    }

    #[test]
    fn foreign_letters_are_rejected() {
        let w = Word::generator(Generator::plain("z"));
        assert!(matches!(
            check(&w, &bs12sq_images()),
            Err(Error::OracleAlphabet { .. })
        ));
    }
}
