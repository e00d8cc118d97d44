//! Built-in example inputs, shared by the `demo` subcommand and the test
//! suite.  Each constant is a complete document in the formats described in
//! [`crate::presfmt`].

/// Free abelian group of rank two, `⟨a, t | [a, t]⟩`, with `t` of degree
/// one.  The kernel of the degree map is the copy of the integers
/// generated by `a`, and conjugation by `t` fixes it pointwise — the
/// smallest interesting input for kernel derivation.
pub const Z2_PRES: &str = "[group]\n\
gens = a t\n\
deg = a 0 t 1\n\
rels = a^-1*t^-1*a*t\n";

/// Conjugation certificates for [`Z2_PRES`] with window bound 1: moving
/// one step past the window on either side lands back on the neighbour.
pub const Z2_CERTS: &str = "[certs]\n\
N = 1\n\
up a = a@1\n\
down a = a@-1\n";

/// The Grigorchuk group's ascending endomorphic presentation on four
/// involutions: fixed relators cut the subgroup `⟨b, c, d⟩` down to the
/// Klein four-group, and one substitution generates the remaining
/// relators from two seeds.
pub const LYSENOK_LPRES: &str = "[lpres]\n\
gens = a b c d\n\
fixed = a^2\n\
fixed = b^2\n\
fixed = c^2\n\
fixed = d^2\n\
fixed = b*c*d\n\
seeds = (a*d)^4\n\
seeds = (a*d*a*c*a*c)^4\n\
endo sigma = a -> a*c*a, b -> d, c -> b, d -> c\n";

/// Two commuting copies of the Baumslag–Solitar group `BS(1,2)`:
/// `a, t` generate one copy, `b, u` the other, and the degree map sends
/// both stable letters to one.
pub const REMARK3_PRES: &str = "[group]\n\
gens = a b t u\n\
deg = a 0 b 0 t 1 u 1\n\
rels = [a,b]\n\
rels = [a,u]\n\
rels = [t,b]\n\
rels = [t,u]\n\
rels = a^t*a^-2\n\
rels = b^u*b^-2\n";

/// Conjugation certificates for [`REMARK3_PRES`] with window bound 2.
/// The rewritten generators satisfy `a@3 = a@2²` (squares climb the `a`
/// tower) and `a@-3 = u@0⁻¹·a@-2·u@0`, while the `b` and `u` towers are
/// constant.
pub const REMARK3_CERTS: &str = "[certs]\n\
N = 2\n\
up a = a@2^2\n\
down a = u@0^-1*a@-2*u@0\n\
up b = b@2\n\
down b = b@-2\n\
up u = u@2\n\
down u = u@-2\n";

/// A hand-written ascending endomorphic presentation of the kernel of the
/// degree map of [`REMARK3_PRES`], on three generators, for comparison
/// with the derived one.  `z` plays the role of `t·u⁻¹`.
pub const REMARK3_HAND_LPRES: &str = "[lpres]\n\
gens = a b z\n\
seeds = [a,b]\n\
seeds = a^z*a^-2\n\
seeds = (b^2)^z*b^-1\n\
endo eta = a -> a^2, b -> b, z -> z\n\
endo tau = a -> z*a*z^-1, b -> b, z -> z\n";

/// Pullback from the derived kernel generators of [`REMARK3_PRES`] to
/// words of the ambient group: level `i` is conjugation by `tⁱ`, and the
/// rewritten `u` carries its degree-balancing `t⁻¹`.
pub const REMARK3_MAP: &str = "[map]\n\
a@i = t^-i*a*t^i\n\
b@i = t^-i*b*t^i\n\
u@i = t^-i*u*t^-1*t^i\n";

/// Pullback from the hand-written kernel presentation
/// [`REMARK3_HAND_LPRES`] to the ambient group of [`REMARK3_PRES`].
pub const REMARK3_HAND_MAP: &str = "[map]\n\
a = a\n\
b = b\n\
z = t*u^-1\n";

/// The known demo names, for listings and diagnostics.
pub const DEMO_NAMES: [&str; 3] = ["z2", "lysenok", "remark3"];

/// The files the named demo writes, as `(file name, content)` pairs, or
/// `None` for an unknown name.
pub fn demo_files(name: &str) -> Option<Vec<(&'static str, &'static str)>> {
    match name {
        "z2" => Some(vec![("z2.pres", Z2_PRES), ("z2.certs", Z2_CERTS)]),
        "lysenok" => Some(vec![("lysenok.lpres", LYSENOK_LPRES)]),
        "remark3" => Some(vec![
            ("remark3.pres", REMARK3_PRES),
            ("remark3.certs", REMARK3_CERTS),
            ("remark3.lpres", REMARK3_HAND_LPRES),
            ("remark3.map", REMARK3_MAP),
            ("remark3-hand.map", REMARK3_HAND_MAP),
        ]),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presfmt::{
        parse_certs, parse_lpres, parse_map, parse_presentation, print_certs, print_lpres,
        print_map, print_presentation,
    };

    #[test]
    fn every_fixture_parses() {
        parse_presentation(Z2_PRES).unwrap();
        parse_certs(Z2_CERTS).unwrap();
        parse_lpres(LYSENOK_LPRES).unwrap();
        parse_presentation(REMARK3_PRES).unwrap();
        parse_certs(REMARK3_CERTS).unwrap();
        parse_lpres(REMARK3_HAND_LPRES).unwrap();
        parse_map(REMARK3_MAP).unwrap();
        parse_map(REMARK3_HAND_MAP).unwrap();
    }

    #[test]
    fn canonical_fixtures_roundtrip() {
        // These are written in canonical form, so parse ∘ print is the
        // identity on the text.
        assert_eq!(print_presentation(&parse_presentation(Z2_PRES).unwrap()), Z2_PRES);
        assert_eq!(print_certs(&parse_certs(Z2_CERTS).unwrap()), Z2_CERTS);
        assert_eq!(print_certs(&parse_certs(REMARK3_CERTS).unwrap()), REMARK3_CERTS);
        assert_eq!(print_map(&parse_map(REMARK3_MAP).unwrap()), REMARK3_MAP);
        assert_eq!(
            print_map(&parse_map(REMARK3_HAND_MAP).unwrap()),
            REMARK3_HAND_MAP
        );
    }

    #[test]
    fn abbreviated_fixtures_reprint_stably() {
        // These use commutator and power sugar, so printing expands them;
        // the printed form parses back to the same value and is a fixed
        // point of print ∘ parse.
        let p = parse_presentation(REMARK3_PRES).unwrap();
        let printed = print_presentation(&p);
        assert_eq!(parse_presentation(&printed).unwrap(), p);
        assert_eq!(print_presentation(&parse_presentation(&printed).unwrap()), printed);

        for text in [LYSENOK_LPRES, REMARK3_HAND_LPRES] {
            let lp = parse_lpres(text).unwrap();
            let printed = print_lpres(&lp);
            assert_eq!(parse_lpres(&printed).unwrap(), lp);
            assert_eq!(print_lpres(&parse_lpres(&printed).unwrap()), printed);
        }
    }

    #[test]
    fn demo_listing_is_complete() {
        let mut total = 0;
        for name in DEMO_NAMES {
            let files = demo_files(name).unwrap();
            assert!(!files.is_empty());
            assert!(files
                .iter()
                .all(|(file, content)| !file.is_empty() && content.ends_with('\n')));
            total += files.len();
        }
        assert_eq!(total, 8);
        assert!(demo_files("nonesuch").is_none());
    }
}
