//! Canonical printers.  Every printer emits text that the corresponding
//! parser maps back to the same value, and equal values print identically.

use sha2::{Digest, Sha256};

use crate::freegroup::{Generator, Sign, Word};
use crate::kernel::{CertificateSet, DerivedLPresentation};
use crate::lpres::{DedupMode, ExpansionReport, FinitePresentation, LPresentation};
use crate::oracles::{MapRule, PullbackMap, RuleLhs, RuleRhs, TemplateFactor};

use super::parse::Document;

/// Canonical form of a word: letters with equal adjacent generators
/// collapsed into powers, `*`-separated; the identity prints as `1`.
pub fn print_word(w: &Word) -> String {
    if w.is_identity() {
        return "1".to_string();
    }
    let mut parts: Vec<String> = Vec::new();
    let letters = w.letters();
    let mut i = 0;
    while i < letters.len() {
        let gen = &letters[i].gen;
        let sign = letters[i].sign;
        let mut run = 1;
        // In a reduced word, adjacent letters with the same generator must
        // share a sign (opposite signs would have cancelled).
        while i + run < letters.len() && letters[i + run].gen == *gen {
            run += 1;
        }
        let exp = match sign {
            Sign::Plus => run as i64,
            Sign::Minus => -(run as i64),
        };
        if exp == 1 {
            parts.push(gen.to_string());
        } else {
            parts.push(format!("{gen}^{exp}"));
        }
        i += run;
    }
    parts.join("*")
}

fn gen_list(gens: &[Generator]) -> String {
    gens.iter()
        .map(|g| g.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Canonical `[group]` document.
pub fn print_presentation(p: &FinitePresentation) -> String {
    let mut out = String::from("[group]\n");
    out.push_str(&format!("gens = {}\n", gen_list(p.generators())));
    if let Some(deg) = p.degree() {
        let pairs = p
            .generators()
            .iter()
            .map(|g| format!("{g} {}", deg[g]))
            .collect::<Vec<_>>()
            .join(" ");
        out.push_str(&format!("deg = {pairs}\n"));
    }
    for r in p.relators() {
        out.push_str(&format!("rels = {}\n", print_word(r)));
    }
    out
}

/// Canonical `[lpres]` document.
pub fn print_lpres(lp: &LPresentation) -> String {
    let mut out = String::from("[lpres]\n");
    out.push_str(&format!("gens = {}\n", gen_list(lp.generators())));
    for w in lp.fixed() {
        out.push_str(&format!("fixed = {}\n", print_word(w)));
    }
    for w in lp.seeds() {
        out.push_str(&format!("seeds = {}\n", print_word(w)));
    }
    for (name, endo) in lp.endos() {
        let rules = lp
            .generators()
            .iter()
            .map(|g| {
                let img = endo.image(g).expect("endomorphisms are total");
                format!("{g} -> {}", print_word(img))
            })
            .collect::<Vec<_>>()
            .join(", ");
        out.push_str(&format!("endo {name} = {rules}\n"));
    }
    out
}

/// Canonical `[certs]` document.
pub fn print_certs(c: &CertificateSet) -> String {
    let mut out = String::from("[certs]\n");
    out.push_str(&format!("N = {}\n", c.window().bound()));
    for g in c.window().base() {
        out.push_str(&format!(
            "up {g} = {}\n",
            print_word(c.up(g).expect("validated certificate row"))
        ));
        out.push_str(&format!(
            "down {g} = {}\n",
            print_word(c.down(g).expect("validated certificate row"))
        ));
    }
    out
}

/// Render one factor of a template right-hand side.
fn template_factor(f: &TemplateFactor, var: &str) -> String {
    match f {
        TemplateFactor::Const(w) => print_word(w),
        TemplateFactor::Pow { base, negate } => {
            let b = if base.len() == 1 && base.letters()[0].sign == Sign::Plus {
                print_word(base)
            } else {
                format!("({})", print_word(base))
            };
            if *negate {
                format!("{b}^-{var}")
            } else {
                format!("{b}^{var}")
            }
        }
    }
}

/// Canonical `[map]` document.
pub fn print_map(m: &PullbackMap) -> String {
    let mut out = String::from("[map]\n");
    for rule in m.rules() {
        out.push_str(&print_rule(rule));
        out.push('\n');
    }
    out
}

fn print_rule(rule: &MapRule) -> String {
    match (&rule.lhs, &rule.rhs) {
        (RuleLhs::Exact(g), RuleRhs::Exact(w)) => format!("{g} = {}", print_word(w)),
        (RuleLhs::Pattern { name, var }, RuleRhs::Template(factors)) => {
            let rhs = if factors.is_empty() {
                "1".to_string()
            } else {
                factors
                    .iter()
                    .map(|f| template_factor(f, var))
                    .collect::<Vec<_>>()
                    .join("*")
            };
            format!("{name}@{var} = {rhs}")
        }
        // The parser never pairs an exact side with a template side.
        (RuleLhs::Exact(g), RuleRhs::Template(_)) => format!("{g} = 1"),
        (RuleLhs::Pattern { name, var }, RuleRhs::Exact(w)) => {
            format!("{name}@{var} = {}", print_word(w))
        }
    }
}

/// Whichever document this is, printed canonically.
pub fn print_document(doc: &Document) -> String {
    match doc {
        Document::Group(p) => print_presentation(p),
        Document::Lpres(lp) => print_lpres(lp),
        Document::Certs(c) => print_certs(c),
        Document::Map(m) => print_map(m),
    }
}

/// `[lpres-expansion]` listing: a summary comment, then one relator per
/// line in the deterministic expansion order.
pub fn print_expansion(report: &ExpansionReport) -> String {
    let mode = match report.dedup {
        DedupMode::Exact => "exact",
        DedupMode::Cyclic => "cyclic",
    };
    let mut out = String::from("[lpres-expansion]\n");
    out.push_str(&format!(
        "# depth {}, dedup {}, relators {} of {} pre-dedup\n",
        report.depth,
        mode,
        report.len(),
        report.produced()
    ));
    for w in report.relators() {
        out.push_str(&print_word(w));
        out.push('\n');
    }
    out
}

/// Hex SHA-256 of a string, used to fingerprint derivation inputs.
pub fn sha256_hex(text: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(text.as_bytes());
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// A derived L-presentation with a provenance comment block: fingerprints
/// of the input presentation and certificates, the distinguished generator,
/// and the window bound.  The block is pure commentary — parsing the output
/// yields exactly the contained `[lpres]`.
pub fn print_derived(d: &DerivedLPresentation) -> String {
    let p = &d.provenance;
    let mut out = String::new();
    out.push_str("# derived kernel L-presentation\n");
    out.push_str(&format!(
        "# input sha256 {}\n",
        sha256_hex(&print_presentation(&p.input))
    ));
    let t = if p.t_inverted {
        format!("{} (used inverted)", p.t)
    } else {
        p.t.to_string()
    };
    out.push_str(&format!("# t = {t}\n"));
    out.push_str(&format!("# window N = {}\n", p.certs.window().bound()));
    for g in p.certs.window().base() {
        let up = sha256_hex(&print_word(p.certs.up(g).expect("validated row")));
        let down = sha256_hex(&print_word(p.certs.down(g).expect("validated row")));
        out.push_str(&format!("# certs {g}: up {}, down {}\n", &up[..12], &down[..12]));
    }
    out.push_str(&print_lpres(&d.lp));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presfmt::{parse_certs, parse_lpres, parse_map, parse_presentation, parse_word};

    #[test]
    fn words_print_with_collapsed_powers() {
        let gens = vec![Generator::plain("a"), Generator::plain("b")];
        for (input, canonical) in [
            ("a*a*a", "a^3"),
            ("a^-1*a^-1*b", "a^-2*b"),
            ("b*a*a^-1*b", "b^2"),
            ("a*b*b^-1*a^-1", "1"),
        ] {
            let w = parse_word(input, &gens).unwrap();
            assert_eq!(print_word(&w), canonical);
        }
    }

    #[test]
    fn printing_is_canonical_across_spellings() {
        let gens = vec![Generator::plain("a"), Generator::plain("t")];
        let spellings = ["a^t", "t^-1*a*t", "t^-1 a t", "(a)^(t)"];
        let printed: Vec<String> = spellings
            .iter()
            .map(|s| print_word(&parse_word(s, &gens).unwrap()))
            .collect();
        assert!(printed.iter().all(|p| p == &printed[0]));
    }

    #[test]
    fn group_documents_round_trip() {
        let text = "[group]\ngens = a t\ndeg = a 0 t 1\nrels = a^-1*t^-1*a*t\n";
        let p = parse_presentation(text).unwrap();
        let printed = print_presentation(&p);
        assert_eq!(printed, text);
        assert_eq!(parse_presentation(&printed).unwrap(), p);
    }

    #[test]
    fn lpres_documents_round_trip() {
        let text = "\
[lpres]
gens = a b c d
fixed = a^2
fixed = b^2
fixed = c^2
fixed = d^2
fixed = b*c*d
seeds = a*d*a*d*a*d*a*d
seeds = a*d*a*c*a*c*a*d*a*c*a*c*a*d*a*c*a*c*a*d*a*c*a*c
endo sigma = a -> a*c*a, b -> d, c -> b, d -> c
";
        let lp = parse_lpres(text).unwrap();
        let printed = print_lpres(&lp);
        assert_eq!(printed, text);
        assert_eq!(parse_lpres(&printed).unwrap(), lp);
    }

    #[test]
    fn certs_documents_round_trip() {
        let text = "[certs]\nN = 2\nup a = a@2^2\ndown a = u@0^-1*a@-2*u@0\nup u = u@2\ndown u = u@-2\n";
        let c = parse_certs(text).unwrap();
        let printed = print_certs(&c);
        assert_eq!(printed, text);
        assert_eq!(parse_certs(&printed).unwrap(), c);
    }

    #[test]
    fn map_documents_round_trip() {
        let text = "[map]\na@i = t^-i*a*t^i\nu@i = t^-i*u*t^-1*t^i\nz = t*u^-1\n";
        let m = parse_map(text).unwrap();
        let printed = print_map(&m);
        assert_eq!(printed, text);
        let reparsed = parse_map(&printed).unwrap();
        // Maps compare by behaviour, not structurally.
        for g in [
            Generator::indexed("a", 4),
            Generator::indexed("u", -3),
            Generator::plain("z"),
        ] {
            assert_eq!(m.resolve(&g), reparsed.resolve(&g));
        }
    }

    #[test]
    fn multi_letter_template_bases_parenthesize() {
        let text = "[map]\nw@i = (a*b)^-i*a*(a*b)^i\n";
        let m = parse_map(text).unwrap();
        assert_eq!(print_map(&m), text);
        let w2 = m.resolve(&Generator::indexed("w", 2)).unwrap();
        assert_eq!(print_word(&w2), "b^-1*a^-1*b^-1*a*b*a*b");
    }

    #[test]
    fn sha256_matches_known_vector() {
        assert_eq!(
            sha256_hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }
}
