//! Exact word-problem oracle for the Grigorchuk group, acting on the
//! infinite binary rooted tree.
//!
//! The four generators are involutions; `a` swaps the two subtrees below
//! the root, and the others act by the self-similar (wreath) recursion
//!
//! ```text
//! b = (a, c)      c = (a, d)      d = (1, b)
//! ```
//!
//! meaning `b` acts as `a` on the left subtree and as `c` on the right one,
//! and so on.  Additionally `{1, b, c, d}` form a Klein four-group, so
//! words normalize to an alternating form before recursing: equal adjacent
//! letters cancel and adjacent letters from `{b, c, d}` multiply to the
//! third.  Normalization at every level keeps section lengths at most about
//! half the parent's length, which makes the recursion terminate.
//!
//! A tree automorphism is trivial exactly when no vertex swaps its
//! subtrees, so the oracle's witness for a nontrivial word is the first
//! vertex (in depth-first order) whose subtrees are exchanged.

use std::collections::HashMap;

use crate::error::Error;
use crate::freegroup::{Generator, Word};

/// Normalized letters of the group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Gl {
    A,
    B,
    C,
    D,
}

impl Gl {
    fn name(self) -> &'static str {
        match self {
            Gl::A => "a",
            Gl::B => "b",
            Gl::C => "c",
            Gl::D => "d",
        }
    }

    /// The product of two distinct letters from {b, c, d} is the third.
    fn klein_product(self, other: Gl) -> Gl {
        match (self, other) {
            (Gl::B, Gl::C) | (Gl::C, Gl::B) => Gl::D,
            (Gl::B, Gl::D) | (Gl::D, Gl::B) => Gl::C,
            (Gl::C, Gl::D) | (Gl::D, Gl::C) => Gl::B,
            _ => unreachable!("klein_product needs two distinct non-a letters"),
        }
    }
}

/// Append one letter to a normalized sequence, keeping it normalized.
fn push(seq: &mut Vec<Gl>, l: Gl) {
    match seq.last() {
        Some(&top) if top == l => {
            // Involutions: xx = 1.
            seq.pop();
        }
        Some(&top) if top != Gl::A && l != Gl::A => {
            // Two (distinct) Klein letters multiply to the third; the
            // replacement may cascade with the new top.
            let prod = top.klein_product(l);
            seq.pop();
            push(seq, prod);
        }
        _ => seq.push(l),
    }
}

/// Convert a free word into a normalized letter sequence.  Signs vanish
/// because every generator is an involution.
fn normalize(w: &Word) -> Result<Vec<Gl>, Error> {
    let mut seq = Vec::with_capacity(w.len());
    for l in w.letters() {
        let gl = match (l.gen.name(), l.gen.level()) {
            ("a", None) => Gl::A,
            ("b", None) => Gl::B,
            ("c", None) => Gl::C,
            ("d", None) => Gl::D,
            _ => {
                return Err(Error::OracleAlphabet {
                    oracle: "grigorchuk".into(),
                    generator: l.gen.to_string(),
                })
            }
        };
        push(&mut seq, gl);
    }
    Ok(seq)
}

/// Root swap flag and the two subtree sections of a normalized sequence.
fn split(seq: &[Gl]) -> (bool, Vec<Gl>, Vec<Gl>) {
    let mut swap = false;
    let mut sec: [Vec<Gl>; 2] = [Vec::new(), Vec::new()];
    for &g in seq {
        match g {
            Gl::A => {
                // a = (1, 1) with a root swap: later letters' sections land
                // on the opposite side, which the running product realizes
                // by exchanging the accumulated sections.
                sec.swap(0, 1);
                swap = !swap;
            }
            Gl::B => {
                push(&mut sec[0], Gl::A);
                push(&mut sec[1], Gl::C);
            }
            Gl::C => {
                push(&mut sec[0], Gl::A);
                push(&mut sec[1], Gl::D);
            }
            Gl::D => {
                push(&mut sec[1], Gl::B);
            }
        }
    }
    let [s0, s1] = sec;
    (swap, s0, s1)
}

fn to_word(seq: &[Gl]) -> Word {
    use crate::freegroup::{Letter, Sign};
    Word::from_letters(
        seq.iter()
            .map(|g| Letter::new(Generator::plain(g.name()), Sign::Plus)),
    )
}

/// The wreath decomposition of a word: whether the root swaps its subtrees,
/// and the words acting on the left and right subtree.
pub fn sections(w: &Word) -> Result<(bool, Word, Word), Error> {
    let seq = normalize(w)?;
    let (swap, s0, s1) = split(&seq);
    Ok((swap, to_word(&s0), to_word(&s1)))
}

/// Depth-first search for a swapped vertex; returns its path (over `{0,1}`)
/// relative to the current vertex.  Memoized per normalized sequence.
fn find_swap(seq: Vec<Gl>, memo: &mut HashMap<Vec<Gl>, Option<String>>) -> Option<String> {
    if seq.is_empty() {
        return None;
    }
    if let Some(hit) = memo.get(&seq) {
        return hit.clone();
    }
    let (swap, s0, s1) = split(&seq);
    let result = if swap {
        Some(String::new())
    } else {
        find_swap(s0, memo)
            .map(|p| format!("0{p}"))
            .or_else(|| find_swap(s1, memo).map(|p| format!("1{p}")))
    };
    memo.insert(seq, result.clone());
    result
}

/// Decide the word problem, returning a witness for nontrivial words: the
/// first tree vertex whose subtrees the word exchanges.
pub fn check(w: &Word) -> Result<Option<String>, Error> {
    let seq = normalize(w)?;
    let mut memo = HashMap::new();
    Ok(find_swap(seq, &mut memo).map(|path| {
        if path.is_empty() {
            "swaps the subtrees at the root".to_string()
        } else {
            format!("swaps the subtrees at vertex {path}")
        }
    }))
}

/// Is the word the identity in the group?
pub fn is_trivial(w: &Word) -> Result<bool, Error> {
    Ok(check(w)?.is_none())
}
