//! Finite endomorphic presentations (L-presentations) of groups.
//!
//! An L-presentation `⟨X | Q | R | Φ⟩` describes a group as the quotient of
//! the free group on `X` by the normal closure of the fixed relators `Q`
//! together with every image of the seed relators `R` under the monoid
//! generated by the free-group endomorphisms `Φ`.  When `Q` is empty the
//! presentation is *ascending*: every endomorphism in `Φ` then induces an
//! endomorphism of the presented group itself.
//!
//! The crate provides:
//!
//! * [`freegroup`] — words in a free group with eager free reduction,
//!   free-group endomorphisms, and enumeration of finitely generated
//!   endomorphism monoids up to extensional equality;
//! * [`lpres`] — finite presentations and L-presentations, truncated
//!   expansion of an L-presentation into an ordinary presentation, and the
//!   HNN-style embedding of an ascending L-presentation into a finitely
//!   presented overgroup;
//! * [`kernel`] — derivation of an ascending finite L-presentation for the
//!   kernel of a degree map onto the integers, starting from a finite
//!   presentation of the ambient group plus a certificate file describing
//!   conjugation inside a bounded window of rewritten generators;
//! * [`oracles`] — independent ground-truth engines used to verify expanded
//!   relators: the self-similar tree action of the Grigorchuk group, exact
//!   dyadic affine maps for Baumslag–Solitar style groups, and an
//!   abelianization lattice test backed by Smith normal form;
//! * [`presfmt`] — the line-oriented text formats (`[group]`, `[lpres]`,
//!   `[certs]`, `[map]`, `[lpres-expansion]`) with span-carrying parse
//!   errors and canonical printers.
//!
//! The `lpres` binary in this crate exposes the same operations as a
//! command-line tool; see `lpres --help`.

pub mod error;
pub mod fixtures;
pub mod freegroup;
pub mod kernel;
pub mod lpres;
pub mod oracles;
pub mod presfmt;

pub use error::Error;
pub use freegroup::{enumerate_monoid, FreeEndomorphism, Generator, Letter, Sign, Word};
pub use kernel::{
    derive_lpres, gamma_iterate_check, neumann_normalize, rs_rewrite, shift, window_bound,
    CertificateSet, DerivedLPresentation, Gamma, NormalizedPresentation, WindowAlphabet,
};
pub use lpres::{
    check_dyck_hom, expand, hnn_embed, substitute, Classification, DedupMode, ExpansionReport,
    FinitePresentation, LPresentation, Tally,
};
pub use oracles::{verify_lpres, PullbackMap, VerificationReport};
