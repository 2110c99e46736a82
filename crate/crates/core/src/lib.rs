//! Deciding and certifying chirality of words in free groups.
//!
//! A word `w` in a free group is *achiral* when `G_w = G_{w^-1}` for every
//! group `G`, where `G_w` is the image of the word map. Equivalently some
//! endomorphism of the free group sends `w` to `w^-1`. This crate combines
//! several sufficient criteria into a certified pipeline:
//!
//! * [`word`]: reduced words, parsing, exponent sums, cyclic reduction.
//! * [`morphism`]: endomorphisms, automorphisms with explicit inverses, and
//!   [`morphism::InversionCertificate`]s.
//! * [`whitehead`]: Whitehead's algorithm for `Aut(F_n)` orbit questions, with
//!   automorphism extraction.
//! * [`group`]: finite groups as Cayley tables and word-map images.
//! * [`classify`]: the verdict pipeline, the census of short words and Engel
//!   words.
//! * [`report`]: JSON reports whose certificates can be re-verified offline.

pub mod classify;
pub mod cli;
pub mod group;
pub mod morphism;
pub(crate) mod numeric;
pub mod report;
pub mod whitehead;
pub mod word;

pub use classify::{classify, ClassifyOptions, Status, Verdict};
pub use group::FiniteGroup;
pub use morphism::{Automorphism, Endomorphism, Family, InversionCertificate};
pub use whitehead::{aut_inverts, orbit_equivalent, OrbitSearchResult, WhiteheadMove};
pub use word::{Letter, Word};
