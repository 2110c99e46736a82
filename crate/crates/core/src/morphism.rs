//! Endomorphisms of `F_n` given by generator images, automorphisms with an
//! explicit two-sided inverse, and inversion certificates.
//!
//! A word is achiral exactly when some endomorphism sends it to its inverse,
//! so an [`InversionCertificate`] is a complete, cheaply re-checkable proof of
//! achirality. Automorphism status is never inferred: an [`Automorphism`] can
//! only be built together with an inverse that is checked on generators.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::word::{parse as parse_word, push_reduced, Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("endomorphism needs at least one generator image")]
    Empty,
    #[error("image of x{generator} has rank {found}, expected {expected}")]
    ImageRank {
        generator: usize,
        expected: usize,
        found: usize,
    },
    #[error("unknown automorphism family `{0}`")]
    UnknownFamily(String),
    #[error("family {family} takes {expected} parameter(s), got {got}")]
    WrongParams {
        family: Family,
        expected: usize,
        got: usize,
    },
    #[error("family {family} needs rank >= 2")]
    FamilyRank { family: Family },
    #[error("supplied inverse fails on x{generator}")]
    NotInverse { generator: usize },
    #[error("cannot shrink rank {from} to {to}")]
    RankTooSmall { from: usize, to: usize },
    #[error("exponent must be nonzero")]
    ZeroPower,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A homomorphism `F_n -> F_n` determined by the images of `x_1, ..., x_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Endomorphism {
    images: Vec<Word>,
}

impl Endomorphism {
    pub fn new(images: Vec<Word>) -> Result<Self, MorphismError> {
        let rank = images.len();
        if rank == 0 {
            return Err(MorphismError::Empty);
        }
        for (i, img) in images.iter().enumerate() {
            if img.rank() != rank {
                return Err(MorphismError::ImageRank {
                    generator: i + 1,
                    expected: rank,
                    found: img.rank(),
                });
            }
        }
        Ok(Endomorphism { images })
    }

    /// Parses each image in the word grammar.
    pub fn from_strs(images: &[&str]) -> Result<Self, MorphismError> {
        let rank = images.len();
        let words = images
            .iter()
            .map(|s| parse_word(s, rank))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(words)
    }

    pub fn identity(rank: usize) -> Self {
        Endomorphism {
            images: (1..=rank)
                .map(|i| Word::generator(i, rank).expect("index within rank"))
                .collect(),
        }
    }

    /// `x_i -> x_{perm[i]}^{±1}`, with `signs[i]` true meaning inverted.
    /// Indices in `perm` are 0-based.
    pub fn signed_permutation(perm: &[usize], signs: &[bool]) -> Self {
        let rank = perm.len();
        let images = perm
            .iter()
            .zip(signs)
            .map(|(&p, &inv)| {
                let g = (p + 1) as i32;
                Word::reduce([if inv { -g } else { g }], rank).expect("permutation in range")
            })
            .collect();
        Endomorphism { images }
    }

    /// Inner automorphism `x -> c x c^-1` (as an endomorphism).
    pub fn inner(c: &Word) -> Self {
        let rank = c.rank();
        Endomorphism {
            images: (1..=rank)
                .map(|i| {
                    Word::generator(i, rank)
                        .and_then(|g| g.conjugate_by(c))
                        .expect("same rank")
                })
                .collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    /// Image of `x_i` (1-based).
    pub fn image(&self, i: usize) -> &Word {
        &self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        *self == Endomorphism::identity(self.rank())
    }

    /// Substitutes generator images into `w` and reduces.
    pub fn apply(&self, w: &Word) -> Result<Word, MorphismError> {
        if w.rank() != self.rank() {
            return Err(MorphismError::RankMismatch {
                left: self.rank(),
                right: w.rank(),
            });
        }
        let mut buf = Vec::with_capacity(w.len());
        for l in w.letters() {
            let img = &self.images[l.index() - 1];
            if l.is_inverse() {
                for &m in img.letters().iter().rev() {
                    push_reduced(&mut buf, m.inverse());
                }
            } else {
                for &m in img.letters() {
                    push_reduced(&mut buf, m);
                }
            }
        }
        Ok(Word::from_reduced_unchecked(buf, self.rank()))
    }

    /// `self ∘ g`: first `g`, then `self`.
    pub fn compose(&self, g: &Endomorphism) -> Result<Endomorphism, MorphismError> {
        if g.rank() != self.rank() {
            return Err(MorphismError::RankMismatch {
                left: self.rank(),
                right: g.rank(),
            });
        }
        let images = g
            .images
            .iter()
            .map(|img| self.apply(img))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Endomorphism { images })
    }

    /// Extends to `F_new_rank`, sending the new generators to `e`.
    pub fn extend(&self, new_rank: usize) -> Result<Endomorphism, MorphismError> {
        self.extend_with(new_rank, |_, _| Word::identity(new_rank))
    }

    /// Extends to `F_new_rank`, fixing the new generators.
    pub fn extend_fixing(&self, new_rank: usize) -> Result<Endomorphism, MorphismError> {
        self.extend_with(new_rank, |i, r| Word::generator(i, r).expect("in range"))
    }

    fn extend_with(
        &self,
        new_rank: usize,
        fresh: impl Fn(usize, usize) -> Word,
    ) -> Result<Endomorphism, MorphismError> {
        if new_rank < self.rank() {
            return Err(MorphismError::RankTooSmall {
                from: self.rank(),
                to: new_rank,
            });
        }
        let mut images = self
            .images
            .iter()
            .map(|w| w.embed(new_rank))
            .collect::<Result<Vec<_>, _>>()?;
        images.extend((self.rank() + 1..=new_rank).map(|i| fresh(i, new_rank)));
        Ok(Endomorphism { images })
    }

    /// Checks `self ∘ other` and `other ∘ self` fix every generator.
    pub fn check_two_sided_inverse(&self, other: &Endomorphism) -> Result<(), MorphismError> {
        if other.rank() != self.rank() {
            return Err(MorphismError::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        for i in 1..=self.rank() {
            let x = Word::generator(i, self.rank())?;
            if self.apply(&other.apply(&x)?)? != x || other.apply(&self.apply(&x)?)? != x {
                return Err(MorphismError::NotInverse { generator: i });
            }
        }
        Ok(())
    }

    /// The `xi -> <word>` text format, one line per generator.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (i, img) in self.images.iter().enumerate() {
            s.push_str(&format!("x{} -> {}\n", i + 1, img));
        }
        s
    }

    /// Parses the `xi -> <word>` text format. Blank lines and `#` comments are
    /// skipped; every generator `x1..xn` must appear exactly once.
    pub fn parse_text(text: &str) -> Result<Endomorphism, MorphismError> {
        let mut entries: Vec<(usize, usize, &str)> = Vec::new();
        for (ln, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (lhs, rhs) = line.split_once("->").ok_or_else(|| MorphismError::Parse {
                line: ln + 1,
                msg: "expected `xi -> <word>`".into(),
            })?;
            let lhs = lhs.trim();
            let idx = lhs
                .strip_prefix('x')
                .and_then(|d| d.parse::<usize>().ok())
                .filter(|&i| i >= 1)
                .ok_or_else(|| MorphismError::Parse {
                    line: ln + 1,
                    msg: format!("bad generator `{lhs}`"),
                })?;
            entries.push((ln + 1, idx, rhs));
        }
        let rank = entries.len();
        if rank == 0 {
            return Err(MorphismError::Empty);
        }
        let mut images: Vec<Option<Word>> = vec![None; rank];
        for (line, idx, rhs) in entries {
            if idx > rank || images[idx - 1].is_some() {
                return Err(MorphismError::Parse {
                    line,
                    msg: format!("generator x{idx} duplicated or outside x1..x{rank}"),
                });
            }
            let w = parse_word(rhs, rank).map_err(|e| MorphismError::Parse {
                line,
                msg: e.to_string(),
            })?;
            images[idx - 1] = Some(w);
        }
        Endomorphism::new(images.into_iter().map(|w| w.expect("all filled")).collect())
    }
}

impl fmt::Display for Endomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .images
            .iter()
            .enumerate()
            .map(|(i, w)| format!("x{} -> {}", i + 1, w))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// An endomorphism together with a verified two-sided inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automorphism {
    forward: Endomorphism,
    inverse: Endomorphism,
}

impl Automorphism {
    pub fn new(forward: Endomorphism, inverse: Endomorphism) -> Result<Self, MorphismError> {
        forward.check_two_sided_inverse(&inverse)?;
        Ok(Automorphism { forward, inverse })
    }

    /// Skips the inverse check; for callers that construct both sides by an
    /// argument that already guarantees it. Debug builds still check.
    pub(crate) fn new_unchecked(forward: Endomorphism, inverse: Endomorphism) -> Self {
        debug_assert!(forward.check_two_sided_inverse(&inverse).is_ok());
        Automorphism { forward, inverse }
    }

    pub fn identity(rank: usize) -> Self {
        let id = Endomorphism::identity(rank);
        Automorphism {
            forward: id.clone(),
            inverse: id,
        }
    }

    /// Conjugation `x -> c x c^-1`.
    pub fn inner(c: &Word) -> Self {
        Automorphism {
            forward: Endomorphism::inner(c),
            inverse: Endomorphism::inner(&c.invert()),
        }
    }

    /// Signed permutation of generators (0-based `perm`).
    pub fn signed_permutation(perm: &[usize], signs: &[bool]) -> Self {
        let forward = Endomorphism::signed_permutation(perm, signs);
        let rank = perm.len();
        let mut inv_perm = vec![0; rank];
        let mut inv_signs = vec![false; rank];
        for (i, (&p, &s)) in perm.iter().zip(signs).enumerate() {
            inv_perm[p] = i;
            inv_signs[p] = s;
        }
        let inverse = Endomorphism::signed_permutation(&inv_perm, &inv_signs);
        Automorphism::new_unchecked(forward, inverse)
    }

    pub fn forward(&self) -> &Endomorphism {
        &self.forward
    }

    pub fn inverse_map(&self) -> &Endomorphism {
        &self.inverse
    }

    pub fn rank(&self) -> usize {
        self.forward.rank()
    }

    pub fn apply(&self, w: &Word) -> Result<Word, MorphismError> {
        self.forward.apply(w)
    }

    pub fn inverse(&self) -> Automorphism {
        Automorphism {
            forward: self.inverse.clone(),
            inverse: self.forward.clone(),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Automorphism) -> Result<Automorphism, MorphismError> {
        Ok(Automorphism {
            forward: self.forward.compose(&other.forward)?,
            inverse: other.inverse.compose(&self.inverse)?,
        })
    }

    /// Extends to a larger rank, fixing the new generators.
    pub fn extend(&self, new_rank: usize) -> Result<Automorphism, MorphismError> {
        Ok(Automorphism {
            forward: self.forward.extend_fixing(new_rank)?,
            inverse: self.inverse.extend_fixing(new_rank)?,
        })
    }
}

/// The explicit automorphism families used as inversion witnesses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// `x_i -> x_i^-1` for every generator; inverts palindromes.
    InvertAll,
    /// `x1 -> x2^-1, x2 -> x1^-1`.
    SwapInvert,
    /// `x1 -> x2, x2 -> x1`.
    Swap,
    /// `x1 -> x2^-m2 x1^-1 x2^m2, x2 -> x2^-1`; inverts `x1^m1 x2^m2`.
    TwoBlock,
    /// `x1 -> x1^-1, x2 -> x1^m x2^-1 x1^-m`; inverts `x1^m x2^e x1^n x2^e`.
    FourBlockSame,
    /// `x1 -> x1^-1, x2 -> x1^m x2 x1^-m`; inverts `x1^m x2^e x1^n x2^-e`.
    FourBlockOpposite,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::InvertAll,
        Family::SwapInvert,
        Family::Swap,
        Family::TwoBlock,
        Family::FourBlockSame,
        Family::FourBlockOpposite,
    ];

    pub fn param_count(self) -> usize {
        match self {
            Family::InvertAll | Family::SwapInvert | Family::Swap => 0,
            Family::TwoBlock => 2,
            Family::FourBlockSame | Family::FourBlockOpposite => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for Family {
    type Err = MorphismError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| MorphismError::UnknownFamily(s.to_string()))
    }
}

/// Builds a named automorphism in `F_rank`; generators beyond `x2` are fixed
/// (except by [`Family::InvertAll`], which inverts all of them).
pub fn named_family(
    family: Family,
    params: &[i64],
    rank: usize,
) -> Result<Automorphism, MorphismError> {
    if params.len() != family.param_count() {
        return Err(MorphismError::WrongParams {
            family,
            expected: family.param_count(),
            got: params.len(),
        });
    }
    if family == Family::InvertAll {
        return Ok(Automorphism::signed_permutation(
            &(0..rank).collect::<Vec<_>>(),
            &vec![true; rank],
        ));
    }
    if rank < 2 {
        return Err(MorphismError::FamilyRank { family });
    }
    let two = |images: [Vec<(usize, i64)>; 2]| -> Result<Endomorphism, MorphismError> {
        let [a, b] = images;
        Endomorphism::new(vec![
            Word::from_syllables(a, 2)?,
            Word::from_syllables(b, 2)?,
        ])
    };
    // Every rank-2 map below is an involution.
    let map = match family {
        Family::InvertAll => unreachable!(),
        Family::SwapInvert => two([vec![(2, -1)], vec![(1, -1)]])?,
        Family::Swap => two([vec![(2, 1)], vec![(1, 1)]])?,
        Family::TwoBlock => {
            let m2 = params[1];
            two([vec![(2, -m2), (1, -1), (2, m2)], vec![(2, -1)]])?
        }
        Family::FourBlockSame => {
            let m = params[0];
            two([vec![(1, -1)], vec![(1, m), (2, -1), (1, -m)]])?
        }
        Family::FourBlockOpposite => {
            let m = params[0];
            two([vec![(1, -1)], vec![(1, m), (2, 1), (1, -m)]])?
        }
    };
    let aut = Automorphism::new(map.clone(), map)?;
    aut.extend(rank)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CertificateKind {
    EndomorphismWitness,
    AutomorphismWitness,
}

/// Why a certificate did not verify.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateFailure {
    #[error("rank mismatch between word ({word}) and map ({map})")]
    RankMismatch { word: usize, map: usize },
    #[error("map sends the word to {image}, not its inverse")]
    NotInverted { image: Word },
    #[error("automorphism witness has no inverse map")]
    MissingInverse,
    #[error("claimed inverse fails on x{generator}")]
    InverseFails { generator: usize },
}

/// A claim `endo(word) = word^-1`, optionally with a two-sided inverse
/// proving `endo` is an automorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InversionCertificate {
    pub word: Word,
    pub endo: Endomorphism,
    pub kind: CertificateKind,
    pub aut_proof: Option<Endomorphism>,
}

impl InversionCertificate {
    pub fn endomorphism(word: Word, endo: Endomorphism) -> Self {
        InversionCertificate {
            word,
            endo,
            kind: CertificateKind::EndomorphismWitness,
            aut_proof: None,
        }
    }

    pub fn automorphism(word: Word, aut: &Automorphism) -> Self {
        InversionCertificate {
            word,
            endo: aut.forward.clone(),
            kind: CertificateKind::AutomorphismWitness,
            aut_proof: Some(aut.inverse.clone()),
        }
    }

    pub fn verify(&self) -> Result<(), CertificateFailure> {
        if self.word.rank() != self.endo.rank() {
            return Err(CertificateFailure::RankMismatch {
                word: self.word.rank(),
                map: self.endo.rank(),
            });
        }
        let image = self.endo.apply(&self.word).expect("ranks checked");
        if image != self.word.invert() {
            return Err(CertificateFailure::NotInverted { image });
        }
        if self.kind == CertificateKind::AutomorphismWitness {
            let inv = self
                .aut_proof
                .as_ref()
                .ok_or(CertificateFailure::MissingInverse)?;
            if inv.rank() != self.endo.rank() {
                return Err(CertificateFailure::InverseFails { generator: 1 });
            }
            self.endo
                .check_two_sided_inverse(inv)
                .map_err(|e| match e {
                    MorphismError::NotInverse { generator } => {
                        CertificateFailure::InverseFails { generator }
                    }
                    _ => CertificateFailure::InverseFails { generator: 1 },
                })?;
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.verify().is_ok()
    }

    fn automorphism_part(&self) -> Option<Automorphism> {
        match (self.kind, &self.aut_proof) {
            (CertificateKind::AutomorphismWitness, Some(inv)) => {
                Some(Automorphism::new_unchecked(self.endo.clone(), inv.clone()))
            }
            _ => None,
        }
    }

    /// Same map, certifying `word^k`.
    pub fn power(&self, k: i64) -> Result<InversionCertificate, MorphismError> {
        if k == 0 {
            return Err(MorphismError::ZeroPower);
        }
        if k == 1 {
            return Ok(self.clone());
        }
        Ok(InversionCertificate {
            word: self.word.pow(k),
            ..self.clone()
        })
    }

    /// Transports the certificate along `sigma`: the result certifies
    /// `sigma(word)` with the map `sigma ∘ endo ∘ sigma^-1`.
    pub fn conjugate(&self, sigma: &Automorphism) -> Result<InversionCertificate, MorphismError> {
        let word = sigma.apply(&self.word)?;
        match self.automorphism_part() {
            Some(phi) => {
                let aut = sigma.compose(&phi)?.compose(&sigma.inverse())?;
                Ok(InversionCertificate::automorphism(word, &aut))
            }
            None => {
                let endo = sigma.forward.compose(&self.endo)?.compose(&sigma.inverse)?;
                Ok(InversionCertificate::endomorphism(word, endo))
            }
        }
    }

    /// If this certifies `root^k`, the same map certifies `root`: roots are
    /// unique in a free group, so `φ(root)^k = root^-k` forces
    /// `φ(root) = root^-1`.
    pub fn for_root(&self, root: &Word) -> Option<InversionCertificate> {
        let cert = InversionCertificate {
            word: root.clone(),
            ..self.clone()
        };
        cert.is_valid().then_some(cert)
    }

    /// Lifts to `F_new_rank` for the embedded word. Automorphism witnesses fix
    /// the new generators; endomorphism witnesses send them to `e`.
    pub fn extend(&self, new_rank: usize) -> Result<InversionCertificate, MorphismError> {
        let word = self.word.embed(new_rank)?;
        match self.automorphism_part() {
            Some(phi) => Ok(InversionCertificate::automorphism(
                word,
                &phi.extend(new_rank)?,
            )),
            None => Ok(InversionCertificate::endomorphism(
                word,
                self.endo.extend(new_rank)?,
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        parse_word(s, 2).unwrap()
    }

    fn fam(f: Family, p: &[i64]) -> Automorphism {
        named_family(f, p, 2).unwrap()
    }

    #[test]
    fn apply_examples() {
        let f = fam(Family::InvertAll, &[]);
        let pal = w("x1 x2 x1");
        assert_eq!(f.apply(&pal).unwrap(), w("x1^-1 x2^-1 x1^-1"));
        assert_eq!(f.apply(&pal).unwrap(), pal.invert());

        let g = fam(Family::SwapInvert, &[]);
        assert_eq!(g.apply(&w("x1 x2")).unwrap(), w("x2^-1 x1^-1"));

        let two = fam(Family::TwoBlock, &[2, 3]);
        assert_eq!(two.apply(&w("x1^2 x2^3")).unwrap(), w("x2^-3 x1^-2"));
    }

    #[test]
    fn block_families_invert_their_words_for_all_small_exponents() {
        let nz = |r: i64| (-r..=r).filter(|&k| k != 0);
        for m in nz(4) {
            for n in nz(4) {
                let two = fam(Family::TwoBlock, &[m, n]);
                let word = Word::from_syllables([(1, m), (2, n)], 2).unwrap();
                assert!(InversionCertificate::automorphism(word, &two).is_valid());
                for e in nz(3) {
                    for (family, e2) in
                        [(Family::FourBlockSame, e), (Family::FourBlockOpposite, -e)]
                    {
                        let word =
                            Word::from_syllables([(1, m), (2, e), (1, n), (2, e2)], 2).unwrap();
                        let cert = InversionCertificate::automorphism(word, &fam(family, &[m]));
                        assert!(cert.is_valid(), "{family} m={m} n={n} e={e}");
                    }
                }
            }
        }
    }

    #[test]
    fn apply_rank_mismatch() {
        let id = Endomorphism::identity(3);
        assert!(matches!(
            id.apply(&w("x1")),
            Err(MorphismError::RankMismatch { left: 3, right: 2 })
        ));
    }

    #[test]
    fn compose_examples() {
        let g = fam(Family::SwapInvert, &[]);
        let id = Endomorphism::identity(2);
        assert_eq!(id.compose(g.forward()).unwrap(), *g.forward());

        let f = fam(Family::InvertAll, &[]);
        assert!(f.forward().compose(f.forward()).unwrap().is_identity());

        // h(g(x1)) = h(x2^-1) = x1^-1 ; h(g(x2)) = h(x1^-1) = x2^-1
        let h = fam(Family::Swap, &[]);
        let hg = h.forward().compose(g.forward()).unwrap();
        assert_eq!(hg, Endomorphism::from_strs(&["x1^-1", "x2^-1"]).unwrap());
    }

    #[test]
    fn named_family_examples() {
        let f = fam(Family::InvertAll, &[]);
        assert_eq!(
            *f.forward(),
            Endomorphism::from_strs(&["x1^-1", "x2^-1"]).unwrap()
        );
        assert_eq!(f.forward(), f.inverse_map());

        let four = fam(Family::FourBlockSame, &[1]);
        let word = w("x1 x2 x1 x2");
        assert!(InversionCertificate::automorphism(word, &four).is_valid());

        let h = fam(Family::Swap, &[]);
        let comm = w("x1 x2 x1^-1 x2^-1");
        assert_eq!(h.apply(&comm).unwrap(), w("x2 x1 x2^-1 x1^-1"));
        assert_eq!(h.apply(&comm).unwrap(), comm.invert());
    }

    #[test]
    fn named_family_errors() {
        assert!(matches!(
            named_family(Family::TwoBlock, &[1], 2),
            Err(MorphismError::WrongParams {
                expected: 2,
                got: 1,
                ..
            })
        ));
        assert!(matches!(
            named_family(Family::Swap, &[], 1),
            Err(MorphismError::FamilyRank { .. })
        ));
        assert!(matches!(
            "nope".parse::<Family>(),
            Err(MorphismError::UnknownFamily(_))
        ));
        assert_eq!(
            "fourblocksame".parse::<Family>().unwrap(),
            Family::FourBlockSame
        );
    }

    #[test]
    fn verify_examples() {
        let f = fam(Family::InvertAll, &[]);
        assert!(InversionCertificate::automorphism(w("x1 x2 x1"), &f).is_valid());
        let bad = InversionCertificate::automorphism(w("x1 x2"), &f);
        assert_eq!(
            bad.verify(),
            Err(CertificateFailure::NotInverted {
                image: w("x1^-1 x2^-1")
            })
        );
        let two = fam(Family::TwoBlock, &[2, 3]);
        assert!(InversionCertificate::automorphism(w("x1^2 x2^3"), &two).is_valid());
    }

    #[test]
    fn verify_rejects_bogus_inverse() {
        let h = fam(Family::Swap, &[]);
        let mut cert = InversionCertificate::automorphism(w("x1 x2 x1^-1 x2^-1"), &h);
        cert.aut_proof = Some(Endomorphism::identity(2));
        assert!(matches!(
            cert.verify(),
            Err(CertificateFailure::InverseFails { .. })
        ));
        cert.aut_proof = None;
        assert_eq!(cert.verify(), Err(CertificateFailure::MissingInverse));
    }

    #[test]
    fn extend_examples() {
        let f = fam(Family::InvertAll, &[]);
        let ext = f.forward().extend(3).unwrap();
        assert!(ext.image(3).is_identity());
        let pal = parse_word("x1 x2 x1", 3).unwrap();
        assert_eq!(ext.apply(&pal).unwrap(), pal.invert());

        let id = Endomorphism::identity(2).extend(3).unwrap();
        let u = parse_word("x1 x3 x2", 3).unwrap();
        assert_eq!(id.apply(&u).unwrap(), parse_word("x1 x2", 3).unwrap());

        let two = fam(Family::TwoBlock, &[1, 1]).forward().extend(4).unwrap();
        let u = parse_word("x1 x2", 4).unwrap();
        assert_eq!(two.apply(&u).unwrap(), u.invert());

        assert!(matches!(
            Endomorphism::identity(3).extend(2),
            Err(MorphismError::RankTooSmall { .. })
        ));
    }

    #[test]
    fn power_certificates() {
        let h = fam(Family::Swap, &[]);
        let c = InversionCertificate::automorphism(w("x1 x2 x1^-1 x2^-1"), &h);
        let c2 = c.power(2).unwrap();
        assert_eq!(c2.word, w("x1 x2 x1^-1 x2^-1").pow(2));
        assert!(c2.is_valid());
        assert_eq!(c.power(1).unwrap(), c);
        assert!(matches!(c.power(0), Err(MorphismError::ZeroPower)));

        let g = fam(Family::SwapInvert, &[]);
        let c3 = InversionCertificate::automorphism(w("x1 x2"), &g)
            .power(3)
            .unwrap();
        assert_eq!(c3.word, w("x1 x2 x1 x2 x1 x2"));
        assert!(c3.is_valid());
    }

    #[test]
    fn text_format_round_trip() {
        let e = fam(Family::TwoBlock, &[2, -3]).forward().clone();
        let text = e.to_text();
        assert_eq!(Endomorphism::parse_text(&text).unwrap(), e);
        let with_identity = Endomorphism::parse_text("x2 -> 1\n# comment\nx1 -> x1 x2\n").unwrap();
        assert!(with_identity.image(2).is_identity());
        assert!(matches!(
            Endomorphism::parse_text("x1 -> x1\nx1 -> x2\n"),
            Err(MorphismError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Endomorphism::parse_text("x1 => x1\n"),
            Err(MorphismError::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn automorphism_inverse_checked() {
        let f = Endomorphism::from_strs(&["x1 x2", "x2"]).unwrap();
        let finv = Endomorphism::from_strs(&["x1 x2^-1", "x2"]).unwrap();
        assert!(Automorphism::new(f.clone(), finv).is_ok());
        assert!(matches!(
            Automorphism::new(f.clone(), f),
            Err(MorphismError::NotInverse { .. })
        ));
    }
}
