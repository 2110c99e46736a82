//! Reduced words in free groups of finite rank.
//!
//! A [`Word`] is stored as a freely reduced sequence of signed generator
//! indices: `+i` is `x_i` and `-i` is `x_i^-1`. Every constructor reduces, so
//! any `Word` value is in normal form and structural equality is equality in
//! the free group.

use std::fmt;
use std::ops::{Add, Neg};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors produced while building or parsing words.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("rank must be positive")]
    ZeroRank,
    #[error("letter {letter} is out of range for rank {rank}")]
    LetterOutOfRange { letter: i64, rank: usize },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("cannot change rank {from} to {to}: generator x{max} would be lost")]
    RankTooSmall { from: usize, to: usize, max: usize },
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
}

/// A generator or inverse generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Letter(i32);

impl Letter {
    pub fn new(value: i32) -> Option<Self> {
        (value != 0).then_some(Letter(value))
    }

    /// `x_index`, 1-based.
    pub fn generator(index: usize) -> Self {
        assert!(index >= 1, "generator indices are 1-based");
        Letter(index as i32)
    }

    pub fn value(self) -> i32 {
        self.0
    }

    /// 1-based generator index, ignoring the sign.
    pub fn index(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn is_inverse(self) -> bool {
        self.0 < 0
    }

    pub fn sign(self) -> i64 {
        if self.0 < 0 {
            -1
        } else {
            1
        }
    }

    pub fn inverse(self) -> Self {
        Letter(-self.0)
    }

    /// Position in the order `x1 < x1^-1 < x2 < x2^-1 < ...`, starting at 0.
    pub fn slot(self) -> usize {
        2 * (self.index() - 1) + usize::from(self.is_inverse())
    }

    pub fn from_slot(slot: usize) -> Self {
        let g = (slot / 2 + 1) as i32;
        if slot.is_multiple_of(2) {
            Letter(g)
        } else {
            Letter(-g)
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_inverse() {
            write!(f, "x{}^-1", self.index())
        } else {
            write!(f, "x{}", self.index())
        }
    }
}

/// Signed exponent sums, one entry per generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(pub Vec<i64>);

impl ExponentVector {
    pub fn zero(rank: usize) -> Self {
        ExponentVector(vec![0; rank])
    }

    pub fn sums(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Nonnegative gcd of all entries; `gcd(0, ..., 0) = 0`.
    pub fn gcd(&self) -> u64 {
        self.0
            .iter()
            .fold(0u64, |acc, &e| crate::numeric::gcd(acc, e.unsigned_abs()))
    }
}

impl Add for &ExponentVector {
    type Output = ExponentVector;

    fn add(self, rhs: &ExponentVector) -> ExponentVector {
        assert_eq!(self.0.len(), rhs.0.len());
        ExponentVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Neg for &ExponentVector {
    type Output = ExponentVector;

    fn neg(self) -> ExponentVector {
        ExponentVector(self.0.iter().map(|e| -e).collect())
    }
}

/// A maximal block `x_gen^exp` of a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Syllable {
    pub generator: usize,
    pub exponent: i64,
}

/// A freely reduced word of `F_rank`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    rank: usize,
    letters: Vec<Letter>,
}

/// Pushes `letter` onto an already reduced buffer, cancelling if needed.
#[inline]
pub(crate) fn push_reduced(buf: &mut Vec<Letter>, letter: Letter) {
    if buf.last() == Some(&letter.inverse()) {
        buf.pop();
    } else {
        buf.push(letter);
    }
}

fn check_rank(rank: usize) -> Result<(), WordError> {
    if rank == 0 {
        Err(WordError::ZeroRank)
    } else {
        Ok(())
    }
}

impl Word {
    /// The identity word `e` of `F_rank`.
    pub fn identity(rank: usize) -> Self {
        assert!(rank >= 1, "rank must be positive");
        Word {
            rank,
            letters: Vec::new(),
        }
    }

    /// Freely reduces a raw letter sequence.
    pub fn reduce<I>(raw: I, rank: usize) -> Result<Self, WordError>
    where
        I: IntoIterator<Item = i32>,
    {
        check_rank(rank)?;
        let mut buf = Vec::new();
        for v in raw {
            if v == 0 || v.unsigned_abs() as usize > rank {
                return Err(WordError::LetterOutOfRange {
                    letter: v as i64,
                    rank,
                });
            }
            push_reduced(&mut buf, Letter(v));
        }
        Ok(Word { rank, letters: buf })
    }

    pub fn from_letters<I>(letters: I, rank: usize) -> Result<Self, WordError>
    where
        I: IntoIterator<Item = Letter>,
    {
        Self::reduce(letters.into_iter().map(Letter::value), rank)
    }

    /// Builds `x_{g1}^{e1} x_{g2}^{e2} ...` from `(generator, exponent)` pairs.
    pub fn from_syllables<I>(syllables: I, rank: usize) -> Result<Self, WordError>
    where
        I: IntoIterator<Item = (usize, i64)>,
    {
        check_rank(rank)?;
        let mut buf = Vec::new();
        for (g, e) in syllables {
            if g == 0 || g > rank {
                return Err(WordError::LetterOutOfRange {
                    letter: g as i64,
                    rank,
                });
            }
            let letter = if e < 0 {
                Letter(-(g as i32))
            } else {
                Letter(g as i32)
            };
            for _ in 0..e.unsigned_abs() {
                push_reduced(&mut buf, letter);
            }
        }
        Ok(Word { rank, letters: buf })
    }

    /// The single-letter word `x_index`.
    pub fn generator(index: usize, rank: usize) -> Result<Self, WordError> {
        Self::reduce([index as i32], rank)
    }

    /// Internal constructor for sequences already known to be reduced.
    pub(crate) fn from_reduced_unchecked(letters: Vec<Letter>, rank: usize) -> Self {
        debug_assert!(letters.windows(2).all(|p| p[0] != p[1].inverse()));
        Word { rank, letters }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Length `ℓ(w)`: the number of letters of the reduced form.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Result<Word, WordError> {
        if self.rank != other.rank {
            return Err(WordError::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        let mut buf = Vec::with_capacity(self.len() + other.len());
        buf.extend_from_slice(&self.letters);
        for &l in &other.letters {
            push_reduced(&mut buf, l);
        }
        Ok(Word {
            rank: self.rank,
            letters: buf,
        })
    }

    pub fn invert(&self) -> Word {
        Word {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// `w^k` for any integer `k`.
    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let mut buf = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            for &l in &base.letters {
                push_reduced(&mut buf, l);
            }
        }
        Word {
            rank: self.rank,
            letters: buf,
        }
    }

    /// The commutator `[u, v] = u v u^-1 v^-1`.
    pub fn commutator(u: &Word, v: &Word) -> Result<Word, WordError> {
        u.concat(v)?.concat(&u.invert())?.concat(&v.invert())
    }

    /// The conjugate `c w c^-1`.
    pub fn conjugate_by(&self, c: &Word) -> Result<Word, WordError> {
        c.concat(self)?.concat(&c.invert())
    }

    pub fn exponent_vector(&self) -> ExponentVector {
        let mut sums = vec![0i64; self.rank];
        for l in &self.letters {
            sums[l.index() - 1] += l.sign();
        }
        ExponentVector(sums)
    }

    /// True when the letter sequence reads the same backwards.
    pub fn is_palindrome(&self) -> bool {
        self.letters.iter().eq(self.letters.iter().rev())
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.letters.first(), self.letters.last()) {
            (Some(&a), Some(&b)) => self.letters.len() == 1 || a != b.inverse(),
            _ => true,
        }
    }

    /// Splits `w = c · core · c^-1` with `core` cyclically reduced.
    /// Returns `(core, c)`.
    pub fn cyclic_reduce(&self) -> (Word, Word) {
        let n = self.letters.len();
        let mut k = 0;
        while 2 * k + 1 < n && self.letters[k] == self.letters[n - 1 - k].inverse() {
            k += 1;
        }
        let core = Word::from_reduced_unchecked(self.letters[k..n - k].to_vec(), self.rank);
        let conj = Word::from_reduced_unchecked(self.letters[..k].to_vec(), self.rank);
        (core, conj)
    }

    /// Same letters viewed in `F_new_rank`, `new_rank >= rank`.
    pub fn embed(&self, new_rank: usize) -> Result<Word, WordError> {
        if new_rank < self.rank {
            return Err(WordError::RankTooSmall {
                from: self.rank,
                to: new_rank,
                max: self.rank,
            });
        }
        Ok(Word {
            rank: new_rank,
            letters: self.letters.clone(),
        })
    }

    /// Changes the ambient rank in either direction, provided every letter fits.
    pub fn with_rank(&self, new_rank: usize) -> Result<Word, WordError> {
        check_rank(new_rank)?;
        let max = self.max_generator();
        if max > new_rank {
            return Err(WordError::RankTooSmall {
                from: self.rank,
                to: new_rank,
                max,
            });
        }
        Ok(Word {
            rank: new_rank,
            letters: self.letters.clone(),
        })
    }

    /// Largest generator index that occurs (0 for `e`).
    pub fn max_generator(&self) -> usize {
        self.letters.iter().map(|l| l.index()).max().unwrap_or(0)
    }

    /// Sorted list of generator indices that occur in the word.
    pub fn support(&self) -> Vec<usize> {
        let mut seen = vec![false; self.rank + 1];
        for l in &self.letters {
            seen[l.index()] = true;
        }
        (1..=self.rank).filter(|&i| seen[i]).collect()
    }

    pub fn syllables(&self) -> Vec<Syllable> {
        let mut out: Vec<Syllable> = Vec::new();
        for l in &self.letters {
            match out.last_mut() {
                Some(s) if s.generator == l.index() => s.exponent += l.sign(),
                _ => out.push(Syllable {
                    generator: l.index(),
                    exponent: l.sign(),
                }),
            }
        }
        out
    }

    /// Rotation starting at letter `i` (only meaningful for cyclic words).
    pub fn rotate(&self, i: usize) -> Word {
        let n = self.letters.len();
        if n == 0 {
            return self.clone();
        }
        let i = i % n;
        let mut letters = Vec::with_capacity(n);
        letters.extend_from_slice(&self.letters[i..]);
        letters.extend_from_slice(&self.letters[..i]);
        Word::reduce(letters.into_iter().map(Letter::value), self.rank)
            .expect("rotation keeps letters in range")
    }

    /// Parses either syntax; see [`crate::word::parse`].
    pub fn parse(text: &str, rank: usize) -> Result<Word, WordError> {
        parse(text, rank)
    }

    /// Compact form (`a..z`, capitals for inverses); `None` above rank 26.
    pub fn to_compact(&self) -> Option<String> {
        if self.rank > 26 {
            return None;
        }
        Some(
            self.letters
                .iter()
                .map(|l| {
                    let c = (b'a' + (l.index() - 1) as u8) as char;
                    if l.is_inverse() {
                        c.to_ascii_uppercase()
                    } else {
                        c
                    }
                })
                .collect(),
        )
    }
}

/// Serializes as the indexed text form.
impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Indexed form, e.g. `x1^2 x2^-1`; the identity prints as `1`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("1");
        }
        for (i, s) in self.syllables().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if s.exponent == 1 {
                write!(f, "x{}", s.generator)?;
            } else {
                write!(f, "x{}^{}", s.generator, s.exponent)?;
            }
        }
        Ok(())
    }
}

fn is_compact(text: &str) -> bool {
    !text.is_empty() && text.chars().all(|c| c.is_ascii_alphabetic())
}

/// Parses a word in indexed (`x1^2 x2^-1`) or compact (`aaB`) syntax.
///
/// A lone `1` denotes the identity, as does the empty string.
pub fn parse(text: &str, rank: usize) -> Result<Word, WordError> {
    check_rank(rank)?;
    let trimmed = text.trim();
    let offset = text.len() - text.trim_start().len();
    if trimmed == "1" {
        return Ok(Word::identity(rank));
    }
    if is_compact(trimmed) {
        let mut raw = Vec::with_capacity(trimmed.len());
        for (i, c) in trimmed.char_indices() {
            let g = (c.to_ascii_lowercase() as u8 - b'a') as i32 + 1;
            if g as usize > rank {
                return Err(WordError::Syntax {
                    pos: offset + i,
                    msg: format!("generator {c} (x{g}) exceeds rank {rank}"),
                });
            }
            raw.push(if c.is_ascii_uppercase() { -g } else { g });
        }
        return Word::reduce(raw, rank);
    }
    let syllables = parse_indexed(text)?;
    for &(pos, g, _) in &syllables {
        if g > rank {
            return Err(WordError::Syntax {
                pos,
                msg: format!("generator x{g} exceeds rank {rank}"),
            });
        }
    }
    Word::from_syllables(syllables.into_iter().map(|(_, g, e)| (g, e)), rank)
}

/// Parses and sets the rank to the largest generator index present (at least 1).
pub fn parse_infer(text: &str) -> Result<Word, WordError> {
    let trimmed = text.trim();
    let rank = if trimmed == "1" || trimmed.is_empty() {
        1
    } else if is_compact(trimmed) {
        trimmed
            .chars()
            .map(|c| (c.to_ascii_lowercase() as u8 - b'a') as usize + 1)
            .max()
            .unwrap_or(1)
    } else {
        parse_indexed(text)?
            .iter()
            .map(|&(_, g, _)| g)
            .max()
            .unwrap_or(1)
    };
    parse(text, rank)
}

fn parse_indexed(text: &str) -> Result<Vec<(usize, usize, i64)>, WordError> {
    let bytes = text.as_bytes();
    let mut i = 0;
    let mut out = Vec::new();
    let err = |pos: usize, msg: &str| WordError::Syntax {
        pos,
        msg: msg.to_string(),
    };
    let digits = |i: &mut usize| -> Option<(usize, u64)> {
        let start = *i;
        if *i >= bytes.len() || !(b'1'..=b'9').contains(&bytes[*i]) {
            return None;
        }
        while *i < bytes.len() && bytes[*i].is_ascii_digit() {
            *i += 1;
        }
        text[start..*i].parse().ok().map(|v| (start, v))
    };
    loop {
        while i < bytes.len() && bytes[i].is_ascii_whitespace() {
            i += 1;
        }
        if i >= bytes.len() {
            break;
        }
        let term_start = i;
        if bytes[i] != b'x' {
            return Err(err(i, "expected generator `x<index>`"));
        }
        i += 1;
        let (_, g) = digits(&mut i).ok_or_else(|| err(i, "expected generator index 1, 2, ..."))?;
        let mut e: i64 = 1;
        let mut j = i;
        while j < bytes.len() && bytes[j].is_ascii_whitespace() {
            j += 1;
        }
        if j < bytes.len() && bytes[j] == b'^' {
            i = j + 1;
            while i < bytes.len() && bytes[i].is_ascii_whitespace() {
                i += 1;
            }
            let neg = i < bytes.len() && bytes[i] == b'-';
            if neg {
                i += 1;
            }
            let (_, v) = digits(&mut i).ok_or_else(|| err(i, "expected nonzero exponent"))?;
            let v = i64::try_from(v).map_err(|_| err(i, "exponent too large"))?;
            e = if neg { -v } else { v };
        }
        let g = usize::try_from(g).map_err(|_| err(term_start, "index too large"))?;
        if g > i32::MAX as usize {
            return Err(err(term_start, "index too large"));
        }
        out.push((term_start, g, e));
    }
    Ok(out)
}

/// All reduced words of the given length in `F_rank`, in lexicographic order of
/// letter slots.
pub fn enumerate_reduced(rank: usize, length: usize) -> Vec<Word> {
    let alphabet: Vec<Letter> = (0..2 * rank).map(Letter::from_slot).collect();
    let mut out = Vec::new();
    let mut stack: Vec<Letter> = Vec::with_capacity(length);
    fn go(
        alphabet: &[Letter],
        rank: usize,
        length: usize,
        stack: &mut Vec<Letter>,
        out: &mut Vec<Word>,
    ) {
        if stack.len() == length {
            out.push(Word::from_reduced_unchecked(stack.clone(), rank));
            return;
        }
        for &l in alphabet {
            if stack.last() == Some(&l.inverse()) {
                continue;
            }
            stack.push(l);
            go(alphabet, rank, length, stack, out);
            stack.pop();
        }
    }
    go(&alphabet, rank, length, &mut stack, &mut out);
    out
}
