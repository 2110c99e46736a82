//! Whitehead's algorithm: are two words in the same `Aut(F_n)` orbit, and if
//! so, which automorphism witnesses it?
//!
//! The search works on cyclic words. Both inputs are first pushed down to
//! minimal cyclic length by greedy type II moves; peak reduction then
//! guarantees that two minimal words in one orbit are joined by a chain of
//! Whitehead moves that never leave the minimal length, so a breadth-first
//! search of that level graph is a complete decision procedure. Cyclic words
//! are hashed by their least rotation.
//!
//! Every positive answer is turned into an exact [`Automorphism`] (including
//! an inner automorphism that repairs the conjugacy representative) and
//! re-checked by applying it to the source word.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

use crate::morphism::{Automorphism, Endomorphism, MorphismError};
use crate::word::{push_reduced, Letter, Word};

/// Default node budget for [`orbit_equivalent`] and [`aut_inverts`].
pub const DEFAULT_BUDGET: usize = 1_000_000;

/// Largest rank for which move sets are enumerated.
pub const MAX_RANK: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WhiteheadError {
    #[error("rank must be positive")]
    ZeroRank,
    #[error("rank {0} exceeds the supported maximum {MAX_RANK}")]
    RankTooLarge(usize),
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("word is not cyclically reduced")]
    NotCyclicallyReduced,
    #[error("indeterminate: explored {nodes_explored} nodes, budget {budget} exhausted")]
    Indeterminate {
        nodes_explored: usize,
        budget: usize,
    },
    #[error("internal error: {0}")]
    Internal(String),
}

impl From<MorphismError> for WhiteheadError {
    fn from(e: MorphismError) -> Self {
        WhiteheadError::Internal(e.to_string())
    }
}

/// A Whitehead automorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum WhiteheadMove {
    /// Signed permutation: `x_i -> x_{perm[i]+1}^{-1 if inverted[i]}`.
    TypeI {
        perm: Vec<usize>,
        inverted: Vec<bool>,
    },
    /// Multiplier `a` and cut set `A` (bitmask over letter slots) with
    /// `a ∈ A`, `a^-1 ∉ A`.
    TypeII { multiplier: Letter, cut: u64 },
}

impl WhiteheadMove {
    pub fn type_ii(multiplier: Letter, cut_set: &[Letter]) -> Option<Self> {
        let cut = cut_set.iter().fold(0u64, |m, l| m | (1 << l.slot()));
        let has = |l: Letter| cut & (1 << l.slot()) != 0;
        (has(multiplier) && !has(multiplier.inverse()))
            .then_some(WhiteheadMove::TypeII { multiplier, cut })
    }

    pub fn cut_set(&self) -> Vec<Letter> {
        match self {
            WhiteheadMove::TypeI { .. } => Vec::new(),
            WhiteheadMove::TypeII { cut, .. } => (0..64)
                .filter(|s| cut & (1u64 << s) != 0)
                .map(Letter::from_slot)
                .collect(),
        }
    }

    /// True for moves that act as the identity on every generator.
    pub fn is_trivial(&self) -> bool {
        match self {
            WhiteheadMove::TypeI { perm, inverted } => {
                perm.iter().enumerate().all(|(i, &p)| p == i) && inverted.iter().all(|b| !b)
            }
            WhiteheadMove::TypeII { multiplier, cut } => *cut == 1 << multiplier.slot(),
        }
    }

    /// Image of `x_g` as a letter sequence.
    fn generator_image(&self, g: usize) -> Vec<Letter> {
        match self {
            WhiteheadMove::TypeI { perm, inverted } => {
                let l = Letter::generator(perm[g - 1] + 1);
                vec![if inverted[g - 1] { l.inverse() } else { l }]
            }
            WhiteheadMove::TypeII { multiplier: a, cut } => {
                let x = Letter::generator(g);
                if x.index() == a.index() {
                    return vec![x];
                }
                let has = |l: Letter| cut & (1 << l.slot()) != 0;
                let mut out = Vec::with_capacity(3);
                if has(x.inverse()) {
                    out.push(a.inverse());
                }
                out.push(x);
                if has(x) {
                    out.push(*a);
                }
                out
            }
        }
    }

    pub fn endomorphism(&self, rank: usize) -> Endomorphism {
        let images = (1..=rank)
            .map(|g| {
                Word::from_letters(self.generator_image(g), rank).expect("move stays within rank")
            })
            .collect();
        Endomorphism::new(images).expect("rank >= 1")
    }

    /// The move undoing this one.
    pub fn inverse(&self) -> WhiteheadMove {
        match self {
            WhiteheadMove::TypeI { perm, inverted } => {
                let n = perm.len();
                let mut p = vec![0; n];
                let mut s = vec![false; n];
                for i in 0..n {
                    p[perm[i]] = i;
                    s[perm[i]] = inverted[i];
                }
                WhiteheadMove::TypeI {
                    perm: p,
                    inverted: s,
                }
            }
            WhiteheadMove::TypeII { multiplier: a, cut } => WhiteheadMove::TypeII {
                multiplier: a.inverse(),
                cut: (cut & !(1 << a.slot())) | (1 << a.inverse().slot()),
            },
        }
    }

    /// The move as an automorphism, with the inverse move as its inverse.
    pub fn automorphism(&self, rank: usize) -> Automorphism {
        Automorphism::new_unchecked(self.endomorphism(rank), self.inverse().endomorphism(rank))
    }
}

impl fmt::Display for WhiteheadMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WhiteheadMove::TypeI { perm, inverted } => {
                let parts: Vec<String> = perm
                    .iter()
                    .zip(inverted)
                    .enumerate()
                    .map(|(i, (&p, &inv))| {
                        format!("x{}->x{}{}", i + 1, p + 1, if inv { "^-1" } else { "" })
                    })
                    .collect();
                write!(f, "I[{}]", parts.join(","))
            }
            WhiteheadMove::TypeII { multiplier, .. } => {
                let cut: Vec<String> = self.cut_set().iter().map(|l| l.to_string()).collect();
                write!(f, "II[a={}; A={{{}}}]", multiplier, cut.join(","))
            }
        }
    }
}

impl Serialize for WhiteheadMove {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn check_rank(rank: usize) -> Result<(), WhiteheadError> {
    match rank {
        0 => Err(WhiteheadError::ZeroRank),
        r if r > MAX_RANK => Err(WhiteheadError::RankTooLarge(r)),
        _ => Ok(()),
    }
}

/// All type I moves (identity first), then all type II descriptors grouped by
/// multiplier in slot order.
pub fn enumerate_moves(rank: usize) -> Result<Vec<WhiteheadMove>, WhiteheadError> {
    check_rank(rank)?;
    let mut moves = Vec::new();
    for perm in (0..rank).permutations(rank) {
        for signs in 0..(1u32 << rank) {
            moves.push(WhiteheadMove::TypeI {
                perm: perm.clone(),
                inverted: (0..rank).map(|i| signs & (1 << i) != 0).collect(),
            });
        }
    }
    let slots = 2 * rank;
    for a_slot in 0..slots {
        let a = Letter::from_slot(a_slot);
        let others: Vec<usize> = (0..slots)
            .filter(|&s| s != a_slot && s != a.inverse().slot())
            .collect();
        for bits in 0..(1u64 << others.len()) {
            let mut cut = 1u64 << a_slot;
            for (j, &s) in others.iter().enumerate() {
                if bits & (1 << j) != 0 {
                    cut |= 1 << s;
                }
            }
            moves.push(WhiteheadMove::TypeII { multiplier: a, cut });
        }
    }
    Ok(moves)
}

/// Moves with their letter images precomputed, indexed by slot.
struct MoveTable {
    moves: Vec<WhiteheadMove>,
    images: Vec<Vec<Vec<Letter>>>,
}

impl MoveTable {
    fn new(rank: usize, keep: impl Fn(&WhiteheadMove) -> bool) -> Result<Self, WhiteheadError> {
        let moves: Vec<_> = enumerate_moves(rank)?
            .into_iter()
            .filter(|m| !m.is_trivial() && keep(m))
            .collect();
        let images = moves
            .iter()
            .map(|m| {
                (0..2 * rank)
                    .map(|slot| {
                        let l = Letter::from_slot(slot);
                        let img = m.generator_image(l.index());
                        if l.is_inverse() {
                            img.iter().rev().map(|x| x.inverse()).collect()
                        } else {
                            img
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(MoveTable { moves, images })
    }

    /// Cyclically reduced image of a cyclically reduced word.
    fn apply_cyclic(&self, idx: usize, w: &[Letter]) -> Vec<Letter> {
        let table = &self.images[idx];
        let mut buf = Vec::with_capacity(w.len() + 4);
        for l in w {
            for &m in &table[l.slot()] {
                push_reduced(&mut buf, m);
            }
        }
        cyclic_core(buf)
    }
}

fn cyclic_core(mut buf: Vec<Letter>) -> Vec<Letter> {
    let n = buf.len();
    let mut k = 0;
    while 2 * k + 1 < n && buf[k] == buf[n - 1 - k].inverse() {
        k += 1;
    }
    if k > 0 {
        buf.truncate(n - k);
        buf.drain(..k);
    }
    buf
}

/// Least rotation under the slot order `x1 < x1^-1 < x2 < ...`.
pub fn canonical_rotation(w: &[Letter]) -> Vec<Letter> {
    let n = w.len();
    if n == 0 {
        return Vec::new();
    }
    let key = |i: usize| (0..n).map(move |j| w[(i + j) % n].slot());
    let best = (0..n)
        .min_by(|&a, &b| key(a).cmp(key(b)))
        .expect("nonempty");
    (0..n).map(|j| w[(best + j) % n]).collect()
}

fn slot_key(w: &[Letter]) -> Vec<u8> {
    w.iter().map(|l| l.slot() as u8).collect()
}

/// Applies a move to a cyclically reduced word and cyclically reduces the
/// image.
pub fn apply_move(m: &WhiteheadMove, w: &Word) -> Result<Word, WhiteheadError> {
    if !w.is_cyclically_reduced() {
        return Err(WhiteheadError::NotCyclicallyReduced);
    }
    let img = m.endomorphism(w.rank()).apply(w)?;
    Ok(img.cyclic_reduce().0)
}

/// Result of [`minimize`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Minimized {
    pub minimal: Word,
    pub trace: Vec<WhiteheadMove>,
}

/// Greedy length descent by type II moves. Among shortening moves the one
/// giving the shortest image wins, ties broken by least canonical rotation.
pub fn minimize(w: &Word) -> Result<Minimized, WhiteheadError> {
    let rank = w.rank();
    check_rank(rank)?;
    let table = MoveTable::new(rank, |m| matches!(m, WhiteheadMove::TypeII { .. }))?;
    let mut cur = w.cyclic_reduce().0.letters().to_vec();
    let mut trace = Vec::new();
    loop {
        let mut best: Option<(usize, Vec<u8>, usize, Vec<Letter>)> = None;
        for idx in 0..table.moves.len() {
            let img = table.apply_cyclic(idx, &cur);
            if img.len() >= cur.len() {
                continue;
            }
            let key = slot_key(&canonical_rotation(&img));
            let better = match &best {
                None => true,
                Some((len, k, _, _)) => (img.len(), &key) < (*len, k),
            };
            if better {
                best = Some((img.len(), key, idx, img));
            }
        }
        match best {
            Some((_, _, idx, img)) => {
                trace.push(table.moves[idx].clone());
                cur = img;
            }
            None => break,
        }
    }
    Ok(Minimized {
        minimal: Word::from_letters(cur, rank).expect("letters in range"),
        trace,
    })
}

/// Search statistics.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes_explored: usize,
    pub peak_frontier: usize,
    pub minimal_length: usize,
}

/// Outcome of an orbit query that finished within budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitSearchResult {
    pub found: bool,
    /// Maps the source word exactly onto the target when `found`.
    pub automorphism: Option<Automorphism>,
    /// Whitehead moves: minimization of the source, the level path, then the
    /// undone minimization of the target.
    pub move_trace: Vec<WhiteheadMove>,
    /// Inner automorphism `x -> c x c^-1` applied last to fix the conjugacy
    /// representative.
    pub conjugator: Option<Word>,
    pub stats: SearchStats,
}

fn chain(moves: &[WhiteheadMove], rank: usize) -> Result<Automorphism, WhiteheadError> {
    let mut acc = Automorphism::identity(rank);
    for m in moves {
        acc = m.automorphism(rank).compose(&acc)?;
    }
    Ok(acc)
}

/// Finds `y` with `y s y^-1 = v`, given that `s` and `v` are conjugate.
fn conjugator_between(s: &Word, v: &Word) -> Option<Word> {
    let (k1, c1) = s.cyclic_reduce();
    let (k2, c2) = v.cyclic_reduce();
    if k1.len() != k2.len() {
        return None;
    }
    let n = k1.len();
    let i = if n == 0 {
        0
    } else {
        (0..n).find(|&i| k1.rotate(i) == k2)?
    };
    let p = Word::from_letters(k1.letters()[..i].iter().copied(), s.rank()).ok()?;
    c2.concat(&p.invert()).ok()?.concat(&c1.invert()).ok()
}

/// Decides whether some automorphism maps `u` onto `v`. Returns
/// [`WhiteheadError::Indeterminate`] if the level search exceeds `budget`
/// nodes; `found == false` is always definitive.
pub fn orbit_equivalent(
    u: &Word,
    v: &Word,
    budget: usize,
) -> Result<OrbitSearchResult, WhiteheadError> {
    if u.rank() != v.rank() {
        return Err(WhiteheadError::RankMismatch {
            left: u.rank(),
            right: v.rank(),
        });
    }
    let rank = u.rank();
    check_rank(rank)?;
    if u == v {
        return Ok(OrbitSearchResult {
            found: true,
            automorphism: Some(Automorphism::identity(rank)),
            move_trace: Vec::new(),
            conjugator: None,
            stats: SearchStats {
                minimal_length: minimize(u)?.minimal.len(),
                ..SearchStats::default()
            },
        });
    }
    let mu = minimize(u)?;
    let mv = minimize(v)?;
    let mut stats = SearchStats {
        minimal_length: mu.minimal.len(),
        ..SearchStats::default()
    };
    if mu.minimal.len() != mv.minimal.len() {
        return Ok(OrbitSearchResult {
            found: false,
            automorphism: None,
            move_trace: Vec::new(),
            conjugator: None,
            stats,
        });
    }

    let path = level_search(&mu.minimal, &mv.minimal, budget, &mut stats)?;
    let Some(path) = path else {
        return Ok(OrbitSearchResult {
            found: false,
            automorphism: None,
            move_trace: Vec::new(),
            conjugator: None,
            stats,
        });
    };

    let mut trace = mu.trace.clone();
    trace.extend(path);
    trace.extend(mv.trace.iter().rev().map(WhiteheadMove::inverse));
    let sigma = chain(&trace, rank)?;
    let image = sigma.apply(u)?;
    let y = conjugator_between(&image, v).ok_or_else(|| {
        WhiteheadError::Internal("level path does not reach the target class".into())
    })?;
    let aut = Automorphism::inner(&y).compose(&sigma)?;
    if aut.apply(u)? != *v {
        return Err(WhiteheadError::Internal(
            "constructed automorphism does not map source to target".into(),
        ));
    }
    Ok(OrbitSearchResult {
        found: true,
        automorphism: Some(aut),
        move_trace: trace,
        conjugator: (!y.is_identity()).then_some(y),
        stats,
    })
}

/// Breadth-first search over cyclic words of the common minimal length.
/// Returns the move path from `from` to `to` (as cyclic words) if any.
fn level_search(
    from: &Word,
    to: &Word,
    budget: usize,
    stats: &mut SearchStats,
) -> Result<Option<Vec<WhiteheadMove>>, WhiteheadError> {
    let rank = from.rank();
    let start = canonical_rotation(from.letters());
    let goal = slot_key(&canonical_rotation(to.letters()));
    if slot_key(&start) == goal {
        return Ok(Some(Vec::new()));
    }
    let target_len = start.len();
    let table = MoveTable::new(rank, |_| true)?;

    // (word, parent, move index)
    let mut nodes: Vec<(Vec<Letter>, usize, usize)> = vec![(start.clone(), usize::MAX, 0)];
    let mut seen: HashMap<Vec<u8>, usize> = HashMap::new();
    seen.insert(slot_key(&start), 0);
    let mut queue = VecDeque::from([0usize]);

    while let Some(cur) = queue.pop_front() {
        stats.nodes_explored += 1;
        if seen.len() > budget {
            return Err(WhiteheadError::Indeterminate {
                nodes_explored: stats.nodes_explored,
                budget,
            });
        }
        for idx in 0..table.moves.len() {
            let img = table.apply_cyclic(idx, &nodes[cur].0);
            if img.len() != target_len {
                continue;
            }
            let canon = canonical_rotation(&img);
            let key = slot_key(&canon);
            if seen.contains_key(&key) {
                continue;
            }
            let id = nodes.len();
            seen.insert(key.clone(), id);
            nodes.push((canon, cur, idx));
            if key == goal {
                let mut path = Vec::new();
                let mut at = id;
                while nodes[at].1 != usize::MAX {
                    path.push(table.moves[nodes[at].2].clone());
                    at = nodes[at].1;
                }
                path.reverse();
                return Ok(Some(path));
            }
            queue.push_back(id);
        }
        stats.peak_frontier = stats.peak_frontier.max(queue.len());
    }
    Ok(None)
}

/// Is there an automorphism sending `w` exactly to `w^-1`?
pub fn aut_inverts(w: &Word, budget: usize) -> Result<OrbitSearchResult, WhiteheadError> {
    orbit_equivalent(w, &w.invert(), budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphism::InversionCertificate;
    use crate::word::{enumerate_reduced, parse};

    fn w(s: &str) -> Word {
        parse(s, 2).unwrap()
    }

    #[test]
    fn move_counts() {
        let r1 = enumerate_moves(1).unwrap();
        let t1: Vec<_> = r1
            .iter()
            .filter(|m| matches!(m, WhiteheadMove::TypeI { .. }))
            .collect();
        assert_eq!(t1.len(), 2);
        assert!(r1
            .iter()
            .filter(|m| matches!(m, WhiteheadMove::TypeII { .. }))
            .all(|m| m.is_trivial()));

        let r2 = enumerate_moves(2).unwrap();
        let (t1, t2): (Vec<_>, Vec<_>) = r2
            .iter()
            .partition(|m| matches!(m, WhiteheadMove::TypeI { .. }));
        assert_eq!(t1.len(), 8);
        assert_eq!(t2.len(), 16);
        assert_eq!(enumerate_moves(3).unwrap().len(), 48 + 6 * 16);
        assert!(matches!(enumerate_moves(0), Err(WhiteheadError::ZeroRank)));
    }

    #[test]
    fn trivial_type_ii_act_as_identity() {
        // Brute check of the action on generators instead of trusting is_trivial.
        let id = Endomorphism::identity(2);
        let moves = enumerate_moves(2).unwrap();
        let trivial: Vec<_> = moves
            .iter()
            .filter(|m| matches!(m, WhiteheadMove::TypeII { .. }))
            .filter(|m| m.endomorphism(2) == id)
            .collect();
        assert_eq!(trivial.len(), 4);
        assert!(trivial.iter().all(|m| m.cut_set().len() == 1));
    }

    #[test]
    fn apply_move_examples() {
        let swap = WhiteheadMove::TypeI {
            perm: vec![1, 0],
            inverted: vec![false, false],
        };
        assert_eq!(apply_move(&swap, &w("x1 x2^-1")).unwrap(), w("x2 x1^-1"));
        assert!(apply_move(&swap, &Word::identity(2)).unwrap().is_identity());

        let m = WhiteheadMove::type_ii(
            Letter::generator(1),
            &[Letter::generator(1), Letter::generator(2)],
        )
        .unwrap();
        // x2 ∈ A, x2^-1 ∉ A: x2 -> x2 x1
        assert_eq!(m.endomorphism(2).apply(&w("x2")).unwrap(), w("x2 x1"));
        assert_eq!(apply_move(&m, &w("x2")).unwrap(), w("x2 x1"));
        assert!(matches!(
            apply_move(&m, &w("x1 x2 x1^-1")),
            Err(WhiteheadError::NotCyclicallyReduced)
        ));
    }

    #[test]
    fn type_ii_needs_valid_cut() {
        let a = Letter::generator(1);
        assert!(WhiteheadMove::type_ii(a, &[a.inverse()]).is_none());
        assert!(WhiteheadMove::type_ii(a, &[a, a.inverse()]).is_none());
    }

    #[test]
    fn minimize_examples() {
        let m = minimize(&w("x1 x2 x1^-1")).unwrap();
        assert_eq!(m.minimal.len(), 1);

        let m = minimize(&w("x1 x2^2")).unwrap();
        assert_eq!(m.minimal.len(), 1);

        let comm = w("x1 x2 x1^-1 x2^-1");
        let m = minimize(&comm).unwrap();
        assert_eq!(m.minimal, comm);
        assert!(m.trace.is_empty());
    }

    #[test]
    fn commutator_not_shortened_by_any_move() {
        let comm = w("x1 x2 x1^-1 x2^-1");
        for m in enumerate_moves(2).unwrap() {
            assert!(apply_move(&m, &comm).unwrap().len() >= 4, "{m}");
        }
    }

    #[test]
    fn primitive_orbit_reaches_length_one() {
        // Breadth-first over move images up to radius 2, independent of minimize.
        let moves = enumerate_moves(2).unwrap();
        let start = w("x1 x2^2");
        let mut frontier = vec![start];
        let mut shortest = usize::MAX;
        for _ in 0..2 {
            let mut next = Vec::new();
            for u in &frontier {
                for m in &moves {
                    let img = apply_move(m, u).unwrap();
                    shortest = shortest.min(img.len());
                    next.push(img);
                }
            }
            frontier = next;
        }
        assert_eq!(shortest, 1);
    }

    #[test]
    fn minimize_trace_replays() {
        for u in enumerate_reduced(2, 5).into_iter().step_by(7) {
            let m = minimize(&u).unwrap();
            let mut cur = u.cyclic_reduce().0;
            for mv in &m.trace {
                cur = apply_move(mv, &cur).unwrap();
            }
            assert_eq!(cur, m.minimal);
            assert!(m.minimal.len() <= u.len());
        }
    }

    #[test]
    fn orbit_examples() {
        let r = orbit_equivalent(&w("x1 x2"), &w("x2^-1 x1^-1"), DEFAULT_BUDGET).unwrap();
        assert!(r.found);
        let aut = r.automorphism.unwrap();
        assert_eq!(aut.apply(&w("x1 x2")).unwrap(), w("x2^-1 x1^-1"));

        let u = w("x1^2 x2 x1^-3");
        let r = orbit_equivalent(&u, &u, DEFAULT_BUDGET).unwrap();
        assert!(r.found && r.move_trace.is_empty());

        let g = w("x1^2 x2^2 x1 x2^-1");
        let r = orbit_equivalent(&g, &g.invert(), DEFAULT_BUDGET).unwrap();
        assert!(!r.found);
        assert!(r.automorphism.is_none());
    }

    #[test]
    fn aut_inverts_commutator() {
        let comm = w("x1 x2 x1^-1 x2^-1");
        let r = aut_inverts(&comm, DEFAULT_BUDGET).unwrap();
        assert!(r.found);
        let cert = InversionCertificate::automorphism(comm, r.automorphism.as_ref().unwrap());
        assert!(cert.is_valid());
    }

    #[test]
    fn aut_inverts_handles_conjugates() {
        let u = w("x2^-1 x1^2 x2 x1 x2");
        let r = aut_inverts(&u, DEFAULT_BUDGET).unwrap();
        if r.found {
            let aut = r.automorphism.unwrap();
            assert_eq!(aut.apply(&u).unwrap(), u.invert());
        }
    }

    #[test]
    fn budget_exhaustion_is_indeterminate() {
        let g = w("x1^2 x2^2 x1 x2^-1");
        let r = orbit_equivalent(&g, &g.invert(), 1);
        assert!(matches!(r, Err(WhiteheadError::Indeterminate { .. })));
    }

    #[test]
    fn different_minimal_lengths_are_definitive() {
        let r = orbit_equivalent(&w("x1"), &w("x1 x2 x1^-1 x2^-1"), 1).unwrap();
        assert!(!r.found);
        assert_eq!(r.stats.nodes_explored, 0);
    }

    #[test]
    fn canonical_rotation_is_rotation_invariant() {
        let u = w("x1 x2^-1 x1^2 x2");
        let c = canonical_rotation(u.letters());
        for i in 0..u.len() {
            assert_eq!(canonical_rotation(u.rotate(i).letters()), c);
        }
        assert_eq!(c[0], Letter::generator(1));
    }
}
