//! Cross-checks against independent, deliberately naive implementations.

use std::collections::{BTreeSet, HashSet, VecDeque};

use wordchir::classify::{census, engel, Bracket, ClassifyOptions};
use wordchir::group::{catalog, image, DEFAULT_EVAL_CAP};
use wordchir::morphism::Endomorphism;
use wordchir::whitehead::{aut_inverts, DEFAULT_BUDGET};
use wordchir::word::{parse, Word};

/// Integer quaternion (a + bi + cj + dk).
type Quat = [i32; 4];

fn qmul(p: Quat, q: Quat) -> Quat {
    let [a1, b1, c1, d1] = p;
    let [a2, b2, c2, d2] = q;
    [
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    ]
}

fn quat_of_label(label: &str) -> Quat {
    let (sign, unit) = match label.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, label),
    };
    let mut q = [0; 4];
    let slot = match unit {
        "1" => 0,
        "i" => 1,
        "j" => 2,
        "k" => 3,
        other => panic!("unexpected label {other}"),
    };
    q[slot] = sign;
    q
}

#[test]
fn q8_table_matches_quaternion_arithmetic() {
    let g = catalog("Q8").unwrap();
    assert_eq!(g.order(), 8);
    let quats: Vec<Quat> = (0..8).map(|e| quat_of_label(&g.label(e))).collect();
    let distinct: BTreeSet<Quat> = quats.iter().copied().collect();
    assert_eq!(distinct.len(), 8);
    for a in 0..8 {
        for b in 0..8 {
            assert_eq!(quats[g.mul(a, b)], qmul(quats[a], quats[b]), "{a} * {b}");
        }
    }

    // Squares and commutators of unit quaternions are exactly {1, -1}.
    let pm1: BTreeSet<Quat> = [[1, 0, 0, 0], [-1, 0, 0, 0]].into();
    for w in ["x1^2", "x1 x2 x1^-1 x2^-1"] {
        let s = image(&g, &parse(w, 2).unwrap(), DEFAULT_EVAL_CAP).unwrap();
        let got: BTreeSet<Quat> = s.members.iter().map(|&e| quats[e]).collect();
        assert_eq!(got, pm1, "{w}");
    }
}

/// Evaluates `w` at every tuple by repeated multiplication only.
fn naive_image(g: &wordchir::FiniteGroup, w: &Word) -> BTreeSet<usize> {
    let rank = w.rank();
    let n = g.order();
    let mut out = BTreeSet::new();
    for code in 0..n.pow(rank as u32) {
        let tuple: Vec<usize> = (0..rank).map(|i| (code / n.pow(i as u32)) % n).collect();
        let mut acc = g.identity();
        for l in w.letters() {
            let x = tuple[l.index() - 1];
            let x = if l.is_inverse() { g.inverse(x) } else { x };
            acc = g.mul(acc, x);
        }
        out.insert(acc);
    }
    out
}

#[test]
fn images_match_naive_evaluation() {
    let words = [
        "x1^2",
        "x1^-3 x2^5",
        "x1 x2 x1^-1 x2^-1",
        "x1^2 x2^2 x1 x2^-1",
        "x1^7 x2^-4 x1^2",
        "x2^3",
    ];
    for name in ["C6", "S3", "D4", "Q8", "A4", "D5", "C2xC3"] {
        let g = catalog(name).unwrap();
        for w in words {
            let w = parse(w, 2).unwrap();
            let fast = image(&g, &w, DEFAULT_EVAL_CAP).unwrap().members;
            assert_eq!(fast, naive_image(&g, &w), "{w} on {name}");
        }
    }
}

fn cyclic_key(letters: &[i32]) -> Vec<i32> {
    // Order x1 < x1^-1 < x2 < x2^-1, as a sortable integer.
    let rank = |l: i32| 2 * (l.abs() - 1) + i32::from(l < 0);
    (0..letters.len().max(1))
        .map(|r| {
            let mut rot = letters[r.min(letters.len())..].to_vec();
            rot.extend_from_slice(&letters[..r.min(letters.len())]);
            rot.iter().map(|&l| rank(l)).collect::<Vec<_>>()
        })
        .min()
        .unwrap_or_default()
}

fn cyclic_core(w: &Word) -> Vec<i32> {
    let mut v: Vec<i32> = w.letters().iter().map(|l| l.value()).collect();
    while v.len() >= 2 && v[0] == -v[v.len() - 1] {
        v.remove(0);
        v.pop();
    }
    v
}

/// All Whitehead automorphisms of F_2, written out by hand: 8 signed
/// permutations and, for each multiplier a and other generator y, the maps
/// y -> y a, a^-1 y, a^-1 y a (a fixed).
fn rank2_whitehead_maps() -> Vec<Endomorphism> {
    let mut maps = Vec::new();
    for (a, b) in [("x1", "x2"), ("x2", "x1")] {
        for sa in ["", "^-1"] {
            for sb in ["", "^-1"] {
                maps.push(
                    Endomorphism::from_strs(&[&format!("{a}{sa}"), &format!("{b}{sb}")]).unwrap(),
                );
            }
        }
    }
    for (mult, other) in [(1, 2), (2, 1)] {
        for e in [1, -1] {
            let a = format!("x{mult}^{e}");
            let ai = format!("x{mult}^{}", -e);
            let y = format!("x{other}");
            for img in [
                format!("{y} {a}"),
                format!("{ai} {y}"),
                format!("{ai} {y} {a}"),
            ] {
                let mut images = [String::new(), String::new()];
                images[mult - 1] = format!("x{mult}");
                images[other - 1] = img;
                maps.push(Endomorphism::from_strs(&[&images[0], &images[1]]).unwrap());
            }
        }
    }
    maps
}

fn to_word(v: &[i32]) -> Word {
    Word::reduce(v.iter().copied(), 2).unwrap()
}

/// Whitehead's decision procedure with the naive pieces above: minimize by
/// any shortening map, then explore the whole level graph.
fn naive_inverts(w: &Word) -> bool {
    let maps = rank2_whitehead_maps();
    let step = |v: &[i32], m: &Endomorphism| cyclic_core(&m.apply(&to_word(v)).unwrap());
    let minimize = |mut v: Vec<i32>| loop {
        match maps.iter().map(|m| step(&v, m)).find(|u| u.len() < v.len()) {
            Some(u) => v = u,
            None => return v,
        }
    };
    let start = minimize(cyclic_core(w));
    let target = minimize(cyclic_core(&w.invert()));
    if start.len() != target.len() {
        return false;
    }
    let goal = cyclic_key(&target);
    let mut seen = HashSet::from([cyclic_key(&start)]);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        if cyclic_key(&v) == goal {
            return true;
        }
        for m in &maps {
            let u = step(&v, m);
            if u.len() == v.len() && seen.insert(cyclic_key(&u)) {
                queue.push_back(u);
            }
        }
    }
    false
}

#[test]
fn naive_whitehead_agrees_on_length_six() {
    let opts = ClassifyOptions::default();
    let c = census(6, &opts).unwrap();
    let fast: BTreeSet<Word> = c.not_aut_invertible.iter().cloned().collect();
    let naive: BTreeSet<Word> = c
        .verdicts
        .iter()
        .map(|v| v.word.clone())
        .filter(|w| !naive_inverts(w))
        .collect();
    assert_eq!(fast, naive);
    assert!(fast.contains(&parse("x1^2 x2^2 x1 x2^-1", 2).unwrap()));
}

#[test]
fn naive_whitehead_agrees_on_engel_words() {
    for bracket in [Bracket::Standard, Bracket::Inverse] {
        for n in 1..=5 {
            let e = engel(n, bracket);
            let fast = aut_inverts(&e, DEFAULT_BUDGET).unwrap().found;
            assert_eq!(fast, naive_inverts(&e), "e_{n} ({bracket:?})");
        }
    }
}

#[test]
fn naive_whitehead_agrees_on_mixed_words() {
    let words = [
        "x1 x2^2 x1^-1 x2^-1",
        "x1^3 x2 x1^-1 x2^2",
        "x1^2 x2 x1^-1 x2^-2 x1 x2",
        "x1 x2 x1 x2^-1 x1^-1 x2^-1",
        "x1^2 x2^3 x1^-1 x2^-1",
    ];
    for w in words {
        let w = parse(w, 2).unwrap();
        assert_eq!(
            aut_inverts(&w, DEFAULT_BUDGET).unwrap().found,
            naive_inverts(&w),
            "{w}"
        );
    }
}
