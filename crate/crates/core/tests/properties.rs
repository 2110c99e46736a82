use proptest::prelude::*;

use wordchir::morphism::{Automorphism, Endomorphism, InversionCertificate};
use wordchir::whitehead::{apply_move, canonical_rotation, enumerate_moves, minimize};
use wordchir::word::{parse, Word};

fn raw_letters(rank: usize, max_len: usize) -> impl Strategy<Value = Vec<i32>> {
    let r = rank as i32;
    prop::collection::vec((1..=r, any::<bool>()), 0..=max_len).prop_map(|v| {
        v.into_iter()
            .map(|(g, inv)| if inv { -g } else { g })
            .collect()
    })
}

fn word(rank: usize, max_len: usize) -> impl Strategy<Value = Word> {
    raw_letters(rank, max_len).prop_map(move |raw| Word::reduce(raw, rank).unwrap())
}

fn endo(rank: usize, max_len: usize) -> impl Strategy<Value = Endomorphism> {
    prop::collection::vec(word(rank, max_len), rank)
        .prop_map(|images| Endomorphism::new(images).unwrap())
}

/// Products of Whitehead moves in rank 2, carried as automorphisms.
fn automorphism(steps: usize) -> impl Strategy<Value = Automorphism> {
    let moves = enumerate_moves(2).unwrap();
    prop::collection::vec(0..moves.len(), 0..=steps).prop_map(move |idx| {
        idx.iter().fold(Automorphism::identity(2), |acc, &i| {
            acc.compose(&moves[i].automorphism(2)).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn reduced_has_no_cancellation(raw in raw_letters(3, 30)) {
        let w = Word::reduce(raw, 3).unwrap();
        for pair in w.letters().windows(2) {
            prop_assert_ne!(pair[0], pair[1].inverse());
        }
    }

    #[test]
    fn concat_is_associative(a in word(3, 12), b in word(3, 12), c in word(3, 12)) {
        let left = a.concat(&b).unwrap().concat(&c).unwrap();
        let right = a.concat(&b.concat(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn word_times_inverse_is_identity(w in word(3, 20)) {
        prop_assert!(w.concat(&w.invert()).unwrap().is_identity());
        prop_assert_eq!(w.invert().invert(), w);
    }

    #[test]
    fn display_round_trips(w in word(4, 20)) {
        prop_assert_eq!(parse(&w.to_string(), 4).unwrap(), w.clone());
        if let Some(c) = w.to_compact() {
            prop_assert_eq!(parse(&c, 4).unwrap(), w);
        }
    }

    #[test]
    fn cyclic_reduce_recomposes(w in word(2, 20)) {
        let (core, c) = w.cyclic_reduce();
        prop_assert!(core.is_cyclically_reduced());
        prop_assert_eq!(core.is_empty(), w.is_empty());
        prop_assert_eq!(c.concat(&core).unwrap().concat(&c.invert()).unwrap(), w);
    }

    #[test]
    fn pow_matches_repeated_concat(w in word(2, 8), k in -4i64..=4) {
        let mut acc = Word::identity(2);
        let step = if k >= 0 { w.clone() } else { w.invert() };
        for _ in 0..k.abs() {
            acc = acc.concat(&step).unwrap();
        }
        prop_assert_eq!(w.pow(k), acc);
    }

    #[test]
    fn endomorphisms_are_homomorphisms(f in endo(2, 5), u in word(2, 10), v in word(2, 10)) {
        let uv = u.concat(&v).unwrap();
        prop_assert_eq!(f.apply(&uv).unwrap(), f.apply(&u).unwrap().concat(&f.apply(&v).unwrap()).unwrap());
        prop_assert_eq!(f.apply(&u.invert()).unwrap(), f.apply(&u).unwrap().invert());
    }

    #[test]
    fn compose_applies_right_to_left(f in endo(2, 4), g in endo(2, 4), w in word(2, 8)) {
        let fg = f.compose(&g).unwrap();
        prop_assert_eq!(fg.apply(&w).unwrap(), f.apply(&g.apply(&w).unwrap()).unwrap());
    }

    #[test]
    fn text_format_round_trips(f in endo(3, 6)) {
        prop_assert_eq!(Endomorphism::parse_text(&f.to_text()).unwrap(), f);
    }

    #[test]
    fn automorphisms_have_inverses(a in automorphism(6), w in word(2, 12)) {
        prop_assert!(a.forward().check_two_sided_inverse(a.inverse_map()).is_ok());
        prop_assert_eq!(a.inverse().apply(&a.apply(&w).unwrap()).unwrap(), w);
    }

    #[test]
    fn certificates_survive_conjugation(sigma in automorphism(4), m in 1i64..4, n in 1i64..4) {
        // x1^m x2^n is inverted by a known automorphism.
        let w = Word::from_syllables([(1, m), (2, n)], 2).unwrap();
        let fwd = Endomorphism::from_strs(&[&format!("x2^{} x1^-1 x2^{}", -n, n), "x2^-1"]).unwrap();
        let inv = fwd.clone();
        let cert = InversionCertificate::automorphism(w, &Automorphism::new(fwd, inv).unwrap());
        prop_assert!(cert.is_valid());
        let moved = cert.conjugate(&sigma).unwrap();
        prop_assert!(moved.verify().is_ok());
        prop_assert!(cert.power(-2).unwrap().verify().is_ok());
        prop_assert!(cert.extend(4).unwrap().verify().is_ok());
    }

    #[test]
    fn moves_preserve_conjugacy_class_image(w in word(2, 14), i in 0usize..24) {
        let (core, _) = w.cyclic_reduce();
        let moves = enumerate_moves(2).unwrap();
        let m = &moves[i % moves.len()];
        let direct = m.endomorphism(2).apply(&core).unwrap().cyclic_reduce().0;
        let via = apply_move(m, &core).unwrap();
        prop_assert_eq!(canonical_rotation(direct.letters()), canonical_rotation(via.letters()));
    }

    #[test]
    fn canonical_rotation_is_rotation_invariant(w in word(3, 14), r in 0usize..14) {
        let (core, _) = w.cyclic_reduce();
        if !core.is_empty() {
            let rotated = core.rotate(r % core.len());
            prop_assert_eq!(canonical_rotation(core.letters()), canonical_rotation(rotated.letters()));
        }
    }

    #[test]
    fn minimize_never_lengthens_and_trace_replays(w in word(2, 14)) {
        let (core, _) = w.cyclic_reduce();
        let m = minimize(&w).unwrap();
        prop_assert!(m.minimal.len() <= core.len());
        let replayed = m.trace.iter().fold(core.clone(), |acc, mv| apply_move(mv, &acc).unwrap());
        prop_assert_eq!(canonical_rotation(replayed.letters()), canonical_rotation(m.minimal.letters()));
    }

    #[test]
    fn minimal_length_is_an_orbit_invariant(w in word(2, 10), a in automorphism(3)) {
        let image = a.apply(&w).unwrap();
        prop_assert_eq!(minimize(&w).unwrap().minimal.len(), minimize(&image).unwrap().minimal.len());
    }
}
