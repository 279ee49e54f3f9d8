//! Property tests for the braid algebra, the word-problem oracle, and the
//! Markov invariance of the polynomial invariants.

use proptest::prelude::*;

use unknot::braid::{BraidWord, Letter};
use unknot::invariants::{alexander_of_closure, jones_of_closure, unreduced_burau_matrix};
use unknot::word_problem::{apply_step, are_equal, is_identity, RewriteStep};

fn arb_word(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |strands| {
        proptest::collection::vec(
            (1..strands, prop_oneof![Just(1i8), Just(-1i8)]),
            0..=max_len,
        )
        .prop_map(move |letters| {
            let letters = letters.into_iter().map(|(i, s)| Letter::new(i, s)).collect();
            BraidWord::new(strands, letters).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn free_reduce_is_idempotent_and_faithful(w in arb_word(5, 14)) {
        let r = w.free_reduce();
        prop_assert!(r.len() <= w.len());
        prop_assert_eq!(r.free_reduce(), r.clone());
        prop_assert_eq!(are_equal(&w, &r), Ok(true));
    }

    #[test]
    fn crossing_changes_are_involutions(w in arb_word(5, 14), seed in any::<u64>()) {
        if w.is_empty() { return Ok(()); }
        let positions: Vec<usize> =
            (1..=w.len()).filter(|pos| (seed >> (pos % 60)) & 1 == 1).collect();
        let flipped = w.apply_crossing_changes(&positions).unwrap();
        prop_assert_eq!(flipped.len(), w.len());
        prop_assert_eq!(flipped.strands(), w.strands());
        prop_assert_eq!(flipped.underlying_permutation(), w.underlying_permutation());
        prop_assert_eq!(flipped.apply_crossing_changes(&positions).unwrap(), w);
    }

    #[test]
    fn inverse_cancels_and_reverse_involutes(w in arb_word(5, 10)) {
        prop_assert_eq!(w.reverse().reverse(), w.clone());
        let prod = w.concat(&w.inverse()).unwrap();
        prop_assert_eq!(is_identity(&prod), Ok(true));
    }

    #[test]
    fn closure_moves_preserve_components(w in arb_word(5, 10), g in arb_word(5, 4)) {
        let d = w.component_count_of_closure();
        prop_assert_eq!(w.reverse().component_count_of_closure(), d);
        prop_assert_eq!(w.inverse().component_count_of_closure(), d);
        prop_assert_eq!(w.stabilize(1).component_count_of_closure(), d);
        prop_assert_eq!(w.stabilize(-1).component_count_of_closure(), d);
        if g.strands() == w.strands() {
            prop_assert_eq!(w.conjugate(&g).unwrap().component_count_of_closure(), d);
        }
        prop_assert_eq!(w.stabilize(1).destabilize().unwrap(), w);
    }

    #[test]
    fn are_equal_is_reflexive_and_symmetric(a in arb_word(4, 10), b in arb_word(4, 10)) {
        prop_assert_eq!(are_equal(&a, &a), Ok(true));
        if a.strands() == b.strands() {
            prop_assert_eq!(are_equal(&a, &b), are_equal(&b, &a));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // the unreduced Burau representation is faithful on three strands, so it
    // must agree with handle reduction there
    #[test]
    fn burau_agrees_with_handle_reduction_on_three_strands(
        a in arb_word(3, 16),
        b in arb_word(3, 16),
    ) {
        prop_assume!(a.strands() == 3 && b.strands() == 3);
        let decided = are_equal(&a, &b).unwrap();
        let matrices_equal = unreduced_burau_matrix(&a) == unreduced_burau_matrix(&b);
        prop_assert_eq!(decided, matrices_equal);
    }

    #[test]
    fn invariants_survive_markov_moves(w in arb_word(4, 8), k in 1usize..4) {
        let budget = 40;
        let alex = alexander_of_closure(&w);
        let jones = jones_of_closure(&w, budget).unwrap();

        let g = if k < w.strands() {
            BraidWord::from_ints(w.strands(), &[k as i64]).unwrap()
        } else {
            BraidWord::identity(w.strands())
        };
        let conj = w.conjugate(&g).unwrap();
        prop_assert_eq!(alexander_of_closure(&conj), alex.clone());
        prop_assert_eq!(jones_of_closure(&conj, budget).unwrap(), jones.clone());

        for sign in [1i8, -1] {
            let stab = w.stabilize(sign);
            prop_assert_eq!(alexander_of_closure(&stab), alex.clone());
            prop_assert_eq!(jones_of_closure(&stab, budget).unwrap(), jones.clone());
        }
    }

    // chains of legal group-level rewrites never change the group element;
    // two independent chains from the same start also give the transitivity
    // spot check: both ends must be decided equal
    #[test]
    fn group_steps_imply_equality(w in arb_word(4, 12), seed in any::<u64>()) {
        let mut ends = Vec::new();
        for salt in 0..2u64 {
            let mut word = w.clone();
            let mut state = (seed ^ salt.wrapping_mul(0x9e3779b97f4a7c15)) | 1;
            for _ in 0..6 {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let len = word.len();
                if len < 2 { break; }
                let site = (state >> 33) as usize % (len - 1) + 1;
                let candidates = [
                    RewriteStep::FreeCancel { site },
                    RewriteStep::FarCommute { site },
                    RewriteStep::BraidRelation { site, i: 2, j: 1, n: 2, reversed: false },
                    RewriteStep::BraidRelation { site, i: 3, j: 2, n: 3, reversed: false },
                    RewriteStep::BraidRelation { site, i: 3, j: 1, n: 3, reversed: true },
                ];
                for step in candidates {
                    if let Ok(next) = apply_step(&word, &step) {
                        word = next;
                        break;
                    }
                }
            }
            prop_assert_eq!(are_equal(&w, &word), Ok(true));
            ends.push(word);
        }
        prop_assert_eq!(are_equal(&ends[0], &ends[1]), Ok(true));
    }
}
