mod common;

use common::*;
use quotient::closure::{closure, ClosureKind};
use quotient::ops::{self, BooleanOp};
use quotient::witness::WitnessFamily;
use quotient::{Alphabet, Language, Regex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn oracle_self_checks() {
    assert_eq!(words(2, 3).len(), 15);
    assert!(below(ClosureKind::Subword, &[0, 1], &[1, 0, 0, 1]));
    assert!(!below(ClosureKind::Factor, &[1, 1], &[1, 0, 0, 1]));
    assert!(below(ClosureKind::Factor, &[], &[]));
    // (ab)* over {a,b}: three quotients
    let l = Language::parse("(ab)*", &Alphabet::first(2)).unwrap();
    assert_eq!(nerode_count(l.dfa()), 3);
    assert!(in_star(&l, &[0, 1, 0, 1]) && !in_star(&l, &[0, 1, 0]));
}

#[test]
fn minimization_matches_double_reversal() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let letters = rng.gen_range(1..=3);
        let nfa = random_nfa(&mut rng, 5, letters);
        let l = Language::from_nfa(&nfa);
        assert!(isomorphic(&double_reversal(&nfa), l.dfa()), "{nfa:?}");
    }
}

#[test]
fn complexity_counts_distinct_quotients() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..300 {
        let letters = rng.gen_range(1..=3);
        let states = rng.gen_range(1..=6);
        let dfa = random_dfa(&mut rng, states, letters);
        let l = Language::from_dfa(&dfa);
        assert_eq!(nerode_count(&dfa), l.complexity());
        assert_eq!(nerode_count(l.dfa()), l.complexity());
        for w in words(letters, 5) {
            assert_eq!(dfa_accepts(&dfa, &w), l.contains_indices(&w));
        }
    }
}

#[test]
fn closures_match_search_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..120 {
        let letters = rng.gen_range(1..=3);
        let l = random_language(&mut rng, 4, letters);
        let test_words = words(letters, if letters == 3 { 5 } else { 6 });
        for kind in ClosureKind::ALL {
            let c = closure(kind, &l);
            for w in &test_words {
                assert_eq!(c.contains_indices(w), closure_member(kind, l.dfa(), w), "{kind} {l:?} {w:?}");
            }
        }
    }
}

#[test]
fn closures_match_finite_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let alphabet = Alphabet::first(2);
    let pool = words(2, 4);
    for _ in 0..100 {
        let members = (0..rng.gen_range(0..5)).map(|_| pool[rng.gen_range(0..pool.len())].clone()).collect();
        let l = finite_language(&alphabet, &members);
        for kind in ClosureKind::ALL {
            let expected = finite_closure(kind, &members, 2, 6);
            let c = closure(kind, &l);
            for w in words(2, 6) {
                assert_eq!(c.contains_indices(&w), expected.contains(&w), "{kind} {members:?} {w:?}");
            }
        }
    }
}

#[test]
fn operations_match_definitions() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    let test_words = words(2, 6);
    for _ in 0..80 {
        let k = random_language(&mut rng, 4, 2);
        let l = random_language(&mut rng, 4, 2);
        let product = ops::product(&k, &l);
        let star = ops::star(&l);
        let plus = ops::plus(&l);
        let rev = ops::reverse(&l);
        let comp = ops::complement(&l);
        let booleans: Vec<_> = BooleanOp::ALL.iter().map(|&op| (op, ops::boolean(op, &k, &l))).collect();
        for w in &test_words {
            let (in_k, in_l) = (dfa_accepts(k.dfa(), w), dfa_accepts(l.dfa(), w));
            for (op, result) in &booleans {
                assert_eq!(result.contains_indices(w), op.eval(in_k, in_l), "{op}");
            }
            assert_eq!(product.contains_indices(w), in_product(&k, &l, w));
            assert_eq!(star.contains_indices(w), in_star(&l, w));
            let in_plus = (1..=w.len()).any(|i| dfa_accepts(l.dfa(), &w[..i]) && in_star(&l, &w[i..]))
                || (w.is_empty() && in_l);
            assert_eq!(plus.contains_indices(w), in_plus);
            let reversed: Vec<usize> = w.iter().rev().copied().collect();
            assert_eq!(rev.contains_indices(w), dfa_accepts(l.dfa(), &reversed));
            assert_eq!(comp.contains_indices(w), !in_l);
        }
    }
}

#[test]
fn regex_languages_match_nfa_simulation() {
    let alphabet = Alphabet::first(3);
    for expr in ["(a∪baa)*", "a*b∪c", "ε∪(ab)*c*", "(a∪b)*abb", "∅∪a", "((a*)*b)*", "(ε∪a)(ε∪b)(ε∪c)"] {
        let regex = Regex::parse(expr).unwrap();
        let raw = Raw::from_nfa(&regex.to_nfa(&alphabet).unwrap());
        let l = Language::from_regex(&regex, &alphabet).unwrap();
        for w in words(3, 5) {
            assert_eq!(l.contains_indices(&w), raw.accepts(&w), "{expr} {w:?}");
        }
    }
}

#[test]
fn closure_witnesses_checked_independently() {
    for n in 2..=6 {
        let l = WitnessFamily::from_name("fig1", 0, n).unwrap().build().unwrap().single().unwrap();
        let c = closure(ClosureKind::Suffix, &l);
        assert_eq!(nerode_count(c.dfa()), (1 << n) - 1);
        for w in words(2, 7) {
            assert_eq!(c.contains_indices(&w), closure_member(ClosureKind::Suffix, l.dfa(), &w));
        }
    }
    for n in 3..=6 {
        let l = WitnessFamily::from_name("closure-subword", 0, n).unwrap().build().unwrap().single().unwrap();
        let c = closure(ClosureKind::Subword, &l);
        assert_eq!(nerode_count(c.dfa()), (1 << (n - 2)) + 1);
        for w in words(l.alphabet().len(), 4) {
            assert_eq!(c.contains_indices(&w), closure_member(ClosureKind::Subword, l.dfa(), &w));
        }
    }
}

#[test]
fn product_and_star_witnesses_checked_independently() {
    let (k, l) = WitnessFamily::from_name("product-prefix-pair", 4, 4).unwrap().build().unwrap().pair().unwrap();
    let kl = ops::product(&k, &l);
    assert_eq!(nerode_count(kl.dfa()), 20);
    for w in words(3, 5) {
        assert_eq!(kl.contains_indices(&w), in_product(&k, &l, &w));
    }
    let l = WitnessFamily::from_name("star-prefix", 0, 5).unwrap().build().unwrap().single().unwrap();
    let s = ops::star(&l);
    assert_eq!(nerode_count(s.dfa()), 9);
    for w in words(3, 5) {
        assert_eq!(s.contains_indices(&w), in_star(&l, &w));
    }
}
