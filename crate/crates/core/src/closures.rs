//! Downward and upward closures under the subword order.

use std::collections::BTreeSet;

use crate::automata::{Lang, Nfa};
use crate::error::{Error, Result};
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Down,
    Up,
}

/// `↓(L)`: every letter transition of the canonical DFA also gets an
/// ε-twin, so any letter may be skipped.
pub fn downward_closure(l: &Lang) -> Lang {
    let mut nfa = l.dfa().to_nfa();
    let d = l.dfa();
    for q in 0..d.num_states() {
        for a in 0..l.alphabet().len() {
            nfa.add_epsilon(q, d.next(q, a));
        }
    }
    Lang::from_nfa(&nfa)
}

/// `↑(L)` relative to `L`'s declared alphabet: every state gets a self-loop
/// on every letter.
pub fn upward_closure(l: &Lang) -> Lang {
    let mut nfa: Nfa = l.dfa().to_nfa();
    for q in 0..l.kappa() {
        for a in 0..l.alphabet().len() {
            nfa.add_transition_pos(q, a, q);
        }
    }
    Lang::from_nfa(&nfa)
}

pub fn closure(l: &Lang, dir: Direction) -> Lang {
    match dir {
        Direction::Down => downward_closure(l),
        Direction::Up => upward_closure(l),
    }
}

pub fn is_closed(l: &Lang, dir: Direction) -> bool {
    closure(l, dir) == *l
}

/// The finite antichain of ≼-minimal words of an upward closed language,
/// in shortlex order.
pub fn minimal_generators(l: &Lang) -> Result<Vec<Word>> {
    if !is_closed(l, Direction::Up) {
        return Err(Error::NotUpwardClosed);
    }
    let sigma = l.alphabet();
    let mut kept: Vec<Word> = Vec::new();
    let mut len = 0;
    loop {
        if Lang::words(sigma, kept.iter()).map(|f| upward_closure(&f))? == *l {
            return Ok(kept);
        }
        for x in l.members_of_length(len) {
            // for an upward closed L, x is minimal iff no one-letter deletion is in L
            let dels: BTreeSet<Word> = x.one_letter_deletions();
            if !dels.iter().any(|y| l.contains(y)) {
                kept.push(x);
            }
        }
        len += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testkit::{brute_matches, w};
    use crate::word::{cut_shuffle, is_subword, Alphabet, Letter};
    use proptest::prelude::*;

    fn ab() -> Alphabet {
        Alphabet::first(2).unwrap()
    }

    #[test]
    fn downward_closure_examples() {
        let a = Alphabet::first(1).unwrap();
        for m in 0..6 {
            let am = Word::from_letters(vec![Letter(0); m]);
            let d = downward_closure(&Lang::word(&a, &am).unwrap());
            assert!(brute_matches(&d, m + 3, |x| x.len() <= m));
        }
        assert!(downward_closure(&Lang::empty(&ab())).is_empty());
        let d = downward_closure(&Lang::word(&ab(), &w("ab")).unwrap());
        assert_eq!(
            d,
            Lang::words(&ab(), [&w(""), &w("a"), &w("b"), &w("ab")]).unwrap()
        );
        assert_eq!(d, Lang::down_word(&ab(), &w("ab")).unwrap());
    }

    #[test]
    fn upward_closure_examples() {
        let a = Alphabet::first(1).unwrap();
        for m in 0..5 {
            let am = Word::from_letters(vec![Letter(0); m]);
            let u = upward_closure(&Lang::word(&a, &am).unwrap());
            assert!(brute_matches(&u, m + 4, |x| x.len() >= m));
        }
        assert!(upward_closure(&Lang::empty(&ab())).is_empty());
        let l = Lang::words(&ab(), [&w("ab"), &w("bb")]).unwrap();
        let via_shuffle = l.shuffle(&Lang::universal(&ab())).unwrap();
        assert_eq!(upward_closure(&l), via_shuffle);
    }

    #[test]
    fn closedness_examples() {
        let d = downward_closure(&Lang::word(&ab(), &w("abb")).unwrap());
        assert!(is_closed(&d, Direction::Down));
        let u = Lang::universal(&ab());
        assert!(is_closed(&u, Direction::Down) && is_closed(&u, Direction::Up));
        let single = Lang::word(&ab(), &w("ab")).unwrap();
        assert!(!is_closed(&single, Direction::Down));
        assert!(!is_closed(&single, Direction::Up));
    }

    #[test]
    fn generators_examples() {
        let up_ab = Lang::up_word(&ab(), &w("ab")).unwrap();
        assert_eq!(minimal_generators(&up_ab).unwrap(), vec![w("ab")]);
        assert!(minimal_generators(&Lang::empty(&ab())).unwrap().is_empty());
        assert_eq!(
            minimal_generators(&Lang::universal(&ab())).unwrap(),
            vec![w("")]
        );
        assert_eq!(
            minimal_generators(&Lang::down_word(&ab(), &w("a")).unwrap()),
            Err(Error::NotUpwardClosed)
        );
        // √↑(ab) = ↑{ab, ba}
        let sqrt = Lang::up_word(&ab(), &w("ab"))
            .unwrap()
            .union(&Lang::up_word(&ab(), &w("ba")).unwrap())
            .unwrap();
        let gens: BTreeSet<Word> = minimal_generators(&sqrt).unwrap().into_iter().collect();
        assert_eq!(gens, cut_shuffle(&w("ab")));
    }

    fn arb_lang() -> impl Strategy<Value = Lang> {
        (1usize..=5, any::<u64>()).prop_map(|(n, seed)| {
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            crate::experiments::gen::random_lang(&mut rng, &Alphabet::first(2).unwrap(), n)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn kuratowski_axioms(l in arb_lang(), k in arb_lang()) {
            for dir in [Direction::Down, Direction::Up] {
                let c = closure(&l, dir);
                prop_assert!(l.is_subset(&c).unwrap());
                prop_assert_eq!(closure(&c, dir), c.clone());
                let lhs = closure(&l.union(&k).unwrap(), dir);
                let rhs = c.union(&closure(&k, dir)).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }

        #[test]
        fn duality_with_complement(l in arb_lang()) {
            let d = downward_closure(&l);
            prop_assert!(is_closed(&d.complement(), Direction::Up));
            let u = upward_closure(&l);
            prop_assert!(is_closed(&u.complement(), Direction::Down));
            prop_assert_eq!(is_closed(&l, Direction::Down), is_closed(&l.complement(), Direction::Up));
        }

        #[test]
        fn generators_regenerate(l in arb_lang()) {
            let u = upward_closure(&l);
            let gens = minimal_generators(&u).unwrap();
            let regen = upward_closure(&Lang::words(u.alphabet(), gens.iter()).unwrap());
            prop_assert_eq!(regen, u.clone());
            for x in &gens {
                for y in &gens {
                    prop_assert!(x == y || !is_subword(x, y));
                }
            }
        }
    }
}
