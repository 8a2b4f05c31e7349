//! Regular substitutions and the factorization of residuals of `L^{a←K}`.
//!
//! `ρ(L)` is built on an NFA copy of `L`'s canonical DFA: each transition
//! on a substituted letter is replaced by ε-edges into and out of a fresh
//! copy of the target automaton.

use std::collections::BTreeSet;

use crate::automata::{Lang, Nfa};
use crate::error::{Error, Result};
use crate::word::{Alphabet, Letter, Word};

/// `ρ : Σ → languages`. Letters without an explicit image map to themselves.
#[derive(Debug, Clone)]
pub struct SubstitutionMap {
    source: Alphabet,
    images: Vec<Option<Lang>>,
}

impl SubstitutionMap {
    /// The identity substitution over `source`.
    pub fn identity(source: &Alphabet) -> Self {
        SubstitutionMap {
            source: source.clone(),
            images: vec![None; source.len()],
        }
    }

    pub fn single(source: &Alphabet, a: Letter, k: &Lang) -> Result<Self> {
        let mut m = SubstitutionMap::identity(source);
        m.set(a, k.clone())?;
        Ok(m)
    }

    pub fn set(&mut self, a: Letter, k: Lang) -> Result<()> {
        let pos = self
            .source
            .position(a)
            .ok_or_else(|| Error::LetterOutsideAlphabet(a.to_string()))?;
        self.images[pos] = Some(k);
        Ok(())
    }

    pub fn source(&self) -> &Alphabet {
        &self.source
    }

    /// The image of `a`, or `None` when `a` maps to itself.
    pub fn image(&self, a: Letter) -> Option<&Lang> {
        self.source
            .position(a)
            .and_then(|p| self.images[p].as_ref())
    }

    /// `Γ`: the letters mapped to themselves together with the alphabets of
    /// all images.
    pub fn target_alphabet(&self) -> Alphabet {
        let mut letters: BTreeSet<Letter> = BTreeSet::new();
        for (pos, img) in self.images.iter().enumerate() {
            match img {
                None => {
                    letters.insert(self.source.letter(pos));
                }
                Some(k) => letters.extend(k.alphabet().letters().iter().copied()),
            }
        }
        Alphabet::new(letters).expect("a map over a non-empty alphabet has a non-empty target")
    }
}

fn build(l: &Lang, rho: &SubstitutionMap, literal: bool) -> Result<Lang> {
    if l.alphabet() != rho.source() {
        return Err(Error::AlphabetMismatch {
            left: l.alphabet().to_string(),
            right: rho.source().to_string(),
        });
    }
    let gamma = rho.target_alphabet();
    let gpos = |a: Letter| {
        gamma
            .position(a)
            .expect("target alphabet covers every image")
    };
    let dfa = l.dfa();
    let n = dfa.num_states();
    let live = dfa.productive();
    let mut nfa = Nfa::with_states(gamma.clone(), n);
    nfa.add_initial(dfa.initial())?;
    for q in 0..n {
        nfa.set_final(q, dfa.is_final(q))?;
    }
    for q in 0..n {
        for (pos, &a) in l.alphabet().letters().iter().enumerate() {
            let r = dfa.next(q, pos);
            // an edge into a dead state contributes no accepted word
            if !literal && !live[r] {
                continue;
            }
            let singleton;
            let k = match rho.images[pos].as_ref() {
                Some(k) => k,
                None if literal => {
                    singleton = Lang::word(&gamma, &Word::from_letters([a]))?;
                    &singleton
                }
                None => {
                    nfa.add_transition_pos(q, gpos(a), r);
                    continue;
                }
            };
            let kd = k.dfa();
            let map: Vec<usize> = k.alphabet().letters().iter().map(|&b| gpos(b)).collect();
            let off = nfa.embed_dfa(kd, &map);
            nfa.add_epsilon(q, off + kd.initial());
            for s in 0..kd.num_states() {
                if kd.is_final(s) {
                    nfa.add_epsilon(off + s, r);
                }
            }
        }
    }
    Ok(Lang::from_nfa(&nfa))
}

/// `ρ(L)` over the target alphabet of `rho`. `L`'s alphabet must be the
/// source alphabet of `rho`.
pub fn substitute(l: &Lang, rho: &SubstitutionMap) -> Result<Lang> {
    build(l, rho, false)
}

/// The same language as [`substitute`], built without shortcuts: every
/// transition, including those on identity letters and those into dead
/// states, gets its own spliced copy.
pub fn substitute_literal(l: &Lang, rho: &SubstitutionMap) -> Result<Lang> {
    build(l, rho, true)
}

/// `L^{a←K}`.
pub fn substitute_single(l: &Lang, a: Letter, k: &Lang) -> Result<Lang> {
    substitute(l, &SubstitutionMap::single(l.alphabet(), a, k)?)
}

/// Precomputed data to factor every residual of `L^{a←K}` as `P · ρ(Q)`
/// with `P ∈ R(K) ∪ {{ε}}` and `Q ∈ R(L)`.
///
/// All languages are taken over `Σ = Σ_L ∪ Σ_K`.
pub struct Factorizer {
    sigma: Alphabet,
    image: Lang,
    /// `(κ(P), κ(Q), P, Q, P·ρ(Q))`, sorted by the two state counts
    candidates: Vec<(usize, usize, Lang, Lang, Lang)>,
}

impl Factorizer {
    pub fn new(l: &Lang, a: Letter, k: &Lang) -> Result<Self> {
        if !l.alphabet().contains(a) {
            return Err(Error::LetterOutsideAlphabet(a.to_string()));
        }
        if !l.used_letters().is_disjoint(&k.used_letters()) {
            return Err(Error::Precondition(
                "L and K must use disjoint alphabets".into(),
            ));
        }
        if k.is_empty() {
            return Err(Error::Precondition("K must be non-empty".into()));
        }
        let sigma = l.alphabet().union(k.alphabet());
        let over = |x: &Lang| x.extend_alphabet(&sigma);
        let rho = |q: &Lang| -> Result<Lang> { over(&substitute_single(q, a, k)?) };

        let image = rho(l)?;
        let mut ps: Vec<Lang> = vec![Lang::epsilon(&sigma)];
        for (_, p) in over(k)?.residuals() {
            if !ps.contains(&p) {
                ps.push(p);
            }
        }
        let ql: Vec<(Lang, Lang)> = l
            .residuals()
            .into_iter()
            .map(|(_, q)| Ok((over(&q)?, rho(&q)?)))
            .collect::<Result<_>>()?;
        let mut candidates = Vec::new();
        for p in &ps {
            for (q, rq) in &ql {
                candidates.push((p.kappa(), q.kappa(), p.clone(), q.clone(), p.concat(rq)?));
            }
        }
        candidates.sort_by_key(|c| (c.0, c.1));
        Ok(Factorizer {
            sigma,
            image,
            candidates,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.sigma
    }

    /// `ρ(L)` over `Σ`.
    pub fn image(&self) -> &Lang {
        &self.image
    }

    /// `(P, Q)` with `ρ(L)/x = P · ρ(Q)`, least `(κ(P), κ(Q))` first.
    pub fn factor(&self, x: &Word) -> Result<(Lang, Lang)> {
        let r = self.image.residual(x);
        self.candidates
            .iter()
            .find(|c| c.4 == r)
            .map(|c| (c.2.clone(), c.3.clone()))
            .ok_or_else(|| Error::NoFactorization {
                word: x.to_string(),
            })
    }
}

/// Factors `L^{a←K}/x` as `P · ρ(Q)`. `L` and `K` are expected to be
/// downward closed over disjoint alphabets with `K ≠ ∅`; a missing
/// factorization is reported as an error.
pub fn factor_quotient(l: &Lang, a: Letter, k: &Lang, x: &Word) -> Result<(Lang, Lang)> {
    Factorizer::new(l, a, k)?.factor(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closures::{downward_closure, is_closed, Direction};
    use crate::families;
    use crate::testkit::w;
    use proptest::prelude::*;

    fn sigma(n: usize) -> Alphabet {
        Alphabet::first(n).unwrap()
    }

    fn alpha(s: &str) -> Alphabet {
        Alphabet::parse(s).unwrap()
    }

    fn down(s: &Alphabet, text: &str) -> Lang {
        Lang::down_word(s, &w(text)).unwrap()
    }

    fn l(c: char) -> Letter {
        Letter((c as u8 - b'a') as u16)
    }

    #[test]
    fn two_to_the_n() {
        for n in 1..=4 {
            let s = sigma(n);
            let letters = Lang::words(
                &s,
                s.letters()
                    .iter()
                    .map(|&a| Word::from_letters([a]))
                    .collect::<Vec<_>>()
                    .iter(),
            )
            .unwrap();
            let base = downward_closure(&letters);
            let mut rho = SubstitutionMap::identity(&s);
            for i in 1..=n {
                rho.set(Letter(i as u16 - 1), families::a_i(n, i).unwrap())
                    .unwrap();
            }
            assert_eq!(substitute(&base, &rho).unwrap().kappa(), 1 << n);
        }
    }

    #[test]
    fn product_lower_bound() {
        for ms in [vec![0, 1], vec![2, 1], vec![1, 2, 0]] {
            let n = ms.len();
            let s = sigma(n);
            let base = downward_closure(
                &Lang::words(
                    &s,
                    s.letters()
                        .iter()
                        .map(|&a| Word::from_letters([a]))
                        .collect::<Vec<_>>()
                        .iter(),
                )
                .unwrap(),
            );
            let mut rho = SubstitutionMap::identity(&s);
            for (i, &m) in ms.iter().enumerate() {
                rho.set(Letter(i as u16), families::a_ij(n, i + 1, m).unwrap())
                    .unwrap();
            }
            let expected: usize = ms.iter().map(|m| m + 2).product();
            assert_eq!(substitute(&base, &rho).unwrap().kappa(), expected);
        }
    }

    #[test]
    fn word_substitution() {
        let r = substitute_single(&down(&alpha("ab"), "ab"), l('a'), &down(&alpha("cd"), "cd"))
            .unwrap();
        assert_eq!(r.alphabet(), &alpha("bcd"));
        assert_eq!(r, down(&alpha("bcd"), "cdb"));
        assert_eq!(r.kappa(), 5);
    }

    #[test]
    fn identity_and_trivial_maps() {
        let s = sigma(2);
        let x = down(&s, "abba").union(&down(&s, "bab")).unwrap();
        assert_eq!(substitute(&x, &SubstitutionMap::identity(&s)).unwrap(), x);
        let a_only = Lang::word(&alpha("a"), &w("a")).unwrap();
        assert_eq!(substitute_single(&x, l('a'), &a_only).unwrap(), x);
        let empty = Lang::empty(&alpha("c"));
        let eps = Lang::epsilon(&alpha("c"));
        assert_eq!(
            substitute_single(&x, l('a'), &empty).unwrap(),
            substitute_single(&x, l('a'), &eps).unwrap()
        );
        assert!(substitute_single(&x, l('c'), &eps).is_err());
    }

    #[test]
    fn shared_alphabet_example() {
        let s = sigma(3);
        let x = down(&s, "ab").union(&down(&s, "ba")).unwrap();
        let r = substitute_single(&x, l('a'), &down(&s, "bbc")).unwrap();
        let expected = down(&s, "bcb").union(&down(&s, "bbc")).unwrap();
        assert_eq!(r.residual(&w("b")), expected);
    }

    #[test]
    fn factorization_examples() {
        let x = down(&alpha("ab"), "ab");
        let k = down(&alpha("c"), "c");
        let f = Factorizer::new(&x, l('a'), &k).unwrap();
        let s = f.alphabet().clone();
        let (p, q) = f.factor(&Word::empty()).unwrap();
        assert_eq!(p, Lang::epsilon(&s));
        assert_eq!(q, x.extend_alphabet(&s).unwrap());
        let (p, q) = f.factor(&w("c")).unwrap();
        assert_eq!(p, Lang::epsilon(&s));
        assert_eq!(q, down(&s, "b"));
        let (p, q) = f.factor(&w("bb")).unwrap();
        assert!(p.concat(&q).unwrap().is_empty());
        assert!(Factorizer::new(&x, l('a'), &down(&alpha("b"), "b")).is_err());
        assert!(Factorizer::new(&x, l('a'), &Lang::empty(&alpha("c"))).is_err());
    }

    fn arb_down(letters: &'static str) -> impl Strategy<Value = Lang> {
        any::<u64>().prop_map(move |seed| {
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            crate::experiments::gen::random_down_lang(&mut rng, &Alphabet::parse(letters).unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn literal_construction_agrees(x in arb_down("ab"), k in arb_down("bc")) {
            let rho = SubstitutionMap::single(x.alphabet(), l('a'), &k).unwrap();
            prop_assert_eq!(substitute(&x, &rho).unwrap(), substitute_literal(&x, &rho).unwrap());
        }

        #[test]
        fn closedness_is_preserved(x in arb_down("ab"), k in arb_down("abc")) {
            let r = substitute_single(&x, l('a'), &k).unwrap();
            prop_assert!(is_closed(&r, Direction::Down));
        }

        #[test]
        fn downward_closure_commutes(seed in any::<u64>()) {
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let x = crate::experiments::gen::random_lang(&mut rng, &alpha("ab"), 4);
            let kk = crate::experiments::gen::random_lang(&mut rng, &alpha("cd"), 3);
            prop_assume!(!kk.is_empty());
            let lhs = downward_closure(&substitute_single(&x, l('a'), &kk).unwrap());
            let rhs = substitute_single(&downward_closure(&x), l('a'), &downward_closure(&kk)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn every_residual_factors(x in arb_down("ab"), k in arb_down("cd")) {
            prop_assume!(!k.is_empty());
            let f = Factorizer::new(&x, l('a'), &k).unwrap();
            for (r, _) in f.image().residuals() {
                prop_assert!(f.factor(&r).is_ok());
            }
        }
    }
}
