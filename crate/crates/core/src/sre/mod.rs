//! Simple regular expressions: sums of products of atoms `(a+ε)` and `B*`.
//!
//! Every SRE denotes a downward closed language and every downward closed
//! language has one. Quotients are computed symbolically: the quotient of a
//! product is one of its suffix products, and letter quotients distribute
//! over sums. The automata backend decides inclusion, which is what
//! normalization and residual deduplication rely on.

mod parse;

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::automata::{Lang, Nfa};
use crate::error::{Error, Result};
use crate::word::{Alphabet, Letter, Word};

pub use parse::{parse_sre, render_sre};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    /// `(a + ε)`, written `a?`
    Letter(Letter),
    /// `B*` for non-empty `B`, written `[B]*`
    Star(BTreeSet<Letter>),
}

impl Atom {
    pub fn contains(&self, b: Letter) -> bool {
        match self {
            Atom::Letter(a) => *a == b,
            Atom::Star(set) => set.contains(&b),
        }
    }
}

/// A concatenation of atoms; the empty product denotes `{ε}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Product(pub Vec<Atom>);

/// `Zero` is `∅`. A `Sum` of products denotes their union; the empty sum
/// denotes `{ε}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Sre {
    Zero,
    Sum(Vec<Product>),
}

impl Product {
    pub fn epsilon() -> Self {
        Product(Vec::new())
    }

    /// `↓(w)` as a product of letter atoms.
    pub fn of_word(w: &Word) -> Self {
        Product(w.letters().iter().map(|&a| Atom::Letter(a)).collect())
    }

    pub fn letters(&self) -> BTreeSet<Letter> {
        let mut out = BTreeSet::new();
        for atom in &self.0 {
            match atom {
                Atom::Letter(a) => {
                    out.insert(*a);
                }
                Atom::Star(b) => out.extend(b.iter().copied()),
            }
        }
        out
    }

    fn concat(&self, other: &Product) -> Product {
        Product(self.0.iter().chain(&other.0).cloned().collect())
    }
}

impl From<Product> for Sre {
    fn from(p: Product) -> Sre {
        Sre::Sum(vec![p])
    }
}

impl Sre {
    pub fn epsilon() -> Sre {
        Sre::Sum(vec![Product::epsilon()])
    }

    /// `↓(w)`
    pub fn of_word(w: &Word) -> Sre {
        Product::of_word(w).into()
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Sre::Zero)
    }

    /// The products of the sum; `{ε}` for an empty sum, nothing for `0`.
    pub fn products(&self) -> Vec<Product> {
        match self {
            Sre::Zero => Vec::new(),
            Sre::Sum(ps) if ps.is_empty() => vec![Product::epsilon()],
            Sre::Sum(ps) => ps.clone(),
        }
    }

    /// Letters written in the expression. For anything but `0` these are
    /// exactly the letters occurring in the denoted language.
    pub fn letters(&self) -> BTreeSet<Letter> {
        self.products().iter().flat_map(|p| p.letters()).collect()
    }

    fn from_products(ps: Vec<Product>) -> Sre {
        if ps.is_empty() {
            Sre::Zero
        } else {
            Sre::Sum(ps)
        }
    }
}

/// A minimal alphabet able to carry `letters` (defaults to `{a}`).
pub fn alphabet_for(letters: &BTreeSet<Letter>) -> Alphabet {
    if letters.is_empty() {
        Alphabet::first(1).expect("non-empty")
    } else {
        Alphabet::new(letters.iter().copied()).expect("non-empty")
    }
}

fn product_nfa(nfa: &mut Nfa, sigma: &Alphabet, p: &Product) -> Result<()> {
    let pos = |l: Letter| {
        sigma
            .position(l)
            .ok_or_else(|| Error::LetterOutsideAlphabet(l.to_string()))
    };
    let mut q = nfa.add_state();
    nfa.add_initial(q)?;
    for atom in &p.0 {
        let r = nfa.add_state();
        match atom {
            Atom::Letter(a) => nfa.add_transition_pos(q, pos(*a)?, r),
            Atom::Star(b) => {
                for &l in b {
                    nfa.add_transition_pos(q, pos(l)?, q);
                }
            }
        }
        nfa.add_epsilon(q, r);
        q = r;
    }
    nfa.set_final(q, true)
}

/// `⟦E⟧` over `sigma`, which must contain every letter of `E`.
pub fn sre_to_lang(e: &Sre, sigma: &Alphabet) -> Result<Lang> {
    let mut nfa = Nfa::new(sigma.clone());
    for p in e.products() {
        product_nfa(&mut nfa, sigma, &p)?;
    }
    Ok(Lang::from_nfa(&nfa))
}

pub fn product_to_lang(p: &Product, sigma: &Alphabet) -> Result<Lang> {
    sre_to_lang(&p.clone().into(), sigma)
}

/// `I/b`: the suffix product starting at the first atom containing `b`,
/// keeping that atom if it is a star and dropping it if it is a letter.
/// `None` stands for the empty language.
pub fn product_quotient(p: &Product, b: Letter) -> Option<Product> {
    let i = p.0.iter().position(|atom| atom.contains(b))?;
    let start = match p.0[i] {
        Atom::Star(_) => i,
        Atom::Letter(_) => i + 1,
    };
    Some(Product(p.0[start..].to_vec()))
}

fn letter_quotient(e: &Sre, b: Letter) -> Sre {
    let ps: Vec<Product> = e
        .products()
        .iter()
        .filter_map(|p| product_quotient(p, b))
        .collect();
    Sre::from_products(ps)
}

/// `E/x`, normalized.
pub fn sre_quotient(e: &Sre, x: &Word) -> Sre {
    let mut cur = e.clone();
    for &b in x.letters() {
        cur = letter_quotient(&cur, b);
        if cur.is_zero() {
            break;
        }
    }
    sre_normalize(&cur)
}

/// `⟦I₁⟧ ⊆ ⟦I₂⟧`, decided by the automata backend.
pub fn product_inclusion(p1: &Product, p2: &Product) -> bool {
    let letters: BTreeSet<Letter> = p1.letters().union(&p2.letters()).copied().collect();
    let sigma = alphabet_for(&letters);
    let l1 = product_to_lang(p1, &sigma).expect("alphabet covers letters");
    let l2 = product_to_lang(p2, &sigma).expect("alphabet covers letters");
    l1.is_subset(&l2).expect("same alphabet")
}

/// Drops products included in another product of the sum, removes
/// duplicates, and sorts what remains by length, then atom order. Among
/// language-equal products the first in that order is kept.
pub fn sre_normalize(e: &Sre) -> Sre {
    let mut ps = e.products();
    if ps.is_empty() {
        return Sre::Zero;
    }
    ps.sort_by(|x, y| x.0.len().cmp(&y.0.len()).then_with(|| x.cmp(y)));
    ps.dedup();
    let letters: BTreeSet<Letter> = ps.iter().flat_map(|p| p.letters()).collect();
    let sigma = alphabet_for(&letters);
    let langs: Vec<Lang> = ps
        .iter()
        .map(|p| product_to_lang(p, &sigma).expect("alphabet covers letters"))
        .collect();
    let n = ps.len();
    let keep: Vec<bool> = (0..n)
        .map(|i| {
            !(0..n).any(|j| {
                j != i
                    && langs[i].is_subset(&langs[j]).unwrap()
                    && (j < i || !langs[j].is_subset(&langs[i]).unwrap())
            })
        })
        .collect();
    Sre::Sum(
        ps.into_iter()
            .zip(keep)
            .filter_map(|(p, k)| k.then_some(p))
            .collect(),
    )
}

/// True iff `E` is directed, i.e. normalizes to at most one product.
pub fn is_product(e: &Sre) -> bool {
    sre_normalize(e).products().len() <= 1
}

/// Union of two expressions, normalized.
pub fn sum(e1: &Sre, e2: &Sre) -> Sre {
    let mut ps = e1.products();
    ps.extend(e2.products());
    sre_normalize(&Sre::from_products(ps))
}

/// Concatenation of two expressions, normalized.
pub fn concat(e1: &Sre, e2: &Sre) -> Sre {
    let mut ps = Vec::new();
    for p in e1.products() {
        for q in e2.products() {
            ps.push(p.concat(&q));
        }
    }
    sre_normalize(&Sre::from_products(ps))
}

/// Every residual class of `E` over `sigma`, with its shortlex-least access
/// word, in breadth-first order. Classes are merged up to language
/// equality, so the count is the state complexity of `⟦E⟧` over `sigma`.
pub fn sre_residuals(e: &Sre, sigma: &Alphabet) -> Result<Vec<(Word, Sre)>> {
    let start = sre_normalize(e);
    let mut seen: HashSet<Lang> = HashSet::new();
    let mut out: Vec<(Word, Sre)> = Vec::new();
    seen.insert(sre_to_lang(&start, sigma)?);
    out.push((Word::empty(), start));
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for &b in sigma.letters() {
            let (x, cur) = &out[i];
            let next = sre_normalize(&letter_quotient(cur, b));
            let lang = sre_to_lang(&next, sigma)?;
            if seen.insert(lang) {
                let mut xb = x.clone();
                xb.push(b);
                queue.push_back(out.len());
                out.push((xb, next));
            }
        }
    }
    Ok(out)
}

fn substitute_product(p: &Product, a: Letter, k: &Sre) -> Vec<Product> {
    let k_letters = k.letters();
    let k_products = k.products();
    let mut acc: Vec<Product> = vec![Product::epsilon()];
    for atom in &p.0 {
        match atom {
            Atom::Letter(l) if *l == a => {
                // ρ(a+ε) = K ∪ {ε} = K when K ≠ ∅, and {ε} when K = ∅
                if !k.is_zero() {
                    acc = acc
                        .iter()
                        .flat_map(|x| k_products.iter().map(move |y| x.concat(y)))
                        .collect();
                }
            }
            Atom::Star(b) if b.contains(&a) => {
                let mut set: BTreeSet<Letter> = b.iter().copied().filter(|&l| l != a).collect();
                set.extend(k_letters.iter().copied());
                if !set.is_empty() {
                    for x in acc.iter_mut() {
                        x.0.push(Atom::Star(set.clone()));
                    }
                }
            }
            other => {
                for x in acc.iter_mut() {
                    x.0.push(other.clone());
                }
            }
        }
    }
    acc
}

/// `E^{a←K}`, normalized.
pub fn sre_substitute(e: &Sre, a: Letter, k: &Sre) -> Sre {
    let ps: Vec<Product> = e
        .products()
        .iter()
        .flat_map(|p| substitute_product(p, a, k))
        .collect();
    sre_normalize(&Sre::from_products(ps))
}

/// `ρ(L)/b` for `ρ = {a←K}`, assembled from quotients of `L` and `K`:
/// `K/a · ρ(L/a)` when `b = a`, and `ρ(L/b) + K/b · ρ(L/a)` otherwise.
pub fn subst_quotient_rule(l: &Sre, k: &Sre, a: Letter, b: Letter) -> Sre {
    let bw = Word::from_letters([b]);
    let aw = Word::from_letters([a]);
    let tail = sre_substitute(&sre_quotient(l, &aw), a, k);
    let via_k = concat(&sre_quotient(k, &bw), &tail);
    if b == a {
        via_k
    } else {
        sum(&sre_substitute(&sre_quotient(l, &bw), a, k), &via_k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closures::downward_closure;
    use crate::substitution::substitute_single;
    use crate::testkit::w;
    use proptest::prelude::*;

    fn e(s: &str) -> Sre {
        parse_sre(s).unwrap()
    }

    fn l(letter: char) -> Letter {
        Letter((letter as u8 - b'a') as u16)
    }

    fn sigma(n: usize) -> Alphabet {
        Alphabet::first(n).unwrap()
    }

    #[test]
    fn semantics_examples() {
        let s3 = sigma(3);
        let abc = sre_to_lang(&e("a?b?c?"), &s3).unwrap();
        let singleton = Lang::word(&s3, &w("abc")).unwrap();
        assert_eq!(abc, downward_closure(&singleton));
        assert_eq!(sre_to_lang(&e("a?b?"), &sigma(2)).unwrap().kappa(), 4);
        assert!(sre_to_lang(&e("[ab]*"), &sigma(2)).unwrap().is_universal());
        assert_eq!(sre_to_lang(&e("1"), &s3).unwrap(), Lang::epsilon(&s3));
        assert_eq!(
            sre_to_lang(&Sre::Sum(vec![]), &s3).unwrap(),
            Lang::epsilon(&s3)
        );
        assert!(sre_to_lang(&e("0"), &s3).unwrap().is_empty());
        let abbc = sre_to_lang(&e("a?b?b?c?"), &s3).unwrap();
        assert_eq!(abbc, Lang::down_word(&s3, &w("abbc")).unwrap());
        assert!(sre_to_lang(&e("d?"), &s3).is_err());
    }

    #[test]
    fn product_quotient_examples() {
        let q = product_quotient(&e("a?b?c?").products()[0], l('b')).unwrap();
        assert_eq!(q.to_string(), "c?");
        let q = product_quotient(&e("[ab]*c?").products()[0], l('a')).unwrap();
        assert_eq!(q.to_string(), "[ab]*c?");
        assert!(product_quotient(&e("a?").products()[0], l('b')).is_none());
    }

    #[test]
    fn quotient_examples() {
        let abba = Sre::of_word(&w("abba"));
        assert_eq!(sre_quotient(&abba, &Word::empty()), abba);
        assert_eq!(sre_quotient(&abba, &w("b")), Sre::of_word(&w("ba")));
        assert_eq!(sre_quotient(&e("a?[bc]*"), &w("d")), Sre::Zero);
        assert_eq!(sre_quotient(&e("1"), &w("a")), Sre::Zero);
    }

    #[test]
    fn normalization_examples() {
        assert_eq!(sre_normalize(&e("a? + a?b?")).to_string(), "a?b?");
        assert_eq!(sre_normalize(&e("1 + a?")).to_string(), "a?");
        assert_eq!(sre_normalize(&e("0")), Sre::Zero);
        assert_eq!(sre_normalize(&Sre::Sum(vec![])).to_string(), "1");
        let n = sre_normalize(&e("[a]* + a?[a]* + b?"));
        assert_eq!(n.to_string(), "b? + [a]*");
        assert!(is_product(&e("a? + a?b?")));
        assert!(!is_product(&e("a?b? + b?a?")));
    }

    #[test]
    fn residual_examples() {
        let s2 = sigma(2);
        let r = sre_residuals(&e("1"), &s2).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.iter().any(|(_, x)| x.is_zero()));
        let r = sre_residuals(&e("a?b? + b?a?"), &s2).unwrap();
        assert_eq!(r.len(), 5);
        let words: Vec<String> = r.iter().map(|(x, _)| x.to_string()).collect();
        assert_eq!(words, vec!["", "a", "b", "aa", "ab"]);
    }

    #[test]
    fn product_residuals_are_suffixes_plus_empty() {
        let s3 = sigma(3);
        for text in ["a?b?c?", "[ab]*c?a?", "a?[bc]*b?", "[abc]*", "c?c?[ab]*"] {
            let p = e(text);
            let lang = sre_to_lang(&p, &s3).unwrap();
            let atoms = &p.products()[0].0;
            let mut expected: Vec<Lang> = (0..=atoms.len())
                .map(|i| product_to_lang(&Product(atoms[i..].to_vec()), &s3).unwrap())
                .collect();
            if !lang.is_universal() {
                expected.push(Lang::empty(&s3));
            }
            let got: Vec<Lang> = sre_residuals(&p, &s3)
                .unwrap()
                .iter()
                .map(|(_, r)| sre_to_lang(r, &s3).unwrap())
                .collect();
            for g in &got {
                assert!(expected.contains(g), "{text}");
            }
            assert_eq!(got.len(), lang.kappa());
            // residuals of a product are totally ordered by inclusion
            for x in &got {
                for y in &got {
                    assert!(x.is_subset(y).unwrap() || y.is_subset(x).unwrap());
                }
            }
        }
        let i = e("a?b?").products()[0].clone();
        assert!(product_inclusion(&i, &i));
        let (a, b) = (e("a?").products()[0].clone(), e("b?").products()[0].clone());
        assert!(!product_inclusion(&a, &b) && !product_inclusion(&b, &a));
    }

    #[test]
    fn substitution_examples() {
        let r = sre_substitute(&e("a?b?"), l('a'), &e("c?d?"));
        assert_eq!(r, Sre::of_word(&w("cdb")));
        let s = e("[ab]*c? + b?a?");
        let same = sre_substitute(&s, l('a'), &e("a?"));
        assert_eq!(
            sre_to_lang(&same, &sigma(3)).unwrap(),
            sre_to_lang(&s, &sigma(3)).unwrap()
        );
        let star = sre_substitute(&e("[ab]*"), l('a'), &e("c?"));
        assert_eq!(star.to_string(), "[bc]*");
        assert_eq!(
            sre_substitute(&e("[a]*b?"), l('a'), &e("0")).to_string(),
            "b?"
        );
        assert_eq!(sre_substitute(&e("a?"), l('a'), &e("0")).to_string(), "1");
    }

    #[test]
    fn substitution_rule_examples() {
        // ρ(I)/b = ↓(bc) for I = ↓(abc), K = ε + a + b + c
        let rule = subst_quotient_rule(&e("a?b?c?"), &e("a? + b? + c?"), l('a'), l('b'));
        assert_eq!(
            sre_to_lang(&rule, &sigma(3)).unwrap(),
            Lang::down_word(&sigma(3), &w("bc")).unwrap()
        );
        // without a, only ρ(L/b) survives
        let rule = subst_quotient_rule(&e("b?c?"), &e("c?"), l('a'), l('b'));
        assert_eq!(rule, e("c?"));
        // the shared-alphabet example
        let rule = subst_quotient_rule(&e("a?b? + b?a?"), &e("b?b?c?"), l('a'), l('b'));
        assert_eq!(rule, sre_normalize(&e("b?c?b? + b?b?c?")));
        assert_eq!(rule.to_string(), "b?b?c? + b?c?b?");
    }

    fn arb_sre(n: usize) -> impl Strategy<Value = Sre> {
        any::<u64>().prop_map(move |seed| {
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            crate::experiments::gen::random_sre(&mut rng, &sigma(n), 3, 4)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn round_trip(x in arb_sre(3)) {
            let n = sre_normalize(&x);
            prop_assert_eq!(parse_sre(&render_sre(&n)).unwrap(), n.clone());
            prop_assert_eq!(sre_normalize(&n), n);
        }

        #[test]
        fn normalization_preserves_language(x in arb_sre(3)) {
            let s = sigma(3);
            prop_assert_eq!(sre_to_lang(&sre_normalize(&x), &s).unwrap(), sre_to_lang(&x, &s).unwrap());
        }

        #[test]
        fn quotient_agrees_with_automaton(x in arb_sre(3), word in "[abc]{0,4}") {
            let s = sigma(3);
            let word: Word = word.parse().unwrap();
            let sym = sre_to_lang(&sre_quotient(&x, &word), &s).unwrap();
            prop_assert_eq!(sym, sre_to_lang(&x, &s).unwrap().residual(&word));
        }

        #[test]
        fn residual_count_is_kappa(x in arb_sre(3)) {
            let s = sigma(3);
            prop_assert_eq!(sre_residuals(&x, &s).unwrap().len(), sre_to_lang(&x, &s).unwrap().kappa());
        }

        #[test]
        fn substitution_agrees_with_automaton(x in arb_sre(3), k in arb_sre(3)) {
            let s = sigma(3);
            let a = Letter(0);
            let sym = sre_to_lang(&sre_substitute(&x, a, &k), &s).unwrap();
            let aut = substitute_single(&sre_to_lang(&x, &s).unwrap(), a, &sre_to_lang(&k, &s).unwrap()).unwrap();
            prop_assert_eq!(sym, aut.extend_alphabet(&s).unwrap());
        }

        #[test]
        fn rule_agrees_with_automaton(x in arb_sre(3), k in arb_sre(3), b in 0u16..3) {
            let s = sigma(3);
            let a = Letter(0);
            let b = Letter(b);
            let sym = sre_to_lang(&subst_quotient_rule(&x, &k, a, b), &s).unwrap();
            let rho = substitute_single(&sre_to_lang(&x, &s).unwrap(), a, &sre_to_lang(&k, &s).unwrap()).unwrap();
            prop_assert_eq!(sym, rho.extend_alphabet(&s).unwrap().residual(&Word::from_letters([b])));
        }
    }
}
