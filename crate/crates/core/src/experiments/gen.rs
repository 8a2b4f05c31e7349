//! Seeded random inputs for the property suites.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::automata::{Dfa, Lang};
use crate::closures::{downward_closure, upward_closure};
use crate::sre::{sre_to_lang, Atom, Product, Sre};
use crate::word::{Alphabet, Word};

/// A word over `sigma` with length uniform in `min_len..=max_len`.
pub fn random_word<R: Rng>(rng: &mut R, sigma: &Alphabet, min_len: usize, max_len: usize) -> Word {
    let len = rng.gen_range(min_len..=max_len);
    Word::from_letters((0..len).map(|_| *sigma.letters().choose(rng).unwrap()))
}

/// Canonical language of a uniformly random complete DFA with `n` states.
pub fn random_lang<R: Rng>(rng: &mut R, sigma: &Alphabet, n: usize) -> Lang {
    let n = n.max(1);
    let k = sigma.len();
    let next: Vec<usize> = (0..n * k).map(|_| rng.gen_range(0..n)).collect();
    let finals: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    Lang::from_dfa(&Dfa::from_fn(
        sigma.clone(),
        n,
        0,
        |q| finals[q],
        |q, a| next[q * k + a],
    ))
}

fn random_subset<R: Rng>(rng: &mut R, sigma: &Alphabet) -> BTreeSet<crate::word::Letter> {
    let size = rng.gen_range(1..=sigma.len().min(3));
    sigma
        .letters()
        .choose_multiple(rng, size)
        .copied()
        .collect()
}

pub fn random_atom<R: Rng>(rng: &mut R, sigma: &Alphabet, star_prob: f64) -> Atom {
    if rng.gen_bool(star_prob) {
        Atom::Star(random_subset(rng, sigma))
    } else {
        Atom::Letter(*sigma.letters().choose(rng).unwrap())
    }
}

/// A product of `0..=max_atoms` atoms, each a star with probability 1/4.
pub fn random_product<R: Rng>(rng: &mut R, sigma: &Alphabet, max_atoms: usize) -> Product {
    let n = rng.gen_range(0..=max_atoms);
    Product((0..n).map(|_| random_atom(rng, sigma, 0.25)).collect())
}

/// A sum of `1..=max_products` random products; `0` with probability 1/20.
pub fn random_sre<R: Rng>(
    rng: &mut R,
    sigma: &Alphabet,
    max_products: usize,
    max_atoms: usize,
) -> Sre {
    if rng.gen_bool(0.05) {
        return Sre::Zero;
    }
    let n = rng.gen_range(1..=max_products.max(1));
    Sre::Sum(
        (0..n)
            .map(|_| random_product(rng, sigma, max_atoms))
            .collect(),
    )
}

/// A random downward closed language over `sigma`: either the closure of a
/// random DFA language or the denotation of a random SRE.
pub fn random_down_lang<R: Rng>(rng: &mut R, sigma: &Alphabet) -> Lang {
    if rng.gen_bool(0.5) {
        let n = rng.gen_range(1..=5);
        downward_closure(&random_lang(rng, sigma, n))
    } else {
        let e = random_sre(rng, sigma, 3, 4);
        sre_to_lang(&e, sigma).expect("generated over sigma")
    }
}

/// The upward closure of a random DFA language with at most `max_states`
/// states.
pub fn random_up_lang<R: Rng>(rng: &mut R, sigma: &Alphabet, max_states: usize) -> Lang {
    let n = rng.gen_range(1..=max_states.max(1));
    upward_closure(&random_lang(rng, sigma, n))
}
