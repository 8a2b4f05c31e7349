//! Brute-force oracles shared by unit tests. Nothing here goes through the
//! automata constructions under test except plain membership queries.

use std::collections::HashSet;

use crate::automata::Lang;
use crate::word::{Alphabet, Word};

pub fn w(s: &str) -> Word {
    s.parse().unwrap()
}

/// Does `l` agree with `pred` on every word of length ≤ `max_len`?
pub fn brute_matches(l: &Lang, max_len: usize, pred: impl Fn(&Word) -> bool) -> bool {
    l.alphabet()
        .words_up_to(max_len)
        .iter()
        .all(|x| l.contains(x) == pred(x))
}

/// Number of distinct residual signatures `{ z : xz ∈ L, |z| ≤ suffix_len }`
/// over access words `|x| ≤ access_len`.
pub fn brute_kappa(
    sigma: &Alphabet,
    access_len: usize,
    suffix_len: usize,
    member: impl Fn(&Word) -> bool,
) -> usize {
    let suffixes = sigma.words_up_to(suffix_len);
    let sigs: HashSet<Vec<bool>> = sigma
        .words_up_to(access_len)
        .iter()
        .map(|x| suffixes.iter().map(|z| member(&x.concat(z))).collect())
        .collect();
    sigs.len()
}
