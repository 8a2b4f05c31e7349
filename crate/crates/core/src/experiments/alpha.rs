//! Exhaustive search for `α(n) = max_{|w| ≤ n} κ(√↓(w))`.
//!
//! Only restricted-growth words are enumerated (first occurrences of
//! letters appear in alphabet order), since renaming letters does not
//! change `κ(√↓(w))`. Each word is measured over its own alphabet `Σ(w)`.

use rayon::prelude::*;

use crate::automata::Lang;
use crate::roots::kth_root;
use crate::word::{Alphabet, Letter, Word};

#[derive(Debug, Clone, Copy)]
pub struct AlphaOptions {
    /// Skip words with at least two letters occurring exactly once; such
    /// words never reach `α(|w|)`.
    pub prune_singletons: bool,
    /// Worker threads; `0` uses the global pool, `1` runs sequentially.
    pub jobs: usize,
}

impl Default for AlphaOptions {
    fn default() -> Self {
        AlphaOptions {
            prune_singletons: true,
            jobs: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaLevel {
    pub m: usize,
    /// `α(m)`
    pub alpha: usize,
    /// Canonical words of length `≤ m` with `κ(√↓(w)) = α(m)`, shortlex.
    pub witnesses: Vec<Word>,
    /// Words of length exactly `m` measured / skipped.
    pub examined: usize,
    pub pruned: usize,
}

/// `κ(√↓(w))` over `Σ(w)`.
pub fn sqrt_down_kappa(w: &Word) -> usize {
    let sigma = Alphabet::of_word(w);
    let down = Lang::down_word(&sigma, w).expect("word over its own alphabet");
    kth_root(&down, 2).expect("k = 2").kappa()
}

/// All restricted-growth words of length `m`, in lexicographic order.
pub fn canonical_words(m: usize) -> Vec<Word> {
    fn go(prefix: &mut Vec<Letter>, used: u16, m: usize, out: &mut Vec<Word>) {
        if prefix.len() == m {
            out.push(Word::from_letters(prefix.iter().copied()));
            return;
        }
        for l in 0..=used {
            prefix.push(Letter(l));
            go(prefix, used.max(l + 1), m, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if m == 0 {
        out.push(Word::empty());
    } else {
        let mut prefix = vec![Letter(0)];
        go(&mut prefix, 1, m, &mut out);
    }
    out
}

fn singletons(w: &Word) -> usize {
    let mut counts = vec![0usize; w.len() + 1];
    for l in w.letters() {
        counts[l.index()] += 1;
    }
    counts.iter().filter(|&&c| c == 1).count()
}

/// `α(1), ..., α(n)` with their maximizers.
pub fn alpha_search(n: usize, opts: AlphaOptions) -> Vec<AlphaLevel> {
    let run = || {
        let mut levels: Vec<AlphaLevel> = Vec::new();
        // (κ, word) for every maximizer of each exact length so far
        let mut best_by_len: Vec<(usize, Vec<Word>)> = Vec::new();
        for m in 1..=n {
            let words = canonical_words(m);
            let (kept, pruned): (Vec<Word>, Vec<Word>) = words
                .into_iter()
                .partition(|w| !(opts.prune_singletons && singletons(w) >= 2));
            let kappas: Vec<usize> = if opts.jobs == 1 {
                kept.iter().map(sqrt_down_kappa).collect()
            } else {
                kept.par_iter().map(sqrt_down_kappa).collect()
            };
            let top = kappas.iter().copied().max().unwrap_or(0);
            let maximizers: Vec<Word> = kept
                .iter()
                .zip(&kappas)
                .filter(|(_, &k)| k == top)
                .map(|(w, _)| w.clone())
                .collect();
            best_by_len.push((top, maximizers));
            let alpha = best_by_len.iter().map(|(k, _)| *k).max().unwrap();
            let mut witnesses: Vec<Word> = best_by_len
                .iter()
                .filter(|(k, _)| *k == alpha)
                .flat_map(|(_, ws)| ws.iter().cloned())
                .collect();
            witnesses.sort();
            levels.push(AlphaLevel {
                m,
                alpha,
                witnesses,
                examined: kept.len(),
                pruned: pruned.len(),
            });
        }
        levels
    };
    if opts.jobs > 1 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .expect("thread pool")
            .install(run)
    } else {
        run()
    }
}
