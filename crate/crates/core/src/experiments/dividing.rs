//! Dividing sets: words with pairwise distinct residuals. A dividing set
//! of size `m` certifies `κ(L) ≥ m`.

use crate::automata::Lang;
use crate::closures::upward_closure;
use crate::error::{Error, Result};
use crate::families;
use crate::roots::kth_root;
use crate::word::{Alphabet, Letter, Word};

#[derive(Debug, Clone)]
pub struct DividingSet {
    pub target: Lang,
    pub words: Vec<Word>,
}

/// A separating suffix for the pair `(i, j)` of input words, or `None`
/// when their residuals coincide.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub i: usize,
    pub j: usize,
    pub suffix: Option<Word>,
}

#[derive(Debug, Clone)]
pub struct DividingCheck {
    pub dividing: bool,
    pub witnesses: Vec<Witness>,
}

/// Checks that the words of `f` have pairwise distinct residuals in `l`,
/// and records the shortlex-least separating suffix `z_{i,j}` for every
/// pair.
pub fn verify_dividing_set(l: &Lang, f: &[Word]) -> Result<DividingCheck> {
    let dfa = l.dfa();
    let states: Vec<usize> = f
        .iter()
        .map(|x| {
            dfa.run_from(dfa.initial(), x)
                .ok_or_else(|| Error::LetterOutsideAlphabet(x.to_string()))
        })
        .collect::<Result<_>>()?;
    let mut witnesses = Vec::new();
    let mut dividing = true;
    for i in 0..f.len() {
        for j in i + 1..f.len() {
            let suffix = dfa.distinguishing_suffix(states[i], states[j]);
            dividing &= suffix.is_some();
            witnesses.push(Witness { i, j, suffix });
        }
    }
    debug_assert!(!dividing || f.len() <= l.kappa());
    Ok(DividingCheck {
        dividing,
        witnesses,
    })
}

fn sqrt_up_v(n: usize) -> Result<Lang> {
    let v = families::v(n)?;
    kth_root(&upward_closure(&Lang::word(&Alphabet::first(n)?, &v)?), 2)
}

fn push_unique(out: &mut Vec<Word>, w: Word) {
    if !out.contains(&w) {
        out.push(w);
    }
}

/// `F_1, ..., F_n`: `F_1` and `F_2` are the shortlex residual
/// representatives of `√↑(V_1)` and `√↑(V_2)`, and
/// `F_{k+1} = F_k ∪ F_k·a_{k+1} ∪ a_{k+1}·(F_{k-1} ∖ {V_{k-1}})·a_k`.
/// Each set is checked against `√↑(V_k)` before the next one is built.
pub fn build_sqrt_dividing_family(n: usize) -> Result<Vec<DividingSet>> {
    if n == 0 {
        return Err(Error::InvalidParameter("family size n must be >= 1".into()));
    }
    let mut family: Vec<DividingSet> = Vec::new();
    for k in 1..=n {
        let target = sqrt_up_v(k)?;
        let words = if k <= 2 {
            target.residuals().into_iter().map(|(x, _)| x).collect()
        } else {
            let prev = &family[k - 2].words;
            let prev2 = &family[k - 3].words;
            let ak = Letter(k as u16 - 1);
            let ak1 = Letter(k as u16 - 2);
            let v_prev2 = families::v(k - 2)?;
            let mut words = prev.clone();
            for x in prev {
                push_unique(&mut words, x.concat(&Word::from_letters([ak])));
            }
            for x in prev2.iter().filter(|x| **x != v_prev2) {
                let w = Word::from_letters([ak])
                    .concat(x)
                    .concat(&Word::from_letters([ak1]));
                push_unique(&mut words, w);
            }
            words
        };
        if !verify_dividing_set(&target, &words)?.dividing {
            return Err(Error::DividingSetFailed(k));
        }
        family.push(DividingSet { target, words });
    }
    Ok(family)
}
