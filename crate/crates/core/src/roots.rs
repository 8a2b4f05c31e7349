//! k-th roots and the star root.
//!
//! For a canonical DFA with state set `Q`, every word `x` acts on `Q` by a
//! total map `f_x`. Since `f_{x^k} = f_x^k`, membership of `x` in
//! `{ x : x^k ∈ L }` depends only on `f_x`, so the reachable part of the
//! transition monoid is a DFA for the root.

use std::collections::HashMap;

use crate::automata::{Dfa, Lang};
use crate::error::{Error, Result};

/// Action of a word on the states of a DFA: `self.0[q]` is the state reached
/// from `q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TransitionFunction(pub Vec<u32>);

impl TransitionFunction {
    pub fn identity(n: usize) -> Self {
        TransitionFunction((0..n as u32).collect())
    }

    /// Action of the one-letter word at alphabet position `pos`.
    pub fn of_letter(dfa: &Dfa, pos: usize) -> Self {
        TransitionFunction(
            (0..dfa.num_states())
                .map(|q| dfa.next(q, pos) as u32)
                .collect(),
        )
    }

    pub fn apply(&self, q: usize) -> usize {
        self.0[q] as usize
    }

    /// `self` first, then `other`: the action of `xy` when `self = f_x`
    /// and `other = f_y`.
    pub fn then(&self, other: &TransitionFunction) -> TransitionFunction {
        TransitionFunction(self.0.iter().map(|&q| other.0[q as usize]).collect())
    }

    /// `self^k` by repeated squaring; `k = 0` gives the identity.
    pub fn pow(&self, mut k: usize) -> TransitionFunction {
        let mut acc = TransitionFunction::identity(self.0.len());
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.then(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.then(&base);
            }
        }
        acc
    }
}

/// The reachable transition monoid of `l`'s canonical DFA, as a DFA whose
/// state `i` is the function `elems[i]` and whose initial state is the
/// identity.
struct Monoid {
    elems: Vec<TransitionFunction>,
    delta: Vec<u32>,
}

fn transition_monoid(dfa: &Dfa) -> Monoid {
    let n = dfa.num_states();
    let k = dfa.alphabet().len();
    let letters: Vec<TransitionFunction> = (0..k)
        .map(|a| TransitionFunction::of_letter(dfa, a))
        .collect();
    let id = TransitionFunction::identity(n);
    let mut index: HashMap<TransitionFunction, u32> = HashMap::new();
    index.insert(id.clone(), 0);
    let mut elems = vec![id];
    let mut delta = Vec::new();
    let mut head = 0;
    while head < elems.len() {
        for g in &letters {
            let h = elems[head].then(g);
            let next = match index.get(&h) {
                Some(&i) => i,
                None => {
                    let i = elems.len() as u32;
                    index.insert(h.clone(), i);
                    elems.push(h);
                    i
                }
            };
            delta.push(next);
        }
        head += 1;
    }
    Monoid { elems, delta }
}

fn root_by(l: &Lang, accept: impl Fn(&TransitionFunction) -> bool) -> Lang {
    let dfa = l.dfa();
    let m = transition_monoid(dfa);
    let finals: Vec<bool> = m.elems.iter().map(accept).collect();
    let k = dfa.alphabet().len();
    let n = m.elems.len();
    Lang::from_dfa(&Dfa::from_fn(
        dfa.alphabet().clone(),
        n,
        0,
        |q| finals[q],
        |q, a| m.delta[q * k + a] as usize,
    ))
}

/// `{ x : x^k ∈ L }` for `k ≥ 1`.
pub fn kth_root(l: &Lang, k: usize) -> Result<Lang> {
    if k == 0 {
        return Err(Error::InvalidParameter("root order k must be >= 1".into()));
    }
    let dfa = l.dfa();
    let q0 = dfa.initial();
    Ok(root_by(l, |f| dfa.is_final(f.pow(k).apply(q0))))
}

/// `{ x : x^k ∈ L for some k ≥ 1 }`.
pub fn star_root(l: &Lang) -> Lang {
    let dfa = l.dfa();
    let q0 = dfa.initial();
    let n = dfa.num_states();
    // the orbit of q0 under f is periodic after at most n steps, so
    // exponents 1..=n cover every state it ever visits
    root_by(l, |f| {
        let mut q = q0;
        (0..n).any(|_| {
            q = f.apply(q);
            dfa.is_final(q)
        })
    })
}
