use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use super::dfa::Dfa;
use super::nfa::Nfa;
use crate::error::{Error, Result};
use crate::word::{Alphabet, Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoolOp {
    Union,
    Intersection,
    Difference,
    SymmetricDifference,
}

impl BoolOp {
    fn apply(self, x: bool, y: bool) -> bool {
        match self {
            BoolOp::Union => x || y,
            BoolOp::Intersection => x && y,
            BoolOp::Difference => x && !y,
            BoolOp::SymmetricDifference => x != y,
        }
    }
}

/// A regular language over a declared alphabet, held as its canonical
/// (minimal, complete, BFS-numbered) DFA.
///
/// Two `Lang`s over the same alphabet are equal exactly when they denote the
/// same set of words, so `==` and `Hash` are language equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Lang {
    dfa: Dfa,
}

impl fmt::Debug for Lang {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Lang(kappa={}, alphabet={}, shortest={:?})",
            self.kappa(),
            self.alphabet(),
            self.sample(4)
                .iter()
                .map(|w| w.to_string())
                .collect::<Vec<_>>()
        )
    }
}

/// Minimal complete DFA for the language of `dfa`.
pub fn canonical(dfa: &Dfa) -> Lang {
    Lang {
        dfa: dfa.canonical(),
    }
}

pub fn determinize(nfa: &Nfa) -> Dfa {
    nfa.determinize()
}

impl Lang {
    pub fn from_dfa(dfa: &Dfa) -> Lang {
        canonical(dfa)
    }

    pub fn from_nfa(nfa: &Nfa) -> Lang {
        canonical(&nfa.determinize())
    }

    pub fn empty(alphabet: &Alphabet) -> Lang {
        Lang::from_dfa(&Dfa::from_fn(alphabet.clone(), 1, 0, |_| false, |_, _| 0))
    }

    pub fn universal(alphabet: &Alphabet) -> Lang {
        Lang::from_dfa(&Dfa::from_fn(alphabet.clone(), 1, 0, |_| true, |_, _| 0))
    }

    /// `{ε}`
    pub fn epsilon(alphabet: &Alphabet) -> Lang {
        Lang::from_dfa(&Dfa::from_fn(alphabet.clone(), 2, 0, |q| q == 0, |_, _| 1))
    }

    /// The singleton `{w}`.
    pub fn word(alphabet: &Alphabet, w: &Word) -> Result<Lang> {
        let pos = alphabet
            .positions(w)
            .ok_or_else(|| Error::LetterOutsideAlphabet(w.to_string()))?;
        let n = w.len();
        Ok(Lang::from_dfa(&Dfa::from_fn(
            alphabet.clone(),
            n + 2,
            0,
            |q| q == n,
            |q, a| if q < n && pos[q] == a { q + 1 } else { n + 1 },
        )))
    }

    /// A finite language.
    pub fn words<'a>(
        alphabet: &Alphabet,
        words: impl IntoIterator<Item = &'a Word>,
    ) -> Result<Lang> {
        let mut nfa = Nfa::new(alphabet.clone());
        for w in words {
            let pos = alphabet
                .positions(w)
                .ok_or_else(|| Error::LetterOutsideAlphabet(w.to_string()))?;
            let mut q = nfa.add_state();
            nfa.add_initial(q)?;
            for a in pos {
                let r = nfa.add_state();
                nfa.add_transition_pos(q, a, r);
                q = r;
            }
            nfa.set_final(q, true)?;
        }
        Ok(Lang::from_nfa(&nfa))
    }

    /// `↓(w)`, built directly: state `i` means the greedy embedding of the
    /// input consumed `w[..i]`.
    pub fn down_word(alphabet: &Alphabet, w: &Word) -> Result<Lang> {
        let pos = alphabet
            .positions(w)
            .ok_or_else(|| Error::LetterOutsideAlphabet(w.to_string()))?;
        let n = w.len();
        Ok(Lang::from_dfa(&Dfa::from_fn(
            alphabet.clone(),
            n + 2,
            0,
            |q| q <= n,
            |q, a| {
                if q > n {
                    return n + 1;
                }
                match pos[q..].iter().position(|&b| b == a) {
                    Some(i) => q + i + 1,
                    None => n + 1,
                }
            },
        )))
    }

    /// `↑(w)` over `alphabet`.
    pub fn up_word(alphabet: &Alphabet, w: &Word) -> Result<Lang> {
        let pos = alphabet
            .positions(w)
            .ok_or_else(|| Error::LetterOutsideAlphabet(w.to_string()))?;
        let n = w.len();
        Ok(Lang::from_dfa(&Dfa::from_fn(
            alphabet.clone(),
            n + 1,
            0,
            |q| q == n,
            |q, a| if q < n && pos[q] == a { q + 1 } else { q },
        )))
    }

    pub fn dfa(&self) -> &Dfa {
        &self.dfa
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.dfa.alphabet()
    }

    /// State complexity: number of states of the canonical complete DFA,
    /// i.e. the number of distinct left quotients (∅ included).
    pub fn kappa(&self) -> usize {
        self.dfa.num_states()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.dfa.accepts(w)
    }

    pub fn is_empty(&self) -> bool {
        self.kappa() == 1 && !self.dfa.is_final(0)
    }

    pub fn is_universal(&self) -> bool {
        self.kappa() == 1 && self.dfa.is_final(0)
    }

    pub fn contains_epsilon(&self) -> bool {
        self.dfa.is_final(self.dfa.initial())
    }

    /// The state of the canonical DFA that denotes `∅`, if any.
    pub fn sink(&self) -> Option<usize> {
        let k = self.alphabet().len();
        (0..self.kappa())
            .find(|&q| !self.dfa.is_final(q) && (0..k).all(|a| self.dfa.next(q, a) == q))
    }

    /// The language accepted from state `q` of the canonical DFA.
    pub fn state_lang(&self, q: usize) -> Lang {
        Lang::from_dfa(&self.dfa.with_initial(q))
    }

    /// Left quotient `L/x = { y : xy ∈ L }`.
    pub fn residual(&self, x: &Word) -> Lang {
        match self.dfa.run_from(self.dfa.initial(), x) {
            Some(q) => self.state_lang(q),
            None => Lang::empty(self.alphabet()),
        }
    }

    /// One `(access word, quotient)` per state of the canonical DFA, in state
    /// order; the access word is shortlex-least.
    pub fn residuals(&self) -> Vec<(Word, Lang)> {
        self.dfa
            .access_words()
            .into_iter()
            .enumerate()
            .map(|(q, w)| (w.expect("canonical DFA is reachable"), self.state_lang(q)))
            .collect()
    }

    /// `Σ(L)`: letters occurring in at least one word of `L`.
    pub fn used_letters(&self) -> BTreeSet<Letter> {
        let live = self.dfa.productive();
        let k = self.alphabet().len();
        (0..k)
            .filter(|&a| (0..self.kappa()).any(|q| live[self.dfa.next(q, a)]))
            .map(|a| self.alphabet().letter(a))
            .collect()
    }

    fn check_same_alphabet(&self, other: &Lang) -> Result<()> {
        if self.alphabet() == other.alphabet() {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch {
                left: self.alphabet().to_string(),
                right: other.alphabet().to_string(),
            })
        }
    }

    pub fn complement(&self) -> Lang {
        let d = &self.dfa;
        Lang::from_dfa(&Dfa::from_fn(
            self.alphabet().clone(),
            d.num_states(),
            d.initial(),
            |q| !d.is_final(q),
            |q, a| d.next(q, a),
        ))
    }

    /// Product construction over the reachable pairs.
    pub fn boolean(&self, other: &Lang, op: BoolOp) -> Result<Lang> {
        self.check_same_alphabet(other)?;
        let (d1, d2) = (&self.dfa, &other.dfa);
        let k = self.alphabet().len();
        let mut index: HashMap<(usize, usize), usize> = HashMap::new();
        let mut pairs = vec![(d1.initial(), d2.initial())];
        index.insert(pairs[0], 0);
        let mut delta = Vec::new();
        let mut head = 0;
        while head < pairs.len() {
            let (p, q) = pairs[head];
            head += 1;
            for a in 0..k {
                let nxt = (d1.next(p, a), d2.next(q, a));
                let id = *index.entry(nxt).or_insert_with(|| {
                    pairs.push(nxt);
                    pairs.len() - 1
                });
                delta.push(id as u32);
            }
        }
        let finals = pairs
            .iter()
            .map(|&(p, q)| op.apply(d1.is_final(p), d2.is_final(q)))
            .collect();
        Ok(Lang::from_dfa(&Dfa::from_parts(
            self.alphabet().clone(),
            delta,
            0,
            finals,
        )))
    }

    pub fn union(&self, other: &Lang) -> Result<Lang> {
        self.boolean(other, BoolOp::Union)
    }

    pub fn intersection(&self, other: &Lang) -> Result<Lang> {
        self.boolean(other, BoolOp::Intersection)
    }

    pub fn difference(&self, other: &Lang) -> Result<Lang> {
        self.boolean(other, BoolOp::Difference)
    }

    pub fn symmetric_difference(&self, other: &Lang) -> Result<Lang> {
        self.boolean(other, BoolOp::SymmetricDifference)
    }

    pub fn is_subset(&self, other: &Lang) -> Result<bool> {
        Ok(self.difference(other)?.is_empty())
    }

    /// Language equality; both canonical DFAs must coincide.
    pub fn equivalent(&self, other: &Lang) -> Result<bool> {
        self.check_same_alphabet(other)?;
        Ok(self == other)
    }

    pub fn concat(&self, other: &Lang) -> Result<Lang> {
        self.check_same_alphabet(other)?;
        let identity: Vec<usize> = (0..self.alphabet().len()).collect();
        let mut nfa = Nfa::new(self.alphabet().clone());
        let o1 = nfa.embed_dfa(&self.dfa, &identity);
        let o2 = nfa.embed_dfa(&other.dfa, &identity);
        nfa.add_initial(o1 + self.dfa.initial())?;
        for q in 0..self.kappa() {
            if self.dfa.is_final(q) {
                nfa.add_epsilon(o1 + q, o2 + other.dfa.initial());
            }
        }
        for q in 0..other.kappa() {
            nfa.set_final(o2 + q, other.dfa.is_final(q))?;
        }
        Ok(Lang::from_nfa(&nfa))
    }

    /// `L^k` for `k ≥ 1`.
    pub fn power(&self, k: usize) -> Result<Lang> {
        if k == 0 {
            return Err(Error::InvalidParameter("power requires k >= 1".into()));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.concat(self)?;
        }
        Ok(acc)
    }

    /// Shuffle (interleaving) of two languages over the same alphabet.
    pub fn shuffle(&self, other: &Lang) -> Result<Lang> {
        self.check_same_alphabet(other)?;
        let (d1, d2) = (&self.dfa, &other.dfa);
        let (n1, n2) = (d1.num_states(), d2.num_states());
        let k = self.alphabet().len();
        let mut nfa = Nfa::with_states(self.alphabet().clone(), n1 * n2);
        let id = |p: usize, q: usize| p * n2 + q;
        for p in 0..n1 {
            for q in 0..n2 {
                for a in 0..k {
                    nfa.add_transition_pos(id(p, q), a, id(d1.next(p, a), q));
                    nfa.add_transition_pos(id(p, q), a, id(p, d2.next(q, a)));
                }
                nfa.set_final(id(p, q), d1.is_final(p) && d2.is_final(q))?;
            }
        }
        nfa.add_initial(id(d1.initial(), d2.initial()))?;
        Ok(Lang::from_nfa(&nfa))
    }

    /// The same set of words viewed over a larger alphabet.
    pub fn extend_alphabet(&self, sigma: &Alphabet) -> Result<Lang> {
        if !sigma.is_superset_of(self.alphabet()) {
            return Err(Error::NotSuperset {
                source_alphabet: self.alphabet().to_string(),
                target: sigma.to_string(),
            });
        }
        if sigma == self.alphabet() {
            return Ok(self.clone());
        }
        Ok(Lang::from_dfa(&self.dfa.extend_alphabet(sigma)))
    }

    /// The same set of words over a smaller alphabet, which must still
    /// contain every letter of [`Lang::used_letters`].
    pub fn restrict_alphabet(&self, sigma: &Alphabet) -> Result<Lang> {
        if !self.alphabet().is_superset_of(sigma) {
            return Err(Error::NotSuperset {
                source_alphabet: sigma.to_string(),
                target: self.alphabet().to_string(),
            });
        }
        if let Some(l) = self
            .used_letters()
            .into_iter()
            .find(|l| !sigma.contains(*l))
        {
            return Err(Error::LetterOutsideAlphabet(l.to_string()));
        }
        let d = &self.dfa;
        let pos: Vec<usize> = sigma
            .letters()
            .iter()
            .map(|&l| self.alphabet().position(l).expect("checked subset"))
            .collect();
        Ok(Lang::from_dfa(&Dfa::from_fn(
            sigma.clone(),
            d.num_states(),
            d.initial(),
            |q| d.is_final(q),
            |q, a| d.next(q, pos[a]),
        )))
    }

    /// Members of length exactly `len`, in lexicographic order.
    pub fn members_of_length(&self, len: usize) -> Vec<Word> {
        let live = self.dfa.productive();
        let k = self.alphabet().len();
        let mut layer: Vec<(Word, usize)> = if live[self.dfa.initial()] {
            vec![(Word::empty(), self.dfa.initial())]
        } else {
            Vec::new()
        };
        for _ in 0..len {
            let mut next = Vec::new();
            for (w, q) in &layer {
                for a in 0..k {
                    let r = self.dfa.next(*q, a);
                    if live[r] {
                        let mut v = w.clone();
                        v.push(self.alphabet().letter(a));
                        next.push((v, r));
                    }
                }
            }
            layer = next;
        }
        layer
            .into_iter()
            .filter(|(_, q)| self.dfa.is_final(*q))
            .map(|(w, _)| w)
            .collect()
    }

    /// Up to `limit` shortest members, in shortlex order.
    pub fn sample(&self, limit: usize) -> Vec<Word> {
        let live = self.dfa.productive();
        let k = self.alphabet().len();
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        if live[self.dfa.initial()] {
            queue.push_back((Word::empty(), self.dfa.initial()));
        }
        while let Some((w, q)) = queue.pop_front() {
            if out.len() >= limit {
                break;
            }
            if self.dfa.is_final(q) {
                out.push(w.clone());
            }
            if queue.len() > 4 * limit + 64 {
                continue;
            }
            for a in 0..k {
                let r = self.dfa.next(q, a);
                if live[r] {
                    let mut v = w.clone();
                    v.push(self.alphabet().letter(a));
                    queue.push_back((v, r));
                }
            }
        }
        out
    }
}

/// State complexity of `l`.
pub fn kappa(l: &Lang) -> usize {
    l.kappa()
}

pub fn residual(l: &Lang, x: &Word) -> Lang {
    l.residual(x)
}

pub fn residuals(l: &Lang) -> Vec<(Word, Lang)> {
    l.residuals()
}

pub fn equivalent(l1: &Lang, l2: &Lang) -> Result<bool> {
    l1.equivalent(l2)
}

pub fn alphabet_extend(l: &Lang, sigma: &Alphabet) -> Result<Lang> {
    l.extend_alphabet(sigma)
}

pub fn shuffle_lang(l1: &Lang, l2: &Lang) -> Result<Lang> {
    l1.shuffle(l2)
}
