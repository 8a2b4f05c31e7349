use std::collections::{HashMap, VecDeque};

use super::nfa::Nfa;
use crate::word::{Alphabet, Word};

/// Complete deterministic automaton. The transition table is total: a sink
/// state is always explicit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dfa {
    alphabet: Alphabet,
    /// `delta[q * k + pos]`
    delta: Vec<u32>,
    initial: u32,
    finals: Vec<bool>,
}

impl Dfa {
    pub(crate) fn from_parts(
        alphabet: Alphabet,
        delta: Vec<u32>,
        initial: u32,
        finals: Vec<bool>,
    ) -> Self {
        assert_eq!(delta.len(), finals.len() * alphabet.len());
        assert!((initial as usize) < finals.len());
        debug_assert!(delta.iter().all(|&q| (q as usize) < finals.len()));
        Dfa {
            alphabet,
            delta,
            initial,
            finals,
        }
    }

    /// Builds a DFA with `n` states from a total transition function over
    /// alphabet positions.
    pub fn from_fn(
        alphabet: Alphabet,
        n: usize,
        initial: usize,
        is_final: impl Fn(usize) -> bool,
        next: impl Fn(usize, usize) -> usize,
    ) -> Self {
        let k = alphabet.len();
        let mut delta = Vec::with_capacity(n * k);
        for q in 0..n {
            for a in 0..k {
                delta.push(next(q, a) as u32);
            }
        }
        let finals = (0..n).map(is_final).collect();
        Dfa::from_parts(alphabet, delta, initial as u32, finals)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.finals.len()
    }

    pub fn initial(&self) -> usize {
        self.initial as usize
    }

    pub fn is_final(&self, q: usize) -> bool {
        self.finals[q]
    }

    #[inline]
    pub fn next(&self, q: usize, pos: usize) -> usize {
        self.delta[q * self.alphabet.len() + pos] as usize
    }

    /// State reached from `from` by reading `w`, or `None` if `w` uses a
    /// letter outside the alphabet.
    pub fn run_from(&self, from: usize, w: &Word) -> Option<usize> {
        let mut q = from;
        for &l in w.letters() {
            q = self.next(q, self.alphabet.position(l)?);
        }
        Some(q)
    }

    pub fn accepts(&self, w: &Word) -> bool {
        self.run_from(self.initial(), w)
            .is_some_and(|q| self.finals[q])
    }

    pub fn with_initial(&self, q: usize) -> Dfa {
        let mut d = self.clone();
        d.initial = q as u32;
        d
    }

    /// States from which some final state is reachable.
    pub fn productive(&self) -> Vec<bool> {
        let n = self.num_states();
        let k = self.alphabet.len();
        let mut rev: Vec<Vec<u32>> = vec![Vec::new(); n];
        for q in 0..n {
            for a in 0..k {
                rev[self.next(q, a)].push(q as u32);
            }
        }
        let mut live = self.finals.clone();
        let mut stack: Vec<usize> = (0..n).filter(|&q| live[q]).collect();
        while let Some(q) = stack.pop() {
            for &p in &rev[q] {
                if !live[p as usize] {
                    live[p as usize] = true;
                    stack.push(p as usize);
                }
            }
        }
        live
    }

    pub fn to_nfa(&self) -> Nfa {
        let mut nfa = Nfa::with_states(self.alphabet.clone(), self.num_states());
        nfa.add_initial(self.initial()).unwrap();
        for q in 0..self.num_states() {
            nfa.set_final(q, self.finals[q]).unwrap();
            for a in 0..self.alphabet.len() {
                nfa.add_transition_pos(q, a, self.next(q, a));
            }
        }
        nfa
    }

    /// Same language over `sigma ⊇ alphabet`; new letters lead to a fresh sink.
    pub(crate) fn extend_alphabet(&self, sigma: &Alphabet) -> Dfa {
        let n = self.num_states();
        let sink = n;
        let map: Vec<Option<usize>> = sigma
            .letters()
            .iter()
            .map(|&l| self.alphabet.position(l))
            .collect();
        Dfa::from_fn(
            sigma.clone(),
            n + 1,
            self.initial(),
            |q| q < n && self.finals[q],
            |q, a| match (q < n, map[a]) {
                (true, Some(p)) => self.next(q, p),
                _ => sink,
            },
        )
    }

    /// Minimal complete DFA with states numbered in BFS order from the
    /// initial state, letters explored in alphabet order.
    pub fn canonical(&self) -> Dfa {
        let k = self.alphabet.len();

        // reachable part, BFS order
        let mut id = vec![u32::MAX; self.num_states()];
        let mut order = vec![self.initial()];
        id[self.initial()] = 0;
        let mut head = 0;
        while head < order.len() {
            let q = order[head];
            head += 1;
            for a in 0..k {
                let r = self.next(q, a);
                if id[r] == u32::MAX {
                    id[r] = order.len() as u32;
                    order.push(r);
                }
            }
        }
        let n = order.len();
        let succ: Vec<u32> = order
            .iter()
            .flat_map(|&q| {
                let id = &id;
                (0..k).map(move |a| id[self.next(q, a)])
            })
            .collect();

        // Moore refinement
        let any_final = order.iter().any(|&q| self.finals[q]);
        let any_nonfinal = order.iter().any(|&q| !self.finals[q]);
        let mut class: Vec<u32> = order.iter().map(|&q| self.finals[q] as u32).collect();
        let mut count = any_final as usize + any_nonfinal as usize;
        let mut key = vec![0u32; k + 1];
        loop {
            let mut sigs: HashMap<Vec<u32>, u32> = HashMap::with_capacity(count * 2);
            let mut next_class = vec![0u32; n];
            for q in 0..n {
                key[0] = class[q];
                for a in 0..k {
                    key[a + 1] = class[succ[q * k + a] as usize];
                }
                let fresh = sigs.len() as u32;
                next_class[q] = *sigs.entry(key.clone()).or_insert(fresh);
            }
            let new_count = sigs.len();
            class = next_class;
            if new_count == count {
                break;
            }
            count = new_count;
        }

        // pick a representative per class, renumber by BFS over classes
        let mut rep = vec![usize::MAX; count];
        for q in (0..n).rev() {
            rep[class[q] as usize] = q;
        }
        let mut cid = vec![u32::MAX; count];
        let mut corder = vec![class[0] as usize];
        cid[class[0] as usize] = 0;
        let mut head = 0;
        while head < corder.len() {
            let c = corder[head];
            head += 1;
            let q = rep[c];
            for a in 0..k {
                let d = class[succ[q * k + a] as usize] as usize;
                if cid[d] == u32::MAX {
                    cid[d] = corder.len() as u32;
                    corder.push(d);
                }
            }
        }
        let mut delta = Vec::with_capacity(count * k);
        let mut finals = Vec::with_capacity(count);
        for &c in &corder {
            let q = rep[c];
            finals.push(self.finals[order[q]]);
            for a in 0..k {
                delta.push(cid[class[succ[q * k + a] as usize] as usize]);
            }
        }
        Dfa::from_parts(self.alphabet.clone(), delta, 0, finals)
    }

    /// Shortest (then lexicographically least) access word of every state
    /// reachable from the initial state; `None` for unreachable states.
    pub fn access_words(&self) -> Vec<Option<Word>> {
        let k = self.alphabet.len();
        let mut acc: Vec<Option<Word>> = vec![None; self.num_states()];
        acc[self.initial()] = Some(Word::empty());
        let mut queue = VecDeque::from([self.initial()]);
        while let Some(q) = queue.pop_front() {
            for a in 0..k {
                let r = self.next(q, a);
                if acc[r].is_none() {
                    let mut w = acc[q].clone().unwrap();
                    w.push(self.alphabet.letter(a));
                    acc[r] = Some(w);
                    queue.push_back(r);
                }
            }
        }
        acc
    }

    /// Shortlex-least word `z` with exactly one of `p·z`, `q·z` accepted.
    pub fn distinguishing_suffix(&self, p: usize, q: usize) -> Option<Word> {
        let k = self.alphabet.len();
        let n = self.num_states();
        let mut parent: HashMap<(usize, usize), ((usize, usize), usize)> = HashMap::new();
        let mut queue = VecDeque::from([(p, q)]);
        parent.insert((p, q), ((p, q), usize::MAX));
        while let Some((x, y)) = queue.pop_front() {
            if self.finals[x] != self.finals[y] {
                let mut letters = Vec::new();
                let mut cur = (x, y);
                while cur != (p, q) {
                    let (prev, a) = parent[&cur];
                    letters.push(self.alphabet.letter(a));
                    cur = prev;
                }
                letters.reverse();
                return Some(Word::from_letters(letters));
            }
            for a in 0..k {
                let nxt = (self.next(x, a), self.next(y, a));
                if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(nxt) {
                    e.insert(((x, y), a));
                    queue.push_back(nxt);
                }
            }
            debug_assert!(parent.len() <= n * n);
        }
        None
    }
}
