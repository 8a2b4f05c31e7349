use std::collections::{HashMap, VecDeque};

use super::dfa::Dfa;
use crate::error::{Error, Result};
use crate::word::{Alphabet, Letter, Word};

/// Nondeterministic automaton with ε-transitions.
///
/// Letter transitions are stored by alphabet position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Alphabet,
    delta: Vec<Vec<(u32, u32)>>,
    eps: Vec<Vec<u32>>,
    initial: Vec<u32>,
    finals: Vec<bool>,
}

impl Nfa {
    pub fn new(alphabet: Alphabet) -> Self {
        Nfa {
            alphabet,
            delta: Vec::new(),
            eps: Vec::new(),
            initial: Vec::new(),
            finals: Vec::new(),
        }
    }

    pub fn with_states(alphabet: Alphabet, n: usize) -> Self {
        let mut nfa = Nfa::new(alphabet);
        for _ in 0..n {
            nfa.add_state();
        }
        nfa
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.finals.len()
    }

    pub fn add_state(&mut self) -> usize {
        self.delta.push(Vec::new());
        self.eps.push(Vec::new());
        self.finals.push(false);
        self.finals.len() - 1
    }

    fn check_state(&self, q: usize) -> Result<()> {
        if q < self.num_states() {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!("state {q} out of range")))
        }
    }

    /// Adds `p --l--> q`, or an ε-transition when `l` is `None`.
    pub fn add_transition(&mut self, p: usize, l: Option<Letter>, q: usize) -> Result<()> {
        self.check_state(p)?;
        self.check_state(q)?;
        match l {
            None => self.eps[p].push(q as u32),
            Some(l) => {
                let pos = self
                    .alphabet
                    .position(l)
                    .ok_or_else(|| Error::LetterOutsideAlphabet(l.to_string()))?;
                self.delta[p].push((pos as u32, q as u32));
            }
        }
        Ok(())
    }

    /// Adds `p --a--> q` where `a` is given by alphabet position.
    pub fn add_transition_pos(&mut self, p: usize, pos: usize, q: usize) {
        debug_assert!(pos < self.alphabet.len());
        self.delta[p].push((pos as u32, q as u32));
    }

    pub fn add_epsilon(&mut self, p: usize, q: usize) {
        self.eps[p].push(q as u32);
    }

    pub fn add_initial(&mut self, q: usize) -> Result<()> {
        self.check_state(q)?;
        if !self.initial.contains(&(q as u32)) {
            self.initial.push(q as u32);
        }
        Ok(())
    }

    pub fn set_final(&mut self, q: usize, accepting: bool) -> Result<()> {
        self.check_state(q)?;
        self.finals[q] = accepting;
        Ok(())
    }

    pub fn initial_states(&self) -> impl Iterator<Item = usize> + '_ {
        self.initial.iter().map(|&q| q as usize)
    }

    pub fn is_final(&self, q: usize) -> bool {
        self.finals[q]
    }

    /// `(source, letter or ε, target)` for every transition.
    pub fn transitions(&self) -> Vec<(usize, Option<Letter>, usize)> {
        let mut out = Vec::new();
        for p in 0..self.num_states() {
            for &(a, q) in &self.delta[p] {
                out.push((p, Some(self.alphabet.letter(a as usize)), q as usize));
            }
            for &q in &self.eps[p] {
                out.push((p, None, q as usize));
            }
        }
        out
    }

    /// Appends a copy of `dfa`'s states; `letter_map[pos]` gives the position
    /// in `self`'s alphabet of the DFA's letter `pos`. Returns the offset.
    pub(crate) fn embed_dfa(&mut self, dfa: &Dfa, letter_map: &[usize]) -> usize {
        let offset = self.num_states();
        for _ in 0..dfa.num_states() {
            self.add_state();
        }
        for q in 0..dfa.num_states() {
            for (pos, &mapped) in letter_map.iter().enumerate() {
                self.add_transition_pos(offset + q, mapped, offset + dfa.next(q, pos));
            }
        }
        offset
    }

    fn closure(&self, set: &mut Vec<u32>, mark: &mut [bool]) {
        let mut stack: Vec<u32> = set.clone();
        for &q in set.iter() {
            mark[q as usize] = true;
        }
        while let Some(p) = stack.pop() {
            for &q in &self.eps[p as usize] {
                if !mark[q as usize] {
                    mark[q as usize] = true;
                    set.push(q);
                    stack.push(q);
                }
            }
        }
        for &q in set.iter() {
            mark[q as usize] = false;
        }
        set.sort_unstable();
        set.dedup();
    }

    pub fn accepts(&self, w: &Word) -> bool {
        let Some(positions) = self.alphabet.positions(w) else {
            return false;
        };
        let mut mark = vec![false; self.num_states()];
        let mut cur = self.initial.clone();
        self.closure(&mut cur, &mut mark);
        for pos in positions {
            let mut next: Vec<u32> = cur
                .iter()
                .flat_map(|&p| self.delta[p as usize].iter())
                .filter(|&&(a, _)| a as usize == pos)
                .map(|&(_, q)| q)
                .collect();
            next.sort_unstable();
            next.dedup();
            self.closure(&mut next, &mut mark);
            cur = next;
        }
        cur.iter().any(|&q| self.finals[q as usize])
    }

    /// Subset construction with ε-closure. The result is complete: the empty
    /// subset, when reachable, is the sink.
    pub fn determinize(&self) -> Dfa {
        let k = self.alphabet.len();
        let mut mark = vec![false; self.num_states()];
        let mut index: HashMap<Vec<u32>, u32> = HashMap::new();
        let mut subsets: Vec<Vec<u32>> = Vec::new();
        let mut delta: Vec<u32> = Vec::new();
        let mut queue = VecDeque::new();

        let mut start = self.initial.clone();
        self.closure(&mut start, &mut mark);
        index.insert(start.clone(), 0);
        subsets.push(start);
        queue.push_back(0usize);

        let mut buckets: Vec<Vec<u32>> = vec![Vec::new(); k];
        while let Some(s) = queue.pop_front() {
            for b in buckets.iter_mut() {
                b.clear();
            }
            for &p in &subsets[s] {
                for &(a, q) in &self.delta[p as usize] {
                    buckets[a as usize].push(q);
                }
            }
            debug_assert_eq!(delta.len(), s * k);
            for bucket in buckets.iter_mut() {
                bucket.sort_unstable();
                bucket.dedup();
                self.closure(bucket, &mut mark);
                let id = match index.get(bucket.as_slice()) {
                    Some(&id) => id,
                    None => {
                        let id = subsets.len() as u32;
                        index.insert(bucket.clone(), id);
                        subsets.push(bucket.clone());
                        queue.push_back(id as usize);
                        id
                    }
                };
                delta.push(id);
            }
        }
        let finals = subsets
            .iter()
            .map(|s| s.iter().any(|&q| self.finals[q as usize]))
            .collect();
        Dfa::from_parts(self.alphabet.clone(), delta, 0, finals)
    }
}
