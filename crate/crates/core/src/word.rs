//! Letters, alphabets and words, together with the subword order and the
//! word-level combinators built on it (conjugates, shuffles, cut-and-shuffle).

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A letter, identified by its index in the global letter order `a < b < ...`.
///
/// Indices `0..26` print as `a`..`z`; larger indices print as `a<k>`
/// (for instance `a26`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u16);

impl Letter {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn name(self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 < 26 {
            write!(f, "{}", (b'a' + self.0 as u8) as char)
        } else {
            write!(f, "a{}", self.0)
        }
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let w: Word = s.parse()?;
        match w.letters() {
            [l] => Ok(*l),
            _ => Err(Error::WordSyntax {
                text: s.to_string(),
                msg: "expected exactly one letter".into(),
            }),
        }
    }
}

/// A finite, non-empty, ordered set of letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet {
    letters: Vec<Letter>,
}

impl Alphabet {
    pub fn new<I: IntoIterator<Item = Letter>>(letters: I) -> Result<Self> {
        let set: BTreeSet<Letter> = letters.into_iter().collect();
        if set.is_empty() {
            return Err(Error::InvalidParameter("alphabet must be non-empty".into()));
        }
        Ok(Alphabet {
            letters: set.into_iter().collect(),
        })
    }

    /// The alphabet `{a_1, ..., a_n}`.
    pub fn first(n: usize) -> Result<Self> {
        if n == 0 || n > u16::MAX as usize {
            return Err(Error::InvalidParameter(format!("alphabet size {n}")));
        }
        Ok(Alphabet {
            letters: (0..n as u16).map(Letter).collect(),
        })
    }

    /// Letters occurring in `w`, or `{a}` when `w` is empty.
    pub fn of_word(w: &Word) -> Self {
        Self::new(w.letters().iter().copied()).unwrap_or_else(|_| Self::first(1).unwrap())
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in text.split(|c: char| c.is_whitespace() || c == ',') {
            if tok.is_empty() {
                continue;
            }
            letters.extend(tok.parse::<Word>()?.letters().iter().copied());
        }
        Self::new(letters)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn letter(&self, pos: usize) -> Letter {
        self.letters[pos]
    }

    pub fn position(&self, l: Letter) -> Option<usize> {
        self.letters.binary_search(&l).ok()
    }

    pub fn contains(&self, l: Letter) -> bool {
        self.position(l).is_some()
    }

    pub fn is_superset_of(&self, other: &Alphabet) -> bool {
        other.letters.iter().all(|&l| self.contains(l))
    }

    pub fn union(&self, other: &Alphabet) -> Alphabet {
        Alphabet::new(self.letters.iter().chain(other.letters.iter()).copied()).unwrap()
    }

    /// Positions in `self` of a word's letters, or `None` if a letter is foreign.
    pub fn positions(&self, w: &Word) -> Option<Vec<usize>> {
        w.letters().iter().map(|&l| self.position(l)).collect()
    }

    /// Every word of exactly length `len`, in lexicographic order.
    pub fn words_of_length(&self, len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..len {
            out = out
                .iter()
                .flat_map(|w| {
                    self.letters.iter().map(move |&l| {
                        let mut v = w.clone();
                        v.push(l);
                        v
                    })
                })
                .collect();
        }
        out
    }

    /// Every word of length at most `max_len`, in shortlex order.
    pub fn words_up_to(&self, max_len: usize) -> Vec<Word> {
        (0..=max_len)
            .flat_map(|n| self.words_of_length(n))
            .collect()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{{{}}}", names.join(","))
    }
}

/// A finite word. `Ord` is shortlex: shorter words first, then lexicographic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        Word(letters.into_iter().collect())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    /// `|u|_a`
    pub fn count(&self, a: Letter) -> usize {
        self.0.iter().filter(|&&l| l == a).count()
    }

    /// `Σ(u)`
    pub fn letter_set(&self) -> BTreeSet<Letter> {
        self.0.iter().copied().collect()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn pow(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    pub fn prefix(&self, n: usize) -> Word {
        Word(self.0[..n].to_vec())
    }

    pub fn suffix_from(&self, i: usize) -> Word {
        Word(self.0[i..].to_vec())
    }

    /// The words obtained by deleting exactly one letter.
    pub fn one_letter_deletions(&self) -> BTreeSet<Word> {
        (0..self.len())
            .map(|i| {
                let mut v = self.0.clone();
                v.remove(i);
                Word(v)
            })
            .collect()
    }

    /// Apply `f` to every letter.
    pub fn map(&self, mut f: impl FnMut(Letter) -> Letter) -> Word {
        Word(self.0.iter().map(|&l| f(l)).collect())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses a plain string of letter names; `a<k>` with `k >= 26` names
    /// the letter of index `k`.
    fn from_str(s: &str) -> Result<Self> {
        let err = |msg: &str| Error::WordSyntax {
            text: s.to_string(),
            msg: msg.to_string(),
        };
        let bytes = s.as_bytes();
        let mut out = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i];
            if !c.is_ascii_lowercase() {
                return Err(err(&format!("unexpected character {:?}", c as char)));
            }
            i += 1;
            if c == b'a' && i < bytes.len() && bytes[i].is_ascii_digit() {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let k: u16 = s[start..i]
                    .parse()
                    .map_err(|_| err("letter index too large"))?;
                if k < 26 {
                    return Err(err("indices below 26 must use their single-letter name"));
                }
                out.push(Letter(k));
            } else {
                out.push(Letter((c - b'a') as u16));
            }
        }
        Ok(Word(out))
    }
}

/// `x ≼ y`: `x` is a scattered subword of `y`.
pub fn is_subword(x: &Word, y: &Word) -> bool {
    let mut it = y.0.iter();
    x.0.iter().all(|l| it.any(|m| m == l))
}

/// All rotations `v'v` of `u = vv'`, deduplicated and sorted.
pub fn conjugates(u: &Word) -> BTreeSet<Word> {
    if u.is_empty() {
        return BTreeSet::from([Word::empty()]);
    }
    (0..u.len())
        .map(|i| {
            let mut v = u.0[i..].to_vec();
            v.extend_from_slice(&u.0[..i]);
            Word(v)
        })
        .collect()
}

/// All interleavings of `t` and `v`.
pub fn word_shuffle(t: &Word, v: &Word) -> BTreeSet<Word> {
    // layer[j] holds the interleavings of t[..i] and v[..j] for the current i
    let mut layer: Vec<BTreeSet<Word>> = Vec::with_capacity(v.len() + 1);
    layer.push(BTreeSet::from([Word::empty()]));
    for j in 1..=v.len() {
        let prev: BTreeSet<Word> = layer[j - 1]
            .iter()
            .map(|w| {
                let mut w = w.clone();
                w.push(v.0[j - 1]);
                w
            })
            .collect();
        layer.push(prev);
    }
    for i in 1..=t.len() {
        let a = t.0[i - 1];
        let mut next: Vec<BTreeSet<Word>> = Vec::with_capacity(v.len() + 1);
        for j in 0..=v.len() {
            let mut cell: BTreeSet<Word> = layer[j]
                .iter()
                .map(|w| {
                    let mut w = w.clone();
                    w.push(a);
                    w
                })
                .collect();
            if j > 0 {
                let b = v.0[j - 1];
                cell.extend(next[j - 1].iter().map(|w: &Word| {
                    let mut w = w.clone();
                    w.push(b);
                    w
                }));
            }
            next.push(cell);
        }
        layer = next;
    }
    layer.pop().unwrap()
}

/// `CS(w)`: the union over all cuts `w = tv` of `t ⧢ v`.
pub fn cut_shuffle(w: &Word) -> BTreeSet<Word> {
    (0..=w.len())
        .flat_map(|i| word_shuffle(&w.prefix(i), &w.suffix_from(i)))
        .collect()
}

/// Renames letters by order of first occurrence, giving the canonical
/// representative of `w` under alphabet bijections.
pub fn normalize_word(w: &Word) -> Word {
    let mut seen: Vec<Letter> = Vec::new();
    w.map(|l| match seen.iter().position(|&m| m == l) {
        Some(i) => Letter(i as u16),
        None => {
            seen.push(l);
            Letter((seen.len() - 1) as u16)
        }
    })
}
