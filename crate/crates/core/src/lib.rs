//! State complexity of subword-closed and superword-closed regular
//! languages.
//!
//! The crate is organised bottom-up:
//!
//! * [`word`]: letters, alphabets, words and the subword order `≼`;
//! * [`automata`]: NFAs, canonical complete DFAs ([`Lang`]) and `κ`;
//! * [`closures`]: `↓` and `↑`;
//! * [`roots`]: `√[k]` and `√*` through the transition monoid;
//! * [`substitution`]: regular substitutions `ρ` and `L^{a←K}`;
//! * [`sre`]: simple regular expressions with symbolic quotients;
//! * [`families`]: the witness words and languages `V_n`, `W_n`, `U_n`, ...;
//! * [`experiments`]: dividing sets, the `α(n)` search and the named
//!   verification suites.

pub mod automata;
pub mod closures;
pub mod error;
pub mod experiments;
pub mod families;
pub mod roots;
pub mod sre;
pub mod substitution;
pub mod word;

#[cfg(test)]
mod testkit;

pub use automata::{Dfa, Lang, Nfa};
pub use error::{Error, Result};
pub use sre::{Atom, Product, Sre};
pub use substitution::SubstitutionMap;
pub use word::{Alphabet, Letter, Word};
