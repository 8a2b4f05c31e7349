//! Finite automata and canonical languages.
//!
//! [`Nfa`] is the intermediate form every construction goes through;
//! [`Lang`] wraps a canonical complete [`Dfa`], so its state count is the
//! state complexity and structural equality is language equality.

mod dfa;
pub mod format;
mod lang;
mod nfa;

pub use dfa::Dfa;
pub use lang::{
    alphabet_extend, canonical, determinize, equivalent, kappa, residual, residuals, shuffle_lang,
    BoolOp, Lang,
};
pub use nfa::Nfa;
