//! Formulas, parsing, the rationality translation and normal forms.

mod formula;
mod normal_form;
mod parser;
mod translate;

use thiserror::Error;

pub use formula::{Coalition, Formula, Modality};
pub use normal_form::{conjunction_of, normal_form, Capability, Literal, StandardDisjunction};
pub use parser::{parse_formula, parse_formula_with, ParseOptions};
pub use translate::{rat_all, rat_atom, translate_tr};

/// Atoms with this prefix are reserved for the rationality translation.
pub const RESERVED_PREFIX: &str = "rat_";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LogicError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown agent `{0}` in coalition")]
    UnknownAgent(String),
    #[error("atom `{0}` uses the reserved `rat_` prefix")]
    ReservedAtom(String),
    #[error("only next-time operators are supported here, found `{0}`")]
    Fragment(String),
}
