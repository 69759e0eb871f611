//! A two-sorted term language over programs and tests, with a parser,
//! printer, evaluator and identity checker.

pub mod ast;
pub mod check;
pub mod corpus;
pub mod eval;
pub mod parser;
mod printer;

pub use ast::{Equation, Identity, ProgTerm, Sort, Term, TestTerm, Vars};
pub use check::{
    check_identity, check_identity_universal, check_identity_universal_in, Counterexample, IdentityOutcome,
    ModelRun, Semantics, UniversalReport,
};
pub use corpus::{builtin_corpus, CorpusEntry, Family};
pub use eval::{eval, eval_prog, eval_test, Env, Model};
pub use parser::{parse_any_term, parse_identity, parse_term};
