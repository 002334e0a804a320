//! A deterministic engine for a small Prolog subset.
//!
//! The subset covers what insurance-contract encodings actually use:
//! conjunction, disjunction, negation as failure, cut, unification, exact
//! arithmetic with comparisons, and the dynamic-database builtins
//! `assert`/`assertz`/`retract`/`retractall`. Everything else is rejected at
//! read time with an error naming the construct, and execution is bounded by
//! step and depth limits so every query terminates.

mod error;
mod goal;
mod machine;
mod ops;
mod parse;
mod pretty;
mod program;
mod subst;
mod term;

pub use error::{EngineError, ErrorKind, ParseError};
pub use goal::{
    AssertStyle, CmpOp, Goal, GoalFromTermError, goal_from_term, goal_to_term,
    reserved_predicate_name, unsupported_construct,
};
pub use machine::{
    DynamicOp, Engine, Limits, LoadWarning, SolveOutcome, SolveStatus,
};
pub use parse::{Query, parse_goal, parse_program, parse_query, parse_term_str};
pub use pretty::{clause_text, goal_text, program_text, term_text};
pub use program::{Clause, Item, ItemKind, Program, program_alpha_eq};
pub use subst::{Subst, unify};
pub use term::{AlphaMap, Indicator, Number, Term, Var, VarId, alpha_eq, alpha_eq_with};
