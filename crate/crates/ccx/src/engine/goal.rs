//! Executable goals and the translation between goals and terms.

use crate::engine::term::{AlphaMap, Term, alpha_eq_with};

/// Comparison operators over arithmetic expressions.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CmpOp {
    /// `<`
    Lt,
    /// `>`
    Gt,
    /// `=<`
    Le,
    /// `>=`
    Ge,
    /// `=:=`
    NumEq,
    /// `=\=`
    NumNe,
}

impl CmpOp {
    pub fn symbol(self) -> &'static str {
        match self {
            CmpOp::Lt => "<",
            CmpOp::Gt => ">",
            CmpOp::Le => "=<",
            CmpOp::Ge => ">=",
            CmpOp::NumEq => "=:=",
            CmpOp::NumNe => "=\\=",
        }
    }
}

/// Which spelling of the append builtin was written. Both behave identically
/// (append at the end of the predicate); the distinction is kept so programs
/// print back the way they were written.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AssertStyle {
    Assert,
    Assertz,
}

impl AssertStyle {
    pub fn name(self) -> &'static str {
        match self {
            AssertStyle::Assert => "assert",
            AssertStyle::Assertz => "assertz",
        }
    }
}

/// A goal ready for execution.
#[derive(Clone, PartialEq, Debug)]
pub enum Goal {
    /// `true` — always succeeds.
    True,
    /// `fail` — always fails.
    Fail,
    /// `!` — commits to the choices made since the enclosing clause was entered.
    Cut,
    /// `A, B`
    Conj(Box<Goal>, Box<Goal>),
    /// `A ; B`
    Disj(Box<Goal>, Box<Goal>),
    /// `\+ G` — negation as failure.
    Naf(Box<Goal>),
    /// `X = Y` — unification.
    Unify(Term, Term),
    /// Arithmetic comparison, e.g. `X < 213`.
    Compare(CmpOp, Term, Term),
    /// `X is Expr` — arithmetic evaluation.
    Is(Term, Term),
    /// `assert(C)` / `assertz(C)`
    Assert(AssertStyle, Term),
    /// `retract(C)` — removes the first matching clause, or fails.
    Retract(Term),
    /// `retractall(H)` — removes every clause whose head matches; always succeeds.
    Retractall(Term),
    /// A call to a user-defined predicate.
    Call(Term),
}

/// Why a term cannot be used as a goal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GoalFromTermError {
    /// A recognised Prolog construct that the engine deliberately does not
    /// support, e.g. `findall/3` or `->`.
    Unsupported { construct: String, indicator: String },
    /// The term is not callable (a number or an unbound variable).
    NotCallable(String),
    /// A control or builtin name used with the wrong arity, e.g. `is/3`.
    BadArity(String),
}

impl std::fmt::Display for GoalFromTermError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GoalFromTermError::Unsupported { construct, indicator } => {
                write!(f, "unsupported construct {construct} ({indicator})")
            }
            GoalFromTermError::NotCallable(what) => {
                write!(f, "{what} is not a callable goal")
            }
            GoalFromTermError::BadArity(ind) => {
                write!(f, "{ind} is not a supported goal")
            }
        }
    }
}

/// Builtin constructs that take a fixed role in goals. User predicates may
/// not redefine these names at any arity.
pub fn reserved_predicate_name(name: &str) -> bool {
    matches!(
        name,
        "," | ";"
            | "\\+"
            | "!"
            | "true"
            | "fail"
            | "="
            | "<"
            | ">"
            | "=<"
            | ">="
            | "=:="
            | "=\\="
            | "is"
            | "assert"
            | "assertz"
            | "retract"
            | "retractall"
            | "dynamic"
            | ":-"
            | "?-"
    )
}

/// Well-known Prolog constructs outside the subset, reported by name.
pub fn unsupported_construct(name: &str, arity: usize) -> Option<&'static str> {
    let known = match name {
        "->" => "if-then",
        "*->" => "soft-cut",
        "\\=" => "non-unifiability test",
        "==" | "\\==" | "@<" | "@>" | "@=<" | "@>=" => "term ordering comparison",
        "=.." => "univ",
        "findall" | "bagof" | "setof" | "aggregate_all" => "all-solutions collection",
        "call" => "meta-call",
        "not" => "not/1 negation (write \\+ instead)",
        "asserta" => "asserta/1 (front insertion)",
        "abolish" => "abolish",
        "atom" | "var" | "nonvar" | "number" | "atomic" | "compound" | "callable"
        | "is_list" | "integer" | "float" => "type test",
        "atom_codes" | "atom_chars" | "atom_length" | "atom_concat" | "number_codes"
        | "number_chars" | "sub_atom" | "char_code" | "atom_number" => "atom processing",
        "functor" | "arg" | "copy_term" => "term inspection",
        "write" | "writeln" | "print" | "nl" | "read" | "format" | "tab" => "input/output",
        "halt" => "halt",
        "between" | "succ" | "plus" | "length" | "append" | "member" | "memberchk"
        | "nth0" | "nth1" | "reverse" | "msort" | "sort" | "last" | "sum_list"
        | "max_list" | "min_list" => "list/library predicate",
        "catch" | "throw" => "exception handling",
        "false" => "false/0 (write fail instead)",
        "forall" => "forall",
        "op" => "operator definition",
        "consult" | "ensure_loaded" | "use_module" | "include" | "set_prolog_flag" => {
            "file/module directive"
        }
        _ => return None,
    };
    // Only flag the arities these constructs are actually used at; anything
    // else falls through to the normal undefined-predicate path.
    let _ = arity;
    Some(known)
}

/// Converts a parsed term into an executable goal.
pub fn goal_from_term(t: &Term) -> Result<Goal, GoalFromTermError> {
    match t {
        Term::Atom(name) => match name.as_str() {
            "true" => Ok(Goal::True),
            "fail" => Ok(Goal::Fail),
            "!" => Ok(Goal::Cut),
            _ => {
                if let Some(construct) = unsupported_construct(name, 0) {
                    return Err(GoalFromTermError::Unsupported {
                        construct: construct.to_string(),
                        indicator: format!("{name}/0"),
                    });
                }
                Ok(Goal::Call(t.clone()))
            }
        },
        Term::Compound(name, args) => {
            match (name.as_str(), args.len()) {
                (",", 2) => Ok(Goal::Conj(
                    Box::new(goal_from_term(&args[0])?),
                    Box::new(goal_from_term(&args[1])?),
                )),
                (";", 2) => Ok(Goal::Disj(
                    Box::new(goal_from_term(&args[0])?),
                    Box::new(goal_from_term(&args[1])?),
                )),
                ("\\+", 1) => Ok(Goal::Naf(Box::new(goal_from_term(&args[0])?))),
                ("=", 2) => Ok(Goal::Unify(args[0].clone(), args[1].clone())),
                ("<", 2) => Ok(Goal::Compare(CmpOp::Lt, args[0].clone(), args[1].clone())),
                (">", 2) => Ok(Goal::Compare(CmpOp::Gt, args[0].clone(), args[1].clone())),
                ("=<", 2) => Ok(Goal::Compare(CmpOp::Le, args[0].clone(), args[1].clone())),
                (">=", 2) => Ok(Goal::Compare(CmpOp::Ge, args[0].clone(), args[1].clone())),
                ("=:=", 2) => Ok(Goal::Compare(CmpOp::NumEq, args[0].clone(), args[1].clone())),
                ("=\\=", 2) => Ok(Goal::Compare(CmpOp::NumNe, args[0].clone(), args[1].clone())),
                ("is", 2) => Ok(Goal::Is(args[0].clone(), args[1].clone())),
                ("assert", 1) => Ok(Goal::Assert(AssertStyle::Assert, args[0].clone())),
                ("assertz", 1) => Ok(Goal::Assert(AssertStyle::Assertz, args[0].clone())),
                ("retract", 1) => Ok(Goal::Retract(args[0].clone())),
                ("retractall", 1) => Ok(Goal::Retractall(args[0].clone())),
                _ => {
                    if let Some(construct) = unsupported_construct(name, args.len()) {
                        return Err(GoalFromTermError::Unsupported {
                            construct: construct.to_string(),
                            indicator: format!("{}/{}", name, args.len()),
                        });
                    }
                    if reserved_predicate_name(name) {
                        return Err(GoalFromTermError::BadArity(format!(
                            "{}/{}",
                            name,
                            args.len()
                        )));
                    }
                    Ok(Goal::Call(t.clone()))
                }
            }
        }
        Term::Var(v) => Err(GoalFromTermError::NotCallable(format!("variable {}", v.name))),
        Term::Number(n) => Err(GoalFromTermError::NotCallable(format!("number {n}"))),
    }
}

/// The term a goal came from; inverse of [`goal_from_term`].
pub fn goal_to_term(g: &Goal) -> Term {
    match g {
        Goal::True => Term::atom("true"),
        Goal::Fail => Term::atom("fail"),
        Goal::Cut => Term::atom("!"),
        Goal::Conj(a, b) => Term::compound(",", vec![goal_to_term(a), goal_to_term(b)]),
        Goal::Disj(a, b) => Term::compound(";", vec![goal_to_term(a), goal_to_term(b)]),
        Goal::Naf(g) => Term::compound("\\+", vec![goal_to_term(g)]),
        Goal::Unify(a, b) => Term::compound("=", vec![a.clone(), b.clone()]),
        Goal::Compare(op, a, b) => Term::compound(op.symbol(), vec![a.clone(), b.clone()]),
        Goal::Is(a, b) => Term::compound("is", vec![a.clone(), b.clone()]),
        Goal::Assert(style, c) => Term::compound(style.name(), vec![c.clone()]),
        Goal::Retract(c) => Term::compound("retract", vec![c.clone()]),
        Goal::Retractall(h) => Term::compound("retractall", vec![h.clone()]),
        Goal::Call(t) => t.clone(),
    }
}

pub fn goal_alpha_eq_with(a: &Goal, b: &Goal, map: &mut AlphaMap) -> bool {
    match (a, b) {
        (Goal::True, Goal::True) | (Goal::Fail, Goal::Fail) | (Goal::Cut, Goal::Cut) => true,
        (Goal::Conj(a1, a2), Goal::Conj(b1, b2)) | (Goal::Disj(a1, a2), Goal::Disj(b1, b2)) => {
            goal_alpha_eq_with(a1, b1, map) && goal_alpha_eq_with(a2, b2, map)
        }
        (Goal::Naf(x), Goal::Naf(y)) => goal_alpha_eq_with(x, y, map),
        (Goal::Unify(x1, x2), Goal::Unify(y1, y2)) | (Goal::Is(x1, x2), Goal::Is(y1, y2)) => {
            alpha_eq_with(x1, y1, map) && alpha_eq_with(x2, y2, map)
        }
        (Goal::Compare(o1, x1, x2), Goal::Compare(o2, y1, y2)) => {
            o1 == o2 && alpha_eq_with(x1, y1, map) && alpha_eq_with(x2, y2, map)
        }
        (Goal::Assert(s1, x), Goal::Assert(s2, y)) => s1 == s2 && alpha_eq_with(x, y, map),
        (Goal::Retract(x), Goal::Retract(y)) | (Goal::Retractall(x), Goal::Retractall(y)) => {
            alpha_eq_with(x, y, map)
        }
        (Goal::Call(x), Goal::Call(y)) => alpha_eq_with(x, y, map),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn control_atoms_translate() {
        assert_eq!(goal_from_term(&Term::atom("true")), Ok(Goal::True));
        assert_eq!(goal_from_term(&Term::atom("fail")), Ok(Goal::Fail));
        assert_eq!(goal_from_term(&Term::atom("!")), Ok(Goal::Cut));
    }

    #[test]
    fn unsupported_constructs_are_named() {
        let t = Term::compound("findall", vec![Term::atom("a"), Term::atom("b"), Term::atom("c")]);
        match goal_from_term(&t) {
            Err(GoalFromTermError::Unsupported { indicator, .. }) => {
                assert_eq!(indicator, "findall/3");
            }
            other => panic!("expected unsupported-construct error, got {other:?}"),
        }
        assert!(matches!(
            goal_from_term(&Term::atom("false")),
            Err(GoalFromTermError::Unsupported { .. })
        ));
        assert!(matches!(
            goal_from_term(&Term::compound("not", vec![Term::atom("p")])),
            Err(GoalFromTermError::Unsupported { .. })
        ));
    }

    #[test]
    fn numbers_and_variables_are_not_goals() {
        assert!(matches!(
            goal_from_term(&Term::int(3)),
            Err(GoalFromTermError::NotCallable(_))
        ));
    }

    #[test]
    fn goal_term_round_trip() {
        let t = Term::compound(
            ",",
            vec![
                Term::compound("=", vec![Term::atom("a"), Term::atom("b")]),
                Term::compound(";", vec![Term::atom("p"), Term::atom("q")]),
            ],
        );
        let g = goal_from_term(&t).unwrap();
        assert_eq!(goal_to_term(&g), t);
    }
}
