//! Randomized-property strategies and checks, shared between the property
//! test target (which runs them through the `proptest!` macro) and the
//! acceptance gate (which runs them under its own timer via `TestRunner`).

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use ccx::engine::{
    parse_goal, parse_program, program_alpha_eq, program_text, AssertStyle, Clause, CmpOp,
    Engine, Goal, Item, ItemKind, Indicator, Limits, Number, Program, SolveStatus, Term, Var,
    VarId,
};

// --- term / goal / program generation ---------------------------------------

const VAR_NAMES: [&str; 5] = ["X", "Y", "Z", "Acc", "Total"];

fn var_term(i: usize) -> Term {
    Term::Var(Var { name: VAR_NAMES[i].to_string(), id: VarId(i as u64 + 1) })
}

fn atom_name() -> impl Strategy<Value = &'static str> {
    prop_oneof![
        Just("alpha"),
        Just("beta_2"),
        Just("claim"),
        Just("wellness visit"),
        Just("it's"),
    ]
}

fn decimal() -> impl Strategy<Value = Term> {
    (0i64..100, 1u64..100, any::<bool>()).prop_map(|(int_part, frac, negate)| {
        let n = Number::from_decimal(&int_part.to_string(), &frac.to_string())
            .expect("in-range decimal");
        let n = if negate { n.checked_neg().expect("negation of small decimal") } else { n };
        Term::Number(n)
    })
}

fn leaf_term() -> impl Strategy<Value = Term> {
    prop_oneof![
        4 => atom_name().prop_map(Term::atom),
        3 => (-999i128..1000).prop_map(Term::int),
        3 => (0usize..VAR_NAMES.len()).prop_map(var_term),
        1 => decimal(),
    ]
}

pub fn term_strategy() -> impl Strategy<Value = Term> {
    leaf_term().prop_recursive(3, 16, 3, |inner| {
        (atom_name(), prop::collection::vec(inner, 1..4))
            .prop_map(|(name, args)| Term::compound(name, args))
    })
}

fn callable_strategy() -> impl Strategy<Value = Term> {
    prop_oneof![
        atom_name().prop_map(Term::atom),
        (atom_name(), prop::collection::vec(term_strategy(), 1..4))
            .prop_map(|(name, args)| Term::compound(name, args)),
    ]
}

fn cmp_op() -> impl Strategy<Value = CmpOp> {
    prop_oneof![
        Just(CmpOp::Lt),
        Just(CmpOp::Gt),
        Just(CmpOp::Le),
        Just(CmpOp::Ge),
        Just(CmpOp::NumEq),
        Just(CmpOp::NumNe),
    ]
}

fn leaf_goal() -> impl Strategy<Value = Goal> {
    prop_oneof![
        1 => Just(Goal::True),
        1 => Just(Goal::Fail),
        1 => Just(Goal::Cut),
        4 => callable_strategy().prop_map(Goal::Call),
        2 => (term_strategy(), term_strategy()).prop_map(|(a, b)| Goal::Unify(a, b)),
        2 => (cmp_op(), term_strategy(), term_strategy())
            .prop_map(|(op, a, b)| Goal::Compare(op, a, b)),
        2 => (term_strategy(), term_strategy()).prop_map(|(a, b)| Goal::Is(a, b)),
        1 => (prop_oneof![Just(AssertStyle::Assert), Just(AssertStyle::Assertz)], callable_strategy())
            .prop_map(|(style, t)| Goal::Assert(style, t)),
        1 => callable_strategy().prop_map(Goal::Retract),
        1 => callable_strategy().prop_map(Goal::Retractall),
    ]
}

pub fn goal_strategy() -> impl Strategy<Value = Goal> {
    leaf_goal().prop_recursive(3, 16, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| Goal::Conj(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| Goal::Disj(Box::new(a), Box::new(b))),
            inner.prop_map(|g| Goal::Naf(Box::new(g))),
        ]
    })
}

pub fn item_strategy() -> impl Strategy<Value = ItemKind> {
    prop_oneof![
        5 => (callable_strategy(), goal_strategy())
            .prop_map(|(head, body)| ItemKind::Clause(Clause { head, body })),
        2 => callable_strategy().prop_map(|head| ItemKind::Clause(Clause::fact(head))),
        1 => goal_strategy().prop_map(ItemKind::Directive),
        1 => prop::collection::vec((atom_name(), 0usize..4), 1..3).prop_map(|pairs| {
            ItemKind::DynamicDecl(
                pairs.into_iter().map(|(name, arity)| Indicator::new(name, arity)).collect(),
            )
        }),
    ]
}

pub fn program_items() -> impl Strategy<Value = Vec<ItemKind>> {
    prop::collection::vec(item_strategy(), 0..8)
}

// --- checks ------------------------------------------------------------------

/// Rendering a program and reading it back gives the same program up to
/// variable renaming.
pub fn check_round_trip(kinds: Vec<ItemKind>) -> Result<(), TestCaseError> {
    let program = Program {
        items: kinds.into_iter().map(|kind| Item { kind, line: 0 }).collect(),
    };
    let text = program_text(&program);
    let parsed = match parse_program(&text) {
        Ok(p) => p,
        Err(e) => {
            return Err(TestCaseError::fail(format!("rendered text failed to parse: {e}\n{text}")))
        }
    };
    prop_assert!(
        program_alpha_eq(&program, &parsed),
        "round trip changed the program:\n{}\n-- reparsed --\n{}",
        text,
        program_text(&parsed)
    );
    Ok(())
}

/// Inputs for the negation-as-failure property: which base facts hold, the
/// bodies of three stacked rules, and which defined atom to query.
#[derive(Clone, Debug)]
pub struct NafCase {
    pub present: Vec<bool>,
    pub rule_bodies: Vec<Goal>,
    pub query_index: usize,
}

const FACT_ATOMS: [&str; 5] = ["f0", "f1", "f2", "f3", "f4"];
const RULE_ATOMS: [&str; 3] = ["r0", "r1", "r2"];

/// A ground goal over a fixed set of defined atoms: calls, true/fail, and
/// the control connectives. Layering keeps every generated program
/// terminating.
fn ground_goal(atoms: Vec<&'static str>) -> impl Strategy<Value = Goal> {
    let leaf = prop_oneof![
        1 => Just(Goal::True),
        1 => Just(Goal::Fail),
        4 => prop::sample::select(atoms).prop_map(|a| Goal::Call(Term::atom(a))),
    ];
    leaf.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| Goal::Conj(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| Goal::Disj(Box::new(a), Box::new(b))),
            inner.prop_map(|g| Goal::Naf(Box::new(g))),
        ]
    })
}

pub fn naf_case() -> impl Strategy<Value = NafCase> {
    let layer0: Vec<&'static str> = FACT_ATOMS.to_vec();
    let layer1: Vec<&'static str> = FACT_ATOMS.iter().chain(&RULE_ATOMS[..1]).copied().collect();
    let layer2: Vec<&'static str> = FACT_ATOMS.iter().chain(&RULE_ATOMS[..2]).copied().collect();
    (
        prop::collection::vec(any::<bool>(), FACT_ATOMS.len()),
        ground_goal(layer0),
        ground_goal(layer1),
        ground_goal(layer2),
        0..FACT_ATOMS.len() + RULE_ATOMS.len(),
    )
        .prop_map(|(present, b0, b1, b2, query_index)| NafCase {
            present,
            rule_bodies: vec![b0, b1, b2],
            query_index,
        })
}

fn naf_program(case: &NafCase) -> Program {
    let mut items = Vec::new();
    // Every base atom is declared dynamic so querying an absent one fails
    // instead of raising an existence error.
    items.push(Item {
        kind: ItemKind::DynamicDecl(
            FACT_ATOMS.iter().map(|a| Indicator::new(*a, 0)).collect(),
        ),
        line: 0,
    });
    for (atom, present) in FACT_ATOMS.iter().zip(&case.present) {
        if *present {
            items.push(Item { kind: ItemKind::Clause(Clause::fact(Term::atom(*atom))), line: 0 });
        }
    }
    for (atom, body) in RULE_ATOMS.iter().zip(&case.rule_bodies) {
        items.push(Item {
            kind: ItemKind::Clause(Clause { head: Term::atom(*atom), body: body.clone() }),
            line: 0,
        });
    }
    Program { items }
}

/// `\+ G` succeeds exactly when `G` finitely fails: one of the two proves,
/// never both, never neither.
pub fn check_naf_exclusivity(case: NafCase) -> Result<(), TestCaseError> {
    let program = naf_program(&case);
    let mut engine = Engine::load(&program)
        .map_err(|e| TestCaseError::fail(format!("load failed: {e}")))?;
    let all_atoms: Vec<&str> = FACT_ATOMS.iter().chain(&RULE_ATOMS).copied().collect();
    let goal = Goal::Call(Term::atom(all_atoms[case.query_index]));
    let plain = engine.solve(&goal, Limits::default());
    let negated = engine.solve(&Goal::Naf(Box::new(goal.clone())), Limits::default());
    match (&plain.status, &negated.status) {
        (SolveStatus::Proved { .. }, SolveStatus::Failed)
        | (SolveStatus::Failed, SolveStatus::Proved { .. }) => Ok(()),
        other => Err(TestCaseError::fail(format!(
            "negation not exclusive for {goal:?}: {other:?}"
        ))),
    }
}

/// Inputs for the clause-order property: candidate keys for `p/1` (deduped,
/// source order) and which of them also get a `q/1` fact.
#[derive(Clone, Debug)]
pub struct OrderCase {
    pub keys: Vec<i128>,
    pub picks: Vec<bool>,
}

pub fn order_case() -> impl Strategy<Value = OrderCase> {
    (prop::collection::vec(-500i128..500, 1..20), prop::collection::vec(any::<bool>(), 20))
        .prop_map(|(raw, picks)| {
            let mut keys: Vec<i128> = Vec::new();
            for k in raw {
                if !keys.contains(&k) {
                    keys.push(k);
                }
            }
            OrderCase { keys, picks }
        })
}

/// The first solution of `p(X), q(X)` binds X to the first `p/1` clause (in
/// source order) whose key also satisfies `q/1` — backtracking must walk
/// clauses strictly in source order.
pub fn check_clause_order(case: OrderCase) -> Result<(), TestCaseError> {
    let mut items = vec![Item {
        kind: ItemKind::DynamicDecl(vec![Indicator::new("p", 1), Indicator::new("q", 1)]),
        line: 0,
    }];
    for key in &case.keys {
        items.push(Item {
            kind: ItemKind::Clause(Clause::fact(Term::compound("p", vec![Term::int(*key)]))),
            line: 0,
        });
    }
    for (key, pick) in case.keys.iter().zip(&case.picks) {
        if *pick {
            items.push(Item {
                kind: ItemKind::Clause(Clause::fact(Term::compound("q", vec![Term::int(*key)]))),
                line: 0,
            });
        }
    }
    let mut engine = Engine::load(&Program { items })
        .map_err(|e| TestCaseError::fail(format!("load failed: {e}")))?;

    let x = Term::Var(Var { name: "X".to_string(), id: VarId(1) });
    let goal = Goal::Conj(
        Box::new(Goal::Call(Term::compound("p", vec![x.clone()]))),
        Box::new(Goal::Call(Term::compound("q", vec![x]))),
    );
    let outcome = engine.solve(&goal, Limits::default());

    let expected = case.keys.iter().zip(&case.picks).find(|(_, pick)| **pick).map(|(k, _)| *k);
    match (expected, &outcome.status) {
        (None, SolveStatus::Failed) => Ok(()),
        (Some(key), SolveStatus::Proved { bindings }) => {
            let bound = bindings.iter().find(|(name, _)| name == "X").map(|(_, t)| t.clone());
            prop_assert_eq!(bound, Some(Term::int(key)), "wrong first solution");
            Ok(())
        }
        other => Err(TestCaseError::fail(format!("unexpected outcome {other:?}"))),
    }
}

/// An arithmetic expression tree; only operators whose exact value stays an
/// integer, so expected values are computable independently.
#[derive(Clone, Debug)]
pub enum Expr {
    Lit(i64),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
}

impl Expr {
    fn value(&self) -> i128 {
        match self {
            Expr::Lit(n) => *n as i128,
            Expr::Add(a, b) => a.value() + b.value(),
            Expr::Sub(a, b) => a.value() - b.value(),
            Expr::Mul(a, b) => a.value() * b.value(),
        }
    }

    /// Minimal-parenthesis rendering, relying on operator precedence.
    fn minimal(&self) -> String {
        ccx::engine::term_text(&self.term())
    }

    fn term(&self) -> Term {
        match self {
            Expr::Lit(n) => Term::int(*n as i128),
            Expr::Add(a, b) => Term::compound("+", vec![a.term(), b.term()]),
            Expr::Sub(a, b) => Term::compound("-", vec![a.term(), b.term()]),
            Expr::Mul(a, b) => Term::compound("*", vec![a.term(), b.term()]),
        }
    }

    /// Fully parenthesized rendering: precedence-independent ground truth.
    fn full(&self) -> String {
        match self {
            Expr::Lit(n) => format!("({n})"),
            Expr::Add(a, b) => format!("({} + {})", a.full(), b.full()),
            Expr::Sub(a, b) => format!("({} - {})", a.full(), b.full()),
            Expr::Mul(a, b) => format!("({} * {})", a.full(), b.full()),
        }
    }
}

pub fn expr_strategy() -> impl Strategy<Value = Expr> {
    (-9i64..=9).prop_map(Expr::Lit).prop_recursive(4, 32, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
        ]
    })
}

/// The minimal-parenthesis rendering evaluates to the same number as the
/// fully parenthesized one, and both match an independent evaluation.
pub fn check_precedence(expr: Expr) -> Result<(), TestCaseError> {
    let mut engine = Engine::empty();
    let expected = Term::int(expr.value());
    for rendering in [expr.minimal(), expr.full()] {
        let goal = parse_goal(&format!("X is {rendering}."))
            .map_err(|e| TestCaseError::fail(format!("parse of {rendering:?}: {e}")))?;
        let outcome = engine.solve(&goal, Limits::default());
        match outcome.status {
            SolveStatus::Proved { bindings } => {
                let bound = bindings.iter().find(|(n, _)| n == "X").map(|(_, t)| t.clone());
                prop_assert_eq!(
                    bound,
                    Some(expected.clone()),
                    "wrong value for {}",
                    rendering
                );
            }
            other => {
                return Err(TestCaseError::fail(format!(
                    "evaluation of {rendering:?} did not prove: {other:?}"
                )))
            }
        }
    }
    Ok(())
}

/// `p :- p.` exhausts the step budget: a resource-limit error, never a hang,
/// and the reported step count respects the cap.
pub fn check_step_limit(max_steps: u64) -> Result<(), TestCaseError> {
    let program = parse_program("p :- p.").expect("fixed program parses");
    let mut engine = Engine::load(&program).expect("fixed program loads");
    let limits = Limits { max_steps, max_depth: u32::MAX };
    let outcome = engine.solve(&parse_goal("p.").unwrap(), limits);
    match outcome.status {
        SolveStatus::Error(e) if e.kind == ccx::engine::ErrorKind::ResourceLimit => {
            prop_assert!(
                outcome.steps_used <= max_steps + 1,
                "used {} steps with cap {}",
                outcome.steps_used,
                max_steps
            );
            Ok(())
        }
        other => Err(TestCaseError::fail(format!("expected resource_limit, got {other:?}"))),
    }
}

/// Solving the same goal twice — on one engine and on a fresh engine — gives
/// identical outcomes (generated programs here never mutate the database).
pub fn check_repeat_determinism(case: NafCase) -> Result<(), TestCaseError> {
    let program = naf_program(&case);
    let all_atoms: Vec<&str> = FACT_ATOMS.iter().chain(&RULE_ATOMS).copied().collect();
    let goal = Goal::Call(Term::atom(all_atoms[case.query_index]));

    let mut engine = Engine::load(&program)
        .map_err(|e| TestCaseError::fail(format!("load failed: {e}")))?;
    let first = engine.solve(&goal, Limits::default());
    let second = engine.solve(&goal, Limits::default());
    prop_assert_eq!(&first, &second, "same engine diverged");

    let mut fresh = Engine::load(&program)
        .map_err(|e| TestCaseError::fail(format!("reload failed: {e}")))?;
    let third = fresh.solve(&goal, Limits::default());
    prop_assert_eq!(&first.proved(), &third.proved(), "fresh engine diverged");
    Ok(())
}
