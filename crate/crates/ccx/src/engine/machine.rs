//! The resolution machine: depth-first proof search with clause order, cut,
//! negation as failure, arithmetic, and dynamic database updates.
//!
//! The search is iterative. The current resolvent is a persistent linked
//! list of goals; alternatives live on an explicit choicepoint stack; variable
//! bindings are undone through a trail. Step and depth limits make every
//! query terminate.

use std::collections::HashMap;
use std::rc::Rc;

use indexmap::IndexMap;

use crate::engine::error::{EngineError, ErrorKind};
use crate::engine::goal::{
    CmpOp, Goal, goal_from_term, goal_to_term, reserved_predicate_name,
    unsupported_construct,
};
use crate::engine::parse;
use crate::engine::pretty;
use crate::engine::program::{Clause, ItemKind, Program};
use crate::engine::subst::{Subst, unify_trailed};
use crate::engine::term::{Indicator, Number, Term, Var, VarId};

/// Execution budget. Both limits are hard: exceeding either aborts the query
/// with a resource-limit error, so no goal can run forever.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Limits {
    /// Total resolution steps (goal expansions plus clause-head attempts).
    pub max_steps: u64,
    /// Maximum call nesting depth.
    pub max_depth: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_steps: 1_000_000, max_depth: 10_000 }
    }
}

/// Result of proving a goal.
#[derive(Clone, PartialEq, Debug)]
pub enum SolveStatus {
    /// A proof was found. `bindings` maps the query's named variables (in
    /// first-occurrence order) to their values; unbound variables and names
    /// starting with `_` are omitted.
    Proved { bindings: Vec<(String, Term)> },
    /// The search space was exhausted without a proof.
    Failed,
    Error(EngineError),
}

#[derive(Clone, PartialEq, Debug)]
pub struct SolveOutcome {
    pub status: SolveStatus,
    /// Steps actually consumed, for reporting and budget tuning.
    pub steps_used: u64,
}

impl SolveOutcome {
    pub fn proved(&self) -> bool {
        matches!(self.status, SolveStatus::Proved { .. })
    }
}

/// A non-fatal problem noticed while loading a program.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LoadWarning {
    pub line: u32,
    pub message: String,
}

/// Database mutation operations, also available through [`Engine::apply_dynamic`]
/// for callers that manage clauses programmatically.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DynamicOp {
    Assert,
    Retract,
    Retractall,
}

#[derive(Clone, Debug)]
struct PredEntry {
    /// Shared so that an active call keeps the clause list it started with
    /// even if the predicate is modified mid-proof (the logical update view).
    clauses: Rc<Vec<Rc<Clause>>>,
    #[allow(dead_code)]
    dynamic: bool,
}

#[derive(Default, Clone, Debug)]
struct Database {
    preds: IndexMap<Indicator, PredEntry>,
}

impl Database {
    fn lookup(&self, ind: &Indicator) -> Option<&PredEntry> {
        self.preds.get(ind)
    }

    fn ensure(&mut self, ind: Indicator, dynamic: bool) -> &mut PredEntry {
        self.preds
            .entry(ind)
            .or_insert_with(|| PredEntry { clauses: Rc::new(Vec::new()), dynamic })
    }

    fn push_clause(&mut self, clause: Rc<Clause>, dynamic_if_new: bool) {
        let entry = self.ensure(clause.indicator(), dynamic_if_new);
        Rc::make_mut(&mut entry.clauses).push(clause);
    }
}

/// A loaded knowledge base plus everything needed to prove goals against it.
///
/// Loading runs `:-` directives in order; a directive that fails or raises a
/// non-fatal error becomes a [`LoadWarning`], while existence and parse
/// errors abort the load (they mean the program text itself is broken).
#[derive(Debug)]
pub struct Engine {
    db: Database,
    next_var: u64,
    warnings: Vec<LoadWarning>,
}

impl Engine {
    pub fn empty() -> Engine {
        Engine { db: Database::default(), next_var: 0, warnings: Vec::new() }
    }

    pub fn load(program: &Program) -> Result<Engine, EngineError> {
        Engine::load_with_limits(program, Limits::default())
    }

    pub fn load_with_limits(program: &Program, limits: Limits) -> Result<Engine, EngineError> {
        let mut engine = Engine::empty();
        engine.extend(program, limits)?;
        Ok(engine)
    }

    /// Parses and loads program text in one step.
    pub fn from_source(src: &str) -> Result<Engine, EngineError> {
        Ok(Engine::load(&parse::parse_program(src)?)?)
    }

    /// Loads further items as if they were appended to the original source.
    pub fn extend(&mut self, program: &Program, limits: Limits) -> Result<(), EngineError> {
        for item in &program.items {
            match &item.kind {
                ItemKind::DynamicDecl(inds) => {
                    for ind in inds {
                        self.db.ensure(ind.clone(), true);
                    }
                }
                ItemKind::Clause(c) => {
                    self.db.push_clause(Rc::new(c.clone()), false);
                }
                ItemKind::Directive(g) => {
                    let outcome = self.run_goal(g, limits);
                    match outcome {
                        Ok(true) => {}
                        Ok(false) => self.warnings.push(LoadWarning {
                            line: item.line,
                            message: format!(
                                "directive failed: {}",
                                pretty::goal_text(g)
                            ),
                        }),
                        Err(e)
                            if matches!(e.kind, ErrorKind::Existence | ErrorKind::Parse) =>
                        {
                            return Err(e);
                        }
                        Err(e) => self.warnings.push(LoadWarning {
                            line: item.line,
                            message: format!("directive raised {e}"),
                        }),
                    }
                }
            }
        }
        Ok(())
    }

    pub fn warnings(&self) -> &[LoadWarning] {
        &self.warnings
    }

    /// Proves a goal, stopping at the first proof. Each call starts from a
    /// fresh binding environment; only database changes persist between calls.
    pub fn solve(&mut self, goal: &Goal, limits: Limits) -> SolveOutcome {
        let mut machine = Machine {
            db: &mut self.db,
            next_var: &mut self.next_var,
            subst: Subst::new(),
            trail: Vec::new(),
            steps: 0,
            limits,
        };
        let mut map = HashMap::new();
        let renamed = rename_goal(goal, &mut map, machine.next_var);
        let status = match machine.run(renamed, 0) {
            Ok(true) => {
                let mut bindings = Vec::new();
                let mut seen = Vec::new();
                collect_goal_vars(goal, &mut seen);
                for v in seen {
                    if v.name.starts_with('_') {
                        continue;
                    }
                    let id = map[&v.id];
                    let value =
                        machine.subst.resolve(&Term::Var(Var { name: v.name.clone(), id }));
                    if matches!(&value, Term::Var(w) if w.id == id) {
                        continue; // still unbound
                    }
                    bindings.push((v.name.clone(), value));
                }
                SolveStatus::Proved { bindings }
            }
            Ok(false) => SolveStatus::Failed,
            Err(e) => SolveStatus::Error(e),
        };
        SolveOutcome { status, steps_used: machine.steps }
    }

    pub fn solve_default(&mut self, goal: &Goal) -> SolveOutcome {
        self.solve(goal, Limits::default())
    }

    fn run_goal(&mut self, goal: &Goal, limits: Limits) -> Result<bool, EngineError> {
        let mut machine = Machine {
            db: &mut self.db,
            next_var: &mut self.next_var,
            subst: Subst::new(),
            trail: Vec::new(),
            steps: 0,
            limits,
        };
        let mut map = HashMap::new();
        let renamed = rename_goal(goal, &mut map, machine.next_var);
        machine.run(renamed, 0)
    }

    /// Applies a database mutation directly, outside any proof.
    /// Returns whether the operation succeeded (`retract` fails when nothing
    /// matches; the others always succeed).
    pub fn apply_dynamic(&mut self, op: DynamicOp, term: &Term) -> Result<bool, EngineError> {
        let mut machine = Machine {
            db: &mut self.db,
            next_var: &mut self.next_var,
            subst: Subst::new(),
            trail: Vec::new(),
            steps: 0,
            limits: Limits::default(),
        };
        let mut map = HashMap::new();
        let term = rename_term(term, &mut map, machine.next_var);
        match op {
            DynamicOp::Assert => machine.do_assert(&term).map(|()| true),
            DynamicOp::Retract => machine.do_retract(&term),
            DynamicOp::Retractall => machine.do_retractall(&term).map(|()| true),
        }
    }

    /// Predicates currently defined or declared, in first-appearance order.
    pub fn predicate_indicators(&self) -> Vec<Indicator> {
        self.db.preds.keys().cloned().collect()
    }

    pub fn clause_count(&self, ind: &Indicator) -> usize {
        self.db.lookup(ind).map_or(0, |e| e.clauses.len())
    }

    /// Current clauses of a predicate, in order.
    pub fn clauses_of(&self, ind: &Indicator) -> Vec<Clause> {
        self.db
            .lookup(ind)
            .map_or_else(Vec::new, |e| e.clauses.iter().map(|c| (**c).clone()).collect())
    }
}

// ---------------------------------------------------------------------------
// The machine proper
// ---------------------------------------------------------------------------

type Cont = Option<Rc<ContNode>>;

/// One goal in the resolvent, with the cut barrier and call depth it runs at.
struct ContNode {
    goal: Goal,
    /// Choicepoint-stack height to cut back to when this goal is `!`.
    cut: usize,
    depth: u32,
    next: Cont,
}

fn cons(goal: Goal, cut: usize, depth: u32, next: Cont) -> Cont {
    Some(Rc::new(ContNode { goal, cut, depth, next }))
}

enum Alt {
    /// Remaining clauses of a predicate call.
    Clauses {
        goal_term: Term,
        clauses: Rc<Vec<Rc<Clause>>>,
        next_clause: usize,
        cut: usize,
        depth: u32,
    },
    /// The right branch of `;`.
    Disj { right: Goal, cut: usize, depth: u32 },
}

struct ChoicePoint {
    cont: Cont,
    trail_mark: usize,
    alt: Alt,
}

struct Machine<'e> {
    db: &'e mut Database,
    next_var: &'e mut u64,
    subst: Subst,
    trail: Vec<VarId>,
    steps: u64,
    limits: Limits,
}

impl Machine<'_> {
    fn tick(&mut self) -> Result<(), EngineError> {
        self.steps += 1;
        if self.steps > self.limits.max_steps {
            Err(EngineError::resource(format!(
                "step limit of {} exceeded",
                self.limits.max_steps
            )))
        } else {
            Ok(())
        }
    }

    fn check_depth(&self, depth: u32) -> Result<(), EngineError> {
        if depth > self.limits.max_depth {
            Err(EngineError::resource(format!(
                "depth limit of {} exceeded",
                self.limits.max_depth
            )))
        } else {
            Ok(())
        }
    }

    /// Proves `goal`, returning whether a proof exists. Bindings made on the
    /// way to a proof are kept in `self.subst`; a failed search restores the
    /// substitution it started from.
    fn run(&mut self, goal: Goal, base_depth: u32) -> Result<bool, EngineError> {
        let mut cps: Vec<ChoicePoint> = Vec::new();
        let mut cont: Cont = cons(goal, 0, base_depth, None);
        loop {
            let node = match cont.clone() {
                Some(n) => n,
                None => return Ok(true),
            };
            self.tick()?;
            let next = node.next.clone();
            match &node.goal {
                Goal::True => cont = next,
                Goal::Fail => {
                    if !self.backtrack(&mut cps, &mut cont)? {
                        return Ok(false);
                    }
                }
                Goal::Cut => {
                    cps.truncate(node.cut);
                    cont = next;
                }
                Goal::Conj(a, b) => {
                    let rest = cons((**b).clone(), node.cut, node.depth, next);
                    cont = cons((**a).clone(), node.cut, node.depth, rest);
                }
                Goal::Disj(a, b) => {
                    cps.push(ChoicePoint {
                        cont: next.clone(),
                        trail_mark: self.trail.len(),
                        alt: Alt::Disj {
                            right: (**b).clone(),
                            cut: node.cut,
                            depth: node.depth,
                        },
                    });
                    cont = cons((**a).clone(), node.cut, node.depth, next);
                }
                Goal::Naf(g) => {
                    self.check_depth(node.depth + 1)?;
                    let mark = self.trail.len();
                    let proved = self.run((**g).clone(), node.depth + 1)?;
                    self.subst.undo_to(&mut self.trail, mark);
                    if proved {
                        if !self.backtrack(&mut cps, &mut cont)? {
                            return Ok(false);
                        }
                    } else {
                        cont = next;
                    }
                }
                Goal::Unify(x, y) => {
                    let mark = self.trail.len();
                    if unify_trailed(&mut self.subst, &mut self.trail, x, y) {
                        cont = next;
                    } else {
                        self.subst.undo_to(&mut self.trail, mark);
                        if !self.backtrack(&mut cps, &mut cont)? {
                            return Ok(false);
                        }
                    }
                }
                Goal::Compare(op, x, y) => {
                    let a = self.eval(x)?;
                    let b = self.eval(y)?;
                    let holds = match op {
                        CmpOp::Lt => a < b,
                        CmpOp::Gt => a > b,
                        CmpOp::Le => a <= b,
                        CmpOp::Ge => a >= b,
                        CmpOp::NumEq => a == b,
                        CmpOp::NumNe => a != b,
                    };
                    if holds {
                        cont = next;
                    } else if !self.backtrack(&mut cps, &mut cont)? {
                        return Ok(false);
                    }
                }
                Goal::Is(lhs, rhs) => {
                    let value = Term::Number(self.eval(rhs)?);
                    let mark = self.trail.len();
                    if unify_trailed(&mut self.subst, &mut self.trail, lhs, &value) {
                        cont = next;
                    } else {
                        self.subst.undo_to(&mut self.trail, mark);
                        if !self.backtrack(&mut cps, &mut cont)? {
                            return Ok(false);
                        }
                    }
                }
                Goal::Assert(_, c) => {
                    self.do_assert(c)?;
                    cont = next;
                }
                Goal::Retract(c) => {
                    if self.do_retract(c)? {
                        cont = next;
                    } else if !self.backtrack(&mut cps, &mut cont)? {
                        return Ok(false);
                    }
                }
                Goal::Retractall(h) => {
                    self.do_retractall(h)?;
                    cont = next;
                }
                Goal::Call(t) => {
                    self.check_depth(node.depth + 1)?;
                    let ind = t
                        .indicator()
                        .expect("call goals are callable by construction");
                    let Some(entry) = self.db.lookup(&ind) else {
                        return Err(EngineError::existence(format!(
                            "procedure {ind} does not exist"
                        )));
                    };
                    cps.push(ChoicePoint {
                        cont: next.clone(),
                        trail_mark: self.trail.len(),
                        alt: Alt::Clauses {
                            goal_term: t.clone(),
                            clauses: entry.clauses.clone(),
                            next_clause: 0,
                            cut: cps.len(),
                            depth: node.depth,
                        },
                    });
                    if !self.backtrack(&mut cps, &mut cont)? {
                        return Ok(false);
                    }
                }
            }
        }
    }

    /// Resumes the most recent choicepoint that still has an alternative.
    /// Returns false when none is left.
    fn backtrack(
        &mut self,
        cps: &mut Vec<ChoicePoint>,
        cont: &mut Cont,
    ) -> Result<bool, EngineError> {
        loop {
            let Some(cp) = cps.last_mut() else { return Ok(false) };
            let trail_mark = cp.trail_mark;
            self.subst.undo_to(&mut self.trail, trail_mark);
            match &mut cp.alt {
                Alt::Disj { .. } => {
                    let cp = cps.pop().expect("checked non-empty above");
                    let Alt::Disj { right, cut, depth } = cp.alt else { unreachable!() };
                    *cont = cons(right, cut, depth, cp.cont);
                    return Ok(true);
                }
                Alt::Clauses { goal_term, clauses, next_clause, cut, depth } => {
                    let mut selected = None;
                    while *next_clause < clauses.len() {
                        let clause = clauses[*next_clause].clone();
                        *next_clause += 1;
                        self.steps += 1;
                        if self.steps > self.limits.max_steps {
                            return Err(EngineError::resource(format!(
                                "step limit of {} exceeded",
                                self.limits.max_steps
                            )));
                        }
                        let mut map = HashMap::new();
                        let head = rename_term(&clause.head, &mut map, self.next_var);
                        if unify_trailed(&mut self.subst, &mut self.trail, goal_term, &head) {
                            let body = rename_goal(&clause.body, &mut map, self.next_var);
                            selected = Some(body);
                            break;
                        }
                        self.subst.undo_to(&mut self.trail, trail_mark);
                    }
                    match selected {
                        Some(body) => {
                            let has_more = *next_clause < clauses.len();
                            let (cut, depth) = (*cut, *depth);
                            let after = cp.cont.clone();
                            if !has_more {
                                cps.pop();
                            }
                            *cont = cons(body, cut, depth + 1, after);
                            return Ok(true);
                        }
                        None => {
                            cps.pop();
                        }
                    }
                }
            }
        }
    }

    // -- arithmetic ---------------------------------------------------------

    fn eval(&self, t: &Term) -> Result<Number, EngineError> {
        self.eval_at(t, 0)
    }

    fn eval_at(&self, t: &Term, depth: u32) -> Result<Number, EngineError> {
        if depth > self.limits.max_depth {
            return Err(EngineError::resource(
                "arithmetic expression too deep to evaluate",
            ));
        }
        match self.subst.walk(t) {
            Term::Number(n) => Ok(n),
            Term::Var(v) => Err(EngineError::instantiation(format!(
                "arithmetic argument {} is unbound",
                v.name
            ))),
            Term::Atom(a) => Err(EngineError::type_error(format!(
                "'{a}' is not an arithmetic expression"
            ))),
            Term::Compound(f, args) => {
                let bad = |f: &str, n: usize| {
                    Err(EngineError::type_error(format!(
                        "unknown arithmetic function {f}/{n}"
                    )))
                };
                match (f.as_str(), args.len()) {
                    ("+", 2) | ("-", 2) | ("*", 2) | ("/", 2) => {
                        let a = self.eval_at(&args[0], depth + 1)?;
                        let b = self.eval_at(&args[1], depth + 1)?;
                        let out = match f.as_str() {
                            "+" => a.checked_add(&b),
                            "-" => a.checked_sub(&b),
                            "*" => a.checked_mul(&b),
                            _ => {
                                if b == Number::from_integer(0) {
                                    return Err(EngineError::type_error("division by zero"));
                                }
                                a.checked_div(&b)
                            }
                        };
                        out.ok_or_else(|| EngineError::type_error("arithmetic overflow"))
                    }
                    ("-", 1) => {
                        let a = self.eval_at(&args[0], depth + 1)?;
                        a.checked_neg()
                            .ok_or_else(|| EngineError::type_error("arithmetic overflow"))
                    }
                    ("+", 1) => self.eval_at(&args[0], depth + 1),
                    (f, n) => bad(f, n),
                }
            }
        }
    }

    // -- database updates ---------------------------------------------------

    /// Splits an `assert`/`retract` argument into head and optional body
    /// term, rejecting unbound or non-callable heads.
    fn split_clause_term(
        &self,
        what: &str,
        t: &Term,
    ) -> Result<(Term, Option<Term>), EngineError> {
        let t = self.subst.resolve(t);
        let (head, body) = match &t {
            Term::Var(_) => {
                return Err(EngineError::instantiation(format!(
                    "{what}: clause argument is unbound"
                )));
            }
            Term::Compound(f, args) if f == ":-" && args.len() == 2 => {
                (args[0].clone(), Some(args[1].clone()))
            }
            _ => (t.clone(), None),
        };
        match &head {
            Term::Var(_) => Err(EngineError::instantiation(format!(
                "{what}: clause head is unbound"
            ))),
            Term::Number(n) => Err(EngineError::type_error(format!(
                "{what}: clause head must be callable, got number {n}"
            ))),
            Term::Atom(name) | Term::Compound(name, _) => {
                let arity = head.args().len();
                if reserved_predicate_name(name)
                    || unsupported_construct(name, arity).is_some()
                {
                    return Err(EngineError::type_error(format!(
                        "{what}: cannot modify builtin {name}/{arity}"
                    )));
                }
                Ok((head, body))
            }
        }
    }

    fn do_assert(&mut self, arg: &Term) -> Result<(), EngineError> {
        let (head, body_term) = self.split_clause_term("assert", arg)?;
        let body = match body_term {
            Some(b) => goal_from_term(&b)
                .map_err(|e| EngineError::type_error(format!("assert: {e}")))?,
            None => Goal::True,
        };
        self.db.push_clause(Rc::new(Clause { head, body }), true);
        Ok(())
    }

    /// Removes the first clause matching the pattern; bindings from the match
    /// are kept. There is no re-satisfaction on backtracking: one call
    /// removes at most one clause.
    fn do_retract(&mut self, arg: &Term) -> Result<bool, EngineError> {
        let (head, body_term) = self.split_clause_term("retract", arg)?;
        let body_pat = body_term.unwrap_or_else(|| Term::atom("true"));
        let ind = head.indicator().expect("validated callable");
        let Some(entry) = self.db.lookup(&ind) else {
            return Ok(false);
        };
        let snapshot = entry.clauses.clone();
        for clause in snapshot.iter() {
            self.tick()?;
            let mark = self.trail.len();
            let mut map = HashMap::new();
            let chead = rename_term(&clause.head, &mut map, self.next_var);
            let cbody = rename_goal(&clause.body, &mut map, self.next_var);
            if unify_trailed(&mut self.subst, &mut self.trail, &head, &chead)
                && unify_trailed(
                    &mut self.subst,
                    &mut self.trail,
                    &body_pat,
                    &goal_to_term(&cbody),
                )
            {
                let entry = self.db.ensure(ind, true);
                Rc::make_mut(&mut entry.clauses).retain(|c| !Rc::ptr_eq(c, clause));
                return Ok(true);
            }
            self.subst.undo_to(&mut self.trail, mark);
        }
        Ok(false)
    }

    /// Removes every clause whose head matches; always succeeds and leaves
    /// no bindings. The predicate becomes known (and empty) even if it was
    /// never defined, so later calls fail instead of raising existence errors.
    fn do_retractall(&mut self, arg: &Term) -> Result<(), EngineError> {
        let (head, body_term) = self.split_clause_term("retractall", arg)?;
        if body_term.is_some() {
            return Err(EngineError::type_error(
                "retractall: argument must be a head pattern, not a clause",
            ));
        }
        let ind = head.indicator().expect("validated callable");
        let entry = self.db.ensure(ind, true);
        let snapshot = entry.clauses.clone();
        let mut keep = Vec::with_capacity(snapshot.len());
        for clause in snapshot.iter() {
            self.tick()?;
            let mark = self.trail.len();
            let mut map = HashMap::new();
            let chead = rename_term(&clause.head, &mut map, self.next_var);
            let matched = unify_trailed(&mut self.subst, &mut self.trail, &head, &chead);
            self.subst.undo_to(&mut self.trail, mark);
            keep.push(!matched);
        }
        let entry = self.db.ensure(head.indicator().expect("validated callable"), true);
        let mut it = keep.iter();
        Rc::make_mut(&mut entry.clauses).retain(|_| *it.next().expect("keep flags align"));
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Renaming (fresh variables for each clause activation)
// ---------------------------------------------------------------------------

fn rename_term(t: &Term, map: &mut HashMap<VarId, VarId>, gen: &mut u64) -> Term {
    match t {
        Term::Var(v) => {
            let id = *map.entry(v.id).or_insert_with(|| {
                let id = VarId(*gen);
                *gen += 1;
                id
            });
            Term::Var(Var { name: v.name.clone(), id })
        }
        Term::Compound(f, args) => Term::Compound(
            f.clone(),
            args.iter().map(|a| rename_term(a, map, gen)).collect(),
        ),
        _ => t.clone(),
    }
}

fn rename_goal(g: &Goal, map: &mut HashMap<VarId, VarId>, gen: &mut u64) -> Goal {
    match g {
        Goal::True | Goal::Fail | Goal::Cut => g.clone(),
        Goal::Conj(a, b) => Goal::Conj(
            Box::new(rename_goal(a, map, gen)),
            Box::new(rename_goal(b, map, gen)),
        ),
        Goal::Disj(a, b) => Goal::Disj(
            Box::new(rename_goal(a, map, gen)),
            Box::new(rename_goal(b, map, gen)),
        ),
        Goal::Naf(g) => Goal::Naf(Box::new(rename_goal(g, map, gen))),
        Goal::Unify(a, b) => Goal::Unify(rename_term(a, map, gen), rename_term(b, map, gen)),
        Goal::Compare(op, a, b) => {
            Goal::Compare(*op, rename_term(a, map, gen), rename_term(b, map, gen))
        }
        Goal::Is(a, b) => Goal::Is(rename_term(a, map, gen), rename_term(b, map, gen)),
        Goal::Assert(style, c) => Goal::Assert(*style, rename_term(c, map, gen)),
        Goal::Retract(c) => Goal::Retract(rename_term(c, map, gen)),
        Goal::Retractall(h) => Goal::Retractall(rename_term(h, map, gen)),
        Goal::Call(t) => Goal::Call(rename_term(t, map, gen)),
    }
}

fn collect_goal_vars<'a>(g: &'a Goal, out: &mut Vec<&'a Var>) {
    let push_term = |t: &'a Term, out: &mut Vec<&'a Var>| {
        let mut occ = Vec::new();
        t.var_occurrences(&mut occ);
        for v in occ {
            if !out.iter().any(|u| u.id == v.id) {
                out.push(v);
            }
        }
    };
    match g {
        Goal::True | Goal::Fail | Goal::Cut => {}
        Goal::Conj(a, b) | Goal::Disj(a, b) => {
            collect_goal_vars(a, out);
            collect_goal_vars(b, out);
        }
        Goal::Naf(g) => collect_goal_vars(g, out),
        Goal::Unify(a, b) | Goal::Compare(_, a, b) | Goal::Is(a, b) => {
            push_term(a, out);
            push_term(b, out);
        }
        Goal::Assert(_, t) | Goal::Retract(t) | Goal::Retractall(t) | Goal::Call(t) => {
            push_term(t, out);
        }
    }
}
