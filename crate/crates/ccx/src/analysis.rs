//! Static analysis of programs: validation findings and rule-dependency
//! graphs.
//!
//! Validation catches the two classic defects of generated encodings before
//! any query runs: singleton variables (a likely typo or a condition that
//! silently constrains nothing) and calls to predicates that are neither
//! defined nor declared dynamic (an existence error waiting to happen).

use std::collections::HashMap;
use std::fmt;

use indexmap::{IndexMap, IndexSet};

use crate::engine::{
    Goal, Indicator, ItemKind, Program, Term, goal_text,
};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Severity {
    Warning,
    Error,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Severity::Warning => f.write_str("warning"),
            Severity::Error => f.write_str("error"),
        }
    }
}

/// One validation finding, tied to the source line it came from.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Finding {
    pub severity: Severity,
    pub line: u32,
    pub message: String,
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: line {}: {}", self.severity, self.line, self.message)
    }
}

/// Checks a program without running it. Findings come back in source order:
/// per-clause singleton warnings first appear where the clause is, undefined
/// calls where the first offending call is.
pub fn validate(program: &Program) -> Vec<Finding> {
    let mut findings = Vec::new();
    let defined = program.defined_indicators();

    // (undefined indicator, first line of use) in first-use order.
    let mut undefined: IndexMap<Indicator, u32> = IndexMap::new();
    let note_calls = |goal: &Goal, line: u32, undefined: &mut IndexMap<Indicator, u32>| {
        let mut called = Vec::new();
        collect_calls(goal, false, false, &mut called);
        for (ind, _, _) in called {
            if !defined.contains(&ind) {
                undefined.entry(ind).or_insert(line);
            }
        }
    };

    for item in &program.items {
        match &item.kind {
            ItemKind::Clause(clause) => {
                let mut order = Vec::new();
                let mut counts: HashMap<crate::engine::VarId, usize> = HashMap::new();
                let mut occ = Vec::new();
                clause.head.var_occurrences(&mut occ);
                collect_goal_terms(&clause.body, &mut |t| t.var_occurrences(&mut occ));
                for v in occ {
                    let n = counts.entry(v.id).or_insert(0);
                    *n += 1;
                    if *n == 1 {
                        order.push(v.clone());
                    }
                }
                let singletons: Vec<String> = order
                    .iter()
                    .filter(|v| counts[&v.id] == 1 && !v.name.starts_with('_'))
                    .map(|v| v.name.clone())
                    .collect();
                if !singletons.is_empty() {
                    findings.push(Finding {
                        severity: Severity::Warning,
                        line: item.line,
                        message: format!(
                            "singleton variable{} {} in clause of {}",
                            if singletons.len() == 1 { "" } else { "s" },
                            singletons.join(", "),
                            clause.indicator()
                        ),
                    });
                }
                note_calls(&clause.body, item.line, &mut undefined);
            }
            ItemKind::Directive(goal) => note_calls(goal, item.line, &mut undefined),
            ItemKind::DynamicDecl(_) => {}
        }
    }

    for (ind, line) in undefined {
        findings.push(Finding {
            severity: Severity::Error,
            line,
            message: format!("call to undefined predicate {ind}"),
        });
    }
    findings.sort_by_key(|f| f.line);
    findings
}

fn collect_goal_terms<'a>(goal: &'a Goal, f: &mut impl FnMut(&'a Term)) {
    match goal {
        Goal::True | Goal::Fail | Goal::Cut => {}
        Goal::Conj(a, b) | Goal::Disj(a, b) => {
            collect_goal_terms(a, f);
            collect_goal_terms(b, f);
        }
        Goal::Naf(g) => collect_goal_terms(g, f),
        Goal::Unify(a, b) | Goal::Compare(_, a, b) | Goal::Is(a, b) => {
            f(a);
            f(b);
        }
        Goal::Assert(_, t) | Goal::Retract(t) | Goal::Retractall(t) | Goal::Call(t) => f(t),
    }
}

/// Collects `(indicator, negated, in_disjunction)` for every predicate call
/// in the goal. `negated` marks calls under at least one `\+`;
/// `in_disjunction` marks calls under at least one `;`.
fn collect_calls(
    goal: &Goal,
    negated: bool,
    in_disj: bool,
    out: &mut Vec<(Indicator, bool, bool)>,
) {
    match goal {
        Goal::True | Goal::Fail | Goal::Cut => {}
        Goal::Conj(a, b) => {
            collect_calls(a, negated, in_disj, out);
            collect_calls(b, negated, in_disj, out);
        }
        Goal::Disj(a, b) => {
            collect_calls(a, negated, true, out);
            collect_calls(b, negated, true, out);
        }
        Goal::Naf(g) => collect_calls(g, true, in_disj, out),
        Goal::Unify(..) | Goal::Compare(..) | Goal::Is(..) => {}
        Goal::Assert(..) | Goal::Retract(..) | Goal::Retractall(..) => {}
        Goal::Call(t) => {
            let ind = t.indicator().expect("call goals are callable");
            out.push((ind, negated, in_disj));
        }
    }
}

/// Collects the arithmetic/unification literals of a goal as display text,
/// with the same flags as [`collect_calls`].
fn collect_builtin_literals(
    goal: &Goal,
    negated: bool,
    in_disj: bool,
    out: &mut Vec<(String, bool, bool)>,
) {
    match goal {
        Goal::True | Goal::Fail | Goal::Cut | Goal::Call(_) => {}
        Goal::Conj(a, b) => {
            collect_builtin_literals(a, negated, in_disj, out);
            collect_builtin_literals(b, negated, in_disj, out);
        }
        Goal::Disj(a, b) => {
            collect_builtin_literals(a, negated, true, out);
            collect_builtin_literals(b, negated, true, out);
        }
        Goal::Naf(g) => collect_builtin_literals(g, true, in_disj, out),
        Goal::Unify(..) | Goal::Compare(..) | Goal::Is(..) => {
            out.push((goal_text(goal), negated, in_disj));
        }
        Goal::Assert(..) | Goal::Retract(..) | Goal::Retractall(..) => {}
    }
}

/// A node of the rule graph: a predicate, or a leaf for one arithmetic or
/// unification literal (keyed by its display text).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum GraphNode {
    Predicate(Indicator),
    Builtin(String),
}

impl GraphNode {
    pub fn label(&self) -> String {
        match self {
            GraphNode::Predicate(ind) => ind.to_string(),
            GraphNode::Builtin(text) => text.clone(),
        }
    }
}

/// A dependency edge from a clause head to something its body uses.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct GraphEdge {
    pub from: usize,
    pub to: usize,
    /// The target appears under `\+` in the body.
    pub negated: bool,
    /// The target appears inside a `;` alternative.
    pub in_disjunction: bool,
}

/// Which rules depend on which: predicate nodes point at the predicates they
/// call and at the comparison/unification leaves they test.
#[derive(Clone, Default, PartialEq, Debug)]
pub struct RuleGraph {
    pub nodes: Vec<GraphNode>,
    pub edges: Vec<GraphEdge>,
}

impl RuleGraph {
    fn node_index(&mut self, node: GraphNode) -> usize {
        if let Some(i) = self.nodes.iter().position(|n| *n == node) {
            return i;
        }
        self.nodes.push(node);
        self.nodes.len() - 1
    }

    pub fn predicate_count(&self) -> usize {
        self.nodes
            .iter()
            .filter(|n| matches!(n, GraphNode::Predicate(_)))
            .count()
    }

    pub fn builtin_count(&self) -> usize {
        self.nodes
            .iter()
            .filter(|n| matches!(n, GraphNode::Builtin(_)))
            .count()
    }

    /// Edges as (from-label, to-label, negated, in_disjunction), sorted.
    pub fn edge_labels(&self) -> Vec<(String, String, bool, bool)> {
        let mut out: Vec<_> = self
            .edges
            .iter()
            .map(|e| {
                (
                    self.nodes[e.from].label(),
                    self.nodes[e.to].label(),
                    e.negated,
                    e.in_disjunction,
                )
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Label-level isomorphism: same node labels, same labelled edges.
    pub fn same_shape(&self, other: &RuleGraph) -> bool {
        let mut a: Vec<String> = self.nodes.iter().map(GraphNode::label).collect();
        let mut b: Vec<String> = other.nodes.iter().map(GraphNode::label).collect();
        a.sort();
        b.sort();
        a == b && self.edge_labels() == other.edge_labels()
    }

    /// Renders the graph in DOT. Output is deterministic: nodes and edges are
    /// emitted in lexicographic order. Predicates are boxes, literal leaves
    /// ellipses; negated edges are dashed; edges inside a disjunction carry
    /// an "or" label.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph rules {\n");
        let mut nodes: Vec<(String, bool)> = self
            .nodes
            .iter()
            .map(|n| (n.label(), matches!(n, GraphNode::Predicate(_))))
            .collect();
        nodes.sort();
        for (label, is_pred) in nodes {
            let shape = if is_pred { "box" } else { "ellipse" };
            out.push_str(&format!("  \"{}\" [shape={}];\n", escape(&label), shape));
        }
        for (from, to, negated, in_disj) in self.edge_labels() {
            let mut attrs = Vec::new();
            if negated {
                attrs.push("style=dashed".to_string());
            }
            if in_disj {
                attrs.push("label=\"or\"".to_string());
            }
            let attr_text = if attrs.is_empty() {
                String::new()
            } else {
                format!(" [{}]", attrs.join(", "))
            };
            out.push_str(&format!(
                "  \"{}\" -> \"{}\"{};\n",
                escape(&from),
                escape(&to),
                attr_text
            ));
        }
        out.push_str("}\n");
        out
    }

    /// Reads a graph back from the DOT dialect produced by [`Self::to_dot`].
    pub fn from_dot(text: &str) -> Result<RuleGraph, String> {
        let mut graph = RuleGraph::default();
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        match lines.next() {
            Some(l) if l.starts_with("digraph") && l.ends_with('{') => {}
            other => return Err(format!("expected 'digraph ... {{', got {other:?}")),
        }
        for line in lines {
            if line == "}" {
                return Ok(graph);
            }
            let line = line
                .strip_suffix(';')
                .ok_or_else(|| format!("expected ';' at end of line: {line}"))?;
            let (first, rest) = read_quoted(line)?;
            let rest = rest.trim_start();
            if let Some(rest) = rest.strip_prefix("->") {
                let (second, rest) = read_quoted(rest.trim_start())?;
                let attrs = rest.trim();
                let negated = attrs.contains("style=dashed");
                let in_disjunction = attrs.contains("label=\"or\"");
                let from = graph.node_index(node_from_label(&first));
                let to = graph.node_index(node_from_label(&second));
                graph.edges.push(GraphEdge { from, to, negated, in_disjunction });
            } else {
                let attrs = rest.trim();
                let node = if attrs.contains("shape=box") {
                    node_from_label(&first)
                } else {
                    GraphNode::Builtin(first.clone())
                };
                graph.node_index(node);
            }
        }
        Err("missing closing '}'".to_string())
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn unescape(s: &str) -> String {
    let mut out = String::new();
    let mut chars = s.chars();
    while let Some(c) = chars.next() {
        if c == '\\' {
            if let Some(n) = chars.next() {
                out.push(n);
            }
        } else {
            out.push(c);
        }
    }
    out
}

/// Reads a leading `"..."` string; returns (content, remainder).
fn read_quoted(s: &str) -> Result<(String, &str), String> {
    let rest = s
        .strip_prefix('"')
        .ok_or_else(|| format!("expected '\"' at: {s}"))?;
    let mut end = None;
    let mut escaped = false;
    for (i, c) in rest.char_indices() {
        if escaped {
            escaped = false;
        } else if c == '\\' {
            escaped = true;
        } else if c == '"' {
            end = Some(i);
            break;
        }
    }
    let end = end.ok_or_else(|| format!("unterminated string at: {s}"))?;
    Ok((unescape(&rest[..end]), &rest[end + 1..]))
}

/// A box label is a predicate indicator `name/arity`; used when reading DOT.
fn node_from_label(label: &str) -> GraphNode {
    if let Some((name, arity)) = label.rsplit_once('/') {
        if let Ok(arity) = arity.parse::<usize>() {
            return GraphNode::Predicate(Indicator::new(name, arity));
        }
    }
    GraphNode::Builtin(label.to_string())
}

/// Builds the rule graph of a program. Predicates appear in first-appearance
/// order (declared-only predicates included); leaves appear as the clauses
/// that use them are scanned.
pub fn rule_graph(program: &Program) -> RuleGraph {
    let mut graph = RuleGraph::default();
    // All defined predicates become nodes up front, so clause-less dynamic
    // predicates still show up.
    let defined: IndexSet<Indicator> = program.defined_indicators();
    for ind in &defined {
        graph.node_index(GraphNode::Predicate(ind.clone()));
    }
    for clause in program.clauses() {
        let from = graph.node_index(GraphNode::Predicate(clause.indicator()));
        let mut calls = Vec::new();
        collect_calls(&clause.body, false, false, &mut calls);
        for (ind, negated, in_disjunction) in calls {
            let to = graph.node_index(GraphNode::Predicate(ind));
            let edge = GraphEdge { from, to, negated, in_disjunction };
            if !graph.edges.contains(&edge) {
                graph.edges.push(edge);
            }
        }
        let mut literals = Vec::new();
        collect_builtin_literals(&clause.body, false, false, &mut literals);
        for (text, negated, in_disjunction) in literals {
            let to = graph.node_index(GraphNode::Builtin(text));
            let edge = GraphEdge { from, to, negated, in_disjunction };
            if !graph.edges.contains(&edge) {
                graph.edges.push(edge);
            }
        }
    }
    graph
}
