//! Parsed programs: clauses, directives, and dynamic declarations in source
//! order.

use indexmap::{IndexMap, IndexSet};

use crate::engine::goal::{Goal, goal_alpha_eq_with};
use crate::engine::term::{AlphaMap, Indicator, Term, alpha_eq_with};

/// A clause `Head :- Body.` Facts carry a body of `true`.
#[derive(Clone, PartialEq, Debug)]
pub struct Clause {
    pub head: Term,
    pub body: Goal,
}

impl Clause {
    pub fn fact(head: Term) -> Self {
        Clause { head, body: Goal::True }
    }

    pub fn indicator(&self) -> Indicator {
        self.head
            .indicator()
            .expect("clause heads are validated to be callable")
    }

    pub fn is_fact(&self) -> bool {
        self.body == Goal::True
    }
}

/// One top-level entry of a source file.
#[derive(Clone, PartialEq, Debug)]
pub enum ItemKind {
    Clause(Clause),
    /// `:- Goal.` executed at load time.
    Directive(Goal),
    /// `:- dynamic p/1.` (possibly several indicators via `,`).
    DynamicDecl(Vec<Indicator>),
}

#[derive(Clone, PartialEq, Debug)]
pub struct Item {
    pub kind: ItemKind,
    /// 1-based source line of the item's first token, for diagnostics.
    pub line: u32,
}

/// A program is its items in source order. Clause order within a predicate —
/// and the first-appearance order of predicates — is part of the meaning and
/// is preserved everywhere.
#[derive(Clone, Default, Debug)]
pub struct Program {
    pub items: Vec<Item>,
}

impl Program {
    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn clauses(&self) -> impl Iterator<Item = &Clause> {
        self.items.iter().filter_map(|i| match &i.kind {
            ItemKind::Clause(c) => Some(c),
            _ => None,
        })
    }

    pub fn directives(&self) -> impl Iterator<Item = &Goal> {
        self.items.iter().filter_map(|i| match &i.kind {
            ItemKind::Directive(g) => Some(g),
            _ => None,
        })
    }

    /// Clauses grouped by predicate, predicates in first-appearance order.
    pub fn predicates(&self) -> IndexMap<Indicator, Vec<&Clause>> {
        let mut out: IndexMap<Indicator, Vec<&Clause>> = IndexMap::new();
        for c in self.clauses() {
            out.entry(c.indicator()).or_default().push(c);
        }
        out
    }

    /// Indicators declared dynamic, in declaration order.
    pub fn dynamic_decls(&self) -> IndexSet<Indicator> {
        let mut out = IndexSet::new();
        for item in &self.items {
            if let ItemKind::DynamicDecl(inds) = &item.kind {
                out.extend(inds.iter().cloned());
            }
        }
        out
    }

    /// Every predicate the program defines or declares, in first-appearance
    /// order: dynamic declarations count as appearances.
    pub fn defined_indicators(&self) -> IndexSet<Indicator> {
        let mut out = IndexSet::new();
        for item in &self.items {
            match &item.kind {
                ItemKind::Clause(c) => {
                    out.insert(c.indicator());
                }
                ItemKind::DynamicDecl(inds) => out.extend(inds.iter().cloned()),
                ItemKind::Directive(_) => {}
            }
        }
        out
    }

    /// Appends another program's items after this one's, as if the two
    /// sources had been one file.
    pub fn concat(&self, other: &Program) -> Program {
        let mut items = self.items.clone();
        items.extend(other.items.iter().cloned());
        Program { items }
    }
}

/// Structural equality of programs up to variable renaming.
pub fn program_alpha_eq(a: &Program, b: &Program) -> bool {
    a.items.len() == b.items.len()
        && a.items.iter().zip(&b.items).all(|(x, y)| {
            // Each item is a separate scope: variables do not span items.
            let mut map = AlphaMap::default();
            item_alpha_eq(&x.kind, &y.kind, &mut map)
        })
}

fn item_alpha_eq(a: &ItemKind, b: &ItemKind, map: &mut AlphaMap) -> bool {
    match (a, b) {
        (ItemKind::Clause(x), ItemKind::Clause(y)) => {
            alpha_eq_with(&x.head, &y.head, map) && goal_alpha_eq_with(&x.body, &y.body, map)
        }
        (ItemKind::Directive(x), ItemKind::Directive(y)) => goal_alpha_eq_with(x, y, map),
        (ItemKind::DynamicDecl(x), ItemKind::DynamicDecl(y)) => x == y,
        _ => false,
    }
}
