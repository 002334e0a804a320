//! Canonical text for terms, goals, and programs.
//!
//! The printer and the reader round-trip: reading printed text yields a
//! structurally identical program (up to variable renaming). Operators print
//! infix with minimal parentheses; atoms are quoted only when necessary.

use std::fmt::Write;

use crate::engine::goal::{Goal, goal_to_term};
use crate::engine::ops::{self, Assoc, SYMBOL_CHARS};
use crate::engine::program::{Clause, ItemKind, Program};
use crate::engine::term::Term;

pub fn term_text(t: &Term) -> String {
    let mut out = String::new();
    write_term(&mut out, t, 1200);
    out
}

pub fn goal_text(g: &Goal) -> String {
    term_text(&goal_to_term(g))
}

pub fn clause_text(c: &Clause) -> String {
    if c.is_fact() {
        format!("{}.", term_text(&c.head))
    } else {
        let rule = Term::compound(":-", vec![c.head.clone(), goal_to_term(&c.body)]);
        format!("{}.", term_text(&rule))
    }
}

pub fn program_text(p: &Program) -> String {
    let mut out = String::new();
    for item in &p.items {
        match &item.kind {
            ItemKind::Clause(c) => out.push_str(&clause_text(c)),
            ItemKind::Directive(g) => {
                let mut line = String::from(":- ");
                write_term(&mut line, &goal_to_term(g), 1199);
                line.push('.');
                out.push_str(&line);
            }
            ItemKind::DynamicDecl(inds) => {
                let specs: Vec<String> = inds
                    .iter()
                    .map(|i| {
                        let mut name = String::new();
                        write_atom(&mut name, &i.name);
                        format!("{}/{}", name, i.arity)
                    })
                    .collect();
                let _ = write!(out, ":- dynamic {}.", specs.join(", "));
            }
        }
        out.push('\n');
    }
    out
}

fn write_term(out: &mut String, t: &Term, max_prec: u32) {
    match t {
        Term::Atom(name) => write_atom(out, name),
        Term::Var(v) => out.push_str(&v.name),
        Term::Number(n) => {
            let _ = write!(out, "{n}");
        }
        Term::Compound(f, args) if args.len() == 2 && ops::infix(f).is_some() => {
            let (p, assoc) = ops::infix(f).expect("matched above");
            let (left_max, right_max) = match assoc {
                Assoc::Xfx => (p - 1, p - 1),
                Assoc::Xfy => (p - 1, p),
                Assoc::Yfx => (p, p - 1),
            };
            let parens = p > max_prec;
            if parens {
                out.push('(');
            }
            write_term(out, &args[0], left_max);
            if f == "," {
                out.push_str(", ");
            } else {
                let _ = write!(out, " {f} ");
            }
            write_term(out, &args[1], right_max);
            if parens {
                out.push(')');
            }
        }
        Term::Compound(f, args) if args.len() == 1 && ops::prefix(f).is_some() => {
            // `- 5` would read back as the literal -5, so a unary minus on a
            // number keeps its argument parenthesised.
            if f == "-" && matches!(args[0], Term::Number(_)) {
                out.push_str("-(");
                write_term(out, &args[0], 999);
                out.push(')');
                return;
            }
            let (p, fy) = ops::prefix(f).expect("matched above");
            let parens = p > max_prec;
            if parens {
                out.push('(');
            }
            let _ = write!(out, "{f} ");
            write_term(out, &args[0], if fy { p } else { p - 1 });
            if parens {
                out.push(')');
            }
        }
        Term::Compound(f, args) => {
            write_atom(out, f);
            out.push('(');
            for (i, a) in args.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                write_term(out, a, 999);
            }
            out.push(')');
        }
    }
}

/// True when the atom reads back as itself without quotes.
fn plain_atom(name: &str) -> bool {
    if name == "!" || name == ";" {
        return true;
    }
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() => {
            chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        }
        Some(_) => !name.is_empty() && name.chars().all(|c| SYMBOL_CHARS.contains(c)),
        None => false,
    }
}

fn write_atom(out: &mut String, name: &str) {
    if plain_atom(name) {
        out.push_str(name);
        return;
    }
    out.push('\'');
    for c in name.chars() {
        match c {
            '\'' => out.push_str("\\'"),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c => out.push(c),
        }
    }
    out.push('\'');
}
