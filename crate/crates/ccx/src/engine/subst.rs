//! Substitutions and unification (without occurs check).

use std::collections::HashMap;

use crate::engine::term::{Term, VarId};

/// A binding environment mapping variables to terms.
#[derive(Default, Clone, Debug)]
pub struct Subst {
    map: HashMap<VarId, Term>,
}

impl Subst {
    pub fn new() -> Self {
        Subst::default()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn get(&self, v: VarId) -> Option<&Term> {
        self.map.get(&v)
    }

    /// Follows variable bindings one level at a time until reaching an
    /// unbound variable or a non-variable term.
    pub fn walk(&self, t: &Term) -> Term {
        let mut cur = t.clone();
        // A chain can visit each bound variable at most once unless the
        // bindings are cyclic, so cap the walk to break var-to-var loops.
        for _ in 0..=self.map.len() {
            match &cur {
                Term::Var(v) => match self.map.get(&v.id) {
                    Some(next) => cur = next.clone(),
                    None => return cur,
                },
                _ => return cur,
            }
        }
        cur
    }

    /// Applies the substitution throughout a term. Bindings that reach back
    /// into themselves (possible because there is no occurs check) leave the
    /// looping variable in place rather than expanding forever.
    pub fn resolve(&self, t: &Term) -> Term {
        let mut path = Vec::new();
        self.resolve_guarded(t, &mut path)
    }

    fn resolve_guarded(&self, t: &Term, path: &mut Vec<VarId>) -> Term {
        match t {
            Term::Var(v) => {
                if path.contains(&v.id) {
                    return t.clone();
                }
                match self.map.get(&v.id) {
                    Some(bound) => {
                        path.push(v.id);
                        let out = self.resolve_guarded(bound, path);
                        path.pop();
                        out
                    }
                    None => t.clone(),
                }
            }
            Term::Compound(f, args) => Term::Compound(
                f.clone(),
                args.iter().map(|a| self.resolve_guarded(a, path)).collect(),
            ),
            _ => t.clone(),
        }
    }

    pub(crate) fn bind(&mut self, v: VarId, t: Term, trail: &mut Vec<VarId>) {
        self.map.insert(v, t);
        trail.push(v);
    }

    pub(crate) fn undo_to(&mut self, trail: &mut Vec<VarId>, mark: usize) {
        while trail.len() > mark {
            let v = trail.pop().expect("trail entries above mark");
            self.map.remove(&v);
        }
    }
}

/// Unifies two terms under an existing substitution, returning the extended
/// substitution on success.
///
/// ```
/// use ccx::engine::{Subst, Term, unify};
/// let s = unify(&Term::atom("a"), &Term::atom("a"), &Subst::new());
/// assert!(s.is_some());
/// assert!(unify(&Term::atom("a"), &Term::atom("b"), &Subst::new()).is_none());
/// ```
pub fn unify(a: &Term, b: &Term, s: &Subst) -> Option<Subst> {
    let mut out = s.clone();
    let mut trail = Vec::new();
    if unify_trailed(&mut out, &mut trail, a, b) {
        Some(out)
    } else {
        None
    }
}

/// Destructive unification recording bindings on a trail for undo.
pub(crate) fn unify_trailed(s: &mut Subst, trail: &mut Vec<VarId>, a: &Term, b: &Term) -> bool {
    let a = s.walk(a);
    let b = s.walk(b);
    match (&a, &b) {
        (Term::Var(x), Term::Var(y)) if x.id == y.id => true,
        (Term::Var(x), _) => {
            s.bind(x.id, b.clone(), trail);
            true
        }
        (_, Term::Var(y)) => {
            s.bind(y.id, a.clone(), trail);
            true
        }
        (Term::Atom(p), Term::Atom(q)) => p == q,
        (Term::Number(p), Term::Number(q)) => p == q,
        (Term::Compound(f, xs), Term::Compound(g, ys)) => {
            f == g
                && xs.len() == ys.len()
                && xs.iter().zip(ys).all(|(x, y)| unify_trailed(s, trail, x, y))
        }
        _ => false,
    }
}
