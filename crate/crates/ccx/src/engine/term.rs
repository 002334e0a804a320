//! Logic terms: atoms, exact numbers, variables, and compound terms.

use std::fmt;

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, Signed, Zero};

/// Unique identity of a variable. Two variables are the same variable iff
/// their ids are equal, regardless of display name.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VarId(pub u64);

/// A logic variable. Equality is by [`VarId`] only; the name is kept for
/// display and for reporting bindings.
#[derive(Clone, Debug)]
pub struct Var {
    pub name: String,
    pub id: VarId,
}

impl PartialEq for Var {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
    }
}

impl Eq for Var {}

/// An exact number: an integer or a rational with an exact value.
///
/// All arithmetic is exact; comparisons between integers and rationals never
/// round. Decimal literals such as `6.5` are read as exact rationals, so
/// `6.5 * 2 =:= 13` holds.
///
/// ```
/// use ccx::engine::Number;
/// let n = Number::from_integer(13).checked_div(&Number::from_integer(2)).unwrap();
/// assert_eq!(n.to_string(), "6.5");
/// assert!(!n.is_integer());
/// ```
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Number(Ratio<i128>);

impl Number {
    pub fn from_integer(i: i128) -> Self {
        Number(Ratio::from_integer(i))
    }

    /// Builds the exact value of a decimal literal `int.frac`.
    /// Returns `None` on overflow.
    pub fn from_decimal(int_part: &str, frac_part: &str) -> Option<Self> {
        let int: i128 = int_part.parse().ok()?;
        let frac: i128 = frac_part.parse().ok()?;
        let scale = 10i128.checked_pow(u32::try_from(frac_part.len()).ok()?)?;
        let numer = int.checked_mul(scale)?.checked_add(frac)?;
        Some(Number(Ratio::new(numer, scale)))
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        self.0.checked_add(&other.0).map(Number)
    }

    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        self.0.checked_sub(&other.0).map(Number)
    }

    pub fn checked_mul(&self, other: &Self) -> Option<Self> {
        self.0.checked_mul(&other.0).map(Number)
    }

    /// Exact division. `None` on division by zero or overflow.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        if other.0.is_zero() {
            return None;
        }
        self.0.checked_div(&other.0).map(Number)
    }

    pub fn checked_neg(&self) -> Option<Self> {
        Number::from_integer(0).checked_sub(self)
    }
}

impl fmt::Display for Number {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            return write!(f, "{}", self.0.numer());
        }
        // Exact decimal expansion when the reduced denominator is 2^a * 5^b
        // (always the case for parsed decimal literals). Other rationals can
        // only be produced by runtime arithmetic and print as numer/denom.
        let mut d = *self.0.denom();
        let (mut twos, mut fives) = (0u32, 0u32);
        while d % 2 == 0 {
            d /= 2;
            twos += 1;
        }
        while d % 5 == 0 {
            d /= 5;
            fives += 1;
        }
        if d != 1 {
            return write!(f, "{}/{}", self.0.numer(), self.0.denom());
        }
        let scale = twos.max(fives);
        let mult = 2i128
            .checked_pow(scale - twos)
            .and_then(|m| m.checked_mul(5i128.pow(scale - fives)));
        let scaled = mult.and_then(|m| self.0.numer().checked_mul(&m));
        let Some(scaled) = scaled else {
            return write!(f, "{}/{}", self.0.numer(), self.0.denom());
        };
        let base = 10i128.pow(scale);
        let sign = if self.0.is_negative() { "-" } else { "" };
        let abs = scaled.unsigned_abs();
        let int = abs / base.unsigned_abs();
        let frac = abs % base.unsigned_abs();
        let frac = format!("{:0width$}", frac, width = scale as usize);
        let frac = frac.trim_end_matches('0');
        write!(f, "{sign}{int}.{frac}")
    }
}

/// A predicate indicator `name/arity`, e.g. `claim_covered/5`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Indicator {
    pub name: String,
    pub arity: usize,
}

impl Indicator {
    pub fn new(name: impl Into<String>, arity: usize) -> Self {
        Indicator { name: name.into(), arity }
    }
}

impl fmt::Display for Indicator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.name, self.arity)
    }
}

/// The universal value of the engine.
///
/// Zero-arity symbols are always [`Term::Atom`]; a [`Term::Compound`] has at
/// least one argument.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Term {
    Atom(String),
    Number(Number),
    Var(Var),
    Compound(String, Vec<Term>),
}

impl Term {
    pub fn atom(name: impl Into<String>) -> Term {
        Term::Atom(name.into())
    }

    pub fn int(i: i128) -> Term {
        Term::Number(Number::from_integer(i))
    }

    pub fn compound(name: impl Into<String>, args: Vec<Term>) -> Term {
        let name = name.into();
        debug_assert!(!args.is_empty(), "zero-arity symbols are atoms");
        Term::Compound(name, args)
    }

    /// The predicate indicator of a callable term (atom or compound).
    pub fn indicator(&self) -> Option<Indicator> {
        match self {
            Term::Atom(n) => Some(Indicator::new(n.clone(), 0)),
            Term::Compound(n, args) => Some(Indicator::new(n.clone(), args.len())),
            _ => None,
        }
    }

    pub fn is_callable(&self) -> bool {
        matches!(self, Term::Atom(_) | Term::Compound(_, _))
    }

    pub fn args(&self) -> &[Term] {
        match self {
            Term::Compound(_, args) => args,
            _ => &[],
        }
    }

    /// Collects every variable occurrence in order (with repeats).
    pub fn var_occurrences<'a>(&'a self, out: &mut Vec<&'a Var>) {
        match self {
            Term::Var(v) => out.push(v),
            Term::Compound(_, args) => {
                for a in args {
                    a.var_occurrences(out);
                }
            }
            _ => {}
        }
    }
}

/// Structural equality up to a consistent renaming of variables.
pub fn alpha_eq(a: &Term, b: &Term) -> bool {
    let mut map = AlphaMap::default();
    alpha_eq_with(a, b, &mut map)
}

/// Variable correspondence built during an alpha-equivalence check.
#[derive(Default)]
pub struct AlphaMap {
    fwd: std::collections::HashMap<VarId, VarId>,
    bwd: std::collections::HashMap<VarId, VarId>,
}

impl AlphaMap {
    pub fn pair(&mut self, a: VarId, b: VarId) -> bool {
        let f = *self.fwd.entry(a).or_insert(b);
        let g = *self.bwd.entry(b).or_insert(a);
        f == b && g == a
    }
}

pub fn alpha_eq_with(a: &Term, b: &Term, map: &mut AlphaMap) -> bool {
    match (a, b) {
        (Term::Atom(x), Term::Atom(y)) => x == y,
        (Term::Number(x), Term::Number(y)) => x == y,
        (Term::Var(x), Term::Var(y)) => map.pair(x.id, y.id),
        (Term::Compound(f, xs), Term::Compound(g, ys)) => {
            f == g
                && xs.len() == ys.len()
                && xs.iter().zip(ys).all(|(x, y)| alpha_eq_with(x, y, map))
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_display_exact() {
        assert_eq!(Number::from_integer(42).to_string(), "42");
        assert_eq!(Number::from_decimal("6", "5").unwrap().to_string(), "6.5");
        assert_eq!(Number::from_decimal("0", "25").unwrap().to_string(), "0.25");
        let third = Number::from_integer(1)
            .checked_div(&Number::from_integer(3))
            .unwrap();
        assert_eq!(third.to_string(), "1/3");
    }

    #[test]
    fn number_comparisons_are_exact() {
        let half = Number::from_decimal("0", "5").unwrap();
        let one = Number::from_integer(1);
        assert!(half < one);
        assert_eq!(half.checked_mul(&Number::from_integer(2)).unwrap(), one);
    }

    #[test]
    fn var_identity_is_by_id() {
        let a = Var { name: "X".into(), id: VarId(1) };
        let b = Var { name: "Y".into(), id: VarId(1) };
        let c = Var { name: "X".into(), id: VarId(2) };
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn alpha_equivalence() {
        let t1 = Term::compound(
            "f",
            vec![
                Term::Var(Var { name: "X".into(), id: VarId(0) }),
                Term::Var(Var { name: "X".into(), id: VarId(0) }),
            ],
        );
        let t2 = Term::compound(
            "f",
            vec![
                Term::Var(Var { name: "A".into(), id: VarId(7) }),
                Term::Var(Var { name: "A".into(), id: VarId(7) }),
            ],
        );
        let t3 = Term::compound(
            "f",
            vec![
                Term::Var(Var { name: "A".into(), id: VarId(7) }),
                Term::Var(Var { name: "B".into(), id: VarId(8) }),
            ],
        );
        assert!(alpha_eq(&t1, &t2));
        assert!(!alpha_eq(&t1, &t3));
    }
}
