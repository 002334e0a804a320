//! Reader for the supported Prolog subset.
//!
//! Constructs outside the subset that are recognisably standard Prolog
//! (lists, strings, if-then-else, `findall`, ...) produce errors that name
//! the construct, so reports on generated code say *what* was used, not just
//! that a token was unexpected.

use std::collections::HashMap;

use crate::engine::error::ParseError;
use crate::engine::goal::{
    Goal, GoalFromTermError, goal_from_term, reserved_predicate_name, unsupported_construct,
};
use crate::engine::ops::{self, Assoc, SYMBOL_CHARS};
use crate::engine::program::{Clause, Item, ItemKind, Program};
use crate::engine::term::{Indicator, Number, Term, Var, VarId};

/// A parsed query file: an optional prelude (clauses, directives, dynamic
/// declarations) and exactly one goal.
#[derive(Clone, Debug)]
pub struct Query {
    pub prelude: Program,
    pub goal: Goal,
}

/// Reads a program file: clauses, `:-` directives, and dynamic declarations.
/// Query terms (`?- G.`) are not allowed here.
pub fn parse_program(src: &str) -> Result<Program, ParseError> {
    let mut reader = Reader::new(src)?;
    let mut items = Vec::new();
    while let Some(top) = reader.read_top()? {
        match top.role {
            Role::Query => {
                return Err(err_at(
                    top.line,
                    top.col,
                    "queries (?-) are not allowed in a program file",
                ));
            }
            _ => items.push(top_to_item(top)?),
        }
    }
    Ok(Program { items })
}

/// Reads a query file. The goal is either the unique `?- G.` term or, if no
/// `?-` term is present, a final headless term such as `claim_covered(a, b).`
/// which is read as the goal instead of as a fact.
pub fn parse_query(src: &str) -> Result<Query, ParseError> {
    let mut reader = Reader::new(src)?;
    let mut tops = Vec::new();
    while let Some(top) = reader.read_top()? {
        tops.push(top);
    }
    let n_queries = tops.iter().filter(|t| t.role == Role::Query).count();
    if n_queries > 1 {
        let second = tops
            .iter()
            .filter(|t| t.role == Role::Query)
            .nth(1)
            .expect("counted above");
        return Err(err_at(
            second.line,
            second.col,
            "a query file must contain exactly one ?- goal",
        ));
    }
    let goal_top = if n_queries == 1 {
        let idx = tops
            .iter()
            .position(|t| t.role == Role::Query)
            .expect("counted above");
        tops.remove(idx)
    } else {
        // No ?- goal: a final headless term is the goal.
        match tops.last() {
            Some(t) if t.role == Role::Plain && !is_rule(&t.term) => {
                tops.pop().expect("checked non-empty")
            }
            _ => {
                let (line, col) = tops.last().map(|t| (t.line, t.col)).unwrap_or((1, 1));
                return Err(err_at(
                    line,
                    col,
                    "no query goal found: expected one ?- term or a final headless goal",
                ));
            }
        }
    };
    let goal_term = match goal_top.role {
        Role::Query => match &goal_top.term {
            Term::Compound(_, args) => args[0].clone(),
            _ => unreachable!("queries are ?-/1 terms"),
        },
        _ => goal_top.term.clone(),
    };
    let goal = goal_from_term(&goal_term)
        .map_err(|e| goal_err(goal_top.line, goal_top.col, e))?;
    let mut items = Vec::new();
    for top in tops {
        items.push(top_to_item(top)?);
    }
    Ok(Query { prelude: Program { items }, goal })
}

/// Reads a single goal, e.g. an interactive input line. A trailing `.` and a
/// leading `?-` are both optional.
pub fn parse_goal(src: &str) -> Result<Goal, ParseError> {
    let term = parse_term_str(src)?;
    let term = match &term {
        Term::Compound(f, args) if f == "?-" && args.len() == 1 => args[0].clone(),
        _ => term,
    };
    goal_from_term(&term).map_err(|e| goal_err(1, 1, e))
}

/// Reads a single term (trailing `.` optional).
pub fn parse_term_str(src: &str) -> Result<Term, ParseError> {
    let mut reader = Reader::new(src)?;
    if reader.peek().tok == Tok::Eof {
        return Err(err_at(1, 1, "expected a term"));
    }
    let (term, _) = reader.term(1200)?;
    match reader.peek().tok {
        Tok::End => {
            reader.advance();
        }
        Tok::Eof => {}
        _ => return Err(reader.unexpected("expected end of input")),
    }
    if reader.peek().tok != Tok::Eof {
        return Err(reader.unexpected("expected end of input"));
    }
    Ok(term)
}

#[derive(PartialEq, Clone, Copy, Debug)]
enum Role {
    /// `?- G.`
    Query,
    /// `:- G.` (directive or dynamic declaration)
    Directive,
    /// fact or rule
    Plain,
}

struct Top {
    term: Term,
    role: Role,
    line: u32,
    col: u32,
}

fn is_rule(t: &Term) -> bool {
    matches!(t, Term::Compound(f, args) if f == ":-" && args.len() == 2)
}

fn top_to_item(top: Top) -> Result<Item, ParseError> {
    let kind = match top.role {
        Role::Query => unreachable!("rejected before item conversion"),
        Role::Directive => {
            let body = match &top.term {
                Term::Compound(_, args) => &args[0],
                _ => unreachable!("directives are :-/1 terms"),
            };
            if let Some(decl) = as_dynamic_decl(body) {
                ItemKind::DynamicDecl(decl.map_err(|msg| err_at(top.line, top.col, &msg))?)
            } else {
                ItemKind::Directive(
                    goal_from_term(body).map_err(|e| goal_err(top.line, top.col, e))?,
                )
            }
        }
        Role::Plain => {
            let (head, body) = match &top.term {
                Term::Compound(f, args) if f == ":-" && args.len() == 2 => {
                    (args[0].clone(), Some(&args[1]))
                }
                t => (t.clone(), None),
            };
            check_head(&head, top.line, top.col)?;
            let body = match body {
                Some(b) => goal_from_term(b).map_err(|e| goal_err(top.line, top.col, e))?,
                None => Goal::True,
            };
            ItemKind::Clause(Clause { head, body })
        }
    };
    Ok(Item { kind, line: top.line })
}

/// If the directive body is `dynamic ...`, extracts the declared indicators.
fn as_dynamic_decl(body: &Term) -> Option<Result<Vec<Indicator>, String>> {
    let spec = match body {
        Term::Compound(f, args) if f == "dynamic" && args.len() == 1 => &args[0],
        _ => return None,
    };
    let mut inds = Vec::new();
    let mut stack = vec![spec];
    while let Some(t) = stack.pop() {
        match t {
            Term::Compound(f, args) if f == "," && args.len() == 2 => {
                stack.push(&args[1]);
                stack.push(&args[0]);
            }
            Term::Compound(f, args) if f == "/" && args.len() == 2 => {
                match (&args[0], &args[1]) {
                    (Term::Atom(name), Term::Number(n)) if n.is_integer() => {
                        let arity = n.to_string().parse::<usize>().ok();
                        match arity {
                            Some(a) => {
                                if reserved_predicate_name(name) {
                                    return Some(Err(format!(
                                        "cannot declare builtin {name}/{a} dynamic"
                                    )));
                                }
                                inds.push(Indicator::new(name.clone(), a));
                            }
                            None => {
                                return Some(Err(
                                    "dynamic declaration needs a non-negative arity".into(),
                                ));
                            }
                        }
                    }
                    _ => {
                        return Some(Err(
                            "dynamic declaration expects name/arity pairs".into()
                        ));
                    }
                }
            }
            _ => return Some(Err("dynamic declaration expects name/arity pairs".into())),
        }
    }
    Some(Ok(inds))
}

fn check_head(head: &Term, line: u32, col: u32) -> Result<(), ParseError> {
    match head {
        Term::Atom(name) | Term::Compound(name, _) => {
            let arity = head.args().len();
            if reserved_predicate_name(name) {
                return Err(err_at(
                    line,
                    col,
                    &format!("cannot redefine builtin {name}/{arity}"),
                ));
            }
            if let Some(construct) = unsupported_construct(name, arity) {
                return Err(ParseError {
                    line,
                    col,
                    message: format!(
                        "cannot define {name}/{arity}: standard predicate outside the \
                         supported subset ({construct})"
                    ),
                    construct: Some(format!("{name}/{arity}")),
                });
            }
            Ok(())
        }
        Term::Var(v) => Err(err_at(
            line,
            col,
            &format!("clause head cannot be a variable ({})", v.name),
        )),
        Term::Number(n) => Err(err_at(line, col, &format!("clause head cannot be a number ({n})"))),
    }
}

fn goal_err(line: u32, col: u32, e: GoalFromTermError) -> ParseError {
    let construct = match &e {
        GoalFromTermError::Unsupported { indicator, .. } => Some(indicator.clone()),
        _ => None,
    };
    ParseError { line, col, message: e.to_string(), construct }
}

fn err_at(line: u32, col: u32, message: &str) -> ParseError {
    ParseError { line, col, message: message.to_string(), construct: None }
}

// ---------------------------------------------------------------------------
// Tokens
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Debug)]
enum Tok {
    /// An atom, including symbolic and quoted atoms, `!`, and `;`.
    Atom(String),
    /// An atom immediately followed by `(` — a compound term's functor.
    Functor(String),
    Var(String),
    Num(Number),
    Open,
    Close,
    Comma,
    /// Clause-terminating `.`
    End,
    Eof,
}

#[derive(Clone, Debug)]
struct SpTok {
    tok: Tok,
    line: u32,
    col: u32,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: u32,
    col: u32,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { chars: src.chars().peekable(), line: 1, col: 1 }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn error(&self, message: impl Into<String>, construct: Option<String>) -> ParseError {
        ParseError { line: self.line, col: self.col, message: message.into(), construct }
    }

    fn tokenize(mut self) -> Result<Vec<SpTok>, ParseError> {
        let mut out = Vec::new();
        loop {
            self.skip_layout()?;
            let (line, col) = (self.line, self.col);
            let Some(c) = self.peek() else {
                out.push(SpTok { tok: Tok::Eof, line, col });
                return Ok(out);
            };
            let tok = match c {
                '(' => {
                    self.bump();
                    Tok::Open
                }
                ')' => {
                    self.bump();
                    Tok::Close
                }
                ',' => {
                    self.bump();
                    Tok::Comma
                }
                '!' | ';' => {
                    self.bump();
                    Tok::Atom(c.to_string())
                }
                '[' => {
                    return Err(self.error(
                        "list syntax is not supported",
                        Some("[".into()),
                    ));
                }
                '{' => {
                    return Err(self.error(
                        "curly-brace terms are not supported",
                        Some("{".into()),
                    ));
                }
                '|' => {
                    return Err(self.error(
                        "'|' (list tails / alternative disjunction) is not supported",
                        Some("|".into()),
                    ));
                }
                '"' => {
                    return Err(self.error(
                        "double-quoted strings are not supported",
                        Some("\"".into()),
                    ));
                }
                '\'' => self.quoted_atom()?,
                c if c.is_ascii_digit() => self.number()?,
                c if c.is_ascii_lowercase() => self.name(),
                c if c.is_ascii_uppercase() || c == '_' => self.variable(),
                c if SYMBOL_CHARS.contains(c) => {
                    if c == '.' && self.end_dot() {
                        self.bump();
                        Tok::End
                    } else {
                        self.symbolic()
                    }
                }
                c => return Err(self.error(format!("unexpected character '{c}'"), None)),
            };
            out.push(SpTok { tok, line, col });
        }
    }

    fn skip_layout(&mut self) -> Result<(), ParseError> {
        loop {
            match self.peek() {
                Some(c) if c.is_whitespace() => {
                    self.bump();
                }
                Some('%') => {
                    while let Some(c) = self.peek() {
                        if c == '\n' {
                            break;
                        }
                        self.bump();
                    }
                }
                Some('/') => {
                    // Only a comment if followed by '*'; otherwise it is the
                    // division operator and the tokenizer handles it later.
                    let mut ahead = self.chars.clone();
                    ahead.next();
                    if ahead.peek() == Some(&'*') {
                        let (line, col) = (self.line, self.col);
                        self.bump();
                        self.bump();
                        let mut prev = '\0';
                        loop {
                            match self.bump() {
                                Some('/') if prev == '*' => break,
                                Some(c) => prev = c,
                                None => {
                                    return Err(ParseError {
                                        line,
                                        col,
                                        message: "unterminated block comment".into(),
                                        construct: None,
                                    });
                                }
                            }
                        }
                    } else {
                        return Ok(());
                    }
                }
                _ => return Ok(()),
            }
        }
    }

    /// True when the upcoming `.` terminates a clause: followed by layout,
    /// a line comment, or end of input.
    fn end_dot(&mut self) -> bool {
        let mut ahead = self.chars.clone();
        ahead.next();
        match ahead.peek() {
            None => true,
            Some(&c) => c.is_whitespace() || c == '%',
        }
    }

    fn functor_if_open(&mut self, name: String) -> Tok {
        if self.peek() == Some('(') {
            self.bump();
            Tok::Functor(name)
        } else {
            Tok::Atom(name)
        }
    }

    fn name(&mut self) -> Tok {
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == '_' {
                s.push(c);
                self.bump();
            } else {
                break;
            }
        }
        self.functor_if_open(s)
    }

    fn variable(&mut self) -> Tok {
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == '_' {
                s.push(c);
                self.bump();
            } else {
                break;
            }
        }
        Tok::Var(s)
    }

    fn symbolic(&mut self) -> Tok {
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if SYMBOL_CHARS.contains(c) {
                s.push(c);
                self.bump();
            } else {
                break;
            }
        }
        self.functor_if_open(s)
    }

    fn number(&mut self) -> Result<Tok, ParseError> {
        let mut int = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                int.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if int == "0" && matches!(self.peek(), Some('\'' | 'x' | 'o' | 'b')) {
            return Err(self.error(
                "character-code and radix integer literals are not supported",
                Some("0'".into()),
            ));
        }
        // A '.' continues the literal only when a digit follows; otherwise it
        // is the clause terminator.
        let mut ahead = self.chars.clone();
        if self.peek() == Some('.')
            && matches!(ahead.nth(1), Some(c) if c.is_ascii_digit())
        {
            self.bump();
            let mut frac = String::new();
            while let Some(c) = self.peek() {
                if c.is_ascii_digit() {
                    frac.push(c);
                    self.bump();
                } else {
                    break;
                }
            }
            if matches!(self.peek(), Some('e' | 'E')) {
                return Err(self.error(
                    "floating-point exponent notation is not supported",
                    Some("e".into()),
                ));
            }
            match Number::from_decimal(&int, &frac) {
                Some(n) => Ok(Tok::Num(n)),
                None => Err(self.error("numeric literal out of range", None)),
            }
        } else {
            match int.parse::<i128>() {
                Ok(i) => Ok(Tok::Num(Number::from_integer(i))),
                Err(_) => Err(self.error("integer literal out of range", None)),
            }
        }
    }

    fn quoted_atom(&mut self) -> Result<Tok, ParseError> {
        let (line, col) = (self.line, self.col);
        self.bump(); // opening quote
        let mut s = String::new();
        loop {
            match self.bump() {
                None | Some('\n') => {
                    return Err(ParseError {
                        line,
                        col,
                        message: "unterminated quoted atom".into(),
                        construct: None,
                    });
                }
                Some('\'') => {
                    if self.peek() == Some('\'') {
                        self.bump();
                        s.push('\'');
                    } else {
                        break;
                    }
                }
                Some('\\') => match self.bump() {
                    Some('n') => s.push('\n'),
                    Some('t') => s.push('\t'),
                    Some('r') => s.push('\r'),
                    Some('\\') => s.push('\\'),
                    Some('\'') => s.push('\''),
                    Some('"') => s.push('"'),
                    Some('a') => s.push('\x07'),
                    Some('b') => s.push('\x08'),
                    Some('f') => s.push('\x0c'),
                    Some('v') => s.push('\x0b'),
                    Some('\n') => {} // escaped line break: continuation
                    other => {
                        return Err(self.error(
                            format!(
                                "unsupported escape sequence '\\{}'",
                                other.map(String::from).unwrap_or_default()
                            ),
                            None,
                        ));
                    }
                },
                Some(c) => s.push(c),
            }
        }
        Ok(self.functor_if_open(s))
    }
}

// ---------------------------------------------------------------------------
// Term reader (operator precedence)
// ---------------------------------------------------------------------------

/// Upper bound on term nesting. Keeps reader recursion (and every later
/// recursive walk over parsed terms) comfortably within thread stacks;
/// handwritten and generated encodings stay far below it.
const MAX_NESTING: u32 = 128;

struct Reader {
    toks: Vec<SpTok>,
    pos: usize,
    vars: HashMap<String, VarId>,
    next_var: u64,
    depth: u32,
}

impl Reader {
    fn new(src: &str) -> Result<Self, ParseError> {
        let toks = Lexer::new(src).tokenize()?;
        Ok(Reader { toks, pos: 0, vars: HashMap::new(), next_var: 0, depth: 0 })
    }

    fn peek(&self) -> &SpTok {
        &self.toks[self.pos.min(self.toks.len() - 1)]
    }

    fn advance(&mut self) -> SpTok {
        let t = self.toks[self.pos.min(self.toks.len() - 1)].clone();
        if self.pos < self.toks.len() - 1 {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, message: &str) -> ParseError {
        let t = self.peek();
        let what = match &t.tok {
            Tok::Atom(a) => format!("'{a}'"),
            Tok::Functor(f) => format!("'{f}('"),
            Tok::Var(v) => v.clone(),
            Tok::Num(n) => n.to_string(),
            Tok::Open => "'('".into(),
            Tok::Close => "')'".into(),
            Tok::Comma => "','".into(),
            Tok::End => "'.'".into(),
            Tok::Eof => "end of input".into(),
        };
        ParseError {
            line: t.line,
            col: t.col,
            message: format!("{message}, found {what}"),
            construct: None,
        }
    }

    fn fresh_var(&mut self, name: &str) -> Term {
        let id = VarId(self.next_var);
        self.next_var += 1;
        Term::Var(Var { name: name.to_string(), id })
    }

    fn named_var(&mut self, name: &str) -> Term {
        if name == "_" {
            return self.fresh_var("_");
        }
        if let Some(&id) = self.vars.get(name) {
            return Term::Var(Var { name: name.to_string(), id });
        }
        let t = self.fresh_var(name);
        if let Term::Var(v) = &t {
            self.vars.insert(name.to_string(), v.id);
        }
        t
    }

    /// Reads the next top-level term and classifies it. Returns `None` at
    /// end of input.
    fn read_top(&mut self) -> Result<Option<Top>, ParseError> {
        if self.peek().tok == Tok::Eof {
            return Ok(None);
        }
        // Variable scope is one clause/directive/query.
        self.vars.clear();
        let (line, col) = (self.peek().line, self.peek().col);
        let (term, _) = self.term(1200)?;
        match self.peek().tok {
            Tok::End => {
                self.advance();
            }
            _ => return Err(self.unexpected("expected '.' to end the clause")),
        }
        let role = match &term {
            Term::Compound(f, args) if f == "?-" && args.len() == 1 => Role::Query,
            Term::Compound(f, args) if f == ":-" && args.len() == 1 => Role::Directive,
            _ => Role::Plain,
        };
        Ok(Some(Top { term, role, line, col }))
    }

    /// Parses one term with priority at most `max_prec`. Returns the term and
    /// the priority of its principal operator (0 for plain terms).
    fn term(&mut self, max_prec: u32) -> Result<(Term, u32), ParseError> {
        self.depth += 1;
        if self.depth > MAX_NESTING {
            let t = self.peek();
            return Err(ParseError {
                line: t.line,
                col: t.col,
                message: "term nesting too deep".into(),
                construct: None,
            });
        }
        let result = self.term_inner(max_prec);
        self.depth -= 1;
        result
    }

    fn term_inner(&mut self, max_prec: u32) -> Result<(Term, u32), ParseError> {
        let (mut left, mut left_prec) = self.primary(max_prec)?;
        loop {
            let (name, p, assoc) = match &self.peek().tok {
                Tok::Comma => (",".to_string(), 1000, Assoc::Xfy),
                Tok::Atom(a) => {
                    if let Some((p, assoc)) = ops::infix(a) {
                        (a.clone(), p, assoc)
                    } else if ops::unsupported_operator(a) {
                        let t = self.peek();
                        return Err(ParseError {
                            line: t.line,
                            col: t.col,
                            message: format!("operator '{a}' is not supported"),
                            construct: Some(a.clone()),
                        });
                    } else {
                        break;
                    }
                }
                _ => break,
            };
            if p > max_prec {
                break;
            }
            let left_max = match assoc {
                Assoc::Xfx | Assoc::Xfy => p - 1,
                Assoc::Yfx => p,
            };
            if left_prec > left_max {
                return Err(self.unexpected(&format!(
                    "operator '{name}' cannot take a priority-{left_prec} term on its left"
                )));
            }
            self.advance();
            let right_max = match assoc {
                Assoc::Xfy => p,
                _ => p - 1,
            };
            let (right, _) = self.term(right_max)?;
            left = Term::Compound(name, vec![left, right]);
            left_prec = p;
        }
        Ok((left, left_prec))
    }

    fn primary(&mut self, max_prec: u32) -> Result<(Term, u32), ParseError> {
        let sp = self.peek().clone();
        match sp.tok {
            Tok::Num(n) => {
                self.advance();
                Ok((Term::Number(n), 0))
            }
            Tok::Var(name) => {
                self.advance();
                Ok((self.named_var(&name), 0))
            }
            Tok::Open => {
                self.advance();
                let (t, _) = self.term(1200)?;
                match self.peek().tok {
                    Tok::Close => {
                        self.advance();
                        Ok((t, 0))
                    }
                    _ => Err(self.unexpected("expected ')'")),
                }
            }
            Tok::Functor(f) => {
                self.advance();
                let args = self.args()?;
                Ok((Term::Compound(f, args), 0))
            }
            Tok::Atom(a) => {
                if let Some((p, fy)) = ops::prefix(&a) {
                    if p <= max_prec && self.starts_term_after() {
                        self.advance();
                        // A '-' straight before a number literal is a sign.
                        if a == "-" {
                            if let Tok::Num(n) = &self.peek().tok {
                                let neg = n.checked_neg().ok_or_else(|| {
                                    self.unexpected("numeric literal out of range")
                                })?;
                                self.advance();
                                return Ok((Term::Number(neg), 0));
                            }
                        }
                        let arg_max = if fy { p } else { p - 1 };
                        let (arg, _) = self.term(arg_max)?;
                        return Ok((Term::Compound(a, vec![arg]), p));
                    }
                }
                self.advance();
                Ok((Term::Atom(a), 0))
            }
            Tok::Comma | Tok::Close | Tok::End | Tok::Eof => {
                Err(self.unexpected("expected a term"))
            }
        }
    }

    /// True when the token after the current one can begin a term — used to
    /// decide whether an atom in operand position acts as a prefix operator.
    fn starts_term_after(&self) -> bool {
        let next = &self.toks[(self.pos + 1).min(self.toks.len() - 1)];
        matches!(
            next.tok,
            Tok::Atom(_) | Tok::Functor(_) | Tok::Var(_) | Tok::Num(_) | Tok::Open
        )
    }

    /// Parses `Arg {, Arg} )` after a functor's opening paren. Arguments are
    /// read at priority 999 so a bare `,` separates arguments.
    fn args(&mut self) -> Result<Vec<Term>, ParseError> {
        let mut out = Vec::new();
        loop {
            let (t, _) = self.term(999)?;
            out.push(t);
            match self.peek().tok {
                Tok::Comma => {
                    self.advance();
                }
                Tok::Close => {
                    self.advance();
                    return Ok(out);
                }
                _ => return Err(self.unexpected("expected ',' or ')' in argument list")),
            }
        }
    }
}
