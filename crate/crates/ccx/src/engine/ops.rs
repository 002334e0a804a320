//! Operator table shared by the reader and the printer.

/// Characters that glue together into symbolic atoms like `:-` and `=<`.
pub(crate) const SYMBOL_CHARS: &str = "+-*/\\^<>=~:.?@#&$";

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum Assoc {
    Xfx,
    Xfy,
    Yfx,
}

/// Infix operators: `name -> (priority, associativity)`.
pub(crate) fn infix(name: &str) -> Option<(u32, Assoc)> {
    use Assoc::*;
    Some(match name {
        ":-" => (1200, Xfx),
        ";" => (1100, Xfy),
        "," => (1000, Xfy),
        "=" | "<" | ">" | "=<" | ">=" | "=:=" | "=\\=" | "is" => (700, Xfx),
        "+" | "-" => (500, Yfx),
        "*" | "/" => (400, Yfx),
        _ => return None,
    })
}

/// Prefix operators: `name -> (priority, argument may have same priority)`.
pub(crate) fn prefix(name: &str) -> Option<(u32, bool)> {
    Some(match name {
        ":-" | "?-" => (1200, false),
        "dynamic" => (1150, false),
        "\\+" => (900, true),
        "-" => (200, true),
        _ => return None,
    })
}

/// Operators that exist in full Prolog but are outside the supported subset.
/// Seeing one of these in operator position is a named construct error rather
/// than a generic syntax error.
pub(crate) fn unsupported_operator(name: &str) -> bool {
    matches!(
        name,
        "->" | "*->"
            | "\\="
            | "=="
            | "\\=="
            | "@<"
            | "@>"
            | "@=<"
            | "@>="
            | "=.."
            | "//"
            | "mod"
            | "rem"
            | "div"
            | "<<"
            | ">>"
            | "**"
            | "^"
            | ":"
            | "|"
            | "xor"
            | "rdiv"
            | "-->"
    )
}
