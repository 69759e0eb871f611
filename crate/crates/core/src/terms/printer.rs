//! Printing with the fewest parentheses the parser needs to read the term back,
//! except that a composite program on the left of `@` is always bracketed.

use std::fmt;

use super::ast::{Equation, Identity, ProgTerm, Term, TestTerm};

const OR: u8 = 1;
const AND: u8 = 2;
const AT: u8 = 3;
const DOT: u8 = 4;
const BRACKET: u8 = 5;
const UNARY: u8 = 6;
const POSTFIX: u8 = 7;

fn wrap(out: &mut String, own: u8, min: u8, body: impl FnOnce(&mut String)) {
    if own < min {
        out.push('(');
        body(out);
        out.push(')');
    } else {
        body(out);
    }
}

fn prog(out: &mut String, p: &ProgTerm, min: u8) {
    match p {
        ProgTerm::Var(v) => out.push_str(v),
        ProgTerm::One => out.push('1'),
        ProgTerm::Bot => out.push_str("bot"),
        ProgTerm::Compose(l, r) => wrap(out, DOT, min, |out| {
            prog(out, l, DOT);
            out.push_str(" . ");
            prog(out, r, BRACKET);
        }),
        ProgTerm::Ite(a, s, t) => wrap(out, BRACKET, min, |out| {
            test(out, a, POSTFIX);
            out.push('[');
            prog(out, s, OR);
            out.push_str(", ");
            prog(out, t, OR);
            out.push(']');
        }),
    }
}

fn test(out: &mut String, t: &TestTerm, min: u8) {
    match t {
        TestTerm::Var(v) => {
            out.push('%');
            out.push_str(v);
        }
        TestTerm::T => out.push('T'),
        TestTerm::F => out.push('F'),
        TestTerm::U => out.push('U'),
        TestTerm::Or(a, b) => wrap(out, OR, min, |out| {
            test(out, a, OR);
            out.push_str(" | ");
            test(out, b, AND);
        }),
        TestTerm::And(a, b) => wrap(out, AND, min, |out| {
            test(out, a, AND);
            out.push_str(" & ");
            test(out, b, AT);
        }),
        TestTerm::Comp(s, a) => wrap(out, AT, min, |out| {
            prog(out, s, BRACKET);
            out.push_str(" @ ");
            test(out, a, AT);
        }),
        TestTerm::Neg(a) => wrap(out, UNARY, min, |out| {
            out.push('~');
            test(out, a, UNARY);
        }),
        TestTerm::Down(a) => wrap(out, POSTFIX, min, |out| {
            test(out, a, POSTFIX);
            out.push('!');
        }),
    }
}

impl fmt::Display for ProgTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        prog(&mut s, self, OR);
        f.write_str(&s)
    }
}

impl fmt::Display for TestTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        test(&mut s, self, OR);
        f.write_str(&s)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Prog(p) => p.fmt(f),
            Term::Test(t) => t.fmt(f),
        }
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(h) = &self.hypothesis {
            write!(f, "{h} ==> ")?;
        }
        self.conclusion.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use crate::terms::parser::{parse_any_term, parse_identity};

    fn same(text: &str) {
        assert_eq!(parse_any_term(text).unwrap().to_string(), text);
    }

    #[test]
    fn minimal_parentheses() {
        same("%a[s, t] . u");
        same("(s . t) @ %a");
        same("(~%a)[s, t]");
        same("~%a! | (%a | %b) & %c");
        same("s . (t . u)");
        same("(%a & %b)!");
        same("~~%a");
        same("s @ t @ %a");
        same("(s @ %a)[s . t, bot]");
        same("%a[%b[s, t], 1]");
    }

    #[test]
    fn identities() {
        let text = "%a[s, t] = %a[t, t] ==> (%a & %b)[s, t] = (%a & %b)[t, t]";
        assert_eq!(parse_identity(text).unwrap().to_string(), text);
    }
}
