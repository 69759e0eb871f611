//! Recursive-descent parser. Text is first parsed into an untyped tree with
//! source positions, then sort-checked into [`ProgTerm`] / [`TestTerm`].
//!
//! Binding strength, loosest first: `|`, `&`, `@` (right associative), `.`,
//! the action brackets `t[p, q]`, prefix `~`, postfix `!`.

use crate::error::{Error, Result};

use super::ast::{Equation, Identity, ProgTerm, Sort, Term, TestTerm};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    TestVar(String),
    One,
    Dot,
    At,
    Amp,
    Bar,
    Tilde,
    Bang,
    LBrack,
    RBrack,
    Comma,
    LParen,
    RParen,
    Eq,
    Implies,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("`{s}`"),
        Tok::TestVar(s) => format!("`%{s}`"),
        Tok::One => "`1`".into(),
        Tok::Dot => "`.`".into(),
        Tok::At => "`@`".into(),
        Tok::Amp => "`&`".into(),
        Tok::Bar => "`|`".into(),
        Tok::Tilde => "`~`".into(),
        Tok::Bang => "`!`".into(),
        Tok::LBrack => "`[`".into(),
        Tok::RBrack => "`]`".into(),
        Tok::Comma => "`,`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::Eq => "`=`".into(),
        Tok::Implies => "`==>`".into(),
        Tok::End => "end of input".into(),
    }
}

fn syntax(pos: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { pos, msg: msg.into() }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

/// Tokens paired with their character offsets.
fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '.' => Some(Tok::Dot),
            '@' => Some(Tok::At),
            '&' => Some(Tok::Amp),
            '|' => Some(Tok::Bar),
            '~' => Some(Tok::Tilde),
            '!' => Some(Tok::Bang),
            '[' => Some(Tok::LBrack),
            ']' => Some(Tok::RBrack),
            ',' => Some(Tok::Comma),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = single {
            out.push((t, start));
            i += 1;
            continue;
        }
        if c == '=' {
            if chars[i..].starts_with(&['=', '=', '>']) {
                out.push((Tok::Implies, start));
                i += 3;
            } else {
                out.push((Tok::Eq, start));
                i += 1;
            }
            continue;
        }
        if c == '1' && !chars.get(i + 1).is_some_and(|&d| is_ident_char(d)) {
            out.push((Tok::One, start));
            i += 1;
            continue;
        }
        if c == '%' {
            i += 1;
            if !chars.get(i).is_some_and(|&d| is_ident_start(d)) {
                return Err(syntax(start, "expected a test variable name after `%`"));
            }
            let s = i;
            while i < chars.len() && is_ident_char(chars[i]) {
                i += 1;
            }
            out.push((Tok::TestVar(chars[s..i].iter().collect()), start));
            continue;
        }
        if is_ident_start(c) {
            while i < chars.len() && is_ident_char(chars[i]) {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), start));
            continue;
        }
        return Err(syntax(start, format!("unexpected character `{c}`")));
    }
    out.push((Tok::End, chars.len()));
    Ok(out)
}

#[derive(Debug, Clone)]
enum Kind {
    PVar(String),
    TVar(String),
    One,
    Bot,
    T,
    F,
    U,
    Neg(Box<Expr>),
    Down(Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
    Dot(Box<Expr>, Box<Expr>),
    At(Box<Expr>, Box<Expr>),
    Ite(Box<Expr>, Box<Expr>, Box<Expr>),
}

#[derive(Debug, Clone)]
struct Expr {
    kind: Kind,
    pos: usize,
}

fn node(kind: Kind, pos: usize) -> Expr {
    Expr { kind, pos }
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    i: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.i].0
    }

    fn pos(&self) -> usize {
        self.toks[self.i].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.i].clone();
        if self.i + 1 < self.toks.len() {
            self.i += 1;
        }
        t
    }

    fn expect(&mut self, t: Tok) -> Result<usize> {
        if *self.peek() == t {
            Ok(self.bump().1)
        } else {
            Err(syntax(
                self.pos(),
                format!("expected {}, found {}", describe(&t), describe(self.peek())),
            ))
        }
    }

    fn or(&mut self) -> Result<Expr> {
        let mut l = self.and()?;
        while *self.peek() == Tok::Bar {
            let p = self.bump().1;
            let r = self.and()?;
            l = node(Kind::Or(Box::new(l), Box::new(r)), p);
        }
        Ok(l)
    }

    fn and(&mut self) -> Result<Expr> {
        let mut l = self.at()?;
        while *self.peek() == Tok::Amp {
            let p = self.bump().1;
            let r = self.at()?;
            l = node(Kind::And(Box::new(l), Box::new(r)), p);
        }
        Ok(l)
    }

    fn at(&mut self) -> Result<Expr> {
        let l = self.dot()?;
        if *self.peek() == Tok::At {
            let p = self.bump().1;
            let r = self.at()?;
            return Ok(node(Kind::At(Box::new(l), Box::new(r)), p));
        }
        Ok(l)
    }

    fn dot(&mut self) -> Result<Expr> {
        let mut l = self.bracket()?;
        while *self.peek() == Tok::Dot {
            let p = self.bump().1;
            let r = self.bracket()?;
            l = node(Kind::Dot(Box::new(l), Box::new(r)), p);
        }
        Ok(l)
    }

    fn bracket(&mut self) -> Result<Expr> {
        let mut head = self.unary()?;
        while *self.peek() == Tok::LBrack {
            self.bump();
            let s = self.or()?;
            self.expect(Tok::Comma)?;
            let t = self.or()?;
            self.expect(Tok::RBrack)?;
            let p = head.pos;
            head = node(Kind::Ite(Box::new(head), Box::new(s), Box::new(t)), p);
        }
        Ok(head)
    }

    fn unary(&mut self) -> Result<Expr> {
        if *self.peek() == Tok::Tilde {
            let p = self.bump().1;
            let a = self.unary()?;
            return Ok(node(Kind::Neg(Box::new(a)), p));
        }
        self.postfix()
    }

    fn postfix(&mut self) -> Result<Expr> {
        let mut e = self.primary()?;
        while *self.peek() == Tok::Bang {
            let p = self.bump().1;
            e = node(Kind::Down(Box::new(e)), p);
        }
        Ok(e)
    }

    fn primary(&mut self) -> Result<Expr> {
        let (t, p) = self.bump();
        let kind = match t {
            Tok::Ident(name) => match name.as_str() {
                "T" => Kind::T,
                "F" => Kind::F,
                "U" => Kind::U,
                "bot" => Kind::Bot,
                _ => Kind::PVar(name),
            },
            Tok::TestVar(name) => Kind::TVar(name),
            Tok::One => Kind::One,
            Tok::LParen => {
                let e = self.or()?;
                self.expect(Tok::RParen)?;
                return Ok(e);
            }
            other => return Err(syntax(p, format!("expected a term, found {}", describe(&other)))),
        };
        Ok(node(kind, p))
    }
}

fn sort_of(e: &Expr) -> Sort {
    match e.kind {
        Kind::PVar(_) | Kind::One | Kind::Bot | Kind::Dot(..) | Kind::Ite(..) => Sort::Prog,
        _ => Sort::Test,
    }
}

fn want(e: &Expr, s: Sort) -> Result<()> {
    let found = sort_of(e);
    if found != s {
        return Err(Error::Sort {
            pos: e.pos,
            expected: s.name(),
            found: found.name(),
        });
    }
    Ok(())
}

fn to_prog(e: &Expr) -> Result<ProgTerm> {
    want(e, Sort::Prog)?;
    Ok(match &e.kind {
        Kind::PVar(v) => ProgTerm::Var(v.clone()),
        Kind::One => ProgTerm::One,
        Kind::Bot => ProgTerm::Bot,
        Kind::Dot(l, r) => ProgTerm::compose(to_prog(l)?, to_prog(r)?),
        Kind::Ite(a, s, t) => ProgTerm::ite(to_test(a)?, to_prog(s)?, to_prog(t)?),
        _ => unreachable!("sort checked"),
    })
}

fn to_test(e: &Expr) -> Result<TestTerm> {
    want(e, Sort::Test)?;
    Ok(match &e.kind {
        Kind::TVar(v) => TestTerm::Var(v.clone()),
        Kind::T => TestTerm::T,
        Kind::F => TestTerm::F,
        Kind::U => TestTerm::U,
        Kind::Neg(a) => TestTerm::negate(to_test(a)?),
        Kind::Down(a) => TestTerm::down(to_test(a)?),
        Kind::And(a, b) => TestTerm::and(to_test(a)?, to_test(b)?),
        Kind::Or(a, b) => TestTerm::or(to_test(a)?, to_test(b)?),
        Kind::At(s, a) => TestTerm::comp(to_prog(s)?, to_test(a)?),
        _ => unreachable!("sort checked"),
    })
}

fn to_term(e: &Expr) -> Result<Term> {
    match sort_of(e) {
        Sort::Prog => Ok(Term::Prog(to_prog(e)?)),
        Sort::Test => Ok(Term::Test(to_test(e)?)),
    }
}

fn start(text: &str) -> Result<Parser> {
    Ok(Parser { toks: lex(text)?, i: 0 })
}

fn finish(p: &mut Parser) -> Result<()> {
    if *p.peek() != Tok::End {
        return Err(syntax(p.pos(), format!("unexpected {}", describe(p.peek()))));
    }
    Ok(())
}

/// Parses a term of either sort.
pub fn parse_any_term(text: &str) -> Result<Term> {
    let mut p = start(text)?;
    let e = p.or()?;
    finish(&mut p)?;
    to_term(&e)
}

/// Parses a term that must have sort `sort`.
pub fn parse_term(text: &str, sort: Sort) -> Result<Term> {
    let mut p = start(text)?;
    let e = p.or()?;
    finish(&mut p)?;
    want(&e, sort)?;
    to_term(&e)
}

fn equation(p: &mut Parser) -> Result<Equation> {
    let l = p.or()?;
    p.expect(Tok::Eq)?;
    let r = p.or()?;
    let lhs = to_term(&l)?;
    want(&r, lhs.sort())?;
    let rhs = to_term(&r)?;
    Ok(Equation { lhs, rhs })
}

/// Parses `lhs = rhs` or `h1 = h2 ==> lhs = rhs`.
pub fn parse_identity(text: &str) -> Result<Identity> {
    let mut p = start(text)?;
    let first = equation(&mut p)?;
    let id = if *p.peek() == Tok::Implies {
        p.bump();
        let conclusion = equation(&mut p)?;
        Identity {
            hypothesis: Some(first),
            conclusion,
        }
    } else {
        Identity {
            hypothesis: None,
            conclusion: first,
        }
    };
    finish(&mut p)?;
    Ok(id)
}
