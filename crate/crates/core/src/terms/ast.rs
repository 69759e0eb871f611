use std::collections::BTreeSet;
use std::fmt;

/// A program-sorted term.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ProgTerm {
    Var(String),
    One,
    Bot,
    Compose(Box<ProgTerm>, Box<ProgTerm>),
    Ite(Box<TestTerm>, Box<ProgTerm>, Box<ProgTerm>),
}

/// A test-sorted term.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TestTerm {
    Var(String),
    T,
    F,
    U,
    Neg(Box<TestTerm>),
    And(Box<TestTerm>, Box<TestTerm>),
    Or(Box<TestTerm>, Box<TestTerm>),
    Down(Box<TestTerm>),
    Comp(Box<ProgTerm>, Box<TestTerm>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sort {
    Prog,
    Test,
}

impl Sort {
    pub fn name(self) -> &'static str {
        match self {
            Sort::Prog => "program",
            Sort::Test => "test",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Prog(ProgTerm),
    Test(TestTerm),
}

impl Term {
    pub fn sort(&self) -> Sort {
        match self {
            Term::Prog(_) => Sort::Prog,
            Term::Test(_) => Sort::Test,
        }
    }

    /// Variables in order of first appearance, programs and tests separately.
    pub fn collect_vars(&self, vars: &mut Vars) {
        match self {
            Term::Prog(p) => p.collect_vars(vars),
            Term::Test(t) => t.collect_vars(vars),
        }
    }

    /// Nesting depth; variables and constants have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Term::Prog(p) => p.depth(),
            Term::Test(t) => t.depth(),
        }
    }
}

impl From<ProgTerm> for Term {
    fn from(p: ProgTerm) -> Self {
        Term::Prog(p)
    }
}

impl From<TestTerm> for Term {
    fn from(t: TestTerm) -> Self {
        Term::Test(t)
    }
}

/// Variable names by sort, each list in order of first appearance.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Vars {
    pub prog: Vec<String>,
    pub test: Vec<String>,
}

impl Vars {
    fn add(list: &mut Vec<String>, name: &str) {
        if !list.iter().any(|v| v == name) {
            list.push(name.to_string());
        }
    }

    pub fn all(&self) -> BTreeSet<&str> {
        self.prog.iter().chain(&self.test).map(String::as_str).collect()
    }
}

impl ProgTerm {
    pub fn var(name: &str) -> ProgTerm {
        ProgTerm::Var(name.to_string())
    }

    pub fn compose(l: ProgTerm, r: ProgTerm) -> ProgTerm {
        ProgTerm::Compose(Box::new(l), Box::new(r))
    }

    pub fn ite(a: TestTerm, s: ProgTerm, t: ProgTerm) -> ProgTerm {
        ProgTerm::Ite(Box::new(a), Box::new(s), Box::new(t))
    }

    pub fn collect_vars(&self, vars: &mut Vars) {
        match self {
            ProgTerm::Var(v) => Vars::add(&mut vars.prog, v),
            ProgTerm::One | ProgTerm::Bot => {}
            ProgTerm::Compose(l, r) => {
                l.collect_vars(vars);
                r.collect_vars(vars);
            }
            ProgTerm::Ite(a, s, t) => {
                a.collect_vars(vars);
                s.collect_vars(vars);
                t.collect_vars(vars);
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            ProgTerm::Var(_) | ProgTerm::One | ProgTerm::Bot => 0,
            ProgTerm::Compose(l, r) => 1 + l.depth().max(r.depth()),
            ProgTerm::Ite(a, s, t) => 1 + a.depth().max(s.depth()).max(t.depth()),
        }
    }
}

impl TestTerm {
    pub fn var(name: &str) -> TestTerm {
        TestTerm::Var(name.to_string())
    }

    pub fn negate(a: TestTerm) -> TestTerm {
        TestTerm::Neg(Box::new(a))
    }

    pub fn and(a: TestTerm, b: TestTerm) -> TestTerm {
        TestTerm::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: TestTerm, b: TestTerm) -> TestTerm {
        TestTerm::Or(Box::new(a), Box::new(b))
    }

    pub fn down(a: TestTerm) -> TestTerm {
        TestTerm::Down(Box::new(a))
    }

    pub fn comp(s: ProgTerm, a: TestTerm) -> TestTerm {
        TestTerm::Comp(Box::new(s), Box::new(a))
    }

    pub fn collect_vars(&self, vars: &mut Vars) {
        match self {
            TestTerm::Var(v) => Vars::add(&mut vars.test, v),
            TestTerm::T | TestTerm::F | TestTerm::U => {}
            TestTerm::Neg(a) | TestTerm::Down(a) => a.collect_vars(vars),
            TestTerm::And(a, b) | TestTerm::Or(a, b) => {
                a.collect_vars(vars);
                b.collect_vars(vars);
            }
            TestTerm::Comp(s, a) => {
                s.collect_vars(vars);
                a.collect_vars(vars);
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            TestTerm::Var(_) | TestTerm::T | TestTerm::F | TestTerm::U => 0,
            TestTerm::Neg(a) | TestTerm::Down(a) => 1 + a.depth(),
            TestTerm::And(a, b) | TestTerm::Or(a, b) => 1 + a.depth().max(b.depth()),
            TestTerm::Comp(s, a) => 1 + s.depth().max(a.depth()),
        }
    }
}

/// `lhs = rhs` with both sides of one sort.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Equation {
    pub lhs: Term,
    pub rhs: Term,
}

impl Equation {
    pub fn sort(&self) -> Sort {
        self.lhs.sort()
    }
}

/// An identity, or a quasi-identity when `hypothesis` is present.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Identity {
    pub hypothesis: Option<Equation>,
    pub conclusion: Equation,
}

impl Identity {
    pub fn is_quasi(&self) -> bool {
        self.hypothesis.is_some()
    }

    /// Variables of hypothesis then conclusion, by first appearance.
    pub fn vars(&self) -> Vars {
        let mut v = Vars::default();
        if let Some(h) = &self.hypothesis {
            h.lhs.collect_vars(&mut v);
            h.rhs.collect_vars(&mut v);
        }
        self.conclusion.lhs.collect_vars(&mut v);
        self.conclusion.rhs.collect_vars(&mut v);
        v
    }
}

impl fmt::Display for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
