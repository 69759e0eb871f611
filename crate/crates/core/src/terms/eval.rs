//! Evaluation of terms in finite models.

use std::collections::HashMap;

use crate::actions::{CMonoid, CSet};
use crate::algebra::{Ada, BoolAlg, CAlgebra, ElemId};
use crate::bset::{BMonoid, BSet};
use crate::error::{Error, Result};

use super::ast::{ProgTerm, Term, TestTerm};

/// The operations a term may use. Models leave unsupported ones as
/// [`Error::Uninterpreted`].
pub trait Model {
    fn program_names(&self) -> &[String];
    fn test_names(&self) -> &[String];

    fn one(&self) -> Result<ElemId> {
        Err(Error::Uninterpreted("1"))
    }
    fn bot(&self) -> Result<ElemId> {
        Err(Error::Uninterpreted("bot"))
    }
    fn mul(&self, _s: ElemId, _t: ElemId) -> Result<ElemId> {
        Err(Error::Uninterpreted("."))
    }
    fn act(&self, _alpha: ElemId, _s: ElemId, _t: ElemId) -> Result<ElemId> {
        Err(Error::Uninterpreted("[,]"))
    }
    fn comp(&self, _s: ElemId, _alpha: ElemId) -> Result<ElemId> {
        Err(Error::Uninterpreted("@"))
    }
    fn t(&self) -> Result<ElemId>;
    fn f(&self) -> Result<ElemId>;
    fn u(&self) -> Result<ElemId> {
        Err(Error::Uninterpreted("U"))
    }
    fn neg(&self, a: ElemId) -> Result<ElemId>;
    fn and(&self, a: ElemId, b: ElemId) -> Result<ElemId>;
    fn or(&self, a: ElemId, b: ElemId) -> Result<ElemId>;
    fn down(&self, _a: ElemId) -> Result<ElemId> {
        Err(Error::Uninterpreted("!"))
    }
}

macro_rules! calg_ops {
    ($($get:tt)*) => {
        fn t(&self) -> Result<ElemId> {
            Ok(self$($get)*.t())
        }
        fn f(&self) -> Result<ElemId> {
            Ok(self$($get)*.f())
        }
        fn u(&self) -> Result<ElemId> {
            Ok(self$($get)*.u())
        }
        fn neg(&self, a: ElemId) -> Result<ElemId> {
            Ok(self$($get)*.neg(a))
        }
        fn and(&self, a: ElemId, b: ElemId) -> Result<ElemId> {
            Ok(self$($get)*.and(a, b))
        }
        fn or(&self, a: ElemId, b: ElemId) -> Result<ElemId> {
            Ok(self$($get)*.or(a, b))
        }
    };
}

macro_rules! bool_ops {
    ($($get:tt)*) => {
        fn t(&self) -> Result<ElemId> {
            Ok(self$($get)*.t())
        }
        fn f(&self) -> Result<ElemId> {
            Ok(self$($get)*.f())
        }
        fn neg(&self, a: ElemId) -> Result<ElemId> {
            Ok(self$($get)*.neg(a))
        }
        fn and(&self, a: ElemId, b: ElemId) -> Result<ElemId> {
            Ok(self$($get)*.and(a, b))
        }
        fn or(&self, a: ElemId, b: ElemId) -> Result<ElemId> {
            Ok(self$($get)*.or(a, b))
        }
    };
}

impl Model for CAlgebra {
    fn program_names(&self) -> &[String] {
        &[]
    }
    fn test_names(&self) -> &[String] {
        self.names()
    }
    calg_ops!();
}

impl Model for Ada {
    fn program_names(&self) -> &[String] {
        &[]
    }
    fn test_names(&self) -> &[String] {
        self.names()
    }
    calg_ops!(.base());
    fn down(&self, a: ElemId) -> Result<ElemId> {
        Ok(Ada::down(self, a))
    }
}

impl Model for BoolAlg {
    fn program_names(&self) -> &[String] {
        &[]
    }
    fn test_names(&self) -> &[String] {
        self.names()
    }
    bool_ops!();
}

impl Model for CSet {
    fn program_names(&self) -> &[String] {
        self.programs().names()
    }
    fn test_names(&self) -> &[String] {
        self.calg().names()
    }
    fn one(&self) -> Result<ElemId> {
        self.programs().one().ok_or(Error::Uninterpreted("1"))
    }
    fn bot(&self) -> Result<ElemId> {
        Ok(self.programs().bot())
    }
    fn mul(&self, s: ElemId, t: ElemId) -> Result<ElemId> {
        if !self.programs().has_monoid() {
            return Err(Error::Uninterpreted("."));
        }
        Ok(self.programs().mul(s, t))
    }
    fn act(&self, alpha: ElemId, s: ElemId, t: ElemId) -> Result<ElemId> {
        Ok(CSet::act(self, alpha, s, t))
    }
    calg_ops!(.calg());
    fn down(&self, a: ElemId) -> Result<ElemId> {
        Ok(self.tests().require_ada()?.down(a))
    }
}

impl Model for CMonoid {
    fn program_names(&self) -> &[String] {
        self.programs().names()
    }
    fn test_names(&self) -> &[String] {
        self.calg().names()
    }
    fn one(&self) -> Result<ElemId> {
        Ok(CMonoid::one(self))
    }
    fn bot(&self) -> Result<ElemId> {
        Ok(CMonoid::bot(self))
    }
    fn mul(&self, s: ElemId, t: ElemId) -> Result<ElemId> {
        Ok(CMonoid::mul(self, s, t))
    }
    fn act(&self, alpha: ElemId, s: ElemId, t: ElemId) -> Result<ElemId> {
        Ok(CMonoid::act(self, alpha, s, t))
    }
    fn comp(&self, s: ElemId, alpha: ElemId) -> Result<ElemId> {
        Ok(CMonoid::comp(self, s, alpha))
    }
    calg_ops!(.calg());
    fn down(&self, a: ElemId) -> Result<ElemId> {
        Ok(self.ada()?.down(a))
    }
}

impl Model for BSet {
    fn program_names(&self) -> &[String] {
        self.names()
    }
    fn test_names(&self) -> &[String] {
        self.tests().names()
    }
    fn act(&self, alpha: ElemId, s: ElemId, t: ElemId) -> Result<ElemId> {
        Ok(BSet::act(self, alpha, s, t))
    }
    bool_ops!(.tests());
}

impl Model for BMonoid {
    fn program_names(&self) -> &[String] {
        self.bset().names()
    }
    fn test_names(&self) -> &[String] {
        self.tests().names()
    }
    fn one(&self) -> Result<ElemId> {
        Ok(BMonoid::one(self))
    }
    fn mul(&self, s: ElemId, t: ElemId) -> Result<ElemId> {
        Ok(BMonoid::mul(self, s, t))
    }
    fn act(&self, alpha: ElemId, s: ElemId, t: ElemId) -> Result<ElemId> {
        Ok(BMonoid::act(self, alpha, s, t))
    }
    fn comp(&self, s: ElemId, alpha: ElemId) -> Result<ElemId> {
        Ok(BMonoid::comp(self, s, alpha))
    }
    bool_ops!(.tests());
}

/// Values of program and test variables, kept apart since the two sorts
/// have separate namespaces.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Env {
    pub prog: HashMap<String, ElemId>,
    pub test: HashMap<String, ElemId>,
}

impl Env {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_prog(mut self, name: &str, v: ElemId) -> Self {
        self.prog.insert(name.to_string(), v);
        self
    }

    pub fn with_test(mut self, name: &str, v: ElemId) -> Self {
        self.test.insert(name.to_string(), v);
        self
    }
}

pub fn eval_prog(p: &ProgTerm, m: &dyn Model, env: &Env) -> Result<ElemId> {
    match p {
        ProgTerm::Var(v) => env.prog.get(v).copied().ok_or_else(|| Error::Unbound(v.clone())),
        ProgTerm::One => m.one(),
        ProgTerm::Bot => m.bot(),
        ProgTerm::Compose(l, r) => m.mul(eval_prog(l, m, env)?, eval_prog(r, m, env)?),
        ProgTerm::Ite(a, s, t) => m.act(eval_test(a, m, env)?, eval_prog(s, m, env)?, eval_prog(t, m, env)?),
    }
}

pub fn eval_test(t: &TestTerm, m: &dyn Model, env: &Env) -> Result<ElemId> {
    match t {
        TestTerm::Var(v) => env.test.get(v).copied().ok_or_else(|| Error::Unbound(format!("%{v}"))),
        TestTerm::T => m.t(),
        TestTerm::F => m.f(),
        TestTerm::U => m.u(),
        TestTerm::Neg(a) => m.neg(eval_test(a, m, env)?),
        TestTerm::And(a, b) => m.and(eval_test(a, m, env)?, eval_test(b, m, env)?),
        TestTerm::Or(a, b) => m.or(eval_test(a, m, env)?, eval_test(b, m, env)?),
        TestTerm::Down(a) => m.down(eval_test(a, m, env)?),
        TestTerm::Comp(s, a) => m.comp(eval_prog(s, m, env)?, eval_test(a, m, env)?),
    }
}

/// Value of `term` in `m`; program values index the programs, test values the tests.
pub fn eval(term: &Term, m: &dyn Model, env: &Env) -> Result<ElemId> {
    match term {
        Term::Prog(p) => eval_prog(p, m, env),
        Term::Test(t) => eval_test(t, m, env),
    }
}

/// A term with variables replaced by slots and constants looked up once,
/// for tight assignment sweeps.
#[derive(Debug, Clone)]
pub(crate) enum Node {
    Slot(usize),
    Const(ElemId),
    Mul(Box<Node>, Box<Node>),
    Act(Box<Node>, Box<Node>, Box<Node>),
    Comp(Box<Node>, Box<Node>),
    Neg(Box<Node>),
    And(Box<Node>, Box<Node>),
    Or(Box<Node>, Box<Node>),
    Down(Box<Node>),
}

/// Slots are numbered program variables first, then test variables.
pub(crate) fn compile(term: &Term, m: &dyn Model, prog: &[String], test: &[String]) -> Result<Node> {
    match term {
        Term::Prog(p) => compile_prog(p, m, prog, test),
        Term::Test(t) => compile_test(t, m, prog, test),
    }
}

fn slot(list: &[String], name: &str, offset: usize, shown: String) -> Result<Node> {
    list.iter()
        .position(|v| v == name)
        .map(|i| Node::Slot(offset + i))
        .ok_or(Error::Unbound(shown))
}

fn compile_prog(p: &ProgTerm, m: &dyn Model, prog: &[String], test: &[String]) -> Result<Node> {
    let b = |p: &ProgTerm| compile_prog(p, m, prog, test).map(Box::new);
    Ok(match p {
        ProgTerm::Var(v) => slot(prog, v, 0, v.clone())?,
        ProgTerm::One => Node::Const(m.one()?),
        ProgTerm::Bot => Node::Const(m.bot()?),
        ProgTerm::Compose(l, r) => Node::Mul(b(l)?, b(r)?),
        ProgTerm::Ite(a, s, t) => Node::Act(Box::new(compile_test(a, m, prog, test)?), b(s)?, b(t)?),
    })
}

fn compile_test(t: &TestTerm, m: &dyn Model, prog: &[String], test: &[String]) -> Result<Node> {
    let b = |t: &TestTerm| compile_test(t, m, prog, test).map(Box::new);
    Ok(match t {
        TestTerm::Var(v) => slot(test, v, prog.len(), format!("%{v}"))?,
        TestTerm::T => Node::Const(m.t()?),
        TestTerm::F => Node::Const(m.f()?),
        TestTerm::U => Node::Const(m.u()?),
        TestTerm::Neg(a) => Node::Neg(b(a)?),
        TestTerm::And(x, y) => Node::And(b(x)?, b(y)?),
        TestTerm::Or(x, y) => Node::Or(b(x)?, b(y)?),
        TestTerm::Down(a) => Node::Down(b(a)?),
        TestTerm::Comp(s, a) => Node::Comp(Box::new(compile_prog(s, m, prog, test)?), b(a)?),
    })
}

pub(crate) fn run(n: &Node, m: &dyn Model, slots: &[usize]) -> Result<ElemId> {
    Ok(match n {
        Node::Slot(i) => ElemId(slots[*i]),
        Node::Const(c) => *c,
        Node::Mul(l, r) => m.mul(run(l, m, slots)?, run(r, m, slots)?)?,
        Node::Act(a, s, t) => m.act(run(a, m, slots)?, run(s, m, slots)?, run(t, m, slots)?)?,
        Node::Comp(s, a) => m.comp(run(s, m, slots)?, run(a, m, slots)?)?,
        Node::Neg(a) => m.neg(run(a, m, slots)?)?,
        Node::And(a, b) => m.and(run(a, m, slots)?, run(b, m, slots)?)?,
        Node::Or(a, b) => m.or(run(a, m, slots)?, run(b, m, slots)?)?,
        Node::Down(a) => m.down(run(a, m, slots)?)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Limits;
    use crate::functional::functional_c_monoid;
    use crate::terms::parser::parse_any_term;

    #[test]
    fn constants_evaluate_to_the_model_constants() {
        let cm = functional_c_monoid(2, &Limits::default()).unwrap();
        for s in cm.programs().elements() {
            for a in cm.calg().elements() {
                let env = Env::new().with_prog("s", s).with_prog("t", s).with_test("a", a);
                assert_eq!(eval(&parse_any_term("1 @ %a").unwrap(), &cm, &env), Ok(a));
                assert_eq!(eval(&parse_any_term("U[s, t]").unwrap(), &cm, &env), Ok(cm.bot()));
                assert_eq!(eval(&parse_any_term("bot @ %a").unwrap(), &cm, &env), Ok(cm.calg().u()));
            }
        }
    }

    #[test]
    fn unbound_and_uninterpreted() {
        let cm = functional_c_monoid(1, &Limits::default()).unwrap();
        let t = parse_any_term("%a & %b").unwrap();
        let env = Env::new().with_test("a", ElemId(0));
        assert_eq!(eval(&t, &cm, &env), Err(Error::Unbound("%b".into())));
        let ada = crate::algebra::mk_three();
        let t = parse_any_term("s @ %a").unwrap();
        let env = Env::new().with_prog("s", ElemId(0)).with_test("a", ElemId(0));
        assert_eq!(eval(&t, &ada, &env), Err(Error::Uninterpreted("@")));
    }
}
