//! Identity checking by exhaustive assignment search.

use std::fmt;

use crate::algebra::{ElemId, Limits};
use crate::bset::functional_b_monoid;
use crate::error::{Error, Result};
use crate::functional::functional_c_monoid;
use crate::models::non_functional_c_monoids;
use crate::report::Witness;

use super::ast::{Identity, Sort};
use super::eval::{compile, eval, run, Env, Model};

/// An assignment under which an identity fails, with both sides' values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub model: String,
    /// Program variables first, then test variables (written `%a`).
    pub witness: Witness,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "in {}: {} gives lhs = {}, rhs = {}", self.model, self.witness, self.lhs, self.rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdentityOutcome {
    /// Every assignment satisfies the identity; `vacuous` counts those where
    /// the hypothesis failed.
    Holds { assignments: u64, vacuous: u64 },
    Refuted(Counterexample),
}

impl IdentityOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, IdentityOutcome::Holds { .. })
    }

    pub fn counterexample(&self) -> Option<&Counterexample> {
        match self {
            IdentityOutcome::Holds { .. } => None,
            IdentityOutcome::Refuted(c) => Some(c),
        }
    }
}

impl fmt::Display for IdentityOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdentityOutcome::Holds { assignments, vacuous } => {
                write!(f, "holds ({assignments} assignments")?;
                if *vacuous > 0 {
                    write!(f, ", {vacuous} vacuous")?;
                }
                write!(f, ")")
            }
            IdentityOutcome::Refuted(c) => write!(f, "counterexample {c}"),
        }
    }
}

fn value_name(m: &dyn Model, sort: Sort, v: ElemId) -> String {
    let names = match sort {
        Sort::Prog => m.program_names(),
        Sort::Test => m.test_names(),
    };
    names[v.0].clone()
}

/// Searches every assignment in order (program variables, then test
/// variables, each by first appearance; last variable fastest) and returns the
/// first counterexample. A counterexample is re-evaluated with the plain tree
/// evaluator before it is returned.
pub fn check_identity(model: &dyn Model, model_name: &str, id: &Identity, limits: &Limits) -> Result<IdentityOutcome> {
    let vars = id.vars();
    let (pn, tn) = (model.program_names(), model.test_names());
    if !vars.prog.is_empty() && pn.is_empty() {
        return Err(Error::Uninterpreted("program variables"));
    }
    let sizes: Vec<usize> = vars
        .prog
        .iter()
        .map(|_| pn.len())
        .chain(vars.test.iter().map(|_| tn.len()))
        .collect();
    let total = sizes
        .iter()
        .try_fold(1u128, |acc, &n| acc.checked_mul(n as u128))
        .unwrap_or(u128::MAX);
    if total > limits.max_assignments {
        return Err(Error::SizeCap {
            what: "identity assignments".into(),
            size: total,
            cap: limits.max_assignments,
        });
    }
    let compiled = |t| compile(t, model, &vars.prog, &vars.test);
    let hyp = match &id.hypothesis {
        Some(h) => Some((compiled(&h.lhs)?, compiled(&h.rhs)?)),
        None => None,
    };
    let (lhs, rhs) = (compiled(&id.conclusion.lhs)?, compiled(&id.conclusion.rhs)?);

    let mut slots = vec![0usize; sizes.len()];
    let (mut assignments, mut vacuous) = (0u64, 0u64);
    if total == 0 {
        return Ok(IdentityOutcome::Holds { assignments, vacuous });
    }
    loop {
        assignments += 1;
        let applies = match &hyp {
            Some((l, r)) => run(l, model, &slots)? == run(r, model, &slots)?,
            None => true,
        };
        if !applies {
            vacuous += 1;
        } else if run(&lhs, model, &slots)? != run(&rhs, model, &slots)? {
            return certify(model, model_name, id, &vars.prog, &vars.test, &slots).map(IdentityOutcome::Refuted);
        }
        let mut pos = slots.len();
        loop {
            if pos == 0 {
                return Ok(IdentityOutcome::Holds { assignments, vacuous });
            }
            pos -= 1;
            slots[pos] += 1;
            if slots[pos] < sizes[pos] {
                break;
            }
            slots[pos] = 0;
        }
    }
}

fn certify(
    model: &dyn Model,
    model_name: &str,
    id: &Identity,
    prog: &[String],
    test: &[String],
    slots: &[usize],
) -> Result<Counterexample> {
    let mut env = Env::new();
    let mut bindings = Vec::new();
    for (v, &i) in prog.iter().zip(slots) {
        env = env.with_prog(v, ElemId(i));
        bindings.push((v.clone(), model.program_names()[i].clone()));
    }
    for (v, &i) in test.iter().zip(&slots[prog.len()..]) {
        env = env.with_test(v, ElemId(i));
        bindings.push((format!("%{v}"), model.test_names()[i].clone()));
    }
    if let Some(h) = &id.hypothesis {
        if eval(&h.lhs, model, &env)? != eval(&h.rhs, model, &env)? {
            return Err(Error::ModelInconsistency("counterexample does not satisfy the hypothesis".into()));
        }
    }
    let l = eval(&id.conclusion.lhs, model, &env)?;
    let r = eval(&id.conclusion.rhs, model, &env)?;
    if l == r {
        return Err(Error::ModelInconsistency("counterexample does not reproduce".into()));
    }
    let sort = id.conclusion.sort();
    Ok(Counterexample {
        model: model_name.to_string(),
        witness: Witness::new(bindings),
        lhs: value_name(model, sort, l),
        rhs: value_name(model, sort, r),
    })
}

/// Which class of models an identity is read in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Semantics {
    /// C-monoids: functional ones up to the bound plus the bundled examples.
    CMonoid,
    /// B-monoids: functional ones up to the bound.
    BMonoid,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelRun {
    pub model: String,
    pub outcome: IdentityOutcome,
}

/// Outcome of a bounded search over a family of models. A clean sweep is not
/// a proof of validity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniversalReport {
    pub x_max: usize,
    pub runs: Vec<ModelRun>,
}

impl UniversalReport {
    pub fn refuted(&self) -> bool {
        self.counterexample().is_some()
    }

    /// The first counterexample in model order.
    pub fn counterexample(&self) -> Option<&Counterexample> {
        self.runs.iter().find_map(|r| r.outcome.counterexample())
    }

    pub fn verdict(&self) -> &'static str {
        if self.refuted() {
            "REFUTED"
        } else {
            "NO-COUNTEREXAMPLE-UP-TO-BOUND"
        }
    }
}

impl fmt::Display for UniversalReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.runs {
            writeln!(f, "{}: {}", r.model, r.outcome)?;
        }
        match self.counterexample() {
            Some(c) => writeln!(f, "verdict: REFUTED {c}"),
            None => writeln!(f, "verdict: NO-COUNTEREXAMPLE-UP-TO-BOUND (x_max = {})", self.x_max),
        }
    }
}

/// Runs [`check_identity`] over the functional C-monoids on 1..=x_max points
/// and the bundled non-functional C-monoids.
pub fn check_identity_universal(id: &Identity, x_max: usize, limits: &Limits) -> Result<UniversalReport> {
    check_identity_universal_in(id, x_max, Semantics::CMonoid, limits)
}

pub fn check_identity_universal_in(
    id: &Identity,
    x_max: usize,
    semantics: Semantics,
    limits: &Limits,
) -> Result<UniversalReport> {
    if x_max == 0 {
        return Err(Error::Argument("x_max must be at least 1".into()));
    }
    if x_max > limits.max_x {
        return Err(Error::SizeCap {
            what: "x_max".into(),
            size: x_max as u128,
            cap: limits.max_x as u128,
        });
    }
    let mut runs = Vec::new();
    for k in 1..=x_max {
        let (name, outcome) = match semantics {
            Semantics::CMonoid => {
                let name = format!("functional({k})");
                let cm = functional_c_monoid(k, limits)?;
                let o = check_identity(&cm, &name, id, limits)?;
                (name, o)
            }
            Semantics::BMonoid => {
                let name = format!("functional-b({k})");
                let bm = functional_b_monoid(k, limits)?;
                let o = check_identity(&bm, &name, id, limits)?;
                (name, o)
            }
        };
        runs.push(ModelRun { model: name, outcome });
    }
    if semantics == Semantics::CMonoid {
        for (name, cm) in non_functional_c_monoids(limits)? {
            let outcome = check_identity(&cm, &name, id, limits)?;
            runs.push(ModelRun { model: name, outcome });
        }
    }
    Ok(UniversalReport { x_max, runs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::terms::parser::parse_identity;

    #[test]
    fn swapping_branches_is_refuted_in_functional_one() {
        let limits = Limits::default();
        let cm = functional_c_monoid(1, &limits).unwrap();
        let id = parse_identity("%a[s,t] = %a[t,s]").unwrap();
        let out = check_identity(&cm, "functional(1)", &id, &limits).unwrap();
        let c = out.counterexample().expect("refuted");
        assert_ne!(c.witness.get("s"), c.witness.get("t"));
        // the first refuting test in order is the all-true pair
        assert_eq!(c.witness.get("%a"), Some(cm.calg().name(cm.calg().t())));
    }

    #[test]
    fn or_is_not_commutative() {
        let limits = Limits::default();
        let id = parse_identity("%a | %b = %b | %a").unwrap();
        let rep = check_identity_universal(&id, 1, &limits).unwrap();
        assert_eq!(rep.verdict(), "REFUTED");
        let c = rep.counterexample().unwrap();
        // T | U = T but U | T = U; the pair (U, F) agrees on both sides
        let m = functional_c_monoid(1, &limits).unwrap();
        let alg = m.calg();
        assert_eq!(c.witness.get("%a"), Some(alg.name(alg.t())));
        assert_eq!(c.witness.get("%b"), Some(alg.name(alg.u())));
        assert_eq!(alg.or(alg.u(), alg.f()), alg.or(alg.f(), alg.u()));
    }

    #[test]
    fn quasi_identity_counts_vacuous_assignments() {
        let limits = Limits::default();
        let cm = functional_c_monoid(1, &limits).unwrap();
        let id = parse_identity("%a[s,t] = %a[t,t] ==> (%a & %b)[s,t] = (%a & %b)[t,t]").unwrap();
        match check_identity(&cm, "functional(1)", &id, &limits).unwrap() {
            IdentityOutcome::Holds { assignments, vacuous } => {
                assert_eq!(assignments, 2 * 2 * 3 * 3);
                assert!(vacuous > 0);
            }
            other => panic!("{other}"),
        }
    }

    #[test]
    fn assignment_cap() {
        let limits = Limits {
            max_assignments: 10,
            ..Limits::default()
        };
        let cm = functional_c_monoid(1, &limits).unwrap();
        let id = parse_identity("%a[%b[s, t], %b[u, v]] = %b[%a[s, u], %a[t, v]]").unwrap();
        assert!(matches!(check_identity(&cm, "m", &id, &limits), Err(Error::SizeCap { .. })));
    }
}
