use std::fmt;

use ite_core::actions::check_em_axioms;
use ite_core::algebra::{check_bool, check_constants, mk_three, power_ada};
use ite_core::bset::check_b_monoid;
use ite_core::congruence::{
    all_congruences, check_collection_props, check_prop_max_theta, check_rho_hom_props, iso_to_three,
    maximal_congruences, quotient_ada,
};
use ite_core::embedding::{build_embedding, check_separation, image_c_monoid, verify_embedding};
use ite_core::functional::{basic_c_monoid, chain_monoid, functional_c_monoid, pointwise_c_monoid};
use ite_core::models::{bundled_b_monoids, bundled_c_monoids};
use ite_core::terms::{
    builtin_corpus, check_identity, check_identity_universal, check_identity_universal_in, parse_identity, Model,
    Semantics,
};
use ite_core::{check_ada, check_c_algebra, check_c_monoid, check_c_set, Ada, AxiomReport, CMonoid, Limits};
use ite_core::{PointedCarrier, TestAlgebra};
use thiserror::Error;

use crate::modelfile::{FileError, ModelFile};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    File { path: String, source: FileError },
    #[error(transparent)]
    Core(#[from] ite_core::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 2 for usage and input errors, 3 for size caps, 1 for models that turn
    /// out inconsistent.
    pub fn exit_code(&self) -> i32 {
        use ite_core::Error as E;
        let core = match self {
            CliError::Core(e) => Some(e),
            CliError::File {
                source: FileError::Model { source, .. },
                ..
            } => Some(source),
            _ => None,
        };
        match core {
            Some(E::SizeCap { .. }) => 3,
            Some(E::ModelInconsistency(_) | E::NotCongruence(_)) => 1,
            _ => 2,
        }
    }
}

/// Lines of output plus the overall verdict; exit status 0 iff `ok`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub lines: Vec<String>,
    pub ok: bool,
}

impl Report {
    pub fn new(echo: impl Into<String>) -> Self {
        Report {
            lines: vec![echo.into()],
            ok: true,
        }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    /// Appends a titled axiom report and folds its verdict in.
    pub fn suite(&mut self, title: &str, r: &AxiomReport) {
        let failed = r.failures().count();
        let status = if failed == 0 { "PASS" } else { "FAIL" };
        self.line(format!("## {title}: {status} ({} laws, {failed} failed)", r.results.len()));
        for l in r.to_string().lines() {
            self.line(format!("  {l}"));
        }
        self.ok &= failed == 0;
    }

    pub fn check(&mut self, label: &str, ok: bool) {
        self.line(format!("{} {label}", if ok { "PASS" } else { "FAIL" }));
        self.ok &= ok;
    }

    pub fn exit_code(&self) -> i32 {
        if self.ok {
            0
        } else {
            1
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            writeln!(f, "{l}")?;
        }
        writeln!(f, "result: {}", if self.ok { "PASS" } else { "FAIL" })
    }
}

fn test_algebra_suite(r: &mut Report, m: &TestAlgebra) {
    match m {
        TestAlgebra::Ada(a) => r.suite("ada", &check_ada(a)),
        TestAlgebra::CAlgebra(c) => {
            let mut rep = check_c_algebra(c);
            rep.extend_prefixed("", check_constants(c));
            r.suite("C-algebra", &rep);
        }
    }
}

pub fn cmd_check(path: &str, model: &ModelFile) -> Report {
    let mut r = Report::new(format!("check {path} [{}]", model.kind()));
    match model {
        ModelFile::Ada(a) => r.suite("ada", &check_ada(a)),
        ModelFile::CAlgebra(c) => test_algebra_suite(&mut r, &TestAlgebra::CAlgebra(c.clone())),
        ModelFile::BoolAlg(q) => r.suite("Boolean algebra", &check_bool(q)),
        ModelFile::CSet(cs) => {
            test_algebra_suite(&mut r, cs.tests());
            if cs.programs().has_monoid() {
                r.suite("monoid", &cs.programs().check_monoid());
            }
            r.suite("C-set", &check_c_set(cs));
        }
        ModelFile::CMonoid(cm) => {
            test_algebra_suite(&mut r, cm.tests());
            r.suite("C-monoid", &check_c_monoid(cm));
        }
        ModelFile::BMonoid(bm) => {
            r.suite("Boolean algebra", &check_bool(bm.tests()));
            r.suite("B-monoid", &check_b_monoid(bm));
        }
    }
    r
}

fn ada_of(model: &ModelFile) -> Result<&Ada, CliError> {
    match model {
        ModelFile::Ada(a) => Ok(a),
        ModelFile::CSet(cs) => Ok(cs.tests().require_ada()?),
        ModelFile::CMonoid(cm) => Ok(cm.ada()?),
        ModelFile::CAlgebra(_) => Err(ite_core::Error::NotAda.into()),
        other => Err(CliError::Usage(format!("congruences need an ada, not a [{}]", other.kind()))),
    }
}

pub fn cmd_congruences(path: &str, model: &ModelFile, maximal: bool, limits: &Limits) -> Result<Report, CliError> {
    let a = ada_of(model)?;
    let flag = if maximal { " --maximal" } else { "" };
    let mut r = Report::new(format!("congruences {path}{flag}"));
    if maximal {
        let max = maximal_congruences(a)?;
        r.line(format!("maximal congruences: {}", max.len()));
        for (i, c) in max.iter().enumerate() {
            let (q, _) = quotient_ada(a, c.partition())?;
            let three = iso_to_three(&q).is_some();
            r.line(format!("theta{i}: {}", c.partition().describe(a.names())));
            r.check(&format!("theta{i}: quotient isomorphic to 3"), three);
        }
    } else {
        let all = all_congruences(a, limits)?;
        r.line(format!("congruences: {}", all.len()));
        for (i, c) in all.iter().enumerate() {
            r.line(format!("c{i}: {}", c.partition().describe(a.names())));
        }
    }
    Ok(r)
}

/// The image model when `--out` is requested.
pub fn cmd_embed(path: &str, cm: &CMonoid, verify: bool) -> Result<(Report, CMonoid), CliError> {
    let mut r = Report::new(format!("embed {path}{}", if verify { " --verify" } else { "" }));
    let mor = build_embedding(cm)?;
    r.line(format!("maximal congruences: {}", mor.thetas));
    r.line(format!("|X| = {}", mor.x_size()));
    r.line(format!("points: {}", mor.point_names(cm.programs()).join(" ")));
    for s in cm.programs().elements() {
        r.line(format!("phi({}) = {}", cm.programs().name(s), mor.phi[s.0]));
    }
    for a in cm.calg().elements() {
        r.line(format!("rho({}) = {}", cm.calg().name(a), mor.rho[a.0]));
    }
    if verify {
        r.suite("embedding", &verify_embedding(cm, &mor));
    }
    Ok((r, image_c_monoid(cm, &mor)?))
}

fn model_of(model: &ModelFile) -> &dyn Model {
    match model {
        ModelFile::Ada(a) => a,
        ModelFile::CAlgebra(c) => c,
        ModelFile::BoolAlg(q) => q,
        ModelFile::CSet(cs) => cs,
        ModelFile::CMonoid(cm) => cm,
        ModelFile::BMonoid(bm) => bm,
    }
}

/// Where `identity` evaluates.
pub enum IdentityTarget<'a> {
    File(&'a str, &'a ModelFile),
    Functional(usize),
    Universal(usize),
}

pub fn cmd_identity(target: IdentityTarget<'_>, text: &str, limits: &Limits) -> Result<Report, CliError> {
    let id = parse_identity(text)?;
    let mut r = Report::new(format!("identity {id}"));
    let outcome = match target {
        IdentityTarget::File(path, m) => {
            r.line(format!("model: {path}"));
            check_identity(model_of(m), path, &id, limits)?
        }
        IdentityTarget::Functional(k) => {
            if k > limits.max_x {
                return Err(x_cap(k, limits));
            }
            let name = format!("functional({k})");
            r.line(format!("model: {name}"));
            check_identity(&functional_c_monoid(k, limits)?, &name, &id, limits)?
        }
        IdentityTarget::Universal(x) => {
            let rep = check_identity_universal(&id, x, limits)?;
            for l in rep.to_string().lines() {
                r.line(l);
            }
            r.ok = !rep.refuted();
            return Ok(r);
        }
    };
    r.line(outcome.to_string());
    r.ok = outcome.holds();
    Ok(r)
}

fn x_cap(x: usize, limits: &Limits) -> CliError {
    ite_core::Error::SizeCap {
        what: "--x".into(),
        size: x as u128,
        cap: limits.max_x as u128,
    }
    .into()
}

/// What `gen` builds.
pub enum GenSpec {
    Power { x: usize },
    Functional { x: usize },
    Basic { elements: Vec<String>, mul: Option<String> },
    Pointwise { elements: Vec<String>, mul: Option<String>, x: usize },
}

fn carrier(elements: &[String], mul: Option<&str>) -> Result<PointedCarrier, CliError> {
    let names: Vec<&str> = elements.iter().map(String::as_str).collect();
    if names.len() < 2 {
        return Err(CliError::Usage("--elements needs the identity first and the zero last".into()));
    }
    let Some(text) = mul else {
        return Ok(chain_monoid(&names)?);
    };
    let rows: Vec<Vec<&str>> = text.split('/').map(|r| r.split_whitespace().collect()).collect();
    let n = names.len();
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(CliError::Usage(format!("--mul needs {n} rows of {n} entries")));
    }
    let pos = |s: &str| names.iter().position(|x| *x == s);
    for w in rows.iter().flatten() {
        if pos(w).is_none() {
            return Err(CliError::Usage(format!("--mul mentions undeclared element `{w}`")));
        }
    }
    Ok(PointedCarrier::monoid(&names, names[0], names[n - 1], |a, b| {
        rows[pos(a).unwrap()][pos(b).unwrap()].to_string()
    })?)
}

pub fn cmd_gen(spec: &GenSpec, limits: &Limits) -> Result<ModelFile, CliError> {
    let check_x = |x: usize| if x > limits.max_x { Err(x_cap(x, limits)) } else { Ok(()) };
    Ok(match spec {
        GenSpec::Power { x } => {
            check_x(*x)?;
            ModelFile::Ada(power_ada(*x, limits)?)
        }
        GenSpec::Functional { x } => {
            check_x(*x)?;
            ModelFile::CMonoid(functional_c_monoid(*x, limits)?)
        }
        GenSpec::Basic { elements, mul } => ModelFile::CMonoid(basic_c_monoid(carrier(elements, mul.as_deref())?)?),
        GenSpec::Pointwise { elements, mul, x } => {
            check_x(*x)?;
            let s = carrier(elements, mul.as_deref())?;
            ModelFile::CMonoid(pointwise_c_monoid(&s, *x, limits)?)
        }
    })
}

/// Every verification the workbench knows how to run on its bundled models.
pub fn cmd_selftest(limits: &Limits) -> Result<Report, CliError> {
    let mut r = Report::new("selftest");
    let models = bundled_c_monoids(limits)?;

    r.line("# test algebras");
    r.suite("3", &check_ada(&mk_three()));
    for k in 1..=3 {
        r.suite(&format!("3^{k}"), &check_ada(&power_ada(k, limits)?));
    }

    r.line("# axiom suites");
    for (name, cm) in &models {
        r.suite(name, &check_c_monoid(cm));
    }
    for (name, bm) in bundled_b_monoids(limits)? {
        r.suite(&name, &check_b_monoid(&bm));
    }

    r.line("# maximal congruences");
    for (k, want) in [(0usize, 1usize), (1, 1), (2, 2), (3, 3)] {
        let a = if k == 0 { mk_three() } else { power_ada(k, limits)? };
        let max = maximal_congruences(&a)?;
        let quotients_are_three = max.iter().all(|c| {
            quotient_ada(&a, c.partition())
                .map(|(q, _)| iso_to_three(&q).is_some())
                .unwrap_or(false)
        });
        let label = if k == 0 { "3".to_string() } else { format!("3^{k}") };
        r.check(&format!("{label}: {} maximal congruences (expected {want})", max.len()), max.len() == want);
        r.check(&format!("{label}: every quotient is isomorphic to 3"), quotients_are_three);
        let mut separated = AxiomReport::new();
        for (i, c) in max.iter().enumerate() {
            separated.extend_prefixed(&format!("theta{i} "), check_prop_max_theta(&a, c.partition()));
        }
        r.suite(&format!("{label}: constants pairwise unrelated"), &separated);
    }

    r.line("# maximal-congruence properties");
    for (name, cm) in &models {
        r.suite(&format!("{name} collection"), &check_collection_props(cm.cset())?);
        r.suite(&format!("{name} rho"), &check_rho_hom_props(cm)?);
        r.suite(&format!("{name} separation"), &check_separation(cm)?);
    }

    r.line("# embedding");
    for (name, cm) in &models {
        let mor = build_embedding(cm)?;
        r.line(format!("{name}: |X| = {} over {} maximal congruences", mor.x_size(), mor.thetas));
        r.suite(name, &verify_embedding(cm, &mor));
    }

    r.line("# identities");
    for e in builtin_corpus() {
        let rep = check_identity_universal_in(&e.identity, 2, e.family.semantics(), limits)?;
        r.check(&format!("{} {}: {}", e.label, e.text, rep.verdict()), !rep.refuted());
    }
    let guard = parse_identity("(f @ T)[f, f] = f")?;
    let rep = check_identity_universal(&guard, 2, limits)?;
    r.check(&format!("{guard}: {}", rep.verdict()), !rep.refuted());
    let swap = parse_identity("%a[s, t] = %a[t, s]")?;
    let rep = check_identity_universal(&swap, 2, limits)?;
    match rep.counterexample() {
        Some(c) => r.check(&format!("{swap}: REFUTED {c}"), true),
        None => r.check(&format!("{swap}: expected a counterexample"), false),
    }

    r.line("# identities agree with the axiom checkers");
    let corpus = builtin_corpus();
    let mut disagreements = 0;
    for (name, cm) in &models {
        let reports = [
            check_c_algebra(cm.calg()),
            check_ada(cm.ada()?),
            check_c_set(cm.cset()),
            check_em_axioms(cm),
        ];
        for e in corpus.iter().filter(|e| e.family.semantics() == Semantics::CMonoid) {
            let direct = reports.iter().find_map(|rep| rep.get(e.label)).map(|x| x.passed());
            let via_terms = check_identity(cm, name, &e.identity, limits)?.holds();
            if direct != Some(via_terms) {
                disagreements += 1;
                r.line(format!("  disagreement: {name} {}", e.label));
            }
        }
    }
    for (name, bm) in bundled_b_monoids(limits)? {
        let rep = check_b_monoid(&bm);
        for e in corpus.iter().filter(|e| e.family.semantics() == Semantics::BMonoid) {
            let direct = rep.get(e.label).map(|x| x.passed());
            if direct != Some(check_identity(&bm, &name, &e.identity, limits)?.holds()) {
                disagreements += 1;
                r.line(format!("  disagreement: {name} {}", e.label));
            }
        }
    }
    r.check(&format!("{disagreements} disagreements"), disagreements == 0);
    Ok(r)
}
