//! One line per acceptance criterion; every criterion must pass.

use std::process::Command;
use std::time::{Duration, Instant};

use ite_core::actions::check_em_axioms;
use ite_core::algebra::{mk_three, power_ada};
use ite_core::bset::check_b_monoid;
use ite_core::congruence::{check_collection_props, check_rho_hom_props, iso_to_three, maximal_congruences, quotient_ada};
use ite_core::embedding::{build_embedding, verify_embedding};
use ite_core::functional::{basic_c_monoid, functional_c_monoid, pointwise_c_monoid, three_element_monoid, two_element_monoid};
use ite_core::models::{bundled_b_monoids, bundled_c_monoids};
use ite_core::pairs::{pair_and, pair_down, pair_from_function, pair_neg, pair_or, pair_to_function};
use ite_core::terms::{
    builtin_corpus, check_identity, check_identity_universal, check_identity_universal_in, eval, parse_identity, Env,
    Family, IdentityOutcome,
};
use ite_core::{check_ada, check_c_algebra, check_c_monoid, check_c_set, AxiomReport, Limits, Three};

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn lim() -> Limits {
    Limits::default()
}

fn require(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn failures(r: &AxiomReport) -> usize {
    r.failures().count()
}

fn criterion_1() -> Verdict {
    let start = Instant::now();
    let models = [
        ("functional(1)", functional_c_monoid(1, &lim()).map_err(|e| e.to_string())?),
        ("functional(2)", functional_c_monoid(2, &lim()).map_err(|e| e.to_string())?),
        ("pointwise({1,a,bot},1)", pointwise_c_monoid(&three_element_monoid(), 1, &lim()).map_err(|e| e.to_string())?),
        ("basic({1,a,bot})", basic_c_monoid(three_element_monoid()).map_err(|e| e.to_string())?),
    ];
    let mut assignments = 0;
    for (name, cm) in &models {
        let r = check_c_monoid(cm);
        require(failures(&r) == 0, format!("{name}:\n{r}"))?;
        assignments += r.results.iter().map(|x| x.checked).sum::<u64>();
    }
    let took = start.elapsed();
    require(took < Duration::from_secs(60), format!("took {took:?}"))?;
    Ok(format!("4 models, {assignments} assignments, 0 violations"))
}

fn criterion_2() -> Verdict {
    require(failures(&check_ada(&mk_three())) == 0, "3")?;
    for k in 0..=3 {
        let a = power_ada(k, &lim()).map_err(|e| e.to_string())?;
        require(failures(&check_ada(&a)) == 0, format!("3^{k}"))?;
    }
    let t3 = |i: usize| Three::from_index(i);
    let and3 = |a: Three, b: Three| match a {
        Three::T => b,
        other => other,
    };
    let or3 = |a: Three, b: Three| match a {
        Three::F => b,
        other => other,
    };
    let neg3 = |a: Three| match a {
        Three::T => Three::F,
        Three::F => Three::T,
        Three::U => Three::U,
    };
    let down3 = |a: Three| if a == Three::T { Three::T } else { Three::F };
    let mut mismatches = 0usize;
    let mut compared = 0usize;
    for n in 0..=4u32 {
        let count = 3usize.pow(n);
        let func = |mut i: usize| {
            let mut v = vec![Three::T; n as usize];
            for slot in v.iter_mut().rev() {
                *slot = t3(i % 3);
                i /= 3;
            }
            v
        };
        let all: Vec<Vec<Three>> = (0..count).map(func).collect();
        for f in &all {
            let p = pair_from_function(f);
            let neg: Vec<_> = f.iter().map(|&a| neg3(a)).collect();
            let down: Vec<_> = f.iter().map(|&a| down3(a)).collect();
            mismatches += usize::from(pair_to_function(&pair_neg(&p)) != neg);
            mismatches += usize::from(pair_to_function(&pair_down(&p)) != down);
            for g in &all {
                let q = pair_from_function(g);
                let and: Vec<_> = f.iter().zip(g).map(|(&a, &b)| and3(a, b)).collect();
                let or: Vec<_> = f.iter().zip(g).map(|(&a, &b)| or3(a, b)).collect();
                mismatches += usize::from(pair_to_function(&pair_and(&p, &q).unwrap()) != and);
                mismatches += usize::from(pair_to_function(&pair_or(&p, &q).unwrap()) != or);
                compared += 2;
            }
            compared += 2;
        }
    }
    require(mismatches == 0, format!("{mismatches} mismatches"))?;
    Ok(format!("ada laws on 3, 3^0..3^3; {compared} pair operations, 0 mismatches"))
}

fn criterion_3() -> Verdict {
    let mut counts = Vec::new();
    for (k, want) in [(0usize, 1usize), (2, 2), (3, 3)] {
        let a = if k == 0 { mk_three() } else { power_ada(k, &lim()).map_err(|e| e.to_string())? };
        let max = maximal_congruences(&a).map_err(|e| e.to_string())?;
        require(max.len() == want, format!("3^{k}: {} maximal congruences", max.len()))?;
        if k == 0 {
            require(max[0].partition().is_discrete(), "3: the maximal congruence is not the identity")?;
        }
        if k == 2 {
            for c in &max {
                let (q, _) = quotient_ada(&a, c.partition()).map_err(|e| e.to_string())?;
                require(iso_to_three(&q).is_some(), "3^2 quotient not isomorphic to 3")?;
            }
        }
        counts.push(max.len());
    }
    Ok(format!("counts {counts:?}, quotients of 3^2 isomorphic to 3"))
}

fn criterion_4() -> Verdict {
    let mut n = 0;
    for (name, cm) in bundled_c_monoids(&lim()).map_err(|e| e.to_string())? {
        let r = check_collection_props(cm.cset()).map_err(|e| e.to_string())?;
        require(failures(&r) == 0 && r.results.len() == 5, format!("{name}:\n{r}"))?;
        n += 1;
    }
    Ok(format!("clauses (i)-(v) on {n} models, 0 violations"))
}

fn criterion_5() -> Verdict {
    let mut n = 0;
    for (name, cm) in bundled_c_monoids(&lim()).map_err(|e| e.to_string())? {
        let r = check_rho_hom_props(&cm).map_err(|e| e.to_string())?;
        require(failures(&r) == 0 && r.results.len() == 6, format!("{name}:\n{r}"))?;
        let t = cm.calg().t();
        for q in cm.programs().elements() {
            require(cm.act(cm.comp(q, t), q, cm.bot()) == q, format!("{name}: (q@T)[q,bot] != q"))?;
        }
        n += 1;
    }
    Ok(format!("clauses (i)-(vi) on {n} models, 0 violations"))
}

fn criterion_6() -> Verdict {
    let cases = [
        ("basic({1,bot})", basic_c_monoid(two_element_monoid()).map_err(|e| e.to_string())?, Some(1)),
        ("basic({1,a,bot})", basic_c_monoid(three_element_monoid()).map_err(|e| e.to_string())?, Some(2)),
        ("pointwise({1,a,bot},1)", pointwise_c_monoid(&three_element_monoid(), 1, &lim()).map_err(|e| e.to_string())?, None),
    ];
    let mut sizes = Vec::new();
    for (name, cm, want) in cases {
        let mor = build_embedding(&cm).map_err(|e| e.to_string())?;
        let r = verify_embedding(&cm, &mor);
        require(failures(&r) == 0, format!("{name}:\n{r}"))?;
        let families = ["mul", "one-bot", "tfu", "neg", "and", "or", "action", "comp"];
        require(families.iter().all(|f| r.get(f).is_some()), format!("{name}: missing a family"))?;
        if let Some(x) = want {
            require(mor.x_size() == x, format!("{name}: |X| = {}", mor.x_size()))?;
        }
        sizes.push(format!("{name} |X|={}", mor.x_size()));
    }
    Ok(sizes.join(", "))
}

fn criterion_7() -> Verdict {
    let guard = parse_identity("(f @ T)[f,f] = f").map_err(|e| e.to_string())?;
    let rep = check_identity_universal(&guard, 2, &lim()).map_err(|e| e.to_string())?;
    require(!rep.refuted(), format!("guard identity refuted:\n{rep}"))?;
    let corpus = builtin_corpus();
    for e in &corpus {
        let rep = check_identity_universal_in(&e.identity, 2, e.family.semantics(), &lim()).map_err(|e| e.to_string())?;
        require(!rep.refuted(), format!("{} refuted:\n{rep}", e.label))?;
    }
    let swap = parse_identity("%a[s,t] = %a[t,s]").map_err(|e| e.to_string())?;
    let rep = check_identity_universal(&swap, 2, &lim()).map_err(|e| e.to_string())?;
    let c = rep.counterexample().ok_or("swap identity not refuted")?;
    // replay on the model that produced it
    let (_, cm) = bundled_c_monoids(&lim())
        .map_err(|e| e.to_string())?
        .into_iter()
        .find(|(n, _)| *n == c.model)
        .ok_or("unknown model")?;
    let prog = |v: &str| cm.programs().find(c.witness.get(v).unwrap()).unwrap();
    let a = cm.calg().find(c.witness.get("%a").unwrap()).unwrap();
    let env = Env::new().with_prog("s", prog("s")).with_prog("t", prog("t")).with_test("a", a);
    let l = eval(&swap.conclusion.lhs, &cm, &env).map_err(|e| e.to_string())?;
    let r = eval(&swap.conclusion.rhs, &cm, &env).map_err(|e| e.to_string())?;
    require(l != r, "counterexample does not replay")?;
    Ok(format!("guard and {} corpus entries unrefuted at x_max=2; swap REFUTED {c}", corpus.len()))
}

fn criterion_8() -> Verdict {
    let corpus = builtin_corpus();
    let (mut compared, mut disagreements) = (0, Vec::new());
    let agrees = |out: &IdentityOutcome, r: &ite_core::AxiomResult| match out {
        IdentityOutcome::Holds { assignments, vacuous } => r.passed() && r.checked == *assignments && r.vacuous == *vacuous,
        IdentityOutcome::Refuted(_) => !r.passed(),
    };
    for (name, cm) in bundled_c_monoids(&lim()).map_err(|e| e.to_string())? {
        let ada = cm.ada().map_err(|e| e.to_string())?;
        for e in &corpus {
            let rep = match e.family {
                Family::C => check_c_algebra(cm.calg()),
                Family::A => check_ada(ada),
                Family::EC => check_c_set(cm.cset()),
                Family::EM => check_em_axioms(&cm),
                Family::B | Family::BM => continue,
            };
            let out = check_identity(&cm, &name, &e.identity, &lim()).map_err(|e| e.to_string())?;
            compared += 1;
            if !agrees(&out, rep.get(e.label).ok_or(e.label)?) {
                disagreements.push(format!("{name}/{}", e.label));
            }
        }
    }
    for (name, bm) in bundled_b_monoids(&lim()).map_err(|e| e.to_string())? {
        let rep = check_b_monoid(&bm);
        for e in corpus.iter().filter(|e| matches!(e.family, Family::B | Family::BM)) {
            let out = check_identity(&bm, &name, &e.identity, &lim()).map_err(|e| e.to_string())?;
            compared += 1;
            if !agrees(&out, rep.get(e.label).ok_or(e.label)?) {
                disagreements.push(format!("{name}/{}", e.label));
            }
        }
    }
    require(disagreements.is_empty(), format!("disagreements: {disagreements:?}"))?;
    Ok(format!("{compared} comparisons, 0 disagreements"))
}

fn criterion_9() -> Verdict {
    let run = || Command::new(env!("CARGO_BIN_EXE_ite")).arg("selftest").output().map_err(|e| e.to_string());
    let (a, b) = (run()?, run()?);
    require(a.status.success(), format!("selftest failed:\n{}", String::from_utf8_lossy(&a.stdout)))?;
    require(a.stdout == b.stdout, "selftest output differs between runs")?;
    Ok(format!("{} bytes identical across two runs", a.stdout.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("axiom suites on the desk models", criterion_1),
        ("ada suites and pair-of-sets oracle", criterion_2),
        ("maximal congruences of 3, 3^2, 3^3", criterion_3),
        ("collection properties (i)-(v)", criterion_4),
        ("rho properties (i)-(vi)", criterion_5),
        ("embedding at desk scale", criterion_6),
        ("bounded identity search", criterion_7),
        ("identity checker vs axiom checkers", criterion_8),
        ("selftest determinism", criterion_9),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", i + 1),
            Err(why) => {
                println!("criterion {}: FAIL {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
