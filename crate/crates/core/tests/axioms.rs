use ite_core::actions::check_em_axioms;
use ite_core::algebra::{check_bool, mk_three, mk_two, power_ada};
use ite_core::bset::{check_b_monoid, functional_b_monoid};
use ite_core::functional::{
    all_self_maps, basic_c_monoid, functional_c_monoid, pointwise_c_monoid, three_element_monoid, two_element_monoid,
};
use ite_core::pairs::all_pairs;
use ite_core::{check_ada, check_c_monoid, check_c_set, ElemId, Limits, Three};

fn lim() -> Limits {
    Limits::default()
}

#[test]
fn ada_suites_on_three_and_powers() {
    assert!(check_ada(&mk_three()).passed());
    for k in 0..=3 {
        let r = check_ada(&power_ada(k, &lim()).unwrap());
        assert!(r.passed(), "3^{k}:\n{r}");
    }
}

#[test]
fn two_is_boolean_but_three_is_not_commutative() {
    assert!(check_bool(&mk_two()).passed());
    let three = mk_three();
    let (t, u) = (three.t(), three.u());
    assert_ne!(three.or(t, u), three.or(u, t));
}

#[test]
fn c_monoid_suites_on_bundled_models() {
    let models = [
        functional_c_monoid(1, &lim()).unwrap(),
        functional_c_monoid(2, &lim()).unwrap(),
        pointwise_c_monoid(&three_element_monoid(), 1, &lim()).unwrap(),
        basic_c_monoid(three_element_monoid()).unwrap(),
        basic_c_monoid(two_element_monoid()).unwrap(),
    ];
    for cm in &models {
        let r = check_c_monoid(cm);
        assert!(r.passed(), "{r}");
        assert!(r.get("EC8").unwrap().vacuous > 0);
    }
}

#[test]
fn functional_two_tables_follow_the_definitions() {
    // X = {0, 1}, base point 2; (f · g)(x) = g(f(x)); α[f, g] picks f on
    // α's true set, g on its false set, ⊥ elsewhere; f ∘ α reads α at f(x).
    let cm = functional_c_monoid(2, &lim()).unwrap();
    let maps = all_self_maps(2);
    let pairs: Vec<_> = all_pairs(2).collect();
    let base = 2;
    let find_map = |v: Vec<usize>| maps.iter().position(|m| m.values() == v.as_slice()).unwrap();
    let find_pair = |v: Vec<Three>| pairs.iter().position(|p| p.to_function() == v).unwrap();
    let app = |v: &[usize], x: usize| if x == base { base } else { v[x] };
    for (i, f) in maps.iter().enumerate() {
        for (j, g) in maps.iter().enumerate() {
            let want = find_map((0..2).map(|x| app(g.values(), app(f.values(), x))).collect());
            assert_eq!(cm.mul(ElemId(i), ElemId(j)), ElemId(want));
            for (k, alpha) in pairs.iter().enumerate() {
                let h = (0..2)
                    .map(|x| match alpha.value_at(x) {
                        Three::T => f.values()[x],
                        Three::F => g.values()[x],
                        Three::U => base,
                    })
                    .collect();
                assert_eq!(cm.act(ElemId(k), ElemId(i), ElemId(j)), ElemId(find_map(h)));
            }
        }
        for (k, alpha) in pairs.iter().enumerate() {
            let v = (0..2)
                .map(|x| {
                    let y = f.values()[x];
                    if y == base {
                        Three::U
                    } else {
                        alpha.value_at(y)
                    }
                })
                .collect();
            assert_eq!(cm.comp(ElemId(i), ElemId(k)), ElemId(find_pair(v)));
        }
    }
    // the identity is ζ₁ and the zero ζ_⊥
    assert_eq!(maps[cm.one().0].values(), &[0, 1]);
    assert_eq!(maps[cm.bot().0].values(), &[2, 2]);
}

#[test]
fn corrupted_tables_are_caught_with_witnesses() {
    let mut cm = functional_c_monoid(1, &lim()).unwrap();
    let (one, bot) = (cm.one(), cm.bot());
    let t = cm.calg().t();
    // T[1, ⊥] = ⊥ breaks T's selection of the first branch
    cm.cset_mut().patch_act(t, one, bot, bot);
    let r = check_c_set(cm.cset());
    assert!(!r.passed());
    let failed: Vec<_> = r.failures().map(|f| f.label.as_str()).collect();
    assert!(failed.contains(&"EC5"), "{r}");

    let mut cm = functional_c_monoid(1, &lim()).unwrap();
    let u = cm.calg().u();
    let one = cm.one();
    cm.patch_comp(one, u, t);
    let r = check_em_axioms(&cm);
    let em1 = r.get("EM1").unwrap();
    assert!(!em1.passed());
    assert_eq!(em1.witness().unwrap().get("a"), Some("U"));
}

#[test]
fn b_monoid_baseline() {
    for k in 1..=2 {
        let r = check_b_monoid(&functional_b_monoid(k, &lim()).unwrap());
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn caps_are_enforced() {
    let tight = Limits {
        max_carrier: 8,
        ..Limits::default()
    };
    assert!(matches!(power_ada(2, &tight), Err(ite_core::Error::SizeCap { .. })));
    assert!(matches!(functional_c_monoid(2, &tight), Err(ite_core::Error::SizeCap { .. })));
    assert!(matches!(functional_c_monoid(0, &lim()), Err(ite_core::Error::Argument(_))));
}
