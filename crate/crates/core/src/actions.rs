//! C-sets and C-monoids: a pointed set of programs acted on by a C-algebra of
//! tests through `α[s, t]`, optionally with program composition `·` and
//! program-test composition `∘`.

use crate::algebra::{check_binary, check_names, Ada, CAlgebra, ElemId};
use crate::error::{structure, Error, Result};
use crate::report::{dom, law, AxiomReport, Verdict};

/// The carrier S_⊥ of programs: a pointed set, possibly a monoid with zero ⊥.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointedCarrier {
    names: Vec<String>,
    bot: ElemId,
    one: Option<ElemId>,
    mul: Option<Vec<ElemId>>,
}

impl PointedCarrier {
    pub fn new(names: Vec<String>, bot: ElemId, one: Option<ElemId>, mul: Option<Vec<ElemId>>) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(structure("programs", "empty"));
        }
        check_names("programs", &names)?;
        if bot.0 >= n {
            return Err(structure("bot", "out of range"));
        }
        if let Some(one) = one {
            if one.0 >= n {
                return Err(structure("one", "out of range"));
            }
        }
        if let Some(mul) = &mul {
            check_binary("mul", n, n, n, mul)?;
        }
        Ok(PointedCarrier { names, bot, one, mul })
    }

    /// A pointed set without monoid structure.
    pub fn pointed(names: Vec<String>, bot: ElemId) -> Result<Self> {
        Self::new(names, bot, None, None)
    }

    /// A monoid with zero whose product is given by name lookups.
    pub fn monoid(names: &[&str], one: &str, bot: &str, product: impl Fn(&str, &str) -> String) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let find = |n: &str| {
            names
                .iter()
                .position(|x| x == n)
                .map(ElemId)
                .ok_or_else(|| structure("mul", format!("unknown element {n:?}")))
        };
        let mut mul = Vec::with_capacity(names.len() * names.len());
        for a in &names {
            for b in &names {
                mul.push(find(&product(a, b))?);
            }
        }
        let (one, bot) = (find(one)?, find(bot)?);
        Self::new(names, bot, Some(one), Some(mul))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, s: ElemId) -> &str {
        &self.names[s.0]
    }

    pub fn find(&self, name: &str) -> Option<ElemId> {
        self.names.iter().position(|n| n == name).map(ElemId)
    }

    pub fn elements(&self) -> impl Iterator<Item = ElemId> {
        (0..self.len()).map(ElemId)
    }

    pub fn bot(&self) -> ElemId {
        self.bot
    }

    pub fn one(&self) -> Option<ElemId> {
        self.one
    }

    pub fn has_monoid(&self) -> bool {
        self.one.is_some() && self.mul.is_some()
    }

    pub fn mul_table(&self) -> Option<&[ElemId]> {
        self.mul.as_deref()
    }

    /// `s · t`; panics when the carrier has no multiplication.
    pub fn mul(&self, s: ElemId, t: ElemId) -> ElemId {
        let mul = self.mul.as_ref().expect("carrier has no multiplication");
        mul[s.0 * self.len() + t.0]
    }

    /// Associativity, two-sided identity and two-sided zero.
    pub fn check_monoid(&self) -> AxiomReport {
        let mut r = AxiomReport::new();
        let (Some(one), Some(_)) = (self.one, &self.mul) else {
            return r;
        };
        let e = &self.names;
        let (s, t, u) = (dom("s", e), dom("t", e), dom("u", e));
        let id = ElemId;
        r.push(law("mul-assoc", &[s, t, u], |v| {
            let (x, y, z) = (id(v[0]), id(v[1]), id(v[2]));
            (self.mul(self.mul(x, y), z) == self.mul(x, self.mul(y, z))).into()
        }));
        r.push(law("one-identity", &[s], |v| {
            let x = id(v[0]);
            (self.mul(one, x) == x && self.mul(x, one) == x).into()
        }));
        r.push(law("bot-zero", &[s], |v| {
            let x = id(v[0]);
            (self.mul(self.bot, x) == self.bot && self.mul(x, self.bot) == self.bot).into()
        }));
        r
    }

    /// Validates the hypotheses shared by the basic and pointwise constructions:
    /// a non-trivial monoid with zero and no non-zero zero-divisors.
    pub fn require_domain_monoid(&self) -> Result<ElemId> {
        let one = match (self.one, &self.mul) {
            (Some(one), Some(_)) => one,
            _ => return Err(Error::Monoid("identity and multiplication are required".into())),
        };
        let laws = self.check_monoid();
        if let Some(fail) = laws.failures().next() {
            return Err(Error::Monoid(format!("{} fails at {}", fail.label, fail.witness().unwrap())));
        }
        if one == self.bot {
            return Err(Error::Monoid("the monoid is trivial (1 = bot)".into()));
        }
        for a in self.elements() {
            for b in self.elements() {
                if a != self.bot && b != self.bot && self.mul(a, b) == self.bot {
                    return Err(Error::ZeroDivisor {
                        left: self.name(a).to_string(),
                        right: self.name(b).to_string(),
                    });
                }
            }
        }
        Ok(one)
    }
}

/// The algebra of tests of a C-set: a bare C-algebra or an ada.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TestAlgebra {
    CAlgebra(CAlgebra),
    Ada(Ada),
}

impl TestAlgebra {
    pub fn calg(&self) -> &CAlgebra {
        match self {
            TestAlgebra::CAlgebra(m) => m,
            TestAlgebra::Ada(m) => m.base(),
        }
    }

    pub fn ada(&self) -> Option<&Ada> {
        match self {
            TestAlgebra::CAlgebra(_) => None,
            TestAlgebra::Ada(m) => Some(m),
        }
    }

    /// The ada, or [`Error::NotAda`] for a bare C-algebra.
    pub fn require_ada(&self) -> Result<&Ada> {
        self.ada().ok_or(Error::NotAda)
    }
}

impl From<Ada> for TestAlgebra {
    fn from(m: Ada) -> Self {
        TestAlgebra::Ada(m)
    }
}

impl From<CAlgebra> for TestAlgebra {
    fn from(m: CAlgebra) -> Self {
        TestAlgebra::CAlgebra(m)
    }
}

/// The double-bracket action `α⟦β, γ⟧ = (α ∧ β) ∨ (¬α ∧ γ)` of M on itself.
pub fn mm_action(m: &CAlgebra, alpha: ElemId, beta: ElemId, gamma: ElemId) -> ElemId {
    m.or(m.and(alpha, beta), m.and(m.neg(alpha), gamma))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CSet {
    s: PointedCarrier,
    m: TestAlgebra,
    act: Vec<ElemId>,
}

impl CSet {
    /// `act` is indexed `[α][s][t]`, row-major.
    pub fn new(s: PointedCarrier, m: TestAlgebra, act: Vec<ElemId>) -> Result<Self> {
        let (ns, nm) = (s.len(), m.calg().len());
        check_binary("act", nm * ns, ns, ns, &act)?;
        Ok(CSet { s, m, act })
    }

    pub fn programs(&self) -> &PointedCarrier {
        &self.s
    }

    pub fn tests(&self) -> &TestAlgebra {
        &self.m
    }

    pub fn calg(&self) -> &CAlgebra {
        self.m.calg()
    }

    pub fn act_table(&self) -> &[ElemId] {
        &self.act
    }

    /// `α[s, t]`: if α then s else t.
    pub fn act(&self, alpha: ElemId, s: ElemId, t: ElemId) -> ElemId {
        let ns = self.s.len();
        self.act[(alpha.0 * ns + s.0) * ns + t.0]
    }

    pub fn patch_act(&mut self, alpha: ElemId, s: ElemId, t: ElemId, v: ElemId) {
        assert!(v.0 < self.s.len());
        let ns = self.s.len();
        self.act[(alpha.0 * ns + s.0) * ns + t.0] = v;
    }
}

/// The C-set (M, M) with base point U under the double-bracket action.
pub fn mm_c_set(m: &TestAlgebra) -> CSet {
    let alg = m.calg();
    let s = PointedCarrier::pointed(alg.names().to_vec(), alg.u()).expect("algebra names are valid");
    let mut act = Vec::with_capacity(alg.len().pow(3));
    for a in alg.elements() {
        for b in alg.elements() {
            for c in alg.elements() {
                act.push(mm_action(alg, a, b, c));
            }
        }
    }
    CSet::new(s, m.clone(), act).expect("double-bracket table is well formed")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CMonoid {
    base: CSet,
    comp: Vec<ElemId>,
}

impl CMonoid {
    /// `comp` is indexed `[s][α]`, row-major.
    pub fn new(base: CSet, comp: Vec<ElemId>) -> Result<Self> {
        if !base.s.has_monoid() {
            return Err(Error::Monoid("a C-monoid needs an identity and a multiplication table".into()));
        }
        let (ns, nm) = (base.s.len(), base.calg().len());
        check_binary("comp", ns, nm, nm, &comp)?;
        Ok(CMonoid { base, comp })
    }

    pub fn cset(&self) -> &CSet {
        &self.base
    }

    pub fn cset_mut(&mut self) -> &mut CSet {
        &mut self.base
    }

    pub fn programs(&self) -> &PointedCarrier {
        &self.base.s
    }

    pub fn tests(&self) -> &TestAlgebra {
        &self.base.m
    }

    pub fn calg(&self) -> &CAlgebra {
        self.base.calg()
    }

    pub fn ada(&self) -> Result<&Ada> {
        self.base.m.require_ada()
    }

    pub fn comp_table(&self) -> &[ElemId] {
        &self.comp
    }

    pub fn one(&self) -> ElemId {
        self.base.s.one.expect("validated at construction")
    }

    pub fn bot(&self) -> ElemId {
        self.base.s.bot
    }

    pub fn mul(&self, s: ElemId, t: ElemId) -> ElemId {
        self.base.s.mul(s, t)
    }

    pub fn act(&self, alpha: ElemId, s: ElemId, t: ElemId) -> ElemId {
        self.base.act(alpha, s, t)
    }

    /// `s ∘ α`: the test α evaluated after running s.
    pub fn comp(&self, s: ElemId, alpha: ElemId) -> ElemId {
        self.comp[s.0 * self.calg().len() + alpha.0]
    }

    pub fn patch_comp(&mut self, s: ElemId, alpha: ElemId, v: ElemId) {
        assert!(v.0 < self.calg().len());
        let nm = self.calg().len();
        self.comp[s.0 * nm + alpha.0] = v;
    }
}

/// Checks EC1–EC8; EC8 is a quasi-identity and reports vacuous assignments.
pub fn check_c_set(cs: &CSet) -> AxiomReport {
    let m = cs.calg();
    let (pn, tn) = (cs.s.names(), m.names());
    let (s, t, u, v) = (dom("s", pn), dom("t", pn), dom("u", pn), dom("v", pn));
    let (a, b) = (dom("a", tn), dom("b", tn));
    let id = ElemId;
    let act = |x, y, z| cs.act(x, y, z);
    let bot = cs.s.bot;
    let mut r = AxiomReport::new();
    r.push(law("EC1", &[s, t], |w| (act(m.u(), id(w[0]), id(w[1])) == bot).into()));
    r.push(law("EC2", &[s, t, u, v, a, b], |w| {
        let (s, t, u, v, a, b) = (id(w[0]), id(w[1]), id(w[2]), id(w[3]), id(w[4]), id(w[5]));
        (act(a, act(b, s, t), act(b, u, v)) == act(b, act(a, s, u), act(a, t, v))).into()
    }));
    r.push(law("EC3", &[s, t, u, a], |w| {
        let (s, t, u, a) = (id(w[0]), id(w[1]), id(w[2]), id(w[3]));
        (act(a, act(a, s, t), u) == act(a, s, u)).into()
    }));
    r.push(law("EC4", &[s, t, u, a], |w| {
        let (s, t, u, a) = (id(w[0]), id(w[1]), id(w[2]), id(w[3]));
        (act(a, s, act(a, t, u)) == act(a, s, u)).into()
    }));
    r.push(law("EC5", &[s, t, a], |w| {
        let (s, t, a) = (id(w[0]), id(w[1]), id(w[2]));
        (act(m.neg(a), s, t) == act(a, t, s)).into()
    }));
    r.push(law("EC6", &[s, t], |w| (act(m.f(), id(w[0]), id(w[1])) == id(w[1])).into()));
    r.push(law("EC7", &[s, t, a, b], |w| {
        let (s, t, a, b) = (id(w[0]), id(w[1]), id(w[2]), id(w[3]));
        (act(m.and(a, b), s, t) == act(a, act(b, s, t), t)).into()
    }));
    r.push(law("EC8", &[s, t, a, b], |w| {
        let (s, t, a, b) = (id(w[0]), id(w[1]), id(w[2]), id(w[3]));
        if act(a, s, t) != act(a, t, t) {
            return Verdict::Vacuous;
        }
        let ab = m.and(a, b);
        (act(ab, s, t) == act(ab, t, t)).into()
    }));
    r
}

/// Checks EM1–EM9 only.
pub fn check_em_axioms(cm: &CMonoid) -> AxiomReport {
    let m = cm.calg();
    let (pn, tn) = (cm.programs().names(), m.names());
    let (r_, s, t, u) = (dom("r", pn), dom("s", pn), dom("t", pn), dom("u", pn));
    let (a, b) = (dom("a", tn), dom("b", tn));
    let id = ElemId;
    let (one, bot) = (cm.one(), cm.bot());
    let mut r = AxiomReport::new();
    r.push(law("EM1", &[a], |w| (cm.comp(one, id(w[0])) == id(w[0])).into()));
    r.push(law("EM2", &[s, t, a], |w| {
        let (s, t, a) = (id(w[0]), id(w[1]), id(w[2]));
        (cm.comp(cm.mul(s, t), a) == cm.comp(s, cm.comp(t, a))).into()
    }));
    r.push(law("EM3", &[s, a, b], |w| {
        let (s, a, b) = (id(w[0]), id(w[1]), id(w[2]));
        (cm.comp(s, m.and(a, b)) == m.and(cm.comp(s, a), cm.comp(s, b))).into()
    }));
    r.push(law("EM4", &[s, a], |w| {
        let (s, a) = (id(w[0]), id(w[1]));
        (cm.comp(s, m.neg(a)) == m.neg(cm.comp(s, a))).into()
    }));
    r.push(law("EM5", &[s, t, u, a], |w| {
        let (s, t, u, a) = (id(w[0]), id(w[1]), id(w[2]), id(w[3]));
        (cm.mul(cm.act(a, s, t), u) == cm.act(a, cm.mul(s, u), cm.mul(t, u))).into()
    }));
    r.push(law("EM6", &[s, t, a, b], |w| {
        let (s, t, a, b) = (id(w[0]), id(w[1]), id(w[2]), id(w[3]));
        (cm.comp(cm.act(a, s, t), b) == mm_action(m, a, cm.comp(s, b), cm.comp(t, b))).into()
    }));
    r.push(law("EM7", &[a], |w| (cm.comp(bot, id(w[0])) == m.u()).into()));
    r.push(law("EM8", &[t], |w| (cm.comp(id(w[0]), m.u()) == m.u()).into()));
    r.push(law("EM9", &[r_, s, t, a], |w| {
        let (r, s, t, a) = (id(w[0]), id(w[1]), id(w[2]), id(w[3]));
        (cm.mul(r, cm.act(a, s, t)) == cm.act(cm.comp(r, a), cm.mul(r, s), cm.mul(r, t))).into()
    }));
    r
}

/// Monoid-with-zero laws, EC1–EC8 and EM1–EM9.
pub fn check_c_monoid(cm: &CMonoid) -> AxiomReport {
    let mut r = cm.programs().check_monoid();
    r.extend_prefixed("", check_c_set(&cm.base));
    r.extend_prefixed("", check_em_axioms(cm));
    r
}
