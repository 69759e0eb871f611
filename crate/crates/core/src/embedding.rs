//! The embedding of a finite C-monoid over an ada into a functional C-monoid:
//! per-congruence homomorphisms (φ_θ, ρ_θ), their separation properties, and
//! the assembled pair (φ, ρ) over the disjoint union of the quotients.

use std::collections::HashSet;
use std::fmt;

use crate::actions::{CMonoid, CSet, PointedCarrier, TestAlgebra};
use crate::algebra::{Ada, CAlgebra, ElemId, Limits};
use crate::congruence::{theta_data, theta_names, ThetaData};
use crate::error::{Error, Result};
use crate::functional::{functional_c_monoid, PointedSelfMap};
use crate::pairs::PairOfSets;
use crate::report::{dom, law, AxiomReport, Verdict};

/// S_⊥ / E_θ: the classes not containing ⊥ are points `0..k`, the ⊥-class is
/// the base point `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientPointedSet {
    classes: Vec<Vec<ElemId>>,
    class_of: Vec<usize>,
}

impl QuotientPointedSet {
    pub fn new(cs: &CSet, data: &ThetaData) -> QuotientPointedSet {
        let bot = cs.programs().bot();
        let p = data.e.partition();
        let mut classes: Vec<Vec<ElemId>> = Vec::new();
        let mut bot_class = Vec::new();
        for block in p.blocks() {
            let members: Vec<ElemId> = block.into_iter().map(ElemId).collect();
            if members.contains(&bot) {
                bot_class = members;
            } else {
                classes.push(members);
            }
        }
        classes.push(bot_class);
        let mut class_of = vec![0; p.len()];
        for (k, c) in classes.iter().enumerate() {
            for s in c {
                class_of[s.0] = k;
            }
        }
        QuotientPointedSet { classes, class_of }
    }

    /// |S_θ|, the number of classes other than the ⊥-class.
    pub fn points(&self) -> usize {
        self.classes.len() - 1
    }

    /// Index of the ⊥-class, which is also the base point.
    pub fn base(&self) -> usize {
        self.classes.len() - 1
    }

    pub fn class_of(&self, s: ElemId) -> usize {
        self.class_of[s.0]
    }

    pub fn members(&self, class: usize) -> &[ElemId] {
        &self.classes[class]
    }

    /// Least member of a class.
    pub fn rep(&self, class: usize) -> ElemId {
        self.classes[class][0]
    }
}

/// φ_θ(s) = ψ^s with ψ^s(t̄) = (t · s)‾, for every program s.
pub fn phi_theta(cm: &CMonoid, q: &QuotientPointedSet) -> Result<Vec<PointedSelfMap>> {
    let mut out = Vec::with_capacity(cm.programs().len());
    for s in cm.programs().elements() {
        let mut values = Vec::with_capacity(q.points());
        for c in 0..q.points() {
            let img = q.class_of(cm.mul(q.rep(c), s));
            if let Some(&t) = q.members(c).iter().find(|&&t| q.class_of(cm.mul(t, s)) != img) {
                let n = |x| cm.programs().name(x).to_string();
                return Err(Error::ModelInconsistency(format!(
                    "phi_theta({}) is not well defined: {} and {} are E_theta-related but their products are not",
                    n(s),
                    n(q.rep(c)),
                    n(t)
                )));
            }
            values.push(img);
        }
        out.push(PointedSelfMap::new(values)?);
    }
    Ok(out)
}

/// ρ_θ: T ↦ (S_θ, ∅), F ↦ (∅, S_θ), otherwise α ↦ (A^α, B^α) with
/// A^α = {t̄ : t ∘ α θ-related to T} and B^α likewise for F.
pub fn rho_theta(cm: &CMonoid, data: &ThetaData, q: &QuotientPointedSet) -> Result<Vec<PairOfSets>> {
    let m = cm.calg();
    let k = q.points();
    let mut out = Vec::with_capacity(m.len());
    for alpha in m.elements() {
        if alpha == m.t() {
            out.push(PairOfSets::all_true(k));
            continue;
        }
        if alpha == m.f() {
            out.push(PairOfSets::all_false(k));
            continue;
        }
        let side = |t: ElemId| {
            let v = cm.comp(t, alpha);
            (data.theta.related(v, m.t()), data.theta.related(v, m.f()))
        };
        let mut a = Vec::new();
        let mut b = Vec::new();
        for c in 0..=k {
            let first = side(q.rep(c));
            if q.members(c).iter().any(|&t| side(t) != first) {
                return Err(Error::ModelInconsistency(format!(
                    "rho_theta({}) depends on the class representative",
                    m.name(alpha)
                )));
            }
            match first {
                (true, true) => {
                    return Err(Error::ModelInconsistency(format!(
                        "rho_theta({}): a class lies in both A and B",
                        m.name(alpha)
                    )))
                }
                (true, false) | (false, true) if c == k => {
                    return Err(Error::ModelInconsistency(format!(
                        "rho_theta({}): the bottom class lies in A or B",
                        m.name(alpha)
                    )))
                }
                (true, false) => a.push(c),
                (false, true) => b.push(c),
                (false, false) => {}
            }
        }
        out.push(PairOfSets::new(k, a, b)?);
    }
    Ok(out)
}

/// Checks that (φ_θ, ρ_θ) is a C-monoid homomorphism into
/// (T_o(S_θ⊥), 3^{S_θ}).
pub fn check_phi_rho_theta_hom(cm: &CMonoid, data: &ThetaData) -> Result<AxiomReport> {
    let q = QuotientPointedSet::new(cm.cset(), data);
    let phi = phi_theta(cm, &q)?;
    let rho = rho_theta(cm, data, &q)?;
    Ok(hom_report(cm, &phi, &rho, q.points()))
}

fn hom_report(cm: &CMonoid, phi: &[PointedSelfMap], rho: &[PairOfSets], k: usize) -> AxiomReport {
    let m = cm.calg();
    let (pn, tn) = (cm.programs().names(), m.names());
    let (s, t) = (dom("s", pn), dom("t", pn));
    let (a, b) = (dom("a", tn), dom("b", tn));
    let id = ElemId;
    let f = |x: ElemId| &phi[x.0];
    let r = |x: ElemId| &rho[x.0];
    let mut rep = AxiomReport::new();
    rep.push(law("mul", &[s, t], |w| {
        let (s, t) = (id(w[0]), id(w[1]));
        (*f(cm.mul(s, t)) == f(s).then(f(t))).into()
    }));
    rep.push(law("one-bot", &[], |_| {
        (*f(cm.one()) == PointedSelfMap::identity(k) && *f(cm.bot()) == PointedSelfMap::zero(k)).into()
    }));
    rep.push(law("tfu", &[], |_| {
        (*r(m.t()) == PairOfSets::all_true(k)
            && *r(m.f()) == PairOfSets::all_false(k)
            && *r(m.u()) == PairOfSets::undefined(k))
        .into()
    }));
    rep.push(law("neg", &[a], |w| (*r(m.neg(id(w[0]))) == r(id(w[0])).neg()).into()));
    rep.push(law("and", &[a, b], |w| {
        let (a, b) = (id(w[0]), id(w[1]));
        r(a).and(r(b)).is_ok_and(|p| p == *r(m.and(a, b))).into()
    }));
    rep.push(law("or", &[a, b], |w| {
        let (a, b) = (id(w[0]), id(w[1]));
        r(a).or(r(b)).is_ok_and(|p| p == *r(m.or(a, b))).into()
    }));
    rep.push(law("action", &[a, s, t], |w| {
        let (a, s, t) = (id(w[0]), id(w[1]), id(w[2]));
        (*f(cm.act(a, s, t)) == PointedSelfMap::ite(r(a), f(s), f(t))).into()
    }));
    rep.push(law("comp", &[s, a], |w| {
        let (s, a) = (id(w[0]), id(w[1]));
        (*r(cm.comp(s, a)) == f(s).comp(r(a))).into()
    }));
    rep
}

/// For every pair of distinct programs (tests) some maximal θ separates their
/// φ_θ (ρ_θ) images; also ρ_θ(α) = (S_θ, ∅) forces α θ T, and likewise for F.
pub fn check_separation(cm: &CMonoid) -> Result<AxiomReport> {
    let data = theta_data(cm.cset())?;
    let m = cm.calg();
    let mut phis = Vec::new();
    let mut rhos = Vec::new();
    let mut sizes = Vec::new();
    for d in &data {
        let q = QuotientPointedSet::new(cm.cset(), d);
        phis.push(phi_theta(cm, &q)?);
        rhos.push(rho_theta(cm, d, &q)?);
        sizes.push(q.points());
    }
    let (pn, tn) = (cm.programs().names(), m.names());
    let thn = theta_names(data.len());
    let id = ElemId;
    let mut r = AxiomReport::new();
    r.push(law("phi separation", &[dom("s", pn), dom("t", pn)], |w| {
        if w[0] == w[1] {
            return Verdict::Vacuous;
        }
        phis.iter().any(|p| p[w[0]] != p[w[1]]).into()
    }));
    r.push(law("rho separation", &[dom("a", tn), dom("b", tn)], |w| {
        if w[0] == w[1] {
            return Verdict::Vacuous;
        }
        rhos.iter().any(|p| p[w[0]] != p[w[1]]).into()
    }));
    r.push(law("all-true forces T", &[dom("theta", &thn), dom("a", tn)], |w| {
        let k = sizes[w[0]];
        if rhos[w[0]][w[1]] != PairOfSets::all_true(k) {
            return Verdict::Vacuous;
        }
        data[w[0]].theta.related(id(w[1]), m.t()).into()
    }));
    r.push(law("all-false forces F", &[dom("theta", &thn), dom("a", tn)], |w| {
        let k = sizes[w[0]];
        if rhos[w[0]][w[1]] != PairOfSets::all_false(k) {
            return Verdict::Vacuous;
        }
        data[w[0]].theta.related(id(w[1]), m.f()).into()
    }));
    Ok(r)
}

/// A point of X: a non-⊥ class of S_⊥ / E_θ for the θ at `theta` in the
/// sorted list of maximal congruences, identified by its least member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TaggedPoint {
    pub theta: usize,
    pub rep: ElemId,
}

/// The pair (φ, ρ) into (T_o(X_⊥), 3^X).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub points: Vec<TaggedPoint>,
    pub phi: Vec<PointedSelfMap>,
    pub rho: Vec<PairOfSets>,
    pub thetas: usize,
}

impl Morphism {
    pub fn x_size(&self) -> usize {
        self.points.len()
    }

    /// `theta/rep` for each point of X.
    pub fn point_names(&self, programs: &PointedCarrier) -> Vec<String> {
        self.points
            .iter()
            .map(|p| format!("{}/{}", p.theta, programs.name(p.rep)))
            .collect()
    }

    /// The functional C-monoid over X, when it fits under the caps.
    pub fn target(&self, limits: &Limits) -> Result<CMonoid> {
        functional_c_monoid(self.x_size(), limits)
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|X| = {} over {} maximal congruences", self.points.len(), self.thetas)
    }
}

/// Assembles (φ, ρ) over X = ⊔_θ S_θ with one fresh base point.
pub fn build_embedding(cm: &CMonoid) -> Result<Morphism> {
    let data = theta_data(cm.cset())?;
    let mut points = Vec::new();
    let mut parts = Vec::new();
    for (i, d) in data.iter().enumerate() {
        let q = QuotientPointedSet::new(cm.cset(), d);
        let phi = phi_theta(cm, &q)?;
        let rho = rho_theta(cm, d, &q)?;
        let offset = points.len();
        points.extend((0..q.points()).map(|c| TaggedPoint { theta: i, rep: q.rep(c) }));
        parts.push((offset, q.points(), phi, rho));
    }
    let x = points.len();
    let phi = cm
        .programs()
        .elements()
        .map(|s| {
            let mut values = vec![x; x];
            for (offset, k, phi_t, _) in &parts {
                for c in 0..*k {
                    let v = phi_t[s.0].apply(c);
                    // the ⊥-class is re-pointed to the global base point
                    if v != *k {
                        values[offset + c] = offset + v;
                    }
                }
            }
            PointedSelfMap::new(values)
        })
        .collect::<Result<Vec<_>>>()?;
    let rho = cm
        .calg()
        .elements()
        .map(|alpha| {
            let mut a = Vec::new();
            let mut b = Vec::new();
            for (offset, _, _, rho_t) in &parts {
                let p = &rho_t[alpha.0];
                a.extend(p.first().ones().map(|c| offset + c));
                b.extend(p.second().ones().map(|c| offset + c));
            }
            PairOfSets::new(x, a, b)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Morphism { points, phi, rho, thetas: data.len() })
}

/// Injectivity in both sorts, preservation of ·, 1, ⊥, T, F, U, ¬, ∧, ∨,
/// the action and ∘, and the bound |X| ≤ #θ · (|S_⊥| - 1).
pub fn verify_embedding(cm: &CMonoid, mor: &Morphism) -> AxiomReport {
    let x = mor.x_size();
    let (pn, tn) = (cm.programs().names(), cm.calg().names());
    let mut r = AxiomReport::new();
    r.push(law("phi injective", &[dom("s", pn), dom("t", pn)], |w| {
        (w[0] == w[1] || mor.phi[w[0]] != mor.phi[w[1]]).into()
    }));
    r.push(law("rho injective", &[dom("a", tn), dom("b", tn)], |w| {
        (w[0] == w[1] || mor.rho[w[0]] != mor.rho[w[1]]).into()
    }));
    r.extend_prefixed("", hom_report(cm, &mor.phi, &mor.rho, x));
    r.push(law("finite X", &[], |_| {
        let distinct: HashSet<_> = mor.points.iter().collect();
        (distinct.len() == x && x <= mor.thetas * (pn.len() - 1)).into()
    }));
    r
}

/// The image of `cm` under (φ, ρ) as a C-monoid whose programs are named by
/// their maps and whose tests are named by their pairs of sets.
pub fn image_c_monoid(cm: &CMonoid, mor: &Morphism) -> Result<CMonoid> {
    let inj_p: HashSet<_> = mor.phi.iter().collect();
    let inj_t: HashSet<_> = mor.rho.iter().collect();
    if inj_p.len() != mor.phi.len() || inj_t.len() != mor.rho.len() {
        return Err(Error::ModelInconsistency("the morphism is not injective".into()));
    }
    let ada = cm.ada()?;
    let names = mor.phi.iter().map(PointedSelfMap::name).collect();
    let mul = cm.programs().mul_table().expect("C-monoid carrier has a product").to_vec();
    let programs = PointedCarrier::new(names, cm.bot(), Some(cm.one()), Some(mul))?;
    // the tests keep the ada tables; only the names change to the pairs over X
    let tnames: Vec<String> = mor.rho.iter().map(PairOfSets::name).collect();
    let base = CAlgebra::new(
        tnames,
        ada.neg_table().to_vec(),
        ada.and_table().to_vec(),
        ada.or_table().to_vec(),
        ada.t(),
        ada.f(),
        ada.u(),
    )?;
    let tests = Ada::new(base, ada.down_table().to_vec())?;
    let cs = CSet::new(programs, TestAlgebra::Ada(tests), cm.cset().act_table().to_vec())?;
    CMonoid::new(cs, cm.comp_table().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functional::{basic_c_monoid, functional_c_monoid, three_element_monoid, two_element_monoid};

    #[test]
    fn basic_two_has_one_point() {
        let cm = basic_c_monoid(two_element_monoid()).unwrap();
        let mor = build_embedding(&cm).unwrap();
        assert_eq!(mor.x_size(), 1);
        assert!(verify_embedding(&cm, &mor).passed());
        let one = cm.one();
        assert_eq!(mor.phi[one.0], PointedSelfMap::identity(1));
        assert_eq!(mor.rho[cm.calg().u().0], PairOfSets::undefined(1));
    }

    #[test]
    fn phi_theta_on_basic_three() {
        let cm = basic_c_monoid(three_element_monoid()).unwrap();
        let data = theta_data(cm.cset()).unwrap();
        assert_eq!(data.len(), 1);
        let q = QuotientPointedSet::new(cm.cset(), &data[0]);
        let phi = phi_theta(&cm, &q).unwrap();
        let a = cm.programs().find("a").unwrap();
        let (c1, ca) = (q.class_of(cm.one()), q.class_of(a));
        assert_eq!(phi[a.0].apply(c1), ca);
        assert_eq!(phi[a.0].apply(ca), ca);
        assert_eq!(phi[cm.bot().0], PointedSelfMap::zero(q.points()));
    }

    #[test]
    fn bot_class_is_repointed() {
        let cm = basic_c_monoid(three_element_monoid()).unwrap();
        let mor = build_embedding(&cm).unwrap();
        // φ(⊥) sends every point to the fresh base point
        assert!(mor.phi[cm.bot().0].values().iter().all(|&v| v == mor.x_size()));
        // φ(a) keeps a defined value on the class of 1
        let a = cm.programs().find("a").unwrap();
        assert!(mor.phi[a.0].values().iter().all(|&v| v < mor.x_size()));
    }

    #[test]
    fn functional_one_round_trips() {
        let cm = functional_c_monoid(1, &Limits::default()).unwrap();
        let mor = build_embedding(&cm).unwrap();
        let r = verify_embedding(&cm, &mor);
        assert!(r.passed(), "{r}");
        assert!(check_separation(&cm).unwrap().passed());
    }

    #[test]
    fn corrupted_comp_is_caught() {
        let mut cm = basic_c_monoid(three_element_monoid()).unwrap();
        let data = theta_data(cm.cset()).unwrap();
        let a = cm.programs().find("a").unwrap();
        let m = cm.calg().clone();
        cm.patch_comp(a, m.t(), m.u());
        let res = check_phi_rho_theta_hom(&cm, &data[0]);
        assert!(res.is_err() || !res.unwrap().passed());
    }
}
