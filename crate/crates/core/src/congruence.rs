//! Congruences of finite adas, the induced equivalences E_θ on C-sets, and
//! exhaustive checks of the maximal-congruence properties.

use std::collections::BTreeSet;
use std::fmt;

use crate::actions::{mm_c_set, CMonoid, CSet};
use crate::algebra::{Ada, ElemId, Limits};
use crate::error::{Error, Result};
use crate::pairs::Three;
use crate::report::{dom, law, AxiomReport, AxiomResult, Verdict, Witness};

/// A partition of `{0, .., n-1}`; every element is labelled by the least
/// member of its block.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    labels: Vec<usize>,
}

impl Partition {
    /// Canonicalizes arbitrary block ids.
    pub fn from_blocks(ids: &[usize]) -> Partition {
        let mut first = std::collections::HashMap::new();
        let labels = ids
            .iter()
            .enumerate()
            .map(|(i, b)| *first.entry(*b).or_insert(i))
            .collect();
        Partition { labels }
    }

    /// The partition of an equivalence relation, or `None` if `rel` is not one.
    pub fn from_relation(n: usize, rel: impl Fn(usize, usize) -> bool) -> Option<Partition> {
        let mut labels = vec![usize::MAX; n];
        for i in 0..n {
            if labels[i] != usize::MAX {
                continue;
            }
            for (j, label) in labels.iter_mut().enumerate().skip(i) {
                if rel(i, j) {
                    if *label != usize::MAX {
                        return None;
                    }
                    *label = i;
                }
            }
        }
        let p = Partition { labels };
        for i in 0..n {
            for j in 0..n {
                if rel(i, j) != p.related(i, j) {
                    return None;
                }
            }
        }
        Some(p)
    }

    /// Δ: every block a singleton.
    pub fn discrete(n: usize) -> Partition {
        Partition { labels: (0..n).collect() }
    }

    /// ∇: a single block.
    pub fn full(n: usize) -> Partition {
        Partition { labels: vec![0; n] }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> usize {
        self.labels[i]
    }

    pub fn related(&self, i: usize, j: usize) -> bool {
        self.labels[i] == self.labels[j]
    }

    pub fn block_count(&self) -> usize {
        self.labels.iter().enumerate().filter(|(i, l)| *i == **l).count()
    }

    /// Blocks in order of least member, members ascending.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        let mut pos = vec![usize::MAX; self.len()];
        for (i, &l) in self.labels.iter().enumerate() {
            if i == l {
                pos[i] = out.len();
                out.push(vec![i]);
            } else {
                out[pos[l]].push(i);
            }
        }
        out
    }

    /// Position of `i`'s block in [`Partition::blocks`] order.
    pub fn block_index(&self, i: usize) -> usize {
        let l = self.labels[i];
        self.labels[..=l].iter().enumerate().filter(|(k, m)| k == *m).count() - 1
    }

    pub fn is_discrete(&self) -> bool {
        self.labels.iter().enumerate().all(|(i, &l)| i == l)
    }

    pub fn is_full(&self) -> bool {
        self.labels.iter().all(|&l| l == 0)
    }

    /// Whether every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        (0..self.len()).all(|i| other.related(i, self.labels[i]))
    }

    pub fn meet(&self, other: &Partition) -> Partition {
        let ids: Vec<usize> = (0..self.len())
            .map(|i| self.labels[i] * self.len() + other.labels[i])
            .collect();
        Partition::from_blocks(&ids)
    }

    pub fn join(&self, other: &Partition) -> Partition {
        let mut d = Dsu::from_partition(self);
        for i in 0..other.len() {
            d.union(i, other.labels[i]);
        }
        d.partition()
    }

    /// Blocks written with element names, e.g. `{T} {F,U}`.
    pub fn describe(&self, names: &[String]) -> String {
        self.blocks()
            .iter()
            .map(|b| format!("{{{}}}", b.iter().map(|&i| names[i].as_str()).collect::<Vec<_>>().join(",")))
            .collect::<Vec<_>>()
            .join(" ")
    }

    fn sort_key(&self) -> (std::cmp::Reverse<usize>, &[usize]) {
        (std::cmp::Reverse(self.block_count()), &self.labels)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.len()).map(|i| i.to_string()).collect();
        f.write_str(&self.describe(&names))
    }
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Dsu {
        Dsu { parent: (0..n).collect() }
    }

    fn from_partition(p: &Partition) -> Dsu {
        Dsu { parent: p.labels.clone() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // keep the smaller index as root
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    fn partition(&mut self) -> Partition {
        let ids: Vec<usize> = (0..self.parent.len()).map(|i| self.find(i)).collect();
        Partition::from_blocks(&ids)
    }
}

/// A partition of an ada's carrier closed under ¬, ∧, ∨ and ↓.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Congruence {
    partition: Partition,
}

impl Congruence {
    pub fn new(a: &Ada, partition: Partition) -> Result<Congruence> {
        if partition.len() != a.len() {
            return Err(Error::NotCongruence(format!(
                "partition of {} elements for a carrier of {}",
                partition.len(),
                a.len()
            )));
        }
        if let Some(msg) = substitution_violation(a, &partition) {
            return Err(Error::NotCongruence(msg));
        }
        Ok(Congruence { partition })
    }

    pub fn discrete(a: &Ada) -> Congruence {
        Congruence { partition: Partition::discrete(a.len()) }
    }

    pub fn full(a: &Ada) -> Congruence {
        Congruence { partition: Partition::full(a.len()) }
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn related(&self, x: ElemId, y: ElemId) -> bool {
        self.partition.related(x.0, y.0)
    }

    pub fn is_proper(&self) -> bool {
        !self.partition.is_full()
    }
}

/// The two-sorted congruence (σ, τ) of a C-set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CSetCongruence {
    pub sigma: Partition,
    pub tau: Congruence,
}

fn substitution_violation(a: &Ada, p: &Partition) -> Option<String> {
    let nm = |i: usize| a.name(ElemId(i));
    for x in 0..a.len() {
        let r = p.label(x);
        if r == x {
            continue;
        }
        let (ex, er) = (ElemId(x), ElemId(r));
        if !p.related(a.neg(ex).0, a.neg(er).0) {
            return Some(format!("{} ~ {} but their negations are not related", nm(x), nm(r)));
        }
        if !p.related(a.down(ex).0, a.down(er).0) {
            return Some(format!("{} ~ {} but their down values are not related", nm(x), nm(r)));
        }
        for z in a.elements() {
            let checks = [
                ("&", a.and(ex, z), a.and(er, z), true),
                ("|", a.or(ex, z), a.or(er, z), true),
                ("&", a.and(z, ex), a.and(z, er), false),
                ("|", a.or(z, ex), a.or(z, er), false),
            ];
            for (op, v, w, left) in checks {
                if !p.related(v.0, w.0) {
                    let (l, r2) = if left {
                        (format!("{} {op} {}", nm(x), a.name(z)), format!("{} {op} {}", nm(r), a.name(z)))
                    } else {
                        (format!("{} {op} {}", a.name(z), nm(x)), format!("{} {op} {}", a.name(z), nm(r)))
                    };
                    return Some(format!("{} ~ {} but {l} and {r2} are not related", nm(x), nm(r)));
                }
            }
        }
    }
    None
}

fn close(a: &Ada, d: &mut Dsu) -> Partition {
    loop {
        let mut changed = false;
        for x in 0..a.len() {
            let r = d.find(x);
            if r == x {
                continue;
            }
            let (ex, er) = (ElemId(x), ElemId(r));
            changed |= d.union(a.neg(ex).0, a.neg(er).0);
            changed |= d.union(a.down(ex).0, a.down(er).0);
            for z in a.elements() {
                changed |= d.union(a.and(ex, z).0, a.and(er, z).0);
                changed |= d.union(a.or(ex, z).0, a.or(er, z).0);
                changed |= d.union(a.and(z, ex).0, a.and(z, er).0);
                changed |= d.union(a.or(z, ex).0, a.or(z, er).0);
            }
        }
        if !changed {
            return d.partition();
        }
    }
}

/// The least congruence containing every pair in `seed`.
pub fn congruence_closure(a: &Ada, seed: &[(ElemId, ElemId)]) -> Congruence {
    let mut d = Dsu::new(a.len());
    for &(x, y) in seed {
        d.union(x.0, y.0);
    }
    Congruence { partition: close(a, &mut d) }
}

/// The least congruence containing the partition `p` (and hence its join
/// with any congruence it was built from).
pub fn closure_of_partition(a: &Ada, p: &Partition) -> Congruence {
    let mut d = Dsu::from_partition(p);
    Congruence { partition: close(a, &mut d) }
}

fn sort_congruences(v: &mut [Congruence]) {
    v.sort_by(|x, y| x.partition.sort_key().cmp(&y.partition.sort_key()));
}

/// Every congruence of `a`, finest first.
pub fn all_congruences(a: &Ada, limits: &Limits) -> Result<Vec<Congruence>> {
    limits.carrier("congruence lattice carrier", a.len() as u128)?;
    let mut found: BTreeSet<Partition> = BTreeSet::new();
    found.insert(Partition::discrete(a.len()));
    for x in 0..a.len() {
        for y in x + 1..a.len() {
            found.insert(congruence_closure(a, &[(ElemId(x), ElemId(y))]).partition);
        }
    }
    let mut frontier: Vec<Partition> = found.iter().cloned().collect();
    while !frontier.is_empty() {
        let current: Vec<Partition> = found.iter().cloned().collect();
        let mut next = Vec::new();
        for p in &frontier {
            for q in &current {
                let j = closure_of_partition(a, &p.join(q)).partition;
                if !found.contains(&j) {
                    found.insert(j.clone());
                    next.push(j);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Congruence> = found.into_iter().map(|partition| Congruence { partition }).collect();
    sort_congruences(&mut out);
    Ok(out)
}

/// Carriers up to this size get their maximal congruences read off the full
/// lattice.
const LATTICE_LIMIT: usize = 12;

/// The maximal proper congruences of `a`.
pub fn maximal_congruences(a: &Ada) -> Result<Vec<Congruence>> {
    if a.len() < 2 {
        return Err(Error::TrivialAlgebra);
    }
    if a.len() <= LATTICE_LIMIT {
        let all = all_congruences(a, &Limits::default())?;
        let proper: Vec<&Congruence> = all.iter().filter(|c| c.is_proper()).collect();
        let out = proper
            .iter()
            .filter(|c| {
                !proper
                    .iter()
                    .any(|d| d.partition != c.partition && c.partition.refines(&d.partition))
            })
            .map(|c| (*c).clone())
            .collect();
        Ok(out)
    } else {
        maximal_by_atoms(a)
    }
}

/// Maximal congruences as kernels of the maps onto 3 induced by the atoms of
/// the Boolean part `{α : α↓ = α}`.
pub fn maximal_by_atoms(a: &Ada) -> Result<Vec<Congruence>> {
    if a.len() < 2 {
        return Err(Error::TrivialAlgebra);
    }
    let boolean: Vec<ElemId> = a.elements().filter(|&x| a.down(x) == x).collect();
    let below = |p: ElemId, q: ElemId| a.and(p, q) == p;
    let atoms: Vec<ElemId> = boolean
        .iter()
        .copied()
        .filter(|&p| p != a.f())
        .filter(|&p| !boolean.iter().any(|&q| q != p && q != a.f() && below(q, p)))
        .collect();
    let mut out = BTreeSet::new();
    for p in atoms {
        let ids: Vec<usize> = a
            .elements()
            .map(|x| {
                if below(p, a.down(x)) {
                    0
                } else if below(p, a.down(a.neg(x))) {
                    1
                } else {
                    2
                }
            })
            .collect();
        let partition = Partition::from_blocks(&ids);
        let c = Congruence::new(a, partition).map_err(|e| {
            Error::ModelInconsistency(format!("atom {} does not induce a congruence: {e}", a.name(p)))
        })?;
        out.insert(c);
    }
    let mut out: Vec<Congruence> = out.into_iter().collect();
    sort_congruences(&mut out);
    Ok(out)
}

/// The quotient ada and the projection onto it. Quotient elements are named
/// after the least member of their class.
pub fn quotient_ada(a: &Ada, p: &Partition) -> Result<(Ada, Vec<ElemId>)> {
    let c = Congruence::new(a, p.clone())?;
    let p = c.partition;
    let blocks = p.blocks();
    let proj: Vec<ElemId> = (0..a.len()).map(|i| ElemId(p.block_index(i))).collect();
    let names = blocks.iter().map(|b| a.name(ElemId(b[0])).to_string()).collect();
    let rep = |k: usize| ElemId(blocks[k][0]);
    let k = blocks.len();
    let neg = (0..k).map(|i| proj[a.neg(rep(i)).0]).collect();
    let down = (0..k).map(|i| proj[a.down(rep(i)).0]).collect();
    let mut and = Vec::with_capacity(k * k);
    let mut or = Vec::with_capacity(k * k);
    for i in 0..k {
        for j in 0..k {
            and.push(proj[a.and(rep(i), rep(j)).0]);
            or.push(proj[a.or(rep(i), rep(j)).0]);
        }
    }
    let base = crate::algebra::CAlgebra::new(
        names,
        neg,
        and,
        or,
        proj[a.t().0],
        proj[a.f().0],
        proj[a.u().0],
    )?;
    Ok((Ada::new(base, down)?, proj))
}

/// The constant-preserving isomorphism onto 3, if `a` is isomorphic to 3.
pub fn iso_to_three(a: &Ada) -> Option<Vec<Three>> {
    if a.len() != 3 {
        return None;
    }
    let (t, f, u) = (a.t(), a.f(), a.u());
    if t == f || t == u || f == u {
        return None;
    }
    let mut map = vec![Three::U; 3];
    map[t.0] = Three::T;
    map[f.0] = Three::F;
    map[u.0] = Three::U;
    let three = crate::algebra::mk_three();
    let img = |x: ElemId| ElemId(map[x.0].index());
    for x in a.elements() {
        if img(a.neg(x)) != three.neg(img(x)) || img(a.down(x)) != three.down(img(x)) {
            return None;
        }
        for y in a.elements() {
            if img(a.and(x, y)) != three.and(img(x), img(y)) || img(a.or(x, y)) != three.or(img(x), img(y)) {
                return None;
            }
        }
    }
    Some(map)
}

/// No two of T, F, U are related by `theta`.
pub fn check_prop_max_theta(a: &Ada, theta: &Partition) -> AxiomReport {
    let mut r = AxiomReport::new();
    for (label, x, y) in [("T-F separated", a.t(), a.f()), ("T-U separated", a.t(), a.u()), ("F-U separated", a.f(), a.u())] {
        r.push(law(label, &[], |_| (!theta.related(x.0, y.0)).into()));
    }
    r
}

/// The equivalence E_θ on programs, with the witnessing test for each related pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ETheta {
    partition: Partition,
    witness: Vec<Option<ElemId>>,
}

impl ETheta {
    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn related(&self, s: ElemId, t: ElemId) -> bool {
        self.partition.related(s.0, t.0)
    }

    /// The first β in the T-class with β[s, t] = β[t, t].
    pub fn witness(&self, s: ElemId, t: ElemId) -> Option<ElemId> {
        self.witness[s.0 * self.partition.len() + t.0]
    }
}

/// E_θ = {(s, t) : β[s, t] = β[t, t] for some β θ-related to T}.
pub fn e_theta(cs: &CSet, theta: &Partition) -> Result<ETheta> {
    let m = cs.calg();
    let n = cs.programs().len();
    let t_class: Vec<ElemId> = m.elements().filter(|b| theta.related(b.0, m.t().0)).collect();
    let mut witness = vec![None; n * n];
    for s in 0..n {
        for t in 0..n {
            witness[s * n + t] = t_class
                .iter()
                .copied()
                .find(|&b| cs.act(b, ElemId(s), ElemId(t)) == cs.act(b, ElemId(t), ElemId(t)));
        }
    }
    let partition = Partition::from_relation(n, |s, t| witness[s * n + t].is_some()).ok_or_else(|| {
        Error::ModelInconsistency(format!(
            "E_theta for {} is not an equivalence relation",
            theta.describe(m.names())
        ))
    })?;
    Ok(ETheta { partition, witness })
}

/// Checks that (σ, τ) has the two-sorted substitution property.
pub fn check_cset_congruence(cs: &CSet, sigma: &Partition, tau: &Partition) -> AxiomResult {
    cset_congruence_result("C-set congruence", cs, sigma, tau)
}

fn cset_congruence_result(label: &str, cs: &CSet, sigma: &Partition, tau: &Partition) -> AxiomResult {
    let (pn, tn) = (cs.programs().names(), cs.calg().names());
    let n = pn.len();
    let pairs = |p: &Partition, k: usize| -> Vec<(usize, usize)> {
        (0..k).flat_map(|x| (0..k).map(move |y| (x, y))).filter(|&(x, y)| p.related(x, y)).collect()
    };
    let sp = pairs(sigma, n);
    let tp = pairs(tau, tn.len());
    let mut checked = 0u64;
    for &(s, t) in &sp {
        for &(u, v) in &sp {
            for &(a, b) in &tp {
                checked += 1;
                let l = cs.act(ElemId(a), ElemId(s), ElemId(u));
                let r = cs.act(ElemId(b), ElemId(t), ElemId(v));
                if !sigma.related(l.0, r.0) {
                    let w = [("s", &pn[s]), ("t", &pn[t]), ("u", &pn[u]), ("v", &pn[v]), ("a", &tn[a]), ("b", &tn[b])];
                    let w = Witness::new(w.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect());
                    let mut r = AxiomResult::fail(label, w);
                    r.checked = checked;
                    return r;
                }
            }
        }
    }
    AxiomResult::pass(label, checked)
}

/// A maximal congruence together with its E_θ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaData {
    pub theta: Congruence,
    pub e: ETheta,
}

/// Every maximal congruence of the C-set's ada, with E_θ computed for each.
pub fn theta_data(cs: &CSet) -> Result<Vec<ThetaData>> {
    let ada = cs.tests().require_ada()?;
    maximal_congruences(ada)?
        .into_iter()
        .map(|theta| {
            let e = e_theta(cs, theta.partition())?;
            Ok(ThetaData { theta, e })
        })
        .collect()
}

pub(crate) fn theta_names(k: usize) -> Vec<String> {
    (0..k).map(|i| format!("theta{i}")).collect()
}

/// Clauses (i)–(v) of the maximal-congruence collection properties of a C-set
/// over an ada.
pub fn check_collection_props(cs: &CSet) -> Result<AxiomReport> {
    let ada = cs.tests().require_ada()?;
    let data = theta_data(cs)?;
    let m = cs.calg();
    let (pn, tn) = (cs.programs().names(), m.names());
    let thn = theta_names(data.len());
    let id = ElemId;
    let bot = cs.programs().bot();
    let mut r = AxiomReport::new();

    r.push(law("(i)", &[dom("theta", &thn), dom("a", tn), dom("s", pn), dom("t", pn)], |w| {
        let d = &data[w[0]];
        let (a, s, t) = (id(w[1]), id(w[2]), id(w[3]));
        let v = cs.act(a, s, t);
        let target = if d.theta.related(a, m.t()) {
            s
        } else if d.theta.related(a, m.f()) {
            t
        } else if d.theta.related(a, m.u()) {
            bot
        } else {
            return Verdict::Fails;
        };
        d.e.related(v, target).into()
    }));

    let mut ii = AxiomResult::pass("(ii)", 0);
    for (k, d) in data.iter().enumerate() {
        let res = cset_congruence_result("(ii)", cs, d.e.partition(), d.theta.partition());
        ii.checked += res.checked;
        if let Some(w) = res.witness() {
            let mut b = vec![("theta".to_string(), thn[k].clone())];
            b.extend(w.bindings.iter().cloned());
            ii = AxiomResult::fail("(ii)", Witness::new(b));
            break;
        }
    }
    r.push(ii);

    let mm = mm_c_set(cs.tests());
    let mm_e: Vec<ETheta> = data
        .iter()
        .map(|d| e_theta(&mm, d.theta.partition()))
        .collect::<Result<_>>()?;
    r.push(law("(iii)", &[dom("theta", &thn), dom("a", tn), dom("b", tn)], |w| {
        let (a, b) = (id(w[1]), id(w[2]));
        if !mm_e[w[0]].related(a, b) {
            return Verdict::Vacuous;
        }
        data[w[0]].theta.related(a, b).into()
    }));

    let e_meet = data
        .iter()
        .fold(Partition::full(pn.len()), |acc, d| acc.meet(d.e.partition()));
    r.push(law("(iv)", &[dom("s", pn), dom("t", pn)], |w| {
        (w[0] == w[1] || !e_meet.related(w[0], w[1])).into()
    }));

    let theta_meet = data
        .iter()
        .fold(Partition::full(ada.len()), |acc, d| acc.meet(d.theta.partition()));
    r.push(law("(v)", &[dom("a", tn), dom("b", tn)], |w| {
        (w[0] == w[1] || !theta_meet.related(w[0], w[1])).into()
    }));
    Ok(r)
}

/// Clauses (i)–(vi) relating q ∘ T, the maximal congruences and E_θ.
pub fn check_rho_hom_props(cm: &CMonoid) -> Result<AxiomReport> {
    let data = theta_data(cm.cset())?;
    let m = cm.calg();
    let (pn, tn) = (cm.programs().names(), m.names());
    let thn = theta_names(data.len());
    let id = ElemId;
    let (one, bot) = (cm.one(), cm.bot());
    let (t, f, u) = (m.t(), m.f(), m.u());
    let mut r = AxiomReport::new();

    r.push(law("(i)", &[dom("q", pn)], |w| {
        let q = id(w[0]);
        (cm.act(cm.comp(q, t), q, bot) == q).into()
    }));
    r.push(law("(ii)", &[dom("theta", &thn), dom("q", pn)], |w| {
        (!data[w[0]].theta.related(cm.comp(id(w[1]), t), f)).into()
    }));
    r.push(law("(iii)", &[dom("theta", &thn), dom("q", pn)], |w| {
        let (d, q) = (&data[w[0]], id(w[1]));
        (d.theta.related(cm.comp(q, t), u) == d.e.related(q, bot)).into()
    }));
    r.push(law("(iv)", &[dom("theta", &thn), dom("q", pn)], |w| {
        let (d, q) = (&data[w[0]], id(w[1]));
        let x = d.theta.related(cm.comp(q, t), t);
        let y = d.theta.related(cm.comp(q, f), f);
        let z = !d.e.related(q, bot);
        (x == y && y == z).into()
    }));
    r.push(law("(v)", &[dom("theta", &thn), dom("s", pn), dom("t", pn), dom("a", tn)], |w| {
        let d = &data[w[0]];
        let (s, t, a) = (id(w[1]), id(w[2]), id(w[3]));
        if !d.e.related(s, t) {
            return Verdict::Vacuous;
        }
        d.theta.related(cm.comp(s, a), cm.comp(t, a)).into()
    }));
    r.push(law("(vi)", &[dom("theta", &thn)], |w| (!data[w[0]].e.related(one, bot)).into()));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{mk_three, mk_trivial_ada, power_ada};

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn partition_canonical_labels() {
        let p = Partition::from_blocks(&[7, 3, 7, 3, 9]);
        assert_eq!(p.labels(), &[0, 1, 0, 1, 4]);
        assert_eq!(p.blocks(), vec![vec![0, 2], vec![1, 3], vec![4]]);
        assert_eq!(p.block_index(4), 2);
        assert_eq!(p.block_count(), 3);
    }

    #[test]
    fn from_relation_rejects_non_equivalences() {
        assert!(Partition::from_relation(3, |i, j| i <= j).is_none());
        assert_eq!(Partition::from_relation(3, |i, j| i == j), Some(Partition::discrete(3)));
    }

    #[test]
    fn closure_on_three() {
        let a = mk_three();
        assert!(congruence_closure(&a, &[]).partition().is_discrete());
        assert!(congruence_closure(&a, &[(a.t(), a.f())]).partition().is_full());
    }

    #[test]
    fn three_is_simple() {
        let a = mk_three();
        let all = all_congruences(&a, &lim()).unwrap();
        assert_eq!(all.len(), 2);
        let max = maximal_congruences(&a).unwrap();
        assert_eq!(max.len(), 1);
        assert!(max[0].partition().is_discrete());
    }

    #[test]
    fn trivial_ada_has_no_maximal_congruence() {
        let a = mk_trivial_ada();
        assert_eq!(all_congruences(&a, &lim()).unwrap().len(), 1);
        assert_eq!(maximal_congruences(&a).unwrap_err(), Error::TrivialAlgebra);
    }

    #[test]
    fn atoms_agree_with_lattice_on_square() {
        let a = power_ada(2, &lim()).unwrap();
        assert_eq!(maximal_congruences(&a).unwrap(), maximal_by_atoms(&a).unwrap());
    }

    #[test]
    fn quotient_by_full_is_trivial() {
        let a = mk_three();
        let (q, proj) = quotient_ada(&a, &Partition::full(3)).unwrap();
        assert_eq!(q.len(), 1);
        assert!(proj.iter().all(|e| e.0 == 0));
    }

    #[test]
    fn quotient_rejects_non_congruence() {
        let a = mk_three();
        let p = Partition::from_blocks(&[0, 0, 1]);
        assert!(matches!(quotient_ada(&a, &p), Err(Error::NotCongruence(_))));
    }

    #[test]
    fn prop_max_theta_flags_full() {
        let a = mk_three();
        assert!(check_prop_max_theta(&a, &Partition::discrete(3)).passed());
        assert!(!check_prop_max_theta(&a, &Partition::full(3)).passed());
    }

    #[test]
    fn iso_to_three_checks() {
        let a = mk_three();
        assert_eq!(iso_to_three(&a), Some(vec![Three::T, Three::F, Three::U]));
        assert_eq!(iso_to_three(&power_ada(2, &lim()).unwrap()), None);
    }

    #[test]
    fn collection_and_rho_props_on_concrete_models() {
        use crate::functional::{basic_c_monoid, functional_c_monoid, pointwise_c_monoid, three_element_monoid, two_element_monoid};
        let models = vec![
            functional_c_monoid(1, &lim()).unwrap(),
            functional_c_monoid(2, &lim()).unwrap(),
            basic_c_monoid(two_element_monoid()).unwrap(),
            basic_c_monoid(three_element_monoid()).unwrap(),
            pointwise_c_monoid(&three_element_monoid(), 1, &lim()).unwrap(),
        ];
        for cm in &models {
            let r = check_collection_props(cm.cset()).unwrap();
            assert!(r.passed(), "{r}");
            let r = check_rho_hom_props(cm).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn e_theta_on_basic_is_diagonal() {
        use crate::functional::{basic_c_monoid, three_element_monoid};
        let cm = basic_c_monoid(three_element_monoid()).unwrap();
        let e = e_theta(cm.cset(), &Partition::discrete(3)).unwrap();
        assert!(e.partition().is_discrete());
        let e = e_theta(cm.cset(), &Partition::full(3)).unwrap();
        assert!(e.partition().is_full());
    }
}
