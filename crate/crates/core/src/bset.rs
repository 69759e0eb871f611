//! The halting baseline: B-sets and B-monoids over a Boolean algebra of tests,
//! and the functional B-monoid (T(X), 2^X).

use crate::algebra::{check_binary, check_names, BoolAlg, ElemId, Limits};
use crate::error::{structure, Error, Result};
use crate::report::{dom, law, AxiomReport};

/// Programs `S` acted on by a Boolean algebra `Q` through `α[s, t]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BSet {
    names: Vec<String>,
    q: BoolAlg,
    act: Vec<ElemId>,
}

impl BSet {
    /// `act` is indexed `[α][s][t]`.
    pub fn new(names: Vec<String>, q: BoolAlg, act: Vec<ElemId>) -> Result<Self> {
        if names.is_empty() {
            return Err(structure("programs", "empty"));
        }
        check_names("programs", &names)?;
        let n = names.len();
        check_binary("act", q.len() * n, n, n, &act)?;
        Ok(BSet { names, q, act })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn find(&self, name: &str) -> Option<ElemId> {
        self.names.iter().position(|n| n == name).map(ElemId)
    }

    pub fn tests(&self) -> &BoolAlg {
        &self.q
    }

    pub fn act_table(&self) -> &[ElemId] {
        &self.act
    }

    pub fn act(&self, alpha: ElemId, s: ElemId, t: ElemId) -> ElemId {
        let n = self.len();
        self.act[(alpha.0 * n + s.0) * n + t.0]
    }

    pub fn patch_act(&mut self, alpha: ElemId, s: ElemId, t: ElemId, v: ElemId) {
        assert!(v.0 < self.len());
        let n = self.len();
        self.act[(alpha.0 * n + s.0) * n + t.0] = v;
    }
}

/// A B-set whose programs form a monoid, with program-test composition `∘`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BMonoid {
    base: BSet,
    one: ElemId,
    mul: Vec<ElemId>,
    comp: Vec<ElemId>,
}

impl BMonoid {
    /// `comp` is indexed `[s][α]`.
    pub fn new(base: BSet, one: ElemId, mul: Vec<ElemId>, comp: Vec<ElemId>) -> Result<Self> {
        let n = base.len();
        if one.0 >= n {
            return Err(structure("one", "out of range"));
        }
        check_binary("mul", n, n, n, &mul)?;
        check_binary("comp", n, base.q.len(), base.q.len(), &comp)?;
        Ok(BMonoid { base, one, mul, comp })
    }

    pub fn bset(&self) -> &BSet {
        &self.base
    }

    pub fn tests(&self) -> &BoolAlg {
        &self.base.q
    }

    pub fn one(&self) -> ElemId {
        self.one
    }

    pub fn mul_table(&self) -> &[ElemId] {
        &self.mul
    }

    pub fn comp_table(&self) -> &[ElemId] {
        &self.comp
    }

    pub fn mul(&self, s: ElemId, t: ElemId) -> ElemId {
        self.mul[s.0 * self.base.len() + t.0]
    }

    pub fn act(&self, alpha: ElemId, s: ElemId, t: ElemId) -> ElemId {
        self.base.act(alpha, s, t)
    }

    pub fn comp(&self, s: ElemId, alpha: ElemId) -> ElemId {
        self.comp[s.0 * self.base.q.len() + alpha.0]
    }

    pub fn patch_comp(&mut self, s: ElemId, alpha: ElemId, v: ElemId) {
        assert!(v.0 < self.base.q.len());
        let nq = self.base.q.len();
        self.comp[s.0 * nq + alpha.0] = v;
    }
}

/// Checks B1–B6.
pub fn check_b_set(bs: &BSet) -> AxiomReport {
    let q = &bs.q;
    let (pn, tn) = (bs.names(), q.names());
    let (s, t, u) = (dom("s", pn), dom("t", pn), dom("u", pn));
    let (a, b) = (dom("a", tn), dom("b", tn));
    let id = ElemId;
    let act = |x, y, z| bs.act(x, y, z);
    let mut r = AxiomReport::new();
    r.push(law("B1", &[s, a], |w| (act(id(w[1]), id(w[0]), id(w[0])) == id(w[0])).into()));
    r.push(law("B2", &[s, t, u, a], |w| {
        let (s, t, u, a) = (id(w[0]), id(w[1]), id(w[2]), id(w[3]));
        (act(a, act(a, s, t), u) == act(a, s, u)).into()
    }));
    r.push(law("B3", &[s, t, u, a], |w| {
        let (s, t, u, a) = (id(w[0]), id(w[1]), id(w[2]), id(w[3]));
        (act(a, s, act(a, t, u)) == act(a, s, u)).into()
    }));
    r.push(law("B4", &[s, t], |w| (act(q.f(), id(w[0]), id(w[1])) == id(w[1])).into()));
    r.push(law("B5", &[s, t, a], |w| {
        let (s, t, a) = (id(w[0]), id(w[1]), id(w[2]));
        (act(q.neg(a), s, t) == act(a, t, s)).into()
    }));
    r.push(law("B6", &[s, t, a, b], |w| {
        let (s, t, a, b) = (id(w[0]), id(w[1]), id(w[2]), id(w[3]));
        (act(q.and(a, b), s, t) == act(a, act(b, s, t), t)).into()
    }));
    r
}

/// Monoid laws, B1–B6 and BM1–BM8.
pub fn check_b_monoid(bm: &BMonoid) -> AxiomReport {
    let q = bm.tests();
    let (pn, tn) = (bm.base.names(), q.names());
    let (s, t, u) = (dom("s", pn), dom("t", pn), dom("u", pn));
    let (a, b) = (dom("a", tn), dom("b", tn));
    let id = ElemId;
    let one = bm.one;
    let mut r = AxiomReport::new();
    r.push(law("mul-assoc", &[s, t, u], |w| {
        let (s, t, u) = (id(w[0]), id(w[1]), id(w[2]));
        (bm.mul(bm.mul(s, t), u) == bm.mul(s, bm.mul(t, u))).into()
    }));
    r.push(law("one-identity", &[s], |w| {
        let s = id(w[0]);
        (bm.mul(one, s) == s && bm.mul(s, one) == s).into()
    }));
    r.extend_prefixed("", check_b_set(&bm.base));
    r.push(law("BM1", &[s], |w| (bm.comp(id(w[0]), q.t()) == q.t()).into()));
    r.push(law("BM2", &[s, a, b], |w| {
        let (s, a, b) = (id(w[0]), id(w[1]), id(w[2]));
        (q.and(bm.comp(s, a), bm.comp(s, b)) == bm.comp(s, q.and(a, b))).into()
    }));
    r.push(law("BM3", &[s, a], |w| {
        let (s, a) = (id(w[0]), id(w[1]));
        (bm.comp(s, q.neg(a)) == q.neg(bm.comp(s, a))).into()
    }));
    r.push(law("BM4", &[s, t, a], |w| {
        let (s, t, a) = (id(w[0]), id(w[1]), id(w[2]));
        (bm.comp(s, bm.comp(t, a)) == bm.comp(bm.mul(s, t), a)).into()
    }));
    r.push(law("BM5", &[s, t, u, a], |w| {
        let (s, t, u, a) = (id(w[0]), id(w[1]), id(w[2]), id(w[3]));
        (bm.mul(bm.act(a, s, t), u) == bm.act(a, bm.mul(s, u), bm.mul(t, u))).into()
    }));
    r.push(law("BM6", &[s, t, u, a], |w| {
        let (s, t, u, a) = (id(w[0]), id(w[1]), id(w[2]), id(w[3]));
        (bm.mul(s, bm.act(a, t, u)) == bm.act(bm.comp(s, a), bm.mul(s, t), bm.mul(s, u))).into()
    }));
    r.push(law("BM7", &[s, t, a, b], |w| {
        let (s, t, a, b) = (id(w[0]), id(w[1]), id(w[2]), id(w[3]));
        let rhs = q.or(q.and(b, bm.comp(s, a)), q.and(q.neg(b), bm.comp(t, a)));
        (bm.comp(bm.act(b, s, t), a) == rhs).into()
    }));
    r.push(law("BM8", &[a], |w| (bm.comp(one, id(w[0])) == id(w[0])).into()));
    r
}

/// The Boolean algebra 2^X over `x_size` points: maps X → {T, F} in
/// lexicographic order, first point most significant, T before F.
pub fn power_bool(x_size: usize, limits: &Limits) -> Result<BoolAlg> {
    let size = 2u128.checked_pow(x_size as u32).unwrap_or(u128::MAX);
    limits.carrier(&format!("2^{x_size}"), size)?;
    if x_size == 0 {
        return BoolAlg::new(vec!["*".into()], vec![ElemId(0)], vec![ElemId(0)], vec![ElemId(0)], ElemId(0), ElemId(0));
    }
    let n = size as usize;
    // bit (x_size - 1 - x) set means the test is false at x
    let full = n - 1;
    let names = (0..n)
        .map(|i| {
            (0..x_size)
                .map(|x| if i >> (x_size - 1 - x) & 1 == 1 { 'F' } else { 'T' })
                .collect()
        })
        .collect();
    let neg = (0..n).map(|i| ElemId(full & !i)).collect();
    let mut and = Vec::with_capacity(n * n);
    let mut or = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            and.push(ElemId(i | j));
            or.push(ElemId(i & j));
        }
    }
    BoolAlg::new(names, neg, and, or, ElemId(0), ElemId(full))
}

/// The functional B-monoid (T(X), 2^X): all self-maps of an `x_size`-point
/// set, `(f · g)(x) = g(f(x))` and `f ∘ α = {x : f(x) ∈ α}`.
pub fn functional_b_monoid(x_size: usize, limits: &Limits) -> Result<BMonoid> {
    if x_size == 0 {
        return Err(Error::Argument("functional models need at least one point".into()));
    }
    let count = (x_size as u128).checked_pow(x_size as u32).unwrap_or(u128::MAX);
    limits.carrier(&format!("T(X) for |X| = {x_size}"), count)?;
    let q = power_bool(x_size, limits)?;
    let count = count as usize;
    let maps: Vec<Vec<usize>> = (0..count)
        .map(|mut i| {
            let mut v = vec![0; x_size];
            for slot in v.iter_mut().rev() {
                *slot = i % x_size;
                i /= x_size;
            }
            v
        })
        .collect();
    let index = |v: &[usize]| v.iter().fold(0, |acc, &y| acc * x_size + y);
    let false_at = |alpha: usize, x: usize| alpha >> (x_size - 1 - x) & 1 == 1;
    let names = maps
        .iter()
        .map(|v| format!("g{}", v.iter().map(|y| y.to_string()).collect::<String>()))
        .collect();

    let mut act = Vec::with_capacity(q.len() * count * count);
    for alpha in 0..q.len() {
        for f in &maps {
            for g in &maps {
                let h: Vec<usize> = (0..x_size).map(|x| if false_at(alpha, x) { g[x] } else { f[x] }).collect();
                act.push(ElemId(index(&h)));
            }
        }
    }
    let base = BSet::new(names, q, act)?;

    let mut mul = Vec::with_capacity(count * count);
    for f in &maps {
        for g in &maps {
            let h: Vec<usize> = f.iter().map(|&y| g[y]).collect();
            mul.push(ElemId(index(&h)));
        }
    }
    let mut comp = Vec::with_capacity(count * base.q.len());
    for f in &maps {
        for alpha in 0..base.q.len() {
            let beta = (0..x_size)
                .filter(|&x| false_at(alpha, f[x]))
                .fold(0, |acc, x| acc | 1 << (x_size - 1 - x));
            comp.push(ElemId(beta));
        }
    }
    let one = ElemId(index(&(0..x_size).collect::<Vec<_>>()));
    BMonoid::new(base, one, mul, comp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::check_bool;

    #[test]
    fn power_bool_is_boolean() {
        for k in 0..4 {
            let q = power_bool(k, &Limits::default()).unwrap();
            assert_eq!(q.len(), 1 << k);
            assert!(check_bool(&q).passed());
        }
    }

    #[test]
    fn functional_b_monoid_passes() {
        for k in 1..=2 {
            let bm = functional_b_monoid(k, &Limits::default()).unwrap();
            let r = check_b_monoid(&bm);
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn corrupted_b4_reported() {
        let bm = functional_b_monoid(2, &Limits::default()).unwrap();
        let mut bs = bm.bset().clone();
        let f = bs.tests().f();
        let (s, t) = (ElemId(0), ElemId(1));
        bs.patch_act(f, s, t, s);
        let r = check_b_set(&bs);
        let w = r.get("B4").unwrap().witness().unwrap();
        assert_eq!(w.get("s"), Some("g00"));
        assert_eq!(w.get("t"), Some("g01"));
    }

    #[test]
    fn comp_is_preimage() {
        let bm = functional_b_monoid(2, &Limits::default()).unwrap();
        let q = bm.tests();
        // g11 sends both points to the second; α = TF is true only at the first
        let f = bm.bset().find("g11").unwrap();
        let alpha = q.find("TF").unwrap();
        assert_eq!(bm.comp(f, alpha), q.f());
    }
}
