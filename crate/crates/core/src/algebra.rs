//! Finite C-algebras, adas and Boolean algebras given by operation tables.

use std::fmt;

use crate::error::{structure, Error, Result};
use crate::pairs::{all_pairs, pair_index, PairOfSets};
use crate::report::{dom, law, AxiomReport};

/// Index into the carrier of the algebra that owns it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemId(pub usize);

impl ElemId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl From<usize> for ElemId {
    fn from(i: usize) -> Self {
        ElemId(i)
    }
}

impl fmt::Display for ElemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Caps guarding exhaustive constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest carrier any constructed algebra or program set may have.
    pub max_carrier: usize,
    /// Largest ground set for functional models built by identity search.
    pub max_x: usize,
    /// Largest number of variable assignments an identity search may visit.
    pub max_assignments: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_carrier: 64,
            max_x: 3,
            max_assignments: 100_000_000,
        }
    }
}

impl Limits {
    pub(crate) fn carrier(&self, what: &str, size: u128) -> Result<()> {
        if size > self.max_carrier as u128 {
            return Err(Error::SizeCap {
                what: what.to_string(),
                size,
                cap: self.max_carrier as u128,
            });
        }
        Ok(())
    }
}

pub(crate) fn check_names(table: &str, names: &[String]) -> Result<()> {
    for (i, n) in names.iter().enumerate() {
        if n.is_empty() || n.chars().any(char::is_whitespace) {
            return Err(structure(table, format!("element {i} has an invalid name {n:?}")));
        }
        if names[..i].contains(n) {
            return Err(structure(table, format!("duplicate element name {n:?}")));
        }
    }
    Ok(())
}

pub(crate) fn check_unary(table: &str, n: usize, values: &[ElemId]) -> Result<()> {
    if values.len() != n {
        return Err(structure(table, format!("expected {n} entries, found {}", values.len())));
    }
    if let Some(i) = values.iter().position(|v| v.0 >= n) {
        return Err(structure(table, format!("entry {i} out of range")));
    }
    Ok(())
}

pub(crate) fn check_binary(table: &str, rows: usize, cols: usize, range: usize, values: &[ElemId]) -> Result<()> {
    if values.len() != rows * cols {
        return Err(structure(table, format!("expected {rows}x{cols} entries, found {}", values.len())));
    }
    if let Some(i) = values.iter().position(|v| v.0 >= range) {
        return Err(structure(table, format!("row {} has an out-of-range entry", i / cols)));
    }
    Ok(())
}

fn check_constant(table: &str, n: usize, c: ElemId) -> Result<()> {
    if c.0 >= n {
        return Err(structure(table, format!("constant {} out of range", c.0)));
    }
    Ok(())
}

/// An algebra ⟨M, ∨, ∧, ¬⟩ with designated T, F, U.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CAlgebra {
    names: Vec<String>,
    neg: Vec<ElemId>,
    and: Vec<ElemId>,
    or: Vec<ElemId>,
    t: ElemId,
    f: ElemId,
    u: ElemId,
}

impl CAlgebra {
    /// Builds an algebra after validating table shapes. The C-axioms are not
    /// assumed; use [`check_c_algebra`].
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        names: Vec<String>,
        neg: Vec<ElemId>,
        and: Vec<ElemId>,
        or: Vec<ElemId>,
        t: ElemId,
        f: ElemId,
        u: ElemId,
    ) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(structure("carrier", "empty"));
        }
        check_names("carrier", &names)?;
        check_unary("neg", n, &neg)?;
        check_binary("and", n, n, n, &and)?;
        check_binary("or", n, n, n, &or)?;
        check_constant("T", n, t)?;
        check_constant("F", n, f)?;
        check_constant("U", n, u)?;
        if n > 1 && (t == f || t == u || f == u) {
            return Err(structure("constants", "T, F, U must be distinct in a non-trivial algebra"));
        }
        Ok(CAlgebra {
            names,
            neg,
            and,
            or,
            t,
            f,
            u,
        })
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

    pub fn name(&self, a: ElemId) -> &str {
        &self.names[a.0]
    }

    pub fn find(&self, name: &str) -> Option<ElemId> {
        self.names.iter().position(|n| n == name).map(ElemId)
    }

    pub fn elements(&self) -> impl Iterator<Item = ElemId> {
        (0..self.len()).map(ElemId)
    }

    pub fn t(&self) -> ElemId {
        self.t
    }

    pub fn f(&self) -> ElemId {
        self.f
    }

    pub fn u(&self) -> ElemId {
        self.u
    }

    pub fn neg(&self, a: ElemId) -> ElemId {
        self.neg[a.0]
    }

    pub fn and(&self, a: ElemId, b: ElemId) -> ElemId {
        self.and[a.0 * self.len() + b.0]
    }

    pub fn or(&self, a: ElemId, b: ElemId) -> ElemId {
        self.or[a.0 * self.len() + b.0]
    }

    pub fn neg_table(&self) -> &[ElemId] {
        &self.neg
    }

    pub fn and_table(&self) -> &[ElemId] {
        &self.and
    }

    pub fn or_table(&self) -> &[ElemId] {
        &self.or
    }

    pub fn patch_neg(&mut self, a: ElemId, v: ElemId) {
        assert!(v.0 < self.len());
        self.neg[a.0] = v;
    }

    pub fn patch_and(&mut self, a: ElemId, b: ElemId, v: ElemId) {
        assert!(v.0 < self.len());
        let n = self.len();
        self.and[a.0 * n + b.0] = v;
    }

    pub fn patch_or(&mut self, a: ElemId, b: ElemId, v: ElemId) {
        assert!(v.0 < self.len());
        let n = self.len();
        self.or[a.0 * n + b.0] = v;
    }
}

/// A C-algebra with T, F, U and a halting oracle `↓`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ada {
    base: CAlgebra,
    down: Vec<ElemId>,
}

impl Ada {
    pub fn new(base: CAlgebra, down: Vec<ElemId>) -> Result<Self> {
        check_unary("down", base.len(), &down)?;
        Ok(Ada { base, down })
    }

    pub fn base(&self) -> &CAlgebra {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }

    pub fn down(&self, a: ElemId) -> ElemId {
        self.down[a.0]
    }

    pub fn down_table(&self) -> &[ElemId] {
        &self.down
    }

    pub fn patch_down(&mut self, a: ElemId, v: ElemId) {
        assert!(v.0 < self.len());
        self.down[a.0] = v;
    }

    pub fn base_mut(&mut self) -> &mut CAlgebra {
        &mut self.base
    }
}

impl std::ops::Deref for Ada {
    type Target = CAlgebra;

    fn deref(&self) -> &CAlgebra {
        &self.base
    }
}

/// A finite Boolean algebra ⟨Q, ∨, ∧, ¬, T, F⟩.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoolAlg {
    names: Vec<String>,
    neg: Vec<ElemId>,
    and: Vec<ElemId>,
    or: Vec<ElemId>,
    t: ElemId,
    f: ElemId,
}

impl BoolAlg {
    pub fn new(
        names: Vec<String>,
        neg: Vec<ElemId>,
        and: Vec<ElemId>,
        or: Vec<ElemId>,
        t: ElemId,
        f: ElemId,
    ) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(structure("carrier", "empty"));
        }
        check_names("carrier", &names)?;
        check_unary("neg", n, &neg)?;
        check_binary("and", n, n, n, &and)?;
        check_binary("or", n, n, n, &or)?;
        check_constant("T", n, t)?;
        check_constant("F", n, f)?;
        Ok(BoolAlg {
            names,
            neg,
            and,
            or,
            t,
            f,
        })
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

    pub fn find(&self, name: &str) -> Option<ElemId> {
        self.names.iter().position(|n| n == name).map(ElemId)
    }

    pub fn t(&self) -> ElemId {
        self.t
    }

    pub fn f(&self) -> ElemId {
        self.f
    }

    pub fn neg(&self, a: ElemId) -> ElemId {
        self.neg[a.0]
    }

    pub fn and(&self, a: ElemId, b: ElemId) -> ElemId {
        self.and[a.0 * self.len() + b.0]
    }

    pub fn or(&self, a: ElemId, b: ElemId) -> ElemId {
        self.or[a.0 * self.len() + b.0]
    }

    pub fn neg_table(&self) -> &[ElemId] {
        &self.neg
    }

    pub fn and_table(&self) -> &[ElemId] {
        &self.and
    }

    pub fn or_table(&self) -> &[ElemId] {
        &self.or
    }

    pub fn patch_neg(&mut self, a: ElemId, v: ElemId) {
        assert!(v.0 < self.len());
        self.neg[a.0] = v;
    }
}

fn ids(v: &[usize]) -> Vec<ElemId> {
    v.iter().copied().map(ElemId).collect()
}

fn strings(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// McCarthy's three-valued logic {T, F, U} as an ada.
pub fn mk_three() -> Ada {
    // carrier order T, F, U
    let base = CAlgebra::new(
        strings(&["T", "F", "U"]),
        ids(&[1, 0, 2]),
        ids(&[0, 1, 2, 1, 1, 1, 2, 2, 2]),
        ids(&[0, 0, 0, 0, 1, 2, 2, 2, 2]),
        ElemId(0),
        ElemId(1),
        ElemId(2),
    )
    .expect("three-element tables are well formed");
    Ada::new(base, ids(&[0, 1, 1])).expect("three-element tables are well formed")
}

/// The two-element Boolean algebra {T, F}.
pub fn mk_two() -> BoolAlg {
    BoolAlg::new(
        strings(&["T", "F"]),
        ids(&[1, 0]),
        ids(&[0, 1, 1, 1]),
        ids(&[0, 0, 0, 1]),
        ElemId(0),
        ElemId(1),
    )
    .expect("two-element tables are well formed")
}

/// The one-element ada in which T = F = U.
pub fn mk_trivial_ada() -> Ada {
    let base = CAlgebra::new(
        strings(&["*"]),
        ids(&[0]),
        ids(&[0]),
        ids(&[0]),
        ElemId(0),
        ElemId(0),
        ElemId(0),
    )
    .expect("trivial tables are well formed");
    Ada::new(base, ids(&[0])).expect("trivial tables are well formed")
}

/// The ada 3^X over `x_size` points, with carrier ordered as [`all_pairs`].
pub fn power_ada(x_size: usize, limits: &Limits) -> Result<Ada> {
    let size = 3u128.checked_pow(x_size as u32).unwrap_or(u128::MAX);
    limits.carrier(&format!("3^{x_size}"), size)?;
    if x_size == 0 {
        return Ok(mk_trivial_ada());
    }
    let pairs: Vec<PairOfSets> = all_pairs(x_size).collect();
    let n = pairs.len();
    let names = pairs.iter().map(PairOfSets::name).collect();
    let neg = pairs.iter().map(|p| ElemId(pair_index(&p.neg()))).collect();
    let down = pairs.iter().map(|p| ElemId(pair_index(&p.down()))).collect();
    let mut and = Vec::with_capacity(n * n);
    let mut or = Vec::with_capacity(n * n);
    for p in &pairs {
        for q in &pairs {
            and.push(ElemId(pair_index(&p.and(q)?)));
            or.push(ElemId(pair_index(&p.or(q)?)));
        }
    }
    let t = ElemId(pair_index(&PairOfSets::all_true(x_size)));
    let f = ElemId(pair_index(&PairOfSets::all_false(x_size)));
    let u = ElemId(pair_index(&PairOfSets::undefined(x_size)));
    Ada::new(CAlgebra::new(names, neg, and, or, t, f, u)?, down)
}

/// The pointwise square of a Boolean algebra, with pairs ordered row-major.
pub fn bool_square(q: &BoolAlg) -> BoolAlg {
    let n = q.len();
    let enc = |a: ElemId, b: ElemId| ElemId(a.0 * n + b.0);
    let mut names = Vec::new();
    let mut neg = Vec::new();
    for a in 0..n {
        for b in 0..n {
            names.push(format!("{}:{}", q.names[a], q.names[b]));
            neg.push(enc(q.neg(ElemId(a)), q.neg(ElemId(b))));
        }
    }
    let mut and = Vec::new();
    let mut or = Vec::new();
    for x in 0..n * n {
        for y in 0..n * n {
            let (xa, xb) = (ElemId(x / n), ElemId(x % n));
            let (ya, yb) = (ElemId(y / n), ElemId(y % n));
            and.push(enc(q.and(xa, ya), q.and(xb, yb)));
            or.push(enc(q.or(xa, ya), q.or(xb, yb)));
        }
    }
    BoolAlg::new(names, neg, and, or, enc(q.t, q.t), enc(q.f, q.f)).expect("square tables are well formed")
}

/// Exhaustively checks C1–C7.
pub fn check_c_algebra(m: &CAlgebra) -> AxiomReport {
    let e = &m.names;
    let (a, b, c) = (dom("a", e), dom("b", e), dom("c", e));
    let id = |i: usize| ElemId(i);
    let mut r = AxiomReport::new();
    r.push(law("C1", &[a], |v| (m.neg(m.neg(id(v[0]))) == id(v[0])).into()));
    r.push(law("C2", &[a, b], |v| {
        let (x, y) = (id(v[0]), id(v[1]));
        (m.neg(m.and(x, y)) == m.or(m.neg(x), m.neg(y))).into()
    }));
    r.push(law("C3", &[a, b, c], |v| {
        let (x, y, z) = (id(v[0]), id(v[1]), id(v[2]));
        (m.and(m.and(x, y), z) == m.and(x, m.and(y, z))).into()
    }));
    r.push(law("C4", &[a, b, c], |v| {
        let (x, y, z) = (id(v[0]), id(v[1]), id(v[2]));
        (m.and(x, m.or(y, z)) == m.or(m.and(x, y), m.and(x, z))).into()
    }));
    r.push(law("C5", &[a, b, c], |v| {
        let (x, y, z) = (id(v[0]), id(v[1]), id(v[2]));
        let rhs = m.or(m.and(x, z), m.and(m.and(m.neg(x), y), z));
        (m.and(m.or(x, y), z) == rhs).into()
    }));
    r.push(law("C6", &[a, b], |v| {
        let (x, y) = (id(v[0]), id(v[1]));
        (m.or(x, m.and(x, y)) == x).into()
    }));
    r.push(law("C7", &[a, b], |v| {
        let (x, y) = (id(v[0]), id(v[1]));
        (m.or(m.and(x, y), m.and(y, x)) == m.or(m.and(y, x), m.and(x, y))).into()
    }));
    r
}

/// Laws fixing the designated constants: T is the two-sided identity for ∧,
/// F for ∨, and U is fixed by ¬.
pub fn check_constants(m: &CAlgebra) -> AxiomReport {
    let e = &m.names;
    let mut r = AxiomReport::new();
    r.push(law("T-and-identity", &[dom("a", e)], |v| {
        let x = ElemId(v[0]);
        (m.and(m.t, x) == x && m.and(x, m.t) == x).into()
    }));
    r.push(law("F-or-identity", &[dom("a", e)], |v| {
        let x = ElemId(v[0]);
        (m.or(m.f, x) == x && m.or(x, m.f) == x).into()
    }));
    r.push(law("U-neg-fixed", &[], |_| (m.neg(m.u) == m.u).into()));
    r
}

/// Exhaustively checks C1–C7, the constant laws and A1–A6.
pub fn check_ada(m: &Ada) -> AxiomReport {
    let mut r = check_c_algebra(&m.base);
    r.extend_prefixed("", check_constants(&m.base));
    let e = &m.base.names;
    let (a, b) = (dom("a", e), dom("b", e));
    let id = ElemId;
    let (t, f, u) = (m.t(), m.f(), m.u());
    // constant laws bind `a` to the constant so failures name it
    let (fs, us, ts) = ([m.name(f).to_string()], [m.name(u).to_string()], [m.name(t).to_string()]);
    r.push(law("A1", &[dom("a", &fs)], |_| (m.down(f) == f).into()));
    r.push(law("A2", &[dom("a", &us)], |_| (m.down(u) == f).into()));
    r.push(law("A3", &[dom("a", &ts)], |_| (m.down(t) == t).into()));
    r.push(law("A4", &[a, b], |v| {
        let (x, y) = (id(v[0]), id(v[1]));
        (m.and(x, m.down(y)) == m.and(x, m.down(m.and(x, y)))).into()
    }));
    r.push(law("A5", &[a], |v| {
        let d = m.down(id(v[0]));
        (m.or(d, m.neg(d)) == t).into()
    }));
    r.push(law("A6", &[a], |v| {
        let x = id(v[0]);
        (x == m.or(m.down(x), x)).into()
    }));
    r
}

/// Checks Huntington's axioms for a Boolean algebra.
pub fn check_bool(q: &BoolAlg) -> AxiomReport {
    let e = &q.names;
    let (a, b, c) = (dom("a", e), dom("b", e), dom("c", e));
    let id = ElemId;
    let mut r = AxiomReport::new();
    r.push(law("and-comm", &[a, b], |v| (q.and(id(v[0]), id(v[1])) == q.and(id(v[1]), id(v[0]))).into()));
    r.push(law("or-comm", &[a, b], |v| (q.or(id(v[0]), id(v[1])) == q.or(id(v[1]), id(v[0]))).into()));
    r.push(law("and-identity", &[a], |v| (q.and(id(v[0]), q.t) == id(v[0])).into()));
    r.push(law("or-identity", &[a], |v| (q.or(id(v[0]), q.f) == id(v[0])).into()));
    r.push(law("and-distrib", &[a, b, c], |v| {
        let (x, y, z) = (id(v[0]), id(v[1]), id(v[2]));
        (q.and(x, q.or(y, z)) == q.or(q.and(x, y), q.and(x, z))).into()
    }));
    r.push(law("or-distrib", &[a, b, c], |v| {
        let (x, y, z) = (id(v[0]), id(v[1]), id(v[2]));
        (q.or(x, q.and(y, z)) == q.and(q.or(x, y), q.or(x, z))).into()
    }));
    r.push(law("and-complement", &[a], |v| (q.and(id(v[0]), q.neg(id(v[0]))) == q.f).into()));
    r.push(law("or-complement", &[a], |v| (q.or(id(v[0]), q.neg(id(v[0]))) == q.t).into()));
    r
}
