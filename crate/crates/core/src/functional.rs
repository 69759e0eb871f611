//! Concrete C-monoids: base-point-fixing self-maps of X_⊥ with tests in 3^X,
//! the basic C-monoid (S_⊥, 3) and the pointwise C-monoid (S_⊥^X, 3^X).

use std::fmt;

use crate::actions::{CMonoid, CSet, PointedCarrier, TestAlgebra};
use crate::algebra::{mk_three, power_ada, ElemId, Limits};
use crate::error::{Error, Result};
use crate::pairs::{all_pairs, pair_index, PairOfSets, Three};

/// A self-map of `X_⊥ = {0, .., n-1} ∪ {⊥}` fixing ⊥, where ⊥ is point `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointedSelfMap {
    values: Vec<usize>,
}

impl PointedSelfMap {
    /// `values[x]` is the image of point `x`; `values.len()` is the base point.
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if values.iter().any(|&v| v > n) {
            return Err(Error::Argument(format!("map value out of range for {n} points")));
        }
        Ok(PointedSelfMap { values })
    }

    pub fn identity(n: usize) -> Self {
        PointedSelfMap { values: (0..n).collect() }
    }

    /// The constant map onto the base point.
    pub fn zero(n: usize) -> Self {
        PointedSelfMap { values: vec![n; n] }
    }

    /// Number of non-base points.
    pub fn points(&self) -> usize {
        self.values.len()
    }

    pub fn base(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, x: usize) -> usize {
        if x == self.base() {
            x
        } else {
            self.values[x]
        }
    }

    /// Left-to-right composition: `(f · g)(x) = g(f(x))`.
    pub fn then(&self, g: &PointedSelfMap) -> PointedSelfMap {
        debug_assert_eq!(self.points(), g.points());
        PointedSelfMap {
            values: self.values.iter().map(|&y| g.apply(y)).collect(),
        }
    }

    /// `α[f, g]`: f where α is true, g where false, ⊥ elsewhere.
    pub fn ite(alpha: &PairOfSets, f: &PointedSelfMap, g: &PointedSelfMap) -> PointedSelfMap {
        let base = f.base();
        let values = (0..f.points())
            .map(|x| match alpha.value_at(x) {
                Three::T => f.values[x],
                Three::F => g.values[x],
                Three::U => base,
            })
            .collect();
        PointedSelfMap { values }
    }

    /// `f ∘ α`: the value of α at f(x), or U where f(x) = ⊥.
    pub fn comp(&self, alpha: &PairOfSets) -> PairOfSets {
        let values: Vec<Three> = self
            .values
            .iter()
            .map(|&y| if y == self.base() { Three::U } else { alpha.value_at(y) })
            .collect();
        PairOfSets::from_function(&values)
    }

    /// One character per point: the image index, or `b` for ⊥. Maps over more
    /// than ten points use dot-separated images.
    pub fn name(&self) -> String {
        let sym = |v: usize| if v == self.base() { "b".to_string() } else { v.to_string() };
        if self.points() <= 10 {
            format!("f{}", self.values.iter().map(|&v| sym(v)).collect::<String>())
        } else {
            format!("f{}", self.values.iter().map(|&v| sym(v)).collect::<Vec<_>>().join("."))
        }
    }
}

impl fmt::Display for PointedSelfMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// All maps in T_o(X_⊥) for `n` points, first point most significant, ⊥ last
/// at each position.
pub fn all_self_maps(n: usize) -> Vec<PointedSelfMap> {
    let radix = n + 1;
    let count = radix.pow(n as u32);
    (0..count)
        .map(|mut i| {
            let mut values = vec![0; n];
            for slot in values.iter_mut().rev() {
                *slot = i % radix;
                i /= radix;
            }
            PointedSelfMap { values }
        })
        .collect()
}

/// Position of `f` in [`all_self_maps`] order.
pub fn self_map_index(f: &PointedSelfMap) -> usize {
    let radix = f.points() + 1;
    f.values.iter().fold(0, |acc, &v| acc * radix + v)
}

fn functional_sizes(x_size: usize, limits: &Limits) -> Result<()> {
    if x_size == 0 {
        return Err(Error::Argument("functional models need at least one point".into()));
    }
    let maps = (x_size as u128 + 1).checked_pow(x_size as u32).unwrap_or(u128::MAX);
    limits.carrier(&format!("T_o(X_bot) for |X| = {x_size}"), maps)
}

fn functional_parts(x_size: usize, limits: &Limits) -> Result<(Vec<PointedSelfMap>, Vec<PairOfSets>, CSet)> {
    functional_sizes(x_size, limits)?;
    let ada = power_ada(x_size, limits)?;
    let maps = all_self_maps(x_size);
    let pairs: Vec<PairOfSets> = all_pairs(x_size).collect();
    let names = maps.iter().map(PointedSelfMap::name).collect();
    let bot = ElemId(self_map_index(&PointedSelfMap::zero(x_size)));
    let one = ElemId(self_map_index(&PointedSelfMap::identity(x_size)));
    let mut mul = Vec::with_capacity(maps.len() * maps.len());
    for f in &maps {
        for g in &maps {
            mul.push(ElemId(self_map_index(&f.then(g))));
        }
    }
    let s = PointedCarrier::new(names, bot, Some(one), Some(mul))?;
    let mut act = Vec::with_capacity(pairs.len() * maps.len() * maps.len());
    for alpha in &pairs {
        for f in &maps {
            for g in &maps {
                act.push(ElemId(self_map_index(&PointedSelfMap::ite(alpha, f, g))));
            }
        }
    }
    let cs = CSet::new(s, ada.into(), act)?;
    Ok((maps, pairs, cs))
}

/// The functional C-set (T_o(X_⊥), 3^X) over `x_size` points, with the monoid
/// structure of T_o(X_⊥) recorded on the carrier.
pub fn functional_c_set(x_size: usize, limits: &Limits) -> Result<CSet> {
    Ok(functional_parts(x_size, limits)?.2)
}

/// The functional C-monoid (T_o(X_⊥), 3^X) over `x_size` points.
pub fn functional_c_monoid(x_size: usize, limits: &Limits) -> Result<CMonoid> {
    let (maps, pairs, cs) = functional_parts(x_size, limits)?;
    let mut comp = Vec::with_capacity(maps.len() * pairs.len());
    for f in &maps {
        for alpha in &pairs {
            comp.push(ElemId(pair_index(&f.comp(alpha))));
        }
    }
    CMonoid::new(cs, comp)
}

/// The basic C-monoid (S_⊥, 3): T selects the first branch, F the second,
/// U diverges; `s ∘ α = α` unless s = ⊥.
pub fn basic_c_monoid(s: PointedCarrier) -> Result<CMonoid> {
    s.require_domain_monoid()?;
    let three = mk_three();
    let (ns, bot) = (s.len(), s.bot());
    let mut act = Vec::with_capacity(3 * ns * ns);
    for alpha in Three::ALL {
        for a in 0..ns {
            for b in 0..ns {
                act.push(match alpha {
                    Three::T => ElemId(a),
                    Three::F => ElemId(b),
                    Three::U => bot,
                });
            }
        }
    }
    let mut comp = Vec::with_capacity(ns * 3);
    for x in s.elements() {
        for alpha in three.elements() {
            comp.push(if x == bot { three.u() } else { alpha });
        }
    }
    let cs = CSet::new(s, TestAlgebra::Ada(three), act)?;
    CMonoid::new(cs, comp)
}

/// The pointwise C-monoid (S_⊥^X, 3^X) over `x_size` points.
pub fn pointwise_c_monoid(s: &PointedCarrier, x_size: usize, limits: &Limits) -> Result<CMonoid> {
    s.require_domain_monoid()?;
    if x_size == 0 {
        return Err(Error::Argument("pointwise models need at least one point".into()));
    }
    let k = s.len();
    let size = (k as u128).checked_pow(x_size as u32).unwrap_or(u128::MAX);
    limits.carrier(&format!("S^{x_size}"), size)?;
    let ada = power_ada(x_size, limits)?;
    let pairs: Vec<PairOfSets> = all_pairs(x_size).collect();

    // tuples in lexicographic order, first coordinate most significant
    let count = size as usize;
    let tuples: Vec<Vec<ElemId>> = (0..count)
        .map(|mut i| {
            let mut t = vec![ElemId(0); x_size];
            for slot in t.iter_mut().rev() {
                *slot = ElemId(i % k);
                i /= k;
            }
            t
        })
        .collect();
    let index = |t: &[ElemId]| t.iter().fold(0, |acc, e| acc * k + e.0);
    let names = tuples
        .iter()
        .map(|t| t.iter().map(|&e| s.name(e)).collect::<Vec<_>>().join(":"))
        .collect();
    let one = s.one().expect("validated");
    let bot = s.bot();
    let zeta = |e: ElemId| ElemId(index(&vec![e; x_size]));

    let mut mul = Vec::with_capacity(count * count);
    for f in &tuples {
        for g in &tuples {
            let h: Vec<ElemId> = f.iter().zip(g).map(|(&a, &b)| s.mul(a, b)).collect();
            mul.push(ElemId(index(&h)));
        }
    }
    let carrier = PointedCarrier::new(names, zeta(bot), Some(zeta(one)), Some(mul))?;

    let mut act = Vec::with_capacity(pairs.len() * count * count);
    for alpha in &pairs {
        for f in &tuples {
            for g in &tuples {
                let h: Vec<ElemId> = (0..x_size)
                    .map(|x| match alpha.value_at(x) {
                        Three::T => f[x],
                        Three::F => g[x],
                        Three::U => bot,
                    })
                    .collect();
                act.push(ElemId(index(&h)));
            }
        }
    }
    let mut comp = Vec::with_capacity(count * pairs.len());
    for f in &tuples {
        for alpha in &pairs {
            let vals: Vec<Three> = (0..x_size)
                .map(|x| if f[x] == bot { Three::U } else { alpha.value_at(x) })
                .collect();
            comp.push(ElemId(pair_index(&PairOfSets::from_function(&vals))));
        }
    }
    let cs = CSet::new(carrier, ada.into(), act)?;
    CMonoid::new(cs, comp)
}

/// The monoid {1, ⊥}.
pub fn two_element_monoid() -> PointedCarrier {
    chain_monoid(&["1", "bot"]).expect("valid names")
}

/// The monoid {1, a, ⊥} with a · a = a.
pub fn three_element_monoid() -> PointedCarrier {
    chain_monoid(&["1", "a", "bot"]).expect("valid names")
}

/// The chain monoid on `names` (identity first, zero last) with
/// `x · y = max(x, y)` in list order. It has no non-zero zero-divisors.
pub fn chain_monoid(names: &[&str]) -> Result<PointedCarrier> {
    if names.len() < 2 {
        return Err(Error::Argument("a chain monoid needs at least 1 and bot".into()));
    }
    let pos = |n: &str| names.iter().position(|x| *x == n).unwrap();
    PointedCarrier::monoid(names, names[0], names[names.len() - 1], |a, b| {
        names[pos(a).max(pos(b))].to_string()
    })
}
