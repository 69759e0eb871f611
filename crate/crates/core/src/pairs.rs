//! Elements of 3^X as pairs of disjoint subsets `(A, B)` of a finite ground set,
//! `A` where the test is true and `B` where it is false.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A value of McCarthy's three-valued logic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Three {
    T,
    F,
    U,
}

impl Three {
    pub const ALL: [Three; 3] = [Three::T, Three::F, Three::U];

    /// Position in the carrier of the three-element ada (T, F, U order).
    pub fn index(self) -> usize {
        match self {
            Three::T => 0,
            Three::F => 1,
            Three::U => 2,
        }
    }

    pub fn from_index(i: usize) -> Three {
        Three::ALL[i]
    }

    pub fn symbol(self) -> char {
        match self {
            Three::T => 'T',
            Three::F => 'F',
            Three::U => 'U',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairOfSets {
    ground: usize,
    a: FixedBitSet,
    b: FixedBitSet,
}

impl PairOfSets {
    pub fn new(
        ground: usize,
        a: impl IntoIterator<Item = usize>,
        b: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        let mut first = FixedBitSet::with_capacity(ground);
        let mut second = FixedBitSet::with_capacity(ground);
        for x in a {
            if x >= ground {
                return Err(crate::error::structure("pair of sets", format!("point {x} outside ground set of {ground}")));
            }
            first.insert(x);
        }
        for x in b {
            if x >= ground {
                return Err(crate::error::structure("pair of sets", format!("point {x} outside ground set of {ground}")));
            }
            second.insert(x);
        }
        if !first.is_disjoint(&second) {
            return Err(crate::error::structure("pair of sets", "components overlap"));
        }
        Ok(PairOfSets {
            ground,
            a: first,
            b: second,
        })
    }

    /// The constant-U pair `(∅, ∅)`.
    pub fn undefined(ground: usize) -> Self {
        PairOfSets {
            ground,
            a: FixedBitSet::with_capacity(ground),
            b: FixedBitSet::with_capacity(ground),
        }
    }

    /// The constant-T pair `(X, ∅)`.
    pub fn all_true(ground: usize) -> Self {
        let mut p = Self::undefined(ground);
        p.a.insert_range(..);
        p
    }

    /// The constant-F pair `(∅, X)`.
    pub fn all_false(ground: usize) -> Self {
        let mut p = Self::undefined(ground);
        p.b.insert_range(..);
        p
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    /// First projection: points where the test is true.
    pub fn first(&self) -> &FixedBitSet {
        &self.a
    }

    /// Second projection: points where the test is false.
    pub fn second(&self) -> &FixedBitSet {
        &self.b
    }

    pub fn value_at(&self, x: usize) -> Three {
        if self.a.contains(x) {
            Three::T
        } else if self.b.contains(x) {
            Three::F
        } else {
            Three::U
        }
    }

    /// The pair `(α⁻¹(T), α⁻¹(F))` of a map `α : X → 3`.
    pub fn from_function(values: &[Three]) -> Self {
        let mut p = Self::undefined(values.len());
        for (x, v) in values.iter().enumerate() {
            match v {
                Three::T => p.a.insert(x),
                Three::F => p.b.insert(x),
                Three::U => {}
            }
        }
        p
    }

    pub fn to_function(&self) -> Vec<Three> {
        (0..self.ground).map(|x| self.value_at(x)).collect()
    }

    /// One T/F/U symbol per ground point.
    pub fn name(&self) -> String {
        self.to_function().iter().map(|v| v.symbol()).collect()
    }

    pub fn neg(&self) -> Self {
        PairOfSets {
            ground: self.ground,
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }

    pub fn and(&self, other: &Self) -> Result<Self> {
        self.same_ground(other)?;
        let a = &self.a & &other.a;
        let cross = &self.a & &other.b;
        let b = &self.b | &cross;
        Ok(PairOfSets {
            ground: self.ground,
            a,
            b,
        })
    }

    pub fn or(&self, other: &Self) -> Result<Self> {
        self.same_ground(other)?;
        let cross = &self.b & &other.a;
        let a = &self.a | &cross;
        let b = &self.b & &other.b;
        Ok(PairOfSets {
            ground: self.ground,
            a,
            b,
        })
    }

    /// Pointwise halting oracle: `(A, X ∖ A)`.
    pub fn down(&self) -> Self {
        let mut b = self.a.clone();
        b.toggle_range(..);
        PairOfSets {
            ground: self.ground,
            a: self.a.clone(),
            b,
        }
    }

    fn same_ground(&self, other: &Self) -> Result<()> {
        if self.ground != other.ground {
            return Err(Error::GroundMismatch {
                left: self.ground,
                right: other.ground,
            });
        }
        Ok(())
    }
}

impl fmt::Display for PairOfSets {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.a.ones().map(|x| format!("x{x}")).collect();
        let b: Vec<String> = self.b.ones().map(|x| format!("x{x}")).collect();
        write!(f, "({{{}}}, {{{}}})", a.join(","), b.join(","))
    }
}

pub fn pair_neg(p: &PairOfSets) -> PairOfSets {
    p.neg()
}

pub fn pair_and(p: &PairOfSets, q: &PairOfSets) -> Result<PairOfSets> {
    p.and(q)
}

pub fn pair_or(p: &PairOfSets, q: &PairOfSets) -> Result<PairOfSets> {
    p.or(q)
}

pub fn pair_down(p: &PairOfSets) -> PairOfSets {
    p.down()
}

pub fn pair_from_function(values: &[Three]) -> PairOfSets {
    PairOfSets::from_function(values)
}

pub fn pair_to_function(p: &PairOfSets) -> Vec<Three> {
    p.to_function()
}

/// Every pair of sets over `ground` points, in base-3 order with the first
/// point most significant and T < F < U at each point.
pub fn all_pairs(ground: usize) -> impl Iterator<Item = PairOfSets> {
    let count = 3usize.pow(ground as u32);
    (0..count).map(move |i| PairOfSets::from_function(&digits(i, ground)))
}

/// Position of `p` in the enumeration order of [`all_pairs`].
pub fn pair_index(p: &PairOfSets) -> usize {
    p.to_function()
        .iter()
        .fold(0, |acc, v| acc * 3 + v.index())
}

fn digits(mut i: usize, ground: usize) -> Vec<Three> {
    let mut out = vec![Three::T; ground];
    for slot in out.iter_mut().rev() {
        *slot = Three::from_index(i % 3);
        i /= 3;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn and_example_over_two_points() {
        // x = 0, y = 1
        let p = PairOfSets::new(2, [0], [1]).unwrap();
        let q = PairOfSets::new(2, [1], []).unwrap();
        assert_eq!(p.and(&q).unwrap(), PairOfSets::new(2, [], [1]).unwrap());
    }

    #[test]
    fn neg_fixes_undefined() {
        let u = PairOfSets::undefined(3);
        assert_eq!(u.neg(), u);
    }

    #[test]
    fn false_is_left_identity_for_or() {
        for p in all_pairs(2) {
            assert_eq!(PairOfSets::all_false(2).or(&p).unwrap(), p);
        }
    }

    #[test]
    fn function_bijection_examples() {
        assert_eq!(
            PairOfSets::from_function(&[Three::T, Three::T]),
            PairOfSets::all_true(2)
        );
        assert_eq!(
            PairOfSets::from_function(&[Three::U, Three::U]),
            PairOfSets::undefined(2)
        );
        assert_eq!(
            PairOfSets::from_function(&[Three::T, Three::F]),
            PairOfSets::new(2, [0], [1]).unwrap()
        );
    }

    #[test]
    fn ground_mismatch_rejected() {
        let p = PairOfSets::undefined(1);
        let q = PairOfSets::undefined(2);
        assert_eq!(
            p.and(&q).unwrap_err(),
            Error::GroundMismatch { left: 1, right: 2 }
        );
        assert!(p.or(&q).is_err());
    }

    #[test]
    fn overlapping_components_rejected() {
        assert!(PairOfSets::new(2, [0], [0]).is_err());
        assert!(PairOfSets::new(2, [2], []).is_err());
    }

    #[test]
    fn enumeration_index_round_trips() {
        for (i, p) in all_pairs(3).enumerate() {
            assert_eq!(pair_index(&p), i);
        }
        assert_eq!(all_pairs(0).count(), 1);
    }
}
