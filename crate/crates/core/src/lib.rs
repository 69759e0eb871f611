//! A workbench for finite C-algebras, adas, C-sets and C-monoids.

pub mod actions;
pub mod algebra;
pub mod bset;
pub mod congruence;
pub mod embedding;
pub mod error;
pub mod functional;
pub mod models;
pub mod pairs;
pub mod report;
pub mod terms;

pub use actions::{check_c_monoid, check_c_set, CMonoid, CSet, PointedCarrier, TestAlgebra};
pub use algebra::{check_ada, check_c_algebra, Ada, CAlgebra, ElemId, Limits};
pub use error::{Error, Result};
pub use pairs::{PairOfSets, Three};
pub use report::{AxiomReport, AxiomResult, Outcome, Witness};
