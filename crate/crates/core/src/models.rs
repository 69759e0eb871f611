//! The bundled example models used by the self-test and the identity search.

use crate::actions::CMonoid;
use crate::algebra::Limits;
use crate::bset::{functional_b_monoid, BMonoid};
use crate::error::Result;
use crate::functional::{basic_c_monoid, functional_c_monoid, pointwise_c_monoid, three_element_monoid, two_element_monoid};

/// basic({1,bot}), basic({1,a,bot}) and pointwise({1,a,bot}, 1).
pub fn non_functional_c_monoids(limits: &Limits) -> Result<Vec<(String, CMonoid)>> {
    Ok(vec![
        ("basic{1,bot}".to_string(), basic_c_monoid(two_element_monoid())?),
        ("basic{1,a,bot}".to_string(), basic_c_monoid(three_element_monoid())?),
        ("pointwise{1,a,bot}^1".to_string(), pointwise_c_monoid(&three_element_monoid(), 1, limits)?),
    ])
}

/// functional(1), functional(2), then the non-functional examples.
pub fn bundled_c_monoids(limits: &Limits) -> Result<Vec<(String, CMonoid)>> {
    let mut out = vec![
        ("functional(1)".to_string(), functional_c_monoid(1, limits)?),
        ("functional(2)".to_string(), functional_c_monoid(2, limits)?),
    ];
    out.extend(non_functional_c_monoids(limits)?);
    Ok(out)
}

/// functional-b(1) and functional-b(2).
pub fn bundled_b_monoids(limits: &Limits) -> Result<Vec<(String, BMonoid)>> {
    Ok(vec![
        ("functional-b(1)".to_string(), functional_b_monoid(1, limits)?),
        ("functional-b(2)".to_string(), functional_b_monoid(2, limits)?),
    ])
}
