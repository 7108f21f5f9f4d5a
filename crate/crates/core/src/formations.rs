//! The supersolubility formation and its derived predicates.
//!
//! A finite group is supersoluble exactly when all of its chief factors
//! have prime order, so supersolubility of any section `amb/start` is read
//! off the chief factors of `amb` above `start` without materializing the
//! quotient group. Quotient construction in the group engine is kept as an
//! independent route and the two are cross-checked in tests.

use crate::error::GroupError;
use crate::lattice::{SubgroupId, SubgroupLattice};
use crate::structure::{
    chief_factor_orders_above, frattini_in, is_nilpotent_in, is_prime, normal_subgroups_in,
};

/// Verdict bundle for one group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UProfile {
    pub supersoluble: bool,
    pub u_residual: SubgroupId,
    pub minimal_nonsupersoluble: bool,
    pub sdh: bool,
    pub schmidt: bool,
}

/// Whether `amb/start` is supersoluble, for `start` normal in `amb`.
pub fn is_quotient_supersoluble(
    l: &SubgroupLattice,
    amb: SubgroupId,
    start: SubgroupId,
) -> Result<bool, GroupError> {
    if let Some(&v) = l.quotient_ss_memo.read().unwrap().get(&(amb, start)) {
        return Ok(v);
    }
    let v = chief_factor_orders_above(l, amb, start)?
        .iter()
        .all(|&o| is_prime(o));
    l.quotient_ss_memo.write().unwrap().insert((amb, start), v);
    Ok(v)
}

pub fn is_supersoluble_in(l: &SubgroupLattice, amb: SubgroupId) -> bool {
    is_quotient_supersoluble(l, amb, l.bottom()).expect("bottom is normal")
}

pub fn is_supersoluble(l: &SubgroupLattice) -> bool {
    is_supersoluble_in(l, l.top())
}

/// The smallest normal subgroup of `amb` with supersoluble quotient.
pub fn u_residual_in(l: &SubgroupLattice, amb: SubgroupId) -> SubgroupId {
    if let Some(&v) = l.u_residual_memo.read().unwrap().get(&amb) {
        return v;
    }
    let mut acc = amb;
    for x in normal_subgroups_in(l, amb) {
        if is_quotient_supersoluble(l, amb, x).expect("normal") {
            acc = l.intersection(acc, x);
        }
    }
    // The formation is closed under this intersection, so the quotient by
    // the residual is itself supersoluble.
    assert!(
        is_quotient_supersoluble(l, amb, acc).expect("normal"),
        "quotient by the residual must be supersoluble"
    );
    l.u_residual_memo.write().unwrap().insert(amb, acc);
    acc
}

pub fn u_residual(l: &SubgroupLattice) -> SubgroupId {
    u_residual_in(l, l.top())
}

/// Whether the maximal subgroup `m` has supersoluble quotient over its core.
pub fn is_u_normal_maximal(l: &SubgroupLattice, m: SubgroupId) -> Result<bool, GroupError> {
    if !l.maximal_subgroups(l.top()).contains(&m) {
        return Err(GroupError::NotMaximal);
    }
    is_quotient_supersoluble(l, l.top(), l.core(m))
}

/// Not supersoluble, but every maximal subgroup is. Since supersolubility
/// is inherited by subgroups, quantifying over maximal subgroups decides
/// the property for all proper subgroups.
pub fn is_minimal_nonsupersoluble_in(l: &SubgroupLattice, amb: SubgroupId) -> bool {
    !is_supersoluble_in(l, amb)
        && l
            .maximal_subgroups(amb)
            .iter()
            .all(|&m| is_supersoluble_in(l, m))
}

pub fn is_minimal_nonsupersoluble(l: &SubgroupLattice) -> bool {
    is_minimal_nonsupersoluble_in(l, l.top())
}

/// Minimal nonsupersoluble with the residual a minimal normal subgroup.
pub fn is_sdh_in(l: &SubgroupLattice, amb: SubgroupId) -> bool {
    if !is_minimal_nonsupersoluble_in(l, amb) {
        return false;
    }
    let residual = u_residual_in(l, amb);
    crate::structure::is_minimal_normal_in(l, residual, amb)
}

pub fn is_sdh(l: &SubgroupLattice) -> bool {
    is_sdh_in(l, l.top())
}

/// Minimal nonnilpotent.
pub fn is_schmidt_in(l: &SubgroupLattice, amb: SubgroupId) -> bool {
    !is_nilpotent_in(l, amb)
        && l
            .maximal_subgroups(amb)
            .iter()
            .all(|&m| is_nilpotent_in(l, m))
}

pub fn is_schmidt(l: &SubgroupLattice) -> bool {
    is_schmidt_in(l, l.top())
}

/// Minimal nonabelian.
pub fn is_miller_moreno_in(l: &SubgroupLattice, amb: SubgroupId) -> bool {
    !l.is_abelian_subgroup(amb)
        && l
            .maximal_subgroups(amb)
            .iter()
            .all(|&m| l.is_abelian_subgroup(m))
}

pub fn is_miller_moreno(l: &SubgroupLattice) -> bool {
    is_miller_moreno_in(l, l.top())
}

/// A cyclic group of prime-power order.
pub fn is_primary_cyclic_in(l: &SubgroupLattice, amb: SubgroupId) -> bool {
    crate::structure::is_prime_power(l.order_of(amb)) && l.is_cyclic_subgroup(amb)
}

pub fn u_profile(l: &SubgroupLattice) -> UProfile {
    let supersoluble = is_supersoluble(l);
    let u_res = u_residual(l);
    let profile = UProfile {
        supersoluble,
        u_residual: u_res,
        minimal_nonsupersoluble: is_minimal_nonsupersoluble(l),
        sdh: is_sdh(l),
        schmidt: is_schmidt(l),
    };
    debug_assert_eq!(profile.supersoluble, u_res == l.bottom());
    debug_assert!(!profile.sdh || profile.minimal_nonsupersoluble);
    profile
}

/// `|Phi(residual)|` is prime; false when the residual has no maximal
/// subgroups worth intersecting (trivial case cannot arise for
/// nonsupersoluble groups).
pub fn frattini_of_residual_is_prime(l: &SubgroupLattice, amb: SubgroupId) -> bool {
    let residual = u_residual_in(l, amb);
    if l.order_of(residual) == 1 {
        return false;
    }
    let phi = frattini_in(l, residual).expect("residual is nontrivial");
    is_prime(l.order_of(phi))
}
