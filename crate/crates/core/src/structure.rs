//! Classical structural subgroups and series over a materialized lattice.
//!
//! Everything here works relative to an ambient subgroup where useful: the
//! lattice of the parent contains the full lattice of each subgroup, so
//! Sylow subgroups, chief factors and solubility of a subgroup are read off
//! the same structure.

use crate::error::GroupError;
use crate::group::ElementSet;
use crate::lattice::{SubgroupId, SubgroupLattice};

/// An ordering of the prime divisors of a group's order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeOrdering(pub Vec<u64>);

/// An ascending chain of normal subgroups with chief factors between
/// consecutive terms.
#[derive(Debug, Clone)]
pub struct ChiefSeries {
    pub subgroups: Vec<SubgroupId>,
    pub factor_orders: Vec<u64>,
}

pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut part = 1;
    while n % p == 0 {
        part *= p;
        n /= p;
    }
    part
}

pub fn prime_divisors_u64(mut n: u64) -> Vec<u64> {
    let mut primes = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            primes.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        primes.push(n);
    }
    primes
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn is_prime_power(n: u64) -> bool {
    n > 1 && prime_divisors_u64(n).len() == 1
}

/// All subgroups normal in the parent, in canonical order.
pub fn normal_subgroups(l: &SubgroupLattice) -> Vec<SubgroupId> {
    (0..l.subgroup_count() as u32)
        .filter(|&i| l.is_normal_in_parent(i))
        .collect()
}

/// All subgroups of `amb` normal in `amb`, in canonical order.
pub fn normal_subgroups_in(l: &SubgroupLattice, amb: SubgroupId) -> Vec<SubgroupId> {
    (0..l.subgroup_count() as u32)
        .filter(|&i| l.is_subset(i, amb) && l.is_normal_in(i, amb).unwrap())
        .collect()
}

pub fn minimal_normal_subgroups(l: &SubgroupLattice) -> Result<Vec<SubgroupId>, GroupError> {
    minimal_normal_in(l, l.top())
}

pub fn minimal_normal_in(
    l: &SubgroupLattice,
    amb: SubgroupId,
) -> Result<Vec<SubgroupId>, GroupError> {
    if l.order_of(amb) == 1 {
        return Err(GroupError::TrivialGroup);
    }
    let norms = normal_subgroups_in(l, amb);
    Ok(norms
        .iter()
        .copied()
        .filter(|&x| {
            x != l.bottom()
                && !norms
                    .iter()
                    .any(|&y| y != l.bottom() && y != x && l.is_subset(y, x))
        })
        .collect())
}

pub fn is_minimal_normal(l: &SubgroupLattice, h: SubgroupId) -> bool {
    is_minimal_normal_in(l, h, l.top())
}

pub fn is_minimal_normal_in(l: &SubgroupLattice, h: SubgroupId, amb: SubgroupId) -> bool {
    h != l.bottom()
        && l.is_subset(h, amb)
        && l.is_normal_in(h, amb).unwrap()
        && minimal_normal_in(l, amb).map_or(false, |mins| mins.contains(&h))
}

/// The canonically least Sylow p-subgroup of the parent.
pub fn sylow_subgroup(l: &SubgroupLattice, p: u64) -> Result<SubgroupId, GroupError> {
    if l.order() % p != 0 {
        return Err(GroupError::PrimeDoesNotDivide { p });
    }
    Ok(sylow_in(l, l.top(), p).expect("Sylow subgroups exist"))
}

/// All Sylow p-subgroups of the parent.
pub fn sylow_subgroups(l: &SubgroupLattice, p: u64) -> Vec<SubgroupId> {
    let part = p_part(l.order(), p);
    (0..l.subgroup_count() as u32)
        .filter(|&i| l.order_of(i) == part)
        .collect()
}

/// The canonically least Sylow p-subgroup of `amb`, if p divides its order.
pub fn sylow_in(l: &SubgroupLattice, amb: SubgroupId, p: u64) -> Option<SubgroupId> {
    let part = p_part(l.order_of(amb), p);
    if part == 1 {
        return None;
    }
    (0..l.subgroup_count() as u32).find(|&i| l.order_of(i) == part && l.is_subset(i, amb))
}

/// The normal Sylow p-subgroup of the parent, when one exists.
pub fn normal_sylow(l: &SubgroupLattice, p: u64) -> Option<SubgroupId> {
    let part = p_part(l.order(), p);
    if part == 1 {
        return None;
    }
    (0..l.subgroup_count() as u32)
        .find(|&i| l.order_of(i) == part && l.is_normal_in_parent(i))
}

/// A Hall subgroup for the given prime set, if the lattice contains one.
pub fn hall_subgroup(l: &SubgroupLattice, primes: &[u64]) -> Option<SubgroupId> {
    hall_in(l, l.top(), primes)
}

pub fn hall_in(l: &SubgroupLattice, amb: SubgroupId, primes: &[u64]) -> Option<SubgroupId> {
    let want: u64 = primes.iter().map(|&p| p_part(l.order_of(amb), p)).product();
    (0..l.subgroup_count() as u32).find(|&i| l.order_of(i) == want && l.is_subset(i, amb))
}

/// Intersection of the maximal subgroups of `amb`.
pub fn frattini_in(l: &SubgroupLattice, amb: SubgroupId) -> Result<SubgroupId, GroupError> {
    if l.order_of(amb) == 1 {
        return Err(GroupError::TrivialGroup);
    }
    let maxes = l.maximal_subgroups(amb);
    let mut acc: Option<ElementSet> = None;
    for &m in maxes {
        let set = l.subgroup(m);
        acc = Some(match acc {
            None => set.clone(),
            Some(a) => a.intersect(set),
        });
    }
    let set = acc.expect("nontrivial groups have maximal subgroups");
    Ok(l.index_of_set(set.ids()).expect("intersection is a subgroup"))
}

pub fn frattini(l: &SubgroupLattice) -> Result<SubgroupId, GroupError> {
    frattini_in(l, l.top())
}

/// The subgroup generated by all commutators of `amb`.
pub fn derived_in(l: &SubgroupLattice, amb: SubgroupId) -> SubgroupId {
    let ids = l.subgroup(amb).ids();
    let mut gens: Vec<u32> = Vec::new();
    for &a in ids {
        for &b in ids {
            // [a, b] = a^-1 b^-1 a b
            let c = l.mult(l.mult(l.mult(l.inv(a), l.inv(b)), a), b);
            gens.push(c);
        }
    }
    gens.sort_unstable();
    gens.dedup();
    l.generated_by(&gens)
}

pub fn derived_subgroup(l: &SubgroupLattice) -> SubgroupId {
    derived_in(l, l.top())
}

/// The largest normal p-subgroup: join of all normal p-subgroups.
pub fn o_p(l: &SubgroupLattice, p: u64) -> SubgroupId {
    let mut acc = l.bottom();
    for i in 0..l.subgroup_count() as u32 {
        let order = l.order_of(i);
        if order > 1 && order == p_part(order, p) && l.is_normal_in_parent(i) {
            acc = l.join(acc, i);
        }
    }
    acc
}

/// The largest nilpotent normal subgroup: join of O_p over the primes.
pub fn fitting(l: &SubgroupLattice) -> SubgroupId {
    let mut acc = l.bottom();
    for &p in l.group().prime_set() {
        acc = l.join(acc, o_p(l, p));
    }
    acc
}

/// Orders of the chief factors of `amb` above a subgroup `start` normal in
/// `amb`. By Jordan-Holder the multiset does not depend on the maximal
/// chain walked; the walk always picks the canonically least cover, so the
/// sequence itself is deterministic too.
pub fn chief_factor_orders_above(
    l: &SubgroupLattice,
    amb: SubgroupId,
    start: SubgroupId,
) -> Result<Vec<u64>, GroupError> {
    if !l.is_subset(start, amb) {
        return Err(GroupError::NotContained);
    }
    if !l.is_normal_in(start, amb)? {
        return Err(GroupError::NotNormal);
    }
    let norms = normal_subgroups_in(l, amb);
    let mut orders = Vec::new();
    let mut cur = start;
    while cur != amb {
        // Candidates are sorted by (order, lex), so the first strict
        // superset has least order and is therefore a minimal cover.
        let next = norms
            .iter()
            .copied()
            .find(|&x| x != cur && l.is_subset(cur, x))
            .expect("ambient subgroup closes the walk");
        orders.push(l.order_of(next) / l.order_of(cur));
        cur = next;
    }
    Ok(orders)
}

/// A chief series of the parent, built bottom-up through canonically least
/// minimal covers.
pub fn chief_series(l: &SubgroupLattice) -> ChiefSeries {
    let norms = normal_subgroups(l);
    let mut subgroups = vec![l.bottom()];
    let mut factor_orders = Vec::new();
    let mut cur = l.bottom();
    while cur != l.top() {
        let next = norms
            .iter()
            .copied()
            .find(|&x| x != cur && l.is_subset(cur, x))
            .expect("top closes the walk");
        factor_orders.push(l.order_of(next) / l.order_of(cur));
        subgroups.push(next);
        cur = next;
    }
    ChiefSeries {
        subgroups,
        factor_orders,
    }
}

/// Solubility of `amb`, by prime-power chief factors, cross-checked against
/// the derived series reaching the identity.
pub fn is_soluble_in(l: &SubgroupLattice, amb: SubgroupId) -> bool {
    let via_chief = chief_factor_orders_above(l, amb, l.bottom())
        .expect("bottom is normal")
        .iter()
        .all(|&o| is_prime_power(o));
    let via_derived = {
        let mut cur = amb;
        loop {
            let next = derived_in(l, cur);
            if next == cur {
                break cur == l.bottom();
            }
            cur = next;
        }
    };
    assert_eq!(
        via_chief, via_derived,
        "chief-factor and derived-series solubility must agree"
    );
    via_chief
}

pub fn is_soluble(l: &SubgroupLattice) -> bool {
    is_soluble_in(l, l.top())
}

/// Nilpotency of `amb`: every Sylow subgroup of `amb` is normal in `amb`.
pub fn is_nilpotent_in(l: &SubgroupLattice, amb: SubgroupId) -> bool {
    let order = l.order_of(amb);
    prime_divisors_u64(order).iter().all(|&p| {
        let part = p_part(order, p);
        (0..l.subgroup_count() as u32).any(|i| {
            l.order_of(i) == part && l.is_subset(i, amb) && l.is_normal_in(i, amb).unwrap()
        })
    })
}

pub fn is_nilpotent(l: &SubgroupLattice) -> bool {
    is_nilpotent_in(l, l.top())
}

/// All complements of the normal subgroup `n` in `amb`.
pub fn complements_in(
    l: &SubgroupLattice,
    amb: SubgroupId,
    n: SubgroupId,
) -> Result<Vec<SubgroupId>, GroupError> {
    if !l.is_subset(n, amb) {
        return Err(GroupError::NotContained);
    }
    if !l.is_normal_in(n, amb)? {
        return Err(GroupError::NotNormal);
    }
    let want = l.order_of(amb) / l.order_of(n);
    Ok((0..l.subgroup_count() as u32)
        .filter(|&s| {
            l.order_of(s) == want
                && l.is_subset(s, amb)
                && l.intersection(s, n) == l.bottom()
        })
        .collect())
}

pub fn complements(l: &SubgroupLattice, n: SubgroupId) -> Result<Vec<SubgroupId>, GroupError> {
    complements_in(l, l.top(), n)
}

/// Whether for every prefix of `phi` there is a normal subgroup whose order
/// is exactly the product of the corresponding full prime-power parts.
pub fn is_phi_dispersive(
    l: &SubgroupLattice,
    phi: &PrimeOrdering,
) -> Result<bool, GroupError> {
    let mut sorted = phi.0.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted != l.group().prime_set() {
        return Err(GroupError::BadOrdering);
    }
    let order = l.order();
    let norms = normal_subgroups(l);
    let mut want = 1u64;
    for &p in &phi.0 {
        want *= p_part(order, p);
        if !norms.iter().any(|&i| l.order_of(i) == want) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Dispersive for the strictly decreasing prime ordering.
pub fn is_ore_dispersive(l: &SubgroupLattice) -> bool {
    let mut primes: Vec<u64> = l.group().prime_set().to_vec();
    primes.sort_unstable_by(|a, b| b.cmp(a));
    if primes.is_empty() {
        return true;
    }
    is_phi_dispersive(l, &PrimeOrdering(primes)).expect("descending ordering is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Group;
    use crate::perm::Permutation;

    fn perm(degree: usize, cycles: &[&[usize]]) -> Permutation {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(degree, &cycles).unwrap()
    }

    fn lattice_of(gens: Vec<Permutation>) -> SubgroupLattice {
        SubgroupLattice::build(Group::from_generators(gens).unwrap()).unwrap()
    }

    fn s4() -> SubgroupLattice {
        lattice_of(vec![perm(4, &[&[1, 2, 3, 4]]), perm(4, &[&[1, 2]])])
    }

    fn s3() -> SubgroupLattice {
        lattice_of(vec![perm(3, &[&[1, 2]]), perm(3, &[&[1, 2, 3]])])
    }

    fn a4() -> SubgroupLattice {
        lattice_of(vec![perm(4, &[&[1, 2, 3]]), perm(4, &[&[2, 3, 4]])])
    }

    fn q8() -> SubgroupLattice {
        lattice_of(vec![
            perm(8, &[&[1, 3, 2, 4], &[5, 8, 6, 7]]),
            perm(8, &[&[1, 5, 2, 6], &[3, 7, 4, 8]]),
        ])
    }

    #[test]
    fn normal_subgroups_of_s4() {
        let l = s4();
        let norms = normal_subgroups(&l);
        let mut orders: Vec<u64> = norms.iter().map(|&i| l.order_of(i)).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![1, 4, 12, 24]);
    }

    #[test]
    fn minimal_normals() {
        let l = s4();
        let mins = minimal_normal_subgroups(&l).unwrap();
        assert_eq!(mins.len(), 1);
        assert_eq!(l.order_of(mins[0]), 4);

        let c6 = lattice_of(vec![perm(6, &[&[1, 2, 3, 4, 5, 6]])]);
        let mins = minimal_normal_subgroups(&c6).unwrap();
        let mut orders: Vec<u64> = mins.iter().map(|&i| c6.order_of(i)).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![2, 3]);

        let triv = lattice_of(vec![Permutation::identity(3)]);
        assert_eq!(
            minimal_normal_subgroups(&triv).unwrap_err(),
            GroupError::TrivialGroup
        );
    }

    #[test]
    fn sylow_subgroups_of_s4() {
        let l = s4();
        assert_eq!(l.order_of(sylow_subgroup(&l, 2).unwrap()), 8);
        assert_eq!(l.order_of(sylow_subgroup(&l, 3).unwrap()), 3);
        assert!(matches!(
            sylow_subgroup(&l, 5).unwrap_err(),
            GroupError::PrimeDoesNotDivide { p: 5 }
        ));
        // All Sylow subgroups are conjugate and count = 1 mod p.
        for p in [2u64, 3] {
            let all = sylow_subgroups(&l, p);
            assert_eq!(all.len() as u64 % p, 1);
            let class = l.class_of(all[0]);
            assert!(all.iter().all(|&i| l.class_of(i) == class));
        }
    }

    #[test]
    fn hall_subgroups() {
        let l = s4();
        assert_eq!(l.order_of(hall_subgroup(&l, &[2]).unwrap()), 8);
        assert_eq!(l.order_of(hall_subgroup(&l, &[3]).unwrap()), 3);
        assert_eq!(l.order_of(hall_subgroup(&l, &[2, 3]).unwrap()), 24);
    }

    #[test]
    fn frattini_subgroups() {
        assert_eq!(frattini(&s4()).map(|i| s4().order_of(i)), Ok(1));
        let q8 = q8();
        assert_eq!(q8.order_of(frattini(&q8).unwrap()), 2);
        let c4 = lattice_of(vec![perm(4, &[&[1, 2, 3, 4]])]);
        assert_eq!(c4.order_of(frattini(&c4).unwrap()), 2);
        let triv = lattice_of(vec![Permutation::identity(2)]);
        assert_eq!(frattini(&triv).unwrap_err(), GroupError::TrivialGroup);
    }

    #[test]
    fn derived_subgroups() {
        let l = s4();
        assert_eq!(l.order_of(derived_subgroup(&l)), 12);
        let l3 = s3();
        assert_eq!(l3.order_of(derived_subgroup(&l3)), 3);
        let c12 = lattice_of(vec![perm(12, &[&(1..=12).collect::<Vec<_>>()[..]])]);
        assert_eq!(derived_subgroup(&c12), c12.bottom());
    }

    #[test]
    fn fitting_subgroups() {
        let l = s4();
        assert_eq!(l.order_of(fitting(&l)), 4);
        let l3 = s3();
        assert_eq!(l3.order_of(fitting(&l3)), 3);
        let q8 = q8();
        assert_eq!(fitting(&q8), q8.top());
    }

    #[test]
    fn chief_series_shapes() {
        let l = s4();
        let series = chief_series(&l);
        assert_eq!(series.factor_orders, vec![4, 3, 2]);
        assert_eq!(
            series.factor_orders.iter().product::<u64>(),
            l.order()
        );

        let c12 = lattice_of(vec![perm(12, &[&(1..=12).collect::<Vec<_>>()[..]])]);
        let mut factors = chief_series(&c12).factor_orders;
        factors.sort_unstable();
        assert_eq!(factors, vec![2, 2, 3]);
    }

    #[test]
    fn solubility() {
        assert!(is_soluble(&s4()));
        assert!(is_soluble(&q8()));
        let a5 = lattice_of(vec![perm(5, &[&[1, 2, 3]]), perm(5, &[&[1, 2, 3, 4, 5]])]);
        assert_eq!(a5.order(), 60);
        assert!(!is_soluble(&a5));
        let series = chief_series(&a5);
        assert_eq!(series.factor_orders, vec![60]);
    }

    #[test]
    fn nilpotency() {
        assert!(is_nilpotent(&q8()));
        assert!(!is_nilpotent(&s3()));
        let c6 = lattice_of(vec![perm(6, &[&[1, 2, 3, 4, 5, 6]])]);
        assert!(is_nilpotent(&c6));
        assert!(!is_nilpotent(&s4()));
    }

    #[test]
    fn complements_of_normals_in_s4() {
        let l = s4();
        let a4_idx = (0..l.subgroup_count() as u32)
            .find(|&i| l.order_of(i) == 12)
            .unwrap();
        let comps = complements(&l, a4_idx).unwrap();
        assert_eq!(comps.len(), 6);
        assert!(comps.iter().all(|&s| l.order_of(s) == 2));

        let v4 = (0..l.subgroup_count() as u32)
            .find(|&i| l.order_of(i) == 4 && l.is_normal_in_parent(i))
            .unwrap();
        let comps = complements(&l, v4).unwrap();
        assert_eq!(comps.len(), 4);
        assert!(comps.iter().all(|&s| l.order_of(s) == 6));

        assert_eq!(complements(&l, l.bottom()).unwrap(), vec![l.top()]);

        let c3 = (0..l.subgroup_count() as u32)
            .find(|&i| l.order_of(i) == 3)
            .unwrap();
        assert_eq!(complements(&l, c3).unwrap_err(), GroupError::NotNormal);
    }

    #[test]
    fn dispersivity() {
        let l3 = s3();
        assert!(is_phi_dispersive(&l3, &PrimeOrdering(vec![3, 2])).unwrap());
        assert!(!is_phi_dispersive(&l3, &PrimeOrdering(vec![2, 3])).unwrap());
        assert!(is_ore_dispersive(&l3));

        let l = s4();
        assert!(!is_phi_dispersive(&l, &PrimeOrdering(vec![2, 3])).unwrap());
        assert!(!is_ore_dispersive(&l));

        let a4 = a4();
        assert!(!is_ore_dispersive(&a4));

        let c6 = lattice_of(vec![perm(6, &[&[1, 2, 3, 4, 5, 6]])]);
        assert!(is_phi_dispersive(&c6, &PrimeOrdering(vec![2, 3])).unwrap());
        assert!(is_phi_dispersive(&c6, &PrimeOrdering(vec![3, 2])).unwrap());

        assert!(matches!(
            is_phi_dispersive(&l3, &PrimeOrdering(vec![2, 5])),
            Err(GroupError::BadOrdering)
        ));
    }

    #[test]
    fn chief_factors_above_relative() {
        // Chief factors of S4 above V4 are 3 and 2: the S3 image.
        let l = s4();
        let v4 = (0..l.subgroup_count() as u32)
            .find(|&i| l.order_of(i) == 4 && l.is_normal_in_parent(i))
            .unwrap();
        assert_eq!(chief_factor_orders_above(&l, l.top(), v4).unwrap(), vec![3, 2]);
        // Relative to a subgroup: chief factors of A4 above 1.
        let a4_idx = (0..l.subgroup_count() as u32)
            .find(|&i| l.order_of(i) == 12)
            .unwrap();
        assert_eq!(
            chief_factor_orders_above(&l, a4_idx, l.bottom()).unwrap(),
            vec![4, 3]
        );
    }
}
