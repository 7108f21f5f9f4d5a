//! Permutation groups with cached order machinery.
//!
//! Element enumeration is breadth-first from the identity, multiplying by
//! generators in input order; each new layer is sorted by image sequence
//! before indices are assigned, so element identifiers are reproducible.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::GroupError;
use crate::perm::{lcm, Permutation};
use crate::stabchain::StabChain;

/// Default cap on element enumeration.
pub const DEFAULT_ENUM_CAP: u128 = 5000;
/// Default cap on subgroup lattice construction.
pub const DEFAULT_LATTICE_CAP: u128 = 2000;

/// A subgroup carrier: sorted, deduplicated element identifiers relative to
/// a group's deterministic enumeration order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementSet {
    ids: Vec<u32>,
}

impl ElementSet {
    pub fn from_ids(mut ids: Vec<u32>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        ElementSet { ids }
    }

    pub fn from_sorted(ids: Vec<u32>) -> Self {
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        ElementSet { ids }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[u32] {
        &self.ids
    }

    pub fn contains(&self, id: u32) -> bool {
        self.ids.binary_search(&id).is_ok()
    }

    pub fn is_subset_of(&self, other: &ElementSet) -> bool {
        if self.ids.len() > other.ids.len() {
            return false;
        }
        let mut it = other.ids.iter();
        'outer: for &id in &self.ids {
            for &o in it.by_ref() {
                if o == id {
                    continue 'outer;
                }
                if o > id {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn intersect(&self, other: &ElementSet) -> ElementSet {
        let mut ids = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.ids.len() && j < other.ids.len() {
            match self.ids[i].cmp(&other.ids[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    ids.push(self.ids[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        ElementSet { ids }
    }
}

#[derive(Debug)]
pub struct Group {
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabChain,
    order: u128,
    prime_set: Vec<u64>,
    enum_cap: u128,
    elements: OnceLock<Vec<Permutation>>,
    index: OnceLock<HashMap<Permutation, u32>>,
}

impl Group {
    pub fn from_generators(generators: Vec<Permutation>) -> Result<Group, GroupError> {
        Group::from_generators_with_cap(generators, DEFAULT_ENUM_CAP)
    }

    pub fn from_generators_with_cap(
        generators: Vec<Permutation>,
        enum_cap: u128,
    ) -> Result<Group, GroupError> {
        if generators.is_empty() {
            return Err(GroupError::EmptyGenerators);
        }
        let degree = generators[0].degree();
        if degree == 0 {
            return Err(GroupError::NotABijection { degree: 0 });
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(GroupError::MixedDegree {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let chain = StabChain::build(degree, &generators)?;
        let order = chain.order();
        let prime_set = prime_divisors(order, degree);
        Ok(Group {
            degree,
            generators,
            chain,
            order,
            prime_set,
            enum_cap,
            elements: OnceLock::new(),
            index: OnceLock::new(),
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn enum_cap(&self) -> u128 {
        self.enum_cap
    }

    /// The set of prime divisors of the order.
    pub fn prime_set(&self) -> &[u64] {
        &self.prime_set
    }

    pub fn contains(&self, x: &Permutation) -> Result<bool, GroupError> {
        if x.degree() != self.degree {
            return Err(GroupError::MixedDegree {
                expected: self.degree,
                found: x.degree(),
            });
        }
        Ok(self.chain.contains(x))
    }

    /// All elements in the fixed enumeration order.
    pub fn elements(&self) -> Result<&[Permutation], GroupError> {
        if self.order > self.enum_cap {
            return Err(GroupError::GroupTooLarge {
                order: self.order,
                cap: self.enum_cap,
            });
        }
        Ok(self.elements.get_or_init(|| self.enumerate()))
    }

    fn enumerate(&self) -> Vec<Permutation> {
        let mut elements = vec![Permutation::identity(self.degree)];
        let mut seen: HashMap<Permutation, ()> = HashMap::new();
        seen.insert(elements[0].clone(), ());
        let mut frontier: Vec<Permutation> = elements.clone();
        while !frontier.is_empty() {
            let mut layer: Vec<Permutation> = Vec::new();
            for x in &frontier {
                for g in &self.generators {
                    let y = x.compose(g);
                    if !seen.contains_key(&y) {
                        seen.insert(y.clone(), ());
                        layer.push(y);
                    }
                }
            }
            layer.sort_unstable();
            elements.extend(layer.iter().cloned());
            frontier = layer;
        }
        debug_assert_eq!(elements.len() as u128, self.order);
        elements
    }

    pub fn element_index(&self, x: &Permutation) -> Result<Option<u32>, GroupError> {
        let elements = self.elements()?;
        let index = self.index.get_or_init(|| {
            elements
                .iter()
                .enumerate()
                .map(|(i, p)| (p.clone(), i as u32))
                .collect()
        });
        Ok(index.get(x).copied())
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> Result<u64, GroupError> {
        let elements = self.elements()?;
        Ok(elements.iter().fold(1u64, |acc, p| lcm(acc, p.order())))
    }

    pub fn is_abelian(&self) -> bool {
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[i + 1..] {
                if a.compose(b) != b.compose(a) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_cyclic(&self) -> Result<bool, GroupError> {
        let elements = self.elements()?;
        Ok(elements.iter().any(|p| p.order() as u128 == self.order))
    }

    /// Whether `set` is closed under products (and hence a subgroup).
    pub fn is_subgroup_set(&self, set: &ElementSet) -> Result<bool, GroupError> {
        let elements = self.elements()?;
        if set.is_empty() || set.ids()[0] != 0 {
            return Ok(false);
        }
        for &a in set.ids() {
            if a as usize >= elements.len() {
                return Ok(false);
            }
            for &b in set.ids() {
                let prod = elements[a as usize].compose(&elements[b as usize]);
                match self.element_index(&prod)? {
                    Some(id) if set.contains(id) => {}
                    _ => return Ok(false),
                }
            }
        }
        Ok(true)
    }

    /// Whether `set` is normal, i.e. fixed by conjugation by every generator.
    pub fn is_normal_set(&self, set: &ElementSet) -> Result<bool, GroupError> {
        let elements = self.elements()?;
        for g in &self.generators {
            for &a in set.ids() {
                let conj = elements[a as usize].conjugate_by(g);
                match self.element_index(&conj)? {
                    Some(id) if set.contains(id) => {}
                    _ => return Ok(false),
                }
            }
        }
        Ok(true)
    }

    /// The quotient by a normal subgroup, as the faithful action of G/N on
    /// the right cosets of N. Coset order follows the element enumeration.
    pub fn quotient(&self, n: &ElementSet) -> Result<Group, GroupError> {
        Ok(self.quotient_map(n)?.quotient)
    }

    pub fn quotient_map(&self, n: &ElementSet) -> Result<QuotientMap, GroupError> {
        if !self.is_subgroup_set(n)? {
            return Err(GroupError::NotASubgroup);
        }
        if !self.is_normal_set(n)? {
            return Err(GroupError::NotNormal);
        }
        let elements = self.elements()?;
        let count = elements.len();
        let mut coset_of: Vec<u32> = vec![u32::MAX; count];
        let mut reps: Vec<u32> = Vec::new();
        for x in 0..count as u32 {
            if coset_of[x as usize] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(x);
            for &a in n.ids() {
                let prod = elements[a as usize].compose(&elements[x as usize]);
                let id = self
                    .element_index(&prod)?
                    .expect("closure stays in the group");
                coset_of[id as usize] = c;
            }
        }
        let coset_count = reps.len();
        let mut images = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            let mut perm = vec![0usize; coset_count];
            for (c, &rep) in reps.iter().enumerate() {
                let prod = elements[rep as usize].compose(g);
                let id = self.element_index(&prod)?.expect("product in group");
                perm[c] = coset_of[id as usize] as usize;
            }
            images.push(Permutation::from_images(perm)?);
        }
        let quotient = Group::from_generators_with_cap(images, self.enum_cap)?;
        Ok(QuotientMap {
            quotient,
            coset_of,
            reps,
        })
    }
}

/// The quotient group together with the projection data needed to push
/// subgroups through it.
#[derive(Debug)]
pub struct QuotientMap {
    pub quotient: Group,
    /// Coset index of each parent element id.
    coset_of: Vec<u32>,
    /// Least element id in each coset.
    reps: Vec<u32>,
}

impl QuotientMap {
    /// Image of a parent element (by id) in the quotient's enumeration.
    pub fn project_element(&self, parent: &Group, id: u32) -> Result<u32, GroupError> {
        let elements = parent.elements()?;
        let x = &elements[id as usize];
        let mut perm = vec![0usize; self.reps.len()];
        for (c, &rep) in self.reps.iter().enumerate() {
            let prod = elements[rep as usize].compose(x);
            let pid = parent.element_index(&prod)?.expect("product in group");
            perm[c] = self.coset_of[pid as usize] as usize;
        }
        let image = Permutation::from_images(perm)?;
        Ok(self
            .quotient
            .element_index(&image)?
            .expect("projection lands in quotient"))
    }

    /// Image of a subgroup of the parent, as a subgroup of the quotient.
    pub fn project_set(&self, parent: &Group, set: &ElementSet) -> Result<ElementSet, GroupError> {
        let mut ids = Vec::with_capacity(set.len());
        for &id in set.ids() {
            ids.push(self.project_element(parent, id)?);
        }
        Ok(ElementSet::from_ids(ids))
    }
}

/// Prime divisors of `order`; every prime divisor of a permutation group's
/// order is at most the degree, so trial division up to `degree` suffices.
fn prime_divisors(order: u128, degree: usize) -> Vec<u64> {
    let mut primes = Vec::new();
    let mut n = order;
    for d in 2..=(degree.max(2) as u128) {
        if d > n {
            break;
        }
        if n % d == 0 {
            primes.push(d as u64);
            while n % d == 0 {
                n /= d;
            }
        }
    }
    debug_assert_eq!(n, 1, "prime divisor exceeds degree");
    primes
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(degree: usize, cycles: &[&[usize]]) -> Permutation {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(degree, &cycles).unwrap()
    }

    fn s4() -> Group {
        Group::from_generators(vec![perm(4, &[&[1, 2, 3, 4]]), perm(4, &[&[1, 2]])]).unwrap()
    }

    fn a4() -> Group {
        Group::from_generators(vec![perm(4, &[&[1, 2, 3]]), perm(4, &[&[2, 3, 4]])]).unwrap()
    }

    #[test]
    fn orders_match_enumeration() {
        let s3 = Group::from_generators(vec![perm(3, &[&[1, 2]]), perm(3, &[&[1, 2, 3]])]).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.elements().unwrap().len(), 6);
        assert_eq!(s4().order(), 24);
        assert_eq!(s4().elements().unwrap().len(), 24);
        let triv = Group::from_generators(vec![Permutation::identity(5)]).unwrap();
        assert_eq!(triv.order(), 1);
    }

    #[test]
    fn rejects_bad_generator_lists() {
        assert_eq!(
            Group::from_generators(vec![]).unwrap_err(),
            GroupError::EmptyGenerators
        );
        let err =
            Group::from_generators(vec![perm(3, &[&[1, 2]]), perm(4, &[&[1, 2]])]).unwrap_err();
        assert!(matches!(err, GroupError::MixedDegree { .. }));
    }

    #[test]
    fn membership() {
        let a4 = a4();
        assert!(!a4.contains(&perm(4, &[&[1, 2]])).unwrap());
        assert!(a4.contains(&perm(4, &[&[1, 2, 3]])).unwrap());
        assert!(a4.contains(&Permutation::identity(4)).unwrap());
        assert!(a4.contains(&perm(4, &[&[1, 2], &[3, 4]])).unwrap());
    }

    #[test]
    fn prime_sets() {
        assert_eq!(s4().prime_set(), &[2, 3]);
        let c6 = Group::from_generators(vec![perm(6, &[&[1, 2, 3, 4, 5, 6]])]).unwrap();
        assert_eq!(c6.prime_set(), &[2, 3]);
        let triv = Group::from_generators(vec![Permutation::identity(2)]).unwrap();
        assert!(triv.prime_set().is_empty());
    }

    #[test]
    fn exponent_and_flags() {
        let c6 = Group::from_generators(vec![perm(6, &[&[1, 2, 3, 4, 5, 6]])]).unwrap();
        assert_eq!(c6.exponent().unwrap(), 6);
        assert!(c6.is_abelian());
        assert!(c6.is_cyclic().unwrap());

        let v4 = Group::from_generators(vec![
            perm(4, &[&[1, 2], &[3, 4]]),
            perm(4, &[&[1, 3], &[2, 4]]),
        ])
        .unwrap();
        assert_eq!(v4.exponent().unwrap(), 2);
        assert!(v4.is_abelian());
        assert!(!v4.is_cyclic().unwrap());

        let s3 = Group::from_generators(vec![perm(3, &[&[1, 2]]), perm(3, &[&[1, 2, 3]])]).unwrap();
        assert_eq!(s3.exponent().unwrap(), 6);
        assert!(!s3.is_abelian());
        assert!(!s3.is_cyclic().unwrap());
    }

    #[test]
    fn enumeration_cap() {
        let s4 = Group::from_generators_with_cap(
            vec![perm(4, &[&[1, 2, 3, 4]]), perm(4, &[&[1, 2]])],
            10,
        )
        .unwrap();
        assert_eq!(s4.order(), 24);
        assert!(matches!(
            s4.elements().unwrap_err(),
            GroupError::GroupTooLarge { order: 24, cap: 10 }
        ));
    }

    #[test]
    fn closure_under_products() {
        let s4 = s4();
        let elements = s4.elements().unwrap().to_vec();
        for a in elements.iter().step_by(5) {
            for b in elements.iter().step_by(7) {
                assert!(s4.contains(&a.compose(b)).unwrap());
                assert!(s4.contains(&a.inverse()).unwrap());
            }
        }
    }

    #[test]
    fn quotient_s4_by_v4_is_s3() {
        let s4 = s4();
        let mut v4_ids = Vec::new();
        for (i, p) in s4.elements().unwrap().iter().enumerate() {
            let shape: Vec<usize> = p.cycles().iter().map(|c| c.len()).collect();
            if p.is_identity() || shape == vec![2, 2] {
                v4_ids.push(i as u32);
            }
        }
        let v4 = ElementSet::from_ids(v4_ids);
        assert_eq!(v4.len(), 4);
        let q = s4.quotient(&v4).unwrap();
        assert_eq!(q.order(), 6);
        assert!(!q.is_abelian());
    }

    #[test]
    fn quotient_edges() {
        let a4 = a4();
        let triv = ElementSet::from_ids(vec![0]);
        let q = a4.quotient(&triv).unwrap();
        assert_eq!(q.order(), 12);

        let all = ElementSet::from_ids((0..12).collect());
        let q = a4.quotient(&all).unwrap();
        assert_eq!(q.order(), 1);

        // A non-normal subgroup is rejected.
        let c3_ids: Vec<u32> = a4
            .elements()
            .unwrap()
            .iter()
            .enumerate()
            .filter(|(_, p)| {
                p.is_identity()
                    || (p.order() == 3 && p.apply(3) == 3)
            })
            .map(|(i, _)| i as u32)
            .collect();
        let c3 = ElementSet::from_ids(c3_ids);
        assert_eq!(c3.len(), 3);
        assert_eq!(a4.quotient(&c3).unwrap_err(), GroupError::NotNormal);

        // A non-subgroup is rejected.
        let bad = ElementSet::from_ids(vec![0, 1]);
        let not_sub = a4.quotient(&bad);
        assert!(matches!(
            not_sub.unwrap_err(),
            GroupError::NotASubgroup | GroupError::NotNormal
        ));
    }
}
