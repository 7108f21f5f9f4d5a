//! Complete subgroup lattices of small groups.
//!
//! Every subgroup is a join of cyclic subgroups, so the lattice is the
//! fixpoint of the set of cyclic subgroups under pairwise join. Subgroups
//! are carried as canonical element-id sets and ordered by
//! (order, lexicographic id list); all derived data is deterministic.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::error::GroupError;
use crate::group::{ElementSet, Group, DEFAULT_LATTICE_CAP};
use crate::perm::lcm;
use crate::subnormality::ReachData;

pub type SubgroupId = u32;

/// Safety valve for degenerate inputs whose subgroup count explodes.
const MAX_SUBGROUPS: usize = 200_000;

pub struct SubgroupLattice {
    group: Group,
    n: usize,
    mult: Vec<u32>,
    inv: Vec<u32>,
    elem_orders: Vec<u64>,
    gen_ids: Vec<u32>,
    subgroups: Vec<ElementSet>,
    index_map: HashMap<Vec<u32>, u32>,
    subset: Vec<bool>,
    max_in: Vec<Vec<u32>>,
    gens_of: Vec<Vec<u32>>,
    class_of: Vec<u32>,
    classes: Vec<Vec<u32>>,
    normal_in_parent: Vec<bool>,
    core_in_parent: Vec<u32>,
    normalizer_of: Vec<u32>,
    top: SubgroupId,
    bottom: SubgroupId,
    pub(crate) normal_memo: RwLock<HashMap<(u32, u32), bool>>,
    pub(crate) core_within_memo: RwLock<HashMap<(u32, u32), u32>>,
    pub(crate) quotient_ss_memo: RwLock<HashMap<(u32, u32), bool>>,
    pub(crate) ku_edge_memo: RwLock<HashMap<(u32, u32), bool>>,
    pub(crate) u_edge_memo: RwLock<HashMap<(u32, u32), bool>>,
    pub(crate) ku_reach_memo: RwLock<HashMap<u32, Arc<ReachData>>>,
    pub(crate) u_reach_memo: RwLock<HashMap<u32, Arc<ReachData>>>,
    pub(crate) u_residual_memo: RwLock<HashMap<u32, u32>>,
}

impl SubgroupLattice {
    pub fn build(group: Group) -> Result<Self, GroupError> {
        Self::build_with_cap(group, DEFAULT_LATTICE_CAP)
    }

    pub fn build_with_cap(group: Group, lattice_cap: u128) -> Result<Self, GroupError> {
        if group.order() > lattice_cap {
            return Err(GroupError::GroupTooLarge {
                order: group.order(),
                cap: lattice_cap,
            });
        }
        let elements = group.elements()?.to_vec();
        let n = elements.len();

        let mut index_of = HashMap::with_capacity(n);
        for (i, p) in elements.iter().enumerate() {
            index_of.insert(p.clone(), i as u32);
        }
        let mut mult = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                let prod = elements[a].compose(&elements[b]);
                mult[a * n + b] = *index_of.get(&prod).expect("closure");
            }
        }
        let mut inv = vec![0u32; n];
        for a in 0..n {
            let p = elements[a].inverse();
            inv[a] = *index_of.get(&p).expect("inverse in group");
        }
        let elem_orders: Vec<u64> = elements.iter().map(|p| p.order()).collect();
        let gen_ids: Vec<u32> = group
            .generators()
            .iter()
            .map(|g| *index_of.get(g).expect("generator in group"))
            .collect();

        let closure = |gens: &[u32]| -> Vec<u32> {
            let mut seen = vec![false; n];
            seen[0] = true;
            let mut out = vec![0u32];
            let mut head = 0;
            while head < out.len() {
                let x = out[head] as usize;
                head += 1;
                for &g in gens {
                    let y = mult[x * n + g as usize];
                    if !seen[y as usize] {
                        seen[y as usize] = true;
                        out.push(y);
                    }
                }
            }
            out.sort_unstable();
            out
        };

        // Seed with the trivial subgroup and all cyclic subgroups, then close
        // under pairwise join.
        let mut sets: Vec<Vec<u32>> = Vec::new();
        let mut raw_gens: Vec<Vec<u32>> = Vec::new();
        let mut seen_sets: HashMap<Vec<u32>, usize> = HashMap::new();
        let push = |set: Vec<u32>,
                        gens: Vec<u32>,
                        sets: &mut Vec<Vec<u32>>,
                        raw_gens: &mut Vec<Vec<u32>>,
                        seen_sets: &mut HashMap<Vec<u32>, usize>|
         -> bool {
            if seen_sets.contains_key(&set) {
                return false;
            }
            seen_sets.insert(set.clone(), sets.len());
            sets.push(set);
            raw_gens.push(gens);
            true
        };
        push(
            vec![0],
            Vec::new(),
            &mut sets,
            &mut raw_gens,
            &mut seen_sets,
        );
        for a in 1..n as u32 {
            let set = closure(&[a]);
            push(set, vec![a], &mut sets, &mut raw_gens, &mut seen_sets);
        }
        let mut k = 0;
        while k < sets.len() {
            for i in 0..k {
                let (small, large) = if sets[i].len() <= sets[k].len() {
                    (i, k)
                } else {
                    (k, i)
                };
                if is_sorted_subset(&sets[small], &sets[large]) {
                    continue;
                }
                let mut gens: Vec<u32> = raw_gens[i].clone();
                gens.extend_from_slice(&raw_gens[k]);
                gens.sort_unstable();
                gens.dedup();
                let set = closure(&gens);
                push(set, gens, &mut sets, &mut raw_gens, &mut seen_sets);
                if sets.len() > MAX_SUBGROUPS {
                    return Err(GroupError::GroupTooLarge {
                        order: group.order(),
                        cap: lattice_cap,
                    });
                }
            }
            k += 1;
        }

        // Canonical order.
        let mut order_ix: Vec<usize> = (0..sets.len()).collect();
        order_ix.sort_by(|&a, &b| (sets[a].len(), &sets[a]).cmp(&(sets[b].len(), &sets[b])));
        let subgroups: Vec<ElementSet> = order_ix
            .iter()
            .map(|&i| ElementSet::from_sorted(sets[i].clone()))
            .collect();
        let ns = subgroups.len();
        let mut index_map = HashMap::with_capacity(ns);
        for (i, s) in subgroups.iter().enumerate() {
            index_map.insert(s.ids().to_vec(), i as u32);
        }
        let bottom = 0u32;
        let top = (ns - 1) as u32;
        debug_assert_eq!(subgroups[top as usize].len(), n);

        let mut subset = vec![false; ns * ns];
        for i in 0..ns {
            for j in 0..ns {
                subset[i * ns + j] =
                    is_sorted_subset(subgroups[i].ids(), subgroups[j].ids());
            }
        }

        let mut max_in: Vec<Vec<u32>> = vec![Vec::new(); ns];
        for j in 0..ns {
            let subs_j: Vec<usize> = (0..ns)
                .filter(|&i| i != j && subset[i * ns + j])
                .collect();
            for &i in &subs_j {
                let blocked = subs_j
                    .iter()
                    .any(|&m| m != i && subset[i * ns + m]);
                if !blocked {
                    max_in[j].push(i as u32);
                }
            }
        }

        // Minimal generating ids, greedily in canonical element order.
        let mut gens_of: Vec<Vec<u32>> = Vec::with_capacity(ns);
        for s in &subgroups {
            let mut gens: Vec<u32> = Vec::new();
            let mut have: Vec<u32> = vec![0];
            for &a in s.ids() {
                if have.binary_search(&a).is_err() {
                    gens.push(a);
                    have = closure(&gens);
                    if have.len() == s.len() {
                        break;
                    }
                }
            }
            gens_of.push(gens);
        }

        let mut lattice = SubgroupLattice {
            group,
            n,
            mult,
            inv,
            elem_orders,
            gen_ids,
            subgroups,
            index_map,
            subset,
            max_in,
            gens_of,
            class_of: Vec::new(),
            classes: Vec::new(),
            normal_in_parent: Vec::new(),
            core_in_parent: Vec::new(),
            normalizer_of: Vec::new(),
            top,
            bottom,
            normal_memo: RwLock::new(HashMap::new()),
            core_within_memo: RwLock::new(HashMap::new()),
            quotient_ss_memo: RwLock::new(HashMap::new()),
            ku_edge_memo: RwLock::new(HashMap::new()),
            u_edge_memo: RwLock::new(HashMap::new()),
            ku_reach_memo: RwLock::new(HashMap::new()),
            u_reach_memo: RwLock::new(HashMap::new()),
            u_residual_memo: RwLock::new(HashMap::new()),
        };
        lattice.compute_conjugacy();
        Ok(lattice)
    }

    fn compute_conjugacy(&mut self) {
        let ns = self.subgroups.len();
        let mut class_of = vec![u32::MAX; ns];
        let mut classes: Vec<Vec<u32>> = Vec::new();
        for i in 0..ns as u32 {
            if class_of[i as usize] != u32::MAX {
                continue;
            }
            let cid = classes.len() as u32;
            let mut members = vec![i];
            class_of[i as usize] = cid;
            let mut head = 0;
            while head < members.len() {
                let cur = members[head];
                head += 1;
                for g in self.gen_ids.clone() {
                    let img = self.conjugate_subgroup(cur, g);
                    if class_of[img as usize] == u32::MAX {
                        class_of[img as usize] = cid;
                        members.push(img);
                    }
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        self.normal_in_parent = (0..ns)
            .map(|i| classes[class_of[i] as usize].len() == 1)
            .collect();
        self.core_in_parent = (0..ns as u32)
            .map(|i| {
                let members = &classes[class_of[i as usize] as usize];
                let mut core = self.subgroups[i as usize].clone();
                for &m in members.iter() {
                    core = core.intersect(&self.subgroups[m as usize]);
                }
                self.index_of_set(core.ids()).expect("core is a subgroup")
            })
            .collect();
        self.normalizer_of = (0..ns as u32)
            .map(|i| {
                let gens = &self.gens_of[i as usize];
                let set = &self.subgroups[i as usize];
                let mut fixing: Vec<u32> = Vec::new();
                for g in 0..self.n as u32 {
                    if gens
                        .iter()
                        .all(|&h| set.contains(self.conj_elem(h, g)))
                    {
                        fixing.push(g);
                    }
                }
                self.index_of_set(&fixing).expect("normalizer is a subgroup")
            })
            .collect();
        self.class_of = class_of;
        self.classes = classes;
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    /// Order of the parent group.
    pub fn order(&self) -> u64 {
        self.n as u64
    }

    pub fn subgroup_count(&self) -> usize {
        self.subgroups.len()
    }

    pub fn subgroup(&self, i: SubgroupId) -> &ElementSet {
        &self.subgroups[i as usize]
    }

    pub fn subgroups(&self) -> &[ElementSet] {
        &self.subgroups
    }

    pub fn order_of(&self, i: SubgroupId) -> u64 {
        self.subgroups[i as usize].len() as u64
    }

    pub fn top(&self) -> SubgroupId {
        self.top
    }

    pub fn bottom(&self) -> SubgroupId {
        self.bottom
    }

    pub fn index_of_set(&self, sorted_ids: &[u32]) -> Option<SubgroupId> {
        self.index_map.get(sorted_ids).copied()
    }

    pub fn is_subset(&self, i: SubgroupId, j: SubgroupId) -> bool {
        self.subset[i as usize * self.subgroups.len() + j as usize]
    }

    /// Maximal subgroups of `j`, in canonical order. Because the lattice is
    /// complete, maximality inside any interval agrees with this relation.
    pub fn maximal_subgroups(&self, j: SubgroupId) -> &[SubgroupId] {
        &self.max_in[j as usize]
    }

    /// All subgroups reachable from `amb` by a descending chain of exactly
    /// `n` maximality steps.
    pub fn n_maximal_in(&self, amb: SubgroupId, n: u32) -> Vec<SubgroupId> {
        let mut current = vec![amb];
        for _ in 0..n {
            let mut next: Vec<u32> = current
                .iter()
                .flat_map(|&j| self.max_in[j as usize].iter().copied())
                .collect();
            next.sort_unstable();
            next.dedup();
            current = next;
        }
        current
    }

    pub fn n_maximal_subgroups(&self, n: u32) -> Vec<SubgroupId> {
        self.n_maximal_in(self.top, n)
    }

    /// Product of element ids `a * b` (apply `a`, then `b`).
    pub fn mult(&self, a: u32, b: u32) -> u32 {
        self.mult[a as usize * self.n + b as usize]
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    /// Conjugate `a^g = g^-1 a g`.
    pub fn conj_elem(&self, a: u32, g: u32) -> u32 {
        self.mult(self.mult(self.inv(g), a), g)
    }

    pub fn elem_order(&self, a: u32) -> u64 {
        self.elem_orders[a as usize]
    }

    /// Element ids of the parent group's generators.
    pub fn generator_ids(&self) -> &[u32] {
        &self.gen_ids
    }

    /// A small generating set of element ids for subgroup `i`.
    pub fn generators_of(&self, i: SubgroupId) -> &[u32] {
        &self.gens_of[i as usize]
    }

    pub fn conjugate_subgroup(&self, i: SubgroupId, g: u32) -> SubgroupId {
        let mut ids: Vec<u32> = self.subgroups[i as usize]
            .ids()
            .iter()
            .map(|&a| self.conj_elem(a, g))
            .collect();
        ids.sort_unstable();
        self.index_of_set(&ids).expect("conjugate is a subgroup")
    }

    /// Largest subgroup of `i` normal in the parent.
    pub fn core(&self, i: SubgroupId) -> SubgroupId {
        self.core_in_parent[i as usize]
    }

    pub fn normalizer(&self, i: SubgroupId) -> SubgroupId {
        self.normalizer_of[i as usize]
    }

    pub fn is_normal_in_parent(&self, i: SubgroupId) -> bool {
        self.normal_in_parent[i as usize]
    }

    /// Conjugacy classes of subgroups under the parent group, each sorted,
    /// ordered by least member.
    pub fn conjugacy_classes(&self) -> &[Vec<SubgroupId>] {
        &self.classes
    }

    pub fn class_of(&self, i: SubgroupId) -> u32 {
        self.class_of[i as usize]
    }

    /// Whether `h` is normal in `k`; requires `h <= k`.
    pub fn is_normal_in(&self, h: SubgroupId, k: SubgroupId) -> Result<bool, GroupError> {
        if !self.is_subset(h, k) {
            return Err(GroupError::NotContained);
        }
        if k == self.top {
            return Ok(self.normal_in_parent[h as usize]);
        }
        if let Some(&v) = self.normal_memo.read().unwrap().get(&(h, k)) {
            return Ok(v);
        }
        let set = &self.subgroups[h as usize];
        let v = self.gens_of[k as usize].iter().all(|&g| {
            self.gens_of[h as usize]
                .iter()
                .all(|&x| set.contains(self.conj_elem(x, g)))
        });
        self.normal_memo.write().unwrap().insert((h, k), v);
        Ok(v)
    }

    /// Largest subgroup of `h` normal in `k` (the core of `h` in `k`).
    pub fn core_within(&self, h: SubgroupId, k: SubgroupId) -> Result<SubgroupId, GroupError> {
        if !self.is_subset(h, k) {
            return Err(GroupError::NotContained);
        }
        if k == self.top {
            return Ok(self.core_in_parent[h as usize]);
        }
        if let Some(&v) = self.core_within_memo.read().unwrap().get(&(h, k)) {
            return Ok(v);
        }
        // Orbit of h under conjugation by k, then intersect.
        let mut orbit = vec![h];
        let mut head = 0;
        while head < orbit.len() {
            let cur = orbit[head];
            head += 1;
            for &g in &self.gens_of[k as usize] {
                let img = self.conjugate_subgroup(cur, g);
                if !orbit.contains(&img) {
                    orbit.push(img);
                }
            }
        }
        let mut core = self.subgroups[h as usize].clone();
        for &m in &orbit {
            core = core.intersect(&self.subgroups[m as usize]);
        }
        let v = self.index_of_set(core.ids()).expect("core is a subgroup");
        self.core_within_memo.write().unwrap().insert((h, k), v);
        Ok(v)
    }

    /// Subgroup generated by the union of `i` and `j`.
    pub fn join(&self, i: SubgroupId, j: SubgroupId) -> SubgroupId {
        if self.is_subset(i, j) {
            return j;
        }
        if self.is_subset(j, i) {
            return i;
        }
        let mut gens: Vec<u32> = self.gens_of[i as usize].clone();
        gens.extend_from_slice(&self.gens_of[j as usize]);
        let set = self.closure_of(&gens);
        self.index_of_set(&set).expect("join is a subgroup")
    }

    pub fn intersection(&self, i: SubgroupId, j: SubgroupId) -> SubgroupId {
        let set = self.subgroups[i as usize].intersect(&self.subgroups[j as usize]);
        self.index_of_set(set.ids()).expect("intersection is a subgroup")
    }

    /// The set product `{ab : a in i, b in j}`, sorted.
    pub fn product_set(&self, i: SubgroupId, j: SubgroupId) -> Vec<u32> {
        let mut out = Vec::new();
        let mut seen = vec![false; self.n];
        for &a in self.subgroups[i as usize].ids() {
            for &b in self.subgroups[j as usize].ids() {
                let p = self.mult(a, b);
                if !seen[p as usize] {
                    seen[p as usize] = true;
                    out.push(p);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// The product of two subgroups when that set is itself a subgroup.
    pub fn product_subgroup(&self, i: SubgroupId, j: SubgroupId) -> Option<SubgroupId> {
        self.index_of_set(&self.product_set(i, j))
    }

    /// Closure of a set of element ids under multiplication.
    pub fn closure_of(&self, gens: &[u32]) -> Vec<u32> {
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut out = vec![0u32];
        let mut head = 0;
        while head < out.len() {
            let x = out[head];
            head += 1;
            for &g in gens {
                let y = self.mult(x, g);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    out.push(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Subgroup index of the closure of the given element ids.
    pub fn generated_by(&self, gens: &[u32]) -> SubgroupId {
        let set = self.closure_of(gens);
        self.index_of_set(&set).expect("closure is a subgroup")
    }

    pub fn subgroup_exponent(&self, i: SubgroupId) -> u64 {
        self.subgroups[i as usize]
            .ids()
            .iter()
            .fold(1u64, |acc, &a| lcm(acc, self.elem_orders[a as usize]))
    }

    pub fn is_abelian_subgroup(&self, i: SubgroupId) -> bool {
        let gens = &self.gens_of[i as usize];
        for (k, &a) in gens.iter().enumerate() {
            for &b in &gens[k + 1..] {
                if self.mult(a, b) != self.mult(b, a) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_cyclic_subgroup(&self, i: SubgroupId) -> bool {
        let want = self.order_of(i);
        self.subgroups[i as usize]
            .ids()
            .iter()
            .any(|&a| self.elem_orders[a as usize] == want)
    }
}

fn is_sorted_subset(small: &[u32], large: &[u32]) -> bool {
    if small.len() > large.len() {
        return false;
    }
    let mut j = 0;
    for &x in small {
        loop {
            if j == large.len() {
                return false;
            }
            if large[j] == x {
                j += 1;
                break;
            }
            if large[j] > x {
                return false;
            }
            j += 1;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
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

    #[test]
    fn subgroup_counts() {
        assert_eq!(s4().subgroup_count(), 30);
        let a4 = lattice_of(vec![perm(4, &[&[1, 2, 3]]), perm(4, &[&[2, 3, 4]])]);
        assert_eq!(a4.subgroup_count(), 10);
        assert_eq!(s3().subgroup_count(), 6);
        // Cyclic of prime order has only the two obvious subgroups.
        let c7 = lattice_of(vec![perm(7, &[&[1, 2, 3, 4, 5, 6, 7]])]);
        assert_eq!(c7.subgroup_count(), 2);
        // Q8: six subgroups, all normal.
        let q8 = lattice_of(vec![
            perm(8, &[&[1, 3, 2, 4], &[5, 8, 6, 7]]),
            perm(8, &[&[1, 5, 2, 6], &[3, 7, 4, 8]]),
        ]);
        assert_eq!(q8.subgroup_count(), 6);
        assert!((0..6).all(|i| q8.is_normal_in_parent(i)));
    }

    #[test]
    fn lagrange_holds() {
        let l = s4();
        for i in 0..l.subgroup_count() as u32 {
            assert_eq!(l.order() % l.order_of(i), 0);
        }
    }

    #[test]
    fn maximal_subgroups_of_s4() {
        let l = s4();
        let maxes = l.maximal_subgroups(l.top());
        assert_eq!(maxes.len(), 8);
        let mut orders: Vec<u64> = maxes.iter().map(|&i| l.order_of(i)).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![6, 6, 6, 6, 8, 8, 8, 12]);
    }

    #[test]
    fn maximal_chain_structure() {
        // C6: maximal subgroups are C2 and C3; the trivial subgroup has none.
        let c6 = lattice_of(vec![perm(6, &[&[1, 2, 3, 4, 5, 6]])]);
        let maxes = c6.maximal_subgroups(c6.top());
        let mut orders: Vec<u64> = maxes.iter().map(|&i| c6.order_of(i)).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![2, 3]);
        assert!(c6.maximal_subgroups(c6.bottom()).is_empty());
    }

    #[test]
    fn n_maximal_examples() {
        // 2-maximal subgroups of S3: only the trivial subgroup.
        let l = s3();
        assert_eq!(l.n_maximal_subgroups(2), vec![l.bottom()]);

        // C8 > C4 > C2 > 1 is the unique chain.
        let c8 = lattice_of(vec![perm(8, &[&[1, 2, 3, 4, 5, 6, 7, 8]])]);
        assert_eq!(c8.n_maximal_subgroups(3), vec![c8.bottom()]);

        // 3-maximal subgroups of S4 include an order-2 subgroup generated by
        // a double transposition (via S4 > D8 > V4 > C2).
        let l = s4();
        let three_max = l.n_maximal_subgroups(3);
        let has_double_transposition = three_max.iter().any(|&i| {
            l.order_of(i) == 2 && {
                let id = l.subgroup(i).ids()[1];
                l.elem_order(id) == 2
                    && l.group().elements().unwrap()[id as usize].cycles().len() == 2
            }
        });
        assert!(has_double_transposition);
    }

    #[test]
    fn cores_and_normalizers() {
        let l = s4();
        // Point stabilizers (order 6) have trivial core.
        let s3_idx = (0..l.subgroup_count() as u32)
            .find(|&i| l.order_of(i) == 6)
            .unwrap();
        assert_eq!(l.core(s3_idx), l.bottom());
        // D8 has core V4 (the unique normal order-4 subgroup).
        let d8_idx = (0..l.subgroup_count() as u32)
            .find(|&i| l.order_of(i) == 8)
            .unwrap();
        let core = l.core(d8_idx);
        assert_eq!(l.order_of(core), 4);
        assert!(l.is_normal_in_parent(core));
        // Normal subgroups are their own cores and have full normalizer.
        let a4_idx = (0..l.subgroup_count() as u32)
            .find(|&i| l.order_of(i) == 12)
            .unwrap();
        assert_eq!(l.core(a4_idx), a4_idx);
        assert_eq!(l.normalizer(a4_idx), l.top());

        // In S3, an order-2 subgroup is self-normalizing.
        let l3 = s3();
        let c2 = (0..l3.subgroup_count() as u32)
            .find(|&i| l3.order_of(i) == 2)
            .unwrap();
        assert_eq!(l3.normalizer(c2), c2);
    }

    #[test]
    fn conjugacy_classes_of_s4_maximals() {
        let l = s4();
        let maxes = l.maximal_subgroups(l.top());
        let mut class_ids: Vec<u32> = maxes.iter().map(|&i| l.class_of(i)).collect();
        class_ids.sort_unstable();
        class_ids.dedup();
        assert_eq!(class_ids.len(), 3);
        // Class sizes match the index of the normalizer.
        for &i in maxes {
            let class = &l.conjugacy_classes()[l.class_of(i) as usize];
            let expected = l.order() / l.order_of(l.normalizer(i));
            assert_eq!(class.len() as u64, expected);
        }
    }

    #[test]
    fn conjugacy_in_abelian_groups_is_trivial() {
        let c12 = lattice_of(vec![perm(12, &[&(1..=12).collect::<Vec<_>>()[..]])]);
        for class in c12.conjugacy_classes() {
            assert_eq!(class.len(), 1);
        }
    }

    #[test]
    fn normality_checks() {
        let l = s4();
        let v4 = (0..l.subgroup_count() as u32)
            .find(|&i| l.order_of(i) == 4 && l.is_normal_in_parent(i))
            .unwrap();
        assert!(l.is_normal_in(v4, l.top()).unwrap());
        let a4 = (0..l.subgroup_count() as u32)
            .find(|&i| l.order_of(i) == 12)
            .unwrap();
        // C3 inside A4 is not normal in A4.
        let c3 = (0..l.subgroup_count() as u32)
            .find(|&i| l.order_of(i) == 3 && l.is_subset(i, a4))
            .unwrap();
        assert!(!l.is_normal_in(c3, a4).unwrap());
        assert!(l.is_normal_in(c3, c3).unwrap());
        // Not-contained pairs are rejected.
        let c2 = (0..l.subgroup_count() as u32)
            .find(|&i| l.order_of(i) == 2 && !l.is_subset(i, a4))
            .unwrap();
        assert_eq!(l.is_normal_in(a4, c2).unwrap_err(), GroupError::NotContained);
    }

    #[test]
    fn joins_products_intersections() {
        let l = s4();
        let v4 = (0..l.subgroup_count() as u32)
            .find(|&i| l.order_of(i) == 4 && l.is_normal_in_parent(i))
            .unwrap();
        let c3 = (0..l.subgroup_count() as u32)
            .find(|&i| l.order_of(i) == 3)
            .unwrap();
        let join = l.join(v4, c3);
        assert_eq!(l.order_of(join), 12);
        // V4 normal, so the product set is already that subgroup.
        assert_eq!(l.product_subgroup(v4, c3), Some(join));
        assert_eq!(l.intersection(v4, c3), l.bottom());
        // Two distinct point stabilizers generate all of S4.
        let stabs: Vec<u32> = (0..l.subgroup_count() as u32)
            .filter(|&i| l.order_of(i) == 6)
            .collect();
        assert_eq!(l.join(stabs[0], stabs[1]), l.top());
        // Their product set is not a subgroup.
        assert_eq!(l.product_subgroup(stabs[0], stabs[1]), None);
    }

    #[test]
    fn conjugate_subgroups_share_order_and_core() {
        let l = s4();
        for class in l.conjugacy_classes() {
            for &m in class {
                assert_eq!(l.order_of(m), l.order_of(class[0]));
                assert_eq!(l.core(m), l.core(class[0]));
            }
        }
    }

    #[test]
    fn lattice_cap_enforced() {
        let g = Group::from_generators(vec![perm(4, &[&[1, 2, 3, 4]]), perm(4, &[&[1, 2]])])
            .unwrap();
        match SubgroupLattice::build_with_cap(g, 10) {
            Err(GroupError::GroupTooLarge { order: 24, cap: 10 }) => {}
            Err(other) => panic!("unexpected error {other}"),
            Ok(_) => panic!("cap not enforced"),
        }
    }

    #[test]
    fn subgroup_flags() {
        let l = s4();
        for i in 0..l.subgroup_count() as u32 {
            let cyc = l.is_cyclic_subgroup(i);
            let ab = l.is_abelian_subgroup(i);
            if cyc {
                assert!(ab);
            }
        }
        let c8 = lattice_of(vec![perm(8, &[&[1, 2, 3, 4, 5, 6, 7, 8]])]);
        assert!(c8.is_cyclic_subgroup(c8.top()));
        assert_eq!(c8.subgroup_exponent(c8.top()), 8);
    }
}
