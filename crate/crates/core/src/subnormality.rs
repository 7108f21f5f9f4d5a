//! Subnormal chain predicates: plain subnormality, chains whose steps all
//! have supersoluble quotient over the core, and the Kegel variant where
//! each step is either normal or has supersoluble quotient over the core.
//!
//! Chain existence is decided by breadth-first reachability over the
//! lattice; any intermediate subgroup is allowed as a chain member, not
//! only maximal ones. Reachability to the ambient subgroup is memoized per
//! ambient, and edge verdicts are memoized per pair, so repeated queries
//! against one lattice share all the work.

use std::sync::Arc;

use crate::error::GroupError;
use crate::formations::is_quotient_supersoluble;
use crate::lattice::{SubgroupId, SubgroupLattice};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepKind {
    Normal,
    UQuotient,
}

/// An ascending chain witnessing K-U-subnormality, with the kind of each
/// step recorded.
#[derive(Debug, Clone)]
pub struct KUChain {
    pub subgroups: Vec<SubgroupId>,
    pub steps: Vec<StepKind>,
}

/// Outcome of quantifying K-U-subnormality over all n-maximal subgroups.
#[derive(Debug, Clone)]
pub struct NMaxVerdict {
    pub holds: bool,
    pub failures: Vec<SubgroupId>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum EdgeKind {
    KegelU,
    UOnly,
}

#[derive(Debug)]
pub struct ReachData {
    reached: Vec<bool>,
    parent: Vec<SubgroupId>,
}

/// Whether the step `h <= k` is admissible: normal, or supersoluble
/// quotient over the core of `h` in `k`.
fn edge_holds(l: &SubgroupLattice, h: SubgroupId, k: SubgroupId, kind: EdgeKind) -> bool {
    let memo = match kind {
        EdgeKind::KegelU => &l.ku_edge_memo,
        EdgeKind::UOnly => &l.u_edge_memo,
    };
    if let Some(&v) = memo.read().unwrap().get(&(h, k)) {
        return v;
    }
    let v = match kind {
        EdgeKind::KegelU => {
            l.is_normal_in(h, k).expect("contained") || u_quotient_step(l, h, k)
        }
        EdgeKind::UOnly => u_quotient_step(l, h, k),
    };
    memo.write().unwrap().insert((h, k), v);
    v
}

fn u_quotient_step(l: &SubgroupLattice, h: SubgroupId, k: SubgroupId) -> bool {
    let core = l.core_within(h, k).expect("contained");
    is_quotient_supersoluble(l, k, core).expect("core is normal")
}

fn reach(l: &SubgroupLattice, amb: SubgroupId, kind: EdgeKind) -> Arc<ReachData> {
    let memo = match kind {
        EdgeKind::KegelU => &l.ku_reach_memo,
        EdgeKind::UOnly => &l.u_reach_memo,
    };
    if let Some(data) = memo.read().unwrap().get(&amb) {
        return Arc::clone(data);
    }
    let ns = l.subgroup_count();
    let mut reached = vec![false; ns];
    let mut parent = vec![u32::MAX; ns];
    reached[amb as usize] = true;
    let candidates: Vec<SubgroupId> = (0..ns as u32)
        .filter(|&h| h != amb && l.is_subset(h, amb))
        .collect();
    let mut frontier = vec![amb];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &h in &candidates {
            if reached[h as usize] {
                continue;
            }
            for &k in &frontier {
                if h != k && l.is_subset(h, k) && edge_holds(l, h, k, kind) {
                    reached[h as usize] = true;
                    parent[h as usize] = k;
                    next.push(h);
                    break;
                }
            }
        }
        frontier = next;
    }
    let data = Arc::new(ReachData { reached, parent });
    memo.write()
        .unwrap()
        .entry(amb)
        .or_insert_with(|| Arc::clone(&data))
        .clone()
}

/// Subnormality in the parent group, by iterated normal closure descent.
pub fn is_subnormal(l: &SubgroupLattice, h: SubgroupId) -> bool {
    is_subnormal_in(l, h, l.top()).expect("contained in top")
}

pub fn is_subnormal_in(
    l: &SubgroupLattice,
    h: SubgroupId,
    amb: SubgroupId,
) -> Result<bool, GroupError> {
    if !l.is_subset(h, amb) {
        return Err(GroupError::NotContained);
    }
    let mut k = amb;
    loop {
        if k == h {
            return Ok(true);
        }
        let next = normal_closure_in(l, h, k);
        if next == k {
            return Ok(false);
        }
        k = next;
    }
}

/// Smallest subgroup of `k` containing `h` and normal in `k`.
pub fn normal_closure_in(l: &SubgroupLattice, h: SubgroupId, k: SubgroupId) -> SubgroupId {
    let mut orbit = vec![h];
    let mut head = 0;
    while head < orbit.len() {
        let cur = orbit[head];
        head += 1;
        for &g in l.generators_of(k) {
            let img = l.conjugate_subgroup(cur, g);
            if !orbit.contains(&img) {
                orbit.push(img);
            }
        }
    }
    let mut gens: Vec<u32> = Vec::new();
    for &m in &orbit {
        gens.extend_from_slice(l.generators_of(m));
    }
    gens.sort_unstable();
    gens.dedup();
    l.generated_by(&gens)
}

pub fn is_u_subnormal(l: &SubgroupLattice, h: SubgroupId) -> bool {
    is_u_subnormal_in(l, h, l.top()).expect("contained in top")
}

pub fn is_u_subnormal_in(
    l: &SubgroupLattice,
    h: SubgroupId,
    amb: SubgroupId,
) -> Result<bool, GroupError> {
    if !l.is_subset(h, amb) {
        return Err(GroupError::NotContained);
    }
    Ok(reach(l, amb, EdgeKind::UOnly).reached[h as usize])
}

pub fn is_k_u_subnormal(l: &SubgroupLattice, h: SubgroupId) -> bool {
    is_k_u_subnormal_in(l, h, l.top()).expect("contained in top")
}

pub fn is_k_u_subnormal_in(
    l: &SubgroupLattice,
    h: SubgroupId,
    amb: SubgroupId,
) -> Result<bool, GroupError> {
    if !l.is_subset(h, amb) {
        return Err(GroupError::NotContained);
    }
    Ok(reach(l, amb, EdgeKind::KegelU).reached[h as usize])
}

/// A shortest witnessing chain from `h` to the whole group, if one exists.
/// Ties are broken canonically, so the same lattice always yields the same
/// chain.
pub fn k_u_chain(l: &SubgroupLattice, h: SubgroupId) -> Option<KUChain> {
    k_u_chain_in(l, h, l.top())
}

pub fn k_u_chain_in(l: &SubgroupLattice, h: SubgroupId, amb: SubgroupId) -> Option<KUChain> {
    let data = reach(l, amb, EdgeKind::KegelU);
    if !data.reached[h as usize] {
        return None;
    }
    let mut subgroups = vec![h];
    let mut steps = Vec::new();
    let mut cur = h;
    while cur != amb {
        let next = data.parent[cur as usize];
        steps.push(if l.is_normal_in(cur, next).expect("contained") {
            StepKind::Normal
        } else {
            StepKind::UQuotient
        });
        subgroups.push(next);
        cur = next;
    }
    let chain = KUChain { subgroups, steps };
    debug_assert!(validate_ku_chain(l, &chain));
    Some(chain)
}

/// Check a chain against the definition, step by step.
pub fn validate_ku_chain(l: &SubgroupLattice, chain: &KUChain) -> bool {
    if chain.subgroups.len() != chain.steps.len() + 1 {
        return false;
    }
    for (i, &kind) in chain.steps.iter().enumerate() {
        let (h, k) = (chain.subgroups[i], chain.subgroups[i + 1]);
        if !l.is_subset(h, k) {
            return false;
        }
        let ok = match kind {
            StepKind::Normal => l.is_normal_in(h, k).unwrap_or(false),
            StepKind::UQuotient => u_quotient_step(l, h, k),
        };
        if !ok {
            return false;
        }
    }
    true
}

/// The predicate P_n: every n-maximal subgroup is K-U-subnormal. The
/// failing subgroups are reported for witnesses.
pub fn all_n_maximal_ku_subnormal(l: &SubgroupLattice, n: u32) -> NMaxVerdict {
    let data = reach(l, l.top(), EdgeKind::KegelU);
    let failures: Vec<SubgroupId> = l
        .n_maximal_subgroups(n)
        .into_iter()
        .filter(|&h| !data.reached[h as usize])
        .collect();
    NMaxVerdict {
        holds: failures.is_empty(),
        failures,
    }
}
