//! Recognizers for the structural group types characterized by the chain
//! predicates P_2 and P_3, plus the per-group report that checks each
//! biconditional.
//!
//! The recognizers test the displayed structural conditions literally
//! against lattice data: normal Sylow subgroups, minimal normality,
//! Frattini subgroups, conjugacy-class counts of maximal subgroups, and
//! SDH tests on constructed product subgroups. Where a type names Sylow
//! subgroups for several primes, all prime assignments are tried.

use std::fmt;

use crate::error::GroupError;
use crate::formations::{
    frattini_of_residual_is_prime, is_minimal_nonsupersoluble, is_sdh,
    is_sdh_in, is_supersoluble, is_supersoluble_in, u_residual,
};
use crate::lattice::{SubgroupId, SubgroupLattice};
use crate::structure::{
    complements_in, frattini, frattini_in, hall_in, hall_subgroup, is_minimal_normal,
    is_nilpotent_in, is_ore_dispersive, is_soluble, minimal_normal_subgroups, normal_subgroups,
    normal_sylow, o_p, p_part, sylow_in,
};
use crate::subnormality::all_n_maximal_ku_subnormal;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TypeLabel {
    BI,
    BII,
    BIII,
    BIV,
    BV,
    BVI,
    BVII,
    CI,
    CII,
    CIII,
    CIV,
    D1,
    D2,
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TypeLabel::BI => "B-I",
            TypeLabel::BII => "B-II",
            TypeLabel::BIII => "B-III",
            TypeLabel::BIV => "B-IV",
            TypeLabel::BV => "B-V",
            TypeLabel::BVI => "B-VI",
            TypeLabel::BVII => "B-VII",
            TypeLabel::CI => "C-I",
            TypeLabel::CII => "C-II",
            TypeLabel::CIII => "C-III",
            TypeLabel::CIV => "C-IV",
            TypeLabel::D1 => "D-1",
            TypeLabel::D2 => "D-2",
        };
        f.write_str(s)
    }
}

/// Per-group verdicts and equivalence status.
#[derive(Debug, Clone)]
pub struct ClassificationReport {
    pub group_name: String,
    pub order: u64,
    pub pi: Vec<u64>,
    pub soluble: bool,
    pub supersoluble: bool,
    pub p2: bool,
    pub p3: bool,
    pub u_residual_order: u64,
    pub labels: Vec<String>,
    pub equivalence_ok: bool,
    pub witnesses: Vec<String>,
}

/// Theorem A shape: supersoluble or SDH.
pub fn recognize_theorem_a(l: &SubgroupLattice) -> bool {
    is_supersoluble(l) || is_sdh(l)
}

fn require_preconditions(l: &SubgroupLattice, pi: usize) -> Result<(), GroupError> {
    if is_supersoluble(l) {
        return Err(GroupError::PreconditionViolated(
            "group is supersoluble".into(),
        ));
    }
    if l.group().prime_set().len() != pi {
        return Err(GroupError::PreconditionViolated(format!(
            "expected {} prime divisors, found {}",
            pi,
            l.group().prime_set().len()
        )));
    }
    if !is_soluble(l) {
        return Err(GroupError::PreconditionViolated("group is insoluble".into()));
    }
    Ok(())
}

fn maximals_containing(l: &SubgroupLattice, h: SubgroupId) -> Vec<SubgroupId> {
    l.maximal_subgroups(l.top())
        .iter()
        .copied()
        .filter(|&m| l.is_subset(h, m))
        .collect()
}

fn ss_or_sdh(l: &SubgroupLattice, m: SubgroupId) -> bool {
    is_supersoluble_in(l, m) || is_sdh_in(l, m)
}

fn is_p_subgroup(l: &SubgroupLattice, h: SubgroupId, p: u64) -> bool {
    let o = l.order_of(h);
    o > 1 && o == p_part(o, p)
}

/// Distinct conjugacy classes of the maximal subgroups, as sorted class ids.
fn maximal_class_ids(l: &SubgroupLattice) -> Vec<u32> {
    let mut ids: Vec<u32> = l
        .maximal_subgroups(l.top())
        .iter()
        .map(|&m| l.class_of(m))
        .collect();
    ids.sort_unstable();
    ids.dedup();
    ids
}

fn ordered_prime_pairs(l: &SubgroupLattice) -> Vec<(u64, u64)> {
    let primes = l.group().prime_set();
    vec![(primes[0], primes[1]), (primes[1], primes[0])]
}

fn exponent_divides(l: &SubgroupLattice, h: SubgroupId, n: u64) -> bool {
    n % l.subgroup_exponent(h) == 0
}

fn type_b_i(l: &SubgroupLattice) -> bool {
    is_sdh(l) || (is_minimal_nonsupersoluble(l) && frattini_of_residual_is_prime(l, l.top()))
}

fn type_b_ii(l: &SubgroupLattice) -> bool {
    for (p, q) in ordered_prime_pairs(l) {
        let Some(gp) = normal_sylow(l, p) else { continue };
        let Ok(mins) = minimal_normal_subgroups(l) else {
            continue;
        };
        if mins != vec![gp] {
            continue;
        }
        let Some(gq) = sylow_in(l, l.top(), q) else { continue };
        if !l
            .n_maximal_in(gq, 2)
            .iter()
            .all(|&h| l.is_abelian_subgroup(h) && exponent_divides(l, h, p - 1))
        {
            continue;
        }
        if !maximals_containing(l, gp).iter().all(|&m| ss_or_sdh(l, m)) {
            continue;
        }
        if l
            .maximal_subgroups(l.top())
            .iter()
            .all(|&m| is_supersoluble_in(l, m))
        {
            continue;
        }
        return true;
    }
    false
}

fn type_b_iii(l: &SubgroupLattice) -> bool {
    for (p, q) in ordered_prime_pairs(l) {
        let Some(gp) = normal_sylow(l, p) else { continue };
        if !is_minimal_normal(l, gp) {
            continue;
        }
        let Ok(mins) = minimal_normal_subgroups(l) else {
            continue;
        };
        let Some(gq) = sylow_in(l, l.top(), q) else { continue };
        for &q1 in mins.iter().filter(|&&x| l.order_of(x) == q) {
            if !l.is_subset(q1, gq) {
                continue;
            }
            let gpq1 = l.product_subgroup(gp, q1).expect("product with normal");
            if !maximals_containing(l, gpq1)
                .iter()
                .all(|&m| is_supersoluble_in(l, m))
            {
                continue;
            }
            for q2 in complements_in(l, gq, q1).expect("q1 normal in gq") {
                if l.intersection(gpq1, q2) != l.bottom() {
                    continue;
                }
                let gpq2 = l.product_subgroup(gp, q2).expect("product with normal");
                if !is_sdh_in(l, gpq2) {
                    continue;
                }
                if p < q
                    && !l
                        .n_maximal_subgroups(2)
                        .iter()
                        .all(|&h| is_nilpotent_in(l, h))
                {
                    continue;
                }
                return true;
            }
        }
    }
    false
}

fn type_b_iv(l: &SubgroupLattice) -> bool {
    for (p, q) in ordered_prime_pairs(l) {
        let Some(gp) = normal_sylow(l, p) else { continue };
        if !is_minimal_normal(l, gp) {
            continue;
        }
        if o_p(l, q) == l.bottom() {
            continue;
        }
        let phi = frattini(l).expect("nontrivial group");
        if phi == l.bottom() {
            continue;
        }
        if !maximals_containing(l, gp).iter().all(|&m| ss_or_sdh(l, m)) {
            continue;
        }
        let quotient = l
            .group()
            .quotient(l.subgroup(phi))
            .expect("Frattini subgroup is normal");
        let ql = SubgroupLattice::build_with_cap(quotient, l.order() as u128)
            .expect("quotient is smaller than the parent");
        if type_b_ii(&ql) || type_b_iii(&ql) {
            return true;
        }
    }
    false
}

fn type_b_v(l: &SubgroupLattice) -> bool {
    for (p, q) in ordered_prime_pairs(l) {
        let Some(gp) = normal_sylow(l, p) else { continue };
        let Ok(mins) = minimal_normal_subgroups(l) else {
            continue;
        };
        let pmins: Vec<SubgroupId> = mins
            .iter()
            .copied()
            .filter(|&x| is_p_subgroup(l, x, p))
            .collect();
        let Some(gq) = sylow_in(l, l.top(), q) else { continue };
        for &p1 in &pmins {
            for &p2 in &pmins {
                if p1 == p2
                    || l.intersection(p1, p2) != l.bottom()
                    || l.product_subgroup(p1, p2) != Some(gp)
                {
                    continue;
                }
                if !maximals_containing(l, gp)
                    .iter()
                    .all(|&m| is_supersoluble_in(l, m))
                {
                    continue;
                }
                let p1gq = l.product_subgroup(p1, gq).expect("product with normal");
                if !is_sdh_in(l, p1gq) {
                    continue;
                }
                let p2gq = l.product_subgroup(p2, gq).expect("product with normal");
                if is_sdh_in(l, p2gq)
                    || (is_supersoluble_in(l, p2gq) && l.order_of(p2) == p)
                {
                    return true;
                }
            }
        }
    }
    false
}

fn type_b_vi(l: &SubgroupLattice) -> bool {
    for (p, q) in ordered_prime_pairs(l) {
        let Some(gp) = normal_sylow(l, p) else { continue };
        let Ok(phi_gp) = frattini_in(l, gp) else { continue };
        if phi_gp == l.bottom() || !is_minimal_normal(l, phi_gp) {
            continue;
        }
        if !maximals_containing(l, gp)
            .iter()
            .all(|&m| is_supersoluble_in(l, m))
        {
            continue;
        }
        let Some(gq) = sylow_in(l, l.top(), q) else { continue };
        let prod = l.product_subgroup(phi_gp, gq).expect("product with normal");
        if is_sdh_in(l, prod) {
            return true;
        }
    }
    false
}

fn type_b_vii(l: &SubgroupLattice) -> bool {
    let primes = l.group().prime_set();
    let (small, large) = (primes[0], primes[1]);
    if normal_sylow(l, small).is_some() || normal_sylow(l, large).is_some() {
        return false;
    }
    type_b_vii_small(l, small, large) || type_b_vii_large(l, large, small)
}

/// Type VII with p the smaller prime: G = P1 x| (G_q x| P2), cyclic G_q
/// with its maximal subgroup normal in G, and exactly the three displayed
/// classes of maximal subgroups.
fn type_b_vii_small(l: &SubgroupLattice, p: u64, q: u64) -> bool {
    let classes = maximal_class_ids(l);
    if classes.len() != 3 {
        return false;
    }
    let Some(gq) = sylow_in(l, l.top(), q) else {
        return false;
    };
    if !l.is_cyclic_subgroup(gq) {
        return false;
    }
    let aq = if l.order_of(gq) == q {
        l.bottom()
    } else {
        l.maximal_subgroups(gq)[0]
    };
    if !l.is_normal_in_parent(aq) {
        return false;
    }
    let Some(gp) = sylow_in(l, l.top(), p) else {
        return false;
    };
    let maxes = l.maximal_subgroups(l.top());
    let Ok(mins) = minimal_normal_subgroups(l) else {
        return false;
    };
    for &p1 in mins
        .iter()
        .filter(|&&x| is_p_subgroup(l, x, p) && l.order_of(x) * p == l.order_of(gp))
    {
        if complements_in(l, gp, p1)
            .map(|c| c.is_empty())
            .unwrap_or(true)
        {
            continue;
        }
        let p1gq = l.product_subgroup(p1, gq).expect("product with normal");
        if !maxes.contains(&p1gq) || !is_sdh_in(l, p1gq) {
            continue;
        }
        let aqgp = l.product_subgroup(aq, gp).expect("product with normal");
        if !maxes.contains(&aqgp) {
            continue;
        }
        let (c1, c2) = (l.class_of(p1gq), l.class_of(aqgp));
        if c1 == c2 {
            continue;
        }
        let rest: Vec<u32> = classes
            .iter()
            .copied()
            .filter(|&c| c != c1 && c != c2)
            .collect();
        if rest.len() != 1 {
            continue;
        }
        let rep = maxes
            .iter()
            .copied()
            .find(|&m| l.class_of(m) == rest[0])
            .expect("class has a member");
        if l.order_of(rep) != l.order_of(gq) * p {
            continue;
        }
        if l.intersection(p1, rep) != l.bottom() {
            continue;
        }
        // The remaining class has the G_q x| P2 shape: full Sylow q normal
        // inside.
        let has_normal_sylow_q = (0..l.subgroup_count() as u32).any(|x| {
            l.order_of(x) == l.order_of(gq)
                && l.is_subset(x, rep)
                && l.is_normal_in(x, rep).unwrap()
        });
        if !has_normal_sylow_q {
            continue;
        }
        return true;
    }
    false
}

/// Type VII with p the larger prime: G = P1(G_q x| P2) with a nonsplit
/// p-part P1 P2 = G_p, 1 != P1 meet P2 the maximal subgroup of cyclic P2.
fn type_b_vii_large(l: &SubgroupLattice, p: u64, q: u64) -> bool {
    let classes = maximal_class_ids(l);
    if classes.len() != 3 {
        return false;
    }
    let Some(gq) = sylow_in(l, l.top(), q) else {
        return false;
    };
    let gp_order = p_part(l.order(), p);
    let maxes = l.maximal_subgroups(l.top());
    let Some(gp_max) = maxes.iter().copied().find(|&m| l.order_of(m) == gp_order) else {
        return false;
    };
    let norm_p: Vec<SubgroupId> = (0..l.subgroup_count() as u32)
        .filter(|&x| is_p_subgroup(l, x, p) && l.is_normal_in_parent(x))
        .collect();
    let cyclic_p: Vec<SubgroupId> = (0..l.subgroup_count() as u32)
        .filter(|&x| {
            is_p_subgroup(l, x, p) && l.order_of(x) >= p * p && l.is_cyclic_subgroup(x)
        })
        .collect();
    for &p1 in &norm_p {
        for &p2 in &cyclic_p {
            let prod = l.product_set(p1, p2);
            if prod.len() as u64 != gp_order {
                continue;
            }
            if l.index_of_set(&prod).is_none() {
                continue;
            }
            let inter = l.intersection(p1, p2);
            if inter == l.bottom() || inter != l.maximal_subgroups(p2)[0] {
                continue;
            }
            let p1gq = l.product_subgroup(p1, gq).expect("product with normal");
            if !maxes.contains(&p1gq)
                || !l.is_normal_in_parent(p1gq)
                || !is_supersoluble_in(l, p1gq)
            {
                continue;
            }
            let m_order = l.order_of(gq) * l.order_of(p2);
            if m_order == 0 || l.order() % m_order != 0 || l.order() / m_order != p {
                continue;
            }
            let Some(m) = maxes.iter().copied().find(|&m| {
                l.order_of(m) == m_order
                    && is_sdh_in(l, m)
                    && (0..l.subgroup_count() as u32).any(|x| {
                        l.order_of(x) == l.order_of(gq)
                            && l.is_subset(x, m)
                            && l.is_normal_in(x, m).unwrap()
                    })
            }) else {
                continue;
            };
            let mut found: Vec<u32> =
                vec![l.class_of(p1gq), l.class_of(m), l.class_of(gp_max)];
            found.sort_unstable();
            found.dedup();
            if found == classes {
                return true;
            }
        }
    }
    false
}

pub fn theorem_b_matches(l: &SubgroupLattice) -> Result<Vec<TypeLabel>, GroupError> {
    require_preconditions(l, 2)?;
    let checks: [(TypeLabel, fn(&SubgroupLattice) -> bool); 7] = [
        (TypeLabel::BI, type_b_i),
        (TypeLabel::BII, type_b_ii),
        (TypeLabel::BIII, type_b_iii),
        (TypeLabel::BIV, type_b_iv),
        (TypeLabel::BV, type_b_v),
        (TypeLabel::BVI, type_b_vi),
        (TypeLabel::BVII, type_b_vii),
    ];
    Ok(checks
        .iter()
        .filter(|(_, f)| f(l))
        .map(|&(label, _)| label)
        .collect())
}

/// First matching type of Theorem B, or None.
pub fn recognize_theorem_b(l: &SubgroupLattice) -> Result<Option<TypeLabel>, GroupError> {
    Ok(theorem_b_matches(l)?.first().copied())
}

/// A Sylow-tower assignment (p, q, r) of the three primes, with the
/// witnessing subgroups: the normal Sylow p, the normal Hall {p,q}, the
/// Hall {q,r} complement and its internal Sylow subgroups.
struct Tower3 {
    p: u64,
    gp: SubgroupId,
    npq: SubgroupId,
    hqr: SubgroupId,
    gq: SubgroupId,
    gr: SubgroupId,
}

fn towers_3(l: &SubgroupLattice) -> Vec<Tower3> {
    let primes = l.group().prime_set().to_vec();
    debug_assert_eq!(primes.len(), 3);
    let orderings = [
        [primes[0], primes[1], primes[2]],
        [primes[0], primes[2], primes[1]],
        [primes[1], primes[0], primes[2]],
        [primes[1], primes[2], primes[0]],
        [primes[2], primes[0], primes[1]],
        [primes[2], primes[1], primes[0]],
    ];
    let norms = normal_subgroups(l);
    let mut towers = Vec::new();
    for [p, q, r] in orderings {
        let Some(gp) = normal_sylow(l, p) else { continue };
        let pq_order = p_part(l.order(), p) * p_part(l.order(), q);
        let Some(npq) = norms.iter().copied().find(|&x| l.order_of(x) == pq_order) else {
            continue;
        };
        let Some(hqr) = hall_subgroup(l, &[q, r]) else {
            continue;
        };
        let gq = l.intersection(hqr, npq);
        debug_assert_eq!(l.order_of(gq), p_part(l.order(), q));
        let Some(gr) = sylow_in(l, hqr, r) else { continue };
        towers.push(Tower3 {
            p,
            gp,
            npq,
            hqr,
            gq,
            gr,
        });
    }
    towers
}

fn type_c_i(l: &SubgroupLattice) -> bool {
    type_b_i(l)
}

fn type_c_ii(l: &SubgroupLattice) -> bool {
    let maxes = l.maximal_subgroups(l.top()).to_vec();
    for t in towers_3(l) {
        if !is_minimal_normal(l, t.gp) {
            continue;
        }
        if !maxes.iter().all(|&m| ss_or_sdh(l, m)) {
            continue;
        }
        if maxes.iter().all(|&m| is_supersoluble_in(l, m)) {
            continue;
        }
        let Ok(mins) = minimal_normal_subgroups(l) else {
            continue;
        };
        if mins == vec![t.gp]
            && !l
                .n_maximal_in(t.hqr, 2)
                .iter()
                .all(|&h| l.is_abelian_subgroup(h) && exponent_divides(l, h, t.p - 1))
        {
            continue;
        }
        if is_sdh_in(l, t.hqr) {
            if !maximals_containing(l, t.npq)
                .iter()
                .all(|&m| is_supersoluble_in(l, m))
            {
                continue;
            }
            let gpgr = l.product_subgroup(t.gp, t.gr).expect("product with normal");
            if !(is_sdh_in(l, gpgr)
                || (is_supersoluble_in(l, gpgr) && l.order_of(t.gp) == t.p))
            {
                continue;
            }
        }
        return true;
    }
    false
}

fn type_c_iii(l: &SubgroupLattice) -> bool {
    for t in towers_3(l) {
        if !l.is_cyclic_subgroup(t.gq) || !l.is_cyclic_subgroup(t.gr) {
            continue;
        }
        if !maximals_containing(l, t.gp)
            .iter()
            .all(|&m| is_supersoluble_in(l, m))
        {
            continue;
        }
        let Ok(mins) = minimal_normal_subgroups(l) else {
            continue;
        };
        let pmins: Vec<SubgroupId> = mins
            .iter()
            .copied()
            .filter(|&x| is_p_subgroup(l, x, t.p))
            .collect();
        for &p1 in &pmins {
            for &p2 in &pmins {
                if p1 == p2
                    || l.intersection(p1, p2) != l.bottom()
                    || l.product_subgroup(p1, p2) != Some(t.gp)
                {
                    continue;
                }
                let p1h = l.product_subgroup(p1, t.hqr).expect("product with normal");
                if !is_sdh_in(l, p1h) {
                    continue;
                }
                let p2h = l.product_subgroup(p2, t.hqr).expect("product with normal");
                if is_sdh_in(l, p2h)
                    || (is_supersoluble_in(l, p2h) && l.order_of(p2) == t.p)
                {
                    return true;
                }
            }
        }
    }
    false
}

fn type_c_iv(l: &SubgroupLattice) -> bool {
    for t in towers_3(l) {
        let Ok(phi_gp) = frattini_in(l, t.gp) else { continue };
        if phi_gp == l.bottom() || !is_minimal_normal(l, phi_gp) {
            continue;
        }
        if !maximals_containing(l, t.gp)
            .iter()
            .all(|&m| is_supersoluble_in(l, m))
        {
            continue;
        }
        let prod = l
            .product_subgroup(phi_gp, t.hqr)
            .expect("product with normal");
        if is_sdh_in(l, prod) {
            return true;
        }
    }
    false
}

pub fn theorem_c_matches(l: &SubgroupLattice) -> Result<Vec<TypeLabel>, GroupError> {
    require_preconditions(l, 3)?;
    let checks: [(TypeLabel, fn(&SubgroupLattice) -> bool); 4] = [
        (TypeLabel::CI, type_c_i),
        (TypeLabel::CII, type_c_ii),
        (TypeLabel::CIII, type_c_iii),
        (TypeLabel::CIV, type_c_iv),
    ];
    Ok(checks
        .iter()
        .filter(|(_, f)| f(l))
        .map(|&(label, _)| label)
        .collect())
}

pub fn recognize_theorem_c(l: &SubgroupLattice) -> Result<Option<TypeLabel>, GroupError> {
    Ok(theorem_c_matches(l)?.first().copied())
}

fn type_d(l: &SubgroupLattice) -> Option<TypeLabel> {
    let mut primes = l.group().prime_set().to_vec();
    primes.sort_unstable_by(|a, b| b.cmp(a));
    let [p, q, r, t] = [primes[0], primes[1], primes[2], primes[3]];
    if !is_ore_dispersive(l) {
        return None;
    }
    let order = l.order();
    let norms = normal_subgroups(l);
    let find_norm = |o: u64| norms.iter().copied().find(|&x| l.order_of(x) == o);
    let np = find_norm(p_part(order, p))?;
    let npq = find_norm(p_part(order, p) * p_part(order, q))?;
    let npqr = find_norm(p_part(order, p) * p_part(order, q) * p_part(order, r))?;
    let w = hall_subgroup(l, &[q, r, t])?;
    let hrt = hall_in(l, w, &[r, t])?;
    let gq = l.intersection(w, npq);
    let gr = l.intersection(hrt, npqr);
    let gt = sylow_in(l, hrt, t)?;
    if !l.is_cyclic_subgroup(gr) || !l.is_cyclic_subgroup(gt) {
        return None;
    }
    let maxes = l.maximal_subgroups(l.top()).to_vec();
    if !maxes.iter().all(|&m| ss_or_sdh(l, m)) {
        return None;
    }
    // The displayed representatives; Phi factors degenerate to the plain
    // products when the Sylow subgroup is elementary.
    let phi_gq = frattini_in(l, gq).ok()?;
    let phi_gr = frattini_in(l, gr).ok()?;
    let phi_gt = frattini_in(l, gt).ok()?;
    let m_t = l.product_subgroup(npqr, phi_gt)?;
    let inner_r = l.product_subgroup(phi_gr, gt)?;
    let m_r = l.product_subgroup(npq, inner_r)?;
    let inner_q = l.product_subgroup(phi_gq, hrt)?;
    let m_q = l.product_subgroup(np, inner_q)?;
    let reps = [w, m_t, m_r, m_q];
    if reps.iter().any(|rep| !maxes.contains(rep)) {
        return None;
    }
    let mut rep_classes: Vec<u32> = reps.iter().map(|&m| l.class_of(m)).collect();
    rep_classes.sort_unstable();
    rep_classes.dedup();
    if rep_classes != maximal_class_ids(l) {
        return None;
    }
    if is_sdh_in(l, w) {
        if u_residual(l) != npq {
            return None;
        }
        // G_p x G_q: the factors commute elementwise.
        let commute = l.generators_of(np).iter().all(|&a| {
            l.generators_of(gq)
                .iter()
                .all(|&b| l.mult(a, b) == l.mult(b, a))
        });
        if !commute || !is_minimal_normal(l, gq) {
            return None;
        }
        if !is_supersoluble_in(l, m_t) || !is_supersoluble_in(l, m_r) {
            return None;
        }
        let gprt = l.product_subgroup(np, hrt)?;
        if is_sdh_in(l, gprt) || (is_supersoluble_in(l, gprt) && l.order_of(np) == p) {
            Some(TypeLabel::D1)
        } else {
            None
        }
    } else if is_supersoluble_in(l, w) {
        if l.is_cyclic_subgroup(gq) {
            Some(TypeLabel::D2)
        } else {
            None
        }
    } else {
        None
    }
}

pub fn theorem_d_matches(l: &SubgroupLattice) -> Result<Vec<TypeLabel>, GroupError> {
    require_preconditions(l, 4)?;
    Ok(type_d(l).into_iter().collect())
}

pub fn recognize_theorem_d(l: &SubgroupLattice) -> Result<Option<TypeLabel>, GroupError> {
    Ok(theorem_d_matches(l)?.first().copied())
}

fn witness_string(l: &SubgroupLattice, tag: &str, failures: &[SubgroupId]) -> String {
    let first = failures[0];
    format!(
        "{tag}:{}:sub{}:ord{}",
        failures.len(),
        first,
        l.order_of(first)
    )
}

/// Compute the full report: both predicates, the recognizer dispatched on
/// the number of prime divisors, and the equivalence checks
/// `P_2 <=> supersoluble-or-SDH` and `P_3 <=> supersoluble-or-typed`.
pub fn classify(l: &SubgroupLattice, name: &str) -> ClassificationReport {
    let pi = l.group().prime_set().to_vec();
    let soluble = is_soluble(l);
    let supersoluble = is_supersoluble(l);
    let p2 = all_n_maximal_ku_subnormal(l, 2);
    let p3 = all_n_maximal_ku_subnormal(l, 3);
    let u_res = u_residual(l);
    let sdh = is_sdh(l);

    let mut labels: Vec<String> = Vec::new();
    let mut typed = false;
    if supersoluble {
        labels.push("SUPERSOLUBLE".to_string());
    } else {
        if sdh {
            labels.push("A".to_string());
        }
        if soluble {
            let matches = match pi.len() {
                2 => theorem_b_matches(l).expect("preconditions hold"),
                3 => theorem_c_matches(l).expect("preconditions hold"),
                4 => theorem_d_matches(l).expect("preconditions hold"),
                _ => Vec::new(),
            };
            typed = !matches.is_empty();
            labels.extend(matches.iter().map(|t| t.to_string()));
        }
        if !typed {
            labels.push("NONE".to_string());
        }
    }

    let a_ok = p2.holds == (supersoluble || sdh);
    let bcd_ok = p3.holds == (supersoluble || typed);
    let mut witnesses = Vec::new();
    if !p2.holds {
        witnesses.push(witness_string(l, "p2", &p2.failures));
    }
    if !p3.holds {
        witnesses.push(witness_string(l, "p3", &p3.failures));
    }
    if !a_ok {
        witnesses.push("equiv:p2-vs-A".to_string());
    }
    if !bcd_ok {
        witnesses.push("equiv:p3-vs-type".to_string());
    }

    ClassificationReport {
        group_name: name.to_string(),
        order: l.order(),
        pi,
        soluble,
        supersoluble,
        p2: p2.holds,
        p3: p3.holds,
        u_residual_order: l.order_of(u_res),
        labels,
        equivalence_ok: a_ok && bcd_ok,
        witnesses,
    }
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

    fn a4() -> SubgroupLattice {
        lattice_of(vec![perm(4, &[&[1, 2, 3]]), perm(4, &[&[2, 3, 4]])])
    }

    fn sl23() -> SubgroupLattice {
        let pts = [
            (1, 0),
            (2, 0),
            (0, 1),
            (1, 1),
            (2, 1),
            (0, 2),
            (1, 2),
            (2, 2),
        ];
        let idx = |v: (usize, usize)| pts.iter().position(|&w| w == v).unwrap();
        let mk = |f: &dyn Fn(usize, usize) -> (usize, usize)| {
            Permutation::from_images(pts.iter().map(|&(x, y)| idx(f(x, y))).collect()).unwrap()
        };
        let s = mk(&|x, y| ((2 * y) % 3, x));
        let t = mk(&|x, y| ((x + y) % 3, y));
        lattice_of(vec![s, t])
    }

    #[test]
    fn theorem_a_shapes() {
        assert!(recognize_theorem_a(&a4()));
        assert!(!recognize_theorem_a(&s4()));
        let c30 = lattice_of(vec![perm(30, &[&(1..=30).collect::<Vec<_>>()[..]])]);
        assert!(recognize_theorem_a(&c30));
    }

    #[test]
    fn a4_is_type_b_i_via_sdh() {
        let l = a4();
        assert_eq!(recognize_theorem_b(&l).unwrap(), Some(TypeLabel::BI));
    }

    #[test]
    fn sl23_is_type_b_i_via_prime_frattini() {
        let l = sl23();
        assert_eq!(l.order(), 24);
        assert!(!is_sdh(&l));
        assert_eq!(recognize_theorem_b(&l).unwrap(), Some(TypeLabel::BI));
    }

    #[test]
    fn s4_is_type_b_vii() {
        // S4 satisfies the displayed Type VII(i) conditions: no normal
        // Sylow subgroup, exactly three classes of maximal subgroups with
        // representatives A4 = V4 x| C3 (an SDH group), S3 = C3 x| C2 and
        // D8 = V4 x| C2, with cyclic Sylow 3.
        let l = s4();
        assert_eq!(recognize_theorem_b(&l).unwrap(), Some(TypeLabel::BVII));
        // Consistently, every 3-maximal subgroup is K-U-subnormal.
        assert!(all_n_maximal_ku_subnormal(&l, 3).holds);
    }

    #[test]
    fn preconditions_are_enforced() {
        let c6 = lattice_of(vec![perm(6, &[&[1, 2, 3, 4, 5, 6]])]);
        assert!(matches!(
            recognize_theorem_b(&c6),
            Err(GroupError::PreconditionViolated(_))
        ));
        let a5 = lattice_of(vec![perm(5, &[&[1, 2, 3]]), perm(5, &[&[1, 2, 3, 4, 5]])]);
        assert!(matches!(
            recognize_theorem_c(&a5),
            Err(GroupError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn classify_a4() {
        let report = classify(&a4(), "a4");
        assert!(!report.supersoluble);
        assert!(report.p2 && report.p3);
        assert_eq!(report.u_residual_order, 4);
        assert_eq!(report.labels, vec!["A", "B-I"]);
        assert!(report.equivalence_ok);
        assert!(report.witnesses.is_empty());
    }

    #[test]
    fn classify_s4() {
        let report = classify(&s4(), "s4");
        assert!(!report.p2);
        assert!(report.p3);
        assert_eq!(report.labels, vec!["B-VII"]);
        assert!(report.equivalence_ok);
        assert!(!report.witnesses.is_empty());
    }

    #[test]
    fn classify_a5() {
        let a5 = lattice_of(vec![perm(5, &[&[1, 2, 3]]), perm(5, &[&[1, 2, 3, 4, 5]])]);
        let report = classify(&a5, "a5");
        assert!(!report.soluble);
        assert!(!report.p3);
        assert_eq!(report.labels, vec!["NONE"]);
        assert!(report.equivalence_ok);
    }

    #[test]
    fn classify_supersoluble() {
        let c6 = lattice_of(vec![perm(6, &[&[1, 2, 3, 4, 5, 6]])]);
        let report = classify(&c6, "c6");
        assert!(report.supersoluble && report.p2 && report.p3);
        assert_eq!(report.labels, vec!["SUPERSOLUBLE"]);
        assert_eq!(report.u_residual_order, 1);
        assert!(report.equivalence_ok);
    }

    #[test]
    fn classify_trivial_group() {
        let triv = lattice_of(vec![Permutation::identity(1)]);
        let report = classify(&triv, "c1");
        assert!(report.supersoluble && report.equivalence_ok);
        assert!(report.pi.is_empty());
    }
}
