//! Base and strong generating set via the deterministic Schreier-Sims
//! algorithm. Base points are chosen as the smallest moved point at each
//! level, orbits are grown breadth-first with generators in list order,
//! so the chain is reproducible for a fixed generator sequence.

use crate::error::GroupError;
use crate::perm::Permutation;

#[derive(Debug, Clone)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    /// Orbit of `base` in discovery order.
    orbit: Vec<usize>,
    /// `transversal[p]` maps `base` to `p` for p in the orbit.
    transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(degree: usize, base: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[base] = Some(Permutation::identity(degree));
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            transversal,
        }
    }

    fn recompute_orbit(&mut self, degree: usize) {
        self.orbit.clear();
        self.transversal = vec![None; degree];
        self.transversal[self.base] = Some(Permutation::identity(degree));
        self.orbit.push(self.base);
        let mut i = 0;
        while i < self.orbit.len() {
            let point = self.orbit[i];
            for g in &self.gens {
                let image = g.apply(point);
                if self.transversal[image].is_none() {
                    let rep = self.transversal[point].as_ref().unwrap().compose(g);
                    self.transversal[image] = Some(rep);
                    self.orbit.push(image);
                }
            }
            i += 1;
        }
    }
}

#[derive(Debug, Clone)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
    order: u128,
}

impl StabChain {
    pub fn build(degree: usize, generators: &[Permutation]) -> Result<Self, GroupError> {
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
            order: 1,
        };
        let gens: Vec<Permutation> = generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        if gens.is_empty() {
            return Ok(chain);
        }

        // Initial base: every generator must move some base point.
        let mut bases: Vec<usize> = Vec::new();
        for g in &gens {
            if bases.iter().all(|&b| g.apply(b) == b) {
                bases.push(g.smallest_moved_point().expect("non-identity"));
            }
        }
        for &b in &bases {
            chain.levels.push(Level::new(degree, b));
        }
        // Level l holds the generators fixing bases 0..l.
        for g in gens {
            for l in 0..bases.len() {
                chain.levels[l].gens.push(g.clone());
                if g.apply(bases[l]) != bases[l] {
                    break;
                }
            }
        }
        for lvl in &mut chain.levels {
            lvl.recompute_orbit(degree);
        }

        chain.complete()?;
        chain.order = chain.compute_order()?;
        Ok(chain)
    }

    /// Verify every level's Schreier generators sift to the identity,
    /// extending deeper levels with residues until the chain is closed.
    fn complete(&mut self) -> Result<(), GroupError> {
        if self.levels.is_empty() {
            return Ok(());
        }
        let mut level = self.levels.len() - 1;
        'outer: loop {
            let orbit = self.levels[level].orbit.clone();
            let gens = self.levels[level].gens.clone();
            for &point in &orbit {
                let rep = self.levels[level].transversal[point]
                    .as_ref()
                    .unwrap()
                    .clone();
                for g in &gens {
                    let image = g.apply(point);
                    let to_image = self.levels[level].transversal[image]
                        .as_ref()
                        .unwrap()
                        .clone();
                    let schreier = rep.compose(g).compose(&to_image.inverse());
                    if schreier.is_identity() {
                        continue;
                    }
                    let (residue, stuck) = self.sift_from(level + 1, schreier);
                    if residue.is_identity() {
                        continue;
                    }
                    if stuck == self.levels.len() {
                        let base = residue.smallest_moved_point().expect("non-identity");
                        self.levels.push(Level::new(self.degree, base));
                    }
                    for l in (level + 1)..=stuck {
                        self.levels[l].gens.push(residue.clone());
                        self.levels[l].recompute_orbit(self.degree);
                    }
                    level = stuck;
                    continue 'outer;
                }
            }
            if level == 0 {
                return Ok(());
            }
            level -= 1;
        }
    }

    /// Strip `g` through levels `start..`; returns the residue and the level
    /// at which sifting stopped (`levels.len()` if it passed every level).
    fn sift_from(&self, start: usize, g: Permutation) -> (Permutation, usize) {
        let mut h = g;
        for (i, lvl) in self.levels.iter().enumerate().skip(start) {
            let image = h.apply(lvl.base);
            match &lvl.transversal[image] {
                None => return (h, i),
                Some(rep) => h = h.compose(&rep.inverse()),
            }
        }
        (h, self.levels.len())
    }

    fn compute_order(&self) -> Result<u128, GroupError> {
        let mut order: u128 = 1;
        for lvl in &self.levels {
            order = order
                .checked_mul(lvl.orbit.len() as u128)
                .ok_or(GroupError::OrderOverflow)?;
        }
        Ok(order)
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        debug_assert_eq!(g.degree(), self.degree);
        let (residue, _) = self.sift_from(0, g.clone());
        residue.is_identity()
    }
}
