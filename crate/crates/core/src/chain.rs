//! Stabilizer chains (base and strong generating set) for permutation groups.
//!
//! Construction sifts the input generators, then random products of them, and
//! finishes with a deterministic pass that sifts every Schreier generator of
//! every level. A chain that survives that pass is complete, so `order` and
//! `contains` are exact, not probabilistic. Orbit discovery order is
//! deterministic given the generator list, and the random phase uses a fixed
//! seed, so identical inputs build identical chains.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::perm::{Permutation, Point};

const SEED_POOL: usize = 8;
const CLEAN_SIFTS_TO_STOP: u32 = 16;

#[derive(Clone, Debug)]
struct Level {
    base_point: Point,
    gens: Vec<Permutation>,
    /// Orbit of `base_point` under `gens`, in discovery order.
    orbit: Vec<Point>,
    /// `transversal[p]` maps `base_point` to `p`.
    transversal: Vec<Option<Permutation>>,
    transversal_inv: Vec<Option<Permutation>>,
}

impl Level {
    fn new(degree: usize, base_point: Point) -> Self {
        let mut transversal = vec![None; degree];
        let mut transversal_inv = vec![None; degree];
        transversal[base_point as usize] = Some(Permutation::identity(degree));
        transversal_inv[base_point as usize] = Some(Permutation::identity(degree));
        Level {
            base_point,
            gens: Vec::new(),
            orbit: vec![base_point],
            transversal,
            transversal_inv,
        }
    }

    /// Extends the orbit after `new_from` generators were appended.
    fn close_orbit(&mut self, new_from: usize) {
        let mut frontier: Vec<Point> = if new_from == 0 {
            self.orbit.clone()
        } else {
            // Existing points must be re-examined against the new generators only.
            let mut f = Vec::new();
            let existing = self.orbit.len();
            for oi in 0..existing {
                let p = self.orbit[oi];
                for si in new_from..self.gens.len() {
                    let q = self.gens[si].apply(p);
                    if self.transversal[q as usize].is_none() {
                        let u = self.transversal[p as usize]
                            .as_ref()
                            .unwrap()
                            .compose(&self.gens[si]);
                        self.transversal_inv[q as usize] = Some(u.inverse());
                        self.transversal[q as usize] = Some(u);
                        self.orbit.push(q);
                        f.push(q);
                    }
                }
            }
            f
        };
        while let Some(p) = frontier.pop() {
            for s in &self.gens {
                let q = s.apply(p);
                if self.transversal[q as usize].is_none() {
                    let u = self.transversal[p as usize].as_ref().unwrap().compose(s);
                    self.transversal_inv[q as usize] = Some(u.inverse());
                    self.transversal[q as usize] = Some(u);
                    self.orbit.push(q);
                    frontier.push(q);
                }
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

/// Result of sifting: the level the element got stuck at and the residue.
/// A residue of identity means membership; `level == levels.len()` with a
/// non-identity residue means the residue fixes every base point.
struct Sift {
    level: usize,
    residue: Permutation,
}

impl StabilizerChain {
    pub fn build(degree: usize, gens: &[Permutation]) -> Self {
        let mut chain = StabilizerChain {
            degree,
            levels: Vec::new(),
        };
        let mut real_gens: Vec<Permutation> = Vec::new();
        for g in gens {
            assert_eq!(g.degree(), degree, "generator degree mismatch");
            if !g.is_identity() {
                chain.sift_in(g.clone());
                real_gens.push(g.clone());
            }
        }
        if !real_gens.is_empty() {
            chain.random_seed(&real_gens);
        }
        chain.verify_complete();
        chain
    }

    /// Incremental construction used where a target order is known in advance:
    /// feed generators until `order()` reaches the target. Reaching it proves
    /// the chain complete (the transversal products are distinct elements), so
    /// no verification pass is needed in that case.
    pub fn new_incremental(degree: usize) -> Self {
        StabilizerChain {
            degree,
            levels: Vec::new(),
        }
    }

    /// Sifts `g` in, growing the chain if it was not already a member.
    /// Returns true if the chain grew.
    pub fn add_generator(&mut self, g: &Permutation) -> bool {
        assert_eq!(g.degree(), self.degree);
        if g.is_identity() {
            return false;
        }
        self.sift_in(g.clone())
    }

    /// Runs the deterministic completeness pass. Call after `add_generator`
    /// when no external order target certifies the chain.
    pub fn finish(&mut self) {
        self.verify_complete();
    }

    fn sift_in(&mut self, g: Permutation) -> bool {
        let sift = self.sift_raw(&g, 0);
        if sift.residue.is_identity() {
            return false;
        }
        self.insert_at(sift.level, sift.residue);
        true
    }

    fn sift_raw(&self, g: &Permutation, start: usize) -> Sift {
        let mut residue = g.clone();
        for (i, level) in self.levels.iter().enumerate().skip(start) {
            if residue.is_identity() {
                return Sift { level: i, residue };
            }
            let p = residue.apply(level.base_point);
            match &level.transversal_inv[p as usize] {
                Some(u_inv) => residue = residue.compose(u_inv),
                None => return Sift { level: i, residue },
            }
        }
        Sift {
            level: self.levels.len(),
            residue,
        }
    }

    /// Adds a residue that fixes the first `level` base points.
    fn insert_at(&mut self, level: usize, residue: Permutation) {
        debug_assert!(!residue.is_identity());
        if level == self.levels.len() {
            let bp = residue
                .min_moved_point()
                .expect("non-identity residue moves a point");
            self.levels.push(Level::new(self.degree, bp));
        }
        for i in 0..=level.min(self.levels.len() - 1) {
            let lvl = &mut self.levels[i];
            if lvl.gens.contains(&residue) {
                continue;
            }
            lvl.gens.push(residue.clone());
            let from = lvl.gens.len() - 1;
            lvl.close_orbit(from);
        }
    }

    fn random_seed(&mut self, gens: &[Permutation]) {
        let mut rng = ChaCha12Rng::seed_from_u64(0x5eed_0000 ^ gens.len() as u64);
        let mut pool: Vec<Permutation> = Vec::with_capacity(SEED_POOL);
        for i in 0..SEED_POOL.max(gens.len()) {
            pool.push(gens[i % gens.len()].clone());
        }
        let mut clean = 0u32;
        let mut iterations = 0u32;
        while clean < CLEAN_SIFTS_TO_STOP && iterations < 2000 {
            iterations += 1;
            let a = rng.gen_range(0..pool.len());
            let mut b = rng.gen_range(0..pool.len());
            while b == a {
                b = rng.gen_range(0..pool.len());
            }
            let prod = pool[a].compose(&pool[b]);
            pool[a] = prod.clone();
            if self.sift_in(prod) {
                clean = 0;
            } else {
                clean += 1;
            }
        }
    }

    /// Deterministic completeness check: every Schreier generator of every
    /// level must sift to the identity through the deeper levels. Any failure
    /// is inserted and the affected levels are re-checked.
    fn verify_complete(&mut self) {
        if self.levels.is_empty() {
            return;
        }
        let mut i = self.levels.len() - 1;
        loop {
            match self.check_level(i) {
                None => {
                    if i == 0 {
                        break;
                    }
                    i -= 1;
                }
                Some(sift) => {
                    let l = sift.level;
                    self.insert_at(l, sift.residue);
                    // Levels deeper than l are untouched and stay verified.
                    i = l.min(self.levels.len() - 1);
                }
            }
        }
    }

    /// Returns the first failing Schreier generator of the level, if any.
    fn check_level(&self, i: usize) -> Option<Sift> {
        let level = &self.levels[i];
        for oi in 0..level.orbit.len() {
            let p = level.orbit[oi];
            let u_p = level.transversal[p as usize].as_ref().unwrap();
            for s in &level.gens {
                let q = s.apply(p);
                let u_q_inv = level.transversal_inv[q as usize]
                    .as_ref()
                    .expect("orbit closed under generators");
                let schreier = u_p.compose(s).compose(u_q_inv);
                let sift = self.sift_raw(&schreier, i + 1);
                if !sift.residue.is_identity() {
                    return Some(sift);
                }
            }
        }
        None
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u128 {
        let mut order: u128 = 1;
        for level in &self.levels {
            order = order
                .checked_mul(level.orbit.len() as u128)
                .expect("group order exceeds u128");
        }
        order
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        self.sift_raw(g, 0).residue.is_identity()
    }

    pub fn base(&self) -> Vec<Point> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn base_len(&self) -> usize {
        self.levels.len()
    }

    /// Images of the base points under `g`; injective over group elements.
    pub fn base_images(&self, g: &Permutation) -> Vec<Point> {
        self.levels.iter().map(|l| g.apply(l.base_point)).collect()
    }

    /// Inverse of `base_images` for members of the group.
    pub fn element_from_base_images(&self, key: &[Point]) -> Option<Permutation> {
        debug_assert_eq!(key.len(), self.levels.len());
        let mut targets = key.to_vec();
        let mut reps: Vec<&Permutation> = Vec::with_capacity(self.levels.len());
        for (i, level) in self.levels.iter().enumerate() {
            let t = targets[i];
            let u = level.transversal[t as usize].as_ref()?;
            let u_inv = level.transversal_inv[t as usize].as_ref().unwrap();
            for target in targets.iter_mut().skip(i + 1) {
                *target = u_inv.apply(*target);
            }
            reps.push(u);
        }
        let mut g = Permutation::identity(self.degree);
        for u in reps.iter().rev() {
            g = g.compose(u);
        }
        Some(g)
    }

    /// Uniform random element: product of uniform transversal picks.
    pub fn random_element(&self, rng: &mut impl Rng) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for level in self.levels.iter().rev() {
            let p = level.orbit[rng.gen_range(0..level.orbit.len())];
            g = g.compose(level.transversal[p as usize].as_ref().unwrap());
        }
        g
    }

    pub fn elements(&self) -> ChainElements<'_> {
        ChainElements {
            chain: self,
            counters: vec![0; self.levels.len()],
            partial: Vec::new(),
            done: false,
            started: false,
        }
    }
}

/// Iterates every group element exactly once in a fixed order.
///
/// `partial[i]` holds the product of the transversal picks for levels deeper
/// than or equal to `i`, so an odometer step at level 0 recomputes one
/// composition on average.
pub struct ChainElements<'a> {
    chain: &'a StabilizerChain,
    counters: Vec<usize>,
    partial: Vec<Permutation>,
    done: bool,
    started: bool,
}

impl<'a> ChainElements<'a> {
    fn rep(&self, level: usize) -> &Permutation {
        let l = &self.chain.levels[level];
        let p = l.orbit[self.counters[level]];
        l.transversal[p as usize].as_ref().unwrap()
    }

    fn rebuild_partial_from(&mut self, level: usize) {
        let m = self.chain.levels.len();
        self.partial.truncate(m - 1 - level);
        for i in (0..=level).rev() {
            let composed = if i == m - 1 {
                self.rep(i).clone()
            } else {
                let deeper = &self.partial[m - 2 - i];
                deeper.compose(self.rep(i))
            };
            self.partial.push(composed);
        }
    }
}

impl<'a> Iterator for ChainElements<'a> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let m = self.chain.levels.len();
        if !self.started {
            self.started = true;
            if m == 0 {
                self.done = true;
                return Some(Permutation::identity(self.chain.degree));
            }
            self.rebuild_partial_from(m - 1);
            return Some(self.partial[m - 1].clone());
        }
        // Odometer: level 0 is the fastest digit.
        let mut level = 0;
        loop {
            if level == m {
                self.done = true;
                return None;
            }
            self.counters[level] += 1;
            if self.counters[level] < self.chain.levels[level].orbit.len() {
                break;
            }
            self.counters[level] = 0;
            level += 1;
        }
        self.rebuild_partial_from(level);
        Some(self.partial[m - 1].clone())
    }
}
