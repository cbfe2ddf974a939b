//! Deterministic Schreier–Sims stabilizer chains.
//!
//! Transversals are stored as Schreier vectors: each orbit point remembers the
//! strong generator that first reached it, and coset representatives are
//! rebuilt by tracing back to the base point.

use crate::perm::Permutation;

const UNSEEN: u32 = u32::MAX;
const ROOT: u32 = u32::MAX - 1;

#[derive(Clone, Debug)]
struct Level {
    base: u32,
    gens: Vec<Permutation>,
    inv_gens: Vec<Permutation>,
    orbit: Vec<u32>,
    label: Vec<u32>,
}

impl Level {
    fn new(base: u32, degree: usize) -> Self {
        let mut level = Level {
            base,
            gens: Vec::new(),
            inv_gens: Vec::new(),
            orbit: Vec::new(),
            label: vec![UNSEEN; degree],
        };
        level.rebuild_orbit();
        level
    }

    fn push_gen(&mut self, g: Permutation) {
        self.inv_gens.push(g.inverse());
        self.gens.push(g);
        self.rebuild_orbit();
    }

    fn rebuild_orbit(&mut self) {
        self.label.iter_mut().for_each(|l| *l = UNSEEN);
        self.orbit.clear();
        self.label[self.base as usize] = ROOT;
        self.orbit.push(self.base);
        let mut head = 0;
        while head < self.orbit.len() {
            let p = self.orbit[head];
            head += 1;
            for (k, g) in self.gens.iter().enumerate() {
                let q = g.apply0(p);
                if self.label[q as usize] == UNSEEN {
                    self.label[q as usize] = k as u32;
                    self.orbit.push(q);
                }
            }
        }
    }

    #[inline]
    fn contains(&self, point: u32) -> bool {
        self.label[point as usize] != UNSEEN
    }

    /// Coset representative `u` with `base^u = point`.
    fn representative(&self, point: u32) -> Permutation {
        let mut path = Vec::new();
        let mut p = point;
        while self.label[p as usize] != ROOT {
            let k = self.label[p as usize] as usize;
            path.push(k);
            p = self.inv_gens[k].apply0(p);
        }
        let degree = self.label.len();
        path.iter()
            .rev()
            .fold(Permutation::identity(degree), |u, &k| &u * &self.gens[k])
    }

    /// Multiplies `h` on the right by `u_β⁻¹` where `β = base^h`. `h` must map the base into the orbit.
    fn unwind(&self, h: &mut Permutation) {
        let mut p = h.apply0(self.base);
        while self.label[p as usize] != ROOT {
            let k = self.label[p as usize] as usize;
            *h = &*h * &self.inv_gens[k];
            p = self.inv_gens[k].apply0(p);
        }
    }
}

/// Base and strong generating set for a permutation group.
#[derive(Clone, Debug)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    /// Runs deterministic Schreier–Sims. Base points are taken as the first
    /// point moved by whichever generator needs a new level.
    pub fn new(degree: usize, generators: &[Permutation]) -> Self {
        let mut chain = StabilizerChain {
            degree,
            levels: Vec::new(),
        };
        let gens: Vec<&Permutation> = generators.iter().filter(|g| !g.is_identity()).collect();
        if gens.is_empty() {
            return chain;
        }
        for g in &gens {
            if chain.levels.iter().all(|l| g.apply0(l.base) == l.base) {
                let b = first_moved(g);
                chain.levels.push(Level::new(b, degree));
            }
        }
        for g in &gens {
            for l in 0..chain.levels.len() {
                chain.levels[l].gens.push((*g).clone());
                chain.levels[l].inv_gens.push(g.inverse());
                if g.apply0(chain.levels[l].base) != chain.levels[l].base {
                    break;
                }
            }
        }
        for level in &mut chain.levels {
            level.rebuild_orbit();
        }

        let mut i = chain.levels.len() as isize - 1;
        while i >= 0 {
            let level = i as usize;
            match chain.find_schreier_witness(level) {
                Some((h, j)) => {
                    if j == chain.levels.len() {
                        let b = first_moved(&h);
                        chain.levels.push(Level::new(b, degree));
                    }
                    for l in level + 1..=j {
                        chain.levels[l].push_gen(h.clone());
                    }
                    i = j as isize;
                }
                None => i -= 1,
            }
        }
        chain
    }

    /// Finds a Schreier generator of `level` that does not sift through the levels below it.
    fn find_schreier_witness(&self, level: usize) -> Option<(Permutation, usize)> {
        let lv = &self.levels[level];
        for &beta in &lv.orbit {
            let u_beta = lv.representative(beta);
            for s in &lv.gens {
                // u_β · s · u_{β^s}⁻¹
                let mut g = &u_beta * s;
                lv.unwind(&mut g);
                let (h, j) = self.strip_from(g, level + 1);
                if !h.is_identity() {
                    return Some((h, j));
                }
            }
        }
        None
    }

    /// Sifts `g` starting at `start`. Returns the residue and the level at which
    /// sifting stopped (`levels.len()` when it passed every level).
    fn strip_from(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for (j, level) in self.levels.iter().enumerate().skip(start) {
            let beta = g.apply0(level.base);
            if !level.contains(beta) {
                return (g, j);
            }
            level.unwind(&mut g);
        }
        let len = self.levels.len();
        (g, len)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Base points, 1-based.
    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base as usize + 1).collect()
    }

    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> u64 {
        self.levels.iter().fold(1u64, |acc, l| {
            acc.checked_mul(l.orbit.len() as u64)
                .expect("group order overflows u64")
        })
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for g in self.levels.iter().flat_map(|l| l.gens.iter()) {
            if !out.contains(g) {
                out.push(g.clone());
            }
        }
        out
    }

    /// Sift residue of `g`; identity iff `g` is in the group.
    pub fn sift(&self, g: &Permutation) -> Permutation {
        self.strip_from(g.clone(), 0).0
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, j) = self.strip_from(g.clone(), 0);
        j == self.levels.len() && h.is_identity()
    }

    /// Explicit transversals, level by level (`result[i][k]` maps base point `i` to the `k`-th orbit point).
    pub(crate) fn transversals(&self) -> Vec<Vec<Permutation>> {
        self.levels
            .iter()
            .map(|l| l.orbit.iter().map(|&b| l.representative(b)).collect())
            .collect()
    }
}

fn first_moved(g: &Permutation) -> u32 {
    g.as_slice()
        .iter()
        .enumerate()
        .find(|&(i, &x)| i as u32 != x)
        .map(|(i, _)| i as u32)
        .expect("identity has no moved point")
}

/// Every element exactly once, as `u_{k-1} ⋯ u_1 u_0` over transversal representatives.
pub struct Elements {
    transversals: Vec<Vec<Permutation>>,
    index: Vec<usize>,
    partial: Vec<Permutation>,
    done: bool,
}

impl Elements {
    pub(crate) fn new(chain: &StabilizerChain) -> Self {
        let transversals = chain.transversals();
        let k = transversals.len();
        let degree = chain.degree;
        let mut it = Elements {
            transversals,
            index: vec![0; k],
            partial: vec![Permutation::identity(degree); k + 1],
            done: false,
        };
        it.refresh_from(k);
        it
    }

    /// Recomputes partial products for levels below `top` (exclusive).
    /// `partial[l] = u_{k-1} ⋯ u_l`, `partial[k] = 1`.
    fn refresh_from(&mut self, top: usize) {
        for l in (0..top).rev() {
            self.partial[l] = &self.partial[l + 1] * &self.transversals[l][self.index[l]];
        }
    }
}

impl Iterator for Elements {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let out = self.partial[0].clone();
        // odometer: level 0 varies fastest
        let mut l = 0;
        loop {
            if l == self.index.len() {
                self.done = true;
                break;
            }
            self.index[l] += 1;
            if self.index[l] < self.transversals[l].len() {
                self.refresh_from(l + 1);
                break;
            }
            self.index[l] = 0;
            l += 1;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize) -> Vec<Permutation> {
        (1..n)
            .map(|i| Permutation::from_cycles(&[[i, i + 1]], n).unwrap())
            .collect()
    }

    #[test]
    fn symmetric_group_orders() {
        for n in 1..=8 {
            let chain = StabilizerChain::new(n, &sym(n));
            assert_eq!(chain.order(), (1..=n as u64).product::<u64>());
        }
    }

    #[test]
    fn strong_generators_sift_to_identity() {
        let chain = StabilizerChain::new(6, &sym(6));
        for g in chain.strong_generators() {
            assert!(chain.sift(&g).is_identity());
        }
        assert_eq!(chain.transversal_sizes().iter().product::<usize>(), 720);
    }

    #[test]
    fn elements_are_distinct_and_complete() {
        let chain = StabilizerChain::new(5, &sym(5));
        let all: std::collections::HashSet<_> = Elements::new(&chain).collect();
        assert_eq!(all.len(), 120);
        assert!(all.iter().all(|g| chain.contains(g)));
    }

    #[test]
    fn trivial_group() {
        let chain = StabilizerChain::new(4, &[Permutation::identity(4)]);
        assert_eq!(chain.order(), 1);
        assert_eq!(Elements::new(&chain).count(), 1);
        assert!(chain.base().is_empty());
    }
}
