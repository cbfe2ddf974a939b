//! A fully enumerated group: elements numbered in lexicographic order, lazily built
//! right-multiplication tables, and subgroups as bitsets.

use std::collections::{HashMap, VecDeque};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::permgroup::PermutationGroup;

/// Index of an element in an [`IndexedGroup`]. The identity is always `0`.
pub type Elt = u32;

pub struct IndexedGroup {
    degree: usize,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, Elt>,
    tables: Vec<OnceLock<Box<[Elt]>>>,
}

impl IndexedGroup {
    /// Enumerates `g`; fails with `Error::CapExceeded` above the group's cap.
    pub fn new(g: &PermutationGroup) -> Result<Self> {
        let mut elements: Vec<Permutation> = g.elements()?.collect();
        elements.sort_unstable();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as Elt))
            .collect();
        let tables = (0..elements.len()).map(|_| OnceLock::new()).collect();
        Ok(IndexedGroup {
            degree: g.degree(),
            elements,
            index,
            tables,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, x: Elt) -> &Permutation {
        &self.elements[x as usize]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn index_of(&self, p: &Permutation) -> Option<Elt> {
        self.index.get(p).copied()
    }

    /// Like [`index_of`](Self::index_of) but an error for non-members.
    pub fn require(&self, p: &Permutation) -> Result<Elt> {
        self.index_of(p)
            .ok_or_else(|| Error::GenerationMismatch(format!("{p} is not in the group")))
    }

    /// `i ↦ index(elements[i] · elements[x])`.
    pub fn right_table(&self, x: Elt) -> &[Elt] {
        self.tables[x as usize].get_or_init(|| {
            let s = &self.elements[x as usize];
            self.elements
                .iter()
                .map(|g| self.index[&(g * s)])
                .collect()
        })
    }

    pub fn mul(&self, a: Elt, b: Elt) -> Elt {
        self.right_table(b)[a as usize]
    }

    pub fn inverse(&self, a: Elt) -> Elt {
        self.index[&self.elements[a as usize].inverse()]
    }

    /// Indices of all involutions, ascending.
    pub fn involutions(&self) -> Vec<Elt> {
        (0..self.len() as Elt)
            .filter(|&i| self.elements[i as usize].is_involution())
            .collect()
    }

    /// `⟨gens⟩` as a bitset over element indices.
    pub fn closure(&self, gens: &[Elt]) -> Subset {
        let mut set = Subset::empty(self.len());
        set.insert(0);
        let tables: Vec<&[Elt]> = gens.iter().map(|&s| self.right_table(s)).collect();
        let mut queue = VecDeque::from([0]);
        while let Some(g) = queue.pop_front() {
            for t in &tables {
                let h = t[g as usize];
                if set.insert(h) {
                    queue.push_back(h);
                }
            }
        }
        set
    }

    /// The assignment `s_i ↦ t_i` extended along the Cayley graph on `s`, if that is a
    /// well-defined bijection (hence an automorphism). `result[g]` is the image of `g`.
    /// Requires `⟨s⟩` to be the whole group.
    pub fn extend_map(&self, s: &[Elt], t: &[Elt]) -> Option<Vec<Elt>> {
        const UNSET: Elt = Elt::MAX;
        assert_eq!(s.len(), t.len());
        let s_tables: Vec<&[Elt]> = s.iter().map(|&x| self.right_table(x)).collect();
        let t_tables: Vec<&[Elt]> = t.iter().map(|&x| self.right_table(x)).collect();
        let mut phi = vec![UNSET; self.len()];
        phi[0] = 0;
        let mut queue = VecDeque::from([0 as Elt]);
        let mut seen = 1;
        while let Some(g) = queue.pop_front() {
            let image = phi[g as usize];
            for (st, tt) in s_tables.iter().zip(&t_tables) {
                let h = st[g as usize] as usize;
                let target = tt[image as usize];
                if phi[h] == UNSET {
                    phi[h] = target;
                    seen += 1;
                    queue.push_back(h as Elt);
                } else if phi[h] != target {
                    return None;
                }
            }
        }
        if seen != self.len() {
            return None;
        }
        let mut hit = Subset::empty(self.len());
        phi.iter().all(|&x| hit.insert(x)).then_some(phi)
    }
}

/// A set of element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subset {
    words: Vec<u64>,
    len: usize,
}

impl Subset {
    pub fn empty(universe: usize) -> Self {
        Subset {
            words: vec![0; universe.div_ceil(64)],
            len: 0,
        }
    }

    /// Returns `true` if `x` was not present.
    pub fn insert(&mut self, x: Elt) -> bool {
        let (w, b) = (x as usize / 64, x % 64);
        let fresh = self.words[w] & (1 << b) == 0;
        if fresh {
            self.words[w] |= 1 << b;
            self.len += 1;
        }
        fresh
    }

    pub fn contains(&self, x: Elt) -> bool {
        self.words[x as usize / 64] & (1 << (x % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn intersection_len(&self, other: &Subset) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = Elt> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &bits)| {
            (0..64)
                .filter(move |b| bits & (1 << b) != 0)
                .map(move |b| (w * 64 + b) as Elt)
        })
    }
}
