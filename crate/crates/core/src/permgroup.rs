//! Finite permutation groups backed by a lazily built stabilizer chain.

use std::collections::HashMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::chain::{Elements, StabilizerChain};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default bound on the number of elements any enumerating operation will touch.
pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;

#[derive(Clone, Debug)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    cap: u64,
    chain: OnceLock<StabilizerChain>,
}

/// One conjugacy class of involutions.
#[derive(Clone, Debug)]
pub struct InvolutionClass {
    /// Lexicographically least member (by image sequence).
    pub representative: Permutation,
    pub members: Vec<Permutation>,
    /// `witnesses[k]` conjugates the representative onto `members[k]`.
    pub witnesses: Vec<Permutation>,
}

impl InvolutionClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

impl PermutationGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
        Ok(PermutationGroup {
            degree,
            generators,
            cap: DEFAULT_ENUMERATION_CAP,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(degree, Vec::new()).expect("no generators to mismatch")
    }

    /// Symmetric group on `n` points, generated by adjacent transpositions.
    pub fn symmetric(n: usize) -> Self {
        let gens = (1..n)
            .map(|i| Permutation::from_cycles(&[[i, i + 1]], n).expect("valid transposition"))
            .collect();
        Self::new(n, gens).expect("uniform degree")
    }

    pub fn with_cap(mut self, cap: u64) -> Self {
        self.cap = cap;
        self
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabilizerChain {
        self.chain
            .get_or_init(|| StabilizerChain::new(self.degree, &self.generators))
    }

    pub fn order(&self) -> u64 {
        self.chain().order()
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        self.check_degree(p)?;
        Ok(self.chain().contains(p))
    }

    /// True when every element of `other` lies in `self`.
    pub fn contains_group(&self, other: &PermutationGroup) -> Result<bool> {
        for g in other.generators() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn check_degree(&self, p: &Permutation) -> Result<()> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: p.degree(),
            });
        }
        Ok(())
    }

    fn check_cap(&self, what: &'static str) -> Result<()> {
        let needed = self.order();
        if needed > self.cap {
            return Err(Error::CapExceeded {
                what,
                needed,
                cap: self.cap,
            });
        }
        Ok(())
    }

    /// Streams every element exactly once.
    pub fn elements(&self) -> Result<Elements> {
        self.check_cap("element enumeration")?;
        Ok(Elements::new(self.chain()))
    }

    /// `|self ∩ other|`, by enumerating the smaller group and sifting through the larger.
    pub fn intersection_order(&self, other: &PermutationGroup) -> Result<u64> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        let (small, large) = if self.order() <= other.order() {
            (self, other)
        } else {
            (other, self)
        };
        if small.order() > small.cap.min(large.cap) {
            return Err(Error::CapExceeded {
                what: "intersection",
                needed: small.order(),
                cap: small.cap.min(large.cap),
            });
        }
        let chain = large.chain();
        Ok(Elements::new(small.chain())
            .filter(|g| chain.contains(g))
            .count() as u64)
    }

    /// All elements of order 2, sorted by image sequence.
    pub fn involutions(&self) -> Result<Vec<Permutation>> {
        let mut out: Vec<_> = self.elements()?.filter(|g| g.is_involution()).collect();
        out.sort();
        Ok(out)
    }

    /// Conjugacy classes of involutions, ordered by representative.
    pub fn involution_classes(&self) -> Result<Vec<InvolutionClass>> {
        let involutions = self.involutions()?;
        let index: HashMap<&Permutation, usize> =
            involutions.iter().enumerate().map(|(k, p)| (p, k)).collect();
        let mut assigned = vec![false; involutions.len()];
        let mut classes = Vec::new();
        for (k, rep) in involutions.iter().enumerate() {
            if assigned[k] {
                continue;
            }
            assigned[k] = true;
            let mut members = vec![rep.clone()];
            let mut witnesses = vec![Permutation::identity(self.degree)];
            let mut head = 0;
            while head < members.len() {
                let (x, w) = (members[head].clone(), witnesses[head].clone());
                head += 1;
                for g in &self.generators {
                    let y = x.conjugate_by(g);
                    let slot = index[&y];
                    if !assigned[slot] {
                        assigned[slot] = true;
                        members.push(y);
                        witnesses.push(&w * g);
                    }
                }
            }
            classes.push(InvolutionClass {
                representative: rep.clone(),
                members,
                witnesses,
            });
        }
        Ok(classes)
    }

    /// Involutions of the group commuting with `s`.
    pub fn commuting_involutions(&self, s: &Permutation) -> Result<Vec<Permutation>> {
        self.check_degree(s)?;
        Ok(self
            .involutions()?
            .into_iter()
            .filter(|t| t.commutes_with(s))
            .collect())
    }

    /// Orbits on points (1-based), each sorted, ordered by least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = vec![start as u32];
            let mut head = 0;
            while head < orbit.len() {
                let p = orbit[head];
                head += 1;
                for g in &self.generators {
                    let q = g.apply0(p);
                    if !seen[q as usize] {
                        seen[q as usize] = true;
                        orbit.push(q);
                    }
                }
            }
            let mut orbit: Vec<usize> = orbit.into_iter().map(|p| p as usize + 1).collect();
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbits().len() == 1
    }
}

/// JSON form of a group: `{degree, generators: [cycle strings]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDocument {
    pub degree: usize,
    pub generators: Vec<String>,
}

impl From<&PermutationGroup> for GroupDocument {
    fn from(g: &PermutationGroup) -> Self {
        GroupDocument {
            degree: g.degree(),
            generators: g.generators().iter().map(|p| p.to_string()).collect(),
        }
    }
}

impl GroupDocument {
    pub fn to_group(&self) -> Result<PermutationGroup> {
        let gens = self
            .generators
            .iter()
            .map(|g| Permutation::parse(g, self.degree))
            .collect::<Result<Vec<_>>>()?;
        PermutationGroup::new(self.degree, gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn perm(text: &str, degree: usize) -> Permutation {
        Permutation::parse(text, degree).unwrap()
    }

    fn group(degree: usize, gens: &[&str]) -> PermutationGroup {
        PermutationGroup::new(degree, gens.iter().map(|g| perm(g, degree)).collect()).unwrap()
    }

    /// Naive closure under right multiplication by generators.
    fn closure(g: &PermutationGroup) -> HashSet<Permutation> {
        let id = Permutation::identity(g.degree());
        let mut seen = HashSet::from([id.clone()]);
        let mut queue = vec![id];
        while let Some(x) = queue.pop() {
            for s in g.generators() {
                let y = &x * s;
                if seen.insert(y.clone()) {
                    queue.push(y);
                }
            }
        }
        seen
    }

    #[test]
    fn small_orders() {
        assert_eq!(group(2, &["(1,2)"]).order(), 2);
        assert_eq!(PermutationGroup::trivial(5).order(), 1);
        assert_eq!(PermutationGroup::symmetric(4).order(), 24);
    }

    #[test]
    fn membership() {
        let g = group(3, &["(1,2)"]);
        assert!(g.contains(&perm("(1,2)", 3)).unwrap());
        assert!(!g.contains(&perm("(1,3)", 3)).unwrap());
        assert!(g.contains(&perm("(1,2)", 4)).is_err());
    }

    #[test]
    fn element_counts() {
        assert_eq!(group(3, &["(1,2)", "(2,3)"]).elements().unwrap().count(), 6);
        assert_eq!(PermutationGroup::trivial(3).elements().unwrap().count(), 1);
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let g = PermutationGroup::symmetric(6).with_cap(100);
        assert!(matches!(g.elements(), Err(Error::CapExceeded { .. })));
        assert!(g.involutions().is_err());
    }

    #[test]
    fn intersection_examples() {
        let a = group(4, &["(1,2)", "(2,3)"]);
        let b = group(4, &["(1,2,3)", "(2,3,4)"]);
        let brute = closure(&a).intersection(&closure(&b)).count() as u64;
        assert_eq!(brute, 3);
        assert_eq!(a.intersection_order(&b).unwrap(), 3);
        assert_eq!(a.intersection_order(&a).unwrap(), 6);
    }

    #[test]
    fn involution_counts() {
        assert_eq!(PermutationGroup::symmetric(3).involutions().unwrap().len(), 3);
        assert!(PermutationGroup::trivial(3).involutions().unwrap().is_empty());
    }

    #[test]
    fn involution_classes_examples() {
        let sym4 = PermutationGroup::symmetric(4);
        let mut sizes: Vec<_> = sym4
            .involution_classes()
            .unwrap()
            .iter()
            .map(|c| c.size())
            .collect();
        sizes.sort();
        assert_eq!(sizes, vec![3, 6]);

        let klein = group(4, &["(1,2)", "(3,4)"]);
        let classes = klein.involution_classes().unwrap();
        assert_eq!(classes.len(), 3);
        assert!(classes.iter().all(|c| c.size() == 1));

        let sym3 = PermutationGroup::symmetric(3);
        let classes = sym3.involution_classes().unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].size(), 3);
    }

    #[test]
    fn class_witnesses_conjugate() {
        for g in [PermutationGroup::symmetric(5), group(8, &["(1,2)(3,4)", "(2,3)(5,6)", "(1,5)(2,6)(3,7)(4,8)"])] {
            let classes = g.involution_classes().unwrap();
            let total: usize = classes.iter().map(|c| c.size()).sum();
            assert_eq!(total, g.involutions().unwrap().len());
            for c in &classes {
                assert!(c.members.iter().all(|m| c.representative <= *m));
                for (m, w) in c.members.iter().zip(&c.witnesses) {
                    assert!(g.contains(w).unwrap());
                    assert_eq!(&c.representative.conjugate_by(w), m);
                }
            }
        }
    }

    #[test]
    fn commuting_involutions_in_sym4() {
        let sym4 = PermutationGroup::symmetric(4);
        let s = perm("(1,2)", 4);
        let got = sym4.commuting_involutions(&s).unwrap();
        let expected: Vec<_> = sym4
            .involutions()
            .unwrap()
            .into_iter()
            .filter(|t| t * &s == &s * t)
            .collect();
        assert_eq!(got, expected);
        let mut names: Vec<_> = got.iter().map(|p| p.to_string()).collect();
        names.sort();
        assert_eq!(names, vec!["(1,2)", "(1,2)(3,4)", "(3,4)"]);
        assert!(got.contains(&s));

        let klein = group(4, &["(1,2)", "(3,4)"]);
        assert_eq!(klein.commuting_involutions(&s).unwrap().len(), 3);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_group_of(m: usize) -> impl Strategy<Value = PermutationGroup> {
            let perm = Just((0..m as u32).collect::<Vec<_>>()).prop_shuffle();
            proptest::collection::vec(perm, 1..=3).prop_map(move |gens| {
                PermutationGroup::new(
                    m,
                    gens.into_iter()
                        .map(|v| Permutation::from_images(v).unwrap())
                        .collect(),
                )
                .unwrap()
            })
        }

        fn arb_group() -> impl Strategy<Value = PermutationGroup> {
            (2usize..=8).prop_flat_map(arb_group_of)
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(200))]
            #[test]
            fn order_matches_naive_closure(g in arb_group()) {
                prop_assert_eq!(g.order() as usize, closure(&g).len());
            }
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(40))]
            #[test]
            fn intersection_matches_sets((a, b) in (2usize..=7).prop_flat_map(|m| (arb_group_of(m), arb_group_of(m)))) {
                let brute = closure(&a).intersection(&closure(&b)).count() as u64;
                prop_assert_eq!(a.intersection_order(&b).unwrap(), brute);
            }

            #[test]
            fn membership_matches_elements(g in arb_group()) {
                prop_assume!(g.degree() <= 6);
                let elements: HashSet<_> = g.elements().unwrap().collect();
                prop_assert_eq!(elements.len() as u64, g.order());
                for p in PermutationGroup::symmetric(g.degree()).elements().unwrap() {
                    prop_assert_eq!(g.contains(&p).unwrap(), elements.contains(&p));
                }
            }
        }
    }
}
