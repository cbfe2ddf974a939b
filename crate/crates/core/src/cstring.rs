//! Generator strings and the string C-group test.
//!
//! A tuple `(s_1, …, s_r)` of involutions is a string C-group when non-adjacent
//! generators commute and `⟨s_j : j ∈ J⟩ ∩ ⟨s_k : k ∈ K⟩ = ⟨s_j : j ∈ J ∩ K⟩`
//! for all index sets `J, K`. The intersection check here is the facet recursion:
//! both facets `(s_1..s_{r-1})`, `(s_2..s_r)` must be C-strings and
//! `|⟨s_1..s_{r-1}⟩ ∩ ⟨s_2..s_r⟩| = |⟨s_2..s_{r-1}⟩|`. Interval subgroups are
//! memoized, so a rank-`r` check touches `O(r²)` intervals.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::permgroup::PermutationGroup;

/// An ordered tuple of permutations of a common degree, the candidate C-string.
///
/// Construction only checks degrees; [`is_string_group`] checks that every entry is an
/// involution. Rank 0 is allowed and denotes the trivial string of the trivial group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorString {
    degree: usize,
    gens: Vec<Permutation>,
}

impl GeneratorString {
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
        Ok(GeneratorString { degree, gens })
    }

    /// Parses each generator from cycle notation.
    pub fn parse<S: AsRef<str>>(degree: usize, gens: &[S]) -> Result<Self> {
        let gens = gens
            .iter()
            .map(|g| Permutation::parse(g.as_ref(), degree))
            .collect::<Result<Vec<_>>>()?;
        Self::new(degree, gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    pub fn gens(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn into_gens(self) -> Vec<Permutation> {
        self.gens
    }

    /// The group generated by the whole tuple.
    pub fn group(&self) -> PermutationGroup {
        self.interval(0, self.rank())
    }

    /// `⟨s_i, …, s_{j-1}⟩` for the 0-based half-open range `i..j`.
    pub fn interval(&self, i: usize, j: usize) -> PermutationGroup {
        let gens = if i < j { self.gens[i..j].to_vec() } else { Vec::new() };
        PermutationGroup::new(self.degree, gens).expect("uniform degree")
    }

    /// `(s_r, …, s_1)`.
    pub fn reversed(&self) -> GeneratorString {
        GeneratorString {
            degree: self.degree,
            gens: self.gens.iter().rev().cloned().collect(),
        }
    }

    /// Cycle-notation strings, one per generator.
    pub fn to_strings(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.to_string()).collect()
    }
}

/// Every generator is an involution and `s_i s_j = s_j s_i` whenever `|i − j| ≥ 2`.
pub fn is_string_group(s: &GeneratorString) -> bool {
    let g = s.gens();
    g.iter().all(Permutation::is_involution)
        && (0..g.len()).all(|i| (i + 2..g.len()).all(|j| g[i].commutes_with(&g[j])))
}

/// `(p_1, …, p_{r-1})` with `p_i` the order of `s_i s_{i+1}`.
pub fn schlafli(s: &GeneratorString) -> Vec<u64> {
    s.gens().windows(2).map(|w| (&w[0] * &w[1]).order()).collect()
}

/// Some adjacent pair commutes, so the string diagram is disconnected.
pub fn is_degenerate(s: &GeneratorString) -> bool {
    schlafli(s).contains(&2)
}

/// Memoized interval subgroups and facet verdicts for one string.
pub struct IntervalCache<'a> {
    string: &'a GeneratorString,
    groups: HashMap<(usize, usize), PermutationGroup>,
    verdicts: HashMap<(usize, usize), bool>,
    cap: Option<u64>,
}

impl<'a> IntervalCache<'a> {
    pub fn new(string: &'a GeneratorString) -> Self {
        IntervalCache {
            string,
            groups: HashMap::new(),
            verdicts: HashMap::new(),
            cap: None,
        }
    }

    /// Overrides the enumeration cap used by intersection computations.
    pub fn with_cap(mut self, cap: u64) -> Self {
        self.cap = Some(cap);
        self
    }

    /// `⟨s_i..s_{j-1}⟩`, built once.
    pub fn group(&mut self, i: usize, j: usize) -> &PermutationGroup {
        let (string, cap) = (self.string, self.cap);
        self.groups.entry((i, j)).or_insert_with(|| {
            let g = string.interval(i, j);
            match cap {
                Some(c) => g.with_cap(c),
                None => g,
            }
        })
    }

    pub fn order(&mut self, i: usize, j: usize) -> u64 {
        self.group(i, j).order()
    }

    /// Whether `(s_i..s_{j-1})` has the intersection property.
    pub fn intersection_property(&mut self, i: usize, j: usize) -> Result<bool> {
        if let Some(&v) = self.verdicts.get(&(i, j)) {
            return Ok(v);
        }
        let len = j.saturating_sub(i);
        let verdict = match len {
            0 | 1 => true,
            2 => self.string.gens[i] != self.string.gens[i + 1],
            _ => {
                self.intersection_property(i, j - 1)?
                    && self.intersection_property(i + 1, j)?
                    && {
                        self.group(i, j - 1);
                        self.group(i + 1, j);
                        let (a, b) = (&self.groups[&(i, j - 1)], &self.groups[&(i + 1, j)]);
                        a.intersection_order(b)?
                    } == self.order(i + 1, j - 1)
            }
        };
        self.verdicts.insert((i, j), verdict);
        Ok(verdict)
    }
}

/// Full intersection property of a string group.
pub fn intersection_property(s: &GeneratorString) -> Result<bool> {
    if !is_string_group(s) {
        return Err(Error::Precondition(
            "intersection property is checked on string groups generated by involutions".into(),
        ));
    }
    IntervalCache::new(s).intersection_property(0, s.rank())
}

/// `s` is a C-string of `g`: a string group with the intersection property generating exactly `g`.
pub fn is_cstring_of(s: &GeneratorString, g: &PermutationGroup) -> Result<bool> {
    if s.degree() != g.degree() {
        return Err(Error::DegreeMismatch {
            expected: g.degree(),
            found: s.degree(),
        });
    }
    if !is_string_group(s) {
        return Ok(false);
    }
    for x in s.gens() {
        if !g.contains(x)? {
            return Ok(false);
        }
    }
    let mut cache = IntervalCache::new(s).with_cap(g.cap());
    if cache.order(0, s.rank()) != g.order() {
        return Ok(false);
    }
    cache.intersection_property(0, s.rank())
}

/// Certifies `(s_1..s_r)` as a C-string of `D_n ≤ Sym(2n)` without intersection
/// computations, when `(s_1..s_{r-1})` is a C-string generating a complement to the
/// even sign changes `N` and `s_r ∈ N` is not central.
///
/// Returns `Err(Error::Precondition)` when the prefix does not meet those conditions;
/// callers then fall back to [`is_cstring_of`].
pub fn fast_check_last_in_n(s: &GeneratorString, n: usize) -> Result<bool> {
    if s.degree() != 2 * n {
        return Err(Error::Precondition(format!("degree {} is not 2n = {}", s.degree(), 2 * n)));
    }
    if s.rank() < 2 || !is_string_group(s) {
        return Err(Error::Precondition("need a string group of rank >= 2".into()));
    }
    let r = s.rank();
    let prefix = GeneratorString::new(s.degree(), s.gens()[..r - 1].to_vec())?;
    let mut cache = IntervalCache::new(&prefix);
    if !cache.intersection_property(0, r - 1)? {
        return Err(Error::Precondition("prefix is not a C-string".into()));
    }
    let n_group = sign_changes(n);
    let factorial: u64 = (1..=n as u64).product();
    let prefix_group = cache.group(0, r - 1).clone();
    if prefix_group.order() != factorial || prefix_group.intersection_order(&n_group)? != 1 {
        return Err(Error::Precondition("prefix is not a complement to N".into()));
    }
    Ok(sign_change_count(s.gens()[r - 1].as_slice(), n)
        .is_some_and(|k| k >= 2 && k % 2 == 0 && k < n))
}

/// Number of swaps `(i, n+i)` when `p` is a product of such swaps.
fn sign_change_count(p: &[u32], n: usize) -> Option<usize> {
    let mut count = 0;
    for i in 0..n {
        match (p[i] as usize, p[n + i] as usize) {
            (a, b) if a == i && b == n + i => {}
            (a, b) if a == n + i && b == i => count += 1,
            _ => return None,
        }
    }
    Some(count)
}

/// The even sign changes of `D_n` in degree `2n`.
pub fn sign_changes(n: usize) -> PermutationGroup {
    let gens = (1..n)
        .map(|i| {
            Permutation::from_transpositions(&[(i, n + i), (i + 1, n + i + 1)], 2 * n)
                .expect("disjoint transpositions")
        })
        .collect();
    PermutationGroup::new(2 * n, gens).expect("uniform degree")
}

/// Everything a verifier reports about one tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub rank: usize,
    pub string_property: bool,
    /// `None` when the string property already failed.
    pub intersection_property: Option<bool>,
    pub group_order: u64,
    pub schlafli: Vec<u64>,
    pub degenerate: bool,
}

impl Verification {
    pub fn is_cstring(&self) -> bool {
        self.string_property && self.intersection_property == Some(true)
    }
}

/// Checks `s` as a C-string of the group it generates.
pub fn verify(s: &GeneratorString) -> Result<Verification> {
    let string_property = is_string_group(s);
    let mut cache = IntervalCache::new(s);
    let group_order = cache.order(0, s.rank());
    let intersection_property = if string_property {
        Some(cache.intersection_property(0, s.rank())?)
    } else {
        None
    };
    Ok(Verification {
        rank: s.rank(),
        string_property,
        intersection_property,
        group_order,
        schlafli: schlafli(s),
        degenerate: is_degenerate(s),
    })
}

/// JSON form of a string. Only `degree` and `gens` are read back; the other fields
/// describe the string for readers and default when absent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StringDocument {
    pub degree: usize,
    pub gens: Vec<String>,
    #[serde(default)]
    pub schlafli: Vec<u64>,
    #[serde(default)]
    pub degenerate: bool,
    #[serde(default)]
    pub verified: bool,
}

impl StringDocument {
    /// Describes `s`; `verified` records whether it passed a C-string check.
    pub fn new(s: &GeneratorString, verified: bool) -> Self {
        StringDocument {
            degree: s.degree(),
            gens: s.to_strings(),
            schlafli: schlafli(s),
            degenerate: is_degenerate(s),
            verified,
        }
    }

    pub fn to_string_group(&self) -> Result<GeneratorString> {
        GeneratorString::parse(self.degree, &self.gens)
    }
}
