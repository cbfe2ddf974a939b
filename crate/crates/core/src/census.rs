//! Exhaustive search for the C-strings of a finite group, up to automorphism and duality.
//!
//! The search is a depth-first extension of prefixes `(s_1, …, s_k)`:
//!
//! * `s_1` runs over representatives of the conjugacy classes of involutions;
//! * `s_2` runs over representatives of the orbits of `C_G(s_1)` on involutions;
//! * `s_k` (`k ≥ 3`) runs over involutions commuting with `s_1, …, s_{k-2}`.
//!
//! A prefix is kept only if it is a C-string of the group it generates, which is checked
//! incrementally: with `G_{i..j} = ⟨s_i, …, s_j⟩`, adding `s_k` to a C-string prefix
//! preserves the property iff `G_{1..k-1} ∩ G_{j..k} = G_{j..k-1}` for `2 ≤ j ≤ k`
//! (for `j = k` this reads `s_k ∉ G_{1..k-1}`). A prefix generating the whole group is
//! recorded and not extended. Duplicate tuples are merged by fingerprint bucketing
//! followed by an exact Cayley-graph automorphism test against each tuple and its dual.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::autodual::{fingerprint, Fingerprint};
use crate::cstring::{is_cstring_of, schlafli, GeneratorString, StringDocument};
use crate::error::{Error, Result};
use crate::indexed::{Elt, IndexedGroup, Subset};
use crate::permgroup::PermutationGroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusOptions {
    /// Also accept strings with some `p_i = 2`.
    pub allow_degenerate: bool,
    /// Worker threads; `1` runs on the calling thread.
    pub jobs: usize,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            allow_degenerate: false,
            jobs: 1,
        }
    }
}

/// One equivalence class of C-strings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRecord {
    /// The least tuple of the class in element order.
    pub representative: GeneratorString,
    pub schlafli: Vec<u64>,
    pub self_dual: bool,
    pub degenerate: bool,
    /// Search hits merged into this class because an automorphism carries one to the other.
    pub merged_by_automorphism: usize,
    /// Search hits merged because an automorphism carries one to the other's dual.
    pub merged_by_duality: usize,
}

impl CensusRecord {
    pub fn rank(&self) -> usize {
        self.representative.rank()
    }

    pub fn note(&self) -> String {
        format!(
            "{} hits merged by automorphism, {} by duality",
            self.merged_by_automorphism, self.merged_by_duality
        )
    }

    pub fn document(&self) -> RecordDocument {
        RecordDocument {
            representative: StringDocument::new(&self.representative, true),
            rank: self.rank(),
            schlafli: self.schlafli.clone(),
            self_dual: self.self_dual,
            degenerate: self.degenerate,
            note: self.note(),
        }
    }
}

/// JSON form of a [`CensusRecord`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordDocument {
    pub representative: StringDocument,
    pub rank: usize,
    pub schlafli: Vec<u64>,
    pub self_dual: bool,
    pub degenerate: bool,
    pub note: String,
}

/// Largest `r` with `2^r ≤ order`: an independent generating set is never longer.
pub fn rank_bound(order: u64) -> usize {
    if order == 0 {
        0
    } else {
        order.ilog2() as usize
    }
}

/// All equivalence classes of rank-`r` C-strings of `g`.
pub fn enumerate_rank(
    g: &PermutationGroup,
    r: usize,
    options: &CensusOptions,
) -> Result<Vec<CensusRecord>> {
    let engine = Census::new(g, options)?;
    let hits = engine.search(r)?;
    let records = engine.classify(hits.into_iter().filter(|h| h.len() == r).collect())?;
    engine.reverify(g, &records)?;
    Ok(records)
}

/// Per-rank counts for one convention.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Count {
    pub total: usize,
    pub self_dual: usize,
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.total, self.self_dual)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusTable {
    pub group_order: u64,
    /// Ranks `3..=max_rank` are reported.
    pub max_rank: usize,
    /// Every class found, sorted by rank then representative.
    pub records: Vec<CensusRecord>,
    /// Whether degenerate strings were searched for.
    pub includes_degenerate: bool,
}

impl CensusTable {
    pub fn ranks(&self) -> std::ops::RangeInclusive<usize> {
        3..=self.max_rank
    }

    fn count(&self, rank: usize, degenerate: Option<bool>) -> Count {
        let mut c = Count::default();
        for rec in self.records.iter().filter(|r| r.rank() == rank) {
            if degenerate.is_none_or(|d| d == rec.degenerate) {
                c.total += 1;
                c.self_dual += rec.self_dual as usize;
            }
        }
        c
    }

    /// Non-degenerate classes of the given rank.
    pub fn nondegenerate(&self, rank: usize) -> Count {
        self.count(rank, Some(false))
    }

    /// Degenerate classes of the given rank (zero unless they were searched for).
    pub fn degenerate(&self, rank: usize) -> Count {
        self.count(rank, Some(true))
    }

    /// Non-degenerate classes over ranks `3..=max_rank`.
    pub fn total(&self) -> Count {
        self.ranks().fold(Count::default(), |acc, r| {
            let c = self.nondegenerate(r);
            Count {
                total: acc.total + c.total,
                self_dual: acc.self_dual + c.self_dual,
            }
        })
    }

    /// The largest rank of any class found, including ranks below 3; `0` if none.
    pub fn rmax(&self) -> usize {
        self.records.iter().map(CensusRecord::rank).max().unwrap_or(0)
    }
}

impl fmt::Display for CensusTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "group order {}", self.group_order)?;
        for r in self.ranks() {
            let c = self.nondegenerate(r);
            write!(f, "rank {r}: {} ({} self-dual)", c.total, c.self_dual)?;
            if self.includes_degenerate {
                let d = self.degenerate(r);
                write!(f, "; degenerate {} ({} self-dual)", d.total, d.self_dual)?;
            }
            writeln!(f)?;
        }
        write!(f, "total: {}", self.total())
    }
}

/// Classes of C-strings of every rank from 1 to `⌊log₂|G|⌋`.
pub fn census_table(g: &PermutationGroup, options: &CensusOptions) -> Result<CensusTable> {
    let engine = Census::new(g, options)?;
    let max_rank = rank_bound(g.order());
    let hits = engine.search(max_rank)?;
    let records = engine.classify(hits)?;
    engine.reverify(g, &records)?;
    Ok(CensusTable {
        group_order: g.order(),
        max_rank,
        records,
        includes_degenerate: options.allow_degenerate,
    })
}

/// The largest rank of a C-string of `g` (any rank, including 1 and 2), or `0` if none.
pub fn rmax_search(g: &PermutationGroup, options: &CensusOptions) -> Result<usize> {
    let engine = Census::new(g, options)?;
    let hits = engine.search(rank_bound(g.order()))?;
    Ok(hits.iter().map(Vec::len).max().unwrap_or(0))
}

/// Every tuple the search visits as a complete C-string, before merging classes.
/// Exposed so tests can audit the class-merging step.
pub fn search_hits(
    g: &PermutationGroup,
    max_rank: usize,
    options: &CensusOptions,
) -> Result<Vec<GeneratorString>> {
    let engine = Census::new(g, options)?;
    Ok(engine
        .search(max_rank)?
        .iter()
        .map(|h| engine.string(h))
        .collect())
}

struct Census {
    group: IndexedGroup,
    involutions: Vec<Elt>,
    /// `commuting[k]` holds the involutions commuting with `involutions[k]`.
    commuting: Vec<Subset>,
    slot: HashMap<Elt, usize>,
    options: CensusOptions,
}

/// A prefix under extension: `suffix[j]` is `⟨gens[j..]⟩`.
struct Node {
    gens: Vec<Elt>,
    suffix: Vec<Subset>,
}

impl Census {
    fn new(g: &PermutationGroup, options: &CensusOptions) -> Result<Self> {
        let group = IndexedGroup::new(g)?;
        let involutions = group.involutions();
        let slot: HashMap<Elt, usize> = involutions.iter().enumerate().map(|(k, &x)| (x, k)).collect();
        let commuting = involutions
            .par_iter()
            .map(|&a| {
                let pa = group.element(a);
                let mut set = Subset::empty(group.len());
                for &b in &involutions {
                    if pa.commutes_with(group.element(b)) {
                        set.insert(b);
                    }
                }
                set
            })
            .collect();
        log::info!(
            "group of order {} with {} involutions",
            group.len(),
            involutions.len()
        );
        Ok(Census {
            group,
            involutions,
            commuting,
            slot,
            options: CensusOptions {
                jobs: options.jobs.max(1),
                ..options.clone()
            },
        })
    }

    fn commutes(&self, a: Elt, b: Elt) -> bool {
        self.commuting[self.slot[&a]].contains(b)
    }

    fn conjugate(&self, x: Elt, g: Elt) -> Elt {
        let p = self.group.element(g);
        self.group
            .index_of(&self.group.element(x).conjugate_by(p))
            .expect("closed under conjugation")
    }

    /// Least members of the orbits of `acting` on the involutions by conjugation.
    fn orbit_representatives(&self, acting: &[Elt]) -> Vec<Elt> {
        let mut seen = Subset::empty(self.group.len());
        let mut reps = Vec::new();
        for &x in &self.involutions {
            if seen.contains(x) {
                continue;
            }
            reps.push(x);
            for &g in acting {
                seen.insert(self.conjugate(x, g));
            }
        }
        reps
    }

    fn centralizer(&self, x: Elt) -> Vec<Elt> {
        let p = self.group.element(x);
        (0..self.group.len() as Elt)
            .filter(|&g| self.group.element(g).commutes_with(p))
            .collect()
    }

    /// All complete C-strings of rank `≤ max_rank` reachable in the search forest, in a
    /// deterministic order independent of the thread count.
    fn search(&self, max_rank: usize) -> Result<Vec<Vec<Elt>>> {
        let order = self.group.len();
        let mut hits = Vec::new();
        if max_rank == 0 {
            return Ok(hits);
        }
        let all: Vec<Elt> = (0..order as Elt).collect();
        let first = self.orbit_representatives(&all);
        let mut tasks = Vec::new();
        for &s1 in &first {
            let root = self.group.closure(&[s1]);
            if root.len() == order {
                hits.push(vec![s1]);
                continue;
            }
            if max_rank >= 2 {
                let seconds = self.orbit_representatives(&self.centralizer(s1));
                log::info!(
                    "s1 = {}: {} candidates for s2",
                    self.group.element(s1),
                    seconds.len()
                );
                tasks.extend(seconds.into_iter().map(|s2| (s1, s2)));
            }
        }
        let run = |&(s1, s2): &(Elt, Elt)| {
            let mut found = Vec::new();
            let node = Node {
                gens: vec![s1],
                suffix: vec![self.group.closure(&[s1])],
            };
            if let Some(child) = self.extend(&node, s2, &mut found) {
                if max_rank > 2 {
                    let pool: Vec<Elt> = self
                        .involutions
                        .iter()
                        .copied()
                        .filter(|&x| self.commutes(x, s1))
                        .collect();
                    self.descend(&child, &pool, max_rank, &mut found);
                }
            }
            found
        };
        let results: Vec<Vec<Vec<Elt>>> = if self.options.jobs == 1 {
            tasks.iter().map(run).collect()
        } else {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(self.options.jobs)
                .build()
                .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
            pool.install(|| tasks.par_iter().map(run).collect())
        };
        hits.extend(results.into_iter().flatten());
        log::info!("search finished with {} hits", hits.len());
        Ok(hits)
    }

    /// Tries every candidate of `pool` (involutions commuting with all of `node.gens` but
    /// the last) as the next generator.
    fn descend(&self, node: &Node, pool: &[Elt], max_rank: usize, found: &mut Vec<Vec<Elt>>) {
        let last = *node.gens.last().expect("non-empty prefix");
        for &s in pool {
            if let Some(child) = self.extend(node, s, found) {
                if child.gens.len() < max_rank {
                    let next: Vec<Elt> = pool.iter().copied().filter(|&x| self.commutes(x, last)).collect();
                    self.descend(&child, &next, max_rank, found);
                }
            }
        }
    }

    /// Appends `s` if the result is still a C-string. A result generating the whole group
    /// is pushed to `found` and not returned.
    fn extend(&self, node: &Node, s: Elt, found: &mut Vec<Vec<Elt>>) -> Option<Node> {
        let k = node.gens.len();
        let last = node.gens[k - 1];
        if !self.options.allow_degenerate && self.commutes(s, last) {
            return None;
        }
        let whole = &node.suffix[0];
        if whole.contains(s) {
            return None;
        }
        let mut gens = node.gens.clone();
        gens.push(s);
        let mut suffix = vec![None; k + 1];
        suffix[k] = Some(self.group.closure(&[s]));
        for j in (1..k).rev() {
            let h = self.group.closure(&gens[j..]);
            if whole.intersection_len(&h) != node.suffix[j].len() {
                return None;
            }
            suffix[j] = Some(h);
        }
        let full = self.group.closure(&gens);
        if full.len() == self.group.len() {
            found.push(gens);
            return None;
        }
        suffix[0] = Some(full);
        Some(Node {
            gens,
            suffix: suffix.into_iter().map(|x| x.expect("filled")).collect(),
        })
    }

    fn string(&self, tuple: &[Elt]) -> GeneratorString {
        GeneratorString::new(
            self.group.degree(),
            tuple.iter().map(|&x| self.group.element(x).clone()).collect(),
        )
        .expect("uniform degree")
    }

    /// Merges hits into classes. Hits are processed in sorted order, so each class is
    /// represented by its least hit.
    fn classify(&self, mut hits: Vec<Vec<Elt>>) -> Result<Vec<CensusRecord>> {
        hits.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        hits.dedup();
        struct Class {
            tuple: Vec<Elt>,
            record: CensusRecord,
        }
        let mut buckets: HashMap<(usize, Fingerprint), Vec<usize>> = HashMap::new();
        let mut classes: Vec<Class> = Vec::new();
        for tuple in hits {
            let string = self.string(&tuple);
            let key = (tuple.len(), fingerprint(&string));
            let dual: Vec<Elt> = tuple.iter().rev().copied().collect();
            let bucket = buckets.entry(key).or_default();
            let mut merged = false;
            for &c in bucket.iter() {
                let class = &mut classes[c];
                if self.group.extend_map(&class.tuple, &tuple).is_some() {
                    class.record.merged_by_automorphism += 1;
                    merged = true;
                    break;
                }
                if self.group.extend_map(&class.tuple, &dual).is_some() {
                    class.record.merged_by_duality += 1;
                    merged = true;
                    break;
                }
            }
            if merged {
                continue;
            }
            let p = schlafli(&string);
            let palindrome = p.iter().eq(p.iter().rev());
            let self_dual = palindrome && self.group.extend_map(&tuple, &dual).is_some();
            bucket.push(classes.len());
            classes.push(Class {
                record: CensusRecord {
                    degenerate: p.contains(&2),
                    schlafli: p,
                    self_dual,
                    representative: string,
                    merged_by_automorphism: 0,
                    merged_by_duality: 0,
                },
                tuple,
            });
        }
        Ok(classes.into_iter().map(|c| c.record).collect())
    }

    /// Re-checks every representative with the general verifier.
    fn reverify(&self, g: &PermutationGroup, records: &[CensusRecord]) -> Result<()> {
        for rec in records {
            if !is_cstring_of(&rec.representative, g)? {
                return Err(Error::InvariantViolation(format!(
                    "census representative {:?} fails verification",
                    rec.representative.to_strings()
                )));
            }
        }
        Ok(())
    }
}
