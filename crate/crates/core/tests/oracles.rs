//! Brute-force oracles: intersection property over all index-set pairs with explicit
//! element sets, and a census with no pruning and conjugation-only equivalence.

use std::collections::{BTreeSet, HashSet};

use cstring_core::autodual::{dual, extend_automorphism, fingerprint};
use cstring_core::census::{census_table, enumerate_rank, search_hits, CensusOptions};
use cstring_core::coxeter::{realize, CoxeterType};
use cstring_core::cstring::{intersection_property, is_cstring_of, is_degenerate, is_string_group, GeneratorString};
use cstring_core::{Permutation, PermutationGroup};
use proptest::prelude::*;

fn closure(degree: usize, gens: &[&Permutation]) -> HashSet<Permutation> {
    let mut seen = HashSet::from([Permutation::identity(degree)]);
    let mut frontier = vec![Permutation::identity(degree)];
    while let Some(g) = frontier.pop() {
        for s in gens {
            let h = &g * s;
            if seen.insert(h.clone()) {
                frontier.push(h);
            }
        }
    }
    seen
}

/// `⟨J⟩ ∩ ⟨K⟩ = ⟨J ∩ K⟩` for every pair of index sets, by explicit sets.
fn brute_force_ip(s: &GeneratorString) -> bool {
    let r = s.rank();
    let subgroups: Vec<HashSet<Permutation>> = (0..1usize << r)
        .map(|mask| {
            let gens: Vec<&Permutation> = (0..r).filter(|i| mask >> i & 1 == 1).map(|i| &s.gens()[i]).collect();
            closure(s.degree(), &gens)
        })
        .collect();
    (0..1usize << r).all(|j| {
        (0..1usize << r).all(|k| {
            let meet = subgroups[j].intersection(&subgroups[k]).count();
            meet == subgroups[j & k].len()
        })
    })
}

fn fixture_groups() -> Vec<PermutationGroup> {
    let mut groups = vec![
        PermutationGroup::symmetric(4),
        PermutationGroup::symmetric(5),
        PermutationGroup::symmetric(6),
    ];
    for ty in [CoxeterType::H3, CoxeterType::F4, CoxeterType::D(5), CoxeterType::B(3), CoxeterType::A(4)] {
        groups.push(realize(ty).unwrap().group);
    }
    assert!(groups.iter().all(|g| g.order() <= 2000));
    groups
}

/// Random string groups: `s_k` is drawn from the involutions commuting with `s_1..s_{k-2}`.
fn random_string(group: &PermutationGroup, invs: &[Permutation], picks: &[usize]) -> Option<GeneratorString> {
    let mut gens: Vec<Permutation> = Vec::new();
    for &p in picks {
        let k = gens.len();
        let pool: Vec<&Permutation> = invs
            .iter()
            .filter(|x| gens[..k.saturating_sub(1)].iter().all(|g| g.commutes_with(x)))
            .collect();
        if pool.is_empty() {
            return None;
        }
        gens.push(pool[p % pool.len()].clone());
    }
    let s = GeneratorString::new(group.degree(), gens).unwrap();
    is_string_group(&s).then_some(s)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn intersection_property_matches_brute_force(
        which in 0usize..8,
        picks in prop::collection::vec(any::<usize>(), 2..=4),
    ) {
        thread_local! {
            static FIXTURES: Vec<(PermutationGroup, Vec<Permutation>)> = fixture_groups()
                .into_iter()
                .map(|g| { let i = g.involutions().unwrap(); (g, i) })
                .collect();
        }
        FIXTURES.with(|fx| {
            let (g, invs) = &fx[which];
            if let Some(s) = random_string(g, invs, &picks) {
                prop_assert_eq!(intersection_property(&s).unwrap(), brute_force_ip(&s), "{:?}", s.to_strings());
            }
            Ok(())
        })?;
    }
}

#[test]
fn census_representatives_pass_brute_force() {
    for ty in [CoxeterType::H3, CoxeterType::F4] {
        let g = realize(ty).unwrap().group;
        let table = census_table(&g, &CensusOptions::default()).unwrap();
        for rec in &table.records {
            assert!(brute_force_ip(&rec.representative), "{ty}: {:?}", rec.representative.to_strings());
        }
    }
}

#[test]
fn known_failures_are_detected() {
    // s_3 = s_1 s_2.
    let s = GeneratorString::parse(4, &["(1,2)", "(3,4)", "(1,2)(3,4)"]).unwrap();
    assert!(!brute_force_ip(&s));
    assert!(!intersection_property(&s).unwrap());
}

/// Conjugation-only classes up to duality, by exhaustive search over all tuples.
fn naive_classes(n: usize, r: usize, allow_degenerate: bool) -> Vec<(GeneratorString, bool)> {
    let g = PermutationGroup::symmetric(n);
    let elements: Vec<Permutation> = g.elements().unwrap().collect();
    let invs = g.involutions().unwrap();
    let mut tuples = Vec::new();
    let mut idx = vec![0usize; r];
    loop {
        let s = GeneratorString::new(n, idx.iter().map(|&i| invs[i].clone()).collect()).unwrap();
        if (allow_degenerate || !is_degenerate(&s)) && is_string_group(&s) && s.group().order() == g.order() && brute_force_ip(&s) {
            tuples.push(s);
        }
        let mut k = 0;
        while k < r {
            idx[k] += 1;
            if idx[k] < invs.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == r {
            break;
        }
    }
    let orbit = |s: &GeneratorString| -> BTreeSet<Vec<Permutation>> {
        elements
            .iter()
            .map(|x| s.gens().iter().map(|p| p.conjugate_by(x)).collect())
            .collect()
    };
    let mut seen: HashSet<Vec<Permutation>> = HashSet::new();
    let mut classes = Vec::new();
    for s in tuples {
        if seen.contains(s.gens()) {
            continue;
        }
        let forward = orbit(&s);
        let backward = orbit(&dual(&s));
        let self_dual = forward.contains(dual(&s).gens());
        seen.extend(forward);
        seen.extend(backward);
        classes.push((s, self_dual));
    }
    classes
}

#[test]
fn census_agrees_with_naive_enumeration() {
    // Every automorphism of Sym(n), n ≠ 6, is inner, so conjugacy is the right equivalence.
    for (n, r) in [(4, 3), (4, 4), (5, 3), (5, 4)] {
        for allow_degenerate in [false, true] {
            let options = CensusOptions { allow_degenerate, jobs: 1 };
            let fast = enumerate_rank(&PermutationGroup::symmetric(n), r, &options).unwrap();
            let naive = naive_classes(n, r, allow_degenerate);
            assert_eq!(fast.len(), naive.len(), "Sym({n}) rank {r} degenerate={allow_degenerate}");
            let sd = |v: &[bool]| v.iter().filter(|&&b| b).count();
            assert_eq!(
                sd(&fast.iter().map(|c| c.self_dual).collect::<Vec<_>>()),
                sd(&naive.iter().map(|c| c.1).collect::<Vec<_>>()),
            );
            let g = PermutationGroup::symmetric(n);
            for (s, _) in &naive {
                let matched = fast.iter().any(|c| {
                    extend_automorphism(&g, &c.representative, s).unwrap()
                        || extend_automorphism(&g, &c.representative, &dual(s)).unwrap()
                });
                assert!(matched, "{:?} missing from the census", s.to_strings());
            }
        }
    }
}

#[test]
fn census_representatives_reverify_and_close_under_duality() {
    let g = realize(CoxeterType::F4).unwrap().group;
    let table = census_table(&g, &CensusOptions::default()).unwrap();
    for rec in &table.records {
        assert!(is_cstring_of(&rec.representative, &g).unwrap());
        let d = dual(&rec.representative);
        let matches: Vec<_> = table
            .records
            .iter()
            .filter(|o| o.rank() == rec.rank())
            .filter(|o| {
                extend_automorphism(&g, &o.representative, &d).unwrap()
                    || extend_automorphism(&g, &o.representative, &rec.representative).unwrap()
            })
            .collect();
        assert_eq!(matches.len(), 1, "each dual pair is counted once");
    }
}

#[test]
fn fingerprint_is_sound_on_h3_hits() {
    let g = realize(CoxeterType::H3).unwrap().group;
    let hits = search_hits(&g, 3, &CensusOptions::default()).unwrap();
    assert!(hits.len() > 8);
    let mut equivalent_pairs = 0;
    for a in &hits {
        for b in &hits {
            for t in [b.clone(), dual(b)] {
                if extend_automorphism(&g, a, &t).unwrap() {
                    equivalent_pairs += 1;
                    assert_eq!(fingerprint(a), fingerprint(&t));
                }
            }
        }
    }
    assert!(equivalent_pairs > hits.len());
}

#[test]
fn d4_has_no_cstrings() {
    let g = realize(CoxeterType::D(4)).unwrap().group;
    let table = census_table(&g, &CensusOptions { allow_degenerate: true, jobs: 1 }).unwrap();
    assert!(table.ranks().all(|r| table.nondegenerate(r).total == 0));
}
