//! Acceptance suite: one line per criterion, nonzero exit if any criterion fails.

use std::collections::HashSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use cstring_core::autodual::{automorphism_map, dual};
use cstring_core::census::{census_table, rmax_search, search_hits, CensusOptions};
use cstring_core::constructions::{dn_even_rank3, dn_even_rank_r, dn_odd_rank_n, sym_skeleton};
use cstring_core::coxeter::{coxeter_order, realize, CoxeterType};
use cstring_core::cpr::{cpr_graph, from_cpr};
use cstring_core::cstring::{intersection_property, is_cstring_of, is_string_group, schlafli, GeneratorString};
use cstring_core::indexed::IndexedGroup;
use cstring_core::rankreduce::reduce_chain;
use cstring_core::{Permutation, PermutationGroup};
use serde_json::Value;

fn cstring(args: &[&str], stdin: &str) -> (Option<i32>, String) {
    use std::io::Write;
    let mut child = Command::new(env!("CARGO_BIN_EXE_cstring"))
        .args(args)
        .env("RUST_LOG", "warn")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code(), String::from_utf8(out.stdout).unwrap())
}

fn jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

fn d(n: usize) -> PermutationGroup {
    realize(CoxeterType::D(n)).unwrap().group
}

fn within(start: Instant, limit: Duration) {
    assert!(start.elapsed() < limit, "took {:.1?}, limit {limit:?}", start.elapsed());
}

fn dn_odd_family() {
    for (n, order) in [(5, 1920), (7, 322560)] {
        let start = Instant::now();
        let n_arg = n.to_string();
        let (code, doc) = cstring(&["construct", "dn-odd", "--n", &n_arg, "--verify"], "");
        assert_eq!(code, Some(0));
        let (code, report) = cstring(&["verify", "--json", "-"], &doc);
        assert_eq!(code, Some(0));
        let report: Value = serde_json::from_str(&report).unwrap();
        let mut expected = vec![4];
        expected.extend(vec![3; n - 2]);
        assert_eq!(report["rank"], n);
        assert_eq!(report["group_order"], order);
        assert_eq!(report["schlafli"], serde_json::json!(expected));
        assert_eq!(report["cstring"], true);
        within(start, Duration::from_secs(10));
    }
}

fn dn_even_families() {
    let start = Instant::now();
    for n in [6usize, 8] {
        let g = d(n);
        let order = (1u64 << (n - 1)) * factorial(n as u64);
        assert_eq!(g.order(), order);
        let s = dn_even_rank3(n).unwrap();
        assert_eq!(schlafli(&s), [12, n as u64 - 1]);
        assert!(is_cstring_of(&s, &g).unwrap());
        for r in 4..n {
            let s = dn_even_rank_r(n, r).unwrap();
            let mut expected = vec![3; r - 4];
            expected.extend([6, (n - r + 3) as u64, 4]);
            assert_eq!(schlafli(&s), expected, "n={n} r={r}");
            assert_eq!(s.group().order(), order);
            assert!(is_cstring_of(&s, &g).unwrap(), "n={n} r={r}");
        }
    }
    within(start, Duration::from_secs(60));
}

fn product_order_table() {
    for n in [5, 7, 9] {
        let t = dn_odd_rank_n(n).unwrap().into_gens();
        for i in 1..=n {
            for j in 1..=n {
                let expected = match (i.min(j), i.max(j)) {
                    (a, b) if a == b => 1,
                    (1, 2) => 4,
                    (a, b) if b - a >= 2 => 2,
                    _ => 3,
                };
                assert_eq!((&t[i - 1] * &t[j - 1]).order(), expected, "n={n} i={i} j={j}");
            }
        }
    }
}

fn rank_reduction() {
    let g7 = d(7);
    let chain = reduce_chain(&dn_odd_rank_n(7).unwrap()).unwrap();
    let mut ranks7: Vec<usize> = Vec::new();
    for stage in &chain.stages {
        assert!(is_cstring_of(stage, &g7).unwrap(), "{:?}", schlafli(stage));
        ranks7.push(stage.rank());
    }
    ranks7.sort();
    assert_eq!(ranks7, [3, 4, 5, 6, 7]);
    let g6 = d(6);
    let mut witnesses = vec![dn_even_rank3(6).unwrap()];
    witnesses.extend((4..6).map(|r| dn_even_rank_r(6, r).unwrap()));
    let ranks6: Vec<usize> = witnesses
        .iter()
        .filter(|s| is_cstring_of(s, &g6).unwrap())
        .map(GeneratorString::rank)
        .collect();
    assert_eq!(ranks6, [3, 4, 5]);
}

fn census_lines(group: &str, limit: Duration) -> String {
    let start = Instant::now();
    let dir = tempfile::tempdir().unwrap();
    let atlas = dir.path().join("atlas.json");
    let jobs = jobs().to_string();
    let (code, out) = cstring(&["census", group, "--jobs", &jobs, "--atlas", atlas.to_str().unwrap()], "");
    assert_eq!(code, Some(0));
    within(start, limit);
    out
}

fn census_h3() {
    let out = census_lines("H3", Duration::from_secs(60));
    assert!(out.contains("rank 3: 8 (1 self-dual)"), "{out}");
    assert!(out.contains("total: 8(1)"), "{out}");
    for r in 4..=6 {
        assert!(out.contains(&format!("rank {r}: 0 (0 self-dual)")), "{out}");
    }
}

fn census_f4() {
    let out = census_lines("F4", Duration::from_secs(15 * 60));
    assert!(out.contains("rank 3: 3 (0 self-dual)"), "{out}");
    assert!(out.contains("rank 4: 2 (1 self-dual)"), "{out}");
    assert!(out.contains("total: 5(1)"), "{out}");
}

fn stretch() {
    let options = CensusOptions { allow_degenerate: false, jobs: jobs() };
    let h4 = census_table(&realize(CoxeterType::H4).unwrap().group, &options).unwrap();
    assert_eq!((h4.nondegenerate(3).total, h4.nondegenerate(3).self_dual), (45, 2));
    assert_eq!((h4.nondegenerate(4).total, h4.nondegenerate(4).self_dual), (14, 4));
    assert_eq!(h4.total().total, 59);
    let d4 = census_table(&d(4), &CensusOptions { allow_degenerate: true, ..options }).unwrap();
    assert!(d4.records.is_empty());
    assert_eq!(rmax_search(&d(6), &options).unwrap(), 5);
}

fn coxeter_orders() {
    let start = Instant::now();
    let e6 = 51840u64;
    let e7 = 56 * e6;
    for (ty, order) in [
        (CoxeterType::H3, 120),
        (CoxeterType::F4, 1152),
        (CoxeterType::H4, 14400),
        (CoxeterType::E6, e6),
        (CoxeterType::E7, e7),
        (CoxeterType::E8, 240 * e7),
    ] {
        assert_eq!(coxeter_order(&ty.matrix()).unwrap(), order, "{ty}");
        assert_eq!(realize(ty).unwrap().group.order(), order, "{ty}");
    }
    within(start, Duration::from_secs(300));
}

/// `⟨J⟩ ∩ ⟨K⟩ = ⟨J ∩ K⟩` for every pair of index sets, by explicit element sets.
fn brute_force_ip(s: &GeneratorString) -> bool {
    let r = s.rank();
    let closures: Vec<HashSet<Permutation>> = (0..1usize << r)
        .map(|mask| {
            let gens: Vec<&Permutation> = (0..r).filter(|i| mask >> i & 1 == 1).map(|i| &s.gens()[i]).collect();
            let mut seen = HashSet::from([Permutation::identity(s.degree())]);
            let mut frontier = vec![Permutation::identity(s.degree())];
            while let Some(x) = frontier.pop() {
                for g in &gens {
                    let y = &x * g;
                    if seen.insert(y.clone()) {
                        frontier.push(y);
                    }
                }
            }
            seen
        })
        .collect();
    (0..1usize << r).all(|j| {
        (0..1usize << r).all(|k| closures[j].intersection(&closures[k]).count() == closures[j & k].len())
    })
}

fn property_suites() {
    let mut groups = vec![PermutationGroup::symmetric(5), PermutationGroup::symmetric(6)];
    for ty in [CoxeterType::H3, CoxeterType::B(3), CoxeterType::A(4), CoxeterType::D(5)] {
        groups.push(realize(ty).unwrap().group);
    }
    let mut sampled = 0;
    for g in &groups {
        assert!(g.order() <= 2000);
        let invs = g.involutions().unwrap();
        for (i, a) in invs.iter().enumerate().step_by(7) {
            for b in invs.iter().skip(i % 3).step_by(11) {
                for c in invs.iter().filter(|c| c.commutes_with(a)).step_by(13) {
                    let s = GeneratorString::new(g.degree(), vec![a.clone(), b.clone(), c.clone()]).unwrap();
                    if is_string_group(&s) {
                        assert_eq!(intersection_property(&s).unwrap(), brute_force_ip(&s), "{:?}", s.to_strings());
                        sampled += 1;
                    }
                }
            }
        }
    }
    assert!(sampled >= 100, "only {sampled} strings sampled");

    for ty in [CoxeterType::H3, CoxeterType::F4] {
        let g = realize(ty).unwrap().group;
        let indexed = IndexedGroup::new(&g).unwrap();
        let hits = search_hits(&g, 3, &CensusOptions::default()).unwrap();
        let eq = |a: &GeneratorString, b: &GeneratorString| automorphism_map(&indexed, a, b).unwrap().is_some();
        for a in &hits {
            assert!(eq(a, a));
            for b in hits.iter().step_by(3) {
                let b_dual = dual(b);
                assert_eq!(eq(a, b), eq(b, a));
                assert_eq!(eq(a, &b_dual), eq(&b_dual, a));
            }
        }
    }

    let mut family = vec![dn_odd_rank_n(5).unwrap(), dn_even_rank3(6).unwrap(), dn_even_rank_r(8, 5).unwrap()];
    family.extend((3..=6).map(|d| sym_skeleton(8, d).unwrap()));
    for s in &family {
        let graph = cpr_graph(s).unwrap();
        let back = from_cpr(&graph, s.rank(), s.degree()).unwrap();
        assert_eq!(&back, s);
        assert_eq!(cpr_graph(&back).unwrap(), graph);
        assert_eq!(graph.is_connected(), s.group().is_transitive());
    }

    let elements: Vec<Permutation> = PermutationGroup::symmetric(5).elements().unwrap().collect();
    let id = Permutation::identity(5);
    for (i, a) in elements.iter().enumerate() {
        assert_eq!(&(a * &a.inverse()), &id);
        assert_eq!(&(&id * a), a);
        let b = &elements[(i * 7 + 3) % elements.len()];
        let c = &elements[(i * 13 + 5) % elements.len()];
        assert_eq!(&(a * b) * c, a * &(b * c));
        assert_eq!((a * b).inverse(), &b.inverse() * &a.inverse());
        assert_eq!(a.pow(a.order()), id);
        assert_eq!(a.conjugate_by(b), &(&b.inverse() * a) * b);
    }
}

fn main() {
    let criteria: [(&str, fn()); 9] = [
        ("odd D_n family is a rank-n C-string", dn_odd_family),
        ("even D_n families at every rank 3..n-1", dn_even_families),
        ("product-order table for n = 5, 7, 9", product_order_table),
        ("D_7 ranks 3..7 and D_6 ranks 3..5 witnessed", rank_reduction),
        ("census H3 = 8(1)", census_h3),
        ("census F4 = 3(0) + 2(1)", census_f4),
        ("H4 = 45(2) + 14(4), D_4 empty, D_6 has no rank 6", stretch),
        ("Coxeter orders agree with stabilizer chains", coxeter_orders),
        ("property suites", property_suites),
    ];
    panic::set_hook(Box::new(|info| eprintln!("    {info}")));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let ok = panic::catch_unwind(AssertUnwindSafe(check)).is_ok();
        let verdict = if ok { "PASS" } else { "FAIL" };
        println!("criterion {}: {verdict} {name} ({:.2?})", i + 1, start.elapsed());
        failed += usize::from(!ok);
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
