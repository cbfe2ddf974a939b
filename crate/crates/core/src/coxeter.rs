//! Coxeter matrices, named finite types, Todd–Coxeter coset enumeration, and
//! permutation realizations.
//!
//! Generator numbering is fixed per family (1-based, as printed by the CLI):
//!
//! | type     | bonds (unlisted pairs commute)                          |
//! |----------|---------------------------------------------------------|
//! | `A_n`    | `i — i+1` labelled 3                                    |
//! | `B_n`    | `1 — 2` labelled 4, then `i — i+1` labelled 3           |
//! | `D_n`    | `1 — 3`, `2 — 3`, then `i — i+1` for `i ≥ 3`, all 3     |
//! | `I2(m)`  | `1 — 2` labelled `m`                                    |
//! | `H3/H4`  | `1 — 2` labelled 5, then `i — i+1` labelled 3           |
//! | `F4`     | `1 — 2` (3), `2 — 3` (4), `3 — 4` (3)                   |
//! | `E_n`    | `1 — 3`, `2 — 4`, then `i — i+1` for `3 ≤ i < n`, all 3 |
//!
//! The `D_n` order matches [`dn_coxeter_generators`] generator by generator, and
//! dropping the last generator always leaves the next smaller member of the
//! family (`E8 ⊃ E7 ⊃ E6 ⊃ D5`, `H4 ⊃ H3`, `F4 ⊃ B3`, `D_n ⊃ D_{n-1}`).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::permgroup::PermutationGroup;

/// Coset bound for regular-representation enumerations.
pub const MAX_REGULAR_COSETS: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterMatrix {
    m: Vec<Vec<u32>>,
}

impl CoxeterMatrix {
    pub fn new(m: Vec<Vec<u32>>) -> Result<Self> {
        let n = m.len();
        for (i, row) in m.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidCoxeterMatrix(format!("row {} has length {}", i + 1, row.len())));
            }
            for (j, &v) in row.iter().enumerate() {
                if i == j && v != 1 {
                    return Err(Error::InvalidCoxeterMatrix(format!("m_{0}{0} = {v}, expected 1", i + 1)));
                }
                if i != j && v < 2 {
                    return Err(Error::InvalidCoxeterMatrix(format!("m_{}{} = {v} < 2", i + 1, j + 1)));
                }
                if m[j][i] != v {
                    return Err(Error::InvalidCoxeterMatrix(format!("not symmetric at ({}, {})", i + 1, j + 1)));
                }
            }
        }
        Ok(CoxeterMatrix { m })
    }

    /// Builds a matrix from 0-based bonds `(i, j, m_ij)`; unlisted pairs get 2.
    pub fn from_bonds(rank: usize, bonds: &[(usize, usize, u32)]) -> Result<Self> {
        let mut m = vec![vec![2u32; rank]; rank];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        for &(i, j, v) in bonds {
            if i >= rank || j >= rank || i == j {
                return Err(Error::InvalidCoxeterMatrix(format!("bad bond ({}, {})", i + 1, j + 1)));
            }
            m[i][j] = v;
            m[j][i] = v;
        }
        Self::new(m)
    }

    pub fn rank(&self) -> usize {
        self.m.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> u32 {
        self.m[i][j]
    }

    /// Off-diagonal entries other than 2, as 0-based `(i, j, m_ij)` with `i < j`.
    pub fn bonds(&self) -> Vec<(usize, usize, u32)> {
        let n = self.rank();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.m[i][j] != 2)
            .map(|(i, j)| (i, j, self.m[i][j]))
            .collect()
    }

    /// The matrix of the parabolic subgroup on `indices` (in the given order).
    pub fn restrict(&self, indices: &[usize]) -> CoxeterMatrix {
        CoxeterMatrix {
            m: indices
                .iter()
                .map(|&i| indices.iter().map(|&j| self.m[i][j]).collect())
                .collect(),
        }
    }

    /// Relator words `s_i s_i` and `(s_i s_j)^{m_ij}` over 0-based generator indices.
    pub fn relators(&self) -> Vec<Vec<usize>> {
        let n = self.rank();
        let mut out: Vec<Vec<usize>> = (0..n).map(|i| vec![i, i]).collect();
        for i in 0..n {
            for j in i + 1..n {
                let word = [i, j].repeat(self.m[i][j] as usize);
                out.push(word);
            }
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
struct CoxeterMatrixJson {
    rank: usize,
    entries: Vec<[u32; 3]>,
}

impl Serialize for CoxeterMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CoxeterMatrixJson {
            rank: self.rank(),
            entries: self
                .bonds()
                .into_iter()
                .map(|(i, j, v)| [i as u32 + 1, j as u32 + 1, v])
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CoxeterMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = CoxeterMatrixJson::deserialize(d)?;
        let bonds: Vec<_> = raw
            .entries
            .iter()
            .map(|&[i, j, v]| {
                if i == 0 || j == 0 {
                    Err(serde::de::Error::custom("generator indices are 1-based"))
                } else {
                    Ok((i as usize - 1, j as usize - 1, v))
                }
            })
            .collect::<std::result::Result<_, _>>()?;
        CoxeterMatrix::from_bonds(raw.rank, &bonds).map_err(serde::de::Error::custom)
    }
}

/// Named finite irreducible Coxeter types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoxeterType {
    A(usize),
    B(usize),
    D(usize),
    I2(u32),
    H3,
    H4,
    F4,
    E6,
    E7,
    E8,
}

impl CoxeterType {
    /// `family` is one of `A B D I2 H F E`; `param` is the rank, or `m` for `I2`.
    pub fn new(family: &str, param: usize) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("{family}{param} is not a finite Coxeter type"));
        Ok(match family {
            "A" if param >= 1 => CoxeterType::A(param),
            "B" if param >= 2 => CoxeterType::B(param),
            "D" if param >= 4 => CoxeterType::D(param),
            "I2" if param >= 3 => CoxeterType::I2(param as u32),
            "H" if param == 3 => CoxeterType::H3,
            "H" if param == 4 => CoxeterType::H4,
            "F" if param == 4 => CoxeterType::F4,
            "E" if param == 6 => CoxeterType::E6,
            "E" if param == 7 => CoxeterType::E7,
            "E" if param == 8 => CoxeterType::E8,
            _ => return Err(bad()),
        })
    }

    pub fn rank(&self) -> usize {
        match *self {
            CoxeterType::A(n) | CoxeterType::B(n) | CoxeterType::D(n) => n,
            CoxeterType::I2(_) => 2,
            CoxeterType::H3 => 3,
            CoxeterType::H4 | CoxeterType::F4 => 4,
            CoxeterType::E6 => 6,
            CoxeterType::E7 => 7,
            CoxeterType::E8 => 8,
        }
    }

    pub fn matrix(&self) -> CoxeterMatrix {
        let n = self.rank();
        let path = |from: usize, label_first: u32| -> Vec<(usize, usize, u32)> {
            (from..n.saturating_sub(1))
                .map(|i| (i, i + 1, if i == from { label_first } else { 3 }))
                .collect()
        };
        let bonds: Vec<(usize, usize, u32)> = match *self {
            CoxeterType::A(_) => path(0, 3),
            CoxeterType::B(_) => path(0, 4),
            CoxeterType::D(_) => {
                let mut b = vec![(0, 2, 3), (1, 2, 3)];
                b.extend(path(2, 3));
                b
            }
            CoxeterType::I2(m) => vec![(0, 1, m)],
            CoxeterType::H3 | CoxeterType::H4 => path(0, 5),
            CoxeterType::F4 => vec![(0, 1, 3), (1, 2, 4), (2, 3, 3)],
            CoxeterType::E6 | CoxeterType::E7 | CoxeterType::E8 => {
                let mut b = vec![(0, 2, 3), (1, 3, 3)];
                b.extend(path(2, 3));
                b
            }
        };
        CoxeterMatrix::from_bonds(n, &bonds).expect("named diagrams are valid")
    }
}

/// Standard Coxeter matrix of a named type; see [`CoxeterType::new`] for the arguments.
pub fn named_diagram(family: &str, param: usize) -> Result<CoxeterMatrix> {
    Ok(CoxeterType::new(family, param)?.matrix())
}

impl FromStr for CoxeterType {
    type Err = Error;

    /// Accepts `A5`, `D6`, `H4`, `E7`, `I2(7)` and the same with an underscore (`D_6`).
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace() && *c != '_').collect();
        let unknown = || Error::UnknownGroup(s.to_string());
        if let Some(inner) = t.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
            let m = inner.parse::<usize>().map_err(|_| unknown())?;
            return CoxeterType::new("I2", m);
        }
        let split = t.find(|c: char| c.is_ascii_digit()).ok_or_else(unknown)?;
        let (family, digits) = t.split_at(split);
        let param = digits.parse::<usize>().map_err(|_| unknown())?;
        match family.to_ascii_uppercase().as_str() {
            f @ ("A" | "B" | "D" | "H" | "F" | "E") => CoxeterType::new(f, param),
            _ => Err(unknown()),
        }
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CoxeterType::A(n) => write!(f, "A{n}"),
            CoxeterType::B(n) => write!(f, "B{n}"),
            CoxeterType::D(n) => write!(f, "D{n}"),
            CoxeterType::I2(m) => write!(f, "I2({m})"),
            CoxeterType::H3 => f.write_str("H3"),
            CoxeterType::H4 => f.write_str("H4"),
            CoxeterType::F4 => f.write_str("F4"),
            CoxeterType::E6 => f.write_str("E6"),
            CoxeterType::E7 => f.write_str("E7"),
            CoxeterType::E8 => f.write_str("E8"),
        }
    }
}

const UNDEF: u32 = u32::MAX;

/// A closed coset table: `image(c, i)` is the coset `c · s_i`. Coset 0 is the subgroup itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    ngens: usize,
    rows: Vec<u32>,
}

impl CosetTable {
    /// Number of live cosets, i.e. the index of the subgroup.
    pub fn len(&self) -> usize {
        self.rows.len().checked_div(self.ngens).unwrap_or(1)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn image(&self, coset: usize, generator: usize) -> usize {
        self.rows[coset * self.ngens + generator] as usize
    }
}

/// HLT enumerator specialised to involutory generators (each column is its own inverse).
struct Enumerator {
    ngens: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    live: usize,
    max_cosets: usize,
    queue: Vec<u32>,
}

impl Enumerator {
    fn new(ngens: usize, max_cosets: usize) -> Self {
        Enumerator {
            ngens,
            table: vec![UNDEF; ngens],
            parent: vec![0],
            live: 1,
            max_cosets,
            queue: Vec::new(),
        }
    }

    #[inline]
    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.ngens + x]
    }

    #[inline]
    fn set(&mut self, c: u32, x: usize, d: u32) {
        self.table[c as usize * self.ngens + x] = d;
    }

    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn define(&mut self, c: u32, x: usize) -> Result<()> {
        if self.live >= self.max_cosets {
            return Err(Error::CosetLimit(self.max_cosets));
        }
        let d = self.parent.len() as u32;
        self.parent.push(d);
        self.table.extend(std::iter::repeat_n(UNDEF, self.ngens));
        self.live += 1;
        self.set(c, x, d);
        self.set(d, x, c);
        Ok(())
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut root = c;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut k = c;
        while self.parent[k as usize] != root {
            let next = self.parent[k as usize];
            self.parent[k as usize] = root;
            k = next;
        }
        root
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a != b {
            let (keep, drop) = (a.min(b), a.max(b));
            self.parent[drop as usize] = keep;
            self.live -= 1;
            self.queue.push(drop);
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut head = 0;
        while head < self.queue.len() {
            let dead = self.queue[head];
            head += 1;
            for x in 0..self.ngens {
                let d = self.get(dead, x);
                if d == UNDEF {
                    continue;
                }
                self.set(dead, x, UNDEF);
                if self.get(d, x) == dead {
                    self.set(d, x, UNDEF);
                }
                let mu = self.rep(dead);
                let nu = self.rep(d);
                let mu_x = self.get(mu, x);
                let nu_x = self.get(nu, x);
                if mu_x != UNDEF {
                    self.merge(nu, mu_x);
                } else if nu_x != UNDEF {
                    self.merge(mu, nu_x);
                } else {
                    self.set(mu, x, nu);
                    self.set(nu, x, mu);
                }
            }
        }
    }

    fn scan_and_fill(&mut self, coset: u32, word: &[usize]) -> Result<()> {
        let mut f = coset;
        let mut b = coset;
        let mut i = 0isize;
        let mut j = word.len() as isize - 1;
        loop {
            while i <= j {
                let next = self.get(f, word[i as usize]);
                if next == UNDEF {
                    break;
                }
                f = next;
                i += 1;
            }
            if i > j {
                if f != coset {
                    self.coincidence(f, coset);
                }
                return Ok(());
            }
            while j >= i {
                let next = self.get(b, word[j as usize]);
                if next == UNDEF {
                    break;
                }
                b = next;
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                let x = word[i as usize];
                self.set(f, x, b);
                self.set(b, x, f);
                return Ok(());
            }
            self.define(f, word[i as usize])?;
        }
    }
}

/// Enumerates cosets of the parabolic subgroup `⟨s_k : k ∈ parabolic⟩` (0-based indices).
pub fn todd_coxeter(m: &CoxeterMatrix, parabolic: &[usize], max_cosets: usize) -> Result<CosetTable> {
    todd_coxeter_with_relators(m, parabolic, max_cosets, &m.relators())
}

/// As [`todd_coxeter`], with an explicit relator list (in scan order).
pub fn todd_coxeter_with_relators(
    m: &CoxeterMatrix,
    parabolic: &[usize],
    max_cosets: usize,
    relators: &[Vec<usize>],
) -> Result<CosetTable> {
    let n = m.rank();
    if let Some(&k) = parabolic.iter().find(|&&k| k >= n) {
        return Err(Error::InvalidParameter(format!("parabolic generator {} out of range", k + 1)));
    }
    if n == 0 {
        return Ok(CosetTable { ngens: 0, rows: Vec::new() });
    }
    let mut e = Enumerator::new(n, max_cosets.max(1));
    for &k in parabolic {
        e.scan_and_fill(0, &[k])?;
    }
    let mut c = 0u32;
    while (c as usize) < e.parent.len() {
        if e.is_live(c) {
            for r in relators {
                e.scan_and_fill(c, r)?;
                if !e.is_live(c) {
                    break;
                }
            }
            if e.is_live(c) {
                for x in 0..n {
                    if e.get(c, x) == UNDEF {
                        e.define(c, x)?;
                    }
                }
            }
        }
        c += 1;
    }
    // compact live cosets, preserving order
    let mut renumber = vec![UNDEF; e.parent.len()];
    let mut next = 0u32;
    for c in 0..e.parent.len() as u32 {
        if e.is_live(c) {
            renumber[c as usize] = next;
            next += 1;
        }
    }
    let mut rows = Vec::with_capacity(next as usize * n);
    for c in 0..e.parent.len() as u32 {
        if e.is_live(c) {
            for x in 0..n {
                let d = e.get(c, x);
                debug_assert!(d != UNDEF && e.is_live(d));
                rows.push(renumber[d as usize]);
            }
        }
    }
    Ok(CosetTable { ngens: n, rows })
}

/// The permutation action of the generators on cosets (points are cosets, 1-based).
pub fn coset_action(table: &CosetTable) -> PermutationGroup {
    let degree = table.len();
    let gens = (0..table.ngens())
        .map(|x| {
            Permutation::from_images_unchecked((0..degree).map(|c| table.image(c, x) as u32).collect())
        })
        .collect();
    PermutationGroup::new(degree, gens).expect("uniform degree")
}

/// `|W|` by recursion over maximal parabolics: `|W| = [W : W_P] · |W_P|` with `P` dropping the
/// last generator. Only valid for finite types.
pub fn coxeter_order(m: &CoxeterMatrix) -> Result<u64> {
    let n = m.rank();
    if n == 0 {
        return Ok(1);
    }
    if n == 1 {
        return Ok(2);
    }
    let parabolic: Vec<usize> = (0..n - 1).collect();
    let index = todd_coxeter(m, &parabolic, MAX_REGULAR_COSETS)?.len() as u64;
    Ok(index * coxeter_order(&m.restrict(&parabolic))?)
}

/// `β_0 = (1,n+1)(2,n+2)`, `β_i = (i,i+1)(n+i,n+i+1)`: a realization of `D_n` in degree `2n`.
pub fn dn_permutation_rep(n: usize) -> Result<Vec<Permutation>> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!("D_n needs n >= 4, got {n}")));
    }
    let deg = 2 * n;
    let mut gens = vec![Permutation::from_transpositions(&[(1, n + 1), (2, n + 2)], deg)?];
    for i in 1..n {
        gens.push(Permutation::from_transpositions(&[(i, i + 1), (n + i, n + i + 1)], deg)?);
    }
    Ok(gens)
}

/// Coxeter generators of the same `D_n ≤ Sym(2n)` as [`dn_permutation_rep`]:
/// `β_0 β_1 = (1,n+2)(2,n+1)` followed by `β_1, …, β_{n-1}`.
///
/// `β_0` itself generates the group together with the `β_i` but is not a Coxeter
/// generator: `β_0 β_2` has order 4.
pub fn dn_coxeter_generators(n: usize) -> Result<Vec<Permutation>> {
    let mut gens = dn_permutation_rep(n)?;
    gens[0] = &gens[0] * &gens[1];
    Ok(gens)
}

/// True iff the involutions `gens` satisfy the Coxeter relations of `m` with exact product
/// orders, and generate a group of order `|W|` (which rules out proper quotients).
pub fn verify_presentation(gens: &[Permutation], m: &CoxeterMatrix) -> Result<bool> {
    if gens.len() != m.rank() {
        return Ok(false);
    }
    let Some(degree) = gens.first().map(|g| g.degree()) else {
        return Ok(true);
    };
    if gens.iter().any(|g| g.degree() != degree || !g.is_involution()) {
        return Ok(false);
    }
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            if (&gens[i] * &gens[j]).order() != m.entry(i, j) as u64 {
                return Ok(false);
            }
        }
    }
    let group = PermutationGroup::new(degree, gens.to_vec())?;
    Ok(group.order() == coxeter_order(m)?)
}

/// A faithful permutation realization of a named Coxeter group.
#[derive(Clone, Debug)]
pub struct Realization {
    pub coxeter_type: CoxeterType,
    pub group: PermutationGroup,
    /// How the action was obtained, e.g. `"cosets of <1,2,3>"`.
    pub source: String,
}

fn sym_gens(n: usize) -> Vec<Permutation> {
    PermutationGroup::symmetric(n).generators().to_vec()
}

/// Default realization. `A_n`: `Sym(n+1)`; `B_n`: signed permutations in degree `2n`;
/// `D_n`: [`dn_permutation_rep`]; `I2(m)`: the `m`-gon. Exceptional types act on cosets of
/// the first faithful maximal parabolic (dropping the last generator first), falling back to
/// a sum of two coset actions and finally the regular action.
///
/// Every exceptional type is faithful on the first try: `H3` on 12 points, `H4` on 120,
/// `F4` on 24, `E6` on 27, `E7` on 56, `E8` on 240 (pinned by `realization_table`).
pub fn realize(ty: CoxeterType) -> Result<Realization> {
    let simple = |group: PermutationGroup, source: &str| Realization {
        coxeter_type: ty,
        group,
        source: source.to_string(),
    };
    match ty {
        CoxeterType::A(n) => {
            let g = PermutationGroup::new(n + 1, sym_gens(n + 1))?;
            Ok(simple(g, "adjacent transpositions"))
        }
        CoxeterType::B(n) => {
            let deg = 2 * n;
            let mut gens = vec![Permutation::from_transpositions(&[(1, n + 1)], deg)?];
            for i in 2..=n {
                gens.push(Permutation::from_transpositions(&[(i - 1, i), (n + i - 1, n + i)], deg)?);
            }
            Ok(simple(PermutationGroup::new(deg, gens)?, "signed permutations"))
        }
        CoxeterType::D(n) => Ok(simple(
            PermutationGroup::new(2 * n, dn_coxeter_generators(n)?)?,
            "even signed permutations",
        )),
        CoxeterType::I2(m) => {
            let m = m as usize;
            let reflect = |shift: usize| {
                Permutation::from_images_unchecked(
                    (0..m).map(|i| ((shift + m - i) % m) as u32).collect(),
                )
            };
            let g = PermutationGroup::new(m, vec![reflect(0), reflect(1)])?;
            Ok(simple(g, "regular polygon"))
        }
        _ => realize_by_cosets(ty),
    }
}

fn realize_by_cosets(ty: CoxeterType) -> Result<Realization> {
    let m = ty.matrix();
    let n = m.rank();
    let order = coxeter_order(&m)?;
    let describe = |p: &[usize]| {
        let names: Vec<String> = p.iter().map(|k| (k + 1).to_string()).collect();
        format!("cosets of <{}>", names.join(","))
    };
    let mut actions = Vec::new();
    for drop in (0..n).rev() {
        let parabolic: Vec<usize> = (0..n).filter(|&k| k != drop).collect();
        let group = coset_action(&todd_coxeter(&m, &parabolic, MAX_REGULAR_COSETS)?);
        if group.order() == order {
            return Ok(Realization {
                coxeter_type: ty,
                group,
                source: describe(&parabolic),
            });
        }
        actions.push((parabolic, group));
    }
    for a in 0..actions.len() {
        for b in a + 1..actions.len() {
            let group = direct_sum(&actions[a].1, &actions[b].1);
            if group.order() == order {
                return Ok(Realization {
                    coxeter_type: ty,
                    group,
                    source: format!("{} + {}", describe(&actions[a].0), describe(&actions[b].0)),
                });
            }
        }
    }
    let group = coset_action(&todd_coxeter(&m, &[], MAX_REGULAR_COSETS)?);
    Ok(Realization {
        coxeter_type: ty,
        group,
        source: "regular".to_string(),
    })
}

/// Intransitive action on the disjoint union of both point sets, generator by generator.
fn direct_sum(a: &PermutationGroup, b: &PermutationGroup) -> PermutationGroup {
    let shift = a.degree() as u32;
    let gens = a
        .generators()
        .iter()
        .zip(b.generators())
        .map(|(x, y)| {
            let images = x
                .as_slice()
                .iter()
                .copied()
                .chain(y.as_slice().iter().map(|&p| p + shift))
                .collect();
            Permutation::from_images_unchecked(images)
        })
        .collect();
    PermutationGroup::new(a.degree() + b.degree(), gens).expect("uniform degree")
}
