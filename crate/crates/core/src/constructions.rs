//! Explicit C-string families for `D_n` (degree `2n`) and skeleton strings of `Sym(n)`.
//!
//! Each generator is a product of disjoint transpositions. Pairs `(k, k+1)` on the
//! "positive" points `1..=n` are mirrored on `n+1..=2n` where the formula says so.

use crate::error::{Error, Result};
use crate::cstring::GeneratorString;
use crate::perm::Permutation;

/// CLI names of the families.
pub const FAMILY_NAMES: [&str; 4] = ["dn-odd", "dn-even-rank3", "dn-even", "sym-skeleton"];

fn involution(pairs: Vec<(usize, usize)>, degree: usize) -> Permutation {
    Permutation::from_transpositions(&pairs, degree).expect("constructions use disjoint in-range pairs")
}

/// `(k, k+1)` for `k = from, from+2, …` while `k + 1 ≤ last`.
fn ladder(from: usize, last: usize) -> Vec<(usize, usize)> {
    (from..last).step_by(2).map(|k| (k, k + 1)).collect()
}

/// Each pair `(a, b)` together with its mirror `(n+a, n+b)`.
fn mirrored(pairs: Vec<(usize, usize)>, n: usize) -> Vec<(usize, usize)> {
    let shifted: Vec<_> = pairs.iter().map(|&(a, b)| (n + a, n + b)).collect();
    pairs.into_iter().chain(shifted).collect()
}

fn string(degree: usize, gens: Vec<Permutation>) -> GeneratorString {
    GeneratorString::new(degree, gens).expect("uniform degree")
}

/// Rank-`n` C-string of `D_n` for odd `n ≥ 5`, Schläfli type `{4, 3^{n-2}}`:
/// `t_1 = ∏_{j=2}^{n} (j, n+j)`, `t_i = (i-1, i)(n+i-1, n+i)`.
pub fn dn_odd_rank_n(n: usize) -> Result<GeneratorString> {
    if n < 5 || n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("dn-odd needs odd n >= 5, got {n}")));
    }
    let deg = 2 * n;
    let mut gens = vec![involution((2..=n).map(|j| (j, n + j)).collect(), deg)];
    for i in 2..=n {
        gens.push(involution(vec![(i - 1, i), (n + i - 1, n + i)], deg));
    }
    Ok(string(deg, gens))
}

/// Rank-3 C-string of `D_n` for even `n ≥ 6`, Schläfli type `{12, n-1}`.
pub fn dn_even_rank3(n: usize) -> Result<GeneratorString> {
    if n < 6 || !n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("dn-even-rank3 needs even n >= 6, got {n}")));
    }
    let deg = 2 * n;
    let t1 = involution(vec![(1, 2), (n + 1, n + 2), (n - 1, 2 * n - 1), (n, 2 * n)], deg);
    let t2 = involution(mirrored(ladder(2, n - 1), n), deg);
    let t3 = involution(mirrored(ladder(3, n), n), deg);
    Ok(string(deg, vec![t1, t2, t3]))
}

/// Rank-`r` C-string of `D_n` for even `n ≥ 6` and `4 ≤ r ≤ n-1`, Schläfli type
/// `{3^{r-4}, 6, n-r+3, 4}`. The first `r-1` generators are a skeleton string of the
/// `Sym(n)` complement; the last is an even sign change.
pub fn dn_even_rank_r(n: usize, r: usize) -> Result<GeneratorString> {
    if n < 6 || !n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("dn-even needs even n >= 6, got {n}")));
    }
    if r < 4 || r > n - 1 {
        return Err(Error::InvalidParameter(format!("dn-even needs 4 <= r <= n-1, got r = {r}")));
    }
    let deg = 2 * n;
    let mut gens: Vec<Permutation> = (1..=r - 3)
        .map(|i| involution(vec![(i, i + 1), (n + i, n + i + 1)], deg))
        .collect();
    if r % 2 == 1 {
        gens.push(involution(mirrored(ladder(r - 2, n), n), deg));
        gens.push(involution(mirrored(ladder(r - 1, n - 1), n), deg));
        gens.push(involution(vec![(n - 1, 2 * n - 1), (n, 2 * n)], deg));
    } else {
        gens.push(involution(mirrored(ladder(r - 2, n - 1), n), deg));
        gens.push(involution(mirrored(ladder(r - 1, n), n), deg));
        gens.push(involution(vec![(n - 2, 2 * n - 2), (n - 1, 2 * n - 1)], deg));
    }
    Ok(string(deg, gens))
}

/// Rank-`d` C-string of `Sym(n)`, `3 ≤ d ≤ n-2`, Schläfli type `{3^{d-3}, 6, n-d+2}`.
///
/// CPR graph: the path `1 — 2 — ⋯ — d+1` with labels `1..d` (the `d`-simplex), continued
/// through `d+2, …, n` with labels alternating `d-1, d, d-1, …`.
pub fn sym_skeleton(n: usize, d: usize) -> Result<GeneratorString> {
    if n < 5 || d < 3 || d + 2 > n {
        return Err(Error::InvalidParameter(format!(
            "sym-skeleton needs n >= 5 and 3 <= d <= n-2, got n = {n}, d = {d}"
        )));
    }
    let mut gens: Vec<Permutation> = (1..=d - 2).map(|i| involution(vec![(i, i + 1)], n)).collect();
    let mut penultimate = vec![(d - 1, d)];
    penultimate.extend(ladder(d + 1, n));
    gens.push(involution(penultimate, n));
    gens.push(involution(ladder(d, n), n));
    Ok(string(n, gens))
}
