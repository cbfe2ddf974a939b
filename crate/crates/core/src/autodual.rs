//! Duality and automorphism equivalence of generator strings of a common group.
//!
//! Two strings `S`, `T` of `G` are equivalent when `s_i ↦ t_i` extends to an automorphism of
//! `G`. The test walks the Cayley graph of `G` on `S`, setting `φ(g·s_i) = φ(g)·t_i`, and
//! succeeds iff every edge agrees and the resulting map is a bijection.

use crate::cstring::{schlafli, GeneratorString};
use crate::error::{Error, Result};
use crate::indexed::{Elt, IndexedGroup};
use crate::perm::Permutation;
use crate::permgroup::PermutationGroup;

/// `(s_r, …, s_1)`.
pub fn dual(s: &GeneratorString) -> GeneratorString {
    s.reversed()
}

/// Indices of the generators of `s` in `g`, after checking that they generate all of `g`.
pub(crate) fn generating_indices(g: &IndexedGroup, s: &GeneratorString) -> Result<Vec<Elt>> {
    if s.degree() != g.degree() {
        return Err(Error::DegreeMismatch {
            expected: g.degree(),
            found: s.degree(),
        });
    }
    let idx = s.gens().iter().map(|p| g.require(p)).collect::<Result<Vec<_>>>()?;
    if g.closure(&idx).len() != g.len() {
        return Err(Error::GenerationMismatch(format!(
            "{:?} generates a proper subgroup",
            s.to_strings()
        )));
    }
    Ok(idx)
}

/// The automorphism of `g` carrying `s_i` to `t_i`, as a list of image permutations in
/// the element order of `g.elements()`, or `None` if there is none.
pub fn automorphism_map(
    g: &IndexedGroup,
    s: &GeneratorString,
    t: &GeneratorString,
) -> Result<Option<Vec<Elt>>> {
    if s.rank() != t.rank() {
        return Err(Error::Precondition(format!(
            "strings of ranks {} and {} cannot correspond",
            s.rank(),
            t.rank()
        )));
    }
    let si = generating_indices(g, s)?;
    let ti = generating_indices(g, t)?;
    Ok(g.extend_map(&si, &ti))
}

/// Whether `s_i ↦ t_i` extends to an automorphism of `g`. Both strings must generate `g`.
pub fn extend_automorphism(
    g: &PermutationGroup,
    s: &GeneratorString,
    t: &GeneratorString,
) -> Result<bool> {
    let indexed = IndexedGroup::new(g)?;
    Ok(automorphism_map(&indexed, s, t)?.is_some())
}

/// Some automorphism of `g` reverses `s`.
pub fn is_self_dual(g: &PermutationGroup, s: &GeneratorString) -> Result<bool> {
    let p = schlafli(s);
    if !p.iter().eq(p.iter().rev()) {
        return Ok(false);
    }
    extend_automorphism(g, s, &dual(s))
}

/// An invariant of a string under automorphisms and duality, used to bucket candidates
/// before exact comparison.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint(Vec<u64>);

/// Rank, Schläfli type, orders of all interval subgroups and of all products `s_i s_j`,
/// and the order of `s_1 ⋯ s_r`; symmetrised over the dual.
pub fn fingerprint(s: &GeneratorString) -> Fingerprint {
    let forward = raw_fingerprint(s);
    let backward = raw_fingerprint(&dual(s));
    Fingerprint(forward.min(backward))
}

fn raw_fingerprint(s: &GeneratorString) -> Vec<u64> {
    let r = s.rank();
    let g = s.gens();
    let mut out = vec![r as u64];
    out.extend(schlafli(s));
    for i in 0..r {
        for j in i + 1..=r {
            out.push(s.interval(i, j).order());
        }
    }
    for i in 0..r {
        for j in i + 1..r {
            out.push((&g[i] * &g[j]).order());
        }
    }
    let coxeter_element = g
        .iter()
        .fold(Permutation::identity(s.degree()), |acc, x| &acc * x);
    out.push(coxeter_element.order());
    out
}
