//! Rank reduction: `(s_1, …, s_r) ↦ (s_2, s_1 s_3, s_4, …, s_r)`.
//!
//! The transform yields a string C-group of rank `r − 1` on the same group whenever the
//! input is a non-degenerate C-string of rank at least 4 and `s_1 ∈ ⟨s_1 s_3, s_4⟩`.

use crate::cstring::{is_cstring_of, is_degenerate, schlafli, GeneratorString};
use crate::error::{Error, Result};
use crate::permgroup::PermutationGroup;

/// `s_1 ∈ ⟨s_1 s_3, s_4⟩`.
pub fn reducible(s: &GeneratorString) -> Result<bool> {
    if s.rank() < 4 {
        return Err(Error::Precondition(format!(
            "rank reduction needs rank >= 4, got {}",
            s.rank()
        )));
    }
    let g = s.gens();
    let h = PermutationGroup::new(s.degree(), vec![&g[0] * &g[2], g[3].clone()])?;
    h.contains(&g[0])
}

/// The reduced tuple, re-verified as a C-string of `⟨s⟩`.
///
/// Fails with `Error::Precondition` if `s` is degenerate or not [`reducible`], and with
/// `Error::InvariantViolation` if the output does not verify.
pub fn reduce(s: &GeneratorString) -> Result<GeneratorString> {
    if !reducible(s)? {
        return Err(Error::Precondition("s_1 is not in <s_1 s_3, s_4>".into()));
    }
    if is_degenerate(s) {
        return Err(Error::Precondition("rank reduction needs a non-degenerate string".into()));
    }
    let reduced = reduce_unchecked(s);
    let group = s.group();
    if !is_cstring_of(&reduced, &group)? {
        return Err(Error::InvariantViolation(format!(
            "reduction of {:?} is not a C-string of the same group",
            s.to_strings()
        )));
    }
    Ok(reduced)
}

fn reduce_unchecked(s: &GeneratorString) -> GeneratorString {
    let g = s.gens();
    let mut gens = vec![g[1].clone(), &g[0] * &g[2]];
    gens.extend_from_slice(&g[3..]);
    GeneratorString::new(s.degree(), gens).expect("uniform degree")
}

/// The stages of an iterated reduction together with the parity prediction.
#[derive(Clone, Debug)]
pub struct ReductionChain {
    /// `stages[0]` is the input; ranks decrease by one.
    pub stages: Vec<GeneratorString>,
    /// The largest `t` such that `p_3, …, p_{3+t}` are all odd, or `None` if `p_3` is even
    /// or absent. Ranks `r, r-1, …, r-t` are then guaranteed.
    pub predicted_t: Option<usize>,
}

impl ReductionChain {
    pub fn ranks(&self) -> Vec<usize> {
        self.stages.iter().map(GeneratorString::rank).collect()
    }

    /// The rank of the last stage.
    pub fn lowest_rank(&self) -> usize {
        self.stages.last().map_or(0, GeneratorString::rank)
    }
}

/// Parity prediction for a Schläfli type `(p_1, …, p_{r-1})`.
pub fn predicted_t(schlafli: &[u64]) -> Option<usize> {
    let run = schlafli.iter().skip(2).take_while(|&&p| p % 2 == 1).count();
    run.checked_sub(1)
}

/// Reduces repeatedly while the stage is non-degenerate, of rank at least 4, and reducible.
/// Every stage after the first is verified by [`reduce`].
pub fn reduce_chain(s: &GeneratorString) -> Result<ReductionChain> {
    let predicted_t = predicted_t(&schlafli(s));
    let mut stages = vec![s.clone()];
    loop {
        let last = stages.last().expect("non-empty");
        if last.rank() < 4 || is_degenerate(last) || !reducible(last)? {
            break;
        }
        let next = reduce(last)?;
        log::debug!("reduced to rank {} with type {:?}", next.rank(), schlafli(&next));
        stages.push(next);
    }
    let achieved = stages.len() - 1;
    if let Some(t) = predicted_t {
        if achieved < t {
            log::warn!("reduction chain stopped after {achieved} steps; parity predicted {t}");
        }
    }
    Ok(ReductionChain { stages, predicted_t })
}
