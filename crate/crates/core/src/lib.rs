//! String C-groups of finite Coxeter groups.
//!
//! Permutation groups with stabilizer chains, Todd–Coxeter coset enumeration
//! over Coxeter presentations, verification of string C-groups (intersection
//! property, Schläfli type), explicit generator families for `D_n`, rank
//! reduction, duality/automorphism checks, CPR graphs, and an exhaustive
//! census of C-strings of a fixed group.

pub mod autodual;
pub mod census;
pub mod chain;
pub mod constructions;
pub mod coxeter;
pub mod cpr;
pub mod cstring;
pub mod error;
pub mod indexed;
pub mod perm;
pub mod rankreduce;
pub mod permgroup;

pub use chain::StabilizerChain;
pub use error::{Error, Result};
pub use perm::Permutation;
pub use permgroup::{InvolutionClass, PermutationGroup, DEFAULT_ENUMERATION_CAP};
