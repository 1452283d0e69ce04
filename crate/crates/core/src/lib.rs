//! Finite group machinery for minimal-index computations.
//!
//! The crate answers one central question: given a finite group `G`, what is
//! the smallest index of a proper subgroup (written `kappa(G)`), and which
//! subgroups achieve it?  Around that sit the supporting pieces:
//!
//! * [`perm`], [`group`], [`bsgs`]: permutations, permutation groups and
//!   deterministic Schreier–Sims stabilizer chains;
//! * [`cayley`]: groups given by explicit multiplication tables, with
//!   subgroup enumeration, quotients and brute-force oracles;
//! * [`simple_id`]: recognition of finite simple groups by order and
//!   element-order statistics, plus the table of minimal faithful
//!   permutation degrees;
//! * [`kappa`]: the minimal-index computation itself, for both input
//!   representations;
//! * [`tree`]: which groups act nontrivially on a given tree, decided
//!   through the maximal symmetric degree of the tree;
//! * [`catalog`]: named example groups used by the test corpus and the CLI.
//!
//! Conventions used throughout: permutations act on the right, so composing
//! `p` then `q` gives the map `x -> q(p(x))`; points are 0-based in code and
//! 1-based in all textual formats; group orders are arbitrary-precision.

pub mod bsgs;
pub mod catalog;
pub mod cayley;
pub mod group;
pub mod kappa;
pub mod perm;
pub mod simple_id;
pub mod tree;

pub use bsgs::StabilizerChain;
pub use cayley::{CayleyGroup, SubgroupSet};
pub use group::PermGroup;
pub use kappa::{KappaOptions, KappaOutcome};
pub use perm::Permutation;
pub use simple_id::SimpleType;
pub use tree::Tree;
