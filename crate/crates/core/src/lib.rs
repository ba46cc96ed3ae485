//! Kings and serfs in oriented graphs.
//!
//! An oriented graph is a digraph with no loops and no symmetric arc pairs:
//! every pair of distinct vertices carries an arc one way, an arc the other
//! way, or no arc at all (a tie). This crate provides:
//!
//! - [`graph`]: the immutable [`OrientedGraph`] value type with degrees,
//!   scores, score sequences, converse, and transmitters;
//! - [`dominance`]: strict and weak two-step reachability, kings, serfs,
//!   weak kings, weak serfs, r-kings, and triple classification;
//! - [`construct`]: generators for graphs with prescribed weak-king/weak-serf
//!   structure, each certified against the dominance checker before return;
//! - [`enumerate`]: exhaustive enumeration of all labeled oriented graphs on
//!   up to 6 vertices, claim verification reports, and (k,s,b) realizability
//!   tables.
//!
//! The crate is `no_std` (alloc required); IO, file formats and the CLI live
//! in the companion `okings` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod construct;
pub mod dominance;
pub mod enumerate;
pub mod graph;


pub use construct::{CertifiedGraph, ClaimedOutcome, ConstructError, NksbMode, NksbSpec};
pub use dominance::{DominanceError, DominanceReport, Side, TripleKind, WeakPathWitness};
pub use enumerate::{Claim, EnumerateError, GraphCode, RealizabilityTable, VerificationReport};
pub use graph::{GraphError, OrientedGraph, Relation, ScoreSequence, VertexReport};
