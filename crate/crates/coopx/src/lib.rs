//! Cooperative data exchange on undirected topologies.
//!
//! A set of clients sits on a connected graph; a file split into `k` packets
//! is scattered among them so that collectively they hold every packet. In
//! each round one client broadcasts a coded combination of the packets it can
//! already decode, heard only by its neighbors. This crate bounds and
//! constructs the number of rounds until everyone can decode everything:
//!
//! - exact fractional covering programs over vertex neighborhoods, solved
//!   with certified rational arithmetic ([`lp`]);
//! - greedy and exact dominating-set machinery, including connected variants
//!   ([`domset`]);
//! - round lower bounds assembled from the covering relaxations ([`bounds`]);
//! - deterministic broadcast schedulers and special-case constructions
//!   ([`scheduler`]);
//! - an exact simulator plus a brute-force optimum search for small cases
//!   ([`simulator`]);
//! - instance generators, reports, and JSON/CSV interchange
//!   ([`generators`], [`report`], [`io`]).
//!
//! Everything is deterministic: ties break toward lower vertex ids, randomness
//! is seeded, and outputs use ordered containers.

pub mod bounds;
pub mod domset;
pub mod error;
pub mod generators;
pub mod gf;
pub mod graph;
pub mod instance;
pub mod io;
pub mod lp;
pub mod rational;
pub mod report;
pub mod scheduler;
pub mod simulator;
