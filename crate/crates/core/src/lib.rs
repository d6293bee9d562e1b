//! Exact combinatorics for cohomological representations of the real unitary
//! groups U(p,q): Adams–Johnson packets as bipartitions, refined shapes and
//! their Arthur-SL₂ types, growth exponents of automorphic multiplicities,
//! Sarnak–Xue density quantities and the symbolic leading terms of limit
//! multiplicity formulas.
//!
//! Everything is computed with arbitrary-precision integers and rationals.

pub mod asymptotics;
pub mod cohomology;
pub mod error;
pub mod growth;
pub mod infchar;
pub mod packets;
pub mod partitions;
pub mod rational;
pub mod sarnakxue;
pub mod shapes;

pub use error::{Error, Result};
pub use growth::GrowthValue;
pub use partitions::{Bipartition, OrderedPartition, UnorderedPartition};
pub use rational::Rational;
