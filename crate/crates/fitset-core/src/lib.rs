//! Finite group computations on fully materialized multiplication tables:
//! subgroup lattices, group classes evaluated on sections, Fitting sets
//! with their radicals and injectors, and semilocal constructions.
//!
//! Groups are built from permutation generators and capped in order so the
//! whole subgroup lattice stays explicitly enumerable. Everything
//! downstream — class predicates, Fitting sets, injectors — works over
//! element bitmasks and lattice indices, which keeps results exact and
//! deterministic: elements are numbered by breadth-first search from the
//! identity and subgroups sort ascending by (order, mask) everywhere.

pub mod bitset;
pub mod classes;
pub mod error;
pub mod group;
pub mod fitting;
pub mod hfunction;
pub mod injectors;
pub mod lattice;
pub mod perm;
pub mod primes;
pub mod quotient;
pub mod theorems;

pub use bitset::Bitset;
pub use classes::ClassPredicate;
pub use error::{Error, Result};
pub use group::Group;
pub use fitting::{AxiomVerdict, FittingSet};
pub use hfunction::{HFunction, SemilocalVerdict};
pub use injectors::{InjectorResult, Method, TheoremBInjectors};
pub use theorems::{CheckItem, TheoremReport, TheoremStatus};
pub use lattice::{Subgroup, SubgroupLattice};
pub use perm::Perm;
pub use primes::{Pi, PrimeSet};
