//! Permutation-group engine for studying minimal generating sets.

pub mod arith;
pub mod bitset;
pub mod chain;
pub mod corpus;
pub mod enumeration;
pub mod error;
pub mod flexibility;
pub mod group;
pub mod grp;
pub mod hom;
pub mod lattice;
pub mod limits;
pub mod linalg;
pub mod mgse;
pub mod oracle;
pub mod perm;
pub mod gensets;
pub mod products;
pub mod report;
pub mod suites;
pub mod structure;

pub use bitset::Bitset;
pub use error::{Error, Result};
pub use group::Group;
pub use hom::{coset_action, quotient, CosetAction, Homomorphism};
pub use lattice::{all_subgroups, frattini, SubgroupLattice};
pub use limits::Limits;
pub use perm::Perm;
pub use products::{direct_product, wreath_product, WreathElement, WreathFrame};
