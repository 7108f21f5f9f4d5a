//! Finite permutation-group computations at desk scale: a group engine
//! with deterministic element enumeration, complete subgroup lattices,
//! classical structure theory (Sylow/Hall subgroups, Frattini and Fitting
//! subgroups, chief series, dispersivity), the supersolubility formation
//! and its derived predicates, subnormal chain predicates, and recognizers
//! for the structural group types tied to those predicates.

pub mod classifier;
pub mod error;
pub mod formations;
pub mod group;
pub mod lattice;
pub mod perm;
pub mod stabchain;
pub mod structure;
pub mod subnormality;

pub use error::GroupError;
pub use group::{ElementSet, Group, QuotientMap, DEFAULT_ENUM_CAP, DEFAULT_LATTICE_CAP};
pub use lattice::{SubgroupId, SubgroupLattice};
pub use perm::Permutation;
