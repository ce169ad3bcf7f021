//! Subgroup lattices of small finite groups.
//!
//! Groups are stored as full Cayley tables and subgroups as membership
//! bitmasks. On top of that this crate enumerates every subgroup, builds the
//! cover graph of the subgroup lattice, and checks whether that graph is
//! regular. The [`harness`] module runs the regularity-vs-cyclic-square-free
//! equivalence and a set of structural checks over a census of groups.

pub mod arith;
pub mod document;
pub mod element_set;
mod error;
pub mod group;
pub mod group_spec;
pub mod harness;
pub mod io;
pub mod lattice;
pub mod subgroup;

pub use element_set::ElementSet;
pub use error::{Error, Result};
pub use group::Group;
pub use group_spec::GroupSpec;
pub use lattice::{Degree, Lattice, RegularityReport};
pub use subgroup::{MinimalSubgroupTable, Subgroup};

/// Default cap on group order.
pub const DEFAULT_MAX_ORDER: usize = 200;
/// Default cap on the number of subgroups enumerated for one group.
pub const DEFAULT_MAX_SUBGROUPS: usize = 20_000;

/// Size limits applied to group construction and subgroup enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_order: usize,
    pub max_subgroups: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: DEFAULT_MAX_ORDER,
            max_subgroups: DEFAULT_MAX_SUBGROUPS,
        }
    }
}

impl Limits {
    pub fn with_max_order(max_order: usize) -> Self {
        Limits {
            max_order,
            ..Limits::default()
        }
    }
}
