//! Permutation groups by full element enumeration: subgroup lattices, normalizers,
//! quotients and the p-local subgroups everything else quantifies over.

mod group;
pub mod named;
mod perm;
mod quotient;
mod subgroup;

pub use group::{ConjClass, Group, DEFAULT_ORDER_CAP};
pub use perm::Perm;
pub use quotient::QuotientGroup;
pub use subgroup::{
    centralizer, core_p, frattini, normalizer, p_subgroup_classes, subgroup_classes, subgroups_of,
    BitSet, Subgroup, SubgroupLattice,
};

pub fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}
