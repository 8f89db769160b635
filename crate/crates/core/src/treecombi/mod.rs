//! Weighted bicolored plane trees: passports, orbit enumeration, expanded
//! maps, monodromy groups, duality and symmetry.

mod enumerate;
mod partition;
mod perm;
mod schreier;
mod tree;

pub use enumerate::{enumerate_orbit, enumerate_orbit_bounded, is_unitree, DEFAULT_WEIGHT_BOUND};
pub use partition::{Partition, Passport};
pub use perm::{expand_to_map, face_profile, is_self_dual, Perm, PermPair};
pub use schreier::{group_order, group_order_bounded, order_of, DEFAULT_POINT_BOUND};
pub use tree::{passport_of, symmetry_order, Color, Dart, WeightedTree};
