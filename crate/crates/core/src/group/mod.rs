//! Finite groups, their group algebras, wreath products of groups and the
//! classical Kaloujnine–Krasner embedding.

mod algebra;
mod builtin;
mod extension;
mod finite_group;
mod measuring;
mod wreath;

pub use algebra::{group_algebra, GroupAlgebra};
pub use builtin::{builtin_group, cyclic, dihedral, direct_product, klein_four, quaternion, trivial_group, BUILTIN_GROUPS};
pub use extension::{
    builtin_group_extension, c2xc2_over_c2, c4_over_c2, d4_over_center, find_conjugator, find_extension_isomorphism,
    group_round_trip, kk_embed_group, recover_extension_from_subgroup, split_extension, GroupEmbedding,
    GroupExtension, GroupRoundTrip, BUILTIN_GROUP_EXTENSIONS,
};
pub use finite_group::{find_isomorphism, find_isomorphism_with, FiniteGroup};
pub use measuring::{measuring_group_iso, GroupFunctionAlgebra, MeasuringCoalgebra};
pub use wreath::{all_functions, wreath_group, WreathGroup, WreathGroupElement};
