//! Hopf module actions, smash and crossed products, the Hopf wreath
//! product `A^Q # Q` for groups and Lie algebras, cleft-extension data and
//! the embedding of an extension into the wreath product.

mod action;
mod cleft;
mod product;
mod subhopf;
mod wreath;

pub use action::{check_module_axioms, HopfAction, TableAction, TranslationAction, TrivialAction};
pub use product::{
    basis_group, c2_crossed_c2, crossed_product, smash_product, Cocycle, CrossedProduct, GroupCrossedProduct,
    SmashProduct, TensorCoalgebra,
};
pub use wreath::{
    group_wreath_comparison, wreath_hopf_group, wreath_hopf_lie, FunctionLieAlgebra, GroupWreathHopf, GroupWreathSmash,
    LieWreathAction, LieWreathHopf, LieWreathSmash, LIE_ACTION_WINDOW,
};
pub use cleft::{
    alpha_embed_group, alpha_embed_lie, cleavage_check, group_hopf_round_trip, lie_cleft_data, lie_hopf_round_trip,
    linearize_group_extension, recover_cleft_extension_group, recover_cleft_extension_lie, CleftExtensionData,
    GroupCleftData, GroupHopfEmbedding, GroupHopfRoundTrip, LieCleftData, LieHopfEmbedding, LieHopfRoundTrip,
};
pub use subhopf::SubHopf;
