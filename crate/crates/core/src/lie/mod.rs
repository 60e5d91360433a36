//! Lie algebras by structure constants, PBW normal forms, truncated
//! enveloping algebras, the Lie wreath product and the Lie
//! Kaloujnine–Krasner embedding.

mod algebra;
mod envelope;
mod extension;
mod kk;
mod pbw;
mod wreath;

pub use algebra::{abelian, affine_2dim, builtin_lie, heisenberg, sl2, LieAlgebra, BUILTIN_LIE};
pub use envelope::{enveloping_hopf, shuffle_coproduct, Envelope};
pub use extension::{
    affine_over_abelian1, builtin_lie_extension, cancel_lemma_check, cancel_lemma_sides, coalgebra_section,
    heisenberg_over_abelian2, split_lie_extension, CoalgebraSection, LieExtension, BUILTIN_LIE_EXTENSIONS,
};
pub use kk::{kk_embed_lie, LieEmbedding};
pub use pbw::{pbw_normalize, pbw_normalize_with, Monomial, PbwRing};
pub use wreath::{lie_wreath_bracket, wreath_basis, WreathLie, WreathLieElement};
