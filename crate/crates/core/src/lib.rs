//! Exact computations with cocommutative Hopf algebras: group algebras,
//! truncated universal enveloping algebras, smash and crossed products, and
//! wreath products together with the Kaloujnine–Krasner embeddings.

pub mod error;
pub mod group;
pub mod hopf;
pub mod io;
pub mod lie;
pub mod linear;
pub mod smash;

pub use error::{Error, Result};
