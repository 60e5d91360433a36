//! Generic (co)algebra structure over an explicit basis, and the operations
//! that only need that structure: Sweedler expansion, convolution, axiom
//! checks, Hopf kernels, group-likes and primitives.

mod axioms;
mod convolution;
mod extract;
mod morphism;

pub use axioms::{check_algebra, check_axioms, AxiomCheck, AxiomReport, Status};
pub use convolution::{convolution_inverse, convolve, identity_map, sweedler_expand, unit_counit};
pub use extract::{group_likes, hopf_kernel, is_group_like, is_primitive, primitives, primitives_up_to};
pub use morphism::HopfMorphism;

use std::sync::Arc;

use num_traits::Zero;

use crate::linear::{tensor, Basis, LinComb, Scalar};

/// A free module with an enumerable basis.
///
/// Finite algebras enumerate their whole basis. Degree-filtered algebras
/// enumerate the basis up to `cap()`; structure maps still work exactly on
/// symbols beyond the cap.
pub trait FreeModule {
    type Basis: Basis;

    fn basis(&self) -> Vec<Self::Basis>;

    fn degree(&self, _b: &Self::Basis) -> usize {
        0
    }

    fn cap(&self) -> Option<usize> {
        None
    }

    fn label(&self, b: &Self::Basis) -> String {
        format!("{b:?}")
    }

    fn find_label(&self, s: &str) -> Option<Self::Basis> {
        self.basis().into_iter().find(|b| self.label(b) == s)
    }

    /// Largest degree in the support (0 for the zero element).
    fn degree_of(&self, x: &LinComb<Self::Basis>) -> usize {
        x.support().map(|b| self.degree(b)).max().unwrap_or(0)
    }

    fn render(&self, x: &LinComb<Self::Basis>) -> String {
        x.render(|b| self.label(b))
    }
}

pub trait Algebra: FreeModule {
    fn product(&self, a: &Self::Basis, b: &Self::Basis) -> LinComb<Self::Basis>;
    fn unit(&self) -> LinComb<Self::Basis>;

    fn mul(&self, x: &LinComb<Self::Basis>, y: &LinComb<Self::Basis>) -> LinComb<Self::Basis> {
        let mut out = LinComb::zero();
        for (a, c) in x.iter() {
            for (b, d) in y.iter() {
                out.add_scaled(&(c * d), &self.product(a, b));
            }
        }
        out
    }

    /// Componentwise product in `A ⊗ A`.
    fn mul_tensor(
        &self,
        x: &LinComb<(Self::Basis, Self::Basis)>,
        y: &LinComb<(Self::Basis, Self::Basis)>,
    ) -> LinComb<(Self::Basis, Self::Basis)> {
        let mut out = LinComb::zero();
        for ((a1, a2), c) in x.iter() {
            for ((b1, b2), d) in y.iter() {
                let left = self.product(a1, b1);
                let right = self.product(a2, b2);
                out.add_scaled(&(c * d), &tensor(&left, &right));
            }
        }
        out
    }
}

pub trait Coalgebra: FreeModule {
    fn coproduct(&self, b: &Self::Basis) -> LinComb<(Self::Basis, Self::Basis)>;
    fn counit(&self, b: &Self::Basis) -> Scalar;

    fn comul(&self, x: &LinComb<Self::Basis>) -> LinComb<(Self::Basis, Self::Basis)> {
        x.flat_map(|b| self.coproduct(b))
    }

    fn counit_of(&self, x: &LinComb<Self::Basis>) -> Scalar {
        x.iter().fold(Scalar::zero(), |acc, (b, c)| acc + c * self.counit(b))
    }
}

pub trait HopfAlgebra: Algebra + Coalgebra {
    fn antipode(&self, b: &Self::Basis) -> LinComb<Self::Basis>;

    fn antipode_of(&self, x: &LinComb<Self::Basis>) -> LinComb<Self::Basis> {
        x.flat_map(|b| self.antipode(b))
    }
}

/// Swap the legs of a two-leg tensor.
pub fn flip<A: Ord + Clone, B: Ord + Clone>(x: &LinComb<(A, B)>) -> LinComb<(B, A)> {
    x.map_basis(|(a, b)| (b.clone(), a.clone()))
}

macro_rules! forward_impls {
    ($($ptr:ty),*) => {$(
        impl<T: FreeModule + ?Sized> FreeModule for $ptr {
            type Basis = T::Basis;
            fn basis(&self) -> Vec<Self::Basis> { (**self).basis() }
            fn degree(&self, b: &Self::Basis) -> usize { (**self).degree(b) }
            fn cap(&self) -> Option<usize> { (**self).cap() }
            fn label(&self, b: &Self::Basis) -> String { (**self).label(b) }
            fn find_label(&self, s: &str) -> Option<Self::Basis> { (**self).find_label(s) }
        }
        impl<T: Algebra + ?Sized> Algebra for $ptr {
            fn product(&self, a: &Self::Basis, b: &Self::Basis) -> LinComb<Self::Basis> { (**self).product(a, b) }
            fn unit(&self) -> LinComb<Self::Basis> { (**self).unit() }
            fn mul(&self, x: &LinComb<Self::Basis>, y: &LinComb<Self::Basis>) -> LinComb<Self::Basis> { (**self).mul(x, y) }
        }
        impl<T: Coalgebra + ?Sized> Coalgebra for $ptr {
            fn coproduct(&self, b: &Self::Basis) -> LinComb<(Self::Basis, Self::Basis)> { (**self).coproduct(b) }
            fn counit(&self, b: &Self::Basis) -> Scalar { (**self).counit(b) }
        }
        impl<T: HopfAlgebra + ?Sized> HopfAlgebra for $ptr {
            fn antipode(&self, b: &Self::Basis) -> LinComb<Self::Basis> { (**self).antipode(b) }
        }
    )*};
}

forward_impls!(&T, Arc<T>);

/// Basis symbols of degree at most `window` (all of them when unbounded).
pub(crate) fn window_basis<H: FreeModule + ?Sized>(h: &H, window: Option<usize>) -> Vec<H::Basis> {
    let basis = h.basis();
    match window {
        Some(w) => basis.into_iter().filter(|b| h.degree(b) <= w).collect(),
        None => basis,
    }
}

/// Ordered pairs with degree sum at most `window`.
pub(crate) fn window_pairs<H: FreeModule + ?Sized>(h: &H, window: Option<usize>) -> Vec<(H::Basis, H::Basis)> {
    let basis = window_basis(h, window);
    let mut out = Vec::new();
    for a in &basis {
        for b in &basis {
            if window.is_none_or(|w| h.degree(a) + h.degree(b) <= w) {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}
