use std::sync::Arc;

use num_traits::One;

use super::FiniteGroup;
use crate::hopf::{Algebra, Coalgebra, FreeModule, HopfAlgebra};
use crate::linear::{LinComb, Scalar};

/// The group algebra `𝕜G`: group elements are group-like, `S(g) = g⁻¹`.
#[derive(Clone, Debug)]
pub struct GroupAlgebra {
    group: Arc<FiniteGroup>,
}

impl GroupAlgebra {
    pub fn new(group: impl Into<Arc<FiniteGroup>>) -> Self {
        Self { group: group.into() }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn element(&self, label: &str) -> Option<LinComb<usize>> {
        self.group.index_of(label).map(LinComb::basis)
    }
}

pub fn group_algebra(group: impl Into<Arc<FiniteGroup>>) -> GroupAlgebra {
    GroupAlgebra::new(group)
}

impl FreeModule for GroupAlgebra {
    type Basis = usize;

    fn basis(&self) -> Vec<usize> {
        self.group.elements().collect()
    }

    fn label(&self, b: &usize) -> String {
        self.group.label(*b).to_string()
    }

    fn find_label(&self, s: &str) -> Option<usize> {
        self.group.index_of(s)
    }
}

impl Algebra for GroupAlgebra {
    fn product(&self, a: &usize, b: &usize) -> LinComb<usize> {
        LinComb::basis(self.group.mul(*a, *b))
    }

    fn unit(&self) -> LinComb<usize> {
        LinComb::basis(self.group.identity())
    }
}

impl Coalgebra for GroupAlgebra {
    fn coproduct(&self, b: &usize) -> LinComb<(usize, usize)> {
        LinComb::basis((*b, *b))
    }

    fn counit(&self, _b: &usize) -> Scalar {
        Scalar::one()
    }
}

impl HopfAlgebra for GroupAlgebra {
    fn antipode(&self, b: &usize) -> LinComb<usize> {
        LinComb::basis(self.group.inv(*b))
    }
}
