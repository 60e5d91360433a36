use std::collections::BTreeMap;

use super::LinComb;
use crate::error::{Error, Result};

/// A linear map given by its values on an explicit, ordered domain basis.
#[derive(Clone, Debug, PartialEq)]
pub struct LinMap<A: Ord, B: Ord> {
    domain: Vec<A>,
    images: BTreeMap<A, LinComb<B>>,
}

impl<A: Ord + Clone + std::fmt::Debug, B: Ord + Clone> LinMap<A, B> {
    /// Tabulate `f` on every domain symbol.
    pub fn new(domain: Vec<A>, mut f: impl FnMut(&A) -> LinComb<B>) -> Self {
        let images = domain.iter().map(|a| (a.clone(), f(a))).collect();
        Self { domain, images }
    }

    pub fn try_new<E>(domain: Vec<A>, mut f: impl FnMut(&A) -> std::result::Result<LinComb<B>, E>) -> std::result::Result<Self, E> {
        let mut images = BTreeMap::new();
        for a in &domain {
            images.insert(a.clone(), f(a)?);
        }
        Ok(Self { domain, images })
    }

    pub fn zero(domain: Vec<A>) -> Self {
        Self::new(domain, |_| LinComb::zero())
    }

    pub fn domain(&self) -> &[A] {
        &self.domain
    }

    pub fn image(&self, a: &A) -> Option<&LinComb<B>> {
        self.images.get(a)
    }

    pub fn apply_basis(&self, a: &A) -> Result<LinComb<B>> {
        self.images.get(a).cloned().ok_or_else(|| Error::OutsideDomain(format!("{a:?}")))
    }

    pub fn apply(&self, v: &LinComb<A>) -> Result<LinComb<B>> {
        v.try_flat_map(|a| self.apply_basis(a))
    }

    /// `other ∘ self`.
    pub fn then<C: Ord + Clone>(&self, other: &LinMap<B, C>) -> Result<LinMap<A, C>>
    where
        B: std::fmt::Debug,
    {
        LinMap::try_new(self.domain.clone(), |a| other.apply(&self.images[a]))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&A, &LinComb<B>)> {
        self.domain.iter().map(move |a| (a, &self.images[a]))
    }
}
