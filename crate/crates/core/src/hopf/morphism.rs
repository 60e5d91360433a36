use std::sync::Arc;

use super::{window_basis, window_pairs, AxiomReport, HopfAlgebra};
use crate::error::Result;
use crate::linear::{rank, tensor, LinComb, LinMap};

/// A linear map between two Hopf algebras, tabulated on the enumerated
/// source basis, claimed to preserve all structure maps.
pub struct HopfMorphism<S: HopfAlgebra + ?Sized, T: HopfAlgebra + ?Sized> {
    source: Arc<S>,
    target: Arc<T>,
    map: LinMap<S::Basis, T::Basis>,
}

impl<S: HopfAlgebra + ?Sized, T: HopfAlgebra + ?Sized> Clone for HopfMorphism<S, T> {
    fn clone(&self) -> Self {
        Self { source: self.source.clone(), target: self.target.clone(), map: self.map.clone() }
    }
}

impl<S: HopfAlgebra + ?Sized, T: HopfAlgebra + ?Sized> std::fmt::Debug for HopfMorphism<S, T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("HopfMorphism").field("map", &self.map).finish()
    }
}

impl<S: HopfAlgebra + ?Sized, T: HopfAlgebra + ?Sized> HopfMorphism<S, T> {
    pub fn new(source: Arc<S>, target: Arc<T>, map: LinMap<S::Basis, T::Basis>) -> Self {
        Self { source, target, map }
    }

    /// Tabulate `f` on the enumerated source basis.
    pub fn from_fn(source: Arc<S>, target: Arc<T>, f: impl FnMut(&S::Basis) -> LinComb<T::Basis>) -> Self {
        let map = LinMap::new(source.basis(), f);
        Self { source, target, map }
    }

    pub fn source(&self) -> &Arc<S> {
        &self.source
    }

    pub fn target(&self) -> &Arc<T> {
        &self.target
    }

    pub fn map(&self) -> &LinMap<S::Basis, T::Basis> {
        &self.map
    }

    pub fn apply(&self, x: &LinComb<S::Basis>) -> Result<LinComb<T::Basis>> {
        self.map.apply(x)
    }

    /// Injective on the enumerated source basis.
    pub fn is_injective(&self) -> bool {
        let images: Vec<_> = self.map.iter().map(|(_, v)| v.clone()).collect();
        rank(&images) == images.len()
    }

    /// Check unit, counit, product, coproduct and antipode compatibility on
    /// basis symbols (pairs for the product) within `window`.
    pub fn check(&self, window: Option<usize>) -> AxiomReport {
        let (s, t) = (&*self.source, &*self.target);
        let window = window.or(s.cap());
        let singles = window_basis(s, window);
        let mut report = AxiomReport::default();

        let unit_ok = self.apply(&s.unit()).is_ok_and(|v| v == t.unit());
        report.push("unit", if unit_ok { vec![] } else { vec![vec!["1".to_string()]] });

        let mut counit = Vec::new();
        let mut coproduct = Vec::new();
        let mut antipode = Vec::new();
        for b in &singles {
            let fb = match self.map.apply_basis(b) {
                Ok(v) => v,
                Err(_) => {
                    counit.push(vec![s.label(b)]);
                    continue;
                }
            };
            if t.counit_of(&fb) != s.counit(b) {
                counit.push(vec![s.label(b)]);
            }
            let pushed = s.coproduct(b).try_flat_map(|(x, y)| Ok::<_, crate::error::Error>(tensor(&self.map.apply_basis(x)?, &self.map.apply_basis(y)?)));
            if pushed.map_or(true, |p| p != t.comul(&fb)) {
                coproduct.push(vec![s.label(b)]);
            }
            if self.apply(&s.antipode(b)).map_or(true, |v| v != t.antipode_of(&fb)) {
                antipode.push(vec![s.label(b)]);
            }
        }
        report.push("counit", counit);
        report.push("coproduct", coproduct);
        report.push("antipode", antipode);

        let mut product = Vec::new();
        for (a, b) in window_pairs(s, window) {
            let ok = (|| -> Result<bool> {
                let lhs = self.apply(&s.product(&a, &b))?;
                let rhs = t.mul(&self.map.apply_basis(&a)?, &self.map.apply_basis(&b)?);
                Ok(lhs == rhs)
            })();
            if !ok.unwrap_or(false) {
                product.push(vec![s.label(&a), s.label(&b)]);
            }
        }
        report.push("product", product);
        report
    }
}
