use std::sync::Arc;

use crate::hopf::{Algebra, Coalgebra, FreeModule, HopfAlgebra};
use crate::error::{Error, Result};
use crate::linear::{LinComb, Scalar, SpanBasis};

/// A sub-Hopf-algebra given by a spanning set inside an ambient Hopf
/// algebra, with structure maps tabulated in the coordinates of an
/// independent subset of the spanning set.
#[derive(Debug)]
pub struct SubHopf<H: HopfAlgebra> {
    ambient: Arc<H>,
    vectors: Vec<LinComb<H::Basis>>,
    span: SpanBasis<H::Basis>,
    unit: LinComb<usize>,
    product: Vec<Vec<LinComb<usize>>>,
    coproduct: Vec<LinComb<(usize, usize)>>,
    counit: Vec<Scalar>,
    antipode: Vec<LinComb<usize>>,
}

impl<H: HopfAlgebra> Clone for SubHopf<H> {
    fn clone(&self) -> Self {
        Self {
            ambient: self.ambient.clone(),
            vectors: self.vectors.clone(),
            span: self.span.clone(),
            unit: self.unit.clone(),
            product: self.product.clone(),
            coproduct: self.coproduct.clone(),
            counit: self.counit.clone(),
            antipode: self.antipode.clone(),
        }
    }
}

impl<H: HopfAlgebra> SubHopf<H> {
    /// Errors with `NotClosed` if the span misses the unit or is not closed
    /// under product, coproduct or antipode.
    pub fn new(ambient: Arc<H>, spanning: &[LinComb<H::Basis>]) -> Result<Self> {
        let mut probe = SpanBasis::new();
        let vectors: Vec<_> = spanning.iter().filter(|v| probe.insert(v)).cloned().collect();
        // rebuilt so coordinates index the independent vectors only
        let span = SpanBasis::from_vectors(&vectors);
        let label = |v: &LinComb<H::Basis>| ambient.render(v);
        let coords = |v: &LinComb<H::Basis>, what: &str| {
            span.coordinates(v).ok_or_else(|| Error::NotClosed(format!("{what} {} leaves the span", label(v))))
        };
        let unit = coords(&ambient.unit(), "unit")?;
        let mut product = Vec::with_capacity(vectors.len());
        for x in &vectors {
            let row = vectors.iter().map(|y| coords(&ambient.mul(x, y), "product")).collect::<Result<Vec<_>>>()?;
            product.push(row);
        }
        let antipode = vectors.iter().map(|x| coords(&ambient.antipode_of(x), "antipode")).collect::<Result<_>>()?;
        let counit = vectors.iter().map(|x| ambient.counit_of(x)).collect();
        let mut coproduct = Vec::with_capacity(vectors.len());
        for x in &vectors {
            coproduct.push(Self::split(&span, &ambient.comul(x)).ok_or_else(|| {
                Error::NotClosed(format!("coproduct of {} leaves the span", label(x)))
            })?);
        }
        Ok(Self { ambient, vectors, span, unit, product, coproduct, counit, antipode })
    }

    /// Write `t ∈ V ⊗ V` as `Σ c_jk v_j ⊗ v_k`, column by column.
    fn split(span: &SpanBasis<H::Basis>, t: &LinComb<(H::Basis, H::Basis)>) -> Option<LinComb<(usize, usize)>> {
        let mut by_right: std::collections::BTreeMap<H::Basis, LinComb<H::Basis>> = Default::default();
        for ((a, b), c) in t.iter() {
            by_right.entry(b.clone()).or_default().add_term(a.clone(), c.clone());
        }
        let mut by_left: std::collections::BTreeMap<usize, LinComb<H::Basis>> = Default::default();
        for (b, column) in by_right {
            for (j, c) in span.coordinates(&column)?.iter() {
                by_left.entry(*j).or_default().add_term(b.clone(), c.clone());
            }
        }
        let mut out = LinComb::zero();
        for (j, row) in by_left {
            for (k, c) in span.coordinates(&row)?.iter() {
                out.add_term((j, *k), c.clone());
            }
        }
        Some(out)
    }

    pub fn ambient(&self) -> &Arc<H> {
        &self.ambient
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[LinComb<H::Basis>] {
        &self.vectors
    }

    pub fn contains(&self, v: &LinComb<H::Basis>) -> bool {
        self.span.contains(v)
    }

    pub fn coordinates(&self, v: &LinComb<H::Basis>) -> Option<LinComb<usize>> {
        self.span.coordinates(v)
    }

    pub fn to_ambient(&self, x: &LinComb<usize>) -> LinComb<H::Basis> {
        x.flat_map(|i| self.vectors[*i].clone())
    }
}

impl<H: HopfAlgebra> FreeModule for SubHopf<H> {
    type Basis = usize;

    fn basis(&self) -> Vec<usize> {
        (0..self.vectors.len()).collect()
    }

    fn label(&self, b: &usize) -> String {
        self.ambient.render(&self.vectors[*b])
    }
}

impl<H: HopfAlgebra> Algebra for SubHopf<H> {
    fn product(&self, a: &usize, b: &usize) -> LinComb<usize> {
        self.product[*a][*b].clone()
    }

    fn unit(&self) -> LinComb<usize> {
        self.unit.clone()
    }
}

impl<H: HopfAlgebra> Coalgebra for SubHopf<H> {
    fn coproduct(&self, b: &usize) -> LinComb<(usize, usize)> {
        self.coproduct[*b].clone()
    }

    fn counit(&self, b: &usize) -> Scalar {
        self.counit[*b].clone()
    }
}

impl<H: HopfAlgebra> HopfAlgebra for SubHopf<H> {
    fn antipode(&self, b: &usize) -> LinComb<usize> {
        self.antipode[*b].clone()
    }
}
