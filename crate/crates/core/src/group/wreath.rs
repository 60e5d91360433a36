use std::sync::Arc;

use super::FiniteGroup;
use crate::error::Result;

/// An element `(f, q)` of `A^Q ⋊ Q`: `f[x]` is the value at the `Q`-element with index `x`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WreathGroupElement {
    pub f: Vec<usize>,
    pub q: usize,
}

/// The wreath product `A ≀ Q = A^Q ⋊ Q` with
/// `(f, q)(g, r) = (x ↦ f(x)·g(xq), qr)`.
#[derive(Clone, Debug)]
pub struct WreathGroup {
    base: Arc<FiniteGroup>,
    top: Arc<FiniteGroup>,
    group: Arc<FiniteGroup>,
}

/// All functions `X → Y` as value vectors, in lexicographic order.
pub fn all_functions(domain_size: usize, codomain_size: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::with_capacity(domain_size)];
    for _ in 0..domain_size {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..codomain_size).map(move |y| {
                    let mut v = prefix.clone();
                    v.push(y);
                    v
                })
            })
            .collect();
    }
    out
}

pub(crate) fn encode_function(f: &[usize], codomain_size: usize) -> usize {
    f.iter().fold(0, |acc, &y| acc * codomain_size + y)
}

impl WreathGroup {
    pub fn new(base: impl Into<Arc<FiniteGroup>>, top: impl Into<Arc<FiniteGroup>>) -> Result<Self> {
        let (base, top) = (base.into(), top.into());
        let nq = top.order();
        let na = base.order();
        let elements: Vec<WreathGroupElement> = all_functions(nq, na)
            .into_iter()
            .flat_map(|f| top.elements().map(move |q| WreathGroupElement { f: f.clone(), q }))
            .collect();
        let labels = elements.iter().map(|e| Self::format(&base, &top, e)).collect();
        let index = |e: &WreathGroupElement| encode_function(&e.f, na) * nq + e.q;
        let group = FiniteGroup::from_fn(format!("{}wr{}", base.name(), top.name()), labels, |a, b| {
            index(&Self::multiply(&base, &top, &elements[a], &elements[b]))
        })?;
        Ok(Self { base, top, group: Arc::new(group) })
    }

    fn multiply(base: &FiniteGroup, top: &FiniteGroup, x: &WreathGroupElement, y: &WreathGroupElement) -> WreathGroupElement {
        let f = top.elements().map(|t| base.mul(x.f[t], y.f[top.mul(t, x.q)])).collect();
        WreathGroupElement { f, q: top.mul(x.q, y.q) }
    }

    fn format(base: &FiniteGroup, top: &FiniteGroup, e: &WreathGroupElement) -> String {
        let values: Vec<&str> = e.f.iter().map(|&a| base.label(a)).collect();
        format!("[{};{}]", values.join(","), top.label(e.q))
    }

    pub fn base(&self) -> &Arc<FiniteGroup> {
        &self.base
    }

    pub fn top(&self) -> &Arc<FiniteGroup> {
        &self.top
    }

    /// The wreath product as an abstract finite group.
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn element(&self, index: usize) -> WreathGroupElement {
        let nq = self.top.order();
        let na = self.base.order();
        let q = index % nq;
        let mut code = index / nq;
        let mut f = vec![0; nq];
        for slot in f.iter_mut().rev() {
            *slot = code % na;
            code /= na;
        }
        WreathGroupElement { f, q }
    }

    pub fn index_of(&self, e: &WreathGroupElement) -> usize {
        encode_function(&e.f, self.base.order()) * self.top.order() + e.q
    }

    pub fn mul(&self, x: &WreathGroupElement, y: &WreathGroupElement) -> WreathGroupElement {
        Self::multiply(&self.base, &self.top, x, y)
    }

    pub fn label(&self, e: &WreathGroupElement) -> String {
        Self::format(&self.base, &self.top, e)
    }

    /// The projection `ρ(f, q) = q`.
    pub fn rho(&self, index: usize) -> usize {
        index % self.top.order()
    }

    /// Evaluation of the function part at the identity of `Q`.
    pub fn eval_at_identity(&self, index: usize) -> usize {
        self.element(index).f[self.top.identity()]
    }
}

pub fn wreath_group(base: impl Into<Arc<FiniteGroup>>, top: impl Into<Arc<FiniteGroup>>) -> Result<WreathGroup> {
    WreathGroup::new(base, top)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, dihedral, find_isomorphism, trivial_group};

    #[test]
    fn c2_wreath_c2_is_d4() {
        let w = wreath_group(cyclic(2), cyclic(2)).unwrap();
        assert_eq!(w.order(), 8);
        assert!(find_isomorphism(w.group(), &dihedral(4)).is_some());
    }

    #[test]
    fn degenerate_factors() {
        let w = wreath_group(trivial_group(), cyclic(3)).unwrap();
        assert!(find_isomorphism(w.group(), &cyclic(3)).is_some());
        let w = wreath_group(cyclic(3), trivial_group()).unwrap();
        assert!(find_isomorphism(w.group(), &cyclic(3)).is_some());
    }

    #[test]
    fn element_index_round_trip() {
        let w = wreath_group(cyclic(3), cyclic(2)).unwrap();
        assert_eq!(w.order(), 18);
        for i in 0..w.order() {
            assert_eq!(w.index_of(&w.element(i)), i);
            assert_eq!(w.label(&w.element(i)), w.group().label(i));
        }
    }
}
