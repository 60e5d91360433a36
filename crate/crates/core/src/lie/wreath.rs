use std::collections::BTreeMap;
use std::sync::Arc;

use super::{Envelope, LieAlgebra, Monomial};
use crate::error::{Error, Result};
use crate::hopf::Coalgebra;
use crate::linear::{LinComb, Scalar};

/// An element `f ⊕ q` of `Vect(U(𝔮), 𝔞) ⋊ 𝔮`, with `f` known on PBW
/// monomials of degree below `window` and unknown beyond.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathLieElement {
    pub f: BTreeMap<Monomial, LinComb<usize>>,
    pub q: LinComb<usize>,
    pub window: usize,
}

impl WreathLieElement {
    pub fn zero(window: usize) -> Self {
        Self { f: BTreeMap::new(), q: LinComb::zero(), window }
    }

    /// `0 ⊕ q`.
    pub fn top(q: LinComb<usize>, window: usize) -> Self {
        Self { f: BTreeMap::new(), q, window }
    }

    /// `δ_w·a ⊕ 0`: the function with value `a` at `w` and zero elsewhere.
    pub fn delta(w: Monomial, a: LinComb<usize>, window: usize) -> Self {
        let mut f = BTreeMap::new();
        if !a.is_zero() && w.len() < window {
            f.insert(w, a);
        }
        Self { f, q: LinComb::zero(), window }
    }

    /// `f(u)`; errors beyond the exact window.
    pub fn eval(&self, u: &Monomial) -> Result<LinComb<usize>> {
        if u.len() >= self.window {
            return Err(Error::WindowExceeded { degree: u.len(), window: self.window });
        }
        Ok(self.f.get(u).cloned().unwrap_or_default())
    }

    fn eval_lincomb(&self, x: &LinComb<Monomial>) -> LinComb<usize> {
        x.flat_map(|u| self.f.get(u).cloned().unwrap_or_default())
    }

    /// `self + s·other`, exact on the smaller window.
    pub fn combine(&self, s: &Scalar, other: &Self) -> Self {
        let window = self.window.min(other.window);
        let mut f: BTreeMap<Monomial, LinComb<usize>> = BTreeMap::new();
        for (u, v) in &self.f {
            if u.len() < window {
                f.insert(u.clone(), v.clone());
            }
        }
        for (u, v) in &other.f {
            if u.len() < window {
                let entry = f.entry(u.clone()).or_default();
                entry.add_scaled(s, v);
            }
        }
        f.retain(|_, v| !v.is_zero());
        Self { f, q: self.q.combine(s, &other.q), window }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::zero(self.window).combine(s, self)
    }

    /// Drop values at degree `≥ window`.
    pub fn restrict(&self, window: usize) -> Self {
        let window = window.min(self.window);
        let f = self.f.iter().filter(|(u, _)| u.len() < window).map(|(u, v)| (u.clone(), v.clone())).collect();
        Self { f, q: self.q.clone(), window }
    }

    /// Equality on the common exact window.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let w = self.window.min(other.window);
        self.q == other.q && self.restrict(w).f == other.restrict(w).f
    }

    pub fn is_zero(&self) -> bool {
        self.f.is_empty() && self.q.is_zero()
    }
}

/// The Lie wreath product `𝔞 ≀ 𝔮 = Vect(U(𝔮), 𝔞) ⋊ 𝔮` with functions on
/// PBW monomials of degree at most `N`, acting by `(q⋆f)(u) = f(uq)`.
#[derive(Clone, Debug)]
pub struct WreathLie {
    base: Arc<LieAlgebra>,
    top_env: Envelope,
}

impl WreathLie {
    pub fn new(base: impl Into<Arc<LieAlgebra>>, top: impl Into<Arc<LieAlgebra>>, n: usize) -> Self {
        Self { base: base.into(), top_env: Envelope::new(top, n) }
    }

    pub fn base(&self) -> &Arc<LieAlgebra> {
        &self.base
    }

    pub fn top(&self) -> &Arc<LieAlgebra> {
        self.top_env.lie()
    }

    pub fn top_envelope(&self) -> &Envelope {
        &self.top_env
    }

    pub fn truncation(&self) -> usize {
        self.top_env.cap_degree()
    }

    /// Window of freshly built elements: exact on every stored monomial.
    pub fn full_window(&self) -> usize {
        self.truncation() + 1
    }

    pub fn monomials(&self) -> Vec<Monomial> {
        self.top_env.monomials_up_to(self.truncation())
    }

    fn right_multiply(&self, u: &Monomial, q: &LinComb<usize>) -> LinComb<Monomial> {
        let mut out = LinComb::zero();
        for (j, c) in q.iter() {
            out.add_scaled(c, &self.top_env.ring().mul_generator(u, *j));
        }
        out
    }

    /// `q ⋆ f`, with `(q⋆f)(u) = f(uq)`; exact one degree below `f`.
    pub fn act(&self, q: &LinComb<usize>, x: &WreathLieElement) -> WreathLieElement {
        let window = x.window.saturating_sub(1);
        let mut f = BTreeMap::new();
        for u in self.monomials().into_iter().filter(|u| u.len() < window) {
            let v = x.eval_lincomb(&self.right_multiply(&u, q));
            if !v.is_zero() {
                f.insert(u, v);
            }
        }
        WreathLieElement { f, q: LinComb::zero(), window }
    }

    /// `[f⊕q, g⊕r] = (u ↦ Σ[f(u₁), g(u₂)] − f(ur) + g(uq)) ⊕ [q, r]`.
    ///
    /// The function part is exact on degrees below `min(window) − 1`.
    pub fn bracket(&self, x: &WreathLieElement, y: &WreathLieElement) -> WreathLieElement {
        let window = x.window.min(y.window).saturating_sub(1);
        let mut f = BTreeMap::new();
        for u in self.monomials().into_iter().filter(|u| u.len() < window) {
            let mut v = LinComb::zero();
            for ((u1, u2), c) in self.top_env.coproduct(&u).iter() {
                if let (Some(a), Some(b)) = (x.f.get(u1), y.f.get(u2)) {
                    v.add_scaled(c, &self.base.bracket(a, b));
                }
            }
            v.add_scaled(&-Scalar::from_integer(1.into()), &x.eval_lincomb(&self.right_multiply(&u, &y.q)));
            v.add_scaled(&Scalar::from_integer(1.into()), &y.eval_lincomb(&self.right_multiply(&u, &x.q)));
            if !v.is_zero() {
                f.insert(u, v);
            }
        }
        WreathLieElement { f, q: self.top().bracket(&x.q, &y.q), window }
    }

    /// Flatten to coordinates `(Some(u), i)` for `f` and `(None, j)` for `q`.
    pub fn coordinates(&self, x: &WreathLieElement) -> LinComb<(Option<Monomial>, usize)> {
        let mut out = LinComb::zero();
        for (u, v) in &x.f {
            for (i, c) in v.iter() {
                out.add_term((Some(u.clone()), *i), c.clone());
            }
        }
        for (j, c) in x.q.iter() {
            out.add_term((None, *j), c.clone());
        }
        out
    }

    pub fn render(&self, x: &WreathLieElement) -> String {
        let mut parts: Vec<String> = x
            .f
            .iter()
            .map(|(u, v)| format!("{} -> {}", u.render(self.top().basis_names()), self.base.render(v)))
            .collect();
        if parts.is_empty() {
            parts.push("0".into());
        }
        format!("({}) + {}", parts.join(", "), self.top().render(&x.q))
    }
}

/// The bracket of two elements of `𝔞 ≀ 𝔮` truncated at `N`.
pub fn lie_wreath_bracket(wreath: &WreathLie, x: &WreathLieElement, y: &WreathLieElement) -> WreathLieElement {
    wreath.bracket(x, y)
}

/// Basis of the truncated function space: `δ_w·a_i` for `|w| ≤ N`, then the `𝔮` basis.
pub fn wreath_basis(wreath: &WreathLie) -> Vec<WreathLieElement> {
    let window = wreath.full_window();
    let mut out = Vec::new();
    for w in wreath.monomials() {
        for i in 0..wreath.base().dim() {
            out.push(WreathLieElement::delta(w.clone(), LinComb::basis(i), window));
        }
    }
    for j in 0..wreath.top().dim() {
        out.push(WreathLieElement::top(LinComb::basis(j), window));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{abelian, affine_2dim, heisenberg};
    use crate::linear::int;

    #[test]
    fn vanishing_function_parts() {
        let w = WreathLie::new(abelian(1), abelian(1), 3);
        let full = w.full_window();
        let q = WreathLieElement::top(LinComb::basis(0), full);
        let r = WreathLieElement::top(LinComb::basis(0), full);
        assert!(w.bracket(&q, &r).is_zero());
        let f = WreathLieElement::delta(Monomial::generator(0), LinComb::basis(0), full);
        let g = WreathLieElement::delta(Monomial::unit(), LinComb::basis(0), full);
        assert!(w.bracket(&f, &g).is_zero());
    }

    #[test]
    fn action_term_reads_f_at_uq() {
        let w = WreathLie::new(abelian(1), abelian(1), 3);
        let full = w.full_window();
        let f = WreathLieElement::delta(Monomial::generator(0), LinComb::basis(0), full);
        let x = WreathLieElement::top(LinComb::basis(0), full);
        let b = w.bracket(&x, &f);
        assert_eq!(b.eval(&Monomial::unit()).unwrap(), LinComb::basis(0));
        assert!(b.eval(&Monomial::generator(0)).unwrap().is_zero());
        assert!(matches!(b.eval(&Monomial::sorted(vec![0, 0, 0])), Err(Error::WindowExceeded { .. })));
        assert_eq!(b, w.act(&LinComb::basis(0), &f));
    }

    fn jacobi_holds(w: &WreathLie) {
        let basis = wreath_basis(w);
        for x in &basis {
            for y in &basis {
                let xy = w.bracket(x, y);
                let yx = w.bracket(y, x);
                assert!(xy.combine(&int(1), &yx).restrict(xy.window).is_zero());
                for z in &basis {
                    let a = w.bracket(x, &w.bracket(y, z));
                    let b = w.bracket(y, &w.bracket(z, x));
                    let c = w.bracket(z, &w.bracket(x, y));
                    let sum = a.combine(&int(1), &b).combine(&int(1), &c);
                    assert!(sum.is_zero(), "{} {} {}", w.render(x), w.render(y), w.render(z));
                }
            }
        }
    }

    #[test]
    fn jacobi_on_window() {
        jacobi_holds(&WreathLie::new(abelian(1), affine_2dim(), 3));
        jacobi_holds(&WreathLie::new(affine_2dim(), abelian(1), 3));
        jacobi_holds(&WreathLie::new(abelian(1), heisenberg(), 2));
    }
}
