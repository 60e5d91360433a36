use std::sync::Arc;

use num_traits::One;

use super::action::{check_module_axioms, HopfAction, TrivialAction};
use crate::error::{Error, Result};
use crate::group::{cyclic, FiniteGroup, GroupAlgebra};
use crate::hopf::{convolution_inverse, convolve, sweedler_expand, unit_counit, Algebra, Coalgebra, FreeModule, HopfAlgebra};
use crate::linear::{tensor, LinComb, LinMap, Scalar};

type QB<A> = <<A as HopfAction>::Acting as FreeModule>::Basis;
type HB<A> = <<A as HopfAction>::Acted as FreeModule>::Basis;

fn pair_basis<A: HopfAction>(act: &A, cap: Option<usize>) -> Vec<(HB<A>, QB<A>)> {
    let (q, h) = (act.acting(), act.acted());
    let qs = q.basis();
    let mut out = Vec::new();
    for b in h.basis() {
        for a in &qs {
            if cap.is_none_or(|c| h.degree(&b) + q.degree(a) <= c) {
                out.push((b.clone(), a.clone()));
            }
        }
    }
    out
}

fn pair_label<A: HopfAction>(act: &A, (h, q): &(HB<A>, QB<A>)) -> String {
    format!("{}#{}", act.acted().label(h), act.acting().label(q))
}

/// `Δ(h#q) = Σ (h₁#q₁) ⊗ (h₂#q₂)`.
#[allow(clippy::type_complexity)]
fn pair_coproduct<A: HopfAction>(act: &A, (h, q): &(HB<A>, QB<A>)) -> LinComb<((HB<A>, QB<A>), (HB<A>, QB<A>))> {
    let mut out = LinComb::zero();
    for ((h1, h2), c) in act.acted().coproduct(h).iter() {
        for ((q1, q2), d) in act.acting().coproduct(q).iter() {
            out.add_term(((h1.clone(), q1.clone()), (h2.clone(), q2.clone())), c * d);
        }
    }
    out
}

/// The smash product `H # Q` on `H ⊗ Q` with
/// `(h#q)(k#r) = Σ h(q₁⋆k) # q₂r` and the tensor-product coalgebra.
#[derive(Debug)]
pub struct SmashProduct<A: HopfAction> {
    act: Arc<A>,
    cap: Option<usize>,
}

impl<A: HopfAction> Clone for SmashProduct<A> {
    fn clone(&self) -> Self {
        Self { act: self.act.clone(), cap: self.cap }
    }
}

impl<A: HopfAction> SmashProduct<A> {
    /// Build without validating the action.
    pub fn new_unchecked(act: impl Into<Arc<A>>) -> Self {
        let act = act.into();
        let cap = match (act.acted().cap(), act.acting().cap()) {
            (Some(a), Some(b)) => Some(a.max(b)),
            _ => None,
        };
        Self { act, cap }
    }

    pub fn with_cap(mut self, cap: Option<usize>) -> Self {
        self.cap = cap;
        self
    }

    pub fn action(&self) -> &Arc<A> {
        &self.act
    }

    pub fn acted(&self) -> &A::Acted {
        self.act.acted()
    }

    pub fn acting(&self) -> &A::Acting {
        self.act.acting()
    }

    /// `h # 1`.
    pub fn left(&self, h: &LinComb<HB<A>>) -> LinComb<(HB<A>, QB<A>)> {
        tensor(h, &self.acting().unit())
    }

    /// `1 # q`.
    pub fn right(&self, q: &LinComb<QB<A>>) -> LinComb<(HB<A>, QB<A>)> {
        tensor(&self.acted().unit(), q)
    }

    pub fn commutator(
        &self,
        x: &LinComb<(HB<A>, QB<A>)>,
        y: &LinComb<(HB<A>, QB<A>)>,
    ) -> LinComb<(HB<A>, QB<A>)> {
        self.mul(x, y) - self.mul(y, x)
    }
}

/// Validate the action on `window` and build `H # Q`.
pub fn smash_product<A: HopfAction>(act: impl Into<Arc<A>>, window: Option<usize>) -> Result<SmashProduct<A>> {
    let act = act.into();
    let report = check_module_axioms(&*act, window);
    if !report.passed() {
        return Err(Error::ActionInvalid(report.failures().join("; ")));
    }
    Ok(SmashProduct::new_unchecked(act))
}

impl<A: HopfAction> FreeModule for SmashProduct<A> {
    type Basis = (HB<A>, QB<A>);

    fn basis(&self) -> Vec<Self::Basis> {
        pair_basis(&*self.act, self.cap)
    }

    fn degree(&self, (h, q): &Self::Basis) -> usize {
        self.acted().degree(h) + self.acting().degree(q)
    }

    fn cap(&self) -> Option<usize> {
        self.cap
    }

    fn label(&self, b: &Self::Basis) -> String {
        pair_label(&*self.act, b)
    }
}

impl<A: HopfAction> Algebra for SmashProduct<A> {
    fn product(&self, (h, q): &Self::Basis, (k, r): &Self::Basis) -> LinComb<Self::Basis> {
        let (hh, qq) = (self.acted(), self.acting());
        let hv = LinComb::basis(h.clone());
        let mut out = LinComb::zero();
        for ((q1, q2), c) in qq.coproduct(q).iter() {
            let left = hh.mul(&hv, &self.act.act(q1, k));
            out.add_scaled(c, &tensor(&left, &qq.product(q2, r)));
        }
        out
    }

    fn unit(&self) -> LinComb<Self::Basis> {
        tensor(&self.acted().unit(), &self.acting().unit())
    }
}

impl<A: HopfAction> Coalgebra for SmashProduct<A> {
    fn coproduct(&self, b: &Self::Basis) -> LinComb<(Self::Basis, Self::Basis)> {
        pair_coproduct(&*self.act, b)
    }

    fn counit(&self, (h, q): &Self::Basis) -> Scalar {
        self.acted().counit(h) * self.acting().counit(q)
    }
}

impl<A: HopfAction> HopfAlgebra for SmashProduct<A> {
    /// `S(h#q) = Σ (S(q₁)⋆S(h)) # S(q₂)`.
    fn antipode(&self, (h, q): &Self::Basis) -> LinComb<Self::Basis> {
        let (hh, qq) = (self.acted(), self.acting());
        let sh = hh.antipode(h);
        let mut out = LinComb::zero();
        for ((q1, q2), c) in qq.coproduct(q).iter() {
            let acted = self.act.act_on(&qq.antipode(q1), &sh);
            out.add_scaled(c, &tensor(&acted, &qq.antipode(q2)));
        }
        out
    }
}

/// `Q ⊗ Q` as a coalgebra, for cocycles.
#[derive(Clone, Debug)]
pub struct TensorCoalgebra<Q> {
    inner: Arc<Q>,
}

impl<Q: Coalgebra> TensorCoalgebra<Q> {
    pub fn new(inner: Arc<Q>) -> Self {
        Self { inner }
    }
}

impl<Q: Coalgebra> FreeModule for TensorCoalgebra<Q> {
    type Basis = (Q::Basis, Q::Basis);

    fn basis(&self) -> Vec<Self::Basis> {
        let basis = self.inner.basis();
        let cap = self.inner.cap();
        let mut out = Vec::new();
        for a in &basis {
            for b in &basis {
                if cap.is_none_or(|c| self.inner.degree(a) + self.inner.degree(b) <= c) {
                    out.push((a.clone(), b.clone()));
                }
            }
        }
        out
    }

    fn degree(&self, (a, b): &Self::Basis) -> usize {
        self.inner.degree(a) + self.inner.degree(b)
    }

    fn cap(&self) -> Option<usize> {
        self.inner.cap()
    }

    fn label(&self, (a, b): &Self::Basis) -> String {
        format!("{}⊗{}", self.inner.label(a), self.inner.label(b))
    }
}

impl<Q: Coalgebra> Coalgebra for TensorCoalgebra<Q> {
    fn coproduct(&self, (a, b): &Self::Basis) -> LinComb<(Self::Basis, Self::Basis)> {
        let mut out = LinComb::zero();
        for ((a1, a2), c) in self.inner.coproduct(a).iter() {
            for ((b1, b2), d) in self.inner.coproduct(b).iter() {
                out.add_term(((a1.clone(), b1.clone()), (a2.clone(), b2.clone())), c * d);
            }
        }
        out
    }

    fn counit(&self, (a, b): &Self::Basis) -> Scalar {
        self.inner.counit(a) * self.inner.counit(b)
    }
}

/// A convolution-invertible map `σ: Q ⊗ Q → H` with its inverse `δ`.
#[derive(Debug)]
pub struct Cocycle<Q: FreeModule, H: FreeModule> {
    pub sigma: LinMap<(Q::Basis, Q::Basis), H::Basis>,
    pub delta: LinMap<(Q::Basis, Q::Basis), H::Basis>,
}

impl<Q: FreeModule, H: FreeModule> Clone for Cocycle<Q, H> {
    fn clone(&self) -> Self {
        Self { sigma: self.sigma.clone(), delta: self.delta.clone() }
    }
}

impl<Q: Coalgebra, H: Algebra> Cocycle<Q, H> {
    /// Tabulate `σ` and solve for `δ`; both `σ·δ` and `δ·σ` must equal `ηε`.
    pub fn new(q: &Arc<Q>, h: &H, sigma: impl FnMut(&(Q::Basis, Q::Basis)) -> LinComb<H::Basis>) -> Result<Self> {
        let qq = TensorCoalgebra::new(q.clone());
        let sigma = LinMap::new(qq.basis(), sigma);
        let delta = convolution_inverse(&sigma, &qq, h).map_err(|_| Error::CocycleNotInvertible)?;
        let eta = unit_counit(&qq, h);
        let right = convolve(&sigma, &delta, &qq, h).map_err(|_| Error::CocycleNotInvertible)?;
        if right != eta {
            return Err(Error::CocycleNotInvertible);
        }
        Ok(Self { sigma, delta })
    }

    /// `σ(q, r) = ε(q)ε(r)·1`.
    pub fn trivial(q: &Arc<Q>, h: &H) -> Self {
        let unit = h.unit();
        Self::new(q, h, |(a, b)| unit.scale(&(q.counit(a) * q.counit(b)))).expect("ηε is invertible")
    }

    fn value(&self, a: &Q::Basis, b: &Q::Basis) -> LinComb<H::Basis> {
        self.sigma.image(&(a.clone(), b.clone())).cloned().unwrap_or_default()
    }
}

/// The crossed product `H #_σ Q` with
/// `(h#q)(k#r) = Σ h(q₁⋆k)σ(q₂, r₁) # q₃r₂` on the tensor coalgebra.
/// No antipode is provided.
#[derive(Debug)]
pub struct CrossedProduct<A: HopfAction> {
    act: Arc<A>,
    cocycle: Cocycle<A::Acting, A::Acted>,
    cap: Option<usize>,
}

impl<A: HopfAction> Clone for CrossedProduct<A> {
    fn clone(&self) -> Self {
        Self { act: self.act.clone(), cocycle: self.cocycle.clone(), cap: self.cap }
    }
}

pub fn crossed_product<A: HopfAction>(act: impl Into<Arc<A>>, cocycle: Cocycle<A::Acting, A::Acted>) -> CrossedProduct<A> {
    let act = act.into();
    let cap = match (act.acted().cap(), act.acting().cap()) {
        (Some(a), Some(b)) => Some(a.max(b)),
        _ => None,
    };
    CrossedProduct { act, cocycle, cap }
}

impl<A: HopfAction> CrossedProduct<A> {
    pub fn cocycle(&self) -> &Cocycle<A::Acting, A::Acted> {
        &self.cocycle
    }
}

impl<A: HopfAction> FreeModule for CrossedProduct<A> {
    type Basis = (HB<A>, QB<A>);

    fn basis(&self) -> Vec<Self::Basis> {
        pair_basis(&*self.act, self.cap)
    }

    fn degree(&self, (h, q): &Self::Basis) -> usize {
        self.act.acted().degree(h) + self.act.acting().degree(q)
    }

    fn cap(&self) -> Option<usize> {
        self.cap
    }

    fn label(&self, b: &Self::Basis) -> String {
        pair_label(&*self.act, b)
    }
}

impl<A: HopfAction> Algebra for CrossedProduct<A> {
    fn product(&self, (h, q): &Self::Basis, (k, r): &Self::Basis) -> LinComb<Self::Basis> {
        let (hh, qq) = (self.act.acted(), self.act.acting());
        let legs = sweedler_expand(qq, &LinComb::basis(q.clone()), 3).expect("degree within cap");
        let hv = LinComb::basis(h.clone());
        let mut out = LinComb::zero();
        for (t, c) in legs.iter() {
            let left = hh.mul(&hv, &self.act.act(&t[0], k));
            for ((r1, r2), d) in qq.coproduct(r).iter() {
                let value = hh.mul(&left, &self.cocycle.value(&t[1], r1));
                out.add_scaled(&(c * d), &tensor(&value, &qq.product(&t[2], r2)));
            }
        }
        out
    }

    fn unit(&self) -> LinComb<Self::Basis> {
        tensor(&self.act.acted().unit(), &self.act.acting().unit())
    }
}

impl<A: HopfAction> Coalgebra for CrossedProduct<A> {
    fn coproduct(&self, b: &Self::Basis) -> LinComb<(Self::Basis, Self::Basis)> {
        pair_coproduct(&*self.act, b)
    }

    fn counit(&self, (h, q): &Self::Basis) -> Scalar {
        self.act.acted().counit(h) * self.act.acting().counit(q)
    }
}

/// Read a finite group off an algebra whose basis is closed under the
/// product with coefficient one. `None` if some product is not a basis symbol.
pub fn basis_group<H: Algebra + ?Sized>(name: &str, h: &H) -> Option<FiniteGroup> {
    let basis = h.basis();
    let index = |b: &H::Basis| basis.iter().position(|x| x == b);
    let mut table = vec![vec![0; basis.len()]; basis.len()];
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            let p = h.product(a, b);
            let (sym, c) = p.iter().next()?;
            if p.len() != 1 || !c.is_one() {
                return None;
            }
            table[i][j] = index(sym)?;
        }
    }
    let labels = basis.iter().map(|b| h.label(b)).collect();
    FiniteGroup::new(name, labels, table).ok()
}

pub type GroupCrossedProduct = CrossedProduct<TrivialAction<GroupAlgebra, GroupAlgebra>>;

/// `𝕜C2 #_σ 𝕜C2 = ⟨a⟩ #_σ ⟨g⟩` with trivial action; `σ(g, g) = a` when
/// `twisted`, otherwise `σ ≡ 1`.
pub fn c2_crossed_c2(twisted: bool) -> GroupCrossedProduct {
    let q = Arc::new(GroupAlgebra::new(cyclic(2)));
    let h = Arc::new(GroupAlgebra::new(cyclic(2)));
    let cocycle = Cocycle::new(&q, &*h, |&(x, y)| LinComb::basis(usize::from(twisted && x == 1 && y == 1)))
        .expect("group-like cocycle");
    crossed_product(TrivialAction::new(q, h), cocycle)
}
