use std::collections::BTreeMap;
use std::sync::Arc;

use crate::group::{GroupAlgebra, GroupFunctionAlgebra};
use crate::hopf::{Algebra, AxiomReport, Coalgebra, FreeModule, HopfAlgebra};
use crate::linear::{tensor, LinComb};

/// A left module action `⋆: Q ⊗ H → H` of one Hopf algebra on another.
pub trait HopfAction {
    type Acting: HopfAlgebra;
    type Acted: HopfAlgebra;

    fn acting(&self) -> &Self::Acting;
    fn acted(&self) -> &Self::Acted;

    /// `q ⋆ h` on basis symbols.
    fn act(
        &self,
        q: &<Self::Acting as FreeModule>::Basis,
        h: &<Self::Acted as FreeModule>::Basis,
    ) -> LinComb<<Self::Acted as FreeModule>::Basis>;

    fn act_on(
        &self,
        q: &LinComb<<Self::Acting as FreeModule>::Basis>,
        h: &LinComb<<Self::Acted as FreeModule>::Basis>,
    ) -> LinComb<<Self::Acted as FreeModule>::Basis> {
        let mut out = LinComb::zero();
        for (a, c) in q.iter() {
            for (b, d) in h.iter() {
                out.add_scaled(&(c * d), &self.act(a, b));
            }
        }
        out
    }
}

type QB<A> = <<A as HopfAction>::Acting as FreeModule>::Basis;
type HB<A> = <<A as HopfAction>::Acted as FreeModule>::Basis;

/// `q ⋆ h = ε(q)·h`.
#[derive(Clone, Debug)]
pub struct TrivialAction<Q, H> {
    q: Arc<Q>,
    h: Arc<H>,
}

impl<Q, H> TrivialAction<Q, H> {
    pub fn new(q: Arc<Q>, h: Arc<H>) -> Self {
        Self { q, h }
    }
}

impl<Q: HopfAlgebra, H: HopfAlgebra> HopfAction for TrivialAction<Q, H> {
    type Acting = Q;
    type Acted = H;

    fn acting(&self) -> &Q {
        &self.q
    }

    fn acted(&self) -> &H {
        &self.h
    }

    fn act(&self, q: &Q::Basis, h: &H::Basis) -> LinComb<H::Basis> {
        LinComb::term(h.clone(), self.q.counit(q))
    }
}

/// An action given by a table on basis pairs; missing entries act trivially.
#[derive(Clone, Debug)]
pub struct TableAction<Q: FreeModule, H: FreeModule> {
    q: Arc<Q>,
    h: Arc<H>,
    table: BTreeMap<(Q::Basis, H::Basis), LinComb<H::Basis>>,
}

impl<Q: HopfAlgebra, H: HopfAlgebra> TableAction<Q, H> {
    pub fn new(
        q: Arc<Q>,
        h: Arc<H>,
        table: BTreeMap<(Q::Basis, H::Basis), LinComb<H::Basis>>,
    ) -> Self {
        Self { q, h, table }
    }

    /// Tabulate another action on all basis pairs.
    pub fn from_action<A: HopfAction<Acting = Q, Acted = H>>(act: &A, q: Arc<Q>, h: Arc<H>) -> Self {
        let mut table = BTreeMap::new();
        for a in q.basis() {
            for b in h.basis() {
                table.insert((a.clone(), b.clone()), act.act(&a, &b));
            }
        }
        Self { q, h, table }
    }

    pub fn set(&mut self, q: Q::Basis, h: H::Basis, value: LinComb<H::Basis>) {
        self.table.insert((q, h), value);
    }

    pub fn table(&self) -> &BTreeMap<(Q::Basis, H::Basis), LinComb<H::Basis>> {
        &self.table
    }
}

impl<Q: HopfAlgebra, H: HopfAlgebra> HopfAction for TableAction<Q, H> {
    type Acting = Q;
    type Acted = H;

    fn acting(&self) -> &Q {
        &self.q
    }

    fn acted(&self) -> &H {
        &self.h
    }

    fn act(&self, q: &Q::Basis, h: &H::Basis) -> LinComb<H::Basis> {
        self.table
            .get(&(q.clone(), h.clone()))
            .cloned()
            .unwrap_or_else(|| LinComb::term(h.clone(), self.q.counit(q)))
    }
}

/// Right translation of functions on `Q`: `(q ⋆ u_f) = u_{x ↦ f(xq)}`.
#[derive(Clone, Debug)]
pub struct TranslationAction {
    q: Arc<GroupAlgebra>,
    h: Arc<GroupFunctionAlgebra>,
}

impl TranslationAction {
    pub fn new(q: Arc<GroupAlgebra>, h: Arc<GroupFunctionAlgebra>) -> Self {
        assert_eq!(h.coalgebra().domain().len(), q.group().order(), "functions must live on Q");
        Self { q, h }
    }
}

impl HopfAction for TranslationAction {
    type Acting = GroupAlgebra;
    type Acted = GroupFunctionAlgebra;

    fn acting(&self) -> &GroupAlgebra {
        &self.q
    }

    fn acted(&self) -> &GroupFunctionAlgebra {
        &self.h
    }

    fn act(&self, q: &usize, f: &Vec<usize>) -> LinComb<Vec<usize>> {
        let g = self.q.group();
        LinComb::basis(g.elements().map(|x| f[g.mul(x, *q)]).collect())
    }
}

/// Module-algebra and coalgebra-morphism axioms of `⋆`, on basis symbols
/// whose degree sum is at most `window` (default: the larger cap).
pub fn check_module_axioms<A: HopfAction + ?Sized>(act: &A, window: Option<usize>) -> AxiomReport {
    let (q, h) = (act.acting(), act.acted());
    let window = window.or(match (q.cap(), h.cap()) {
        (Some(a), Some(b)) => Some(a.max(b)),
        _ => None,
    });
    let fits = |d: usize| window.is_none_or(|w| d <= w);
    let qs: Vec<QB<A>> = q.basis().into_iter().filter(|b| fits(q.degree(b))).collect();
    let hs: Vec<HB<A>> = h.basis().into_iter().filter(|b| fits(h.degree(b))).collect();
    let h_unit = h.unit();
    let q_unit = q.unit();
    let mut report = AxiomReport::default();

    let bad = qs
        .iter()
        .filter(|a| act.act_on(&LinComb::basis((*a).clone()), &h_unit) != h_unit.scale(&q.counit(a)))
        .map(|a| vec![q.label(a)])
        .collect();
    report.push("unit-action", bad);

    let bad = hs
        .iter()
        .filter(|b| act.act_on(&q_unit, &LinComb::basis((*b).clone())) != LinComb::basis((*b).clone()))
        .map(|b| vec![h.label(b)])
        .collect();
    report.push("identity", bad);

    let mut multiplicative = Vec::new();
    let mut associative = Vec::new();
    let mut coalgebra = Vec::new();
    for a in &qs {
        let da = q.coproduct(a);
        for b in &hs {
            let d = q.degree(a) + h.degree(b);
            if !fits(d) {
                continue;
            }
            let ab = act.act(a, b);
            let mut pushed = LinComb::zero();
            for ((a1, a2), c) in da.iter() {
                for ((b1, b2), e) in h.coproduct(b).iter() {
                    pushed.add_scaled(&(c * e), &tensor(&act.act(a1, b1), &act.act(a2, b2)));
                }
            }
            if h.comul(&ab) != pushed || h.counit_of(&ab) != q.counit(a) * h.counit(b) {
                coalgebra.push(vec![q.label(a), h.label(b)]);
            }
            for k in &hs {
                if fits(d + h.degree(k)) {
                    let lhs = act.act_on(&LinComb::basis(a.clone()), &h.product(b, k));
                    let mut rhs = LinComb::zero();
                    for ((a1, a2), c) in da.iter() {
                        rhs.add_scaled(c, &h.mul(&act.act(a1, b), &act.act(a2, k)));
                    }
                    if lhs != rhs {
                        multiplicative.push(vec![q.label(a), h.label(b), h.label(k)]);
                    }
                }
            }
            for r in &qs {
                if fits(d + q.degree(r)) {
                    let lhs = act.act_on(&LinComb::basis(a.clone()), &act.act(r, b));
                    let rhs = act.act_on(&q.product(a, r), &LinComb::basis(b.clone()));
                    if lhs != rhs {
                        associative.push(vec![q.label(a), q.label(r), h.label(b)]);
                    }
                }
            }
        }
    }
    report.push("multiplicative", multiplicative);
    report.push("associative", associative);
    report.push("coalgebra-morphism", coalgebra);
    report
}
