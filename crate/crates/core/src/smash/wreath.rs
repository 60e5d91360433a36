use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use super::action::HopfAction;
use super::product::{smash_product, SmashProduct};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupAlgebra, GroupFunctionAlgebra, WreathGroup};
use crate::hopf::{Algebra, AxiomReport, Coalgebra, FreeModule, HopfAlgebra, HopfMorphism};
use crate::lie::{Envelope, LieAlgebra, Monomial, WreathLie, WreathLieElement};
use crate::linear::{LinComb, Scalar};

use super::action::TranslationAction;

pub type GroupWreathSmash = SmashProduct<TranslationAction>;

/// `𝕜(A^Q) # 𝕜Q` with `τ(u_f # q) = q`.
#[derive(Clone, Debug)]
pub struct GroupWreathHopf {
    pub smash: Arc<GroupWreathSmash>,
    pub tau: HopfMorphism<GroupWreathSmash, GroupAlgebra>,
}

pub fn wreath_hopf_group(a: impl Into<Arc<FiniteGroup>>, q: impl Into<Arc<FiniteGroup>>) -> Result<GroupWreathHopf> {
    let (a, q) = (a.into(), q.into());
    let qa = Arc::new(GroupAlgebra::new(q.clone()));
    let h = Arc::new(GroupFunctionAlgebra::new(q.labels().to_vec(), a));
    let smash = Arc::new(smash_product(TranslationAction::new(qa.clone(), h), None)?);
    let tau = HopfMorphism::from_fn(smash.clone(), qa, |(_, t)| LinComb::basis(*t));
    Ok(GroupWreathHopf { smash, tau })
}

impl GroupWreathHopf {
    /// `u_f # q` for the wreath element `(f, q)`.
    pub fn symbol(&self, wreath: &WreathGroup, index: usize) -> (Vec<usize>, usize) {
        let e = wreath.element(index);
        (e.f, e.q)
    }
}

/// Compare `𝕜(A ≀ Q)` with `𝕜(A^Q) # 𝕜Q` under `(f, q) ↔ u_f # q`: product,
/// coproduct, counit and antipode tables on all basis pairs.
pub fn group_wreath_comparison(a: &Arc<FiniteGroup>, q: &Arc<FiniteGroup>) -> Result<AxiomReport> {
    let wreath = WreathGroup::new(a.clone(), q.clone())?;
    let hopf = wreath_hopf_group(a.clone(), q.clone())?;
    let s = &*hopf.smash;
    let g = wreath.group();
    let sym = |i: usize| hopf.symbol(&wreath, i);
    let mut report = AxiomReport::default();
    let mut bad = Vec::new();
    for x in g.elements() {
        for y in g.elements() {
            if s.product(&sym(x), &sym(y)) != LinComb::basis(sym(g.mul(x, y))) {
                bad.push(vec![g.label(x).to_string(), g.label(y).to_string()]);
            }
        }
    }
    report.push("product-table", bad);
    let bad = g
        .elements()
        .filter(|&x| s.coproduct(&sym(x)) != LinComb::basis((sym(x), sym(x))))
        .map(|x| vec![g.label(x).to_string()])
        .collect();
    report.push("coproduct-table", bad);
    let bad = g
        .elements()
        .filter(|&x| s.counit(&sym(x)) != Scalar::one() || s.antipode(&sym(x)) != LinComb::basis(sym(g.inv(x))))
        .map(|x| vec![g.label(x).to_string()])
        .collect();
    report.push("counit-antipode", bad);
    report.push("dimension", if s.basis().len() == g.order() { vec![] } else { vec![vec![s.basis().len().to_string()]] });
    Ok(report)
}

/// `Vect(𝕌(𝔮)_{≤N}, 𝔞)` with the convolution bracket
/// `[δ_w a, δ_{w'} b] = c(w, w')·δ_{ww'}[a, b]`, where `c` is the coefficient
/// of `w ⊗ w'` in `Δ(ww')`, and `δ_{ww'}` dropped beyond degree `N`.
///
/// Generator `δ_w a_i` has index `position(w)·dim 𝔞 + i` and weight `|w| + 1`.
#[derive(Clone, Debug)]
pub struct FunctionLieAlgebra {
    base: Arc<LieAlgebra>,
    top: Arc<LieAlgebra>,
    truncation: usize,
    monomials: Vec<Monomial>,
    position: BTreeMap<Monomial, usize>,
    lie: Arc<LieAlgebra>,
}

fn split_coefficient(w: &Monomial, v: &Monomial) -> BigInt {
    let (mw, mv) = (w.multiplicities(), v.multiplicities());
    let mut out = BigInt::one();
    for (l, a) in &mw {
        let b = mv.iter().find(|(k, _)| k == l).map_or(0, |(_, c)| *c);
        out *= binomial(a + b, *a);
    }
    out
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

impl FunctionLieAlgebra {
    pub fn new(base: impl Into<Arc<LieAlgebra>>, top: impl Into<Arc<LieAlgebra>>, truncation: usize) -> Self {
        let (base, top) = (base.into(), top.into());
        let monomials = Envelope::new(top.clone(), truncation).monomials_up_to(truncation);
        let position: BTreeMap<Monomial, usize> = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let m = base.dim();
        let names: Vec<String> = monomials
            .iter()
            .flat_map(|w| {
                let w = w.render(top.basis_names());
                base.basis_names().iter().map(move |a| format!("{a}@{w}"))
            })
            .collect();
        let mut entries = Vec::new();
        for (p, w) in monomials.iter().enumerate() {
            for (p2, v) in monomials.iter().enumerate() {
                let union = w.merge(v);
                let Some(&target) = position.get(&union) else { continue };
                let c = Scalar::from_integer(split_coefficient(w, v));
                for i in 0..m {
                    for j in 0..m {
                        let (x, y) = (p * m + i, p2 * m + j);
                        if x < y {
                            let value = base.bracket_basis(i, j).map_basis(|k| target * m + k).scale(&c);
                            if !value.is_zero() {
                                entries.push((x, y, value));
                            }
                        }
                    }
                }
            }
        }
        let name = format!("Vect(U({})<={truncation},{})", top.name(), base.name());
        let lie = LieAlgebra::from_brackets(name, names, &entries).expect("convolution bracket is a Lie bracket");
        Self { base, top, truncation, monomials, position, lie: Arc::new(lie) }
    }

    pub fn base(&self) -> &Arc<LieAlgebra> {
        &self.base
    }

    pub fn top(&self) -> &Arc<LieAlgebra> {
        &self.top
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn lie(&self) -> &Arc<LieAlgebra> {
        &self.lie
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn index(&self, w: &Monomial, i: usize) -> Option<usize> {
        self.position.get(w).map(|p| p * self.base.dim() + i)
    }

    /// `(w, i)` for generator `δ_w a_i`.
    pub fn generator(&self, k: usize) -> (&Monomial, usize) {
        (&self.monomials[k / self.base.dim()], k % self.base.dim())
    }

    pub fn weights(&self) -> Vec<usize> {
        (0..self.lie.dim()).map(|k| self.generator(k).0.len() + 1).collect()
    }

    /// The δ-expansion of a wreath function part, as a vector of this algebra.
    pub fn from_function(&self, f: &BTreeMap<Monomial, LinComb<usize>>) -> LinComb<usize> {
        let mut out = LinComb::zero();
        for (w, v) in f {
            if let Some(p) = self.position.get(w) {
                out.add_scaled(&Scalar::one(), &v.map_basis(|i| p * self.base.dim() + i));
            }
        }
        out
    }
}

/// `q ⋆ f` with `(q⋆f)(u) = f(uq)` on `Vect(𝕌(𝔮)_{≤N}, 𝔞)`, extended to
/// `𝕌` of that Lie algebra by derivations and to `𝕌(𝔮)` letter by letter.
#[derive(Debug)]
pub struct LieWreathAction {
    space: Arc<FunctionLieAlgebra>,
    acting: Envelope,
    acted: Envelope,
    /// `generator_action[j][k] = q_j ⋆ δ_k`.
    generator_action: Vec<Vec<LinComb<usize>>>,
}

impl LieWreathAction {
    /// Errors with `UnsupportedQuotient` when right multiplication in `𝕌(𝔮)`
    /// can lower degree by two, since then the functions of degree `≤ N` are
    /// not stable under `⋆`.
    pub fn new(space: Arc<FunctionLieAlgebra>) -> Result<Self> {
        let n = space.truncation();
        let top_env = Envelope::new(space.top().clone(), n + 1);
        let m = space.base().dim();
        let dim = space.lie().dim();
        let mut generator_action = vec![vec![LinComb::zero(); dim]; space.top().dim()];
        for u in top_env.monomials_up_to(n + 1) {
            for (j, row) in generator_action.iter_mut().enumerate() {
                let uq = top_env.ring().mul_generator(&u, j);
                if let Some(low) = uq.support().find(|w| w.len() + 1 < u.len()) {
                    let names = space.top().basis_names();
                    return Err(Error::UnsupportedQuotient(format!(
                        "{}·{} has a term {} of lower degree",
                        u.render(names),
                        names[j],
                        low.render(names)
                    )));
                }
                if u.len() > n {
                    continue;
                }
                for (w, c) in uq.iter() {
                    if let Some(p) = space.position.get(w) {
                        for i in 0..m {
                            let target = space.index(&u, i).expect("u within truncation");
                            row[p * m + i].add_term(target, c.clone());
                        }
                    }
                }
            }
        }
        let acted = Envelope::with_weights(space.lie().clone(), space.weights(), n + 1)?;
        Ok(Self { acting: top_env, acted, space, generator_action })
    }

    pub fn space(&self) -> &Arc<FunctionLieAlgebra> {
        &self.space
    }

    /// `q_j ⋆ x` for a PBW monomial `x` of `𝕌(Vect)`, as a derivation.
    fn act_letter(&self, j: usize, x: &Monomial) -> LinComb<Monomial> {
        let letters = x.letters();
        let ring = self.acted.ring();
        let mut out = LinComb::zero();
        for p in 0..letters.len() {
            let image = &self.generator_action[j][letters[p]];
            if image.is_zero() {
                continue;
            }
            let prefix = ring.normalize_word(&letters[..p]);
            let mut acc = LinComb::zero();
            for (g, c) in image.iter() {
                acc.add_scaled(c, &ring.mul_lincomb_generator(&prefix, *g));
            }
            for &l in &letters[p + 1..] {
                acc = ring.mul_lincomb_generator(&acc, l);
            }
            out.add_scaled(&Scalar::one(), &acc);
        }
        out
    }
}

impl HopfAction for LieWreathAction {
    type Acting = Envelope;
    type Acted = Envelope;

    fn acting(&self) -> &Envelope {
        &self.acting
    }

    fn acted(&self) -> &Envelope {
        &self.acted
    }

    fn act(&self, q: &Monomial, h: &Monomial) -> LinComb<Monomial> {
        q.letters().iter().rev().fold(LinComb::basis(h.clone()), |acc, &j| acc.flat_map(|x| self.act_letter(j, x)))
    }
}

pub type LieWreathSmash = SmashProduct<LieWreathAction>;

/// `𝕌(Vect(𝕌(𝔮)_{≤N}, 𝔞)) # 𝕌(𝔮)` with the wreath product of Lie algebras
/// it is built on, enumerated up to weighted degree `N + 1`.
#[derive(Clone, Debug)]
pub struct LieWreathHopf {
    pub smash: Arc<LieWreathSmash>,
    pub wreath: WreathLie,
}

/// Default degree bound for validating the Lie wreath action.
pub const LIE_ACTION_WINDOW: usize = 3;

pub fn wreath_hopf_lie(a: impl Into<Arc<LieAlgebra>>, q: impl Into<Arc<LieAlgebra>>, n: usize) -> Result<LieWreathHopf> {
    let (a, q) = (a.into(), q.into());
    let space = Arc::new(FunctionLieAlgebra::new(a.clone(), q.clone(), n));
    let act = LieWreathAction::new(space)?;
    let smash = Arc::new(smash_product(act, Some(LIE_ACTION_WINDOW.min(n + 1)))?);
    Ok(LieWreathHopf { smash, wreath: WreathLie::new(a, q, n) })
}

impl LieWreathHopf {
    pub fn space(&self) -> &Arc<FunctionLieAlgebra> {
        self.smash.action().space()
    }

    pub fn truncation(&self) -> usize {
        self.space().truncation()
    }

    /// `τ(h # q) = ε(h)·q`, tabulated on the enumerated basis.
    pub fn tau(&self) -> HopfMorphism<LieWreathSmash, Envelope> {
        let target = Arc::new(self.smash.acting().clone());
        let acted = self.smash.acted().clone();
        HopfMorphism::from_fn(self.smash.clone(), target, move |(h, q)| LinComb::term(q.clone(), acted.counit(h)))
    }

    /// The primitive `f # 1 + 1 # q` representing `f ⊕ q`, using values on degree `≤ N`.
    pub fn embed(&self, x: &WreathLieElement) -> LinComb<(Monomial, Monomial)> {
        let v = self.space().from_function(&x.f);
        let mut out = LinComb::zero();
        for (k, c) in v.iter() {
            out.add_term((Monomial::generator(*k), Monomial::unit()), c.clone());
        }
        for (j, c) in x.q.iter() {
            out.add_term((Monomial::unit(), Monomial::generator(*j)), c.clone());
        }
        out
    }

    /// Read a primitive `Σ δ_w a # 1 + 1 # q` back as `f ⊕ q`; `None` if
    /// some term is not of that shape.
    pub fn read_primitive(&self, x: &LinComb<(Monomial, Monomial)>) -> Option<WreathLieElement> {
        let mut out = WreathLieElement::zero(self.truncation() + 1);
        for ((h, q), c) in x.iter() {
            match (h.letters(), q.letters()) {
                ([k], []) => {
                    let (w, i) = self.space().generator(*k);
                    out.f.entry(w.clone()).or_default().add_term(i, c.clone());
                }
                ([], [j]) => out.q.add_term(*j, c.clone()),
                _ => return None,
            }
        }
        out.f.retain(|_, v| !v.is_zero());
        Some(out)
    }

    /// Primitive basis: `δ_w a_i # 1` for `|w| ≤ N`, then `1 # q_j`.
    pub fn primitive_basis(&self) -> Vec<WreathLieElement> {
        crate::lie::wreath_basis(&self.wreath)
    }

    /// Commutators of primitive basis pairs in the smash product against the
    /// Lie wreath bracket, on monomials of degree `≤ window` (default `N − 1`).
    pub fn bracket_comparison(&self, window: Option<usize>) -> AxiomReport {
        let n = self.truncation();
        let bound = window.unwrap_or(n.saturating_sub(1)).min(n.saturating_sub(1)) + 1;
        let basis = self.primitive_basis();
        let embedded: Vec<_> = basis.iter().map(|x| self.embed(x)).collect();
        let mut bad = Vec::new();
        for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate() {
                let commutator = self.smash.commutator(&embedded[i], &embedded[j]);
                let expected = self.wreath.bracket(x, y).restrict(bound);
                let ok = self.read_primitive(&commutator).is_some_and(|c| c.restrict(bound).agrees_with(&expected));
                if !ok {
                    bad.push(vec![self.wreath.render(x), self.wreath.render(y)]);
                }
            }
        }
        let mut report = AxiomReport::default();
        report.push("wreath-bracket", bad);
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::cyclic;
    use crate::hopf::{check_axioms, primitives_up_to};
    use crate::lie::{abelian, affine_2dim, heisenberg, sl2};
    use crate::smash::check_module_axioms;

    #[test]
    fn group_wreath_matches_wreath_group_algebra() {
        for (a, q) in [(2, 2), (2, 3), (3, 2)] {
            let r = group_wreath_comparison(&Arc::new(cyclic(a)), &Arc::new(cyclic(q))).unwrap();
            assert!(r.passed(), "{:?}", r.failures());
        }
    }

    #[test]
    fn group_wreath_tau() {
        let w = wreath_hopf_group(cyclic(2), cyclic(2)).unwrap();
        assert!(check_axioms(&*w.smash, None).passed());
        assert!(w.tau.check(None).passed());
        assert_eq!(w.tau.apply(&LinComb::basis((vec![1, 0], 1))).unwrap(), LinComb::basis(1));
    }

    #[test]
    fn function_bracket_coefficients() {
        let v = FunctionLieAlgebra::new(heisenberg(), abelian(1), 2);
        let x = Monomial::generator(0);
        let (p, q) = (v.index(&x, 0).unwrap(), v.index(&x, 1).unwrap());
        let target = v.index(&Monomial::sorted(vec![0, 0]), 2).unwrap();
        assert_eq!(v.lie().bracket_basis(p, q), LinComb::term(target, crate::linear::int(2)));
        assert_eq!(v.weights().iter().max(), Some(&3));
    }

    #[test]
    fn sl2_quotient_is_unsupported() {
        let space = Arc::new(FunctionLieAlgebra::new(abelian(1), sl2(), 3));
        assert!(matches!(LieWreathAction::new(space), Err(Error::UnsupportedQuotient(_))));
    }

    #[test]
    fn lie_action_axioms() {
        let space = Arc::new(FunctionLieAlgebra::new(abelian(1), affine_2dim(), 3));
        let act = LieWreathAction::new(space).unwrap();
        let r = check_module_axioms(&act, Some(4));
        assert!(r.passed(), "{:?}", r.failures());
    }

    #[test]
    fn commutator_is_the_action() {
        let w = wreath_hopf_lie(abelian(1), abelian(1), 2).unwrap();
        let x = WreathLieElement::top(LinComb::basis(0), 3);
        let f = WreathLieElement::delta(Monomial::generator(0), LinComb::basis(0), 3);
        let c = w.smash.commutator(&w.embed(&x), &w.embed(&f));
        // (1#x)(δ_x#1) − (δ_x#1)(1#x) = (x⋆δ_x)#1 = δ_1#1
        let expected = w.embed(&WreathLieElement::delta(Monomial::unit(), LinComb::basis(0), 3));
        assert_eq!(c, expected);
    }

    #[test]
    fn lie_wreath_hopf_small() {
        let w = wreath_hopf_lie(abelian(1), abelian(1), 2).unwrap();
        let r = check_axioms(&*w.smash, Some(3));
        assert!(r.passed(), "{:?}", r.failures());
        assert!(w.tau().check(Some(3)).passed());
        let prims = primitives_up_to(&*w.smash, Some(3));
        assert_eq!(prims.len(), 3 + 1);
        assert!(w.bracket_comparison(None).passed());
        assert_eq!(w.smash.unit(), LinComb::basis((Monomial::unit(), Monomial::unit())));
    }

    #[test]
    fn bracket_comparison_nonabelian() {
        for (a, q) in [(affine_2dim(), abelian(1)), (abelian(1), affine_2dim()), (abelian(2), heisenberg())] {
            let w = wreath_hopf_lie(a, q, 3).unwrap();
            let r = w.bracket_comparison(None);
            assert!(r.passed(), "{:?}", r.failures());
        }
    }
}
