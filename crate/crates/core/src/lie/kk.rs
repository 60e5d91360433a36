use super::{coalgebra_section, CoalgebraSection, LieExtension, Monomial, WreathLie, WreathLieElement};
use crate::error::{Error, Result};
use crate::hopf::{AxiomReport, Coalgebra, HopfAlgebra};
use crate::linear::{rank, LinComb, SpanBasis};

/// The embedding `𝔢 → 𝔞 ≀ 𝔮` truncated at `N`, tabulated on the basis of `𝔢`.
#[derive(Clone, Debug)]
pub struct LieEmbedding {
    pub extension: LieExtension,
    pub wreath: WreathLie,
    pub section: CoalgebraSection,
    /// Image of each basis vector of `𝔢`.
    pub images: Vec<WreathLieElement>,
}

/// `α_e(u) = Σ s(u₁)·S(s(u₂·π(e)) − s(u₂)·e)` in `U(𝔢)`, read back in `𝔞`.
fn alpha(
    ext: &LieExtension,
    sec: &CoalgebraSection,
    span: &SpanBasis<usize>,
    e: usize,
    u: &Monomial,
) -> Result<LinComb<usize>> {
    let env = &sec.total_env;
    let pe = ext.pi[e].clone();
    let ev = env.embed(&LinComb::basis(e));
    let mut total = LinComb::zero();
    for ((u1, u2), c) in sec.quotient_env.coproduct(u).iter() {
        let inner = sec.apply(&sec.right_multiply(u2, &pe)) - env.ring().mul_lincomb(&sec.apply_monomial(u2), &ev);
        let term = env.ring().mul_lincomb(&sec.apply_monomial(u1), &env.antipode_of(&inner));
        total.add_scaled(c, &term);
    }
    let label = || format!("α_{}({})", ext.total.basis_name(e), u.render(ext.quotient.basis_names()));
    if total.support().any(|m| m.len() != 1) {
        return Err(Error::NotInKernel(format!("{} is not primitive", label())));
    }
    span.coordinates(&env.linear_part(&total))
        .ok_or_else(|| Error::NotInKernel(format!("{} is outside ι(𝔞)", label())))
}

/// `e ↦ (u ↦ α_e(u)) ⊕ π(e)` for `|u| ≤ n`.
pub fn kk_embed_lie(ext: &LieExtension, n: usize) -> Result<LieEmbedding> {
    let sec = coalgebra_section(ext, n + 1);
    let wreath = WreathLie::new(ext.kernel.clone(), ext.quotient.clone(), n);
    let span = SpanBasis::from_vectors(&ext.iota);
    let window = wreath.full_window();
    let mut images = Vec::with_capacity(ext.total.dim());
    for e in 0..ext.total.dim() {
        let mut image = WreathLieElement::top(ext.pi[e].clone(), window);
        for u in wreath.monomials() {
            let a = alpha(ext, &sec, &span, e, &u)?;
            if !a.is_zero() {
                image.f.insert(u, a);
            }
        }
        images.push(image);
    }
    Ok(LieEmbedding { extension: ext.clone(), wreath, section: sec, images })
}

impl LieEmbedding {
    pub fn apply(&self, v: &LinComb<usize>) -> WreathLieElement {
        v.iter().fold(WreathLieElement::zero(self.wreath.full_window()), |acc, (i, c)| acc.combine(c, &self.images[*i]))
    }

    /// Pairs `(basis name, rendered image)`.
    pub fn graph(&self) -> Vec<(String, String)> {
        self.images
            .iter()
            .enumerate()
            .map(|(i, x)| (self.extension.total.basis_name(i).to_string(), self.wreath.render(x)))
            .collect()
    }

    /// Bracket preservation on `|u| ≤ window` (default and maximum `N − 1`),
    /// injectivity, `ρ∘φ = π`, and `φ(ι(a))(1) = a`.
    pub fn check(&self, window: Option<usize>) -> AxiomReport {
        let e = &*self.extension.total;
        let n = self.wreath.truncation();
        let bound = window.unwrap_or(n.saturating_sub(1)).min(n.saturating_sub(1)) + 1;
        let mut report = AxiomReport::default();
        let mut bad = Vec::new();
        for i in 0..e.dim() {
            for j in 0..e.dim() {
                let lhs = self.apply(&e.bracket_basis(i, j)).restrict(bound);
                let rhs = self.wreath.bracket(&self.images[i], &self.images[j]).restrict(bound);
                if !lhs.agrees_with(&rhs) {
                    bad.push(vec![e.basis_name(i).to_string(), e.basis_name(j).to_string()]);
                }
            }
        }
        report.push("homomorphism", bad);
        let coords: Vec<_> = self.images.iter().map(|x| self.wreath.coordinates(x)).collect();
        let injective = rank(&coords) == e.dim();
        report.push("injective", if injective { vec![] } else { vec![vec![e.name().to_string()]] });
        let bad = (0..e.dim())
            .filter(|&i| self.images[i].q != self.extension.pi[i])
            .map(|i| vec![e.basis_name(i).to_string()])
            .collect();
        report.push("projection", bad);
        let a = &*self.extension.kernel;
        let bad = (0..a.dim())
            .filter(|&k| self.apply(&self.extension.iota[k]).eval(&Monomial::unit()).ok() != Some(LinComb::basis(k)))
            .map(|k| vec![a.basis_name(k).to_string()])
            .collect();
        report.push("kernel-evaluation", bad);
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{abelian, affine_2dim, affine_over_abelian1, heisenberg, heisenberg_over_abelian2, split_lie_extension};

    #[test]
    fn heisenberg_embedding() {
        let emb = kk_embed_lie(&heisenberg_over_abelian2(), 4).unwrap();
        let report = emb.check(None);
        assert!(report.passed(), "{:?}", report.failures());
        // φ(z) is the constant-at-1 function z.
        let z = &emb.images[2];
        assert_eq!(z.eval(&Monomial::unit()).unwrap(), LinComb::basis(0));
        assert!(z.q.is_zero());
    }

    #[test]
    fn affine_embedding() {
        let emb = kk_embed_lie(&affine_over_abelian1(), 4).unwrap();
        let report = emb.check(None);
        assert!(report.passed(), "{:?}", report.failures());
        // φ(y)(x) = [x, y] = y.
        let y = &emb.images[1];
        assert_eq!(y.eval(&Monomial::generator(0)).unwrap(), LinComb::basis(0));
    }

    #[test]
    fn split_embeddings() {
        for ext in [split_lie_extension(&affine_2dim(), &abelian(1)), split_lie_extension(&abelian(1), &heisenberg())] {
            let emb = kk_embed_lie(&ext, 3).unwrap();
            assert!(emb.check(None).passed(), "{:?}", emb.check(None).failures());
        }
    }
}
