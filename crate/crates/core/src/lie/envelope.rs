use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{LieAlgebra, Monomial, PbwRing};
use crate::error::{Error, Result};
use crate::hopf::{Algebra, Coalgebra, FreeModule, HopfAlgebra};
use crate::linear::{LinComb, Scalar};

/// The universal enveloping algebra `U(𝔤)` on the PBW basis, with the basis
/// enumerated up to a weighted degree `cap`. Generators carry positive
/// weights (all 1 by default); structure maps are exact at every degree.
#[derive(Clone, Debug)]
pub struct Envelope {
    ring: Arc<PbwRing>,
    weights: Vec<usize>,
    cap: usize,
}

impl Envelope {
    pub fn new(lie: impl Into<Arc<LieAlgebra>>, cap: usize) -> Self {
        let lie = lie.into();
        let weights = vec![1; lie.dim()];
        Self { ring: Arc::new(PbwRing::new(lie)), weights, cap }
    }

    /// Weighted envelope; brackets must not raise weight.
    pub fn with_weights(lie: impl Into<Arc<LieAlgebra>>, weights: Vec<usize>, cap: usize) -> Result<Self> {
        let lie = lie.into();
        if weights.len() != lie.dim() || weights.contains(&0) {
            return Err(Error::InvalidLie("weights must be positive, one per basis element".into()));
        }
        for i in 0..lie.dim() {
            for j in 0..lie.dim() {
                if lie.bracket_basis(i, j).support().any(|&k| weights[k] > weights[i] + weights[j]) {
                    return Err(Error::InvalidLie(format!(
                        "bracket [{}, {}] raises weight",
                        lie.basis_name(i),
                        lie.basis_name(j)
                    )));
                }
            }
        }
        Ok(Self { ring: Arc::new(PbwRing::new(lie)), weights, cap })
    }

    pub fn lie(&self) -> &Arc<LieAlgebra> {
        self.ring.lie()
    }

    pub fn ring(&self) -> &PbwRing {
        &self.ring
    }

    pub fn cap_degree(&self) -> usize {
        self.cap
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    pub fn weight(&self, m: &Monomial) -> usize {
        m.letters().iter().map(|&l| self.weights[l]).sum()
    }

    /// Monomials of weight at most `bound`, in monomial order.
    pub fn monomials_up_to(&self, bound: usize) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        self.extend_monomials(0, bound, &mut stack, &mut out);
        out.sort();
        out
    }

    fn extend_monomials(&self, from: usize, budget: usize, stack: &mut Vec<usize>, out: &mut Vec<Monomial>) {
        out.push(Monomial::from_sorted(stack.clone()).expect("built increasing"));
        for l in from..self.weights.len() {
            if self.weights[l] <= budget {
                stack.push(l);
                self.extend_monomials(l, budget - self.weights[l], stack, out);
                stack.pop();
            }
        }
    }

    /// The primitive element of a Lie algebra vector.
    pub fn embed(&self, x: &LinComb<usize>) -> LinComb<Monomial> {
        x.map_basis(|&i| Monomial::generator(i))
    }

    /// The degree-one part of an element, read back as a Lie algebra vector.
    pub fn linear_part(&self, x: &LinComb<Monomial>) -> LinComb<usize> {
        LinComb::from_terms(x.iter().filter(|(m, _)| m.len() == 1).map(|(m, c)| (m.letters()[0], c.clone())))
    }

    pub fn normalize_word(&self, word: &[usize]) -> LinComb<Monomial> {
        self.ring.normalize_word(word)
    }

    /// Product of Lie algebra vectors `v₁ ⋯ v_k`, in normal form.
    pub fn product_of_vectors(&self, factors: &[LinComb<usize>]) -> LinComb<Monomial> {
        factors.iter().fold(LinComb::basis(Monomial::unit()), |acc, v| {
            let mut out = LinComb::zero();
            for (g, c) in v.iter() {
                out.add_scaled(c, &self.ring.mul_lincomb_generator(&acc, *g));
            }
            out
        })
    }
}

pub fn enveloping_hopf(lie: impl Into<Arc<LieAlgebra>>, cap: usize) -> Envelope {
    Envelope::new(lie, cap)
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// Coproduct of a PBW monomial: Σ over splits of each multiplicity, weighted
/// by binomial coefficients.
pub fn shuffle_coproduct(m: &Monomial) -> LinComb<(Monomial, Monomial)> {
    let mults = m.multiplicities();
    let mut acc: Vec<(Vec<usize>, Vec<usize>, BigInt)> = vec![(Vec::new(), Vec::new(), BigInt::one())];
    for (l, count) in mults {
        let mut next = Vec::with_capacity(acc.len() * (count + 1));
        for (left, right, c) in &acc {
            for k in 0..=count {
                let mut a = left.clone();
                a.extend(std::iter::repeat_n(l, k));
                let mut b = right.clone();
                b.extend(std::iter::repeat_n(l, count - k));
                next.push((a, b, c * binomial(count, k)));
            }
        }
        acc = next;
    }
    LinComb::from_terms(acc.into_iter().map(|(a, b, c)| {
        ((Monomial::from_sorted(a).expect("sorted"), Monomial::from_sorted(b).expect("sorted")), Scalar::from_integer(c))
    }))
}

impl FreeModule for Envelope {
    type Basis = Monomial;

    fn basis(&self) -> Vec<Monomial> {
        self.monomials_up_to(self.cap)
    }

    fn degree(&self, b: &Monomial) -> usize {
        self.weight(b)
    }

    fn cap(&self) -> Option<usize> {
        Some(self.cap)
    }

    fn label(&self, b: &Monomial) -> String {
        b.render(self.lie().basis_names())
    }
}

impl Algebra for Envelope {
    fn product(&self, a: &Monomial, b: &Monomial) -> LinComb<Monomial> {
        self.ring.mul(a, b)
    }

    fn unit(&self) -> LinComb<Monomial> {
        LinComb::basis(Monomial::unit())
    }

    fn mul(&self, x: &LinComb<Monomial>, y: &LinComb<Monomial>) -> LinComb<Monomial> {
        self.ring.mul_lincomb(x, y)
    }
}

impl Coalgebra for Envelope {
    fn coproduct(&self, b: &Monomial) -> LinComb<(Monomial, Monomial)> {
        shuffle_coproduct(b)
    }

    fn counit(&self, b: &Monomial) -> Scalar {
        if b.is_empty() {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    }
}

impl HopfAlgebra for Envelope {
    fn antipode(&self, b: &Monomial) -> LinComb<Monomial> {
        let reversed: Vec<usize> = b.letters().iter().rev().copied().collect();
        let sign = if b.len().is_multiple_of(2) { Scalar::one() } else { -Scalar::one() };
        self.ring.normalize_word(&reversed).scale(&sign)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::check_axioms;
    use crate::lie::{abelian, heisenberg};
    use crate::linear::{int, tensor};

    #[test]
    fn one_dimensional_basis_and_coproduct() {
        let u = enveloping_hopf(abelian(1), 3);
        assert_eq!(u.basis().len(), 4);
        let x2 = Monomial::from_sorted(vec![0, 0]).unwrap();
        let x = Monomial::generator(0);
        let expected = LinComb::from_terms([
            ((x2.clone(), Monomial::unit()), int(1)),
            ((x.clone(), x.clone()), int(2)),
            ((Monomial::unit(), x2.clone()), int(1)),
        ]);
        assert_eq!(u.coproduct(&x2), expected);
        assert_eq!(u.antipode(&x), LinComb::term(x, int(-1)));
    }

    #[test]
    fn shuffle_matches_product_of_generator_coproducts() {
        let u = enveloping_hopf(heisenberg(), 4);
        for m in u.basis() {
            let mut expected = tensor(&u.unit(), &u.unit());
            for &g in m.letters() {
                let x = LinComb::basis(Monomial::generator(g));
                let dg = tensor(&x, &u.unit()) + tensor(&u.unit(), &x);
                expected = u.mul_tensor(&expected, &dg);
            }
            assert_eq!(u.coproduct(&m), expected, "{}", u.label(&m));
        }
    }

    #[test]
    fn heisenberg_products() {
        let u = enveloping_hopf(heisenberg(), 2);
        let (x, y) = (Monomial::generator(0), Monomial::generator(1));
        let xy = Monomial::from_sorted(vec![0, 1]).unwrap();
        assert_eq!(u.product(&x, &y), LinComb::basis(xy.clone()));
        assert_eq!(u.product(&y, &x), LinComb::from_terms([(xy, int(1)), (Monomial::generator(2), int(-1))]));
        assert!(check_axioms(&u, None).passed());
    }

    #[test]
    fn weights_must_be_filtered() {
        assert!(Envelope::with_weights(heisenberg(), vec![1, 1, 3], 3).is_err());
        let e = Envelope::with_weights(heisenberg(), vec![1, 1, 2], 2).unwrap();
        assert_eq!(e.basis().len(), 7);
    }
}
