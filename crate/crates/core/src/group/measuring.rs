use std::sync::Arc;

use num_traits::One;

use super::wreath::all_functions;
use super::FiniteGroup;
use crate::hopf::{Algebra, Coalgebra, FreeModule, HopfAlgebra};
use crate::linear::{LinComb, Scalar};

/// The group-like coalgebra `𝕜(Y^X)` with basis `u_f` for `f: X → Y`,
/// `Δ(u_f) = u_f ⊗ u_f`, `ε(u_f) = 1`, and evaluation `u_f @ x = f(x)`.
#[derive(Clone, Debug)]
pub struct MeasuringCoalgebra {
    domain: Vec<String>,
    codomain: Vec<String>,
}

impl MeasuringCoalgebra {
    pub fn new(domain: Vec<String>, codomain: Vec<String>) -> Self {
        assert!(!domain.is_empty() && !codomain.is_empty(), "label sets must be nonempty");
        Self { domain, codomain }
    }

    pub fn domain(&self) -> &[String] {
        &self.domain
    }

    pub fn codomain(&self) -> &[String] {
        &self.codomain
    }

    pub fn dim(&self) -> usize {
        self.codomain.len().pow(self.domain.len() as u32)
    }

    /// `u_f @ x = f(x)` as a codomain index.
    pub fn evaluate(&self, f: &[usize], x: usize) -> usize {
        f[x]
    }

    fn format(&self, f: &[usize]) -> String {
        let parts: Vec<String> =
            f.iter().enumerate().map(|(x, &y)| format!("{}>{}", self.domain[x], self.codomain[y])).collect();
        format!("u[{}]", parts.join(","))
    }
}

pub fn measuring_group_iso(domain: Vec<String>, codomain: Vec<String>) -> MeasuringCoalgebra {
    MeasuringCoalgebra::new(domain, codomain)
}

impl FreeModule for MeasuringCoalgebra {
    type Basis = Vec<usize>;

    fn basis(&self) -> Vec<Vec<usize>> {
        all_functions(self.domain.len(), self.codomain.len())
    }

    fn label(&self, b: &Vec<usize>) -> String {
        self.format(b)
    }
}

impl Coalgebra for MeasuringCoalgebra {
    fn coproduct(&self, b: &Vec<usize>) -> LinComb<(Vec<usize>, Vec<usize>)> {
        LinComb::basis((b.clone(), b.clone()))
    }

    fn counit(&self, _b: &Vec<usize>) -> Scalar {
        Scalar::one()
    }
}

/// `𝕜(A^X)` for a group `A`: the measuring coalgebra with pointwise
/// multiplication, i.e. the group algebra of the product group `A^X`.
#[derive(Clone, Debug)]
pub struct GroupFunctionAlgebra {
    coalgebra: MeasuringCoalgebra,
    group: Arc<FiniteGroup>,
}

impl GroupFunctionAlgebra {
    pub fn new(domain: Vec<String>, group: impl Into<Arc<FiniteGroup>>) -> Self {
        let group = group.into();
        let coalgebra = MeasuringCoalgebra::new(domain, group.labels().to_vec());
        Self { coalgebra, group }
    }

    pub fn coalgebra(&self) -> &MeasuringCoalgebra {
        &self.coalgebra
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }
}

impl FreeModule for GroupFunctionAlgebra {
    type Basis = Vec<usize>;

    fn basis(&self) -> Vec<Vec<usize>> {
        self.coalgebra.basis()
    }

    fn label(&self, b: &Vec<usize>) -> String {
        self.coalgebra.label(b)
    }
}

impl Algebra for GroupFunctionAlgebra {
    fn product(&self, a: &Vec<usize>, b: &Vec<usize>) -> LinComb<Vec<usize>> {
        LinComb::basis(a.iter().zip(b).map(|(&x, &y)| self.group.mul(x, y)).collect())
    }

    fn unit(&self) -> LinComb<Vec<usize>> {
        LinComb::basis(vec![self.group.identity(); self.coalgebra.domain.len()])
    }
}

impl Coalgebra for GroupFunctionAlgebra {
    fn coproduct(&self, b: &Vec<usize>) -> LinComb<(Vec<usize>, Vec<usize>)> {
        self.coalgebra.coproduct(b)
    }

    fn counit(&self, b: &Vec<usize>) -> Scalar {
        self.coalgebra.counit(b)
    }
}

impl HopfAlgebra for GroupFunctionAlgebra {
    fn antipode(&self, b: &Vec<usize>) -> LinComb<Vec<usize>> {
        LinComb::basis(b.iter().map(|&x| self.group.inv(x)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("x{i}")).collect()
    }

    #[test]
    fn dimension_is_power() {
        for x in 1..=3 {
            for y in 1..=3 {
                let m = measuring_group_iso(names(x), names(y));
                assert_eq!(m.basis().len(), y.pow(x as u32));
                assert_eq!(m.dim(), m.basis().len());
            }
        }
    }

    #[test]
    fn evaluation_reads_the_table() {
        let m = measuring_group_iso(names(2), names(3));
        for f in m.basis() {
            for x in 0..2 {
                assert_eq!(m.evaluate(&f, x), f[x]);
            }
        }
        assert_eq!(m.label(&vec![2, 0]), "u[x0>x2,x1>x0]");
    }
}
