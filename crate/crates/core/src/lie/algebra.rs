use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::linear::{int, rank, LinComb};

/// A finite-dimensional Lie algebra over ℚ by structure constants on an
/// ordered basis, validated for antisymmetry and the Jacobi identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    basis: Vec<String>,
    brackets: Vec<Vec<LinComb<usize>>>,
}

impl LieAlgebra {
    pub fn new(name: impl Into<String>, basis: Vec<String>, brackets: Vec<Vec<LinComb<usize>>>) -> Result<Self> {
        let name = name.into();
        let n = basis.len();
        let bad = |m: String| Error::InvalidLie(format!("{name}: {m}"));
        let mut seen = HashMap::new();
        for (i, b) in basis.iter().enumerate() {
            if seen.insert(b.clone(), i).is_some() {
                return Err(bad(format!("duplicate basis name {b:?}")));
            }
        }
        if brackets.len() != n || brackets.iter().any(|row| row.len() != n) {
            return Err(bad("bracket table is not square".into()));
        }
        if brackets.iter().flatten().flat_map(|v| v.support()).any(|&k| k >= n) {
            return Err(bad("bracket value outside the basis".into()));
        }
        let lie = Self { name: name.clone(), basis, brackets };
        for i in 0..n {
            for j in 0..n {
                if lie.brackets[i][j] != -lie.brackets[j][i].clone() {
                    return Err(bad(format!("antisymmetry fails at ({}, {})", lie.basis[i], lie.basis[j])));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let jac = lie.bracket(&LinComb::basis(i), &lie.bracket_basis(j, k))
                        + lie.bracket(&LinComb::basis(j), &lie.bracket_basis(k, i))
                        + lie.bracket(&LinComb::basis(k), &lie.bracket_basis(i, j));
                    if !jac.is_zero() {
                        return Err(bad(format!(
                            "Jacobi identity fails at ({}, {}, {})",
                            lie.basis[i], lie.basis[j], lie.basis[k]
                        )));
                    }
                }
            }
        }
        Ok(lie)
    }

    /// Build from the brackets `[x_i, x_j]` for some `i < j` (or `i > j`);
    /// the rest is filled in by antisymmetry and zero.
    pub fn from_brackets(
        name: impl Into<String>,
        basis: Vec<String>,
        entries: &[(usize, usize, LinComb<usize>)],
    ) -> Result<Self> {
        let name = name.into();
        let n = basis.len();
        let mut brackets = vec![vec![LinComb::zero(); n]; n];
        for (i, j, v) in entries {
            if *i >= n || *j >= n {
                return Err(Error::InvalidLie(format!("{name}: bracket index out of range")));
            }
            if i == j && !v.is_zero() {
                return Err(Error::InvalidLie(format!("{name}: [{0}, {0}] must vanish", basis[*i])));
            }
            brackets[*i][*j] = v.clone();
            brackets[*j][*i] = -v.clone();
        }
        Self::new(name, basis, brackets)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn basis_name(&self, i: usize) -> &str {
        &self.basis[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == name)
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> LinComb<usize> {
        self.brackets[i][j].clone()
    }

    pub fn bracket(&self, x: &LinComb<usize>, y: &LinComb<usize>) -> LinComb<usize> {
        let mut out = LinComb::zero();
        for (i, c) in x.iter() {
            for (j, d) in y.iter() {
                out.add_scaled(&(c * d), &self.brackets[*i][*j]);
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.iter().flatten().all(LinComb::is_zero)
    }

    /// Whether the linear map given by basis images is a Lie homomorphism.
    pub fn is_homomorphism(&self, target: &LieAlgebra, images: &[LinComb<usize>]) -> bool {
        let apply = |v: &LinComb<usize>| v.flat_map(|i| images[*i].clone());
        images.len() == self.dim()
            && (0..self.dim()).all(|i| {
                (0..self.dim()).all(|j| apply(&self.brackets[i][j]) == target.bracket(&images[i], &images[j]))
            })
    }

    pub fn render(&self, x: &LinComb<usize>) -> String {
        x.render(|i| self.basis[*i].clone())
    }
}

/// Rank of a family of vectors given as basis images.
pub(crate) fn is_injective(images: &[LinComb<usize>]) -> bool {
    rank(images) == images.len()
}

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

/// Names accepted by [`builtin_lie`], besides `abelian-<n>`.
pub const BUILTIN_LIE: &[&str] = &["abelian-1", "abelian-2", "abelian-3", "heisenberg", "sl2", "affine-2dim"];

/// Abelian Lie algebra of dimension `n` with basis `x, y, z` for `n ≤ 3`, else `x1, x2, …`.
pub fn abelian(n: usize) -> LieAlgebra {
    let basis = if n <= 3 { names(&["x", "y", "z"][..n]) } else { (1..=n).map(|i| format!("x{i}")).collect() };
    LieAlgebra::from_brackets(format!("abelian-{n}"), basis, &[]).expect("abelian algebra")
}

/// Heisenberg algebra `[x, y] = z`.
pub fn heisenberg() -> LieAlgebra {
    LieAlgebra::from_brackets("heisenberg", names(&["x", "y", "z"]), &[(0, 1, LinComb::basis(2))])
        .expect("Heisenberg algebra")
}

/// `sl2` with `[e, f] = h`, `[h, e] = 2e`, `[h, f] = −2f`.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_brackets(
        "sl2",
        names(&["e", "f", "h"]),
        &[(0, 1, LinComb::basis(2)), (2, 0, LinComb::term(0, int(2))), (2, 1, LinComb::term(1, int(-2)))],
    )
    .expect("sl2")
}

/// The non-abelian two-dimensional algebra `[x, y] = y`.
pub fn affine_2dim() -> LieAlgebra {
    LieAlgebra::from_brackets("affine-2dim", names(&["x", "y"]), &[(0, 1, LinComb::basis(1))]).expect("affine algebra")
}

pub fn builtin_lie(name: &str) -> Result<LieAlgebra> {
    match name {
        "heisenberg" => Ok(heisenberg()),
        "sl2" => Ok(sl2()),
        "affine-2dim" | "affine" => Ok(affine_2dim()),
        _ => name
            .strip_prefix("abelian-")
            .or_else(|| name.strip_prefix("abelian"))
            .and_then(|n| n.parse::<usize>().ok())
            .filter(|&n| (1..=16).contains(&n))
            .map(abelian)
            .ok_or_else(|| Error::UnknownBuiltin(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_validate() {
        for name in BUILTIN_LIE {
            builtin_lie(name).unwrap();
        }
        assert_eq!(builtin_lie("abelian-5").unwrap().dim(), 5);
        assert!(builtin_lie("abelian-0").is_err());
        assert!(builtin_lie("so3").is_err());
    }

    #[test]
    fn jacobi_violation_is_rejected() {
        // [x,y]=x, [y,z]=y, [z,x]=z fails Jacobi
        let err = LieAlgebra::from_brackets(
            "bad",
            names(&["x", "y", "z"]),
            &[(0, 1, LinComb::basis(0)), (1, 2, LinComb::basis(1)), (2, 0, LinComb::basis(2))],
        )
        .unwrap_err();
        assert!(err.to_string().contains("Jacobi"));
    }

    #[test]
    fn sl2_brackets() {
        let g = sl2();
        assert_eq!(g.bracket_basis(0, 1), LinComb::basis(2));
        assert_eq!(g.bracket_basis(0, 2), LinComb::term(0, int(-2)));
        assert_eq!(g.render(&g.bracket_basis(1, 2)), "2*f");
    }
}
