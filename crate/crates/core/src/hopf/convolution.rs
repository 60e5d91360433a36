use std::collections::BTreeMap;

use super::{Algebra, Coalgebra, FreeModule};
use crate::error::{Error, Result};
use crate::linear::{solve, LinComb, LinMap};

/// Iterated coproduct `(Δ⊗id⊗…)∘…∘Δ` with `legs` tensor factors.
pub fn sweedler_expand<H: Coalgebra + ?Sized>(
    h: &H,
    x: &LinComb<H::Basis>,
    legs: usize,
) -> Result<LinComb<Vec<H::Basis>>> {
    assert!(legs >= 2, "Sweedler expansion needs at least two legs");
    if let Some(cap) = h.cap() {
        let degree = h.degree_of(x);
        if degree > cap {
            return Err(Error::DegreeOverflow { degree, cap });
        }
    }
    let mut acc: LinComb<Vec<H::Basis>> = x.map_basis(|b| vec![b.clone()]);
    for _ in 1..legs {
        acc = acc.flat_map(|tuple| {
            h.coproduct(&tuple[0]).map_basis(|(l, r)| {
                let mut t = Vec::with_capacity(tuple.len() + 1);
                t.push(l.clone());
                t.push(r.clone());
                t.extend_from_slice(&tuple[1..]);
                t
            })
        });
    }
    Ok(acc)
}

/// `f·g = m_D ∘ (f⊗g) ∘ Δ_C`, tabulated on the domain of `f`.
pub fn convolve<C, D>(
    f: &LinMap<C::Basis, D::Basis>,
    g: &LinMap<C::Basis, D::Basis>,
    cdom: &C,
    dcod: &D,
) -> Result<LinMap<C::Basis, D::Basis>>
where
    C: Coalgebra + ?Sized,
    D: Algebra + ?Sized,
{
    LinMap::try_new(f.domain().to_vec(), |b| {
        let mut out = LinComb::zero();
        for ((b1, b2), c) in cdom.coproduct(b).iter() {
            let left = f.apply_basis(b1)?;
            let right = g.apply_basis(b2)?;
            out.add_scaled(c, &dcod.mul(&left, &right));
        }
        Ok(out)
    })
}

/// The convolution identity `η∘ε` on the enumerated basis of `cdom`.
pub fn unit_counit<C, D>(cdom: &C, dcod: &D) -> LinMap<C::Basis, D::Basis>
where
    C: Coalgebra + ?Sized,
    D: Algebra + ?Sized,
{
    let unit = dcod.unit();
    LinMap::new(cdom.basis(), |b| unit.scale(&cdom.counit(b)))
}

pub fn identity_map<H: FreeModule + ?Sized>(h: &H) -> LinMap<H::Basis, H::Basis> {
    LinMap::new(h.basis(), |b| LinComb::basis(b.clone()))
}

/// Solve `Σ κ(q₁) f(q₂) = ε(q)·1` for `κ` with values in the enumerated basis
/// of `dcod`. Only the left-inverse system is solved; for cocommutative
/// domains the result is also a right inverse.
pub fn convolution_inverse<C, D>(
    f: &LinMap<C::Basis, D::Basis>,
    cdom: &C,
    dcod: &D,
) -> Result<LinMap<C::Basis, D::Basis>>
where
    C: Coalgebra + ?Sized,
    D: Algebra + ?Sized,
{
    let domain = f.domain().to_vec();
    let candidates = dcod.basis();
    let unknowns: Vec<(C::Basis, D::Basis)> =
        domain.iter().flat_map(|b| candidates.iter().map(move |d| (b.clone(), d.clone()))).collect();

    // column (b, d) ↦ Σ_q Σ_{(q₁=b, q₂)} c · (q, d·f(q₂))
    let mut columns: BTreeMap<(C::Basis, D::Basis), LinComb<(C::Basis, D::Basis)>> = BTreeMap::new();
    let mut target = LinComb::zero();
    let unit = dcod.unit();
    for q in &domain {
        for ((q1, q2), c) in cdom.coproduct(q).iter() {
            let fq2 = f.apply_basis(q2)?;
            if fq2.is_zero() {
                continue;
            }
            for d in &candidates {
                let prod = dcod.mul(&LinComb::basis(d.clone()), &fq2);
                if prod.is_zero() {
                    continue;
                }
                columns
                    .entry((q1.clone(), d.clone()))
                    .or_default()
                    .add_scaled(c, &prod.map_basis(|e| (q.clone(), e.clone())));
            }
        }
        target.add_scaled(&cdom.counit(q), &unit.map_basis(|e| (q.clone(), e.clone())));
    }
    let system = LinMap::new(unknowns, |u| columns.get(u).cloned().unwrap_or_default());
    let solution = solve(&system, &target).map_err(|_| Error::NotInvertible)?;
    let mut table: BTreeMap<C::Basis, LinComb<D::Basis>> = BTreeMap::new();
    for ((b, d), c) in solution.iter() {
        table.entry(b.clone()).or_default().add_term(d.clone(), c.clone());
    }
    Ok(LinMap::new(domain, |b| table.get(b).cloned().unwrap_or_default()))
}
