use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{window_basis, Coalgebra, FreeModule, HopfAlgebra, HopfMorphism};
use crate::linear::{kernel_basis, tensor, LinComb, LinMap, Scalar};

/// Basis of `{e : Σ e₁⊗π(e₂) = e⊗1}` inside the enumerated source basis.
pub fn hopf_kernel<S, T>(pi: &HopfMorphism<S, T>) -> Vec<LinComb<S::Basis>>
where
    S: HopfAlgebra + ?Sized,
    T: HopfAlgebra + ?Sized,
{
    let source = pi.source();
    let unit = pi.target().unit();
    let map = LinMap::new(source.basis(), |e| {
        let mut out: LinComb<(S::Basis, T::Basis)> = LinComb::zero();
        for ((e1, e2), c) in source.coproduct(e).iter() {
            let image = pi.map().image(e2).cloned().unwrap_or_default();
            out.add_scaled(c, &tensor(&LinComb::basis(e1.clone()), &image));
        }
        out - tensor(&LinComb::basis(e.clone()), &unit)
    });
    kernel_basis(&map)
}

/// Basis of the primitive elements among the enumerated basis.
pub fn primitives<H: HopfAlgebra + ?Sized>(h: &H) -> Vec<LinComb<H::Basis>> {
    primitives_up_to(h, h.cap())
}

/// Basis of the primitive elements spanned by basis symbols of degree at most `window`.
pub fn primitives_up_to<H: HopfAlgebra + ?Sized>(h: &H, window: Option<usize>) -> Vec<LinComb<H::Basis>> {
    let unit = h.unit();
    let map = LinMap::new(window_basis(h, window), |b| {
        let x = LinComb::basis(b.clone());
        h.coproduct(b) - tensor(&x, &unit) - tensor(&unit, &x)
    });
    kernel_basis(&map)
}

/// Group-like elements: every basis symbol that is group-like, followed by
/// the group-likes supported on exactly two basis symbols.
///
/// Complete for algebras whose group-likes are basis symbols or two-term
/// combinations; group-likes with larger support are not searched.
pub fn group_likes<H: Coalgebra + ?Sized>(h: &H) -> Vec<LinComb<H::Basis>> {
    let basis = h.basis();
    let mut out = Vec::new();
    for b in &basis {
        let x = LinComb::basis(b.clone());
        if is_group_like(h, &x) {
            out.push(x);
        }
    }
    for (i, a) in basis.iter().enumerate() {
        for b in &basis[i + 1..] {
            for (alpha, beta) in two_term_candidates(h, a, b) {
                let x = LinComb::from_terms([(a.clone(), alpha), (b.clone(), beta)]);
                if x.len() == 2 && is_group_like(h, &x) {
                    out.push(x);
                }
            }
        }
    }
    out
}

pub fn is_group_like<H: Coalgebra + ?Sized>(h: &H, x: &LinComb<H::Basis>) -> bool {
    h.counit_of(x) == Scalar::from_integer(1.into()) && h.comul(x) == tensor(x, x)
}

pub fn is_primitive<H: HopfAlgebra + ?Sized>(h: &H, x: &LinComb<H::Basis>) -> bool {
    let unit = h.unit();
    h.comul(x) == tensor(x, &unit) + tensor(&unit, x)
}

type Poly = [Scalar; 3];

fn poly_add(p: &Poly, q: &Poly, s: &Scalar) -> Poly {
    [&p[0] + s * &q[0], &p[1] + s * &q[1], &p[2] + s * &q[2]]
}

fn poly_mul(p: &Poly, q: &Poly) -> Poly {
    // operands have degree ≤ 1 here, so the product fits
    [&p[0] * &q[0], &p[0] * &q[1] + &p[1] * &q[0], &p[0] * &q[2] + &p[1] * &q[1] + &p[2] * &q[0]]
}

fn rational_sqrt(s: &Scalar) -> Option<Scalar> {
    if s.is_negative() {
        return None;
    }
    let n: &BigInt = s.numer();
    let d: &BigInt = s.denom();
    let (rn, rd) = (n.sqrt(), d.sqrt());
    (&rn * &rn == *n && &rd * &rd == *d).then(|| Scalar::new(rn, rd))
}

fn rational_roots(p: &Poly) -> Option<Vec<Scalar>> {
    if !p[2].is_zero() {
        let disc = &p[1] * &p[1] - Scalar::from_integer(4.into()) * &p[2] * &p[0];
        let Some(root) = rational_sqrt(&disc) else {
            return Some(vec![]);
        };
        let two_a = Scalar::from_integer(2.into()) * &p[2];
        Some(vec![(-&p[1] + &root) / &two_a, (-&p[1] - root) / two_a])
    } else if !p[1].is_zero() {
        Some(vec![-&p[0] / &p[1]])
    } else if !p[0].is_zero() {
        Some(vec![])
    } else {
        None
    }
}

/// Candidate coefficient pairs for a group-like `αa + βb`: the counit
/// condition fixes one coefficient as an affine function of the other, which
/// turns every coefficient of `Δx − x⊗x` into a polynomial of degree ≤ 2.
fn two_term_candidates<H: Coalgebra + ?Sized>(h: &H, a: &H::Basis, b: &H::Basis) -> Vec<(Scalar, Scalar)> {
    let (ea, eb) = (h.counit(a), h.counit(b));
    let zero = Scalar::zero();
    let one = Scalar::from_integer(1.into());
    // (alpha, beta) as polynomials in the free parameter t
    let (alpha, beta): (Poly, Poly) = if !eb.is_zero() {
        ([zero.clone(), one.clone(), zero.clone()], [&one / &eb, -&ea / &eb, zero.clone()])
    } else if !ea.is_zero() {
        ([&one / &ea, zero.clone(), zero.clone()], [zero.clone(), one.clone(), zero.clone()])
    } else {
        return Vec::new();
    };
    let da = h.coproduct(a);
    let db = h.coproduct(b);
    let mut symbols: Vec<(H::Basis, H::Basis)> = da.support().chain(db.support()).cloned().collect();
    for s in [(a, a), (a, b), (b, a), (b, b)] {
        symbols.push((s.0.clone(), s.1.clone()));
    }
    symbols.sort();
    symbols.dedup();

    let aa = poly_mul(&alpha, &alpha);
    let ab = poly_mul(&alpha, &beta);
    let bb = poly_mul(&beta, &beta);
    let mut roots: Option<Vec<Scalar>> = None;
    for t in &symbols {
        let mut p = poly_add(&poly_add(&[zero.clone(), zero.clone(), zero.clone()], &alpha, &da.coeff(t)), &beta, &db.coeff(t));
        let neg = -one.clone();
        if t.0 == *a && t.1 == *a {
            p = poly_add(&p, &aa, &neg);
        }
        if (t.0 == *a && t.1 == *b) || (t.0 == *b && t.1 == *a) {
            p = poly_add(&p, &ab, &neg);
        }
        if t.0 == *b && t.1 == *b {
            p = poly_add(&p, &bb, &neg);
        }
        if let Some(rs) = rational_roots(&p) {
            roots = Some(match roots {
                None => rs,
                Some(prev) => prev.into_iter().filter(|r| rs.contains(r)).collect(),
            });
        }
    }
    let eval = |p: &Poly, t: &Scalar| &p[0] + &p[1] * t + &p[2] * t * t;
    roots
        .unwrap_or_default()
        .into_iter()
        .map(|t| (eval(&alpha, &t), eval(&beta, &t)))
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::int;

    #[test]
    fn quadratic_roots_are_rational_or_absent() {
        let p: Poly = [int(-4), int(0), int(1)];
        let mut r = rational_roots(&p).unwrap();
        r.sort();
        assert_eq!(r, vec![int(-2), int(2)]);
        assert_eq!(rational_roots(&[int(-2), int(0), int(1)]), Some(vec![]));
        assert_eq!(rational_roots(&[int(0), int(0), int(0)]), None);
        assert_eq!(rational_roots(&[int(3), int(0), int(0)]), Some(vec![]));
    }
}
