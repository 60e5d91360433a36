use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use num_traits::{One, Zero};

use super::Scalar;

/// Marker for anything usable as a basis label: totally ordered, hashable, cheap to clone.
pub trait Basis: Clone + Ord + std::hash::Hash + fmt::Debug + Send + Sync + 'static {}

impl<T: Clone + Ord + std::hash::Hash + fmt::Debug + Send + Sync + 'static> Basis for T {}

/// A finitely supported rational combination of basis symbols.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// elements.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<B: Ord> {
    terms: BTreeMap<B, Scalar>,
}

impl<B: Ord> Default for LinComb<B> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<B: Ord + Clone> LinComb<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis vector `b` with coefficient one.
    pub fn basis(b: B) -> Self {
        Self::term(b, Scalar::one())
    }

    pub fn term(b: B, c: Scalar) -> Self {
        let mut out = Self::zero();
        out.add_term(b, c);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (B, Scalar)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (b, c) in iter {
            out.add_term(b, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: &B) -> Scalar {
        self.terms.get(b).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &Scalar)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    pub fn into_terms(self) -> BTreeMap<B, Scalar> {
        self.terms
    }

    /// The single basis symbol when `self` is exactly `1·b`.
    pub fn as_basis(&self) -> Option<&B> {
        match self.terms.iter().next() {
            Some((b, c)) if self.terms.len() == 1 && c.is_one() => Some(b),
            _ => None,
        }
    }

    pub fn add_term(&mut self, b: B, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += s·other`.
    pub fn add_scaled(&mut self, s: &Scalar, other: &Self) {
        if s.is_zero() {
            return;
        }
        for (b, c) in &other.terms {
            self.add_term(b.clone(), s * c);
        }
    }

    /// `a + s·b` with zero coefficients pruned.
    pub fn combine(&self, s: &Scalar, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(s, other);
        out
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(b, c)| (b.clone(), c * s)).collect() }
    }

    /// Relabel basis symbols; coefficients of colliding images are summed.
    pub fn map_basis<C: Ord + Clone>(&self, mut f: impl FnMut(&B) -> C) -> LinComb<C> {
        LinComb::from_terms(self.terms.iter().map(|(b, c)| (f(b), c.clone())))
    }

    /// Linear extension of a basis-level map.
    pub fn flat_map<C: Ord + Clone>(&self, mut f: impl FnMut(&B) -> LinComb<C>) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            out.add_scaled(c, &f(b));
        }
        out
    }

    /// Fallible linear extension.
    pub fn try_flat_map<C: Ord + Clone, E>(
        &self,
        mut f: impl FnMut(&B) -> Result<LinComb<C>, E>,
    ) -> Result<LinComb<C>, E> {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            out.add_scaled(c, &f(b)?);
        }
        Ok(out)
    }

    /// Keep only the terms whose symbol satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&B) -> bool) -> Self {
        Self {
            terms: self.terms.iter().filter(|(b, _)| keep(b)).map(|(b, c)| (b.clone(), c.clone())).collect(),
        }
    }

    pub fn render(&self, mut label: impl FnMut(&B) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (b, c)) in self.terms.iter().enumerate() {
            let neg = c < &Scalar::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !mag.is_one() {
                out.push_str(&mag.to_string());
                out.push('*');
            }
            out.push_str(&label(b));
        }
        out
    }
}

/// Bilinear tensor of two combinations over the pair basis.
pub fn tensor<A: Ord + Clone, B: Ord + Clone>(a: &LinComb<A>, b: &LinComb<B>) -> LinComb<(A, B)> {
    let mut out = LinComb::zero();
    for (x, c) in a.iter() {
        for (y, d) in b.iter() {
            out.add_term((x.clone(), y.clone()), c * d);
        }
    }
    out
}

impl<B: Ord + Clone> FromIterator<(B, Scalar)> for LinComb<B> {
    fn from_iter<I: IntoIterator<Item = (B, Scalar)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}

impl<B: Ord + Clone> Add for LinComb<B> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl<B: Ord + Clone> Add<&LinComb<B>> for &LinComb<B> {
    type Output = LinComb<B>;
    fn add(self, rhs: &LinComb<B>) -> LinComb<B> {
        self.combine(&Scalar::one(), rhs)
    }
}

impl<B: Ord + Clone> AddAssign for LinComb<B> {
    fn add_assign(&mut self, rhs: Self) {
        for (b, c) in rhs.terms {
            self.add_term(b, c);
        }
    }
}

impl<B: Ord + Clone> Sub for LinComb<B> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.combine(&-Scalar::one(), &rhs)
    }
}

impl<B: Ord + Clone> Sub<&LinComb<B>> for &LinComb<B> {
    type Output = LinComb<B>;
    fn sub(self, rhs: &LinComb<B>) -> LinComb<B> {
        self.combine(&-Scalar::one(), rhs)
    }
}

impl<B: Ord + Clone> Neg for LinComb<B> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(&-Scalar::one())
    }
}

impl<B: Ord + fmt::Debug> fmt::Debug for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(b, c)| (b, c.to_string()))).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::int;

    #[test]
    fn combine_doubles_and_cancels() {
        let x = LinComb::basis("x");
        assert_eq!(x.combine(&int(1), &x), LinComb::term("x", int(2)));
        assert!(x.combine(&int(-1), &x).is_zero());
    }

    #[test]
    fn combine_arithmetic() {
        let a = LinComb::from_terms([("x", int(2)), ("y", int(1))]);
        let b = LinComb::basis("y");
        assert_eq!(a.combine(&int(3), &b), LinComb::from_terms([("x", int(2)), ("y", int(4))]));
    }

    #[test]
    fn tensor_is_bilinear() {
        let a = LinComb::basis("a");
        assert!(tensor(&a, &LinComb::<&str>::zero()).is_zero());
        assert_eq!(tensor(&a, &LinComb::term("b", int(2))), LinComb::term(("a", "b"), int(2)));
        let ab = LinComb::from_terms([("a", int(1)), ("b", int(1))]);
        let c = LinComb::basis("c");
        assert_eq!(tensor(&ab, &c), LinComb::from_terms([(("a", "c"), int(1)), (("b", "c"), int(1))]));
    }

    #[test]
    fn render_signs() {
        let v = LinComb::from_terms([("x", int(1)), ("y", int(-2))]);
        assert_eq!(v.render(|s| s.to_string()), "x - 2*y");
        assert_eq!(LinComb::<&str>::zero().render(|s| s.to_string()), "0");
    }
}
