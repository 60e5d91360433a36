//! Sparse exact elimination: kernels, particular solutions, spans.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{LinComb, LinMap, Scalar};
use crate::error::{Error, Result};

type Row<K> = BTreeMap<K, Scalar>;

/// Echelon form built one row at a time. Each pivot row has a leading 1 and
/// carries a record of which inserted rows it is a combination of.
#[derive(Clone, Debug)]
struct Echelon<K: Ord> {
    pivots: BTreeMap<K, (Row<K>, LinComb<usize>)>,
    inserted: usize,
}

impl<K: Ord + Clone> Echelon<K> {
    fn new() -> Self {
        Self { pivots: BTreeMap::new(), inserted: 0 }
    }

    /// Reduce `row` against the current pivots; returns the remainder and the
    /// combination of earlier rows that was subtracted.
    fn reduce(&self, mut row: Row<K>) -> (Row<K>, LinComb<usize>) {
        let mut used = LinComb::zero();
        let mut cursor: Option<K> = None;
        loop {
            let next = match &cursor {
                None => row.keys().find(|c| self.pivots.contains_key(*c)).cloned(),
                Some(k) => row
                    .range((std::ops::Bound::Excluded(k.clone()), std::ops::Bound::Unbounded))
                    .map(|(c, _)| c)
                    .find(|c| self.pivots.contains_key(*c))
                    .cloned(),
            };
            let Some(col) = next else { break };
            let factor = row[&col].clone();
            let (prow, ptag) = &self.pivots[&col];
            for (c, v) in prow {
                let entry = row.entry(c.clone()).or_insert_with(Scalar::zero);
                *entry -= &factor * v;
                if entry.is_zero() {
                    row.remove(c);
                }
            }
            used.add_scaled(&factor, ptag);
            cursor = Some(col);
        }
        (row, used)
    }

    /// Insert a row; returns true when it raised the rank.
    fn insert(&mut self, row: Row<K>) -> bool {
        let id = self.inserted;
        self.inserted += 1;
        let (mut rest, used) = self.reduce(row);
        let Some((lead, lv)) = rest.iter().next().map(|(k, v)| (k.clone(), v.clone())) else {
            return false;
        };
        let inv = lv.recip();
        for v in rest.values_mut() {
            *v *= &inv;
        }
        let mut tag = LinComb::basis(id);
        tag.add_scaled(&-Scalar::one(), &used);
        self.pivots.insert(lead, (rest, tag.scale(&inv)));
        true
    }

    /// Bring to reduced row-echelon form.
    fn back_substitute(&mut self) {
        let cols: Vec<K> = self.pivots.keys().rev().cloned().collect();
        for p in cols {
            let (prow, ptag) = self.pivots[&p].clone();
            for (q, (row, tag)) in self.pivots.iter_mut() {
                if *q == p {
                    continue;
                }
                let Some(f) = row.get(&p).cloned() else { continue };
                for (c, v) in &prow {
                    let entry = row.entry(c.clone()).or_insert_with(Scalar::zero);
                    *entry -= &f * v;
                    if entry.is_zero() {
                        row.remove(c);
                    }
                }
                tag.add_scaled(&-f, &ptag);
            }
        }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }
}

fn column_rows<A: Ord + Clone + std::fmt::Debug, B: Ord + Clone>(m: &LinMap<A, B>) -> BTreeMap<B, Row<usize>> {
    let mut rows: BTreeMap<B, Row<usize>> = BTreeMap::new();
    for (j, (_, img)) in m.iter().enumerate() {
        for (b, c) in img.iter() {
            rows.entry(b.clone()).or_default().insert(j, c.clone());
        }
    }
    rows
}

/// Exact basis of `{v : M v = 0}` in reduced row-echelon canonical form: one
/// vector per free column, with coefficient 1 on that column.
pub fn kernel_basis<A: Ord + Clone + std::fmt::Debug, B: Ord + Clone>(m: &LinMap<A, B>) -> Vec<LinComb<A>> {
    let n = m.domain().len();
    let mut ech = Echelon::new();
    for (_, row) in column_rows(m) {
        ech.insert(row);
    }
    ech.back_substitute();
    let domain = m.domain();
    (0..n)
        .filter(|j| !ech.pivots.contains_key(j))
        .map(|free| {
            let mut v = LinComb::basis(domain[free].clone());
            for (p, (row, _)) in &ech.pivots {
                if let Some(c) = row.get(&free) {
                    v.add_term(domain[*p].clone(), -c.clone());
                }
            }
            v
        })
        .collect()
}

/// Some `v` with `M v = y`; free variables are set to zero.
pub fn solve<A: Ord + Clone + std::fmt::Debug, B: Ord + Clone>(m: &LinMap<A, B>, y: &LinComb<B>) -> Result<LinComb<A>> {
    let n = m.domain().len();
    let mut rows = column_rows(m);
    for (b, c) in y.iter() {
        rows.entry(b.clone()).or_default().insert(n, c.clone());
    }
    let mut ech = Echelon::new();
    for (_, row) in rows {
        ech.insert(row);
    }
    if ech.pivots.contains_key(&n) {
        return Err(Error::NoSolution);
    }
    ech.back_substitute();
    let domain = m.domain();
    Ok(LinComb::from_terms(
        ech.pivots.iter().filter_map(|(p, (row, _))| row.get(&n).map(|c| (domain[*p].clone(), c.clone()))),
    ))
}

/// Rank of a family of combinations.
pub fn rank<B: Ord + Clone>(vectors: &[LinComb<B>]) -> usize {
    let mut ech = Echelon::new();
    for v in vectors {
        ech.insert(v.iter().map(|(b, c)| (b.clone(), c.clone())).collect());
    }
    ech.rank()
}

/// Incrementally built span that can express members in terms of the
/// inserted generators.
#[derive(Clone, Debug)]
pub struct SpanBasis<B: Ord> {
    ech: Echelon<B>,
}

impl<B: Ord + Clone> Default for SpanBasis<B> {
    fn default() -> Self {
        Self { ech: Echelon::new() }
    }
}

impl<B: Ord + Clone> SpanBasis<B> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_vectors<'a, I: IntoIterator<Item = &'a LinComb<B>>>(vs: I) -> Self
    where
        B: 'a,
    {
        let mut s = Self::new();
        for v in vs {
            s.insert(v);
        }
        s
    }

    /// Insert the next generator (indexed by insertion order). Returns false
    /// if it was already in the span.
    pub fn insert(&mut self, v: &LinComb<B>) -> bool {
        self.ech.insert(v.iter().map(|(b, c)| (b.clone(), c.clone())).collect())
    }

    pub fn rank(&self) -> usize {
        self.ech.rank()
    }

    pub fn contains(&self, v: &LinComb<B>) -> bool {
        self.ech.reduce(v.iter().map(|(b, c)| (b.clone(), c.clone())).collect()).0.is_empty()
    }

    /// Coefficients `c_i` with `v = Σ c_i g_i` over the inserted generators,
    /// or `None` if `v` is outside the span. Dependent generators receive
    /// coefficient zero.
    pub fn coordinates(&self, v: &LinComb<B>) -> Option<LinComb<usize>> {
        let (rest, used) = self.ech.reduce(v.iter().map(|(b, c)| (b.clone(), c.clone())).collect());
        rest.is_empty().then_some(used)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::{int, ratio};

    fn map(pairs: &[(&'static str, LinComb<&'static str>)]) -> LinMap<&'static str, &'static str> {
        let domain: Vec<_> = pairs.iter().map(|(a, _)| *a).collect();
        let table: BTreeMap<_, _> = pairs.iter().cloned().collect();
        LinMap::new(domain, |a| table[a].clone())
    }

    #[test]
    fn zero_map_has_full_kernel() {
        let m = map(&[("a", LinComb::zero()), ("b", LinComb::zero()), ("c", LinComb::zero())]);
        let k = kernel_basis(&m);
        assert_eq!(k, vec![LinComb::basis("a"), LinComb::basis("b"), LinComb::basis("c")]);
    }

    #[test]
    fn identity_has_trivial_kernel() {
        let m = map(&[("a", LinComb::basis("a")), ("b", LinComb::basis("b"))]);
        assert!(kernel_basis(&m).is_empty());
    }

    #[test]
    fn two_by_two_kernel() {
        // M x = y, M y = y: column matrix [[0,0],[1,1]] → kernel spanned by x − y.
        let m = map(&[("x", LinComb::basis("y")), ("y", LinComb::basis("y"))]);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 1);
        // canonical form has 1 on the free column (y) and −1 on the pivot (x)
        assert_eq!(k[0], LinComb::from_terms([("x", int(-1)), ("y", int(1))]));
    }

    #[test]
    fn solve_cases() {
        let id = map(&[("a", LinComb::basis("a")), ("b", LinComb::basis("b"))]);
        let y = LinComb::from_terms([("a", int(3)), ("b", int(-1))]);
        assert_eq!(solve(&id, &y).unwrap(), y);

        let zero = map(&[("a", LinComb::zero())]);
        assert!(matches!(solve(&zero, &LinComb::basis("a")), Err(Error::NoSolution)));

        let half = map(&[("x", LinComb::term("y", int(2)))]);
        assert_eq!(solve(&half, &LinComb::basis("y")).unwrap(), LinComb::term("x", ratio(1, 2)));
    }

    #[test]
    fn span_coordinates() {
        let g0 = LinComb::from_terms([("a", int(1)), ("b", int(1))]);
        let g1 = LinComb::from_terms([("a", int(1)), ("b", int(-1))]);
        let s = SpanBasis::from_vectors([&g0, &g1]);
        assert_eq!(s.rank(), 2);
        let c = s.coordinates(&LinComb::basis("a")).unwrap();
        assert_eq!(c, LinComb::from_terms([(0, ratio(1, 2)), (1, ratio(1, 2))]));
        assert!(s.coordinates(&LinComb::basis("z")).is_none());
    }
}
