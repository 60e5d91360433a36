use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::LieAlgebra;
use crate::error::{Error, Result};
use crate::linear::LinComb;

/// A PBW monomial: a weakly increasing sequence of basis indices (empty for
/// the unit). Ordered by length first, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<usize>);

impl Monomial {
    pub fn unit() -> Self {
        Self(Vec::new())
    }

    pub fn generator(i: usize) -> Self {
        Self(vec![i])
    }

    /// Sort the letters; only meaningful for letters that commute.
    pub fn sorted(mut letters: Vec<usize>) -> Self {
        letters.sort_unstable();
        Self(letters)
    }

    /// Wrap letters that are already weakly increasing.
    pub fn from_sorted(letters: Vec<usize>) -> Option<Self> {
        letters.windows(2).all(|w| w[0] <= w[1]).then_some(Self(letters))
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiplicity of each letter, as `(letter, count)` in increasing order.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &l in &self.0 {
            match out.last_mut() {
                Some((x, c)) if *x == l => *c += 1,
                _ => out.push((l, 1)),
            }
        }
        out
    }

    /// The monomial with the letters of both (a product in the symmetric algebra).
    pub fn merge(&self, other: &Monomial) -> Monomial {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Self::sorted(v)
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.multiplicities()
            .into_iter()
            .map(|(l, c)| if c == 1 { names[l].clone() } else { format!("{}^{c}", names[l]) })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// PBW multiplication in `U(𝔤)`, memoising right multiplication by a generator.
#[derive(Debug)]
pub struct PbwRing {
    lie: Arc<LieAlgebra>,
    cache: Mutex<HashMap<(Monomial, usize), LinComb<Monomial>>>,
}

impl Clone for PbwRing {
    fn clone(&self) -> Self {
        Self::new(self.lie.clone())
    }
}

impl PbwRing {
    pub fn new(lie: Arc<LieAlgebra>) -> Self {
        Self { lie, cache: Mutex::new(HashMap::new()) }
    }

    pub fn lie(&self) -> &Arc<LieAlgebra> {
        &self.lie
    }

    /// `m · x_g` in normal form, via `m'x_k·x_g = (m'·x_g)·x_k + m'·[x_k, x_g]`.
    pub fn mul_generator(&self, m: &Monomial, g: usize) -> LinComb<Monomial> {
        match m.0.last() {
            None => return LinComb::basis(Monomial::generator(g)),
            Some(&k) if k <= g => {
                let mut v = m.0.clone();
                v.push(g);
                return LinComb::basis(Monomial(v));
            }
            _ => {}
        }
        let key = (m.clone(), g);
        if let Some(hit) = self.cache.lock().expect("cache lock").get(&key) {
            return hit.clone();
        }
        let k = *m.0.last().expect("nonempty");
        let prefix = Monomial(m.0[..m.0.len() - 1].to_vec());
        let mut out = LinComb::zero();
        for (p, c) in self.mul_generator(&prefix, g).iter() {
            out.add_scaled(c, &self.mul_generator(p, k));
        }
        for (l, c) in self.lie.bracket_basis(k, g).iter() {
            out.add_scaled(c, &self.mul_generator(&prefix, *l));
        }
        self.cache.lock().expect("cache lock").insert(key, out.clone());
        out
    }

    pub fn mul_lincomb_generator(&self, x: &LinComb<Monomial>, g: usize) -> LinComb<Monomial> {
        x.flat_map(|m| self.mul_generator(m, g))
    }

    /// Normal form of the product of the letters in `word`, left to right.
    pub fn normalize_word(&self, word: &[usize]) -> LinComb<Monomial> {
        word.iter().fold(LinComb::basis(Monomial::unit()), |acc, &g| self.mul_lincomb_generator(&acc, g))
    }

    pub fn mul(&self, a: &Monomial, b: &Monomial) -> LinComb<Monomial> {
        b.0.iter().fold(LinComb::basis(a.clone()), |acc, &g| self.mul_lincomb_generator(&acc, g))
    }

    pub fn mul_lincomb(&self, x: &LinComb<Monomial>, y: &LinComb<Monomial>) -> LinComb<Monomial> {
        let mut out = LinComb::zero();
        for (b, d) in y.iter() {
            let right = b.0.iter().fold(x.clone(), |acc, &g| self.mul_lincomb_generator(&acc, g));
            out.add_scaled(d, &right);
        }
        out
    }
}

/// Normal form of a word of length at most `cap` in `U(𝔤)`.
pub fn pbw_normalize(word: &[usize], lie: &LieAlgebra, cap: usize) -> Result<LinComb<Monomial>> {
    if word.len() > cap {
        return Err(Error::DegreeOverflow { degree: word.len(), cap });
    }
    if let Some(&bad) = word.iter().find(|&&l| l >= lie.dim()) {
        return Err(Error::OutsideDomain(format!("letter {bad}")));
    }
    Ok(PbwRing::new(Arc::new(lie.clone())).normalize_word(word))
}

/// Normal form by rewriting adjacent inversions `x_j x_i → x_i x_j + [x_j, x_i]`,
/// where `choose` picks which inversion (by position in the offered list) to
/// rewrite next. Used to test independence from the rewrite order.
pub fn pbw_normalize_with(
    word: &[usize],
    lie: &LieAlgebra,
    mut choose: impl FnMut(&[usize]) -> usize,
) -> LinComb<Monomial> {
    let mut pending: LinComb<Vec<usize>> = LinComb::basis(word.to_vec());
    let mut done: LinComb<Monomial> = LinComb::zero();
    loop {
        let Some((w, c)) = pending.iter().next().map(|(w, c)| (w.clone(), c.clone())) else { break };
        pending.add_term(w.clone(), -c.clone());
        let inversions: Vec<usize> = (0..w.len().saturating_sub(1)).filter(|&p| w[p] > w[p + 1]).collect();
        if inversions.is_empty() {
            done.add_term(Monomial(w), c);
            continue;
        }
        let p = inversions[choose(&inversions) % inversions.len()];
        let mut swapped = w.clone();
        swapped.swap(p, p + 1);
        pending.add_term(swapped, c.clone());
        for (l, d) in lie.bracket_basis(w[p], w[p + 1]).iter() {
            let mut shorter = w[..p].to_vec();
            shorter.push(*l);
            shorter.extend_from_slice(&w[p + 2..]);
            pending.add_term(shorter, &c * d);
        }
    }
    done
}
