use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};

/// A finite group given by its full multiplication table over indices
/// `0..order`, validated at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    lookup: HashMap<String, usize>,
}

impl FiniteGroup {
    /// Validate a multiplication table: square, closed, unique labels,
    /// associative, with identity and inverses.
    pub fn new(name: impl Into<String>, labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let name = name.into();
        let n = labels.len();
        let bad = |msg: String| Error::InvalidGroup(format!("{name}: {msg}"));
        if n == 0 {
            return Err(bad("empty element list".into()));
        }
        let mut lookup = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if lookup.insert(l.clone(), i).is_some() {
                return Err(bad(format!("duplicate label {l:?}")));
            }
        }
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(bad("multiplication table is not square".into()));
        }
        if table.iter().flatten().any(|&x| x >= n) {
            return Err(bad("table entry out of range".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| bad("no identity element".into()))?;
        let mut inverse = Vec::with_capacity(n);
        for x in 0..n {
            let y = (0..n)
                .find(|&y| table[x][y] == identity && table[y][x] == identity)
                .ok_or_else(|| bad(format!("{} has no inverse", labels[x])))?;
            inverse.push(y);
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(bad(format!(
                            "associativity fails at ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        Ok(Self { name, labels, table, identity, inverse, lookup })
    }

    /// Build from a closure on indices.
    pub fn from_fn(name: impl Into<String>, labels: Vec<String>, mul: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let n = labels.len();
        let table = (0..n).map(|a| (0..n).map(|b| mul(a, b)).collect()).collect();
        Self::new(name, labels, table)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.lookup.get(label).copied()
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Whether `subset` is closed under multiplication (hence a subgroup, being finite and nonempty).
    pub fn is_subgroup(&self, subset: &[usize]) -> bool {
        let set: BTreeSet<usize> = subset.iter().copied().collect();
        !set.is_empty() && set.iter().all(|&a| set.iter().all(|&b| set.contains(&self.mul(a, b))))
    }

    /// A small generating set, chosen greedily by decreasing element order.
    pub fn generators(&self) -> Vec<usize> {
        let mut by_order: Vec<usize> = self.elements().collect();
        by_order.sort_by_key(|&a| (std::cmp::Reverse(self.element_order(a)), a));
        let mut gens = Vec::new();
        let mut span: BTreeSet<usize> = [self.identity].into();
        for a in by_order {
            if span.len() == self.order() {
                break;
            }
            if !span.contains(&a) {
                gens.push(a);
                span = self.closure(&gens);
            }
        }
        gens
    }

    /// Subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> BTreeSet<usize> {
        let mut seen: BTreeSet<usize> = [self.identity].into();
        let mut queue: VecDeque<usize> = [self.identity].into();
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// Restrict to a subgroup given by an element list; indices are renumbered
    /// in the order given.
    pub fn subgroup(&self, name: impl Into<String>, elements: &[usize]) -> Result<Self> {
        let pos: HashMap<usize, usize> = elements.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let labels = elements.iter().map(|&x| self.labels[x].clone()).collect();
        let mut table = Vec::with_capacity(elements.len());
        for &a in elements {
            let mut row = Vec::with_capacity(elements.len());
            for &b in elements {
                let ab = self.mul(a, b);
                row.push(*pos.get(&ab).ok_or_else(|| {
                    Error::NotClosed(format!("{} * {} = {}", self.labels[a], self.labels[b], self.labels[ab]))
                })?);
            }
            table.push(row);
        }
        Self::new(name, labels, table)
    }

    pub fn is_homomorphism(&self, target: &FiniteGroup, map: &[usize]) -> bool {
        map.len() == self.order()
            && self
                .elements()
                .all(|a| self.elements().all(|b| map[self.mul(a, b)] == target.mul(map[a], map[b])))
    }
}

/// Search for an isomorphism `g → h` (as an index table) subject to a
/// per-element admissibility constraint. Generator images are chosen by
/// backtracking with pruning on element orders; each complete choice is
/// extended along the Cayley graph and checked.
pub fn find_isomorphism_with(
    g: &FiniteGroup,
    h: &FiniteGroup,
    admissible: &dyn Fn(usize, usize) -> bool,
) -> Option<Vec<usize>> {
    if g.order() != h.order() {
        return None;
    }
    let gens = g.generators();
    let h_orders: Vec<usize> = h.elements().map(|x| h.element_order(x)).collect();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&a| {
            let k = g.element_order(a);
            h.elements().filter(|&x| h_orders[x] == k && admissible(a, x)).collect()
        })
        .collect();
    let mut choice = vec![0; gens.len()];
    search(g, h, &gens, &candidates, &mut choice, 0, admissible)
}

fn search(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    choice: &mut Vec<usize>,
    depth: usize,
    admissible: &dyn Fn(usize, usize) -> bool,
) -> Option<Vec<usize>> {
    if depth == gens.len() {
        return extend(g, h, gens, choice).filter(|m| g.elements().all(|a| admissible(a, m[a])));
    }
    for &x in &candidates[depth] {
        choice[depth] = x;
        if let Some(m) = search(g, h, gens, candidates, choice, depth + 1, admissible) {
            return Some(m);
        }
    }
    None
}

fn extend(g: &FiniteGroup, h: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let n = g.order();
    let mut map = vec![usize::MAX; n];
    map[g.identity()] = h.identity();
    let mut queue: VecDeque<usize> = [g.identity()].into();
    while let Some(x) = queue.pop_front() {
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let image = h.mul(map[x], t);
            if map[y] == usize::MAX {
                map[y] = image;
                queue.push_back(y);
            } else if map[y] != image {
                return None;
            }
        }
    }
    let distinct: BTreeSet<usize> = map.iter().copied().collect();
    (distinct.len() == n && g.is_homomorphism(h, &map)).then_some(map)
}

pub fn find_isomorphism(g: &FiniteGroup, h: &FiniteGroup) -> Option<Vec<usize>> {
    find_isomorphism_with(g, h, &|_, _| true)
}
