use num_traits::One;
use serde::{Deserialize, Serialize};

use super::{flip, window_basis, window_pairs, Algebra, HopfAlgebra};
use crate::linear::{tensor, LinComb, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one axiom family. `violations` lists the witnesses by label:
/// one label for unary laws, two for laws on pairs, three for triples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomCheck {
    pub axiom: String,
    pub status: Status,
    pub violations: Vec<Vec<String>>,
}

impl AxiomCheck {
    pub fn new(axiom: impl Into<String>, violations: Vec<Vec<String>>) -> Self {
        let status = if violations.is_empty() { Status::Pass } else { Status::Fail };
        Self { axiom: axiom.into(), status, violations }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn push(&mut self, axiom: impl Into<String>, violations: Vec<Vec<String>>) {
        self.checks.push(AxiomCheck::new(axiom, violations));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(AxiomCheck::passed)
    }

    pub fn get(&self, axiom: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }

    pub fn extend(&mut self, other: AxiomReport) {
        self.checks.extend(other.checks);
    }

    /// Names of failing families, for error messages.
    pub fn failures(&self) -> Vec<String> {
        self.checks.iter().filter(|c| !c.passed()).map(|c| c.axiom.clone()).collect()
    }
}

/// Exhaustive check of the five cocommutative Hopf axiom families on all
/// basis elements (pairs for the bialgebra law) within `window`.
/// The window defaults to the algebra's own cap.
pub fn check_axioms<H: HopfAlgebra + ?Sized>(h: &H, window: Option<usize>) -> AxiomReport {
    let window = window.or(h.cap());
    let singles = window_basis(h, window);
    let pairs = window_pairs(h, window);
    let unit = h.unit();
    let mut report = AxiomReport::default();

    let mut bad = Vec::new();
    for b in &singles {
        let d = h.coproduct(b);
        let left = d.flat_map(|(x, y)| h.coproduct(x).map_basis(|(p, q)| (p.clone(), q.clone(), y.clone())));
        let right = d.flat_map(|(x, y)| h.coproduct(y).map_basis(|(p, q)| (x.clone(), p.clone(), q.clone())));
        if left != right {
            bad.push(vec![h.label(b)]);
        }
    }
    report.push("coassociativity", bad);

    let mut bad = Vec::new();
    for b in &singles {
        let d = h.coproduct(b);
        let own = LinComb::basis(b.clone());
        let left = d.flat_map(|(x, y)| LinComb::term(y.clone(), h.counit(x)));
        let right = d.flat_map(|(x, y)| LinComb::term(x.clone(), h.counit(y)));
        if left != own || right != own {
            bad.push(vec![h.label(b)]);
        }
    }
    report.push("counit", bad);

    let mut bad = Vec::new();
    if h.comul(&unit) != tensor(&unit, &unit) || h.counit_of(&unit) != Scalar::one() {
        bad.push(vec!["1".to_string(), "1".to_string()]);
    }
    for (a, b) in &pairs {
        let ab = h.product(a, b);
        let lhs = h.comul(&ab);
        let rhs = h.mul_tensor(&h.coproduct(a), &h.coproduct(b));
        if lhs != rhs || h.counit_of(&ab) != h.counit(a) * h.counit(b) {
            bad.push(vec![h.label(a), h.label(b)]);
        }
    }
    report.push("bialgebra", bad);

    let mut bad = Vec::new();
    for b in &singles {
        let d = h.coproduct(b);
        let expected = unit.scale(&h.counit(b));
        let mut left = LinComb::zero();
        let mut right = LinComb::zero();
        for ((x, y), c) in d.iter() {
            left.add_scaled(c, &h.mul(&h.antipode(x), &LinComb::basis(y.clone())));
            right.add_scaled(c, &h.mul(&LinComb::basis(x.clone()), &h.antipode(y)));
        }
        if left != expected || right != expected {
            bad.push(vec![h.label(b)]);
        }
    }
    report.push("antipode", bad);

    let mut bad = Vec::new();
    for b in &singles {
        let d = h.coproduct(b);
        if flip(&d) != d {
            bad.push(vec![h.label(b)]);
        }
    }
    report.push("cocommutativity", bad);
    report
}

/// Associativity on triples and the unit law, within `window`.
pub fn check_algebra<H: Algebra + ?Sized>(h: &H, window: Option<usize>) -> AxiomReport {
    let window = window.or(h.cap());
    let singles = window_basis(h, window);
    let unit = h.unit();
    let mut report = AxiomReport::default();

    let mut bad = Vec::new();
    for b in &singles {
        let own = LinComb::basis(b.clone());
        if h.mul(&unit, &own) != own || h.mul(&own, &unit) != own {
            bad.push(vec![h.label(b)]);
        }
    }
    report.push("unit", bad);

    let mut bad = Vec::new();
    for a in &singles {
        for b in &singles {
            for c in &singles {
                if let Some(w) = window {
                    if h.degree(a) + h.degree(b) + h.degree(c) > w {
                        continue;
                    }
                }
                let ab = h.product(a, b);
                let left = h.mul(&ab, &LinComb::basis(c.clone()));
                let bc = h.product(b, c);
                let right = h.mul(&LinComb::basis(a.clone()), &bc);
                if left != right {
                    bad.push(vec![h.label(a), h.label(b), h.label(c)]);
                }
            }
        }
    }
    report.push("associativity", bad);
    report
}
