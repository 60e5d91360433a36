use std::collections::BTreeMap;
use std::sync::Arc;

use super::subhopf::SubHopf;
use super::wreath::{wreath_hopf_group, wreath_hopf_lie, GroupWreathHopf, GroupWreathSmash, LieWreathHopf};
use crate::error::{Error, Result};
use crate::group::{
    find_conjugator, find_extension_isomorphism, kk_embed_group, recover_extension_from_subgroup, GroupAlgebra,
    GroupEmbedding, GroupExtension, WreathGroup, WreathGroupElement,
};
use crate::hopf::{
    convolution_inverse, hopf_kernel, window_basis, Algebra, AxiomReport, Coalgebra, FreeModule, HopfAlgebra,
    HopfMorphism,
};
use crate::lie::{coalgebra_section, kk_embed_lie, Envelope, LieAlgebra, LieEmbedding, LieExtension, Monomial, WreathLieElement};
use crate::linear::{kernel_basis, rank, solve, tensor, LinComb, LinMap, SpanBasis};

/// A Hopf extension `A →ι E →π Q` with a cleavage `γ: Q → E` and, when
/// known, its convolution inverse `κ`.
pub struct CleftExtensionData<A: HopfAlgebra, E: HopfAlgebra, Q: HopfAlgebra> {
    pub kernel: Arc<A>,
    pub total: Arc<E>,
    pub quotient: Arc<Q>,
    pub iota: LinMap<A::Basis, E::Basis>,
    pub pi: LinMap<E::Basis, Q::Basis>,
    pub cleavage: LinMap<Q::Basis, E::Basis>,
    pub inverse: Option<LinMap<Q::Basis, E::Basis>>,
}

impl<A: HopfAlgebra, E: HopfAlgebra, Q: HopfAlgebra> Clone for CleftExtensionData<A, E, Q> {
    fn clone(&self) -> Self {
        Self {
            kernel: self.kernel.clone(),
            total: self.total.clone(),
            quotient: self.quotient.clone(),
            iota: self.iota.clone(),
            pi: self.pi.clone(),
            cleavage: self.cleavage.clone(),
            inverse: self.inverse.clone(),
        }
    }
}

impl<A: HopfAlgebra, E: HopfAlgebra, Q: HopfAlgebra> std::fmt::Debug for CleftExtensionData<A, E, Q> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CleftExtensionData")
            .field("iota", &self.iota)
            .field("pi", &self.pi)
            .field("cleavage", &self.cleavage)
            .finish()
    }
}

/// `γ` is a coalgebra morphism, `Σ γ(q)₁ ⊗ π(γ(q)₂) = Σ γ(q₁) ⊗ q₂`, and
/// `γ` has a two-sided convolution inverse, on `Q` basis symbols of degree
/// at most `window` (default: the cap of `Q`). A missing inverse is solved for.
pub fn cleavage_check<A, E, Q>(data: &CleftExtensionData<A, E, Q>, window: Option<usize>) -> AxiomReport
where
    A: HopfAlgebra,
    E: HopfAlgebra,
    Q: HopfAlgebra,
{
    let (e, q) = (&*data.total, &*data.quotient);
    let qs = window_basis(q, window.or(q.cap()));
    let gamma = |b: &Q::Basis| data.cleavage.apply_basis(b).unwrap_or_default();
    let mut report = AxiomReport::default();

    let mut coalgebra = Vec::new();
    let mut comodule = Vec::new();
    for b in &qs {
        let g = gamma(b);
        let mut pushed = LinComb::zero();
        let mut right = LinComb::zero();
        for ((b1, b2), c) in q.coproduct(b).iter() {
            pushed.add_scaled(c, &tensor(&gamma(b1), &gamma(b2)));
            right.add_scaled(c, &tensor(&gamma(b1), &LinComb::basis(b2.clone())));
        }
        if e.comul(&g) != pushed || e.counit_of(&g) != q.counit(b) {
            coalgebra.push(vec![q.label(b)]);
        }
        let mut left = LinComb::zero();
        for ((e1, e2), c) in e.comul(&g).iter() {
            let image = data.pi.apply_basis(e2).unwrap_or_default();
            left.add_scaled(c, &tensor(&LinComb::basis(e1.clone()), &image));
        }
        if left != right {
            comodule.push(vec![q.label(b)]);
        }
    }
    report.push("coalgebra-morphism", coalgebra);
    report.push("comodule", comodule);

    let kappa = match &data.inverse {
        Some(k) => Ok(k.clone()),
        None => convolution_inverse(&data.cleavage, q, e),
    };
    let bad = match kappa {
        Err(_) => vec![vec!["no convolution inverse".to_string()]],
        Ok(kappa) => {
            let k = |b: &Q::Basis| kappa.apply_basis(b).unwrap_or_default();
            let unit = e.unit();
            qs.iter()
                .filter(|b| {
                    let (mut left, mut right) = (LinComb::zero(), LinComb::zero());
                    for ((b1, b2), c) in q.coproduct(b).iter() {
                        left.add_scaled(c, &e.mul(&k(b1), &gamma(b2)));
                        right.add_scaled(c, &e.mul(&gamma(b1), &k(b2)));
                    }
                    let expected = unit.scale(&q.counit(b));
                    left != expected || right != expected
                })
                .map(|b| vec![q.label(b)])
                .collect()
        }
    };
    report.push("convolution-inverse", bad);
    report
}

pub type GroupCleftData = CleftExtensionData<GroupAlgebra, GroupAlgebra, GroupAlgebra>;
pub type LieCleftData = CleftExtensionData<Envelope, Envelope, Envelope>;

/// The group algebra extension `𝕜A → 𝕜E → 𝕜Q` with `γ(q) = s(q)`, `κ(q) = s(q)⁻¹`.
pub fn linearize_group_extension(ext: &GroupExtension) -> GroupCleftData {
    let (a, e, q) = (&ext.kernel, &ext.total, &ext.quotient);
    GroupCleftData {
        kernel: Arc::new(GroupAlgebra::new(a.clone())),
        total: Arc::new(GroupAlgebra::new(e.clone())),
        quotient: Arc::new(GroupAlgebra::new(q.clone())),
        iota: LinMap::new(a.elements().collect(), |x| LinComb::basis(ext.iota[*x])),
        pi: LinMap::new(e.elements().collect(), |x| LinComb::basis(ext.pi[*x])),
        cleavage: LinMap::new(q.elements().collect(), |x| LinComb::basis(ext.section[*x])),
        inverse: Some(LinMap::new(q.elements().collect(), |x| LinComb::basis(e.inv(ext.section[*x])))),
    }
}

/// `U(𝔞) → U(𝔢) → U(𝔮)` up to degree `n + 1`, with the cleavage induced by
/// the linear section and `κ = S∘γ`.
pub fn lie_cleft_data(ext: &LieExtension, n: usize) -> LieCleftData {
    let sec = coalgebra_section(ext, n + 1);
    let kernel = Envelope::new(ext.kernel.clone(), n + 1);
    let total = sec.total_env.clone();
    let quotient = sec.quotient_env.clone();
    let along = |maps: &[LinComb<usize>], target: &Envelope, u: &Monomial| {
        let factors: Vec<_> = u.letters().iter().map(|&l| maps[l].clone()).collect();
        target.product_of_vectors(&factors)
    };
    let iota = LinMap::new(kernel.basis(), |u| along(&ext.iota, &total, u));
    let pi = LinMap::new(total.basis(), |u| along(&ext.pi, &quotient, u));
    let cleavage = sec.as_linmap();
    let inverse = LinMap::new(quotient.basis(), |u| total.antipode_of(&sec.apply_monomial(u)));
    LieCleftData {
        kernel: Arc::new(kernel),
        total: Arc::new(total),
        quotient: Arc::new(quotient),
        iota,
        pi,
        cleavage,
        inverse: Some(inverse),
    }
}

fn first_witness(report: &AxiomReport) -> String {
    report
        .failures()
        .first()
        .map(|name| {
            let witness = report.get(name).and_then(|c| c.violations.first().cloned()).unwrap_or_default();
            format!("{name} {}", witness.join(", "))
        })
        .unwrap_or_default()
}

/// `α: 𝕜E → 𝕜(A^Q) # 𝕜Q`, `e ↦ u_f # π(e)` for `φ(e) = (f, π(e))`.
#[derive(Clone, Debug)]
pub struct GroupHopfEmbedding {
    pub data: GroupCleftData,
    pub hopf: GroupWreathHopf,
    pub alpha: HopfMorphism<GroupAlgebra, GroupWreathSmash>,
    pub embedding: GroupEmbedding,
}

pub fn alpha_embed_group(ext: &GroupExtension) -> Result<GroupHopfEmbedding> {
    let data = linearize_group_extension(ext);
    let cleft = cleavage_check(&data, None);
    if !cleft.passed() {
        return Err(Error::NotCleft(first_witness(&cleft)));
    }
    let embedding = kk_embed_group(ext)?;
    let kk = embedding.check();
    if let Some(c) = kk.get("homomorphism").filter(|c| !c.violations.is_empty()) {
        return Err(Error::HomomorphismFailure(c.violations[0].join(", ")));
    }
    let hopf = wreath_hopf_group(ext.kernel.clone(), ext.quotient.clone())?;
    let alpha = HopfMorphism::from_fn(data.total.clone(), hopf.smash.clone(), |x| {
        LinComb::basis(hopf.symbol(&embedding.wreath, embedding.phi[*x]))
    });
    Ok(GroupHopfEmbedding { data, hopf, alpha, embedding })
}

impl GroupHopfEmbedding {
    /// Hopf-morphism families, injectivity, `τ∘α = π`, and `α(ι(a)) = u_f # 1` with `f(1) = a`.
    pub fn check(&self) -> AxiomReport {
        let ext = &self.embedding.extension;
        let mut report = self.alpha.check(None);
        report.push("injective", if self.alpha.is_injective() { vec![] } else { vec![vec![ext.total.name().to_string()]] });
        let bad = ext
            .total
            .elements()
            .filter(|&x| {
                let image = self.alpha.apply(&LinComb::basis(x)).and_then(|v| self.hopf.tau.apply(&v));
                image.ok() != Some(LinComb::basis(ext.pi[x]))
            })
            .map(|x| vec![ext.total.label(x).to_string()])
            .collect();
        report.push("projection", bad);
        let one = ext.quotient.identity();
        let bad = ext
            .kernel
            .elements()
            .filter(|&a| {
                let image = self.alpha.apply(&LinComb::basis(ext.iota[a])).unwrap_or_default();
                image != LinComb::basis((self.smash_function(ext.iota[a]), one)) || self.smash_function(ext.iota[a])[one] != a
            })
            .map(|a| vec![ext.kernel.label(a).to_string()])
            .collect();
        report.push("kernel-evaluation", bad);
        report
    }

    fn smash_function(&self, e: usize) -> Vec<usize> {
        self.hopf.symbol(&self.embedding.wreath, self.embedding.phi[e]).0
    }

    /// `α(E)` as a spanning set of the smash product.
    pub fn image_span(&self) -> Vec<LinComb<(Vec<usize>, usize)>> {
        self.alpha.map().iter().map(|(_, v)| v.clone()).collect()
    }
}

/// The wreath group `A ≀ Q` underlying a group wreath Hopf algebra.
fn wreath_of(hopf: &GroupWreathHopf) -> Result<WreathGroup> {
    WreathGroup::new(hopf.smash.acted().group().clone(), hopf.smash.acting().group().clone())
}

/// Rebuild a cleft extension from a sub-Hopf-algebra of `𝕜(A^Q) # 𝕜Q` given
/// by a spanning set: `π = τ|E`, the kernel is `hker(π)`, which must map
/// isomorphically to `𝕜A` by evaluation at `1`.
pub fn recover_cleft_extension_group(
    hopf: &GroupWreathHopf,
    span: &[LinComb<(Vec<usize>, usize)>],
) -> Result<(GroupExtension, GroupCleftData)> {
    let sub = Arc::new(SubHopf::new(hopf.smash.clone(), span)?);
    let (a, q) = (hopf.smash.acted().group().clone(), hopf.smash.acting().group().clone());
    let projected: Vec<_> = sub.vectors().iter().map(|v| hopf.tau.apply(v)).collect::<Result<_>>()?;
    if rank(&projected) != q.order() {
        return Err(Error::NotSurjective);
    }
    let tau = HopfMorphism::from_fn(sub.clone(), hopf.tau.target().clone(), |i| projected[*i].clone());
    let hker = hopf_kernel(&tau);
    if hker.len() != a.order() {
        return Err(Error::KernelMismatch(format!("hker has dimension {} for |A| = {}", hker.len(), a.order())));
    }
    let wreath = wreath_of(hopf)?;
    let group_likes: Vec<usize> = hopf
        .smash
        .basis()
        .into_iter()
        .filter(|b| sub.contains(&LinComb::basis(b.clone())))
        .map(|(f, t)| wreath.index_of(&WreathGroupElement { f, q: t }))
        .collect();
    if group_likes.len() != sub.dim() {
        return Err(Error::NotClosed(format!("{} group-likes span a {}-dimensional subalgebra", group_likes.len(), sub.dim())));
    }
    let ext = recover_extension_from_subgroup(&wreath, &group_likes)?;
    let data = linearize_group_extension(&ext);
    Ok((ext, data))
}

/// Embed, recover from `α(E)`, and compare with the input.
#[derive(Clone, Debug)]
pub struct GroupHopfRoundTrip {
    pub embedding: GroupHopfEmbedding,
    pub recovered: GroupExtension,
    pub isomorphism: Option<Vec<usize>>,
    pub conjugator: Option<usize>,
}

impl GroupHopfRoundTrip {
    pub fn report(&self) -> AxiomReport {
        let mut report = self.embedding.check();
        let recovered = cleavage_check(&linearize_group_extension(&self.recovered), None);
        report.push("recovered-cleavage", recovered.failures().iter().map(|name| vec![name.clone()]).collect());
        report.push("isomorphism", if self.isomorphism.is_some() { vec![] } else { vec![vec!["none".into()]] });
        report.push("conjugation", if self.conjugator.is_some() { vec![] } else { vec![vec!["none".into()]] });
        report
    }
}

pub fn group_hopf_round_trip(ext: &GroupExtension) -> Result<GroupHopfRoundTrip> {
    let embedding = alpha_embed_group(ext)?;
    let (recovered, _) = recover_cleft_extension_group(&embedding.hopf, &embedding.image_span())?;
    let isomorphism = find_extension_isomorphism(ext, &recovered);
    let again = kk_embed_group(&recovered)?;
    let w = &embedding.embedding.wreath;
    let conjugator = find_conjugator(w.group(), &embedding.embedding.image(), &again.image());
    Ok(GroupHopfRoundTrip { embedding, recovered, isomorphism, conjugator })
}

type SmashSymbol = (Monomial, Monomial);

/// `α: U(𝔢) → U(Vect(U(𝔮)_{≤N}, 𝔞)) # U(𝔮)`, the multiplicative extension of
/// the Lie embedding. Images are tabulated on PBW monomials of degree `≤ N − 1`.
#[derive(Clone, Debug)]
pub struct LieHopfEmbedding {
    pub data: LieCleftData,
    pub hopf: LieWreathHopf,
    pub embedding: LieEmbedding,
    /// Primitive image of each basis vector of `𝔢`.
    pub generators: Vec<LinComb<SmashSymbol>>,
    table: BTreeMap<Monomial, LinComb<SmashSymbol>>,
}

pub fn alpha_embed_lie(ext: &LieExtension, n: usize) -> Result<LieHopfEmbedding> {
    if n < 2 {
        return Err(Error::InvalidLie("truncation must be at least 2".into()));
    }
    let data = lie_cleft_data(ext, n);
    let cleft = cleavage_check(&data, None);
    if !cleft.passed() {
        return Err(Error::NotCleft(first_witness(&cleft)));
    }
    let embedding = kk_embed_lie(ext, n)?;
    let kk = embedding.check(None);
    if let Some(c) = kk.get("homomorphism").filter(|c| !c.violations.is_empty()) {
        return Err(Error::HomomorphismFailure(c.violations[0].join(", ")));
    }
    let hopf = wreath_hopf_lie(ext.kernel.clone(), ext.quotient.clone(), n)?;
    let generators: Vec<_> = embedding.images.iter().map(|x| hopf.embed(x)).collect();
    let mut table = BTreeMap::new();
    let smash = &hopf.smash;
    for u in data.total.monomials_up_to(n - 1) {
        let image = match u.letters().split_last() {
            None => smash.unit(),
            Some((&last, rest)) => {
                let prefix: &LinComb<SmashSymbol> = &table[&Monomial::from_sorted(rest.to_vec()).expect("prefix of sorted")];
                smash.mul(prefix, &generators[last])
            }
        };
        table.insert(u, image);
    }
    Ok(LieHopfEmbedding { data, hopf, embedding, generators, table })
}

impl LieHopfEmbedding {
    pub fn truncation(&self) -> usize {
        self.hopf.truncation()
    }

    /// Highest PBW degree with a tabulated image.
    pub fn degree_bound(&self) -> usize {
        self.truncation() - 1
    }

    /// `α(x)` for `x` supported on tabulated monomials.
    pub fn apply(&self, x: &LinComb<Monomial>) -> Result<LinComb<SmashSymbol>> {
        x.try_flat_map(|u| {
            self.table.get(u).cloned().ok_or(Error::DegreeOverflow { degree: u.len(), cap: self.degree_bound() })
        })
    }

    /// Keep the terms whose function letters `δ_w a` all have `|w| ≤ k`;
    /// a product of `d` generators is exact there for `k = N + 1 − d`.
    pub fn project(&self, x: &LinComb<SmashSymbol>, k: usize) -> LinComb<SmashSymbol> {
        x.filter(|(h, _)| self.fits(h, k))
    }

    fn project_pair(&self, x: &LinComb<(SmashSymbol, SmashSymbol)>, k: usize) -> LinComb<(SmashSymbol, SmashSymbol)> {
        x.filter(|((h1, _), (h2, _))| self.fits(h1, k) && self.fits(h2, k))
    }

    fn fits(&self, h: &Monomial, k: usize) -> bool {
        let space = self.hopf.space();
        h.letters().iter().all(|&l| space.generator(l).0.len() <= k)
    }

    fn exact(&self, degree: usize) -> usize {
        (self.truncation() + 1).saturating_sub(degree)
    }

    /// Hopf-morphism families on PBW monomials of degree `≤ window` (default
    /// and maximum `N − 1`), compared after projecting to the exact part;
    /// injectivity, `τ∘α = π` and evaluation of `α(ι(a))` at `1`.
    pub fn check(&self, window: Option<usize>) -> AxiomReport {
        let bound = window.unwrap_or(self.degree_bound()).min(self.degree_bound());
        let (e, smash) = (&*self.data.total, &*self.hopf.smash);
        let monomials = e.monomials_up_to(bound);
        let render = |u: &Monomial| u.render(e.lie().basis_names());
        let mut report = AxiomReport::default();

        let unit_ok = self.table[&Monomial::unit()] == smash.unit();
        report.push("unit", if unit_ok { vec![] } else { vec![vec!["1".into()]] });

        let mut product = Vec::new();
        for u in &monomials {
            for v in &monomials {
                let d = u.len() + v.len();
                if d > bound {
                    continue;
                }
                let k = self.exact(d);
                let lhs = smash.mul(&self.table[u], &self.table[v]);
                let rhs = self.apply(&e.product(u, v));
                if rhs.map(|r| self.project(&r, k)).ok() != Some(self.project(&lhs, k)) {
                    product.push(vec![render(u), render(v)]);
                }
            }
        }
        report.push("product", product);

        let (mut coproduct, mut counit, mut antipode) = (Vec::new(), Vec::new(), Vec::new());
        for u in &monomials {
            let k = self.exact(u.len());
            let image = &self.table[u];
            let mut pushed = LinComb::zero();
            for ((u1, u2), c) in e.coproduct(u).iter() {
                pushed.add_scaled(c, &tensor(&self.table[u1], &self.table[u2]));
            }
            if self.project_pair(&smash.comul(image), k) != self.project_pair(&pushed, k) {
                coproduct.push(vec![render(u)]);
            }
            if smash.counit_of(image) != e.counit(u) {
                counit.push(vec![render(u)]);
            }
            let rhs = self.apply(&e.antipode(u));
            if rhs.map(|r| self.project(&r, k)).ok() != Some(self.project(&smash.antipode_of(image), k)) {
                antipode.push(vec![render(u)]);
            }
        }
        report.push("counit", counit);
        report.push("coproduct", coproduct);
        report.push("antipode", antipode);

        let k = self.exact(bound);
        let images: Vec<_> = monomials.iter().map(|u| self.project(&self.table[u], k)).collect();
        let injective = rank(&images) == images.len();
        report.push("injective", if injective { vec![] } else { vec![vec![e.lie().name().to_string()]] });

        // τ(h # q) = ε(h)·q, applied symbolically: images leave the enumerated basis
        let acted = smash.acted();
        let bad = monomials
            .iter()
            .filter(|u| {
                let lhs = self.table[*u].flat_map(|(h, q)| LinComb::term(q.clone(), acted.counit(h)));
                self.data.pi.apply_basis(u).ok() != Some(lhs)
            })
            .map(|u| vec![render(u)])
            .collect();
        report.push("projection", bad);

        let ext = &self.embedding.extension;
        let bad = (0..ext.kernel.dim())
            .filter(|&k| {
                let image = ext.iota[k].iter().fold(LinComb::zero(), |acc, (i, c)| acc + self.generators[*i].scale(c));
                let value = self.hopf.read_primitive(&image).and_then(|x| x.eval(&Monomial::unit()).ok());
                value != Some(LinComb::basis(k))
            })
            .map(|k| vec![ext.kernel.basis_name(k).to_string()])
            .collect();
        report.push("kernel-evaluation", bad);
        report
    }
}

/// Rebuild a Lie extension from primitive generators `f_i ⊕ q_i` of a
/// sub-Hopf-algebra of the Lie wreath Hopf algebra. Brackets are read from
/// smash-product commutators on monomials of degree `≤ N − 1`; `π` takes the
/// `𝔮`-parts and `ι` inverts evaluation at `1` on the kernel of `π`.
pub fn recover_cleft_extension_lie(
    hopf: &LieWreathHopf,
    generators: &[WreathLieElement],
) -> Result<(LieExtension, LieCleftData)> {
    let n = hopf.truncation();
    let wreath = &hopf.wreath;
    let (a, q) = (wreath.base().clone(), wreath.top().clone());
    let window = n;
    let coords: Vec<_> = generators.iter().map(|x| wreath.coordinates(&x.restrict(window))).collect();
    if rank(&coords) != generators.len() {
        return Err(Error::NotClosed("generators are dependent on the evaluation window".into()));
    }
    let span = SpanBasis::from_vectors(&coords);
    let embedded: Vec<_> = generators.iter().map(|x| hopf.embed(x)).collect();
    let mut brackets = vec![vec![LinComb::zero(); generators.len()]; generators.len()];
    for i in 0..generators.len() {
        for j in 0..generators.len() {
            let commutator = hopf.smash.commutator(&embedded[i], &embedded[j]);
            let read = hopf
                .read_primitive(&commutator)
                .ok_or_else(|| Error::NotClosed(format!("commutator of generators {i}, {j} is not primitive")))?;
            brackets[i][j] = span
                .coordinates(&wreath.coordinates(&read.restrict(window)))
                .ok_or_else(|| Error::NotClosed(format!("commutator of generators {i}, {j} leaves the span")))?;
        }
    }
    let names = (1..=generators.len()).map(|i| format!("e{i}")).collect();
    let total = Arc::new(LieAlgebra::new("recovered", names, brackets)?);

    let pi: Vec<LinComb<usize>> = generators.iter().map(|x| x.q.clone()).collect();
    if rank(&pi) != q.dim() {
        return Err(Error::NotSurjective);
    }
    let pi_map = LinMap::new((0..generators.len()).collect(), |i| pi[*i].clone());
    let kernel = kernel_basis(&pi_map);
    let at_one = |v: &LinComb<usize>| -> LinComb<usize> {
        v.flat_map(|i| generators[*i].f.get(&Monomial::unit()).cloned().unwrap_or_default())
    };
    let evaluated: Vec<_> = kernel.iter().map(at_one).collect();
    if kernel.len() != a.dim() || rank(&evaluated) != a.dim() {
        return Err(Error::KernelMismatch(format!(
            "kernel of π has dimension {} and evaluates onto rank {} for dim 𝔞 = {}",
            kernel.len(),
            rank(&evaluated),
            a.dim()
        )));
    }
    let eval_map = LinMap::new((0..kernel.len()).collect(), |k| evaluated[*k].clone());
    let iota = (0..a.dim())
        .map(|k| Ok(solve(&eval_map, &LinComb::basis(k))?.flat_map(|j| kernel[*j].clone())))
        .collect::<Result<Vec<_>>>()?;
    let section = (0..q.dim()).map(|j| solve(&pi_map, &LinComb::basis(j))).collect::<Result<Vec<_>>>()?;
    let ext = LieExtension::new(a, total, q, iota, pi, section)?;
    let data = lie_cleft_data(&ext, n);
    Ok((ext, data))
}

/// Embed `U(𝔢)`, recover an extension from the primitive generators of the
/// image, and compare structure constants, `ι`, `π` and the cleavage.
#[derive(Clone, Debug)]
pub struct LieHopfRoundTrip {
    pub embedding: LieHopfEmbedding,
    pub recovered: LieExtension,
}

impl LieHopfRoundTrip {
    pub fn report(&self) -> AxiomReport {
        let mut report = self.embedding.check(None);
        let (orig, rec) = (&self.embedding.embedding.extension, &self.recovered);
        let e = &*orig.total;
        let mut bad = Vec::new();
        for i in 0..e.dim() {
            for j in 0..e.dim() {
                if e.bracket_basis(i, j) != rec.total.bracket_basis(i, j) {
                    bad.push(vec![e.basis_name(i).to_string(), e.basis_name(j).to_string()]);
                }
            }
        }
        if e.dim() != rec.total.dim() {
            bad.push(vec![format!("dim {} vs {}", e.dim(), rec.total.dim())]);
        }
        report.push("structure-constants", bad);
        let same = orig.iota == rec.iota && orig.pi == rec.pi;
        report.push("iota-pi", if same { vec![] } else { vec![vec![rec.total.name().to_string()]] });
        let cleft = cleavage_check(&lie_cleft_data(rec, self.embedding.truncation()), None);
        report.push("recovered-cleavage", cleft.failures().iter().map(|name| vec![name.clone()]).collect());
        report
    }
}

pub fn lie_hopf_round_trip(ext: &LieExtension, n: usize) -> Result<LieHopfRoundTrip> {
    let embedding = alpha_embed_lie(ext, n)?;
    let (recovered, _) = recover_cleft_extension_lie(&embedding.hopf, &embedding.embedding.images)?;
    Ok(LieHopfRoundTrip { embedding, recovered })
}
