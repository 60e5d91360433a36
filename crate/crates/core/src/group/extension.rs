use std::collections::BTreeSet;
use std::sync::Arc;

use super::{cyclic, dihedral, direct_product, find_isomorphism_with, klein_four, FiniteGroup, WreathGroup, WreathGroupElement};
use crate::error::{Error, Result};
use crate::hopf::AxiomReport;

/// An extension `1 → A →ι E →π Q → 1` with a set-theoretic section `s` of `π`
/// normalised by `s(1) = 1`. All maps are index tables.
#[derive(Clone, Debug)]
pub struct GroupExtension {
    pub kernel: Arc<FiniteGroup>,
    pub total: Arc<FiniteGroup>,
    pub quotient: Arc<FiniteGroup>,
    pub iota: Vec<usize>,
    pub pi: Vec<usize>,
    pub section: Vec<usize>,
}

impl GroupExtension {
    pub fn new(
        kernel: impl Into<Arc<FiniteGroup>>,
        total: impl Into<Arc<FiniteGroup>>,
        quotient: impl Into<Arc<FiniteGroup>>,
        iota: Vec<usize>,
        pi: Vec<usize>,
        section: Vec<usize>,
    ) -> Result<Self> {
        let ext = Self { kernel: kernel.into(), total: total.into(), quotient: quotient.into(), iota, pi, section };
        ext.validate()?;
        Ok(ext)
    }

    fn validate(&self) -> Result<()> {
        let (a, e, q) = (&*self.kernel, &*self.total, &*self.quotient);
        let bad = |m: &str| Err(Error::InvalidExtension(m.to_string()));
        if self.iota.len() != a.order() || self.iota.iter().any(|&x| x >= e.order()) {
            return bad("ι is not a total map A → E");
        }
        if self.pi.len() != e.order() || self.pi.iter().any(|&x| x >= q.order()) {
            return bad("π is not a total map E → Q");
        }
        if !a.is_homomorphism(e, &self.iota) {
            return bad("ι is not a homomorphism");
        }
        if self.iota.iter().collect::<BTreeSet<_>>().len() != a.order() {
            return bad("ι is not injective");
        }
        if !e.is_homomorphism(q, &self.pi) {
            return bad("π is not a homomorphism");
        }
        if self.pi.iter().collect::<BTreeSet<_>>().len() != q.order() {
            return bad("π is not surjective");
        }
        let image: BTreeSet<usize> = self.iota.iter().copied().collect();
        let kernel: BTreeSet<usize> = e.elements().filter(|&x| self.pi[x] == q.identity()).collect();
        if image != kernel {
            return bad("image of ι differs from the kernel of π");
        }
        if self.section.len() != q.order() || self.section.iter().any(|&x| x >= e.order()) {
            return Err(Error::SectionInvalid("section is not a total map Q → E".into()));
        }
        for x in q.elements() {
            if self.pi[self.section[x]] != x {
                return Err(Error::SectionInvalid(q.label(x).to_string()));
            }
        }
        if self.section[q.identity()] != e.identity() {
            return Err(Error::SectionInvalid("section does not send 1 to 1".into()));
        }
        Ok(())
    }

    /// `ι⁻¹` on the image of `ι`.
    pub fn iota_inverse(&self, e: usize) -> Option<usize> {
        self.iota.iter().position(|&x| x == e)
    }
}

/// Names accepted by [`builtin_group_extension`].
pub const BUILTIN_GROUP_EXTENSIONS: &[&str] = &["c4-over-c2", "c2xc2-over-c2", "d4-over-center"];

/// `C2 → C4 → C2`, section `g ↦ g`.
pub fn c4_over_c2() -> GroupExtension {
    GroupExtension::new(cyclic(2), cyclic(4), cyclic(2), vec![0, 2], vec![0, 1, 0, 1], vec![0, 1])
        .expect("C4 over C2 is an extension")
}

/// `C2 → C2×C2 → C2` with kernel `⟨a⟩` and section `g ↦ b`.
pub fn c2xc2_over_c2() -> GroupExtension {
    GroupExtension::new(cyclic(2), klein_four(), cyclic(2), vec![0, 1], vec![0, 0, 1, 1], vec![0, 2])
        .expect("C2xC2 over C2 is an extension")
}

/// `Z(D4) → D4 → C2×C2` with `π(rⁱsʲ) = aⁱ bʲ` and section `aⁱbʲ ↦ rⁱsʲ`.
pub fn d4_over_center() -> GroupExtension {
    let pi = (0..8).map(|x| (x % 4 % 2) | ((x / 4) << 1)).collect();
    GroupExtension::new(cyclic(2), dihedral(4), klein_four(), vec![0, 2], pi, vec![0, 1, 4, 5])
        .expect("D4 over its center is an extension")
}

/// `A → A×Q → Q` with section `q ↦ (1, q)`.
pub fn split_extension(a: &FiniteGroup, q: &FiniteGroup) -> GroupExtension {
    let nq = q.order();
    let total = direct_product(a, q);
    let iota = a.elements().map(|x| x * nq + q.identity()).collect();
    let pi = total.elements().map(|x| x % nq).collect();
    let section = q.elements().map(|y| a.identity() * nq + y).collect();
    GroupExtension::new(a.clone(), total, q.clone(), iota, pi, section).expect("direct product is an extension")
}

pub fn builtin_group_extension(name: &str) -> Result<GroupExtension> {
    match name {
        "c4-over-c2" => Ok(c4_over_c2()),
        "c2xc2-over-c2" => Ok(c2xc2_over_c2()),
        "d4-over-center" => Ok(d4_over_center()),
        _ => Err(Error::UnknownBuiltin(name.to_string())),
    }
}

/// The embedding `φ: E → A ≀ Q`, `φ(e) = (q ↦ ι⁻¹(s(q)·e·s(q·π(e))⁻¹), π(e))`.
#[derive(Clone, Debug)]
pub struct GroupEmbedding {
    pub extension: GroupExtension,
    pub wreath: WreathGroup,
    /// Wreath index of `φ(e)` for each `E` index.
    pub phi: Vec<usize>,
}

pub fn kk_embed_group(ext: &GroupExtension) -> Result<GroupEmbedding> {
    let (e, q) = (&*ext.total, &*ext.quotient);
    for x in q.elements() {
        if ext.pi[ext.section[x]] != x {
            return Err(Error::SectionInvalid(q.label(x).to_string()));
        }
    }
    let wreath = WreathGroup::new(ext.kernel.clone(), ext.quotient.clone())?;
    let mut phi = Vec::with_capacity(e.order());
    for x in e.elements() {
        let px = ext.pi[x];
        let mut f = Vec::with_capacity(q.order());
        for t in q.elements() {
            let value = e.mul(e.mul(ext.section[t], x), e.inv(ext.section[q.mul(t, px)]));
            let a = ext.iota_inverse(value).ok_or_else(|| {
                Error::NotInKernel(format!("s({}) {} s({}·π({}))⁻¹", q.label(t), e.label(x), q.label(t), e.label(x)))
            })?;
            f.push(a);
        }
        phi.push(wreath.index_of(&WreathGroupElement { f, q: px }));
    }
    Ok(GroupEmbedding { extension: ext.clone(), wreath, phi })
}

impl GroupEmbedding {
    /// Pairs `(e, φ(e))` by label and wreath element.
    pub fn graph(&self) -> Vec<(String, WreathGroupElement)> {
        self.phi
            .iter()
            .enumerate()
            .map(|(x, &w)| (self.extension.total.label(x).to_string(), self.wreath.element(w)))
            .collect()
    }

    /// Image of `φ` as sorted wreath indices.
    pub fn image(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self.phi.iter().copied().collect();
        set.into_iter().collect()
    }

    /// Homomorphism, injectivity, `ρ∘φ = π`, and `φ(ι(a))` evaluating to `a` at `1`.
    pub fn check(&self) -> AxiomReport {
        let ext = &self.extension;
        let (e, w) = (&*ext.total, self.wreath.group());
        let mut report = AxiomReport::default();
        let mut bad = Vec::new();
        for x in e.elements() {
            for y in e.elements() {
                if self.phi[e.mul(x, y)] != w.mul(self.phi[x], self.phi[y]) {
                    bad.push(vec![e.label(x).to_string(), e.label(y).to_string()]);
                }
            }
        }
        report.push("homomorphism", bad);
        let distinct = self.image().len() == e.order();
        report.push("injective", if distinct { vec![] } else { vec![vec![e.name().to_string()]] });
        let bad = e
            .elements()
            .filter(|&x| self.wreath.rho(self.phi[x]) != ext.pi[x])
            .map(|x| vec![e.label(x).to_string()])
            .collect();
        report.push("projection", bad);
        let bad = ext
            .kernel
            .elements()
            .filter(|&a| self.wreath.eval_at_identity(self.phi[ext.iota[a]]) != a)
            .map(|a| vec![ext.kernel.label(a).to_string()])
            .collect();
        report.push("kernel-evaluation", bad);
        report
    }
}

/// Rebuild an extension from a subgroup `E ⊆ A ≀ Q` (given by wreath indices)
/// with `π = ρ|E` and `ι = (f ↦ f(1))⁻¹` on `E ∩ A^Q`.
pub fn recover_extension_from_subgroup(wreath: &WreathGroup, elements: &[usize]) -> Result<GroupExtension> {
    let w = wreath.group();
    let (a, q) = (wreath.base(), wreath.top());
    let set: BTreeSet<usize> = elements.iter().copied().collect();
    let elements: Vec<usize> = set.iter().copied().collect();
    if elements.is_empty() {
        return Err(Error::NotClosed("empty element list".into()));
    }
    let total = w.subgroup(format!("sub({})", w.name()), &elements)?;
    let pi: Vec<usize> = elements.iter().map(|&x| wreath.rho(x)).collect();
    if pi.iter().collect::<BTreeSet<_>>().len() != q.order() {
        return Err(Error::NotSurjective);
    }
    let kernel: Vec<usize> = (0..elements.len()).filter(|&i| pi[i] == q.identity()).collect();
    let mut iota = vec![usize::MAX; a.order()];
    for &i in &kernel {
        let value = wreath.eval_at_identity(elements[i]);
        if iota[value] != usize::MAX {
            return Err(Error::KernelMismatch(format!(
                "{} elements of E ∩ A^Q for {} elements of A",
                kernel.len(),
                a.order()
            )));
        }
        iota[value] = i;
    }
    if let Some(missing) = iota.iter().position(|&i| i == usize::MAX) {
        return Err(Error::KernelMismatch(format!("no element of E ∩ A^Q evaluates to {}", a.label(missing))));
    }
    let section = q
        .elements()
        .map(|t| {
            (0..elements.len())
                .filter(|&i| pi[i] == t)
                .min_by_key(|&i| (wreath.eval_at_identity(elements[i]) != a.identity(), i))
                .expect("π is surjective")
        })
        .collect();
    GroupExtension::new(a.clone(), total, q.clone(), iota, pi, section)
}

/// An isomorphism `θ: E → E'` with `θ∘ι = ι'` and `π'∘θ = π`, for two
/// extensions of the same kernel by the same quotient.
pub fn find_extension_isomorphism(x: &GroupExtension, y: &GroupExtension) -> Option<Vec<usize>> {
    if x.kernel.table() != y.kernel.table() || x.quotient.table() != y.quotient.table() {
        return None;
    }
    let admissible = |e: usize, e2: usize| -> bool {
        if x.pi[e] != y.pi[e2] {
            return false;
        }
        match x.iota_inverse(e) {
            Some(a) => y.iota[a] == e2,
            None => true,
        }
    };
    find_isomorphism_with(&x.total, &y.total, &admissible)
}

/// Some `g` in the ambient group with `g·S·g⁻¹ = T`.
pub fn find_conjugator(group: &FiniteGroup, s: &[usize], t: &[usize]) -> Option<usize> {
    let target: BTreeSet<usize> = t.iter().copied().collect();
    let source: BTreeSet<usize> = s.iter().copied().collect();
    if source.len() != target.len() {
        return None;
    }
    group.elements().find(|&g| {
        let gi = group.inv(g);
        source.iter().all(|&x| target.contains(&group.mul(group.mul(g, x), gi)))
    })
}

/// Embed, recover from the image, and compare.
#[derive(Clone, Debug)]
pub struct GroupRoundTrip {
    pub embedding: GroupEmbedding,
    pub recovered: GroupExtension,
    /// `θ: E → E_recovered` compatible with ι and π.
    pub isomorphism: Option<Vec<usize>>,
    /// An element of `A ≀ Q` conjugating the original image onto the image of the recovered extension.
    pub conjugator: Option<usize>,
}

impl GroupRoundTrip {
    pub fn passed(&self) -> bool {
        self.isomorphism.is_some() && self.conjugator.is_some() && self.embedding.check().passed()
    }
}

pub fn group_round_trip(ext: &GroupExtension) -> Result<GroupRoundTrip> {
    let embedding = kk_embed_group(ext)?;
    let recovered = recover_extension_from_subgroup(&embedding.wreath, &embedding.image())?;
    let isomorphism = find_extension_isomorphism(ext, &recovered);
    let again = kk_embed_group(&recovered)?;
    let conjugator = find_conjugator(embedding.wreath.group(), &embedding.image(), &again.image());
    Ok(GroupRoundTrip { embedding, recovered, isomorphism, conjugator })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{find_isomorphism, trivial_group};

    #[test]
    fn builtin_extensions_validate() {
        for name in BUILTIN_GROUP_EXTENSIONS {
            builtin_group_extension(name).unwrap();
        }
        assert!(builtin_group_extension("nope").is_err());
    }

    #[test]
    fn bad_section_is_rejected() {
        let err = GroupExtension::new(cyclic(2), cyclic(4), cyclic(2), vec![0, 2], vec![0, 1, 0, 1], vec![0, 2]);
        assert!(matches!(err, Err(Error::SectionInvalid(_))));
        let err = GroupExtension::new(cyclic(2), cyclic(4), cyclic(2), vec![0, 2], vec![0, 1, 0, 1], vec![2, 1]);
        assert!(matches!(err, Err(Error::SectionInvalid(_))));
    }

    #[test]
    fn c4_embeds_as_cyclic_subgroup() {
        let emb = kk_embed_group(&c4_over_c2()).unwrap();
        assert!(emb.check().passed());
        let image = emb.image();
        let sub = emb.wreath.group().subgroup("image", &image).unwrap();
        assert!(find_isomorphism(&sub, &cyclic(4)).is_some());
    }

    #[test]
    fn corrupted_extension_is_not_in_kernel() {
        let mut ext = c4_over_c2();
        // fields are public, so validation can be bypassed
        ext.iota = vec![0, 1];
        assert!(matches!(kk_embed_group(&ext), Err(Error::NotInKernel(_))));
    }

    #[test]
    fn split_extension_gives_constant_functions() {
        let ext = split_extension(&cyclic(3), &cyclic(2));
        let emb = kk_embed_group(&ext).unwrap();
        assert!(emb.check().passed());
        for a in 0..3 {
            let e = emb.wreath.element(emb.phi[ext.iota[a]]);
            assert_eq!(e.f, vec![a, a]);
            assert_eq!(e.q, 0);
        }
        for t in 0..2 {
            let e = emb.wreath.element(emb.phi[ext.section[t]]);
            assert_eq!(e.f, vec![0, 0]);
            assert_eq!(e.q, t);
        }
    }

    #[test]
    fn trivial_kernel() {
        let ext = split_extension(&trivial_group(), &cyclic(3));
        let emb = kk_embed_group(&ext).unwrap();
        for x in 0..3 {
            assert_eq!(emb.wreath.element(emb.phi[x]).q, ext.pi[x]);
        }
    }

    #[test]
    fn recovery_errors() {
        let w = WreathGroup::new(cyclic(2), cyclic(2)).unwrap();
        let all: Vec<usize> = (0..8).collect();
        assert!(matches!(recover_extension_from_subgroup(&w, &all), Err(Error::KernelMismatch(_))));
        let identity = w.group().identity();
        assert!(matches!(recover_extension_from_subgroup(&w, &[identity]), Err(Error::NotSurjective)));
    }

    #[test]
    fn round_trips() {
        for name in BUILTIN_GROUP_EXTENSIONS {
            let rt = group_round_trip(&builtin_group_extension(name).unwrap()).unwrap();
            assert!(rt.passed(), "{name}");
        }
    }
}
