//! Acceptance suite. Run with
//! `cargo test -p hopfwreath --release --test acceptance -- --nocapture`
//! to see one line per criterion.

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::Instant;

use hopfwreath::group::{
    builtin_group, builtin_group_extension, find_isomorphism, group_round_trip, measuring_group_iso, GroupAlgebra,
    BUILTIN_GROUPS, BUILTIN_GROUP_EXTENSIONS,
};
use hopfwreath::hopf::{
    check_algebra, check_axioms, convolution_inverse, group_likes, identity_map, primitives_up_to, FreeModule,
    HopfAlgebra,
};
use hopfwreath::lie::{
    builtin_lie, builtin_lie_extension, cancel_lemma_check, coalgebra_section, kk_embed_lie, Envelope, BUILTIN_LIE,
    BUILTIN_LIE_EXTENSIONS,
};
use hopfwreath::linear::{LinComb, SpanBasis};
use hopfwreath::smash::{basis_group, c2_crossed_c2, group_wreath_comparison, wreath_hopf_group, wreath_hopf_lie};

const N: usize = 4;

/// Outcome of one criterion: `Ok(detail)` or `Err(first failure)`.
type Outcome = Result<String, String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok { Ok(()) } else { Err(what()) }
}

fn hopf_axiom_suite() -> Outcome {
    for name in BUILTIN_GROUPS {
        let g = GroupAlgebra::new(builtin_group(name).unwrap());
        let r = check_axioms(&g, None);
        ensure(r.checks.len() == 5 && r.passed(), || format!("{name}: {:?}", r.failures()))?;
    }
    for name in BUILTIN_LIE {
        let u = Envelope::new(builtin_lie(name).unwrap(), N);
        let r = check_axioms(&u, None);
        ensure(r.checks.len() == 5 && r.passed(), || format!("U({name}): {:?}", r.failures()))?;
    }
    Ok(format!("{} groups, {} Lie algebras at N={N}", BUILTIN_GROUPS.len(), BUILTIN_LIE.len()))
}

fn measuring_dimension() -> Outcome {
    let names = |k: usize, p: &str| (0..k).map(|i| format!("{p}{i}")).collect::<Vec<_>>();
    for x in 1..=3usize {
        for y in 1..=3usize {
            let m = measuring_group_iso(names(x, "x"), names(y, "y"));
            let expected = y.pow(x as u32);
            ensure(m.dim() == expected, || format!("|X|={x} |Y|={y}: dim {} ≠ {expected}", m.dim()))?;
            ensure(group_likes(&m).len() == expected, || format!("|X|={x} |Y|={y}: group-likes"))?;
            // each basis element evaluates as a distinct function X → Y
            let tables: BTreeSet<Vec<usize>> =
                m.basis().iter().map(|f| (0..x).map(|i| m.evaluate(f, i)).collect()).collect();
            ensure(tables.len() == expected, || format!("|X|={x} |Y|={y}: evaluation not injective"))?;
        }
    }
    Ok("|X|,|Y| ∈ {1,2,3}".into())
}

fn group_wreath_tables() -> Outcome {
    for (a, q) in [("C2", "C2"), ("C2", "C3"), ("C3", "C2")] {
        let (ga, gq) = (Arc::new(builtin_group(a).unwrap()), Arc::new(builtin_group(q).unwrap()));
        let r = group_wreath_comparison(&ga, &gq).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("({a},{q}): {:?}", r.failures()))?;
    }
    Ok("(C2,C2), (C2,C3), (C3,C2); largest dim 24".into())
}

fn group_kk_round_trip() -> Outcome {
    for name in BUILTIN_GROUP_EXTENSIONS {
        let ext = builtin_group_extension(name).unwrap();
        let trip = group_round_trip(&ext).map_err(|e| format!("{name}: {e}"))?;
        let r = trip.embedding.check();
        ensure(r.passed(), || format!("{name}: {:?}", r.failures()))?;
        ensure(trip.isomorphism.is_some(), || format!("{name}: recovered extension not isomorphic"))?;
        ensure(trip.conjugator.is_some(), || format!("{name}: no conjugator"))?;
    }
    Ok(BUILTIN_GROUP_EXTENSIONS.join(", "))
}

fn cancel_lemma() -> Outcome {
    let mut count = 0;
    for name in BUILTIN_LIE_EXTENSIONS {
        let ext = builtin_lie_extension(name).unwrap();
        let section = coalgebra_section(&ext, N);
        for u in section.quotient_env.monomials_up_to(3) {
            for q in 0..ext.quotient.dim() {
                count += 1;
                ensure(cancel_lemma_check(&section, q, &u), || format!("{name}: q={q}, u={u:?}"))?;
            }
        }
    }
    Ok(format!("{count} (q, u) pairs, zero failures"))
}

fn lie_kk() -> Outcome {
    for name in BUILTIN_LIE_EXTENSIONS {
        let ext = builtin_lie_extension(name).unwrap();
        let r = kk_embed_lie(&ext, N).map_err(|e| format!("{name}: {e}"))?.check(None);
        for family in ["homomorphism", "injective", "projection"] {
            ensure(r.get(family).is_some(), || format!("{name}: missing {family}"))?;
        }
        ensure(r.passed(), || format!("{name}: {:?}", r.failures()))?;
    }
    Ok(BUILTIN_LIE_EXTENSIONS.join(", "))
}

fn lie_wreath_bracket() -> Outcome {
    let small: Vec<_> = BUILTIN_LIE.iter().filter(|n| builtin_lie(n).unwrap().dim() <= 2).collect();
    let mut pairs = 0;
    for a in &small {
        for q in &small {
            let hopf = wreath_hopf_lie(builtin_lie(a).unwrap(), builtin_lie(q).unwrap(), N).map_err(|e| e.to_string())?;
            let r = hopf.bracket_comparison(None);
            ensure(r.passed(), || format!("{a} ≀ {q}: {:?}", r.failures()))?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} (𝔞, 𝔮) pairs at N={N}"))
}

fn crossed_witness() -> Outcome {
    for (twisted, target) in [(true, "C4"), (false, "C2xC2")] {
        let cp = c2_crossed_c2(twisted);
        let r = check_algebra(&cp, None);
        ensure(r.passed(), || format!("twisted={twisted}: {:?}", r.failures()))?;
        let g = basis_group("crossed", &cp).ok_or_else(|| format!("twisted={twisted}: basis not a group"))?;
        let found = find_isomorphism(&g, &builtin_group(target).unwrap());
        ensure(found.is_some(), || format!("twisted={twisted}: not isomorphic to {target}"))?;
    }
    Ok("nontrivial σ ≅ 𝕜C4, trivial σ ≅ 𝕜(C2×C2)".into())
}

fn inverse_is_antipode<H: HopfAlgebra>(h: &H, what: &str) -> Result<(), String> {
    let kappa = convolution_inverse(&identity_map(h), h, h).map_err(|e| format!("{what}: {e}"))?;
    for b in h.basis() {
        let image = kappa.apply(&LinComb::basis(b.clone())).map_err(|e| format!("{what}: {e}"))?;
        ensure(image == h.antipode(&b), || format!("{what}: at {}", h.label(&b)))?;
    }
    Ok(())
}

fn convolution_inverse_suite() -> Outcome {
    for name in BUILTIN_GROUPS {
        inverse_is_antipode(&GroupAlgebra::new(builtin_group(name).unwrap()), name)?;
    }
    for name in BUILTIN_LIE {
        inverse_is_antipode(&Envelope::new(builtin_lie(name).unwrap(), N), name)?;
    }
    let hopf = wreath_hopf_group(builtin_group("C2").unwrap(), builtin_group("C2").unwrap()).map_err(|e| e.to_string())?;
    inverse_is_antipode(&*hopf.smash, "C2 ≀ C2")?;
    Ok("all builtin groups and Lie algebras, plus C2 ≀ C2".into())
}

fn structural_extraction() -> Outcome {
    for name in BUILTIN_GROUPS {
        let h = GroupAlgebra::new(builtin_group(name).unwrap());
        let found: BTreeSet<String> = group_likes(&h).iter().map(|v| h.render(v)).collect();
        let expected: BTreeSet<String> = h.basis().iter().map(|b| h.label(b)).collect();
        ensure(found == expected, || format!("group-likes of 𝕜{name}"))?;
    }
    for name in BUILTIN_LIE {
        let u = Envelope::new(builtin_lie(name).unwrap(), N);
        let p = primitives_up_to(&u, Some(N));
        let dim = u.lie().dim();
        ensure(p.len() == dim, || format!("U({name}): {} primitives, expected {dim}", p.len()))?;
        let degree_one = SpanBasis::from_vectors(&(0..dim).map(|i| u.embed(&LinComb::basis(i))).collect::<Vec<_>>());
        ensure(p.iter().all(|v| degree_one.contains(v)), || format!("U({name}): primitive outside degree one"))?;
    }
    Ok("group-likes = G; primitives = degree-one span".into())
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("1 hopf axiom suite", hopf_axiom_suite),
        ("2 measuring dimension", measuring_dimension),
        ("3 group wreath product tables", group_wreath_tables),
        ("4 group embedding round trip", group_kk_round_trip),
        ("5 cancellation identity", cancel_lemma),
        ("6 Lie embedding", lie_kk),
        ("7 Lie wreath bracket", lie_wreath_bracket),
        ("8 crossed product witness", crossed_witness),
        ("9 convolution inverse", convolution_inverse_suite),
        ("10 structural extraction", structural_extraction),
    ];
    let mut failed = Vec::new();
    for (name, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let ms = start.elapsed().as_millis();
        match &outcome {
            Ok(detail) => println!("PASS  {name:32} {ms:>6} ms  {detail}"),
            Err(why) => {
                println!("FAIL  {name:32} {ms:>6} ms  {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
