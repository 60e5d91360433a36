use std::sync::Arc;

use hopfwreath::group::{builtin_group, GroupAlgebra};
use hopfwreath::io;
use hopfwreath::lie::{builtin_lie, builtin_lie_extension, pbw_normalize};
use hopfwreath::linear::LinComb;
use hopfwreath::smash::{
    alpha_embed_lie, recover_cleft_extension_group, smash_product, wreath_hopf_group, wreath_hopf_lie, Cocycle,
    TableAction, SubHopf,
};
use hopfwreath::Error;

#[test]
fn unknown_builtins_are_reported_by_name() {
    assert!(matches!(io::load_group("builtin:A5"), Err(Error::UnknownBuiltin(n)) if n == "A5"));
    assert!(matches!(io::load_lie("builtin:so3"), Err(Error::UnknownBuiltin(_))));
}

#[test]
fn malformed_inputs_carry_a_path() {
    let err = io::parse_lie(r#"{"basis": ["x", "y"], "brackets": [{"i": "x", "j": "w", "value": {}}]}"#).unwrap_err();
    assert!(matches!(err, Error::Parse { .. }), "{err:?}");
    let err = io::parse_group(r#"{"name": "g", "elements": ["1", "a"], "mul": [["1", "a"], ["a", "a"]]}"#).unwrap_err();
    assert!(matches!(err, Error::InvalidGroup(_)), "{err:?}");
}

#[test]
fn jacobi_failure_is_invalid_lie() {
    let text = r#"{"basis": ["x", "y", "z"], "brackets": [
        {"i": "x", "j": "y", "value": {"x": "1"}},
        {"i": "y", "j": "z", "value": {"y": "1"}},
        {"i": "x", "j": "z", "value": {"z": "1"}}
    ]}"#;
    assert!(matches!(io::parse_lie(text), Err(Error::InvalidLie(_))));
}

#[test]
fn degree_overflow_in_normal_form() {
    let g = builtin_lie("sl2").unwrap();
    assert!(matches!(pbw_normalize(&[0, 1, 2], &g, 2), Err(Error::DegreeOverflow { degree: 3, cap: 2 })));
}

#[test]
fn sl2_quotient_is_unsupported() {
    let err = wreath_hopf_lie(builtin_lie("abelian-1").unwrap(), builtin_lie("sl2").unwrap(), 3);
    assert!(matches!(err, Err(Error::UnsupportedQuotient(_))));
}

#[test]
fn non_module_action_is_rejected() {
    let (q, h) = (Arc::new(builtin_group("C2").unwrap()), Arc::new(builtin_group("C3").unwrap()));
    let mut act = TableAction::new(Arc::new(GroupAlgebra::new(q)), Arc::new(GroupAlgebra::new(h)), Default::default());
    // g ⋆ e must be e
    act.set(1, 0, LinComb::basis(1));
    assert!(matches!(smash_product(act, None), Err(Error::ActionInvalid(_))));
}

#[test]
fn zero_cocycle_is_not_invertible() {
    let q = Arc::new(GroupAlgebra::new(builtin_group("C2").unwrap()));
    let h = GroupAlgebra::new(builtin_group("C2").unwrap());
    assert!(matches!(Cocycle::new(&q, &h, |_| LinComb::zero()), Err(Error::CocycleNotInvertible)));
}

#[test]
fn non_closed_span_is_rejected() {
    let g = Arc::new(GroupAlgebra::new(builtin_group("C4").unwrap()));
    assert!(matches!(SubHopf::new(g.clone(), &[LinComb::basis(1)]), Err(Error::NotClosed(_))));
    assert!(matches!(SubHopf::new(g.clone(), &[LinComb::basis(0), LinComb::basis(1)]), Err(Error::NotClosed(_))));
    assert_eq!(SubHopf::new(g, &[LinComb::basis(0), LinComb::basis(2)]).unwrap().dim(), 2);
}

#[test]
fn whole_wreath_product_is_not_a_cleft_image() {
    let hopf = wreath_hopf_group(builtin_group("C2").unwrap(), builtin_group("C2").unwrap()).unwrap();
    let all: Vec<_> = hopfwreath::hopf::FreeModule::basis(&*hopf.smash).into_iter().map(LinComb::basis).collect();
    assert!(matches!(recover_cleft_extension_group(&hopf, &all), Err(Error::KernelMismatch(_))));
}

#[test]
fn lie_embedding_needs_truncation_two() {
    let ext = builtin_lie_extension("heisenberg-over-abelian2").unwrap();
    assert!(alpha_embed_lie(&ext, 1).is_err());
}
