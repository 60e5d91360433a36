use proptest::prelude::*;

use hopfwreath::group::{builtin_group, find_isomorphism, FiniteGroup, GroupAlgebra, WreathGroup, BUILTIN_GROUPS};
use hopfwreath::hopf::{Algebra, Coalgebra, HopfAlgebra};
use hopfwreath::io::{group_to_json, lincomb_to_json, parse_group, parse_lincomb};
use hopfwreath::lie::{builtin_lie, Envelope, Monomial, BUILTIN_LIE};
use hopfwreath::linear::{kernel_basis, ratio, solve, tensor, LinComb, LinMap, Scalar};

fn scalar() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| ratio(n, d))
}

fn lincomb(basis: usize) -> impl Strategy<Value = LinComb<usize>> {
    prop::collection::vec((0..basis, scalar()), 0..5).prop_map(LinComb::from_terms)
}

fn group_element(order: usize) -> impl Strategy<Value = LinComb<usize>> {
    prop::collection::vec((0..order, -2i64..=2), 1..4).prop_map(|ts| LinComb::from_terms(ts.into_iter().map(|(b, c)| (b, ratio(c, 1)))))
}

fn tensor_mul<H: Algebra>(h: &H, x: &LinComb<(H::Basis, H::Basis)>, y: &LinComb<(H::Basis, H::Basis)>) -> LinComb<(H::Basis, H::Basis)> {
    let mut out = LinComb::zero();
    for ((a1, a2), c) in x.iter() {
        for ((b1, b2), d) in y.iter() {
            out.add_scaled(&(c * d), &tensor(&h.product(a1, b1), &h.product(a2, b2)));
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lincomb_module_laws(a in lincomb(6), b in lincomb(6), c in lincomb(6), s in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!((&a + &b).scale(&s), &a.scale(&s) + &b.scale(&s));
        prop_assert!((&a + &b).iter().all(|(_, x)| *x != ratio(0, 1)));
    }

    #[test]
    fn lie_brackets_are_antisymmetric_and_jacobi(which in 0..BUILTIN_LIE.len(), seed in prop::collection::vec(lincomb(3), 3)) {
        let g = builtin_lie(BUILTIN_LIE[which]).unwrap();
        let restrict = |v: &LinComb<usize>| v.filter(|i| *i < g.dim());
        let (x, y, z) = (restrict(&seed[0]), restrict(&seed[1]), restrict(&seed[2]));
        prop_assert!((g.bracket(&x, &y) + g.bracket(&y, &x)).is_zero());
        let jacobi = g.bracket(&x, &g.bracket(&y, &z)) + g.bracket(&y, &g.bracket(&z, &x)) + g.bracket(&z, &g.bracket(&x, &y));
        prop_assert!(jacobi.is_zero());
    }

    /// Normal forms do not depend on where a word is split.
    #[test]
    fn pbw_normal_form_is_confluent(which in 0..BUILTIN_LIE.len(), word in prop::collection::vec(0usize..3, 0..5), cut in 0usize..5) {
        let g = builtin_lie(BUILTIN_LIE[which]).unwrap();
        let word: Vec<usize> = word.into_iter().filter(|&i| i < g.dim()).collect();
        let u = Envelope::new(g, 4);
        let cut = cut.min(word.len());
        let whole = u.normalize_word(&word);
        let split = u.mul(&u.normalize_word(&word[..cut]), &u.normalize_word(&word[cut..]));
        prop_assert_eq!(&whole, &split);
        prop_assert!(whole.support().all(|m| Monomial::from_sorted(m.letters().to_vec()).is_some()));
    }

    #[test]
    fn envelope_structure_maps_respect_products(which in 0..BUILTIN_LIE.len(), a in prop::collection::vec(0usize..3, 0..3), b in prop::collection::vec(0usize..3, 0..3)) {
        let g = builtin_lie(BUILTIN_LIE[which]).unwrap();
        let keep = |w: Vec<usize>| w.into_iter().filter(|&i| i < g.dim()).collect::<Vec<_>>();
        let u = Envelope::new(g.clone(), 4);
        let (x, y) = (u.normalize_word(&keep(a)), u.normalize_word(&keep(b)));
        let xy = u.mul(&x, &y);
        prop_assert_eq!(u.comul(&xy), tensor_mul(&u, &u.comul(&x), &u.comul(&y)));
        prop_assert_eq!(u.antipode_of(&xy), u.mul(&u.antipode_of(&y), &u.antipode_of(&x)));
        prop_assert_eq!(u.counit_of(&xy), u.counit_of(&x) * u.counit_of(&y));
    }

    #[test]
    fn group_algebra_is_a_bialgebra(which in 0..BUILTIN_GROUPS.len(), x in group_element(8), y in group_element(8), z in group_element(8)) {
        let g = builtin_group(BUILTIN_GROUPS[which]).unwrap();
        let n = g.order();
        let h = GroupAlgebra::new(g);
        let fit = |v: &LinComb<usize>| v.map_basis(|b| b % n);
        let (x, y, z) = (fit(&x), fit(&y), fit(&z));
        prop_assert_eq!(h.mul(&h.mul(&x, &y), &z), h.mul(&x, &h.mul(&y, &z)));
        let xy = h.mul(&x, &y);
        prop_assert_eq!(h.comul(&xy), tensor_mul(&h, &h.comul(&x), &h.comul(&y)));
        prop_assert_eq!(h.antipode_of(&xy), h.mul(&h.antipode_of(&y), &h.antipode_of(&x)));
    }

    /// A relabelled copy of a builtin group is found isomorphic, and the map found is one.
    #[test]
    fn isomorphism_search_finds_relabellings(which in 0..BUILTIN_GROUPS.len(), perm in Just((0..8).collect::<Vec<usize>>()).prop_shuffle()) {
        let g = builtin_group(BUILTIN_GROUPS[which]).unwrap();
        let n = g.order();
        // restrict the shuffle of 0..8 to 0..n and keep the identity first
        let mut p: Vec<usize> = perm.into_iter().filter(|&i| i < n).collect();
        let e = p.iter().position(|&x| x == 0).unwrap();
        p.swap(0, e);
        let mut inv = vec![0; n];
        for (i, &x) in p.iter().enumerate() { inv[x] = i; }
        let labels = (0..n).map(|i| format!("x{i}")).collect();
        let table = (0..n).map(|a| (0..n).map(|b| p[g.mul(inv[a], inv[b])]).collect()).collect();
        let h = FiniteGroup::new("relabelled", labels, table).unwrap();
        let iso = find_isomorphism(&g, &h).expect("relabelling is an isomorphism");
        prop_assert!(g.is_homomorphism(&h, &iso));
    }

    #[test]
    fn wreath_top_projection_is_a_homomorphism(x in 0usize..24, y in 0usize..24) {
        let w = WreathGroup::new(builtin_group("C2").unwrap(), builtin_group("C3").unwrap()).unwrap();
        let (ex, ey) = (w.element(x), w.element(y));
        let xy = w.mul(&ex, &ey);
        let top = w.top();
        prop_assert_eq!(xy.q, top.mul(ex.q, ey.q));
        prop_assert_eq!(w.index_of(&xy), w.group().mul(x, y));
    }

    #[test]
    fn lincomb_json_round_trips(terms in prop::collection::vec((0usize..5, scalar()), 0..6)) {
        let x: LinComb<String> = LinComb::from_terms(terms.into_iter().map(|(b, c)| (format!("b{b}"), c)));
        prop_assert_eq!(parse_lincomb(&lincomb_to_json(&x).to_string()).unwrap(), x);
    }

    #[test]
    fn kernel_and_solve_agree_with_the_map(rows in prop::collection::vec(lincomb(4), 5), x in lincomb(5)) {
        let m = LinMap::new((0..5).collect(), |i: &usize| rows[*i].clone());
        for k in kernel_basis(&m) {
            prop_assert!(m.apply(&k).unwrap().is_zero());
        }
        let y = m.apply(&x).unwrap();
        let z = solve(&m, &y).unwrap();
        prop_assert_eq!(m.apply(&z).unwrap(), y);
    }
}

#[test]
fn builtin_groups_round_trip_through_json() {
    for name in BUILTIN_GROUPS {
        let g = builtin_group(name).unwrap();
        let back = parse_group(&group_to_json(&g).to_string()).unwrap();
        assert_eq!(back.table(), g.table(), "{name}");
        assert_eq!(back.labels(), g.labels(), "{name}");
    }
}
