use super::*;
use crate::liesuper::LieSuperalgebra;
use crate::scalar::int;
use proptest::prelude::*;

fn psi_ug() -> Ug {
    Ug::new(LieSuperalgebra::odd_abelian(&["psi"]), 4)
}

fn h(ug: &Ug, k: usize) -> HSeries {
    HSeries::monomial(ug.order(), k, int(1))
}

fn pure(ug: &Ug, legs: &[&str]) -> TensorElement {
    let parsed: Vec<UeaElement> = legs.iter().map(|w| ug.parse(w).unwrap()).collect();
    ug.tensor_of(&parsed.iter().collect::<Vec<_>>()).unwrap()
}

fn sum(parts: &[TensorElement]) -> TensorElement {
    parts
        .iter()
        .skip(1)
        .fold(parts[0].clone(), |acc, t| acc.add(t).unwrap())
}

#[test]
fn koszul_sign_in_products() {
    let ug = psi_ug();
    let a = pure(&ug, &["psi", "1"]);
    let b = pure(&ug, &["1", "psi"]);
    let psipsi = pure(&ug, &["psi", "psi"]);
    assert_eq!(ug.tensor_multiply(&a, &b).unwrap(), psipsi);
    assert_eq!(ug.tensor_multiply(&b, &a).unwrap(), psipsi.neg());
    assert_eq!(ug.tensor_multiply(&ug.tensor_unit(2), &psipsi).unwrap(), psipsi);
}

#[test]
fn twisting_map() {
    let ug = psi_ug();
    let psipsi = pure(&ug, &["psi", "psi"]);
    assert_eq!(ug.flip(&psipsi).unwrap(), psipsi.neg());
    let ab = Ug::new(LieSuperalgebra::abelian(&["X", "Y"]), 4);
    assert_eq!(ab.flip(&pure(&ab, &["X", "Y"])).unwrap(), pure(&ab, &["Y", "X"]));
    assert!(ug.twist_map(&psipsi, 1, 3).is_err());
}

#[test]
fn leg_embeddings() {
    let ug = psi_ug();
    let psipsi = pure(&ug, &["psi", "psi"]);
    assert_eq!(ug.embed_legs(&psipsi, 1, 2).unwrap(), pure(&ug, &["psi", "psi", "1"]));
    assert_eq!(ug.embed_legs(&psipsi, 1, 3).unwrap(), pure(&ug, &["psi", "1", "psi"]));
    assert_eq!(ug.embed_legs(&psipsi, 2, 3).unwrap(), pure(&ug, &["1", "psi", "psi"]));
    assert!(ug.embed_legs(&psipsi, 2, 2).is_err());
}

#[test]
fn coproduct_on_a_leg() {
    let ug = psi_ug();
    let psipsi = pure(&ug, &["psi", "psi"]);
    assert_eq!(
        ug.apply_coproduct_leg(&psipsi, 1).unwrap(),
        sum(&[pure(&ug, &["psi", "1", "psi"]), pure(&ug, &["1", "psi", "psi"])])
    );
    assert_eq!(
        ug.apply_coproduct_leg(&psipsi, 2).unwrap(),
        sum(&[pure(&ug, &["psi", "psi", "1"]), pure(&ug, &["psi", "1", "psi"])])
    );
    assert_eq!(ug.apply_coproduct_leg(&ug.tensor_unit(2), 1).unwrap(), ug.tensor_unit(3));
    assert!(ug.apply_coproduct_leg(&ug.tensor_unit(3), 1).is_err());
}

#[test]
fn inversion_examples() {
    let ug = psi_ug();
    let psipsi = pure(&ug, &["psi", "psi"]);
    let f = ug.tensor_unit(2).add(&psipsi.scale_series(&h(&ug, 1))).unwrap();
    let expected = ug.tensor_unit(2).sub(&psipsi.scale_series(&h(&ug, 1))).unwrap();
    assert_eq!(ug.tensor_invert(&f).unwrap(), expected);
    assert_eq!(ug.tensor_invert(&ug.tensor_unit(2)).unwrap(), ug.tensor_unit(2));
    assert!(matches!(ug.tensor_invert(&psipsi), Err(Error::NotInvertible(_))));

    let ab = Ug::new(LieSuperalgebra::abelian(&["X", "Y"]), 4);
    let xy = pure(&ab, &["X", "Y"]);
    let g = ab.tensor_unit(2).add(&xy.scale_series(&h(&ab, 1))).unwrap();
    let inv = ab.tensor_invert(&g).unwrap();
    // sum_k (-h)^k X^k⊗Y^k
    let mut expected = ab.tensor_unit(2);
    for k in 1..=4 {
        let w = |v: &str| if k == 1 { v.to_string() } else { format!("{v}^{k}") };
        let term = pure(&ab, &[&w("X"), &w("Y")]);
        let coeff = HSeries::monomial(4, k, int(if k % 2 == 0 { 1 } else { -1 }));
        expected = expected.add(&term.scale_series(&coeff)).unwrap();
    }
    assert_eq!(inv, expected);
    assert_eq!(ab.tensor_multiply(&g, &inv).unwrap(), ab.tensor_unit(2));
}

#[test]
fn antipode_on_legs() {
    let ug = psi_ug();
    let psipsi = pure(&ug, &["psi", "psi"]);
    assert_eq!(ug.antipode_legs(&psipsi).unwrap(), psipsi);
    assert_eq!(ug.antipode_legs(&ug.tensor_unit(2)).unwrap(), ug.tensor_unit(2));
    let ab = Ug::new(LieSuperalgebra::abelian(&["X", "Y"]), 4);
    let xy = pure(&ab, &["X", "Y"]);
    assert_eq!(ab.antipode_legs(&xy).unwrap(), xy);
}

#[test]
fn leg_count_mismatch_is_an_error() {
    let ug = psi_ug();
    let err = ug.tensor_multiply(&ug.tensor_unit(2), &ug.tensor_unit(3)).unwrap_err();
    assert_eq!(err, Error::LegCountMismatch { left: 2, right: 3 });
    assert!(ug.tensor_of(&[]).is_err());
}

#[test]
fn cyclic_permutation_sign() {
    // Moving psi⊗psi⊗psi cyclically crosses two odd pairs: sign +1.
    let ug = Ug::new(LieSuperalgebra::odd_abelian(&["a", "b", "c"]), 2);
    let abc = pure(&ug, &["a", "b", "c"]);
    assert_eq!(ug.permute_legs(&abc, &[2, 0, 1]).unwrap(), pure(&ug, &["c", "a", "b"]));
    assert_eq!(ug.permute_legs(&abc, &[1, 0, 2]).unwrap(), pure(&ug, &["b", "a", "c"]).neg());
}

fn gl11_tensor() -> impl Strategy<Value = Vec<(Vec<usize>, Vec<usize>, i64)>> {
    let word = prop::collection::vec(0usize..4, 0..=2);
    prop::collection::vec((word.clone(), word, -3i64..=3), 1..=3)
}

fn build(ug: &Ug, spec: &[(Vec<usize>, Vec<usize>, i64)]) -> TensorElement {
    spec.iter().fold(TensorElement::zero(2), |acc, (a, b, c)| {
        let t = ug
            .tensor_of(&[&ug.pbw_normalize(a).unwrap(), &ug.pbw_normalize(b).unwrap()])
            .unwrap()
            .scale(&int(*c));
        acc.add(&t).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn flip_is_an_involution(spec in gl11_tensor()) {
        let ug = Ug::new(LieSuperalgebra::gl(1, 1), 2);
        let t = build(&ug, &spec);
        prop_assert_eq!(ug.flip(&ug.flip(&t).unwrap()).unwrap(), t);
    }

    #[test]
    fn tensor_product_is_associative(a in gl11_tensor(), b in gl11_tensor(), c in gl11_tensor()) {
        let ug = Ug::new(LieSuperalgebra::gl(1, 1), 2);
        let (a, b, c) = (build(&ug, &a), build(&ug, &b), build(&ug, &c));
        let left = ug.tensor_multiply(&ug.tensor_multiply(&a, &b).unwrap(), &c).unwrap();
        let right = ug.tensor_multiply(&a, &ug.tensor_multiply(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn flip_is_multiplicative(a in gl11_tensor(), b in gl11_tensor()) {
        let ug = Ug::new(LieSuperalgebra::gl(1, 1), 2);
        let (a, b) = (build(&ug, &a), build(&ug, &b));
        let lhs = ug.flip(&ug.tensor_multiply(&a, &b).unwrap()).unwrap();
        let rhs = ug.tensor_multiply(&ug.flip(&a).unwrap(), &ug.flip(&b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn coproduct_is_multiplicative(a in prop::collection::vec(0usize..4, 0..=3), b in prop::collection::vec(0usize..4, 0..=3)) {
        let ug = Ug::new(LieSuperalgebra::gl(1, 1), 2);
        let (x, y) = (ug.pbw_normalize(&a).unwrap(), ug.pbw_normalize(&b).unwrap());
        let lhs = ug.coproduct0(&ug.multiply(&x, &y).unwrap());
        let rhs = ug.tensor_multiply(&ug.coproduct0(&x), &ug.coproduct0(&y)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
