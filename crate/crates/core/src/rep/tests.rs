use super::*;
use crate::liesuper::Parity;
use crate::scalar::{int, Rational};
use proptest::prelude::*;

fn w11() -> GradedSpace {
    GradedSpace::new(1, 1).unwrap()
}

fn mat(space: GradedSpace, rows: &[&[i64]]) -> GradedMatrix {
    let rows: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect();
    GradedMatrix::from_rows(space.parities(), 4, &rows).unwrap()
}

fn e12() -> GradedMatrix {
    mat(w11(), &[&[0, 1], &[0, 0]])
}

fn gl11_fundamental(ug: &Ug) -> Representation {
    let space = w11();
    let images = ug
        .algebra()
        .names()
        .iter()
        .map(|n| {
            let b = n.as_bytes();
            let (r, c) = ((b[1] - b'1') as usize, (b[2] - b'1') as usize);
            GradedMatrix::elementary(space.parities(), ug.order(), r, c)
        })
        .collect();
    Representation::new(space, images).unwrap()
}

fn psi_data() -> (Ug, Twist, Representation) {
    let ug = Ug::new(LieSuperalgebra::odd_abelian(&["psi"]), 4);
    let f = Twist::from_words(&ug, &[(1, "psi", "psi", int(1))]).unwrap();
    let rho = Representation::new(w11(), vec![e12()]).unwrap();
    (ug, f, rho)
}

#[test]
fn space_parities() {
    let w = GradedSpace::new(2, 1).unwrap();
    assert_eq!(w.parities(), [Parity::Even, Parity::Even, Parity::Odd]);
    assert_eq!(w11().tensor_parities(2), [Parity::Even, Parity::Odd, Parity::Odd, Parity::Even]);
    assert!(GradedSpace::new(0, 0).is_err());
}

#[test]
fn fundamental_and_odd_representations_are_valid() {
    let ug = Ug::new(LieSuperalgebra::gl(1, 1), 4);
    assert!(validate_representation(ug.algebra(), &gl11_fundamental(&ug)).is_valid());
    let (ug, _, rho) = psi_data();
    assert!(validate_representation(ug.algebra(), &rho).is_valid());
}

#[test]
fn even_image_for_odd_generator_is_a_homogeneity_violation() {
    let (ug, _, _) = psi_data();
    let rho = Representation::new(w11(), vec![mat(w11(), &[&[1, 0], &[0, 1]])]).unwrap();
    let report = validate_representation(ug.algebra(), &rho);
    assert_eq!(report.first().unwrap().rule, Rule::Homogeneity);
    // psi^2 = 0 in U(g) but the identity squares to itself.
    assert!(report.of_rule(Rule::Homomorphism).next().is_some());
}

#[test]
fn wrong_image_count_is_a_dimension_violation() {
    let ug = Ug::new(LieSuperalgebra::gl(1, 1), 4);
    let rho = Representation::new(w11(), vec![e12()]).unwrap();
    assert_eq!(validate_representation(ug.algebra(), &rho).first().unwrap().rule, Rule::Dimension);
}

#[test]
fn pushed_r_matrix_of_the_odd_twist() {
    let (ug, f, rho) = psi_data();
    let r = matrix_r(&ug, &f, &rho, false).unwrap();
    let mut expected = GradedMatrix::identity(w11().tensor_parities(2), 4);
    // (e12⊗e12)(w2⊗w2) = (-1)^{|e12||w2|} w1⊗w1 = -w1⊗w1.
    expected.set(0, 3, HSeries::monomial(4, 1, int(-2)));
    assert_eq!(r, expected);
}

#[test]
fn identity_twist_gives_identity_matrix() {
    let (ug, _, rho) = psi_data();
    let r = matrix_r(&ug, &Twist::identity(&ug), &rho, false).unwrap();
    assert_eq!(r, GradedMatrix::identity(w11().tensor_parities(2), 4));
}

#[test]
fn scalar_representation_of_abelian_exponential_twist() {
    let ug = Ug::new(LieSuperalgebra::abelian(&["X", "Y"]), 4);
    let xy = ug.tensor_of(&[&ug.generator(0), &ug.generator(1)]).unwrap();
    let f = Twist::exponential(&ug, &xy).unwrap();
    let space = GradedSpace::new(1, 0).unwrap();
    let rho = Representation::new(space, vec![mat(space, &[&[3]]), mat(space, &[&[-5]])]).unwrap();
    let r = matrix_r(&ug, &f, &rho, false).unwrap();
    assert_eq!(r, GradedMatrix::identity(space.tensor_parities(2), 4));
}

#[test]
fn qybe_holds_in_both_formulations() {
    let (ug, f, rho) = psi_data();
    let r = matrix_r(&ug, &f, &rho, false).unwrap();
    let report = check_super_qybe(&r, w11()).unwrap();
    assert!(report.holds(), "{report:?}");
    let id = GradedMatrix::identity(w11().tensor_parities(2), 4);
    assert!(check_super_qybe(&id, w11()).unwrap().holds());
}

#[test]
fn qybe_rejects_odd_entries() {
    let mut r = GradedMatrix::identity(w11().tensor_parities(2), 4);
    r.set(0, 1, HSeries::monomial(4, 1, int(1)));
    assert!(matches!(check_super_qybe(&r, w11()), Err(Error::EvennessViolation(_))));
}

#[test]
fn qybe_failure_is_localized() {
    // An even matrix that is not a solution: swap-like mixing of w1⊗w1 and w2⊗w2.
    let mut r = GradedMatrix::identity(w11().tensor_parities(2), 4);
    r.set(0, 3, HSeries::monomial(4, 1, int(1)));
    r.set(3, 0, HSeries::monomial(4, 1, int(1)));
    let report = check_super_qybe(&r, w11()).unwrap();
    assert!(!report.embedded.holds);
    assert!(!report.component.holds);
    assert!(report.agreement.holds);
    assert!(report.embedded.counterexample.unwrap().starts_with("h^"));
}

#[test]
fn naive_kronecker_differs_from_graded_action() {
    let graded = GradedMatrix::graded_kron(&e12(), &e12()).unwrap();
    let naive = GradedMatrix::kron(&e12(), &e12());
    assert_eq!(graded.get(0, 3), &-naive.get(0, 3));
}

#[test]
fn braid_relation_for_identity_and_odd_twist() {
    let id = GradedMatrix::identity(w11().tensor_parities(2), 4);
    let b = check_braid(&id, w11()).unwrap();
    assert_eq!(b.s, super_permutation(w11(), 4));
    assert!(b.braid.holds && b.permutation_involution.holds && b.triangular_image.holds);

    let (ug, f, rho) = psi_data();
    let r = matrix_r(&ug, &f, &rho, false).unwrap();
    let b = check_braid(&r, w11()).unwrap();
    assert_eq!(b.s, super_permutation(w11(), 4).mul(&r).unwrap());
    assert!(b.braid.holds && b.permutation_involution.holds && b.triangular_image.holds);
}

#[test]
fn super_permutation_signs() {
    let p = super_permutation(w11(), 0);
    // w2⊗w2 -> -w2⊗w2, w1⊗w2 -> w2⊗w1.
    assert_eq!(p.get(3, 3).coeff(0), int(-1));
    assert_eq!(p.get(2, 1).coeff(0), int(1));
}

#[test]
fn purely_even_one_dimensional_space_is_trivially_braided() {
    let space = GradedSpace::new(1, 0).unwrap();
    let r = GradedMatrix::from_rows(space.tensor_parities(2), 4, &[vec![int(7)]]).unwrap();
    let b = check_braid(&r, space).unwrap();
    assert_eq!(b.s, r);
    assert!(b.braid.holds);
}

#[test]
fn gl11_fundamental_pushes_both_twists_to_solutions() {
    let ug = Ug::new(LieSuperalgebra::gl(1, 1), 4);
    let rho = gl11_fundamental(&ug);
    let cartan = ug.tensor_of(&[&ug.parse("E11").unwrap(), &ug.parse("E22").unwrap()]).unwrap();
    for f in [
        Twist::from_words(&ug, &[(1, "E12", "E12", int(1))]).unwrap(),
        Twist::exponential(&ug, &cartan).unwrap(),
    ] {
        let r = matrix_r(&ug, &f, &rho, false).unwrap();
        assert!(check_super_qybe(&r, w11()).unwrap().holds());
        let b = check_braid(&r, w11()).unwrap();
        assert!(b.braid.holds && b.triangular_image.holds);
    }
}

/// Random even matrix on `W⊗W`: entries only where row and column parities agree.
fn even_matrix(space: GradedSpace) -> impl Strategy<Value = GradedMatrix> {
    let par = space.tensor_parities(2);
    let n = par.len();
    prop::collection::vec((-2i64..=2, -2i64..=2), n * n).prop_map(move |vals| {
        let mut m = GradedMatrix::zero(par.clone(), 1);
        for (k, (a, b)) in vals.into_iter().enumerate() {
            let (r, c) = (k / n, k % n);
            if par[r] == par[c] {
                m.set(r, c, HSeries::from_coeffs(1, [int(a), int(b)]));
            }
        }
        m
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn component_display_matches_graded_embedding_w11(r in even_matrix(GradedSpace { n_even: 1, m_odd: 1 })) {
        let report = check_super_qybe(&r, w11()).unwrap();
        prop_assert!(report.agreement.holds, "{:?}", report.agreement);
        prop_assert_eq!(report.embedded.holds, report.component.holds);
    }

    #[test]
    fn component_display_matches_graded_embedding_w12(r in even_matrix(GradedSpace { n_even: 1, m_odd: 2 })) {
        let space = GradedSpace::new(1, 2).unwrap();
        let report = check_super_qybe(&r, space).unwrap();
        prop_assert!(report.agreement.holds, "{:?}", report.agreement);
    }

    #[test]
    fn embeddings_agree_with_direct_formulas(r in even_matrix(GradedSpace { n_even: 1, m_odd: 1 })) {
        // R13 entry = R^{kl}_{ij} (-1)^{(|l|+|j|)|b|} on (k,b,l; i,b,j).
        let space = w11();
        let p = |i: usize| space.parity(i).bit();
        let r13 = embed(&r, space, 1, 3).unwrap();
        for k in 0..2 { for l in 0..2 { for i in 0..2 { for j in 0..2 { for b in 0..2 {
            let v = r.get(k * 2 + l, i * 2 + j);
            let expected = if (p(l) + p(j)) * p(b) % 2 == 1 { -v } else { v.clone() };
            prop_assert_eq!(r13.get((k * 2 + b) * 2 + l, (i * 2 + b) * 2 + j), &expected);
        }}}}}
    }
}
