use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::identity::Comparison;
use crate::scalar::{HSeries, Rational};
use crate::tensor::TensorElement;
use crate::ug::{PbwMonomial, Ug};

use super::{LieSuperalgebra, Parity};

/// Classical r-matrix `r = sum r^{ij} X_i ⊗ X_j` with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RMatrix {
    pub terms: BTreeMap<(usize, usize), Rational>,
}

impl RMatrix {
    pub fn new(terms: impl IntoIterator<Item = ((usize, usize), Rational)>) -> Self {
        let mut map: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
        for (ij, c) in terms {
            *map.entry(ij).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        RMatrix { terms: map }
    }

    /// True when every term lies in `g0⊗g0 ⊕ g1⊗g1`.
    pub fn is_even(&self, alg: &LieSuperalgebra) -> bool {
        self.terms
            .keys()
            .all(|&(i, j)| alg.parity(i) + alg.parity(j) == Parity::Even)
    }

    pub fn require_even(&self, alg: &LieSuperalgebra) -> Result<()> {
        if let Some(&(i, j)) = self
            .terms
            .keys()
            .find(|&&(i, j)| alg.parity(i) + alg.parity(j) != Parity::Even)
        {
            return Err(Error::EvennessViolation(format!(
                "r has odd term {}⊗{}",
                alg.name(i),
                alg.name(j)
            )));
        }
        Ok(())
    }

    /// `r` as a two-leg element of `U(g)^{⊗2}`.
    pub fn to_tensor(&self, ug: &Ug) -> Result<TensorElement> {
        let alg = ug.algebra();
        let terms = self
            .terms
            .iter()
            .map(|(&(i, j), c)| {
                let mi = ug.monomial(&[(i, 1)])?;
                let mj = ug.monomial(&[(j, 1)])?;
                Ok((vec![mi, mj], HSeries::constant(ug.order(), c.clone())))
            })
            .collect::<Result<Vec<(Vec<PbwMonomial>, HSeries)>>>()?;
        debug_assert!(self.terms.keys().all(|&(i, j)| i < alg.dim() && j < alg.dim()));
        TensorElement::from_terms(2, terms)
    }
}

fn commutator(ug: &Ug, a: &TensorElement, b: &TensorElement) -> Result<TensorElement> {
    ug.tensor_multiply(a, b)?.sub(&ug.tensor_multiply(b, a)?)
}

/// `[[r,r]] = [r12,r13] + [r12,r23] + [r13,r23]` in `U(g)^{⊗3}`. For even
/// `r` each summand is a plain commutator.
pub fn schouten_bracket(ug: &Ug, r: &RMatrix) -> Result<TensorElement> {
    r.require_even(ug.algebra())?;
    let t = r.to_tensor(ug)?;
    let r12 = ug.embed_legs(&t, 1, 2)?;
    let r13 = ug.embed_legs(&t, 1, 3)?;
    let r23 = ug.embed_legs(&t, 2, 3)?;
    commutator(ug, &r12, &r13)?
        .add(&commutator(ug, &r12, &r23)?)?
        .add(&commutator(ug, &r13, &r23)?)
}

/// Classical Yang-Baxter equation `[[r,r]] = 0`.
pub fn check_cybe(ug: &Ug, r: &RMatrix) -> Result<Comparison> {
    let s = schouten_bracket(ug, r)?;
    Comparison::tensors(ug, &s, &TensorElement::zero(3))
}

/// `[[[r,r]], X⊗1⊗1 + 1⊗X⊗1 + 1⊗1⊗X] = 0` for every basis element `X`.
pub fn check_gcybe_invariance(ug: &Ug, r: &RMatrix) -> Result<Comparison> {
    let s = schouten_bracket(ug, r)?;
    let one = ug.one();
    let mut parts = Vec::new();
    for i in 0..ug.algebra().dim() {
        let x = ug.generator(i);
        let spread = ug
            .tensor_of(&[&x, &one, &one])?
            .add(&ug.tensor_of(&[&one, &x, &one])?)?
            .add(&ug.tensor_of(&[&one, &one, &x])?)?;
        // [[r,r]] is even, so the graded commutator carries no sign.
        let c = commutator(ug, &s, &spread)?;
        parts.push(
            Comparison::tensors(ug, &c, &TensorElement::zero(3))?
                .context(&format!("X = {}", ug.algebra().name(i))),
        );
    }
    Ok(Comparison::all(parts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn r_of(alg: &LieSuperalgebra, terms: &[(&str, &str, i64)]) -> RMatrix {
        RMatrix::new(terms.iter().map(|(a, b, c)| {
            ((alg.index_of(a).unwrap(), alg.index_of(b).unwrap()), int(*c))
        }))
    }

    #[test]
    fn odd_square_solves_cybe() {
        let ug = Ug::new(LieSuperalgebra::odd_abelian(&["psi"]), 2);
        let r = r_of(ug.algebra(), &[("psi", "psi", 1)]);
        assert!(schouten_bracket(&ug, &r).unwrap().is_zero());
        assert!(check_cybe(&ug, &r).unwrap().holds);
    }

    #[test]
    fn abelian_r_solves_cybe() {
        let ug = Ug::new(LieSuperalgebra::abelian(&["X", "Y"]), 2);
        let r = r_of(ug.algebra(), &[("X", "Y", 1)]);
        assert!(check_cybe(&ug, &r).unwrap().holds);
    }

    #[test]
    fn gl11_off_diagonal_r_fails_cybe() {
        let ug = Ug::new(LieSuperalgebra::gl(1, 1), 2);
        let r = r_of(ug.algebra(), &[("E12", "E21", 1)]);
        let s = schouten_bracket(&ug, &r).unwrap();
        let cartan = ug.parse("E11").unwrap().add(&ug.parse("E22").unwrap());
        let expected = ug
            .tensor_of(&[&ug.parse("E12").unwrap(), &cartan, &ug.parse("E21").unwrap()])
            .unwrap();
        assert_eq!(s, expected);
        let c = check_cybe(&ug, &r).unwrap();
        assert!(!c.holds);
        assert!(c.counterexample.is_some());
    }

    #[test]
    fn cartan_r_of_gl11_solves_cybe_and_is_invariant() {
        let ug = Ug::new(LieSuperalgebra::gl(1, 1), 2);
        let r = r_of(ug.algebra(), &[("E11", "E22", 1), ("E22", "E11", -1)]);
        assert!(check_cybe(&ug, &r).unwrap().holds);
        assert!(check_gcybe_invariance(&ug, &r).unwrap().holds);
    }

    #[test]
    fn odd_r_matrix_is_rejected() {
        let alg = LieSuperalgebra::h_psi();
        let ug = Ug::new(alg, 2);
        let r = r_of(ug.algebra(), &[("H", "psi", 1)]);
        assert!(!r.is_even(ug.algebra()));
        assert!(matches!(schouten_bracket(&ug, &r), Err(Error::EvennessViolation(_))));
    }
}
