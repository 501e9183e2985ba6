use crate::error::{Error, Result};
use crate::identity::Comparison;
use crate::liesuper::Parity;
use crate::tensor::TensorElement;
use crate::ug::{UeaElement, Ug};

use super::{check_cocycle, check_counit_normalization, QuantizedHopf, Twist};

fn check_gauge_element(ug: &Ug, e: &UeaElement) -> Result<()> {
    if e.parity() != Some(Parity::Even) {
        return Err(Error::EvennessViolation("gauge element must be even".into()));
    }
    if e.truncated_to(0) != ug.one() {
        return Err(Error::NotInvertible("gauge element must be 1 + O(h)".into()));
    }
    Ok(())
}

/// `F̄ = Δ0(E^-1) · F · (E⊗E)`.
pub fn gauge_transform(ug: &Ug, twist: &Twist, e: &UeaElement) -> Result<Twist> {
    check_gauge_element(ug, e)?;
    let e_inv = ug.invert(e)?;
    let ee = ug.tensor_of(&[e, e])?;
    let gauged = ug.tensor_multiply_all(&[&ug.coproduct0(&e_inv), twist.element(), &ee])?;
    Twist::new(ug, gauged)
}

/// Comparisons between the data of `F` and of its gauge transform by `E`.
#[derive(Clone, Debug)]
pub struct GaugeReport {
    pub gauged: Twist,
    /// Cocycle and counit conditions for `F̄`.
    pub cocycle: Comparison,
    /// `Δ_F̄(X) = (E^-1⊗E^-1) Δ_F(E X E^-1) (E⊗E)` on generators.
    pub coproduct: Comparison,
    /// `R_F̄ = (E^-1⊗E^-1) R_F (E⊗E)`.
    pub r_matrix: Comparison,
    /// `S_F̄(X) = E^-1 S_F(E X E^-1) E` on generators.
    pub antipode: Comparison,
    /// Alternative composition `S_F̄(X) = E^-1 S0(E^-1) S_F(X) S0(E) E`; informational.
    pub antipode_literal: Comparison,
}

pub fn gauge_relations(ug: &Ug, twist: &Twist, e: &UeaElement, allow_invalid: bool) -> Result<GaugeReport> {
    let gauged = gauge_transform(ug, twist, e)?;
    let cocycle = Comparison::all([
        check_cocycle(ug, &gauged)?.context("cocycle"),
        check_counit_normalization(ug, &gauged)?.context("counit"),
    ]);
    let qf = QuantizedHopf::new(ug, twist.clone(), allow_invalid)?;
    let qg = QuantizedHopf::new(ug, gauged.clone(), true)?;
    let e_inv = ug.invert(e)?;
    let ee = ug.tensor_of(&[e, e])?;
    let ee_inv = ug.tensor_of(&[&e_inv, &e_inv])?;
    let s0_e = ug.antipode0(e)?;
    let s0_e_inv = ug.antipode0(&e_inv)?;

    let mut coproduct = Vec::new();
    let mut antipode = Vec::new();
    let mut antipode_literal = Vec::new();
    for i in 0..ug.algebra().dim() {
        let name = ug.algebra().name(i).to_string();
        let x = ug.generator(i);
        let conj = ug.multiply_all(&[e, &x, &e_inv])?;

        let lhs = qg.twisted_coproduct(&x)?;
        let rhs = ug.tensor_multiply_all(&[&ee_inv, &qf.twisted_coproduct(&conj)?, &ee])?;
        coproduct.push(Comparison::tensors(ug, &lhs, &rhs)?.context(&format!("X = {name}")));

        let s_bar = qg.twisted_antipode(&x)?;
        let rhs = ug.multiply_all(&[&e_inv, &qf.twisted_antipode(&conj)?, e])?;
        antipode.push(Comparison::elements(ug, &s_bar, &rhs).context(&format!("X = {name}")));

        let literal = ug.multiply_all(&[&e_inv, &s0_e_inv, &qf.twisted_antipode(&x)?, &s0_e, e])?;
        antipode_literal.push(Comparison::elements(ug, &s_bar, &literal).context(&format!("X = {name}")));
    }
    let r_rhs = ug.tensor_multiply_all(&[&ee_inv, qf.r(), &ee])?;
    let r_matrix = Comparison::tensors(ug, qg.r(), &r_rhs)?;

    Ok(GaugeReport {
        gauged,
        cocycle,
        coproduct: Comparison::all(coproduct),
        r_matrix,
        antipode: Comparison::all(antipode),
        antipode_literal: Comparison::all(antipode_literal),
    })
}

/// Relations through `F̂ = F^-1 F̄` between two quantizations.
#[derive(Clone, Debug)]
pub struct HatTwistReport {
    pub hat: TensorElement,
    /// `Δ_F̄(X) = F̂^-1 Δ_F(X) F̂` on generators.
    pub coproduct: Comparison,
    /// `R_F̄ = F̂_21^-1 R_F F̂`.
    pub r_matrix: Comparison,
    /// Alternative ordering `Δ_F̄ = F̂ Δ_F F̂^-1`; informational.
    pub coproduct_literal: Comparison,
    /// Alternative ordering `R_F̄ = F̂_21 R_F F̂`; informational.
    pub r_matrix_literal: Comparison,
}

pub fn check_hat_twist(ug: &Ug, twist: &Twist, other: &Twist, allow_invalid: bool) -> Result<HatTwistReport> {
    let qf = QuantizedHopf::new(ug, twist.clone(), allow_invalid)?;
    let qg = QuantizedHopf::new(ug, other.clone(), allow_invalid)?;
    let hat = ug.tensor_multiply(qf.twist_inverse(), other.element())?;
    let hat_inv = ug.tensor_invert(&hat)?;
    let hat21 = ug.flip(&hat)?;
    let hat21_inv = ug.tensor_invert(&hat21)?;

    let mut coproduct = Vec::new();
    let mut coproduct_literal = Vec::new();
    for i in 0..ug.algebra().dim() {
        let name = ug.algebra().name(i).to_string();
        let x = ug.generator(i);
        let target = qg.twisted_coproduct(&x)?;
        let d = qf.twisted_coproduct(&x)?;
        let conj = ug.tensor_multiply_all(&[&hat_inv, &d, &hat])?;
        coproduct.push(Comparison::tensors(ug, &target, &conj)?.context(&format!("X = {name}")));
        let swapped = ug.tensor_multiply_all(&[&hat, &d, &hat_inv])?;
        coproduct_literal.push(Comparison::tensors(ug, &target, &swapped)?.context(&format!("X = {name}")));
    }
    let r_matrix = Comparison::tensors(ug, qg.r(), &ug.tensor_multiply_all(&[&hat21_inv, qf.r(), &hat])?)?;
    let r_matrix_literal = Comparison::tensors(ug, qg.r(), &ug.tensor_multiply_all(&[&hat21, qf.r(), &hat])?)?;
    Ok(HatTwistReport {
        hat,
        coproduct: Comparison::all(coproduct),
        r_matrix,
        coproduct_literal: Comparison::all(coproduct_literal),
        r_matrix_literal,
    })
}
