//! Twist quantization: cocycle and counit checks, the twisted coproduct,
//! antipode and R-matrix, the quasitriangularity suite, left/right twist
//! conversion and gauge equivalence.

mod gauge;

pub use gauge::{check_hat_twist, gauge_relations, gauge_transform, GaugeReport, HatTwistReport};

use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::identity::Comparison;
use num_traits::One;

use crate::liesuper::Parity;
use crate::scalar::{HSeries, Rational};
use crate::tensor::TensorElement;
use crate::ug::{UeaElement, Ug};

/// Even two-leg element `F = 1⊗1 + sum_{i>=1} F_i h^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Twist {
    element: TensorElement,
}

impl Twist {
    /// Checks the shape invariants: two legs, order-0 part `1⊗1`, every term
    /// even. Cocycle and counit conditions are separate checks.
    pub fn new(ug: &Ug, element: TensorElement) -> Result<Self> {
        if element.legs() != 2 {
            return Err(Error::LegCountMismatch { left: 2, right: element.legs() });
        }
        if element.truncated_to(0) != ug.tensor_unit(2) {
            return Err(Error::InvalidTwist("order-0 part must be 1⊗1".into()));
        }
        if let Some(key) = element
            .terms()
            .keys()
            .find(|k| k.iter().map(|m| m.parity()).sum::<Parity>() != Parity::Even)
        {
            return Err(Error::EvennessViolation(format!(
                "twist term {} is odd",
                ug.key_string(key)
            )));
        }
        Ok(Twist { element })
    }

    /// `1⊗1 + sum c h^k (a⊗b)` from `(k, a, b, c)` with words parsed in `ug`.
    pub fn from_words(ug: &Ug, terms: &[(usize, &str, &str, Rational)]) -> Result<Self> {
        let mut element = ug.tensor_unit(2);
        for (k, a, b, c) in terms {
            if *k == 0 {
                return Err(Error::InvalidTwist("twist terms start at order 1".into()));
            }
            let pure = ug.tensor_of(&[&ug.parse(a)?, &ug.parse(b)?])?;
            let weight = HSeries::monomial(ug.order(), *k, c.clone());
            element = element.add(&pure.scale_series(&weight))?;
        }
        Self::new(ug, element)
    }

    /// `exp(h r) = sum_k h^k r^k / k!` for an even two-leg `r`.
    pub fn exponential(ug: &Ug, r: &TensorElement) -> Result<Self> {
        let mut element = ug.tensor_unit(2);
        let mut power = ug.tensor_unit(2);
        let mut factorial = Rational::one();
        for k in 1..=ug.order() {
            power = ug.tensor_multiply(&power, r)?;
            factorial *= Rational::from_integer(k.into());
            let weight = HSeries::monomial(ug.order(), k, factorial.recip());
            element = element.add(&power.scale_series(&weight))?;
        }
        Self::new(ug, element)
    }

    pub fn identity(ug: &Ug) -> Self {
        Twist { element: ug.tensor_unit(2) }
    }

    pub fn element(&self) -> &TensorElement {
        &self.element
    }

    /// `F_1`, the coefficient of `h`.
    pub fn first_order(&self) -> TensorElement {
        self.element.order_part(1)
    }
}

/// `(Δ0⊗id)F · (F⊗1) = (id⊗Δ0)F · (1⊗F)`.
pub fn check_cocycle(ug: &Ug, twist: &Twist) -> Result<Comparison> {
    let f = twist.element();
    let lhs = ug.tensor_multiply(&ug.apply_coproduct_leg(f, 1)?, &ug.embed_legs(f, 1, 2)?)?;
    let rhs = ug.tensor_multiply(&ug.apply_coproduct_leg(f, 2)?, &ug.embed_legs(f, 2, 3)?)?;
    Comparison::tensors(ug, &lhs, &rhs)
}

/// `(id⊗ε)F = (ε⊗id)F = 1`.
pub fn check_counit_normalization(ug: &Ug, twist: &Twist) -> Result<Comparison> {
    let one = ug.one();
    Ok(Comparison::all([
        Comparison::elements(ug, &ug.counit_leg(twist.element(), 1)?, &one).context("(ε⊗id)F"),
        Comparison::elements(ug, &ug.counit_leg(twist.element(), 2)?, &one).context("(id⊗ε)F"),
    ]))
}

fn admit(ug: &Ug, twist: &Twist, allow_invalid: bool) -> Result<()> {
    if allow_invalid {
        return Ok(());
    }
    let cocycle = check_cocycle(ug, twist)?;
    if !cocycle.holds {
        return Err(Error::InvalidTwist(format!(
            "cocycle identity fails ({})",
            cocycle.counterexample.unwrap_or_default()
        )));
    }
    let counit = check_counit_normalization(ug, twist)?;
    if !counit.holds {
        return Err(Error::InvalidTwist(format!(
            "counit normalization fails ({})",
            counit.counterexample.unwrap_or_default()
        )));
    }
    Ok(())
}

/// `u = m(id⊗S0)(F^-1)` and `u^-1 = m(S0⊗id)F`, checked to be mutually
/// inverse at the working order.
pub fn compute_u(ug: &Ug, twist: &Twist) -> Result<(UeaElement, UeaElement)> {
    let f_inv = ug.tensor_invert(twist.element())?;
    let (u, u_inv) = u_formulas(ug, twist, &f_inv)?;
    let check = u_check(ug, &u, &u_inv)?;
    if !check.holds {
        return Err(Error::UInverseMismatch(check.counterexample.unwrap_or_default()));
    }
    Ok((u, u_inv))
}

fn u_formulas(ug: &Ug, twist: &Twist, f_inv: &TensorElement) -> Result<(UeaElement, UeaElement)> {
    let u = ug.multiply_legs(&ug.map_leg(f_inv, 2, |x| ug.antipode0(x))?)?;
    let u_inv = ug.multiply_legs(&ug.map_leg(twist.element(), 1, |x| ug.antipode0(x))?)?;
    Ok((u, u_inv))
}

fn u_check(ug: &Ug, u: &UeaElement, u_inv: &UeaElement) -> Result<Comparison> {
    let one = ug.one();
    Ok(Comparison::all([
        Comparison::elements(ug, &ug.multiply(u, u_inv)?, &one).context("u·u^-1"),
        Comparison::elements(ug, &ug.multiply(u_inv, u)?, &one).context("u^-1·u"),
    ]))
}

/// `R_F = F_21^-1 · F`. Refuses twists failing the cocycle or counit checks
/// unless `allow_invalid` is set.
pub fn compute_r(ug: &Ug, twist: &Twist, allow_invalid: bool) -> Result<TensorElement> {
    admit(ug, twist, allow_invalid)?;
    r_of(ug, twist.element())
}

pub(crate) fn r_of(ug: &Ug, f: &TensorElement) -> Result<TensorElement> {
    let f21_inv = ug.tensor_invert(&ug.flip(f)?)?;
    ug.tensor_multiply(&f21_inv, f)
}

/// Twisted Hopf data derived from one twist.
#[derive(Debug)]
pub struct QuantizedHopf<'a> {
    ug: &'a Ug,
    twist: Twist,
    f_inv: TensorElement,
    u: UeaElement,
    u_inv: UeaElement,
    r: TensorElement,
    r_inv: TensorElement,
}

/// One identity of the quasitriangularity suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityResult {
    pub id: &'static str,
    /// The identity in compact notation.
    pub label: &'static str,
    pub comparison: Comparison,
    pub wall: Duration,
}

impl<'a> QuantizedHopf<'a> {
    /// Refuses twists failing the cocycle or counit checks, or whose `u` and
    /// `u^-1` formulas disagree, unless `allow_invalid` is set.
    pub fn new(ug: &'a Ug, twist: Twist, allow_invalid: bool) -> Result<Self> {
        admit(ug, &twist, allow_invalid)?;
        let f_inv = ug.tensor_invert(twist.element())?;
        let (u, u_inv) = u_formulas(ug, &twist, &f_inv)?;
        if !allow_invalid {
            let check = u_check(ug, &u, &u_inv)?;
            if !check.holds {
                return Err(Error::UInverseMismatch(check.counterexample.unwrap_or_default()));
            }
        }
        let r = r_of(ug, twist.element())?;
        let r_inv = ug.tensor_invert(&r)?;
        Ok(QuantizedHopf { ug, twist, f_inv, u, u_inv, r, r_inv })
    }

    pub fn ug(&self) -> &Ug {
        self.ug
    }

    pub fn twist(&self) -> &Twist {
        &self.twist
    }

    pub fn twist_inverse(&self) -> &TensorElement {
        &self.f_inv
    }

    pub fn u(&self) -> &UeaElement {
        &self.u
    }

    pub fn u_inv(&self) -> &UeaElement {
        &self.u_inv
    }

    pub fn r(&self) -> &TensorElement {
        &self.r
    }

    pub fn r_inv(&self) -> &TensorElement {
        &self.r_inv
    }

    /// `Δ_F(X) = F^-1 · Δ0(X) · F`.
    pub fn twisted_coproduct(&self, x: &UeaElement) -> Result<TensorElement> {
        let ug = self.ug;
        ug.tensor_multiply_all(&[&self.f_inv, &ug.coproduct0(x), self.twist.element()])
    }

    /// `(Δ_F⊗id)A` for `which = 1`, `(id⊗Δ_F)A` for `which = 2`, computed as
    /// conjugation of the lifted `Δ0` by the embedded twist.
    pub fn coproduct_on_leg(&self, a: &TensorElement, which: usize) -> Result<TensorElement> {
        let ug = self.ug;
        let (p, q) = if which == 1 { (1, 2) } else { (2, 3) };
        let f = ug.embed_legs(self.twist.element(), p, q)?;
        let f_inv = ug.embed_legs(&self.f_inv, p, q)?;
        ug.tensor_multiply_all(&[&f_inv, &ug.apply_coproduct_leg(a, which)?, &f])
    }

    /// `S_F(X) = u · S0(X) · u^-1`.
    pub fn twisted_antipode(&self, x: &UeaElement) -> Result<UeaElement> {
        let ug = self.ug;
        ug.multiply_all(&[&self.u, &ug.antipode0(x)?, &self.u_inv])
    }

    fn generators(&self) -> Vec<(String, UeaElement)> {
        let alg = self.ug.algebra();
        (0..alg.dim())
            .map(|i| (alg.name(i).to_string(), self.ug.generator(i)))
            .collect()
    }

    fn per_generator(
        &self,
        check: impl Fn(&UeaElement) -> Result<Comparison> + Sync,
    ) -> Result<Comparison> {
        let parts = self
            .generators()
            .into_par_iter()
            .map(|(name, x)| check(&x).map(|c| c.context(&format!("X = {name}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Comparison::all(parts))
    }

    /// `(Δ_F⊗id)R = R13 R23`.
    pub fn check_hexagon_left(&self) -> Result<Comparison> {
        let ug = self.ug;
        let lhs = self.coproduct_on_leg(&self.r, 1)?;
        let rhs = ug.tensor_multiply(&ug.embed_legs(&self.r, 1, 3)?, &ug.embed_legs(&self.r, 2, 3)?)?;
        Comparison::tensors(ug, &lhs, &rhs)
    }

    /// `(id⊗Δ_F)R = R13 R12`.
    pub fn check_hexagon_right(&self) -> Result<Comparison> {
        let ug = self.ug;
        let lhs = self.coproduct_on_leg(&self.r, 2)?;
        let rhs = ug.tensor_multiply(&ug.embed_legs(&self.r, 1, 3)?, &ug.embed_legs(&self.r, 1, 2)?)?;
        Comparison::tensors(ug, &lhs, &rhs)
    }

    /// `(ε⊗id)R = (id⊗ε)R = 1`.
    pub fn check_r_counit(&self) -> Result<Comparison> {
        let ug = self.ug;
        let one = ug.one();
        Ok(Comparison::all([
            Comparison::elements(ug, &ug.counit_leg(&self.r, 1)?, &one).context("(ε⊗id)R"),
            Comparison::elements(ug, &ug.counit_leg(&self.r, 2)?, &one).context("(id⊗ε)R"),
        ]))
    }

    /// `R21 · R = 1`.
    pub fn check_triangular(&self) -> Result<Comparison> {
        let ug = self.ug;
        let lhs = ug.tensor_multiply(&ug.flip(&self.r)?, &self.r)?;
        Comparison::tensors(ug, &lhs, &ug.tensor_unit(2))
    }

    /// `Δ_F^op(X) = R Δ_F(X) R^-1` on every generator.
    pub fn check_intertwining(&self) -> Result<Comparison> {
        let ug = self.ug;
        self.per_generator(|x| {
            let d = self.twisted_coproduct(x)?;
            let lhs = ug.flip(&d)?;
            let rhs = ug.tensor_multiply_all(&[&self.r, &d, &self.r_inv])?;
            Comparison::tensors(ug, &lhs, &rhs)
        })
    }

    /// `R12 R13 R23 = R23 R13 R12`.
    pub fn check_qybe(&self) -> Result<Comparison> {
        let ug = self.ug;
        let r12 = ug.embed_legs(&self.r, 1, 2)?;
        let r13 = ug.embed_legs(&self.r, 1, 3)?;
        let r23 = ug.embed_legs(&self.r, 2, 3)?;
        let (lhs, rhs) = rayon::join(
            || ug.tensor_multiply_all(&[&r12, &r13, &r23]),
            || ug.tensor_multiply_all(&[&r23, &r13, &r12]),
        );
        Comparison::tensors(ug, &lhs?, &rhs?)
    }

    /// `(Δ_F⊗id)Δ_F(X) = (id⊗Δ_F)Δ_F(X)` on every generator.
    pub fn check_coassociativity(&self) -> Result<Comparison> {
        let ug = self.ug;
        self.per_generator(|x| {
            let d = self.twisted_coproduct(x)?;
            Comparison::tensors(ug, &self.coproduct_on_leg(&d, 1)?, &self.coproduct_on_leg(&d, 2)?)
        })
    }

    /// `m(S_F⊗id)Δ_F(X) = m(id⊗S_F)Δ_F(X) = ε(X)1` on every generator and 1.
    pub fn check_antipode(&self) -> Result<Comparison> {
        let ug = self.ug;
        let mut elements = self.generators();
        elements.push(("1".into(), ug.one()));
        let parts = elements
            .into_par_iter()
            .map(|(name, x)| -> Result<Comparison> {
                let d = self.twisted_coproduct(&x)?;
                let eps = ug.scalar(ug.counit(&x));
                let left = ug.multiply_legs(&ug.map_leg(&d, 1, |y| self.twisted_antipode(y))?)?;
                let right = ug.multiply_legs(&ug.map_leg(&d, 2, |y| self.twisted_antipode(y))?)?;
                Ok(Comparison::all([
                    Comparison::elements(ug, &left, &eps).context("m(S_F⊗id)Δ_F"),
                    Comparison::elements(ug, &right, &eps).context("m(id⊗S_F)Δ_F"),
                ])
                .context(&format!("X = {name}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Comparison::all(parts))
    }

    /// `u · u^-1 = u^-1 · u = 1` for the two defining formulas. Always true
    /// unless construction was forced past an invalid twist.
    pub fn check_u(&self) -> Result<Comparison> {
        u_check(self.ug, &self.u, &self.u_inv)
    }

    /// `R_F = 1 + h (F_1 - T(F_1)) + O(h^2)`.
    pub fn check_semiclassical(&self) -> Result<Comparison> {
        let ug = self.ug;
        let f1 = self.twist.first_order();
        let anti = f1.sub(&ug.flip(&f1)?)?;
        let shifted = HSeries::monomial(ug.order(), 1, Rational::one());
        let expected = ug.tensor_unit(2).add(&anti.scale_series(&shifted))?;
        Comparison::tensors(ug, &self.r.truncated_to(1), &expected)
    }

    /// Runs the whole suite concurrently; results come back in a fixed order.
    pub fn verify_quasitriangular(&self) -> Result<Vec<IdentityResult>> {
        type Check<'s> = (&'static str, &'static str, Box<dyn Fn() -> Result<Comparison> + Send + Sync + 's>);
        let checks: Vec<Check<'_>> = vec![
            ("u-inverse", "u u^-1 = u^-1 u = 1", Box::new(|| self.check_u())),
            ("coassociativity", "(Δ_F⊗id)Δ_F = (id⊗Δ_F)Δ_F", Box::new(|| self.check_coassociativity())),
            ("antipode", "m(S_F⊗id)Δ_F = m(id⊗S_F)Δ_F = ε", Box::new(|| self.check_antipode())),
            ("hexagon-left", "(Δ_F⊗id)R = R13 R23", Box::new(|| self.check_hexagon_left())),
            ("hexagon-right", "(id⊗Δ_F)R = R13 R12", Box::new(|| self.check_hexagon_right())),
            ("r-counit", "(ε⊗id)R = (id⊗ε)R = 1", Box::new(|| self.check_r_counit())),
            ("triangular", "R21 R = 1", Box::new(|| self.check_triangular())),
            ("intertwining", "Δ_F^op = R Δ_F R^-1", Box::new(|| self.check_intertwining())),
            ("qybe", "R12 R13 R23 = R23 R13 R12", Box::new(|| self.check_qybe())),
            ("semiclassical", "R = 1 + h(F_1 - T(F_1)) + O(h^2)", Box::new(|| self.check_semiclassical())),
        ];
        checks
            .into_par_iter()
            .map(|(id, label, f)| {
                let start = Instant::now();
                f().map(|comparison| IdentityResult { id, label, comparison, wall: start.elapsed() })
            })
            .collect()
    }
}

/// Result of converting a left twist into a right one.
#[derive(Clone, Debug)]
pub struct RightTwist {
    /// `H = S0^{⊗2}(F)`.
    pub twist: Twist,
    /// `(S0^{⊗2}(H)⊗1)(Δ0⊗id)S0^{⊗2}(H) = (1⊗S0^{⊗2}(H))(id⊗Δ0)S0^{⊗2}(H)`.
    pub right_cocycle: Comparison,
    /// `(H⊗1)(Δ0⊗id)H = (1⊗H)(id⊗Δ0)H`, the image of the left cocycle
    /// identity under `S0^{⊗3}`.
    pub transported_cocycle: Comparison,
}

fn right_cocycle(ug: &Ug, k: &TensorElement) -> Result<Comparison> {
    let lhs = ug.tensor_multiply(&ug.embed_legs(k, 1, 2)?, &ug.apply_coproduct_leg(k, 1)?)?;
    let rhs = ug.tensor_multiply(&ug.embed_legs(k, 2, 3)?, &ug.apply_coproduct_leg(k, 2)?)?;
    Comparison::tensors(ug, &lhs, &rhs)
}

/// `H = S0^{⊗2}(F)` together with the right-invariant cocycle checks.
pub fn right_from_left(ug: &Ug, twist: &Twist) -> Result<RightTwist> {
    let h = ug.antipode_legs(twist.element())?;
    let k = ug.antipode_legs(&h)?;
    let right_cocycle_literal = right_cocycle(ug, &k)?;
    let transported = right_cocycle(ug, &h)?;
    Ok(RightTwist {
        twist: Twist::new(ug, h)?,
        right_cocycle: right_cocycle_literal,
        transported_cocycle: transported,
    })
}

#[cfg(test)]
mod tests;
