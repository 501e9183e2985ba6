use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::validation::{Rule, ValidationReport};
use crate::scalar::Rational;

use super::{GElement, LieSuperalgebra, RMatrix};

type Pair = BTreeMap<(usize, usize), Rational>;

/// `φ(X_i) = sum f^{kl}_i X_k ⊗ X_l`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Cobracket {
    pub terms: Vec<Pair>,
}

impl Cobracket {
    pub fn zero(dim: usize) -> Self {
        Cobracket {
            terms: vec![BTreeMap::new(); dim],
        }
    }

    /// `f^{kl}_i`.
    pub fn coeff(&self, i: usize, k: usize, l: usize) -> Rational {
        self.terms[i].get(&(k, l)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, i: usize, k: usize, l: usize, value: Rational) {
        if value.is_zero() {
            self.terms[i].remove(&(k, l));
        } else {
            self.terms[i].insert((k, l), value);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(BTreeMap::is_empty)
    }

    fn image(&self, x: &GElement) -> Pair {
        let mut out = Pair::new();
        for (i, a) in &x.terms {
            for (kl, f) in &self.terms[*i] {
                add(&mut out, *kl, a * f);
            }
        }
        out
    }
}

fn add(map: &mut Pair, key: (usize, usize), value: Rational) {
    if value.is_zero() {
        return;
    }
    let slot = map.entry(key).or_insert_with(Rational::zero);
    *slot += value;
    if slot.is_zero() {
        map.remove(&key);
    }
}

/// `ad_X (u⊗v) = [X,u]⊗v + (-1)^{|X||u|} u⊗[X,v]` on basis tensors.
fn ad_on_pair(alg: &LieSuperalgebra, x: usize, t: &Pair) -> Pair {
    let mut out = Pair::new();
    for (&(u, v), c) in t {
        for (k, ck) in alg.bracket_basis(x, u) {
            add(&mut out, (*k, v), c * ck);
        }
        let sign = alg.parity(x).koszul_sign(alg.parity(u));
        for (k, ck) in alg.bracket_basis(x, v) {
            add(&mut out, (u, *k), &sign * c * ck);
        }
    }
    out
}

/// `δ(X) = (ad_X⊗1 + 1⊗ad_X) r`, with the Koszul sign on the second leg.
pub fn coboundary_cobracket(alg: &LieSuperalgebra, r: &RMatrix) -> Result<Cobracket> {
    r.require_even(alg)?;
    if let Some(&(i, j)) = r.terms.keys().find(|&&(i, j)| i >= alg.dim() || j >= alg.dim()) {
        return Err(Error::Schema(format!("r term ({i}, {j}) out of range")));
    }
    let mut out = Cobracket::zero(alg.dim());
    for x in 0..alg.dim() {
        out.terms[x] = ad_on_pair(alg, x, &r.terms);
    }
    Ok(out)
}

/// Parity consistency, dual super Jacobi identity and the 1-cocycle
/// condition `φ[X,Y] = ad_X φ(Y) - (-1)^{|X||Y|} ad_Y φ(X)`.
pub fn validate_cobracket(alg: &LieSuperalgebra, phi: &Cobracket) -> ValidationReport {
    let mut report = ValidationReport::default();
    let n = alg.dim();
    let p = |i: usize| alg.parity(i);
    if phi.terms.len() != n {
        report.push(
            Rule::Dimension,
            "cobracket",
            format!("{} images for a {n}-dimensional algebra", phi.terms.len()),
        );
        return report;
    }
    for i in 0..n {
        for (&(k, l), f) in &phi.terms[i] {
            if p(k) + p(l) != p(i) {
                report.push(
                    Rule::CobracketParity,
                    format!("({}, {}; {})", alg.name(k), alg.name(l), alg.name(i)),
                    format!("f^{{{}{}}}_{} = {f}", alg.name(k), alg.name(l), alg.name(i)),
                );
            }
        }
    }
    for i in 0..n {
        for k in 0..n {
            for l in 0..n {
                for m in 0..n {
                    let mut sum = Rational::zero();
                    for j in 0..n {
                        sum += p(k).koszul_sign(p(m)) * phi.coeff(i, k, j) * phi.coeff(j, l, m)
                            + p(l).koszul_sign(p(k)) * phi.coeff(i, l, j) * phi.coeff(j, m, k)
                            + p(m).koszul_sign(p(l)) * phi.coeff(i, m, j) * phi.coeff(j, k, l);
                    }
                    if !sum.is_zero() {
                        report.push(
                            Rule::DualJacobi,
                            format!("({}; {}, {}, {})", alg.name(i), alg.name(k), alg.name(l), alg.name(m)),
                            format!("dual Jacobi sum is {sum}"),
                        );
                    }
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let bracket = GElement::from_terms(alg.bracket_basis(x, y).iter().cloned());
            let lhs = phi.image(&bracket);
            let mut rhs = ad_on_pair(alg, x, &phi.terms[y]);
            let sign = -alg.parity(x).koszul_sign(alg.parity(y));
            for (kl, c) in ad_on_pair(alg, y, &phi.terms[x]) {
                add(&mut rhs, kl, c * &sign);
            }
            if lhs != rhs {
                report.push(
                    Rule::Cocycle,
                    format!("({}, {})", alg.name(x), alg.name(y)),
                    "φ[X,Y] differs from ad_X φ(Y) - (-1)^{|X||Y|} ad_Y φ(X)",
                );
            }
        }
    }
    report
}
