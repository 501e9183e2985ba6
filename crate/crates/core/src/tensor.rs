//! Graded tensor powers `U(g)^{⊗n}[[h]]` for `n <= 3`: Koszul-signed
//! multiplication, the twisting map, leg embeddings and legwise maps.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::liesuper::Parity;
use crate::scalar::{HSeries, Rational};
use crate::ug::{accumulate, prune, PbwMonomial, UeaElement, Ug};

pub const MAX_LEGS: usize = 3;

type Key = Vec<PbwMonomial>;

/// Sum of `coeff * (m_1 ⊗ ... ⊗ m_n)` with every leg a PBW monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    legs: usize,
    terms: BTreeMap<Key, HSeries>,
}

fn check_legs(legs: usize) -> Result<()> {
    if !(1..=MAX_LEGS).contains(&legs) {
        return Err(Error::BadLeg(format!("{legs} legs; supported are 1..={MAX_LEGS}")));
    }
    Ok(())
}

impl TensorElement {
    pub fn zero(legs: usize) -> Self {
        TensorElement {
            legs,
            terms: BTreeMap::new(),
        }
    }

    pub(crate) fn from_map(legs: usize, terms: BTreeMap<Key, HSeries>) -> Self {
        debug_assert!(terms.keys().all(|k| k.len() == legs));
        TensorElement { legs, terms }
    }

    pub fn from_terms(legs: usize, terms: impl IntoIterator<Item = (Vec<PbwMonomial>, HSeries)>) -> Result<Self> {
        check_legs(legs)?;
        let mut map = BTreeMap::new();
        for (k, c) in terms {
            if k.len() != legs {
                return Err(Error::LegCountMismatch { left: legs, right: k.len() });
            }
            accumulate(&mut map, &k, &c, &Rational::one());
        }
        prune(&mut map);
        Ok(TensorElement { legs, terms: map })
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn terms(&self) -> &BTreeMap<Vec<PbwMonomial>, HSeries> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &[PbwMonomial]) -> Option<&HSeries> {
        self.terms.get(key)
    }

    fn same_legs(&self, other: &Self) -> Result<()> {
        if self.legs != other.legs {
            return Err(Error::LegCountMismatch {
                left: self.legs,
                right: other.legs,
            });
        }
        Ok(())
    }

    pub fn try_add_scaled(&self, other: &Self, factor: &Rational) -> Result<Self> {
        self.same_legs(other)?;
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            accumulate(&mut terms, k, c, factor);
        }
        prune(&mut terms);
        Ok(TensorElement { legs: self.legs, terms })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.try_add_scaled(other, &Rational::one())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.try_add_scaled(other, &-Rational::one())
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        let mut terms: BTreeMap<Key, HSeries> =
            self.terms.iter().map(|(k, c)| (k.clone(), c.scale(factor))).collect();
        prune(&mut terms);
        TensorElement { legs: self.legs, terms }
    }

    /// Multiplies every coefficient by a series.
    pub fn scale_series(&self, factor: &HSeries) -> Self {
        let mut terms: BTreeMap<Key, HSeries> =
            self.terms.iter().map(|(k, c)| (k.clone(), c * factor)).collect();
        prune(&mut terms);
        TensorElement { legs: self.legs, terms }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    /// Total parity if homogeneous (zero counts as even).
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(|k| key_parity(k));
        let first = it.next().unwrap_or(Parity::Even);
        it.all(|p| p == first).then_some(first)
    }

    /// Coefficients truncated to `h^power`.
    pub fn truncated_to(&self, power: usize) -> Self {
        let mut terms: BTreeMap<Key, HSeries> = self
            .terms
            .iter()
            .map(|(k, c)| (k.clone(), c.truncated_to(power)))
            .collect();
        prune(&mut terms);
        TensorElement { legs: self.legs, terms }
    }

    /// Coefficient of `h^power` as an `h`-free tensor.
    pub fn order_part(&self, power: usize) -> Self {
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            let v = c.coeff(power);
            if !v.is_zero() {
                terms.insert(k.clone(), HSeries::constant(c.order(), v));
            }
        }
        TensorElement { legs: self.legs, terms }
    }
}

fn key_parity(key: &[PbwMonomial]) -> Parity {
    key.iter().map(PbwMonomial::parity).sum()
}

/// `(-1)^{sum_{j>i} |a_j||b_i|}` for `(a_1⊗..⊗a_n)(b_1⊗..⊗b_n)`.
fn product_sign(a: &[PbwMonomial], b: &[PbwMonomial]) -> bool {
    let mut odd = false;
    for i in 0..b.len() {
        if !b[i].parity().is_odd() {
            continue;
        }
        for aj in &a[i + 1..] {
            odd ^= aj.parity().is_odd();
        }
    }
    odd
}

impl Ug {
    /// `1 ⊗ ... ⊗ 1` with `legs` factors.
    pub fn tensor_unit(&self, legs: usize) -> TensorElement {
        let mut terms = BTreeMap::new();
        terms.insert(vec![PbwMonomial::unit(); legs], HSeries::one(self.order()));
        TensorElement { legs, terms }
    }

    /// Pure tensor `a_1 ⊗ ... ⊗ a_n` (no signs: the factors are placed, not moved).
    pub fn tensor_of(&self, factors: &[&UeaElement]) -> Result<TensorElement> {
        check_legs(factors.len())?;
        let mut partial: Vec<(Key, HSeries)> = vec![(Vec::new(), HSeries::one(self.order()))];
        for f in factors {
            let mut next = Vec::new();
            for (k, c) in &partial {
                for (m, cm) in f.terms() {
                    let coeff = c * cm;
                    if coeff.is_zero() {
                        continue;
                    }
                    let mut key = k.clone();
                    key.push(m.clone());
                    next.push((key, coeff));
                }
            }
            partial = next;
        }
        TensorElement::from_terms(factors.len(), partial)
    }

    /// Graded tensor product: legwise products with the Koszul sign
    /// `(-1)^{sum_{j>i} |a_j||b_i|}`.
    pub fn tensor_multiply(&self, a: &TensorElement, b: &TensorElement) -> Result<TensorElement> {
        a.same_legs(b)?;
        let n = a.legs;
        let mut acc: BTreeMap<Key, HSeries> = BTreeMap::new();
        for (ka, ca) in &a.terms {
            let va = ca.valuation().unwrap_or(usize::MAX);
            for (kb, cb) in &b.terms {
                if va + cb.valuation().unwrap_or(usize::MAX) > self.order() {
                    continue;
                }
                let mut coeff = ca * cb;
                if coeff.is_zero() {
                    continue;
                }
                if product_sign(ka, kb) {
                    coeff = -&coeff;
                }
                let legs = (0..n)
                    .map(|i| self.monomial_product(&ka[i], &kb[i]))
                    .collect::<Result<Vec<_>>>()?;
                let mut combos: Vec<(Key, Rational)> = vec![(Vec::with_capacity(n), Rational::one())];
                for leg in &legs {
                    let mut next = Vec::with_capacity(combos.len() * leg.len());
                    for (k, r) in &combos {
                        for (m, s) in leg.iter() {
                            let mut key = k.clone();
                            key.push(m.clone());
                            next.push((key, r * s));
                        }
                    }
                    combos = next;
                }
                for (k, r) in combos {
                    accumulate(&mut acc, &k, &coeff, &r);
                }
            }
        }
        prune(&mut acc);
        Ok(TensorElement { legs: n, terms: acc })
    }

    /// Left-to-right product of several tensors.
    pub fn tensor_multiply_all(&self, factors: &[&TensorElement]) -> Result<TensorElement> {
        let (first, rest) = factors
            .split_first()
            .ok_or_else(|| Error::BadLeg("empty product".into()))?;
        let mut acc = (*first).clone();
        for f in rest {
            acc = self.tensor_multiply(&acc, f)?;
        }
        Ok(acc)
    }

    /// Twisting map `T(x⊗y) = (-1)^{|x||y|} y⊗x` on adjacent legs `i`, `j = i+1`
    /// (1-based).
    pub fn twist_map(&self, a: &TensorElement, i: usize, j: usize) -> Result<TensorElement> {
        if i == 0 || j != i + 1 || j > a.legs {
            return Err(Error::BadLeg(format!(
                "twist needs adjacent legs 1 <= i < j = i+1 <= {}, got ({i}, {j})",
                a.legs
            )));
        }
        let mut perm: Vec<usize> = (0..a.legs).collect();
        perm.swap(i - 1, j - 1);
        self.permute_legs(a, &perm)
    }

    /// `A_21` for a two-leg tensor.
    pub fn flip(&self, a: &TensorElement) -> Result<TensorElement> {
        self.twist_map(a, 1, 2)
    }

    /// Moves leg `perm[k]` of the input to position `k` of the output with
    /// the Koszul sign of the permutation restricted to odd legs.
    pub fn permute_legs(&self, a: &TensorElement, perm: &[usize]) -> Result<TensorElement> {
        let mut seen = vec![false; a.legs];
        if perm.len() != a.legs || perm.iter().any(|&p| p >= a.legs || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::BadLeg(format!("{perm:?} is not a permutation of {} legs", a.legs)));
        }
        let mut acc = BTreeMap::new();
        for (k, c) in &a.terms {
            let mut odd = false;
            for x in 0..perm.len() {
                for y in x + 1..perm.len() {
                    if perm[x] > perm[y] && k[perm[x]].parity().koszul(k[perm[y]].parity()) {
                        odd = !odd;
                    }
                }
            }
            let key: Key = perm.iter().map(|&p| k[p].clone()).collect();
            let sign = if odd { -Rational::one() } else { Rational::one() };
            accumulate(&mut acc, &key, c, &sign);
        }
        prune(&mut acc);
        Ok(TensorElement { legs: a.legs, terms: acc })
    }

    /// Places a two-leg tensor on legs `p < q` of a three-leg tensor (1-based),
    /// with the unit on the remaining leg. Units are even, so no sign arises.
    pub fn embed_legs(&self, a: &TensorElement, p: usize, q: usize) -> Result<TensorElement> {
        if a.legs != 2 {
            return Err(Error::LegCountMismatch { left: 2, right: a.legs });
        }
        if !(1 <= p && p < q && q <= 3) {
            return Err(Error::BadLeg(format!("embedding positions ({p}, {q})")));
        }
        let terms = a
            .terms
            .iter()
            .map(|(k, c)| {
                let mut key = vec![PbwMonomial::unit(); 3];
                key[p - 1] = k[0].clone();
                key[q - 1] = k[1].clone();
                (key, c.clone())
            })
            .collect();
        Ok(TensorElement { legs: 3, terms })
    }

    /// Applies `Δ0` to leg `which` (1-based), producing one more leg.
    /// `Δ0` is even, so sliding it past the other legs gives no sign.
    pub fn apply_coproduct_leg(&self, a: &TensorElement, which: usize) -> Result<TensorElement> {
        if which == 0 || which > a.legs || a.legs + 1 > MAX_LEGS {
            return Err(Error::BadLeg(format!(
                "coproduct on leg {which} of a {}-leg tensor",
                a.legs
            )));
        }
        let mut acc = BTreeMap::new();
        for (k, c) in &a.terms {
            for (l, r, factor) in self.split_monomial(&k[which - 1]) {
                let mut key = Vec::with_capacity(a.legs + 1);
                key.extend_from_slice(&k[..which - 1]);
                key.push(l);
                key.push(r);
                key.extend_from_slice(&k[which..]);
                accumulate(&mut acc, &key, c, &factor);
            }
        }
        prune(&mut acc);
        Ok(TensorElement { legs: a.legs + 1, terms: acc })
    }

    /// Applies an even linear map to one leg (1-based).
    pub fn map_leg(
        &self,
        a: &TensorElement,
        which: usize,
        f: impl Fn(&UeaElement) -> Result<UeaElement>,
    ) -> Result<TensorElement> {
        if which == 0 || which > a.legs {
            return Err(Error::BadLeg(format!("leg {which} of a {}-leg tensor", a.legs)));
        }
        let mut images: BTreeMap<PbwMonomial, UeaElement> = BTreeMap::new();
        let mut acc = BTreeMap::new();
        for (k, c) in &a.terms {
            let m = &k[which - 1];
            if !images.contains_key(m) {
                let single = UeaElement::from_terms([(m.clone(), HSeries::one(self.order()))]);
                images.insert(m.clone(), f(&single)?);
            }
            for (n, cn) in images[m].terms() {
                let coeff = c * cn;
                if coeff.is_zero() {
                    continue;
                }
                let mut key = k.clone();
                key[which - 1] = n.clone();
                accumulate(&mut acc, &key, &coeff, &Rational::one());
            }
        }
        prune(&mut acc);
        Ok(TensorElement { legs: a.legs, terms: acc })
    }

    /// `S0` on every leg, legs kept in place.
    pub fn antipode_legs(&self, a: &TensorElement) -> Result<TensorElement> {
        let mut out = a.clone();
        for leg in 1..=a.legs {
            out = self.map_leg(&out, leg, |x| self.antipode0(x))?;
        }
        Ok(out)
    }

    /// Counit on one leg of a two-leg tensor, e.g. `(ε⊗id)A` for `which = 1`.
    pub fn counit_leg(&self, a: &TensorElement, which: usize) -> Result<UeaElement> {
        if a.legs != 2 || !(1..=2).contains(&which) {
            return Err(Error::BadLeg(format!("counit on leg {which} of a {}-leg tensor", a.legs)));
        }
        let keep = 2 - which;
        Ok(UeaElement::from_terms(
            a.terms
                .iter()
                .filter(|(k, _)| k[which - 1].is_unit())
                .map(|(k, c)| (k[keep].clone(), c.clone())),
        ))
    }

    /// Multiplication map `m(a⊗b) = ab` on a two-leg tensor.
    pub fn multiply_legs(&self, a: &TensorElement) -> Result<UeaElement> {
        if a.legs != 2 {
            return Err(Error::LegCountMismatch { left: 2, right: a.legs });
        }
        let mut acc = BTreeMap::new();
        for (k, c) in &a.terms {
            for (m, r) in self.monomial_product(&k[0], &k[1])?.iter() {
                accumulate(&mut acc, m, c, r);
            }
        }
        prune(&mut acc);
        Ok(UeaElement::from_terms(acc))
    }

    /// Inverse of `1^{⊗n} + O(h)` by the truncated Neumann series.
    pub fn tensor_invert(&self, a: &TensorElement) -> Result<TensorElement> {
        let unit = self.tensor_unit(a.legs);
        let order_zero = a.truncated_to(0);
        if order_zero != unit {
            return Err(Error::NotInvertible(
                "order-0 part of the tensor is not the unit".into(),
            ));
        }
        let minus_x = unit.sub(a)?;
        let mut power = unit.clone();
        let mut sum = unit;
        for _ in 0..self.order() {
            power = self.tensor_multiply(&power, &minus_x)?;
            if power.is_zero() {
                break;
            }
            sum = sum.add(&power)?;
        }
        Ok(sum)
    }

    pub fn display_tensor<'a>(&'a self, a: &'a TensorElement) -> impl fmt::Display + 'a {
        DisplayTensor { ug: self, t: a }
    }

    /// `(leg strings joined by ⊗, series)` pairs.
    pub fn serialize_tensor(&self, a: &TensorElement) -> Vec<(String, String)> {
        a.terms
            .iter()
            .map(|(k, c)| (self.key_string(k), c.to_string()))
            .collect()
    }

    pub(crate) fn key_string(&self, key: &[PbwMonomial]) -> String {
        key.iter()
            .map(|m| m.display(self.algebra()).to_string())
            .collect::<Vec<_>>()
            .join("⊗")
    }
}

struct DisplayTensor<'a> {
    ug: &'a Ug,
    t: &'a TensorElement,
}

impl fmt::Display for DisplayTensor<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.t.is_zero() {
            return f.write_str("0");
        }
        for (n, (k, c)) in self.t.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c}) {}", self.ug.key_string(k))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests;
