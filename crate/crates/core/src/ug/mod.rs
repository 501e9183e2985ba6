//! Truncated universal enveloping superalgebra `U(g)[[h]]`: PBW normal form by
//! graded rewriting, product, undeformed coproduct, antipode and counit.

mod monomial;

pub use monomial::{parse_word, PbwMonomial};

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::liesuper::{LieSuperalgebra, Parity};
use crate::scalar::{rat, HSeries, Rational};
use crate::tensor::TensorElement;
use monomial::reducible;

/// Default maximum word length accepted by the rewriter.
pub const DEFAULT_DEGREE_CAP: usize = 12;

type NormalForm = Arc<[(PbwMonomial, Rational)]>;

/// Element of `U(g)[[h]]`: PBW monomials with `h`-series coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UeaElement {
    terms: BTreeMap<PbwMonomial, HSeries>,
}

pub(crate) fn accumulate<K: Ord + Clone>(
    map: &mut BTreeMap<K, HSeries>,
    key: &K,
    series: &HSeries,
    factor: &Rational,
) {
    if factor.is_zero() {
        return;
    }
    match map.get_mut(key) {
        Some(slot) => slot.add_scaled(series, factor),
        None => {
            map.insert(key.clone(), series.scale(factor));
        }
    }
}

pub(crate) fn prune<K: Ord>(map: &mut BTreeMap<K, HSeries>) {
    map.retain(|_, c| !c.is_zero());
}

impl UeaElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (PbwMonomial, HSeries)>) -> Self {
        let mut map: BTreeMap<PbwMonomial, HSeries> = BTreeMap::new();
        for (m, c) in terms {
            accumulate(&mut map, &m, &c, &Rational::one());
        }
        prune(&mut map);
        UeaElement { terms: map }
    }

    pub fn terms(&self) -> &BTreeMap<PbwMonomial, HSeries> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> Option<&HSeries> {
        self.terms.get(m)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_scaled(other, &Rational::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_scaled(other, &-Rational::one())
    }

    pub fn add_scaled(&self, other: &Self, factor: &Rational) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, m, c, factor);
        }
        prune(&mut terms);
        UeaElement { terms }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        UeaElement {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.scale(factor))).collect(),
        }
    }

    /// Parity if every term has the same one; `None` for mixed elements.
    /// Zero counts as even.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(PbwMonomial::parity);
        let first = it.next().unwrap_or(Parity::Even);
        it.all(|p| p == first).then_some(first)
    }

    /// Every coefficient truncated to `h^power`.
    pub fn truncated_to(&self, power: usize) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), c.truncated_to(power))))
    }
}

/// The ring `U(g)[[h]]` mod `h^{N+1}` for a fixed algebra and order `N`.
///
/// Holds a memo of normal forms; it is shared behind a lock, so one `Ug` can
/// serve concurrent computations and always returns the same answers.
pub struct Ug {
    algebra: Arc<LieSuperalgebra>,
    order: usize,
    degree_cap: usize,
    memo: RwLock<HashMap<Vec<u16>, NormalForm>>,
}

impl fmt::Debug for Ug {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ug")
            .field("dim", &self.algebra.dim())
            .field("order", &self.order)
            .field("degree_cap", &self.degree_cap)
            .finish()
    }
}

impl Ug {
    pub fn new(algebra: LieSuperalgebra, order: usize) -> Self {
        Self::with_degree_cap(algebra, order, DEFAULT_DEGREE_CAP)
    }

    pub fn with_degree_cap(algebra: LieSuperalgebra, order: usize, degree_cap: usize) -> Self {
        Ug {
            algebra: Arc::new(algebra),
            order,
            degree_cap,
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn algebra(&self) -> &LieSuperalgebra {
        &self.algebra
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn degree_cap(&self) -> usize {
        self.degree_cap
    }

    pub fn series(&self, value: Rational) -> HSeries {
        HSeries::constant(self.order, value)
    }

    pub fn one(&self) -> UeaElement {
        self.scalar(HSeries::one(self.order))
    }

    pub fn scalar(&self, value: HSeries) -> UeaElement {
        UeaElement::from_terms([(PbwMonomial::unit(), value)])
    }

    pub fn generator(&self, i: usize) -> UeaElement {
        let mono = PbwMonomial::from_sorted(&self.algebra, vec![i as u16]);
        UeaElement::from_terms([(mono, HSeries::one(self.order))])
    }

    /// `coeff * w`, normalized.
    pub fn word(&self, word: &[usize], coeff: HSeries) -> Result<UeaElement> {
        Ok(self.pbw_normalize(word)?.scale_series(&coeff))
    }

    /// Parses a word like `E12*E21` and normalizes it.
    pub fn parse(&self, text: &str) -> Result<UeaElement> {
        let word = parse_word(&self.algebra, text)?;
        self.pbw_normalize(&word)
    }

    /// PBW monomial from `(index, exponent)` pairs already in PBW order.
    pub fn monomial(&self, powers: &[(usize, u32)]) -> Result<PbwMonomial> {
        let mut letters = Vec::new();
        for &(i, e) in powers {
            if i >= self.algebra.dim() {
                return Err(Error::Schema(format!("basis index {i} out of range")));
            }
            letters.extend(std::iter::repeat_n(i as u16, e as usize));
        }
        if !monomial::is_normal(&self.algebra, &letters) {
            return Err(Error::Schema("powers are not in PBW order".into()));
        }
        Ok(PbwMonomial::from_sorted(&self.algebra, letters))
    }

    /// All PBW monomials of degree at most `max_degree`, in monomial order.
    pub fn pbw_basis(&self, max_degree: usize) -> Vec<PbwMonomial> {
        let n = self.algebra.dim();
        let mut order: Vec<u16> = (0..n as u16).collect();
        order.sort_by_key(|&i| self.algebra.pbw_rank(i as usize));
        let mut out = vec![Vec::new()];
        let mut frontier: Vec<Vec<u16>> = vec![Vec::new()];
        for _ in 0..max_degree {
            let mut next = Vec::new();
            for w in &frontier {
                for &l in &order {
                    if let Some(&last) = w.last() {
                        if reducible(&self.algebra, last, l) {
                            continue;
                        }
                    }
                    let mut v = w.clone();
                    v.push(l);
                    next.push(v);
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        let mut monos: Vec<PbwMonomial> =
            out.into_iter().map(|w| PbwMonomial::from_sorted(&self.algebra, w)).collect();
        monos.sort();
        monos
    }

    /// `m` with coefficient 1.
    pub fn element(&self, m: &PbwMonomial) -> UeaElement {
        UeaElement::from_terms([(m.clone(), HSeries::one(self.order))])
    }

    fn check_word(&self, word: &[usize]) -> Result<Vec<u16>> {
        if word.len() > self.degree_cap {
            return Err(Error::DegreeCapExceeded {
                len: word.len(),
                cap: self.degree_cap,
            });
        }
        word.iter()
            .map(|&i| {
                if i < self.algebra.dim() {
                    Ok(i as u16)
                } else {
                    Err(Error::Schema(format!("basis index {i} out of range")))
                }
            })
            .collect()
    }

    /// PBW normal form of a free word, rewriting the leftmost out-of-order
    /// pair first.
    pub fn pbw_normalize(&self, word: &[usize]) -> Result<UeaElement> {
        let letters = self.check_word(word)?;
        let nf = self.normal_form(&letters)?;
        Ok(self.lift(&nf))
    }

    /// Normal form with a caller-chosen rewriting position at every step.
    ///
    /// `choose(k)` receives the number of reducible positions and returns
    /// which one (0-based) to rewrite. The result must agree with
    /// [`Ug::pbw_normalize`]; this is how confluence is tested.
    pub fn pbw_normalize_with(
        &self,
        word: &[usize],
        choose: &mut dyn FnMut(usize) -> usize,
    ) -> Result<UeaElement> {
        let letters = self.check_word(word)?;
        let mut acc: BTreeMap<PbwMonomial, Rational> = BTreeMap::new();
        let mut stack = vec![(letters, Rational::one())];
        while let Some((w, c)) = stack.pop() {
            let positions: Vec<usize> = (0..w.len().saturating_sub(1))
                .filter(|&p| reducible(&self.algebra, w[p], w[p + 1]))
                .collect();
            if positions.is_empty() {
                let m = PbwMonomial::from_sorted(&self.algebra, w);
                *acc.entry(m).or_insert_with(Rational::zero) += c;
                continue;
            }
            let p = positions[choose(positions.len()) % positions.len()];
            for (next, factor) in self.rewrite_at(&w, p) {
                stack.push((next, &c * factor));
            }
        }
        Ok(self.lift(
            &acc.into_iter().filter(|(_, c)| !c.is_zero()).collect::<Vec<_>>(),
        ))
    }

    /// One application of the ideal relation at position `p`:
    /// `xy -> (-1)^{|x||y|} yx + [x,y]`, or `vv -> 1/2 [v,v]` for odd `v`.
    fn rewrite_at(&self, w: &[u16], p: usize) -> Vec<(Vec<u16>, Rational)> {
        let (x, y) = (w[p] as usize, w[p + 1] as usize);
        let replace = |mid: &[u16]| {
            let mut out = Vec::with_capacity(w.len());
            out.extend_from_slice(&w[..p]);
            out.extend_from_slice(mid);
            out.extend_from_slice(&w[p + 2..]);
            out
        };
        let mut out = Vec::new();
        if x == y {
            let half = rat(1, 2);
            for (k, c) in self.algebra.bracket_basis(x, x) {
                out.push((replace(&[*k as u16]), c * &half));
            }
        } else {
            let sign = self.algebra.parity(x).koszul_sign(self.algebra.parity(y));
            out.push((replace(&[y as u16, x as u16]), sign));
            for (k, c) in self.algebra.bracket_basis(x, y) {
                out.push((replace(&[*k as u16]), c.clone()));
            }
        }
        out
    }

    fn normal_form(&self, w: &[u16]) -> Result<NormalForm> {
        if w.len() > self.degree_cap {
            return Err(Error::DegreeCapExceeded {
                len: w.len(),
                cap: self.degree_cap,
            });
        }
        if let Some(hit) = self.memo.read().expect("memo lock").get(w) {
            return Ok(hit.clone());
        }
        let pos = (0..w.len().saturating_sub(1)).find(|&p| reducible(&self.algebra, w[p], w[p + 1]));
        let nf: NormalForm = match pos {
            None => Arc::from(vec![(
                PbwMonomial::from_sorted(&self.algebra, w.to_vec()),
                Rational::one(),
            )]),
            Some(p) => {
                let mut acc: BTreeMap<PbwMonomial, Rational> = BTreeMap::new();
                for (next, factor) in self.rewrite_at(w, p) {
                    for (m, c) in self.normal_form(&next)?.iter() {
                        *acc.entry(m.clone()).or_insert_with(Rational::zero) += &factor * c;
                    }
                }
                acc.into_iter().filter(|(_, c)| !c.is_zero()).collect::<Vec<_>>().into()
            }
        };
        self.memo
            .write()
            .expect("memo lock")
            .insert(w.to_vec(), nf.clone());
        Ok(nf)
    }

    fn lift(&self, nf: &[(PbwMonomial, Rational)]) -> UeaElement {
        UeaElement {
            terms: nf
                .iter()
                .map(|(m, c)| (m.clone(), HSeries::constant(self.order, c.clone())))
                .collect(),
        }
    }

    /// Normal form of the product of two PBW monomials.
    pub(crate) fn monomial_product(&self, a: &PbwMonomial, b: &PbwMonomial) -> Result<NormalForm> {
        if a.is_unit() || b.is_unit() {
            let m = if a.is_unit() { b } else { a };
            return Ok(Arc::from(vec![(m.clone(), Rational::one())]));
        }
        let mut w = Vec::with_capacity(a.degree() + b.degree());
        w.extend_from_slice(a.letters());
        w.extend_from_slice(b.letters());
        self.normal_form(&w)
    }

    /// Product in `U(g)[[h]]`, truncated at order `N`.
    pub fn multiply(&self, a: &UeaElement, b: &UeaElement) -> Result<UeaElement> {
        let mut acc: BTreeMap<PbwMonomial, HSeries> = BTreeMap::new();
        for (ma, ca) in &a.terms {
            let va = ca.valuation().unwrap_or(usize::MAX);
            for (mb, cb) in &b.terms {
                if va + cb.valuation().unwrap_or(usize::MAX) > self.order {
                    continue;
                }
                let coeff = ca * cb;
                if coeff.is_zero() {
                    continue;
                }
                for (m, r) in self.monomial_product(ma, mb)?.iter() {
                    accumulate(&mut acc, m, &coeff, r);
                }
            }
        }
        prune(&mut acc);
        Ok(UeaElement { terms: acc })
    }

    /// Left-to-right product of several elements.
    pub fn multiply_all(&self, factors: &[&UeaElement]) -> Result<UeaElement> {
        let mut acc = self.one();
        for f in factors {
            acc = self.multiply(&acc, f)?;
        }
        Ok(acc)
    }

    /// Graded commutator `ab - (-1)^{|a||b|} ba` of homogeneous elements.
    pub fn supercommutator(&self, a: &UeaElement, b: &UeaElement) -> Result<UeaElement> {
        let pa = a.parity().ok_or_else(|| Error::ParityMismatch("inhomogeneous element".into()))?;
        let pb = b.parity().ok_or_else(|| Error::ParityMismatch("inhomogeneous element".into()))?;
        let ab = self.multiply(a, b)?;
        let ba = self.multiply(b, a)?;
        Ok(ab.add_scaled(&ba, &-pa.koszul_sign(pb)))
    }

    /// Undeformed coproduct `x -> x⊗1 + 1⊗x`, extended as a superalgebra
    /// morphism. On a PBW monomial this splits every power binomially; the
    /// Koszul sign counts odd letters sent right that precede odd letters
    /// sent left.
    pub fn coproduct0(&self, a: &UeaElement) -> TensorElement {
        let mut acc: BTreeMap<Vec<PbwMonomial>, HSeries> = BTreeMap::new();
        for (m, c) in &a.terms {
            for (left, right, factor) in self.split_monomial(m) {
                accumulate(&mut acc, &vec![left, right], c, &factor);
            }
        }
        prune(&mut acc);
        TensorElement::from_map(2, acc)
    }

    pub(crate) fn split_monomial(&self, m: &PbwMonomial) -> Vec<(PbwMonomial, PbwMonomial, Rational)> {
        let powers = m.powers();
        let mut out = Vec::new();
        let mut choice = vec![0u32; powers.len()];
        loop {
            let mut left = Vec::new();
            let mut right = Vec::new();
            let mut factor = Rational::one();
            let mut odd_right = 0usize;
            for (&(idx, e), &k) in powers.iter().zip(&choice) {
                left.extend(std::iter::repeat_n(idx as u16, k as usize));
                right.extend(std::iter::repeat_n(idx as u16, (e - k) as usize));
                factor *= binomial(e, k);
                if self.algebra.parity(idx).is_odd() {
                    if k == 1 {
                        if odd_right % 2 == 1 {
                            factor = -factor;
                        }
                    } else {
                        odd_right += 1;
                    }
                }
            }
            out.push((
                PbwMonomial::from_sorted(&self.algebra, left),
                PbwMonomial::from_sorted(&self.algebra, right),
                factor,
            ));
            // odometer over exponent splits
            let mut pos = 0;
            loop {
                if pos == powers.len() {
                    return out;
                }
                if choice[pos] < powers[pos].1 {
                    choice[pos] += 1;
                    break;
                }
                choice[pos] = 0;
                pos += 1;
            }
        }
    }

    /// Undeformed antipode: `S0(x) = -x` on generators and
    /// `S0(uv) = (-1)^{|u||v|} S0(v) S0(u)`. On a word of length `k` with `o`
    /// odd letters this is `(-1)^k (-1)^{o(o-1)/2}` times the reversed word.
    pub fn antipode0(&self, a: &UeaElement) -> Result<UeaElement> {
        let mut acc: BTreeMap<PbwMonomial, HSeries> = BTreeMap::new();
        for (m, c) in &a.terms {
            let odd = m
                .letters()
                .iter()
                .filter(|&&l| self.algebra.parity(l as usize).is_odd())
                .count();
            let flips = m.degree() + odd * odd.saturating_sub(1) / 2;
            let sign = if flips % 2 == 0 { Rational::one() } else { -Rational::one() };
            let reversed: Vec<u16> = m.letters().iter().rev().copied().collect();
            for (n, r) in self.normal_form(&reversed)?.iter() {
                accumulate(&mut acc, n, c, &(&sign * r));
            }
        }
        prune(&mut acc);
        Ok(UeaElement { terms: acc })
    }

    /// Counit: the coefficient of the unit monomial.
    pub fn counit(&self, a: &UeaElement) -> HSeries {
        a.terms
            .get(&PbwMonomial::unit())
            .cloned()
            .unwrap_or_else(|| HSeries::zero(self.order))
    }

    /// Inverse of an element whose `h^0` part is a nonzero scalar, by the
    /// truncated geometric series.
    pub fn invert(&self, a: &UeaElement) -> Result<UeaElement> {
        let c0 = self.order_zero_scalar(a).ok_or_else(|| {
            Error::NotInvertible("order-0 part is not a nonzero scalar".into())
        })?;
        let inv0 = c0.recip();
        let normalized = a.scale(&inv0);
        let x = normalized.sub(&self.one());
        let minus_x = x.neg();
        let mut power = self.one();
        let mut sum = self.one();
        for _ in 0..self.order {
            power = self.multiply(&power, &minus_x)?;
            if power.is_zero() {
                break;
            }
            sum = sum.add(&power);
        }
        Ok(sum.scale(&inv0))
    }

    fn order_zero_scalar(&self, a: &UeaElement) -> Option<Rational> {
        let mut scalar = None;
        for (m, c) in &a.terms {
            let c0 = &c.coeffs()[0];
            if c0.is_zero() {
                continue;
            }
            if !m.is_unit() {
                return None;
            }
            scalar = Some(c0.clone());
        }
        scalar
    }

    /// Lists `(monomial, series)` pairs as strings.
    pub fn serialize(&self, a: &UeaElement) -> Vec<(String, String)> {
        a.terms
            .iter()
            .map(|(m, c)| (m.display(&self.algebra).to_string(), c.to_string()))
            .collect()
    }

    pub fn display<'a>(&'a self, a: &'a UeaElement) -> impl fmt::Display + 'a {
        DisplayElem { ug: self, elem: a }
    }
}

impl UeaElement {
    /// Multiplies every coefficient by a series.
    pub fn scale_series(&self, factor: &HSeries) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), c * factor)))
    }
}

fn binomial(n: u32, k: u32) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k {
        acc = acc * Rational::from_integer((n - i).into()) / Rational::from_integer((i + 1).into());
    }
    acc
}

struct DisplayElem<'a> {
    ug: &'a Ug,
    elem: &'a UeaElement,
}

impl fmt::Display for DisplayElem<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.elem.is_zero() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.elem.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c}) {}", m.display(self.ug.algebra()))?;
        }
        Ok(())
    }
}
