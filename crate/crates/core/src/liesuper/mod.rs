//! Lie superalgebras given by structure constants, their axioms, classical
//! r-matrices and coboundary cobrackets.

mod classical;
mod cobracket;

pub use classical::{check_cybe, check_gcybe_invariance, schouten_bracket, RMatrix};
pub use cobracket::{coboundary_cobracket, validate_cobracket, Cobracket};

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::Add;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{int, Rational};
use crate::validation::{Rule, ValidationReport};

/// Z/2 degree of a homogeneous element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Parity {
    #[default]
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(bit: u8) -> Result<Self> {
        match bit {
            0 => Ok(Parity::Even),
            1 => Ok(Parity::Odd),
            other => Err(Error::Schema(format!("parity must be 0 or 1, got {other}"))),
        }
    }

    pub fn bit(self) -> u8 {
        self as u8
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// True when `(-1)^{|a||b|} = -1`.
    pub fn koszul(self, other: Parity) -> bool {
        self.is_odd() && other.is_odd()
    }

    /// `(-1)^{|a||b|}` as a rational.
    pub fn koszul_sign(self, other: Parity) -> Rational {
        if self.koszul(other) {
            -Rational::one()
        } else {
            Rational::one()
        }
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl std::iter::Sum for Parity {
    fn sum<I: Iterator<Item = Parity>>(iter: I) -> Parity {
        iter.fold(Parity::Even, |a, b| a + b)
    }
}

/// Sparse combination of structure constants, `[X_i, X_j] = sum_k C^k_ij X_k`.
pub type Bracket = Vec<(usize, Rational)>;

/// Finite-dimensional Lie superalgebra over the rationals.
///
/// Constants are stored exactly as supplied; nothing is assumed about
/// antisymmetry or Jacobi until [`LieSuperalgebra::validate`] says so.
#[derive(Clone, Debug, PartialEq)]
pub struct LieSuperalgebra {
    names: Vec<String>,
    parities: Vec<Parity>,
    constants: Vec<Bracket>,
    pbw_rank: Vec<usize>,
    by_name: HashMap<String, usize>,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl LieSuperalgebra {
    /// Algebra with the given basis and all brackets zero.
    pub fn new(basis: Vec<(String, Parity)>) -> Result<Self> {
        let mut by_name = HashMap::new();
        for (i, (name, _)) in basis.iter().enumerate() {
            if !valid_name(name) {
                return Err(Error::Schema(format!("invalid generator name `{name}`")));
            }
            if by_name.insert(name.clone(), i).is_some() {
                return Err(Error::Schema(format!("duplicate generator `{name}`")));
            }
        }
        let n = basis.len();
        // PBW order: evens in declaration order, then odds.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (basis[i].1, i));
        let mut pbw_rank = vec![0; n];
        for (rank, &i) in order.iter().enumerate() {
            pbw_rank[i] = rank;
        }
        let (names, parities) = basis.into_iter().unzip();
        Ok(LieSuperalgebra {
            names,
            parities,
            constants: vec![Vec::new(); n * n],
            pbw_rank,
            by_name,
        })
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.by_name
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    /// Position of generator `i` in the PBW order.
    pub fn pbw_rank(&self, i: usize) -> usize {
        self.pbw_rank[i]
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.dim() {
            return Err(Error::Schema(format!(
                "basis index {i} out of range (dimension {})",
                self.dim()
            )));
        }
        Ok(())
    }

    /// Sets `[X_i, X_j]` exactly as given.
    pub fn set_bracket(&mut self, i: usize, j: usize, terms: Bracket) -> Result<()> {
        self.check_index(i)?;
        self.check_index(j)?;
        let mut merged: BTreeMap<usize, Rational> = BTreeMap::new();
        for (k, c) in terms {
            self.check_index(k)?;
            *merged.entry(k).or_insert_with(Rational::zero) += c;
        }
        let n = self.dim();
        self.constants[i * n + j] = merged.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(())
    }

    /// Sets `[X_i, X_j]` and fills `[X_j, X_i] = -(-1)^{|i||j|} [X_i, X_j]`.
    pub fn set_bracket_antisymmetric(&mut self, i: usize, j: usize, terms: Bracket) -> Result<()> {
        let sign = -self.parity(i).koszul_sign(self.parity(j));
        let mirrored = terms.iter().map(|(k, c)| (*k, c * &sign)).collect();
        self.set_bracket(i, j, terms)?;
        if i != j {
            self.set_bracket(j, i, mirrored)?;
        }
        Ok(())
    }

    /// `[X_i, X_j]` on basis elements.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.constants[i * self.dim() + j]
    }

    /// Structure constant `C^k_ij`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> Rational {
        self.bracket_basis(i, j)
            .iter()
            .find(|(kk, _)| *kk == k)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Bilinear bracket of two elements.
    pub fn bracket(&self, x: &GElement, y: &GElement) -> Result<GElement> {
        let mut out = GElement::zero();
        for (&i, a) in &x.terms {
            self.check_index(i)?;
            for (&j, b) in &y.terms {
                self.check_index(j)?;
                let ab = a * b;
                for (k, c) in self.bracket_basis(i, j) {
                    out.add_term(*k, &ab * c);
                }
            }
        }
        Ok(out)
    }

    /// Checks parity consistency, super antisymmetry and the cyclic super
    /// Jacobi identity on every basis pair and triple.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let n = self.dim();
        let p = &self.parities;
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.bracket_basis(i, j) {
                    if p[i] + p[j] != p[*k] {
                        report.push(
                            Rule::ParityConsistency,
                            format!("({}, {})", self.names[i], self.names[j]),
                            format!("nonzero coefficient {c} of {}", self.names[*k]),
                        );
                    }
                }
            }
        }
        for i in 0..n {
            for j in i..n {
                let sign = p[i].koszul_sign(p[j]);
                for k in 0..n {
                    let sum = self.constant(i, j, k) + &sign * self.constant(j, i, k);
                    if !sum.is_zero() {
                        report.push(
                            Rule::SuperAntisymmetry,
                            format!("({}, {})", self.names[i], self.names[j]),
                            format!(
                                "C^{0}_{{{1},{2}}} + (-1)^(|{1}||{2}|) C^{0}_{{{2},{1}}} = {sum}",
                                self.names[k], self.names[i], self.names[j]
                            ),
                        );
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    let jac = self.jacobi_sum(i, j, l);
                    if let Some((m, value)) = jac.terms.iter().next() {
                        report.push(
                            Rule::SuperJacobi,
                            format!("({}, {}, {})", self.names[i], self.names[j], self.names[l]),
                            format!("coefficient of {} in the Jacobi sum is {value}", self.names[*m]),
                        );
                    }
                }
            }
        }
        report
    }

    /// `(-1)^{|i||l|} [[X_i,X_j],X_l] + (-1)^{|i||j|} [[X_j,X_l],X_i]
    ///  + (-1)^{|j||l|} [[X_l,X_i],X_j]`.
    fn jacobi_sum(&self, i: usize, j: usize, l: usize) -> GElement {
        let p = &self.parities;
        let mut out = GElement::zero();
        let cyc = [(i, j, l, p[i].koszul_sign(p[l])), (j, l, i, p[i].koszul_sign(p[j])), (l, i, j, p[j].koszul_sign(p[l]))];
        for (a, b, c, sign) in cyc {
            for (k, ck) in self.bracket_basis(a, b) {
                for (m, cm) in self.bracket_basis(*k, c) {
                    out.add_term(*m, &sign * ck * cm);
                }
            }
        }
        out
    }

    /// Abelian algebra on the given even generators.
    pub fn abelian(names: &[&str]) -> Self {
        Self::new(names.iter().map(|n| (n.to_string(), Parity::Even)).collect())
            .expect("valid names")
    }

    /// Odd generators with all brackets zero.
    pub fn odd_abelian(names: &[&str]) -> Self {
        Self::new(names.iter().map(|n| (n.to_string(), Parity::Odd)).collect())
            .expect("valid names")
    }

    /// The two-dimensional solvable algebra `{H, psi}` with `[H, psi] = psi`.
    pub fn h_psi() -> Self {
        let mut alg = Self::new(vec![("H".into(), Parity::Even), ("psi".into(), Parity::Odd)])
            .expect("valid names");
        alg.set_bracket_antisymmetric(0, 1, vec![(1, int(1))])
            .expect("indices in range");
        alg
    }

    /// `gl(m|n)` on the elementary matrices `E_ab`, declared row-major, with
    /// brackets from the graded matrix supercommutator.
    pub fn gl(m: usize, n: usize) -> Self {
        let d = m + n;
        let deg = |a: usize| if a < m { Parity::Even } else { Parity::Odd };
        let mut basis = Vec::with_capacity(d * d);
        for a in 0..d {
            for b in 0..d {
                basis.push((format!("E{}{}", a + 1, b + 1), deg(a) + deg(b)));
            }
        }
        let mut alg = Self::new(basis).expect("valid names");
        let idx = |a: usize, b: usize| a * d + b;
        // [E_ab, E_cd] = delta_bc E_ad - (-1)^{|E_ab||E_cd|} delta_da E_cb
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    for e in 0..d {
                        let sign = (deg(a) + deg(b)).koszul_sign(deg(c) + deg(e));
                        let mut terms = Vec::new();
                        if b == c {
                            terms.push((idx(a, e), int(1)));
                        }
                        if e == a {
                            terms.push((idx(c, b), -sign));
                        }
                        alg.set_bracket(idx(a, b), idx(c, e), terms)
                            .expect("indices in range");
                    }
                }
            }
        }
        alg
    }
}

/// Element of the Lie superalgebra as a sparse combination of basis vectors.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GElement {
    pub terms: BTreeMap<usize, Rational>,
}

impl GElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(i: usize) -> Self {
        let mut e = Self::zero();
        e.add_term(i, Rational::one());
        e
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        let mut e = Self::zero();
        for (i, c) in terms {
            e.add_term(i, c);
        }
        e
    }

    pub fn add_term(&mut self, i: usize, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(i).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&i);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(i, c)| (*i, c * factor)))
    }

    pub fn add(&self, other: &GElement) -> Self {
        let mut out = self.clone();
        for (i, c) in &other.terms {
            out.add_term(*i, c.clone());
        }
        out
    }

    pub fn display<'a>(&'a self, alg: &'a LieSuperalgebra) -> impl fmt::Display + 'a {
        DisplayG { elem: self, alg }
    }
}

struct DisplayG<'a> {
    elem: &'a GElement,
    alg: &'a LieSuperalgebra,
}

impl fmt::Display for DisplayG<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.elem.is_zero() {
            return f.write_str("0");
        }
        for (n, (i, c)) in self.elem.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "{}", self.alg.name(*i))?;
            } else {
                write!(f, "({c}) {}", self.alg.name(*i))?;
            }
        }
        Ok(())
    }
}
