use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::liesuper::Parity;
use crate::scalar::{HSeries, Rational};

/// `W^(n|m)`: `n` even basis vectors followed by `m` odd ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GradedSpace {
    pub n_even: usize,
    pub m_odd: usize,
}

impl GradedSpace {
    pub fn new(n_even: usize, m_odd: usize) -> Result<Self> {
        if n_even + m_odd == 0 {
            return Err(Error::Dimension("graded space must have dimension >= 1".into()));
        }
        Ok(GradedSpace { n_even, m_odd })
    }

    pub fn dim(&self) -> usize {
        self.n_even + self.m_odd
    }

    /// Parity of the 0-based basis vector `w_i`.
    pub fn parity(&self, i: usize) -> Parity {
        if i < self.n_even {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn parities(&self) -> Vec<Parity> {
        (0..self.dim()).map(|i| self.parity(i)).collect()
    }

    /// Basis parities of `W^{⊗legs}`, row-major: `(i,j) -> i*dim + j`.
    pub fn tensor_parities(&self, legs: usize) -> Vec<Parity> {
        let mut out = vec![Parity::Even];
        for _ in 0..legs {
            out = out
                .iter()
                .flat_map(|&p| (0..self.dim()).map(move |i| p + self.parity(i)))
                .collect();
        }
        out
    }
}

/// Square matrix of `h`-series acting on a graded space described by the
/// parity of each basis vector. Entry `(r, c)` maps `w_c` to `w_r`.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedMatrix {
    parities: Vec<Parity>,
    order: usize,
    entries: Vec<HSeries>,
}

impl GradedMatrix {
    pub fn zero(parities: Vec<Parity>, order: usize) -> Self {
        let n = parities.len();
        GradedMatrix {
            parities,
            order,
            entries: vec![HSeries::zero(order); n * n],
        }
    }

    pub fn identity(parities: Vec<Parity>, order: usize) -> Self {
        let mut m = Self::zero(parities, order);
        for i in 0..m.dim() {
            m.set(i, i, HSeries::one(order));
        }
        m
    }

    /// Constant matrix from rational rows.
    pub fn from_rows(parities: Vec<Parity>, order: usize, rows: &[Vec<Rational>]) -> Result<Self> {
        let mut m = Self::zero(parities, order);
        let n = m.dim();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension(format!("expected a {n}x{n} matrix")));
        }
        for (r, row) in rows.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                m.set(r, c, HSeries::constant(order, v.clone()));
            }
        }
        Ok(m)
    }

    /// `E_{rc}`: sends `w_c` to `w_r`.
    pub fn elementary(parities: Vec<Parity>, order: usize, r: usize, c: usize) -> Self {
        let mut m = Self::zero(parities, order);
        m.set(r, c, HSeries::one(order));
        m
    }

    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn get(&self, r: usize, c: usize) -> &HSeries {
        &self.entries[r * self.dim() + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: HSeries) {
        assert_eq!(value.order(), self.order, "truncation order mismatch");
        let n = self.dim();
        self.entries[r * n + c] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(HSeries::is_zero)
    }

    /// Positions `(r, c)` of the nonzero entries, row-major.
    pub fn support(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.dim();
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(k, _)| (k / n, k % n))
    }

    /// Parity of the entry position: `|w_r| + |w_c|`.
    pub fn entry_parity(&self, r: usize, c: usize) -> Parity {
        self.parities[r] + self.parities[c]
    }

    /// Common parity of all nonzero entries; `None` if mixed. Zero is even.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.support().map(|(r, c)| self.entry_parity(r, c));
        let first = it.next().unwrap_or(Parity::Even);
        it.all(|p| p == first).then_some(first)
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.parities != other.parities {
            return Err(Error::Dimension(format!(
                "matrices act on different graded spaces ({} vs {})",
                self.dim(),
                other.dim()
            )));
        }
        if self.order != other.order {
            return Err(Error::TruncationMismatch { left: self.order, right: other.order });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(GradedMatrix { entries, ..self.clone() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Ok(GradedMatrix { entries, ..self.clone() })
    }

    /// `self += other * factor`, touching only the support of `other`.
    pub fn add_scaled_series(&mut self, other: &Self, factor: &HSeries) -> Result<()> {
        self.same_shape(other)?;
        let n = self.dim();
        for (r, c) in other.support().collect::<Vec<_>>() {
            let v = other.get(r, c) * factor;
            self.entries[r * n + c] = &self.entries[r * n + c] + &v;
        }
        Ok(())
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        GradedMatrix {
            entries: self.entries.iter().map(|e| e.scale(factor)).collect(),
            ..self.clone()
        }
    }

    pub fn scale_series(&self, factor: &HSeries) -> Self {
        GradedMatrix {
            entries: self.entries.iter().map(|e| e * factor).collect(),
            ..self.clone()
        }
    }

    /// Matrix product `self · other` (apply `other` first).
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let n = self.dim();
        let mut out = Self::zero(self.parities.clone(), self.order);
        for (r, k) in self.support().collect::<Vec<_>>() {
            let a = self.get(r, k);
            for c in 0..n {
                let b = other.get(k, c);
                if !b.is_zero() {
                    out.entries[r * n + c] = &out.entries[r * n + c] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_all(factors: &[&GradedMatrix]) -> Result<Self> {
        let (first, rest) = factors
            .split_first()
            .ok_or_else(|| Error::Dimension("empty matrix product".into()))?;
        rest.iter().try_fold((*first).clone(), |acc, m| acc.mul(m))
    }

    /// Graded tensor product acting by
    /// `(A⊗B)(w_i⊗w_j) = (-1)^{|B||w_i|} A w_i ⊗ B w_j`, applied entrywise:
    /// the entry `B_{lj}` has parity `|l|+|j|`.
    pub fn graded_kron(a: &Self, b: &Self) -> Result<Self> {
        if a.order != b.order {
            return Err(Error::TruncationMismatch { left: a.order, right: b.order });
        }
        let (na, nb) = (a.dim(), b.dim());
        let parities = a
            .parities
            .iter()
            .flat_map(|&p| b.parities.iter().map(move |&q| p + q))
            .collect();
        let mut out = Self::zero(parities, a.order);
        for (k, i) in a.support().collect::<Vec<_>>() {
            for (l, j) in b.support().collect::<Vec<_>>() {
                let mut v = a.get(k, i) * b.get(l, j);
                if b.entry_parity(l, j).koszul(a.parities[i]) {
                    v = -&v;
                }
                out.set(k * nb + l, i * nb + j, v);
            }
        }
        debug_assert_eq!(out.dim(), na * nb);
        Ok(out)
    }

    /// Ungraded Kronecker product; correct only when the relevant signs are
    /// trivial, kept for comparison in tests and examples.
    pub fn kron(a: &Self, b: &Self) -> Self {
        let nb = b.dim();
        let parities = a
            .parities
            .iter()
            .flat_map(|&p| b.parities.iter().map(move |&q| p + q))
            .collect();
        let mut out = Self::zero(parities, a.order);
        for (k, i) in a.support().collect::<Vec<_>>() {
            for (l, j) in b.support().collect::<Vec<_>>() {
                out.set(k * nb + l, i * nb + j, a.get(k, i) * b.get(l, j));
            }
        }
        out
    }
}

impl fmt::Debug for GradedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GradedMatrix[{}x{}, N={}]", self.dim(), self.dim(), self.order)?;
        write!(f, "{self}")
    }
}

impl fmt::Display for GradedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim();
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(|c| c.chars().count()).max().unwrap_or(1);
        for r in 0..n {
            let row: Vec<String> = (0..n)
                .map(|c| format!("{:>width$}", cells[r * n + c]))
                .collect();
            writeln!(f, "[ {} ]", row.join("  "))?;
        }
        Ok(())
    }
}

pub(crate) fn sign(odd: bool) -> Rational {
    if odd {
        -Rational::one()
    } else {
        Rational::one()
    }
}

