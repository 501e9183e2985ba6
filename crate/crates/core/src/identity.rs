//! Exact comparison of two sides of an identity, with the first differing
//! term as a counterexample.

use crate::error::Result;
use crate::scalar::HSeries;
use crate::tensor::TensorElement;
use crate::ug::{UeaElement, Ug};

/// Verdict of `lhs == rhs` up to the working truncation order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub holds: bool,
    /// First differing coefficient when the identity fails.
    pub counterexample: Option<String>,
}

impl Comparison {
    pub fn pass() -> Self {
        Comparison {
            holds: true,
            counterexample: None,
        }
    }

    pub fn fail(counterexample: impl Into<String>) -> Self {
        Comparison {
            holds: false,
            counterexample: Some(counterexample.into()),
        }
    }

    pub fn tensors(ug: &Ug, lhs: &TensorElement, rhs: &TensorElement) -> Result<Self> {
        let diff = lhs.sub(rhs)?;
        Ok(match diff.terms().iter().next() {
            None => Self::pass(),
            Some((key, _)) => {
                let zero = HSeries::zero(ug.order());
                let l = lhs.coeff(key).unwrap_or(&zero);
                let r = rhs.coeff(key).unwrap_or(&zero);
                Self::fail(describe(&ug.key_string(key), l, r))
            }
        })
    }

    pub fn elements(ug: &Ug, lhs: &UeaElement, rhs: &UeaElement) -> Self {
        let diff = lhs.sub(rhs);
        match diff.terms().iter().next() {
            None => Self::pass(),
            Some((m, _)) => {
                let zero = HSeries::zero(ug.order());
                let l = lhs.coeff(m).unwrap_or(&zero);
                let r = rhs.coeff(m).unwrap_or(&zero);
                Self::fail(describe(&m.display(ug.algebra()).to_string(), l, r))
            }
        }
    }

    /// Conjunction: the first failure wins.
    pub fn all(parts: impl IntoIterator<Item = Comparison>) -> Self {
        for c in parts {
            if !c.holds {
                return c;
            }
        }
        Self::pass()
    }

    /// Prefixes the counterexample with where it was found.
    pub fn context(mut self, what: &str) -> Self {
        if let Some(ce) = self.counterexample.take() {
            self.counterexample = Some(format!("{what}: {ce}"));
        }
        self
    }
}

pub(crate) fn describe(term: &str, lhs: &HSeries, rhs: &HSeries) -> String {
    let power = (0..=lhs.order())
        .find(|&k| lhs.coeff(k) != rhs.coeff(k))
        .unwrap_or(0);
    format!(
        "h^{power} coefficient of {term}: lhs {}, rhs {}",
        lhs.coeff(power),
        rhs.coeff(power)
    )
}
