use std::cmp::Ordering;
use std::fmt;

use crate::liesuper::{LieSuperalgebra, Parity};

/// PBW basis monomial `e_1^{k_1} ... e_n^{k_n} v_{i_1} ... v_{i_j}`.
///
/// Stored as the flat word of basis indices, nondecreasing in PBW rank with
/// no repeated odd letter. The empty word is the unit.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PbwMonomial {
    letters: Vec<u16>,
    parity: Parity,
}

impl PbwMonomial {
    pub fn unit() -> Self {
        PbwMonomial {
            letters: Vec::new(),
            parity: Parity::Even,
        }
    }

    /// Caller guarantees `letters` is already in PBW normal form.
    pub(crate) fn from_sorted(alg: &LieSuperalgebra, letters: Vec<u16>) -> Self {
        debug_assert!(is_normal(alg, &letters));
        let parity = letters.iter().map(|&l| alg.parity(l as usize)).sum();
        PbwMonomial { letters, parity }
    }

    pub fn is_unit(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[u16] {
        &self.letters
    }

    pub fn degree(&self) -> usize {
        self.letters.len()
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// `(basis index, exponent)` pairs in PBW order.
    pub fn powers(&self) -> Vec<(usize, u32)> {
        let mut out: Vec<(usize, u32)> = Vec::new();
        for &l in &self.letters {
            match out.last_mut() {
                Some((idx, e)) if *idx == l as usize => *e += 1,
                _ => out.push((l as usize, 1)),
            }
        }
        out
    }

    pub fn display<'a>(&'a self, alg: &'a LieSuperalgebra) -> impl fmt::Display + 'a {
        DisplayMono { mono: self, alg }
    }
}

impl PartialOrd for PbwMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PbwMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl fmt::Debug for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PbwMonomial{:?}", self.letters)
    }
}

/// True when `letters` is sorted by PBW rank with no odd letter repeated.
pub(crate) fn is_normal(alg: &LieSuperalgebra, letters: &[u16]) -> bool {
    letters.windows(2).all(|w| !reducible(alg, w[0], w[1]))
}

pub(crate) fn reducible(alg: &LieSuperalgebra, x: u16, y: u16) -> bool {
    let (x, y) = (x as usize, y as usize);
    let (rx, ry) = (alg.pbw_rank(x), alg.pbw_rank(y));
    rx > ry || (x == y && alg.parity(x).is_odd())
}

struct DisplayMono<'a> {
    mono: &'a PbwMonomial,
    alg: &'a LieSuperalgebra,
}

impl fmt::Display for DisplayMono<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_unit() {
            return f.write_str("1");
        }
        for (n, (idx, e)) in self.mono.powers().into_iter().enumerate() {
            if n > 0 {
                f.write_str("*")?;
            }
            f.write_str(self.alg.name(idx))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Parses a word such as `X^2*Y*psi` (or `1`) into basis indices, keeping the
/// letters in the order written.
pub fn parse_word(alg: &LieSuperalgebra, text: &str) -> crate::Result<Vec<usize>> {
    let trimmed = text.trim();
    if trimmed == "1" || trimmed.is_empty() {
        return Ok(Vec::new());
    }
    let mut word = Vec::new();
    for factor in trimmed.split('*') {
        let factor = factor.trim();
        let (name, exp) = match factor.split_once('^') {
            Some((n, e)) => {
                let e: usize = e.trim().parse().map_err(|_| {
                    crate::Error::parse(format!("monomial `{trimmed}`"), format!("bad exponent `{e}`"))
                })?;
                (n.trim(), e)
            }
            None => (factor, 1),
        };
        if name == "1" {
            continue;
        }
        let idx = alg.index_of(name)?;
        word.extend(std::iter::repeat_n(idx, exp));
    }
    Ok(word)
}
