//! Oracles independent of the kernel's rewriting and tensor code.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_traits::Zero;
use supertwist::liesuper::{LieSuperalgebra, Parity};
use supertwist::scalar::{int, rat, Rational};
use supertwist::tensor::TensorElement;

/// Row-major elementary matrices `E_ab` of `gl(1|1)`, with `|a| = 0` for row 1
/// and `|a| = 1` for row 2.
pub const GL11_NAMES: [&str; 4] = ["E11", "E12", "E21", "E22"];

fn row_parity(a: usize) -> u8 {
    a as u8
}

fn gl11_parity(k: usize) -> u8 {
    (row_parity(k / 2) + row_parity(k % 2)) % 2
}

fn elementary(k: usize) -> [[i64; 2]; 2] {
    let mut m = [[0; 2]; 2];
    m[k / 2][k % 2] = 1;
    m
}

fn matmul(a: &[[i64; 2]; 2], b: &[[i64; 2]; 2]) -> [[i64; 2]; 2] {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    c
}

/// `[E_i, E_j] = E_i E_j - (-1)^{|i||j|} E_j E_i` as explicit 2x2 products,
/// read back in the `E_ab` basis.
pub fn gl11_structure_constants() -> BTreeMap<(usize, usize), Vec<(usize, Rational)>> {
    let mut out = BTreeMap::new();
    for i in 0..4 {
        for j in 0..4 {
            let ab = matmul(&elementary(i), &elementary(j));
            let ba = matmul(&elementary(j), &elementary(i));
            let sign = if gl11_parity(i) * gl11_parity(j) == 1 { -1 } else { 1 };
            let mut terms = Vec::new();
            for k in 0..4 {
                let v = ab[k / 2][k % 2] - sign * ba[k / 2][k % 2];
                if v != 0 {
                    terms.push((k, int(v)));
                }
            }
            out.insert((i, j), terms);
        }
    }
    out
}

/// `[X_i, X_j]` as `((i, j), [(k, C^k_ij)])`.
pub type Constant = ((usize, usize), Vec<(usize, Rational)>);

/// `gl(1|1)` assembled from [`gl11_structure_constants`], with one optional
/// constant overwritten.
pub fn gl11_from_oracle(perturb: Option<Constant>) -> LieSuperalgebra {
    let basis = (0..4)
        .map(|k| (GL11_NAMES[k].to_string(), if gl11_parity(k) == 1 { Parity::Odd } else { Parity::Even }))
        .collect();
    let mut alg = LieSuperalgebra::new(basis).unwrap();
    let mut constants = gl11_structure_constants();
    if let Some((key, terms)) = perturb {
        constants.insert(key, terms);
    }
    for ((i, j), terms) in constants {
        alg.set_bracket(i, j, terms).unwrap();
    }
    alg
}

/// Linear combination of unnormalized words.
pub type Words = BTreeMap<Vec<usize>, Rational>;

/// Plain PBW normal form by bubble rewriting: the first adjacent pair out of
/// the order (even before odd, then by index) is swapped with its Koszul
/// sign plus the bracket term; a repeated odd letter becomes half its
/// self-bracket.
pub struct Rewriter<'a> {
    pub alg: &'a LieSuperalgebra,
}

impl Rewriter<'_> {
    fn odd(&self, i: usize) -> bool {
        self.alg.parity(i) == Parity::Odd
    }

    fn rank(&self, i: usize) -> (bool, usize) {
        (self.odd(i), i)
    }

    pub fn normalize(&self, word: &[usize]) -> Words {
        let mut out = Words::new();
        let mut todo = vec![(word.to_vec(), int(1))];
        while let Some((w, c)) = todo.pop() {
            if c.is_zero() {
                continue;
            }
            let bad = (0..w.len().saturating_sub(1)).find(|&p| {
                let (x, y) = (w[p], w[p + 1]);
                self.rank(x) > self.rank(y) || (x == y && self.odd(x))
            });
            let Some(p) = bad else {
                *out.entry(w).or_insert_with(Rational::zero) += c;
                continue;
            };
            let (x, y) = (w[p], w[p + 1]);
            let splice = |mid: &[usize]| {
                let mut v = w[..p].to_vec();
                v.extend_from_slice(mid);
                v.extend_from_slice(&w[p + 2..]);
                v
            };
            let half = rat(1, 2);
            if x == y {
                for (k, b) in self.alg.bracket_basis(x, x) {
                    todo.push((splice(&[*k]), &c * b * &half));
                }
                continue;
            }
            let sign = if self.odd(x) && self.odd(y) { int(-1) } else { int(1) };
            todo.push((splice(&[y, x]), &c * sign));
            for (k, b) in self.alg.bracket_basis(x, y) {
                todo.push((splice(&[*k]), &c * b));
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    fn word_parity(&self, w: &[usize]) -> bool {
        w.iter().filter(|&&i| self.odd(i)).count() % 2 == 1
    }
}

/// Three-leg element as a map from leg words to rationals.
pub type Triple = BTreeMap<[Vec<usize>; 3], Rational>;

/// `[[r,r]]` for an even `r = sum c (a⊗b)` with basis-element legs, expanded
/// summand by summand: every product of two pure three-leg tensors picks up
/// `(-1)^{sum_{j>i}|x_j||y_i|}`, and each leg is normalized separately.
pub fn schouten_oracle(alg: &LieSuperalgebra, r: &[((usize, usize), Rational)]) -> Triple {
    let rw = Rewriter { alg };
    let embed = |p: usize, q: usize, a: usize, b: usize| {
        let mut legs: [Vec<usize>; 3] = Default::default();
        legs[p].push(a);
        legs[q].push(b);
        legs
    };
    let product = |x: &[Vec<usize>; 3], y: &[Vec<usize>; 3]| -> (i64, [Vec<usize>; 3]) {
        let mut odd_swaps = 0;
        for (j, xj) in x.iter().enumerate() {
            for yi in &y[..j] {
                if rw.word_parity(xj) && rw.word_parity(yi) {
                    odd_swaps += 1;
                }
            }
        }
        let legs = [0, 1, 2].map(|k| [x[k].clone(), y[k].clone()].concat());
        (if odd_swaps % 2 == 0 { 1 } else { -1 }, legs)
    };
    let mut raw: Vec<([Vec<usize>; 3], Rational)> = Vec::new();
    for (first, second) in [((0, 1), (0, 2)), ((0, 1), (1, 2)), ((0, 2), (1, 2))] {
        for ((a, b), c) in r {
            for ((a2, b2), c2) in r {
                let x = embed(first.0, first.1, *a, *b);
                let y = embed(second.0, second.1, *a2, *b2);
                let (s1, xy) = product(&x, &y);
                let (s2, yx) = product(&y, &x);
                raw.push((xy, c * c2 * int(s1)));
                raw.push((yx, -(c * c2 * int(s2))));
            }
        }
    }
    let mut out = Triple::new();
    for (legs, c) in raw {
        let n: Vec<Words> = legs.iter().map(|w| rw.normalize(w)).collect();
        for (w0, c0) in &n[0] {
            for (w1, c1) in &n[1] {
                for (w2, c2) in &n[2] {
                    let key = [w0.clone(), w1.clone(), w2.clone()];
                    *out.entry(key).or_insert_with(Rational::zero) += &c * c0 * c1 * c2;
                }
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// The order-0 part of a kernel tensor in the oracle's format.
pub fn triple_of(t: &TensorElement) -> Triple {
    t.terms()
        .iter()
        .filter_map(|(key, c)| {
            let v = c.coeff(0);
            (!v.is_zero()).then(|| {
                let leg = |k: usize| key[k].letters().iter().map(|&l| l as usize).collect::<Vec<_>>();
                ([leg(0), leg(1), leg(2)], v)
            })
        })
        .collect()
}
