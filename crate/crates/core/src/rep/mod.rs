//! Graded matrix representations on `W^(n|m)`: validity, the image of an
//! R-matrix on `W⊗W`, the super quantum Yang-Baxter equation in two
//! independent formulations, and the braid matrix `S = PR`.
//!
//! Basis order of `W⊗W` is row-major, `(i,j) -> i*dim + j`, and likewise for
//! `W⊗W⊗W`. A matrix entry `R^{ab}_{ij}` is the coefficient of `w_a⊗w_b` in
//! `R(w_i⊗w_j)`.

mod matrix;

pub use matrix::{GradedMatrix, GradedSpace};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::identity::{describe, Comparison};
use crate::liesuper::LieSuperalgebra;
use crate::scalar::HSeries;
use crate::tensor::TensorElement;
use crate::twist::{compute_r, Twist};
use crate::ug::{PbwMonomial, Ug};
use crate::validation::{Rule, ValidationReport};

use matrix::sign;

/// `X_i -> images[i]`, every image acting on the same graded space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    space: GradedSpace,
    images: Vec<GradedMatrix>,
}

impl Representation {
    pub fn new(space: GradedSpace, images: Vec<GradedMatrix>) -> Result<Self> {
        let parities = space.parities();
        if let Some(k) = images.iter().position(|m| m.parities() != parities.as_slice()) {
            return Err(Error::Dimension(format!(
                "image {k} is not a matrix on W^({}|{})",
                space.n_even, space.m_odd
            )));
        }
        Ok(Representation { space, images })
    }

    pub fn space(&self) -> GradedSpace {
        self.space
    }

    pub fn images(&self) -> &[GradedMatrix] {
        &self.images
    }

    pub fn image(&self, i: usize) -> &GradedMatrix {
        &self.images[i]
    }

    /// `ρ` of a PBW monomial: the product of the letter images.
    pub fn of_monomial(&self, m: &PbwMonomial, order: usize) -> Result<GradedMatrix> {
        let mut acc = GradedMatrix::identity(self.space.parities(), order);
        for &l in m.letters() {
            acc = acc.mul(&self.images[l as usize])?;
        }
        Ok(acc)
    }
}

/// Homogeneity of every image and `ρ[X_i,X_j] = ρ_i ρ_j - (-1)^{|i||j|} ρ_j ρ_i`
/// on all basis pairs.
pub fn validate_representation(alg: &LieSuperalgebra, rho: &Representation) -> ValidationReport {
    let mut report = ValidationReport::default();
    if rho.images.len() != alg.dim() {
        report.push(
            Rule::Dimension,
            "representation",
            format!("{} images for a {}-dimensional algebra", rho.images.len(), alg.dim()),
        );
        return report;
    }
    for (i, m) in rho.images.iter().enumerate() {
        if let Some((r, c)) = m.support().find(|&(r, c)| m.entry_parity(r, c) != alg.parity(i)) {
            report.push(
                Rule::Homogeneity,
                alg.name(i),
                format!(
                    "entry ({}, {}) of an image of parity {} has parity {}",
                    r + 1,
                    c + 1,
                    alg.parity(i).bit(),
                    m.entry_parity(r, c).bit()
                ),
            );
        }
    }
    let order = rho.images.first().map_or(0, GradedMatrix::order);
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            let (a, b) = (&rho.images[i], &rho.images[j]);
            let mut lhs = GradedMatrix::zero(rho.space.parities(), order);
            for (k, c) in alg.bracket_basis(i, j) {
                lhs = lhs.add(&rho.images[*k].scale(c)).expect("same shape");
            }
            let ab = a.mul(b).expect("same shape");
            let ba = b.mul(a).expect("same shape");
            let rhs = ab.sub(&ba.scale(&alg.parity(i).koszul_sign(alg.parity(j)))).expect("same shape");
            if lhs != rhs {
                report.push(
                    Rule::Homomorphism,
                    format!("({}, {})", alg.name(i), alg.name(j)),
                    "ρ of the bracket differs from the supercommutator of the images",
                );
            }
        }
    }
    report
}

/// `(ρ⊗ρ)(t)` on `W⊗W` with the graded tensor action.
pub fn push_tensor(ug: &Ug, rho: &Representation, t: &TensorElement) -> Result<GradedMatrix> {
    if t.legs() != 2 {
        return Err(Error::LegCountMismatch { left: 2, right: t.legs() });
    }
    if rho.images.len() != ug.algebra().dim() {
        return Err(Error::Dimension(format!(
            "{} images for a {}-dimensional algebra",
            rho.images.len(),
            ug.algebra().dim()
        )));
    }
    let mut out = GradedMatrix::zero(rho.space.tensor_parities(2), ug.order());
    for (key, c) in t.terms() {
        let a = rho.of_monomial(&key[0], ug.order())?;
        let b = rho.of_monomial(&key[1], ug.order())?;
        out.add_scaled_series(&GradedMatrix::graded_kron(&a, &b)?, c)?;
    }
    Ok(out)
}

/// `R = (ρ⊗ρ)(R_F)`.
pub fn matrix_r(ug: &Ug, twist: &Twist, rho: &Representation, allow_invalid: bool) -> Result<GradedMatrix> {
    let report = validate_representation(ug.algebra(), rho);
    if let Some(v) = report.first() {
        return Err(Error::InvalidRepresentation(format!("{}: {} ({})", v.rule, v.at, v.detail)));
    }
    push_tensor(ug, rho, &compute_r(ug, twist, allow_invalid)?)
}

fn require_square_on(r: &GradedMatrix, space: GradedSpace) -> Result<()> {
    if r.parities() != space.tensor_parities(2).as_slice() {
        return Err(Error::Dimension(format!(
            "R must act on W⊗W for W^({}|{})",
            space.n_even, space.m_odd
        )));
    }
    Ok(())
}

fn require_even(r: &GradedMatrix) -> Result<()> {
    if let Some((row, col)) = r.support().find(|&(a, b)| r.entry_parity(a, b).is_odd()) {
        return Err(Error::EvennessViolation(format!(
            "R has an odd entry at ({}, {})",
            row + 1,
            col + 1
        )));
    }
    Ok(())
}

/// `R_{pq}` on `W⊗W⊗W` for `(p,q)` in `(1,2)`, `(1,3)`, `(2,3)`: `R` is
/// expanded in graded elementary operators `E_{ki}⊗E_{lj}` and each is
/// placed on its legs with the identity on the remaining one, acting by
/// `(A⊗B⊗C)(w_a⊗w_b⊗w_c) = (-1)^{|C|(|a|+|b|) + |B||a|} Aw_a⊗Bw_b⊗Cw_c`.
pub fn embed(r: &GradedMatrix, space: GradedSpace, p: usize, q: usize) -> Result<GradedMatrix> {
    require_square_on(r, space)?;
    let d = space.dim();
    let order = r.order();
    let par = space.parities();
    let id = GradedMatrix::identity(par.clone(), order);
    let mut out = GradedMatrix::zero(space.tensor_parities(3), order);
    for (row, col) in r.support().collect::<Vec<_>>() {
        let (k, l, i, j) = (row / d, row % d, col / d, col % d);
        // E_{ki}⊗E_{lj} sends w_i⊗w_j to (-1)^{(|l|+|j|)|i|} w_k⊗w_l.
        let c = r.get(row, col).scale(&sign(((par[l] + par[j]).bit() & par[i].bit()) == 1));
        let a = GradedMatrix::elementary(par.clone(), order, k, i);
        let b = GradedMatrix::elementary(par.clone(), order, l, j);
        let legs: [&GradedMatrix; 3] = match (p, q) {
            (1, 2) => [&a, &b, &id],
            (1, 3) => [&a, &id, &b],
            (2, 3) => [&id, &a, &b],
            _ => return Err(Error::BadLeg(format!("legs ({p}, {q})"))),
        };
        let t = GradedMatrix::graded_kron(&GradedMatrix::graded_kron(legs[0], legs[1])?, legs[2])?;
        out.add_scaled_series(&t, &c)?;
    }
    Ok(out)
}

fn triple(d: usize, a: usize, b: usize, c: usize) -> usize {
    (a * d + b) * d + c
}

fn compare_matrices(lhs: &GradedMatrix, rhs: &GradedMatrix, d: usize, legs: usize) -> Comparison {
    let n = lhs.dim();
    for r in 0..n {
        for c in 0..n {
            if lhs.get(r, c) != rhs.get(r, c) {
                let idx = |x: usize| -> String {
                    let mut digits = Vec::new();
                    let mut x = x;
                    for _ in 0..legs {
                        digits.push((x % d + 1).to_string());
                        x /= d;
                    }
                    digits.reverse();
                    digits.join(",")
                };
                let term = format!("entry ({}; {})", idx(r), idx(c));
                return Comparison::fail(describe(&term, lhs.get(r, c), rhs.get(r, c)));
            }
        }
    }
    Comparison::pass()
}

/// Both sides of the super QYBE from the indexed component display
/// `(-1)^{|m|(|c|+|n|)} (-1)^{|d|(|m|+|n|+|e|+|f|)} R^{ab}_{im} R^{ic}_{dn} R^{mn}_{ef}`
/// `= (-1)^{|m|(|k|+|f|)} (-1)^{|a|(|b|+|c|+|m|+|k|)} R^{bc}_{mk} R^{ak}_{lf} R^{lm}_{de}`,
/// summed over repeated indices and laid out as matrices on `W⊗W⊗W`.
pub fn component_sides(r: &GradedMatrix, space: GradedSpace) -> Result<(GradedMatrix, GradedMatrix)> {
    require_square_on(r, space)?;
    let d = space.dim();
    let order = r.order();
    let p = |i: usize| space.parity(i).bit() as usize;
    let e = |up1: usize, up2: usize, lo1: usize, lo2: usize| r.get(up1 * d + up2, lo1 * d + lo2);
    let outputs: Vec<(usize, usize, usize)> = (0..d)
        .flat_map(|a| (0..d).flat_map(move |b| (0..d).map(move |c| (a, b, c))))
        .collect();
    let rows: Vec<Vec<(HSeries, HSeries)>> = outputs
        .par_iter()
        .map(|&(a, b, c)| {
            let mut row = Vec::with_capacity(d * d * d);
            for dd in 0..d {
                for ee in 0..d {
                    for f in 0..d {
                        let mut lhs = HSeries::zero(order);
                        let mut rhs = HSeries::zero(order);
                        for x in 0..d {
                            for m in 0..d {
                                for y in 0..d {
                                    // lhs summation indices (i, m, n) = (x, m, y)
                                    let t = e(a, b, x, m);
                                    if !t.is_zero() {
                                        let s = p(m) * (p(c) + p(y)) + p(dd) * (p(m) + p(y) + p(ee) + p(f));
                                        let v = &(t * e(x, c, dd, y)) * e(m, y, ee, f);
                                        lhs.add_scaled(&v, &sign(s % 2 == 1));
                                    }
                                    // rhs summation indices (m, k, l) = (m, x, y)
                                    let t = e(b, c, m, x);
                                    if !t.is_zero() {
                                        let s = p(m) * (p(x) + p(f)) + p(a) * (p(b) + p(c) + p(m) + p(x));
                                        let v = &(t * e(a, x, y, f)) * e(y, m, dd, ee);
                                        rhs.add_scaled(&v, &sign(s % 2 == 1));
                                    }
                                }
                            }
                        }
                        row.push((lhs, rhs));
                    }
                }
            }
            row
        })
        .collect();
    let par3 = space.tensor_parities(3);
    let mut lhs = GradedMatrix::zero(par3.clone(), order);
    let mut rhs = GradedMatrix::zero(par3, order);
    for (&(a, b, c), row) in outputs.iter().zip(rows) {
        for (col, (l, r)) in row.into_iter().enumerate() {
            lhs.set(triple(d, a, b, c), col, l);
            rhs.set(triple(d, a, b, c), col, r);
        }
    }
    Ok((lhs, rhs))
}

/// Verdicts of the super QYBE in both formulations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QybeReport {
    /// `R12 R13 R23 = R23 R13 R12` with graded leg embeddings.
    pub embedded: Comparison,
    /// The indexed component identity.
    pub component: Comparison,
    /// Each side of one formulation equals the same side of the other.
    pub agreement: Comparison,
}

impl QybeReport {
    pub fn holds(&self) -> bool {
        self.embedded.holds && self.component.holds && self.agreement.holds
    }
}

/// Super QYBE for an even `R` on `W⊗W`.
pub fn check_super_qybe(r: &GradedMatrix, space: GradedSpace) -> Result<QybeReport> {
    require_square_on(r, space)?;
    require_even(r)?;
    let d = space.dim();
    let r12 = embed(r, space, 1, 2)?;
    let r13 = embed(r, space, 1, 3)?;
    let r23 = embed(r, space, 2, 3)?;
    let lhs = GradedMatrix::mul_all(&[&r12, &r13, &r23])?;
    let rhs = GradedMatrix::mul_all(&[&r23, &r13, &r12])?;
    let (clhs, crhs) = component_sides(r, space)?;
    Ok(QybeReport {
        embedded: compare_matrices(&lhs, &rhs, d, 3),
        component: compare_matrices(&clhs, &crhs, d, 3),
        agreement: Comparison::all([
            compare_matrices(&lhs, &clhs, d, 3).context("left sides"),
            compare_matrices(&rhs, &crhs, d, 3).context("right sides"),
        ]),
    })
}

/// `P(w_k⊗w_l) = (-1)^{|k||l|} w_l⊗w_k`.
pub fn super_permutation(space: GradedSpace, order: usize) -> GradedMatrix {
    let d = space.dim();
    let mut p = GradedMatrix::zero(space.tensor_parities(2), order);
    for k in 0..d {
        for l in 0..d {
            let v = sign(space.parity(k).koszul(space.parity(l)));
            p.set(l * d + k, k * d + l, HSeries::constant(order, v));
        }
    }
    p
}

/// `S = P·R`.
pub fn braid_matrix(r: &GradedMatrix, space: GradedSpace) -> Result<GradedMatrix> {
    require_square_on(r, space)?;
    super_permutation(space, r.order()).mul(r)
}

/// Braid relation and related identities for `S = PR`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidReport {
    pub s: GradedMatrix,
    /// `(S⊗id)(id⊗S)(S⊗id) = (id⊗S)(S⊗id)(id⊗S)`.
    pub braid: Comparison,
    /// `P·P = id`.
    pub permutation_involution: Comparison,
    /// `(P R P)·R = id`, the image of `R21 R = 1`.
    pub triangular_image: Comparison,
}

pub fn check_braid(r: &GradedMatrix, space: GradedSpace) -> Result<BraidReport> {
    require_even(r)?;
    let d = space.dim();
    let order = r.order();
    let p = super_permutation(space, order);
    let s = braid_matrix(r, space)?;
    let id = GradedMatrix::identity(space.parities(), order);
    let s12 = GradedMatrix::graded_kron(&s, &id)?;
    let s23 = GradedMatrix::graded_kron(&id, &s)?;
    let lhs = GradedMatrix::mul_all(&[&s12, &s23, &s12])?;
    let rhs = GradedMatrix::mul_all(&[&s23, &s12, &s23])?;
    let id2 = GradedMatrix::identity(space.tensor_parities(2), order);
    let r21 = GradedMatrix::mul_all(&[&p, r, &p])?;
    Ok(BraidReport {
        braid: compare_matrices(&lhs, &rhs, d, 3),
        permutation_involution: compare_matrices(&p.mul(&p)?, &id2, d, 2),
        triangular_image: compare_matrices(&r21.mul(r)?, &id2, d, 2),
        s,
    })
}

#[cfg(test)]
mod tests;
